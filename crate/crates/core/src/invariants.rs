//! Finite matrix groups over Q(ζ_N) acting on enumerators: closure,
//! the doubled action on `x` and `y` variables, bivariate Molien series,
//! the Reynolds operator and ranks of invariant families.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::OnceLock;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{constants, Cyclotomic, FieldElement, FiniteField, Rational, DEFAULT_ORDER};
use crate::error::{Error, Result};
use crate::polyring::{merge_nonzero, Kind, Monomial, Polynomial, VarKey};

/// Largest group the closure will build.
pub const CLOSURE_CAP: usize = 100_000;

/// A square matrix with exact cyclotomic entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycMatrix {
    dim: usize,
    entries: Vec<Cyclotomic>,
}

impl CycMatrix {
    pub fn new(dim: usize, entries: Vec<Cyclotomic>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!("{} entries for a {dim}x{dim} matrix", entries.len())));
        }
        let order = entries.first().map(Cyclotomic::order).unwrap_or(DEFAULT_ORDER);
        if let Some(e) = entries.iter().find(|e| e.order() != order) {
            return Err(Error::IncompatibleCyclotomicOrder { left: order, right: e.order() });
        }
        Ok(CycMatrix { dim, entries })
    }

    /// Builds from rows of small integers times a common scalar.
    pub fn from_ints(rows: &[&[i64]], scalar: &Cyclotomic) -> Self {
        let dim = rows.len();
        let entries = rows.iter().flat_map(|r| r.iter().map(|&v| scalar.scale_int(v))).collect();
        CycMatrix { dim, entries }
    }

    pub fn diagonal(diag: Vec<Cyclotomic>) -> Self {
        let dim = diag.len();
        let order = diag.first().map(Cyclotomic::order).unwrap_or(DEFAULT_ORDER);
        let mut entries = vec![Cyclotomic::zero(order); dim * dim];
        for (i, d) in diag.into_iter().enumerate() {
            entries[i * dim + i] = d;
        }
        CycMatrix { dim, entries }
    }

    pub fn identity(dim: usize, order: u32) -> Self {
        Self::diagonal(vec![Cyclotomic::one(order); dim])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u32 {
        self.entries.first().map(Cyclotomic::order).unwrap_or(DEFAULT_ORDER)
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.dim + j]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim, self.order())
    }

    pub fn mul(&self, other: &CycMatrix) -> Result<CycMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!("{}x{} times {}x{}", self.dim, self.dim, other.dim, other.dim)));
        }
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Cyclotomic::zero(self.order());
                for k in 0..n {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc = &acc + &(a * other.get(k, j));
                    }
                }
                entries.push(acc);
            }
        }
        Ok(CycMatrix { dim: n, entries })
    }

    /// Multiplicative order, if it is at most `cap`.
    pub fn element_order(&self, cap: usize) -> Option<usize> {
        let mut p = self.clone();
        for k in 1..=cap {
            if p.is_identity() {
                return Some(k);
            }
            p = p.mul(self).ok()?;
        }
        None
    }

    /// Coefficients of `det(1 - u g)`, lowest degree first, from principal minors.
    pub fn char_coefficients(&self) -> Vec<Cyclotomic> {
        let n = self.dim;
        let order = self.order();
        let mut out = vec![Cyclotomic::zero(order); n + 1];
        for k in 0..=n {
            for idx in (0..n).combinations(k) {
                out[k] = &out[k] + &self.minor(&idx);
            }
            if k % 2 == 1 {
                out[k] = -&out[k];
            }
        }
        out
    }

    /// Determinant of the principal submatrix on `idx`, by Laplace expansion.
    fn minor(&self, idx: &[usize]) -> Cyclotomic {
        match idx.len() {
            0 => Cyclotomic::one(self.order()),
            1 => self.get(idx[0], idx[0]).clone(),
            _ => self.det_rows_cols(idx, idx),
        }
    }

    fn det_rows_cols(&self, rows: &[usize], cols: &[usize]) -> Cyclotomic {
        if rows.len() == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        let mut acc = Cyclotomic::zero(self.order());
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(rows[0], c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a * &self.det_rows_cols(&rows[1..], &rest);
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    pub fn determinant(&self) -> Cyclotomic {
        let all: Vec<usize> = (0..self.dim).collect();
        self.minor(&all)
    }

    /// `Some((perm, scalars))` when every row has exactly one nonzero entry:
    /// row `i` holds `scalars[i]` in column `perm[i]`.
    pub fn as_monomial(&self) -> Option<(Vec<usize>, Vec<Cyclotomic>)> {
        let mut perm = Vec::with_capacity(self.dim);
        let mut scal = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let nz: Vec<usize> = (0..self.dim).filter(|&j| !self.get(i, j).is_zero()).collect();
            if nz.len() != 1 {
                return None;
            }
            perm.push(nz[0]);
            scal.push(self.get(i, nz[0]).clone());
        }
        Some((perm, scal))
    }
}

type MonomialElem = (Vec<usize>, Vec<Cyclotomic>);

/// A finite matrix group with all of its elements.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    dim: usize,
    generators: Vec<CycMatrix>,
    elements: Vec<CycMatrix>,
    /// Monomial elements `H` and representatives `r` with `G = ⋃ H r`.
    cosets: OnceLock<(Vec<MonomialElem>, Vec<CycMatrix>)>,
}

/// Breadth-first closure under right multiplication by the generators.
pub fn group_closure(generators: &[CycMatrix]) -> Result<MatrixGroup> {
    group_closure_capped(generators, CLOSURE_CAP)
}

pub fn group_closure_capped(generators: &[CycMatrix], cap: usize) -> Result<MatrixGroup> {
    let first = generators.first().ok_or_else(|| Error::Precondition("no generators".into()))?;
    let (dim, order) = (first.dim(), first.order());
    if let Some(g) = generators.iter().find(|g| g.dim() != dim || g.order() != order) {
        return Err(Error::DimensionMismatch(format!("generator of size {} among size {dim}", g.dim())));
    }
    let id = CycMatrix::identity(dim, order);
    let mut seen: HashSet<CycMatrix> = HashSet::from([id.clone()]);
    let mut elements = vec![id];
    let mut frontier = 0;
    while frontier < elements.len() {
        let end = elements.len();
        for e in frontier..end {
            for g in generators {
                let p = elements[e].mul(g)?;
                if seen.insert(p.clone()) {
                    elements.push(p);
                    if elements.len() > cap {
                        return Err(Error::CapExceeded(cap));
                    }
                }
            }
        }
        frontier = end;
    }
    Ok(MatrixGroup { dim, generators: generators.to_vec(), elements, cosets: OnceLock::new() })
}

impl MatrixGroup {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[CycMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[CycMatrix] {
        &self.elements
    }

    pub fn cyclotomic_order(&self) -> u32 {
        self.generators[0].order()
    }

    fn cosets(&self) -> &(Vec<MonomialElem>, Vec<CycMatrix>) {
        self.cosets.get_or_init(|| {
            let h: Vec<&CycMatrix> = self.elements.iter().filter(|g| g.as_monomial().is_some()).collect();
            let mut covered: HashSet<CycMatrix> = HashSet::new();
            let mut reps = Vec::new();
            for g in &self.elements {
                if covered.contains(g) {
                    continue;
                }
                for x in &h {
                    covered.insert(x.mul(g).expect("same dimension"));
                }
                reps.push(g.clone());
            }
            (h.iter().filter_map(|x| x.as_monomial()).collect(), reps)
        })
    }

    /// The elements that are monomial matrices.
    pub fn monomial_elements(&self) -> &[MonomialElem] {
        &self.cosets().0
    }
}

/// Linear substitution rules `v_i ↦ Σ_j g_ij v_j` for every block and kind used by `p`.
fn action_rules(g: &CycMatrix, p: &Polynomial) -> Result<BTreeMap<VarKey, Polynomial>> {
    if g.order() != p.order() {
        return Err(Error::IncompatibleCyclotomicOrder { left: g.order(), right: p.order() });
    }
    let vars = p.variables();
    if let Some(v) = vars.iter().find(|v| v.elem.index() >= g.dim()) {
        return Err(Error::DimensionMismatch(format!(
            "variable {} outside a {}-dimensional action",
            p.var_name(v),
            g.dim()
        )));
    }
    if g.dim() > p.field().q() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrices over an alphabet of size {}", g.dim(), g.dim(), p.field().q())));
    }
    let groups: HashSet<(u16, Kind)> = vars.iter().map(|v| (v.block, v.kind)).collect();
    let mut rules = BTreeMap::new();
    for (block, kind) in groups {
        for i in 0..g.dim() {
            let terms = (0..g.dim()).filter(|&j| !g.get(i, j).is_zero()).map(|j| {
                (Monomial::var(VarKey::new(block, kind, FieldElement::from_index(j))), g.get(i, j).clone())
            });
            rules.insert(
                VarKey::new(block, kind, FieldElement::from_index(i)),
                Polynomial::from_terms(p.field(), p.order(), terms),
            );
        }
    }
    Ok(rules)
}

/// `g` applied to the `x` variables and, identically, to the `y` variables
/// of every block: `f ↦ f(g v^t)`.
pub fn doubled_action(g: &CycMatrix, p: &Polynomial) -> Result<Polynomial> {
    p.substitute_linear(&action_rules(g, p)?)
}

pub fn is_invariant(g: &CycMatrix, p: &Polynomial) -> Result<bool> {
    Ok(doubled_action(g, p)? == *p)
}

/// `R(f) = Σ_g ĝ f`.
///
/// Computed as `Σ_r r̂ (Σ_h ĥ f)` over the monomial subgroup `H` and
/// representatives of `G = ⋃ H r`; the inner sum only moves monomials.
pub fn reynolds(seed: &Polynomial, group: &MatrixGroup) -> Result<Polynomial> {
    let (h, reps) = group.cosets();
    let mut inner: HashMap<Monomial, Cyclotomic> = HashMap::new();
    for (m, c) in seed.terms() {
        for (perm, scal) in h {
            let (k, img) = monomial_image(perm, scal, m);
            let v = &k * c;
            let e = inner.entry(img).or_insert_with(|| Cyclotomic::zero(seed.order()));
            *e = &*e + &v;
        }
    }
    let inner = Polynomial::from_terms(seed.field(), seed.order(), inner);
    if inner.is_zero() {
        return Ok(inner);
    }
    let images: Vec<Result<Polynomial>> = reps.par_iter().map(|g| doubled_action(g, &inner)).collect();
    let mut acc = Polynomial::zero(seed.field(), seed.order());
    for im in images {
        acc = acc.try_add(&im?)?;
    }
    Ok(acc)
}

/// Dimensions `dim M_{i,j}` of the bivariate Molien series for `i + j ≤ max_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MolienTable {
    pub max_degree: usize,
    /// `coeffs[i][j]`, defined for `i + j ≤ max_degree`.
    pub coeffs: Vec<Vec<i64>>,
}

impl MolienTable {
    pub fn get(&self, i: usize, j: usize) -> Option<i64> {
        self.coeffs.get(i).and_then(|r| r.get(j)).copied()
    }

    /// `f[d]` as `(i, j, coefficient)`, highest `u` power first.
    pub fn homogeneous(&self, d: usize) -> Vec<(usize, usize, i64)> {
        (0..=d.min(self.max_degree)).rev().filter(|_| d <= self.max_degree).map(|i| (i, d - i, self.coeffs[i][d - i])).collect()
    }

    /// `f[d]` written as a polynomial in `u` and `v`.
    pub fn render(&self, d: usize) -> String {
        let mut s = String::new();
        for (i, j, c) in self.homogeneous(d) {
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            let mono = [("u", i), ("v", j)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(n, e)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
                .join("");
            match (c, mono.is_empty()) {
                (1, false) => s.push_str(&mono),
                _ => {
                    let _ = write!(s, "{c}{mono}");
                }
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,j,dim\n");
        for i in 0..=self.max_degree {
            for j in 0..=self.max_degree - i {
                let _ = writeln!(s, "{i},{j},{}", self.coeffs[i][j]);
            }
        }
        s
    }
}

/// Power series of `1/det(1 - u g)` up to `u^d`.
fn inverse_series(c: &[Cyclotomic], d: usize) -> Vec<Cyclotomic> {
    let order = c[0].order();
    let mut a = vec![Cyclotomic::one(order)];
    for n in 1..=d {
        let mut acc = Cyclotomic::zero(order);
        for k in 1..=n.min(c.len() - 1) {
            acc = &acc - &(&c[k] * &a[n - k]);
        }
        a.push(acc);
    }
    a
}

/// `f(u,v) = (1/|G|) Σ_g 1/(det(1-ug) det(1-vg))`, truncated at total degree `max_degree`.
pub fn molien_bivariate(group: &MatrixGroup, max_degree: usize) -> Result<MolienTable> {
    let order = group.cyclotomic_order();
    let d = max_degree;
    let series: Vec<Vec<Cyclotomic>> =
        group.elements().par_iter().map(|g| inverse_series(&g.char_coefficients(), d)).collect();
    let scale = Rational::new(1, group.order() as i128);
    let mut coeffs = vec![Vec::new(); d + 1];
    for i in 0..=d {
        for j in 0..=d - i {
            let sum = series.iter().fold(Cyclotomic::zero(order), |acc, a| &acc + &(&a[i] * &a[j]));
            let value = sum.scale(&scale);
            let n = value.to_integer().ok_or_else(|| Error::NonIntegerCoefficient { i, j, value: value.to_string() })?;
            coeffs[i].push(n as i64);
        }
    }
    Ok(MolienTable { max_degree: d, coeffs })
}

/// Exact rank over Q(ζ_N) of the coefficient vectors of `polys`.
pub fn rank(polys: &[Polynomial]) -> usize {
    echelon(polys).len()
}

/// Indices of a maximal independent prefix-greedy subset.
fn echelon(polys: &[Polynomial]) -> Vec<usize> {
    let mut pivots: Vec<(Monomial, HashMap<Monomial, Cyclotomic>)> = Vec::new();
    let mut kept = Vec::new();
    for (idx, p) in polys.iter().enumerate() {
        let mut row: HashMap<Monomial, Cyclotomic> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        for (pm, prow) in &pivots {
            if let Some(c) = row.get(pm).cloned() {
                for (m, v) in prow {
                    let nv = match row.get(m) {
                        Some(x) => x - &(&c * v),
                        None => -&(&c * v),
                    };
                    if nv.is_zero() {
                        row.remove(m);
                    } else {
                        row.insert(m.clone(), nv);
                    }
                }
            }
        }
        if let Some(pm) = row.keys().min().cloned() {
            let inv = row[&pm].inverse().expect("nonzero pivot");
            for v in row.values_mut() {
                *v = &*v * &inv;
            }
            pivots.push((pm, row));
            kept.push(idx);
        }
    }
    kept
}

/// Every monomial of degree `i` in the `x` variables and `j` in the `y` variables of block 1.
pub fn bidegree_monomials(dim: usize, i: usize, j: usize) -> Vec<Monomial> {
    let vars = |kind: Kind, d: usize| -> Vec<Vec<VarKey>> {
        (0..dim)
            .map(|a| VarKey::new(1, kind, FieldElement::from_index(a)))
            .combinations_with_replacement(d)
            .collect()
    };
    let xs = vars(Kind::X, i);
    let ys = vars(Kind::Y, j);
    xs.iter()
        .cartesian_product(&ys)
        .map(|(a, b)| {
            let mut pairs: BTreeMap<VarKey, u32> = BTreeMap::new();
            for v in a.iter().chain(b) {
                *pairs.entry(*v).or_default() += 1;
            }
            Monomial::from_pairs(pairs)
        })
        .collect()
}

/// Image of a monomial under a monomial matrix: a scalar times a monomial.
fn monomial_image(perm: &[usize], scal: &[Cyclotomic], m: &Monomial) -> (Cyclotomic, Monomial) {
    let order = scal[0].order();
    let mut c = Cyclotomic::one(order);
    let mut pairs = Vec::new();
    for &(v, e) in m.iter() {
        let i = v.elem.index();
        for _ in 0..e {
            c = &c * &scal[i];
        }
        pairs.push((VarKey { elem: FieldElement::from_index(perm[i]), ..v }, e));
    }
    (c, Monomial::from_pairs(pairs))
}

/// Seeds for `M_{i,j}`: one monomial per orbit of the monomial matrices in
/// the group, dropping orbits whose Reynolds image vanishes because a
/// stabilizing element scales the monomial.
pub fn reduced_seeds(group: &MatrixGroup, i: usize, j: usize) -> Vec<Monomial> {
    let monomial_elems = group.monomial_elements();
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut out = Vec::new();
    for m in bidegree_monomials(group.dim(), i, j) {
        if seen.contains(&m) {
            continue;
        }
        let mut killed = false;
        for (perm, scal) in monomial_elems {
            let (c, img) = monomial_image(perm, scal, &m);
            if img == m && !c.is_one() {
                killed = true;
            }
            seen.insert(img);
        }
        if !killed {
            out.push(m);
        }
    }
    out
}

/// A basis of `M_{i,j}` from Reynolds images of all bidegree-(i,j) monomials.
pub fn invariant_basis(group: &MatrixGroup, field: &FiniteField, i: usize, j: usize) -> Result<Vec<Polynomial>> {
    let order = group.cyclotomic_order();
    let mut images = Vec::new();
    for m in reduced_seeds(group, i, j) {
        let r = reynolds(&Polynomial::monomial(field, order, m), group)?;
        if !r.is_zero() {
            images.push(r);
        }
    }
    Ok(echelon(&images).into_iter().map(|k| images[k].clone()).collect())
}

/// Ranks of a family before and after a specialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpecializationRank {
    pub rank_before: usize,
    pub rank_after: usize,
}

impl SpecializationRank {
    pub fn preserved(&self) -> bool {
        self.rank_before == self.rank_after
    }
}

pub fn specialization_rank_check(basis: &[Polynomial], merge: &BTreeMap<VarKey, VarKey>) -> Result<SpecializationRank> {
    let after: Vec<Polynomial> = basis.iter().map(|p| p.specialize(merge)).collect::<Result<_>>()?;
    Ok(SpecializationRank { rank_before: rank(basis), rank_after: rank(&after) })
}

/// The specialization merging every nonzero color into `1` (`S_6` over GF(3), `S_8` over GF(4)).
pub fn nonzero_merge(field: &FiniteField) -> BTreeMap<VarKey, VarKey> {
    merge_nonzero(field, &[1])
}

/// A named group together with the field whose enumerators it acts on.
#[derive(Clone, Debug)]
pub struct Preset {
    pub name: &'static str,
    pub field: FiniteField,
    pub generators: Vec<CycMatrix>,
    pub expected_order: usize,
}

impl Preset {
    pub fn close(&self) -> Result<MatrixGroup> {
        group_closure(&self.generators)
    }

    pub fn parse_seed(&self, s: &str) -> Result<Polynomial> {
        Polynomial::parse(&self.field, DEFAULT_ORDER, s)
    }
}

/// The group of order 2592 fixing complete weight enumerators of ternary
/// self-dual codes of length divisible by 12 that contain the all-one vector.
pub fn g_iii() -> Preset {
    let z = |k: i64| Cyclotomic::zeta_pow(DEFAULT_ORDER, k);
    let w = constants::zeta3();
    let one = Cyclotomic::one(DEFAULT_ORDER);
    let r = constants::inv_sqrt3();
    let mac = CycMatrix {
        dim: 3,
        entries: [one.clone(), one.clone(), one.clone(), one.clone(), w.clone(), &w * &w, one.clone(), &w * &w, w.clone()]
            .iter()
            .map(|e| e * &r)
            .collect(),
    };
    Preset {
        name: "g3",
        field: FiniteField::prime(3).expect("3 is prime"),
        generators: vec![
            mac,
            CycMatrix::diagonal(vec![one.clone(), w.clone(), one.clone()]),
            CycMatrix::diagonal(vec![one.clone(), one.clone(), w]),
            CycMatrix::diagonal(vec![z(1), z(1), z(1)]),
        ],
        expected_order: 2592,
    }
}

/// The group of order 576 fixing complete weight enumerators of Hermitian
/// self-dual codes over GF(4) with even weights that contain the all-one vector.
pub fn g_iv() -> Preset {
    let half = Cyclotomic::from_rational(DEFAULT_ORDER, Rational::new(1, 2));
    let one = Cyclotomic::one(DEFAULT_ORDER);
    Preset {
        name: "g4",
        field: FiniteField::gf4(),
        generators: vec![
            CycMatrix::from_ints(&[&[1, 1, 1, 1], &[1, 1, -1, -1], &[1, -1, 1, -1], &[1, -1, -1, 1]], &half),
            CycMatrix::from_ints(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -1]], &one),
            CycMatrix::from_ints(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]], &one),
            CycMatrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 1, 0, 0]], &one),
        ],
        expected_order: 576,
    }
}

pub fn preset(name: &str) -> Result<Preset> {
    match name {
        "g3" | "giii" | "III" => Ok(g_iii()),
        "g4" | "giv" | "IV" => Ok(g_iv()),
        _ => Err(Error::Parse(format!("unknown group `{name}` (expected g3 or g4)"))),
    }
}

/// Seeds for `M_{3,9}` over the order-2592 group. The third one needs `y2^3`
/// to have y-degree 9.
pub const SEEDS_G3_3_9: [&str; 4] = ["x0^3y0^9", "x0^3y0^3y1^6", "x0^3y0^3y1^3y2^3", "x0^2x1y0^4y1^5"];
pub const SEEDS_G4_2_4: [&str; 3] = ["x0^2y0^4", "x0^2y1^2ys^2", "x0x1y0y1ys^2"];
pub const SEEDS_G4_3_3: [&str; 4] = ["x0^3y0^3", "x0^2x1y1ys^2", "x0x1^2y0ys^2", "x0x1xsy0y1ys"];

/// Reynolds images of a list of seeds.
pub fn reynolds_family(preset: &Preset, group: &MatrixGroup, seeds: &[&str]) -> Result<Vec<Polynomial>> {
    seeds.iter().map(|s| reynolds(&preset.parse_seed(s)?, group)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn giii() -> &'static MatrixGroup {
        static G: OnceLock<MatrixGroup> = OnceLock::new();
        G.get_or_init(|| g_iii().close().unwrap())
    }

    fn giv() -> &'static MatrixGroup {
        static G: OnceLock<MatrixGroup> = OnceLock::new();
        G.get_or_init(|| g_iv().close().unwrap())
    }

    #[test]
    fn group_orders() {
        assert_eq!(giii().order(), 2592);
        assert_eq!(giv().order(), 576);
        let id = CycMatrix::identity(2, 12);
        assert_eq!(group_closure(&[id]).unwrap().order(), 1);
        let gens = g_iii().generators;
        assert!(matches!(group_closure_capped(&gens, 100), Err(Error::CapExceeded(100))));
    }

    #[test]
    fn element_orders_divide_group_order() {
        for g in giii().elements().iter().step_by(131).take(20) {
            let k = g.element_order(2592).unwrap();
            assert_eq!(2592 % k, 0);
        }
        for g in giv().elements().iter().step_by(29).take(20) {
            assert_eq!(576 % g.element_order(576).unwrap(), 0);
        }
    }

    #[test]
    fn action_on_monomials() {
        let f = FiniteField::prime(3).unwrap();
        let p = Polynomial::parse(&f, 12, "x1^2").unwrap();
        let d = CycMatrix::diagonal(vec![Cyclotomic::one(12), constants::zeta3(), Cyclotomic::one(12)]);
        let img = doubled_action(&d, &p).unwrap();
        assert_eq!(img, p.scale(&(&constants::zeta3() * &constants::zeta3())));
        let q = Polynomial::parse(&f, 12, "x0y1^2+x2").unwrap();
        assert_eq!(doubled_action(&CycMatrix::identity(3, 12), &q).unwrap(), q);
        assert!(matches!(doubled_action(&CycMatrix::identity(2, 12), &q), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn trivial_group_molien_and_reynolds() {
        let g = group_closure(&[CycMatrix::identity(1, 12)]).unwrap();
        let m = molien_bivariate(&g, 5).unwrap();
        assert!(m.coeffs.iter().flatten().all(|&c| c == 1));
        let f = FiniteField::prime(2).unwrap();
        let seed = Polynomial::parse(&f, 12, "x0^2y0").unwrap();
        assert_eq!(reynolds(&seed, &g).unwrap(), seed);
    }

    #[test]
    fn molien_g4() {
        let m = molien_bivariate(giv(), 8).unwrap();
        assert_eq!(m.render(6), "2u^6+2u^5v+3u^4v^2+4u^3v^3+3u^2v^4+2uv^5+2v^6");
        let f8: Vec<i64> = m.homogeneous(8).iter().take(5).map(|t| t.2).collect();
        assert_eq!(f8, [3, 5, 7, 8, 10]);
        for i in 0..=8 {
            for j in 0..=8 - i {
                assert_eq!(m.get(i, j), m.get(j, i));
            }
        }
    }

    #[test]
    fn reynolds_bases_g4() {
        let p = g_iv();
        let b24 = reynolds_family(&p, giv(), &SEEDS_G4_2_4).unwrap();
        assert_eq!(rank(&b24), 3);
        let b33 = reynolds_family(&p, giv(), &SEEDS_G4_3_3).unwrap();
        assert_eq!(rank(&b33), 4);
        for b in b24.iter().chain(&b33) {
            for g in giv().generators() {
                assert!(is_invariant(g, b).unwrap());
            }
        }
        let m = molien_bivariate(giv(), 6).unwrap();
        for (i, j) in [(2, 4), (3, 3), (1, 5)] {
            let basis = invariant_basis(giv(), &p.field, i, j).unwrap();
            assert_eq!(basis.len() as i64, m.get(i, j).unwrap());
        }
    }

    #[test]
    fn coset_reynolds_matches_direct_sum() {
        let p = g_iv();
        for s in SEEDS_G4_3_3 {
            let seed = p.parse_seed(s).unwrap();
            let mut direct = Polynomial::zero(&p.field, 12);
            for g in giv().elements() {
                direct = direct.try_add(&doubled_action(g, &seed).unwrap()).unwrap();
            }
            assert_eq!(reynolds(&seed, giv()).unwrap(), direct);
        }
    }

    #[test]
    fn specialization_collapse() {
        let f = FiniteField::prime(3).unwrap();
        let basis = vec![Polynomial::parse(&f, 12, "x1y1").unwrap(), Polynomial::parse(&f, 12, "x2y2").unwrap()];
        let r = specialization_rank_check(&basis, &nonzero_merge(&f)).unwrap();
        assert_eq!(r, SpecializationRank { rank_before: 2, rank_after: 1 });
    }

    #[test]
    fn series_inversion() {
        // 1/(1-u)^2 = Σ (n+1) u^n
        let one = Cyclotomic::one(12);
        let c = vec![one.clone(), one.scale_int(-2), one.clone()];
        let a = inverse_series(&c, 5);
        assert_eq!(a.iter().map(|x| x.to_integer().unwrap()).collect::<Vec<_>>(), [1, 2, 3, 4, 5, 6]);
    }
}
