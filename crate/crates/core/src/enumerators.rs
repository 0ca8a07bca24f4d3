//! Weight enumerators, Jacobi polynomials, MacWilliams transforms and
//! polarization.
//!
//! Variable conventions:
//! - `cwe` and `scwe` use `x` variables, one block per coordinate block.
//! - `complete_jacobi` and `split_complete_jacobi` put coordinates in the
//!   reference sets on `x` and the rest on `y`.
//! - The Hamming enumerator uses `y0`, `y1` (printed `x`, `y`), and the
//!   Jacobi polynomial adds `x0`, `x1` (printed `w`, `z`), so that the
//!   Jacobi polynomial at an empty set is the Hamming enumerator.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;
use num_integer::Integer;
use serde::Serialize;

use crate::algebra::{Cyclotomic, FieldElement, FiniteField, Rational, DEFAULT_ORDER};
use crate::codes::{LinearCode, WordSet};
use crate::error::{Error, Result};
use crate::polyring::{Kind, Monomial, Polynomial, VarKey};

/// Cyclotomic order used for the enumerators of codes over `field`:
/// the default order, enlarged so that it contains the p-th roots of unity.
pub fn coefficient_order(field: &FiniteField) -> u32 {
    DEFAULT_ORDER.lcm(&field.characteristic())
}

/// A partition of `[n]` into blocks X_1..X_ℓ, optionally with reference
/// sets T_i ⊆ X_i. Coordinates are 1-based; empty blocks are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitSpec {
    n: usize,
    blocks: Vec<Vec<usize>>,
    refs: Option<Vec<Vec<usize>>>,
}

impl SplitSpec {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidSplit("no blocks".into()));
        }
        if blocks.len() > u16::MAX as usize {
            return Err(Error::InvalidSplit("too many blocks".into()));
        }
        let mut seen = vec![false; n];
        for b in &blocks {
            for &i in b {
                if i == 0 || i > n {
                    return Err(Error::InvalidSplit(format!("coordinate {i} outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[i - 1], true) {
                    return Err(Error::InvalidSplit(format!("coordinate {i} appears twice")));
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidSplit(format!("coordinate {} is not covered", i + 1)));
        }
        let blocks = blocks.into_iter().map(|mut b| {
            b.sort_unstable();
            b
        });
        Ok(SplitSpec { n, blocks: blocks.collect(), refs: None })
    }

    /// The single block `[n]`.
    pub fn whole(n: usize) -> Self {
        SplitSpec { n, blocks: vec![(1..=n).collect()], refs: None }
    }

    /// Attaches reference sets, one per block.
    pub fn with_refs(mut self, refs: Vec<Vec<usize>>) -> Result<Self> {
        if refs.len() != self.blocks.len() {
            return Err(Error::InvalidSplit(format!(
                "{} reference sets for {} blocks",
                refs.len(),
                self.blocks.len()
            )));
        }
        let mut sorted = Vec::with_capacity(refs.len());
        for (k, (mut t, x)) in refs.into_iter().zip(&self.blocks).enumerate() {
            t.sort_unstable();
            if t.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidSplit(format!("reference set {} repeats a coordinate", k + 1)));
            }
            if let Some(i) = t.iter().find(|i| !x.contains(i)) {
                return Err(Error::InvalidSplit(format!("coordinate {i} is not in block {}", k + 1)));
            }
            sorted.push(t);
        }
        self.refs = Some(sorted);
        Ok(self)
    }

    /// Parses `1,2/3,4` style blocks and optional `1/3` style reference sets.
    pub fn parse(n: usize, blocks: &str, refs: Option<&str>) -> Result<Self> {
        let spec = SplitSpec::new(n, parse_sets(blocks)?)?;
        match refs {
            Some(r) => spec.with_refs(parse_sets(r)?),
            None => Ok(spec),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn refs(&self) -> Option<&[Vec<usize>]> {
        self.refs.as_deref()
    }

    /// Number of blocks ℓ.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Size of block `k` (1-based).
    pub fn block_size(&self, k: usize) -> usize {
        self.blocks[k - 1].len()
    }

    /// Block index (1-based) containing coordinate `i`.
    pub fn block_of(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&i)).map(|k| k + 1)
    }

    /// The same blocks without reference sets.
    pub fn without_refs(&self) -> Self {
        SplitSpec { refs: None, ..self.clone() }
    }

    /// Deletes coordinate `i` and renumbers the later coordinates.
    /// The block keeps its index even if it becomes empty.
    pub fn remove_coordinate(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, length: self.n });
        }
        let shift = |s: &Vec<usize>| -> Vec<usize> {
            s.iter().filter(|&&j| j != i).map(|&j| if j > i { j - 1 } else { j }).collect()
        };
        Ok(SplitSpec {
            n: self.n - 1,
            blocks: self.blocks.iter().map(shift).collect(),
            refs: self.refs.as_ref().map(|r| r.iter().map(shift).collect()),
        })
    }

    /// `(block, kind)` of every coordinate, 0-based by position: `x` for
    /// coordinates in a reference set, `y` for the rest, and `x` everywhere
    /// when `refs` is absent and `refs_absent_kind` is `X`.
    fn slots(&self, refs_absent_kind: Kind) -> Vec<(u16, Kind)> {
        let mut out = vec![(1u16, Kind::X); self.n];
        for (k, b) in self.blocks.iter().enumerate() {
            for &i in b {
                let kind = match &self.refs {
                    Some(r) if r[k].contains(&i) => Kind::X,
                    Some(_) => Kind::Y,
                    None => refs_absent_kind,
                };
                out[i - 1] = (k as u16 + 1, kind);
            }
        }
        out
    }
}

/// Parses `/`-separated lists of comma-separated coordinates; empty lists are allowed.
pub fn parse_sets(s: &str) -> Result<Vec<Vec<usize>>> {
    s.split('/')
        .map(|part| {
            let part = part.trim();
            if part.is_empty() || part == "-" {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad coordinate `{t}` in `{s}`"))))
                .collect()
        })
        .collect()
}

/// Sums, over the words, the monomial that sends coordinate `i` to the
/// variable `(slots[i], u_i)`; with `collapse` every nonzero element is
/// sent to `1`.
fn tally(ws: &WordSet, slots: &[(u16, Kind)], collapse: bool) -> Polynomial {
    let field = ws.field();
    let order = coefficient_order(field);
    let q = field.q();
    let slot_ids: Vec<(u16, Kind)> = slots.iter().copied().unique().sorted().collect();
    let slot_index: Vec<usize> = slots.iter().map(|s| slot_ids.binary_search(s).unwrap()).collect();
    let mut counts: HashMap<Vec<u32>, i64> = HashMap::new();
    for w in ws.words() {
        let mut key = vec![0u32; slot_ids.len() * q];
        for (i, a) in w.iter().enumerate() {
            let e = if collapse { a.index().min(1) } else { a.index() };
            key[slot_index[i] * q + e] += 1;
        }
        *counts.entry(key).or_insert(0) += 1;
    }
    let terms = counts.into_iter().map(|(key, c)| {
        let pairs = key.iter().enumerate().filter(|&(_, &e)| e > 0).map(|(j, &e)| {
            let (block, kind) = slot_ids[j / q];
            (VarKey::new(block, kind, FieldElement::from_index(j % q)), e)
        });
        (Monomial::from_pairs(pairs), c)
    });
    Polynomial::from_int_terms(field, order, terms)
}

/// Complete weight enumerator in `x` variables.
pub fn cwe(code: &impl AsRef<WordSet>) -> Polynomial {
    let ws = code.as_ref();
    tally(ws, &vec![(1, Kind::X); ws.length()], false)
}

/// Hamming weight enumerator in `y0` (printed `x`) and `y1` (printed `y`).
pub fn hamming_we(code: &impl AsRef<WordSet>) -> Polynomial {
    let ws = code.as_ref();
    tally(ws, &vec![(1, Kind::Y); ws.length()], true)
}

/// Split complete weight enumerator in `x` variables; reference sets are ignored.
pub fn scwe(code: &impl AsRef<WordSet>, spec: &SplitSpec) -> Result<Polynomial> {
    let ws = code.as_ref();
    check_length(ws, spec)?;
    Ok(tally(ws, &spec.without_refs().slots(Kind::X), false))
}

/// Split complete weight enumerator written in `y` variables, the form
/// the polarization operators act on.
pub fn scwe_y(code: &impl AsRef<WordSet>, spec: &SplitSpec) -> Result<Polynomial> {
    let ws = code.as_ref();
    check_length(ws, spec)?;
    Ok(tally(ws, &spec.without_refs().slots(Kind::Y), false))
}

fn check_length(ws: &WordSet, spec: &SplitSpec) -> Result<()> {
    if ws.length() != spec.n() {
        return Err(Error::DimensionMismatch(format!(
            "split of [{}] applied to words of length {}",
            spec.n(),
            ws.length()
        )));
    }
    Ok(())
}

fn ref_slots(n: usize, t: &[usize]) -> Result<Vec<(u16, Kind)>> {
    let mut slots = vec![(1u16, Kind::Y); n];
    for &i in t {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, length: n });
        }
        slots[i - 1] = (1, Kind::X);
    }
    Ok(slots)
}

/// Hamming Jacobi polynomial: `x0`/`x1` (printed `w`/`z`) count zero and
/// nonzero entries on T, `y0`/`y1` (printed `x`/`y`) off T.
pub fn jacobi(code: &impl AsRef<WordSet>, t: &[usize]) -> Result<Polynomial> {
    let ws = code.as_ref();
    Ok(tally(ws, &ref_slots(ws.length(), t)?, true))
}

/// Complete Jacobi polynomial attached to T.
pub fn complete_jacobi(code: &impl AsRef<WordSet>, t: &[usize]) -> Result<Polynomial> {
    let ws = code.as_ref();
    Ok(tally(ws, &ref_slots(ws.length(), t)?, false))
}

/// Split complete Jacobi polynomial; `spec` must carry reference sets.
pub fn split_complete_jacobi(code: &impl AsRef<WordSet>, spec: &SplitSpec) -> Result<Polynomial> {
    let ws = code.as_ref();
    check_length(ws, spec)?;
    if spec.refs().is_none() {
        return Err(Error::InvalidSplit("reference sets are required".into()));
    }
    Ok(tally(ws, &spec.slots(Kind::X), false))
}

/// Names the Hamming enumerator variables `x`, `y`.
pub fn hamming_name(v: &VarKey) -> String {
    jacobi_name(v)
}

/// Names the Jacobi variables `w`, `z`, `x`, `y`.
pub fn jacobi_name(v: &VarKey) -> String {
    match (v.kind, v.elem.is_zero()) {
        (Kind::X, true) => "w",
        (Kind::X, false) => "z",
        (Kind::Y, true) => "x",
        (Kind::Y, false) => "y",
    }
    .to_string()
}

/// Substitution `v_{i,a} ↦ Σ_b χ(a·b̄) v_{i,b}` on every block and kind of `p`,
/// scaled by `1/size`. With `hermitian` unset, `b̄ = b`.
pub fn macwilliams(p: &Polynomial, size: usize, hermitian: bool) -> Result<Polynomial> {
    let field = p.field();
    let order = p.order();
    if order % field.characteristic() != 0 {
        return Err(Error::IncompatibleCyclotomicOrder { left: order, right: field.characteristic() });
    }
    if size == 0 {
        return Err(Error::DivisionByZero);
    }
    let groups: BTreeSet<(u16, Kind)> = p.variables().iter().map(|v| (v.block, v.kind)).collect();
    let mut rules = BTreeMap::new();
    for (block, kind) in groups {
        for a in field.elements() {
            let mut image = Polynomial::zero(field, order);
            for b in field.elements() {
                let bb = if hermitian { field.frobenius_conj(b)? } else { b };
                let chi = field.character(FieldElement::ONE, field.mul(a, bb), order)?;
                let term = Polynomial::var(field, order, VarKey::new(block, kind, b)).scale(&chi);
                image = &image + &term;
            }
            rules.insert(VarKey::new(block, kind, a), image);
        }
    }
    Ok(p.substitute_linear(&rules)?.scale_rational(&Rational::new(1, size as i128)))
}

/// MacWilliams transform of a (split) complete weight enumerator.
pub fn macwilliams_scwe(p: &Polynomial, size: usize, hermitian: bool) -> Result<Polynomial> {
    if p.variables().iter().any(|v| v.kind == Kind::Y) {
        return Err(Error::AlphabetMismatch);
    }
    macwilliams(p, size, hermitian)
}

/// MacWilliams transform of a (split) complete Jacobi polynomial; both
/// kinds are transformed.
pub fn macwilliams_scj(p: &Polynomial, size: usize, hermitian: bool) -> Result<Polynomial> {
    macwilliams(p, size, hermitian)
}

/// `Σ_a x_{k,a} ∂p/∂y_{k,a}`, unnormalized.
fn polar_sum(p: &Polynomial, k: u16) -> Polynomial {
    let field = p.field();
    let mut acc = Polynomial::zero(field, p.order());
    for a in field.elements() {
        let d = p.partial_derivative(&VarKey::y(k, a));
        if !d.is_zero() {
            acc = &acc + &(&Polynomial::var(field, p.order(), VarKey::x(k, a)) * &d);
        }
    }
    acc
}

/// Polarization on block `k`: each term of `p` is divided by its own
/// block-`k` `y`-degree, so that repeated application to a `y`-written
/// enumerator averages the Jacobi polynomials over reference sets of
/// growing size. Terms without block-`k` `y` variables vanish.
pub fn polarize(p: &Polynomial, k: u16) -> Polynomial {
    let field = p.field();
    let order = p.order();
    let mut out = Polynomial::zero(field, order);
    let mut by_degree: BTreeMap<u32, Vec<(Monomial, Cyclotomic)>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let d = m.degree_in(k, Kind::Y);
        if d > 0 {
            by_degree.entry(d).or_default().push((m.clone(), c.clone()));
        }
    }
    for (d, terms) in by_degree {
        let part = Polynomial::from_terms(field, order, terms);
        out = &out + &polar_sum(&part, k).scale_rational(&Rational::new(1, d as i128));
    }
    out
}

/// Polarization on block `k` with a fixed divisor.
pub fn polarize_with(p: &Polynomial, k: u16, divisor: usize) -> Result<Polynomial> {
    if divisor == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(polar_sum(p, k).scale_rational(&Rational::new(1, divisor as i128)))
}

/// `A_{ℓ}^{t_ℓ} ⋯ A_{1}^{t_1}` applied to `p`.
pub fn polarize_iter(p: &Polynomial, t: &[usize]) -> Polynomial {
    let mut out = p.clone();
    for (k, &tk) in t.iter().enumerate() {
        for _ in 0..tk {
            out = polarize(&out, k as u16 + 1);
        }
    }
    out
}

/// Outcome of the one-coordinate decomposition check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub block: usize,
    pub coordinate: usize,
    /// SCJ at `X_k({i})` equals the shorten/value-subcode decomposition.
    pub exact: bool,
    /// `v_k · A_k · scwe` equals the decomposition summed over `i ∈ X_k`.
    pub averaged: bool,
    /// Whether SCJ at `X_k({j})` is the same for every `j ∈ X_k`.
    pub homogeneous: bool,
    /// When homogeneous: SCJ at `X_k({i})` equals `A_k · scwe`.
    pub polarization: Option<bool>,
    pub first_difference: Option<String>,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.exact && self.averaged && self.polarization.unwrap_or(true)
    }
}

fn single_ref(spec: &SplitSpec, k: usize, i: usize) -> Result<SplitSpec> {
    let mut refs = vec![Vec::new(); spec.len()];
    refs[k - 1] = vec![i];
    spec.without_refs().with_refs(refs)
}

/// `x_{k,0}·scwe(C/i) + Σ_{a≠0} x_{k,a}·scwe(C+i_a)` in `y` variables.
fn decomposition(code: &LinearCode, spec: &SplitSpec, k: usize, i: usize) -> Result<Polynomial> {
    let field = code.field();
    let order = coefficient_order(field);
    let reduced = spec.without_refs().remove_coordinate(i)?;
    let mut acc = Polynomial::zero(field, order);
    for a in field.elements() {
        let part = if a.is_zero() { code.shorten(i)?.word_set().clone() } else { code.value_subcode(i, a)? };
        let e = scwe_y(&part, &reduced)?;
        acc = &acc + &(&Polynomial::var(field, order, VarKey::x(k as u16, a)) * &e);
    }
    Ok(acc)
}

/// Checks the one-coordinate decomposition of the split complete Jacobi
/// polynomial at coordinate `i` of block `k`, its average over the block,
/// and, when every coordinate of the block gives the same polynomial, its
/// polarization form.
pub fn verify_decomposition(code: &LinearCode, spec: &SplitSpec, k: usize, i: usize) -> Result<DecompositionReport> {
    if k == 0 || k > spec.len() {
        return Err(Error::InvalidSplit(format!("block {k} out of range")));
    }
    if !spec.blocks()[k - 1].contains(&i) {
        return Err(Error::InvalidSplit(format!("coordinate {i} is not in block {k}")));
    }
    let lhs = split_complete_jacobi(code, &single_ref(spec, k, i)?)?;
    let rhs = decomposition(code, spec, k, i)?;
    let mut first_difference = lhs.first_difference(&rhs);
    let exact = first_difference.is_none();

    let mut sum_lhs = Polynomial::zero(code.field(), lhs.order());
    let mut sum_rhs = sum_lhs.clone();
    let mut homogeneous = true;
    for &j in &spec.blocks()[k - 1] {
        let scj = split_complete_jacobi(code, &single_ref(spec, k, j)?)?;
        homogeneous &= scj == lhs;
        sum_lhs = &sum_lhs + &scj;
        sum_rhs = &sum_rhs + &decomposition(code, spec, k, j)?;
    }
    let base = scwe_y(code, spec)?;
    let polar = polar_sum(&base, k as u16);
    let averaged = polar == sum_rhs && sum_lhs == sum_rhs;
    if first_difference.is_none() && !averaged {
        first_difference = polar.first_difference(&sum_rhs);
    }
    let polarization = homogeneous.then(|| polarize(&base, k as u16) == lhs);
    Ok(DecompositionReport { block: k, coordinate: i, exact, averaged, homogeneous, polarization, first_difference })
}

/// Outcome of the iterated polarization check over all reference tuples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarizationReport {
    pub t: Vec<usize>,
    /// Minimum nonzero weight is at least Σ t_i.
    pub weight_hypothesis: bool,
    pub tuples_checked: usize,
    /// SCJ is the same for every reference tuple.
    pub independent: bool,
    /// SCJ equals the iterated polarization for every tuple.
    pub matches_polarization: bool,
    /// First tuple whose SCJ differs from the iterated polarization.
    pub first_violation: Option<Vec<Vec<usize>>>,
}

/// All tuples `(T_1..T_ℓ)` with `T_i` a `t_i`-subset of `X_i`, in lexicographic order.
pub fn ref_tuples(spec: &SplitSpec, t: &[usize]) -> Result<Vec<Vec<Vec<usize>>>> {
    if t.len() != spec.len() {
        return Err(Error::InvalidSplit(format!("{} strengths for {} blocks", t.len(), spec.len())));
    }
    for (k, (&tk, b)) in t.iter().zip(spec.blocks()).enumerate() {
        if tk > b.len() {
            return Err(Error::Precondition(format!("t_{} = {tk} exceeds block size {}", k + 1, b.len())));
        }
    }
    Ok(spec
        .blocks()
        .iter()
        .zip(t)
        .map(|(b, &tk)| b.iter().copied().combinations(tk).collect::<Vec<_>>())
        .multi_cartesian_product()
        .collect())
}

/// Compares the split complete Jacobi polynomial at every reference tuple
/// with `A_ℓ^{t_ℓ} ⋯ A_1^{t_1} · scwe`.
pub fn verify_polarization(code: &LinearCode, spec: &SplitSpec, t: &[usize]) -> Result<PolarizationReport> {
    let tuples = ref_tuples(spec, t)?;
    let total: usize = t.iter().sum();
    let weight_hypothesis = code.min_nonzero_weight().map_or(true, |w| w >= total);
    let target = polarize_iter(&scwe_y(code, spec)?, t);
    let mut first: Option<Polynomial> = None;
    let mut independent = true;
    let mut first_violation = None;
    for refs in &tuples {
        let scj = split_complete_jacobi(code, &spec.without_refs().with_refs(refs.clone())?)?;
        if first_violation.is_none() && scj != target {
            first_violation = Some(refs.clone());
        }
        match &first {
            None => first = Some(scj),
            Some(f) => independent &= *f == scj,
        }
    }
    Ok(PolarizationReport {
        t: t.to_vec(),
        weight_hypothesis,
        tuples_checked: tuples.len(),
        independent,
        matches_polarization: first_violation.is_none(),
        first_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> FiniteField {
        FiniteField::prime(3).unwrap()
    }

    fn c4() -> LinearCode {
        LinearCode::from_labels(&gf3(), &[vec!["1", "0", "1", "1"], vec!["0", "1", "1", "2"]]).unwrap()
    }

    fn parse(f: &FiniteField, s: &str) -> Polynomial {
        Polynomial::parse(f, 12, s).unwrap()
    }

    #[test]
    fn cwe_c4() {
        let f = gf3();
        let expected = parse(&f, "x0^4 + x0x1^3 + x0x2^3 + 3x0x1^2x2 + 3x0x1x2^2");
        assert_eq!(cwe(&c4()), expected);
        assert_eq!(cwe(&LinearCode::zero(&f, 5)), parse(&f, "x0^5"));
    }

    #[test]
    fn hamming_and_jacobi() {
        let f = gf3();
        let c = c4();
        assert_eq!(hamming_we(&c), parse(&f, "y0^4 + 8y0y1^3"));
        assert_eq!(hamming_we(&c).render_with(hamming_name), "x^4 + 8*x*y^3");
        assert_eq!(jacobi(&c, &[]).unwrap(), hamming_we(&c));
        // Words with u_1 = 0: 0000, 0112, 0221; the other six have u_1 != 0 and weight 3.
        let j = jacobi(&c, &[1]).unwrap();
        assert_eq!(j.render_with(jacobi_name), "w*x^3 + 2*w*y^3 + 6*z*x*y^2");
        assert_eq!(jacobi(&LinearCode::zero(&f, 4), &[1, 2]).unwrap(), parse(&f, "x0^2 y0^2"));
    }

    #[test]
    fn split_spec_validation() {
        assert!(SplitSpec::parse(4, "1,2/3,4", None).is_ok());
        assert!(matches!(SplitSpec::parse(4, "1,2/2,3,4", None), Err(Error::InvalidSplit(_))));
        assert!(matches!(SplitSpec::parse(4, "1,2/3", None), Err(Error::InvalidSplit(_))));
        assert!(matches!(SplitSpec::parse(4, "1,2/3,4", Some("3/")), Err(Error::InvalidSplit(_))));
        assert!(matches!(SplitSpec::parse(4, "1,2/3,x", None), Err(Error::Parse(_))));
        let s = SplitSpec::parse(4, "1,2/3,4", Some("1/")).unwrap();
        assert_eq!(s.refs().unwrap(), &[vec![1], vec![]]);
        assert_eq!(s.remove_coordinate(2).unwrap().blocks(), &[vec![1], vec![2, 3]]);
    }

    #[test]
    fn scwe_c4_split() {
        let f = gf3();
        let spec = SplitSpec::parse(4, "1,2/3,4", None).unwrap();
        let p = scwe(&c4(), &spec).unwrap();
        assert_eq!(p.len(), 9);
        assert_eq!(p.forget_blocks(), cwe(&c4()));
        assert!(p.terms().all(|(m, _)| m.degree_in(1, Kind::X) == 2 && m.degree_in(2, Kind::X) == 2));
        assert_eq!(p.coefficient_of(&parse(&f, "x[1]1^2 x[2]0 x[2]2").terms().next().unwrap().0.clone()).to_integer(), Some(1));
        assert_eq!(scwe(&c4(), &SplitSpec::whole(4)).unwrap(), cwe(&c4()));
    }

    #[test]
    fn cj_and_scj_reductions() {
        let c = c4();
        assert_eq!(complete_jacobi(&c, &[]).unwrap(), cwe(&c).flip_kind());
        let spec = SplitSpec::parse(4, "1,2/3,4", Some("/")).unwrap();
        assert_eq!(split_complete_jacobi(&c, &spec).unwrap(), scwe(&c, &spec).unwrap().flip_kind());
        let whole = SplitSpec::whole(4).with_refs(vec![vec![1, 3]]).unwrap();
        assert_eq!(split_complete_jacobi(&c, &whole).unwrap(), complete_jacobi(&c, &[1, 3]).unwrap());
        let cj = complete_jacobi(&c, &[1, 3]).unwrap();
        assert_eq!(cj.len(), 9);
        assert!(matches!(split_complete_jacobi(&c, &SplitSpec::whole(4)), Err(Error::InvalidSplit(_))));
    }

    #[test]
    fn macwilliams_self_dual_and_zero_code() {
        let f = gf3();
        let c = c4();
        assert_eq!(macwilliams_scwe(&cwe(&c), 9, false).unwrap(), cwe(&c));
        let spec = SplitSpec::parse(4, "1,2/3,4", Some("1/3")).unwrap();
        let scj = split_complete_jacobi(&c, &spec).unwrap();
        assert_eq!(macwilliams_scj(&scj, 9, false).unwrap(), scj);
        let z = LinearCode::zero(&f, 1);
        assert_eq!(macwilliams_scwe(&cwe(&z), 1, false).unwrap(), parse(&f, "x0 + x1 + x2"));
        assert!(matches!(macwilliams_scwe(&scj, 9, false), Err(Error::AlphabetMismatch)));
    }

    #[test]
    fn macwilliams_against_direct_duals() {
        let f = gf3();
        let c = LinearCode::from_labels(&f, &[vec!["1", "2", "0", "1", "1"]]).unwrap();
        let d = c.dual(false).unwrap();
        let spec = SplitSpec::parse(5, "1,4/2,3,5", Some("4/2,5")).unwrap();
        let t = macwilliams_scwe(&scwe(&c, &spec).unwrap(), c.size(), false).unwrap();
        assert_eq!(t, scwe(&d, &spec).unwrap());
        let t = macwilliams_scj(&split_complete_jacobi(&c, &spec).unwrap(), c.size(), false).unwrap();
        assert_eq!(t, split_complete_jacobi(&d, &spec).unwrap());
        assert_eq!(macwilliams_scj(&t, d.size(), false).unwrap(), split_complete_jacobi(&c, &spec).unwrap());

        let g = FiniteField::gf4();
        let c = LinearCode::from_labels(&g, &[vec!["1", "s", "0", "s2"]]).unwrap();
        let h = c.dual(true).unwrap();
        let spec = SplitSpec::parse(4, "1,2/3,4", Some("2/3,4")).unwrap();
        let t = macwilliams_scj(&split_complete_jacobi(&c, &spec).unwrap(), c.size(), true).unwrap();
        assert_eq!(t, split_complete_jacobi(&h, &spec).unwrap());
        let e = c.dual(false).unwrap();
        let t = macwilliams_scwe(&cwe(&c), c.size(), false).unwrap();
        assert_eq!(t, cwe(&e));
    }

    #[test]
    fn polarization_basics() {
        let f = gf3();
        let p = parse(&f, "y0^5");
        assert_eq!(polarize(&p, 1), parse(&f, "x0 y0^4"));
        assert_eq!(polarize_with(&p, 1, 5).unwrap(), parse(&f, "x0 y0^4"));
        assert_eq!(polarize(&parse(&f, "x0^3"), 1), Polynomial::zero(&f, 12));
        // Averaging property: A^t of the y-written cwe is the mean of CJ over |T| = t.
        let c = c4();
        let base = cwe(&c).flip_kind();
        for t in 0..=3 {
            let mut mean = Polynomial::zero(&f, 12);
            let sets: Vec<Vec<usize>> = (1..=4).combinations(t).collect();
            for s in &sets {
                mean = &mean + &complete_jacobi(&c, s).unwrap();
            }
            let mean = mean.scale_rational(&Rational::new(1, sets.len() as i128));
            assert_eq!(polarize_iter(&base, &[t]), mean, "t = {t}");
        }
    }

    #[test]
    fn decomposition_on_c4() {
        let c = c4();
        let spec = SplitSpec::parse(4, "1,2/3,4", None).unwrap();
        for k in 1..=2 {
            for &i in &spec.blocks()[k - 1] {
                let r = verify_decomposition(&c, &spec, k, i).unwrap();
                assert!(r.holds(), "{r:?}");
            }
        }
        let z = LinearCode::zero(&gf3(), 3);
        let r = verify_decomposition(&z, &SplitSpec::whole(3), 1, 2).unwrap();
        assert!(r.exact && r.homogeneous && r.polarization == Some(true));
        assert!(verify_decomposition(&c, &spec, 1, 3).is_err());
    }

    #[test]
    fn polarization_on_c4() {
        let c = c4();
        let r = verify_polarization(&c, &SplitSpec::whole(4), &[2]).unwrap();
        assert_eq!(r.tuples_checked, 6);
        assert!(r.weight_hypothesis);
        assert_eq!(r.independent, r.matches_polarization);
        let r = verify_polarization(&c, &SplitSpec::whole(4), &[0]).unwrap();
        assert!(r.independent && r.matches_polarization);
    }
}
