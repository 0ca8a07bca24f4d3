//! Brute-force colored designs from the codewords of fixed composition.
//!
//! The blocks are the codewords whose composition on every block `X_i`
//! equals `s_i`; a point is a coordinate and its color is the entry of the
//! codeword there. For each reference tuple `(T_1..T_ℓ)` with `|T_i| = t_i`
//! and each tuple of color multisets `(P_1..P_ℓ)`, `λ(T, P)` counts the
//! blocks whose entries on each `T_i` form `P_i`. Every count is
//! cross-checked against the coefficient of
//! `Π_i x_{i}^{P_i} y_{i}^{s_i - P_i}` in the split complete Jacobi polynomial.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{FieldElement, FiniteField};
use crate::codes::{Codeword, Composition, WordSet};
use crate::enumerators::{ref_tuples, split_complete_jacobi, SplitSpec};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, VarKey};

/// A multiset of colors, as counts per element in canonical order.
type Multiset = Vec<u8>;

/// λ-vectors of one class of reference tuples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TGroup {
    /// Reference tuples in the class, lexicographic.
    pub members: Vec<Vec<Vec<usize>>>,
    /// λ for each column of the report.
    pub lambda: Vec<u64>,
}

/// Incidence counts of one (split) composition at one strength.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DesignReport {
    pub composition: Vec<String>,
    pub t: Vec<usize>,
    pub block_count: usize,
    /// Column labels: color multisets per block, joined by `|`.
    pub columns: Vec<String>,
    /// Classes of reference tuples with equal λ-vectors, by (size, smallest member).
    pub groups: Vec<TGroup>,
    pub is_design: bool,
    pub lambda_max: Vec<u64>,
    pub lambda_min: Vec<u64>,
    /// Number of points of each color in every block, per block of the split.
    pub palette: Vec<BTreeMap<String, usize>>,
    /// Verdict of the split complete Jacobi polynomial test: the terms of
    /// this composition do not depend on the reference tuple.
    pub scj_independent: bool,
}

impl DesignReport {
    /// Columns where some group has nonzero λ.
    pub fn support(&self) -> Vec<usize> {
        (0..self.columns.len()).filter(|&j| self.lambda_max[j] > 0).collect()
    }

    /// Whether every block realizes a constant word, which makes every strength trivial.
    pub fn is_degenerate(&self) -> bool {
        self.palette.iter().all(|p| p.values().filter(|&&c| c > 0).count() <= 1)
    }
}

/// All multisets of size `t` over the field, lexicographic in canonical order.
fn multisets(field: &FiniteField, t: usize) -> Vec<Multiset> {
    field
        .elements()
        .combinations_with_replacement(t)
        .map(|c| {
            let mut m = vec![0u8; field.q()];
            for a in c {
                m[a.index()] += 1;
            }
            m
        })
        .collect()
}

fn multiset_label(field: &FiniteField, m: &Multiset) -> String {
    let mut s = String::new();
    for (a, &c) in m.iter().enumerate() {
        for _ in 0..c {
            s.push_str(field.label(FieldElement::from_index(a)));
        }
    }
    if s.is_empty() {
        s.push('-');
    }
    s
}

/// Splits a run of element labels such as `01ss2` into elements, longest label first.
pub fn parse_multiset(field: &FiniteField, s: &str) -> Result<Vec<FieldElement>> {
    let mut out = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let best = field
            .elements()
            .filter(|&a| rest.starts_with(field.label(a)))
            .max_by_key(|&a| field.label(a).len())
            .ok_or_else(|| Error::Parse(format!("bad color multiset `{s}`")))?;
        rest = &rest[field.label(best).len()..];
        out.push(best);
    }
    out.sort();
    Ok(out)
}

fn comp_of(q: usize, w: &[FieldElement], coords: &[usize]) -> Vec<usize> {
    let mut c = vec![0usize; q];
    for &i in coords {
        c[w[i - 1].index()] += 1;
    }
    c
}

fn check_query(ws: &WordSet, spec: &SplitSpec, s: &[Composition], t: &[usize]) -> Result<()> {
    if spec.n() != ws.length() {
        return Err(Error::DimensionMismatch(format!("split of [{}] for a code of length {}", spec.n(), ws.length())));
    }
    if s.len() != spec.len() || t.len() != spec.len() {
        return Err(Error::InvalidSplit(format!(
            "{} blocks but {} compositions and {} strengths",
            spec.len(),
            s.len(),
            t.len()
        )));
    }
    for (k, (si, b)) in s.iter().zip(spec.blocks()).enumerate() {
        if si.counts().len() != ws.field().q() {
            return Err(Error::Precondition(format!("composition {si} does not have {} parts", ws.field().q())));
        }
        if si.total() != b.len() {
            return Err(Error::Precondition(format!("composition {si} does not sum to |X_{}| = {}", k + 1, b.len())));
        }
        if t[k] > b.len() {
            return Err(Error::Precondition(format!("t_{} = {} exceeds |X_{}| = {}", k + 1, t[k], k + 1, b.len())));
        }
    }
    Ok(())
}

/// Per-tuple λ rows for several split compositions at once, with the SCJ cross-check.
struct Tally {
    columns: Vec<Vec<Multiset>>,
    tuples: Vec<Vec<Vec<usize>>>,
    /// rows[c][tuple][column]
    rows: Vec<Vec<Vec<u64>>>,
    block_counts: Vec<usize>,
    scj_independent: Vec<bool>,
}

fn tally(ws: &WordSet, spec: &SplitSpec, comps: &[Vec<Composition>], t: &[usize]) -> Result<Tally> {
    let field = ws.field();
    let q = field.q();
    for s in comps {
        check_query(ws, spec, s, t)?;
    }
    let per_block: Vec<Vec<Multiset>> = t.iter().map(|&ti| multisets(field, ti)).collect();
    let columns: Vec<Vec<Multiset>> = per_block.iter().cloned().multi_cartesian_product().collect();
    let columns = if columns.is_empty() { vec![Vec::new()] } else { columns };
    let col_index: HashMap<Vec<Multiset>, usize> = columns.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let tuples = ref_tuples(spec, t)?;

    // Blocks of each composition.
    let key_of = |w: &Codeword| -> Vec<Vec<usize>> { spec.blocks().iter().map(|b| comp_of(q, w, b)).collect() };
    let targets: Vec<Vec<Vec<usize>>> =
        comps.iter().map(|s| s.iter().map(|c| c.counts().to_vec()).collect()).collect();
    let mut blocks: Vec<Vec<&Codeword>> = vec![Vec::new(); comps.len()];
    for w in ws.words() {
        let k = key_of(w);
        for (c, target) in targets.iter().enumerate() {
            if &k == target {
                blocks[c].push(w);
            }
        }
    }

    // Monomials x^P y^{s-P} for every composition and column.
    let monomials: Vec<Vec<Monomial>> = targets
        .iter()
        .map(|target| {
            columns
                .iter()
                .map(|col| {
                    let mut pairs = Vec::new();
                    for (k, (p, s)) in col.iter().zip(target).enumerate() {
                        for a in 0..q {
                            let e = FieldElement::from_index(a);
                            let (pa, sa) = (p[a] as usize, s[a]);
                            if pa > 0 {
                                pairs.push((VarKey::x(k as u16 + 1, e), pa as u32));
                            }
                            if sa > pa {
                                pairs.push((VarKey::y(k as u16 + 1, e), (sa - pa) as u32));
                            }
                        }
                    }
                    Monomial::from_pairs(pairs)
                })
                .collect()
        })
        .collect();

    type Row = Vec<Vec<u64>>;
    let per_tuple: Vec<Result<(Row, Vec<Vec<i128>>)>> = tuples
        .par_iter()
        .map(|refs| {
            let mut rows = vec![vec![0u64; columns.len()]; comps.len()];
            for (c, bs) in blocks.iter().enumerate() {
                for w in bs {
                    let col: Vec<Multiset> = refs
                        .iter()
                        .map(|tk| comp_of(q, w, tk).into_iter().map(|x| x as u8).collect())
                        .collect();
                    rows[c][col_index[&col]] += 1;
                }
            }
            let scj = split_complete_jacobi(ws, &spec.without_refs().with_refs(refs.clone())?)?;
            let coeffs: Vec<Vec<i128>> = monomials
                .iter()
                .map(|ms| ms.iter().map(|m| scj.coefficient_of(m).to_integer().unwrap_or(-1)).collect())
                .collect();
            Ok((rows, coeffs))
        })
        .collect();

    let mut rows: Vec<Vec<Vec<u64>>> = vec![Vec::with_capacity(tuples.len()); comps.len()];
    let mut first_coeffs: Vec<Option<Vec<i128>>> = vec![None; comps.len()];
    let mut scj_independent = vec![true; comps.len()];
    for (refs, r) in tuples.iter().zip(per_tuple) {
        let (r, coeffs) = r?;
        for c in 0..comps.len() {
            if r[c].iter().zip(&coeffs[c]).any(|(&l, &k)| l as i128 != k) {
                return Err(Error::CrossCheckMismatch(format!(
                    "counts and Jacobi coefficients differ at reference tuple {refs:?}"
                )));
            }
            match &first_coeffs[c] {
                None => first_coeffs[c] = Some(coeffs[c].clone()),
                Some(f) => scj_independent[c] &= *f == coeffs[c],
            }
        }
        for (c, row) in r.into_iter().enumerate() {
            rows[c].push(row);
        }
    }
    Ok(Tally {
        columns,
        tuples,
        rows,
        block_counts: blocks.iter().map(Vec::len).collect(),
        scj_independent,
    })
}

fn report_from(ws: &WordSet, s: &[Composition], t: &[usize], tally: &Tally, c: usize) -> Result<DesignReport> {
    let field = ws.field();
    let mut classes: Vec<TGroup> = Vec::new();
    let mut index: HashMap<&Vec<u64>, usize> = HashMap::new();
    for (refs, row) in tally.tuples.iter().zip(&tally.rows[c]) {
        let g = *index.entry(row).or_insert_with(|| {
            classes.push(TGroup { members: Vec::new(), lambda: row.clone() });
            classes.len() - 1
        });
        classes[g].members.push(refs.clone());
    }
    classes.sort_by(|a, b| a.members.len().cmp(&b.members.len()).then_with(|| a.members[0].cmp(&b.members[0])));
    let width = tally.columns.len();
    let lambda_max: Vec<u64> = (0..width).map(|j| classes.iter().map(|g| g.lambda[j]).max().unwrap_or(0)).collect();
    let lambda_min: Vec<u64> = (0..width).map(|j| classes.iter().map(|g| g.lambda[j]).min().unwrap_or(0)).collect();
    let is_design = classes.len() <= 1;
    if is_design != tally.scj_independent[c] {
        return Err(Error::CrossCheckMismatch(format!(
            "counting says design = {is_design}, Jacobi polynomials say {}",
            tally.scj_independent[c]
        )));
    }
    let block_count = tally.block_counts[c];
    for g in &classes {
        let total: u64 = g.lambda.iter().sum();
        if total != block_count as u64 {
            return Err(Error::CrossCheckMismatch(format!("λ sums to {total}, not {block_count}")));
        }
    }
    let palette = s
        .iter()
        .map(|si| {
            field
                .elements()
                .map(|a| (field.label(a).to_string(), si.count(a)))
                .collect::<BTreeMap<_, _>>()
        })
        .collect();
    Ok(DesignReport {
        composition: s.iter().map(|x| x.to_string()).collect(),
        t: t.to_vec(),
        block_count,
        columns: tally
            .columns
            .iter()
            .map(|col| col.iter().map(|m| multiset_label(field, m)).join("|"))
            .collect(),
        groups: classes,
        is_design,
        lambda_max,
        lambda_min,
        palette,
        scj_independent: tally.scj_independent[c],
    })
}

/// Design check for one split composition over a split of the coordinates.
pub fn generalized_colored_design_check(
    code: &impl AsRef<WordSet>,
    spec: &SplitSpec,
    s: &[Composition],
    t: &[usize],
) -> Result<DesignReport> {
    let ws = code.as_ref();
    let tally = tally(ws, spec, &[s.to_vec()], t)?;
    report_from(ws, s, t, &tally, 0)
}

/// Design check for one composition on the whole coordinate set.
pub fn colored_design_check(code: &impl AsRef<WordSet>, s: &Composition, t: usize) -> Result<DesignReport> {
    let ws = code.as_ref();
    if t > ws.length() {
        return Err(Error::Precondition(format!("t = {t} exceeds the length {}", ws.length())));
    }
    generalized_colored_design_check(ws, &SplitSpec::whole(ws.length()), std::slice::from_ref(s), &[t])
}

/// Reports for several compositions at one strength, sharing the Jacobi polynomials.
pub fn colored_design_checks(code: &impl AsRef<WordSet>, comps: &[Composition], t: usize) -> Result<Vec<DesignReport>> {
    let ws = code.as_ref();
    if t > ws.length() {
        return Err(Error::Precondition(format!("t = {t} exceeds the length {}", ws.length())));
    }
    let split: Vec<Vec<Composition>> = comps.iter().map(|c| vec![c.clone()]).collect();
    let tally = tally(ws, &SplitSpec::whole(ws.length()), &split, &[t])?;
    comps
        .iter()
        .enumerate()
        .map(|(c, s)| report_from(ws, std::slice::from_ref(s), &[t], &tally, c))
        .collect()
}

/// λ-vectors of several compositions at one strength, laid out as rows
/// `λ_i^j`, `λ_max^j`, `λ_min^j` over the color multisets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaTable {
    pub t: usize,
    pub columns: Vec<String>,
    pub compositions: Vec<LambdaBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaBlock {
    pub composition: String,
    pub block_count: usize,
    pub group_sizes: Vec<usize>,
    pub lambda: Vec<Vec<u64>>,
    pub lambda_max: Vec<u64>,
    pub lambda_min: Vec<u64>,
}

pub fn lambda_table(code: &impl AsRef<WordSet>, comps: &[Composition], t: usize) -> Result<LambdaTable> {
    let reports = colored_design_checks(code, comps, t)?;
    let columns = reports.first().map(|r| r.columns.clone()).unwrap_or_default();
    let compositions = reports
        .into_iter()
        .map(|r| LambdaBlock {
            composition: r.composition[0].clone(),
            block_count: r.block_count,
            group_sizes: r.groups.iter().map(|g| g.members.len()).collect(),
            lambda: r.groups.into_iter().map(|g| g.lambda).collect(),
            lambda_max: r.lambda_max,
            lambda_min: r.lambda_min,
        })
        .collect();
    Ok(LambdaTable { t, columns, compositions })
}

impl LambdaTable {
    fn labelled_rows(&self) -> Vec<(String, &Vec<u64>)> {
        let mut out = Vec::new();
        for (j, b) in self.compositions.iter().enumerate() {
            let j = j + 1;
            for (i, row) in b.lambda.iter().enumerate() {
                out.push((format!("lambda_{}^{j}", i + 1), row));
            }
            out.push((format!("lambda_max^{j}"), &b.lambda_max));
            out.push((format!("lambda_min^{j}"), &b.lambda_min));
        }
        out
    }

    /// Aligned text, one row per λ vector.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (j, b) in self.compositions.iter().enumerate() {
            let _ = writeln!(
                s,
                "# j = {}: composition {}, {} blocks, group sizes {:?}",
                j + 1,
                b.composition,
                b.block_count,
                b.group_sizes
            );
        }
        let rows = self.labelled_rows();
        let head = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(1).max(1);
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(c, name)| rows.iter().map(|(_, r)| r[c].to_string().len()).max().unwrap_or(1).max(name.len()))
            .collect();
        let _ = write!(s, "{:<head$}", "P");
        for (name, w) in self.columns.iter().zip(&widths) {
            let _ = write!(s, " {name:>w$}");
        }
        s.push('\n');
        for (label, row) in &rows {
            let _ = write!(s, "{label:<head$}");
            for (v, w) in row.iter().zip(&widths) {
                let _ = write!(s, " {v:>w$}");
            }
            s.push('\n');
        }
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("row");
        for c in &self.columns {
            s.push(',');
            s.push_str(c);
        }
        s.push('\n');
        for (label, row) in self.labelled_rows() {
            s.push_str(&label);
            for v in row {
                let _ = write!(s, ",{v}");
            }
            s.push('\n');
        }
        s
    }
}

/// The quantities behind `D_{λmax}(n, s, t) ≤ |B| ≤ C_{λmin}(n, s, t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingCovering {
    pub n: usize,
    pub composition: String,
    pub t: usize,
    pub block_count: usize,
    pub lambda_max: Vec<u64>,
    pub lambda_min: Vec<u64>,
    pub statement: String,
}

pub fn packing_covering_params(report: &DesignReport, n: usize) -> PackingCovering {
    let comp = report.composition.join("|");
    let t: usize = report.t.iter().sum();
    PackingCovering {
        n,
        composition: comp.clone(),
        t,
        block_count: report.block_count,
        lambda_max: report.lambda_max.clone(),
        lambda_min: report.lambda_min.clone(),
        statement: format!(
            "D_lambda_max({n},{comp},{t}) <= {} <= C_lambda_min({n},{comp},{t})",
            report.block_count
        ),
    }
}

/// Verdicts of every realized composition at every strength up to `t_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub t_max: usize,
    /// `verdicts[t-1]` lists `(composition, is_design)` at strength `t`.
    pub verdicts: Vec<Vec<(String, bool)>>,
    /// Compositions of constant words; they are designs for every strength and are left out.
    pub degenerate: Vec<String>,
    /// Largest t such that every non-degenerate composition gives a design at every strength up to t.
    pub delta_c: usize,
    /// Largest t such that some non-degenerate composition gives a design at strength t.
    pub s_c: usize,
    /// Whether a statistic reached `t_max`, so the true value may be larger.
    pub capped: bool,
}

pub fn homogeneity_scan(code: &impl AsRef<WordSet>, t_max: usize) -> Result<ScanReport> {
    let ws = code.as_ref();
    let t_max = t_max.min(ws.length());
    let (degenerate, comps): (Vec<Composition>, Vec<Composition>) =
        ws.compositions().into_iter().partition(|c| c.is_constant());
    let mut verdicts = Vec::with_capacity(t_max);
    let mut delta_c = 0;
    let mut all_so_far = true;
    let mut s_c = 0;
    for t in 1..=t_max {
        let reports = colored_design_checks(ws, &comps, t)?;
        let row: Vec<(String, bool)> = reports.iter().map(|r| (r.composition[0].clone(), r.is_design)).collect();
        all_so_far &= row.iter().all(|(_, d)| *d);
        if all_so_far {
            delta_c = t;
        }
        if row.iter().any(|(_, d)| *d) {
            s_c = t;
        }
        verdicts.push(row);
    }
    if comps.is_empty() {
        delta_c = t_max;
    }
    Ok(ScanReport {
        t_max,
        verdicts,
        degenerate: degenerate.iter().map(|c| c.to_string()).collect(),
        delta_c,
        s_c,
        capped: delta_c == t_max || s_c == t_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::codes::LinearCode;

    fn comp(s: &str, q: usize) -> Composition {
        Composition::parse(s, q).unwrap()
    }

    #[test]
    fn golay_designs() {
        let g = catalog::get("g12").unwrap();
        let r = colored_design_check(&g, &comp("6,3,3", 3), 3).unwrap();
        assert!(r.is_design);
        assert_eq!(r.block_count, 220);
        let r = colored_design_check(&g, &comp("6,6,0", 3), 3).unwrap();
        assert!(r.is_design);
        assert_eq!(r.block_count, 22);
        // Permuting the nonzero colors keeps the block count.
        assert_eq!(colored_design_check(&g, &comp("3,6,3", 3), 3).unwrap().block_count, 220);
        assert_eq!(colored_design_check(&g, &comp("6,0,6", 3), 3).unwrap().block_count, 22);
    }

    #[test]
    fn golay_table_columns() {
        let g = catalog::get("g12").unwrap();
        let r = colored_design_check(&g, &comp("6,6,0", 3), 4).unwrap();
        assert!(!r.is_design);
        assert_eq!(r.columns.len(), 15);
        assert_eq!(&r.columns[..4], ["0000", "0001", "0002", "0011"]);
        let p = packing_covering_params(&colored_design_check(&g, &comp("6,3,3", 3), 4).unwrap(), 12);
        assert_eq!(p.block_count, 220);
    }

    #[test]
    fn small_tables() {
        let c = catalog::get("c4iv").unwrap();
        let r = colored_design_check(&c, &comp("2,2,0,0", 4), 1).unwrap();
        assert!(r.is_design && r.block_count == 2);
        let r = colored_design_check(&c, &comp("2,2,0,0", 4), 2).unwrap();
        assert_eq!(r.groups.len(), 2);
        let j = r.columns.iter().position(|c| c == "01").unwrap();
        assert_eq!(r.lambda_max[j], 2);
        assert_eq!(r.lambda_min[j], 0);
    }

    #[test]
    fn split_designs_and_trivial_strength() {
        let f = FiniteField::prime(3).unwrap();
        let c = LinearCode::from_labels(&f, &[vec!["1", "0", "1", "1"], vec!["0", "1", "1", "2"]]).unwrap();
        let spec = SplitSpec::parse(4, "1,2/3,4", None).unwrap();
        for w in c.words() {
            let s = vec![
                Composition::new(comp_of(3, w, &[1, 2])),
                Composition::new(comp_of(3, w, &[3, 4])),
            ];
            let r = generalized_colored_design_check(&c, &spec, &s, &[1, 0]).unwrap();
            assert_eq!(r.is_design, r.scj_independent);
            let r0 = generalized_colored_design_check(&c, &spec, &s, &[0, 0]).unwrap();
            assert!(r0.is_design);
            assert_eq!(r0.groups[0].lambda, vec![r0.block_count as u64]);
        }
        let whole = generalized_colored_design_check(&c, &SplitSpec::whole(4), &[comp("1,2,1", 3)], &[2]).unwrap();
        assert_eq!(whole, colored_design_check(&c, &comp("1,2,1", 3), 2).unwrap());
        assert!(matches!(colored_design_check(&c, &comp("1,2,1", 3), 5), Err(Error::Precondition(_))));
        assert!(matches!(colored_design_check(&c, &comp("1,2,2", 3), 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn scans() {
        let h = catalog::get("h6").unwrap();
        let s = homogeneity_scan(&h, 3).unwrap();
        assert_eq!(s.delta_c, 2);
        assert!(s.verdicts[2].iter().any(|(_, d)| !d));
        let z = LinearCode::zero(&FiniteField::prime(3).unwrap(), 3);
        let s = homogeneity_scan(&z, 2).unwrap();
        assert_eq!(s.degenerate, ["(3,0,0)"]);
        assert!(s.capped);
    }

    #[test]
    fn multiset_labels() {
        let f = FiniteField::gf4();
        let m = parse_multiset(&f, "01ss2").unwrap();
        assert_eq!(m.iter().map(|&a| f.label(a)).collect::<Vec<_>>(), ["0", "1", "s", "s2"]);
        assert_eq!(parse_multiset(&f, "s2s2").unwrap().len(), 2);
        assert!(parse_multiset(&f, "0x").is_err());
        let cols: Vec<String> = multisets(&f, 2).iter().map(|m| multiset_label(&f, m)).collect();
        assert_eq!(cols, ["00", "01", "0s", "0s2", "11", "1s", "1s2", "ss", "ss2", "s2s2"]);
    }
}
