//! The acceptance checks, each reduced to a pass/fail line with details.
//!
//! Every check is exact. Printed reference values come from [`crate::fixtures`];
//! where a printed value is known to be wrong the check compares against
//! direct computation and reports the printed discrepancy in its notes.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Cyclotomic, FieldElement, FiniteField};
use crate::catalog::{self, ExpectedType};
use crate::codes::{Composition, LinearCode};
use crate::designs::{colored_design_check, generalized_colored_design_check, homogeneity_scan, lambda_table};
use crate::enumerators::{
    coefficient_order, complete_jacobi, cwe, macwilliams_scj, macwilliams_scwe, scwe, scwe_y,
    split_complete_jacobi, verify_decomposition, verify_polarization, SplitSpec,
};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::invariants::{
    self, g_iii, g_iv, invariant_basis, molien_bivariate, nonzero_merge, rank, reynolds_family,
    specialization_rank_check, MatrixGroup,
};
use crate::polyring::Polynomial;

/// One acceptance line.
#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub tolerance: &'static str,
    pub passed: bool,
    /// For a failed check: every difference is a documented erratum.
    pub explained: bool,
    pub detail: String,
    pub notes: Vec<String>,
}

impl Criterion {
    fn new(id: u8, title: &'static str) -> Self {
        Criterion { id, title, tolerance: "exact", passed: true, explained: false, detail: String::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.passed = false;
            self.notes.push(format!("failed: {}", what.into()));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// `PASS`/`FAIL` line as printed by the acceptance runner.
    pub fn line(&self) -> String {
        format!(
            "[{}] criterion {:>2} {} (tol={}): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.tolerance,
            self.detail
        )
    }
}

pub const TITLES: [&str; 11] = [
    "complete weight enumerator of c4",
    "split complete weight enumerator of c4",
    "MacWilliams transforms on the catalog",
    "group orders",
    "Molien series",
    "Reynolds bases and specialization ranks",
    "design verdicts and block counts",
    "lambda tables cell for cell",
    "polarization and decomposition identities",
    "counting agrees with Jacobi polynomials",
    "property suites",
];

/// Runs one check by number.
pub fn run(id: u8) -> Result<Criterion> {
    match id {
        1 => c1(),
        2 => c2(),
        3 => c3(),
        4 => c4_groups(),
        5 => c5(),
        6 => c6(),
        7 => c7(),
        8 => c8(),
        9 => c9(),
        10 => c10(),
        11 => c11(),
        _ => Err(Error::Parse(format!("no acceptance criterion {id}"))),
    }
}

pub fn run_all() -> Result<Vec<Criterion>> {
    (1..=11).map(run).collect()
}

fn order_for(code: &LinearCode) -> u32 {
    coefficient_order(code.field())
}

fn printed(code: &str, section: &str, field: &FiniteField) -> Result<Polynomial> {
    let text = fixtures::polynomials_for(code).ok_or_else(|| Error::UnknownCode(code.to_string()))?;
    fixtures::polynomial(text, section, field, coefficient_order(field))
}

fn c1() -> Result<Criterion> {
    let mut c = Criterion::new(1, TITLES[0]);
    let code = catalog::get("c4")?;
    let f = code.field().clone();
    let w = cwe(&code);
    let p = printed("c4", "cwe", &f)?;
    c.check(w == p, format!("differs from printed: {:?}", w.first_difference(&p)));
    let coef = |s: &str| -> Result<Option<i128>> {
        let m = Polynomial::parse(&f, order_for(&code), s)?;
        let mono = m.terms().next().expect("one term").0.clone();
        Ok(w.coefficient_of(&mono).to_integer())
    };
    c.check(w.len() == 5, format!("{} terms", w.len()));
    c.check(coef("x0x1^2x2")? == Some(3) && coef("x0x1x2^2")? == Some(3), "coefficient 3 terms");
    c.detail = format!("{} = printed, {} terms", w.render(), w.len());
    Ok(c)
}

fn c2() -> Result<Criterion> {
    let mut c = Criterion::new(2, TITLES[1]);
    let code = catalog::get("c4")?;
    let f = code.field().clone();
    let spec = SplitSpec::parse(4, "1,2/3,4", None)?;
    let s = scwe(&code, &spec)?;
    let p = printed("c4", "scwe", &f)?;
    c.check(s == p, format!("differs from printed: {:?}", s.first_difference(&p)));
    c.check(s.len() == 9, format!("{} terms", s.len()));
    // The companion split Jacobi polynomial carries the one flagged misprint.
    let scj = split_complete_jacobi(&code, &SplitSpec::parse(4, "1,2/3,4", Some("1/3"))?)?;
    let raw = printed("c4", "scj", &f)?;
    let fixed = fixtures::corrected_polynomial("c4", "scj", &f, order_for(&code))?;
    let diffs = raw.diff(&scj);
    c.check(fixed == scj, "split Jacobi polynomial differs beyond the flagged term");
    for (m, a, b) in &diffs {
        c.note(format!("printed split Jacobi term {}: printed {a}, computed {b}", raw.render_monomial(m)));
    }
    c.detail = format!("9 of 9 terms equal; split Jacobi companion differs from print in {} flagged term(s)", diffs.len() / 2);
    Ok(c)
}

/// A split of `[n]` into two halves and single references in each.
fn halves(n: usize) -> Result<(SplitSpec, SplitSpec)> {
    let h = n / 2;
    let a: Vec<usize> = (1..=h).collect();
    let b: Vec<usize> = (h + 1..=n).collect();
    let spec = SplitSpec::new(n, vec![a, b])?;
    let refs = if n >= 2 { vec![vec![1], vec![h + 1]] } else { vec![vec![1], vec![]] };
    Ok((spec.clone(), spec.with_refs(refs)?))
}

fn c3() -> Result<Criterion> {
    let mut c = Criterion::new(3, TITLES[2]);
    let mut checked = 0;
    for e in catalog::builtin() {
        let code = &e.code;
        let hermitian = catalog::expected_type(&e.name) == Some(ExpectedType::IV);
        let dual = code.dual(hermitian)?;
        let (spec, refs) = halves(code.length())?;
        for (label, mine, theirs, inverse) in [
            ("cwe", cwe(code), cwe(&dual), false),
            ("scwe", scwe(code, &spec)?, scwe(&dual, &spec)?, false),
            ("split Jacobi", split_complete_jacobi(code, &refs)?, split_complete_jacobi(&dual, &refs)?, true),
        ] {
            let t = if inverse {
                macwilliams_scj(&mine, code.size(), hermitian)?
            } else {
                macwilliams_scwe(&mine, code.size(), hermitian)?
            };
            c.check(t == theirs, format!("{} {label}: transform differs from dual", e.name));
            let back = if inverse {
                macwilliams_scj(&t, dual.size(), hermitian)?
            } else {
                macwilliams_scwe(&t, dual.size(), hermitian)?
            };
            c.check(back == mine, format!("{} {label}: double transform is not the identity", e.name));
            checked += 1;
        }
    }
    c.detail = format!("{checked} enumerators on {} codes match their duals; double transforms return the input", catalog::names().len());
    Ok(c)
}

fn c4_groups() -> Result<Criterion> {
    let mut c = Criterion::new(4, TITLES[3]);
    let g3 = g_iii().close()?;
    let g4 = g_iv().close()?;
    c.check(g3.order() == 2592, format!("ternary group has order {}", g3.order()));
    c.check(g4.order() == 576, format!("quaternary group has order {}", g4.order()));
    c.detail = format!("|G_III| = {}, |G_IV| = {}", g3.order(), g4.order());
    Ok(c)
}

fn molien_printed(name: &str) -> Result<Vec<(u32, u32, i64)>> {
    Ok(fixtures::molien_coefficients()?
        .into_iter()
        .filter(|(n, ..)| n == name)
        .map(|(_, i, j, v)| (i, j, v))
        .collect())
}

fn c5() -> Result<Criterion> {
    let mut c = Criterion::new(5, TITLES[4]);
    let g3 = g_iii().close()?;
    let g4 = g_iv().close()?;
    let m3 = molien_bivariate(&g3, 12)?;
    let m4 = molien_bivariate(&g4, 8)?;
    let compare = |c: &mut Criterion, name: &str, table: &invariants::MolienTable| -> Result<usize> {
        let rows = molien_printed(name)?;
        for &(i, j, v) in &rows {
            let ours = table.get(i as usize, j as usize);
            c.check(ours == Some(v), format!("{name} u^{i}v^{j}: printed {v}, computed {ours:?}"));
        }
        Ok(rows.len())
    };
    let n6 = compare(&mut c, "g4_f6", &m4)?;
    let n8 = compare(&mut c, "g4_f8", &m4)?;
    let n12 = compare(&mut c, "g3_f12", &m3)?;
    // The printed degree-4 part is not homogeneous; compare what it can mean.
    let f4 = molien_printed("g4_f4")?;
    let bad: Vec<_> = f4.iter().filter(|(i, j, _)| i + j != 4).collect();
    let good_ok = f4.iter().filter(|(i, j, _)| i + j == 4).all(|&(i, j, v)| m4.get(i as usize, j as usize) == Some(v));
    c.check(good_ok, "degree-4 terms of the printed f[4] disagree");
    c.check(!bad.is_empty(), "printed f[4] expected to contain off-degree terms");
    c.note(format!("computed f[4] = {}; the printed form has off-degree terms {:?}", m4.render(4), bad));
    c.note(format!("computed f[12] = {}", m3.render(12)));
    c.detail = format!(
        "f[6] {n6}/{n6}, f[8] {n8}/{n8} leading, f[12] {n12}/{n12} printed coefficients; f[4] = {} (printed form flagged)",
        m4.render(4)
    );
    Ok(c)
}

fn c6() -> Result<Criterion> {
    let mut c = Criterion::new(6, TITLES[5]);
    let p3 = g_iii();
    let p4 = g_iv();
    let g3 = p3.close()?;
    let g4 = p4.close()?;
    let r24 = rank(&reynolds_family(&p4, &g4, &invariants::SEEDS_G4_2_4)?);
    let r33 = rank(&reynolds_family(&p4, &g4, &invariants::SEEDS_G4_3_3)?);
    let r39 = rank(&reynolds_family(&p3, &g3, &invariants::SEEDS_G3_3_9)?);
    c.check(r24 == 3, format!("rank {r24} at (2,4)"));
    c.check(r33 == 4, format!("rank {r33} at (3,3)"));
    c.check(r39 == 4, format!("rank {r39} at (3,9)"));
    let misprint = p3.parse_seed("x0^3y0^3y1^3y2^2")?;
    c.note(format!(
        "seed x0^3y0^3y1^3y2^2 has y-degree {}; y2^3 is used",
        misprint.terms().next().map(|(m, _)| m.degree_in(1, crate::polyring::Kind::Y)).unwrap_or(0)
    ));
    let mut spec = Vec::new();
    let mut spec_check = |c: &mut Criterion, g: &MatrixGroup, f: &FiniteField, n: usize, l: usize| -> Result<()> {
        let basis = invariant_basis(g, f, l, n - l)?;
        let r = specialization_rank_check(&basis, &nonzero_merge(f))?;
        c.check(r.preserved(), format!("rank drops {} -> {} at ({l},{})", r.rank_before, r.rank_after, n - l));
        spec.push(format!("({l},{}) {}->{}", n - l, r.rank_before, r.rank_after));
        Ok(())
    };
    for l in 1..=2 {
        spec_check(&mut c, &g4, &p4.field, 6, l)?;
    }
    for l in 1..=3 {
        spec_check(&mut c, &g3, &p3.field, 12, l)?;
    }
    c.detail = format!("ranks (2,4)={r24}, (3,3)={r33}, (3,9)={r39}; specialization {}", spec.join(", "));
    Ok(c)
}

fn c7() -> Result<Criterion> {
    let mut c = Criterion::new(7, TITLES[6]);
    let cases: [(&str, &str, usize, usize); 6] = [
        ("g12", "6,3,3", 3, 220),
        ("g12", "6,6,0", 3, 22),
        ("c4iv", "2,2,0,0", 1, 2),
        ("h6", "2,2,2,0", 2, 15),
        ("c8iv", "4,4,0,0", 3, 14),
        ("c8iv", "2,2,2,2", 3, 168),
    ];
    let mut parts = Vec::new();
    for (name, comp, t, blocks) in cases {
        let code = catalog::get(name)?;
        let r = colored_design_check(&code, &Composition::parse(comp, code.field().q())?, t)?;
        c.check(r.is_design && r.block_count == blocks, format!("{name} ({comp}) t={t}: design {} with {} blocks", r.is_design, r.block_count));
        parts.push(format!("{name} ({comp}) {t}-design {}", r.block_count));
    }
    c.detail = parts.join("; ");
    Ok(c)
}

fn c8() -> Result<Criterion> {
    let mut c = Criterion::new(8, TITLES[7]);
    let errata = fixtures::table_errata()?;
    let mut parts = Vec::new();
    let mut all_explained = true;
    for t in fixtures::lambda_tables()? {
        let code = catalog::get(&t.code)?;
        let table = lambda_table(&code, &t.compositions(code.field().q())?, t.t)?;
        let cmp = fixtures::compare_table(&t, &table)?;
        let explained = fixtures::explained(&cmp, &errata);
        all_explained &= explained;
        for d in &cmp.diffs {
            c.note(format!("{} {} {}: printed {}, computed {}", t.code, d.row, d.column, d.printed, d.computed));
        }
        c.check(cmp.diffs.is_empty(), format!("{}: {} of {} cells differ", t.code, cmp.diffs.len(), cmp.cells));
        parts.push(format!("{} {}/{}", t.code, cmp.cells - cmp.diffs.len(), cmp.cells));
    }
    c.explained = !c.passed && all_explained;
    c.detail = format!(
        "cells matching print: {}{}",
        parts.join(", "),
        if c.passed {
            String::new()
        } else if all_explained {
            "; every differing cell is a documented erratum".into()
        } else {
            "; some differing cells are unexplained".into()
        }
    );
    Ok(c)
}

fn c9() -> Result<Criterion> {
    let mut c = Criterion::new(9, TITLES[8]);
    let mut parts = Vec::new();
    for (name, tmax) in [("g12", 3), ("h6", 2), ("c8iv", 3)] {
        let code = catalog::get(name)?;
        let whole = SplitSpec::whole(code.length());
        let mut tuples = 0;
        for t in 1..=tmax {
            let r = verify_polarization(&code, &whole, &[t])?;
            c.check(r.independent && r.matches_polarization, format!("{name} |T|={t}: first violation {:?}", r.first_violation));
            tuples += r.tuples_checked;
        }
        parts.push(format!("{name} |T|<={tmax} over {tuples} sets"));
    }
    // Printed complete Jacobi polynomials, after errata, are among the computed ones.
    let mut printed_ok = 0;
    for name in ["c4iv", "g12", "h6", "c8iv"] {
        let code = catalog::get(name)?;
        let f = code.field().clone();
        let text = fixtures::polynomials_for(name).expect("fixture");
        for (section, _) in fixtures::sections(text) {
            let t: usize = section[2..3].parse().map_err(|_| Error::Parse(section.clone()))?;
            let fixed = fixtures::corrected_polynomial(name, &section, &f, coefficient_order(&f))?;
            let raw = printed(name, &section, &f)?;
            let found = itertools::Itertools::combinations(1..=code.length(), t)
                .any(|s| complete_jacobi(&code, &s).map(|p| p == fixed).unwrap_or(false));
            c.check(found, format!("{name} {section}: no reference set gives the printed polynomial"));
            if raw != fixed {
                c.note(format!("{name} {section}: {} monomials differ from print before errata", raw.diff(&fixed).len()));
            }
            printed_ok += found as usize;
        }
    }
    let code = catalog::get("c4")?;
    let raw = printed("c4", "cj", code.field())?;
    c.check(raw == complete_jacobi(&code, &[1, 3])?, "c4 complete Jacobi polynomial at {1,3}");
    // One-coordinate decomposition on every coordinate.
    let mut coords = 0;
    for (name, splits) in [("c4", ["1,2,3,4", "1,2/3,4"]), ("h6", ["1,2,3,4,5,6", "1,2,3/4,5,6"])] {
        let code = catalog::get(name)?;
        for s in splits {
            let spec = SplitSpec::parse(code.length(), s, None)?;
            for (k, b) in spec.blocks().iter().enumerate() {
                for &i in b {
                    let r = verify_decomposition(&code, &spec, k + 1, i)?;
                    c.check(r.holds(), format!("{name} {s} block {} coordinate {i}: {:?}", k + 1, r.first_difference));
                    coords += 1;
                }
            }
        }
    }
    c.detail = format!(
        "polarization = Jacobi for {}; {printed_ok} printed Jacobi polynomials reproduced modulo errata; decomposition holds at {coords} coordinates",
        parts.join(", ")
    );
    Ok(c)
}

fn c10() -> Result<Criterion> {
    let mut c = Criterion::new(10, TITLES[9]);
    let mut reports = 0usize;
    for (name, tmax) in [("c4", 4), ("c2iv", 2), ("c4iv", 4), ("h6", 4), ("c8iv", 4), ("g12", 4)] {
        let code = catalog::get(name)?;
        match homogeneity_scan(&code, tmax) {
            Ok(s) => {
                reports += s.verdicts.iter().map(Vec::len).sum::<usize>();
                c.note(format!("{name}: delta_c = {}, s_c = {}{}", s.delta_c, s.s_c, if s.capped { " (capped)" } else { "" }));
            }
            Err(e) => c.check(false, format!("{name}: {e}")),
        }
    }
    // Split designs over two blocks with every strength vector.
    for (name, split) in [("c4", "1,2/3,4"), ("h6", "1,2,3/4,5,6"), ("c8iv", "1,2,3,4/5,6,7,8")] {
        let code = catalog::get(name)?;
        let spec = SplitSpec::parse(code.length(), split, None)?;
        let mut comps: Vec<Vec<Composition>> = code
            .words()
            .iter()
            .map(|w| spec.blocks().iter().map(|b| crate::codes::composition(code.field(), w, b)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        comps.sort();
        comps.dedup();
        let h = spec.block_size(1);
        for t1 in 0..=h.min(2) {
            for t2 in 0..=spec.block_size(2).min(2) {
                for s in &comps {
                    match generalized_colored_design_check(&code, &spec, s, &[t1, t2]) {
                        Ok(_) => reports += 1,
                        Err(e) => c.check(false, format!("{name} {split} {s:?} t=({t1},{t2}): {e}")),
                    }
                }
            }
        }
    }
    c.detail = format!("{reports} design reports, no mismatch between counting and Jacobi coefficients");
    Ok(c)
}

fn c11() -> Result<Criterion> {
    let mut c = Criterion::new(11, TITLES[10]);
    // Character sums, exhaustively.
    let mut chars = 0;
    for f in [FiniteField::prime(3)?, FiniteField::gf4()] {
        let order = coefficient_order(&f);
        for b in f.elements() {
            let sum = f.character_sum(b, order)?;
            let expect = if b.is_zero() { f.q() as i64 } else { 0 };
            c.check(sum == Cyclotomic::from_int(order, expect), format!("character sum at {}", f.label(b)));
            for a in f.elements() {
                for a2 in f.elements() {
                    let lhs = f.character(b, f.add(a, a2), order)?;
                    let rhs = &f.character(b, a, order)? * &f.character(b, a2, order)?;
                    c.check(lhs == rhs, "character is not additive");
                    chars += 1;
                }
            }
        }
    }
    // Dual indicator on random vectors.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut vectors = 0;
    for e in catalog::builtin() {
        let code = &e.code;
        let f = code.field();
        let dual = code.dual(false)?;
        for _ in 0..50 {
            let v: Vec<FieldElement> = (0..code.length()).map(|_| FieldElement::from_index(rng.gen_range(0..f.q()))).collect();
            let d = code.dual_indicator(&v, order_for(code))?;
            let expect = if dual.contains(&v) { 1 } else { 0 };
            c.check(d == Cyclotomic::from_int(order_for(code), expect), format!("{}: indicator at {v:?}", e.name));
            vectors += 1;
        }
    }
    // Evaluation at ones.
    for e in catalog::builtin() {
        let code = &e.code;
        let size = Cyclotomic::from_int(order_for(code), code.size() as i64);
        let (spec, refs) = halves(code.length())?;
        for p in [cwe(code), scwe_y(code, &spec)?, split_complete_jacobi(code, &refs)?, complete_jacobi(code, &[1])?] {
            c.check(p.evaluate_ones() == size, format!("{}: value at ones", e.name));
        }
    }
    // Group invariance of the enumerators.
    let p3 = g_iii();
    let p4 = g_iv();
    let mut invariant = 0;
    for e in catalog::builtin() {
        let code = &e.code;
        let (spec, _) = halves(code.length())?;
        let gens = match catalog::expected_type(&e.name) {
            Some(ExpectedType::IV) => p4.generators.clone(),
            // The scalar and diagonal generators need length divisible by 12
            // and the all-one vector, so shorter ternary codes use the transform only.
            Some(ExpectedType::III) if code.length() % 12 == 0 => p3.generators.clone(),
            Some(ExpectedType::III) => p3.generators[..1].to_vec(),
            None => continue,
        };
        for g in &gens {
            for p in [cwe(code), scwe(code, &spec)?] {
                c.check(invariants::is_invariant(g, &p)?, format!("{}: not fixed by a generator", e.name));
                invariant += 1;
            }
        }
    }
    c.detail = format!(
        "{chars} character products, {vectors} dual indicators, evaluation at ones on {} codes, {invariant} generator invariances",
        catalog::names().len()
    );
    Ok(c)
}

/// Runs everything and renders one line per criterion.
pub fn report(criteria: &[Criterion]) -> String {
    let mut s = String::new();
    for c in criteria {
        s.push_str(&c.line());
        s.push('\n');
        for n in &c.notes {
            s.push_str("    ");
            s.push_str(n);
            s.push('\n');
        }
    }
    let failed = criteria.iter().filter(|c| !c.passed).count();
    s.push_str(&format!("{} of {} criteria pass\n", criteria.len() - failed, criteria.len()));
    s
}

/// Per-criterion pass flags, for JSON summaries.
pub fn summary(criteria: &[Criterion]) -> BTreeMap<u8, bool> {
    criteria.iter().map(|c| (c.id, c.passed)).collect()
}
