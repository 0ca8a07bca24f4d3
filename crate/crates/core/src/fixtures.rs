//! Printed reference data bundled with the crate, and comparison helpers.
//!
//! Polynomial fixtures are `@ name` sections whose lines concatenate into
//! one polynomial in the text syntax of [`Polynomial::parse`]. The λ table
//! fixture and the errata list have their own line formats, described in
//! the files themselves.

use itertools::Itertools;
use serde::Serialize;

use crate::algebra::FiniteField;
use crate::codes::Composition;
use crate::designs::LambdaTable;
use crate::error::{Error, Result};
use crate::polyring::Polynomial;

pub const C4: &str = include_str!("../fixtures/c4.txt");
pub const G12: &str = include_str!("../fixtures/g12.txt");
pub const C4IV: &str = include_str!("../fixtures/c4iv.txt");
pub const H6: &str = include_str!("../fixtures/h6.txt");
pub const C8IV: &str = include_str!("../fixtures/c8iv.txt");
pub const LAMBDA_TABLES: &str = include_str!("../fixtures/lambda_tables.txt");
pub const ERRATA: &str = include_str!("../fixtures/errata.txt");
pub const MOLIEN: &str = include_str!("../fixtures/molien.txt");

/// Polynomial fixture text for a catalog code.
pub fn polynomials_for(code: &str) -> Option<&'static str> {
    match code {
        "c4" => Some(C4),
        "g12" => Some(G12),
        "c4iv" => Some(C4IV),
        "h6" => Some(H6),
        "c8iv" => Some(C8IV),
        _ => None,
    }
}

/// `(name, body)` pairs of a sectioned file, with section lines concatenated.
pub fn sections(text: &str) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('@') {
            out.push((name.trim().to_string(), String::new()));
        } else if let Some((_, body)) = out.last_mut() {
            if !body.is_empty() {
                body.push('\n');
            }
            body.push_str(line);
        }
    }
    out
}

/// A named printed polynomial.
pub fn polynomial(text: &str, name: &str, field: &FiniteField, order: u32) -> Result<Polynomial> {
    let body = sections(text)
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, b)| b)
        .ok_or_else(|| Error::Parse(format!("no fixture section `{name}`")))?;
    Polynomial::parse(field, order, &body.replace('\n', ""))
}

/// One printed term and its correction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub code: String,
    pub section: String,
    pub printed: String,
    pub corrected: String,
}

/// Polynomial errata, `<code> <section>: <printed term> => <corrected term>`.
pub fn errata() -> Result<Vec<Erratum>> {
    let mut out = Vec::new();
    for line in ERRATA.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') || line.starts_with("table ") {
            continue;
        }
        let bad = || Error::Parse(format!("bad erratum `{line}`"));
        let (head, body) = line.split_once(':').ok_or_else(bad)?;
        let (code, section) = head.trim().split_once(' ').ok_or_else(bad)?;
        let (printed, corrected) = body.split_once("=>").ok_or_else(bad)?;
        out.push(Erratum {
            code: code.to_string(),
            section: section.trim().to_string(),
            printed: printed.trim().to_string(),
            corrected: corrected.trim().to_string(),
        });
    }
    Ok(out)
}

/// A printed polynomial with its errata applied: each printed term is
/// subtracted and its correction added.
pub fn corrected_polynomial(code: &str, name: &str, field: &FiniteField, order: u32) -> Result<Polynomial> {
    let text = polynomials_for(code).ok_or_else(|| Error::UnknownCode(code.to_string()))?;
    let mut p = polynomial(text, name, field, order)?;
    for e in errata()?.into_iter().filter(|e| e.code == code && e.section == name) {
        p = p
            .try_sub(&Polynomial::parse(field, order, &e.printed)?)?
            .try_add(&Polynomial::parse(field, order, &e.corrected)?)?;
    }
    Ok(p)
}

/// A printed λ table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedTable {
    pub code: String,
    pub t: usize,
    pub compositions: Vec<String>,
    pub columns: Vec<String>,
    /// `(row label, values)`; labels are `i^j`, `max^j` or `min^j`.
    pub rows: Vec<(String, Vec<u64>)>,
}

impl PrintedTable {
    pub fn compositions(&self, q: usize) -> Result<Vec<Composition>> {
        self.compositions.iter().map(|c| Composition::parse(c, q)).collect()
    }

    fn row(&self, label: &str) -> Option<&Vec<u64>> {
        self.rows.iter().find(|(l, _)| l == label).map(|(_, r)| r)
    }
}

/// Parses the λ table fixture. Tables printed in several column chunks are joined.
pub fn lambda_tables() -> Result<Vec<PrintedTable>> {
    let mut out: Vec<PrintedTable> = Vec::new();
    for line in LAMBDA_TABLES.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || Error::Parse(format!("bad table line `{line}`"));
        if let Some(head) = line.strip_prefix('@') {
            let mut parts = head.split_whitespace();
            let code = parts.next().ok_or_else(bad)?.to_string();
            let (mut t, mut comps) = (None, Vec::new());
            for p in parts {
                match p.split_once('=') {
                    Some(("t", v)) => t = Some(v.parse().map_err(|_| bad())?),
                    Some(("comps", v)) => comps = v.split(';').map(str::to_string).collect(),
                    _ => return Err(bad()),
                }
            }
            out.push(PrintedTable {
                code,
                t: t.ok_or_else(bad)?,
                compositions: comps,
                columns: Vec::new(),
                rows: Vec::new(),
            });
            continue;
        }
        let table = out.last_mut().ok_or_else(bad)?;
        let mut parts = line.split_whitespace();
        let label = parts.next().ok_or_else(bad)?;
        if label == "columns" {
            table.columns.extend(parts.map(str::to_string));
        } else {
            let values: Vec<u64> = parts.map(|v| v.parse().map_err(|_| bad())).collect::<Result<_>>()?;
            match table.rows.iter_mut().find(|(l, _)| l == label) {
                Some((_, r)) => r.extend(values),
                None => table.rows.push((label.to_string(), values)),
            }
        }
    }
    for t in &out {
        if t.rows.iter().any(|(_, r)| r.len() != t.columns.len()) {
            return Err(Error::Parse(format!("table for {} has ragged rows", t.code)));
        }
    }
    Ok(out)
}

/// A table cell where printed and computed values differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellDiff {
    pub row: String,
    pub column: String,
    pub printed: u64,
    pub computed: u64,
}

/// Outcome of comparing a printed table with a computed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableComparison {
    pub code: String,
    pub cells: usize,
    /// Printed group `i` of composition `j` matched to computed group `group_map[j][i-1]`.
    pub group_map: Vec<Vec<usize>>,
    pub diffs: Vec<CellDiff>,
}

/// Compares cell by cell. Printed groups are matched to computed groups by
/// the bijection with the fewest differing cells, since group labels carry
/// no meaning of their own.
pub fn compare_table(printed: &PrintedTable, computed: &LambdaTable) -> Result<TableComparison> {
    if printed.columns != computed.columns {
        return Err(Error::Parse(format!(
            "column mismatch for {}: printed {:?}, computed {:?}",
            printed.code, printed.columns, computed.columns
        )));
    }
    if printed.compositions.len() != computed.compositions.len() {
        return Err(Error::Parse(format!("composition count mismatch for {}", printed.code)));
    }
    let mut diffs = Vec::new();
    let mut group_map = Vec::new();
    let mut cells = 0;
    let push_diffs = |row: String, p: &[u64], c: &[u64], diffs: &mut Vec<CellDiff>| {
        for ((col, &a), &b) in printed.columns.iter().zip(p).zip(c) {
            if a != b {
                diffs.push(CellDiff { row: row.clone(), column: col.clone(), printed: a, computed: b });
            }
        }
    };
    for (j, block) in computed.compositions.iter().enumerate() {
        let j1 = j + 1;
        let groups: Vec<&Vec<u64>> =
            (1..).map_while(|i| printed.row(&format!("{i}^{j1}"))).collect();
        let empty = vec![0u64; printed.columns.len()];
        let width = groups.len().max(block.lambda.len());
        let pick = |k: usize, v: &[Vec<u64>]| v.get(k).cloned().unwrap_or_else(|| empty.clone());
        let computed_rows: Vec<Vec<u64>> = (0..width).map(|k| pick(k, &block.lambda)).collect();
        let printed_rows: Vec<Vec<u64>> = (0..width).map(|k| groups.get(k).map(|r| r.to_vec()).unwrap_or_else(|| empty.clone())).collect();
        let cost = |perm: &[usize]| -> usize {
            perm.iter()
                .enumerate()
                .map(|(i, &k)| printed_rows[i].iter().zip(&computed_rows[k]).filter(|(a, b)| a != b).count())
                .sum()
        };
        let best = (0..width).permutations(width).min_by_key(|p| cost(p)).unwrap_or_default();
        for (i, &k) in best.iter().enumerate() {
            cells += printed.columns.len();
            push_diffs(format!("lambda_{}^{j1}", i + 1), &printed_rows[i], &computed_rows[k], &mut diffs);
        }
        group_map.push(best);
        for (name, ours) in [("max", &block.lambda_max), ("min", &block.lambda_min)] {
            let row = printed
                .row(&format!("{name}^{j1}"))
                .ok_or_else(|| Error::Parse(format!("table for {} lacks {name}^{j1}", printed.code)))?;
            cells += printed.columns.len();
            push_diffs(format!("lambda_{name}^{j1}"), row, ours, &mut diffs);
        }
    }
    Ok(TableComparison { code: printed.code.clone(), cells, group_map, diffs })
}

/// A documented disagreement with a printed table cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableErratum {
    pub code: String,
    pub row: String,
    pub column: String,
    pub printed: u64,
    pub corrected: u64,
}

/// Table errata, `table <code> <row> <column>: <printed> => <corrected>`.
pub fn table_errata() -> Result<Vec<TableErratum>> {
    let mut out = Vec::new();
    for line in ERRATA.lines().map(str::trim) {
        let Some(rest) = line.strip_prefix("table ") else { continue };
        let bad = || Error::Parse(format!("bad table erratum `{line}`"));
        let (head, body) = rest.split_once(':').ok_or_else(bad)?;
        let (code, row, column) = head.split_whitespace().collect_tuple().ok_or_else(bad)?;
        let (p, c) = body.split_once("=>").ok_or_else(bad)?;
        out.push(TableErratum {
            code: code.to_string(),
            row: row.to_string(),
            column: column.to_string(),
            printed: p.trim().parse().map_err(|_| bad())?,
            corrected: c.trim().parse().map_err(|_| bad())?,
        });
    }
    Ok(out)
}

/// Whether every difference in a comparison is a documented erratum.
pub fn explained(cmp: &TableComparison, errata: &[TableErratum]) -> bool {
    cmp.diffs.iter().all(|d| {
        errata.iter().any(|e| {
            e.code == cmp.code && e.row == d.row && e.column == d.column && e.printed == d.printed && e.corrected == d.computed
        })
    })
}

/// Printed Molien coefficients: `(series, u-degree, v-degree, value)`.
pub fn molien_coefficients() -> Result<Vec<(String, u32, u32, i64)>> {
    let mut out = Vec::new();
    for (name, body) in sections(MOLIEN) {
        for line in body.lines() {
            let bad = || Error::Parse(format!("bad Molien line `{line}` in {name}"));
            let (i, j, c) = line.split_whitespace().collect_tuple().ok_or_else(bad)?;
            out.push((
                name.clone(),
                i.parse().map_err(|_| bad())?,
                j.parse().map_err(|_| bad())?,
                c.parse().map_err(|_| bad())?,
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::enumerators::{coefficient_order, complete_jacobi};

    #[test]
    fn tables_parse() {
        let t = lambda_tables().unwrap();
        assert_eq!(t.iter().map(|t| t.code.as_str()).collect::<Vec<_>>(), ["g12", "c4iv", "h6", "c8iv"]);
        assert_eq!(t[0].columns.len(), 15);
        assert_eq!(t[3].columns.len(), 35);
        assert_eq!(t[3].row("max^2").unwrap()[t[3].columns.iter().position(|c| c == "01ss2").unwrap()], 96);
    }

    #[test]
    fn errata_apply_to_printed_polynomials() {
        let g = catalog::get("g12").unwrap();
        let f = g.field().clone();
        let p = corrected_polynomial("g12", "cj3", &f, coefficient_order(&f)).unwrap();
        assert_eq!(p, complete_jacobi(&g, &[1, 2, 3]).unwrap());
        assert!(!errata().unwrap().is_empty());
    }
}
