//! Named codes: the built-in catalog and user catalog files.
//!
//! A catalog file holds blocks of the form
//!
//! ```text
//! code <name> q=<q> n=<n>
//! <row of n element labels>
//! ...
//! ```
//!
//! Lines starting with `#` and blank lines are ignored.

use std::path::Path;

use crate::algebra::FiniteField;
use crate::codes::LinearCode;
use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../data/catalog.txt");

/// A named code.
#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub code: LinearCode,
}

/// Self-duality type a built-in code is expected to have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpectedType {
    III,
    IV,
}

/// Parses catalog text.
pub fn parse(text: &str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    let mut current: Option<(String, FiniteField, usize, Vec<Vec<String>>)> = None;
    let finish = |c: Option<(String, FiniteField, usize, Vec<Vec<String>>)>, out: &mut Vec<Entry>| -> Result<()> {
        if let Some((name, field, n, rows)) = c {
            let rows: Vec<Vec<_>> = rows
                .iter()
                .map(|r| r.iter().map(|l| field.parse_label(l)).collect::<Result<Vec<_>>>())
                .collect::<Result<_>>()?;
            out.push(Entry { name, code: LinearCode::from_generator(&field, &rows, n)? });
        }
        Ok(())
    };
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: &str| Error::Parse(format!("catalog line {}: {msg}", lineno + 1));
        if let Some(rest) = line.strip_prefix("code ") {
            finish(current.take(), &mut out)?;
            let mut parts = rest.split_whitespace();
            let name = parts.next().ok_or_else(|| bad("missing code name"))?.to_string();
            let (mut q, mut n) = (None, None);
            for p in parts {
                match p.split_once('=') {
                    Some(("q", v)) => q = Some(v.parse::<u32>().map_err(|_| bad("bad q"))?),
                    Some(("n", v)) => n = Some(v.parse::<usize>().map_err(|_| bad("bad n"))?),
                    _ => return Err(bad(&format!("unexpected `{p}`"))),
                }
            }
            let field = FiniteField::with_order(q.ok_or_else(|| bad("missing q="))?)?;
            current = Some((name, field, n.ok_or_else(|| bad("missing n="))?, Vec::new()));
        } else {
            let (_, _, n, rows) = current.as_mut().ok_or_else(|| bad("generator row before any `code` header"))?;
            let row: Vec<String> = line.split_whitespace().map(str::to_string).collect();
            if row.len() != *n {
                return Err(bad(&format!("row has {} entries, expected {n}", row.len())));
            }
            rows.push(row);
        }
    }
    finish(current, &mut out)?;
    Ok(out)
}

/// Reads a catalog file.
pub fn load_file(path: &Path) -> Result<Vec<Entry>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse(&text)
}

/// The built-in codes in file order.
pub fn builtin() -> Vec<Entry> {
    parse(BUILTIN).expect("built-in catalog parses")
}

pub fn names() -> Vec<String> {
    builtin().into_iter().map(|e| e.name).collect()
}

/// A built-in code by name.
pub fn get(name: &str) -> Result<LinearCode> {
    builtin()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.code)
        .ok_or_else(|| Error::UnknownCode(name.to_string()))
}

/// The type asserted for a built-in code.
pub fn expected_type(name: &str) -> Option<ExpectedType> {
    match name {
        "c4" | "g12" => Some(ExpectedType::III),
        "c2iv" | "c4iv" | "h6" | "c8iv" => Some(ExpectedType::IV),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::Composition;
    use crate::enumerators::cwe;
    use crate::polyring::Polynomial;

    #[test]
    fn builtin_codes_have_their_types() {
        for e in builtin() {
            let c = e.code.classify();
            match expected_type(&e.name).unwrap() {
                ExpectedType::III => assert!(c.type3, "{}", e.name),
                ExpectedType::IV => assert!(c.type4, "{}", e.name),
            }
            assert_eq!(e.code.dimension() * 2, e.code.length(), "{}", e.name);
        }
        assert_eq!(names(), ["c4", "g12", "c2iv", "c4iv", "h6", "c8iv"]);
    }

    #[test]
    fn golay_compositions() {
        let g = get("g12").unwrap();
        let f = g.field().clone();
        assert!(g.contains(&vec![crate::algebra::FieldElement::ONE; 12]));
        let w = cwe(&g);
        let coef = |s: &str| w.coefficient_of(Polynomial::parse(&f, 12, s).unwrap().terms().next().unwrap().0).to_integer();
        assert_eq!(coef("x0^6x1^3x2^3"), Some(220));
        assert_eq!(coef("x0^6x1^6"), Some(22));
        assert_eq!(g.compositions().len(), 9);
        assert!(g.compositions().contains(&Composition::new(vec![6, 3, 3])));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse("1 0 1\n"), Err(Error::Parse(_))));
        assert!(matches!(parse("code a q=3 n=3\n1 0\n"), Err(Error::Parse(_))));
        assert!(matches!(parse("code a q=6 n=2\n1 0\n"), Err(Error::NotPrime(6))));
        assert!(matches!(parse("code a q=4 n=2\n1 t\n"), Err(Error::Parse(_))));
        assert!(matches!(get("nope"), Err(Error::UnknownCode(_))));
        let e = parse("code a q=2 n=3\n1 1 0\n0 1 1\n").unwrap();
        assert_eq!(e[0].code.size(), 4);
    }
}
