//! JSON form: `[{"monomial": [[block, "x", "s2", exp], ...], "coeff": "3"}, ...]`.

use serde::{Deserialize, Serialize};

use super::{Kind, Monomial, Polynomial, VarKey};
use crate::algebra::{Cyclotomic, FiniteField};
use crate::error::{Error, Result};

/// One serialized term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub monomial: Vec<(u16, String, String, u32)>,
    pub coeff: String,
}

impl Polynomial {
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(m, c)| JsonTerm {
                monomial: m
                    .iter()
                    .map(|&(k, e)| (k.block, k.kind.letter().to_string(), self.field.label(k.elem).to_string(), e))
                    .collect(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_terms()).expect("terms always serialize")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_json_terms()).expect("terms always serialize")
    }

    pub fn from_json_terms(field: &FiniteField, order: u32, terms: &[JsonTerm]) -> Result<Polynomial> {
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let mut pairs = Vec::with_capacity(t.monomial.len());
            for (block, kind, label, e) in &t.monomial {
                let kind = match kind.as_str() {
                    "x" => Kind::X,
                    "y" => Kind::Y,
                    other => return Err(Error::Parse(format!("unknown variable kind `{other}`"))),
                };
                pairs.push((VarKey::new(*block, kind, field.parse_label(label)?), *e));
            }
            out.push((Monomial::from_pairs(pairs), Cyclotomic::parse(order, &t.coeff)?));
        }
        Ok(Polynomial::from_terms(field, order, out))
    }

    pub fn from_json(field: &FiniteField, order: u32, s: &str) -> Result<Polynomial> {
        let terms: Vec<JsonTerm> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_terms(field, order, &terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout() {
        let f = FiniteField::gf4();
        let p = Polynomial::parse(&f, 12, "3*x[2]s2^2 + 1/2*(z)*y1").unwrap();
        let v: serde_json::Value = serde_json::from_str(&p.to_json()).unwrap();
        assert_eq!(v[0]["monomial"][0], serde_json::json!([1, "y", "1", 1]));
        assert_eq!(v[0]["coeff"], "1/2*z");
        assert_eq!(v[1]["monomial"][0], serde_json::json!([2, "x", "s2", 2]));
        assert_eq!(Polynomial::from_json(&f, 12, &p.to_json()).unwrap(), p);
        assert!(Polynomial::from_json(&f, 12, "[{\"monomial\": [[1, \"w\", \"0\", 1]], \"coeff\": \"1\"}]").is_err());
    }
}
