//! Plain-text rendering and parsing of polynomials.
//!
//! Variables print as `x0`, `ys2`, or `x[2]1` when several blocks occur.
//! Terms print as `3*x0*x1^2*x2`; non-rational coefficients are wrapped in
//! parentheses and written in `z` = ζ_N.

use std::collections::HashMap;

use num_traits::{One, Signed};

use super::{Kind, Monomial, Polynomial, VarKey};
use crate::algebra::cyclotomic::parse_rational;
use crate::algebra::{Cyclotomic, FiniteField, Rational};
use crate::error::{Error, Result};

pub(super) fn default_name(field: &FiniteField, v: &VarKey, multi_block: bool) -> String {
    if multi_block {
        format!("{}[{}]{}", v.kind.letter(), v.block, field.label(v.elem))
    } else {
        format!("{}{}", v.kind.letter(), field.label(v.elem))
    }
}

fn pow_str(name: &str, e: u32) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}

impl Polynomial {
    /// Text form with the default variable names.
    pub fn render(&self) -> String {
        let multi = self.multi_block();
        let field = self.field.clone();
        self.render_with(|v| default_name(&field, v, multi))
    }

    /// Text form with caller-chosen variable names.
    ///
    /// Terms are sorted by descending total degree, then descending
    /// exponent vector over the variables ordered x-before-y, block, element.
    pub fn render_with(&self, name: impl Fn(&VarKey) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut vars: Vec<VarKey> = self.variables().into_iter().collect();
        vars.sort_by_key(|v| v.render_key());
        let pos: HashMap<VarKey, usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut rows: Vec<(u32, Vec<u32>, &Monomial, &Cyclotomic)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut dense = vec![0u32; vars.len()];
                for &(k, e) in m.iter() {
                    dense[pos[&k]] = e;
                }
                (m.degree(), dense, m, c)
            })
            .collect();
        rows.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1.cmp(&a.1)));
        let mut out = String::new();
        for (i, (_, dense, _, c)) in rows.iter().enumerate() {
            let factors: Vec<String> = dense
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(j, &e)| pow_str(&name(&vars[j]), e))
                .collect();
            let (neg, coef) = coefficient_text(c);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (coef, factors.is_empty()) {
                (None, true) => out.push('1'),
                (None, false) => out.push_str(&factors.join("*")),
                (Some(c), true) => out.push_str(&c),
                (Some(c), false) => {
                    out.push_str(&c);
                    out.push('*');
                    out.push_str(&factors.join("*"));
                }
            }
        }
        out
    }

    /// A single monomial with default names.
    pub fn render_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let multi = self.multi_block();
        let mut ks: Vec<&(VarKey, u32)> = m.iter().collect();
        ks.sort_by_key(|(k, _)| k.render_key());
        ks.iter()
            .map(|(k, e)| pow_str(&default_name(&self.field, k, multi), *e))
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Parses sums of products of numbers, `z`, variables and parenthesized
    /// subexpressions, with `^` powers and optional `*`.
    pub fn parse(field: &FiniteField, order: u32, s: &str) -> Result<Polynomial> {
        let mut p = Parser { field, order, chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
        let out = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }
}

/// Sign and magnitude text of a coefficient; `None` for magnitude one.
fn coefficient_text(c: &Cyclotomic) -> (bool, Option<String>) {
    match c.to_rational() {
        Some(r) => {
            let a: Rational = r.abs();
            (r.is_negative(), (!a.is_one()).then(|| a.to_string()))
        }
        None => (false, Some(format!("({c})"))),
    }
}

struct Parser<'a> {
    field: &'a FiniteField,
    order: u32,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        let rest: String = self.chars[self.pos.min(self.chars.len())..].iter().collect();
        Error::Parse(format!("{msg} at `{rest}`"))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.field, self.order);
        let mut first = true;
        loop {
            let neg = if self.eat('-') {
                true
            } else {
                let plus = self.eat('+');
                if !plus && !first {
                    break;
                }
                false
            };
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            first = false;
            if !matches!(self.peek(), Some('+') | Some('-')) {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if matches!(self.peek(), Some(c) if c == '(' || c == 'x' || c == 'y' || c == 'z' || c.is_ascii_digit()) {
                acc = &acc * &self.factor()?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn integer(&mut self) -> Result<i128> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("number too large"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some('z') => {
                self.pos += 1;
                Ok(Polynomial::constant(self.field, Cyclotomic::zeta(self.order)))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                self.integer()?;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    self.integer()?;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                let r = parse_rational(&s).ok_or_else(|| self.err("bad rational"))?;
                Ok(Polynomial::constant(self.field, Cyclotomic::from_rational(self.order, r)))
            }
            Some(c @ ('x' | 'y')) => {
                self.pos += 1;
                let kind = if c == 'x' { Kind::X } else { Kind::Y };
                let block = if self.eat('[') {
                    let b = self.integer()?;
                    if !self.eat(']') {
                        return Err(self.err("expected `]`"));
                    }
                    u16::try_from(b).map_err(|_| self.err("block index too large"))?
                } else {
                    1
                };
                self.eat('_');
                // Longest matching element label.
                let mut best = None;
                for a in self.field.elements() {
                    let l: Vec<char> = self.field.label(a).chars().collect();
                    if self.chars[self.pos..].starts_with(&l) && best.map_or(true, |(_, n)| l.len() > n) {
                        best = Some((a, l.len()));
                    }
                }
                let (elem, n) = best.ok_or_else(|| self.err("expected an element label"))?;
                self.pos += n;
                Ok(Polynomial::var(self.field, self.order, VarKey::new(block, kind, elem)))
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldElement;

    #[test]
    fn render_examples() {
        let f = FiniteField::prime(3).unwrap();
        let p = Polynomial::parse(&f, 12, "3 x0 x1^2 x2 + x0^4 - x0*x2^3").unwrap();
        assert_eq!(p.render(), "x0^4 + 3*x0*x1^2*x2 - x0*x2^3");
        let q = Polynomial::parse(&f, 12, "x[2]0*y[1]1").unwrap();
        assert_eq!(q.render(), "x[2]0*y[1]1");
        assert_eq!(Polynomial::parse(&f, 12, "1/3*(z + z^11)^2").unwrap().render(), "1");
        let r = Polynomial::parse(&f, 12, "(z^4)*x0").unwrap();
        assert_eq!(r.render(), "(-1 + z^2)*x0");
        assert_eq!(Polynomial::parse(&f, 12, "(x0+x1)(x0-x1)").unwrap().render(), "x0^2 - x1^2");
    }

    #[test]
    fn gf4_labels() {
        let f = FiniteField::gf4();
        let p = Polynomial::parse(&f, 12, "xs2*ys^2 + 2*x1").unwrap();
        let s2 = FieldElement::from_index(3);
        assert!(p.variables().contains(&VarKey::x(1, s2)));
        assert_eq!(p.render(), "xs2*ys^2 + 2*x1");
    }

    #[test]
    fn parse_errors() {
        let f = FiniteField::prime(3).unwrap();
        for bad in ["x5", "x0 +", "(x0", "x0^", "w", "x[a]0"] {
            assert!(matches!(Polynomial::parse(&f, 12, bad), Err(Error::Parse(_))), "{bad}");
        }
    }
}
