//! Finite fields GF(p^f) in a polynomial basis over GF(p).
//!
//! An element `a = a_0 + a_1 λ + ... + a_{f-1} λ^{f-1}` is stored as its
//! canonical index `a_0 + a_1 p + ... + a_{f-1} p^{f-1}`. This index order
//! is the canonical element order used everywhere (zero first, then
//! lexicographic on the coefficients with the top coefficient most
//! significant), so for GF(4) with `λ^2 = λ + 1` it reads `0, 1, s, s2`.

use std::fmt;
use std::sync::Arc;

use super::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

/// An element of a [`FiniteField`], identified by its canonical index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn from_index(index: usize) -> Self {
        FieldElement(index as u16)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug)]
struct Tables {
    p: u32,
    f: u32,
    q: usize,
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    labels: Vec<String>,
}

/// GF(p^f) together with its arithmetic tables. Cloning is cheap.
#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<Tables>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}", self.q())?;
        if self.degree() > 1 {
            write!(f, ", modulus {:?}", self.inner.modulus)?;
        }
        write!(f, ")")
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FiniteField {}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `(p, f)` with `q = p^f`, if `q` is a prime power.
fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut f = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        f += 1;
    }
    (r == 1).then_some((p, f))
}

fn digits(mut index: usize, p: u32, f: u32) -> Vec<u32> {
    (0..f)
        .map(|_| {
            let d = (index % p as usize) as u32;
            index /= p as usize;
            d
        })
        .collect()
}

fn from_digits(d: &[u32], p: u32) -> usize {
    d.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize)
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p), coefficients low-to-high.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dm;
            for (k, &mk) in m[..dm].iter().enumerate() {
                let sub = (lead * mk) % p;
                r[shift + k] = (r[shift + k] + p - sub) % p;
            }
        }
    }
    r.resize(dm, 0);
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    out
}

impl FiniteField {
    /// Builds GF(p^f) from a monic modulus given low-to-high (`[1, 1, 1]` is `x^2 + x + 1`).
    ///
    /// For `f > 1` the modulus must be irreducible and its root primitive;
    /// both are checked exhaustively.
    pub fn new(p: u32, f: u32, modulus: &[u32]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if f == 0 {
            return Err(Error::BadModulus("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(f).unwrap_or(u64::MAX);
        if q > 256 {
            return Err(Error::FieldTooLarge(q));
        }
        if modulus.len() != f as usize + 1 {
            return Err(Error::BadModulus(format!(
                "expected {} coefficients for degree {f}, got {}",
                f + 1,
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadModulus(format!("coefficients must lie in [0, {p})")));
        }
        if modulus[f as usize] != 1 {
            return Err(Error::BadModulus("leading coefficient must be 1".into()));
        }
        let q = q as usize;
        if f > 1 {
            if !Self::irreducible(p, modulus) {
                return Err(Error::NotIrreducible(modulus.to_vec()));
            }
        }

        let elems: Vec<Vec<u32>> = (0..q).map(|i| digits(i, p, f)).collect();
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                let s: Vec<u32> = elems[a].iter().zip(&elems[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = from_digits(&s, p) as u16;
                let prod = poly_rem(&poly_mul(&elems[a], &elems[b], p), modulus, p);
                mul[a * q + b] = from_digits(&prod, p) as u16;
            }
        }
        let neg: Vec<u16> = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u16)
            .collect();
        let mut inv = vec![0u16; q];
        for a in 1..q {
            inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u16;
        }

        // Labels: integers for prime fields, powers of the root λ otherwise.
        let mut labels = vec![String::new(); q];
        if f == 1 {
            for (a, l) in labels.iter_mut().enumerate() {
                *l = a.to_string();
            }
        } else {
            let lambda = p as usize; // digits (0, 1, 0, ...)
            labels[0] = "0".into();
            let mut x = 1usize;
            let mut order = 0usize;
            for k in 0..q - 1 {
                if k > 0 && x == 1 {
                    break;
                }
                labels[x] = match k {
                    0 => "1".into(),
                    1 => "s".into(),
                    _ => format!("s{k}"),
                };
                order += 1;
                x = mul[x * q + lambda] as usize;
            }
            if order != q - 1 {
                return Err(Error::NotPrimitive(modulus.to_vec()));
            }
        }

        Ok(FiniteField {
            inner: Arc::new(Tables {
                p,
                f,
                q,
                modulus: modulus.to_vec(),
                add,
                mul,
                neg,
                inv,
                labels,
            }),
        })
    }

    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, &[0, 1])
    }

    /// GF(4) with `s^2 = s + 1`.
    pub fn gf4() -> Self {
        Self::new(2, 2, &[1, 1, 1]).expect("x^2 + x + 1 is primitive over GF(2)")
    }

    /// GF(q) with the first primitive modulus in lexicographic order of its
    /// low coefficients; for q = 4 this is `x^2 + x + 1`.
    pub fn with_order(q: u32) -> Result<Self> {
        let (p, f) = prime_power(q).ok_or(Error::NotPrime(q))?;
        if f == 1 {
            return Self::prime(p);
        }
        if (q as u64) > 256 {
            return Err(Error::FieldTooLarge(q as u64));
        }
        for low in 0..(p as usize).pow(f) {
            let mut m = digits(low, p, f);
            m.push(1);
            if let Ok(field) = Self::new(p, f, &m) {
                return Ok(field);
            }
        }
        unreachable!("every finite field has a primitive modulus")
    }

    fn irreducible(p: u32, modulus: &[u32]) -> bool {
        let f = modulus.len() - 1;
        // Trial division by every monic polynomial of degree 1..=f/2.
        for d in 1..=f / 2 {
            let count = (p as usize).pow(d as u32);
            for low in 0..count {
                let mut divisor = digits(low, p, d as u32);
                divisor.push(1);
                if poly_rem(modulus, &divisor, p).iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.f
    }

    /// Number of elements q.
    pub fn q(&self) -> usize {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q()).map(FieldElement::from_index)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.q()).map(FieldElement::from_index)
    }

    /// Basis coefficients `(a_0, ..., a_{f-1})`.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        digits(a.index(), self.inner.p, self.inner.f)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.inner.f as usize || coeffs.iter().any(|&c| c >= self.inner.p) {
            return Err(Error::DimensionMismatch(format!(
                "{coeffs:?} is not a coefficient vector of {self:?}"
            )));
        }
        Ok(FieldElement::from_index(from_digits(coeffs, self.inner.p)))
    }

    /// The image of an integer under Z -> GF(p) -> GF(q).
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement::from_index(n.rem_euclid(self.inner.p as i64) as usize)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.inner.add[a.index() * self.q() + b.index()])
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.inner.neg[a.index()])
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.inner.mul[a.index() * self.q() + b.index()])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(FieldElement(self.inner.inv[a.index()]))
        }
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn is_square_order(&self) -> bool {
        self.inner.f % 2 == 0
    }

    /// `sqrt(q)` when q is an even power of p.
    pub fn sqrt_q(&self) -> Result<usize> {
        if self.is_square_order() {
            Ok((self.inner.p as usize).pow(self.inner.f / 2))
        } else {
            Err(Error::NotSquareOrder(self.q()))
        }
    }

    /// Conjugation `a ↦ a^{sqrt(q)}`.
    pub fn frobenius_conj(&self, a: FieldElement) -> Result<FieldElement> {
        let r = self.sqrt_q()?;
        Ok(self.pow(a, r as u64))
    }

    /// Printed name of an element: the integer for prime fields, else `0`, `1`, `s`, `s2`, ...
    pub fn label(&self, a: FieldElement) -> &str {
        &self.inner.labels[a.index()]
    }

    pub fn parse_label(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        let s = match s {
            "s^2" | "s²" => "s2",
            other => other,
        };
        self.inner
            .labels
            .iter()
            .position(|l| l == s)
            .map(FieldElement::from_index)
            .ok_or_else(|| Error::Parse(format!("`{s}` is not an element label of {self:?}")))
    }

    /// Exponent `Σ a_i b_i mod p` of the character `χ_b(a)`.
    pub fn character_exponent(&self, b: FieldElement, a: FieldElement) -> u32 {
        let p = self.inner.p;
        self.coeffs(a)
            .iter()
            .zip(self.coeffs(b))
            .fold(0, |acc, (x, y)| (acc + x * y) % p)
    }

    /// `χ_b(a) = ζ_p^{Σ a_i b_i}` as an element of Q(ζ_N).
    pub fn character(&self, b: FieldElement, a: FieldElement, order: u32) -> Result<Cyclotomic> {
        let p = self.inner.p;
        if order % p != 0 {
            return Err(Error::IncompatibleCyclotomicOrder { left: order, right: p });
        }
        let e = self.character_exponent(b, a);
        Ok(Cyclotomic::zeta_pow(order, (e * (order / p)) as i64))
    }

    /// `Σ_{b ∈ F_q} χ_1(a b)`: `q` for `a = 0`, zero otherwise.
    pub fn character_sum(&self, a: FieldElement, order: u32) -> Result<Cyclotomic> {
        let mut acc = Cyclotomic::zero(order);
        for b in self.elements() {
            acc = &acc + &self.character(FieldElement::ONE, self.mul(a, b), order)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> FiniteField {
        FiniteField::prime(3).unwrap()
    }

    #[test]
    fn with_order_picks_defaults() {
        assert_eq!(FiniteField::with_order(4).unwrap(), FiniteField::gf4());
        assert_eq!(FiniteField::with_order(3).unwrap(), FiniteField::prime(3).unwrap());
        assert_eq!(FiniteField::with_order(9).unwrap().q(), 9);
        assert!(FiniteField::with_order(6).is_err());
        assert!(FiniteField::with_order(1).is_err());
    }

    #[test]
    fn prime_field_elements() {
        let f = FiniteField::new(3, 1, &[0, 1]).unwrap();
        assert_eq!(f.q(), 3);
        let labels: Vec<_> = f.elements().map(|a| f.label(a).to_string()).collect();
        assert_eq!(labels, ["0", "1", "2"]);
    }

    #[test]
    fn gf4_labels_and_relation() {
        let f = FiniteField::gf4();
        let labels: Vec<_> = f.elements().map(|a| f.label(a).to_string()).collect();
        assert_eq!(labels, ["0", "1", "s", "s2"]);
        let s = f.parse_label("s").unwrap();
        let s2 = f.parse_label("s2").unwrap();
        assert_eq!(f.mul(s, s), s2);
        assert_eq!(f.add(s, FieldElement::ONE), s2);
        assert_eq!(f.mul(s, s2), FieldElement::ONE);
    }

    #[test]
    fn reducible_and_bad_moduli() {
        assert_eq!(
            FiniteField::new(2, 2, &[1, 0, 1]).unwrap_err(),
            Error::NotIrreducible(vec![1, 0, 1])
        );
        assert_eq!(FiniteField::new(4, 1, &[0, 1]).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(FiniteField::new(3, 2, &[1, 0, 2]), Err(Error::BadModulus(_))));
        // x^2 + 1 is irreducible over GF(3) but its root has order 4, not 8.
        assert_eq!(
            FiniteField::new(3, 2, &[1, 0, 1]).unwrap_err(),
            Error::NotPrimitive(vec![1, 0, 1])
        );
        // x^2 + x + 2 is primitive over GF(3).
        assert_eq!(FiniteField::new(3, 2, &[2, 1, 1]).unwrap().q(), 9);
    }

    #[test]
    fn gf16_is_a_field() {
        let f = FiniteField::new(2, 4, &[1, 1, 0, 0, 1]).unwrap();
        for a in f.nonzero_elements() {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        }
        assert!(FiniteField::new(2, 4, &[1, 1, 1, 1, 1]).is_err());
    }

    #[test]
    fn inverse_in_gf3() {
        let f = gf3();
        assert_eq!(f.inv(FieldElement::from_index(2)).unwrap(), FieldElement::from_index(2));
        assert_eq!(f.inv(FieldElement::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn frobenius_on_gf4() {
        let f = FiniteField::gf4();
        let s = f.parse_label("s").unwrap();
        let s2 = f.parse_label("s2").unwrap();
        assert_eq!(f.frobenius_conj(s).unwrap(), s2);
        assert_eq!(f.frobenius_conj(FieldElement::ONE).unwrap(), FieldElement::ONE);
        for a in f.elements() {
            let c = f.frobenius_conj(a).unwrap();
            assert_eq!(f.frobenius_conj(c).unwrap(), a);
            for b in f.elements() {
                let cb = f.frobenius_conj(b).unwrap();
                assert_eq!(f.frobenius_conj(f.mul(a, b)).unwrap(), f.mul(c, cb));
                assert_eq!(f.frobenius_conj(f.add(a, b)).unwrap(), f.add(c, cb));
            }
        }
        assert_eq!(gf3().frobenius_conj(FieldElement::ONE), Err(Error::NotSquareOrder(3)));
    }

    #[test]
    fn characters() {
        let f = gf3();
        assert_eq!(
            f.character(FieldElement::ONE, FieldElement::ONE, 12).unwrap(),
            Cyclotomic::zeta_pow(12, 4)
        );
        let g4 = FiniteField::gf4();
        let s = g4.parse_label("s").unwrap();
        // s = 0 + 1·λ and b = 1 = 1 + 0·λ: exponent 0.
        assert!(g4.character(FieldElement::ONE, s, 12).unwrap().is_one());
        for b in g4.elements() {
            assert!(g4.character(b, FieldElement::ZERO, 12).unwrap().is_one());
        }
        assert!(matches!(
            f.character(FieldElement::ONE, FieldElement::ONE, 4),
            Err(Error::IncompatibleCyclotomicOrder { .. })
        ));
    }

    #[test]
    fn characters_are_additive() {
        for field in [gf3(), FiniteField::gf4()] {
            for b in field.elements() {
                for a in field.elements() {
                    for c in field.elements() {
                        let lhs = field.character(b, field.add(a, c), 12).unwrap();
                        let rhs = &field.character(b, a, 12).unwrap() * &field.character(b, c, 12).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn character_sums() {
        for field in [gf3(), FiniteField::gf4()] {
            for a in field.elements() {
                let sum = field.character_sum(a, 12).unwrap();
                if a.is_zero() {
                    assert_eq!(sum, Cyclotomic::from_int(12, field.q() as i64));
                } else {
                    assert!(sum.is_zero());
                }
            }
        }
    }
}
