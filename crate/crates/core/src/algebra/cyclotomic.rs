//! Exact arithmetic in the cyclotomic field Q(ζ_N).
//!
//! Elements are stored in the power basis `1, ζ, ..., ζ^{d-1}` (d = φ(N))
//! as integer numerators over one positive common denominator, always
//! reduced modulo Φ_N and normalized so the representation is canonical.
//! Integer overflow panics instead of wrapping.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

/// Exact rationals used for coefficient access.
pub type Rational = Ratio<i128>;

/// The default root-of-unity order: enough for ζ_3, ζ_4, e^{πi/6} and √3.
pub const DEFAULT_ORDER: u32 = 12;

type Coeffs = SmallVec<[i128; 4]>;

#[derive(Debug)]
struct Ctx {
    n: u32,
    d: usize,
    /// Φ_N, low-to-high, monic.
    phi: Vec<i128>,
    /// `ζ^k` reduced, for `k` in `0..n`.
    powers: Vec<Coeffs>,
}

fn cyclotomic_poly(n: u32) -> Vec<i128> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div(&num, &cyclotomic_poly(d));
        }
    }
    num
}

/// Exact division of integer polynomials by a monic divisor.
fn exact_div(a: &[i128], b: &[i128]) -> Vec<i128> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0i128; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

fn ctx(n: u32) -> &'static Ctx {
    static CACHE: OnceLock<Mutex<HashMap<u32, &'static Ctx>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic context cache poisoned");
    if let Some(c) = guard.get(&n) {
        return c;
    }
    assert!(n >= 1, "cyclotomic order must be positive");
    let phi = cyclotomic_poly(n);
    let d = phi.len() - 1;
    let mut powers: Vec<Coeffs> = Vec::with_capacity(n as usize);
    let mut cur: Coeffs = smallvec![0; d];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by ζ: shift up, reduce the overflowing coefficient.
        let top = cur[d - 1];
        for i in (1..d).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        for i in 0..d {
            cur[i] -= top * phi[i];
        }
    }
    let c: &'static Ctx = Box::leak(Box::new(Ctx { n, d, phi, powers }));
    guard.insert(n, c);
    c
}

fn ck_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("cyclotomic coefficient overflow")
}

fn ck_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("cyclotomic coefficient overflow")
}

/// An exact element of Q(ζ_N).
#[derive(Clone)]
pub struct Cyclotomic {
    ctx: &'static Ctx,
    num: Coeffs,
    den: i128,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.n == other.ctx.n && self.den == other.den && self.num == other.num
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.n.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic<{}>({})", self.ctx.n, self)
    }
}

impl Cyclotomic {
    fn from_parts(ctx: &'static Ctx, num: Coeffs, den: i128) -> Self {
        let mut c = Cyclotomic { ctx, num, den };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        if self.num.iter().all(|&c| c == 0) {
            self.den = 1;
            return;
        }
        if self.den == 1 {
            return;
        }
        let mut g = self.den.abs();
        for &c in &self.num {
            if g == 1 {
                break;
            }
            g = g.gcd(&c);
        }
        if self.den < 0 {
            g = -g;
        }
        if g != 1 {
            for c in self.num.iter_mut() {
                *c /= g;
            }
            self.den /= g;
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ctx.n != other.ctx.n {
            Err(Error::IncompatibleCyclotomicOrder { left: self.ctx.n, right: other.ctx.n })
        } else {
            Ok(())
        }
    }

    pub fn zero(order: u32) -> Self {
        let c = ctx(order);
        Cyclotomic { ctx: c, num: smallvec![0; c.d], den: 1 }
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(order, 1)
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        let mut z = Self::zero(order);
        z.num[0] = n as i128;
        z
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        let mut z = Self::zero(order);
        z.num[0] = *r.numer();
        z.den = *r.denom();
        z.normalize();
        z
    }

    /// The primitive root ζ_N.
    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    /// ζ_N^e for any integer exponent.
    pub fn zeta_pow(order: u32, e: i64) -> Self {
        let c = ctx(order);
        let k = e.rem_euclid(order as i64) as usize;
        Cyclotomic { ctx: c, num: c.powers[k].clone(), den: 1 }
    }

    pub fn order(&self) -> u32 {
        self.ctx.n
    }

    /// Dimension φ(N) of the power basis.
    pub fn degree(&self) -> usize {
        self.ctx.d
    }

    /// Coefficient of ζ^i in the power basis.
    pub fn coeff(&self, i: usize) -> Rational {
        Rational::new(self.num[i], self.den)
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.ctx.d).map(|i| self.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.den == 1 && self.num[0] == 1 && self.num[1..].iter().all(|&c| c == 0)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|&c| c == 0)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeff(0))
    }

    pub fn to_integer(&self) -> Option<i128> {
        (self.is_rational() && self.den == 1).then_some(self.num[0])
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other, 1))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other, -1))
    }

    fn add_unchecked(&self, other: &Self, sign: i128) -> Self {
        if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(&a, &b)| ck_add(a, sign * b))
                .collect();
            return Self::from_parts(self.ctx, num, self.den);
        }
        let l = self.den.lcm(&other.den);
        let fa = l / self.den;
        let fb = sign * (l / other.den);
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(&a, &b)| ck_add(ck_mul(a, fa), ck_mul(b, fb)))
            .collect();
        Self::from_parts(self.ctx, num, l)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let d = self.ctx.d;
        if other.is_rational() {
            return self.scale_parts(other.num[0], other.den);
        }
        if self.is_rational() {
            return other.scale_parts(self.num[0], self.den);
        }
        let mut prod: SmallVec<[i128; 8]> = smallvec![0; 2 * d - 1];
        for (i, &a) in self.num.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.num.iter().enumerate() {
                if b != 0 {
                    prod[i + j] = ck_add(prod[i + j], ck_mul(a, b));
                }
            }
        }
        let mut num: Coeffs = SmallVec::from_slice(&prod[..d]);
        for (k, &c) in prod.iter().enumerate().skip(d) {
            if c == 0 {
                continue;
            }
            let pw = &self.ctx.powers[k % self.ctx.n as usize];
            for i in 0..d {
                if pw[i] != 0 {
                    num[i] = ck_add(num[i], ck_mul(c, pw[i]));
                }
            }
        }
        Self::from_parts(self.ctx, num, ck_mul(self.den, other.den))
    }

    fn scale_parts(&self, n: i128, d: i128) -> Self {
        if n == 0 {
            return Self::zero(self.ctx.n);
        }
        // Cancel before multiplying to keep numbers small.
        let g1 = n.gcd(&self.den);
        let mut g2 = d;
        for &c in &self.num {
            if g2 == 1 {
                break;
            }
            g2 = g2.gcd(&c);
        }
        let (n, sden) = (n / g1, self.den / g1);
        let num = self.num.iter().map(|&c| ck_mul(c / g2, n)).collect();
        Self::from_parts(self.ctx, num, ck_mul(sden, d / g2))
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, r: &Rational) -> Self {
        self.scale_parts(*r.numer(), *r.denom())
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale_parts(n as i128, 1)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_N.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(self.ctx.n, r.recip()));
        }
        let a: Vec<Rational> = self.coeffs();
        let m: Vec<Rational> = self.ctx.phi.iter().map(|&c| Rational::from_integer(c)).collect();
        // Invariant: s_i * a ≡ r_i (mod m).
        let (mut r0, mut r1) = (m, trim(a));
        let (mut s0, mut s1) = (vec![Rational::zero()], vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, r) = rdivmod(&r0, &r1);
            let s2 = rsub(&s0, &rmul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant.
        let c = r1[0];
        let mut out = Self::zero(self.ctx.n);
        let reduced = rdivmod(&s1, &self.ctx.phi.iter().map(|&c| Rational::from_integer(c)).collect::<Vec<_>>()).1;
        for (i, coef) in reduced.iter().enumerate() {
            let term = Self::zeta_pow(self.ctx.n, i as i64).scale(&(coef / c));
            out = out.add_unchecked(&term, 1);
        }
        Ok(out)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(&other.inverse()?))
    }

    /// The Galois automorphism ζ ↦ ζ^k (k coprime to N).
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.ctx.n as i64;
        if (k.rem_euclid(n)).gcd(&n) != 1 {
            return Err(Error::Precondition(format!("{k} is not a unit modulo {n}")));
        }
        let mut num: Coeffs = smallvec![0; self.ctx.d];
        for (i, &c) in self.num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let pw = &self.ctx.powers[(i as i64 * k).rem_euclid(n) as usize];
            for j in 0..self.ctx.d {
                num[j] = ck_add(num[j], ck_mul(c, pw[j]));
            }
        }
        Ok(Self::from_parts(self.ctx, num, self.den))
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }

    /// Floating-point value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.ctx.n as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, &c) in self.num.iter().enumerate() {
            let ang = 2.0 * std::f64::consts::PI * i as f64 / n;
            re += c as f64 * ang.cos();
            im += c as f64 * ang.sin();
        }
        (re / self.den as f64, im / self.den as f64)
    }

    /// Parses the textual form produced by `Display`, e.g. `1/3*z + 2/3*z^3`.
    pub fn parse(order: u32, s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("bad cyclotomic literal `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut out = Self::zero(order);
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let mut sign = 1i128;
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r;
            }
            let end = rest[1.min(rest.len())..]
                .find(['+', '-'])
                .map(|i| i + 1)
                .unwrap_or(rest.len());
            let term = &rest[..end];
            rest = &rest[end..];
            let (coef, power) = match term.find('z') {
                Some(zi) => {
                    let c = term[..zi].trim_end_matches('*');
                    let e = &term[zi + 1..];
                    let e = if e.is_empty() {
                        1
                    } else {
                        e.strip_prefix('^').ok_or_else(err)?.parse::<i64>().map_err(|_| err())?
                    };
                    let c = if c.is_empty() { Rational::one() } else { parse_rational(c).ok_or_else(err)? };
                    (c, e)
                }
                None => (parse_rational(term).ok_or_else(err)?, 0),
            };
            let t = Self::zeta_pow(order, power).scale(&(coef * sign));
            out = out.add_unchecked(&t, 1);
        }
        Ok(out)
    }
}

pub(crate) fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let d: i128 = b.parse().ok()?;
            let n: i128 = a.parse().ok()?;
            (d != 0).then(|| Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn rmul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn rsub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn rdivmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead = b[db];
    let mut r = a.to_vec();
    if r.len() <= db {
        return (vec![Rational::zero()], trim(r));
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    for shift in (0..q.len()).rev() {
        let c = r[shift + db] / lead;
        q[shift] = c;
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= c * y;
        }
    }
    r.truncate(db.max(1));
    (trim(q), trim(r))
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for Cyclotomic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(DEFAULT_ORDER, s)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                if let Err(e) = self.check(rhs) {
                    panic!("{e}");
                }
                $body(self, rhs)
            }
        }
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| a.add_unchecked(b, 1));
forward_binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| a.add_unchecked(b, -1));
forward_binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a.mul_unchecked(b));

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { ctx: self.ctx, num: self.num.iter().map(|&c| -c).collect(), den: self.den }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// Named constants in Q(ζ_12) used by the group generators.
pub mod constants {
    use super::*;

    /// ζ_3 = ζ_12^4.
    pub fn zeta3() -> Cyclotomic {
        Cyclotomic::zeta_pow(12, 4)
    }

    /// e^{πi/6} = ζ_12.
    pub fn e_pi_i_6() -> Cyclotomic {
        Cyclotomic::zeta(12)
    }

    /// i = ζ_12^3.
    pub fn i() -> Cyclotomic {
        Cyclotomic::zeta_pow(12, 3)
    }

    /// √3 = ζ_12 + ζ_12^11.
    pub fn sqrt3() -> Cyclotomic {
        Cyclotomic::zeta(12) + Cyclotomic::zeta_pow(12, 11)
    }

    /// 1/√3 = (ζ_12 + ζ_12^11)/3.
    pub fn inv_sqrt3() -> Cyclotomic {
        sqrt3().scale(&Rational::new(1, 3))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(e: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(12, e)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(15).len(), 9);
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        let s = constants::zeta3() + z(8) + Cyclotomic::one(12);
        assert!(s.is_zero());
    }

    #[test]
    fn sqrt3_squares_to_three() {
        let r = constants::sqrt3();
        assert_eq!(&r * &r, Cyclotomic::from_int(12, 3));
        let inv = constants::inv_sqrt3();
        assert!((&inv * &r).is_one());
        assert_eq!(r.inverse().unwrap(), inv);
    }

    #[test]
    fn rational_inverse() {
        let two = Cyclotomic::from_int(12, 2);
        assert_eq!(two.inverse().unwrap(), Cyclotomic::from_rational(12, Rational::new(1, 2)));
        assert_eq!(Cyclotomic::zero(12).inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn zeta_has_order_twelve() {
        let mut acc = Cyclotomic::one(12);
        for k in 1..=12 {
            acc = &acc * &z(1);
            assert_eq!(acc.is_one(), k == 12);
        }
        assert_eq!(z(-1), z(11));
    }

    #[test]
    fn galois_and_conjugation() {
        assert_eq!(z(1).conj(), z(11));
        assert_eq!(constants::sqrt3().conj(), constants::sqrt3());
        assert_eq!(z(1).galois(5).unwrap(), z(5));
        assert_eq!(constants::sqrt3().galois(5).unwrap(), -constants::sqrt3());
        assert!(z(1).galois(2).is_err());
    }

    #[test]
    fn mixed_orders_are_rejected() {
        let a = Cyclotomic::one(12);
        let b = Cyclotomic::one(8);
        assert_eq!(a.try_add(&b), Err(Error::IncompatibleCyclotomicOrder { left: 12, right: 8 }));
        assert!(std::panic::catch_unwind(|| &a * &b).is_err());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let x = z(1).scale(&Rational::new(1, 3)) + z(3).scale(&Rational::new(-2, 3)) + Cyclotomic::from_int(12, 5);
        let s = x.to_string();
        assert_eq!(s, "5 + 1/3*z - 2/3*z^3");
        assert_eq!(s.parse::<Cyclotomic>().unwrap(), x);
        assert_eq!("z^4".parse::<Cyclotomic>().unwrap(), constants::zeta3());
        assert_eq!("-z".parse::<Cyclotomic>().unwrap(), -z(1));
        assert!("2*w".parse::<Cyclotomic>().is_err());
    }

    #[test]
    fn other_orders() {
        for n in [1u32, 2, 3, 5, 8, 9, 15, 24] {
            let s = (0..n as i64).fold(Cyclotomic::zero(n), |acc, e| acc + Cyclotomic::zeta_pow(n, e));
            assert_eq!(s.is_zero(), n > 1);
            let x = Cyclotomic::zeta(n) + Cyclotomic::from_int(n, 2);
            assert!((&x * &x.inverse().unwrap()).is_one());
        }
    }

    fn arb(n: u32) -> impl Strategy<Value = Cyclotomic> {
        prop::collection::vec((-5i128..=5, 1i128..=4), 4).prop_map(move |v| {
            v.iter().enumerate().fold(Cyclotomic::zero(n), |acc, (i, &(a, b))| {
                acc + Cyclotomic::zeta_pow(n, i as i64).scale(&Rational::new(a, b))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn ring_axioms(a in arb(12), b in arb(12), c in arb(12)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn inverses(a in arb(12)) {
            prop_assume!(!a.is_zero());
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }

        #[test]
        fn galois_is_multiplicative(a in arb(12), b in arb(12), k in prop::sample::select(vec![1i64, 5, 7, 11])) {
            prop_assert_eq!((&a * &b).galois(k).unwrap(), &a.galois(k).unwrap() * &b.galois(k).unwrap());
        }
    }
}
