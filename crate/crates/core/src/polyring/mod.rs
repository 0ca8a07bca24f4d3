//! Sparse multivariate polynomials over Q(ζ_N) in structured variables.
//!
//! Every variable is a [`VarKey`]: a block index (1 for unsplit
//! enumerators), a kind (`x` or `y`) and a field element. A polynomial
//! remembers its field, which fixes the element labels, and the order N
//! of its coefficient field.

mod json;
mod text;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::algebra::{Cyclotomic, FieldElement, FiniteField, Rational};
use crate::error::{Error, Result};

pub use json::JsonTerm;

/// Variable kind. `x` sorts before `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    X,
    Y,
}

impl Kind {
    pub fn letter(self) -> char {
        match self {
            Kind::X => 'x',
            Kind::Y => 'y',
        }
    }

    pub fn flipped(self) -> Kind {
        match self {
            Kind::X => Kind::Y,
            Kind::Y => Kind::X,
        }
    }
}

/// A variable `x_{X_block, elem}` or `y_{X_block, elem}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarKey {
    pub block: u16,
    pub kind: Kind,
    pub elem: FieldElement,
}

impl VarKey {
    pub fn new(block: u16, kind: Kind, elem: FieldElement) -> Self {
        VarKey { block, kind, elem }
    }

    pub fn x(block: u16, elem: FieldElement) -> Self {
        Self::new(block, Kind::X, elem)
    }

    pub fn y(block: u16, elem: FieldElement) -> Self {
        Self::new(block, Kind::Y, elem)
    }

    /// The same variable with the other kind.
    pub fn flipped(self) -> Self {
        VarKey { kind: self.kind.flipped(), ..self }
    }

    /// Key used when rendering: kind first, then block, then element.
    fn render_key(&self) -> (Kind, u16, FieldElement) {
        (self.kind, self.block, self.elem)
    }
}

/// A product of variables with positive exponents, kept sorted by [`VarKey`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(SmallVec<[(VarKey, u32); 8]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: VarKey) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VarKey, e: u32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial(smallvec::smallvec![(v, e)])
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs, merging repeats.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarKey, u32)>) -> Self {
        let mut v: SmallVec<[(VarKey, u32); 8]> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_by_key(|&(k, _)| k);
        let mut out: SmallVec<[(VarKey, u32); 8]> = SmallVec::new();
        for (k, e) in v {
            match out.last_mut() {
                Some((lk, le)) if *lk == k => *le += e,
                _ => out.push((k, e)),
            }
        }
        Monomial(out)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(VarKey, u32)> {
        self.0.iter()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: &VarKey) -> u32 {
        self.0
            .binary_search_by(|(k, _)| k.cmp(v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// Degree in the variables of one block and kind.
    pub fn degree_in(&self, block: u16, kind: Kind) -> u32 {
        self.0
            .iter()
            .filter(|(k, _)| k.block == block && k.kind == kind)
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out: SmallVec<[(VarKey, u32); 8]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Renames variables; colliding images have their exponents added.
    pub fn map_vars(&self, f: impl Fn(VarKey) -> VarKey) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(k, e)| (f(k), e)))
    }

    /// Splits into the factors on each `(block, kind)` group, in key order.
    pub fn groups(&self) -> impl Iterator<Item = ((u16, Kind), Monomial)> + '_ {
        let mut out: Vec<((u16, Kind), Monomial)> = Vec::new();
        for &(k, e) in &self.0 {
            match out.last_mut() {
                Some((g, m)) if *g == (k.block, k.kind) => m.0.push((k, e)),
                _ => out.push(((k.block, k.kind), Monomial(smallvec::smallvec![(k, e)]))),
            }
        }
        out.into_iter()
    }
}

/// A sparse polynomial with coefficients in Q(ζ_N).
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: FiniteField,
    order: u32,
    terms: BTreeMap<Monomial, Cyclotomic>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.render())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn accumulate(map: &mut HashMap<Monomial, Cyclotomic>, m: Monomial, c: Cyclotomic) {
    match map.entry(m) {
        std::collections::hash_map::Entry::Occupied(mut o) => {
            let s = &*o.get() + &c;
            *o.get_mut() = s;
        }
        std::collections::hash_map::Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

impl Polynomial {
    pub fn zero(field: &FiniteField, order: u32) -> Self {
        Polynomial { field: field.clone(), order, terms: BTreeMap::new() }
    }

    pub fn constant(field: &FiniteField, c: Cyclotomic) -> Self {
        let order = c.order();
        Self::from_terms(field, order, [(Monomial::one(), c)])
    }

    pub fn one(field: &FiniteField, order: u32) -> Self {
        Self::constant(field, Cyclotomic::one(order))
    }

    pub fn var(field: &FiniteField, order: u32, v: VarKey) -> Self {
        Self::from_terms(field, order, [(Monomial::var(v), Cyclotomic::one(order))])
    }

    pub fn monomial(field: &FiniteField, order: u32, m: Monomial) -> Self {
        Self::from_terms(field, order, [(m, Cyclotomic::one(order))])
    }

    /// Collects terms, adding repeated monomials and dropping zeros.
    pub fn from_terms(field: &FiniteField, order: u32, terms: impl IntoIterator<Item = (Monomial, Cyclotomic)>) -> Self {
        let mut map: HashMap<Monomial, Cyclotomic> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(c.order(), order, "coefficient order does not match polynomial order");
            accumulate(&mut map, m, c);
        }
        Self::from_map(field, order, map)
    }

    /// Integer-coefficient constructor.
    pub fn from_int_terms(field: &FiniteField, order: u32, terms: impl IntoIterator<Item = (Monomial, i64)>) -> Self {
        let mut map: HashMap<Monomial, i64> = HashMap::new();
        for (m, c) in terms {
            *map.entry(m).or_insert(0) += c;
        }
        let terms = map
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(m, c)| (m, Cyclotomic::from_int(order, c)))
            .collect();
        Polynomial { field: field.clone(), order, terms }
    }

    fn from_map(field: &FiniteField, order: u32, map: HashMap<Monomial, Cyclotomic>) -> Self {
        let terms = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { field: field.clone(), order, terms }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// Order N of the coefficient field Q(ζ_N).
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Cyclotomic {
        self.terms.get(m).cloned().unwrap_or_else(|| Cyclotomic::zero(self.order))
    }

    pub fn variables(&self) -> BTreeSet<VarKey> {
        self.terms.keys().flat_map(|m| m.iter().map(|&(k, _)| k)).collect()
    }

    /// Distinct block indices that occur.
    pub fn blocks(&self) -> BTreeSet<u16> {
        self.variables().into_iter().map(|k| k.block).collect()
    }

    /// Total degree when homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field || self.order != other.order {
            Err(Error::AlphabetMismatch)
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.get_mut(m) {
                Some(e) => {
                    *e = &*e + c;
                    if e.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Ok(Polynomial { field: self.field.clone(), order: self.order, terms })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut map: HashMap<Monomial, Cyclotomic> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut map, ma.mul(mb), ca * cb);
            }
        }
        Ok(Self::from_map(&self.field, self.order, map))
    }

    fn neg_ref(&self) -> Self {
        Polynomial {
            field: self.field.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return Self::zero(&self.field, self.order);
        }
        Polynomial {
            field: self.field.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&Cyclotomic::from_rational(self.order, *r))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.field, self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Simultaneous substitution `v ↦ rules[v]` for every variable, fully expanded.
    ///
    /// Each term is factored by `(block, kind)` group and the expanded
    /// group factors are memoized, so substitutions that act group by
    /// group stay cheap on large enumerators.
    pub fn substitute_linear(&self, rules: &BTreeMap<VarKey, Polynomial>) -> Result<Self> {
        for r in rules.values() {
            self.compatible(r)?;
        }
        if let Some(v) = self.variables().into_iter().find(|v| !rules.contains_key(v)) {
            return Err(Error::MissingRule(self.var_name(&v)));
        }
        let mut powers: HashMap<(VarKey, u32), Polynomial> = HashMap::new();
        let mut group_cache: HashMap<Monomial, Polynomial> = HashMap::new();
        let mut out: HashMap<Monomial, Cyclotomic> = HashMap::new();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(&self.field, c.clone());
            for (_, g) in m.groups() {
                if !group_cache.contains_key(&g) {
                    let mut gp = Polynomial::one(&self.field, self.order);
                    for &(v, e) in g.iter() {
                        let pw = powers.entry((v, e)).or_insert_with(|| rules[&v].pow(e));
                        gp = &gp * pw;
                    }
                    group_cache.insert(g.clone(), gp);
                }
                prod = &prod * &group_cache[&g];
            }
            for (pm, pc) in prod.terms {
                accumulate(&mut out, pm, pc);
            }
        }
        Ok(Self::from_map(&self.field, self.order, out))
    }

    pub fn partial_derivative(&self, v: &VarKey) -> Self {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(v);
            (e > 0).then(|| {
                let nm = Monomial::from_pairs(m.iter().map(|&(k, x)| (k, if k == *v { x - 1 } else { x })));
                (nm, c.scale_int(e as i64))
            })
        });
        Self::from_terms(&self.field, self.order, terms)
    }

    /// Renames variables without checks; colliding terms are collected.
    pub fn map_vars(&self, f: impl Fn(VarKey) -> VarKey) -> Self {
        Self::from_terms(&self.field, self.order, self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())))
    }

    /// Merges variables along `merge`; every image must have the kind of its source.
    pub fn specialize(&self, merge: &BTreeMap<VarKey, VarKey>) -> Result<Self> {
        for (from, to) in merge {
            if from.kind != to.kind {
                return Err(Error::KindMismatch { from: self.var_name(from), to: self.var_name(to) });
            }
        }
        Ok(self.map_vars(|k| merge.get(&k).copied().unwrap_or(k)))
    }

    /// Swaps every `x` variable with the `y` variable of the same block and element.
    pub fn flip_kind(&self) -> Self {
        self.map_vars(VarKey::flipped)
    }

    /// Sets every variable of one kind to its counterpart of the other kind.
    pub fn to_kind(&self, kind: Kind) -> Self {
        self.map_vars(|k| VarKey { kind, ..k })
    }

    /// Moves every variable into block 1.
    pub fn forget_blocks(&self) -> Self {
        self.map_vars(|k| VarKey { block: 1, ..k })
    }

    pub fn evaluate(&self, assignment: &BTreeMap<VarKey, Cyclotomic>) -> Result<Cyclotomic> {
        let mut acc = Cyclotomic::zero(self.order);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, e) in m.iter() {
                let val = assignment.get(k).ok_or_else(|| Error::MissingRule(self.var_name(k)))?;
                for _ in 0..*e {
                    t = &t * val;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Value with every variable set to 1.
    pub fn evaluate_ones(&self) -> Cyclotomic {
        self.terms.values().fold(Cyclotomic::zero(self.order), |acc, c| &acc + c)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.to_integer().is_some())
    }

    /// Integer coefficients, or the first offending monomial's coefficient as an error.
    pub fn demote_to_integers(&self) -> Result<BTreeMap<Monomial, i128>> {
        self.terms
            .iter()
            .map(|(m, c)| {
                c.to_integer().map(|i| (m.clone(), i)).ok_or_else(|| {
                    Error::Precondition(format!("coefficient {c} of {} is not an integer", self.render_monomial(m)))
                })
            })
            .collect()
    }

    /// Keeps the terms satisfying `pred`.
    pub fn filter_terms(&self, pred: impl Fn(&Monomial) -> bool) -> Self {
        Polynomial {
            field: self.field.clone(),
            order: self.order,
            terms: self.terms.iter().filter(|(m, _)| pred(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Monomials present in exactly one of the two polynomials or with different coefficients.
    pub fn diff(&self, other: &Self) -> Vec<(Monomial, Cyclotomic, Cyclotomic)> {
        let keys: BTreeSet<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter()
            .filter_map(|m| {
                let a = self.coefficient_of(m);
                let b = other.coefficient_of(m);
                (a != b).then(|| (m.clone(), a, b))
            })
            .collect()
    }

    /// Readable description of the first difference, if any.
    pub fn first_difference(&self, other: &Self) -> Option<String> {
        self.diff(other).into_iter().next().map(|(m, a, b)| {
            format!("coefficient of {} is {a} vs {b}", self.render_monomial(&m))
        })
    }

    /// Name of a variable as it would be rendered in this polynomial.
    pub fn var_name(&self, v: &VarKey) -> String {
        text::default_name(&self.field, v, self.multi_block())
    }

    fn multi_block(&self) -> bool {
        self.terms.keys().any(|m| m.iter().any(|(k, _)| k.block != 1))
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials over different alphabets")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials over different alphabets")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials over different alphabets")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

/// Specialization presets merging the nonzero-element variables of each block into `1`.
pub fn merge_nonzero(field: &FiniteField, blocks: &[u16]) -> BTreeMap<VarKey, VarKey> {
    let mut m = BTreeMap::new();
    for &b in blocks {
        for kind in [Kind::X, Kind::Y] {
            for a in field.nonzero_elements().skip(1) {
                m.insert(VarKey::new(b, kind, a), VarKey::new(b, kind, FieldElement::ONE));
            }
        }
    }
    m
}

/// Identity substitution rules for every variable of a polynomial.
pub fn identity_rules(p: &Polynomial) -> BTreeMap<VarKey, Polynomial> {
    p.variables()
        .into_iter()
        .map(|v| (v, Polynomial::var(p.field(), p.order(), v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf3() -> FiniteField {
        FiniteField::prime(3).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(&gf3(), 12, s).unwrap()
    }

    fn x(i: usize) -> VarKey {
        VarKey::x(1, FieldElement::from_index(i))
    }

    fn y(i: usize) -> VarKey {
        VarKey::y(1, FieldElement::from_index(i))
    }

    #[test]
    fn arithmetic() {
        let a = p("x0 + x1");
        assert_eq!(&a * &a, p("x0^2 + 2*x0*x1 + x1^2"));
        assert!((&a * &Polynomial::zero(&gf3(), 12)).is_zero());
        let d = &p("x0") - &p("x0");
        assert!(d.is_zero() && d.len() == 0);
    }

    #[test]
    fn alphabet_mismatch() {
        let a = p("x0");
        let b = Polynomial::parse(&FiniteField::gf4(), 12, "x0").unwrap();
        assert_eq!(a.try_add(&b), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn substitution() {
        let a = p("x0^2");
        let mut rules = identity_rules(&a);
        assert_eq!(a.substitute_linear(&rules).unwrap(), a);
        rules.insert(x(0), p("x0 + x1"));
        assert_eq!(a.substitute_linear(&rules).unwrap(), p("x0^2 + 2*x0*x1 + x1^2"));
        let b = p("x0*y1");
        assert!(matches!(b.substitute_linear(&rules), Err(Error::MissingRule(_))));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("y0^3").partial_derivative(&y(0)), p("3*y0^2"));
        assert!(p("x0*y1").partial_derivative(&y(0)).is_zero());
        assert_eq!(p("y0^2*y1").partial_derivative(&y(0)), p("2*y0*y1"));
    }

    #[test]
    fn specialization() {
        let s6: BTreeMap<VarKey, VarKey> = [(x(2), x(1)), (y(2), y(1))].into_iter().collect();
        assert_eq!(p("x1*y2").specialize(&s6).unwrap(), p("x1*y1"));
        assert_eq!(p("x0^2 + x1*x2").specialize(&s6).unwrap(), p("x0^2 + x1^2"));
        let bad: BTreeMap<VarKey, VarKey> = [(x(2), y(1))].into_iter().collect();
        assert!(matches!(p("x2").specialize(&bad), Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn coefficients_and_evaluation() {
        let c = p("x0^4 + x0*x1^3 + x0*x2^3 + 3*x0*x1^2*x2 + 3*x0*x1*x2^2");
        let m = Monomial::from_pairs([(x(0), 1), (x(1), 2), (x(2), 1)]);
        assert_eq!(c.coefficient_of(&m), Cyclotomic::from_int(12, 3));
        assert!(c.coefficient_of(&Monomial::var(y(0))).is_zero());
        assert_eq!(c.evaluate_ones(), Cyclotomic::from_int(12, 9));
        let ones: BTreeMap<VarKey, Cyclotomic> = c.variables().into_iter().map(|v| (v, Cyclotomic::one(12))).collect();
        assert_eq!(c.evaluate(&ones).unwrap(), Cyclotomic::from_int(12, 9));
    }

    #[test]
    fn kind_flip() {
        assert_eq!(p("x0^2*y1").flip_kind(), p("y0^2*x1"));
        assert_eq!(p("x0*y0").to_kind(Kind::Y), p("y0^2"));
    }

    #[test]
    fn demotion() {
        assert_eq!(p("2*x0 + 3*x1").demote_to_integers().unwrap().len(), 2);
        assert!(p("1/2*x0").demote_to_integers().is_err());
        assert!(p("(z^4)*x0").demote_to_integers().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let var = (0usize..3, prop::bool::ANY).prop_map(|(e, k)| if k { x(e) } else { y(e) });
        let term = (prop::collection::vec((var, 1u32..3), 0..3), -3i64..=3);
        prop::collection::vec(term, 0..4).prop_map(|ts| {
            Polynomial::from_int_terms(&gf3(), 12, ts.into_iter().map(|(vs, c)| (Monomial::from_pairs(vs), c)))
        })
    }

    proptest! {
        #[test]
        fn leibniz(a in arb_poly(), b in arb_poly(), i in 0usize..3) {
            let v = y(i);
            let lhs = (&a * &b).partial_derivative(&v);
            let rhs = &(&a.partial_derivative(&v) * &b) + &(&a * &b.partial_derivative(&v));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn render_parse_round_trip(a in arb_poly()) {
            let back = Polynomial::parse(&gf3(), 12, &a.render()).unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            let back = Polynomial::from_json(&gf3(), 12, &a.to_json()).unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn identity_substitution(a in arb_poly()) {
            let mut rules = identity_rules(&a);
            for i in 0..3 {
                rules.entry(x(i)).or_insert_with(|| Polynomial::var(&gf3(), 12, x(i)));
            }
            prop_assert_eq!(a.substitute_linear(&rules).unwrap(), a);
        }
    }
}
