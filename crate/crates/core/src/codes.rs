//! Linear codes, word sets and compositions.
//!
//! Coordinates are 1-based in every public signature and 0-based inside.

use std::fmt;
use std::ops::Deref;

use itertools::Itertools;

use crate::algebra::{Cyclotomic, FieldElement, FiniteField, Rational};
use crate::error::{Error, Result};

/// A vector of field elements.
pub type Codeword = Vec<FieldElement>;

/// Largest number of words that will be materialized.
pub const ENUMERATION_CAP: u128 = 1 << 20;

/// An explicitly enumerated set of words of a common length.
///
/// Linear codes deref to this type so every enumerator accepts both.
#[derive(Clone, Debug)]
pub struct WordSet {
    field: FiniteField,
    length: usize,
    words: Vec<Codeword>,
}

impl WordSet {
    pub fn new(field: FiniteField, length: usize, words: Vec<Codeword>) -> Result<Self> {
        if let Some(w) = words.iter().find(|w| w.len() != length) {
            return Err(Error::DimensionMismatch(format!(
                "word of length {} in a set of length {length}",
                w.len()
            )));
        }
        Ok(WordSet { field, length, words })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// The word length n.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn contains(&self, w: &[FieldElement]) -> bool {
        self.words.iter().any(|u| u.as_slice() == w)
    }

    /// Words sorted, for set comparisons.
    pub fn sorted_words(&self) -> Vec<Codeword> {
        let mut v = self.words.clone();
        v.sort();
        v
    }

    pub fn same_words(&self, other: &WordSet) -> bool {
        self.field == other.field && self.length == other.length && self.sorted_words() == other.sorted_words()
    }

    fn check_coord(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.length {
            Err(Error::IndexOutOfRange { index: i, length: self.length })
        } else {
            Ok(i - 1)
        }
    }

    /// Keeps the words with `u_i = a` and deletes coordinate `i`.
    pub fn value_subset(&self, i: usize, a: FieldElement) -> Result<WordSet> {
        let i0 = self.check_coord(i)?;
        let words = self
            .words
            .iter()
            .filter(|u| u[i0] == a)
            .map(|u| delete(u, i0))
            .collect();
        Ok(WordSet { field: self.field.clone(), length: self.length - 1, words })
    }

    /// Deletes coordinate `i` from every word (duplicates kept).
    pub fn puncture_words(&self, i: usize) -> Result<WordSet> {
        let i0 = self.check_coord(i)?;
        let words = self.words.iter().map(|u| delete(u, i0)).collect();
        Ok(WordSet { field: self.field.clone(), length: self.length - 1, words })
    }

    /// Hamming weights of all words with their multiplicities, ascending.
    pub fn weight_distribution(&self) -> Vec<(usize, usize)> {
        let mut counts = vec![0usize; self.length + 1];
        for w in &self.words {
            counts[weight(w)] += 1;
        }
        counts.into_iter().enumerate().filter(|&(_, c)| c > 0).collect()
    }

    /// Smallest weight of a nonzero word, if any.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.words.iter().map(|w| weight(w)).filter(|&w| w > 0).min()
    }

    /// The distinct compositions of the words on all of `[n]`, sorted.
    pub fn compositions(&self) -> Vec<Composition> {
        let all: Vec<usize> = (1..=self.length).collect();
        let mut v: Vec<Composition> = self
            .words
            .iter()
            .map(|w| composition_unchecked(&self.field, w, all.iter().map(|i| i - 1)))
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

fn delete(u: &[FieldElement], i0: usize) -> Codeword {
    u.iter().enumerate().filter(|&(j, _)| j != i0).map(|(_, &a)| a).collect()
}

/// Number of nonzero entries.
pub fn weight(u: &[FieldElement]) -> usize {
    u.iter().filter(|a| !a.is_zero()).count()
}

/// Euclidean inner product `Σ u_i v_i`.
pub fn inner_product(field: &FiniteField, u: &[FieldElement], v: &[FieldElement]) -> FieldElement {
    u.iter()
        .zip(v)
        .fold(FieldElement::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
}

/// Hermitian inner product `Σ u_i conj(v_i)`.
pub fn hermitian_product(field: &FiniteField, u: &[FieldElement], v: &[FieldElement]) -> Result<FieldElement> {
    let mut acc = FieldElement::ZERO;
    for (&a, &b) in u.iter().zip(v) {
        acc = field.add(acc, field.mul(a, field.frobenius_conj(b)?));
    }
    Ok(acc)
}

/// Counts of each field element among a set of coordinates, indexed in canonical element order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    counts: Vec<usize>,
}

impl Composition {
    pub fn new(counts: Vec<usize>) -> Self {
        Composition { counts }
    }

    pub fn count(&self, a: FieldElement) -> usize {
        self.counts[a.index()]
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// True when a single element accounts for every coordinate.
    pub fn is_constant(&self) -> bool {
        self.counts.iter().filter(|&&c| c > 0).count() <= 1
    }

    /// Parses `6,3,3`.
    pub fn parse(s: &str, q: usize) -> Result<Self> {
        let counts: Vec<usize> = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("bad composition `{s}`")))?;
        if counts.len() != q {
            return Err(Error::Parse(format!("composition `{s}` needs {q} entries")));
        }
        Ok(Composition { counts })
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.counts.iter().join(","))
    }
}

fn composition_unchecked(field: &FiniteField, u: &[FieldElement], coords: impl Iterator<Item = usize>) -> Composition {
    let mut counts = vec![0usize; field.q()];
    for i in coords {
        counts[u[i].index()] += 1;
    }
    Composition { counts }
}

/// `comp_X(u)` for a 1-based coordinate set `X`.
pub fn composition(field: &FiniteField, u: &[FieldElement], x: &[usize]) -> Result<Composition> {
    if let Some(&i) = x.iter().find(|&&i| i == 0 || i > u.len()) {
        return Err(Error::IndexOutOfRange { index: i, length: u.len() });
    }
    Ok(composition_unchecked(field, u, x.iter().map(|i| i - 1)))
}

/// A linear code given by a row-reduced generator matrix, with all codewords enumerated.
#[derive(Clone, Debug)]
pub struct LinearCode {
    generator: Vec<Codeword>,
    words: WordSet,
}

impl Deref for LinearCode {
    type Target = WordSet;
    fn deref(&self) -> &WordSet {
        &self.words
    }
}

impl AsRef<WordSet> for LinearCode {
    fn as_ref(&self) -> &WordSet {
        &self.words
    }
}

impl AsRef<WordSet> for WordSet {
    fn as_ref(&self) -> &WordSet {
        self
    }
}

/// Reduced row echelon form; returns the nonzero rows and the pivot columns.
pub fn row_reduce(field: &FiniteField, rows: &[Codeword]) -> (Vec<Codeword>, Vec<usize>) {
    let mut m: Vec<Codeword> = rows.to_vec();
    let n = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv(m[r][c]).expect("pivot is nonzero");
        for j in 0..n {
            m[r][j] = field.mul(m[r][j], inv);
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..n {
                    let sub = field.mul(f, m[r][j]);
                    m[i][j] = field.sub(m[i][j], sub);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

impl LinearCode {
    /// Row-reduces `rows` and enumerates the code they span.
    ///
    /// Words are listed in lexicographic order of the message vector
    /// (first message symbol most significant) over the reduced generator.
    pub fn from_generator(field: &FiniteField, rows: &[Codeword], length: usize) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != length) {
            return Err(Error::DimensionMismatch(format!(
                "generator row of length {} for a code of length {length}",
                r.len()
            )));
        }
        let (generator, _) = row_reduce(field, rows);
        let k = generator.len() as u32;
        let total = (field.q() as u128).checked_pow(k).unwrap_or(u128::MAX);
        if total > ENUMERATION_CAP {
            return Err(Error::EnumerationCap(total));
        }
        let mut words = Vec::with_capacity(total as usize);
        for msg in (0..k).map(|_| field.elements()).multi_cartesian_product() {
            let mut w = vec![FieldElement::ZERO; length];
            for (row, &m) in generator.iter().zip(&msg) {
                if m.is_zero() {
                    continue;
                }
                for (wj, &g) in w.iter_mut().zip(row) {
                    *wj = field.add(*wj, field.mul(m, g));
                }
            }
            words.push(w);
        }
        if words.is_empty() {
            words.push(vec![FieldElement::ZERO; length]);
        }
        Ok(LinearCode { generator, words: WordSet { field: field.clone(), length, words } })
    }

    /// Builds a code from rows of element labels such as `["1","0","s","s2"]`.
    pub fn from_labels(field: &FiniteField, rows: &[Vec<&str>]) -> Result<Self> {
        let length = rows.first().map_or(0, |r| r.len());
        let parsed: Vec<Codeword> = rows
            .iter()
            .map(|r| r.iter().map(|l| field.parse_label(l)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        Self::from_generator(field, &parsed, length)
    }

    /// The zero code of length n.
    pub fn zero(field: &FiniteField, length: usize) -> Self {
        Self::from_generator(field, &[], length).expect("zero code is always enumerable")
    }

    /// The full space `F_q^n`.
    pub fn full(field: &FiniteField, length: usize) -> Result<Self> {
        let rows: Vec<Codeword> = (0..length)
            .map(|i| {
                let mut r = vec![FieldElement::ZERO; length];
                r[i] = FieldElement::ONE;
                r
            })
            .collect();
        Self::from_generator(field, &rows, length)
    }

    pub fn generator(&self) -> &[Codeword] {
        &self.generator
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    pub fn word_set(&self) -> &WordSet {
        &self.words
    }

    /// The Euclidean dual, or the Hermitian dual when `hermitian` is set.
    pub fn dual(&self, hermitian: bool) -> Result<LinearCode> {
        let field = self.field();
        if hermitian {
            field.sqrt_q()?;
        }
        let n = self.length();
        let (g, pivots) = row_reduce(field, &self.generator);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        // For each free column f: v_f = 1, v_{pivot_r} = -g[r][f].
        let mut rows: Vec<Codeword> = free
            .iter()
            .map(|&f| {
                let mut v = vec![FieldElement::ZERO; n];
                v[f] = FieldElement::ONE;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = field.neg(g[r][f]);
                }
                v
            })
            .collect();
        if hermitian {
            // C^{⊥H} is the conjugate of the Euclidean dual.
            for row in rows.iter_mut() {
                for a in row.iter_mut() {
                    *a = field.frobenius_conj(*a)?;
                }
            }
        }
        LinearCode::from_generator(field, &rows, n)
    }

    /// Deletes coordinate `i`.
    pub fn puncture(&self, i: usize) -> Result<LinearCode> {
        let i0 = self.check_coord(i)?;
        let rows: Vec<Codeword> = self.generator.iter().map(|r| delete(r, i0)).collect();
        LinearCode::from_generator(self.field(), &rows, self.length() - 1)
    }

    /// Keeps the codewords vanishing at `i`, then deletes `i`.
    pub fn shorten(&self, i: usize) -> Result<LinearCode> {
        let i0 = self.check_coord(i)?;
        let field = self.field();
        let mut g = self.generator.clone();
        if let Some(r) = g.iter().position(|row| !row[i0].is_zero()) {
            let pivot = g.remove(r);
            let inv = field.inv(pivot[i0])?;
            for row in g.iter_mut() {
                let f = field.mul(row[i0], inv);
                for (a, &b) in row.iter_mut().zip(&pivot) {
                    *a = field.sub(*a, field.mul(f, b));
                }
            }
        }
        let rows: Vec<Codeword> = g.iter().map(|r| delete(r, i0)).collect();
        LinearCode::from_generator(self.field(), &rows, self.length() - 1)
    }

    /// The words with `u_i = a`, coordinate `i` deleted; linear only for `a = 0`.
    pub fn value_subcode(&self, i: usize, a: FieldElement) -> Result<WordSet> {
        self.value_subset(i, a)
    }

    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.field() == other.field() && self.length() == other.length() && self.generator == other.generator
    }

    pub fn classify(&self) -> Classification {
        let field = self.field();
        let self_dual = self.dual(false).is_ok_and(|d| d.same_code(self));
        let hermitian_self_dual = field.is_square_order() && self.dual(true).is_ok_and(|d| d.same_code(self));
        let weights: Vec<usize> = self.weight_distribution().into_iter().map(|(w, _)| w).collect();
        let type3 = field.q() == 3 && self_dual && self.length() % 4 == 0 && weights.iter().all(|w| w % 3 == 0);
        let type4 = field.q() == 4 && hermitian_self_dual && weights.iter().all(|w| w % 2 == 0);
        Classification { self_dual, hermitian_self_dual, type3, type4 }
    }

    /// `(1/|C|) Σ_{u∈C} χ(u·v)`: one when `v ∈ C^⊥`, zero otherwise.
    pub fn dual_indicator(&self, v: &[FieldElement], order: u32) -> Result<Cyclotomic> {
        let field = self.field();
        let mut acc = Cyclotomic::zero(order);
        for u in self.words() {
            acc = &acc + &field.character(FieldElement::ONE, inner_product(field, u, v), order)?;
        }
        Ok(acc.scale(&Rational::new(1, self.size() as i128)))
    }
}

/// Self-duality flags of a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Classification {
    pub self_dual: bool,
    pub hermitian_self_dual: bool,
    pub type3: bool,
    pub type4: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn gf3() -> FiniteField {
        FiniteField::prime(3).unwrap()
    }

    fn w(field: &FiniteField, s: &str) -> Codeword {
        s.split_whitespace().map(|l| field.parse_label(l).unwrap()).collect()
    }

    fn c4() -> LinearCode {
        let f = gf3();
        LinearCode::from_labels(&f, &[vec!["1", "0", "1", "1"], vec!["0", "1", "1", "2"]]).unwrap()
    }

    #[test]
    fn c4_words() {
        let c = c4();
        let f = gf3();
        assert_eq!(c.size(), 9);
        assert!(c.contains(&w(&f, "1 1 2 0")));
        assert!(c.contains(&w(&f, "2 2 1 0")));
        assert_eq!(c.weight_distribution(), vec![(0, 1), (3, 8)]);
    }

    #[test]
    fn dependent_rows_collapse() {
        let f = gf3();
        let c = LinearCode::from_labels(&f, &[vec!["1", "0", "1", "1"], vec!["2", "0", "2", "2"]]).unwrap();
        assert_eq!(c.dimension(), 1);
        assert_eq!(c.size(), 3);
    }

    #[test]
    fn full_space_over_gf4() {
        let f = FiniteField::gf4();
        let c = LinearCode::full(&f, 2).unwrap();
        assert_eq!(c.size(), 16);
        assert_eq!(c.sorted_words().into_iter().dedup().count(), 16);
    }

    #[test]
    fn length_mismatch() {
        let f = gf3();
        let rows = vec![w(&f, "1 0"), w(&f, "1 0 1")];
        assert!(matches!(LinearCode::from_generator(&f, &rows, 2), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn duals() {
        let c = c4();
        assert!(c.dual(false).unwrap().same_code(&c));
        let full = LinearCode::full(&gf3(), 4).unwrap();
        assert_eq!(full.dual(false).unwrap().size(), 1);
        assert_eq!(c.dual(true).unwrap_err(), Error::NotSquareOrder(3));

        let f4 = FiniteField::gf4();
        let c2 = LinearCode::from_labels(&f4, &[vec!["1", "1"]]).unwrap();
        assert!(c2.dual(true).unwrap().same_code(&c2));
        let c2s = LinearCode::from_labels(&f4, &[vec!["1", "s"]]).unwrap();
        let d = c2s.dual(true).unwrap();
        for u in c2s.words() {
            for v in d.words() {
                assert!(hermitian_product(&f4, u, v).unwrap().is_zero());
            }
        }
        assert!(d.dual(true).unwrap().same_code(&c2s));
    }

    #[test]
    fn compositions() {
        let f = gf3();
        let u = w(&f, "0 1 1 2");
        assert_eq!(composition(&f, &u, &[1, 2, 3, 4]).unwrap().counts(), &[1, 2, 1]);
        assert_eq!(composition(&f, &u, &[]).unwrap().counts(), &[0, 0, 0]);
        let v = w(&f, "1 1 2 0");
        assert_eq!(composition(&f, &v, &[1, 2]).unwrap().counts(), &[0, 2, 0]);
        assert_eq!(
            composition(&f, &v, &[5]).unwrap_err(),
            Error::IndexOutOfRange { index: 5, length: 4 }
        );
    }

    #[test]
    fn derived_codes() {
        let f = gf3();
        let c = c4();
        let s = c.shorten(1).unwrap();
        let mut expect = vec![w(&f, "0 0 0"), w(&f, "1 1 2"), w(&f, "2 2 1")];
        expect.sort();
        assert_eq!(s.sorted_words(), expect);
        let v = c.value_subcode(1, FieldElement::ONE).unwrap();
        let mut expect = vec![w(&f, "0 1 1"), w(&f, "1 2 0"), w(&f, "2 0 2")];
        expect.sort();
        assert_eq!(v.sorted_words(), expect);
        let z = LinearCode::zero(&f, 5).puncture(2).unwrap();
        assert_eq!((z.length(), z.size()), (4, 1));
        assert!(c.shorten(0).is_err());
        for i in 1..=4 {
            let parts: usize = f.elements().map(|a| c.value_subcode(i, a).unwrap().size()).sum();
            assert_eq!(parts, c.size());
            assert!(c.shorten(i).unwrap().same_words(&c.value_subcode(i, FieldElement::ZERO).unwrap()));
        }
    }

    #[test]
    fn classification() {
        let cl = c4().classify();
        assert!(cl.self_dual && cl.type3 && !cl.type4);
    }

    #[test]
    fn delta_identity() {
        let c = c4();
        let dual = c.dual(false).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let v: Codeword = (0..4).map(|_| FieldElement::from_index(rng.gen_range(0..3))).collect();
            let d = c.dual_indicator(&v, 12).unwrap();
            assert_eq!(d.is_one(), dual.contains(&v));
            assert!(d.is_one() || d.is_zero());
        }
    }
}
