//! Truncated series in non-commuting variables: the free associative
//! algebra over the scalar field, cut beyond a fixed total degree.
//!
//! All associator computations live here (or in the graded quotients of
//! `crate::quotient` when relations are imposed).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hmatrix::HMatrix;
use crate::scalar::FieldElem;
use crate::word::{self, Word};

#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    /// generator names; letters of words index into this list
    pub alphabet: Vec<String>,
    /// truncation degree D: all words of length <= D are retained
    pub deg: usize,
    coeffs: BTreeMap<Word, FieldElem>,
}

impl TruncSeries {
    pub fn zero(alphabet: Vec<String>, deg: usize) -> Self {
        TruncSeries { alphabet, deg, coeffs: BTreeMap::new() }
    }

    pub fn one(alphabet: Vec<String>, deg: usize) -> Self {
        let mut s = TruncSeries::zero(alphabet, deg);
        s.set(Word::empty(), FieldElem::one());
        s
    }

    /// The generator with index `l` as a series.
    pub fn gen(alphabet: Vec<String>, deg: usize, l: u8) -> Self {
        let mut s = TruncSeries::zero(alphabet, deg);
        s.set(Word::letter(l), FieldElem::one());
        s
    }

    /// Standard two-letter alphabet used by associators.
    pub fn ab_alphabet() -> Vec<String> {
        vec!["A".to_string(), "B".to_string()]
    }

    pub fn nletters(&self) -> usize {
        self.alphabet.len()
    }

    pub fn coeff(&self, w: &Word) -> FieldElem {
        self.coeffs.get(w).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn constant_term(&self) -> FieldElem {
        self.coeff(&Word::empty())
    }

    pub fn set(&mut self, w: Word, c: FieldElem) {
        assert!(w.len() <= self.deg, "word degree exceeds truncation");
        assert!(w.0.iter().all(|&l| (l as usize) < self.alphabet.len()), "letter out of alphabet");
        if c.is_zero() {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, c);
        }
    }

    pub fn add_to(&mut self, w: Word, c: &FieldElem) {
        if w.len() > self.deg {
            return;
        }
        let cur = self.coeff(&w);
        self.set(w, cur.add(c));
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &FieldElem)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.deg, other.deg, "mixing truncation degrees");
        assert_eq!(self.alphabet.len(), other.alphabet.len(), "alphabet mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_to(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            alphabet: self.alphabet.clone(),
            deg: self.deg,
            coeffs: self.coeffs.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return TruncSeries::zero(self.alphabet.clone(), self.deg);
        }
        TruncSeries {
            alphabet: self.alphabet.clone(),
            deg: self.deg,
            coeffs: self.coeffs.iter().map(|(w, a)| (w.clone(), a.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = TruncSeries::zero(self.alphabet.clone(), self.deg);
        for (u, a) in &self.coeffs {
            for (v, b) in &other.coeffs {
                if u.len() + v.len() > self.deg {
                    continue;
                }
                out.add_to(u.concat(v), &a.mul(b));
            }
        }
        out
    }

    /// Bracket [self, other] = self*other - other*self.
    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut out = TruncSeries::one(self.alphabet.clone(), self.deg);
        let mut term = TruncSeries::one(self.alphabet.clone(), self.deg);
        for k in 1..=self.deg {
            term = term.mul(self).scale(&FieldElem::from_frac(1, k as i64));
            if term.is_zero() {
                break;
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// log of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let mut n = self.clone();
        n.set(Word::empty(), FieldElem::zero()); // N = S - 1
        let mut out = TruncSeries::zero(self.alphabet.clone(), self.deg);
        let mut term = TruncSeries::one(self.alphabet.clone(), self.deg);
        for k in 1..=self.deg {
            term = term.mul(&n);
            if term.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add(&term.scale(&FieldElem::from_frac(sign, k as i64)));
        }
        Ok(out)
    }

    /// Inverse of a series with invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        let inv0 = c0.inv().ok_or_else(|| Error::Singular("series constant term is 0".into()))?;
        let mut n = self.scale(&inv0);
        n.set(Word::empty(), FieldElem::zero());
        let mut out = TruncSeries::one(self.alphabet.clone(), self.deg);
        let mut term = TruncSeries::one(self.alphabet.clone(), self.deg);
        for k in 1..=self.deg {
            term = term.mul(&n);
            if term.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { -1 } else { 1 };
            out = out.add(&term.scale(&FieldElem::from_int(sign)));
        }
        Ok(out.scale(&inv0))
    }

    /// Shuffle-character criterion for grouplikeness: for all nonempty
    /// words u, v with |u|+|v| <= D,  <S, u ⧢ v> = <S,u><S,v>.
    ///
    /// Requires constant term 1. Equivalent to log S being a Lie series
    /// in every degree <= D.
    pub fn is_grouplike(&self) -> bool {
        if !self.constant_term().is_one() {
            return false;
        }
        let k = self.nletters();
        for lu in 1..self.deg {
            for lv in 1..=(self.deg - lu) {
                if lv < lu {
                    continue; // symmetric in (u, v)
                }
                for u in word::words_of_len(k, lu) {
                    let su = self.coeff(&u);
                    for v in word::words_of_len(k, lv) {
                        let sv = self.coeff(&v);
                        let mut lhs = FieldElem::zero();
                        for w in word::shuffle(&u, &v) {
                            lhs = lhs.add(&self.coeff(&w));
                        }
                        if lhs != su.mul(&sv) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Substitutes each letter by a series with zero constant term.
    pub fn subst_letters(&self, images: &[TruncSeries]) -> TruncSeries {
        assert_eq!(images.len(), self.nletters(), "one image per letter");
        for im in images {
            assert!(im.constant_term().is_zero(), "letter images must have zero constant term");
        }
        let target = &images[0];
        for im in images {
            target.check(im);
        }
        let mut out = TruncSeries::zero(target.alphabet.clone(), target.deg);
        for (w, c) in &self.coeffs {
            let mut item = TruncSeries::one(target.alphabet.clone(), target.deg);
            for &l in &w.0 {
                item = item.mul(&images[l as usize]);
                if item.is_zero() {
                    break;
                }
            }
            out = out.add(&item.scale(c));
        }
        out
    }

    /// Renames letters by a permutation of the alphabet, e.g. S(B,A).
    pub fn permute_letters(&self, perm: &[u8]) -> TruncSeries {
        assert_eq!(perm.len(), self.nletters());
        let mut out = TruncSeries::zero(self.alphabet.clone(), self.deg);
        for (w, c) in &self.coeffs {
            let w2 = Word(w.0.iter().map(|&l| perm[l as usize]).collect());
            out.add_to(w2, c);
        }
        out
    }

    /// Extracts the homogeneous part of one degree.
    pub fn homogeneous_part(&self, d: usize) -> TruncSeries {
        let mut out = TruncSeries::zero(self.alphabet.clone(), self.deg);
        for (w, c) in &self.coeffs {
            if w.len() == d {
                out.set(w.clone(), c.clone());
            }
        }
        out
    }

    /// Largest degree with a nonzero coefficient, or None for 0.
    pub fn top_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(|w| w.len()).max()
    }

    /// Smallest degree with a nonzero coefficient, or None for 0.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(|w| w.len()).min()
    }
}

impl std::fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if w.is_empty() {
                write!(f, "({c})")?;
            } else {
                let name: Vec<&str> =
                    w.0.iter().map(|&l| self.alphabet[l as usize].as_str()).collect();
                write!(f, "({c}){}", name.join("."))?;
            }
        }
        Ok(())
    }
}

/// The standard bracketing of a Lyndon word, expanded in the free algebra.
pub fn lyndon_bracket(alphabet: &[String], deg: usize, w: &Word) -> TruncSeries {
    if w.len() == 1 {
        return TruncSeries::gen(alphabet.to_vec(), deg, w.0[0]);
    }
    let (u, v) = word::standard_factorization(w);
    let a = lyndon_bracket(alphabet, deg, &u);
    let b = lyndon_bracket(alphabet, deg, &v);
    a.bracket(&b)
}

/// Evaluates a series on matrix images of the letters: each letter `l`
/// contributes its image matrix at h-weight `hgrade[l]`, so a word of
/// letters with total weight m lands in h^m * (matrix product).
///
/// Every h-grade must be >= 1; this makes the truncated sum represent the
/// completed substitution faithfully.
pub fn substitute(
    series: &TruncSeries,
    images: &[HMatrix],
    hgrade: &[usize],
) -> Result<HMatrix> {
    if images.len() != series.nletters() || hgrade.len() != series.nletters() {
        return Err(Error::DimMismatch("one image and h-grade per letter".into()));
    }
    if images.is_empty() {
        return Err(Error::Invalid("empty alphabet".into()));
    }
    let n = images[0].n;
    let deg = images[0].deg;
    for im in images {
        if im.n != n {
            return Err(Error::DimMismatch("images of unequal dimension".into()));
        }
        if im.deg != deg {
            return Err(Error::DegreeMismatch(im.deg, deg));
        }
    }
    if hgrade.iter().any(|&g| g == 0) {
        return Err(Error::Invalid(
            "h-grade 0 on a generator: the substituted series would not converge".into(),
        ));
    }
    let mut out = HMatrix::zero(n, deg);
    for (w, c) in series.iter() {
        let weight: usize = w.0.iter().map(|&l| hgrade[l as usize]).sum();
        if weight > deg {
            continue;
        }
        let mut item = HMatrix::identity(n, deg);
        for &l in &w.0 {
            item = item.mul(&images[l as usize]);
        }
        // shift by the accumulated h-weight
        let mut shifted = HMatrix::zero(n, deg);
        for r in 0..n {
            for cidx in 0..n {
                shifted[(r, cidx)] = item[(r, cidx)].shift(weight);
            }
        }
        out = out.add(&shifted.scale(c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;

    fn ab(deg: usize) -> (TruncSeries, TruncSeries) {
        let alpha = TruncSeries::ab_alphabet();
        (TruncSeries::gen(alpha.clone(), deg, 0), TruncSeries::gen(alpha, deg, 1))
    }

    #[test]
    fn exp_log_roundtrip_lie_inputs() {
        // 50 pseudo-random Lie series at D <= 6, seeded deterministically
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(0xB0B);
        for case in 0..50 {
            let deg = 2 + case % 5; // 2..=6
            let alpha = TruncSeries::ab_alphabet();
            let mut lie = TruncSeries::zero(alpha.clone(), deg);
            for d in 1..=deg {
                for w in crate::word::lyndon_words(2, d) {
                    let c = FieldElem::from_int(rng.gen_range(-3i64..=3));
                    let b = lyndon_bracket(&alpha, deg, &w);
                    lie = lie.add(&b.scale(&c));
                }
            }
            let e = lie.exp().unwrap();
            assert!(e.is_grouplike(), "exp of a Lie series must be grouplike (case {case})");
            assert_eq!(e.log().unwrap(), lie, "log(exp(L)) = L (case {case})");
            let back = lie.exp().unwrap().log().unwrap().exp().unwrap();
            assert_eq!(back, e, "exp(log(S)) = S (case {case})");
        }
    }

    #[test]
    fn grouplike_counterexample() {
        // S = 1 + AB fails the shuffle criterion: <S, A⧢B> = 1 != 0
        let (a, b) = ab(2);
        let s = TruncSeries::one(TruncSeries::ab_alphabet(), 2).add(&a.mul(&b));
        assert!(!s.is_grouplike());
    }

    #[test]
    fn grouplike_trivial_cases() {
        let one = TruncSeries::one(TruncSeries::ab_alphabet(), 3);
        assert!(one.is_grouplike());
        let (a, b) = ab(3);
        let e = a.add(&b).exp().unwrap();
        assert!(e.is_grouplike());
    }

    #[test]
    fn substitute_is_multiplicative() {
        // substitute(S*T) = substitute(S) * substitute(T)
        let deg = 4;
        let (a, b) = ab(deg);
        let s = a.add(&b.mul(&a)).add(&TruncSeries::one(TruncSeries::ab_alphabet(), deg));
        let t = b.add(&a.mul(&a)).sub(&b.mul(&a));
        let x = HMatrix::from_constant(&Matrix::from_int_rows(&[&[1, 2], &[0, 1]]), deg, 0);
        let y = HMatrix::from_constant(&Matrix::from_int_rows(&[&[1, 0], &[3, -1]]), deg, 0);
        let images = [x, y];
        let grades = [1, 1];
        let lhs = substitute(&s.mul(&t), &images, &grades).unwrap();
        let rhs = substitute(&s, &images, &grades)
            .unwrap()
            .mul(&substitute(&t, &images, &grades).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_identity_and_single_letter() {
        let deg = 3;
        let one = TruncSeries::one(TruncSeries::ab_alphabet(), deg);
        let x = HMatrix::from_constant(&Matrix::from_int_rows(&[&[2, 1], &[1, 1]]), deg, 0);
        let y = HMatrix::from_constant(&Matrix::from_int_rows(&[&[0, 1], &[1, 0]]), deg, 0);
        assert_eq!(
            substitute(&one, &[x.clone(), y.clone()], &[1, 1]).unwrap(),
            HMatrix::identity(2, deg)
        );
        let (a, _) = ab(deg);
        let sub = substitute(&a, &[x.clone(), y], &[1, 1]).unwrap();
        // A -> h*x
        let mut expect = HMatrix::zero(2, deg);
        for r in 0..2 {
            for c in 0..2 {
                expect[(r, c)] = x[(r, c)].shift(1);
            }
        }
        assert_eq!(sub, expect);
    }

    #[test]
    fn hgrade_zero_rejected() {
        let deg = 2;
        let (a, _) = ab(deg);
        let x = HMatrix::identity(2, deg);
        assert!(substitute(&a, &[x.clone(), x], &[0, 1]).is_err());
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]

        // associativity and distributivity of the truncated product
        #[test]
        fn ring_axioms(seed in 0u64..1000) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed);
            let deg = 3usize;
            let alpha = TruncSeries::ab_alphabet();
            let mut make = || {
                let mut s = TruncSeries::zero(alpha.clone(), deg);
                for d in 0..=deg {
                    for w in crate::word::words_of_len(2, d) {
                        if rng.gen_bool(0.4) {
                            s.set(w, FieldElem::from_int(rng.gen_range(-4i64..=4)));
                        }
                    }
                }
                s
            };
            let (a, b, c) = (make(), make(), make());
            proptest::prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            proptest::prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }
    }
}
