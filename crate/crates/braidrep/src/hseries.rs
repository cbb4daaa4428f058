//! Truncated power series in a single central parameter `h`.
//!
//! A series carries its truncation degree; mixing degrees is a hard error.
//! The involution `eps` sends `h` to `-h` and is a ring involution.

use crate::error::{Error, Result};
use crate::scalar::FieldElem;

#[derive(Clone, PartialEq, Eq)]
pub struct HSeries {
    /// coefficient of h^0 .. h^D
    pub coeffs: Vec<FieldElem>,
}

impl HSeries {
    pub fn zero(deg: usize) -> Self {
        HSeries { coeffs: vec![FieldElem::zero(); deg + 1] }
    }

    pub fn one(deg: usize) -> Self {
        let mut s = HSeries::zero(deg);
        s.coeffs[0] = FieldElem::one();
        s
    }

    pub fn constant(c: FieldElem, deg: usize) -> Self {
        let mut s = HSeries::zero(deg);
        s.coeffs[0] = c;
        s
    }

    /// `c * h^k` truncated at the given degree.
    pub fn monomial(c: FieldElem, k: usize, deg: usize) -> Self {
        let mut s = HSeries::zero(deg);
        if k <= deg {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &FieldElem {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.degree(),
            other.degree(),
            "mixing truncation degrees {} and {}",
            self.degree(),
            other.degree()
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        HSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        HSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        HSeries { coeffs: self.coeffs.iter().map(|a| a.neg()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let d = self.degree();
        let mut out = HSeries::zero(d);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > d {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
            }
        }
        out
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        HSeries { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    /// Multiply by h^k, pushing the top coefficients past the truncation.
    pub fn shift(&self, k: usize) -> Self {
        let d = self.degree();
        let mut out = HSeries::zero(d);
        for i in 0..=d {
            if i + k > d {
                break;
            }
            out.coeffs[i + k] = self.coeffs[i].clone();
        }
        out
    }

    /// Inverse in the truncated ring; requires invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let inv0 = c0.inv().ok_or_else(|| Error::Singular("series constant term is 0".into()))?;
        let d = self.degree();
        let mut out = HSeries::zero(d);
        out.coeffs[0] = inv0.clone();
        for n in 1..=d {
            // c_n = -inv0 * sum_{k=1..n} a_k c_{n-k}
            let mut acc = FieldElem::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !out.coeffs[n - k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&out.coeffs[n - k]));
                }
            }
            out.coeffs[n] = acc.mul(&inv0).neg();
        }
        Ok(out)
    }

    /// The field involution h -> -h applied coefficientwise.
    pub fn eps(&self) -> Self {
        HSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        }
    }

    /// h -> alpha*h.
    pub fn galois_twist(&self, alpha: &FieldElem) -> Self {
        let mut p = FieldElem::one();
        HSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let v = c.mul(&p);
                    p = p.mul(alpha);
                    v
                })
                .collect(),
        }
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let d = self.degree();
        let mut out = HSeries::one(d);
        let mut term = HSeries::one(d);
        for k in 1..=d {
            term = term.mul(self).scale(&FieldElem::from_frac(1, k as i64));
            out = out.add(&term);
        }
        Ok(out)
    }
}

impl std::fmt::Debug for HSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})h^{k}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(coeffs: &[i64]) -> HSeries {
        HSeries { coeffs: coeffs.iter().map(|&c| FieldElem::from_int(c)).collect() }
    }

    #[test]
    fn inverse_exact() {
        let a = s(&[1, 2, 3, 4, 5]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), HSeries::one(4));
        assert!(s(&[0, 1, 0]).inverse().is_err());
    }

    #[test]
    fn exp_of_h() {
        let h = s(&[0, 1, 0, 0]);
        let e = h.exp().unwrap();
        assert_eq!(
            e.coeffs,
            vec![
                FieldElem::one(),
                FieldElem::one(),
                FieldElem::from_frac(1, 2),
                FieldElem::from_frac(1, 6)
            ]
        );
    }

    fn arb_series() -> impl Strategy<Value = HSeries> {
        proptest::collection::vec(-9i64..=9, 5)
            .prop_map(|v| HSeries { coeffs: v.into_iter().map(FieldElem::from_int).collect() })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        // truncation consistency: low coefficients of a product only depend
        // on low coefficients of the inputs
        #[test]
        fn truncation_consistent(a in arb_series(), b in arb_series(), k in 0usize..5) {
            let full = a.mul(&b);
            let mut ta = a.clone();
            let mut tb = b.clone();
            for j in k + 1..5 {
                ta.coeffs[j] = FieldElem::zero();
                tb.coeffs[j] = FieldElem::zero();
            }
            let trunc = ta.mul(&tb);
            for j in 0..=k {
                prop_assert_eq!(full.coeff(j), trunc.coeff(j));
            }
        }

        #[test]
        fn eps_is_ring_involution(a in arb_series(), b in arb_series()) {
            prop_assert_eq!(a.eps().eps(), a.clone());
            prop_assert_eq!(a.mul(&b).eps(), a.eps().mul(&b.eps()));
            prop_assert_eq!(a.add(&b).eps(), a.eps().add(&b.eps()));
        }
    }
}
