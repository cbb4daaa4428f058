//! Univariate polynomials over the exact scalar field.
//!
//! Used for characteristic polynomials, square-freeness tests and the
//! noncommutative Hensel conjugation data.

use crate::scalar::FieldElem;

/// Coefficients in increasing degree, normalized (no trailing zeros).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: Vec<FieldElem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: FieldElem) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `X`.
    pub fn x() -> Self {
        Poly::new(vec![FieldElem::zero(), FieldElem::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with deg 0 for constants; panics on the zero polynomial.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> FieldElem {
        self.coeffs.get(k).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn leading(&self) -> &FieldElem {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k).sub(&other.coeff(k))).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElem::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale_int(k as i64 + 1))
                .collect(),
        )
    }

    pub fn eval(&self, v: &FieldElem) -> FieldElem {
        let mut acc = FieldElem::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(v).add(c);
        }
        acc
    }

    /// Euclidean division: `self = q*div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut q = vec![FieldElem::zero(); self.coeffs.len().saturating_sub(div.coeffs.len() - 1)];
        let lead_inv = div.leading().inv().expect("leading coefficient invertible");
        while !rem.is_zero() && rem.degree() >= div.degree() {
            let shift = rem.degree() - div.degree();
            let factor = rem.leading().mul(&lead_inv);
            q[shift] = factor.clone();
            let mut sub = vec![FieldElem::zero(); shift];
            sub.extend(div.coeffs.iter().map(|c| c.mul(&factor)));
            rem = rem.sub(&Poly::new(sub));
        }
        (Poly::new(q), rem)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let inv = a.leading().inv().unwrap();
        a.scale(&inv)
    }

    /// True iff gcd(p, p') = 1, i.e. no repeated roots in any extension.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let g = self.gcd(&self.derivative());
        !g.is_zero() && g.degree() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| FieldElem::from_int(c)).collect())
    }

    #[test]
    fn divrem_and_gcd() {
        // (x-1)(x-2) and (x-1)(x-3)
        let a = p(&[2, -3, 1]);
        let b = p(&[3, -4, 1]);
        let g = a.gcd(&b);
        assert_eq!(g, p(&[-1, 1]));
        let (q, r) = a.divrem(&g);
        assert!(r.is_zero());
        assert_eq!(q, p(&[-2, 1]));
    }

    #[test]
    fn squarefree() {
        assert!(p(&[2, -3, 1]).is_squarefree()); // (x-1)(x-2)
        assert!(!p(&[1, -2, 1]).is_squarefree()); // (x-1)^2
        assert!(p(&[-2, 0, 1]).is_squarefree()); // x^2-2, irrational roots
    }
}
