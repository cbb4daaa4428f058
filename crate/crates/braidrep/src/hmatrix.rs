//! Square matrices over the truncated series ring k[h]/(h^{D+1}).

use crate::error::{Error, Result};
use crate::hseries::HSeries;
use crate::matrix::Matrix;
use crate::scalar::FieldElem;

#[derive(Clone, PartialEq, Eq)]
pub struct HMatrix {
    pub n: usize,
    pub deg: usize,
    entries: Vec<HSeries>,
}

impl HMatrix {
    pub fn zero(n: usize, deg: usize) -> Self {
        HMatrix { n, deg, entries: vec![HSeries::zero(deg); n * n] }
    }

    pub fn identity(n: usize, deg: usize) -> Self {
        let mut m = HMatrix::zero(n, deg);
        for i in 0..n {
            m[(i, i)] = HSeries::one(deg);
        }
        m
    }

    /// Embeds a constant matrix at h-degree `shift`.
    pub fn from_constant(m: &Matrix, deg: usize, shift: usize) -> Self {
        assert!(m.is_square());
        let mut out = HMatrix::zero(m.rows, deg);
        for r in 0..m.rows {
            for c in 0..m.rows {
                out[(r, c)] = HSeries::monomial(m[(r, c)].clone(), shift, deg);
            }
        }
        out
    }

    /// The coefficient of h^k as a constant matrix.
    pub fn coeff_matrix(&self, k: usize) -> Matrix {
        Matrix::from_fn(self.n, self.n, |r, c| self[(r, c)].coeff(k).clone())
    }

    /// Constant term (reduction mod h).
    pub fn constant_term(&self) -> Matrix {
        self.coeff_matrix(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.n, other.n, "HMatrix dimension mismatch");
        assert_eq!(self.deg, other.deg, "HMatrix truncation degree mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        HMatrix {
            n: self.n,
            deg: self.deg,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        HMatrix {
            n: self.n,
            deg: self.deg,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        HMatrix {
            n: self.n,
            deg: self.deg,
            entries: self.entries.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = HMatrix::zero(self.n, self.deg);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        HMatrix {
            n: self.n,
            deg: self.deg,
            entries: self.entries.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn scale_series(&self, s: &HSeries) -> Self {
        HMatrix {
            n: self.n,
            deg: self.deg,
            entries: self.entries.iter().map(|a| a.mul(s)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = HMatrix::zero(self.n, self.deg);
        for r in 0..self.n {
            for c in 0..self.n {
                out[(r, c)] = self[(c, r)].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> HSeries {
        let mut t = HSeries::zero(self.deg);
        for i in 0..self.n {
            t = t.add(&self[(i, i)]);
        }
        t
    }

    pub fn det(&self) -> HSeries {
        // expansion via exact fraction-free elimination is overkill here:
        // sizes are small, so use cofactor-free Gaussian elimination over
        // the local ring when the leading principal minors are invertible,
        // falling back to Laplace expansion otherwise.
        fn laplace(m: &HMatrix, rows: &[usize], cols: &[usize]) -> HSeries {
            if rows.is_empty() {
                return HSeries::one(m.deg);
            }
            let r = rows[0];
            let mut acc = HSeries::zero(m.deg);
            for (k, &c) in cols.iter().enumerate() {
                if m[(r, c)].is_zero() {
                    continue;
                }
                let sub_rows = &rows[1..];
                let sub_cols: Vec<usize> =
                    cols.iter().copied().filter(|&x| x != c).collect();
                let minor = laplace(m, sub_rows, &sub_cols);
                let term = m[(r, c)].mul(&minor);
                acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
        let idx: Vec<usize> = (0..self.n).collect();
        laplace(self, &idx, &idx)
    }

    /// Inverse in the truncated ring; exists iff the constant term is
    /// invertible over the field, and then `inverse(M) * M = I` exactly
    /// mod h^{D+1}.
    pub fn inverse(&self) -> Result<Self> {
        let m0 = self.constant_term();
        let m0_inv = m0
            .inverse()
            .map_err(|_| Error::Singular("constant term of HMatrix not invertible".into()))?;
        let m0_inv_h = HMatrix::from_constant(&m0_inv, self.deg, 0);
        // write M = M0 (I + E) with E = M0^{-1} M - I of positive valuation;
        // then (I + E)^{-1} = sum_k (-E)^k truncates exactly
        let neg_e = HMatrix::identity(self.n, self.deg).sub(&m0_inv_h.mul(self));
        let mut acc = HMatrix::identity(self.n, self.deg);
        let mut pow = HMatrix::identity(self.n, self.deg);
        for _ in 1..=self.deg {
            pow = pow.mul(&neg_e);
            acc = acc.add(&pow);
        }
        Ok(acc.mul(&m0_inv_h))
    }

    /// exp of a matrix with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut out = HMatrix::identity(self.n, self.deg);
        let mut term = HMatrix::identity(self.n, self.deg);
        for k in 1..=self.deg {
            term = term.mul(self).scale(&FieldElem::from_frac(1, k as i64));
            out = out.add(&term);
        }
        Ok(out)
    }

    /// h -> -h entrywise.
    pub fn eps(&self) -> Self {
        HMatrix {
            n: self.n,
            deg: self.deg,
            entries: self.entries.iter().map(|e| e.eps()).collect(),
        }
    }

    /// h -> alpha*h entrywise.
    pub fn galois_twist(&self, alpha: &FieldElem) -> Self {
        HMatrix {
            n: self.n,
            deg: self.deg,
            entries: self.entries.iter().map(|e| e.galois_twist(alpha)).collect(),
        }
    }

    pub fn kron(&self, other: &Self) -> Self {
        assert_eq!(self.deg, other.deg);
        let n = self.n * other.n;
        let mut out = HMatrix::zero(n, self.deg);
        for r1 in 0..self.n {
            for c1 in 0..self.n {
                if self[(r1, c1)].is_zero() {
                    continue;
                }
                for r2 in 0..other.n {
                    for c2 in 0..other.n {
                        out[(r1 * other.n + r2, c1 * other.n + c2)] =
                            self[(r1, c1)].mul(&other[(r2, c2)]);
                    }
                }
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.deg, other.deg);
        let n = self.n + other.n;
        let mut out = HMatrix::zero(n, self.deg);
        for r in 0..self.n {
            for c in 0..self.n {
                out[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..other.n {
            for c in 0..other.n {
                out[(self.n + r, self.n + c)] = other[(r, c)].clone();
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for HMatrix {
    type Output = HSeries;
    fn index(&self, (r, c): (usize, usize)) -> &HSeries {
        &self.entries[r * self.n + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for HMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut HSeries {
        &mut self.entries[r * self.n + c]
    }
}

impl std::fmt::Debug for HMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "HMatrix {}x{} mod h^{} [", self.n, self.n, self.deg + 1)?;
        for r in 0..self.n {
            write!(f, "  [")?;
            for c in 0..self.n {
                if c > 0 {
                    write!(f, " | ")?;
                }
                write!(f, "{:?}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_exact_mod_truncation() {
        let deg = 4;
        let mut m = HMatrix::identity(2, deg);
        m[(0, 1)] = HSeries::monomial(FieldElem::from_int(3), 1, deg);
        m[(1, 0)] = HSeries::monomial(FieldElem::from_int(-2), 2, deg);
        m[(1, 1)] = {
            let mut s = HSeries::one(deg);
            s.coeffs[1] = FieldElem::from_int(5);
            s
        };
        let inv = m.inverse().unwrap();
        assert_eq!(inv.mul(&m), HMatrix::identity(2, deg));
        assert_eq!(m.mul(&inv), HMatrix::identity(2, deg));
    }

    #[test]
    fn singular_constant_term_rejected() {
        let m = HMatrix::from_constant(&Matrix::from_int_rows(&[&[1, 1], &[1, 1]]), 3, 0);
        assert!(m.inverse().is_err());
    }

    #[test]
    fn exp_of_nilpotent_shift() {
        let deg = 3;
        let t = Matrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        let m = HMatrix::from_constant(&t, deg, 1);
        let e = m.exp().unwrap();
        // exp(h N) = 1 + h N for N^2 = 0
        let expect = HMatrix::identity(2, deg).add(&m);
        assert_eq!(e, expect);
    }
}
