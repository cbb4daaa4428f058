//! Dense exact matrices over the scalar field, with the row-reduction
//! based linear algebra (rank, kernels, solving, span closures) that the
//! representation-theoretic checks are built on.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::FieldElem;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<FieldElem>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![FieldElem::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = FieldElem::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &FieldElem) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> FieldElem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<FieldElem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| FieldElem::from_int(v)).collect()).collect(),
        )
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix add shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sub shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix mul shape");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
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

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn trace(&self) -> FieldElem {
        assert!(self.is_square());
        let mut t = FieldElem::zero();
        for i in 0..self.rows {
            t = t.add(&self[(i, i)]);
        }
        t
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Kronecker (tensor) product.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            let (r1, r2) = (r / other.rows, r % other.rows);
            let (c1, c2) = (c / other.cols, c % other.cols);
            self[(r1, c1)].mul(&other[(r2, c2)])
        })
    }

    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zero(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m[(self.rows + r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        m
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    pub fn row(&self, r: usize) -> Vec<FieldElem> {
        (0..self.cols).map(|c| self[(r, c)].clone()).collect()
    }

    pub fn flatten(&self) -> Vec<FieldElem> {
        self.data.clone()
    }

    pub fn apply(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = FieldElem::zero();
                for c in 0..self.cols {
                    if !self[(r, c)].is_zero() && !v[c].is_zero() {
                        acc = acc.add(&self[(r, c)].mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    /// In-place Gauss-Jordan to reduced row echelon form; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self[(row, col)].inv().unwrap();
            for c in col..self.cols {
                self[(row, c)] = self[(row, c)].mul(&inv);
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let f = self[(r, col)].clone();
                    for c in col..self.cols {
                        let delta = self[(row, c)].mul(&f);
                        self[(r, c)] = self[(r, c)].sub(&delta);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the right null space, as column vectors.
    pub fn nullspace(&self) -> Vec<Vec<FieldElem>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![FieldElem::zero(); self.cols];
                v[fc] = FieldElem::one();
                for (prow, &pcol) in pivots.iter().enumerate() {
                    v[pcol] = m[(prow, fc)].neg();
                }
                v
            })
            .collect()
    }

    /// Solves `self * x = b`; `None` if inconsistent.
    pub fn solve(&self, b: &[FieldElem]) -> Option<Vec<FieldElem>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![FieldElem::zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = aug[(prow, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                FieldElem::one()
            } else {
                FieldElem::zero()
            }
        });
        let pivots = aug.rref_in_place();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Singular("matrix not invertible".into()));
        }
        Ok(aug.block(0, n, n, n))
    }

    pub fn det(&self) -> FieldElem {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = FieldElem::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return FieldElem::zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = det.neg();
            }
            det = det.mul(&m[(col, col)]);
            let inv = m[(col, col)].inv().unwrap();
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].mul(&inv);
                for c in col..n {
                    let delta = m[(col, c)].mul(&f);
                    m[(r, c)] = m[(r, c)].sub(&delta);
                }
            }
        }
        det
    }

    /// Characteristic polynomial `det(X*I - self)` by the trace recursion
    /// (Faddeev-LeVerrier), exact over characteristic 0.
    pub fn char_poly(&self) -> Poly {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![FieldElem::zero(); n + 1];
        coeffs[n] = FieldElem::one();
        let mut m = Matrix::identity(n);
        for k in 1..=n {
            m = self.mul(&m);
            let c = m
                .trace()
                .mul(&FieldElem::from_frac(-1, k as i64));
            coeffs[n - k] = c.clone();
            for i in 0..n {
                m[(i, i)] = m[(i, i)].add(&c);
            }
        }
        Poly::new(coeffs)
    }

    /// Evaluates a polynomial at this matrix.
    pub fn eval_poly(&self, p: &Poly) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::zero(self.rows, self.rows);
        for c in p.coeffs.iter().rev() {
            acc = self.mul(&acc);
            for i in 0..self.rows {
                acc[(i, i)] = acc[(i, i)].add(c);
            }
        }
        acc
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = FieldElem;
    fn index(&self, (r, c): (usize, usize)) -> &FieldElem {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut FieldElem {
        &mut self.data[r * self.cols + c]
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained row space: used for span and algebra closures.
///
/// Rows are kept in reduced echelon form so membership tests are a single
/// reduction pass.
pub struct SpanBasis {
    dim: usize,
    rows: Vec<Vec<FieldElem>>,   // reduced rows
    pivots: Vec<usize>,          // pivot column of each row
}

impl SpanBasis {
    pub fn new(dim: usize) -> Self {
        SpanBasis { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut Vec<FieldElem>) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for c in p..self.dim {
                    if !row[c].is_zero() {
                        let delta = row[c].mul(&f);
                        v[c] = v[c].sub(&delta);
                    }
                }
            }
        }
    }

    /// Adds a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<FieldElem>) -> bool {
        assert_eq!(v.len(), self.dim);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        for c in p..self.dim {
            v[c] = v[c].mul(&inv);
        }
        // back-substitute into existing rows to keep fully reduced form
        for (row, &rp) in self.rows.iter_mut().zip(&self.pivots) {
            debug_assert!(rp != p);
            if !row[p].is_zero() {
                let f = row[p].clone();
                for c in p..self.dim {
                    if !v[c].is_zero() {
                        let delta = v[c].mul(&f);
                        row[c] = row[c].sub(&delta);
                    }
                }
            }
        }
        let pos = self.pivots.iter().position(|&q| q > p).unwrap_or(self.rows.len());
        self.rows.insert(pos, v);
        self.pivots.insert(pos, p);
        true
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|c| c.is_zero())
    }
}

/// Closure of a set of square matrices under products, as a unital algebra
/// span; returns the dimension reached (capped by full matrix algebra).
pub fn algebra_span_dim(gens: &[Matrix]) -> usize {
    if gens.is_empty() {
        return 0;
    }
    let n = gens[0].rows;
    let mut span = SpanBasis::new(n * n);
    let mut frontier: Vec<Matrix> = vec![Matrix::identity(n)];
    span.insert(frontier[0].flatten());
    for g in gens {
        if span.insert(g.flatten()) {
            frontier.push(g.clone());
        }
    }
    while !frontier.is_empty() && span.rank() < n * n {
        let mut next = Vec::new();
        for f in &frontier {
            for g in gens {
                let prod = f.mul(g);
                if span.insert(prod.flatten()) {
                    next.push(prod);
                }
            }
        }
        frontier = next;
    }
    span.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_solve_nullspace() {
        let a = Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(a.apply(v).iter().all(|c| c.is_zero()));
        }
        let b = vec![FieldElem::from_int(6), FieldElem::from_int(12), FieldElem::from_int(2)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.apply(&x), b);
    }

    #[test]
    fn inverse_and_det() {
        let a = Matrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert_eq!(a.det(), FieldElem::from_int(1));
        let s = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_err());
        assert!(s.det().is_zero());
    }

    #[test]
    fn char_poly_companion() {
        // companion of x^2 - 3x + 2
        let a = Matrix::from_int_rows(&[&[0, -2], &[1, 3]]);
        let p = a.char_poly();
        assert_eq!(
            p.coeffs,
            vec![FieldElem::from_int(2), FieldElem::from_int(-3), FieldElem::from_int(1)]
        );
        // Cayley-Hamilton
        assert!(a.eval_poly(&p).is_zero());
    }

    #[test]
    fn algebra_closure() {
        // diagonal + permutation generate all of M_2
        let d = Matrix::from_int_rows(&[&[1, 0], &[0, 2]]);
        let s = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(algebra_span_dim(&[d, s]), 4);
        // a single scalar generates dimension 1
        assert_eq!(algebra_span_dim(&[Matrix::identity(3)]), 1);
    }

    #[test]
    fn span_basis_membership() {
        let mut sp = SpanBasis::new(3);
        assert!(sp.insert(vec![
            FieldElem::from_int(1),
            FieldElem::from_int(1),
            FieldElem::from_int(0)
        ]));
        assert!(sp.insert(vec![
            FieldElem::from_int(0),
            FieldElem::from_int(1),
            FieldElem::from_int(1)
        ]));
        assert!(sp.contains(&[
            FieldElem::from_int(1),
            FieldElem::from_int(2),
            FieldElem::from_int(1)
        ]));
        assert!(!sp.contains(&[
            FieldElem::from_int(1),
            FieldElem::from_int(0),
            FieldElem::from_int(0)
        ]));
    }
}
