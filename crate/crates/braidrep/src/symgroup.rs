//! Symmetric group combinatorics and exact irreducible representations.
//!
//! Irreducibles are built in Young seminormal form: all entries rational,
//! and each representation carries an explicit diagonal invariant symmetric
//! bilinear form, so isometry questions stay inside Q.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::FieldElem;

/// A permutation of {1..n} stored by images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Perm {
    /// images[i] = p(i+1), 1-based values
    pub images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (1..=n).collect() }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Invalid(format!("not a bijection: {images:?}")));
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// Adjacent transposition (k, k+1), 1 <= k < n.
    pub fn adjacent(n: usize, k: usize) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(k - 1, k);
        Perm { images }
    }

    /// The transposition (i, j).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Perm { images }
    }

    /// Composition: (self*other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm { images: (1..=self.n()).map(|i| self.apply(other.apply(i))).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.n()];
        for i in 1..=self.n() {
            images[self.apply(i) - 1] = i;
        }
        Perm { images }
    }

    /// Decomposition into adjacent transpositions by bubble sort; the
    /// product s_{k1} s_{k2} ... (left to right) equals the permutation.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut v = self.images.clone();
        // sort v to the identity, recording swaps; applying the recorded
        // swaps to the identity in reverse rebuilds the permutation
        loop {
            let mut swapped = false;
            for k in 0..v.len().saturating_sub(1) {
                if v[k] > v[k + 1] {
                    v.swap(k, k + 1);
                    word.push(k + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        word.reverse();
        word
    }

    /// Cycle type as a partition of n.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.apply(cur);
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        cycles
    }

    /// All n! permutations of {1..n}.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut items: Vec<usize> = (1..=n).collect();
        fn heap(items: &mut Vec<usize>, k: usize, out: &mut Vec<Perm>) {
            if k <= 1 {
                out.push(Perm { images: items.clone() });
                return;
            }
            for i in 0..k {
                heap(items, k - 1, out);
                if k % 2 == 0 {
                    items.swap(i, k - 1);
                } else {
                    items.swap(0, k - 1);
                }
            }
        }
        heap(&mut items, n, &mut out);
        out
    }
}

/// A partition of n, weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::Invalid("empty or zero part in partition".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("parts not decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let parts: Result<Vec<usize>> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad partition part {p:?}: {e}")))
            })
            .collect();
        Partition::new(parts?)
    }

    pub fn to_string_compact(&self) -> String {
        self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }

    /// Sum of contents col - row over all cells.
    pub fn content_sum(&self) -> i64 {
        let mut s = 0i64;
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                s += c as i64 - r as i64;
            }
        }
        s
    }
}

/// A standard Young tableau, stored as rows of entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau(pub Vec<Vec<usize>>);

impl Tableau {
    /// (row, col) of entry k (0-based coordinates).
    fn position(&self, k: usize) -> (usize, usize) {
        for (r, row) in self.0.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == k {
                    return (r, c);
                }
            }
        }
        panic!("entry {k} not in tableau");
    }

    fn content(&self, k: usize) -> i64 {
        let (r, c) = self.position(k);
        c as i64 - r as i64
    }

    /// Swap entries k, k+1 if the result is standard.
    fn swap(&self, k: usize) -> Option<Tableau> {
        let (r1, c1) = self.position(k);
        let (r2, c2) = self.position(k + 1);
        if r1 == r2 || c1 == c2 {
            return None; // same row or column: swap not standard
        }
        let mut t = self.clone();
        t.0[r1][c1] = k + 1;
        t.0[r2][c2] = k;
        Some(t)
    }
}

/// All standard tableaux of a shape, by recursive corner removal.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn rec(shape: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<(usize, usize)>>, acc: &mut Vec<(usize, usize)>) {
        if n == 0 {
            let mut placed = acc.clone();
            placed.reverse();
            out.push(placed);
            return;
        }
        for r in 0..shape.len() {
            let len = shape[r];
            if len == 0 {
                continue;
            }
            let is_corner = r + 1 >= shape.len() || shape[r + 1] < len;
            if is_corner {
                shape[r] -= 1;
                acc.push((r, len - 1));
                rec(shape, n - 1, out, acc);
                acc.pop();
                shape[r] += 1;
            }
        }
    }
    let n = shape.n();
    let mut cells = Vec::new();
    rec(&mut shape.0.clone(), n, &mut cells, &mut Vec::new());
    cells
        .into_iter()
        .map(|placement| {
            let mut rows: Vec<Vec<usize>> = shape.0.iter().map(|&l| vec![0; l]).collect();
            for (k, (r, c)) in placement.into_iter().enumerate() {
                rows[r][c] = k + 1;
            }
            Tableau(rows)
        })
        .collect()
}

/// A representation of the symmetric group given by generator images,
/// together with a diagonal invariant symmetric bilinear form.
#[derive(Clone, Debug)]
pub struct SymRep {
    pub n: usize,
    pub dim: usize,
    /// images of the adjacent transpositions s_1 .. s_{n-1}
    pub gens: Vec<Matrix>,
    /// diagonal entries of an invariant symmetric bilinear form
    pub form: Vec<FieldElem>,
    /// formal sum of partitions, when known
    pub label: Vec<(Partition, usize)>,
}

impl SymRep {
    /// The Young seminormal model of the irreducible indexed by `shape`,
    /// with its diagonal invariant form.
    pub fn irrep(shape: &Partition) -> Result<SymRep> {
        let n = shape.n();
        if n < 1 {
            return Err(Error::Invalid("empty partition".into()));
        }
        let tabs = standard_tableaux(shape);
        let dim = tabs.len();
        let index: HashMap<Tableau, usize> =
            tabs.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let mut gens = Vec::new();
        for k in 1..n {
            let mut m = Matrix::zero(dim, dim);
            let mut done = vec![false; dim];
            for (a, t) in tabs.iter().enumerate() {
                if done[a] {
                    continue;
                }
                let d = t.content(k + 1) - t.content(k);
                match t.swap(k) {
                    None => {
                        // same row (d = 1): fixed; same column (d = -1): negated
                        m[(a, a)] = FieldElem::from_int(d.signum());
                        done[a] = true;
                    }
                    Some(t2) => {
                        let b = index[&t2];
                        let inv_d = FieldElem::from_frac(1, d);
                        // block on (a, b): s v_a = (1/d) v_a + v_b,
                        //                  s v_b = (1 - 1/d^2) v_a - (1/d) v_b
                        m[(a, a)] = inv_d.clone();
                        m[(b, a)] = FieldElem::one();
                        m[(a, b)] = FieldElem::one().sub(&inv_d.mul(&inv_d));
                        m[(b, b)] = inv_d.neg();
                        done[a] = true;
                        done[b] = true;
                    }
                }
            }
            gens.push(m);
        }
        // propagate the diagonal form weights across the swap graph:
        // gamma_b = (1 - 1/d^2) gamma_a for a block as above
        let mut form: Vec<Option<FieldElem>> = vec![None; dim];
        form[0] = Some(FieldElem::one());
        let mut queue = vec![0usize];
        while let Some(a) = queue.pop() {
            let ga = form[a].clone().unwrap();
            for k in 1..n {
                if let Some(t2) = tabs[a].swap(k) {
                    let b = index[&t2];
                    let d = tabs[a].content(k + 1) - tabs[a].content(k);
                    let inv_d2 = FieldElem::from_frac(1, d * d);
                    let gb = ga.mul(&FieldElem::one().sub(&inv_d2));
                    match &form[b] {
                        Some(prev) => assert_eq!(prev, &gb, "inconsistent form weights"),
                        None => {
                            form[b] = Some(gb);
                            queue.push(b);
                        }
                    }
                }
            }
        }
        let form: Vec<FieldElem> =
            form.into_iter().map(|f| f.expect("tableau graph connected")).collect();
        let rep = SymRep { n, dim, gens, form, label: vec![(shape.clone(), 1)] };
        debug_assert!(rep.check_moore_relations().is_ok());
        Ok(rep)
    }

    pub fn trivial(n: usize) -> SymRep {
        SymRep::irrep(&Partition(vec![n])).unwrap()
    }

    pub fn sign(n: usize) -> SymRep {
        SymRep::irrep(&Partition(vec![1; n])).unwrap()
    }

    /// Moore presentation relations, exactly.
    pub fn check_moore_relations(&self) -> Result<()> {
        let id = Matrix::identity(self.dim);
        for (k, g) in self.gens.iter().enumerate() {
            if g.mul(g) != id {
                return Err(Error::RelationViolation(format!("s{}^2 != 1", k + 1)));
            }
        }
        for i in 0..self.gens.len() {
            for j in i + 1..self.gens.len() {
                let (a, b) = (&self.gens[i], &self.gens[j]);
                if j == i + 1 {
                    if a.mul(b).mul(a) != b.mul(a).mul(b) {
                        return Err(Error::RelationViolation(format!(
                            "braid relation fails at s{} s{}",
                            i + 1,
                            j + 1
                        )));
                    }
                } else if a.mul(b) != b.mul(a) {
                    return Err(Error::RelationViolation(format!(
                        "locality fails at s{} s{}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Invariant-form property g^t B g = B for every generator.
    pub fn check_form_invariance(&self) -> Result<()> {
        let b = self.form_matrix();
        for (k, g) in self.gens.iter().enumerate() {
            if g.transpose().mul(&b).mul(g) != b {
                return Err(Error::RelationViolation(format!(
                    "form not invariant under s{}",
                    k + 1
                )));
            }
        }
        Ok(())
    }

    pub fn form_matrix(&self) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for (i, c) in self.form.iter().enumerate() {
            m[(i, i)] = c.clone();
        }
        m
    }

    /// Image of an arbitrary permutation: product of generators along a
    /// reduced word. Independence of the chosen word is a consequence of
    /// the Moore relations (and is tested, not assumed).
    pub fn perm_matrix(&self, p: &Perm) -> Matrix {
        assert_eq!(p.n(), self.n, "permutation size mismatch");
        let mut m = Matrix::identity(self.dim);
        for k in p.reduced_word() {
            m = m.mul(&self.gens[k - 1]);
        }
        m
    }

    pub fn direct_sum(&self, other: &SymRep) -> SymRep {
        assert_eq!(self.n, other.n);
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        let mut form = self.form.clone();
        form.extend(other.form.iter().cloned());
        let mut label = self.label.clone();
        for (p, m) in &other.label {
            match label.iter_mut().find(|(q, _)| q == p) {
                Some((_, mm)) => *mm += m,
                None => label.push((p.clone(), *m)),
            }
        }
        SymRep { n: self.n, dim: self.dim + other.dim, gens, form, label }
    }

    pub fn tensor(&self, other: &SymRep) -> SymRep {
        assert_eq!(self.n, other.n);
        let gens = self.gens.iter().zip(&other.gens).map(|(a, b)| a.kron(b)).collect();
        let mut form = Vec::with_capacity(self.dim * other.dim);
        for a in &self.form {
            for b in &other.form {
                form.push(a.mul(b));
            }
        }
        // tensor label left unresolved (would need Littlewood-Richardson)
        SymRep { n: self.n, dim: self.dim * other.dim, gens, form, label: vec![] }
    }

    /// Dual representation: generators transposed-inverted; for
    /// involutions this is plain transposition. The inverse diagonal form
    /// is invariant for it.
    pub fn dual(&self) -> SymRep {
        let gens = self.gens.iter().map(|g| g.transpose()).collect();
        let form = self.form.iter().map(|c| c.inv().expect("positive form")).collect();
        SymRep { n: self.n, dim: self.dim, gens, form, label: self.label.clone() }
    }

    /// Restriction to S_{n-1} (drop the last generator).
    pub fn restrict(&self) -> SymRep {
        assert!(self.n >= 2);
        SymRep {
            n: self.n - 1,
            dim: self.dim,
            gens: self.gens[..self.n - 2].to_vec(),
            form: self.form.clone(),
            label: vec![],
        }
    }

    /// Generators of the Young subgroup for a composition of n.
    pub fn young_subgroup_gens(&self, composition: &[usize]) -> Vec<Matrix> {
        assert_eq!(composition.iter().sum::<usize>(), self.n);
        let mut out = Vec::new();
        let mut offset = 0;
        for &part in composition {
            for k in offset + 1..offset + part {
                out.push(self.gens[k - 1].clone());
            }
            offset += part;
        }
        out
    }

    /// Basis of the space of matrices commuting with the images of all
    /// generators of the Young subgroup, by exact null-space computation.
    pub fn commutant_basis(&self, composition: &[usize]) -> Vec<Matrix> {
        let gens = self.young_subgroup_gens(composition);
        commutant_of(&gens, self.dim)
    }

    /// Character value on a permutation (trace of its matrix).
    pub fn character(&self, p: &Perm) -> FieldElem {
        self.perm_matrix(p).trace()
    }
}

/// Basis of {X : [X, g] = 0 for all g in gens} inside N x N matrices.
pub fn commutant_of(gens: &[Matrix], dim: usize) -> Vec<Matrix> {
    if gens.is_empty() {
        // every matrix commutes with nothing: the full space
        let mut out = Vec::new();
        for i in 0..dim * dim {
            let mut m = Matrix::zero(dim, dim);
            m[(i / dim, i % dim)] = FieldElem::one();
            out.push(m);
        }
        return out;
    }
    let n2 = dim * dim;
    let mut rows = Vec::new();
    for g in gens {
        // (gX - Xg) entry (i,j) as a linear functional of vec(X)
        for i in 0..dim {
            for j in 0..dim {
                let mut row = vec![FieldElem::zero(); n2];
                for k in 0..dim {
                    // g[i][k] X[k][j]
                    row[k * dim + j] = row[k * dim + j].add(&g[(i, k)]);
                    // - X[i][k] g[k][j]
                    row[i * dim + k] = row[i * dim + k].sub(&g[(k, j)]);
                }
                rows.push(row);
            }
        }
    }
    let sys = Matrix::from_rows(rows);
    sys.nullspace()
        .into_iter()
        .map(|v| Matrix::from_fn(dim, dim, |r, c| v[r * dim + c].clone()))
        .collect()
}

/// Basis of {X : X a(g) = b(g) X for all g}, i.e. Hom(a, b) for two sets of
/// generator images of equal index.
pub fn intertwiner_basis(a_gens: &[Matrix], b_gens: &[Matrix], a_dim: usize, b_dim: usize) -> Vec<Matrix> {
    assert_eq!(a_gens.len(), b_gens.len());
    let unknowns = b_dim * a_dim; // X is b_dim x a_dim
    let mut rows = Vec::new();
    for (ga, gb) in a_gens.iter().zip(b_gens) {
        for i in 0..b_dim {
            for j in 0..a_dim {
                let mut row = vec![FieldElem::zero(); unknowns];
                for k in 0..a_dim {
                    // X[i][k] a[k][j]
                    row[i * a_dim + k] = row[i * a_dim + k].add(&ga[(k, j)]);
                }
                for k in 0..b_dim {
                    // - b[i][k] X[k][j]
                    row[k * a_dim + j] = row[k * a_dim + j].sub(&gb[(i, k)]);
                }
                rows.push(row);
            }
        }
    }
    let sys = Matrix::from_rows(rows);
    sys.nullspace()
        .into_iter()
        .map(|v| Matrix::from_fn(b_dim, a_dim, |r, c| v[r * a_dim + c].clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn tableaux_counts() {
        assert_eq!(standard_tableaux(&part("2,1")).len(), 2);
        assert_eq!(standard_tableaux(&part("3,1")).len(), 3);
        assert_eq!(standard_tableaux(&part("2,2")).len(), 2);
        assert_eq!(standard_tableaux(&part("3,2")).len(), 5);
        assert_eq!(standard_tableaux(&part("4,1")).len(), 4);
    }

    #[test]
    fn moore_relations_all_irreps_small_n() {
        for n in 2..=6usize {
            for shape in all_partitions(n) {
                let rep = SymRep::irrep(&shape).unwrap();
                rep.check_moore_relations().unwrap();
                rep.check_form_invariance().unwrap();
            }
        }
    }

    pub fn all_partitions(n: usize) -> Vec<Partition> {
        fn rec(n: usize, maxp: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(maxp)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn trivial_and_sign() {
        let t = SymRep::trivial(4);
        assert_eq!(t.dim, 1);
        assert!(t.gens.iter().all(|g| *g == Matrix::identity(1)));
        let s = SymRep::sign(4);
        assert_eq!(s.dim, 1);
        assert!(s.gens.iter().all(|g| *g == Matrix::identity(1).neg()));
    }

    #[test]
    fn s3_std_character_of_transposition_is_zero() {
        let rep = SymRep::irrep(&part("2,1")).unwrap();
        assert_eq!(rep.dim, 2);
        let chi = rep.character(&Perm::transposition(3, 1, 2));
        assert!(chi.is_zero());
        // identity character = dimension
        assert_eq!(rep.character(&Perm::identity(3)), FieldElem::from_int(2));
    }

    #[test]
    fn perm_matrix_word_independence() {
        let rep = SymRep::irrep(&part("2,1")).unwrap();
        // (1 3) = s1 s2 s1 = s2 s1 s2
        let a = rep.gens[0].mul(&rep.gens[1]).mul(&rep.gens[0]);
        let b = rep.gens[1].mul(&rep.gens[0]).mul(&rep.gens[1]);
        assert_eq!(a, b);
        assert_eq!(rep.perm_matrix(&Perm::transposition(3, 1, 3)), a);
        // random consistency: matrix of a product = product of matrices
        for p in Perm::all(4) {
            let rep4 = SymRep::irrep(&part("3,1")).unwrap();
            let q = Perm::transposition(4, 2, 4);
            assert_eq!(
                rep4.perm_matrix(&p.compose(&q)),
                rep4.perm_matrix(&p).mul(&rep4.perm_matrix(&q))
            );
        }
    }

    #[test]
    fn commutant_dimensions() {
        // trivial of S3 under S_{2,1}: dimension 1
        let t = SymRep::trivial(3);
        assert_eq!(t.commutant_basis(&[2, 1]).len(), 1);
        // [2,1] + [3] under S_{2,1}: dimension 5
        let m = SymRep::irrep(&part("2,1")).unwrap().direct_sum(&SymRep::trivial(3));
        assert_eq!(m.commutant_basis(&[2, 1]).len(), 5);
        // [2,1] tensor [2,1] under S_{2,1}: dimension 8
        let sq = SymRep::irrep(&part("2,1")).unwrap();
        let sq = sq.tensor(&sq.clone());
        assert_eq!(sq.commutant_basis(&[2, 1]).len(), 8);
    }

    #[test]
    fn commutant_dim_equals_sum_of_squared_multiplicities() {
        // dim End_{S_{2,n-2}}(M) = sum over irreducibles of mult^2,
        // cross-checked against character inner products over the subgroup
        for (n, shapes) in [(4usize, vec!["3,1", "2,2"]), (3, vec!["2,1"])] {
            for s in shapes {
                let rep = SymRep::irrep(&part(s)).unwrap();
                let commutant_dim = rep.commutant_basis(&[2, n - 2]).len();
                // subgroup elements: S_2 x S_{n-2} embedded
                let mut subgroup = Vec::new();
                for p2 in Perm::all(2) {
                    for pr in Perm::all(n - 2) {
                        let mut images: Vec<usize> = (1..=n).collect();
                        images[0] = p2.apply(1);
                        images[1] = p2.apply(2);
                        for i in 1..=n - 2 {
                            images[i + 1] = pr.apply(i) + 2;
                        }
                        subgroup.push(Perm::new(images).unwrap());
                    }
                }
                // sum over subgroup of |chi(g)|^2 / |H| = sum of squared mults
                let mut acc = FieldElem::zero();
                for g in &subgroup {
                    let c = rep.character(g);
                    acc = acc.add(&c.mul(&c));
                }
                let card = FieldElem::from_int(subgroup.len() as i64);
                let expect = acc.div(&card).unwrap();
                assert_eq!(FieldElem::from_int(commutant_dim as i64), expect, "shape {s}");
            }
        }
    }

    #[test]
    fn dual_and_tensor_preserve_relations() {
        let rep = SymRep::irrep(&part("3,1")).unwrap();
        rep.dual().check_moore_relations().unwrap();
        rep.dual().check_form_invariance().unwrap();
        let t = rep.tensor(&rep.dual());
        t.check_moore_relations().unwrap();
        t.check_form_invariance().unwrap();
    }
}
