//! Graded quotients of a free associative algebra by homogeneous degree-2
//! relations, computed degree by degree with exact sparse row reduction.
//!
//! The main instance is the enveloping algebra of the infinitesimal braid
//! Lie algebra on 4 strands, the home of the pentagon equation. A second
//! instance adjoins a central generator for the central-shift identity.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::FieldElem;
use crate::series::TruncSeries;
use crate::word::Word;

/// Sparse vector over a basis indexed 0..dim.
pub type SparseVec = BTreeMap<usize, FieldElem>;

fn sv_add_scaled(dst: &mut SparseVec, src: &SparseVec, c: &FieldElem) {
    for (&i, v) in src {
        let cur = dst.get(&i).cloned().unwrap_or_else(FieldElem::zero);
        let nv = cur.add(&v.mul(c));
        if nv.is_zero() {
            dst.remove(&i);
        } else {
            dst.insert(i, nv);
        }
    }
}

/// A homogeneous degree-2 relation: a linear combination of length-2 words.
#[derive(Clone, Debug)]
pub struct Relation {
    pub terms: Vec<(u8, u8, FieldElem)>,
}

impl Relation {
    /// [g_a, g_b] = g_a g_b - g_b g_a = 0.
    pub fn commutator(a: u8, b: u8) -> Self {
        Relation {
            terms: vec![(a, b, FieldElem::one()), (b, a, FieldElem::one().neg())],
        }
    }

    /// [g_a, g_b + g_c] = 0.
    pub fn commutator_sum(a: u8, b: u8, c: u8) -> Self {
        Relation {
            terms: vec![
                (a, b, FieldElem::one()),
                (a, c, FieldElem::one()),
                (b, a, FieldElem::one().neg()),
                (c, a, FieldElem::one().neg()),
            ],
        }
    }
}

/// Per-degree data of the quotient.
struct DegreeSlice {
    /// ranks (base-ngens numerals) of the standard words forming the basis
    basis_ranks: Vec<usize>,
    /// rank of a standard word -> its index in `basis_ranks`
    basis_index: BTreeMap<usize, usize>,
    /// pivot word rank -> expansion over the standard basis
    pivot_expansion: BTreeMap<usize, SparseVec>,
}

pub struct GradedQuotient {
    pub ngens: usize,
    pub deg: usize,
    pub gen_names: Vec<String>,
    relations: Vec<Relation>,
    slices: Vec<DegreeSlice>, // index = degree, 0..=deg
}

/// Hard cap on the truncation degree; the degree-d slice of the free
/// algebra on 6 generators has 6^d words.
pub const MAX_QUOTIENT_DEGREE: usize = 6;

impl GradedQuotient {
    pub fn new(
        gen_names: Vec<String>,
        relations: Vec<Relation>,
        deg: usize,
    ) -> Result<GradedQuotient> {
        let ngens = gen_names.len();
        if deg > MAX_QUOTIENT_DEGREE {
            return Err(Error::DegreeTooLarge(deg, MAX_QUOTIENT_DEGREE));
        }
        if ngens == 0 || ngens > 64 {
            return Err(Error::Invalid("generator count out of range".into()));
        }
        for r in &relations {
            for &(a, b, _) in &r.terms {
                if a as usize >= ngens || b as usize >= ngens {
                    return Err(Error::Invalid("relation letter out of range".into()));
                }
            }
        }
        let mut q = GradedQuotient { ngens, deg, gen_names, relations, slices: Vec::new() };
        for d in 0..=deg {
            let slice = q.build_slice(d);
            q.slices.push(slice);
        }
        Ok(q)
    }

    fn build_slice(&self, d: usize) -> DegreeSlice {
        let k = self.ngens;
        if d < 2 {
            // no relations below degree 2: all words are standard
            let total = k.pow(d as u32);
            return DegreeSlice {
                basis_ranks: (0..total).collect(),
                basis_index: (0..total).map(|r| (r, r)).collect(),
                pivot_expansion: BTreeMap::new(),
            };
        }
        let total = k.pow(d as u32);
        // rows of the degree-d slice of the two-sided ideal: u * rel * v
        // with |u| + |v| = d - 2; echelonized on the fly, pivot = largest
        // word rank present.
        let mut pivot_rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
        let reduce = |row: &mut SparseVec, pivot_rows: &BTreeMap<usize, SparseVec>| loop {
            let top = row.iter().next_back().map(|(&p, c)| (p, c.clone()));
            let Some((p, c)) = top else { break };
            let Some(prow) = pivot_rows.get(&p) else { break };
            sv_add_scaled(row, prow, &c.neg());
        };
        for ulen in 0..=(d - 2) {
            let vlen = d - 2 - ulen;
            let ucount = k.pow(ulen as u32);
            let vcount = k.pow(vlen as u32);
            for urank in 0..ucount {
                for vrank in 0..vcount {
                    for rel in &self.relations {
                        let mut row: SparseVec = BTreeMap::new();
                        for &(a, b, ref c) in &rel.terms {
                            // rank of u . a b . v
                            let rank = ((urank * k + a as usize) * k + b as usize)
                                * vcount
                                + vrank;
                            let cur = row.get(&rank).cloned().unwrap_or_else(FieldElem::zero);
                            let nv = cur.add(c);
                            if nv.is_zero() {
                                row.remove(&rank);
                            } else {
                                row.insert(rank, nv);
                            }
                        }
                        reduce(&mut row, &pivot_rows);
                        if let Some((&p, c)) = row.iter().next_back() {
                            let inv = c.inv().unwrap();
                            let mut norm: SparseVec = BTreeMap::new();
                            for (&i, v) in &row {
                                norm.insert(i, v.mul(&inv));
                            }
                            pivot_rows.insert(p, norm);
                        }
                    }
                }
            }
        }
        // full back-substitution so every pivot row is expressed over
        // non-pivot (standard) words only
        let pivots: Vec<usize> = pivot_rows.keys().copied().collect();
        for &p in pivots.iter().rev() {
            let mut row = pivot_rows.remove(&p).unwrap();
            loop {
                let mut target = None;
                for (&i, _) in row.iter().rev() {
                    if i != p && pivot_rows.contains_key(&i) {
                        target = Some(i);
                        break;
                    }
                }
                let Some(i) = target else { break };
                let c = row.get(&i).cloned().unwrap();
                let prow = pivot_rows.get(&i).unwrap().clone();
                sv_add_scaled(&mut row, &prow, &c.neg());
            }
            pivot_rows.insert(p, row);
        }
        let basis_ranks: Vec<usize> =
            (0..total).filter(|r| !pivot_rows.contains_key(r)).collect();
        let basis_index: BTreeMap<usize, usize> =
            basis_ranks.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        // pivot word w with reduced row (w + sum c_s s = 0) gives the class
        // of w as -sum c_s s over standard words
        let mut pivot_expansion = BTreeMap::new();
        for (p, row) in pivot_rows {
            let mut exp: SparseVec = BTreeMap::new();
            for (i, c) in row {
                if i == p {
                    continue;
                }
                let idx = *basis_index.get(&i).expect("reduced row touches only standard words");
                exp.insert(idx, c.neg());
            }
            pivot_expansion.insert(p, exp);
        }
        DegreeSlice { basis_ranks, basis_index, pivot_expansion }
    }

    /// Dimension of the degree-d slice of the quotient.
    pub fn dim(&self, d: usize) -> usize {
        self.slices[d].basis_ranks.len()
    }

    /// Class of an arbitrary word given by its rank in its degree.
    fn class_of_rank(&self, d: usize, rank: usize) -> SparseVec {
        let slice = &self.slices[d];
        if let Some(&i) = slice.basis_index.get(&rank) {
            let mut v = BTreeMap::new();
            v.insert(i, FieldElem::one());
            v
        } else {
            slice.pivot_expansion.get(&rank).cloned().expect("word is standard or pivot")
        }
    }

    pub fn zero(&self) -> QuotElem<'_> {
        QuotElem { q: self, comps: vec![BTreeMap::new(); self.deg + 1] }
    }

    pub fn one(&self) -> QuotElem<'_> {
        let mut e = self.zero();
        e.comps[0].insert(0, FieldElem::one());
        e
    }

    /// The class of generator `g` (degree 1).
    pub fn generator(&self, g: usize) -> QuotElem<'_> {
        assert!(g < self.ngens);
        let mut e = self.zero();
        e.comps[1].insert(g, FieldElem::one());
        e
    }

    /// A linear combination of generators.
    pub fn linear(&self, coeffs: &[(usize, FieldElem)]) -> QuotElem<'_> {
        let mut e = self.zero();
        for (g, c) in coeffs {
            let cur = e.comps[1].get(g).cloned().unwrap_or_else(FieldElem::zero);
            let nv = cur.add(c);
            if nv.is_zero() {
                e.comps[1].remove(g);
            } else {
                e.comps[1].insert(*g, nv);
            }
        }
        e
    }

    /// Evaluates a two-letter (or multi-letter) series on degree-1 images.
    pub fn substitute_series<'a>(
        &'a self,
        s: &TruncSeries,
        images: &[QuotElem<'a>],
    ) -> QuotElem<'a> {
        assert_eq!(images.len(), s.nletters());
        for im in images {
            assert!(
                im.comps.iter().enumerate().all(|(d, c)| d == 1 || c.is_empty()),
                "letter images must be homogeneous of degree 1"
            );
        }
        let mut out = self.zero();
        for (w, c) in s.iter() {
            if w.len() > self.deg {
                continue;
            }
            let mut item = self.one();
            for &l in &w.0 {
                item = item.mul(&images[l as usize]);
            }
            out = out.add(&item.scale(c));
        }
        out
    }

    /// The rank of the concatenation of a degree-d word (by rank) with a
    /// generator letter.
    fn append_rank(&self, rank_d: usize, g: usize) -> usize {
        rank_d * self.ngens + g
    }
}

/// An element of the graded quotient, stored per degree over the standard
/// word basis.
#[derive(Clone)]
pub struct QuotElem<'a> {
    q: &'a GradedQuotient,
    comps: Vec<SparseVec>,
}

impl<'a> QuotElem<'a> {
    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_empty())
    }

    pub fn add(&self, other: &QuotElem<'a>) -> QuotElem<'a> {
        assert!(std::ptr::eq(self.q, other.q), "elements of different quotients");
        let mut out = self.clone();
        for d in 0..=self.q.deg {
            sv_add_scaled(&mut out.comps[d], &other.comps[d], &FieldElem::one());
        }
        out
    }

    pub fn sub(&self, other: &QuotElem<'a>) -> QuotElem<'a> {
        self.add(&other.scale(&FieldElem::one().neg()))
    }

    pub fn scale(&self, c: &FieldElem) -> QuotElem<'a> {
        if c.is_zero() {
            return self.q.zero();
        }
        let mut out = self.clone();
        for comp in &mut out.comps {
            for v in comp.values_mut() {
                *v = v.mul(c);
            }
        }
        out
    }

    /// Multiply on the right by a single generator.
    fn mul_gen(&self, g: usize) -> QuotElem<'a> {
        let mut out = self.q.zero();
        for d in 0..self.q.deg {
            for (&i, c) in &self.comps[d] {
                let rank = self.q.append_rank(self.q.slices[d].basis_ranks[i], g);
                let class = self.q.class_of_rank(d + 1, rank);
                sv_add_scaled(&mut out.comps[d + 1], &class, c);
            }
        }
        out
    }

    pub fn mul(&self, other: &QuotElem<'a>) -> QuotElem<'a> {
        assert!(std::ptr::eq(self.q, other.q), "elements of different quotients");
        let mut out = self.q.zero();
        for e in 0..=self.q.deg {
            if other.comps[e].is_empty() {
                continue;
            }
            for (&j, c) in &other.comps[e] {
                // reconstruct the word of the right factor and multiply
                // letter by letter
                let rank = self.q.slices[e].basis_ranks[j];
                let w = Word::from_rank(rank, e, self.q.ngens);
                let mut item = self.clone();
                for &l in &w.0 {
                    item = item.mul_gen(l as usize);
                }
                out = out.add(&item.scale(c));
            }
        }
        out
    }

    pub fn exp(&self) -> Result<QuotElem<'a>> {
        if !self.comps[0].is_empty() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut out = self.q.one();
        let mut term = self.q.one();
        for k in 1..=self.q.deg {
            term = term.mul(self).scale(&FieldElem::from_frac(1, k as i64));
            if term.is_zero() {
                break;
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Degree-d component as a dense coefficient vector over the basis.
    pub fn component(&self, d: usize) -> Vec<FieldElem> {
        let mut v = vec![FieldElem::zero(); self.q.dim(d)];
        for (&i, c) in &self.comps[d] {
            v[i] = c.clone();
        }
        v
    }

    pub fn top_nonzero_degree(&self) -> Option<usize> {
        (0..=self.q.deg).rev().find(|&d| !self.comps[d].is_empty())
    }
}

/// The infinitesimal braid relations on 4 strands. Generator order:
/// t12, t13, t14, t23, t24, t34.
pub fn t4_relations() -> (Vec<String>, Vec<Relation>) {
    let names: Vec<String> =
        ["t12", "t13", "t14", "t23", "t24", "t34"].iter().map(|s| s.to_string()).collect();
    let idx = |i: usize, j: usize| -> u8 {
        match (i.min(j), i.max(j)) {
            (1, 2) => 0,
            (1, 3) => 1,
            (1, 4) => 2,
            (2, 3) => 3,
            (2, 4) => 4,
            (3, 4) => 5,
            _ => unreachable!(),
        }
    };
    let mut rels = Vec::new();
    // disjoint pairs commute
    rels.push(Relation::commutator(idx(1, 2), idx(3, 4)));
    rels.push(Relation::commutator(idx(1, 3), idx(2, 4)));
    rels.push(Relation::commutator(idx(1, 4), idx(2, 3)));
    // triple relations: [t_ij, t_ik + t_jk] = 0 (two independent per triple)
    for tri in [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]] {
        let [a, b, c] = tri;
        rels.push(Relation::commutator_sum(idx(a, b), idx(a, c), idx(b, c)));
        rels.push(Relation::commutator_sum(idx(a, c), idx(a, b), idx(b, c)));
    }
    (names, rels)
}

/// U T_4 truncated at the given degree.
pub fn build_ut4(deg: usize) -> Result<GradedQuotient> {
    let (names, rels) = t4_relations();
    GradedQuotient::new(names, rels, deg)
}

/// Free algebra on A, B extended by a central generator Z.
pub fn build_ab_central(deg: usize) -> Result<GradedQuotient> {
    let names = vec!["A".to_string(), "B".to_string(), "Z".to_string()];
    let rels = vec![Relation::commutator(2, 0), Relation::commutator(2, 1)];
    GradedQuotient::new(names, rels, deg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations_vanish() {
        let q = build_ut4(2).unwrap();
        // [t12, t34] = 0 in degree 2
        let t12 = q.generator(0);
        let t34 = q.generator(5);
        let comm = t12.mul(&t34).sub(&t34.mul(&t12));
        assert!(comm.is_zero());
        // [t12, t13 + t23] = 0
        let t13 = q.generator(1);
        let t23 = q.generator(3);
        let s = t13.add(&t23);
        assert!(t12.mul(&s).sub(&s.mul(&t12)).is_zero());
    }

    #[test]
    fn degree_one_dimension() {
        let q = build_ut4(1).unwrap();
        assert_eq!(q.dim(1), 6);
    }

    #[test]
    fn degree_two_dimension_matches_relation_count() {
        // 36 free words minus 11 independent relations
        let q = build_ut4(2).unwrap();
        assert_eq!(q.dim(2), 25);
    }

    #[test]
    fn central_generator_commutes() {
        let q = build_ab_central(3).unwrap();
        let a = q.generator(0);
        let z = q.generator(2);
        assert!(a.mul(&z).sub(&z.mul(&a)).is_zero());
        // but A and B do not commute
        let b = q.generator(1);
        assert!(!a.mul(&b).sub(&b.mul(&a)).is_zero());
    }

    #[test]
    fn resource_guard() {
        assert!(build_ut4(7).is_err());
    }
}
