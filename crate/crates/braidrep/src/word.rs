//! Words over a finite alphabet: monomials of the free associative algebra.
//!
//! Includes shuffle products (for the grouplike test) and Lyndon words with
//! their standard bracketings (the Lie-series coordinates of the solver).

/// A word is a sequence of letter indices; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: u8) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Rank of this word among all words of the same length over `k`
    /// letters, in lexicographic order (base-k numeral).
    pub fn rank(&self, k: usize) -> usize {
        self.0.iter().fold(0, |acc, &l| acc * k + l as usize)
    }

    pub fn from_rank(mut r: usize, len: usize, k: usize) -> Word {
        let mut v = vec![0u8; len];
        for i in (0..len).rev() {
            v[i] = (r % k) as u8;
            r /= k;
        }
        Word(v)
    }
}

/// All words of exactly length `len` over `k` letters, lex order.
pub fn words_of_len(k: usize, len: usize) -> Vec<Word> {
    let total = k.pow(len as u32);
    (0..total).map(|r| Word::from_rank(r, len, k)).collect()
}

/// Shuffle product u ⧢ v as a multiset of words (repeats kept).
pub fn shuffle(u: &Word, v: &Word) -> Vec<Word> {
    fn rec(u: &[u8], v: &[u8], prefix: &mut Vec<u8>, out: &mut Vec<Word>) {
        if u.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(v);
            out.push(Word(w));
            return;
        }
        if v.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(u);
            out.push(Word(w));
            return;
        }
        prefix.push(u[0]);
        rec(&u[1..], v, prefix, out);
        prefix.pop();
        prefix.push(v[0]);
        rec(u, &v[1..], prefix, out);
        prefix.pop();
    }
    let mut out = Vec::new();
    rec(&u.0, &v.0, &mut Vec::new(), &mut out);
    out
}

fn is_lyndon(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    for i in 1..w.len() {
        if &w[i..] <= w {
            return false;
        }
    }
    true
}

/// Lyndon words of exactly length `len` over `k` letters, lex order.
pub fn lyndon_words(k: usize, len: usize) -> Vec<Word> {
    words_of_len(k, len).into_iter().filter(|w| is_lyndon(&w.0)).collect()
}

/// Standard factorization of a Lyndon word of length >= 2: w = u.v with v
/// the longest proper Lyndon suffix.
pub fn standard_factorization(w: &Word) -> (Word, Word) {
    debug_assert!(is_lyndon(&w.0) && w.len() >= 2);
    for i in 1..w.len() {
        if is_lyndon(&w.0[i..]) {
            return (Word(w.0[..i].to_vec()), Word(w.0[i..].to_vec()));
        }
    }
    unreachable!("every Lyndon word of length >= 2 has a proper Lyndon suffix");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lyndon_counts_two_letters() {
        // Witt numbers for a 2-letter alphabet
        let counts: Vec<usize> = (1..=6).map(|d| lyndon_words(2, d).len()).collect();
        assert_eq!(counts, vec![2, 1, 2, 3, 6, 9]);
    }

    #[test]
    fn shuffle_count() {
        let u = Word(vec![0, 0]);
        let v = Word(vec![1]);
        let sh = shuffle(&u, &v);
        assert_eq!(sh.len(), 3); // C(3,1)
    }

    #[test]
    fn factorization() {
        // aab = a . ab
        let w = Word(vec![0, 0, 1]);
        let (u, v) = standard_factorization(&w);
        assert_eq!(u, Word(vec![0]));
        assert_eq!(v, Word(vec![0, 1]));
    }
}
