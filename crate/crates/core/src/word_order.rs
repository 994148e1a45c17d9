//! The deletion order on words and the constructions around it.
//!
//! For a word `w` and a pivot letter `a_j`, cutting `w` at every occurrence
//! of `a_j` gives its deletion sequence `[b_0, ..., b_l]`. Two words are
//! compared by first looking at the top letter: fewer blocks is smaller, and
//! on a tie the first differing pair of blocks is compared recursively with
//! the next letter down. Over a one-letter alphabet this reduces to comparing
//! lengths.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::Result;
use crate::word::{Alphabet, Letter, Word};

/// The blocks of a word between consecutive occurrences of a pivot letter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionSequence {
    pub pivot: Letter,
    pub blocks: Vec<Word>,
}

impl DeletionSequence {
    /// Number of blocks, `λ_j(w)`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    /// Always false: even the empty word has one (empty) block.
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Reassembles `b_0 a_j b_1 ... a_j b_l`.
    pub fn interleave(&self) -> Word {
        let mut letters = Vec::new();
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                letters.push(self.pivot);
            }
            letters.extend_from_slice(b.letters());
        }
        Word::from(letters)
    }
}

/// Splits `w` at every occurrence of `pivot`.
pub fn deletion_sequence(w: &Word, pivot: Letter) -> DeletionSequence {
    DeletionSequence {
        pivot,
        blocks: w.letters().split(|&l| l == pivot).map(Word::from).collect(),
    }
}

/// `λ_j(w)`: the number of blocks in the `a_j` deletion sequence, which is
/// one more than the number of occurrences of `a_j`.
pub fn lambda(w: &Word, j: Letter) -> usize {
    w.count(j) + 1
}

/// The deletion order `<_Δ`.
///
/// The result does not depend on the alphabet size as long as it covers both
/// words, so the recursion starts at the largest letter actually present.
pub fn compare(u: &Word, v: &Word) -> Ordering {
    let top = top_letter(u.letters(), v.letters());
    compare_below(u.letters(), v.letters(), top)
}

fn top_letter(u: &[Letter], v: &[Letter]) -> Letter {
    u.iter().chain(v).copied().max().unwrap_or(0)
}

// Both slices only use letters <= top.
fn compare_below(u: &[Letter], v: &[Letter], top: Letter) -> Ordering {
    if u == v {
        return Ordering::Equal;
    }
    let count_u = u.iter().filter(|&&l| l == top).count();
    let count_v = v.iter().filter(|&&l| l == top).count();
    if count_u != count_v {
        return count_u.cmp(&count_v);
    }
    let blocks_u = u.split(|&l| l == top);
    let blocks_v = v.split(|&l| l == top);
    for (b, c) in blocks_u.zip(blocks_v) {
        if b != c {
            return compare_below(b, c, top_letter(b, c));
        }
    }
    unreachable!("distinct words with equal deletion sequences")
}

/// Strict `u <_Δ v`.
pub fn less(u: &Word, v: &Word) -> bool {
    compare(u, v) == Ordering::Less
}

/// The factorisation `w = δ_n(w) δ_{n-1}(w) ... δ_1(w)`, returned top first.
///
/// `δ_n(w)` is the prefix of `w` up to and including its last `a_n`; each
/// following `δ_k` is the prefix of what remains up to and including its last
/// `a_k` (empty when there is none). Hence `δ_k(w)` only uses `a_1..a_k`.
pub fn delta_decomposition(w: &Word, n: Letter) -> Vec<Word> {
    let mut rest = w.letters();
    let mut factors = Vec::with_capacity(n as usize);
    for k in (1..=n).rev() {
        match rest.iter().rposition(|&l| l == k) {
            Some(p) => {
                factors.push(Word::from(&rest[..=p]));
                rest = &rest[p + 1..];
            }
            None => factors.push(Word::empty()),
        }
    }
    debug_assert!(rest.is_empty(), "word uses letters above {n}");
    factors
}

/// `δ_k(w)` with respect to an alphabet of size `n`.
pub fn delta(w: &Word, k: Letter, n: Letter) -> Word {
    assert!(k >= 1 && k <= n, "letter {k} outside 1..={n}");
    delta_decomposition(w, n).swap_remove((n - k) as usize)
}

/// `τ_k(w)`: the suffix after the last `a_k` (all of `w` if there is none),
/// so that `w = δ_k(w) τ_k(w)` when `a_k` is the top letter.
pub fn tau(w: &Word, k: Letter) -> Word {
    let letters = w.letters();
    match letters.iter().rposition(|&l| l == k) {
        Some(p) => Word::from(&letters[p + 1..]),
        None => w.clone(),
    }
}

/// `α(w) = [λ_n(δ_n(w⁻¹)), ..., λ_1(δ_1(w⁻¹))]`.
///
/// Entries are stored as block counts; [`AlphaVector::occurrences`] gives the
/// same vector shifted down by one. Both compare identically under `<_Lex`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct AlphaVector {
    pub entries: Vec<usize>,
}

impl AlphaVector {
    /// Letter counts rather than block counts: entry 1 is the number of `a_n`
    /// in `w`, entry 2 the number of `a_{n-1}` before the first `a_n`, etc.
    pub fn occurrences(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e - 1).collect()
    }
}

pub fn alpha(w: &Word, n: Letter) -> AlphaVector {
    let entries = delta_decomposition(&w.reversed(), n)
        .iter()
        .zip((1..=n).rev())
        .map(|(d, k)| lambda(d, k))
        .collect();
    AlphaVector { entries }
}

/// Whether `u` is a (not necessarily contiguous) subsequence of `v`.
pub fn is_subword(u: &Word, v: &Word) -> bool {
    let mut it = v.letters().iter();
    u.letters().iter().all(|l| it.any(|m| m == l))
}

/// Reading direction for lexicographic comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    LeftToRight,
    RightToLeft,
}

/// (Reverse) lexicographic comparison. When one word is a prefix (suffix, for
/// right-to-left) of the other, the shorter one is smaller.
pub fn compare_lex(u: &Word, v: &Word, direction: Direction) -> Ordering {
    match direction {
        Direction::LeftToRight => u.letters().cmp(v.letters()),
        Direction::RightToLeft => u.letters().iter().rev().cmp(v.letters().iter().rev()),
    }
}

/// Validating entry points for callers holding an [`Alphabet`].
impl Alphabet {
    pub fn deletion_sequence(&self, w: &Word, j: usize) -> Result<DeletionSequence> {
        let j = self.check_letter(j)?;
        self.check_word(w)?;
        Ok(deletion_sequence(w, j))
    }

    pub fn lambda(&self, w: &Word, j: usize) -> Result<usize> {
        let j = self.check_letter(j)?;
        self.check_word(w)?;
        Ok(lambda(w, j))
    }

    pub fn compare(&self, u: &Word, v: &Word) -> Result<Ordering> {
        self.check_word(u)?;
        self.check_word(v)?;
        Ok(compare(u, v))
    }

    pub fn delta(&self, w: &Word, k: usize) -> Result<Word> {
        let k = self.check_letter(k)?;
        self.check_word(w)?;
        Ok(delta(w, k, self.top()))
    }

    /// `τ_n(w)` for the top letter of this alphabet.
    pub fn tau(&self, w: &Word) -> Result<Word> {
        self.check_word(w)?;
        Ok(tau(w, self.top()))
    }

    pub fn alpha(&self, w: &Word) -> Result<AlphaVector> {
        self.check_word(w)?;
        Ok(alpha(w, self.top()))
    }

    pub fn is_subword(&self, u: &Word, v: &Word) -> Result<bool> {
        self.check_word(u)?;
        self.check_word(v)?;
        Ok(is_subword(u, v))
    }

    pub fn compare_lex(&self, u: &Word, v: &Word, direction: Direction) -> Result<Ordering> {
        self.check_word(u)?;
        self.check_word(v)?;
        Ok(compare_lex(u, v, direction))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn blocks(ds: &DeletionSequence) -> Vec<String> {
        ds.blocks.iter().map(|b| b.to_string()).collect()
    }

    #[test]
    fn deletion_sequences_of_the_worked_words() {
        let u = w("a1a2a3a1a2a2");
        let v = w("a1a2a3a2a1");
        let ww = w("a3a3");
        assert_eq!(blocks(&deletion_sequence(&u, 3)), ["a1 a2", "a1 a2 a2"]);
        assert_eq!(blocks(&deletion_sequence(&u, 2)), ["a1", "a3 a1", "e", "e"]);
        assert_eq!(blocks(&deletion_sequence(&u, 1)), ["e", "a2 a3", "a2 a2"]);
        assert_eq!(blocks(&deletion_sequence(&v, 3)), ["a1 a2", "a2 a1"]);
        assert_eq!(blocks(&deletion_sequence(&v, 2)), ["a1", "a3", "a1"]);
        assert_eq!(blocks(&deletion_sequence(&v, 1)), ["e", "a2 a3 a2", "e"]);
        assert_eq!(blocks(&deletion_sequence(&ww, 3)), ["e", "e", "e"]);
        assert_eq!(blocks(&deletion_sequence(&ww, 2)), ["a3 a3"]);
        assert_eq!(blocks(&deletion_sequence(&ww, 1)), ["a3 a3"]);
        assert_eq!(blocks(&deletion_sequence(&Word::empty(), 1)), ["e"]);
    }

    #[test]
    fn lambda_counts_blocks() {
        assert_eq!(lambda(&w("a3a3"), 3), 3);
        assert_eq!(lambda(&w("a1a2a3a1a2a2"), 2), 4);
        assert_eq!(lambda(&Word::empty(), 1), 1);
    }

    #[test]
    fn worked_comparisons() {
        let u = w("a1a2a3a1a2a2");
        let v = w("a1a2a3a2a1");
        let ww = w("a3a3");
        assert_eq!(compare(&v, &u), Ordering::Less);
        assert_eq!(compare(&u, &ww), Ordering::Less);
        assert_eq!(compare(&v, &ww), Ordering::Less);
        assert_eq!(compare(&Word::empty(), &Word::empty()), Ordering::Equal);
        // the inner step of the same comparison
        assert_eq!(compare(&w("a2a1"), &w("a1a2a2")), Ordering::Less);
    }

    #[test]
    fn one_letter_alphabet_compares_lengths() {
        assert_eq!(compare(&w("111"), &w("11")), Ordering::Greater);
        assert_eq!(compare(&Word::empty(), &w("1")), Ordering::Less);
    }

    #[test]
    fn delta_table() {
        let cases = [
            ("a1a2a3a1a2a2", ["a1 a2 a3", "a1 a2 a2", "e"]),
            ("a1a2a3a2a1", ["a1 a2 a3", "a2", "a1"]),
            ("a3a3", ["a3 a3", "e", "e"]),
        ];
        for (word, expected) in cases {
            let got: Vec<String> = delta_decomposition(&w(word), 3)
                .iter()
                .map(|d| d.to_string())
                .collect();
            assert_eq!(got, expected, "{word}");
        }
        assert_eq!(delta(&w("a1a2a3a1a2a2"), 2, 3), w("a1a2a2"));
        assert_eq!(tau(&w("a1a2a3a1a2a2"), 3), w("a1a2a2"));
        assert_eq!(tau(&w("a1a2"), 3), w("a1a2"));
    }

    #[test]
    fn alpha_examples() {
        let a = alpha(&w("a1a2a1a3a3a1a2"), 3);
        assert_eq!(a.occurrences(), [2, 1, 1]);
        assert_eq!(a.entries, [3, 2, 2]);
        assert_eq!(alpha(&w("a1a1a3a3a1a2"), 3).occurrences(), [2, 0, 2]);
        assert_eq!(alpha(&Word::empty(), 3).entries, [1, 1, 1]);
    }

    #[test]
    fn subwords() {
        assert!(is_subword(&w("a1a2a1"), &w("a3a1a1a2a1a3")));
        assert!(is_subword(&w("a1a2"), &w("a1a2")));
        assert!(is_subword(&Word::empty(), &w("a1")));
        assert!(!is_subword(&w("a3"), &w("a1a2")));
        assert!(!is_subword(&w("a2a1"), &w("a1a2")));
    }

    #[test]
    fn lexicographic() {
        use Direction::*;
        assert_eq!(
            compare_lex(&w("s2s1"), &w("s1s2"), RightToLeft),
            Ordering::Less
        );
        assert_eq!(
            compare_lex(&w("s2s1"), &w("s1s2"), LeftToRight),
            Ordering::Greater
        );
        assert_eq!(
            compare_lex(&w("121"), &w("121"), RightToLeft),
            Ordering::Equal
        );
        assert_eq!(
            compare_lex(&Word::empty(), &w("1"), RightToLeft),
            Ordering::Less
        );
        assert_eq!(
            compare_lex(&w("21"), &w("1"), RightToLeft),
            Ordering::Greater
        );
        assert_eq!(
            compare_lex(&w("12"), &w("1"), LeftToRight),
            Ordering::Greater
        );
    }

    #[test]
    fn alphabet_wrappers_reject_bad_letters() {
        let a = Alphabet::new(2).unwrap();
        assert!(a.deletion_sequence(&w("12"), 3).is_err());
        assert!(a.deletion_sequence(&w("13"), 1).is_err());
        assert!(a.compare(&w("1"), &w("3")).is_err());
        assert!(a.delta(&w("12"), 0).is_err());
        assert_eq!(a.tau(&w("1211")).unwrap(), w("11"));
    }
}
