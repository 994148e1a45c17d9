//! Normal forms of group elements and the induced total order on `W`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::Result;
use crate::word::Word;
use crate::word_order::{self, Direction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NormalFormKind {
    /// Least reduced word under the deletion order.
    Delta,
    /// Least reduced word under right-to-left lexicographic order.
    RLex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub element: GroupElement,
    pub word: Word,
    pub kind: NormalFormKind,
}

/// The right-to-left lexicographically least reduced word of `g`.
///
/// Built from the right: the last letter is the least right descent `s` of
/// `g`, preceded by the normal form of `gs`.
pub fn nf_rlex(sys: &CoxeterSystem, g: &GroupElement) -> Result<Word> {
    sys.reduced_word(g)
}

/// The `<_Δ`-least word among all reduced words of `g`, by exhaustive
/// enumeration. Only feasible while `ℓ(g)` is within the reduced-word cap.
pub fn nf_delta_oracle(sys: &CoxeterSystem, g: &GroupElement) -> Result<Word> {
    Ok(sys
        .reduced_words(g)?
        .into_iter()
        .min_by(word_order::compare)
        .expect("every element has a reduced word"))
}

/// The RLex-least reduced word, by exhaustive enumeration.
pub fn nf_rlex_oracle(sys: &CoxeterSystem, g: &GroupElement) -> Result<Word> {
    Ok(sys
        .reduced_words(g)?
        .into_iter()
        .min_by(|u, v| word_order::compare_lex(u, v, Direction::RightToLeft))
        .expect("every element has a reduced word"))
}

pub fn normal_form(
    sys: &CoxeterSystem,
    g: &GroupElement,
    kind: NormalFormKind,
) -> Result<NormalForm> {
    let word = match kind {
        NormalFormKind::RLex => nf_rlex(sys, g)?,
        NormalFormKind::Delta => nf_delta_oracle(sys, g)?,
    };
    Ok(NormalForm {
        element: g.clone(),
        word,
        kind,
    })
}

/// `<_Δ^W`: compares the normal forms of two elements.
pub fn compare_elements(
    sys: &CoxeterSystem,
    g: &GroupElement,
    h: &GroupElement,
) -> Result<Ordering> {
    if g == h {
        return Ok(Ordering::Equal);
    }
    Ok(word_order::compare(&nf_rlex(sys, g)?, &nf_rlex(sys, h)?))
}

/// Sorts elements by `<_Δ^W`, computing each normal form once.
pub fn sort_by_deletion_order(
    sys: &CoxeterSystem,
    elements: Vec<GroupElement>,
) -> Result<Vec<(GroupElement, Word)>> {
    let mut keyed = elements
        .into_iter()
        .map(|g| nf_rlex(sys, &g).map(|w| (g, w)))
        .collect::<Result<Vec<_>>>()?;
    keyed.sort_by(|a, b| word_order::compare(&a.1, &b.1));
    Ok(keyed)
}

/// The factorisation `g = w_n ⋯ w_1` in which each `w_i` is the identity or
/// a minimal left coset representative of `W_{s_1..s_{i-1}}` in
/// `W_{s_1..s_i}`. `factors[0]` is `w_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub factors: Vec<GroupElement>,
    /// RLex normal forms of the factors, in the same order.
    pub words: Vec<Word>,
}

impl CosetDecomposition {
    /// `w_i` for `i` in `1..=n`.
    pub fn factor(&self, i: usize) -> &GroupElement {
        &self.factors[self.factors.len() - i]
    }

    /// The tail `w_{n-1} ⋯ w_1` as a word.
    pub fn tail_word(&self) -> Word {
        self.words[1..]
            .iter()
            .fold(Word::empty(), |acc, w| acc.concat(w))
    }
}

/// Splits the RLex normal form of `g` at the last occurrence of each
/// generator in turn, from the top down.
pub fn coset_decompose(sys: &CoxeterSystem, g: &GroupElement) -> Result<CosetDecomposition> {
    let nf = nf_rlex(sys, g)?;
    let words = word_order::delta_decomposition(&nf, sys.top());
    let factors = words
        .iter()
        .map(|w| sys.element(w))
        .collect::<Result<Vec<_>>>()?;
    Ok(CosetDecomposition { factors, words })
}
