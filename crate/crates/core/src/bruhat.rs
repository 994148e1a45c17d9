//! Bruhat order through the subword property.

use std::cmp::Ordering;

use serde::Serialize;

use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::Result;
use crate::normal_forms::nf_rlex;
use crate::word_order::is_subword;

/// `u ≤_B v`.
///
/// Scans one fixed reduced word of `v` from the right, keeping a residue of
/// `u`: whenever the current letter `s` is a right descent of the residue it
/// is stripped off. `u ≤ v` exactly when the residue ends at the identity.
/// This is the subword criterion with a greedy choice of embedding, valid
/// because `vs < v` implies `u ≤ v ⟺ min(u, us) ≤ vs`.
pub fn bruhat_leq(sys: &CoxeterSystem, u: &GroupElement, v: &GroupElement) -> Result<bool> {
    if sys.length(u)? > sys.length(v)? {
        return Ok(false);
    }
    let word = nf_rlex(sys, v)?;
    let mut residue = u.clone();
    for &s in word.letters().iter().rev() {
        if sys.is_right_descent(&residue, s)? {
            residue = sys.mul_gen(&residue, s)?;
        }
    }
    Ok(residue == sys.identity())
}

/// `u ≤_B v` by testing every reduced word of `u` for a subsequence
/// embedding into the given reduced word of `v`.
pub fn bruhat_leq_by_subwords(
    sys: &CoxeterSystem,
    u: &GroupElement,
    v_word: &crate::word::Word,
) -> Result<bool> {
    Ok(sys
        .reduced_words(u)?
        .iter()
        .any(|uw| is_subword(uw, v_word)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BruhatRelation {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl BruhatRelation {
    pub fn as_str(self) -> &'static str {
        match self {
            BruhatRelation::Less => "less",
            BruhatRelation::Greater => "greater",
            BruhatRelation::Equal => "equal",
            BruhatRelation::Incomparable => "incomparable",
        }
    }

    pub fn as_ordering(self) -> Option<Ordering> {
        match self {
            BruhatRelation::Less => Some(Ordering::Less),
            BruhatRelation::Greater => Some(Ordering::Greater),
            BruhatRelation::Equal => Some(Ordering::Equal),
            BruhatRelation::Incomparable => None,
        }
    }
}

pub fn bruhat_relation(
    sys: &CoxeterSystem,
    u: &GroupElement,
    v: &GroupElement,
) -> Result<BruhatRelation> {
    if u == v {
        return Ok(BruhatRelation::Equal);
    }
    Ok(if bruhat_leq(sys, u, v)? {
        BruhatRelation::Less
    } else if bruhat_leq(sys, v, u)? {
        BruhatRelation::Greater
    } else {
        BruhatRelation::Incomparable
    })
}
