//! The Artinian property of `<_Δ^W` and the predecessor-count decomposition.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::coxeter::classify::components;
use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::{Error, Result};
use crate::normal_forms::{coset_decompose, nf_rlex, sort_by_deletion_order};
use crate::word::Letter;
use crate::word_order;

/// Every element has finitely many `<_Δ^W`-predecessors exactly when the
/// parabolic subgroup on all generators but the greatest is finite.
pub fn is_artinian(sys: &CoxeterSystem) -> bool {
    let lower: Vec<Letter> = sys.generators().filter(|&s| s != sys.top()).collect();
    sys.is_finite_parabolic(&lower)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArtinianTag {
    Finite,
    /// Infinite, irreducible, and every maximal proper parabolic is finite.
    AffineOrCompactHyperbolicCandidate,
    Other,
}

impl fmt::Display for ArtinianTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArtinianTag::Finite => "finite",
            ArtinianTag::AffineOrCompactHyperbolicCandidate => {
                "affine-or-compact-hyperbolic-candidate"
            }
            ArtinianTag::Other => "other",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopVerdict {
    /// The generator placed last in the order.
    pub top: Letter,
    /// `|W_{S∖{top}}|`, absent when infinite.
    pub parabolic_order: Option<u128>,
    pub artinian: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArtinianReport {
    pub rank: usize,
    pub irreducible: bool,
    pub per_order: Vec<TopVerdict>,
    pub artinian_for_all_orders: bool,
    pub tag: ArtinianTag,
}

/// Checks the Artinian property for each choice of greatest generator.
/// Only the top generator matters, so `n` checks cover all `n!` orders.
pub fn artinian_all_orders(sys: &CoxeterSystem) -> ArtinianReport {
    let per_order: Vec<TopVerdict> = sys
        .generators()
        .map(|top| {
            let rest: Vec<Letter> = sys.generators().filter(|&s| s != top).collect();
            let parabolic_order = sys.parabolic_order(&rest);
            TopVerdict {
                top,
                parabolic_order,
                artinian: parabolic_order.is_some(),
            }
        })
        .collect();
    let all: Vec<usize> = (0..sys.rank()).collect();
    let irreducible = components(sys.matrix(), &all).len() <= 1;
    let artinian_for_all_orders = per_order.iter().all(|v| v.artinian);
    let tag = if sys.is_finite() {
        ArtinianTag::Finite
    } else if irreducible && artinian_for_all_orders {
        ArtinianTag::AffineOrCompactHyperbolicCandidate
    } else {
        ArtinianTag::Other
    };
    ArtinianReport {
        rank: sys.rank(),
        irreducible,
        per_order,
        artinian_for_all_orders,
        tag,
    }
}

impl fmt::Display for ArtinianReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "rank {}{}",
            self.rank,
            if self.irreducible { "" } else { ", reducible" }
        )?;
        for v in &self.per_order {
            let order = v
                .parabolic_order
                .map_or("infinite".to_string(), |o| o.to_string());
            writeln!(
                f,
                "top s{}: parabolic order {order}, {}",
                v.top,
                if v.artinian {
                    "artinian"
                } else {
                    "not artinian"
                }
            )?;
        }
        writeln!(
            f,
            "artinian for all orders: {}",
            self.artinian_for_all_orders
        )?;
        writeln!(f, "tag: {}", self.tag)
    }
}

/// `L_0(g) = |{u : u <_Δ^W g}|` for every element of a finite group.
#[derive(Debug, Clone)]
pub struct PredecessorCounts {
    counts: HashMap<GroupElement, usize>,
}

impl PredecessorCounts {
    pub fn new(sys: &CoxeterSystem) -> Result<Self> {
        let sorted = sort_by_deletion_order(sys, sys.enumerate()?)?;
        Ok(PredecessorCounts {
            counts: sorted
                .into_iter()
                .enumerate()
                .map(|(k, (g, _))| (g, k))
                .collect(),
        })
    }

    pub fn get(&self, g: &GroupElement) -> Result<usize> {
        self.counts
            .get(g)
            .copied()
            .ok_or_else(|| Error::InvariantViolation("element missing from the group".into()))
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

/// Both readings of the decomposition of `L_0(g)` over the coset factors
/// `g = w_n ⋯ w_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct L0Check {
    pub lhs: usize,
    /// `Σ_i L_0(w_i)`.
    pub per_index: usize,
    /// `n · L_0(w_n)`.
    pub literal: usize,
}

impl L0Check {
    pub fn per_index_holds(&self) -> bool {
        self.lhs == self.per_index
    }

    pub fn literal_holds(&self) -> bool {
        self.lhs == self.literal
    }
}

pub fn l0_decomposition_check(
    sys: &CoxeterSystem,
    counts: &PredecessorCounts,
    g: &GroupElement,
) -> Result<L0Check> {
    let d = coset_decompose(sys, g)?;
    let per_index = d
        .factors
        .iter()
        .map(|f| counts.get(f))
        .sum::<Result<usize>>()?;
    Ok(L0Check {
        lhs: counts.get(g)?,
        per_index,
        literal: sys.rank() * counts.get(&d.factors[0])?,
    })
}

/// `|W_{S∖{s_n}}|^(λ_n(NF(g)) + 1)`, an upper bound on the number of
/// predecessors of `g` in an Artinian order. Saturates at `u128::MAX`.
pub fn predecessor_bound(sys: &CoxeterSystem, g: &GroupElement) -> Result<u128> {
    let lower: Vec<Letter> = sys.generators().filter(|&s| s != sys.top()).collect();
    let base = sys.parabolic_order(&lower).ok_or(Error::InfiniteGroup)?;
    let exponent = word_order::lambda(&nf_rlex(sys, g)?, sys.top()) + 1;
    Ok((0..exponent).fold(1u128, |acc, _| acc.saturating_mul(base)))
}
