//! Longest elements, minimal coset representatives and the duality property
//! `L(w) + L(ω0·w) = |W| + 1`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::cayley::{label_by_sorting, successor_label, CayleyGraph};
use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::{Error, Result};
use crate::normal_forms::{nf_rlex, sort_by_deletion_order};
use crate::word::{Letter, Word};

/// `ω0`, found by multiplying by ascents until none remain.
pub fn longest_element(sys: &CoxeterSystem) -> Result<GroupElement> {
    if !sys.is_finite() {
        return Err(Error::InfiniteGroup);
    }
    let mut g = sys.identity();
    'ascend: loop {
        for s in sys.generators() {
            if !sys.is_right_descent(&g, s)? {
                g = sys.mul_gen(&g, s)?;
                continue 'ascend;
            }
        }
        break;
    }
    if sys.mul(&g, &g)? != sys.identity() {
        return Err(Error::InvariantViolation(
            "longest element is not an involution".into(),
        ));
    }
    Ok(g)
}

/// Minimal-length representatives of the left cosets `c·W_J`, i.e. the
/// elements with no right descent in `J`, ordered by length and then by
/// `<_Δ^W`.
pub fn minimal_coset_reps(sys: &CoxeterSystem, subset: &[Letter]) -> Result<Vec<GroupElement>> {
    let mut reps = Vec::new();
    for g in sys.enumerate()? {
        if !sys.right_descents(&g)?.iter().any(|s| subset.contains(s)) {
            reps.push(g);
        }
    }
    let mut keyed = sort_by_deletion_order(sys, reps)?
        .into_iter()
        .map(|(g, w)| (w.len(), g))
        .collect::<Vec<_>>();
    keyed.sort_by_key(|(len, _)| *len);
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelMethod {
    /// Run the successor algorithm on the Cayley graph.
    #[default]
    Graph,
    /// Sort the elements by `<_Δ^W`.
    Sort,
}

/// `L(w)` for every element.
pub fn labels(sys: &CoxeterSystem, method: LabelMethod) -> Result<HashMap<GroupElement, usize>> {
    let graph = CayleyGraph::build(sys)?;
    let labeling = match method {
        LabelMethod::Graph => successor_label(&graph),
        LabelMethod::Sort => label_by_sorting(sys, &graph)?,
    };
    Ok(graph
        .vertices()
        .iter()
        .cloned()
        .zip(labeling.labels)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Defect {
    pub element: Word,
    pub label: usize,
    pub dual_label: usize,
    pub sum: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetRepLabel {
    pub rep: Word,
    pub length: usize,
    pub label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub group: String,
    pub order: usize,
    /// `|W_{s_1..s_{n-1}}|`.
    pub parabolic_order: usize,
    pub longest: Word,
    pub holds: bool,
    /// Violations in increasing `L(w)`.
    pub defects: Vec<Defect>,
    pub coset_rep_labels: Vec<CosetRepLabel>,
}

pub fn duality_report(
    sys: &CoxeterSystem,
    group: &str,
    method: LabelMethod,
) -> Result<DualityReport> {
    let w0 = longest_element(sys)?;
    let labels = labels(sys, method)?;
    let order = labels.len();
    let label = |g: &GroupElement| {
        labels
            .get(g)
            .copied()
            .ok_or_else(|| Error::InvariantViolation("element missing from the labelling".into()))
    };

    let mut defects = Vec::new();
    for (g, &l) in &labels {
        let dual_label = label(&sys.mul(&w0, g)?)?;
        if l + dual_label != order + 1 {
            defects.push(Defect {
                element: nf_rlex(sys, g)?,
                label: l,
                dual_label,
                sum: l + dual_label,
            });
        }
    }
    defects.sort_by_key(|d| d.label);

    let lower: Vec<Letter> = sys.generators().filter(|&s| s != sys.top()).collect();
    let coset_rep_labels = minimal_coset_reps(sys, &lower)?
        .iter()
        .map(|c| {
            Ok(CosetRepLabel {
                rep: nf_rlex(sys, c)?,
                length: sys.length(c)?,
                label: label(c)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let parabolic_order = sys.parabolic_order(&lower).ok_or(Error::InfiniteGroup)? as usize;

    Ok(DualityReport {
        group: group.to_string(),
        order,
        parabolic_order,
        longest: nf_rlex(sys, &w0)?,
        holds: defects.is_empty(),
        defects,
        coset_rep_labels,
    })
}

impl fmt::Display for DualityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "group {}: |W| = {}, |X| = {}",
            self.group, self.order, self.parabolic_order
        )?;
        writeln!(f, "longest element {}", self.longest.to_generator_string())?;
        writeln!(f, "coset representatives (c, length, L):")?;
        for c in &self.coset_rep_labels {
            writeln!(
                f,
                "  {} {} {}",
                c.rep.to_generator_string(),
                c.length,
                c.label
            )?;
        }
        if self.holds {
            writeln!(f, "duality holds")
        } else {
            writeln!(f, "duality fails at {} elements:", self.defects.len())?;
            write_defects(f, &self.defects, self.order)
        }
    }
}

/// Writes one line per defect: `w L(w) L(ω0 w) sum`.
pub fn write_defects(f: &mut impl fmt::Write, defects: &[Defect], order: usize) -> fmt::Result {
    for d in defects {
        writeln!(
            f,
            "  {} {} + {} = {} (expected {})",
            d.element.to_generator_string(),
            d.label,
            d.dual_label,
            d.sum,
            order + 1
        )?;
    }
    Ok(())
}
