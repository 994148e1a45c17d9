use std::collections::HashMap;

use delorder::artinian::{l0_decomposition_check, predecessor_bound, PredecessorCounts};
use delorder::coxeter::preset;
use delorder::duality::{duality_report, labels, longest_element, minimal_coset_reps, LabelMethod};
use delorder::normal_forms::nf_rlex;
use delorder::{CoxeterSystem, GroupElement, Word};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

#[test]
fn duality_holds_in_types_a_b_and_dihedral() {
    let mut names = vec!["A2", "A3", "A4", "B2", "B3"];
    let dihedral: Vec<String> = (3..=10).map(|m| format!("I2({m})")).collect();
    names.extend(dihedral.iter().map(String::as_str));
    for name in names {
        let r = duality_report(&preset(name).unwrap(), name, LabelMethod::Graph).unwrap();
        assert!(r.holds, "{name}: {:?}", r.defects.first());
    }
}

#[test]
fn duality_fails_in_d5() {
    let d4 = preset("D4").unwrap();
    assert_eq!(d4.enumerate().unwrap().len(), 192);
    let sys = preset("D5").unwrap();
    let r = duality_report(&sys, "D5", LabelMethod::Graph).unwrap();
    assert!(!r.holds);
    assert_eq!(r.parabolic_order, 192);
    assert_eq!(r.coset_rep_labels.len(), 10);
    let d = r
        .defects
        .iter()
        .find(|d| d.element == w("s1s2s4s5"))
        .unwrap();
    assert_eq!(
        (d.label, d.dual_label, d.sum),
        (4 * 192 + 1, 5 * 192, 9 * 192 + 1)
    );
    assert!(r.defects.iter().all(|d| d.sum != 1921));

    let sorted = duality_report(&sys, "D5", LabelMethod::Sort).unwrap();
    assert_eq!(sorted, r);
}

#[test]
fn longest_element_reverses_length() {
    for name in ["A3", "B3"] {
        let sys = preset(name).unwrap();
        let w0 = longest_element(&sys).unwrap();
        let top = sys.length(&w0).unwrap();
        for g in sys.enumerate().unwrap() {
            let l = sys.length(&g).unwrap();
            assert!(l < top || g == w0);
            assert_eq!(sys.length(&sys.mul(&w0, &g).unwrap()).unwrap(), top - l);
        }
    }
}

struct Cosets {
    reps: Vec<GroupElement>,
    labels: HashMap<GroupElement, usize>,
    parabolic: usize,
}

impl Cosets {
    fn new(sys: &CoxeterSystem) -> Self {
        let lower: Vec<u8> = (1..sys.top()).collect();
        Cosets {
            reps: minimal_coset_reps(sys, &lower).unwrap(),
            labels: labels(sys, LabelMethod::Graph).unwrap(),
            parabolic: sys.enumerate_parabolic(&lower).unwrap().len(),
        }
    }

    // The representative of g·X and the element x with g = c·x.
    fn split(&self, sys: &CoxeterSystem, g: &GroupElement) -> (GroupElement, GroupElement) {
        let lower: Vec<u8> = (1..sys.top()).collect();
        for c in &self.reps {
            let x = sys.mul(&sys.inverse(c).unwrap(), g).unwrap();
            if nf_rlex(sys, &x)
                .unwrap()
                .letters()
                .iter()
                .all(|s| lower.contains(s))
            {
                return (c.clone(), x);
            }
        }
        panic!("no coset contains {g:?}");
    }
}

#[test]
fn labels_split_over_cosets() {
    for name in ["A3", "B3"] {
        let sys = preset(name).unwrap();
        let cosets = Cosets::new(&sys);
        let x_len = cosets.parabolic;
        for c in &cosets.reps {
            assert_eq!(
                cosets.labels[c],
                sys.length(c).unwrap() * x_len + 1,
                "{name}"
            );
        }
        for g in sys.enumerate().unwrap() {
            let (c, x) = cosets.split(&sys, &g);
            let (lw, lc, lx) = (cosets.labels[&g], cosets.labels[&c], cosets.labels[&x]);
            assert_eq!(lw + 1, lc + lx, "{name}");
            assert_eq!(lw, sys.length(&c).unwrap() * x_len + lx, "{name}");
        }
    }
}

#[test]
fn longest_element_pairs_cosets() {
    for (name, total) in [("A3", 3), ("A4", 4), ("B3", 5)] {
        let sys = preset(name).unwrap();
        let cosets = Cosets::new(&sys);
        let w0 = longest_element(&sys).unwrap();
        for c1 in &cosets.reps {
            let (c2, _) = cosets.split(&sys, &sys.mul(&w0, c1).unwrap());
            assert_eq!(
                sys.length(c1).unwrap() + sys.length(&c2).unwrap(),
                total,
                "{name}"
            );
        }
    }
}

#[test]
fn predecessor_count_decomposes_over_cosets() {
    for name in ["A2", "A3", "B3"] {
        let sys = preset(name).unwrap();
        let counts = PredecessorCounts::new(&sys).unwrap();
        let labels = labels(&sys, LabelMethod::Graph).unwrap();
        let mut literal_failures = 0;
        for g in sys.enumerate().unwrap() {
            assert_eq!(counts.get(&g).unwrap(), labels[&g] - 1);
            let check = l0_decomposition_check(&sys, &counts, &g).unwrap();
            assert!(check.per_index_holds(), "{name}: {check:?}");
            literal_failures += usize::from(!check.literal_holds());
        }
        assert!(literal_failures > 0, "{name}");
    }
}

#[test]
fn predecessor_bound_on_b3() {
    let sys = preset("B3").unwrap();
    let counts = PredecessorCounts::new(&sys).unwrap();
    for g in sys.enumerate().unwrap() {
        assert!(counts.get(&g).unwrap() as u128 <= predecessor_bound(&sys, &g).unwrap());
    }
}
