#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeSet;

use delorder::cayley::CayleyGraph;
use delorder::word_order::{self, alpha, delta, tau};
use delorder::{CoxeterSystem, GroupElement, Letter, Word};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestError, TestRng, TestRunner};

pub mod oracles {
    use super::*;

    /// The deletion order by literal structural recursion over an alphabet of
    /// size `n`: compare block counts of `a_n`, then the blocks pairwise one
    /// letter down, bottoming out at word length over `{a_1}`.
    pub fn reference_compare(u: &Word, v: &Word, n: Letter) -> Ordering {
        if n <= 1 {
            return u.len().cmp(&v.len());
        }
        let su = word_order::deletion_sequence(u, n);
        let sv = word_order::deletion_sequence(v, n);
        if su.blocks.len() != sv.blocks.len() {
            return su.blocks.len().cmp(&sv.blocks.len());
        }
        for (b, c) in su.blocks.iter().zip(&sv.blocks) {
            match reference_compare(b, c, n - 1) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// All reduced words of `g`, built left to right: a letter `s` may be
    /// prepended to the remaining element `h` only when `s` is a left descent.
    pub fn brute_force_reduced_words(sys: &CoxeterSystem, g: &GroupElement) -> BTreeSet<Word> {
        fn go(
            sys: &CoxeterSystem,
            h: &GroupElement,
            prefix: &mut Vec<Letter>,
            out: &mut BTreeSet<Word>,
        ) {
            let len = sys.length(h).unwrap();
            if len == 0 {
                out.insert(Word::from(prefix.clone()));
                return;
            }
            let h_inv = sys.inverse(h).unwrap();
            for s in sys.generators() {
                // s·h = (h⁻¹·s)⁻¹
                let sh = sys.inverse(&sys.mul_gen(&h_inv, s).unwrap()).unwrap();
                if sys.length(&sh).unwrap() + 1 == len {
                    prefix.push(s);
                    go(sys, &sh, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        go(sys, g, &mut Vec::new(), &mut out);
        out
    }

    pub fn brute_force_nf_delta(sys: &CoxeterSystem, g: &GroupElement) -> Word {
        brute_force_reduced_words(sys, g)
            .into_iter()
            .min_by(|u, v| reference_compare(u, v, sys.top()))
            .unwrap()
    }

    /// Kruskal's algorithm on the Cayley graph with an `s_i`-edge weighing `i`.
    pub fn kruskal_weight(graph: &CayleyGraph) -> usize {
        let mut edges = graph.edges();
        edges.sort_by_key(|e| e.generator);
        let mut parent: Vec<usize> = (0..graph.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut weight = 0;
        for e in edges {
            let (a, b) = (find(&mut parent, e.from), find(&mut parent, e.to));
            if a != b {
                parent[a] = b;
                weight += e.generator as usize;
            }
        }
        weight
    }
}

pub const CASES: u32 = 10_000;

pub fn runner() -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases: CASES,
            failure_persistence: None,
            max_global_rejects: 10 * CASES,
            max_local_rejects: 50 * CASES,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

pub fn word_over(n: Letter, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(1..=n, 0..=max_len).prop_map(Word::from)
}

/// An alphabet size with two words over it.
pub fn word_pair() -> impl Strategy<Value = (Letter, Word, Word)> {
    (1..=4u8).prop_flat_map(|n| (Just(n), word_over(n, 9), word_over(n, 9)))
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

pub type SuiteResult = Result<(), TestError<String>>;

fn stringify<T: std::fmt::Debug>(r: Result<(), TestError<T>>) -> SuiteResult {
    r.map_err(|e| match e {
        TestError::Abort(why) => TestError::Abort(why),
        TestError::Fail(why, value) => TestError::Fail(why, format!("{value:?}")),
    })
}

fn cat(u: &Word, a: Letter) -> Word {
    u.concat(&Word::from([a]))
}

fn pre(a: Letter, u: &Word) -> Word {
    Word::from([a]).concat(u)
}

pub fn reference_equivalence() -> SuiteResult {
    stringify(runner().run(&word_pair(), |(n, u, v)| {
        check(
            word_order::compare(&u, &v) == oracles::reference_compare(&u, &v, n),
            || format!("{u} vs {v}"),
        )
    }))
}

pub fn totality_and_antisymmetry() -> SuiteResult {
    stringify(runner().run(&word_pair(), |(_, u, v)| {
        let uv = word_order::compare(&u, &v);
        let vu = word_order::compare(&v, &u);
        check(
            uv == vu.reverse() && (uv == Ordering::Equal) == (u == v),
            || format!("{u} vs {v}: {uv:?} / {vu:?}"),
        )
    }))
}

pub fn transitivity() -> SuiteResult {
    let triple = (1..=4u8).prop_flat_map(|n| (word_over(n, 8), word_over(n, 8), word_over(n, 8)));
    stringify(runner().run(&triple, |(a, b, c)| {
        let mut sorted = [a, b, c];
        sorted.sort_by(word_order::compare);
        let [x, y, z] = &sorted;
        check(word_order::compare(x, z) != Ordering::Greater, || {
            format!("{x} <= {y} <= {z} but {x} > {z}")
        })?;
        check(
            !(word_order::less(x, y) && word_order::less(y, z)) || word_order::less(x, z),
            || format!("{x} < {y} < {z} not transitive"),
        )
    }))
}

/// Deleting letters from a word moves it strictly down.
pub fn subwords_are_below() -> SuiteResult {
    let strat = (1..=4u8)
        .prop_flat_map(|n| word_over(n, 12))
        .prop_flat_map(|v| {
            let len = v.len();
            (Just(v), proptest::collection::vec(any::<bool>(), len))
        });
    stringify(runner().run(&strat, |(v, keep)| {
        let u = Word::from(
            v.letters()
                .iter()
                .zip(&keep)
                .filter(|(_, k)| **k)
                .map(|(l, _)| *l)
                .collect::<Vec<_>>(),
        );
        check(word_order::is_subword(&u, &v), || {
            "sampled word is not a subword".into()
        })?;
        check(u == v || word_order::less(&u, &v), || {
            format!("{u} is a subword of {v}")
        })
    }))
}

pub fn append_and_prepend() -> SuiteResult {
    let strat = word_pair().prop_flat_map(|(n, u, v)| (Just(u), Just(v), 1..=n));
    stringify(runner().run(&strat, |(u, v, a)| {
        let base = word_order::compare(&u, &v);
        check(
            word_order::compare(&cat(&u, a), &cat(&v, a)) == base,
            || format!("append {a} to {u}, {v}"),
        )?;
        check(
            word_order::compare(&pre(a, &u), &pre(a, &v)) == base,
            || format!("prepend {a} to {u}, {v}"),
        )
    }))
}

pub fn dichotomy() -> SuiteResult {
    stringify(runner().run(&word_pair(), |(n, u, v)| {
        let (du, dv) = (delta(&u, n, n), delta(&v, n, n));
        let (tu, tv) = (tau(&u, n), tau(&v, n));
        check(du.concat(&tu) == u, || format!("{u} != δ·τ"))?;
        let rhs = word_order::less(&du, &dv) || (du == dv && word_order::less(&tu, &tv));
        check(word_order::less(&u, &v) == rhs, || format!("{u} vs {v}"))
    }))
}

pub fn reconstruction() -> SuiteResult {
    let strat = (1..=4u8).prop_flat_map(|n| (word_over(n, 12), 1..=n));
    stringify(runner().run(&strat, |(w, j)| {
        check(
            word_order::deletion_sequence(&w, j).interleave() == w,
            || format!("{w} at {j}"),
        )
    }))
}

/// Generates `(n, u, v, a_i, a_j)` and keeps only samples meeting `keep`.
fn split_instances(
    keep: fn(&Word, &Word, Letter, Letter) -> bool,
) -> impl Strategy<Value = (Letter, Word, Word, Letter, Letter)> {
    (2..=4u8)
        .prop_flat_map(|n| (Just(n), word_over(n, 8), word_over(n, 8), 1..=n, 1..=n))
        .prop_filter("split hypotheses", move |(_, u, v, i, j)| {
            keep(u, v, *i, *j)
        })
}

pub fn split_on_right() -> SuiteResult {
    let hypotheses = |u: &Word, v: &Word, i: Letter, j: Letter| {
        let (ui, vj) = (cat(u, i), cat(v, j));
        word_order::less(u, &ui)
            && word_order::less(v, &ui)
            && word_order::less(u, &vj)
            && word_order::less(v, &vj)
    };
    stringify(
        runner().run(&split_instances(hypotheses), |(_, u, v, i, j)| {
            let lhs = word_order::less(&cat(&u, i), &cat(&v, j));
            let rhs = i < j || (i == j && word_order::less(&u, &v));
            check(lhs == rhs, || format!("u={u} v={v} a_i={i} a_j={j}"))
        }),
    )
}

pub fn split_on_left() -> SuiteResult {
    let hypotheses = |u: &Word, v: &Word, i: Letter, j: Letter| {
        let (iu, jv) = (pre(i, u), pre(j, v));
        i < j
            && word_order::less(u, &iu)
            && word_order::less(v, &iu)
            && word_order::less(u, &jv)
            && word_order::less(v, &jv)
    };
    stringify(
        runner().run(&split_instances(hypotheses), |(n, u, v, i, j)| {
            let (iu, jv) = (pre(i, &u), pre(j, &v));
            let (a_iu, a_jv) = (alpha(&iu, n), alpha(&jv, n));
            let k = (n - j) as usize;
            let first = word_order::less(&iu, &jv);
            let second = a_iu.entries[k] + 1 == a_jv.entries[k];
            let third = a_iu < a_jv;
            check(first == second && second == third, || {
                format!("u={u} v={v} a_i={i} a_j={j} n={n}: {first} {second} {third}")
            })
        }),
    )
}
