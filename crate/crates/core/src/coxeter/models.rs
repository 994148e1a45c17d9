//! Concrete realisations of Coxeter groups.
//!
//! Every model encodes an element as a short integer vector wrapped in a
//! [`GroupElement`] and only needs to support right multiplication by a
//! generator and the length function. Generators are the model's own
//! 0-based standard labels; the system maps its generators onto them.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Mutex;

use serde::Serialize;

use super::matrix::CoxeterMatrix;
use crate::error::{Error, Result};

/// An element of a group model. Opaque outside the model that produced it,
/// but hashable and totally ordered so it can key maps.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Box<[i32]>);

impl GroupElement {
    fn new(data: Vec<i32>) -> Self {
        GroupElement(data.into_boxed_slice())
    }

    fn data(&self) -> &[i32] {
        &self.0
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement{:?}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ModelKind {
    /// Type `A_n` acting on `1..=n+1`.
    Permutation,
    /// Type `B_n` acting on `±1..=±n`.
    SignedPermutation,
    /// Type `D_n`, the even signed permutations.
    EvenSignedPermutation,
    /// Rank two, `I_2(m)` with `m` finite or infinite.
    Dihedral,
    /// Any matrix, elements as canonical reduced words.
    Tits,
}

pub trait GroupModel: Send + Sync + fmt::Debug {
    fn kind(&self) -> ModelKind;

    fn rank(&self) -> usize;

    fn identity(&self) -> GroupElement;

    /// `g · s` for a 0-based model generator `s`.
    fn mul_gen(&self, g: &GroupElement, s: usize) -> Result<GroupElement>;

    /// `ℓ(g)`.
    fn length(&self, g: &GroupElement) -> Result<usize>;

    /// Whether `ℓ(g·s) < ℓ(g)`.
    fn is_descent(&self, g: &GroupElement, s: usize) -> Result<bool> {
        Ok(self.length(&self.mul_gen(g, s)?)? < self.length(g)?)
    }

    /// One-line notation `(1)g, (2)g, ...` for (signed) permutation models.
    fn permutation_image(&self, _g: &GroupElement) -> Option<Vec<i32>> {
        None
    }
}

// ---------------------------------------------------------------------------
// Type A
// ---------------------------------------------------------------------------

/// `A_n` as the symmetric group on `n + 1` points. Generator `k` is the
/// transposition `(k+1, k+2)`; elements are stored as `(i)g` for each point
/// `i`, so right multiplication acts on the stored values.
#[derive(Debug, Clone)]
pub struct PermutationModel {
    rank: usize,
}

impl PermutationModel {
    pub fn new(rank: usize) -> Self {
        PermutationModel { rank }
    }
}

impl GroupModel for PermutationModel {
    fn kind(&self) -> ModelKind {
        ModelKind::Permutation
    }

    fn rank(&self) -> usize {
        self.rank
    }

    fn identity(&self) -> GroupElement {
        GroupElement::new((1..=self.rank as i32 + 1).collect())
    }

    fn mul_gen(&self, g: &GroupElement, s: usize) -> Result<GroupElement> {
        let (a, b) = (s as i32 + 1, s as i32 + 2);
        Ok(GroupElement::new(
            g.data()
                .iter()
                .map(|&v| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                })
                .collect(),
        ))
    }

    fn length(&self, g: &GroupElement) -> Result<usize> {
        Ok(inversions(g.data()))
    }

    fn is_descent(&self, g: &GroupElement, s: usize) -> Result<bool> {
        let (a, b) = (s as i32 + 1, s as i32 + 2);
        let pos = |v: i32| g.data().iter().position(|&x| x == v);
        Ok(pos(b) < pos(a))
    }

    fn permutation_image(&self, g: &GroupElement) -> Option<Vec<i32>> {
        Some(g.data().to_vec())
    }
}

fn inversions(a: &[i32]) -> usize {
    let mut count = 0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i] > a[j] {
                count += 1;
            }
        }
    }
    count
}

// ---------------------------------------------------------------------------
// Types B and D
// ---------------------------------------------------------------------------

/// Signed permutations of `±1..=±n`, stored as `(i)g` for `i = 1..=n`.
///
/// Type `B_n`: generator 0 swaps `1 ↔ -1`, generator `k ≥ 1` swaps
/// `k ↔ k+1`, so 0 and 1 carry the bond 4.
///
/// Type `D_n`: generator 0 swaps `1 ↔ -2`, generator `k ≥ 1` swaps
/// `k ↔ k+1`. Generators 0 and 1 both hang off generator 2.
#[derive(Debug, Clone)]
pub struct SignedPermutationModel {
    rank: usize,
    even: bool,
}

impl SignedPermutationModel {
    pub fn type_b(rank: usize) -> Self {
        SignedPermutationModel { rank, even: false }
    }

    pub fn type_d(rank: usize) -> Self {
        assert!(rank >= 2);
        SignedPermutationModel { rank, even: true }
    }

    fn apply(&self, v: i32, s: usize) -> i32 {
        let sign = v.signum();
        let abs = v.abs();
        if s == 0 {
            if !self.even {
                return if abs == 1 { -v } else { v };
            }
            return match abs {
                1 => -2 * sign,
                2 => -sign,
                _ => v,
            };
        }
        let (a, b) = (s as i32, s as i32 + 1);
        if abs == a {
            sign * b
        } else if abs == b {
            sign * a
        } else {
            v
        }
    }
}

impl GroupModel for SignedPermutationModel {
    fn kind(&self) -> ModelKind {
        if self.even {
            ModelKind::EvenSignedPermutation
        } else {
            ModelKind::SignedPermutation
        }
    }

    fn rank(&self) -> usize {
        self.rank
    }

    fn identity(&self) -> GroupElement {
        GroupElement::new((1..=self.rank as i32).collect())
    }

    fn mul_gen(&self, g: &GroupElement, s: usize) -> Result<GroupElement> {
        Ok(GroupElement::new(
            g.data().iter().map(|&v| self.apply(v, s)).collect(),
        ))
    }

    fn length(&self, g: &GroupElement) -> Result<usize> {
        let a = g.data();
        let mut len = inversions(a);
        for i in 0..a.len() {
            // type B also counts i == j, i.e. the negative entries
            let start = if self.even { i + 1 } else { i };
            for j in start..a.len() {
                if a[i] + a[j] < 0 {
                    len += 1;
                }
            }
        }
        Ok(len)
    }

    fn permutation_image(&self, g: &GroupElement) -> Option<Vec<i32>> {
        Some(g.data().to_vec())
    }
}

// ---------------------------------------------------------------------------
// Rank two
// ---------------------------------------------------------------------------

/// `I_2(m)`, `m` finite or infinite. An element is its alternating reduced
/// word, stored as `[length, first generator]`; the longest element (when `m`
/// is finite) is stored with first generator 0.
#[derive(Debug, Clone)]
pub struct DihedralModel {
    /// `None` for `∞`.
    m: Option<u32>,
}

impl DihedralModel {
    pub fn new(m: Option<u32>) -> Self {
        DihedralModel { m }
    }

    fn make(&self, len: usize, first: usize) -> GroupElement {
        if len == 0 || Some(len as u32) == self.m {
            GroupElement::new(vec![len as i32, 0])
        } else {
            GroupElement::new(vec![len as i32, first as i32])
        }
    }
}

impl GroupModel for DihedralModel {
    fn kind(&self) -> ModelKind {
        ModelKind::Dihedral
    }

    fn rank(&self) -> usize {
        2
    }

    fn identity(&self) -> GroupElement {
        self.make(0, 0)
    }

    fn mul_gen(&self, g: &GroupElement, s: usize) -> Result<GroupElement> {
        let len = g.data()[0] as usize;
        let first = g.data()[1] as usize;
        if len == 0 {
            return Ok(self.make(1, s));
        }
        if let Some(m) = self.m {
            if len == m as usize {
                // drop s from the reduced word of the longest element ending in s
                let first = if m % 2 == 1 { s } else { 1 - s };
                return Ok(self.make(len - 1, first));
            }
        }
        let last = if len % 2 == 1 { first } else { 1 - first };
        if last == s {
            Ok(self.make(len - 1, first))
        } else {
            Ok(self.make(len + 1, first))
        }
    }

    fn length(&self, g: &GroupElement) -> Result<usize> {
        Ok(g.data()[0] as usize)
    }
}

// ---------------------------------------------------------------------------
// Arbitrary matrices
// ---------------------------------------------------------------------------

/// Solves the word problem for an arbitrary Coxeter matrix with Tits'
/// theorem: two reduced words represent the same element iff they are
/// related by braid moves, and a word is reduced iff no braid-equivalent
/// word contains a repeated adjacent letter.
///
/// Elements are stored as the right-to-left lexicographically least word in
/// their braid class. Word length and braid-class size are capped.
#[derive(Debug)]
pub struct TitsModel {
    matrix: CoxeterMatrix,
    max_word_len: usize,
    max_class_size: usize,
    products: Mutex<HashMap<(GroupElement, usize), GroupElement>>,
}

impl TitsModel {
    pub fn new(matrix: CoxeterMatrix, max_word_len: usize, max_class_size: usize) -> Self {
        TitsModel {
            matrix,
            max_word_len,
            max_class_size,
            products: Mutex::new(HashMap::new()),
        }
    }

    /// All words reachable from `word` by braid moves.
    fn braid_class(&self, word: &[i32]) -> Result<Vec<Vec<i32>>> {
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(word.to_vec());
        queue.push_back(word.to_vec());
        let mut out = Vec::new();
        while let Some(w) = queue.pop_front() {
            for next in self.braid_moves(&w) {
                if seen.insert(next.clone()) {
                    if seen.len() > self.max_class_size {
                        return Err(Error::ResourceCap {
                            what: "braid class size",
                            cap: self.max_class_size,
                        });
                    }
                    queue.push_back(next);
                }
            }
            out.push(w);
        }
        Ok(out)
    }

    fn braid_moves(&self, w: &[i32]) -> Vec<Vec<i32>> {
        let mut out = Vec::new();
        for i in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[i], w[i + 1]);
            if a == b {
                continue;
            }
            let m = match self.matrix.bond(a as usize, b as usize) {
                Some(m) => m as usize,
                None => continue,
            };
            if i + m > w.len() {
                continue;
            }
            let alternating = (0..m).all(|k| w[i + k] == if k % 2 == 0 { a } else { b });
            if alternating {
                let mut next = w.to_vec();
                for k in 0..m {
                    next[i + k] = if k % 2 == 0 { b } else { a };
                }
                out.push(next);
            }
        }
        out
    }

    fn canonical(class: &[Vec<i32>]) -> Vec<i32> {
        class
            .iter()
            .min_by(|x, y| x.iter().rev().cmp(y.iter().rev()))
            .expect("braid class is never empty")
            .clone()
    }

    fn multiply(&self, g: &[i32], s: usize) -> Result<Vec<i32>> {
        let class = self.braid_class(g)?;
        if let Some(w) = class.iter().find(|w| w.last() == Some(&(s as i32))) {
            let shorter = &w[..w.len() - 1];
            return Ok(Self::canonical(&self.braid_class(shorter)?));
        }
        if g.len() + 1 > self.max_word_len {
            return Err(Error::ResourceCap {
                what: "Tits word length",
                cap: self.max_word_len,
            });
        }
        let mut longer = g.to_vec();
        longer.push(s as i32);
        Ok(Self::canonical(&self.braid_class(&longer)?))
    }
}

impl GroupModel for TitsModel {
    fn kind(&self) -> ModelKind {
        ModelKind::Tits
    }

    fn rank(&self) -> usize {
        self.matrix.rank()
    }

    fn identity(&self) -> GroupElement {
        GroupElement::new(Vec::new())
    }

    fn mul_gen(&self, g: &GroupElement, s: usize) -> Result<GroupElement> {
        let key = (g.clone(), s);
        if let Some(hit) = self.products.lock().expect("cache poisoned").get(&key) {
            return Ok(hit.clone());
        }
        let product = GroupElement::new(self.multiply(g.data(), s)?);
        self.products
            .lock()
            .expect("cache poisoned")
            .insert(key, product.clone());
        Ok(product)
    }

    fn length(&self, g: &GroupElement) -> Result<usize> {
        Ok(g.data().len())
    }

    fn is_descent(&self, g: &GroupElement, s: usize) -> Result<bool> {
        Ok(self
            .braid_class(g.data())?
            .iter()
            .any(|w| w.last() == Some(&(s as i32))))
    }
}
