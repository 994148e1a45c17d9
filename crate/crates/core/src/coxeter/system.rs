use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use super::classify::{self, FiniteType, Recognised};
use super::matrix::CoxeterMatrix;
use super::models::{
    DihedralModel, GroupElement, GroupModel, ModelKind, PermutationModel, SignedPermutationModel,
    TitsModel,
};
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Resource limits for the desk-scale algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of elements produced by enumeration.
    pub elements: usize,
    /// Maximum word length handled by the Tits model.
    pub word_len: usize,
    /// Maximum braid-class size explored by the Tits model.
    pub braid_class: usize,
    /// Maximum `ℓ(g)` for which all reduced words are enumerated.
    pub reduced_words_len: usize,
    /// Maximum frontier size when streaming an infinite group.
    pub frontier: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            elements: 200_000,
            word_len: 20,
            braid_class: 200_000,
            reduced_words_len: 16,
            frontier: 1_000_000,
        }
    }
}

/// A Coxeter system `(W, S)` with the generator order `s_1 < ... < s_n`.
///
/// Generators are addressed by 1-based [`Letter`]s; the system maps them onto
/// the standard labels of whichever group model realises it.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    model: Arc<dyn GroupModel>,
    // system generator (0-based) -> model generator
    to_model: Vec<usize>,
    components: Option<Vec<Recognised>>,
    caps: Caps,
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix) -> Self {
        Self::with_caps(matrix, Caps::default())
    }

    /// Attaches the most specific model available: permutations for `A_n`,
    /// signed permutations for `B_n`, even signed permutations for `D_n`, the
    /// dihedral model in rank two, and the Tits model otherwise.
    pub fn with_caps(matrix: CoxeterMatrix, caps: Caps) -> Self {
        let all: Vec<usize> = (0..matrix.rank()).collect();
        let components = classify::classify_subset(&matrix, &all);
        let rank = matrix.rank();

        let specialised: Option<(Arc<dyn GroupModel>, Vec<usize>)> = match components.as_deref() {
            Some([single]) => {
                let model: Option<Arc<dyn GroupModel>> = match single.kind {
                    FiniteType::A(n) => Some(Arc::new(PermutationModel::new(n))),
                    FiniteType::B(n) => Some(Arc::new(SignedPermutationModel::type_b(n))),
                    FiniteType::D(n) => Some(Arc::new(SignedPermutationModel::type_d(n))),
                    FiniteType::I2(m) => Some(Arc::new(DihedralModel::new(Some(m)))),
                    _ => None,
                };
                model.map(|m| {
                    let mut to_model = vec![0; rank];
                    for (std_label, &gen) in single.labelling.iter().enumerate() {
                        to_model[gen] = std_label;
                    }
                    (m, to_model)
                })
            }
            // rank two: infinite or reducible dihedral groups
            _ if rank == 2 => Some((Arc::new(DihedralModel::new(matrix.bond(0, 1))), vec![0, 1])),
            _ => None,
        };

        let (model, to_model) = specialised.unwrap_or_else(|| {
            let tits: Arc<dyn GroupModel> = Arc::new(TitsModel::new(
                matrix.clone(),
                caps.word_len,
                caps.braid_class,
            ));
            (tits, (0..rank).collect())
        });

        CoxeterSystem {
            matrix,
            model,
            to_model,
            components,
            caps,
        }
    }

    /// The system realised by the Tits word-problem model regardless of
    /// type. Slow; mainly useful as a reference for the other models.
    pub fn with_tits_model(matrix: CoxeterMatrix, caps: Caps) -> Self {
        let rank = matrix.rank();
        let all: Vec<usize> = (0..rank).collect();
        CoxeterSystem {
            components: classify::classify_subset(&matrix, &all),
            model: Arc::new(TitsModel::new(
                matrix.clone(),
                caps.word_len,
                caps.braid_class,
            )),
            to_model: (0..rank).collect(),
            matrix,
            caps,
        }
    }

    /// The same group with a different generator order: `order` lists the
    /// current generators (1-based) from least to greatest.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let n = self.rank();
        let mut seen = vec![false; n];
        for &g in order {
            if g == 0 || g > n || std::mem::replace(&mut seen[g - 1], true) {
                return Err(Error::Parse(format!(
                    "generator order {order:?} is not a permutation of 1..={n}"
                )));
            }
        }
        if order.len() != n {
            return Err(Error::Parse(format!(
                "generator order {order:?} is not a permutation of 1..={n}"
            )));
        }
        let zero_based: Vec<usize> = order.iter().map(|g| g - 1).collect();
        let matrix = self.matrix.permuted(&zero_based);
        let all: Vec<usize> = (0..n).collect();
        Ok(CoxeterSystem {
            components: classify::classify_subset(&matrix, &all),
            matrix,
            model: Arc::clone(&self.model),
            to_model: zero_based.iter().map(|&g| self.to_model[g]).collect(),
            caps: self.caps,
        })
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn top(&self) -> Letter {
        self.rank() as Letter
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn model_kind(&self) -> ModelKind {
        self.model.kind()
    }

    /// Finite-type classification of each component, or `None` if infinite.
    pub fn finite_components(&self) -> Option<&[Recognised]> {
        self.components.as_deref()
    }

    pub fn generators(&self) -> impl Iterator<Item = Letter> {
        1..=self.top()
    }

    fn model_gen(&self, s: Letter) -> Result<usize> {
        if s == 0 || s as usize > self.rank() {
            return Err(Error::InvalidLetter {
                letter: s as usize,
                size: self.rank(),
            });
        }
        Ok(self.to_model[s as usize - 1])
    }

    pub fn identity(&self) -> GroupElement {
        self.model.identity()
    }

    /// `g · s`.
    pub fn mul_gen(&self, g: &GroupElement, s: Letter) -> Result<GroupElement> {
        self.model.mul_gen(g, self.model_gen(s)?)
    }

    /// `g · w` for a word `w`.
    pub fn mul_word(&self, g: &GroupElement, w: &Word) -> Result<GroupElement> {
        w.letters()
            .iter()
            .try_fold(g.clone(), |acc, &s| self.mul_gen(&acc, s))
    }

    pub fn element(&self, w: &Word) -> Result<GroupElement> {
        self.mul_word(&self.identity(), w)
    }

    pub fn length(&self, g: &GroupElement) -> Result<usize> {
        self.model.length(g)
    }

    pub fn is_right_descent(&self, g: &GroupElement, s: Letter) -> Result<bool> {
        self.model.is_descent(g, self.model_gen(s)?)
    }

    /// `{ s : ℓ(gs) < ℓ(g) }` in increasing generator order.
    pub fn right_descents(&self, g: &GroupElement) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        for s in self.generators() {
            if self.is_right_descent(g, s)? {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// The least right descent of `g`, `None` for the identity.
    pub fn least_right_descent(&self, g: &GroupElement) -> Result<Option<Letter>> {
        for s in self.generators() {
            if self.is_right_descent(g, s)? {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    /// `(1)g, (2)g, ...` when the model is a (signed) permutation model.
    pub fn permutation_image(&self, g: &GroupElement) -> Option<Vec<i32>> {
        self.model.permutation_image(g)
    }

    /// Some reduced word for `g`; the RLex-least one, in fact.
    pub fn reduced_word(&self, g: &GroupElement) -> Result<Word> {
        let mut letters = Vec::new();
        let mut cur = g.clone();
        while let Some(s) = self.least_right_descent(&cur)? {
            letters.push(s);
            cur = self.mul_gen(&cur, s)?;
        }
        letters.reverse();
        Ok(Word::from(letters))
    }

    /// `g · h`.
    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.mul_word(g, &self.reduced_word(h)?)
    }

    /// `g⁻¹`, evaluated from the reversed reduced word.
    pub fn inverse(&self, g: &GroupElement) -> Result<GroupElement> {
        self.element(&self.reduced_word(g)?.reversed())
    }

    /// All reduced words of `g`, sorted, via `R(g) = ∪_{s ∈ D_R(g)} R(gs)·s`.
    pub fn reduced_words(&self, g: &GroupElement) -> Result<Vec<Word>> {
        let len = self.length(g)?;
        if len > self.caps.reduced_words_len {
            return Err(Error::ResourceCap {
                what: "reduced word enumeration length",
                cap: self.caps.reduced_words_len,
            });
        }
        let mut memo = HashMap::new();
        let mut words = self.reduced_words_memo(g, &mut memo)?;
        words.sort();
        Ok(words)
    }

    fn reduced_words_memo(
        &self,
        g: &GroupElement,
        memo: &mut HashMap<GroupElement, Vec<Word>>,
    ) -> Result<Vec<Word>> {
        if let Some(hit) = memo.get(g) {
            return Ok(hit.clone());
        }
        let descents = self.right_descents(g)?;
        let words = if descents.is_empty() {
            vec![Word::empty()]
        } else {
            let mut words = Vec::new();
            for s in descents {
                let below = self.mul_gen(g, s)?;
                for w in self.reduced_words_memo(&below, memo)? {
                    let mut w = w;
                    w.push(s);
                    words.push(w);
                }
            }
            words
        };
        memo.insert(g.clone(), words.clone());
        Ok(words)
    }

    pub fn is_finite(&self) -> bool {
        self.components.is_some()
    }

    /// Whether the standard parabolic subgroup on `gens` (1-based) is finite.
    pub fn is_finite_parabolic(&self, gens: &[Letter]) -> bool {
        let subset: Vec<usize> = gens.iter().map(|&g| g as usize - 1).collect();
        classify::is_finite_subset(&self.matrix, &subset)
    }

    /// `|W_J|` for a standard parabolic subgroup, `None` when infinite.
    pub fn parabolic_order(&self, gens: &[Letter]) -> Option<u128> {
        let subset: Vec<usize> = gens.iter().map(|&g| g as usize - 1).collect();
        classify::subset_order(&self.matrix, &subset)
    }

    /// `|W|`, `None` when infinite.
    pub fn order(&self) -> Option<u128> {
        self.components
            .as_ref()
            .map(|cs| cs.iter().map(|c| c.kind.order()).product())
    }

    /// Breadth-first enumeration of `W` by right multiplication.
    pub fn enumerate(&self) -> Result<Vec<GroupElement>> {
        if !self.is_finite() {
            return Err(Error::InfiniteGroup);
        }
        self.enumerate_parabolic(&self.generators().collect::<Vec<_>>())
    }

    /// Breadth-first enumeration of the standard parabolic subgroup on `gens`.
    pub fn enumerate_parabolic(&self, gens: &[Letter]) -> Result<Vec<GroupElement>> {
        let e = self.identity();
        let mut seen: HashSet<GroupElement> = HashSet::from([e.clone()]);
        let mut out = vec![e.clone()];
        let mut queue = VecDeque::from([e]);
        while let Some(g) = queue.pop_front() {
            for &s in gens {
                let h = self.mul_gen(&g, s)?;
                if seen.insert(h.clone()) {
                    if seen.len() > self.caps.elements {
                        return Err(Error::ResourceCap {
                            what: "element enumeration",
                            cap: self.caps.elements,
                        });
                    }
                    out.push(h.clone());
                    queue.push_back(h);
                }
            }
        }
        Ok(out)
    }
}
