//! Cayley graphs, the greedy successor labelling, streaming of infinite
//! groups in deletion order, and the induced Cayley embedding.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::{Error, Result};
use crate::normal_forms::nf_rlex;
use crate::word::{Letter, Word};
use crate::word_order;

/// `Cay(W, S)` with an undirected `s`-edge between `g` and `gs`.
///
/// Vertex 0 is the identity; the rest are in breadth-first order.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    vertices: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    // neighbours[v][s - 1] = index of v·s
    neighbours: Vec<Vec<usize>>,
    rank: usize,
}

/// An `s`-labelled edge `{from, from·s}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub generator: Letter,
}

impl CayleyGraph {
    pub fn build(sys: &CoxeterSystem) -> Result<Self> {
        let vertices = sys.enumerate()?;
        let index: HashMap<GroupElement, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        let neighbours = vertices
            .iter()
            .map(|g| {
                sys.generators()
                    .map(|s| Ok(index[&sys.mul_gen(g, s)?]))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CayleyGraph {
            vertices,
            index,
            neighbours,
            rank: sys.rank(),
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &[GroupElement] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &GroupElement {
        &self.vertices[i]
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Index of `v · s`.
    pub fn neighbour(&self, v: usize, s: Letter) -> usize {
        self.neighbours[v][s as usize - 1]
    }

    /// Each undirected edge once, with `from < to`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.len() * self.rank / 2);
        for (v, row) in self.neighbours.iter().enumerate() {
            for (k, &u) in row.iter().enumerate() {
                if v < u {
                    out.push(Edge {
                        from: v,
                        to: u,
                        generator: k as Letter + 1,
                    });
                }
            }
        }
        out
    }
}

/// The output of the successor algorithm: a bijection `L : W → 1..=|W|` and
/// the spanning tree built alongside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    /// `labels[v]` is `L` of vertex `v`.
    pub labels: Vec<usize>,
    /// Vertex indices in label order: `order[k - 1]` has label `k`.
    pub order: Vec<usize>,
    /// Tree edges `{x, x·y}` in the order they were appended; `from` is the
    /// already labelled endpoint.
    pub tree_edges: Vec<Edge>,
}

impl Labeling {
    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn label_of(&self, graph: &CayleyGraph, g: &GroupElement) -> Option<usize> {
        graph.index_of(g).map(|v| self.labels[v])
    }

    /// Sum of generator indices over the tree, i.e. its weight when an
    /// `s_i`-edge weighs `i`.
    pub fn tree_weight(&self) -> usize {
        self.tree_edges.iter().map(|e| e.generator as usize).sum()
    }
}

/// The greedy successor algorithm.
///
/// Starting from `L(id) = 1`, each step takes the least generator `y` for
/// which some labelled vertex has an unlabelled `y`-neighbour, then the
/// labelled vertex `x` of least label with `x·y` unlabelled, labels `x·y`
/// next and records the tree edge `{x, x·y}`.
///
/// Labelled sets only grow, so for each generator the search for `x` resumes
/// where the previous step stopped.
pub fn successor_label(graph: &CayleyGraph) -> Labeling {
    let n = graph.len();
    let mut labels = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut tree_edges = Vec::with_capacity(n.saturating_sub(1));
    if n == 0 {
        return Labeling {
            labels,
            order,
            tree_edges,
        };
    }
    labels[0] = 1;
    order.push(0);
    // cursor[s - 1]: position in `order` of the first candidate x for s
    let mut cursor = vec![0usize; graph.rank()];

    while order.len() < n {
        let mut step = None;
        for s in 1..=graph.rank() as Letter {
            let c = &mut cursor[s as usize - 1];
            while *c < order.len() && labels[graph.neighbour(order[*c], s)] != 0 {
                *c += 1;
            }
            if *c < order.len() {
                step = Some((order[*c], s));
                break;
            }
        }
        let (x, y) = step.expect("Cayley graph is connected");
        let target = graph.neighbour(x, y);
        order.push(target);
        labels[target] = order.len();
        tree_edges.push(Edge {
            from: x,
            to: target,
            generator: y,
        });
    }
    Labeling {
        labels,
        order,
        tree_edges,
    }
}

/// Labels by sorting the elements under `<_Δ^W` instead of running the
/// graph algorithm. No tree is produced.
pub fn label_by_sorting(sys: &CoxeterSystem, graph: &CayleyGraph) -> Result<Labeling> {
    let words = normal_forms(sys, graph)?;
    let mut order: Vec<usize> = (0..graph.len()).collect();
    order.sort_by(|&a, &b| word_order::compare(&words[a], &words[b]));
    let mut labels = vec![0; graph.len()];
    for (k, &v) in order.iter().enumerate() {
        labels[v] = k + 1;
    }
    Ok(Labeling {
        labels,
        order,
        tree_edges: Vec::new(),
    })
}

/// RLex normal form of every vertex, indexed like the graph.
pub fn normal_forms(sys: &CoxeterSystem, graph: &CayleyGraph) -> Result<Vec<Word>> {
    graph.vertices().iter().map(|g| nf_rlex(sys, g)).collect()
}

// A normal form ordered by `<_Δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct DeletionKey(Word);

impl Ord for DeletionKey {
    fn cmp(&self, other: &Self) -> Ordering {
        word_order::compare(&self.0, &other.0)
    }
}

impl PartialOrd for DeletionKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lazily yields the elements of `W` in increasing `<_Δ^W` order.
///
/// The next element always has a neighbour already emitted (its normal form
/// minus the last letter), so a best-first search over the neighbours of
/// emitted elements finds it. For non-Artinian orders the frontier can grow
/// without bound; it is capped.
pub struct DeletionOrderStream<'a> {
    sys: &'a CoxeterSystem,
    frontier: BTreeSet<(DeletionKey, GroupElement)>,
    seen: HashSet<GroupElement>,
    failed: bool,
}

impl<'a> DeletionOrderStream<'a> {
    pub fn new(sys: &'a CoxeterSystem) -> Self {
        let e = sys.identity();
        DeletionOrderStream {
            sys,
            frontier: BTreeSet::from([(DeletionKey(Word::empty()), e.clone())]),
            seen: HashSet::from([e]),
            failed: false,
        }
    }

    fn advance(&mut self) -> Result<Option<(GroupElement, Word)>> {
        let Some((key, g)) = self.frontier.pop_first() else {
            return Ok(None);
        };
        for s in self.sys.generators() {
            let h = self.sys.mul_gen(&g, s)?;
            if self.seen.insert(h.clone()) {
                let w = nf_rlex(self.sys, &h)?;
                self.frontier.insert((DeletionKey(w), h));
                if self.frontier.len() > self.sys.caps().frontier {
                    return Err(Error::ResourceCap {
                        what: "streaming frontier",
                        cap: self.sys.caps().frontier,
                    });
                }
            }
        }
        Ok(Some((g, key.0)))
    }
}

impl Iterator for DeletionOrderStream<'_> {
    type Item = Result<(GroupElement, Word)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        match self.advance() {
            Ok(item) => item.map(Ok),
            Err(e) => {
                self.failed = true;
                Some(Err(e))
            }
        }
    }
}

/// The first `count` elements of `W` under `<_Δ^W`, with their normal forms.
pub fn stream_in_deletion_order(
    sys: &CoxeterSystem,
    count: usize,
) -> Result<Vec<(GroupElement, Word)>> {
    DeletionOrderStream::new(sys).take(count).collect()
}

/// The permutation `φ(w)` of `1..=|W|` given by `(L(u))φ(w) = L(u·w⁻¹)`.
///
/// `result[i - 1]` is the image of `i`. With ordinary composition
/// `(f ∘ g)(i) = f(g(i))` this is a homomorphism: `φ(g) ∘ φ(h) = φ(gh)`.
pub fn cayley_embedding_image(
    sys: &CoxeterSystem,
    graph: &CayleyGraph,
    labeling: &Labeling,
    w: &GroupElement,
) -> Result<Vec<usize>> {
    let inverse_word = nf_rlex(sys, w)?.reversed();
    let mut image = vec![0; graph.len()];
    for (v, u) in graph.vertices().iter().enumerate() {
        let target = sys.mul_word(u, &inverse_word)?;
        let t = graph
            .index_of(&target)
            .ok_or_else(|| Error::InvariantViolation("product left the group".into()))?;
        image[labeling.labels[v] - 1] = labeling.labels[t];
    }
    Ok(image)
}

/// One row of the order table: `L(w)`, the permutation image of `w` (when
/// the model provides one) and its normal form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub label: usize,
    pub permutation: Option<Vec<i32>>,
    pub normal_form: Word,
}

/// Rows in label order.
pub fn order_table(
    sys: &CoxeterSystem,
    graph: &CayleyGraph,
    labeling: &Labeling,
) -> Result<Vec<TableRow>> {
    labeling
        .order
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let g = graph.vertex(v);
            Ok(TableRow {
                label: k + 1,
                permutation: sys.permutation_image(g),
                normal_form: nf_rlex(sys, g)?,
            })
        })
        .collect()
}

fn permutation_string(p: &[i32]) -> String {
    p.iter().map(i32::to_string).collect::<Vec<_>>().join(" ")
}

/// CSV with header `L,permutation,NF` (or `L,NF` when the model has no
/// permutation images). Permutations are space-separated one-line images,
/// normal forms are written `s1s2s1`, the identity's as `e`.
pub fn table_csv(rows: &[TableRow]) -> String {
    let with_perm = rows.iter().all(|r| r.permutation.is_some());
    let mut out = String::from(if with_perm {
        "L,permutation,NF\n"
    } else {
        "L,NF\n"
    });
    for r in rows {
        match (&r.permutation, with_perm) {
            (Some(p), true) => out.push_str(&format!(
                "{},{},{}\n",
                r.label,
                permutation_string(p),
                r.normal_form.to_generator_string()
            )),
            _ => out.push_str(&format!(
                "{},{}\n",
                r.label,
                r.normal_form.to_generator_string()
            )),
        }
    }
    out
}

/// Plain-text table, one row per element: `L | permutation | NF` with the
/// label right-aligned to the width of `|W|`.
pub fn table_text(rows: &[TableRow]) -> String {
    let width = rows.len().to_string().len();
    let mut out = String::new();
    for r in rows {
        let nf = r.normal_form.to_generator_string();
        match &r.permutation {
            Some(p) => out.push_str(&format!(
                "{:>width$} | {} | {}\n",
                r.label,
                permutation_string(p),
                nf
            )),
            None => out.push_str(&format!("{:>width$} | {}\n", r.label, nf)),
        }
    }
    out
}

pub fn table_json(rows: &[TableRow]) -> String {
    #[derive(Serialize)]
    struct Row<'a> {
        label: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        permutation: Option<&'a [i32]>,
        nf: String,
    }
    let rows: Vec<Row> = rows
        .iter()
        .map(|r| Row {
            label: r.label,
            permutation: r.permutation.as_deref(),
            nf: r.normal_form.to_generator_string(),
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("rows serialise") + "\n"
}

const DOT_COLOURS: &[&str] = &["blue", "red", "darkgreen", "orange", "purple", "brown"];

fn edge_style(generator: Letter) -> String {
    match generator {
        1 => "color=black, style=solid".to_string(),
        2 => "color=grey, style=solid".to_string(),
        3 => "color=black, style=dashed".to_string(),
        k => format!(
            "color={}, style=dotted",
            DOT_COLOURS[(k as usize - 4) % DOT_COLOURS.len()]
        ),
    }
}

/// Graphviz rendering: nodes are annotated `L | NF`, edges are styled by
/// generator and spanning-tree edges are drawn bold.
pub fn to_dot(sys: &CoxeterSystem, graph: &CayleyGraph, labeling: &Labeling) -> Result<String> {
    let words = normal_forms(sys, graph)?;
    let tree: HashSet<(usize, usize)> = labeling
        .tree_edges
        .iter()
        .map(|e| (e.from.min(e.to), e.from.max(e.to)))
        .collect();
    let mut out = String::from("graph cayley {\n    node [shape=box];\n");
    for &v in &labeling.order {
        out.push_str(&format!(
            "    v{v} [label=\"{} | {}\"];\n",
            labeling.labels[v],
            words[v].to_generator_string()
        ));
    }
    for e in graph.edges() {
        let bold = if tree.contains(&(e.from, e.to)) {
            ", penwidth=3"
        } else {
            ""
        };
        out.push_str(&format!(
            "    v{} -- v{} [label=\"s{}\", {}{}];\n",
            e.from,
            e.to,
            e.generator,
            edge_style(e.generator),
            bold
        ));
    }
    out.push_str("}\n");
    Ok(out)
}

/// JSON document with vertices (label, NF, permutation), all edges and the
/// tree edges.
pub fn to_json(sys: &CoxeterSystem, graph: &CayleyGraph, labeling: &Labeling) -> Result<String> {
    #[derive(Serialize)]
    struct Vertex {
        id: usize,
        label: usize,
        nf: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        permutation: Option<Vec<i32>>,
    }
    #[derive(Serialize)]
    struct Doc {
        order: usize,
        rank: usize,
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
        tree_edges: Vec<Edge>,
    }
    let words = normal_forms(sys, graph)?;
    let doc = Doc {
        order: graph.len(),
        rank: graph.rank(),
        vertices: labeling
            .order
            .iter()
            .map(|&v| Vertex {
                id: v,
                label: labeling.labels[v],
                nf: words[v].to_generator_string(),
                permutation: sys.permutation_image(graph.vertex(v)),
            })
            .collect(),
        edges: graph.edges(),
        tree_edges: labeling.tree_edges.clone(),
    };
    Ok(serde_json::to_string_pretty(&doc).expect("graph serialises") + "\n")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    Csv,
}

/// Renders a labelled Cayley graph. Returns the document and, when the model
/// has no permutation images, a notice that the CSV permutation column was
/// left out.
pub fn export(
    sys: &CoxeterSystem,
    graph: &CayleyGraph,
    labeling: &Labeling,
    format: ExportFormat,
) -> Result<(String, Option<String>)> {
    let notice = (format == ExportFormat::Csv && sys.permutation_image(&sys.identity()).is_none())
        .then(|| {
            format!(
                "{:?} model has no permutation images; permutation column omitted",
                sys.model_kind()
            )
        });
    let body = match format {
        ExportFormat::Dot => to_dot(sys, graph, labeling)?,
        ExportFormat::Json => to_json(sys, graph, labeling)?,
        ExportFormat::Csv => table_csv(&order_table(sys, graph, labeling)?),
    };
    Ok((body, notice))
}
