//! Named graph families, certified uniform-graph construction, and the
//! exhaustive labeled-graph stream used by the verification sweeps.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::format::column_order_pairs;
use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("size must be at least {min}, got {got}")]
    SizeTooSmall { min: usize, got: usize },
    #[error("at least {min} parts/pieces required, got {got}")]
    TooFewParts { min: usize, got: usize },
    #[error("spec needs {needed} vertices, budget is {budget}")]
    VertexBudgetExceeded { needed: usize, budget: usize },
    #[error("twin inflation names vertex {vertex}, but the base graph has {n}")]
    InflationVertexOutOfRange { vertex: usize, n: usize },
    #[error("labeled enumeration supports n <= 8, got {0}")]
    EnumerationTooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Complete graph on `n >= 1` vertices.
pub fn gen_complete(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::SizeTooSmall { min: 1, got: n });
    }
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges)?)
}

/// Path 0-1-...-(n-1) on `n >= 1` vertices.
pub fn gen_path(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::SizeTooSmall { min: 1, got: n });
    }
    Ok(Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))?)
}

/// Cycle on `n >= 3` vertices.
pub fn gen_cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::SizeTooSmall { min: 3, got: n });
    }
    let edges = (1..n).map(|v| (v - 1, v)).chain([(n - 1, 0)]);
    Ok(Graph::from_edges(n, edges)?)
}

/// Complete multipartite graph with the given part sizes (at least two
/// parts, each nonempty). Parts occupy contiguous id ranges in order.
pub fn gen_complete_multipartite(parts: &[usize]) -> Result<Graph, GenError> {
    if parts.len() < 2 {
        return Err(GenError::TooFewParts {
            min: 2,
            got: parts.len(),
        });
    }
    if let Some(&bad) = parts.iter().find(|&&p| p < 1) {
        return Err(GenError::SizeTooSmall { min: 1, got: bad });
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let edges = (0..n).flat_map(|u| {
        let part_of = &part_of;
        ((u + 1)..n)
            .filter(move |&v| part_of[u] != part_of[v])
            .map(move |v| (u, v))
    });
    Ok(Graph::from_edges(n, edges)?)
}

/// The complement of a disjoint union of complete bipartite graphs
/// `K_{p,q}`; such complements are exactly the 2-uniform graphs. Piece i
/// occupies a contiguous id range, left side before right side.
pub fn gen_two_uniform(pieces: &[(usize, usize)]) -> Result<Graph, GenError> {
    if pieces.is_empty() {
        return Err(GenError::TooFewParts { min: 1, got: 0 });
    }
    if let Some(&(p, q)) = pieces.iter().find(|&&(p, q)| p < 1 || q < 1) {
        return Err(GenError::SizeTooSmall { min: 1, got: p.min(q) });
    }
    let n: usize = pieces.iter().map(|&(p, q)| p + q).sum();
    if n > MAX_VERTICES {
        return Err(GenError::Graph(GraphError::TooManyVertices(n)));
    }
    let mut edges = Vec::new();
    let mut base = 0usize;
    for &(p, q) in pieces {
        for u in 0..p {
            for v in 0..q {
                edges.push((base + u, base + p + v));
            }
        }
        base += p + q;
    }
    let union = Graph::from_edges(n, edges)?;
    Ok(union.complement())
}

/// Complement of the friendship graph `K_1 ∨ tK_2`: one isolated vertex
/// plus the complement of t disjoint edges. These are exactly the 3-uniform
/// graphs with no true twins.
pub fn gen_friendship_complement(t: usize) -> Result<Graph, GenError> {
    if t < 1 {
        return Err(GenError::SizeTooSmall { min: 1, got: t });
    }
    let rest = gen_two_uniform(&vec![(1, 1); t])?;
    Ok(Graph::edgeless(1)?.disjoint_union(&rest)?)
}

/// One building block of a [`GenSpec`]: either a complete graph
/// (contributing 1 to the uniformity value) or a 2-uniform graph described
/// by the complete bipartite pieces of its complement (contributing 2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentRecipe {
    Complete { size: usize },
    TwoUniform { pieces: Vec<(usize, usize)> },
}

impl ComponentRecipe {
    pub fn vertex_count(&self) -> usize {
        match self {
            ComponentRecipe::Complete { size } => *size,
            ComponentRecipe::TwoUniform { pieces } => pieces.iter().map(|&(p, q)| p + q).sum(),
        }
    }

    pub fn contribution(&self) -> usize {
        match self {
            ComponentRecipe::Complete { .. } => 1,
            ComponentRecipe::TwoUniform { .. } => 2,
        }
    }
}

/// A reproducible recipe for a k-uniform graph: a disjoint union of
/// complete and 2-uniform blocks followed by true-twin duplication.
/// Twin duplication and disjoint unions both preserve uniformity, so the
/// implied k is the sum of the block contributions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub components: Vec<ComponentRecipe>,
    /// Extra true-twin copies per base-graph vertex id.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub twin_inflation: BTreeMap<usize, usize>,
    /// The seed this spec was drawn from, kept for reproducibility records.
    pub seed: u64,
}

impl GenSpec {
    pub fn implied_k(&self) -> usize {
        self.components.iter().map(ComponentRecipe::contribution).sum()
    }

    /// Vertices of the disjoint union before twin inflation.
    pub fn base_vertices(&self) -> usize {
        self.components.iter().map(ComponentRecipe::vertex_count).sum()
    }

    pub fn total_vertices(&self) -> usize {
        self.base_vertices() + self.twin_inflation.values().sum::<usize>()
    }

    /// Draws a random spec whose total vertex count stays within `budget`.
    /// Everything is derived from the seed; equal seeds give equal specs.
    pub fn random(seed: u64, budget: usize) -> GenSpec {
        let budget = budget.clamp(1, MAX_VERTICES);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut remaining = budget;
        let mut components = Vec::new();
        loop {
            if remaining == 0 || (!components.is_empty() && rng.random_bool(0.4)) {
                break;
            }
            if remaining >= 2 && rng.random_bool(0.5) {
                let max_pieces = (remaining / 2).min(3);
                let n_pieces = rng.random_range(1..=max_pieces);
                let mut pieces = Vec::with_capacity(n_pieces);
                for i in 0..n_pieces {
                    // keep two slots per remaining piece
                    let reserve = 2 * (n_pieces - i - 1);
                    let avail = remaining - reserve;
                    let p = rng.random_range(1..=(avail - 1).min(4));
                    let q = rng.random_range(1..=(avail - p).min(4));
                    pieces.push((p, q));
                    remaining -= p + q;
                }
                components.push(ComponentRecipe::TwoUniform { pieces });
            } else {
                let size = rng.random_range(1..=remaining.min(5));
                components.push(ComponentRecipe::Complete { size });
                remaining -= size;
            }
        }
        let base = budget - remaining;
        let mut twin_inflation = BTreeMap::new();
        while remaining > 0 && rng.random_bool(0.5) {
            let v = rng.random_range(0..base);
            *twin_inflation.entry(v).or_insert(0) += 1;
            remaining -= 1;
        }
        GenSpec {
            components,
            twin_inflation,
            seed,
        }
    }
}

/// Materializes a spec into a graph guaranteed to be k-uniform for the
/// implied k, which is returned alongside.
pub fn gen_k_uniform(spec: &GenSpec) -> Result<(Graph, usize), GenError> {
    if spec.components.is_empty() {
        return Err(GenError::TooFewParts { min: 1, got: 0 });
    }
    let total = spec.total_vertices();
    if total > MAX_VERTICES {
        return Err(GenError::VertexBudgetExceeded {
            needed: total,
            budget: MAX_VERTICES,
        });
    }
    let mut graph = Graph::edgeless(0)?;
    for recipe in &spec.components {
        let block = match recipe {
            ComponentRecipe::Complete { size } => gen_complete(*size)?,
            ComponentRecipe::TwoUniform { pieces } => gen_two_uniform(pieces)?,
        };
        graph = graph.disjoint_union(&block)?;
    }
    let base_n = graph.n();
    for (&v, &extra) in &spec.twin_inflation {
        if v >= base_n {
            return Err(GenError::InflationVertexOutOfRange { vertex: v, n: base_n });
        }
        for _ in 0..extra {
            graph = graph.add_true_twin(v)?;
        }
    }
    Ok((graph, spec.implied_k()))
}

/// Streams every labeled graph on `n <= 8` vertices, one per subset of the
/// upper triangle of the adjacency matrix, in increasing edge-mask order.
/// Restartable from any offset, so disjoint ranges can be swept in
/// parallel.
pub fn all_labeled_graphs(n: usize) -> Result<LabeledGraphs, GenError> {
    LabeledGraphs::from_offset(n, 0)
}

pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn from_offset(n: usize, offset: u64) -> Result<LabeledGraphs, GenError> {
        if n > 8 {
            return Err(GenError::EnumerationTooLarge(n));
        }
        let end = labeled_graph_count(n);
        Ok(LabeledGraphs {
            n,
            next: offset.min(end),
            end,
        })
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = graph_from_edge_mask(self.n, self.next);
        self.next += 1;
        Some(g)
    }
}

/// `2^(n(n-1)/2)`, the number of labeled graphs on `n` vertices.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Decodes an edge mask into a graph. Bit k of the mask is the k-th pair
/// in the column order (0,1), (0,2), (1,2), (0,3), ... shared with the
/// graph6 encoding.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let edges = column_order_pairs(n)
        .enumerate()
        .filter(|&(k, _)| (mask >> k) & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges(n, edges).expect("mask pairs are in range and loop-free")
}
