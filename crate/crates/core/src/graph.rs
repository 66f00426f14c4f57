//! Immutable simple graphs on at most 64 vertices, with bitset neighborhoods.
//!
//! Vertices are contiguous ids `0..n`. Every neighborhood, vertex set and
//! adjacency row is a single `u64` word, which keeps the solvers and the
//! exhaustive sweeps at word-op speed.

use std::fmt;

use thiserror::Error;

/// Hard cap on the number of vertices. One machine word per vertex set.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// A set of vertex ids, backed by a single word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && (self.0 >> v) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1u64 << v);
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Relabeling produced by induced-subgraph operations.
///
/// Keeps both directions so certificates computed on the subgraph can be
/// expressed in the host graph's original vertex ids.
#[derive(Clone, Debug)]
pub struct Relabeling {
    old_to_new: Vec<Option<usize>>,
    new_to_old: Vec<usize>,
}

impl Relabeling {
    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    /// Maps a vertex set of the subgraph back to original ids.
    pub fn set_to_old(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.to_old(v)).collect()
    }
}

/// A finite simple graph: no loops, no parallel edges, undirected.
///
/// Immutable after construction; all operations are pure functions. The
/// derived constructors (`complement`, `induced_subgraph`, ...) return new
/// graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The graph on `n` vertices with no edges. `n = 0` is valid.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges are tolerated;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::edgeless(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let above = if u + 1 >= 64 { 0 } else { u64::MAX << (u + 1) };
            let mut bits = self.adj[u] & above;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                out.push((u, v));
                bits &= bits - 1;
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Raw adjacency row. Internal fast path; callers guarantee `v < n`.
    #[inline]
    pub(crate) fn adj_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Raw closed-neighborhood row.
    #[inline]
    pub(crate) fn closed_bits(&self, v: usize) -> u64 {
        self.adj[v] | (1u64 << v)
    }

    /// All neighbors of `v`, excluding `v` itself. Empty iff `v` is isolated.
    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v]))
    }

    /// `v` together with its neighbors.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.closed_bits(v)))
    }

    /// Union of open neighborhoods over the set.
    pub fn open_neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        let mut acc = 0u64;
        for v in s.iter() {
            acc |= self.adj[v];
        }
        VertexSet(acc)
    }

    /// Union of closed neighborhoods over the set, i.e. `s ∪ N(s)`.
    pub fn closed_neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        VertexSet(self.open_neighborhood_of_set(s).0 | s.0)
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v] == 0
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// A vertex whose closed neighborhood is the whole vertex set, if any.
    pub fn dominating_vertex(&self) -> Option<usize> {
        let full = self.vertex_set().bits();
        (0..self.n).find(|&v| self.closed_bits(v) == full)
    }

    /// The complement graph: `u ~ v` iff `u ≠ v` and they are not adjacent
    /// here. An involution.
    pub fn complement(&self) -> Graph {
        let full = self.vertex_set().bits();
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// The subgraph induced by `keep`, relabeled to contiguous ids in
    /// increasing original order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Relabeling) {
        let new_to_old: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let m = new_to_old.len();
        let mut adj = vec![0u64; m];
        for (new_u, &old_u) in new_to_old.iter().enumerate() {
            let mut bits = self.adj[old_u] & keep.bits();
            while bits != 0 {
                let old_v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let new_v = old_to_new[old_v].unwrap();
                adj[new_u] |= 1u64 << new_v;
            }
        }
        (
            Graph { n: m, adj },
            Relabeling {
                old_to_new,
                new_to_old,
            },
        )
    }

    /// Removes `N[v]` and returns the induced subgraph on the rest, with the
    /// relabeling back to original ids. Deleting inside a complete graph
    /// yields the empty graph.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<(Graph, Relabeling), GraphError> {
        self.check_vertex(v)?;
        let keep = VertexSet(self.vertex_set().bits() & !self.closed_bits(v));
        Ok(self.induced_subgraph(keep))
    }

    /// Maximal connected vertex sets, ordered by minimum vertex id.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for v in 0..self.n {
            if (seen >> v) & 1 == 1 {
                continue;
            }
            // BFS as bit-parallel closure growth.
            let mut comp = 1u64 << v;
            loop {
                let mut grown = comp;
                let mut frontier = comp;
                while frontier != 0 {
                    let u = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    grown |= self.adj[u];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            comps.push(VertexSet(comp));
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Partition of the vertices into maximal classes with identical closed
    /// neighborhoods (true-twin classes), ordered by minimum vertex id.
    /// Same-class vertices are necessarily adjacent.
    pub fn true_twin_classes(&self) -> Vec<VertexSet> {
        let mut assigned = 0u64;
        let mut classes = Vec::new();
        for v in 0..self.n {
            if (assigned >> v) & 1 == 1 {
                continue;
            }
            let nv = self.closed_bits(v);
            let mut class = 0u64;
            for u in v..self.n {
                if (assigned >> u) & 1 == 0 && self.closed_bits(u) == nv {
                    class |= 1u64 << u;
                }
            }
            assigned |= class;
            classes.push(VertexSet(class));
        }
        classes
    }

    /// Appends one new vertex that is a true twin of `v` (adjacent to `v`
    /// and to every neighbor of `v`).
    pub fn add_true_twin(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        if self.n + 1 > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.n + 1));
        }
        let w = self.n;
        let nv = self.closed_bits(v);
        let mut adj = self.adj.clone();
        adj.push(nv);
        for (u, row) in adj.iter_mut().enumerate().take(w) {
            if (nv >> u) & 1 == 1 {
                *row |= 1u64 << w;
            }
        }
        Ok(Graph { n: self.n + 1, adj })
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&a| a << self.n));
        Ok(Graph { n, adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
