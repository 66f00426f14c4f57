//! Dominating closed/open neighborhood sequences and the four length
//! parameters γ, γ_gr, γ_t, γ_gr^t.
//!
//! A closed neighborhood sequence (CNS) is an ordered list of distinct
//! vertices where every vertex's closed neighborhood covers something its
//! predecessors did not; an open neighborhood sequence (ONS) is the open
//! analogue, with the extra requirement that the first vertex has a
//! neighbor. A sequence is dominating when its underlying set is a
//! dominating set, and total dominating when the set is total dominating.
//!
//! The exact solvers enumerate achievable sequence lengths by depth-first
//! search over covered-set states. For a CNS the covered set (the union of
//! the closed neighborhoods used so far) is a complete state: a vertex is
//! appendable iff its closed neighborhood is not contained in the covered
//! set, and a used vertex covers itself, so it can never become appendable
//! again. The same argument applies to the union of open neighborhoods for
//! total dominating ONS. For plain dominating ONS the covered set alone
//! does not determine whether the underlying set dominates, so the state is
//! the pair (covered, used-but-uncovered); the second component is what the
//! domination test `S ∪ N(S) = V` still needs.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

/// Default cap on the vertex count accepted by the exact solvers.
pub const DEFAULT_SOLVER_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph on {n} vertices exceeds the solver cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} appears more than once")]
    RepeatedVertex(usize),
    #[error("an open neighborhood sequence must be nonempty")]
    EmptySequence,
    #[error("sequence is not a closed neighborhood sequence")]
    NotACns,
}

/// A set of achievable sequence lengths, stored as a bitmask (bit k set
/// iff some sequence of length k exists). Lengths never exceed the vertex
/// count, so 128 bits are plenty.
#[derive(Clone, Copy, PartialEq, Eq, Default)]
pub struct LengthSet(u128);

impl LengthSet {
    pub const EMPTY: LengthSet = LengthSet(0);

    pub fn from_lengths<I: IntoIterator<Item = usize>>(lengths: I) -> Self {
        let mut s = 0u128;
        for l in lengths {
            assert!(l < 128);
            s |= 1 << l;
        }
        LengthSet(s)
    }

    pub fn contains(self, len: usize) -> bool {
        len < 128 && (self.0 >> len) & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    /// `Some(k)` iff the set is exactly `{k}`.
    pub fn unique(self) -> Option<usize> {
        if self.0 != 0 && self.0 & (self.0 - 1) == 0 {
            self.min()
        } else {
            None
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..128).filter(move |&l| self.contains(l))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for LengthSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The sequence-length parameters of one graph. The ONS-based fields are
/// absent when the graph is empty or has an isolated vertex: an isolated
/// vertex belongs to no open neighborhood and to no ONS, so no dominating
/// ONS exists and the total parameters are undefined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationProfile {
    /// Minimum length of a dominating CNS (the domination number).
    pub gamma: usize,
    /// Maximum length of a dominating CNS (the Grundy domination number).
    pub gamma_gr: usize,
    /// Minimum length of a total dominating ONS (the total domination
    /// number).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_t: Option<usize>,
    /// Maximum length of a total dominating ONS (the Grundy total
    /// domination number).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_gr_t: Option<usize>,
    /// Minimum length of a dominating ONS.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_dom_ons: Option<usize>,
    /// Maximum length of a dominating ONS; always equals `gamma_gr_t`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_dom_ons: Option<usize>,
}

fn check_set(g: &Graph, s: VertexSet) -> Result<(), GraphError> {
    let stray = s.difference(g.vertex_set());
    match stray.min() {
        None => Ok(()),
        Some(v) => Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() }),
    }
}

fn check_sequence(g: &Graph, seq: &[usize]) -> Result<(), SequenceError> {
    let mut seen = VertexSet::EMPTY;
    for &v in seq {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() }.into());
        }
        if seen.contains(v) {
            return Err(SequenceError::RepeatedVertex(v));
        }
        seen.insert(v);
    }
    Ok(())
}

/// `s ∪ N(s) = V`?
pub fn is_dominating(g: &Graph, s: VertexSet) -> Result<bool, GraphError> {
    check_set(g, s)?;
    Ok(g.closed_neighborhood_of_set(s) == g.vertex_set())
}

/// `N(s) = V`? Never true in a graph with an isolated vertex.
pub fn is_total_dominating(g: &Graph, s: VertexSet) -> Result<bool, GraphError> {
    check_set(g, s)?;
    Ok(g.open_neighborhood_of_set(s) == g.vertex_set())
}

/// Is `seq` a closed neighborhood sequence? Length 0 and 1 always are.
pub fn is_cns(g: &Graph, seq: &[usize]) -> Result<bool, SequenceError> {
    check_sequence(g, seq)?;
    let mut covered = 0u64;
    for (i, &v) in seq.iter().enumerate() {
        let nb = g.closed_bits(v);
        if i > 0 && nb & !covered == 0 {
            return Ok(false);
        }
        covered |= nb;
    }
    Ok(true)
}

/// Is `seq` an open neighborhood sequence? The first vertex must have a
/// neighbor; every later vertex's open neighborhood must cover something
/// new.
pub fn is_ons(g: &Graph, seq: &[usize]) -> Result<bool, SequenceError> {
    if seq.is_empty() {
        return Err(SequenceError::EmptySequence);
    }
    check_sequence(g, seq)?;
    let mut covered = 0u64;
    for &v in seq {
        let nb = g.adj_bits(v);
        if nb & !covered == 0 {
            return Ok(false);
        }
        covered |= nb;
    }
    Ok(true)
}

/// Completes a CNS to a dominating CNS by repeatedly appending the
/// smallest-id vertex whose closed neighborhood covers a new vertex.
/// The input must itself be a CNS.
pub fn extend_to_dominating_cns(g: &Graph, seq: &[usize]) -> Result<Vec<usize>, SequenceError> {
    if !is_cns(g, seq)? {
        return Err(SequenceError::NotACns);
    }
    let full = g.vertex_set().bits();
    let mut covered = seq.iter().fold(0u64, |acc, &v| acc | g.closed_bits(v));
    let mut out = seq.to_vec();
    while covered != full {
        let v = (0..g.n())
            .find(|&v| g.closed_bits(v) & !covered != 0)
            .expect("an uncovered vertex covers itself");
        out.push(v);
        covered |= g.closed_bits(v);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Exact solvers
// ---------------------------------------------------------------------------

/// Marker distinguishing "computed, possibly empty" from "not yet computed"
/// in the memo tables. Achievable lengths occupy bits 0..=64 only.
const COMPUTED: u128 = 1 << 127;

enum Memo {
    Flat(Vec<u128>),
    Map(HashMap<u64, u128>),
}

impl Memo {
    fn new(n: usize) -> Memo {
        // 2^20 entries of 16 bytes is 16 MiB; beyond that fall back to
        // hashing, which only materializes reached states.
        if n <= 20 {
            Memo::Flat(vec![0; 1usize << n])
        } else {
            Memo::Map(HashMap::new())
        }
    }

    #[inline]
    fn get(&self, key: u64) -> Option<u128> {
        let raw = match self {
            Memo::Flat(v) => v[key as usize],
            Memo::Map(m) => m.get(&key).copied().unwrap_or(0),
        };
        if raw & COMPUTED != 0 {
            Some(raw & !COMPUTED)
        } else {
            None
        }
    }

    #[inline]
    fn set(&mut self, key: u64, val: u128) {
        let raw = val | COMPUTED;
        match self {
            Memo::Flat(v) => v[key as usize] = raw,
            Memo::Map(m) => {
                m.insert(key, raw);
            }
        }
    }
}

/// Shared solver for dominating CNS (closed coverage) and total dominating
/// ONS (open coverage): in both cases the covered set is a complete state
/// and acceptance is exactly "covered = V".
pub(crate) struct CoverSolver<'g> {
    g: &'g Graph,
    closed: bool,
    full: u64,
    memo: Memo,
}

impl<'g> CoverSolver<'g> {
    pub(crate) fn closed(g: &'g Graph) -> Self {
        CoverSolver {
            g,
            closed: true,
            full: g.vertex_set().bits(),
            memo: Memo::new(g.n()),
        }
    }

    pub(crate) fn open(g: &'g Graph) -> Self {
        CoverSolver {
            g,
            closed: false,
            full: g.vertex_set().bits(),
            memo: Memo::new(g.n()),
        }
    }

    #[inline]
    fn nb(&self, v: usize) -> u64 {
        if self.closed {
            self.g.closed_bits(v)
        } else {
            self.g.adj_bits(v)
        }
    }

    fn lengths_from(&mut self, covered: u64) -> u128 {
        if let Some(cached) = self.memo.get(covered) {
            return cached;
        }
        let mut acc = 0u128;
        if covered == self.full {
            acc = 1; // the empty completion
        } else {
            for v in 0..self.g.n() {
                let nb = self.nb(v);
                if nb & !covered != 0 {
                    acc |= self.lengths_from(covered | nb) << 1;
                }
            }
        }
        self.memo.set(covered, acc);
        acc
    }

    pub(crate) fn lengths(&mut self) -> LengthSet {
        LengthSet(self.lengths_from(0))
    }

    /// Recovers a sequence of exactly `target` length, choosing the
    /// smallest vertex id at every step.
    pub(crate) fn witness(&mut self, target: usize) -> Option<Vec<usize>> {
        if !self.lengths().contains(target) {
            return None;
        }
        let mut covered = 0u64;
        let mut remaining = target;
        let mut seq = Vec::with_capacity(target);
        'step: while remaining > 0 {
            for v in 0..self.g.n() {
                let nb = self.nb(v);
                if nb & !covered != 0 && (self.lengths_from(covered | nb) >> (remaining - 1)) & 1 == 1
                {
                    seq.push(v);
                    covered |= nb;
                    remaining -= 1;
                    continue 'step;
                }
            }
            unreachable!("memoized length set promised a completion");
        }
        debug_assert_eq!(covered, self.full);
        Some(seq)
    }
}

/// Solver for plain dominating ONS. State is the pair
/// (covered = N(used), extra = used \ covered); the sequence so far is
/// dominating iff `covered ∪ extra = V`, and unlike the total case a
/// dominating ONS may be extendable further, so acceptance and extension
/// coexist.
pub(crate) struct DomOnsSolver<'g> {
    g: &'g Graph,
    full: u64,
    memo: HashMap<(u64, u64), u128>,
}

impl<'g> DomOnsSolver<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        DomOnsSolver {
            g,
            full: g.vertex_set().bits(),
            memo: HashMap::new(),
        }
    }

    fn lengths_from(&mut self, covered: u64, extra: u64) -> u128 {
        if let Some(&cached) = self.memo.get(&(covered, extra)) {
            return cached;
        }
        let mut acc = 0u128;
        if covered | extra == self.full {
            acc = 1;
        }
        for v in 0..self.g.n() {
            let nb = self.g.adj_bits(v);
            if nb & !covered != 0 {
                let covered2 = covered | nb;
                let extra2 = (extra | (1u64 << v)) & !covered2;
                acc |= self.lengths_from(covered2, extra2) << 1;
            }
        }
        self.memo.insert((covered, extra), acc);
        acc
    }

    pub(crate) fn lengths(&mut self) -> LengthSet {
        if self.g.n() == 0 {
            return LengthSet::EMPTY;
        }
        // bit 0 would claim the empty sequence; an ONS is nonempty
        LengthSet(self.lengths_from(0, 0) & !1)
    }

    pub(crate) fn witness(&mut self, target: usize) -> Option<Vec<usize>> {
        if target == 0 || !self.lengths().contains(target) {
            return None;
        }
        let (mut covered, mut extra) = (0u64, 0u64);
        let mut remaining = target;
        let mut seq = Vec::with_capacity(target);
        'step: while remaining > 0 {
            for v in 0..self.g.n() {
                let nb = self.g.adj_bits(v);
                if nb & !covered == 0 {
                    continue;
                }
                let covered2 = covered | nb;
                let extra2 = (extra | (1u64 << v)) & !covered2;
                let sub = self.lengths_from(covered2, extra2);
                if (sub >> (remaining - 1)) & 1 == 1 {
                    seq.push(v);
                    covered = covered2;
                    extra = extra2;
                    remaining -= 1;
                    continue 'step;
                }
            }
            unreachable!("memoized length set promised a completion");
        }
        debug_assert_eq!(covered | extra, self.full);
        Some(seq)
    }
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), SolverError> {
    if g.n() > cap {
        Err(SolverError::CapExceeded { n: g.n(), cap })
    } else {
        Ok(())
    }
}

/// The exact set of lengths of dominating CNS of `g`, under the default
/// solver cap. The empty graph yields `{0}`.
pub fn cns_length_set(g: &Graph) -> Result<LengthSet, SolverError> {
    cns_length_set_capped(g, DEFAULT_SOLVER_CAP)
}

pub fn cns_length_set_capped(g: &Graph, cap: usize) -> Result<LengthSet, SolverError> {
    check_cap(g, cap)?;
    Ok(CoverSolver::closed(g).lengths())
}

/// The exact sets of lengths of (dominating ONS, total dominating ONS),
/// under the default solver cap. Both are empty when the graph is empty or
/// has an isolated vertex.
pub fn ons_length_sets(g: &Graph) -> Result<(LengthSet, LengthSet), SolverError> {
    ons_length_sets_capped(g, DEFAULT_SOLVER_CAP)
}

pub fn ons_length_sets_capped(g: &Graph, cap: usize) -> Result<(LengthSet, LengthSet), SolverError> {
    check_cap(g, cap)?;
    if g.n() == 0 {
        return Ok((LengthSet::EMPTY, LengthSet::EMPTY));
    }
    let dominating = DomOnsSolver::new(g).lengths();
    let total = CoverSolver::open(g).lengths();
    Ok((dominating, total))
}

/// A dominating CNS of exactly `len` vertices, if one exists
/// (smallest-id tie-break, deterministic).
pub fn cns_witness_of_length(g: &Graph, len: usize, cap: usize) -> Result<Option<Vec<usize>>, SolverError> {
    check_cap(g, cap)?;
    Ok(CoverSolver::closed(g).witness(len))
}

/// A total dominating ONS of exactly `len` vertices, if one exists.
pub fn total_ons_witness_of_length(
    g: &Graph,
    len: usize,
    cap: usize,
) -> Result<Option<Vec<usize>>, SolverError> {
    check_cap(g, cap)?;
    Ok(CoverSolver::open(g).witness(len))
}

/// A dominating ONS of exactly `len` vertices, if one exists.
pub fn dominating_ons_witness_of_length(
    g: &Graph,
    len: usize,
    cap: usize,
) -> Result<Option<Vec<usize>>, SolverError> {
    check_cap(g, cap)?;
    Ok(DomOnsSolver::new(g).witness(len))
}

/// Computes all four sequence-length parameters of `g`, plus the min/max
/// dominating-ONS lengths, under the default solver cap.
pub fn profile(g: &Graph) -> Result<DominationProfile, SolverError> {
    profile_capped(g, DEFAULT_SOLVER_CAP)
}

pub fn profile_capped(g: &Graph, cap: usize) -> Result<DominationProfile, SolverError> {
    let cns = cns_length_set_capped(g, cap)?;
    let (dom_ons, total_ons) = ons_length_sets_capped(g, cap)?;
    Ok(DominationProfile {
        gamma: cns.min().expect("every graph has a dominating CNS"),
        gamma_gr: cns.max().unwrap(),
        gamma_t: total_ons.min(),
        gamma_gr_t: total_ons.max(),
        min_dom_ons: dom_ons.min(),
        max_dom_ons: dom_ons.max(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_complete, gen_complete_multipartite, gen_cycle, gen_path};

    #[test]
    fn dominating_set_examples() {
        let c4 = gen_cycle(4).unwrap();
        assert!(is_dominating(&c4, [0, 2].into_iter().collect()).unwrap());
        let p4 = gen_path(4).unwrap();
        assert!(!is_dominating(&p4, VertexSet::singleton(0)).unwrap());
        assert!(is_dominating(&p4, p4.vertex_set()).unwrap());
    }

    #[test]
    fn total_dominating_set_examples() {
        let k3 = gen_complete(3).unwrap();
        assert!(is_total_dominating(&k3, [0, 1].into_iter().collect()).unwrap());
        assert!(!is_total_dominating(&k3, VertexSet::singleton(0)).unwrap());
        let iso = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(!is_total_dominating(&iso, iso.vertex_set()).unwrap());
    }

    #[test]
    fn out_of_range_set_is_an_error() {
        let k3 = gen_complete(3).unwrap();
        assert!(is_dominating(&k3, VertexSet::singleton(5)).is_err());
    }

    #[test]
    fn cns_examples() {
        let c4 = gen_cycle(4).unwrap();
        assert!(is_cns(&c4, &[0, 1]).unwrap());
        assert!(!is_cns(&c4, &[0, 1, 2]).unwrap());
        assert!(is_cns(&c4, &[2]).unwrap());
        assert!(is_cns(&c4, &[]).unwrap());
    }

    #[test]
    fn ons_examples() {
        // K_{2,2} with parts {0,1} and {2,3}
        let g = gen_complete_multipartite(&[2, 2]).unwrap();
        assert!(is_ons(&g, &[0, 2]).unwrap());
        assert!(!is_ons(&g, &[0, 1]).unwrap());
        let edgeless = Graph::edgeless(2).unwrap();
        assert!(!is_ons(&edgeless, &[0]).unwrap());
        assert_eq!(is_ons(&edgeless, &[]), Err(SequenceError::EmptySequence));
    }

    #[test]
    fn repeated_vertex_is_an_error() {
        let c4 = gen_cycle(4).unwrap();
        assert_eq!(is_cns(&c4, &[0, 1, 0]), Err(SequenceError::RepeatedVertex(0)));
    }

    #[test]
    fn greedy_extension_examples() {
        let c4 = gen_cycle(4).unwrap();
        assert_eq!(extend_to_dominating_cns(&c4, &[]).unwrap(), vec![0, 1]);

        let k5 = gen_complete(5).unwrap();
        assert_eq!(extend_to_dominating_cns(&k5, &[3]).unwrap(), vec![3]);

        let e3 = Graph::edgeless(3).unwrap();
        assert_eq!(extend_to_dominating_cns(&e3, &[1]).unwrap(), vec![1, 0, 2]);
    }

    #[test]
    fn extension_rejects_non_cns() {
        let c4 = gen_cycle(4).unwrap();
        assert_eq!(
            extend_to_dominating_cns(&c4, &[0, 1, 2]),
            Err(SequenceError::NotACns)
        );
    }

    #[test]
    fn cns_length_sets_of_named_graphs() {
        for n in 1..=7 {
            let kn = gen_complete(n).unwrap();
            assert_eq!(cns_length_set(&kn).unwrap().to_vec(), vec![1], "K{n}");
        }
        let p4 = gen_path(4).unwrap();
        assert_eq!(cns_length_set(&p4).unwrap().to_vec(), vec![2, 3]);
        let c4 = gen_cycle(4).unwrap();
        assert_eq!(cns_length_set(&c4).unwrap().to_vec(), vec![2]);
    }

    #[test]
    fn ons_length_sets_of_named_graphs() {
        for m in 2..=6 {
            let km = gen_complete(m).unwrap();
            let (dom, total) = ons_length_sets(&km).unwrap();
            assert_eq!(dom.min(), Some(1), "K{m} dominating ONS min");
            assert_eq!(total.min(), Some(2), "K{m} total min");
        }
        let p5 = gen_path(5).unwrap();
        let (dom, total) = ons_length_sets(&p5).unwrap();
        assert_eq!(dom.min(), Some(2));
        assert_eq!(total.min(), Some(3));

        let g = gen_complete_multipartite(&[2, 2]).unwrap();
        let (dom, total) = ons_length_sets(&g).unwrap();
        assert_eq!(dom.to_vec(), vec![2]);
        assert_eq!(total.to_vec(), vec![2]);
    }

    #[test]
    fn isolated_vertices_leave_ons_sets_empty() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let (dom, total) = ons_length_sets(&g).unwrap();
        assert!(dom.is_empty());
        assert!(total.is_empty());
    }

    #[test]
    fn profile_examples() {
        let p5 = gen_path(5).unwrap();
        let p = profile(&p5).unwrap();
        assert_eq!(p.gamma, 2);
        assert_eq!(p.gamma_t, Some(3));
        assert_eq!(p.min_dom_ons, Some(2));

        let k1 = gen_complete(1).unwrap();
        let p = profile(&k1).unwrap();
        assert_eq!((p.gamma, p.gamma_gr), (1, 1));
        assert_eq!(p.gamma_t, None);
        assert_eq!(p.min_dom_ons, None);

        let c4 = gen_cycle(4).unwrap();
        let p = profile(&c4).unwrap();
        assert_eq!((p.gamma, p.gamma_gr), (2, 2));
        assert_eq!((p.gamma_t, p.gamma_gr_t), (Some(2), Some(2)));
        assert_eq!((p.min_dom_ons, p.max_dom_ons), (Some(2), Some(2)));
    }

    #[test]
    fn profile_of_empty_graph() {
        let g = Graph::edgeless(0).unwrap();
        let p = profile(&g).unwrap();
        assert_eq!((p.gamma, p.gamma_gr), (0, 0));
        assert_eq!(p.gamma_t, None);
        assert_eq!(p.max_dom_ons, None);
    }

    #[test]
    fn solver_cap_is_enforced() {
        let g = gen_complete(25).unwrap();
        assert_eq!(
            cns_length_set(&g),
            Err(SolverError::CapExceeded { n: 25, cap: 20 })
        );
        assert_eq!(cns_length_set_capped(&g, 25).unwrap().to_vec(), vec![1]);
    }

    #[test]
    fn witnesses_have_the_requested_length() {
        let p4 = gen_path(4).unwrap();
        let w2 = cns_witness_of_length(&p4, 2, 20).unwrap().unwrap();
        let w3 = cns_witness_of_length(&p4, 3, 20).unwrap().unwrap();
        assert_eq!(w2.len(), 2);
        assert_eq!(w3.len(), 3);
        assert!(is_cns(&p4, &w2).unwrap());
        assert!(is_cns(&p4, &w3).unwrap());
        assert!(is_dominating(&p4, w2.iter().copied().collect()).unwrap());
        assert!(is_dominating(&p4, w3.iter().copied().collect()).unwrap());
        assert!(cns_witness_of_length(&p4, 4, 20).unwrap().is_none());

        let k4 = gen_complete(4).unwrap();
        let w = dominating_ons_witness_of_length(&k4, 1, 20).unwrap().unwrap();
        assert!(is_ons(&k4, &w).unwrap());
        assert!(is_dominating(&k4, w.iter().copied().collect()).unwrap());
        let wt = total_ons_witness_of_length(&k4, 2, 20).unwrap().unwrap();
        assert!(is_total_dominating(&k4, wt.iter().copied().collect()).unwrap());
    }
}
