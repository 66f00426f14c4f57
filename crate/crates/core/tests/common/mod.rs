//! Naive reference oracles: plain enumeration of all distinct-vertex
//! sequences over set-based neighborhoods, kept deliberately independent of
//! the memoized solvers they are used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use domseq::graph::Graph;

fn closed_nb(g: &Graph, v: usize) -> BTreeSet<usize> {
    let mut s: BTreeSet<usize> = g.open_neighborhood(v).unwrap().iter().collect();
    s.insert(v);
    s
}

fn open_nb(g: &Graph, v: usize) -> BTreeSet<usize> {
    g.open_neighborhood(v).unwrap().iter().collect()
}

/// Lengths of all dominating CNS, by exhaustive search over sequences of
/// distinct vertices.
pub fn naive_cns_lengths(g: &Graph) -> BTreeSet<usize> {
    fn recurse(
        g: &Graph,
        all: &BTreeSet<usize>,
        used: &mut Vec<bool>,
        covered: &BTreeSet<usize>,
        len: usize,
        out: &mut BTreeSet<usize>,
    ) {
        if covered == all {
            out.insert(len);
            return;
        }
        for v in g.vertices() {
            if used[v] {
                continue;
            }
            let nb = closed_nb(g, v);
            if len > 0 && nb.is_subset(covered) {
                continue; // not a CNS
            }
            used[v] = true;
            let next: BTreeSet<usize> = covered.union(&nb).copied().collect();
            recurse(g, all, used, &next, len + 1, out);
            used[v] = false;
        }
    }

    let all: BTreeSet<usize> = g.vertices().collect();
    let mut out = BTreeSet::new();
    let mut used = vec![false; g.n()];
    recurse(g, &all, &mut used, &BTreeSet::new(), 0, &mut out);
    out
}

/// Lengths of all (dominating, total dominating) ONS, by exhaustive search.
pub fn naive_ons_lengths(g: &Graph) -> (BTreeSet<usize>, BTreeSet<usize>) {
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        g: &Graph,
        all: &BTreeSet<usize>,
        used: &mut Vec<bool>,
        chosen: &BTreeSet<usize>,
        covered: &BTreeSet<usize>,
        len: usize,
        dom: &mut BTreeSet<usize>,
        total: &mut BTreeSet<usize>,
    ) {
        if len > 0 {
            if covered == all {
                total.insert(len);
            }
            if covered.union(chosen).count() == all.len() {
                dom.insert(len);
            }
        }
        for v in g.vertices() {
            if used[v] {
                continue;
            }
            let nb = open_nb(g, v);
            if nb.is_subset(covered) {
                continue; // not an ONS (covers the empty-N(v_1) case too)
            }
            used[v] = true;
            let mut chosen2 = chosen.clone();
            chosen2.insert(v);
            let covered2: BTreeSet<usize> = covered.union(&nb).copied().collect();
            recurse(g, all, used, &chosen2, &covered2, len + 1, dom, total);
            used[v] = false;
        }
    }

    let all: BTreeSet<usize> = g.vertices().collect();
    let (mut dom, mut total) = (BTreeSet::new(), BTreeSet::new());
    let mut used = vec![false; g.n()];
    recurse(
        g,
        &all,
        &mut used,
        &BTreeSet::new(),
        &BTreeSet::new(),
        0,
        &mut dom,
        &mut total,
    );
    (dom, total)
}
