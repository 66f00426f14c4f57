//! Property and exhaustive invariant tests for the library.

mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use domseq::format::{
    edgelist_string, graph6_string, parse_edgelist, parse_graph6, parse_graph, write_graph,
    GraphFormat,
};
use domseq::generators::{
    all_labeled_graphs, gen_k_uniform, gen_two_uniform, graph_from_edge_mask, labeled_graph_count,
    GenSpec,
};
use domseq::graph::{Graph, VertexSet};
use domseq::sequences::{is_cns, profile};
use domseq::uniformity::{
    classify_open_uniform, classify_total_uniform, is_2_uniform_structural,
    is_k_uniform_bruteforce, recognize_uniform_structural, validate_report, UniformityReport,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    assert!(max_n <= 11, "u64 edge masks cover n <= 11");
    (0..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        any::<u64>().prop_map(move |mask| {
            let mask = if bits >= 64 { mask } else { mask & ((1u64 << bits) - 1) };
            graph_from_edge_mask(n, mask)
        })
    })
}

fn arb_graph_and_sequence() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(9).prop_flat_map(|g| {
        let n = g.n();
        let vertices: Vec<usize> = (0..n).collect();
        (Just(g), Just(vertices).prop_shuffle(), 0..=n)
            .prop_map(|(g, perm, k)| (g, perm[..k].to_vec()))
    })
}

proptest! {
    #[test]
    fn closed_is_open_plus_self(g in arb_graph(11)) {
        for v in g.vertices() {
            let mut open = g.open_neighborhood(v).unwrap();
            open.insert(v);
            prop_assert_eq!(open, g.closed_neighborhood(v).unwrap());
        }
    }

    #[test]
    fn complement_is_an_involution_sampled(g in arb_graph(11)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
    }

    #[test]
    fn true_twins_are_adjacent_and_equal(g in arb_graph(11)) {
        let classes = g.true_twin_classes();
        let mut seen = VertexSet::EMPTY;
        for class in &classes {
            let members = class.to_vec();
            for (i, &u) in members.iter().enumerate() {
                prop_assert!(!seen.contains(u));
                for &v in &members[i + 1..] {
                    prop_assert!(g.has_edge(u, v));
                    prop_assert_eq!(
                        g.closed_neighborhood(u).unwrap(),
                        g.closed_neighborhood(v).unwrap()
                    );
                }
            }
            seen = seen.union(*class);
        }
        prop_assert_eq!(seen, g.vertex_set());
    }

    #[test]
    fn deleting_a_closed_neighborhood_shrinks_by_its_size(g in arb_graph(11)) {
        for v in g.vertices() {
            let nv = g.closed_neighborhood(v).unwrap();
            let (h, _) = g.delete_closed_neighborhood(v).unwrap();
            prop_assert_eq!(h.n(), g.n() - nv.len());
        }
    }

    #[test]
    fn serialization_round_trips_sampled(g in arb_graph(11)) {
        prop_assert_eq!(&parse_graph6(graph6_string(&g).as_bytes()).unwrap(), &g);
        prop_assert_eq!(&parse_edgelist(edgelist_string(&g).as_bytes()).unwrap(), &g);
        let bytes = write_graph(&g, GraphFormat::Graph6);
        prop_assert_eq!(&parse_graph(&bytes, GraphFormat::Graph6).unwrap(), &g);
    }

    #[test]
    fn every_prefix_of_a_cns_is_a_cns((g, seq) in arb_graph_and_sequence()) {
        if is_cns(&g, &seq).unwrap() {
            for k in 0..=seq.len() {
                prop_assert!(is_cns(&g, &seq[..k]).unwrap());
            }
        } else {
            // extending a non-CNS never repairs it
            prop_assert!(!is_cns(&g, &seq).unwrap());
        }
    }

    #[test]
    fn profile_orderings_hold(g in arb_graph(8)) {
        let p = profile(&g).unwrap();
        prop_assert!(p.gamma <= p.gamma_gr);
        if let (Some(t), Some(tg)) = (p.gamma_t, p.gamma_gr_t) {
            prop_assert!(t <= tg);
            prop_assert!(t >= 2);
            prop_assert!(p.min_dom_ons.unwrap() <= t);
            prop_assert_eq!(p.max_dom_ons.unwrap(), tg);
        } else {
            prop_assert_eq!(p.min_dom_ons, None);
        }
    }
}

#[test]
fn complement_is_an_involution_exhaustively_up_to_n8() {
    for n in 0..=8usize {
        let failures = (0..labeled_graph_count(n))
            .into_par_iter()
            .filter(|&mask| {
                let g = graph_from_edge_mask(n, mask);
                g.complement().complement() != g
            })
            .count();
        assert_eq!(failures, 0, "n={n}");
    }
}

#[test]
fn serialization_round_trips_exhaustively_up_to_n6() {
    for n in 0..=6usize {
        for g in all_labeled_graphs(n).unwrap() {
            assert_eq!(parse_graph6(graph6_string(&g).as_bytes()).unwrap(), g);
            assert_eq!(parse_edgelist(edgelist_string(&g).as_bytes()).unwrap(), g);
        }
    }
}

#[test]
fn twin_duplication_preserves_recognition() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7719);
    for _ in 0..500 {
        let n = rng.random_range(1..=10usize);
        let bits = n * n.saturating_sub(1) / 2;
        let mask = if bits == 0 { 0 } else { rng.random::<u64>() & ((1u64 << bits) - 1) };
        let g = graph_from_edge_mask(n, mask);
        let u = rng.random_range(0..n);
        let twinned = g.add_true_twin(u).unwrap();
        let before = recognize_uniform_structural(&g);
        let after = recognize_uniform_structural(&twinned);
        assert_eq!(
            before.classification, after.classification,
            "duplicating {u} in {}",
            graph6_string(&g)
        );
    }
}

#[test]
fn uniformity_adds_over_disjoint_unions() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00c1);
    for _ in 0..200 {
        let a = GenSpec::random(rng.random(), rng.random_range(1..=14));
        let b = GenSpec::random(rng.random(), rng.random_range(1..=14));
        let (ga, ka) = gen_k_uniform(&a).unwrap();
        let (gb, kb) = gen_k_uniform(&b).unwrap();
        let union = ga.disjoint_union(&gb).unwrap();
        assert_eq!(
            recognize_uniform_structural(&union).uniform_k(),
            Some(ka + kb)
        );
    }
}

#[test]
fn two_uniform_pieces_are_recoverable() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2a11);
    for _ in 0..200 {
        let n_pieces = rng.random_range(1..=4usize);
        let pieces: Vec<(usize, usize)> = (0..n_pieces)
            .map(|_| (rng.random_range(1..=4), rng.random_range(1..=4)))
            .collect();
        let g = gen_two_uniform(&pieces).unwrap();
        let found = is_2_uniform_structural(&g).expect("generated graphs are 2-uniform");

        // expected pieces occupy contiguous ranges, left block then right
        let mut expected: Vec<(VertexSet, VertexSet)> = Vec::new();
        let mut base = 0usize;
        for &(p, q) in &pieces {
            expected.push((
                (base..base + p).collect(),
                (base + p..base + p + q).collect(),
            ));
            base += p + q;
        }
        let norm = |sets: &[(VertexSet, VertexSet)]| -> HashSet<(u64, u64)> {
            sets.iter()
                .map(|&(a, b)| {
                    let (x, y) = (a.bits(), b.bits());
                    (x.min(y), x.max(y))
                })
                .collect()
        };
        assert_eq!(norm(&found), norm(&expected), "pieces {pieces:?}");
    }
}

#[test]
fn labeled_enumeration_is_duplicate_free_and_complete() {
    for n in 0..=5usize {
        let graphs: Vec<Graph> = all_labeled_graphs(n).unwrap().collect();
        assert_eq!(graphs.len() as u64, labeled_graph_count(n));
        let distinct: HashSet<Graph> = graphs.into_iter().collect();
        assert_eq!(distinct.len() as u64, labeled_graph_count(n));
    }
}

#[test]
fn all_report_kinds_validate_exhaustively_up_to_n5() {
    for n in 0..=5usize {
        for g in all_labeled_graphs(n).unwrap() {
            let reports: Vec<UniformityReport> = vec![
                recognize_uniform_structural(&g),
                is_k_uniform_bruteforce(&g).unwrap(),
                classify_total_uniform(&g).unwrap(),
                classify_open_uniform(&g).unwrap(),
            ];
            for rep in &reports {
                validate_report(&g, rep)
                    .unwrap_or_else(|e| panic!("{e} for {} {rep:?}", graph6_string(&g)));
                let json = serde_json::to_string(rep).unwrap();
                let back: UniformityReport = serde_json::from_str(&json).unwrap();
                assert_eq!(&back, rep);
            }
        }
    }
}

#[test]
fn solver_matches_naive_oracle_on_named_vectors() {
    use domseq::generators::{gen_complete_multipartite, gen_cycle, gen_path};
    use domseq::sequences::{cns_length_set, ons_length_sets};

    // frozen from the naive oracle; C6 is the interesting one: its total
    // dominating ONS all have length 4
    let c6 = gen_cycle(6).unwrap();
    assert_eq!(
        common::naive_ons_lengths(&c6).1.into_iter().collect::<Vec<_>>(),
        vec![4]
    );
    assert_eq!(ons_length_sets(&c6).unwrap().1.to_vec(), vec![4]);
    assert_eq!(
        classify_total_uniform(&c6).unwrap().uniform_k(),
        Some(4)
    );

    let k33 = gen_complete_multipartite(&[3, 3]).unwrap();
    assert_eq!(common::naive_cns_lengths(&k33).into_iter().collect::<Vec<_>>(), vec![2, 3]);
    assert_eq!(cns_length_set(&k33).unwrap().to_vec(), vec![2, 3]);

    let p6 = gen_path(6).unwrap();
    let (dom, total) = ons_length_sets(&p6).unwrap();
    assert_eq!(dom.to_vec(), vec![2, 3, 4, 5, 6]);
    assert_eq!(total.to_vec(), vec![4, 5, 6]);
}
