//! Exhaustive verification over all labeled graphs of a given size.
//!
//! One pass per graph computes the exact CNS/ONS length sets and the
//! structural recognition, then scores every desk-scale claim at once:
//! recognizer agreement, nonexistence of total/open 1- and 3-uniform
//! graphs, the complete multipartite characterizations of total/open
//! 2-uniformity, and the dominating-ONS identities. The mask space is
//! split into chunks swept in parallel; counters merge deterministically
//! (first counterexample = smallest edge mask).

use rayon::prelude::*;

use crate::format::graph6_string;
use crate::generators::{graph_from_edge_mask, labeled_graph_count, GenError};
use crate::graph::Graph;
use crate::sequences::{is_total_dominating, CoverSolver, DomOnsSolver};
use crate::uniformity::{
    classify_open_uniform, classify_total_uniform, is_complete_multipartite,
    recognize_uniform_structural, validate_report, Classification,
};

/// One verified claim: how many graphs it applied to and how many violated
/// it, with the smallest counterexample kept for diagnosis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Counter {
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub mask: u64,
    pub graph6: String,
    pub detail: String,
}

impl Counter {
    fn record(&mut self, g: &Graph, mask: u64, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            let better = self.first_failure.as_ref().is_none_or(|f| mask < f.mask);
            if better {
                self.first_failure = Some(Failure {
                    mask,
                    graph6: graph6_string(g),
                    detail: detail(),
                });
            }
        }
    }

    fn merge(mut self, other: Counter) -> Counter {
        self.checked += other.checked;
        self.failures += other.failures;
        self.first_failure = match (self.first_failure.take(), other.first_failure) {
            (Some(a), Some(b)) => Some(if a.mask <= b.mask { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepChecks {
    /// Structural recognizer and brute force agree on status and k.
    pub recognizer_agreement: Counter,
    /// Structural closed-kind certificates replay against the input graph.
    pub certificates_validate: Counter,
    /// classify_total/classify_open match the raw brute-force length sets.
    pub classifier_consistency: Counter,
    /// No graph without isolated vertices is total 1- or total 3-uniform.
    pub no_total_1_or_3_uniform: Counter,
    /// No graph is open 1- or open 3-uniform.
    pub no_open_1_or_3_uniform: Counter,
    /// Total 2-uniform holds exactly for complete multipartite graphs.
    pub total_2_iff_multipartite: Counter,
    /// Open 2-uniform holds exactly for complete multipartite graphs with
    /// every part of size at least 2.
    pub open_2_iff_multipartite_min2: Counter,
    /// The maximum dominating-ONS length equals the Grundy total
    /// domination number.
    pub max_dom_ons_equals_gamma_gr_t: Counter,
    /// The minimum dominating-ONS length is at most the total domination
    /// number.
    pub min_dom_ons_le_gamma_t: Counter,
    /// Open k-uniform implies total k-uniform.
    pub open_uniform_implies_total: Counter,
    /// A maximum-length dominating ONS is a total dominating sequence.
    pub longest_dom_ons_is_total: Counter,
}

impl SweepChecks {
    fn merge(self, other: SweepChecks) -> SweepChecks {
        SweepChecks {
            recognizer_agreement: self.recognizer_agreement.merge(other.recognizer_agreement),
            certificates_validate: self.certificates_validate.merge(other.certificates_validate),
            classifier_consistency: self
                .classifier_consistency
                .merge(other.classifier_consistency),
            no_total_1_or_3_uniform: self
                .no_total_1_or_3_uniform
                .merge(other.no_total_1_or_3_uniform),
            no_open_1_or_3_uniform: self
                .no_open_1_or_3_uniform
                .merge(other.no_open_1_or_3_uniform),
            total_2_iff_multipartite: self
                .total_2_iff_multipartite
                .merge(other.total_2_iff_multipartite),
            open_2_iff_multipartite_min2: self
                .open_2_iff_multipartite_min2
                .merge(other.open_2_iff_multipartite_min2),
            max_dom_ons_equals_gamma_gr_t: self
                .max_dom_ons_equals_gamma_gr_t
                .merge(other.max_dom_ons_equals_gamma_gr_t),
            min_dom_ons_le_gamma_t: self.min_dom_ons_le_gamma_t.merge(other.min_dom_ons_le_gamma_t),
            open_uniform_implies_total: self
                .open_uniform_implies_total
                .merge(other.open_uniform_implies_total),
            longest_dom_ons_is_total: self
                .longest_dom_ons_is_total
                .merge(other.longest_dom_ons_is_total),
        }
    }

    /// Named counters, in reporting order.
    pub fn named(&self) -> Vec<(&'static str, &Counter)> {
        vec![
            ("recognizer agreement (structural vs brute)", &self.recognizer_agreement),
            ("structural certificates validate", &self.certificates_validate),
            ("total/open classifier consistency", &self.classifier_consistency),
            ("no total 1-/3-uniform graph", &self.no_total_1_or_3_uniform),
            ("no open 1-/3-uniform graph", &self.no_open_1_or_3_uniform),
            ("total 2-uniform iff complete multipartite", &self.total_2_iff_multipartite),
            (
                "open 2-uniform iff complete multipartite, parts >= 2",
                &self.open_2_iff_multipartite_min2,
            ),
            ("max dominating ONS = gamma_gr_t", &self.max_dom_ons_equals_gamma_gr_t),
            ("min dominating ONS <= gamma_t", &self.min_dom_ons_le_gamma_t),
            ("open k-uniform implies total k-uniform", &self.open_uniform_implies_total),
            ("longest dominating ONS is total dominating", &self.longest_dom_ons_is_total),
        ]
    }

    pub fn total_failures(&self) -> u64 {
        self.named().iter().map(|(_, c)| c.failures).sum()
    }

    pub fn first_failure(&self) -> Option<(&'static str, &Failure)> {
        self.named()
            .into_iter()
            .filter_map(|(name, c)| c.first_failure.as_ref().map(|f| (name, f)))
            .min_by_key(|(_, f)| f.mask)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeSweep {
    pub n: usize,
    pub graphs: u64,
    pub checks: SweepChecks,
}

fn check_graph(n: usize, mask: u64, checks: &mut SweepChecks) {
    let g = graph_from_edge_mask(n, mask);

    let mut cns_solver = CoverSolver::closed(&g);
    let cns = cns_solver.lengths();
    let brute_class = match cns.unique() {
        Some(k) => Classification::Uniform { k },
        None => Classification::NonUniform,
    };
    let structural = recognize_uniform_structural(&g);
    checks.recognizer_agreement.record(
        &g,
        mask,
        structural.classification == brute_class,
        || format!("structural={:?} brute={:?}", structural.classification, brute_class),
    );
    let validation = validate_report(&g, &structural);
    checks
        .certificates_validate
        .record(&g, mask, validation.is_ok(), || format!("{validation:?}"));

    let total_rep = classify_total_uniform(&g).expect("sweep sizes are within the cap");
    let open_rep = classify_open_uniform(&g).expect("sweep sizes are within the cap");

    if g.has_isolated_vertex() || n == 0 {
        let consistent = total_rep.classification == Classification::Undefined
            && open_rep.classification == Classification::Undefined;
        checks.classifier_consistency.record(&g, mask, consistent, || {
            format!("expected undefined, got total={total_rep:?} open={open_rep:?}")
        });
        return;
    }

    let mut dom_solver = DomOnsSolver::new(&g);
    let dom = dom_solver.lengths();
    let total = CoverSolver::open(&g).lengths();

    let expected = |set: crate::sequences::LengthSet| match set.unique() {
        Some(k) => Classification::Uniform { k },
        None => Classification::NonUniform,
    };
    let consistent = total_rep.classification == expected(total)
        && open_rep.classification == expected(dom);
    checks.classifier_consistency.record(&g, mask, consistent, || {
        format!(
            "total sets {:?} rep {:?}; open sets {:?} rep {:?}",
            total, total_rep.classification, dom, open_rep.classification
        )
    });

    checks.no_total_1_or_3_uniform.record(
        &g,
        mask,
        total.unique() != Some(1) && total.unique() != Some(3),
        || format!("total lengths {total:?}"),
    );
    checks.no_open_1_or_3_uniform.record(
        &g,
        mask,
        dom.unique() != Some(1) && dom.unique() != Some(3),
        || format!("dominating ONS lengths {dom:?}"),
    );

    let multipartite = is_complete_multipartite(&g);
    checks.total_2_iff_multipartite.record(
        &g,
        mask,
        (total.unique() == Some(2)) == multipartite.is_some(),
        || format!("total lengths {total:?}, multipartite={multipartite:?}"),
    );
    let mp_min2 = multipartite
        .as_ref()
        .is_some_and(|parts| parts.iter().all(|p| p.len() >= 2));
    checks.open_2_iff_multipartite_min2.record(
        &g,
        mask,
        (dom.unique() == Some(2)) == mp_min2,
        || format!("dominating ONS lengths {dom:?}, multipartite(min2)={mp_min2}"),
    );

    checks.max_dom_ons_equals_gamma_gr_t.record(
        &g,
        mask,
        dom.max() == total.max(),
        || format!("max dom ONS {:?}, gamma_gr_t {:?}", dom.max(), total.max()),
    );
    checks.min_dom_ons_le_gamma_t.record(
        &g,
        mask,
        dom.min() <= total.min(),
        || format!("min dom ONS {:?}, gamma_t {:?}", dom.min(), total.min()),
    );

    let open_implies_total = match dom.unique() {
        Some(k) => total.unique() == Some(k),
        None => true,
    };
    checks
        .open_uniform_implies_total
        .record(&g, mask, open_implies_total, || {
            format!("dom {dom:?} total {total:?}")
        });

    let longest = dom_solver
        .witness(dom.max().expect("no isolated vertices, so a dominating ONS exists"))
        .expect("witness for an achieved length");
    let longest_is_total =
        is_total_dominating(&g, longest.iter().copied().collect()).expect("witness is in range");
    checks
        .longest_dom_ons_is_total
        .record(&g, mask, longest_is_total, || format!("witness {longest:?}"));
}

/// Sweeps every labeled graph on exactly `n` vertices (`n <= 8`),
/// partitioning the mask space across the current rayon pool.
pub fn sweep_size(n: usize) -> Result<SizeSweep, GenError> {
    if n > 8 {
        return Err(GenError::EnumerationTooLarge(n));
    }
    let graphs = labeled_graph_count(n);
    let chunk: u64 = 1 << 12;
    let chunks = graphs.div_ceil(chunk);
    let checks = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut local = SweepChecks::default();
            for mask in (c * chunk)..((c + 1) * chunk).min(graphs) {
                check_graph(n, mask, &mut local);
            }
            local
        })
        .reduce(SweepChecks::default, SweepChecks::merge);
    Ok(SizeSweep { n, graphs, checks })
}

/// Sweeps all sizes `1..=max_n`.
pub fn run_sweep(max_n: usize) -> Result<Vec<SizeSweep>, GenError> {
    (1..=max_n).map(sweep_size).collect()
}
