//! Exact toolkit for dominating neighborhood sequences in small simple
//! graphs.
//!
//! The crate computes the four sequence-length parameters (domination
//! number γ, Grundy domination number γ_gr, total domination number γ_t,
//! Grundy total domination number γ_gr^t), recognizes graphs whose
//! dominating sequences all share one length (k-uniform, total k-uniform,
//! open k-uniform) both by brute force and structurally with
//! machine-checkable certificates, constructs certified k-uniform
//! instances, and sweeps all labeled graphs at desk scale to verify the
//! characterizations.
//!
//! # Quick start
//! ```
//! use domseq::generators::gen_cycle;
//! use domseq::sequences::profile;
//! use domseq::uniformity::recognize_uniform_structural;
//!
//! let c4 = gen_cycle(4).unwrap();
//! let p = profile(&c4).unwrap();
//! assert_eq!((p.gamma, p.gamma_gr), (2, 2));
//! assert_eq!(recognize_uniform_structural(&c4).uniform_k(), Some(2));
//! ```

pub mod format;
pub mod generators;
pub mod graph;
pub mod sequences;
pub mod uniformity;
pub mod verify;

pub use format::{parse_graph, write_graph, GraphFormat};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use sequences::{profile, DominationProfile, DEFAULT_SOLVER_CAP};
pub use uniformity::{
    recognize_uniform_structural, validate_report, Classification, UniformityReport,
};
