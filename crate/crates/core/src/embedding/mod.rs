//! Congested-minor embeddings into small expanders.
//!
//! [`Embedder::embed`] takes a graph `G` and a size budget `k`, simplifies
//! `G` (single-vertex host for small `k`, isolated vertices spread
//! round-robin, vertices of degree above 3 replaced by cycles, `H = G` when
//! `G` already fits) and otherwise embeds into an expander on
//! `l = floor(k/4)` vertices: vertex `x` starts in bucket `ζ(x) = x mod l`,
//! and every edge between buckets grows both branch sets along paths
//! sampled from a min-congestion concurrent flow towards a common random
//! vertex.

mod audit;
mod calibrate;
mod embed;
mod expander;
mod flow;
pub mod format;
mod sparsity;

use thiserror::Error;

pub use calibrate::{calibrate_flow, fitted_constant, FlowCalibration, CALIBRATION_SIZES};
pub use audit::{audit_congestion, sample_path_family, write_audit, CongestionAudit};
pub use embed::{
    claim_p, depth_bound, induced_components, is_minor_model, path_hit_bound, reduce_degrees, touch, Embedder,
    Embedding, EmbeddingKind, HostRouting, SampledEdge, WorkingGraph, SMALL_K,
};
pub use expander::{
    algebraic_connectivity, build_expander, certify, cycle_with_chords, exhaustive_expansion, CertificateMethod,
    ExpanderCertificate,
};
pub use flow::{min_congestion_flow, ConcurrentFlow, WeightedPath};
pub use sparsity::{min_sparsity_exhaustive, verify_sparsity};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EmbedError {
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("host graph has no vertices")]
    EmptyHost,
    #[error("no expander with expansion >= {target} found for l = {l}; lower the target")]
    ExpansionTargetUnmet { l: usize, target: f64 },
    #[error("concurrent flow is infeasible: host is disconnected")]
    Infeasible,
    #[error("LP solver: {0}")]
    Lp(String),
    #[error("embedding failed the congestion audit: {0}")]
    Fail(String),
    #[error("all {0} embedding attempts failed the congestion audit")]
    RetriesExhausted(u32),
    #[error("not a separation")]
    NotASeparation,
    #[error("{what} = {size} exceeds the cap {cap}")]
    TooLarge { what: &'static str, size: usize, cap: usize },
}
