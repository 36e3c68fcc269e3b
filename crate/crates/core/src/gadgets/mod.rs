//! The PSI → Dual Colored Min-Cut reduction built from finite-field padding
//! gadgets.
//!
//! For every host edge `v_x v_y` realizing pattern edge `e_α = xy` the
//! reduction emits one graph `G(α, v_x, v_y)` on the vertex set
//! `W = {t} ∪ ⋃_z W_z`, where `W_z = (F_ρ × {0..b})^a`. A graph consists of
//! a selection edge between the images of `v_x` and `v_y`, a star from `t`
//! to every other point of `Ŵ_x ∪ Ŵ_y`, and padding stars in coordinate `α`
//! whose shape is the field vector `g_xy(v_x v_y) = f_x(v_x) ∘ f_y(v_y)`.
//! Two different graphs for the same `α` jointly connect `W`, so a
//! disconnecting selection of `a = |E(H)|` graphs must take exactly one per
//! pattern edge, and it disconnects iff the chosen host edges agree on
//! their shared endpoints.

mod construct;
mod layout;
mod params;
mod reduce;

use thiserror::Error;

pub use construct::{build_a_edges, build_gadget, build_padding, Gadget};
pub use layout::{WCoordinate, WLayout};
pub use params::{build_f_maps, choose_prime, GadgetParams};
pub use reduce::{
    connectivize_pattern, connectivize_pattern_with, parse_gadget_map, reduce_psi_to_dcmc, write_gadget_map,
    Connectivized, GadgetLabel, Reduction,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("no prime in ({low}, {high}]")]
    NoPrimeInRange { low: u64, high: u64 },
    #[error("pattern is disconnected; connectivize it first")]
    PatternDisconnected,
    #[error("pattern has no edges")]
    EmptyPattern,
    #[error("block size must be at least 1")]
    EmptyBlocks,
    #[error("|W| = {size} exceeds the cap {cap}")]
    TooLarge { size: u128, cap: u128 },
    #[error("selection is not a disconnecting one-graph-per-pattern-edge choice: {0}")]
    Decode(String),
    #[error("gadget map line {line}: {message}")]
    MapSyntax { line: usize, message: String },
}
