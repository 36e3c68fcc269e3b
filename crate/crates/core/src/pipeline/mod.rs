//! The chain 3-CNF → incidence-graph CSP `ψ_G` → routed CSP `ψ_H` → PSI →
//! DCMC.
//!
//! `ψ_G` lives on the incidence graph `G` of the formula. After embedding
//! `G` into a host `H`, every host vertex `w` takes as its domain the
//! tuples of values of the `G`-vertices whose branch sets contain `w`;
//! constraints are checked wherever two branch sets touch. `ψ_H` then
//! becomes a PSI instance with pattern `H`, which the gadget reduction
//! turns into DCMC.

mod chain;
mod route;
mod sat;
mod to_psi;

use thiserror::Error;

pub use chain::{pipeline_k, sat_to_dcmc, PipelineRun, Report};
pub use route::{route_csp, RoutedCspContext};
pub use sat::{sat_to_csp_g, IncidenceCsp, TRUE};
pub use to_psi::{csp_to_psi, PsiConversion};

use crate::embedding::EmbedError;
use crate::gadgets::GadgetError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PipelineError {
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("{what} = {size} exceeds the cap {cap}")]
    TooLarge { what: &'static str, size: u128, cap: u128 },
    #[error(transparent)]
    Embed(#[from] EmbedError),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
}
