//! Reduction workbench for Global Label Min-Cut (edge-colored global min-cut).
//!
//! The crate implements the constructive side of the hardness chain
//! 3-CNF-SAT → binary CSP → routed CSP → partitioned subgraph isomorphism →
//! dual colored min-cut, together with the congested-minor embedding used to
//! route constraints through a small expander. Every construction has a
//! brute-force oracle next to it so that equivalence can be checked on small
//! instances.
//!
//! Module map:
//!
//! * [`instances`]: problem types, text formats and exhaustive oracles.
//! * [`gadgets`]: the finite-field padding reduction PSI → DCMC.
//! * [`embedding`]: expanders, min-congestion concurrent flows and the
//!   randomized embedding with its congestion audit.
//! * [`pipeline`]: SAT → CSP → routed CSP → PSI → DCMC composition.
//! * [`verify`]: property suites shared by the CLI.

pub mod config;
pub mod dsu;
pub mod embedding;
pub mod gadgets;
pub mod graph;
pub mod instances;
pub mod pipeline;
pub mod verify;

pub use config::{Caps, RunConfig};
pub use graph::Graph;
pub use instances::{Answer, OracleError};
