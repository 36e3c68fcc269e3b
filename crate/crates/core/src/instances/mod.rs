//! Problem representations, text formats and brute-force decision oracles.
//!
//! Every other module is tested against the oracles in [`oracles`]; they
//! are deliberately exhaustive and refuse (with [`OracleError::CapExceeded`])
//! rather than truncate when an instance is too large.

mod cmc;
mod cnf;
mod csp;
mod dual;
pub mod format;
pub mod oracles;
mod psi;

use thiserror::Error;

pub use crate::graph::is_connected;
pub use cmc::{ColoredEdge, ColoredMultigraph};
pub use cnf::CnfFormula;
pub use csp::{BinaryCsp, Relation};
pub use dual::{cmc_to_dual, dual_to_cmc, DualCmcInstance};
pub use oracles::{
    binomial,
    solve_cmc_bruteforce, solve_csp_bruteforce, solve_dual_bruteforce, solve_psi_bruteforce,
    solve_sat_bruteforce, CutWitness,
};
pub use psi::PsiInstance;

/// Outcome of a decision oracle: `Yes` carries a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Answer<W> {
    Yes(W),
    No,
}

impl<W> Answer<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Answer::Yes(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Answer::Yes(w) => Some(w),
            Answer::No => None,
        }
    }

    pub fn into_witness(self) -> Option<W> {
        match self {
            Answer::Yes(w) => Some(w),
            Answer::No => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what}: search space {size} exceeds cap {cap}")]
    CapExceeded { what: &'static str, size: u128, cap: u128 },
}

/// Violations of the type invariants of the instance types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("vertex count must be positive")]
    NoVertices,
    #[error("edge ({0}, {1}) has an endpoint outside the vertex range")]
    EndpointOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("color {0} outside 1..={1}")]
    ColorOutOfRange(usize, usize),
    #[error("color {0} has no edges")]
    EmptyColor(usize),
    #[error("budget {budget} exceeds the number of colors {colors}")]
    BudgetTooLarge { budget: usize, colors: usize },
    #[error("pattern vertex {0} has no block or more than one block")]
    BadBlockIndex(usize),
    #[error("block of pattern vertex {x} has {got} vertices, expected {expected}")]
    BlockSize { x: usize, got: usize, expected: usize },
    #[error("host vertex {0} belongs to no block or to several blocks")]
    BlockCover(usize),
    #[error("host edge ({0}, {1}) does not follow a pattern edge")]
    StrayHostEdge(usize, usize),
    #[error("block size must be at least 1")]
    EmptyBlocks,
    #[error("variable {0} out of range")]
    VariableOutOfRange(usize),
    #[error("relation pair ({1}, {2}) on variable pair {0:?} is outside the domains")]
    RelationOutOfDomain((usize, usize), usize, usize),
    #[error("constraint on a single variable {0}")]
    UnaryConstraint(usize),
    #[error("clause {0} is empty")]
    EmptyClause(usize),
    #[error("clause {0} has more than three literals")]
    ClauseTooLong(usize),
    #[error("clause {0} repeats a variable")]
    RepeatedVariable(usize),
    #[error("literal {1} in clause {0} is out of range")]
    LiteralOutOfRange(usize, i64),
}

impl From<crate::graph::GraphError> for InstanceError {
    fn from(e: crate::graph::GraphError) -> Self {
        match e {
            crate::graph::GraphError::EndpointOutOfRange(u, v, _) => InstanceError::EndpointOutOfRange(u, v),
            crate::graph::GraphError::SelfLoop(v) => InstanceError::SelfLoop(v),
        }
    }
}
