//! Property suites behind `labelcut verify` and the acceptance tests.
//!
//! Every suite is deterministic for a given seed and returns a
//! [`SuiteReport`] of named checks plus statistics.

mod checks;
pub mod generators;
mod suites;

use std::fmt;

use crate::pipeline::Report;

pub use checks::{
    check_duality, check_gadget_instance, check_pipeline_formula, check_routing, gadget_artifact, DualityCheck,
    GadgetCheck, PipelineCheck,
};
pub use suites::{
    embedding_trial, run_duality, run_embedding, run_gadgets, run_pipeline, EmbeddingTrial, Suite,
};

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub stats: Report,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        Self { suite: suite.to_string(), checks: Vec::new(), stats: Report::default() }
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
        self.stats.extend(other.stats);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite={}", self.suite)?;
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "check.{}={status} {}", c.name, c.detail)?;
        }
        for (k, v) in self.stats.entries() {
            writeln!(f, "stat.{k}={v}")?;
        }
        writeln!(f, "result={}", if self.passed() { "pass" } else { "fail" })
    }
}
