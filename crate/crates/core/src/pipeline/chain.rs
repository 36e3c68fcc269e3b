use std::fmt;

use super::{csp_to_psi, route_csp, sat_to_csp_g, IncidenceCsp, PipelineError, PsiConversion, RoutedCspContext};
use crate::config::Caps;
use crate::embedding::{Embedder, Embedding};
use crate::gadgets::{reduce_psi_to_dcmc, Reduction};
use crate::instances::{solve_dual_bruteforce, Answer, CnfFormula, OracleError};

/// Ordered `key=value` lines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn push(&mut self, key: &str, value: impl fmt::Display) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// `k = max(2, ceil(sqrt(N + M)))`.
pub fn pipeline_k(variables: usize, clauses: usize) -> usize {
    let total = variables + clauses;
    let mut k = 0;
    while k * k < total {
        k += 1;
    }
    k.max(2)
}

/// Every stage of the SAT → DCMC chain.
#[derive(Debug, Clone)]
pub struct PipelineRun {
    pub formula: CnfFormula,
    pub k: usize,
    pub incidence: IncidenceCsp,
    pub embedding: Embedding,
    pub failed_attempts: u32,
    pub routed: RoutedCspContext,
    pub conversion: PsiConversion,
    pub reduction: Reduction,
}

/// Runs the chain: incidence CSP, embedding with retries (seeded by
/// `seed`), routing, PSI conversion and the gadget reduction.
pub fn sat_to_dcmc(
    f: &CnfFormula,
    embedder: &mut Embedder,
    seed: u64,
    caps: &Caps,
) -> Result<PipelineRun, PipelineError> {
    let incidence = sat_to_csp_g(f);
    let k = pipeline_k(f.variables(), f.clauses().len());
    let (embedding, failed_attempts) = embedder.embed_with_retry(&incidence.graph, k, seed)?;
    let routed = route_csp(&incidence.csp, &embedding.host, &embedding.branch_sets, caps)?;
    let conversion = csp_to_psi(&routed.routed, &embedding.host);
    let reduction = reduce_psi_to_dcmc(&conversion.psi, caps)?;
    Ok(PipelineRun { formula: f.clone(), k, incidence, embedding, failed_attempts, routed, conversion, reduction })
}

impl PipelineRun {
    pub fn report(&self) -> Report {
        let mut r = Report::default();
        let g = &self.incidence.graph;
        let h = &self.embedding.host;
        let psi = &self.conversion.psi;
        let params = &self.reduction.params;
        r.push("variables", self.formula.variables());
        r.push("clauses", self.formula.clauses().len());
        r.push("incidence_vertices", g.vertex_count());
        r.push("incidence_edges", g.edge_count());
        r.push("k", self.k);
        r.push("embedding_kind", format!("{:?}", self.embedding.kind).to_lowercase());
        r.push("host_vertices", h.vertex_count());
        r.push("host_edges", h.edge_count());
        r.push("depth", self.embedding.depth());
        r.push("failed_attempts", self.failed_attempts);
        r.push("max_routed_domain", self.routed.max_domain());
        r.push("routed_constraints", self.routed.routed.constraints().len());
        r.push("connectivized", self.conversion.connectivized);
        r.push("psi_pattern_vertices", psi.pattern().vertex_count());
        r.push("psi_pattern_edges", psi.pattern().edge_count());
        r.push("psi_block_size", psi.block_size());
        r.push("psi_host_edges", psi.host().edge_count());
        r.push("rho", params.rho);
        r.push("b", params.b);
        r.push("a", params.a);
        r.push("p", self.reduction.dual.graph_count());
        r.push("w", self.reduction.dual.vertex_count());
        r
    }

    /// Decides the final DCMC instance by brute force.
    pub fn decide(&self, caps: &Caps) -> Result<Answer<Vec<usize>>, OracleError> {
        solve_dual_bruteforce(&self.reduction.dual, caps)
    }

    /// Translates a disconnecting selection back to a truth assignment.
    pub fn assignment(&self, selection: &[usize]) -> Result<Vec<bool>, PipelineError> {
        let witness = self.reduction.decode_selection(selection)?;
        let routed_solution = self.conversion.valuation(&witness);
        let base = self.routed.lift(self.incidence.csp.variable_count(), &routed_solution);
        Ok(self.incidence.assignment(&base))
    }
}
