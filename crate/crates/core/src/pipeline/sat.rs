use crate::graph::Graph;
use crate::instances::{BinaryCsp, CnfFormula, Relation};

/// Domain index of `true` for variable vertices (`false` is 1).
pub const TRUE: usize = 0;

/// The CSP on the incidence graph of a formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceCsp {
    pub csp: BinaryCsp,
    /// Variable `i` (1-based in the formula) is vertex `i - 1`; clause `j`
    /// is vertex `variables + j`.
    pub graph: Graph,
    pub variables: usize,
}

impl IncidenceCsp {
    pub fn clause_vertex(&self, j: usize) -> usize {
        self.variables + j
    }

    /// Truth values read off a CSP solution.
    pub fn assignment(&self, valuation: &[usize]) -> Vec<bool> {
        valuation[..self.variables].iter().map(|&i| i == TRUE).collect()
    }
}

/// Variables get domain `{T, F}` and a clause with `l` literals gets
/// domain `{1..l}` (the literal it relies on). For the `i`-th literal of
/// clause `z` over variable `v` the constraint on `(v, z)` allows every
/// pair whose clause value is not `i`, plus `(T, i)` for a positive and
/// `(F, i)` for a negative literal.
pub fn sat_to_csp_g(f: &CnfFormula) -> IncidenceCsp {
    let n = f.variables();
    let mut domains: Vec<Vec<String>> = vec![vec!["T".to_string(), "F".to_string()]; n];
    domains.extend(f.clauses().iter().map(|c| (1..=c.len()).map(|i| i.to_string()).collect()));
    let mut csp = BinaryCsp::new(domains);
    let mut edges = Vec::new();
    for (j, clause) in f.clauses().iter().enumerate() {
        let z = n + j;
        let len = clause.len();
        for (i, &lit) in clause.iter().enumerate() {
            let v = lit.unsigned_abs() as usize - 1;
            let satisfied = if lit > 0 { TRUE } else { 1 - TRUE };
            let pairs = (0..2)
                .flat_map(|t| (0..len).filter(move |&c| c != i).map(move |c| (t, c)))
                .chain(std::iter::once((satisfied, i)));
            csp.add_constraint(v, z, Relation::from_pairs(2, len, pairs)).expect("indices in range");
            edges.push((v, z));
        }
    }
    let graph = Graph::new(n + f.clauses().len(), edges).expect("incidence graph is simple");
    IncidenceCsp { csp, graph, variables: n }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;
    use crate::instances::{solve_csp_bruteforce, solve_sat_bruteforce};

    #[test]
    fn two_literal_clause() {
        let f = CnfFormula::new(2, vec![vec![1, -2]]).unwrap();
        let inc = sat_to_csp_g(&f);
        let r1: Vec<_> = inc.csp.relation(0, 2).unwrap().pairs().collect();
        // (T,1) (T,2) (F,2) as (domain index, clause index)
        assert_eq!(r1, vec![(0, 0), (0, 1), (1, 1)]);
        let r2: Vec<_> = inc.csp.relation(1, 2).unwrap().pairs().collect();
        assert_eq!(r2, vec![(0, 0), (1, 0), (1, 1)]);
        assert_eq!(inc.graph.edges(), &[(0, 2), (1, 2)]);
    }

    #[test]
    fn unit_clause_forces_value() {
        let f = CnfFormula::new(1, vec![vec![1]]).unwrap();
        let inc = sat_to_csp_g(&f);
        assert_eq!(inc.csp.domain(1), &["1".to_string()]);
        let r: Vec<_> = inc.csp.relation(0, 1).unwrap().pairs().collect();
        assert_eq!(r, vec![(TRUE, 0)]);
    }

    #[test]
    fn contradiction_unsatisfiable() {
        let f = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
        let caps = Caps::default();
        assert!(!solve_sat_bruteforce(&f, &caps).unwrap().is_yes());
        assert!(!solve_csp_bruteforce(&sat_to_csp_g(&f).csp, &caps).unwrap().is_yes());
    }
}
