use crate::gadgets::connectivize_pattern_with;
use crate::graph::Graph;
use crate::instances::{BinaryCsp, PsiInstance};

/// PSI instance built from a CSP on a host pattern, with the map back to
/// CSP values.
#[derive(Debug, Clone)]
pub struct PsiConversion {
    pub psi: PsiInstance,
    /// Domain size of each pattern vertex; block entries at or past it are
    /// padding.
    pub domain_sizes: Vec<usize>,
    pub block_size: usize,
    /// Whether a universal pattern vertex was added.
    pub connectivized: bool,
}

impl PsiConversion {
    /// CSP valuation of a PSI witness (ignoring an added universal vertex).
    pub fn valuation(&self, witness: &[usize]) -> Vec<usize> {
        (0..self.domain_sizes.len()).map(|w| witness[w] - w * self.block_size).collect()
    }

    /// PSI witness of a CSP valuation, including the universal vertex
    /// when one was added.
    pub fn witness(&self, valuation: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = valuation.iter().enumerate().map(|(w, &i)| w * self.block_size + i).collect();
        if self.connectivized {
            out.push(self.domain_sizes.len() * self.block_size);
        }
        out
    }
}

/// Pattern `H`, block `V_w` = the values of `w` padded to the largest
/// domain (at least 1) with values that never get an edge, and a host edge
/// between value `i` of `w` and value `j` of `z` for every pattern edge `wz`
/// whose constraint (if any) allows `(i, j)`. A disconnected or edgeless
/// pattern gets a universal vertex joined to every real value.
pub fn csp_to_psi(csp: &BinaryCsp, pattern: &Graph) -> PsiConversion {
    let h = pattern.vertex_count();
    assert_eq!(h, csp.variable_count(), "one pattern vertex per CSP variable");
    assert!(
        csp.constraints().keys().all(|&(a, b)| pattern.has_edge(a, b)),
        "constraint graph must be a subgraph of the pattern"
    );
    let domain_sizes: Vec<usize> = (0..h).map(|w| csp.domain(w).len()).collect();
    let n = domain_sizes.iter().copied().max().unwrap_or(0).max(1);
    let mut edges = Vec::new();
    for &(w, z) in pattern.edges() {
        for i in 0..domain_sizes[w] {
            for j in 0..domain_sizes[z] {
                if csp.allows(w, i, z, j) {
                    edges.push((w * n + i, z * n + j));
                }
            }
        }
    }
    let host = Graph::new(h * n, edges).expect("edges inside blocks");
    let blocks = (0..h).map(|w| (w * n..(w + 1) * n).collect()).collect();
    let psi = PsiInstance::new(pattern.clone(), host, blocks).expect("valid PSI instance");
    let out = connectivize_pattern_with(&psi, |v| v % n < domain_sizes[v / n]);
    PsiConversion { psi: out.psi, domain_sizes, block_size: n, connectivized: out.added }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;
    use crate::instances::{solve_psi_bruteforce, Relation};

    fn tokens(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn unconstrained_edge_is_complete_bipartite() {
        let csp = BinaryCsp::new(vec![tokens(2), tokens(2)]);
        let conv = csp_to_psi(&csp, &Graph::new(2, [(0, 1)]).unwrap());
        assert!(!conv.connectivized);
        assert_eq!(conv.psi.host().edges(), &[(0, 2), (0, 3), (1, 2), (1, 3)]);
    }

    #[test]
    fn padding_values_stay_isolated() {
        let mut csp = BinaryCsp::new(vec![tokens(1), tokens(3)]);
        csp.add_constraint(0, 1, Relation::from_pairs(1, 3, [(0, 2)])).unwrap();
        let conv = csp_to_psi(&csp, &Graph::new(2, [(0, 1)]).unwrap());
        assert_eq!(conv.block_size, 3);
        assert_eq!(conv.psi.host().edges(), &[(0, 5)]);
        assert_eq!(conv.psi.host().degrees()[1], 0);
        let w = solve_psi_bruteforce(&conv.psi, &Caps::default()).unwrap().into_witness().unwrap();
        assert_eq!(conv.valuation(&w), vec![0, 2]);
    }

    #[test]
    fn single_vertex_pattern_gets_universal() {
        let csp = BinaryCsp::new(vec![tokens(2), vec![]]);
        let conv = csp_to_psi(&csp, &Graph::empty(2));
        assert!(conv.connectivized);
        assert_eq!(conv.psi.pattern().edges(), &[(0, 2), (1, 2)]);
        assert!(!solve_psi_bruteforce(&conv.psi, &Caps::default()).unwrap().is_yes());
    }
}
