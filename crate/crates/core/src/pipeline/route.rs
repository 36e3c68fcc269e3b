use super::PipelineError;
use crate::config::Caps;
use crate::graph::Graph;
use crate::instances::{BinaryCsp, Relation};

/// The routed instance `ψ_H` together with the product-domain bookkeeping
/// needed to translate solutions back to `ψ_G`.
#[derive(Debug, Clone)]
pub struct RoutedCspContext {
    pub host: Graph,
    /// Sorted `G`-vertices whose branch set contains `w`.
    pub members: Vec<Vec<usize>>,
    /// Surviving tuples of `𝒟_w`, one value index per member, in
    /// lexicographic order.
    pub tuples: Vec<Vec<Vec<usize>>>,
    /// Size of the unrestricted product `∏ |D_v|` for each `w`.
    pub product_sizes: Vec<u128>,
    pub routed: BinaryCsp,
}

impl RoutedCspContext {
    /// Reads a `ψ_G` valuation off a `ψ_H` solution, taking each `v` from
    /// the first host vertex of its branch set.
    pub fn lift(&self, base_vars: usize, solution: &[usize]) -> Vec<usize> {
        let mut out = vec![usize::MAX; base_vars];
        for (w, &t) in solution.iter().enumerate() {
            for (c, &v) in self.members[w].iter().enumerate() {
                if out[v] == usize::MAX {
                    out[v] = self.tuples[w][t][c];
                }
            }
        }
        out
    }

    pub fn max_domain(&self) -> usize {
        self.tuples.iter().map(Vec::len).max().unwrap_or(0)
    }
}

fn token(base: &BinaryCsp, members: &[usize], tuple: &[usize]) -> String {
    if tuple.is_empty() {
        return "_".to_string();
    }
    members
        .iter()
        .zip(tuple)
        .map(|(&v, &i)| base.domain(v)[i].as_str())
        .collect::<Vec<_>>()
        .join(".")
}

/// Routes `ψ_G` along the embedding given by `branch_sets` (one sorted,
/// connected host vertex set per `G`-vertex).
///
/// Every host vertex `w` gets the product of the domains of its members.
/// Constraints of `ψ_G` are first applied as domain restrictions at every
/// shared vertex. Then relations are built on the restricted domains:
/// consistency of `v` across every host edge inside `φ(v)`, and for each
/// constrained pair `uv` the relation `R_uv` across every host edge joining
/// `φ(u)` to `φ(v)`, in both orientations. Relations on the same host pair
/// are intersected.
pub fn route_csp(
    base: &BinaryCsp,
    host: &Graph,
    branch_sets: &[Vec<usize>],
    caps: &Caps,
) -> Result<RoutedCspContext, PipelineError> {
    let hn = host.vertex_count();
    if branch_sets.len() != base.variable_count() {
        return Err(PipelineError::InvalidEmbedding(format!(
            "{} branch sets for {} variables",
            branch_sets.len(),
            base.variable_count()
        )));
    }
    let mut members = vec![Vec::new(); hn];
    for (v, set) in branch_sets.iter().enumerate() {
        if !host.induces_connected(set) {
            return Err(PipelineError::InvalidEmbedding(format!("branch set of {v} is empty or disconnected")));
        }
        for &w in set {
            members[w].push(v);
        }
    }
    for &(u, v) in base.constraints().keys() {
        if !crate::embedding::touch(host, &branch_sets[u], &branch_sets[v]) {
            return Err(PipelineError::InvalidEmbedding(format!("branch sets of {u} and {v} do not touch")));
        }
    }

    let mut product_sizes = Vec::with_capacity(hn);
    let mut tuples = Vec::with_capacity(hn);
    for m in &members {
        let size = m.iter().fold(1u128, |acc, &v| acc.saturating_mul(base.domain(v).len() as u128));
        if size > caps.routed_domain {
            return Err(PipelineError::TooLarge { what: "routed domain", size, cap: caps.routed_domain });
        }
        product_sizes.push(size);
        // constraints among members are checked while the tuples are built
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(m.len());
        extend_tuples(base, m, &mut current, &mut out);
        tuples.push(out);
    }

    let domains = (0..hn).map(|w| tuples[w].iter().map(|t| token(base, &members[w], t)).collect()).collect();
    let mut routed = BinaryCsp::new(domains);
    let coord = |w: usize, v: usize| members[w].binary_search(&v).ok();
    for &(w, z) in host.edges() {
        let (dw, dz) = (&tuples[w], &tuples[z]);
        let mut relations: Vec<Box<dyn Fn(&[usize], &[usize]) -> bool + '_>> = Vec::new();
        for &v in &members[w] {
            if let (Some(cw), Some(cz)) = (coord(w, v), coord(z, v)) {
                relations.push(Box::new(move |a: &[usize], b: &[usize]| a[cw] == b[cz]));
            }
        }
        for (&(u, v), rel) in base.constraints() {
            for (x, y, flip) in [(u, v, false), (v, u, true)] {
                if let (Some(cw), Some(cz)) = (coord(w, x), coord(z, y)) {
                    relations.push(Box::new(move |a: &[usize], b: &[usize]| {
                        if flip {
                            rel.contains(b[cz], a[cw])
                        } else {
                            rel.contains(a[cw], b[cz])
                        }
                    }));
                }
            }
        }
        if relations.is_empty() {
            continue;
        }
        let pairs = (0..dw.len())
            .flat_map(|i| (0..dz.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| relations.iter().all(|r| r(&dw[i], &dz[j])));
        routed
            .add_constraint(w, z, Relation::from_pairs(dw.len(), dz.len(), pairs))
            .expect("relation matches the domains");
    }
    Ok(RoutedCspContext { host: host.clone(), members, tuples, product_sizes, routed })
}

/// Lexicographic enumeration of the tuples over `members` that satisfy
/// every constraint between two members.
fn extend_tuples(base: &BinaryCsp, members: &[usize], current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let c = current.len();
    if c == members.len() {
        out.push(current.clone());
        return;
    }
    let v = members[c];
    for i in 0..base.domain(v).len() {
        if (0..c).all(|d| base.allows(members[d], current[d], v, i)) {
            current.push(i);
            extend_tuples(base, members, current, out);
            current.pop();
        }
    }
}
