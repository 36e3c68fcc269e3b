use super::{ColoredMultigraph, InstanceError};

/// Dual Colored Min-Cut instance: graphs `G_1..G_p` on a common vertex set
/// `W = 0..n` and the number `a` of graphs to select. `a > p` is allowed
/// and makes the instance a no-instance.
///
/// Each graph's edge set is kept canonical (`u < v`, sorted, deduplicated).
/// Graph `i` (0-based storage) is color `i + 1` in files and witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualCmcInstance {
    vertex_count: usize,
    graphs: Vec<Vec<(usize, usize)>>,
    select: usize,
}

impl DualCmcInstance {
    pub fn new(vertex_count: usize, graphs: Vec<Vec<(usize, usize)>>, select: usize) -> Result<Self, InstanceError> {
        if vertex_count == 0 {
            return Err(InstanceError::NoVertices);
        }
        let mut canon = Vec::with_capacity(graphs.len());
        for g in graphs {
            let mut edges = Vec::with_capacity(g.len());
            for (u, v) in g {
                if u >= vertex_count || v >= vertex_count {
                    return Err(InstanceError::EndpointOutOfRange(u, v));
                }
                if u == v {
                    return Err(InstanceError::SelfLoop(u));
                }
                edges.push((u.min(v), u.max(v)));
            }
            edges.sort_unstable();
            edges.dedup();
            canon.push(edges);
        }
        Ok(Self { vertex_count, graphs: canon, select })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of graphs `p`.
    pub fn graph_count(&self) -> usize {
        self.graphs.len()
    }

    /// The number `a` of graphs a solution selects.
    pub fn select(&self) -> usize {
        self.select
    }

    pub fn graphs(&self) -> &[Vec<(usize, usize)>] {
        &self.graphs
    }

    pub fn with_select(&self, select: usize) -> Self {
        Self { select, ..self.clone() }
    }

    /// Whether the union of the given graphs (0-based indices) is connected on `W`.
    pub fn union_connected(&self, selection: &[usize]) -> bool {
        let mut dsu = crate::dsu::DisjointSet::new(self.vertex_count);
        if self.vertex_count <= 1 {
            return true;
        }
        for &i in selection {
            for &(u, v) in &self.graphs[i] {
                dsu.union(u, v);
            }
            if dsu.components() == 1 {
                return true;
            }
        }
        dsu.components() == 1
    }
}

/// Colors become graphs; `a = p - k`.
pub fn cmc_to_dual(g: &ColoredMultigraph) -> DualCmcInstance {
    let mut graphs = vec![Vec::new(); g.colors()];
    for e in g.edges() {
        graphs[e.color - 1].push((e.u, e.v));
    }
    DualCmcInstance::new(g.vertex_count(), graphs, g.colors() - g.budget())
        .expect("a valid CMC instance maps to a valid DCMC instance")
}

/// Graphs become colors; `k = p - a`. Fails when some graph has no edges,
/// since CMC instances require every color to be used, and when `a > p`.
pub fn dual_to_cmc(d: &DualCmcInstance) -> Result<ColoredMultigraph, InstanceError> {
    if d.select() > d.graph_count() {
        return Err(InstanceError::BudgetTooLarge { budget: d.select(), colors: d.graph_count() });
    }
    let edges = d
        .graphs()
        .iter()
        .enumerate()
        .flat_map(|(i, g)| g.iter().map(move |&(u, v)| (u, v, i + 1)));
    ColoredMultigraph::new(d.vertex_count(), d.graph_count(), d.graph_count() - d.select(), edges)
}
