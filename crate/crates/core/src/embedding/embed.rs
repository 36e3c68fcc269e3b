use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{audit_congestion, build_expander, min_congestion_flow, ConcurrentFlow, EmbedError, ExpanderCertificate};
use crate::config::RunConfig;
use crate::dsu::DisjointSet;
use crate::graph::Graph;

/// Below this `k` the whole graph is embedded into a single vertex.
pub const SMALL_K: usize = 8;

/// `G` without isolated vertices and with every vertex of degree above 3
/// replaced by a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkingGraph {
    pub graph: Graph,
    /// Original vertex of each working vertex.
    pub origin: Vec<usize>,
    /// Original vertices without incident edges, ascending.
    pub isolated: Vec<usize>,
}

/// Simplification steps 2 and 3. A vertex of degree `d > 3` becomes the
/// cycle `c_0 .. c_{d-1}` and its `j`-th incident edge (canonical edge
/// order) moves to `c_j`.
pub fn reduce_degrees(g: &Graph) -> WorkingGraph {
    let degrees = g.degrees();
    let mut first = vec![usize::MAX; g.vertex_count()];
    let mut origin = Vec::new();
    let mut isolated = Vec::new();
    let mut edges = Vec::new();
    for (v, &d) in degrees.iter().enumerate() {
        match d {
            0 => isolated.push(v),
            1..=3 => {
                first[v] = origin.len();
                origin.push(v);
            }
            _ => {
                first[v] = origin.len();
                origin.extend(std::iter::repeat_n(v, d));
                edges.extend((0..d).map(|j| (first[v] + j, first[v] + (j + 1) % d)));
            }
        }
    }
    let mut used = vec![0usize; g.vertex_count()];
    let mut attach = |v: usize| {
        if degrees[v] > 3 {
            used[v] += 1;
            first[v] + used[v] - 1
        } else {
            first[v]
        }
    };
    for &(u, v) in g.edges() {
        let (a, b) = (attach(u), attach(v));
        edges.push((a, b));
    }
    let graph = Graph::new(origin.len(), edges).expect("working graph is simple");
    WorkingGraph { graph, origin, isolated }
}

/// Whether contracting each class `origin⁻¹(v)` of the working graph
/// yields a graph containing `g`: every class induces a connected subgraph
/// and every edge of `g` joins two classes.
pub fn is_minor_model(g: &Graph, working: &WorkingGraph) -> bool {
    let n = g.vertex_count();
    let mut classes = vec![Vec::new(); n];
    for (w, &v) in working.origin.iter().enumerate() {
        classes[v].push(w);
    }
    for (v, class) in classes.iter().enumerate() {
        let expected_empty = working.isolated.binary_search(&v).is_ok();
        if class.is_empty() != expected_empty {
            return false;
        }
        if !class.is_empty() && !working.graph.induces_connected(class) {
            return false;
        }
    }
    let mut contracted: Vec<(usize, usize)> = working
        .graph
        .edges()
        .iter()
        .map(|&(a, b)| (working.origin[a], working.origin[b]))
        .filter(|&(u, v)| u != v)
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    contracted.sort_unstable();
    contracted.dedup();
    g.edges().iter().all(|e| contracted.binary_search(e).is_ok())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingKind {
    /// `k < 8`: `H` is a single vertex.
    SingleVertex,
    /// `n + m <= k` after simplification: `H` is the working graph.
    Trivial,
    /// Expander host with sampled flow paths.
    Sampled,
}

/// Paths added for one working edge `xy` with `ζ(x) < ζ(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampledEdge {
    pub x: usize,
    pub y: usize,
    pub target: usize,
    pub path_x: Vec<usize>,
    pub path_y: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Embedding {
    pub kind: EmbeddingKind,
    pub host: Graph,
    /// Sorted host vertices of `φ(v)` for each original vertex.
    pub branch_sets: Vec<Vec<usize>>,
    pub working: WorkingGraph,
    /// Bucket of each working vertex.
    pub zeta: Vec<usize>,
    /// Host vertex of each isolated vertex, parallel to `working.isolated`.
    pub isolated_hosts: Vec<usize>,
    pub sampled: Vec<SampledEdge>,
}

impl Embedding {
    pub fn depth(&self) -> usize {
        let mut load = vec![0usize; self.host.vertex_count()];
        for set in &self.branch_sets {
            for &w in set {
                load[w] += 1;
            }
        }
        load.into_iter().max().unwrap_or(0)
    }

    /// Checks that every branch set is nonempty and connected and that the
    /// branch sets of adjacent vertices touch.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        if self.branch_sets.len() != g.vertex_count() {
            return Err(format!("{} branch sets for {} vertices", self.branch_sets.len(), g.vertex_count()));
        }
        for (v, set) in self.branch_sets.iter().enumerate() {
            if set.iter().any(|&w| w >= self.host.vertex_count()) {
                return Err(format!("branch set of {v} leaves the host"));
            }
            if !self.host.induces_connected(set) {
                return Err(format!("branch set of {v} is empty or disconnected"));
            }
        }
        for &(u, v) in g.edges() {
            if !touch(&self.host, &self.branch_sets[u], &self.branch_sets[v]) {
                return Err(format!("branch sets of {u} and {v} do not touch"));
            }
        }
        Ok(())
    }

    /// Sizes `|ζ⁻¹(w)|` of the working-vertex buckets.
    pub fn bucket_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.host.vertex_count()];
        for &w in &self.zeta {
            sizes[w] += 1;
        }
        sizes
    }
}

/// Whether two vertex sets share a vertex or are joined by an edge.
pub fn touch(h: &Graph, a: &[usize], b: &[usize]) -> bool {
    let mut mark = vec![false; h.vertex_count()];
    for &w in a {
        mark[w] = true;
    }
    if b.iter().any(|&w| mark[w]) {
        return true;
    }
    let mut in_b = vec![false; h.vertex_count()];
    for &w in b {
        in_b[w] = true;
    }
    h.edges().iter().any(|&(u, v)| (mark[u] && in_b[v]) || (mark[v] && in_b[u]))
}

/// `C (1 + (n + m)/k) ln k`.
pub fn depth_bound(big_c: f64, n: usize, m: usize, k: usize) -> f64 {
    big_c * (1.0 + (n + m) as f64 / k as f64) * (k as f64).ln()
}

/// `10 c p ln l` with `p = 3 (1 + n/l)`.
pub fn path_hit_bound(c_hat: f64, n: usize, l: usize) -> f64 {
    10.0 * c_hat * claim_p(n, l) * (l as f64).ln()
}

pub fn claim_p(n: usize, l: usize) -> f64 {
    3.0 * (1.0 + n as f64 / l as f64)
}

/// Expander and its min-congestion flow for one host size.
#[derive(Debug)]
pub struct HostRouting {
    pub expander: ExpanderCertificate,
    pub flow: ConcurrentFlow,
}

/// Runs the embedding with flows cached per `l`.
#[derive(Debug)]
pub struct Embedder {
    config: RunConfig,
    cache: HashMap<usize, Arc<HostRouting>>,
}

impl Embedder {
    pub fn new(config: RunConfig) -> Self {
        Self { config, cache: HashMap::new() }
    }

    pub fn config(&self) -> &RunConfig {
        &self.config
    }

    pub fn routing(&mut self, l: usize) -> Result<Arc<HostRouting>, EmbedError> {
        if let Some(r) = self.cache.get(&l) {
            return Ok(r.clone());
        }
        let cfg = &self.config;
        let expander = build_expander(
            l,
            cfg.delta_target,
            cfg.expander_seed,
            cfg.expander_retries,
            cfg.caps.expander_exhaustive,
        )?;
        let flow = min_congestion_flow(&expander.graph)?;
        let routing = Arc::new(HostRouting { expander, flow });
        self.cache.insert(l, routing.clone());
        Ok(routing)
    }

    /// One embedding attempt. Returns [`EmbedError::Fail`] when the sampled
    /// paths exceed the path-hit bound or the depth exceeds the depth bound.
    pub fn embed(&mut self, g: &Graph, k: usize, seed: u64) -> Result<Embedding, EmbedError> {
        if k < 2 {
            return Err(EmbedError::InvalidK(k));
        }
        let working = reduce_degrees(g);
        let n_work = working.graph.vertex_count();
        if k < SMALL_K {
            return Ok(Embedding {
                kind: EmbeddingKind::SingleVertex,
                host: Graph::empty(1),
                branch_sets: vec![vec![0]; g.vertex_count()],
                zeta: vec![0; n_work],
                isolated_hosts: vec![0; working.isolated.len()],
                working,
                sampled: Vec::new(),
            });
        }
        let quarter = k / 4;
        if n_work + working.graph.edge_count() <= k {
            let host = Graph::new(n_work.max(quarter), working.graph.edges().iter().copied())
                .expect("padding keeps edges in range");
            let size = host.vertex_count();
            let isolated_hosts = (0..working.isolated.len()).map(|j| (n_work + j) % size).collect();
            let zeta = (0..n_work).collect();
            return Ok(assemble(g, EmbeddingKind::Trivial, host, working, zeta, isolated_hosts, Vec::new()));
        }
        let l = quarter;
        let routing = self.routing(l)?;
        let zeta: Vec<usize> = (0..n_work).map(|x| x % l).collect();
        let isolated_hosts = (0..working.isolated.len()).map(|j| (n_work + j) % l).collect();
        let mut sampled = Vec::new();
        for (e, &(u, v)) in working.graph.edges().iter().enumerate() {
            if zeta[u] == zeta[v] {
                continue;
            }
            let (x, y) = if zeta[u] < zeta[v] { (u, v) } else { (v, u) };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(e as u64);
            let target = rng.gen_range(0..l);
            let path_x = routing.flow.sample_path(zeta[x], target, &mut rng).to_vec();
            let path_y = routing.flow.sample_path(zeta[y], target, &mut rng).to_vec();
            sampled.push(SampledEdge { x, y, target, path_x, path_y });
        }
        let host = routing.expander.graph.clone();
        let embedding = assemble(g, EmbeddingKind::Sampled, host, working, zeta, isolated_hosts, sampled);

        let audit = audit_congestion(&embedding);
        let hit_bound = path_hit_bound(self.config.c_hat, n_work, l);
        let worst = audit.max_type1().max(audit.max_type2());
        if worst as f64 > hit_bound {
            return Err(EmbedError::Fail(format!("{worst} path memberships at one vertex exceed {hit_bound:.2}")));
        }
        let depth = embedding.depth();
        let bound = depth_bound(self.config.depth_constant(), g.vertex_count(), g.edge_count(), k);
        if depth as f64 > bound {
            return Err(EmbedError::Fail(format!("depth {depth} exceeds {bound:.2}")));
        }
        Ok(embedding)
    }

    /// Retries [`Embedder::embed`] with seeds `seed, seed + 1, ..` up to the
    /// configured number of attempts; returns the embedding and the number
    /// of failed attempts before it.
    pub fn embed_with_retry(&mut self, g: &Graph, k: usize, seed: u64) -> Result<(Embedding, u32), EmbedError> {
        let attempts = self.config.retries.max(1);
        for i in 0..attempts {
            match self.embed(g, k, seed.wrapping_add(i as u64)) {
                Ok(e) => return Ok((e, i)),
                Err(EmbedError::Fail(_)) => continue,
                Err(other) => return Err(other),
            }
        }
        Err(EmbedError::RetriesExhausted(attempts))
    }
}

fn assemble(
    g: &Graph,
    kind: EmbeddingKind,
    host: Graph,
    working: WorkingGraph,
    zeta: Vec<usize>,
    isolated_hosts: Vec<usize>,
    sampled: Vec<SampledEdge>,
) -> Embedding {
    let mut work_sets: Vec<Vec<usize>> = zeta.iter().map(|&w| vec![w]).collect();
    for s in &sampled {
        work_sets[s.x].extend(&s.path_x);
        work_sets[s.y].extend(&s.path_y);
    }
    let mut branch_sets = vec![Vec::new(); g.vertex_count()];
    for (x, set) in work_sets.into_iter().enumerate() {
        branch_sets[working.origin[x]].extend(set);
    }
    for (&v, &w) in working.isolated.iter().zip(&isolated_hosts) {
        branch_sets[v].push(w);
    }
    for set in &mut branch_sets {
        set.sort_unstable();
        set.dedup();
    }
    Embedding { kind, host, branch_sets, working, zeta, isolated_hosts, sampled }
}

/// Connected components of the graph induced by `vertices`.
pub fn induced_components(h: &Graph, vertices: &[usize]) -> usize {
    let mut inside = vec![false; h.vertex_count()];
    for &v in vertices {
        inside[v] = true;
    }
    let mut dsu = DisjointSet::new(h.vertex_count());
    for &(u, v) in h.edges() {
        if inside[u] && inside[v] {
            dsu.union(u, v);
        }
    }
    let mut roots: Vec<usize> = vertices.iter().map(|&v| dsu.find(v)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}
