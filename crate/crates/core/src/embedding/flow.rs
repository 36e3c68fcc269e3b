use std::collections::BTreeMap;

use microlp::{ComparisonOp, OptimizationDirection, Problem};
use rand::Rng;

use super::EmbedError;
use crate::graph::Graph;

/// Flow values below this are treated as zero during decomposition.
const FLOW_EPS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedPath {
    /// Vertices from source to sink; a single vertex for `u = v`.
    pub vertices: Vec<usize>,
    pub weight: f64,
}

/// One unit of flow between every ordered pair of host vertices, stored as
/// path distributions.
#[derive(Debug, Clone)]
pub struct ConcurrentFlow {
    pub host: Graph,
    /// `paths[u][v]` sums to weight 1.
    pub paths: Vec<Vec<Vec<WeightedPath>>>,
    /// Optimal value of the congestion LP.
    pub lp_optimum: f64,
}

impl ConcurrentFlow {
    /// Total weight of paths through each vertex, endpoints included.
    pub fn through(&self) -> Vec<f64> {
        let l = self.host.vertex_count();
        let mut load = vec![0.0; l];
        for row in &self.paths {
            for pair in row {
                for p in pair {
                    for &w in &p.vertices {
                        load[w] += p.weight;
                    }
                }
            }
        }
        load
    }

    /// Congestion of the decomposed path system.
    pub fn congestion(&self) -> f64 {
        self.through().into_iter().fold(0.0, f64::max)
    }

    /// Draws a `u`–`v` path with probability equal to its weight.
    pub fn sample_path<R: Rng + ?Sized>(&self, u: usize, v: usize, rng: &mut R) -> &[usize] {
        let dist = &self.paths[u][v];
        let mut r: f64 = rng.gen();
        for p in dist {
            if r < p.weight {
                return &p.vertices;
            }
            r -= p.weight;
        }
        &dist.last().expect("every pair carries a path").vertices
    }
}

/// Minimum vertex-congestion concurrent flow of value 1.
///
/// The LP aggregates commodities by source: for every source `s` one flow
/// variable per arc not entering `s`, with net inflow 1 at every other
/// vertex. The load on `w` is `l` (the paths starting at `w`, including
/// the length-0 one) plus the inflow into `w` over all other sources.
/// The optimum is then split into simple paths per sink.
pub fn min_congestion_flow(h: &Graph) -> Result<ConcurrentFlow, EmbedError> {
    let l = h.vertex_count();
    if l == 0 {
        return Err(EmbedError::EmptyHost);
    }
    if !h.is_connected() {
        return Err(EmbedError::Infeasible);
    }
    let arcs: Vec<(usize, usize)> = h.edges().iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
    let mut lp = Problem::new(OptimizationDirection::Minimize);
    let gamma = lp.add_var(1.0, (0.0, f64::INFINITY));
    // vars[s][a] is None for arcs entering s
    let vars: Vec<Vec<Option<microlp::Variable>>> = (0..l)
        .map(|s| {
            arcs.iter()
                .map(|&(_, b)| (b != s).then(|| lp.add_var(0.0, (0.0, f64::INFINITY))))
                .collect()
        })
        .collect();
    for s in 0..l {
        for w in (0..l).filter(|&w| w != s) {
            let mut expr = Vec::new();
            for (a, &(from, to)) in arcs.iter().enumerate() {
                if let Some(x) = vars[s][a] {
                    if to == w {
                        expr.push((x, 1.0));
                    } else if from == w {
                        expr.push((x, -1.0));
                    }
                }
            }
            lp.add_constraint(expr.as_slice(), ComparisonOp::Eq, 1.0);
        }
    }
    for w in 0..l {
        let mut expr = vec![(gamma, -1.0)];
        for s in (0..l).filter(|&s| s != w) {
            for (a, &(_, to)) in arcs.iter().enumerate() {
                if to == w {
                    expr.push((vars[s][a].expect("arc does not enter s"), 1.0));
                }
            }
        }
        lp.add_constraint(expr.as_slice(), ComparisonOp::Le, -(l as f64));
    }
    let solution = lp
        .solve()
        .map_err(|e| match e {
            microlp::Error::Infeasible => EmbedError::Infeasible,
            other => EmbedError::Lp(other.to_string()),
        })?
        .into_solution()
        .map_err(|_| EmbedError::Lp("solve interrupted".into()))?;
    let lp_optimum = solution.objective();

    let mut paths = Vec::with_capacity(l);
    for s in 0..l {
        let mut flow: Vec<f64> = vars[s]
            .iter()
            .map(|x| x.map_or(0.0, |x| solution.var_value(x)))
            .map(|f| if f > FLOW_EPS { f } else { 0.0 })
            .collect();
        cancel_cycles(l, &arcs, &mut flow);
        paths.push(decompose_source(s, l, &arcs, &mut flow)?);
    }
    Ok(ConcurrentFlow { host: h.clone(), paths, lp_optimum })
}

/// Removes every directed cycle carrying positive flow.
fn cancel_cycles(l: usize, arcs: &[(usize, usize)], flow: &mut [f64]) {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); l];
    for (a, &(from, _)) in arcs.iter().enumerate() {
        out[from].push(a);
    }
    while let Some(cycle) = find_cycle(l, arcs, &out, flow) {
        let m = cycle.iter().map(|&a| flow[a]).fold(f64::INFINITY, f64::min);
        for &a in &cycle {
            flow[a] -= m;
            if flow[a] <= FLOW_EPS {
                flow[a] = 0.0;
            }
        }
    }
}

/// Iterative DFS over positive arcs; returns the arcs of one cycle.
fn find_cycle(l: usize, arcs: &[(usize, usize)], out: &[Vec<usize>], flow: &[f64]) -> Option<Vec<usize>> {
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; l];
    let mut via = vec![usize::MAX; l];
    for root in 0..l {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        state[root] = 1;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if let Some(&a) = out[v].get(*next) {
                *next += 1;
                if flow[a] == 0.0 {
                    continue;
                }
                let w = arcs[a].1;
                match state[w] {
                    0 => {
                        state[w] = 1;
                        via[w] = a;
                        stack.push((w, 0));
                    }
                    1 => {
                        let mut cycle = vec![a];
                        let mut x = v;
                        while x != w {
                            cycle.push(via[x]);
                            x = arcs[via[x]].0;
                        }
                        return Some(cycle);
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}

/// Splits an acyclic single-source flow into one path distribution per
/// sink, each normalized to weight 1.
fn decompose_source(
    s: usize,
    l: usize,
    arcs: &[(usize, usize)],
    flow: &mut [f64],
) -> Result<Vec<Vec<WeightedPath>>, EmbedError> {
    let mut inn: Vec<Vec<usize>> = vec![Vec::new(); l];
    for (a, &(_, to)) in arcs.iter().enumerate() {
        inn[to].push(a);
    }
    let mut result = Vec::with_capacity(l);
    for t in 0..l {
        if t == s {
            result.push(vec![WeightedPath { vertices: vec![s], weight: 1.0 }]);
            continue;
        }
        let mut found: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
        let mut demand = 1.0;
        while demand > FLOW_EPS {
            let mut path_arcs = Vec::new();
            let mut x = t;
            while x != s {
                let best = inn[x].iter().copied().filter(|&a| flow[a] > 0.0).max_by(|&a, &b| flow[a].total_cmp(&flow[b]));
                match best {
                    Some(a) if path_arcs.len() < l => {
                        path_arcs.push(a);
                        x = arcs[a].0;
                    }
                    _ => break,
                }
            }
            if x != s {
                break;
            }
            let m = path_arcs.iter().map(|&a| flow[a]).fold(demand, f64::min);
            for &a in &path_arcs {
                flow[a] -= m;
                if flow[a] <= FLOW_EPS {
                    flow[a] = 0.0;
                }
            }
            demand -= m;
            let mut vertices: Vec<usize> = path_arcs.iter().rev().map(|&a| arcs[a].0).collect();
            vertices.push(t);
            *found.entry(vertices).or_insert(0.0) += m;
        }
        let total: f64 = found.values().sum();
        if total < 1.0 - 1e-6 {
            return Err(EmbedError::Lp(format!("decomposition recovered {total} of pair ({s}, {t})")));
        }
        result.push(
            found
                .into_iter()
                .map(|(vertices, w)| WeightedPath { vertices, weight: w / total })
                .collect(),
        );
    }
    Ok(result)
}
