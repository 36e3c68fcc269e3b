//! Seeded instance generators shared by the verification suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::instances::{CnfFormula, ColoredMultigraph, PsiInstance};

/// Random graph of maximum degree 3 with about `total` vertices plus edges:
/// `n = ceil(total / 2.3)` and random edges added while possible.
pub fn random_max_degree3<R: Rng + ?Sized>(total: usize, rng: &mut R) -> Graph {
    let n = (total as f64 / 2.3).ceil() as usize;
    let target = total.saturating_sub(n);
    let mut deg = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut attempts = 0;
    while edges.len() < target && attempts < 100 * total {
        attempts += 1;
        let open: Vec<usize> = (0..n).filter(|&v| deg[v] < 3).collect();
        if open.len() < 2 {
            break;
        }
        let u = *open.choose(rng).expect("nonempty");
        let v = *open.choose(rng).expect("nonempty");
        let e = (u.min(v), u.max(v));
        if u == v || edges.contains(&e) {
            continue;
        }
        deg[u] += 1;
        deg[v] += 1;
        edges.push(e);
    }
    Graph::new(n, edges).expect("generated edges are valid")
}

/// Random CMC instance with `2..=max_n` vertices and `1..=max_colors`
/// colors, every color used at least once.
pub fn random_cmc<R: Rng + ?Sized>(max_n: usize, max_colors: usize, rng: &mut R) -> ColoredMultigraph {
    let n = rng.gen_range(2..=max_n);
    let colors = rng.gen_range(1..=max_colors);
    let extra = rng.gen_range(0..=2 * n);
    let mut edges = Vec::new();
    for c in 1..=colors + extra {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        let color = if c <= colors { c } else { rng.gen_range(1..=colors) };
        edges.push((u, v, color));
    }
    let budget = rng.gen_range(0..=colors);
    ColoredMultigraph::new(n, colors, budget, edges).expect("generated instance is valid")
}

/// Random 3-CNF with `1..=max_vars` variables and at least one clause,
/// `N + M <= max_total`.
pub fn random_cnf<R: Rng + ?Sized>(max_total: usize, rng: &mut R) -> CnfFormula {
    let n = rng.gen_range(1..max_total);
    let m = rng.gen_range(1..=max_total - n);
    let clauses = (0..m).map(|_| random_clause(n, rng)).collect();
    CnfFormula::new(n, clauses).expect("generated formula is valid")
}

fn random_clause<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<i32> {
    let len = rng.gen_range(1..=n.min(3));
    let mut vars: Vec<i32> = (1..=n as i32).collect();
    vars.shuffle(rng);
    let mut clause: Vec<i32> = vars[..len].iter().map(|&v| if rng.gen_bool(0.5) { v } else { -v }).collect();
    clause.sort_by_key(|l| l.abs());
    clause
}

/// All clauses over variables `1..=n` with at most three distinct
/// variables, literals ordered by variable.
pub fn all_clauses(n: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let vars: Vec<i32> = (0..n).filter(|&i| (mask >> i) & 1 == 1).map(|i| i as i32 + 1).collect();
        if vars.len() > 3 {
            continue;
        }
        for signs in 0u32..(1 << vars.len()) {
            out.push(vars.iter().enumerate().map(|(j, &v)| if (signs >> j) & 1 == 1 { -v } else { v }).collect());
        }
    }
    out
}

/// Every formula with `1..=max_vars` variables and `1..=max_clauses`
/// clauses, clauses taken as multisets.
pub fn all_small_cnfs(max_vars: usize, max_clauses: usize) -> Vec<CnfFormula> {
    let mut out = Vec::new();
    for n in 1..=max_vars {
        let clauses = all_clauses(n);
        for m in 1..=max_clauses {
            let mut idx = vec![0usize; m];
            loop {
                let f = idx.iter().map(|&i| clauses[i].clone()).collect();
                out.push(CnfFormula::new(n, f).expect("enumerated formula is valid"));
                // next non-decreasing index sequence
                let mut i = m;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    if idx[i] + 1 < clauses.len() {
                        break;
                    }
                }
                if idx[i] + 1 >= clauses.len() {
                    break;
                }
                idx[i] += 1;
                for j in i + 1..m {
                    idx[j] = idx[i];
                }
            }
        }
    }
    out
}

/// Connected patterns on `2..=max_h` vertices with `1..=max_a` edges.
pub fn connected_patterns(max_h: usize, max_a: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for h in 2..=max_h {
        let all: Vec<(usize, usize)> = (0..h).flat_map(|u| (u + 1..h).map(move |v| (u, v))).collect();
        for mask in 1u32..(1 << all.len()) {
            if mask.count_ones() as usize > max_a {
                continue;
            }
            let edges = (0..all.len()).filter(|&i| (mask >> i) & 1 == 1).map(|i| all[i]);
            let g = Graph::new(h, edges).expect("subset of K_h");
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

/// Every PSI instance on `pattern` with blocks `{x n .. x n + n - 1}`:
/// all subsets of the `n^2 |E(H)|` candidate host edges.
pub fn all_psi_hosts(pattern: &Graph, n: usize) -> Vec<PsiInstance> {
    let h = pattern.vertex_count();
    let candidates: Vec<(usize, usize)> = pattern
        .edges()
        .iter()
        .flat_map(|&(x, y)| (0..n).flat_map(move |i| (0..n).map(move |j| (x * n + i, y * n + j))))
        .collect();
    assert!(candidates.len() < 20, "host subsets limited to 2^19");
    let blocks: Vec<Vec<usize>> = (0..h).map(|x| (x * n..(x + 1) * n).collect()).collect();
    (0u32..(1 << candidates.len()))
        .map(|mask| {
            let edges = (0..candidates.len()).filter(|&i| (mask >> i) & 1 == 1).map(|i| candidates[i]);
            let host = Graph::new(h * n, edges).expect("candidate edges are valid");
            PsiInstance::new(pattern.clone(), host, blocks.clone()).expect("host edges follow the pattern")
        })
        .collect()
}

/// A random embedding of `g` into itself of depth at most `max_depth`:
/// every branch set is `{v}` plus, with probability one half, one
/// neighbor whose load stays within the limit.
pub fn random_self_embedding<R: Rng + ?Sized>(g: &Graph, max_depth: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let adj = g.adjacency();
    let mut load = vec![1usize; g.vertex_count()];
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.shuffle(rng);
    let mut sets: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| vec![v]).collect();
    for v in order {
        if adj[v].is_empty() || !rng.gen_bool(0.5) {
            continue;
        }
        let w = *adj[v].choose(rng).expect("nonempty");
        if load[w] < max_depth {
            load[w] += 1;
            sets[v].push(w);
            sets[v].sort_unstable();
        }
    }
    sets
}
