//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use labelcut::instances::{CnfFormula, PsiInstance};
use labelcut::Graph;

pub fn is_prime(x: u64) -> bool {
    x >= 2 && (2..x).take_while(|d| d * d <= x).all(|d| !x.is_multiple_of(d))
}

/// Smallest `m` with `m^a >= n`.
pub fn int_root_ceil(n: u64, a: u32) -> u64 {
    (1..).find(|m: &u64| m.pow(a) >= n).unwrap()
}

/// Connected components by repeated BFS over an edge list.
pub fn components(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if comp[v] == usize::MAX {
                    comp[v] = next;
                    stack.push(v);
                }
            }
        }
        next += 1;
    }
    comp
}

pub fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    components(n, edges).iter().all(|&c| c == 0)
}

/// Whether `set` is nonempty and induces a connected subgraph of `h`.
pub fn induces_connected(h: &Graph, set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let index = |v: usize| set.iter().position(|&w| w == v);
    let local: Vec<(usize, usize)> =
        h.edges().iter().filter_map(|&(u, v)| Some((index(u)?, index(v)?))).collect();
    connected(set.len(), &local)
}

pub fn touches(h: &Graph, a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|v| b.contains(v))
        || h.edges().iter().any(|&(u, v)| (a.contains(&u) && b.contains(&v)) || (a.contains(&v) && b.contains(&u)))
}

/// All satisfying assignments by enumeration; bit `i` of the mask is
/// variable `i + 1`.
pub fn sat_models(f: &CnfFormula) -> Vec<u32> {
    (0u32..1 << f.variables())
        .filter(|&mask| {
            f.clauses().iter().all(|c| {
                c.iter().any(|&lit| {
                    let value = (mask >> (lit.unsigned_abs() - 1)) & 1 == 1;
                    (lit > 0) == value
                })
            })
        })
        .collect()
}

pub fn assignment_satisfies(f: &CnfFormula, assignment: &[bool]) -> bool {
    assignment.len() == f.variables()
        && f.clauses().iter().all(|c| c.iter().any(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0)))
}

/// All one-vertex-per-block selections that map every pattern edge to a
/// host edge.
pub fn psi_witnesses(inst: &PsiInstance) -> Vec<Vec<usize>> {
    let h = inst.pattern().vertex_count();
    let mut out = Vec::new();
    let mut pick = vec![0usize; h];
    let n = inst.block_size();
    loop {
        let chosen: Vec<usize> = (0..h).map(|x| inst.block(x)[pick[x]]).collect();
        if inst.pattern().edges().iter().all(|&(x, y)| {
            inst.host().edges().iter().any(|&(u, v)| (u, v) == (chosen[x], chosen[y]) || (v, u) == (chosen[x], chosen[y]))
        }) {
            out.push(chosen);
        }
        let mut i = h;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < n {
                break;
            }
            pick[i] = 0;
        }
    }
}

/// All `r`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// Every PSI instance whose pattern is a connected labeled graph on at
/// most three vertices with one or two edges, blocks of size `n`, and any
/// subset of the host edges between blocks of adjacent pattern vertices.
pub fn all_small_psi(n: usize) -> Vec<PsiInstance> {
    let patterns: Vec<(usize, Vec<(usize, usize)>)> =
        vec![(2, vec![(0, 1)]), (3, vec![(0, 1), (0, 2)]), (3, vec![(0, 1), (1, 2)]), (3, vec![(0, 2), (1, 2)])];
    let mut out = Vec::new();
    for (h, pe) in patterns {
        let blocks: Vec<Vec<usize>> = (0..h).map(|x| (x * n..(x + 1) * n).collect()).collect();
        let candidates: Vec<(usize, usize)> = pe
            .iter()
            .flat_map(|&(x, y)| {
                let (bx, by) = (blocks[x].clone(), blocks[y].clone());
                bx.into_iter().flat_map(move |u| by.clone().into_iter().map(move |v| (u, v)))
            })
            .collect();
        for mask in 0u64..1 << candidates.len() {
            let edges: Vec<(usize, usize)> =
                candidates.iter().enumerate().filter(|(i, _)| (mask >> i) & 1 == 1).map(|(_, &e)| e).collect();
            let pattern = Graph::new(h, pe.clone()).unwrap();
            let host = Graph::new(h * n, edges).unwrap();
            out.push(PsiInstance::new(pattern, host, blocks.clone()).unwrap());
        }
    }
    out
}

/// Minimum `|A ∩ B| / (|A| |B|)` over all separations, by assigning every
/// vertex to `A` only, `B` only or both.
pub fn min_sparsity_ternary(h: &Graph) -> (u64, u64) {
    let n = h.vertex_count();
    let total = 3usize.pow(n as u32);
    let mut best = (u64::MAX, 1u64);
    let mut side = vec![0u8; n];
    for code in 0..total {
        let mut c = code;
        for s in side.iter_mut() {
            *s = (c % 3) as u8;
            c /= 3;
        }
        if h.edges().iter().any(|&(u, v)| side[u] + side[v] == 1) {
            continue;
        }
        let a = side.iter().filter(|&&s| s != 1).count() as u64;
        let b = side.iter().filter(|&&s| s != 0).count() as u64;
        let shared = side.iter().filter(|&&s| s == 2).count() as u64;
        if a == 0 || b == 0 {
            continue;
        }
        // shared / (a b) < best.0 / best.1
        if (shared as u128) * (best.1 as u128) < (best.0 as u128) * (a as u128 * b as u128) || best.0 == u64::MAX {
            best = (shared, a * b);
        }
    }
    best
}

/// Minimum `|∂S| / |S|` over nonempty `S` with `|S| <= n/2`.
pub fn edge_expansion(h: &Graph) -> (u64, u64) {
    let n = h.vertex_count();
    let mut best = (u64::MAX, 1u64);
    for mask in 1u64..1 << n {
        let size = mask.count_ones() as u64;
        if size as usize > n / 2 {
            continue;
        }
        let cut = h.edges().iter().filter(|&&(u, v)| ((mask >> u) & 1) != ((mask >> v) & 1)).count() as u64;
        if best.0 == u64::MAX || (cut as u128) * (best.1 as u128) < (best.0 as u128) * (size as u128) {
            best = (cut, size);
        }
    }
    best
}
