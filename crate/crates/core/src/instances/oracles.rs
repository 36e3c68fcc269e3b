//! Exhaustive decision procedures used as ground truth.
//!
//! All oracles are pure and deterministic: when several witnesses exist the
//! first one in the documented enumeration order is returned.

use super::{Answer, BinaryCsp, CnfFormula, ColoredMultigraph, DualCmcInstance, OracleError, PsiInstance};
use crate::config::Caps;

/// A cut side `S` (the side containing vertex 0, ascending) and the colors
/// crossing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    pub side: Vec<usize>,
    pub colors: Vec<usize>,
}

/// `C(n, r)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

fn checked_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

/// Minimizes `|c(∂(S))|` over all proper nonempty `S` by enumerating the
/// `2^(n-1) - 1` sides that contain vertex 0. Answers yes with a minimizing
/// side when the minimum is at most `k`; ties go to the smallest bitmask.
pub fn solve_cmc_bruteforce(g: &ColoredMultigraph, caps: &Caps) -> Result<Answer<CutWitness>, OracleError> {
    let n = g.vertex_count();
    // the subset enumeration packs sides into a u64
    let cap = caps.cmc_vertices.min(63);
    if n > cap {
        return Err(OracleError::CapExceeded { what: "cmc vertices", size: n as u128, cap: cap as u128 });
    }
    if n < 2 {
        return Ok(Answer::No);
    }
    let edges: Vec<(u64, u64, usize)> = g
        .edges()
        .iter()
        .map(|e| (1u64 << e.u, 1u64 << e.v, e.color - 1))
        .collect();
    let mut stamp = vec![u64::MAX; g.colors()];
    let mut best: Option<(usize, u64)> = None;
    let full: u64 = (1u64 << (n - 1)) - 1;
    for rest in 0..full {
        let side = (rest << 1) | 1;
        let mut count = 0;
        for &(bu, bv, c) in &edges {
            if ((side & bu) == 0) != ((side & bv) == 0) && stamp[c] != rest {
                stamp[c] = rest;
                count += 1;
            }
        }
        if best.is_none_or(|(b, _)| count < b) {
            best = Some((count, side));
            if count == 0 {
                break;
            }
        }
    }
    let (min, side) = best.expect("n >= 2 gives at least one proper side");
    if min > g.budget() {
        return Ok(Answer::No);
    }
    let flags: Vec<bool> = (0..n).map(|v| side >> v & 1 == 1).collect();
    Ok(Answer::Yes(CutWitness {
        side: (0..n).filter(|&v| flags[v]).collect(),
        colors: g.cut_colors(&flags),
    }))
}

/// Enumerates the `a`-subsets of graphs in lexicographic order and answers
/// yes with the first whose union leaves `W` disconnected. The witness lists
/// 1-based color indices. `a > p` is a no-instance.
pub fn solve_dual_bruteforce(d: &DualCmcInstance, caps: &Caps) -> Result<Answer<Vec<usize>>, OracleError> {
    let p = d.graph_count();
    let a = d.select();
    let count = binomial(p, a);
    if count > caps.dual_combinations {
        return Err(OracleError::CapExceeded { what: "dual combinations", size: count, cap: caps.dual_combinations });
    }
    if a > p {
        return Ok(Answer::No);
    }
    let mut combo: Vec<usize> = (0..a).collect();
    loop {
        if !d.union_connected(&combo) {
            return Ok(Answer::Yes(combo.iter().map(|i| i + 1).collect()));
        }
        // advance to the next combination
        let mut i = a;
        loop {
            if i == 0 {
                return Ok(Answer::No);
            }
            i -= 1;
            if combo[i] < p - a + i {
                break;
            }
        }
        combo[i] += 1;
        for j in i + 1..a {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// Tries every one-vertex-per-block selection in lexicographic order of
/// block positions.
pub fn solve_psi_bruteforce(inst: &PsiInstance, caps: &Caps) -> Result<Answer<Vec<usize>>, OracleError> {
    let h = inst.pattern().vertex_count();
    let n = inst.block_size();
    let size = checked_pow(n, h);
    if size > caps.psi_assignments {
        return Err(OracleError::CapExceeded { what: "psi assignments", size, cap: caps.psi_assignments });
    }
    let mut idx = vec![0usize; h];
    loop {
        let selection: Vec<usize> = (0..h).map(|x| inst.block(x)[idx[x]]).collect();
        if inst.is_witness(&selection) {
            return Ok(Answer::Yes(selection));
        }
        let mut x = h;
        loop {
            if x == 0 {
                return Ok(Answer::No);
            }
            x -= 1;
            idx[x] += 1;
            if idx[x] < n {
                break;
            }
            idx[x] = 0;
        }
    }
}

/// Exhaustive search over valuations in lexicographic order, checking each
/// constraint as soon as both of its variables are assigned.
pub fn solve_csp_bruteforce(csp: &BinaryCsp, caps: &Caps) -> Result<Answer<Vec<usize>>, OracleError> {
    let size = csp
        .domains()
        .iter()
        .fold(1u128, |acc, d| acc.saturating_mul(d.len() as u128));
    if size > caps.csp_product {
        return Err(OracleError::CapExceeded { what: "csp product", size, cap: caps.csp_product });
    }
    let n = csp.variable_count();
    if n == 0 {
        return Ok(Answer::Yes(Vec::new()));
    }
    if size == 0 {
        return Ok(Answer::No);
    }
    // earlier[v]: constrained variables with a smaller index
    let mut earlier: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in csp.constraints().keys() {
        earlier[b].push(a);
    }
    let mut val = vec![0usize; n];
    let mut var = 0usize;
    loop {
        let ok = val[var] < csp.domain(var).len()
            && earlier[var].iter().all(|&u| csp.allows(u, val[u], var, val[var]));
        if ok {
            if var + 1 == n {
                return Ok(Answer::Yes(val));
            }
            var += 1;
            val[var] = 0;
            continue;
        }
        // backtrack
        loop {
            if val[var] + 1 < csp.domain(var).len() {
                val[var] += 1;
                break;
            }
            if var == 0 {
                return Ok(Answer::No);
            }
            var -= 1;
        }
    }
}

/// Tries all `2^N` assignments; bit `i` of the counter is variable `i + 1`
/// (set = true).
pub fn solve_sat_bruteforce(f: &CnfFormula, caps: &Caps) -> Result<Answer<Vec<bool>>, OracleError> {
    let n = f.variables();
    if n > caps.sat_variables {
        return Err(OracleError::CapExceeded { what: "sat variables", size: n as u128, cap: caps.sat_variables as u128 });
    }
    for bits in 0u64..(1u64 << n) {
        let assignment: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
        if f.satisfied_by(&assignment) {
            return Ok(Answer::Yes(assignment));
        }
    }
    Ok(Answer::No)
}
