use num_rational::Ratio;

use super::EmbedError;
use crate::dsu::DisjointSet;
use crate::graph::Graph;

/// `α(A, B) = |A ∩ B| / (|A| · |B|)` with `W = V(H)`. `a` and `b` are
/// vertex lists; they must cover `V(H)` and no edge may join `A \ B` to
/// `B \ A`.
pub fn verify_sparsity(h: &Graph, a: &[usize], b: &[usize]) -> Result<Ratio<u64>, EmbedError> {
    let n = h.vertex_count();
    let mut in_a = vec![false; n];
    let mut in_b = vec![false; n];
    for &v in a {
        *in_a.get_mut(v).ok_or(EmbedError::NotASeparation)? = true;
    }
    for &v in b {
        *in_b.get_mut(v).ok_or(EmbedError::NotASeparation)? = true;
    }
    if (0..n).any(|v| !in_a[v] && !in_b[v]) {
        return Err(EmbedError::NotASeparation);
    }
    let only_a = |v: usize| in_a[v] && !in_b[v];
    let only_b = |v: usize| in_b[v] && !in_a[v];
    if h.edges().iter().any(|&(u, v)| (only_a(u) && only_b(v)) || (only_b(u) && only_a(v))) {
        return Err(EmbedError::NotASeparation);
    }
    let size_a = in_a.iter().filter(|&&x| x).count() as u64;
    let size_b = in_b.iter().filter(|&&x| x).count() as u64;
    if size_a == 0 || size_b == 0 {
        return Err(EmbedError::NotASeparation);
    }
    let shared = (0..n).filter(|&v| in_a[v] && in_b[v]).count() as u64;
    Ok(Ratio::new(shared, size_a * size_b))
}

/// Minimum sparsity over all separations with both sides nonempty; 0 for
/// disconnected graphs.
///
/// Enumerates the separator `S = A ∩ B`; the components of `H - S` then go
/// wholly to one side, and for a fixed `S` the sparsity is minimized by the
/// most balanced split of component sizes, found by subset sum.
pub fn min_sparsity_exhaustive(h: &Graph) -> Result<Ratio<u64>, EmbedError> {
    let n = h.vertex_count();
    if n == 0 || n > 24 {
        return Err(EmbedError::TooLarge { what: "sparsity vertices", size: n, cap: 24 });
    }
    if !h.is_connected() && n > 1 {
        return Ok(Ratio::from_integer(0));
    }
    let mut best: Option<Ratio<u64>> = None;
    for mask in 1u32..(1u32 << n) {
        let s = mask.count_ones() as u64;
        let mut dsu = DisjointSet::new(n);
        for &(u, v) in h.edges() {
            if (mask >> u) & 1 == 0 && (mask >> v) & 1 == 0 {
                dsu.union(u, v);
            }
        }
        let mut sizes = vec![0usize; n];
        for v in (0..n).filter(|&v| (mask >> v) & 1 == 0) {
            sizes[dsu.find(v)] += 1;
        }
        let rest = n - s as usize;
        let mut reachable = vec![false; rest + 1];
        reachable[0] = true;
        for &c in sizes.iter().filter(|&&c| c > 0) {
            for x in (c..=rest).rev() {
                reachable[x] |= reachable[x - c];
            }
        }
        let x = (0..=rest)
            .filter(|&x| reachable[x])
            .max_by_key(|&x| (s + x as u64) * (s + (rest - x) as u64))
            .expect("0 is reachable");
        let ratio = Ratio::new(s, (s + x as u64) * (s + (rest - x) as u64));
        if best.is_none_or(|b| ratio < b) {
            best = Some(ratio);
        }
    }
    Ok(best.expect("S = V(H) is a separation"))
}
