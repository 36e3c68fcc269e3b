use nalgebra::DMatrix;
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::EmbedError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateMethod {
    /// No nonempty set of size at most `l/2` exists (`l = 1`).
    Vacuous,
    /// Minimum over all sets `S` with `|S| <= l/2` of `|∂S| / |S|`.
    Exhaustive,
    /// `λ₂(L) / 2` from the Laplacian spectrum, a lower bound on the edge
    /// expansion because `|∂S| >= λ₂ |S| |V \ S| / l`.
    Spectral,
}

#[derive(Debug, Clone)]
pub struct ExpanderCertificate {
    pub graph: Graph,
    pub delta_hat: f64,
    /// The exact expansion when certified exhaustively.
    pub exact: Option<Ratio<u64>>,
    pub method: CertificateMethod,
}

/// Exact edge expansion `min |∂S| / |S|` over nonempty `S`, `|S| <= l/2`.
/// Returns `None` when no such `S` exists.
pub fn exhaustive_expansion(h: &Graph) -> Option<Ratio<u64>> {
    let l = h.vertex_count();
    assert!(l < 32, "exhaustive expansion limited to small graphs");
    let mut best: Option<Ratio<u64>> = None;
    for mask in 1u32..(1u32 << l) {
        let size = mask.count_ones() as usize;
        if 2 * size > l {
            continue;
        }
        let cut = h
            .edges()
            .iter()
            .filter(|&&(u, v)| ((mask >> u) & 1) != ((mask >> v) & 1))
            .count();
        let ratio = Ratio::new(cut as u64, size as u64);
        if best.is_none_or(|b| ratio < b) {
            best = Some(ratio);
        }
    }
    best
}

/// Second smallest Laplacian eigenvalue.
pub fn algebraic_connectivity(h: &Graph) -> f64 {
    let l = h.vertex_count();
    if l < 2 {
        return 0.0;
    }
    let mut lap = DMatrix::<f64>::zeros(l, l);
    for &(u, v) in h.edges() {
        lap[(u, u)] += 1.0;
        lap[(v, v)] += 1.0;
        lap[(u, v)] -= 1.0;
        lap[(v, u)] -= 1.0;
    }
    let mut eig: Vec<f64> = lap.symmetric_eigen().eigenvalues.iter().copied().collect();
    eig.sort_by(f64::total_cmp);
    eig[1]
}

/// Certifies `h` with the exhaustive check when `l <= exhaustive_cap` and
/// the spectral bound otherwise.
pub fn certify(h: Graph, exhaustive_cap: usize) -> ExpanderCertificate {
    let l = h.vertex_count();
    if l < 2 {
        return ExpanderCertificate { graph: h, delta_hat: f64::INFINITY, exact: None, method: CertificateMethod::Vacuous };
    }
    if l <= exhaustive_cap.min(31) {
        let exact = exhaustive_expansion(&h).expect("l >= 2 has a singleton set");
        let delta_hat = *exact.numer() as f64 / *exact.denom() as f64;
        return ExpanderCertificate { graph: h, delta_hat, exact: Some(exact), method: CertificateMethod::Exhaustive };
    }
    let delta_hat = algebraic_connectivity(&h) / 2.0;
    ExpanderCertificate { graph: h, delta_hat, exact: None, method: CertificateMethod::Spectral }
}

/// Configuration-model sample with degree 3 everywhere except one vertex of
/// degree 2 when `l` is odd. `None` if the pairing has a loop or a repeated
/// edge.
fn sample_cubic(l: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut stubs: Vec<usize> = (0..l).flat_map(|v| std::iter::repeat_n(v, 3)).collect();
    if l % 2 == 1 {
        stubs.pop();
    }
    stubs.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = stubs.chunks(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
    if edges.iter().any(|&(u, v)| u == v) {
        return None;
    }
    edges.sort_unstable();
    if edges.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(Graph::new(l, edges).expect("valid pairing"))
}

/// Cycle `0..l` plus chords `i -- i + l/2` for `i < l/2`. Needs `l >= 5`.
pub fn cycle_with_chords(l: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..l).map(|i| (i, (i + 1) % l)).collect();
    let half = l / 2;
    edges.extend((0..half).map(|i| (i, i + half)));
    Graph::new(l, edges).expect("valid cycle")
}

/// Builds a simple connected graph on `l` vertices with maximum degree 3
/// whose certified expansion reaches `target`.
///
/// `l <= 4` yields the complete graph. Larger sizes sample a random cubic
/// graph from `seed`, resampling until it is simple, connected and certified,
/// and fall back to [`cycle_with_chords`] after `retries` certified attempts
/// fail.
pub fn build_expander(
    l: usize,
    target: f64,
    seed: u64,
    retries: u32,
    exhaustive_cap: usize,
) -> Result<ExpanderCertificate, EmbedError> {
    if l == 0 {
        return Err(EmbedError::EmptyHost);
    }
    if l <= 4 {
        let edges = (0..l).flat_map(|u| (u + 1..l).map(move |v| (u, v)));
        return Ok(certify(Graph::new(l, edges).expect("complete graph"), exhaustive_cap));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (l as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    for _ in 0..retries {
        let graph = loop {
            if let Some(g) = sample_cubic(l, &mut rng) {
                if g.is_connected() {
                    break g;
                }
            }
        };
        let cert = certify(graph, exhaustive_cap);
        if cert.delta_hat >= target {
            return Ok(cert);
        }
    }
    let cert = certify(cycle_with_chords(l), exhaustive_cap);
    if cert.delta_hat >= target {
        Ok(cert)
    } else {
        Err(EmbedError::ExpansionTargetUnmet { l, target })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sizes() {
        let one = build_expander(1, 0.1, 0, 4, 16).unwrap();
        assert_eq!(one.method, CertificateMethod::Vacuous);
        let two = build_expander(2, 0.1, 0, 4, 16).unwrap();
        assert_eq!(two.graph.edges(), &[(0, 1)]);
        assert_eq!(two.exact, Some(Ratio::from_integer(1)));
    }

    #[test]
    fn cycle_expansion() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(exhaustive_expansion(&c4), Some(Ratio::from_integer(1)));
    }

    #[test]
    fn degree_and_connectivity() {
        for l in 2..=20 {
            let cert = build_expander(l, 0.1, 7, 64, 16).unwrap();
            assert!(cert.graph.max_degree() <= 3, "l = {l}");
            assert!(cert.graph.is_connected(), "l = {l}");
            assert!(cert.delta_hat >= 0.1, "l = {l}");
        }
    }

    #[test]
    fn chords_have_degree_three() {
        for l in 5..12 {
            let g = cycle_with_chords(l);
            assert!(g.max_degree() <= 3 && g.is_connected(), "l = {l}");
        }
    }

    #[test]
    fn spectral_bound_is_below_exact() {
        for l in 5..=12 {
            let cert = build_expander(l, 0.1, 3, 64, 16).unwrap();
            let lambda = algebraic_connectivity(&cert.graph);
            assert!(lambda / 2.0 <= cert.delta_hat + 1e-9);
        }
    }
}
