mod common;

use common::*;
use labelcut::embedding::*;
use labelcut::verify::generators::random_max_degree3;
use labelcut::{Graph, RunConfig};
use num_rational::Ratio;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn config() -> RunConfig {
    RunConfig::default()
}

#[test]
fn small_expanders() {
    let cfg = config();
    let build = |l| build_expander(l, cfg.delta_target, cfg.expander_seed, cfg.expander_retries, 16).unwrap();
    let one = build(1);
    assert_eq!((one.graph.vertex_count(), one.method), (1, CertificateMethod::Vacuous));
    let two = build(2);
    assert_eq!(two.graph.edges(), &[(0, 1)]);
    assert_eq!(edge_expansion(&two.graph), (1, 1));
    let four = build(4);
    let (cut, size) = edge_expansion(&four.graph);
    assert!(Ratio::new(cut, size) >= Ratio::new(1, 2));
    assert_eq!(four.exact, Some(Ratio::new(cut, size)));
    let (cut, size) = edge_expansion(&Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap());
    assert_eq!(Ratio::new(cut, size), Ratio::from_integer(1));
}

#[test]
fn single_edge_flow_by_enumeration() {
    let h = Graph::new(2, [(0, 1)]).unwrap();
    let flow = min_congestion_flow(&h).unwrap();
    // the only path system: uu on u, vv on v, uv and vu on both
    let paths: [&[usize]; 4] = [&[0], &[1], &[0, 1], &[1, 0]];
    let load = (0..2).map(|w| paths.iter().filter(|p| p.contains(&w)).count()).max().unwrap();
    assert_eq!(load, 3);
    assert!((flow.lp_optimum - 3.0).abs() < 1e-9);
    assert!((flow.congestion() - 3.0).abs() < 1e-9);
}

#[test]
fn expander_flows_within_calibrated_bound() {
    let mut embedder = Embedder::new(config());
    for l in [4usize, 8, 16] {
        let routing = embedder.routing(l).unwrap();
        let mut load = vec![0.0; l];
        for u in 0..l {
            for v in 0..l {
                let total: f64 = routing.flow.paths[u][v].iter().map(|p| p.weight).sum();
                assert!((total - 1.0).abs() < 1e-6);
                for p in &routing.flow.paths[u][v] {
                    for &w in &p.vertices {
                        load[w] += p.weight;
                    }
                }
            }
        }
        let congestion = load.iter().cloned().fold(0.0, f64::max);
        assert!(congestion <= config().c_hat * l as f64 * (l as f64).ln(), "l={l}: {congestion}");
    }
}

#[test]
fn triangle_with_k8_is_its_own_host() {
    let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    let e = Embedder::new(config()).embed(&g, 8, 0).unwrap();
    assert_eq!(e.kind, EmbeddingKind::Trivial);
    assert_eq!(e.host, g);
    assert_eq!(e.depth(), 1);
}

/// Contracts each class of `origin` and compares with `g`.
fn contracts_to(g: &Graph, w: &WorkingGraph) -> bool {
    let classes: Vec<Vec<usize>> =
        (0..g.vertex_count()).map(|v| (0..w.origin.len()).filter(|&x| w.origin[x] == v).collect()).collect();
    let classes_ok = classes.iter().enumerate().all(|(v, c)| {
        if w.isolated.contains(&v) {
            c.is_empty()
        } else {
            induces_connected(&w.graph, c)
        }
    });
    let mut contracted: Vec<(usize, usize)> = w
        .graph
        .edges()
        .iter()
        .map(|&(x, y)| (w.origin[x].min(w.origin[y]), w.origin[x].max(w.origin[y])))
        .filter(|(u, v)| u != v)
        .collect();
    contracted.sort_unstable();
    contracted.dedup();
    classes_ok && contracted == g.edges()
}

#[test]
fn degree_five_vertex_is_a_minor() {
    let g = Graph::new(7, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2)]).unwrap();
    let w = reduce_degrees(&g);
    assert!(w.graph.max_degree() <= 3);
    assert_eq!(w.isolated, vec![6]);
    assert!(contracts_to(&g, &w));
    assert!(is_minor_model(&g, &w));
}

fn valid(g: &Graph, e: &Embedding) -> bool {
    e.branch_sets.len() == g.vertex_count()
        && e.branch_sets.iter().all(|s| induces_connected(&e.host, s))
        && g.edges().iter().all(|&(u, v)| touches(&e.host, &e.branch_sets[u], &e.branch_sets[v]))
}

#[test]
fn cubic_graphs_embed_with_probability_half() {
    let mut embedder = Embedder::new(config());
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let mut success = 0;
    for seed in 0..100 {
        let g = random_max_degree3(200, &mut rng);
        let k = ((g.vertex_count() + g.edge_count()) as f64).sqrt().ceil() as usize;
        if let Ok(e) = embedder.embed(&g, k, seed) {
            success += 1;
            assert!(valid(&g, &e));
            let l = e.host.vertex_count();
            let n = e.zeta.len() + e.isolated_hosts.len();
            let audit = audit_congestion(&e);
            assert!(audit.type0.iter().all(|&c| c <= 1 + n.div_ceil(l)));
        }
    }
    assert!(success >= 50, "{success}");
}

#[test]
fn sparsity_examples() {
    let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(verify_sparsity(&path, &[0, 1, 2], &[0, 1, 2]).unwrap(), Ratio::new(1, 3));
    let edge = Graph::new(2, [(0, 1)]).unwrap();
    assert!(verify_sparsity(&edge, &[0], &[1]).is_err());
    let cfg = config();
    let eight = build_expander(8, cfg.delta_target, cfg.expander_seed, cfg.expander_retries, 16).unwrap();
    let (cut, size) = edge_expansion(&eight.graph);
    let (num, den) = min_sparsity_ternary(&eight.graph);
    assert!(Ratio::new(num, den) >= Ratio::new(cut, (3 * size + cut) * 8));
    assert_eq!(min_sparsity_exhaustive(&eight.graph).unwrap(), Ratio::new(num, den));
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, proptest::collection::vec((0usize..64, 0usize..64), 0..24)).prop_map(|(n, raw)| {
        let edges: Vec<(usize, usize)> = raw.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v).collect();
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        edges.dedup();
        Graph::new(n, edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sparsity_matches_ternary(g in arb_graph(8)) {
        let (num, den) = min_sparsity_ternary(&g);
        let got = min_sparsity_exhaustive(&g).unwrap();
        prop_assert_eq!(got, if num == 0 { Ratio::from_integer(0) } else { Ratio::new(num, den) });
    }

    #[test]
    fn degree_reduction_contracts_back(g in arb_graph(12)) {
        let w = reduce_degrees(&g);
        prop_assert!(w.graph.max_degree() <= 3);
        prop_assert!(contracts_to(&g, &w));
    }

    #[test]
    fn embeddings_are_valid(g in arb_graph(40), k in 2usize..30, seed in any::<u64>()) {
        let mut embedder = Embedder::new(config());
        match embedder.embed(&g, k, seed) {
            Ok(e) => {
                prop_assert!(valid(&g, &e));
                prop_assert!(e.host.vertex_count() <= k.max(1));
            }
            Err(err) => prop_assert!(matches!(err, EmbedError::Fail(_))),
        }
    }

    #[test]
    fn embedding_is_deterministic(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let total = rng.gen_range(50..200);
        let g = random_max_degree3(total, &mut rng);
        let k = ((g.vertex_count() + g.edge_count()) as f64).sqrt().ceil() as usize;
        let a = Embedder::new(config()).embed(&g, k, seed).map(|e| e.branch_sets);
        let b = Embedder::new(config()).embed(&g, k, seed).map(|e| e.branch_sets);
        prop_assert_eq!(a, b);
    }
}
