mod common;

use common::*;
use labelcut::gadgets::*;
use labelcut::instances::{solve_dual_bruteforce, solve_psi_bruteforce, PsiInstance};
use labelcut::{Caps, Graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Least prime in `(m, 2m]` with `m = ceil(n^(1/a))`, by trial division.
fn scan_prime(n: u64, a: u32) -> u64 {
    let m = int_root_ceil(n, a);
    (m + 1..=2 * m).find(|&x| is_prime(x)).unwrap()
}

#[test]
fn prime_choice_matches_scan() {
    assert_eq!(scan_prime(2, 1), 3);
    assert_eq!(scan_prime(16, 2), 5);
    for n in 1..200usize {
        for a in 1..4usize {
            let rho = choose_prime(n, a).unwrap();
            assert_eq!(rho, scan_prime(n as u64, a as u32), "n={n} a={a}");
            assert!((rho - 1).pow(a as u32) >= n as u64);
        }
    }
}

fn single_edge(n: usize, host: &[(usize, usize)]) -> PsiInstance {
    let blocks = vec![(0..n).collect(), (n..2 * n).collect()];
    PsiInstance::new(Graph::new(2, [(0, 1)]).unwrap(), Graph::new(2 * n, host.to_vec()).unwrap(), blocks).unwrap()
}

#[test]
fn gadget_edge_counts() {
    let red = reduce_psi_to_dcmc(&single_edge(2, &[(0, 2)]), &Caps::default()).unwrap();
    let (params, layout) = (&red.params, &red.layout);
    assert_eq!((params.rho, params.b, params.a), (3, 2, 1));
    // one selection edge plus t to the other |Ŵ_x| + |Ŵ_y| - 2 points,
    // where Ŵ_z holds the rho^a points with every β-component 0
    let hat = (params.rho as usize).pow(params.a as u32);
    assert_eq!(layout.hat_points(0).len(), hat);
    let a_edges = build_a_edges(0, 0, 2, params, layout);
    assert_eq!(a_edges.len(), 1 + (hat + hat - 2));
    assert_eq!(a_edges.len(), 5);
    assert!(a_edges.iter().all(|&(u, v)| u != 0 || v != layout.hat(0, &params.f_maps[0])));
    // a = 1: one t-edge plus rho stars with b leaves each, per block
    let pad = build_padding(0, 0, 2, 0, params, layout);
    assert_eq!(pad.len(), 1 + params.rho as usize * params.b);
    assert_eq!(pad.len(), 7);
}

fn random_disconnected(rng: &mut ChaCha8Rng) -> PsiInstance {
    let n = rng.gen_range(1..=2);
    let h = rng.gen_range(2..=3);
    let pattern_edges: Vec<(usize, usize)> = if h == 3 && rng.gen_bool(0.5) { vec![(0, 1)] } else { vec![] };
    let blocks: Vec<Vec<usize>> = (0..h).map(|x| (x * n..(x + 1) * n).collect()).collect();
    let mut host = Vec::new();
    for &(x, y) in &pattern_edges {
        for u in 0..n {
            for v in 0..n {
                if rng.gen_bool(0.6) {
                    host.push((x * n + u, y * n + v));
                }
            }
        }
    }
    PsiInstance::new(Graph::new(h, pattern_edges).unwrap(), Graph::new(h * n, host).unwrap(), blocks).unwrap()
}

#[test]
fn connectivized_instances_keep_their_answer() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let caps = Caps::default();
    for _ in 0..10 {
        let inst = random_disconnected(&mut rng);
        assert!(reduce_psi_to_dcmc(&inst, &caps).is_err());
        let conn = connectivize_pattern(&inst);
        assert!(conn.added && conn.psi.pattern().is_connected());
        let before = solve_psi_bruteforce(&inst, &caps).unwrap().is_yes();
        assert_eq!(!psi_witnesses(&conn.psi).is_empty(), before);
        let red = reduce_psi_to_dcmc(&conn.psi, &caps).unwrap();
        assert_eq!(solve_dual_bruteforce(&red.dual, &caps).unwrap().is_yes(), before);
    }
}

fn arb_instance() -> impl Strategy<Value = PsiInstance> {
    let patterns = vec![vec![(0usize, 1usize)], vec![(0, 1), (1, 2)], vec![(0, 1), (0, 2), (1, 2)]];
    (prop::sample::select(patterns), 1usize..=3, any::<u64>()).prop_map(|(pe, n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = if pe.len() == 1 { 2 } else { 3 };
        let blocks: Vec<Vec<usize>> = (0..h).map(|x| (x * n..(x + 1) * n).collect()).collect();
        let mut host = Vec::new();
        for &(x, y) in &pe {
            for u in 0..n {
                for v in 0..n {
                    if rng.gen_bool(0.5) {
                        host.push((x * n + u, y * n + v));
                    }
                }
            }
        }
        PsiInstance::new(Graph::new(h, pe).unwrap(), Graph::new(h * n, host).unwrap(), blocks).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduction_preserves_answers_and_spans(inst in arb_instance()) {
        let caps = Caps::default();
        let red = reduce_psi_to_dcmc(&inst, &caps).unwrap();
        let (h, n, a) = (inst.pattern().vertex_count() as u64, inst.block_size() as u64, inst.pattern().edge_count() as u32);
        let rho = scan_prime(n, a);
        prop_assert_eq!(red.params.rho, rho);
        prop_assert_eq!(red.dual.vertex_count() as u64, 1 + h * (rho * (2 * a as u64 + 1)).pow(a));
        let total = red.dual.vertex_count();
        for g in red.dual.graphs() {
            let mut seen = vec![false; total];
            for &(u, v) in g {
                seen[u] = true;
                seen[v] = true;
            }
            prop_assert!(seen.iter().all(|&s| s));
        }
        let expected = !psi_witnesses(&inst).is_empty();
        let dual = solve_dual_bruteforce(&red.dual, &caps).unwrap();
        prop_assert_eq!(dual.is_yes(), expected);
        if let Some(sel) = dual.witness() {
            let w = red.decode_selection(sel).unwrap();
            prop_assert!(inst.is_witness(&w));
        }
    }
}
