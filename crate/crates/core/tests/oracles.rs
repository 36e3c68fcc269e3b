mod common;

use common::*;
use labelcut::instances::*;
use labelcut::pipeline::sat_to_csp_g;
use labelcut::verify::generators::random_cmc;
use labelcut::{Caps, Graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Minimum number of colors on a cut, by growing sides from vertex
/// `n - 1` instead of 0 and counting colors with a bitmask.
fn min_color_cut(g: &ColoredMultigraph) -> usize {
    let n = g.vertex_count();
    let top = 1u64 << (n - 1);
    let mut best = usize::MAX;
    for low in 0..top {
        let side = low | top;
        if side == (1u64 << n) - 1 {
            continue;
        }
        let mut colors = 0u64;
        for e in g.edges() {
            if ((side >> e.u) & 1) != ((side >> e.v) & 1) {
                colors |= 1 << e.color;
            }
        }
        best = best.min(colors.count_ones() as usize);
    }
    best
}

fn random_six_vertex(rng: &mut ChaCha8Rng) -> ColoredMultigraph {
    loop {
        let edges: Vec<(usize, usize, usize)> = (0..rng.gen_range(10..20))
            .map(|_| {
                let u = rng.gen_range(0..6);
                (u, (u + rng.gen_range(1..6)) % 6, rng.gen_range(1..=4))
            })
            .collect();
        if let Ok(g) = ColoredMultigraph::new(6, 4, 2, edges) {
            return g;
        }
    }
}

#[test]
fn six_vertex_cmc_matches_second_enumerator_and_dual() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let caps = Caps::default();
    let mut answers = [0; 2];
    for _ in 0..30 {
        let g = random_six_vertex(&mut rng);
        let expected = min_color_cut(&g) <= 2;
        let answer = solve_cmc_bruteforce(&g, &caps).unwrap();
        assert_eq!(answer.is_yes(), expected);
        let d = cmc_to_dual(&g);
        assert_eq!(d.select(), 4 - 2);
        assert_eq!(solve_dual_bruteforce(&d, &caps).unwrap().is_yes(), expected);
        answers[usize::from(expected)] += 1;
    }
    assert!(answers[0] > 0 && answers[1] > 0, "{answers:?}");
}

proptest! {
    #[test]
    fn cmc_and_dual_agree(seed in any::<u64>()) {
        let g = random_cmc(7, 5, &mut ChaCha8Rng::seed_from_u64(seed));
        let caps = Caps::default();
        let expected = g.vertex_count() >= 2 && min_color_cut(&g) <= g.budget();
        prop_assert_eq!(solve_cmc_bruteforce(&g, &caps).unwrap().is_yes(), expected);
        let d = cmc_to_dual(&g);
        let dual = solve_dual_bruteforce(&d, &caps).unwrap();
        prop_assert_eq!(dual.is_yes(), expected);
        if let Some(sel) = dual.witness() {
            let edges: Vec<(usize, usize)> = sel.iter().flat_map(|&c| d.graphs()[c - 1].iter().copied()).collect();
            prop_assert!(!connected(d.vertex_count(), &edges));
        }
        prop_assert_eq!(&dual_to_cmc(&d).unwrap(), &g);
    }

    #[test]
    fn connectivity_matches_bfs(n in 1usize..12, raw in proptest::collection::vec((0usize..12, 0usize..12), 0..20)) {
        let edges: Vec<(usize, usize)> = raw.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v).collect();
        prop_assert_eq!(is_connected(n, &edges), connected(n, &edges));
    }
}

/// Recursive backtracking over pattern vertices in order.
fn psi_backtrack(inst: &PsiInstance, chosen: &mut Vec<usize>) -> bool {
    let x = chosen.len();
    if x == inst.pattern().vertex_count() {
        return true;
    }
    for &v in inst.block(x) {
        let fits = inst
            .pattern()
            .edges()
            .iter()
            .filter(|&&(a, b)| a.max(b) == x)
            .all(|&(a, b)| inst.host().has_edge(chosen[a.min(b)], v));
        if fits {
            chosen.push(v);
            if psi_backtrack(inst, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

#[test]
fn path_psi_matches_backtracking() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let pattern = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    let blocks: Vec<Vec<usize>> = (0..3).map(|x| (3 * x..3 * x + 3).collect()).collect();
    let mut yes = 0;
    for _ in 0..100 {
        let mut edges = Vec::new();
        for (x, y) in [(0, 1), (1, 2)] {
            for u in 0..3 {
                for v in 0..3 {
                    if rng.gen_bool(0.2) {
                        edges.push((3 * x + u, 3 * y + v));
                    }
                }
            }
        }
        let inst = PsiInstance::new(pattern.clone(), Graph::new(9, edges).unwrap(), blocks.clone()).unwrap();
        let answer = solve_psi_bruteforce(&inst, &Caps::default()).unwrap();
        let expected = psi_backtrack(&inst, &mut Vec::new());
        assert_eq!(answer.is_yes(), expected);
        if let Some(w) = answer.witness() {
            assert!(psi_witnesses(&inst).contains(w));
        }
        yes += usize::from(expected);
    }
    assert!(yes > 0 && yes < 100);
}

/// DPLL with unit propagation on literal vectors.
fn dpll(clauses: Vec<Vec<i32>>) -> bool {
    if clauses.is_empty() {
        return true;
    }
    if clauses.iter().any(Vec::is_empty) {
        return false;
    }
    let lit = clauses.iter().find(|c| c.len() == 1).map(|c| c[0]).unwrap_or(clauses[0][0]);
    let assign = |l: i32| -> Vec<Vec<i32>> {
        clauses.iter().filter(|c| !c.contains(&l)).map(|c| c.iter().copied().filter(|&x| x != -l).collect()).collect()
    };
    dpll(assign(lit)) || dpll(assign(-lit))
}

#[test]
fn sat_matches_dpll_and_csp() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let caps = Caps::default();
    for _ in 0..200 {
        let m = rng.gen_range(0..25);
        let clauses: Vec<Vec<i32>> = (0..m)
            .map(|_| {
                let mut vars: Vec<i32> = (1..=5).collect();
                let width = rng.gen_range(1..=3);
                for i in 0..width {
                    let j = rng.gen_range(i..5);
                    vars.swap(i, j);
                }
                vars[..width].iter().map(|&v| if rng.gen_bool(0.5) { v } else { -v }).collect()
            })
            .collect();
        let f = CnfFormula::new(5, clauses.clone()).unwrap();
        let expected = dpll(clauses);
        let answer = solve_sat_bruteforce(&f, &caps).unwrap();
        assert_eq!(answer.is_yes(), expected);
        if let Some(a) = answer.witness() {
            assert!(assignment_satisfies(&f, a));
        }
        if m <= 8 {
            assert_eq!(solve_csp_bruteforce(&sat_to_csp_g(&f).csp, &caps).unwrap().is_yes(), expected);
        }
    }
}

#[test]
fn csp_of_small_satisfiable_formula() {
    let f = CnfFormula::new(2, vec![vec![1, -2], vec![2]]).unwrap();
    let inc = sat_to_csp_g(&f);
    let answer = solve_csp_bruteforce(&inc.csp, &Caps::default()).unwrap();
    assert!(answer.is_yes());
    assert_eq!(sat_models(&f), vec![0b11]);
    assert_eq!(inc.assignment(answer.witness().unwrap()), vec![true, true]);
}
