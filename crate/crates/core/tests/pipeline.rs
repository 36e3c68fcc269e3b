mod common;

use common::*;
use labelcut::instances::{solve_csp_bruteforce, solve_psi_bruteforce, BinaryCsp, CnfFormula};
use labelcut::pipeline::*;
use labelcut::verify::generators::{all_clauses, random_cnf, random_self_embedding};
use labelcut::{Caps, RunConfig};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pairs(csp: &BinaryCsp, a: usize, b: usize) -> Vec<(String, String)> {
    let r = csp.relation(a, b).unwrap();
    let mut out: Vec<(String, String)> =
        r.pairs().map(|(i, j)| (csp.domain(a)[i].clone(), csp.domain(b)[j].clone())).collect();
    out.sort();
    out
}

fn owned(list: &[(&str, &str)]) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = list.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    out.sort();
    out
}

#[test]
fn two_literal_clause_relations() {
    let f = CnfFormula::new(2, vec![vec![1, -2]]).unwrap();
    let inc = sat_to_csp_g(&f);
    let z = inc.clause_vertex(0);
    assert_eq!(pairs(&inc.csp, 0, z), owned(&[("T", "2"), ("F", "2"), ("T", "1")]));
    assert_eq!(pairs(&inc.csp, 1, z), owned(&[("T", "1"), ("F", "1"), ("F", "2")]));
}

/// Backtracking CSP solver over variables in index order.
fn csp_backtrack(csp: &BinaryCsp, vals: &mut Vec<usize>) -> bool {
    let v = vals.len();
    if v == csp.variable_count() {
        return true;
    }
    for i in 0..csp.domain(v).len() {
        if (0..v).all(|u| csp.allows(u, vals[u], v, i)) {
            vals.push(i);
            if csp_backtrack(csp, vals) {
                return true;
            }
            vals.pop();
        }
    }
    false
}

#[test]
fn incidence_csp_matches_sat_exhaustively() {
    // every formula with N <= 4 variables and M <= 4 clauses (multisets)
    let mut checked = 0usize;
    for n in 1..=4 {
        let clauses = all_clauses(n);
        let c = clauses.len();
        let mut idx: Vec<usize> = Vec::new();
        loop {
            if !idx.is_empty() {
                let f = CnfFormula::new(n, idx.iter().map(|&i| clauses[i].clone()).collect()).unwrap();
                let inc = sat_to_csp_g(&f);
                assert_eq!(csp_backtrack(&inc.csp, &mut Vec::new()), !sat_models(&f).is_empty(), "{f:?}");
                checked += 1;
            }
            // next non-decreasing sequence of length <= 4
            if idx.len() < 4 {
                idx.push(*idx.last().unwrap_or(&0));
                continue;
            }
            while let Some(last) = idx.pop() {
                if last + 1 < c {
                    idx.push(last + 1);
                    break;
                }
            }
            if idx.is_empty() {
                break;
            }
        }
    }
    let multisets = |c: usize| (1..=4).map(|m| (0..m).fold(1, |acc, i| acc * (c + i) / (i + 1))).sum::<usize>();
    assert_eq!(checked, [2, 8, 26, 64].iter().map(|&c| multisets(c)).sum::<usize>());
}

#[test]
fn identity_routing_is_a_renaming() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let f = random_cnf(8, &mut rng);
        let inc = sat_to_csp_g(&f);
        let sets: Vec<Vec<usize>> = (0..inc.graph.vertex_count()).map(|v| vec![v]).collect();
        let ctx = route_csp(&inc.csp, &inc.graph, &sets, &Caps::default()).unwrap();
        for v in 0..inc.csp.variable_count() {
            assert_eq!(ctx.routed.domain(v).len(), inc.csp.domain(v).len());
        }
        assert_eq!(ctx.routed.constraints().len(), inc.csp.constraints().len());
        for (&(a, b), r) in inc.csp.constraints() {
            assert_eq!(ctx.routed.relation(a, b).unwrap().len(), r.len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn routing_preserves_satisfiability(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_cnf(8, &mut rng);
        let inc = sat_to_csp_g(&f);
        let sets = random_self_embedding(&inc.graph, 2, &mut rng);
        let ctx = route_csp(&inc.csp, &inc.graph, &sets, &Caps::default()).unwrap();
        let sat = !sat_models(&f).is_empty();
        let mut vals = Vec::new();
        let routed = csp_backtrack(&ctx.routed, &mut vals);
        prop_assert_eq!(routed, sat);
        if routed {
            let lifted = ctx.lift(inc.csp.variable_count(), &vals);
            prop_assert!(assignment_satisfies(&f, &inc.assignment(&lifted)));
        }
        let depth = (0..inc.graph.vertex_count()).map(|w| sets.iter().filter(|s| s.contains(&w)).count()).max().unwrap();
        prop_assert!(ctx.max_domain() as u64 <= 3u64.pow(depth as u32));

        let conv = csp_to_psi(&ctx.routed, &inc.graph);
        let caps = Caps { psi_assignments: 50_000_000, ..Caps::default() };
        if let Ok(answer) = solve_psi_bruteforce(&conv.psi, &caps) {
            prop_assert_eq!(answer.is_yes(), routed);
            if let Some(w) = answer.witness() {
                prop_assert!(ctx.routed.is_satisfied(&conv.valuation(w)));
            }
        }
    }
}

#[test]
fn end_to_end_examples() {
    let caps = Caps::default();
    let mut embedder = labelcut::embedding::Embedder::new(RunConfig::default());
    for (clauses, vars, expected) in [(vec![vec![1], vec![-1]], 1, false), (vec![vec![1, 2]], 2, true)] {
        let f = CnfFormula::new(vars, clauses).unwrap();
        let run = sat_to_dcmc(&f, &mut embedder, 0, &caps).unwrap();
        assert_eq!(run.decide(&caps).unwrap().is_yes(), expected);
        let report = run.report();
        let psi = &run.conversion.psi;
        assert_eq!(report.get("a"), Some(psi.pattern().edge_count().to_string().as_str()));
        assert_eq!(report.get("p"), Some(psi.host().edge_count().to_string().as_str()));
        assert_eq!(run.reduction.dual.select(), psi.pattern().edge_count());
        assert_eq!(run.reduction.dual.graph_count(), psi.host().edge_count());
        assert_eq!(
            solve_csp_bruteforce(&run.routed.routed, &caps).unwrap().is_yes(),
            expected
        );
    }
}
