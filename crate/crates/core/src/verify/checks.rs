use crate::config::Caps;
use crate::dsu::DisjointSet;
use crate::embedding::Embedder;
use crate::gadgets::{reduce_psi_to_dcmc, write_gadget_map, Reduction};
use crate::graph::Graph;
use crate::instances::format::{write_dcmc, write_psi};
use crate::instances::{
    binomial, cmc_to_dual, dual_to_cmc, solve_cmc_bruteforce, solve_csp_bruteforce, solve_dual_bruteforce,
    solve_psi_bruteforce, solve_sat_bruteforce, ColoredMultigraph, CnfFormula, PsiInstance,
};
use crate::pipeline::{route_csp, sat_to_csp_g, sat_to_dcmc, Report};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityCheck {
    pub cmc_yes: bool,
    pub dual_yes: bool,
    pub witnesses_valid: bool,
    pub round_trip: bool,
}

impl DualityCheck {
    pub fn ok(&self) -> bool {
        self.cmc_yes == self.dual_yes && self.witnesses_valid && self.round_trip
    }
}

/// Solves a CMC instance directly and through its dual and validates both
/// witnesses.
pub fn check_duality(g: &ColoredMultigraph, caps: &Caps) -> Result<DualityCheck, String> {
    let cmc = solve_cmc_bruteforce(g, caps).map_err(|e| e.to_string())?;
    let dual_inst = cmc_to_dual(g);
    let dual = solve_dual_bruteforce(&dual_inst, caps).map_err(|e| e.to_string())?;
    let mut witnesses_valid = true;
    if let Some(w) = cmc.witness() {
        let mut side = vec![false; g.vertex_count()];
        for &v in &w.side {
            side[v] = true;
        }
        let proper = !w.side.is_empty() && w.side.len() < g.vertex_count();
        witnesses_valid &= proper && g.cut_colors(&side).len() <= g.budget();
    }
    if let Some(sel) = dual.witness() {
        let zero_based: Vec<usize> = sel.iter().map(|c| c - 1).collect();
        witnesses_valid &= sel.len() == dual_inst.select() && !dual_inst.union_connected(&zero_based);
    }
    let round_trip = dual_to_cmc(&dual_inst).is_ok_and(|back| &back == g);
    Ok(DualityCheck { cmc_yes: cmc.is_yes(), dual_yes: dual.is_yes(), witnesses_valid, round_trip })
}

/// Outcome of the structural and equivalence checks on one reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetCheck {
    pub psi_yes: bool,
    pub dual_yes: bool,
    /// `|W| = 1 + h (ρ (b+1))^a`, `p = |E(K)|`, `b = 2a` and `ρ` a prime in
    /// the required interval.
    pub size_ok: bool,
    /// Every gadget graph touches every vertex of `W`.
    pub spanning_ok: bool,
    pub same_alpha_pairs: usize,
    /// Unions of two distinct gadgets for one pattern edge are connected.
    pub pairs_connected: bool,
    pub disconnecting_selections: usize,
    /// Every disconnecting `a`-selection decodes to an `H`-subgraph.
    pub decode_ok: bool,
    pub psi_witnesses: usize,
    /// Every `H`-subgraph yields a selection separating its images from `t`.
    pub encode_ok: bool,
}

impl GadgetCheck {
    pub fn equivalent(&self) -> bool {
        self.psi_yes == self.dual_yes
    }

    pub fn claims_ok(&self) -> bool {
        self.spanning_ok && self.pairs_connected && self.decode_ok && self.encode_ok
    }
}

fn is_prime(x: u64) -> bool {
    x >= 2 && (2..).take_while(|d| d * d <= x).all(|d| !x.is_multiple_of(d))
}

fn union_dsu(red: &Reduction, colors: &[usize]) -> DisjointSet {
    let mut dsu = DisjointSet::new(red.dual.vertex_count());
    for &c in colors {
        for &(u, v) in &red.dual.graphs()[c - 1] {
            dsu.union(u, v);
        }
    }
    dsu
}

/// Reduces `inst` and checks sizes, spanning, same-alpha pair connectivity, both decoding
/// directions over all selections and all witnesses, and equivalence.
pub fn check_gadget_instance(inst: &PsiInstance, caps: &Caps) -> Result<(Reduction, GadgetCheck), String> {
    let red = reduce_psi_to_dcmc(inst, caps).map_err(|e| e.to_string())?;
    let (h, n) = (inst.pattern().vertex_count(), inst.block_size());
    let a = inst.pattern().edge_count();
    let p = inst.host().edge_count();
    let (rho, b) = (red.params.rho, red.params.b);
    let m = (1u64..).find(|&m| m.pow(a as u32) >= n as u64).expect("finite root");
    let expected_w = 1 + h as u128 * ((rho as u128) * (b as u128 + 1)).pow(a as u32);
    let size_ok = red.dual.vertex_count() as u128 == expected_w
        && red.dual.graph_count() == p
        && red.dual.select() == a
        && b == 2 * a
        && is_prime(rho)
        && m < rho
        && rho <= 2 * m;

    let total = red.dual.vertex_count();
    let spanning_ok = red.dual.graphs().iter().all(|g| {
        let mut touched = vec![false; total];
        for &(u, v) in g {
            touched[u] = true;
            touched[v] = true;
        }
        touched.into_iter().all(|t| t)
    });

    let mut same_alpha_pairs = 0;
    let mut pairs_connected = true;
    for i in 0..p {
        for j in i + 1..p {
            if red.labels[i].alpha == red.labels[j].alpha {
                same_alpha_pairs += 1;
                pairs_connected &= red.dual.union_connected(&[i, j]);
            }
        }
    }

    let combos = binomial(p, a);
    if combos > caps.dual_combinations {
        return Err(format!("{combos} selections exceed the cap"));
    }
    let mut disconnecting_selections = 0;
    let mut decode_ok = true;
    let mut selection: Vec<usize> = (1..=a).collect();
    if a <= p {
        loop {
            let zero: Vec<usize> = selection.iter().map(|c| c - 1).collect();
            if !red.dual.union_connected(&zero) {
                disconnecting_selections += 1;
                decode_ok &= red.decode_selection(&selection).is_ok_and(|w| inst.is_witness(&w));
            }
            let Some(i) = (0..a).rev().find(|&i| selection[i] < p - a + i + 1) else { break };
            selection[i] += 1;
            for j in i + 1..a {
                selection[j] = selection[j - 1] + 1;
            }
        }
    }

    let assignments = (n as u128).saturating_pow(h as u32);
    if assignments > caps.psi_assignments {
        return Err(format!("{assignments} PSI assignments exceed the cap"));
    }
    let mut psi_witnesses = 0;
    let mut encode_ok = true;
    let mut pos = vec![0usize; h];
    loop {
        let chosen: Vec<usize> = (0..h).map(|x| inst.block(x)[pos[x]]).collect();
        if inst.is_witness(&chosen) {
            psi_witnesses += 1;
            match red.selection_for(&chosen) {
                Ok(sel) => {
                    let mut dsu = union_dsu(&red, &sel);
                    encode_ok &= chosen.iter().all(|&v| !dsu.same(red.image(v), 0));
                }
                Err(_) => encode_ok = false,
            }
        }
        let Some(x) = (0..h).rev().find(|&x| pos[x] + 1 < n) else { break };
        pos[x] += 1;
        for p in pos.iter_mut().skip(x + 1) {
            *p = 0;
        }
    }

    let psi_yes = solve_psi_bruteforce(inst, caps).map_err(|e| e.to_string())?.is_yes();
    let dual_yes = solve_dual_bruteforce(&red.dual, caps).map_err(|e| e.to_string())?.is_yes();
    let check = GadgetCheck {
        psi_yes,
        dual_yes,
        size_ok,
        spanning_ok,
        same_alpha_pairs,
        pairs_connected,
        disconnecting_selections,
        decode_ok,
        psi_witnesses,
        encode_ok,
    };
    Ok((red, check))
}

/// Canonical text of a reduction: the PSI input, the DCMC output and the
/// gadget map.
pub fn gadget_artifact(red: &Reduction) -> String {
    format!("{}{}{}", write_psi(&red.psi), write_dcmc(&red.dual), write_gadget_map(&red.labels))
}

/// Whether routing `f`'s incidence CSP along `branch_sets` in `host`
/// preserves satisfiability, and whether every routed domain stays within
/// `3^depth`.
pub fn check_routing(
    f: &CnfFormula,
    host: &Graph,
    branch_sets: &[Vec<usize>],
    caps: &Caps,
) -> Result<(bool, bool), String> {
    let inc = sat_to_csp_g(f);
    let sat = solve_sat_bruteforce(f, caps).map_err(|e| e.to_string())?.is_yes();
    let ctx = route_csp(&inc.csp, host, branch_sets, caps).map_err(|e| e.to_string())?;
    let routed = solve_csp_bruteforce(&ctx.routed, caps).map_err(|e| e.to_string())?;
    let mut load = vec![0u32; host.vertex_count()];
    for set in branch_sets {
        for &w in set {
            load[w] += 1;
        }
    }
    let depth = load.into_iter().max().unwrap_or(0);
    let bound_ok = ctx.max_domain() as u128 <= 3u128.pow(depth);
    let lifted_ok = routed
        .witness()
        .is_none_or(|sol| f.satisfied_by(&inc.assignment(&ctx.lift(inc.csp.variable_count(), sol))));
    Ok((sat == routed.is_yes() && lifted_ok, bound_ok))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineCheck {
    pub sat: bool,
    /// Decisions of `ψ_G`, `ψ_H`, PSI and DCMC, in order.
    pub stages: [bool; 4],
    /// A DCMC witness decodes to a satisfying assignment.
    pub witness_ok: bool,
    pub domain_bound_ok: bool,
    pub report: Report,
    pub artifact: String,
}

impl PipelineCheck {
    pub fn ok(&self) -> bool {
        self.stages.iter().all(|&s| s == self.sat) && self.witness_ok && self.domain_bound_ok
    }
}

/// Runs the SAT → DCMC chain on `f` and decides every stage by brute force.
pub fn check_pipeline_formula(
    f: &CnfFormula,
    embedder: &mut Embedder,
    seed: u64,
    caps: &Caps,
) -> Result<PipelineCheck, String> {
    let run = sat_to_dcmc(f, embedder, seed, caps).map_err(|e| e.to_string())?;
    let err = |e: crate::instances::OracleError| e.to_string();
    let sat = solve_sat_bruteforce(f, caps).map_err(err)?.is_yes();
    let csp_g = solve_csp_bruteforce(&run.incidence.csp, caps).map_err(err)?.is_yes();
    let csp_h = solve_csp_bruteforce(&run.routed.routed, caps).map_err(err)?.is_yes();
    let psi = solve_psi_bruteforce(&run.conversion.psi, caps).map_err(err)?.is_yes();
    let dual = run.decide(caps).map_err(err)?;
    let witness_ok = match dual.witness() {
        Some(sel) => run.assignment(sel).is_ok_and(|a| f.satisfied_by(&a)),
        None => true,
    };
    let depth = run.embedding.depth() as u32;
    let domain_bound_ok = run.routed.max_domain() as u128 <= 3u128.saturating_pow(depth);
    let report = run.report();
    let artifact = format!("{report}{}", write_dcmc(&run.reduction.dual));
    Ok(PipelineCheck { sat, stages: [csp_g, csp_h, psi, dual.is_yes()], witness_ok, domain_bound_ok, report, artifact })
}
