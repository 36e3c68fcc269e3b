use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::generators::{
    all_psi_hosts, all_small_cnfs, connected_patterns, random_cmc, random_cnf, random_max_degree3,
    random_self_embedding,
};
use super::{check_duality, check_gadget_instance, check_pipeline_formula, check_routing, SuiteReport};
use crate::config::{Caps, RunConfig};
use crate::embedding::{
    audit_congestion, build_expander, calibrate_flow, claim_p, depth_bound, fitted_constant, is_minor_model,
    min_sparsity_exhaustive, path_hit_bound, reduce_degrees, sample_path_family, EmbedError, Embedder, Embedding,
    EmbeddingKind, CALIBRATION_SIZES,
};
use crate::gadgets::connectivize_pattern;
use crate::graph::Graph;
use crate::instances::{solve_psi_bruteforce, PsiInstance};
use crate::pipeline::{csp_to_psi, route_csp, sat_to_csp_g};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Duality,
    Gadgets,
    Embedding,
    Pipeline,
    All,
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Random CMC instances solved directly and through the dual.
pub fn run_duality(trials: usize, seed: u64, caps: &Caps) -> SuiteReport {
    let mut report = SuiteReport::new("duality");
    let (mut agree, mut yes, mut errors) = (0, 0, Vec::new());
    for t in 0..trials {
        let g = random_cmc(7, 5, &mut rng_for(seed, t as u64));
        match check_duality(&g, caps) {
            Ok(c) if c.ok() => {
                agree += 1;
                yes += usize::from(c.cmc_yes);
            }
            Ok(c) => errors.push(format!("trial {t}: {c:?}")),
            Err(e) => errors.push(format!("trial {t}: {e}")),
        }
    }
    report.check("cmc_dual_agree", errors.is_empty(), format!("{agree}/{trials} {}", errors.join("; ")));
    report.stats.push("trials", trials);
    report.stats.push("yes_instances", yes);
    report
}

/// Every PSI instance with a connected pattern, `h <= 3`, `a <= 2`,
/// `n <= 2`, plus the edgeless and disconnected patterns after adding a
/// universal vertex.
pub fn run_gadgets(caps: &Caps) -> SuiteReport {
    let mut report = SuiteReport::new("gadgets");
    let mut instances: Vec<PsiInstance> = Vec::new();
    for pattern in connected_patterns(3, 2) {
        for n in 1..=2 {
            instances.extend(all_psi_hosts(&pattern, n));
        }
    }
    let (mut size, mut span, mut pairs, mut decode, mut encode, mut equiv) = (0, 0, 0, 0, 0, 0);
    let (mut yes, mut pair_count, mut selections, mut witnesses) = (0, 0, 0, 0);
    let mut errors = Vec::new();
    for (i, inst) in instances.iter().enumerate() {
        match check_gadget_instance(inst, caps) {
            Ok((_, c)) => {
                size += usize::from(c.size_ok);
                span += usize::from(c.spanning_ok);
                pairs += usize::from(c.pairs_connected);
                decode += usize::from(c.decode_ok);
                encode += usize::from(c.encode_ok);
                equiv += usize::from(c.equivalent());
                yes += usize::from(c.psi_yes);
                pair_count += c.same_alpha_pairs;
                selections += c.disconnecting_selections;
                witnesses += c.psi_witnesses;
            }
            Err(e) => errors.push(format!("instance {i}: {e}")),
        }
    }
    let total = instances.len();
    let line = |ok: usize| format!("{ok}/{total}");
    report.check("reduction_errors", errors.is_empty(), errors.join("; "));
    report.check("size_formula", size == total, line(size));
    report.check("gadgets_span_w", span == total, line(span));
    report.check("same_alpha_unions_connected", pairs == total, format!("{} ({pair_count} pairs)", line(pairs)));
    report.check("disconnecting_selections_decode", decode == total, format!("{} ({selections} selections)", line(decode)));
    report.check("witnesses_separate_images", encode == total, format!("{} ({witnesses} witnesses)", line(encode)));
    report.check("psi_dcmc_agree", equiv == total, line(equiv));

    let mut connectivized_ok = true;
    let mut connectivized = 0;
    for h in 1..=2 {
        for n in 1..=2 {
            let blocks = (0..h).map(|x| (x * n..(x + 1) * n).collect()).collect();
            let inst = PsiInstance::new(Graph::empty(h), Graph::empty(h * n), blocks).expect("edgeless instance");
            let conn = connectivize_pattern(&inst);
            let before = solve_psi_bruteforce(&inst, caps).map(|a| a.is_yes());
            let after = check_gadget_instance(&conn.psi, caps);
            connectivized += 1;
            connectivized_ok &= matches!((before, after), (Ok(b), Ok((_, c))) if c.psi_yes == b && c.equivalent() && c.claims_ok());
        }
    }
    report.check("connectivized_patterns", connectivized_ok, format!("{connectivized} instances"));
    report.stats.push("instances", total);
    report.stats.push("yes_instances", yes);
    report.stats.push("same_alpha_pairs", pair_count);
    report.stats.push("disconnecting_selections", selections);
    report.stats.push("psi_witnesses", witnesses);
    report
}

/// One embedding trial: a random max-degree-3 graph with `n + m` drawn
/// from `[50, 400]`, `k = ceil(sqrt(n + m))`, embedded once with the
/// trial's seed.
#[derive(Debug, Clone)]
pub struct EmbeddingTrial {
    pub graph: Graph,
    pub k: usize,
    pub outcome: Result<Embedding, EmbedError>,
}

impl EmbeddingTrial {
    pub fn valid(&self) -> bool {
        match &self.outcome {
            Ok(e) => e.validate(&self.graph).is_ok(),
            Err(_) => true,
        }
    }
}

pub fn embedding_trial(embedder: &mut Embedder, seed: u64, trial: u64) -> EmbeddingTrial {
    let mut rng = rng_for(seed, trial);
    let total = rng.gen_range(50..=400);
    let graph = random_max_degree3(total, &mut rng);
    let size = graph.vertex_count() + graph.edge_count();
    let k = (size as f64).sqrt().ceil() as usize;
    let outcome = embedder.embed(&graph, k, seed.wrapping_add(trial));
    EmbeddingTrial { graph, k, outcome }
}

/// Expander certification, flow calibration, the embedding success rate,
/// and the path-hit Monte-Carlo (twice as many trials as embeddings).
pub fn run_embedding(trials: usize, seed: u64, config: &RunConfig) -> SuiteReport {
    let mut report = SuiteReport::new("embedding");
    let mut embedder = Embedder::new(config.clone());

    let mut cert_ok = true;
    let mut sparsity_ok = true;
    let mut detail = Vec::new();
    let limit = config.caps.expander_exhaustive.min(16);
    for l in 2..=limit {
        match build_expander(l, config.delta_target, config.expander_seed, config.expander_retries, limit) {
            Ok(cert) => match cert.exact {
                Some(delta) => {
                    cert_ok &= delta >= Ratio::new(1, 10) && cert.graph.max_degree() <= 3;
                    let bound = Ratio::new(*delta.numer(), (3 * delta.denom() + delta.numer()) * l as u64);
                    match min_sparsity_exhaustive(&cert.graph) {
                        Ok(s) => {
                            sparsity_ok &= s >= bound;
                            detail.push(format!("l{l}:delta={delta},sparsity={s}"));
                        }
                        Err(_) => sparsity_ok = false,
                    }
                }
                None => cert_ok = false,
            },
            Err(_) => cert_ok = false,
        }
    }
    report.check("expanders_certified", cert_ok, format!("l=2..{limit} exhaustive, delta >= 1/10"));
    report.check("sparsity_bound", sparsity_ok, detail.join(" "));

    match calibrate_flow(&mut embedder, &CALIBRATION_SIZES) {
        Ok(rows) => {
            let fitted = fitted_constant(&rows);
            let within = rows.iter().all(|r| r.ratio <= config.c_hat);
            let consistent = rows.iter().all(|r| (r.congestion - r.lp_optimum).abs() <= 1e-6 * r.lp_optimum.max(1.0));
            report.check("flow_congestion_within_c_hat", within, format!("c_hat={} fitted={fitted}", config.c_hat));
            report.check("flow_decomposition_matches_lp", consistent, "");
            report.check("c_hat_at_most_10", fitted <= 10.0, format!("{fitted}"));
            for r in &rows {
                report.stats.push(&format!("flow_l{}", r.l), format!("congestion={:.4} ratio={:.4} delta_hat={:.4}", r.congestion, r.ratio, r.delta_hat));
            }
            report.stats.push("c_hat_fitted", fitted);
        }
        Err(e) => report.check("flow_calibration", false, e.to_string()),
    }
    report.stats.push("c_hat", config.c_hat);
    report.stats.push("big_c_hat", config.depth_constant());
    report.stats.push("delta_target", config.delta_target);

    let (mut success, mut valid, mut within_depth, mut audit_ok) = (0, 0, 0, 0);
    let mut bucket_ok = true;
    for t in 0..trials {
        let trial = embedding_trial(&mut embedder, seed, t as u64);
        valid += usize::from(trial.valid());
        if let Ok(e) = &trial.outcome {
            success += 1;
            let (n, m) = (trial.graph.vertex_count(), trial.graph.edge_count());
            within_depth += usize::from(e.depth() as f64 <= depth_bound(config.depth_constant(), n, m, trial.k));
            let l = e.host.vertex_count();
            let n_work = e.zeta.len();
            let sizes = e.bucket_sizes();
            bucket_ok &= e.kind != EmbeddingKind::Sampled
                || sizes.iter().all(|&s| s == n_work / l || s == n_work.div_ceil(l));
            let audit = audit_congestion(e);
            let bound = path_hit_bound(config.c_hat, n_work, l);
            let per_vertex = audit.type0.iter().all(|&c| c <= 1 + (n_work + e.isolated_hosts.len()).div_ceil(l));
            audit_ok += usize::from(per_vertex && (audit.max_type1().max(audit.max_type2()) as f64) <= bound);
        }
    }
    let rate = success as f64 / trials.max(1) as f64;
    report.check("embedding_success_rate", rate >= 0.5, format!("{success}/{trials}"));
    report.check("embeddings_valid", valid == trials, format!("{valid}/{trials}"));
    report.check("bucket_balance", bucket_ok, "");
    report.check("audit_within_bounds", audit_ok == success, format!("{audit_ok}/{success}"));
    report.stats.push("success_rate", format!("{rate:.3}"));
    report.stats.push("depth_within_bound", format!("{within_depth}/{success}"));

    let mc_trials = 2 * trials;
    let mut exceed = 0;
    let mut worst_ratio: f64 = 0.0;
    for t in 0..mc_trials {
        let mut rng = rng_for(seed ^ 0xc1a1_4d06, t as u64);
        let total = rng.gen_range(50..=400);
        let g = random_max_degree3(total, &mut rng);
        let k = ((g.vertex_count() + g.edge_count()) as f64).sqrt().ceil() as usize;
        let l = k / 4;
        let n_work = reduce_degrees(&g).graph.vertex_count();
        let Ok(routing) = embedder.routing(l) else {
            exceed += 1;
            continue;
        };
        let p = claim_p(n_work, l).ceil() as usize;
        let hits = sample_path_family(&routing.flow, p, &mut rng);
        let max = hits.into_iter().max().unwrap_or(0) as f64;
        let bound = 10.0 * config.c_hat * p as f64 * (l as f64).ln();
        worst_ratio = worst_ratio.max(max / bound);
        exceed += usize::from(max > bound);
    }
    let exceed_rate = exceed as f64 / mc_trials.max(1) as f64;
    report.check("path_hits_exceed_rate", exceed_rate <= 0.1, format!("{exceed}/{mc_trials}"));
    report.stats.push("path_hits_worst_fraction_of_bound", format!("{worst_ratio:.4}"));

    let mut minor_ok = true;
    for t in 0..20u64 {
        let mut rng = rng_for(seed ^ 0xde61, t);
        let n = rng.gen_range(5..12);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.5)).collect();
        let g = Graph::new(n, edges).expect("random graph");
        let w = reduce_degrees(&g);
        minor_ok &= w.graph.max_degree() <= 3 && is_minor_model(&g, &w);
    }
    report.check("degree_reduction_minor", minor_ok, "20 random graphs");
    report
}

/// All formulas with `N, M <= 3` and `trials` random ones with
/// `N + M <= 8` through the full chain, plus routing along random
/// depth-2 self-embeddings.
pub fn run_pipeline(trials: usize, seed: u64, config: &RunConfig) -> SuiteReport {
    let mut report = SuiteReport::new("pipeline");
    let caps = &config.caps;
    let mut embedder = Embedder::new(config.clone());
    let mut formulas = all_small_cnfs(3, 3);
    let exhaustive = formulas.len();
    formulas.extend((0..trials).map(|t| random_cnf(8, &mut rng_for(seed, t as u64))));
    let (mut agree, mut yes, mut witness, mut bound) = (0, 0, 0, 0);
    let mut errors = Vec::new();
    let mut max_w = 0usize;
    for (i, f) in formulas.iter().enumerate() {
        match check_pipeline_formula(f, &mut embedder, seed.wrapping_add(i as u64), caps) {
            Ok(c) => {
                agree += usize::from(c.stages.iter().all(|&s| s == c.sat));
                yes += usize::from(c.sat);
                witness += usize::from(c.witness_ok);
                bound += usize::from(c.domain_bound_ok);
                max_w = max_w.max(c.report.get("w").and_then(|w| w.parse().ok()).unwrap_or(0));
            }
            Err(e) => errors.push(format!("formula {i}: {e}")),
        }
    }
    let total = formulas.len();
    report.check("pipeline_errors", errors.is_empty(), errors.join("; "));
    report.check("stage_decisions_agree", agree == total, format!("{agree}/{total}"));
    report.check("witnesses_decode_to_assignments", witness == total, format!("{witness}/{total}"));
    report.check("routed_domain_bound", bound == total, format!("{bound}/{total}"));
    report.stats.push("exhaustive_formulas", exhaustive);
    report.stats.push("random_formulas", trials);
    report.stats.push("satisfiable", yes);
    report.stats.push("max_w", max_w);

    let route_caps = Caps { csp_product: caps.csp_product.max(1_000_000_000), ..*caps };
    let (mut route_ok, mut route_bound, mut psi_checked, mut psi_ok) = (0, 0, 0, 0);
    let mut route_errors = Vec::new();
    for t in 0..trials {
        let mut rng = rng_for(seed ^ 0x2007e, t as u64);
        let f = random_cnf(8, &mut rng);
        let inc = sat_to_csp_g(&f);
        let sets = random_self_embedding(&inc.graph, 2, &mut rng);
        match check_routing(&f, &inc.graph, &sets, &route_caps) {
            Ok((eq, b)) => {
                route_ok += usize::from(eq);
                route_bound += usize::from(b);
            }
            Err(e) => route_errors.push(format!("trial {t}: {e}")),
        }
        if let Ok(ctx) = route_csp(&inc.csp, &inc.graph, &sets, &route_caps) {
            let conv = csp_to_psi(&ctx.routed, &inc.graph);
            let sat = crate::instances::solve_sat_bruteforce(&f, caps).map(|a| a.is_yes());
            if let (Ok(psi), Ok(sat)) = (solve_psi_bruteforce(&conv.psi, caps), sat) {
                psi_checked += 1;
                psi_ok += usize::from(psi.is_yes() == sat);
            }
        }
    }
    report.check("routing_errors", route_errors.is_empty(), route_errors.join("; "));
    report.check("routing_preserves_satisfiability", route_ok == trials, format!("{route_ok}/{trials}"));
    report.check("routing_domain_bound", route_bound == trials, format!("{route_bound}/{trials}"));
    report.check("routed_psi_agrees", psi_ok == psi_checked, format!("{psi_ok}/{psi_checked} within caps"));
    report
}
