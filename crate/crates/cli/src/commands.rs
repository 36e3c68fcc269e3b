use std::fmt::Display;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use labelcut::embedding::format::{parse_embedding, write_embedding, EmbedFile};
use labelcut::embedding::{
    audit_congestion, calibrate_flow, depth_bound, fitted_constant, write_audit, Embedder, CALIBRATION_SIZES,
};
use labelcut::gadgets::{connectivize_pattern, reduce_psi_to_dcmc, write_gadget_map, Reduction};
use labelcut::instances::format::{
    parse_cmc, parse_cnf, parse_csp, parse_dcmc, parse_dimacs_graph, parse_psi, write_cmc, write_cnf, write_csp,
    write_dcmc, write_dimacs_graph, write_psi,
};
use labelcut::instances::oracles::{
    solve_cmc_bruteforce, solve_csp_bruteforce, solve_dual_bruteforce, solve_psi_bruteforce, solve_sat_bruteforce,
};
use labelcut::pipeline::{csp_to_psi, route_csp, sat_to_csp_g, sat_to_dcmc, Report};
use labelcut::verify::{run_duality, run_embedding, run_gadgets, run_pipeline, SuiteReport};
use labelcut::{Answer, RunConfig};

use crate::{Kind, Stage, SuiteArg};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn sidecar(out: &Path, ext: &str) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".");
    name.push(ext);
    PathBuf::from(name)
}

fn joined<T: Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn parse(kind: Kind, file: &Path) -> Result<u8> {
    let text = read(file)?;
    let canonical = match kind {
        Kind::Cmc => write_cmc(&parse_cmc(&text)?),
        Kind::Dcmc => write_dcmc(&parse_dcmc(&text)?),
        Kind::Psi => write_psi(&parse_psi(&text)?),
        Kind::Csp => write_csp(&parse_csp(&text)?),
        Kind::Cnf => write_cnf(&parse_cnf(&text)?),
        Kind::Graph => write_dimacs_graph(&parse_dimacs_graph(&text)?),
    };
    print!("{canonical}");
    Ok(0)
}

fn decided<W>(answer: Answer<W>, witness: impl FnOnce(&W) -> Vec<String>) -> u8 {
    match answer.witness() {
        Some(w) => {
            println!("answer=yes");
            for line in witness(w) {
                println!("{line}");
            }
            0
        }
        None => {
            println!("answer=no");
            1
        }
    }
}

pub fn solve(kind: Kind, file: &Path, config: &RunConfig) -> Result<u8> {
    let text = read(file)?;
    let caps = &config.caps;
    Ok(match kind {
        Kind::Cmc => decided(solve_cmc_bruteforce(&parse_cmc(&text)?, caps)?, |w| {
            vec![format!("side={}", joined(&w.side)), format!("colors={}", joined(&w.colors))]
        }),
        Kind::Dcmc => decided(solve_dual_bruteforce(&parse_dcmc(&text)?, caps)?, |w| {
            vec![format!("selection={}", joined(w))]
        }),
        Kind::Psi => decided(solve_psi_bruteforce(&parse_psi(&text)?, caps)?, |w| vec![format!("vertices={}", joined(w))]),
        Kind::Csp => {
            let csp = parse_csp(&text)?;
            decided(solve_csp_bruteforce(&csp, caps)?, |w| {
                let tokens: Vec<&str> = w.iter().enumerate().map(|(v, &i)| csp.domain(v)[i].as_str()).collect();
                vec![format!("valuation={}", tokens.join(" "))]
            })
        }
        Kind::Cnf => decided(solve_sat_bruteforce(&parse_cnf(&text)?, caps)?, |w| {
            let lits: Vec<i64> = w.iter().enumerate().map(|(i, &b)| if b { i as i64 + 1 } else { -(i as i64 + 1) }).collect();
            vec![format!("assignment={}", joined(&lits))]
        }),
        Kind::Graph => bail!("no decision problem for plain graphs"),
    })
}

fn gadget_report(red: &Reduction, r: &mut Report) {
    r.push("h", red.psi.pattern().vertex_count());
    r.push("n", red.psi.block_size());
    r.push("rho", red.params.rho);
    r.push("b", red.params.b);
    r.push("a", red.params.a);
    r.push("p", red.dual.graph_count());
    r.push("w", red.dual.vertex_count());
}

/// Writes the main artifact and its sidecars. Without `out` the artifact
/// goes to stdout, the report to stderr and sidecars are dropped.
fn emit(out: Option<&Path>, artifact: &str, sidecars: &[(&str, String)], report: &Report) -> Result<u8> {
    match out {
        Some(path) => {
            write(path, artifact)?;
            for (ext, text) in sidecars {
                write(&sidecar(path, ext), text)?;
            }
            print!("{report}");
        }
        None => {
            print!("{artifact}");
            eprint!("{report}");
        }
    }
    std::io::stdout().flush()?;
    Ok(0)
}

pub fn reduce(
    stage: Stage,
    input: &Path,
    out: Option<&Path>,
    embed: Option<&Path>,
    pattern: Option<&Path>,
    config: &RunConfig,
) -> Result<u8> {
    let text = read(input)?;
    let caps = &config.caps;
    let mut r = Report::default();
    match stage {
        Stage::Psi2dcmc => {
            let psi = parse_psi(&text)?;
            let conn = connectivize_pattern(&psi);
            let red = reduce_psi_to_dcmc(&conn.psi, caps)?;
            r.push("stage", "psi2dcmc");
            r.push("connectivized", conn.added);
            gadget_report(&red, &mut r);
            emit(out, &write_dcmc(&red.dual), &[("gadgetmap", write_gadget_map(&red.labels))], &r)
        }
        Stage::Sat2csp => {
            let inc = sat_to_csp_g(&parse_cnf(&text)?);
            r.push("stage", "sat2csp");
            r.push("variables", inc.csp.variable_count());
            r.push("constraints", inc.csp.constraints().len());
            r.push("incidence_vertices", inc.graph.vertex_count());
            r.push("incidence_edges", inc.graph.edge_count());
            emit(out, &write_csp(&inc.csp), &[("graph", write_dimacs_graph(&inc.graph))], &r)
        }
        Stage::Route => {
            let csp = parse_csp(&text)?;
            let Some(embed) = embed else { bail!("stage route needs --embed") };
            let file = parse_embedding(&read(embed)?)?;
            let ctx = route_csp(&csp, &file.host, &file.branch_sets, caps)?;
            let depth = (0..file.host.vertex_count())
                .map(|w| file.branch_sets.iter().filter(|s| s.contains(&w)).count())
                .max()
                .unwrap_or(0);
            r.push("stage", "route");
            r.push("host_vertices", file.host.vertex_count());
            r.push("host_edges", file.host.edge_count());
            r.push("depth", depth);
            r.push("max_routed_domain", ctx.max_domain());
            r.push("routed_constraints", ctx.routed.constraints().len());
            emit(out, &write_csp(&ctx.routed), &[], &r)
        }
        Stage::Csp2psi => {
            let csp = parse_csp(&text)?;
            let graph = match pattern {
                Some(p) => parse_dimacs_graph(&read(p)?)?,
                None => csp.constraint_graph(),
            };
            if graph.vertex_count() != csp.variable_count() {
                bail!("pattern has {} vertices, csp has {} variables", graph.vertex_count(), csp.variable_count());
            }
            if let Some(&(u, v)) = csp.constraints().keys().find(|&&(u, v)| !graph.has_edge(u, v)) {
                bail!("constraint on {u} {v} is not a pattern edge");
            }
            let conv = csp_to_psi(&csp, &graph);
            r.push("stage", "csp2psi");
            r.push("connectivized", conv.connectivized);
            r.push("pattern_vertices", conv.psi.pattern().vertex_count());
            r.push("pattern_edges", conv.psi.pattern().edge_count());
            r.push("block_size", conv.block_size);
            r.push("host_edges", conv.psi.host().edge_count());
            emit(out, &write_psi(&conv.psi), &[], &r)
        }
        Stage::Sat2dcmc => {
            let f = parse_cnf(&text)?;
            let mut embedder = Embedder::new(config.clone());
            let run = sat_to_dcmc(&f, &mut embedder, config.seed, caps)?;
            r.push("stage", "sat2dcmc");
            r.push("seed", config.seed);
            r.extend(run.report());
            let sidecars = [
                ("gadgetmap", write_gadget_map(&run.reduction.labels)),
                ("embed", write_embedding(&EmbedFile::from(&run.embedding))),
            ];
            emit(out, &write_dcmc(&run.reduction.dual), &sidecars, &r)
        }
    }
}

pub fn embed(input: &Path, k: Option<usize>, out: Option<&Path>, config: &RunConfig) -> Result<u8> {
    let g = parse_dimacs_graph(&read(input)?)?;
    let (n, m) = (g.vertex_count(), g.edge_count());
    let k = k.unwrap_or_else(|| ((n + m) as f64).sqrt().ceil() as usize);
    let mut embedder = Embedder::new(config.clone());
    let (e, failed) = embedder.embed_with_retry(&g, k, config.seed)?;
    e.validate(&g).map_err(anyhow::Error::msg).context("embedding failed validation")?;
    let audit = audit_congestion(&e);
    let mut r = Report::default();
    r.push("vertices", n);
    r.push("edges", m);
    r.push("k", k);
    r.push("seed", config.seed);
    r.push("embedding_kind", format!("{:?}", e.kind).to_lowercase());
    r.push("host_vertices", e.host.vertex_count());
    r.push("host_edges", e.host.edge_count());
    r.push("depth", e.depth());
    r.push("depth_bound", format!("{:.4}", depth_bound(config.depth_constant(), n, m, k)));
    r.push("failed_attempts", failed);
    r.push("max_type0", audit.type0.iter().max().copied().unwrap_or(0));
    r.push("max_type1", audit.max_type1());
    r.push("max_type2", audit.max_type2());
    emit(out, &write_embedding(&EmbedFile::from(&e)), &[("audit", write_audit(&audit))], &r)
}

pub fn verify(suite: SuiteArg, trials: usize, config: &RunConfig) -> Result<u8> {
    let seed = config.seed;
    let run = |s: SuiteArg| -> SuiteReport {
        match s {
            SuiteArg::Duality => run_duality(trials, seed, &config.caps),
            SuiteArg::Gadgets => run_gadgets(&config.caps),
            SuiteArg::Embedding => run_embedding(trials, seed, config),
            SuiteArg::Pipeline => run_pipeline(trials, seed, config),
            SuiteArg::All => unreachable!(),
        }
    };
    let suites = match suite {
        SuiteArg::All => vec![SuiteArg::Duality, SuiteArg::Gadgets, SuiteArg::Embedding, SuiteArg::Pipeline],
        s => vec![s],
    };
    let mut passed = true;
    for s in suites {
        let report = run(s);
        passed &= report.passed();
        print!("{report}");
        std::io::stdout().flush()?;
    }
    Ok(if passed { 0 } else { 1 })
}

pub fn calibrate(sizes: &[usize], config: &RunConfig) -> Result<u8> {
    let sizes = if sizes.is_empty() { CALIBRATION_SIZES.to_vec() } else { sizes.to_vec() };
    let mut embedder = Embedder::new(config.clone());
    let rows = calibrate_flow(&mut embedder, &sizes)?;
    for row in &rows {
        println!(
            "l={} delta_hat={:.6} lp_optimum={:.6} congestion={:.6} ratio={:.6}",
            row.l, row.delta_hat, row.lp_optimum, row.congestion, row.ratio
        );
    }
    println!("c_hat={}", fitted_constant(&rows));
    println!("big_c_hat={}", 120.0 * fitted_constant(&rows) + 6.0);
    println!("delta_target={}", config.delta_target);
    Ok(0)
}
