//! `labelcut`: solve, reduce, embed, verify and calibrate from the command line.
//!
//! Exit codes: `solve` returns 0 for yes, 1 for no; `verify` returns 1 when a
//! check fails; every error (parse, cap, stage) returns 2 with a one-line
//! diagnostic on stderr.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use labelcut::RunConfig;

#[derive(Parser)]
#[command(name = "labelcut", version, about = "Reduction workbench for global label min-cut")]
struct Cli {
    /// TOML file with `RunConfig` fields; flags override it.
    #[arg(long, global = true, env = "LABELCUT_CONFIG")]
    config: Option<PathBuf>,
    #[command(flatten)]
    overrides: Overrides,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Default)]
struct Overrides {
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    cap_cmc_vertices: Option<usize>,
    #[arg(long, global = true)]
    cap_dual_combinations: Option<u128>,
    #[arg(long, global = true)]
    cap_psi_assignments: Option<u128>,
    #[arg(long, global = true)]
    cap_csp_product: Option<u128>,
    #[arg(long, global = true)]
    cap_sat_variables: Option<usize>,
    #[arg(long, global = true)]
    cap_expander_exhaustive: Option<usize>,
    #[arg(long, global = true)]
    cap_routed_domain: Option<u128>,
    #[arg(long, global = true)]
    cap_gadget_vertices: Option<u128>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an instance and print it in canonical form.
    Parse { kind: Kind, file: PathBuf },
    /// Decide an instance by brute force and print the witness.
    Solve { kind: Kind, file: PathBuf },
    /// Run one reduction stage.
    Reduce {
        stage: Stage,
        input: PathBuf,
        /// Output file; sidecars are written next to it. Without it the
        /// artifact goes to stdout and the report to stderr.
        #[arg(long)]
        out: Option<PathBuf>,
        /// `embed` file giving host and branch sets (stage `route`).
        #[arg(long)]
        embed: Option<PathBuf>,
        /// DIMACS pattern graph (stage `csp2psi`); defaults to the
        /// constraint graph.
        #[arg(long)]
        pattern: Option<PathBuf>,
    },
    /// Embed a DIMACS graph into a small expander.
    Embed {
        input: PathBuf,
        /// Size budget; defaults to `ceil(sqrt(n + m))`.
        #[arg(long)]
        k: Option<usize>,
        /// Writes the `embed` file here and the congestion audit to `<out>.audit`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a property suite.
    Verify {
        #[arg(default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Recompute the flow-congestion constant on the default expanders.
    Calibrate {
        /// Expander sizes; defaults to 2..8, 16, 32.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cmc,
    Dcmc,
    Psi,
    Csp,
    Cnf,
    Graph,
}

#[derive(Clone, Copy, ValueEnum)]
enum Stage {
    Psi2dcmc,
    Sat2csp,
    Route,
    Csp2psi,
    Sat2dcmc,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Duality,
    Gadgets,
    Embedding,
    Pipeline,
    All,
}

fn load_config(cli: &Cli) -> Result<RunConfig> {
    let mut config = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?
        }
        None => RunConfig::default(),
    };
    let o = &cli.overrides;
    let caps = &mut config.caps;
    if let Some(s) = o.seed {
        config.seed = s;
    }
    if let Some(v) = o.cap_cmc_vertices {
        caps.cmc_vertices = v;
    }
    if let Some(v) = o.cap_dual_combinations {
        caps.dual_combinations = v;
    }
    if let Some(v) = o.cap_psi_assignments {
        caps.psi_assignments = v;
    }
    if let Some(v) = o.cap_csp_product {
        caps.csp_product = v;
    }
    if let Some(v) = o.cap_sat_variables {
        caps.sat_variables = v;
    }
    if let Some(v) = o.cap_expander_exhaustive {
        caps.expander_exhaustive = v;
    }
    if let Some(v) = o.cap_routed_domain {
        caps.routed_domain = v;
    }
    if let Some(v) = o.cap_gadget_vertices {
        caps.gadget_vertices = v;
    }
    config.validate()?;
    Ok(config)
}

fn run(cli: &Cli) -> Result<u8> {
    let config = load_config(cli)?;
    match &cli.command {
        Command::Parse { kind, file } => commands::parse(*kind, file),
        Command::Solve { kind, file } => commands::solve(*kind, file, &config),
        Command::Reduce { stage, input, out, embed, pattern } => {
            commands::reduce(*stage, input, out.as_deref(), embed.as_deref(), pattern.as_deref(), &config)
        }
        Command::Embed { input, k, out } => commands::embed(input, *k, out.as_deref(), &config),
        Command::Verify { suite, trials } => commands::verify(*suite, *trials, &config),
        Command::Calibrate { sizes } => commands::calibrate(sizes, &config),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", format!("{e:#}").replace('\n', " "));
            ExitCode::from(2)
        }
    }
}
