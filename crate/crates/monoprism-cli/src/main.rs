//! Command-line front end for complementary-prism convexity invariants.
//!
//! Three subcommands: `info` reports the invariants of each input graph as
//! JSON lines, `sweep` cross-checks the closed forms against the exhaustive
//! oracle over graph censuses or random samples, and `gen` emits graph6
//! lines for the built-in families. Records go to standard output,
//! diagnostics to standard error. Exit codes: 0 success, 1 input error,
//! 2 formula/oracle mismatch.

mod genspec;
mod input;
mod report;
mod sweep;

use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use monoprism::codec::to_graph6;
use monoprism::oracle::DEFAULT_ORACLE_CAP;

use genspec::BaseSpec;
use input::InputFormat;

#[derive(Parser)]
#[command(
    name = "monoprism",
    version,
    about = "Monophonic convexity invariants of complementary prisms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report invariants of each input graph as JSON lines.
    Info {
        /// Input file, or `-` for standard input.
        file: String,
        /// Treat the input as one edge-list graph (header `n m`, then one
        /// `u v` pair per line).
        #[arg(long, conflicts_with = "graph6")]
        edge_list: bool,
        /// Treat the input as graph6, one graph per line (the default).
        #[arg(long)]
        graph6: bool,
        /// Skip the exhaustive oracle; report formula values only.
        #[arg(long)]
        no_oracle: bool,
        /// Largest prism order the oracle will search exhaustively.
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Cross-check formulas against the oracle over many graphs.
    #[command(group(
        ArgGroup::new("mode").required(true).args(["exhaustive", "random"])
    ))]
    Sweep {
        /// Check every labeled graph of every order up to this bound.
        #[arg(long, value_name = "MAX_N")]
        exhaustive: Option<usize>,
        /// Check random G(n, p) samples on this many vertices.
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        /// Sample count for random mode.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Edge probability for random mode.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Random-mode seed; identical seeds give identical runs.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest prism order the oracle will search exhaustively.
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Emit family graphs as graph6 lines.
    Gen {
        /// Family name: path, cycle, complete, edgeless, star,
        /// complete-bipartite, or gnp.
        family: String,
        /// Numeric family parameters, e.g. `5` or `6 0.5`.
        params: Vec<String>,
        /// Seed for gnp.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// How many graphs to emit (gnp draws fresh samples each time).
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Disjoint-union addend as a compact token (k3, p4, c5, e2, s4,
        /// kb2x3); repeatable.
        #[arg(long)]
        union: Vec<String>,
    },
}

fn cmd_info(
    file: &str,
    format: InputFormat,
    no_oracle: bool,
    oracle_cap: usize,
) -> anyhow::Result<ExitCode> {
    let graphs = input::read_graphs(file, format)?;
    let cap = if no_oracle { 0 } else { oracle_cap };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut any_mismatch = false;
    for g in &graphs {
        let report = report::build_report(g, cap);
        any_mismatch |= report.is_mismatch();
        writeln!(out, "{}", report.to_json_line())?;
    }
    Ok(if any_mismatch {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_sweep(cmd: &Command) -> anyhow::Result<ExitCode> {
    let Command::Sweep {
        exhaustive,
        random,
        samples,
        p,
        seed,
        oracle_cap,
    } = cmd
    else {
        unreachable!("dispatched on the sweep variant");
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let summary = match (exhaustive, random) {
        (Some(max_n), None) => sweep::exhaustive(*max_n, *oracle_cap, &mut out)?,
        (None, Some(n)) => sweep::random(*n, *samples, *p, *seed, *oracle_cap, &mut out)?,
        _ => unreachable!("clap enforces exactly one mode"),
    };
    eprintln!(
        "sweep: {} graphs, {} ok, {} mismatch",
        summary.graphs, summary.ok, summary.mismatch
    );
    Ok(if summary.mismatch > 0 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_gen(
    family: &str,
    params: &[String],
    seed: u64,
    count: usize,
    union: &[String],
) -> anyhow::Result<ExitCode> {
    let addends = union
        .iter()
        .map(|t| genspec::parse_union_token(t))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let mut base = genspec::parse_base(family, params, seed)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for _ in 0..count {
        let g = match &mut base {
            BaseSpec::Fixed(g) => g.clone(),
            BaseSpec::Random { source } => source.draw(),
        };
        let g = genspec::apply_unions(g, &addends)?;
        writeln!(out, "{}", to_graph6(&g))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    match &cli.command {
        Command::Info {
            file,
            edge_list,
            graph6: _,
            no_oracle,
            oracle_cap,
        } => {
            let format = if *edge_list {
                InputFormat::EdgeList
            } else {
                InputFormat::Graph6
            };
            cmd_info(file, format, *no_oracle, *oracle_cap)
        }
        sweep @ Command::Sweep { .. } => cmd_sweep(sweep),
        Command::Gen {
            family,
            params,
            seed,
            count,
            union,
        } => cmd_gen(family, params, *seed, *count, union),
    }
}

fn main() -> ExitCode {
    // Exit code 2 is reserved for formula/oracle mismatches, so usage
    // errors must map to 1 instead of clap's default 2.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
