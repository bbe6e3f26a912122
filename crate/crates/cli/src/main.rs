//! `consensus-scc`: SCC decomposition, finite diameter, trace tables,
//! random graph generation and benchmarks from the command line.
//!
//! Exit codes: 0 success, 2 bad input or parameters, 3 an internal
//! correctness check failed.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use consensus_scc::bench::{
    diameter_benchmark, emit_csv, run_experiment, write_manifest, ExperimentConfig, Family,
};
use consensus_scc::graph::{
    gen_barabasi_albert, gen_erdos_renyi, gen_watts_strogatz, parse_edge_list,
    serialize_edge_list,
};
use consensus_scc::oracles::floyd_warshall_diameter;
use consensus_scc::{
    assemble_partition, finite_diameter_from_run, run, trace_table, Digraph, Error, IdBase, Mode,
    RunOptions, Schedule,
};

#[derive(Parser)]
#[command(name = "consensus-scc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a graph into strongly connected components.
    Scc(EngineArgs),
    /// Compute the finite diameter.
    Diameter {
        #[command(flatten)]
        engine: EngineArgs,
        /// Also run Floyd-Warshall and report agreement.
        #[arg(long)]
        check: bool,
    },
    /// Print the per-round state table (defaults to global-rounds mode).
    Trace(EngineArgs),
    /// Generate a seeded random graph as an edge list.
    Gen(GenArgs),
    /// Run the experiment matrix and write CSV plus a run manifest.
    Bench(BenchArgs),
}

#[derive(Args)]
struct EngineArgs {
    /// Edge-list file, or `-` for standard input.
    input: PathBuf,
    /// Whether node ids in the input (and output) start at 0 or 1.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    base: u8,
    #[arg(long, value_enum, conflicts_with = "global_rounds")]
    mode: Option<ModeArg>,
    /// Shorthand for `--mode global-rounds`.
    #[arg(long)]
    global_rounds: bool,
    /// Run each round's node updates on a thread pool.
    #[arg(long)]
    parallel: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    PerNodeFreeze,
    GlobalRounds,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::PerNodeFreeze => Mode::PerNodeFreeze,
            ModeArg::GlobalRounds => Mode::GlobalRounds,
        }
    }
}

impl EngineArgs {
    fn id_base(&self) -> IdBase {
        IdBase::from_offset(self.base).expect("clap restricts base to 0 or 1")
    }

    fn mode_or(&self, default: Mode) -> Mode {
        if self.global_rounds {
            Mode::GlobalRounds
        } else {
            self.mode.map(Mode::from).unwrap_or(default)
        }
    }

    fn options(&self, default: Mode, trace: bool) -> RunOptions {
        RunOptions {
            mode: self.mode_or(default),
            schedule: if self.parallel {
                Schedule::Parallel
            } else {
                Schedule::Sequential
            },
            trace,
        }
    }

    fn load(&self) -> Result<Digraph> {
        let text = read_input(&self.input)?;
        let g = parse_edge_list(&text, self.id_base())
            .with_context(|| format!("cannot parse {}", self.input.display()))?;
        if g.is_empty() {
            return Err(Error::EmptyGraph).context(format!("{}", self.input.display()));
        }
        Ok(g)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Er,
    Ba,
    Ws,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Er => Family::ErdosRenyi,
            FamilyArg::Ba => Family::BarabasiAlbert,
            FamilyArg::Ws => Family::WattsStrogatz,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    family: FamilyArg,
    /// Number of nodes.
    #[arg(long)]
    n: usize,
    /// Edge count (ER) or attachments per new node (BA).
    #[arg(long)]
    m: Option<usize>,
    /// Lattice degree (WS).
    #[arg(long, default_value_t = 4)]
    k: usize,
    /// Rewiring probability (WS).
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    base: u8,
}

#[derive(Args)]
struct BenchArgs {
    /// Graph family; all three when omitted.
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Parameter set 1 or 2; both when omitted.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    param_set: Option<u8>,
    /// Comma-separated node counts.
    #[arg(long, value_delimiter = ',', default_values_t = [100, 200, 300, 400, 500])]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 10)]
    replicates: usize,
    #[arg(long)]
    seed: u64,
    /// CSV output path; the manifest goes to `<out>.manifest`.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "per-node-freeze")]
    mode: ModeArg,
    /// Timed repetitions per algorithm per graph.
    #[arg(long, default_value_t = 5)]
    timing_reps: usize,
    /// Run the 25-node diameter benchmark against Floyd-Warshall instead.
    #[arg(long)]
    diameter: bool,
    /// Evaluate replicates concurrently (timings become noisier).
    #[arg(long)]
    parallel: bool,
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
    }
}

fn join_ids(ids: impl IntoIterator<Item = usize>, offset: usize) -> String {
    ids.into_iter()
        .map(|v| (v + offset).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_scc(args: &EngineArgs, out: &mut impl Write) -> Result<()> {
    let g = args.load()?;
    let result = run(&g, args.options(Mode::PerNodeFreeze, false))?;
    let partition = assemble_partition(&g, &result)?;
    let offset = args.id_base().offset();
    writeln!(out, "components: {}", partition.len())?;
    for comp in partition.components() {
        writeln!(out, "{}", join_ids(comp.iter().copied(), offset))?;
    }
    writeln!(out, "rounds: {}", join_ids(result.rounds_per_node.iter().copied(), 0))?;
    writeln!(out, "diameter: {}", finite_diameter_from_run(&result))?;
    Ok(())
}

fn cmd_diameter(args: &EngineArgs, check: bool, out: &mut impl Write) -> Result<()> {
    let g = args.load()?;
    let result = run(&g, args.options(Mode::PerNodeFreeze, false))?;
    let d = finite_diameter_from_run(&result);
    writeln!(out, "{d}")?;
    if check {
        let fw = floyd_warshall_diameter(&g)?;
        if fw != d {
            writeln!(out, "floyd-warshall: {fw} (DISAGREE)")?;
            return Err(Error::Invariant(format!(
                "consensus diameter {d} differs from Floyd-Warshall {fw}"
            ))
            .into());
        }
        writeln!(out, "floyd-warshall: {fw} (agree)")?;
    }
    Ok(())
}

fn cmd_trace(args: &EngineArgs, out: &mut impl Write) -> Result<()> {
    let g = args.load()?;
    let result = run(&g, args.options(Mode::GlobalRounds, true))?;
    out.write_all(trace_table(&result, args.id_base())?.as_bytes())?;
    Ok(())
}

fn cmd_gen(args: &GenArgs, out: &mut impl Write) -> Result<()> {
    let need_m = || {
        args.m
            .ok_or_else(|| Error::InvalidParameter("--m is required for this family".into()))
    };
    let g = match args.family {
        FamilyArg::Er => gen_erdos_renyi(args.n, need_m()?, args.seed)?,
        FamilyArg::Ba => gen_barabasi_albert(args.n, need_m()?, args.seed)?,
        FamilyArg::Ws => {
            let p = args
                .p
                .ok_or_else(|| Error::InvalidParameter("--p is required for ws".into()))?;
            gen_watts_strogatz(args.n, args.k, p, args.seed)?
        }
    };
    let base = IdBase::from_offset(args.base).expect("clap restricts base to 0 or 1");
    let text = serialize_edge_list(&g, base);
    match &args.out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_bench(args: &BenchArgs, out: &mut impl Write) -> Result<()> {
    let mode = Mode::from(args.mode);
    let manifest = {
        let mut p = args.out.clone().into_os_string();
        p.push(".manifest");
        PathBuf::from(p)
    };

    let (records, configs, diameter_seed) = if args.diameter {
        (diameter_benchmark(args.seed, mode, args.timing_reps)?, Vec::new(), Some(args.seed))
    } else {
        let families = match args.family {
            Some(f) => vec![Family::from(f)],
            None => Family::ALL.to_vec(),
        };
        let sets = match args.param_set {
            Some(s) => vec![s],
            None => vec![1, 2],
        };
        let mut configs = Vec::new();
        let mut records = Vec::new();
        for family in families {
            for &set in &sets {
                let cfg = ExperimentConfig {
                    node_sizes: args.sizes.clone(),
                    replicates: args.replicates,
                    mode,
                    timing_reps: args.timing_reps,
                    parallel: args.parallel,
                    ..ExperimentConfig::standard(family, set, args.seed)
                };
                records.extend(run_experiment(&cfg)?);
                configs.push(cfg);
            }
        }
        (records, configs, None)
    };

    if records.is_empty() {
        bail!(Error::InvalidParameter("benchmark produced no records".into()));
    }
    emit_csv(&records, &args.out)?;
    write_manifest(&manifest, &configs, diameter_seed, args.timing_reps)
        .with_context(|| format!("cannot write {}", manifest.display()))?;
    writeln!(
        out,
        "wrote {} records to {} (manifest {})",
        records.len(),
        args.out.display(),
        manifest.display()
    )?;
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(e) if e.is_internal() => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Scc(args) => cmd_scc(args, &mut out),
        Command::Diameter { engine, check } => cmd_diameter(engine, *check, &mut out),
        Command::Trace(args) => cmd_trace(args, &mut out),
        Command::Gen(args) => cmd_gen(args, &mut out),
        Command::Bench(args) => cmd_bench(args, &mut out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
