//! Experiment runner: random graph families × sizes × two parameter sets,
//! with every engine result checked against the classical oracles.

mod cost;
mod report;

pub use cost::{
    expected_cost_ba, expected_cost_er, expected_cost_ws, CostEstimate, WsCostEstimate,
    EULER_GAMMA,
};
pub use report::{emit_csv, format_sig6, write_csv, write_manifest, CSV_COLUMNS};

use std::fmt;
use std::hint::black_box;
use std::str::FromStr;
use std::time::Instant;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::consensus::{self, Mode, RunOptions};
use crate::error::{Error, Result};
use crate::graph::{self, Digraph, GraphStats, IdBase};
use crate::oracles;

/// Node counts used by the SCC experiments.
pub const STANDARD_NODE_SIZES: [usize; 5] = [100, 200, 300, 400, 500];
/// Graphs generated per node count.
pub const STANDARD_REPLICATES: usize = 10;
/// Lattice degree for every Watts–Strogatz graph.
pub const WS_LATTICE_DEGREE: usize = 4;
/// Node count for the diameter benchmark.
pub const DIAMETER_BENCH_NODES: usize = 25;
pub const DIAMETER_BENCH_GRAPHS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    ErdosRenyi,
    BarabasiAlbert,
    WattsStrogatz,
}

impl Family {
    pub const ALL: [Family; 3] = [
        Family::ErdosRenyi,
        Family::BarabasiAlbert,
        Family::WattsStrogatz,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Family::ErdosRenyi => "ER",
            Family::BarabasiAlbert => "BA",
            Family::WattsStrogatz => "WS",
        }
    }

    /// Generator parameters of parameter set 1 or 2 at `n` nodes.
    pub fn params(self, parameter_set: u8, n: usize) -> Result<GeneratorParams> {
        Ok(match (self, parameter_set) {
            (Family::ErdosRenyi, 1) => GeneratorParams::ErdosRenyi {
                m: graph::round_two_thirds_power(n),
            },
            (Family::ErdosRenyi, 2) => GeneratorParams::ErdosRenyi { m: 500 },
            (Family::BarabasiAlbert, 1) => GeneratorParams::BarabasiAlbert { m: n / 5 },
            (Family::BarabasiAlbert, 2) => GeneratorParams::BarabasiAlbert { m: 50 },
            (Family::WattsStrogatz, 1) => GeneratorParams::WattsStrogatz {
                k: WS_LATTICE_DEGREE,
                p: 0.8,
            },
            (Family::WattsStrogatz, 2) => GeneratorParams::WattsStrogatz {
                k: WS_LATTICE_DEGREE,
                p: 0.2,
            },
            (_, other) => {
                return Err(Error::InvalidParameter(format!(
                    "parameter set must be 1 or 2, got {other}"
                )))
            }
        })
    }

    /// Parameters for the `n = 25` diameter benchmark.
    pub fn diameter_bench_params(self) -> GeneratorParams {
        match self {
            Family::ErdosRenyi => GeneratorParams::ErdosRenyi { m: 50 },
            Family::BarabasiAlbert => GeneratorParams::BarabasiAlbert { m: 3 },
            Family::WattsStrogatz => GeneratorParams::WattsStrogatz {
                k: WS_LATTICE_DEGREE,
                p: 0.2,
            },
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "er" | "erdos-renyi" => Ok(Family::ErdosRenyi),
            "ba" | "barabasi-albert" => Ok(Family::BarabasiAlbert),
            "ws" | "watts-strogatz" => Ok(Family::WattsStrogatz),
            _ => Err(Error::InvalidParameter(format!("unknown graph family {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneratorParams {
    ErdosRenyi { m: usize },
    BarabasiAlbert { m: usize },
    WattsStrogatz { k: usize, p: f64 },
}

impl GeneratorParams {
    pub fn family(&self) -> Family {
        match self {
            GeneratorParams::ErdosRenyi { .. } => Family::ErdosRenyi,
            GeneratorParams::BarabasiAlbert { .. } => Family::BarabasiAlbert,
            GeneratorParams::WattsStrogatz { .. } => Family::WattsStrogatz,
        }
    }

    pub fn generate(&self, n: usize, seed: u64) -> Result<Digraph> {
        match *self {
            GeneratorParams::ErdosRenyi { m } => graph::gen_erdos_renyi(n, m, seed),
            GeneratorParams::BarabasiAlbert { m } => graph::gen_barabasi_albert(n, m, seed),
            GeneratorParams::WattsStrogatz { k, p } => graph::gen_watts_strogatz(n, k, p, seed),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub family: Family,
    pub parameter_set: u8,
    pub node_sizes: Vec<usize>,
    pub replicates: usize,
    pub seed: u64,
    pub mode: Mode,
    /// Timed repetitions per algorithm per graph (median reported), after
    /// one discarded warm-up.
    pub timing_reps: usize,
    /// Evaluate replicates on the rayon pool. Timings then compete for
    /// cores, so this is off by default.
    pub parallel: bool,
}

impl ExperimentConfig {
    /// Five node counts, ten graphs each.
    pub fn standard(family: Family, parameter_set: u8, seed: u64) -> Self {
        ExperimentConfig {
            family,
            parameter_set,
            node_sizes: STANDARD_NODE_SIZES.to_vec(),
            replicates: STANDARD_REPLICATES,
            seed,
            mode: Mode::PerNodeFreeze,
            timing_reps: 5,
            parallel: false,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.replicates == 0 {
            return Err(Error::InvalidParameter("replicates must be at least 1".into()));
        }
        if self.node_sizes.is_empty() {
            return Err(Error::InvalidParameter("node_sizes must not be empty".into()));
        }
        if self.timing_reps == 0 {
            return Err(Error::InvalidParameter("timing_reps must be at least 1".into()));
        }
        for &n in &self.node_sizes {
            self.family.params(self.parameter_set, n)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Experiment {
    /// SCC decomposition against Kosaraju.
    Scc,
    /// Diameter against Floyd–Warshall.
    Diameter,
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Experiment::Scc => "scc",
            Experiment::Diameter => "diameter",
        })
    }
}

/// One benchmarked graph. Timings are seconds.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRecord {
    pub experiment: Experiment,
    pub family: Family,
    pub parameter_set: Option<u8>,
    pub params: GeneratorParams,
    pub replicate: usize,
    pub seed: u64,
    pub mode: Mode,
    pub stats: GraphStats,
    pub t_consensus: f64,
    pub t_kosaraju: f64,
    pub t_floyd_warshall: Option<f64>,
    pub rounds_max: usize,
    pub element_ops: u64,
    pub correct: bool,
}

/// Median wall time of `reps` calls after one warm-up call.
fn median_seconds<T>(reps: usize, mut f: impl FnMut() -> T) -> f64 {
    black_box(f());
    let mut samples: Vec<f64> = (0..reps)
        .map(|_| {
            let start = Instant::now();
            black_box(f());
            start.elapsed().as_secs_f64()
        })
        .collect();
    samples.sort_by(f64::total_cmp);
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2.0
    }
}

struct Job {
    n: usize,
    replicate: usize,
    seed: u64,
    params: GeneratorParams,
}

fn evaluate(
    experiment: Experiment,
    job: &Job,
    parameter_set: Option<u8>,
    mode: Mode,
    timing_reps: usize,
) -> Result<ExperimentRecord> {
    let g = job.params.generate(job.n, job.seed)?;
    let mismatch = |detail: String| Error::OracleMismatch {
        seed: job.seed,
        detail,
        graph: graph::serialize_edge_list(&g, IdBase::Zero),
    };
    let opts = RunOptions {
        mode,
        ..Default::default()
    };

    let result = consensus::run(&g, opts)?;
    let stats = graph::graph_stats(&g)?;
    let consensus_diameter = consensus::finite_diameter_from_run(&result);
    if consensus_diameter != stats.finite_diameter {
        return Err(mismatch(format!(
            "consensus diameter {consensus_diameter} != BFS diameter {}",
            stats.finite_diameter
        )));
    }
    if result.max_rounds() != stats.finite_diameter + 1 {
        return Err(mismatch(format!(
            "{} rounds for finite diameter {}",
            result.max_rounds(),
            stats.finite_diameter
        )));
    }

    let (t_consensus, t_kosaraju, t_floyd_warshall) = match experiment {
        Experiment::Scc => {
            let ours = consensus::assemble_partition(&g, &result)?;
            let theirs = oracles::scc_kosaraju(&g)?;
            if !oracles::partitions_equal(&ours, &theirs)? {
                return Err(mismatch(format!(
                    "partition {:?} != Kosaraju {:?}",
                    ours.components(),
                    theirs.components()
                )));
            }
            let t_c = median_seconds(timing_reps, || {
                consensus::run(&g, opts).and_then(|r| consensus::assemble_partition(&g, &r))
            });
            let t_k = median_seconds(timing_reps, || oracles::scc_kosaraju(&g));
            (t_c, t_k, None)
        }
        Experiment::Diameter => {
            let fw = oracles::floyd_warshall_diameter(&g)?;
            if fw != consensus_diameter {
                return Err(mismatch(format!(
                    "consensus diameter {consensus_diameter} != Floyd-Warshall {fw}"
                )));
            }
            let t_c = median_seconds(timing_reps, || {
                consensus::run(&g, opts).map(|r| consensus::finite_diameter_from_run(&r))
            });
            let t_k = median_seconds(timing_reps, || oracles::scc_kosaraju(&g));
            let t_fw = median_seconds(timing_reps, || oracles::floyd_warshall_diameter(&g));
            (t_c, t_k, Some(t_fw))
        }
    };

    Ok(ExperimentRecord {
        experiment,
        family: job.params.family(),
        parameter_set,
        params: job.params,
        replicate: job.replicate,
        seed: job.seed,
        mode,
        stats,
        t_consensus,
        t_kosaraju,
        t_floyd_warshall,
        rounds_max: result.max_rounds(),
        element_ops: result.element_ops,
        correct: true,
    })
}

fn evaluate_all(
    experiment: Experiment,
    jobs: &[Job],
    parameter_set: Option<u8>,
    mode: Mode,
    timing_reps: usize,
    parallel: bool,
) -> Result<Vec<ExperimentRecord>> {
    let eval = |job: &Job| evaluate(experiment, job, parameter_set, mode, timing_reps);
    if parallel {
        jobs.par_iter().map(eval).collect()
    } else {
        jobs.iter().map(eval).collect()
    }
}

/// Generates `replicates` graphs per node count, checks the engine against
/// Kosaraju and the BFS diameter, and records timings.
///
/// Graph seeds are drawn from a stream seeded by `cfg.seed`, so the graph
/// sequence is reproducible. Records are ordered by node count, then
/// replicate. Any disagreement with an oracle aborts with the offending
/// graph.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRecord>> {
    cfg.validate()?;
    let mut seeds = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut jobs = Vec::with_capacity(cfg.node_sizes.len() * cfg.replicates);
    for &n in &cfg.node_sizes {
        let params = cfg.family.params(cfg.parameter_set, n)?;
        for replicate in 0..cfg.replicates {
            jobs.push(Job {
                n,
                replicate,
                seed: seeds.next_u64(),
                params,
            });
        }
    }
    evaluate_all(
        Experiment::Scc,
        &jobs,
        Some(cfg.parameter_set),
        cfg.mode,
        cfg.timing_reps,
        cfg.parallel,
    )
}

/// Ten graphs per family at 25 nodes; consensus diameter against
/// Floyd–Warshall.
pub fn diameter_benchmark(seed: u64, mode: Mode, timing_reps: usize) -> Result<Vec<ExperimentRecord>> {
    if timing_reps == 0 {
        return Err(Error::InvalidParameter("timing_reps must be at least 1".into()));
    }
    let mut seeds = ChaCha8Rng::seed_from_u64(seed);
    let jobs: Vec<Job> = Family::ALL
        .iter()
        .flat_map(|family| {
            let params = family.diameter_bench_params();
            (0..DIAMETER_BENCH_GRAPHS)
                .map(|replicate| (params, replicate))
                .collect::<Vec<_>>()
        })
        .map(|(params, replicate)| Job {
            n: DIAMETER_BENCH_NODES,
            replicate,
            seed: seeds.next_u64(),
            params,
        })
        .collect();
    evaluate_all(Experiment::Diameter, &jobs, None, mode, timing_reps, false)
}
