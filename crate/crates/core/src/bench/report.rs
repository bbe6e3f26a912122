//! CSV and run-manifest output for experiment records.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use super::{ExperimentConfig, ExperimentRecord, GeneratorParams, WS_LATTICE_DEGREE};
use crate::error::{Error, Result};

/// Column order of [`write_csv`]. Timings are seconds.
pub const CSV_COLUMNS: [&str; 20] = [
    "experiment",
    "family",
    "parameter_set",
    "n",
    "gen_m",
    "gen_k",
    "gen_p",
    "replicate",
    "seed",
    "mode",
    "edges",
    "d_in_max",
    "finite_diameter",
    "num_sccs",
    "rounds_max",
    "element_ops",
    "t_consensus_s",
    "t_kosaraju_s",
    "t_floyd_warshall_s",
    "correct",
];

/// Formats a real with six significant digits, `%g` style.
pub fn format_sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn row(r: &ExperimentRecord) -> Vec<String> {
    let (gen_m, gen_k, gen_p) = match r.params {
        GeneratorParams::ErdosRenyi { m } | GeneratorParams::BarabasiAlbert { m } => {
            (m.to_string(), String::new(), String::new())
        }
        GeneratorParams::WattsStrogatz { k, p } => (String::new(), k.to_string(), format_sig6(p)),
    };
    vec![
        r.experiment.to_string(),
        r.family.to_string(),
        r.parameter_set.map(|p| p.to_string()).unwrap_or_default(),
        r.stats.n.to_string(),
        gen_m,
        gen_k,
        gen_p,
        r.replicate.to_string(),
        r.seed.to_string(),
        r.mode.to_string(),
        r.stats.m.to_string(),
        r.stats.d_in_max.to_string(),
        r.stats.finite_diameter.to_string(),
        r.stats.num_sccs.to_string(),
        r.rounds_max.to_string(),
        r.element_ops.to_string(),
        format_sig6(r.t_consensus),
        format_sig6(r.t_kosaraju),
        r.t_floyd_warshall.map(format_sig6).unwrap_or_default(),
        r.correct.to_string(),
    ]
}

pub fn write_csv<W: Write>(records: &[ExperimentRecord], out: W) -> Result<()> {
    if records.is_empty() {
        return Err(Error::InvalidParameter("no records to write".into()));
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for r in records {
        w.write_record(row(r))?;
    }
    w.flush()?;
    Ok(())
}

/// Writes one header row plus one row per record to `path`.
pub fn emit_csv(records: &[ExperimentRecord], path: impl AsRef<Path>) -> Result<()> {
    if records.is_empty() {
        return Err(Error::InvalidParameter("no records to write".into()));
    }
    let file = File::create(path)?;
    write_csv(records, BufWriter::new(file))
}

/// Reproducibility manifest: tool version, configuration and the modelling
/// conventions that are not visible in the CSV itself.
pub fn write_manifest(
    path: impl AsRef<Path>,
    configs: &[ExperimentConfig],
    diameter_seed: Option<u64>,
    timing_reps: usize,
) -> io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "tool = {} {}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION"))?;
    writeln!(
        w,
        "timing = median of {timing_reps} runs after 1 discarded warm-up, monotonic clock"
    )?;
    writeln!(w, "orientation = undirected BA/WS edges get one direction by a fair coin")?;
    writeln!(w, "er_edges_set1 = nearest integer to n^(2/3)")?;
    writeln!(w, "ba_seed_graph = clique on the first m nodes")?;
    writeln!(w, "ws_lattice_degree = {WS_LATTICE_DEGREE}")?;
    for (i, cfg) in configs.iter().enumerate() {
        let sizes: Vec<String> = cfg.node_sizes.iter().map(usize::to_string).collect();
        writeln!(w)?;
        writeln!(w, "[experiment {}]", i + 1)?;
        writeln!(w, "family = {}", cfg.family)?;
        writeln!(w, "parameter_set = {}", cfg.parameter_set)?;
        writeln!(w, "node_sizes = {}", sizes.join(","))?;
        writeln!(w, "replicates = {}", cfg.replicates)?;
        writeln!(w, "seed = {}", cfg.seed)?;
        writeln!(w, "mode = {}", cfg.mode)?;
    }
    if let Some(seed) = diameter_seed {
        writeln!(w)?;
        writeln!(w, "[diameter benchmark]")?;
        writeln!(w, "nodes = {}", super::DIAMETER_BENCH_NODES)?;
        writeln!(w, "graphs_per_family = {}", super::DIAMETER_BENCH_GRAPHS)?;
        writeln!(w, "er_edges = 50")?;
        writeln!(w, "ba_m = 3")?;
        writeln!(w, "ws_k = {WS_LATTICE_DEGREE}")?;
        writeln!(w, "ws_p = 0.2")?;
        writeln!(w, "seed = {seed}")?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::{run_experiment, Family};

    #[test]
    fn sig6_formatting() {
        assert_eq!(format_sig6(0.0), "0");
        assert_eq!(format_sig6(1.0), "1");
        assert_eq!(format_sig6(8.633_603_4), "8.6336");
        assert_eq!(format_sig6(0.000_123_456_78), "0.000123457");
        assert_eq!(format_sig6(1.234_567_8e-7), "1.23457e-7");
        assert_eq!(format_sig6(123_456_789.0), "1.23457e8");
        assert_eq!(format_sig6(0.2), "0.2");
        assert_eq!(format_sig6(-2.5), "-2.5");
    }

    #[test]
    fn one_record_two_lines() {
        let cfg = ExperimentConfig {
            node_sizes: vec![100],
            replicates: 1,
            timing_reps: 1,
            ..ExperimentConfig::standard(Family::WattsStrogatz, 2, 1)
        };
        let records = run_experiment(&cfg).unwrap();
        let mut buf = Vec::new();
        write_csv(&records, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], CSV_COLUMNS.join(","));
        assert!(lines[1].starts_with("scc,WS,2,100,,4,0.2,0,"), "{}", lines[1]);
        assert!(lines[1].ends_with(",true"));
    }

    #[test]
    fn empty_records_rejected() {
        let dir = tempfile::tempdir().unwrap();
        assert!(emit_csv(&[], dir.path().join("x.csv")).is_err());
        assert!(write_csv(&[], Vec::new()).is_err());
    }

    #[test]
    fn unwritable_path() {
        let cfg = ExperimentConfig {
            node_sizes: vec![100],
            replicates: 1,
            timing_reps: 1,
            ..ExperimentConfig::standard(Family::ErdosRenyi, 1, 1)
        };
        let records = run_experiment(&cfg).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let err = emit_csv(&records, dir.path().join("missing").join("x.csv")).unwrap_err();
        assert!(matches!(err, Error::Io(_)));
    }
}
