//! Acceptance suite. Each criterion prints one PASS/FAIL line; the test
//! fails if any criterion fails. Run with `--nocapture` to see the report.

mod common;

use std::time::{Duration, Instant};

use consensus_scc::bench::{
    expected_cost_ba, expected_cost_er, expected_cost_ws, run_experiment, write_csv,
    ExperimentConfig, Family, CSV_COLUMNS,
};
use consensus_scc::graph::fixtures;
use consensus_scc::oracles::{all_pairs_bfs, floyd_warshall_diameter, scc_kosaraju};
use consensus_scc::{
    assemble_partition, finite_diameter_from_run, run, trace_table, Digraph, IdBase, Mode,
    RunOptions, Schedule,
};

const EXAMPLE_ONE: &str = include_str!("golden/example_one.tsv");
const COMPLETE_FIVE: &str = include_str!("golden/complete_five.tsv");
const TREE_NINE: &str = include_str!("golden/tree_nine.tsv");

/// Relative tolerance for the closed-form cost checks.
const COST_REL_TOL: f64 = 1e-9;
const GOLDEN_BUDGET: Duration = Duration::from_secs(1);
const CORPUS_BUDGET: Duration = Duration::from_secs(30);

type Outcome = Result<String, String>;

fn traced(g: &Digraph, mode: Mode, schedule: Schedule) -> consensus_scc::RunResult {
    run(g, RunOptions { mode, schedule, trace: true }).unwrap()
}

fn criterion_1_golden_traces() -> Outcome {
    let start = Instant::now();
    for (name, g, expected) in [
        ("example one", fixtures::example_one(), EXAMPLE_ONE),
        ("complete K5", fixtures::complete(5), COMPLETE_FIVE),
        ("tree", fixtures::tree_nine(), TREE_NINE),
    ] {
        let r = traced(&g, Mode::GlobalRounds, Schedule::Sequential);
        let table = trace_table(&r, IdBase::One).map_err(|e| e.to_string())?;
        if table != expected {
            return Err(format!("{name}: trace differs from the published table"));
        }
    }
    let t6 = EXAMPLE_ONE.lines().find(|l| l.contains("z[3]")).unwrap();
    if t6.split('\t').nth(7) != Some("{3,5}") {
        return Err("transient z6[3] = {3,5} missing".into());
    }
    let elapsed = start.elapsed();
    if elapsed > GOLDEN_BUDGET {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("3 tables exact in {elapsed:?}"))
}

fn criterion_2_partition_equivalence(corpus: &[common::Case]) -> Outcome {
    let start = Instant::now();
    for case in corpus {
        let expected = scc_kosaraju(&case.graph).unwrap();
        for mode in [Mode::PerNodeFreeze, Mode::GlobalRounds] {
            let r = run(&case.graph, RunOptions { mode, ..Default::default() }).unwrap();
            let got = assemble_partition(&case.graph, &r).map_err(|e| format!("{}: {e}", case.label))?;
            if got != expected {
                return Err(format!("{} ({mode}): partition differs from Kosaraju", case.label));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > CORPUS_BUDGET {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{} graphs x 2 modes in {elapsed:?}", corpus.len()))
}

fn criterion_3_adversarial() -> Outcome {
    let g = fixtures::cycle_with_feeder(10);
    let mut expected = vec![vec![0, 1, 2]];
    expected.extend((3..13).map(|v| vec![v]));

    let frozen = run(&g, RunOptions::default()).unwrap();
    if frozen.candidates(0).to_vec() != vec![0] {
        return Err(format!("node 1 froze with {} instead of {{1}}", frozen.candidates(0)));
    }
    let p = assemble_partition(&g, &frozen).map_err(|e| e.to_string())?;
    if p.components() != expected.as_slice() {
        return Err(format!("per-node-freeze partition {:?}", p.components()));
    }

    let global = run(&g, RunOptions { mode: Mode::GlobalRounds, ..Default::default() }).unwrap();
    for v in 0..13 {
        let want = if v < 3 { vec![0, 1, 2] } else { vec![v] };
        if global.candidates(v).to_vec() != want {
            return Err(format!("global-rounds z of node {v} is {}", global.candidates(v)));
        }
    }
    Ok("maximal-set merge and node-exact global z".into())
}

fn criterion_4_diameter_identity(corpus: &[common::Case]) -> Outcome {
    let mut checked = 0;
    for case in corpus.iter().filter(|c| c.graph.edge_count() > 0) {
        let g = &case.graph;
        let bfs = all_pairs_bfs(g).unwrap().finite_diameter();
        let fw = floyd_warshall_diameter(g).unwrap();
        for mode in [Mode::PerNodeFreeze, Mode::GlobalRounds] {
            let r = run(g, RunOptions { mode, ..Default::default() }).unwrap();
            if r.max_rounds() != bfs + 1 {
                return Err(format!("{} ({mode}): {} rounds, D={bfs}", case.label, r.max_rounds()));
            }
            if finite_diameter_from_run(&r) != fw {
                return Err(format!("{} ({mode}): diameter != Floyd-Warshall {fw}", case.label));
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} graphs with edges"))
}

fn criterion_5_invariants(corpus: &[common::Case]) -> Outcome {
    let mut total = 0;
    for case in corpus {
        for mode in [Mode::PerNodeFreeze, Mode::GlobalRounds] {
            let r = traced(&case.graph, mode, Schedule::Sequential);
            let v = common::invariant_violations(&case.graph, &r);
            if let Some(first) = v.first() {
                return Err(format!("{} ({mode}): {first} (+{} more)", case.label, v.len() - 1));
            }
            total += 1;
        }
    }
    Ok(format!("0 violations over {total} traced runs"))
}

fn rel_close(a: f64, b: f64) -> bool {
    (a - b).abs() <= COST_REL_TOL * b.abs()
}

fn criterion_6_cost_formulas() -> Outcome {
    // Independent re-evaluation of the printed formulas.
    let gamma = 0.577_215_664_901_532_9_f64;
    let ln = f64::ln;

    let er = expected_cost_er(500, 500).map_err(|e| e.to_string())?;
    let er_path = (ln(500.0) - gamma) / ln(2.0 * 500.0 / 500.0) + 0.5;
    // 30-digit evaluation: 8.63303810738521989296454076906
    let er_ref = 8.633_038_107_385_22;

    let ba = expected_cost_ba(100, 2).map_err(|e| e.to_string())?;
    let ba_path = (ln(100.0) - ln(1.0) - 1.0 - gamma) / (ln(ln(100.0)) + ln(1.0)) + 1.5;
    let ba_ref = 3.482_710_134_365_972;

    let ws = expected_cost_ws(500, 4, 0.5).map_err(|e| e.to_string())?;
    let ws_p1 = 4.0 * ln(500.0) / ln(4.0);
    let ws_p1_ref = 17.931_568_569_324_174;

    let checks = [
        ("ER degree", er.expected_avg_degree, 2.0),
        ("ER path", er.expected_avg_path_length, er_path),
        ("ER path (30-digit)", er.expected_avg_path_length, er_ref),
        ("ER cost", er.expected_cost, 2.0 * er_path),
        ("BA degree", ba.expected_avg_degree, 4.0),
        ("BA path", ba.expected_avg_path_length, ba_path),
        ("BA path (30-digit)", ba.expected_avg_path_length, ba_ref),
        ("BA cost", ba.expected_cost, 4.0 * ba_path),
        ("WS p->0 cost", ws.ordered.expected_cost, 250.0),
        ("WS p->1 cost", ws.random.expected_cost, ws_p1),
        ("WS p->1 cost (30-digit)", ws.random.expected_cost, ws_p1_ref),
    ];
    for (name, got, want) in checks {
        if !rel_close(got, want) {
            return Err(format!("{name}: {got} vs {want}"));
        }
    }
    Ok(format!("{} values within {COST_REL_TOL:e} relative", checks.len()))
}

fn criterion_7_experiments() -> Outcome {
    let start = Instant::now();
    let mut all = Vec::new();
    for family in Family::ALL {
        for set in [1, 2] {
            let cfg = ExperimentConfig::standard(family, set, 2024);
            let records = run_experiment(&cfg).map_err(|e| format!("{family} set {set}: {e}"))?;
            if records.len() != 50 {
                return Err(format!("{family} set {set}: {} records", records.len()));
            }
            all.extend(records);
        }
    }
    if let Some(bad) = all
        .iter()
        .find(|r| !r.correct || r.rounds_max != r.stats.finite_diameter + 1)
    {
        return Err(format!("record {bad:?} violates correctness"));
    }

    let mut buf = Vec::new();
    write_csv(&all, &mut buf).map_err(|e| e.to_string())?;
    let mut reader = csv::Reader::from_reader(buf.as_slice());
    let header: Vec<String> = reader.headers().unwrap().iter().map(str::to_string).collect();
    if header != CSV_COLUMNS {
        return Err(format!("unexpected header {header:?}"));
    }
    let rows: Vec<csv::StringRecord> = reader.records().collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    if rows.len() != 300 || rows.iter().any(|r| r.len() != CSV_COLUMNS.len() || &r[19] != "true") {
        return Err("CSV is not 300 well-formed rows".into());
    }
    Ok(format!("300 records correct, CSV well-formed, {:?}", start.elapsed()))
}

fn criterion_8_determinism() -> Outcome {
    for g in [fixtures::example_one(), fixtures::complete(5), fixtures::tree_nine()] {
        for mode in [Mode::PerNodeFreeze, Mode::GlobalRounds] {
            let seq = traced(&g, mode, Schedule::Sequential);
            let par = traced(&g, mode, Schedule::Parallel);
            let p_seq = assemble_partition(&g, &seq).unwrap();
            let p_par = assemble_partition(&g, &par).unwrap();
            if p_seq != p_par || seq.rounds_per_node != par.rounds_per_node {
                return Err(format!("{mode}: partition or rounds differ"));
            }
            let t_seq = trace_table(&seq, IdBase::One).unwrap();
            let t_par = trace_table(&par, IdBase::One).unwrap();
            if t_seq.as_bytes() != t_par.as_bytes() {
                return Err(format!("{mode}: traces differ"));
            }
        }
    }
    Ok("partitions, rounds and traces byte-identical".into())
}

fn main() {
    let corpus = common::corpus();
    assert!(corpus.len() >= 500);

    let results: Vec<(&str, Outcome)> = vec![
        ("1 golden traces", criterion_1_golden_traces()),
        ("2 partition oracle equivalence", criterion_2_partition_equivalence(&corpus)),
        ("3 adversarial feeder chain", criterion_3_adversarial()),
        ("4 diameter identity", criterion_4_diameter_identity(&corpus)),
        ("5 invariant suite", criterion_5_invariants(&corpus)),
        ("6 expected-cost formulas", criterion_6_cost_formulas()),
        ("7 experiment reproduction", criterion_7_experiments()),
        ("8 determinism", criterion_8_determinism()),
    ];

    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("[PASS] criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {name}: {detail}");
            }
        }
    }
    println!("{} of {} acceptance criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
