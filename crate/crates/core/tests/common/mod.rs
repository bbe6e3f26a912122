//! Shared test support: the seeded graph corpus and engine-independent
//! brute-force oracles.

#![allow(dead_code)]

use std::collections::VecDeque;

use consensus_scc::graph::{
    gen_barabasi_albert, gen_erdos_renyi, gen_gnp, gen_watts_strogatz, Digraph,
};
use consensus_scc::{Mode, NodeId, RunResult};

pub struct Case {
    pub label: String,
    pub graph: Digraph,
}

/// At least 500 graphs: uniform random digraphs with n in 1..=60 at four
/// densities, plus ER/BA/WS at 25 and 50 nodes.
pub fn corpus() -> Vec<Case> {
    let mut cases = Vec::new();
    for (pi, p) in [0.02, 0.05, 0.1, 0.3].into_iter().enumerate() {
        for i in 0..120u64 {
            let n = 1 + ((i * 37 + pi as u64 * 11) % 60) as usize;
            let seed = 1_000 * pi as u64 + i;
            cases.push(Case {
                label: format!("gnp(n={n}, p={p}, seed={seed})"),
                graph: gen_gnp(n, p, seed).unwrap(),
            });
        }
    }
    for n in [25, 50] {
        for i in 0..10u64 {
            let seed = 50_000 + n as u64 * 100 + i;
            let m = if i % 2 == 0 { 2 * n } else { n };
            cases.push(Case {
                label: format!("er(n={n}, m={m}, seed={seed})"),
                graph: gen_erdos_renyi(n, m, seed).unwrap(),
            });
            let m = 1 + (i as usize % 3);
            cases.push(Case {
                label: format!("ba(n={n}, m={m}, seed={seed})"),
                graph: gen_barabasi_albert(n, m, seed).unwrap(),
            });
            let p = if i % 2 == 0 { 0.2 } else { 0.8 };
            cases.push(Case {
                label: format!("ws(n={n}, k=4, p={p}, seed={seed})"),
                graph: gen_watts_strogatz(n, 4, p, seed).unwrap(),
            });
        }
    }
    cases
}

/// `dist[u][v]`: BFS distance from u to v, `None` if unreachable.
pub fn distances(g: &Digraph) -> Vec<Vec<Option<usize>>> {
    let n = g.node_count();
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &w in g.out_neighbors(v).unwrap() {
                    if d[w].is_none() {
                        d[w] = Some(d[v].unwrap() + 1);
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

/// `reaches[u][v]`: u has a directed path to v (every node reaches itself).
pub fn reachability(g: &Digraph) -> Vec<Vec<bool>> {
    distances(g)
        .into_iter()
        .map(|row| row.into_iter().map(|d| d.is_some()).collect())
        .collect()
}

/// Components by mutual reachability, each sorted, ordered by first member.
pub fn brute_force_sccs(g: &Digraph) -> Vec<Vec<NodeId>> {
    let n = g.node_count();
    let r = reachability(g);
    let mut assigned = vec![false; n];
    let mut comps = Vec::new();
    for u in 0..n {
        if assigned[u] {
            continue;
        }
        let comp: Vec<NodeId> = (0..n).filter(|&v| r[u][v] && r[v][u]).collect();
        for &v in &comp {
            assigned[v] = true;
        }
        comps.push(comp);
    }
    comps
}

pub fn brute_force_diameter(g: &Digraph) -> usize {
    distances(g).iter().flatten().flatten().copied().max().unwrap_or(0)
}

/// Checks every per-round and final-state property of a traced run against
/// brute-force reachability. Returns one message per violation.
pub fn invariant_violations(g: &Digraph, r: &RunResult) -> Vec<String> {
    let mut out = Vec::new();
    let n = g.node_count();
    let Some(history) = r.history.as_ref() else {
        return vec!["run has no history".into()];
    };
    let dist = distances(g);
    let reach = reachability(g);
    let same_scc = |a: NodeId, b: NodeId| reach[a][b] && reach[b][a];
    let in_ecc: Vec<usize> = (0..n)
        .map(|v| (0..n).filter_map(|u| dist[u][v]).max().unwrap_or(0))
        .collect();
    let diameter = in_ecc.iter().copied().max().unwrap_or(0);

    for v in 0..n {
        for (k, snap) in history.iter().enumerate() {
            let s = &snap.states[v];
            if s.max_reach != s.reach.len() {
                out.push(format!("node {v} round {k}: y={} but |x|={}", s.max_reach, s.reach.len()));
            }
            if !s.reach.contains(v) {
                out.push(format!("node {v} round {k}: own id missing from x"));
            }
            if k == 0 {
                continue;
            }
            let before = &history[k - 1].states[v];
            if before.frozen {
                if s != before {
                    out.push(format!("node {v} round {k}: frozen state changed"));
                }
                continue;
            }
            if !before.reach.is_subset(&s.reach) {
                out.push(format!("node {v} round {k}: x shrank"));
            }
            let grew = s.reach.len() > before.reach.len();
            if !grew && !s.stable {
                out.push(format!("node {v} round {k}: |x| stalled without stabilising"));
            }
            if grew && s.stable {
                out.push(format!("node {v} round {k}: stabilised while |x| grew"));
            }
        }

        let last = &r.final_states[v];
        let oracle: Vec<NodeId> = (0..n).filter(|&u| reach[u][v]).collect();
        if last.reach.to_vec() != oracle {
            out.push(format!("node {v}: final x {} != reach set {oracle:?}", last.reach));
        }
        let expected_rounds = match r.mode {
            Mode::PerNodeFreeze => in_ecc[v] + 1,
            Mode::GlobalRounds => diameter + 1,
        };
        if r.rounds_per_node[v] != expected_rounds {
            out.push(format!(
                "node {v}: {} rounds, expected {expected_rounds}",
                r.rounds_per_node[v]
            ));
        }
        for j in last.candidates.iter() {
            if !same_scc(v, j) {
                out.push(format!("node {v}: candidate {j} outside its component"));
            }
        }
        let scc: Vec<NodeId> = (0..n).filter(|&u| same_scc(u, v)).collect();
        if r.mode == Mode::GlobalRounds && last.candidates.to_vec() != scc {
            out.push(format!("node {v}: global-rounds z {} != SCC {scc:?}", last.candidates));
        }
    }

    // the member of each component with the largest in-eccentricity sees it whole
    if r.mode == Mode::PerNodeFreeze {
        for comp in brute_force_sccs(g) {
            let top = *comp.iter().max_by_key(|&&v| (in_ecc[v], v)).unwrap();
            if r.final_states[top].candidates.to_vec() != comp {
                out.push(format!(
                    "component {comp:?}: top node {top} has z {}",
                    r.final_states[top].candidates
                ));
            }
        }
    }
    out
}
