//! Synchronous round engine for the max-consensus-like SCC protocol.
//!
//! Each node `v` keeps
//!
//! * `reach`: ids known to have a directed path into `v` (starts as `{v}`),
//! * `max_reach`: the largest reach-set size seen among `v` and its
//!   in-neighbours,
//! * `candidates`: ids currently believed to share `v`'s component,
//! * `stable`: whether `max_reach` stopped changing this round,
//! * `iterations`: how many rounds `v` has executed.
//!
//! One round reads only the previous round's snapshot. A node unions its
//! in-neighbours' reach sets into its own, takes the maximum cardinality,
//! keeps as candidates the members of its new reach set whose previous
//! `max_reach` equals its own new value, and marks itself stable when its
//! `max_reach` is unchanged.
//!
//! After `r` rounds a node's reach set is exactly the set of nodes within
//! distance `r` of it, so a node stabilises on round `e + 1` where `e` is its
//! in-eccentricity. The longest-running node therefore executes `D + 1`
//! rounds for finite diameter `D`.

mod assemble;
mod trace;

pub use assemble::{assemble_partition, finite_diameter_from_run};
pub use trace::trace_table;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Digraph, NodeId};
use crate::nodeset::NodeSet;

/// Per-node protocol state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeState {
    pub reach: NodeSet,
    pub max_reach: usize,
    pub candidates: NodeSet,
    pub stable: bool,
    pub iterations: usize,
    /// Set once the node has stopped executing rounds.
    pub frozen: bool,
}

/// All node states at one global round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundSnapshot {
    pub round: usize,
    pub states: Vec<NodeState>,
}

/// When nodes stop executing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// A node stops as soon as it is stable; its last state stays readable.
    #[default]
    PerNodeFreeze,
    /// Every node runs every round until all nodes are stable at once.
    GlobalRounds,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::PerNodeFreeze => "per-node-freeze",
            Mode::GlobalRounds => "global-rounds",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "per-node-freeze" => Ok(Mode::PerNodeFreeze),
            "global-rounds" => Ok(Mode::GlobalRounds),
            _ => Err(Error::InvalidParameter(format!("unknown engine mode {s:?}"))),
        }
    }
}

/// How the node updates within one round are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Schedule {
    #[default]
    Sequential,
    /// Updates within a round run on the rayon pool.
    Parallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RunOptions {
    pub mode: Mode,
    pub schedule: Schedule,
    /// Keep every round's snapshot for [`trace_table`].
    pub trace: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub mode: Mode,
    pub final_states: Vec<NodeState>,
    /// Rounds each node executed; never zero.
    pub rounds_per_node: Vec<usize>,
    /// Number of global rounds until every node had stopped.
    pub total_rounds: usize,
    /// Set elements read while merging reach sets, summed over all nodes
    /// and rounds.
    pub element_ops: u64,
    /// Snapshot per round, starting with the initial state.
    pub history: Option<Vec<RoundSnapshot>>,
}

impl RunResult {
    pub fn max_rounds(&self) -> usize {
        self.rounds_per_node.iter().copied().max().unwrap_or(0)
    }

    /// Final candidate set of `v`, i.e. its local view of its component.
    pub fn candidates(&self, v: NodeId) -> &NodeSet {
        &self.final_states[v].candidates
    }
}

/// Initial state of node `v` in a graph with `n` nodes.
pub fn init_state(n: usize, v: NodeId) -> NodeState {
    NodeState {
        reach: NodeSet::singleton(n, v),
        max_reach: 1,
        candidates: NodeSet::empty(n),
        stable: false,
        iterations: 0,
        frozen: false,
    }
}

/// Executes one round for node `v` against the previous snapshot.
pub fn node_round(v: NodeId, g: &Digraph, snap: &RoundSnapshot) -> Result<NodeState> {
    g.check_node(v)?;
    if snap.states.len() != g.node_count() {
        return Err(Error::InvalidParameter(format!(
            "snapshot holds {} states for a {}-node graph",
            snap.states.len(),
            g.node_count()
        )));
    }
    if snap.states[v].frozen {
        return Err(Error::NodeFrozen(v));
    }
    Ok(advance(v, g, &snap.states).0)
}

/// The per-node update; returns the new state and the number of set
/// elements read while merging.
fn advance(v: NodeId, g: &Digraph, prev: &[NodeState]) -> (NodeState, u64) {
    let own = &prev[v];
    let mut reach = own.reach.clone();
    let mut ops = reach.len() as u64;
    let mut neighbor_max = 0;
    for &u in g.in_adj(v) {
        let theirs = &prev[u].reach;
        let size = theirs.len();
        ops += size as u64;
        neighbor_max = neighbor_max.max(size);
        reach.union_with(theirs);
    }
    let max_reach = neighbor_max.max(reach.len());

    let mut candidates = NodeSet::empty(prev.len());
    for j in reach.iter().filter(|&j| prev[j].max_reach == max_reach) {
        candidates.insert(j);
    }
    let stable = max_reach == own.max_reach;

    let state = NodeState {
        reach,
        max_reach,
        candidates,
        stable,
        iterations: own.iterations + 1,
        frozen: stable,
    };
    (state, ops)
}

/// Runs synchronized rounds until every node has stopped.
pub fn run(g: &Digraph, opts: RunOptions) -> Result<RunResult> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    // rounds never exceed the longest shortest path plus one, which is < n + 1
    let round_cap = n + 2;

    let mut current = RoundSnapshot {
        round: 0,
        states: (0..n).map(|v| init_state(n, v)).collect(),
    };
    let mut history = opts.trace.then(|| vec![current.clone()]);
    let mut element_ops = 0u64;

    while !current.states.iter().all(|s| s.frozen) {
        if current.round >= round_cap {
            return Err(Error::Invariant(format!(
                "no convergence after {round_cap} rounds on a {n}-node graph"
            )));
        }
        let prev = &current.states;
        let step = |v: NodeId| -> (NodeState, u64) {
            if prev[v].frozen {
                (prev[v].clone(), 0)
            } else {
                advance(v, g, prev)
            }
        };
        let updates: Vec<(NodeState, u64)> = match opts.schedule {
            Schedule::Sequential => (0..n).map(step).collect(),
            Schedule::Parallel => (0..n).into_par_iter().map(step).collect(),
        };

        let mut states = Vec::with_capacity(n);
        for (state, ops) in updates {
            element_ops += ops;
            states.push(state);
        }
        if opts.mode == Mode::GlobalRounds {
            let all_stable = states.iter().all(|s| s.stable);
            for s in &mut states {
                s.frozen = all_stable;
            }
        }
        current = RoundSnapshot {
            round: current.round + 1,
            states,
        };
        if let Some(h) = history.as_mut() {
            h.push(current.clone());
        }
    }

    let rounds_per_node = current.states.iter().map(|s| s.iterations).collect();
    Ok(RunResult {
        mode: opts.mode,
        total_rounds: current.round,
        final_states: current.states,
        rounds_per_node,
        element_ops,
        history,
    })
}
