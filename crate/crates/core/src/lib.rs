//! Strongly connected components and finite digraph diameter computed by a
//! synchronous, max-consensus-like round protocol.
//!
//! Every node repeatedly merges the id-sets of its in-neighbors, tracks the
//! largest reach-set cardinality it has seen, and stops once that value no
//! longer changes. The surviving candidate sets assemble into the SCC
//! partition, and the longest-running node gives the finite diameter.
//!
//! The crate is organised as:
//!
//! * [`graph`]: the [`Digraph`] model, edge-list I/O, statistics and seeded
//!   random generators (Erdős–Rényi, Barabási–Albert, Watts–Strogatz).
//! * [`consensus`]: the round engine, partition assembly, diameter
//!   extraction and trace tables.
//! * [`oracles`]: classical baselines (Kosaraju, BFS, Floyd–Warshall).
//! * [`bench`]: experiment runner, expected-cost estimators and CSV output.

pub mod bench;
pub mod consensus;
mod error;
pub mod graph;
mod nodeset;
pub mod oracles;
mod partition;

pub use consensus::{
    assemble_partition, finite_diameter_from_run, init_state, node_round, run, trace_table, Mode,
    NodeState, RoundSnapshot, RunOptions, RunResult, Schedule,
};
pub use error::{Error, Result};
pub use graph::{Digraph, GraphStats, IdBase, NodeId};
pub use nodeset::NodeSet;
pub use partition::SccPartition;
