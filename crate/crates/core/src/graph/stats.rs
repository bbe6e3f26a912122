use super::Digraph;
use crate::error::Result;
use crate::oracles;

/// Summary statistics reported for every benchmarked graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub d_in_max: usize,
    pub finite_diameter: usize,
    pub num_sccs: usize,
}

/// Computes [`GraphStats`] using the classical oracles (BFS diameter,
/// Kosaraju components), independent of the consensus engine.
pub fn graph_stats(g: &Digraph) -> Result<GraphStats> {
    let d_in_max = g.max_in_degree()?;
    Ok(GraphStats {
        n: g.node_count(),
        m: g.edge_count(),
        d_in_max,
        finite_diameter: oracles::all_pairs_bfs(g)?.finite_diameter(),
        num_sccs: oracles::scc_kosaraju(g)?.len(),
    })
}
