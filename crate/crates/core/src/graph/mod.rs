//! Directed graph model and everything that produces graphs: edge-list I/O,
//! seeded random generators and the small hand-built fixtures.

mod edgelist;
pub mod fixtures;
mod generators;
mod stats;

pub use edgelist::{parse_edge_list, serialize_edge_list};
pub use generators::{
    gen_barabasi_albert, gen_erdos_renyi, gen_gnp, gen_watts_strogatz, round_two_thirds_power,
};
pub use stats::{graph_stats, GraphStats};

use crate::error::{Error, Result};

/// Dense node index in `[0, n)`.
pub type NodeId = usize;

/// Whether external node labels start at 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IdBase {
    #[default]
    Zero,
    One,
}

impl IdBase {
    pub fn offset(self) -> usize {
        match self {
            IdBase::Zero => 0,
            IdBase::One => 1,
        }
    }

    pub fn from_offset(offset: u8) -> Option<Self> {
        match offset {
            0 => Some(IdBase::Zero),
            1 => Some(IdBase::One),
            _ => None,
        }
    }
}

/// A simple directed graph with sorted in- and out-adjacency lists.
///
/// Each ordered pair appears at most once. Self-loops are allowed but carry
/// no information for the consensus engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    m: usize,
    in_adj: Vec<Vec<NodeId>>,
    out_adj: Vec<Vec<NodeId>>,
}

impl Digraph {
    pub fn edgeless(n: usize) -> Self {
        Digraph {
            n,
            m: 0,
            in_adj: vec![Vec::new(); n],
            out_adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from `(source, target)` pairs; duplicates collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (NodeId, NodeId)>) -> Result<Self> {
        let mut out_adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for node in [u, v] {
                if node >= n {
                    return Err(Error::NodeOutOfRange { node, n });
                }
            }
            out_adj[u].push(v);
        }
        let mut in_adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, targets) in out_adj.iter_mut().enumerate() {
            targets.sort_unstable();
            targets.dedup();
            m += targets.len();
            for &v in targets.iter() {
                in_adj[v].push(u);
            }
        }
        // in_adj is filled in ascending source order, so it is already sorted.
        Ok(Digraph {
            n,
            m,
            in_adj,
            out_adj,
        })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Edges in lexicographic `(source, target)` order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        u < self.n && self.out_adj[u].binary_search(&v).is_ok()
    }

    /// Sources of all edges into `v`, ascending.
    pub fn in_neighbors(&self, v: NodeId) -> Result<&[NodeId]> {
        self.check_node(v)?;
        Ok(&self.in_adj[v])
    }

    /// Targets of all edges out of `v`, ascending.
    pub fn out_neighbors(&self, v: NodeId) -> Result<&[NodeId]> {
        self.check_node(v)?;
        Ok(&self.out_adj[v])
    }

    pub(crate) fn in_adj(&self, v: NodeId) -> &[NodeId] {
        &self.in_adj[v]
    }

    pub(crate) fn out_adj(&self, v: NodeId) -> &[NodeId] {
        &self.out_adj[v]
    }

    pub fn in_degree(&self, v: NodeId) -> Result<usize> {
        self.in_neighbors(v).map(<[_]>::len)
    }

    pub fn max_in_degree(&self) -> Result<usize> {
        self.in_adj
            .iter()
            .map(Vec::len)
            .max()
            .ok_or(Error::EmptyGraph)
    }

    /// The graph with every edge reversed.
    pub fn transpose(&self) -> Digraph {
        Digraph {
            n: self.n,
            m: self.m,
            in_adj: self.out_adj.clone(),
            out_adj: self.in_adj.clone(),
        }
    }

    pub(crate) fn check_node(&self, v: NodeId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node: v, n: self.n })
        }
    }
}
