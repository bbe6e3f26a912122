//! Classical baselines: Kosaraju's two-pass DFS, BFS reachability and
//! distances, and Floyd–Warshall. These never touch the consensus engine and
//! serve as its correctness oracles.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Digraph, NodeId};
use crate::nodeset::NodeSet;
use crate::partition::SccPartition;

/// All-pairs unit-weight shortest path lengths; `None` is infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Length of the shortest path `from → to`, if one exists.
    pub fn get(&self, from: NodeId, to: NodeId) -> Option<u32> {
        self.dist[from * self.n + to]
    }

    /// Longest finite shortest path; 0 when no two distinct nodes are
    /// connected.
    pub fn finite_diameter(&self) -> usize {
        self.dist.iter().flatten().copied().max().unwrap_or(0) as usize
    }

    /// Largest finite distance from any node into `v`.
    pub fn in_eccentricity(&self, v: NodeId) -> usize {
        (0..self.n)
            .filter_map(|u| self.get(u, v))
            .max()
            .unwrap_or(0) as usize
    }
}

/// Exact SCC partition by Kosaraju's algorithm with explicit stacks.
pub fn scc_kosaraju(g: &Digraph) -> Result<SccPartition> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }

    // pass 1: post-order on the forward graph
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut stack: Vec<(NodeId, usize)> = Vec::new();
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        stack.push((root, 0));
        while let Some((v, next)) = stack.last_mut() {
            let out = g.out_adj(*v);
            if let Some(&w) = out.get(*next) {
                *next += 1;
                if !visited[w] {
                    visited[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(*v);
                stack.pop();
            }
        }
    }

    // pass 2: reverse post-order on the transposed graph
    let mut assigned = vec![false; n];
    let mut components = Vec::new();
    let mut frontier = Vec::new();
    for &root in order.iter().rev() {
        if assigned[root] {
            continue;
        }
        assigned[root] = true;
        frontier.push(root);
        let mut comp = Vec::new();
        while let Some(v) = frontier.pop() {
            comp.push(v);
            for &u in g.in_adj(v) {
                if !assigned[u] {
                    assigned[u] = true;
                    frontier.push(u);
                }
            }
        }
        components.push(comp);
    }

    SccPartition::from_components(n, components)
}

/// `{u : u reaches v}`, including `v` itself.
pub fn reach_set(g: &Digraph, v: NodeId) -> Result<NodeSet> {
    g.check_node(v)?;
    let n = g.node_count();
    let mut seen = NodeSet::singleton(n, v);
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for &u in g.in_adj(x) {
            if !seen.contains(u) {
                seen.insert(u);
                stack.push(u);
            }
        }
    }
    Ok(seen)
}

fn bfs_row(g: &Digraph, source: NodeId) -> Vec<Option<u32>> {
    let mut row = vec![None; g.node_count()];
    row[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = row[v].expect("queued nodes have a distance");
        for &w in g.out_adj(v) {
            if row[w].is_none() {
                row[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    row
}

/// One BFS per source, run in parallel; rows are assembled in source order.
pub fn all_pairs_bfs(g: &Digraph) -> Result<DistanceMatrix> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let rows: Vec<Vec<Option<u32>>> = (0..n).into_par_iter().map(|s| bfs_row(g, s)).collect();
    Ok(DistanceMatrix {
        n,
        dist: rows.into_iter().flatten().collect(),
    })
}

/// Unit-weight Floyd–Warshall distance matrix.
pub fn floyd_warshall(g: &Digraph) -> Result<DistanceMatrix> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    const INF: u32 = u32::MAX;
    let mut d = vec![INF; n * n];
    for v in 0..n {
        d[v * n + v] = 0;
    }
    for (u, v) in g.edges() {
        if u != v {
            d[u * n + v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i * n + k];
            if dik == INF {
                continue;
            }
            for j in 0..n {
                let dkj = d[k * n + j];
                if dkj != INF && dik + dkj < d[i * n + j] {
                    d[i * n + j] = dik + dkj;
                }
            }
        }
    }
    Ok(DistanceMatrix {
        n,
        dist: d.into_iter().map(|x| (x != INF).then_some(x)).collect(),
    })
}

pub fn floyd_warshall_diameter(g: &Digraph) -> Result<usize> {
    floyd_warshall(g).map(|d| d.finite_diameter())
}

/// Order-insensitive equality of two partitions over the same universe.
pub fn partitions_equal(a: &SccPartition, b: &SccPartition) -> Result<bool> {
    if a.universe() != b.universe() {
        return Err(Error::UniverseMismatch {
            left: a.universe(),
            right: b.universe(),
        });
    }
    // both are stored canonically
    Ok(a == b)
}
