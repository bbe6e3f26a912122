//! Small hand-built graphs with known decompositions.
//!
//! Node ids are zero-based; the figures these come from label nodes from 1,
//! so label `k` is id `k - 1`.

use super::{Digraph, NodeId};

/// Six nodes, components {1,2}, {3,4}, {5,6} chained 2→3 and 4→5.
pub fn example_one() -> Digraph {
    from_labels(6, &[(1, 2), (2, 1), (2, 3), (3, 4), (4, 3), (4, 5), (5, 6), (6, 5)])
}

/// Complete digraph on `n` nodes (every ordered pair, no self-loops).
pub fn complete(n: usize) -> Digraph {
    let edges = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
    Digraph::from_edges(n, edges).expect("ids in range")
}

/// Nine-node out-tree rooted at label 1 with depth 3.
pub fn tree_nine() -> Digraph {
    from_labels(
        9,
        &[(1, 2), (1, 3), (2, 4), (2, 5), (2, 6), (3, 7), (4, 8), (4, 9)],
    )
}

/// Directed cycle on ids 0..3 with a feeder chain of `chain_len` extra nodes
/// ending in id 0: `3 → 4 → … → 3+chain_len-1 → 0`.
///
/// With a nonempty chain, id 0 has the smallest in-eccentricity of the three
/// cycle nodes and id 2 the largest.
pub fn cycle_with_feeder(chain_len: usize) -> Digraph {
    let n = 3 + chain_len;
    let mut edges = vec![(0, 1), (1, 2), (2, 0)];
    for i in 0..chain_len {
        let a = 3 + i;
        let b = if i + 1 == chain_len { 0 } else { a + 1 };
        edges.push((a, b));
    }
    Digraph::from_edges(n, edges).expect("ids in range")
}

fn from_labels(n: usize, labeled: &[(NodeId, NodeId)]) -> Digraph {
    Digraph::from_edges(n, labeled.iter().map(|&(u, v)| (u - 1, v - 1))).expect("ids in range")
}
