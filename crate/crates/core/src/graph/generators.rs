//! Seeded random digraph generators.
//!
//! The Barabási–Albert and Watts–Strogatz models are undirected; after the
//! undirected graph is built each edge is given one direction by a fair
//! coin flip drawn from the same seeded stream. Every generator is
//! deterministic in its arguments.

use std::collections::BTreeSet;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Digraph, NodeId};
use crate::error::{Error, Result};

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n^(2/3)` rounded to the nearest integer.
pub fn round_two_thirds_power(n: usize) -> usize {
    (n as f64).powf(2.0 / 3.0).round() as usize
}

/// `m` distinct directed edges drawn uniformly without replacement from the
/// `n(n-1)` ordered pairs of distinct nodes.
pub fn gen_erdos_renyi(n: usize, m: usize, seed: u64) -> Result<Digraph> {
    let capacity = n.saturating_mul(n.saturating_sub(1));
    if m > capacity {
        return Err(Error::InvalidParameter(format!(
            "{m} edges requested but a {n}-node digraph holds at most {capacity}"
        )));
    }
    let mut rng = rng_for(seed);
    let edges = index::sample(&mut rng, capacity, m).into_iter().map(|i| {
        let u = i / (n - 1);
        let r = i % (n - 1);
        (u, if r >= u { r + 1 } else { r })
    });
    Digraph::from_edges(n, edges)
}

/// Every ordered pair of distinct nodes is an edge independently with
/// probability `p`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    check_probability(p)?;
    let mut rng = rng_for(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Digraph::from_edges(n, edges)
}

/// Preferential attachment grown from an `m`-node clique; each new node
/// attaches to `m` distinct existing nodes chosen with probability
/// proportional to degree.
pub fn gen_barabasi_albert(n: usize, m: usize, seed: u64) -> Result<Digraph> {
    if m == 0 || m >= n {
        return Err(Error::InvalidParameter(format!(
            "attachment count must satisfy 1 <= m < n (m={m}, n={n})"
        )));
    }
    let mut rng = rng_for(seed);
    let mut undirected: Vec<(NodeId, NodeId)> = Vec::with_capacity(m * (n - m) + m * m / 2);
    // one entry per edge endpoint, so uniform draws are degree-weighted
    let mut endpoints: Vec<NodeId> = Vec::new();

    for a in 0..m {
        for b in (a + 1)..m {
            undirected.push((a, b));
            endpoints.extend([a, b]);
        }
    }

    let mut targets = BTreeSet::new();
    for v in m..n {
        targets.clear();
        while targets.len() < m {
            let t = if endpoints.is_empty() {
                rng.gen_range(0..v)
            } else {
                endpoints[rng.gen_range(0..endpoints.len())]
            };
            targets.insert(t);
        }
        for &t in &targets {
            undirected.push((t, v));
            endpoints.extend([t, v]);
        }
    }

    orient(n, &undirected, &mut rng)
}

/// Ring lattice with `k` neighbours per node, each lattice edge rewired with
/// probability `p` to a uniformly chosen non-adjacent node.
pub fn gen_watts_strogatz(n: usize, k: usize, p: f64, seed: u64) -> Result<Digraph> {
    if !k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("k must be even, got {k}")));
    }
    if k >= n {
        return Err(Error::InvalidParameter(format!(
            "k must be smaller than n (k={k}, n={n})"
        )));
    }
    check_probability(p)?;
    let mut rng = rng_for(seed);
    let mut adj: Vec<BTreeSet<NodeId>> = vec![BTreeSet::new(); n];
    for u in 0..n {
        for j in 1..=k / 2 {
            let v = (u + j) % n;
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }

    for j in 1..=k / 2 {
        for u in 0..n {
            let v = (u + j) % n;
            if !rng.gen_bool(p) {
                continue;
            }
            if adj[u].len() >= n - 1 {
                continue;
            }
            let w = loop {
                let w = rng.gen_range(0..n);
                if w != u && !adj[u].contains(&w) {
                    break w;
                }
            };
            adj[u].remove(&v);
            adj[v].remove(&u);
            adj[u].insert(w);
            adj[w].insert(u);
        }
    }

    let undirected: Vec<(NodeId, NodeId)> = adj
        .iter()
        .enumerate()
        .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
        .collect();
    orient(n, &undirected, &mut rng)
}

fn orient(n: usize, undirected: &[(NodeId, NodeId)], rng: &mut ChaCha8Rng) -> Result<Digraph> {
    let directed = undirected
        .iter()
        .map(|&(a, b)| if rng.gen_bool(0.5) { (a, b) } else { (b, a) })
        .collect::<Vec<_>>();
    Digraph::from_edges(n, directed)
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "probability must lie in [0, 1], got {p}"
        )))
    }
}
