use super::RunResult;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::partition::SccPartition;

/// Builds the SCC partition from every node's final candidate set.
///
/// Each node joins the inclusion-maximal candidate set that contains it (or
/// its own singleton if none does). Under per-node freezing a node can stop
/// with a strict subset of its component, but every component's candidate
/// sets form a chain whose top is the whole component, so the maximal sets
/// are exactly the components. Two non-nested sets sharing a node mean the
/// engine is broken.
pub fn assemble_partition(g: &Digraph, result: &RunResult) -> Result<SccPartition> {
    let n = g.node_count();
    if result.final_states.len() != n {
        return Err(Error::InvalidParameter(format!(
            "run covers {} nodes but graph has {n}",
            result.final_states.len()
        )));
    }
    let sets: Vec<_> = result.final_states.iter().map(|s| &s.candidates).collect();

    let mut best: Vec<Option<usize>> = vec![None; n];
    for (j, set) in sets.iter().enumerate() {
        for i in set.iter() {
            best[i] = match best[i] {
                None => Some(j),
                Some(b) if sets[b].is_subset(set) => Some(j),
                Some(b) if set.is_subset(sets[b]) => Some(b),
                Some(b) => {
                    return Err(Error::Invariant(format!(
                        "node {i} lies in non-nested candidate sets {} (of {b}) and {} (of {j})",
                        sets[b], set
                    )))
                }
            };
        }
    }

    let mut components = Vec::new();
    for i in 0..n {
        let Some(b) = best[i] else {
            components.push(vec![i]);
            continue;
        };
        let chosen = sets[b];
        for k in chosen.iter() {
            let other = best[k].map(|c| sets[c]);
            if other != Some(chosen) {
                return Err(Error::Invariant(format!(
                    "nodes {i} and {k} disagree on their maximal candidate set"
                )));
            }
        }
        if chosen.iter().next() == Some(i) {
            components.push(chosen.to_vec());
        }
    }
    SccPartition::from_components(n, components)
}

/// Finite diameter: one less than the most rounds any node executed.
pub fn finite_diameter_from_run(result: &RunResult) -> usize {
    result.max_rounds().saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consensus::{run, Mode, RunOptions};
    use crate::graph::fixtures;
    use crate::nodeset::NodeSet;

    fn assemble(g: &Digraph, mode: Mode) -> SccPartition {
        let r = run(
            g,
            RunOptions {
                mode,
                ..Default::default()
            },
        )
        .unwrap();
        assemble_partition(g, &r).unwrap()
    }

    #[test]
    fn example_one_partition() {
        let g = fixtures::example_one();
        for mode in [Mode::PerNodeFreeze, Mode::GlobalRounds] {
            assert_eq!(
                assemble(&g, mode).components(),
                &[vec![0, 1], vec![2, 3], vec![4, 5]]
            );
        }
    }

    #[test]
    fn complete_graph_is_one_component() {
        assert_eq!(
            assemble(&fixtures::complete(5), Mode::PerNodeFreeze).components(),
            &[vec![0, 1, 2, 3, 4]]
        );
    }

    #[test]
    fn feeder_chain_needs_maximal_set_merge() {
        let g = fixtures::cycle_with_feeder(10);
        let r = run(&g, RunOptions::default()).unwrap();
        assert_eq!(r.candidates(0).to_vec(), vec![0]);
        assert_eq!(r.candidates(2).to_vec(), vec![0, 1, 2]);
        let p = assemble_partition(&g, &r).unwrap();
        let mut expected = vec![vec![0, 1, 2]];
        expected.extend((3..13).map(|v| vec![v]));
        assert_eq!(p.components(), expected.as_slice());
    }

    #[test]
    fn rejects_crossing_candidate_sets() {
        let g = fixtures::complete(3);
        let mut r = run(&g, RunOptions::default()).unwrap();
        r.final_states[0].candidates = NodeSet::from_ids(3, [0, 1]);
        r.final_states[1].candidates = NodeSet::from_ids(3, [1, 2]);
        r.final_states[2].candidates = NodeSet::from_ids(3, [1, 2]);
        assert!(matches!(
            assemble_partition(&g, &r),
            Err(Error::Invariant(_))
        ));
    }

    #[test]
    fn rejects_mismatched_graph() {
        let r = run(&fixtures::complete(3), RunOptions::default()).unwrap();
        assert!(assemble_partition(&fixtures::complete(4), &r).is_err());
    }

    #[test]
    fn diameter_from_runs() {
        let d = |g: &Digraph| finite_diameter_from_run(&run(g, RunOptions::default()).unwrap());
        assert_eq!(d(&fixtures::example_one()), 5);
        assert_eq!(d(&fixtures::complete(5)), 1);
        assert_eq!(d(&fixtures::tree_nine()), 3);
        assert_eq!(d(&Digraph::edgeless(1)), 0);
        assert_eq!(d(&Digraph::edgeless(3)), 0);
    }
}
