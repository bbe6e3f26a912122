use crate::error::{Error, Result};
use crate::graph::NodeId;

/// A partition of the nodes `[0, n)` into disjoint, nonempty components.
///
/// Stored canonically: each component sorted ascending, components ordered
/// by their smallest member. Two partitions of the same set family are
/// therefore structurally equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccPartition {
    components: Vec<Vec<NodeId>>,
    component_of: Vec<usize>,
}

impl SccPartition {
    /// Validates that `components` is a disjoint cover of `[0, n)`.
    pub fn from_components(n: usize, components: Vec<Vec<NodeId>>) -> Result<Self> {
        let mut components: Vec<Vec<NodeId>> = components
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        if components.iter().any(Vec::is_empty) {
            return Err(Error::Invariant("partition contains an empty component".into()));
        }
        components.sort_unstable_by_key(|c| c[0]);

        let mut component_of = vec![usize::MAX; n];
        for (idx, comp) in components.iter().enumerate() {
            for &v in comp {
                if v >= n {
                    return Err(Error::NodeOutOfRange { node: v, n });
                }
                if component_of[v] != usize::MAX {
                    return Err(Error::Invariant(format!(
                        "node {v} appears in more than one component"
                    )));
                }
                component_of[v] = idx;
            }
        }
        if let Some(v) = component_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Invariant(format!("node {v} is not covered")));
        }
        Ok(SccPartition {
            components,
            component_of,
        })
    }

    pub fn components(&self) -> &[Vec<NodeId>] {
        &self.components
    }

    /// Index into [`components`](Self::components) of the component holding `v`.
    pub fn component_of(&self, v: NodeId) -> usize {
        self.component_of[v]
    }

    pub fn same_component(&self, u: NodeId, v: NodeId) -> bool {
        self.component_of[u] == self.component_of[v]
    }

    /// Number of components.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Size of the node universe.
    pub fn universe(&self) -> usize {
        self.component_of.len()
    }
}
