use std::fmt;

use fixedbitset::FixedBitSet;

use crate::graph::NodeId;

/// A set of node ids over a fixed universe `[0, n)`.
///
/// Iteration is always in ascending id order, so rendered and serialized
/// output is stable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NodeSet {
    bits: FixedBitSet,
}

impl NodeSet {
    pub fn empty(universe: usize) -> Self {
        NodeSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn singleton(universe: usize, v: NodeId) -> Self {
        let mut s = Self::empty(universe);
        s.insert(v);
        s
    }

    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = NodeId>) -> Self {
        let mut s = Self::empty(universe);
        for v in ids {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: NodeId) {
        self.bits.insert(v);
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn union_with(&mut self, other: &NodeSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<NodeId> {
        self.iter().collect()
    }

    /// Renders as `{a,b,c}` with every id shifted by `offset`.
    pub fn display_with_offset(&self, offset: usize) -> String {
        let items: Vec<String> = self.iter().map(|v| (v + offset).to_string()).collect();
        format!("{{{}}}", items.join(","))
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with_offset(0))
    }
}
