//! Node subsets as words of a binary code of length sixteen.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;
use core::ops::BitXor;

use crate::error::{Error, Result};
use crate::labels::NodeLabel;

/// Subset of the sixteen nodes; bit `k` is the node with canonical index `k`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NodeSet(pub u16);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);
    pub const FULL: NodeSet = NodeSet(u16::MAX);

    pub fn from_nodes<I: IntoIterator<Item = NodeLabel>>(nodes: I) -> Self {
        Self(nodes.into_iter().fold(0, |acc, n| acc | (1 << n.index())))
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, node: NodeLabel) -> bool {
        self.0 & (1 << node.index()) != 0
    }

    pub fn is_superset_of(self, other: NodeSet) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn intersection(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & other.0)
    }

    pub fn complement(self) -> NodeSet {
        NodeSet(!self.0)
    }

    /// Members in canonical order.
    pub fn nodes(self) -> impl Iterator<Item = NodeLabel> {
        (0..16)
            .filter(move |k| self.0 & (1 << k) != 0)
            .map(|k| NodeLabel::from_index(k).expect("bit below 16"))
    }
}

impl BitXor for NodeSet {
    type Output = NodeSet;
    fn bitxor(self, rhs: NodeSet) -> NodeSet {
        NodeSet(self.0 ^ rhs.0)
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.nodes().map(DisplayAsDebug))
            .finish()
    }
}

struct DisplayAsDebug<T>(T);

impl<T: fmt::Display> fmt::Debug for DisplayAsDebug<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// A linear binary code stored by listing all of its words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    codewords: BTreeSet<NodeSet>,
}

impl BinaryCode {
    /// Closes `evens` under symmetric difference and requires that nothing
    /// new was added.
    pub fn from_even_sets(evens: &[NodeSet]) -> Result<Self> {
        let input: BTreeSet<NodeSet> = evens.iter().copied().collect();
        let closure = linear_closure(&input);
        if closure != input {
            return Err(Error::NotLinear);
        }
        Ok(Self { codewords: closure })
    }

    pub fn codewords(&self) -> impl Iterator<Item = NodeSet> + '_ {
        self.codewords.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn contains(&self, word: NodeSet) -> bool {
        self.codewords.contains(&word)
    }

    pub fn dimension(&self) -> u32 {
        self.codewords.len().trailing_zeros()
    }

    /// Histogram of codeword weights.
    pub fn weight_enumerator(&self) -> BTreeMap<u32, usize> {
        let mut hist = BTreeMap::new();
        for w in &self.codewords {
            *hist.entry(w.weight()).or_insert(0) += 1;
        }
        hist
    }
}

/// Smallest set containing `∅` and `words` closed under symmetric difference.
pub fn linear_closure(words: &BTreeSet<NodeSet>) -> BTreeSet<NodeSet> {
    let mut span = BTreeSet::from([NodeSet::EMPTY]);
    for &w in words {
        if span.contains(&w) {
            continue;
        }
        let shifted: Vec<NodeSet> = span.iter().map(|&s| s ^ w).collect();
        span.extend(shifted);
    }
    span
}

/// Whether a family of weight-8 node sets behaves like the hyperplanes of
/// the affine space of dimension four over F₂: distinct members meet in 0 or
/// 4 points, and the family is closed under complement.
pub fn check_affine_hyperplane_family(eights: &[NodeSet]) -> bool {
    if eights.iter().any(|e| e.weight() != 8) {
        return false;
    }
    let members: BTreeSet<NodeSet> = eights.iter().copied().collect();
    for (k, a) in members.iter().enumerate() {
        if !members.contains(&a.complement()) {
            return false;
        }
        for b in members.iter().skip(k + 1) {
            let meet = a.intersection(*b).weight();
            if meet != 0 && meet != 4 {
                return false;
            }
        }
    }
    true
}
