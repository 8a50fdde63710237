//! Exhaustive count of disjoint-circle nestings as forests of unordered rooted
//! trees: each circle is a node and the circles directly inside it are its
//! children.
//!
//! Forests with `n` nodes are grown from those with `n − 1` nodes by adding
//! one leaf in every possible place, then reduced to a canonical form and
//! deduplicated. No counting formula is involved.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub const MAX_ORACLE_NODES: usize = 16;

/// Unordered rooted tree in canonical form: children sorted ascending by
/// `(size, children)`, which is exactly the derived ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedTree {
    size: usize,
    children: Vec<RootedTree>,
}

impl RootedTree {
    pub fn leaf() -> Self {
        Self {
            size: 1,
            children: Vec::new(),
        }
    }

    pub fn with_children(mut children: Vec<RootedTree>) -> Self {
        children.sort();
        Self {
            size: 1 + children.iter().map(|c| c.size).sum::<usize>(),
            children,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Every tree obtained by hanging one new leaf under some node.
    fn grown(&self) -> Vec<RootedTree> {
        let mut out = Vec::new();
        let mut kids = self.children.clone();
        kids.push(RootedTree::leaf());
        out.push(RootedTree::with_children(kids));
        for (i, child) in self.children.iter().enumerate() {
            for bigger in child.grown() {
                let mut kids = self.children.clone();
                kids[i] = bigger;
                out.push(RootedTree::with_children(kids));
            }
        }
        out
    }

    fn encode_into(&self, code: &mut u64) {
        *code = (*code << 1) | 1;
        for child in &self.children {
            child.encode_into(code);
        }
        *code <<= 1;
    }
}

/// Sorted multiset of canonical trees; equal values are exactly isomorphic
/// forests.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForest {
    trees: Vec<RootedTree>,
}

impl CanonicalForest {
    pub fn empty() -> Self {
        Self { trees: Vec::new() }
    }

    pub fn new(mut trees: Vec<RootedTree>) -> Self {
        trees.sort();
        Self { trees }
    }

    pub fn trees(&self) -> &[RootedTree] {
        &self.trees
    }

    pub fn nodes(&self) -> usize {
        self.trees.iter().map(RootedTree::size).sum()
    }

    /// Every forest obtained by adding one node, as a new root or as a leaf
    /// under an existing node.
    pub fn grown(&self) -> Vec<CanonicalForest> {
        let mut out = Vec::new();
        let mut trees = self.trees.clone();
        trees.push(RootedTree::leaf());
        out.push(CanonicalForest::new(trees));
        for (i, tree) in self.trees.iter().enumerate() {
            for bigger in tree.grown() {
                let mut trees = self.trees.clone();
                trees[i] = bigger;
                out.push(CanonicalForest::new(trees));
            }
        }
        out
    }

    /// Balanced-parenthesis code (1 = open, 0 = close), `2·nodes` bits. Valid
    /// for up to 31 nodes.
    pub fn encode(&self) -> u64 {
        let mut code = 0u64;
        for tree in &self.trees {
            tree.encode_into(&mut code);
        }
        code
    }

    pub fn decode(code: u64, nodes: usize) -> Self {
        let mut bits = (0..2 * nodes).rev().map(|i| (code >> i) & 1 == 1);
        let mut trees = Vec::new();
        while let Some(open) = bits.next() {
            debug_assert!(open);
            trees.push(decode_tree(&mut bits));
        }
        Self::new(trees)
    }
}

fn decode_tree(bits: &mut impl Iterator<Item = bool>) -> RootedTree {
    let mut children = Vec::new();
    while bits.next() == Some(true) {
        children.push(decode_tree(bits));
    }
    RootedTree::with_children(children)
}

/// Numbers of non-isomorphic forests with 0..=n_max nodes.
pub fn forest_counts(n_max: usize) -> Result<Vec<u64>> {
    if n_max > MAX_ORACLE_NODES {
        return Err(Error::out_of_range(
            "n",
            n_max,
            "n <= 16 for exhaustive enumeration",
        ));
    }
    let mut level: HashSet<u64> = HashSet::from([CanonicalForest::empty().encode()]);
    let mut counts = vec![1u64];
    for nodes in 1..=n_max {
        let mut next = HashSet::with_capacity(level.len() * 3);
        for &code in &level {
            for forest in CanonicalForest::decode(code, nodes - 1).grown() {
                next.insert(forest.encode());
            }
        }
        counts.push(next.len() as u64);
        level = next;
    }
    Ok(counts)
}

/// Number of isomorphism classes of rooted forests with `n` nodes.
pub fn forest_oracle(n: usize) -> Result<BigInt> {
    Ok(BigInt::from(*forest_counts(n)?.last().unwrap()))
}
