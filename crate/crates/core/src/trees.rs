//! Plane trees, the Dyck-word bijection, and extended-leaf decompositions.
//!
//! A plane tree is a rooted tree with ordered children. The classical
//! bijection sends a Dyck word of semilength `n` to a plane tree with `n`
//! non-root vertices, turning `UD`-factors into leaves and `UUD`-factors
//! into good leaves (leaves that are the left-most child of a non-root
//! vertex). The extended-leaf decomposition partitions the edge set into one
//! upward path per leaf; lengths at least 2 correspond to good leaves.

use crate::dyck::{enumerate_dyck, DyckWord, Step};
use crate::{Error, Result};
use std::fmt;

/// A rooted tree with ordered children; the value is the root.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

impl PlaneTree {
    /// A single vertex.
    pub fn leaf() -> Self {
        PlaneTree { children: Vec::new() }
    }

    /// A vertex with the given ordered subtrees.
    pub fn new(children: Vec<PlaneTree>) -> Self {
        PlaneTree { children }
    }

    /// Ordered child subtrees.
    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    /// Total number of vertices, root included.
    pub fn num_vertices(&self) -> usize {
        1 + self.children.iter().map(|c| c.num_vertices()).sum::<usize>()
    }

    /// Number of non-root vertices (= number of edges).
    pub fn non_root_vertices(&self) -> usize {
        self.num_vertices() - 1
    }

    /// Parses a balanced-parenthesis string, one `()` pair per non-root
    /// vertex; `""` is the single-vertex tree.
    pub fn parse(text: &str) -> Result<Self> {
        let mut stack: Vec<Vec<PlaneTree>> = vec![Vec::new()];
        for c in text.chars() {
            match c {
                '(' => stack.push(Vec::new()),
                ')' => {
                    let children = stack.pop().ok_or_else(|| Error::Parse("unbalanced ')'".into()))?;
                    if stack.is_empty() {
                        return Err(Error::Parse("unbalanced ')'".into()));
                    }
                    stack.last_mut().unwrap().push(PlaneTree::new(children));
                }
                other if other.is_whitespace() => {}
                other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
            }
        }
        if stack.len() != 1 {
            return Err(Error::Parse("unbalanced '('".into()));
        }
        Ok(PlaneTree::new(stack.pop().unwrap()))
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for child in &self.children {
            write!(f, "({child})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneTree({self})")
    }
}

/// Lengths of the extended leaves of a tree, left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedLeafSeq {
    /// Edge counts; all positive, summing to the number of edges.
    pub lengths: Vec<usize>,
}

/// Flat preorder-indexed view of a tree; index 0 is the root. Children of
/// each vertex are in left-to-right order, and preorder index order agrees
/// with the left-to-right order of the leaves.
#[derive(Debug, Clone)]
pub(crate) struct FlatTree {
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
}

impl FlatTree {
    pub fn from_tree(tree: &PlaneTree) -> Self {
        let mut flat = FlatTree {
            parent: Vec::new(),
            children: Vec::new(),
        };
        fn walk(node: &PlaneTree, parent: Option<usize>, flat: &mut FlatTree) -> usize {
            let id = flat.parent.len();
            flat.parent.push(parent);
            flat.children.push(Vec::new());
            for child in node.children() {
                let cid = walk(child, Some(id), flat);
                flat.children[id].push(cid);
            }
            id
        }
        walk(tree, None, &mut flat);
        flat
    }

    pub fn num_vertices(&self) -> usize {
        self.parent.len()
    }

    /// Leaf indices in preorder (= left-to-right) order.
    pub fn leaves(&self) -> Vec<usize> {
        (1..self.num_vertices()).filter(|&v| self.children[v].is_empty()).collect()
    }

    /// The extended leaf of `leaf`: vertex path from the top vertex down to
    /// the leaf. The top is the first ancestor that has another child to the
    /// left of the path, or the root.
    pub fn extended_leaf_path(&self, leaf: usize) -> Vec<usize> {
        let mut path = vec![leaf];
        let mut u = leaf;
        loop {
            let p = self.parent[u].expect("non-root vertex has a parent");
            path.push(p);
            if p == 0 || self.children[p][0] != u {
                break;
            }
            u = p;
        }
        path.reverse();
        path
    }
}

/// The plane tree of a Dyck word: each outer arch `U pi D` becomes a child
/// whose subtree is the tree of `pi`. Semilength maps to non-root vertices,
/// `UD`-factors to leaves, `UUD`-factors to good leaves.
pub fn phi(w: &DyckWord) -> PlaneTree {
    fn parse(steps: &[Step]) -> Vec<PlaneTree> {
        let mut children = Vec::new();
        let mut i = 0;
        while i < steps.len() {
            debug_assert_eq!(steps[i], Step::Up, "arch starts with U");
            let mut height = 1i64;
            let mut j = i + 1;
            while height > 0 {
                match steps[j] {
                    Step::Up => height += 1,
                    Step::Down => height -= 1,
                }
                j += 1;
            }
            children.push(PlaneTree::new(parse(&steps[i + 1..j - 1])));
            i = j;
        }
        children
    }
    PlaneTree::new(parse(&w.steps()))
}

/// The Dyck word of a plane tree: preorder traversal recording `U` on the
/// way down and `D` on the way up. Inverse of [`phi`].
pub fn phi_inv(t: &PlaneTree) -> DyckWord {
    fn walk(node: &PlaneTree, steps: &mut Vec<Step>) {
        for child in node.children() {
            steps.push(Step::Up);
            walk(child, steps);
            steps.push(Step::Down);
        }
    }
    let mut steps = Vec::new();
    walk(t, &mut steps);
    DyckWord::new(&steps).expect("preorder traversal yields a valid word")
}

/// Number of leaves and good leaves. The root never counts as a leaf; a
/// good leaf is a leaf that is the left-most child of a non-root vertex.
pub fn leaf_stats(t: &PlaneTree) -> (usize, usize) {
    fn walk(node: &PlaneTree, is_root: bool, leaves: &mut usize, good: &mut usize) {
        for (i, child) in node.children().iter().enumerate() {
            if child.children().is_empty() {
                *leaves += 1;
                if !is_root && i == 0 {
                    *good += 1;
                }
            } else {
                walk(child, false, leaves, good);
            }
        }
    }
    let mut leaves = 0;
    let mut good = 0;
    walk(t, true, &mut leaves, &mut good);
    (leaves, good)
}

/// Extended-leaf lengths of `t`, left to right; one per leaf, summing to the
/// edge count. Lengths at least 2 correspond exactly to good leaves.
pub fn extended_leaf_decomposition(t: &PlaneTree) -> Result<ExtendedLeafSeq> {
    let flat = FlatTree::from_tree(t);
    let leaves = flat.leaves();
    if leaves.is_empty() {
        return Err(Error::NoLeaves);
    }
    let lengths = leaves
        .iter()
        .map(|&leaf| flat.extended_leaf_path(leaf).len() - 1)
        .collect();
    Ok(ExtendedLeafSeq { lengths })
}

/// All plane trees with `n` non-root vertices, via [`phi`] over the Dyck
/// enumeration.
pub fn enumerate_trees(n: usize) -> impl Iterator<Item = PlaneTree> {
    enumerate_dyck(n).map(|w| phi(&w))
}
