//! Tree families, their exhaustive generators and per-tree statistics.
//!
//! Size conventions: internal nodes for binary, unary-binary, hex and
//! ternary trees; nodes for ordered and marked trees; total edge
//! multiplicity for multi-edge trees.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeNode {
    /// The empty tree `□`.
    Empty,
    Binary { left: Box<TreeNode>, right: Box<TreeNode> },
    /// Unary node with colour `1..=a`; the child is never empty.
    Unary { color: u32, child: Box<TreeNode> },
    /// Ordered node; `mark` decorates the edge to the last child.
    Ordered { children: Vec<TreeNode>, mark: bool },
    /// Children hang on edges of multiplicity `>= 1`.
    MultiEdge { children: Vec<(u32, TreeNode)> },
    Ternary { left: Box<TreeNode>, middle: Box<TreeNode>, right: Box<TreeNode> },
}

impl TreeNode {
    pub fn binary(left: TreeNode, right: TreeNode) -> Self {
        TreeNode::Binary { left: Box::new(left), right: Box::new(right) }
    }

    pub fn unary(color: u32, child: TreeNode) -> Self {
        TreeNode::Unary { color, child: Box::new(child) }
    }

    pub fn ordered(children: Vec<TreeNode>) -> Self {
        TreeNode::Ordered { children, mark: false }
    }

    pub fn ternary(left: TreeNode, middle: TreeNode, right: TreeNode) -> Self {
        TreeNode::Ternary { left: Box::new(left), middle: Box::new(middle), right: Box::new(right) }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, TreeNode::Empty)
    }

    /// Non-empty children in left-to-right order.
    pub fn children(&self) -> Vec<&TreeNode> {
        let all: Vec<&TreeNode> = match self {
            TreeNode::Empty => vec![],
            TreeNode::Binary { left, right } => vec![left, right],
            TreeNode::Unary { child, .. } => vec![child],
            TreeNode::Ordered { children, .. } => children.iter().collect(),
            TreeNode::MultiEdge { children } => children.iter().map(|(_, c)| c).collect(),
            TreeNode::Ternary { left, middle, right } => vec![left, middle, right],
        };
        all.into_iter().filter(|c| !c.is_empty()).collect()
    }

    /// Number of non-empty nodes.
    pub fn node_count(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            1 + self.children().iter().map(|c| c.node_count()).sum::<usize>()
        }
    }

    /// Sum of edge multiplicities of a multi-edge tree (plain edges count 1).
    pub fn edge_weight(&self) -> usize {
        match self {
            TreeNode::MultiEdge { children } => children.iter().map(|(m, c)| *m as usize + c.edge_weight()).sum(),
            _ => self.children().iter().map(|c| 1 + c.edge_weight()).sum(),
        }
    }
}

impl fmt::Display for TreeNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeNode::Empty => write!(f, "."),
            TreeNode::Binary { left, right } => write!(f, "B({left},{right})"),
            TreeNode::Unary { color, child } => write!(f, "U{color}({child})"),
            TreeNode::Ordered { children, mark } => {
                write!(f, "(")?;
                for (i, c) in children.iter().enumerate() {
                    if *mark && i + 1 == children.len() {
                        write!(f, "*")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
            TreeNode::MultiEdge { children } => {
                write!(f, "(")?;
                for (m, c) in children {
                    write_multi_child(f, *m, c)?;
                }
                write!(f, ")")
            }
            TreeNode::Ternary { left, middle, right } => write!(f, "T({left},{middle},{right})"),
        }
    }
}

/// A child subtree is written `(m ...)` with `m` the multiplicity of the edge into it.
fn write_multi_child(f: &mut fmt::Formatter<'_>, m: u32, t: &TreeNode) -> fmt::Result {
    write!(f, "({m}")?;
    if let TreeNode::MultiEdge { children } = t {
        for (cm, c) in children {
            write_multi_child(f, *cm, c)?;
        }
    }
    write!(f, ")")
}

/// All sequences of objects whose sizes sum to `total`, drawing a piece of
/// size `s` from `pieces(s)`.
fn sequences<T: Clone>(total: usize, min_piece: usize, pieces: &dyn Fn(usize) -> Vec<T>) -> Vec<Vec<T>> {
    let mut table: Vec<Vec<Vec<T>>> = vec![vec![vec![]]];
    for m in 1..=total {
        let mut here = Vec::new();
        for first in min_piece.max(1)..=m {
            for p in pieces(first) {
                for rest in &table[m - first] {
                    let mut seq = Vec::with_capacity(rest.len() + 1);
                    seq.push(p.clone());
                    seq.extend(rest.iter().cloned());
                    here.push(seq);
                }
            }
        }
        table.push(here);
    }
    table.swap_remove(total)
}

/// Bottom-up table of all trees of sizes `0..=n`.
fn build_table(n: usize, level: impl Fn(usize, &[Vec<TreeNode>]) -> Vec<TreeNode>) -> Vec<Vec<TreeNode>> {
    let mut table: Vec<Vec<TreeNode>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let row = level(m, &table);
        table.push(row);
    }
    table
}

/// Binary trees with `n` internal nodes.
pub fn gen_binary(n: usize) -> Vec<TreeNode> {
    gen_unary_binary(n, 0)
}

/// Unary-binary trees with `n` internal nodes and `a` unary colours.
pub fn gen_unary_binary(n: usize, a: u32) -> Vec<TreeNode> {
    let mut table = build_table(n, |m, t| {
        if m == 0 {
            return vec![TreeNode::Empty];
        }
        let mut out = Vec::new();
        for color in 1..=a {
            for c in &t[m - 1] {
                if !c.is_empty() {
                    out.push(TreeNode::unary(color, c.clone()));
                }
            }
        }
        for i in 0..m {
            for l in &t[i] {
                for r in &t[m - 1 - i] {
                    out.push(TreeNode::binary(l.clone(), r.clone()));
                }
            }
        }
        out
    });
    table.swap_remove(n)
}

/// Hex trees with `n` nodes: a node has no successor, two non-empty
/// successors, or a single successor of one of three kinds (left, middle, right).
pub fn gen_hex(n: usize) -> Vec<TreeNode> {
    let mut table = build_table(n, |m, t| match m {
        0 => vec![TreeNode::Empty],
        1 => vec![TreeNode::binary(TreeNode::Empty, TreeNode::Empty)],
        _ => {
            let mut out = Vec::new();
            for c in &t[m - 1] {
                out.push(TreeNode::binary(c.clone(), TreeNode::Empty));
                out.push(TreeNode::unary(1, c.clone()));
                out.push(TreeNode::binary(TreeNode::Empty, c.clone()));
            }
            for i in 1..m - 1 {
                for l in &t[i] {
                    for r in &t[m - 1 - i] {
                        out.push(TreeNode::binary(l.clone(), r.clone()));
                    }
                }
            }
            out
        }
    });
    table.swap_remove(n)
}

/// Ordered (plane) trees with `n >= 1` nodes; `n = 0` gives nothing.
pub fn gen_ordered(n: usize) -> Vec<TreeNode> {
    gen_ordered_with(n, false)
}

/// Marked ordered trees with `n` nodes: a rightmost edge whose lower end is
/// not a leaf may carry a mark.
pub fn gen_marked(n: usize) -> Vec<TreeNode> {
    gen_ordered_with(n, true)
}

fn gen_ordered_with(n: usize, marks: bool) -> Vec<TreeNode> {
    if n == 0 {
        return Vec::new();
    }
    let table = build_table(n, |m, t| {
        if m == 0 {
            return vec![];
        }
        let forests = sequences(m - 1, 1, &|s| t[s].clone());
        let mut out = Vec::new();
        for children in forests {
            let markable = marks && children.last().is_some_and(|c| !c.children().is_empty());
            out.push(TreeNode::Ordered { children: children.clone(), mark: false });
            if markable {
                out.push(TreeNode::Ordered { children, mark: true });
            }
        }
        out
    });
    table[n].clone()
}

/// Multi-edge trees of total edge weight `w`.
pub fn gen_multiedge(w: usize) -> Vec<TreeNode> {
    let table = build_table(w, |m, t| {
        // a child of weight s = multiplicity + subtree weight
        let pieces = |s: usize| -> Vec<(u32, TreeNode)> {
            let mut out = Vec::new();
            for mult in 1..=s {
                for sub in &t[s - mult] {
                    out.push((mult as u32, sub.clone()));
                }
            }
            out
        };
        sequences(m, 1, &pieces).into_iter().map(|children| TreeNode::MultiEdge { children }).collect()
    });
    table[w].clone()
}

/// Ternary trees with `n` internal nodes.
pub fn gen_ternary(n: usize) -> Vec<TreeNode> {
    let mut table = build_table(n, |m, t| {
        if m == 0 {
            return vec![TreeNode::Empty];
        }
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m - i {
                let k = m - 1 - i - j;
                for l in &t[i] {
                    for mid in &t[j] {
                        for r in &t[k] {
                            out.push(TreeNode::ternary(l.clone(), mid.clone(), r.clone()));
                        }
                    }
                }
            }
        }
        out
    });
    table.swap_remove(n)
}

/// Horton–Strahler number; unary nodes pass their child's value through.
pub fn reg(t: &TreeNode) -> Result<u32> {
    match t {
        TreeNode::Empty => Ok(0),
        TreeNode::Unary { child, .. } => reg(child),
        TreeNode::Binary { left, right } => {
            let (a, b) = (reg(left)?, reg(right)?);
            Ok(if a == b { a + 1 } else { a.max(b) })
        }
        _ => Err(Error::Usage("reg is defined for binary and unary-binary trees only".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TreeStats {
    pub leaves: usize,
    pub height_nodes: usize,
    pub height_edges: usize,
    pub middle_edges: usize,
    pub mark_count: usize,
}

pub fn tree_stats(t: &TreeNode) -> TreeStats {
    if t.is_empty() {
        return TreeStats::default();
    }
    let kids = t.children();
    let mut st = TreeStats { leaves: usize::from(kids.is_empty()), ..TreeStats::default() };
    let mut deepest = 0;
    for c in &kids {
        let cs = tree_stats(c);
        st.leaves += cs.leaves;
        st.middle_edges += cs.middle_edges;
        st.mark_count += cs.mark_count;
        deepest = deepest.max(cs.height_nodes);
    }
    st.height_nodes = deepest + 1;
    st.height_edges = deepest;
    match t {
        TreeNode::Ternary { middle, .. } if !middle.is_empty() => st.middle_edges += 1,
        TreeNode::Ordered { mark: true, .. } => st.mark_count += 1,
        _ => {}
    }
    st
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(f: impl Fn(usize) -> Vec<TreeNode>, r: std::ops::RangeInclusive<usize>) -> Vec<usize> {
        r.map(|n| f(n).len()).collect()
    }

    #[test]
    fn family_counts() {
        assert_eq!(counts(gen_binary, 0..=5), vec![1, 1, 2, 5, 14, 42]);
        assert_eq!(counts(gen_hex, 1..=5), vec![1, 3, 10, 36, 137]);
        assert_eq!(counts(gen_marked, 1..=5), vec![1, 1, 3, 10, 36]);
        assert_eq!(counts(gen_multiedge, 0..=4), vec![1, 1, 3, 10, 36]);
        assert_eq!(counts(gen_ternary, 0..=4), vec![1, 1, 3, 12, 55]);
        assert_eq!(counts(gen_ordered, 1..=5), vec![1, 1, 2, 5, 14]);
    }

    #[test]
    fn reg_examples() {
        assert_eq!(reg(&TreeNode::Empty).unwrap(), 0);
        assert_eq!(reg(&TreeNode::binary(TreeNode::Empty, TreeNode::Empty)).unwrap(), 1);
        let ones: Vec<usize> =
            (1..=4).map(|n| gen_binary(n).iter().filter(|t| reg(t).unwrap() == 1).count()).collect();
        assert_eq!(ones, vec![1, 2, 4, 8]);
        assert!(reg(&TreeNode::ordered(vec![])).is_err());
    }

    #[test]
    fn stats_examples() {
        let single = TreeNode::ordered(vec![]);
        let st = tree_stats(&single);
        assert_eq!((st.leaves, st.height_nodes, st.height_edges), (1, 1, 0));
        let mut dist = [0usize; 5];
        for t in gen_marked(4) {
            dist[tree_stats(&t).leaves] += 1;
        }
        assert_eq!(dist, [0, 4, 5, 1, 0]);
        let mut mid = [0usize; 5];
        for t in gen_ternary(4) {
            mid[tree_stats(&t).middle_edges] += 1;
        }
        assert_eq!(mid, [14, 28, 12, 1, 0]);
    }

    #[test]
    fn hex_equals_unary_binary() {
        for n in 0..=7 {
            let mut a = gen_hex(n);
            let mut b = gen_unary_binary(n, 1);
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn serialization() {
        let t = TreeNode::MultiEdge {
            children: vec![(3, TreeNode::MultiEdge { children: vec![(1, TreeNode::MultiEdge { children: vec![] })] })],
        };
        assert_eq!(t.to_string(), "((3(1)))");
        assert_eq!(t.edge_weight(), 4);
        let m = TreeNode::Ordered { children: vec![TreeNode::ordered(vec![TreeNode::ordered(vec![])])], mark: true };
        assert_eq!(m.to_string(), "(*(()))");
    }
}
