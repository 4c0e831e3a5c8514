//! Explicit bijections between tree and path families, each with its inverse.

use crate::error::{Error, Result};
use crate::pathgen::{Family, Ink, LatticePath, Step};
use crate::treegen::TreeNode;

fn multi_children(t: &TreeNode) -> Result<&[(u32, TreeNode)]> {
    match t {
        TreeNode::MultiEdge { children } => Ok(children),
        _ => Err(Error::Usage("expected a multi-edge tree".into())),
    }
}

/// Dyck word of the underlying plane tree (true = up) and the edge
/// multiplicities in pre-order.
fn walk_multi(t: &TreeNode, word: &mut Vec<bool>, mults: &mut Vec<u32>) -> Result<()> {
    for (m, c) in multi_children(t)? {
        if *m == 0 {
            return Err(Error::Domain("edge multiplicity must be at least 1".into()));
        }
        mults.push(*m);
        word.push(true);
        walk_multi(c, word, mults)?;
        word.push(false);
    }
    Ok(())
}

/// Multi-edge tree of weight `N >= 1` to a 3-coloured Motzkin path of length `N - 1`.
///
/// The plane tree's Dyck path loses its first and last step, the rest is read
/// in pairs (UU up, DD down, UD red, DU green), and each edge of multiplicity
/// `a` contributes `a - 1` blue steps in the gap matching its pre-order index.
pub fn multiedge_to_3motzkin(t: &TreeNode) -> Result<LatticePath> {
    let mut word = Vec::new();
    let mut mults = Vec::new();
    walk_multi(t, &mut word, &mut mults)?;
    if mults.is_empty() {
        return Err(Error::Domain("weight-0 tree has no image".into()));
    }
    let inner = &word[1..word.len() - 1];
    let base: Vec<Step> = inner
        .chunks(2)
        .map(|p| match (p[0], p[1]) {
            (true, true) => Step::U,
            (false, false) => Step::D,
            (true, false) => Step::Horizontal(0),
            (false, true) => Step::Horizontal(1),
        })
        .collect();
    let mut steps = Vec::new();
    for (gap, &m) in mults.iter().enumerate() {
        steps.extend(std::iter::repeat(Step::Horizontal(2)).take(m as usize - 1));
        if let Some(s) = base.get(gap) {
            steps.push(*s);
        }
    }
    Ok(LatticePath::new(Family::Motzkin(3), 0, steps))
}

fn invalid(msg: &str) -> Error {
    Error::Domain(msg.to_string())
}

/// Plane tree (as a multi-edge tree with the given pre-order multiplicities)
/// from a Dyck word.
fn tree_from_word(word: &[bool], mults: &mut impl Iterator<Item = u32>) -> Result<TreeNode> {
    fn build(word: &[bool], pos: &mut usize, mults: &mut dyn Iterator<Item = u32>) -> Result<TreeNode> {
        let mut children = Vec::new();
        while *pos < word.len() && word[*pos] {
            *pos += 1;
            let m = mults.next().ok_or_else(|| invalid("multiplicity list too short"))?;
            let child = build(word, pos, mults)?;
            if *pos >= word.len() || word[*pos] {
                return Err(invalid("unbalanced Dyck word"));
            }
            *pos += 1;
            children.push((m, child));
        }
        Ok(TreeNode::MultiEdge { children })
    }
    let mut pos = 0;
    let t = build(word, &mut pos, mults)?;
    if pos != word.len() {
        return Err(invalid("Dyck word returns below zero"));
    }
    Ok(t)
}

/// Inverse of [`multiedge_to_3motzkin`].
pub fn motzkin3_to_multiedge(p: &LatticePath) -> Result<TreeNode> {
    let mut base = Vec::new();
    let mut blues = vec![0u32];
    let mut level = 0i64;
    for s in &p.steps {
        match *s {
            Step::Horizontal(2) => *blues.last_mut().unwrap() += 1,
            Step::Horizontal(c) if c < 2 => {
                base.push(*s);
                blues.push(0);
            }
            Step::Up { rise: 1, ink: Ink::Black } => {
                level += 1;
                base.push(*s);
                blues.push(0);
            }
            Step::Down { drop: 1, ink: Ink::Black } => {
                level -= 1;
                if level < 0 {
                    return Err(invalid("Motzkin path dips below zero"));
                }
                base.push(*s);
                blues.push(0);
            }
            _ => return Err(invalid("not a 3-coloured Motzkin step")),
        }
    }
    if level != 0 {
        return Err(invalid("Motzkin path does not return to zero"));
    }
    let mut word = vec![true];
    for s in &base {
        let pair = match *s {
            Step::Horizontal(0) => [true, false],
            Step::Horizontal(1) => [false, true],
            s if s.is_up() => [true, true],
            _ => [false, false],
        };
        word.extend(pair);
    }
    word.push(false);
    let mut mults = blues.into_iter().map(|b| b + 1);
    tree_from_word(&word, &mut mults)
}

/// Marked ordered tree with `n` nodes to a decorated skew path of length `2n - 2`.
///
/// The usual contour walk, except that the return along a marked edge is a red step.
pub fn marked_to_skew(t: &TreeNode) -> Result<LatticePath> {
    fn walk(t: &TreeNode, out: &mut Vec<Step>) -> Result<()> {
        let TreeNode::Ordered { children, mark } = t else {
            return Err(Error::Usage("expected a marked ordered tree".into()));
        };
        for (i, c) in children.iter().enumerate() {
            out.push(Step::U);
            walk(c, out)?;
            let marked = *mark && i + 1 == children.len();
            out.push(if marked { Step::RED_DOWN } else { Step::D });
        }
        Ok(())
    }
    let mut steps = Vec::new();
    walk(t, &mut steps)?;
    Ok(LatticePath::new(Family::SkewDecorated, 0, steps))
}

/// Inverse of [`marked_to_skew`].
pub fn skew_to_marked(p: &LatticePath) -> Result<TreeNode> {
    if !p.follows_rules() || p.start != 0 || p.end_level() != 0 || p.min_level() < 0 {
        return Err(invalid("not a decorated skew path from 0 to 0"));
    }
    fn build(steps: &[Step], pos: &mut usize) -> TreeNode {
        let mut children = Vec::new();
        let mut mark = false;
        while *pos < steps.len() && steps[*pos].is_up() {
            *pos += 1;
            children.push(build(steps, pos));
            mark = steps[*pos] == Step::RED_DOWN;
            *pos += 1;
        }
        TreeNode::Ordered { children, mark }
    }
    let mut pos = 0;
    Ok(build(&p.steps, &mut pos))
}

/// Rotation correspondence: first child becomes the left subtree, the next
/// sibling the right subtree, and an edge of multiplicity `a` adds a chain of
/// `a - 1` unary nodes above the binary node.
pub fn rotation_multiedge_to_unarybinary(t: &TreeNode) -> Result<TreeNode> {
    fn forest(children: &[(u32, TreeNode)]) -> Result<TreeNode> {
        let Some(((m, c), rest)) = children.split_first() else {
            return Ok(TreeNode::Empty);
        };
        if *m == 0 {
            return Err(Error::Domain("edge multiplicity must be at least 1".into()));
        }
        let mut node = TreeNode::binary(forest(multi_children(c)?)?, forest(rest)?);
        for _ in 1..*m {
            node = TreeNode::unary(1, node);
        }
        Ok(node)
    }
    forest(multi_children(t)?)
}

/// Inverse of [`rotation_multiedge_to_unarybinary`].
pub fn rotation_unarybinary_to_multiedge(t: &TreeNode) -> Result<TreeNode> {
    fn forest(t: &TreeNode, out: &mut Vec<(u32, TreeNode)>) -> Result<()> {
        let mut cur = t;
        let mut m = 1u32;
        loop {
            match cur {
                TreeNode::Empty if m == 1 => return Ok(()),
                TreeNode::Unary { child, .. } => {
                    m += 1;
                    cur = child;
                }
                TreeNode::Binary { left, right } => {
                    let mut kids = Vec::new();
                    forest(left, &mut kids)?;
                    out.push((m, TreeNode::MultiEdge { children: kids }));
                    return forest(right, out);
                }
                _ => return Err(invalid("not a unary-binary tree")),
            }
        }
    }
    let mut children = Vec::new();
    forest(t, &mut children)?;
    Ok(TreeNode::MultiEdge { children })
}
