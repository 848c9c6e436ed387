//! Free-tree generation from level sequences, with a Prüfer-sequence
//! cross-check for small sizes.

use std::collections::HashSet;

use crate::tree::{canonical_form, Tree};

/// Iterator over one representative per isomorphism class of `n`-vertex trees.
///
/// Trees are produced as level sequences rooted at a center, stepping from
/// one valid free-tree sequence to the next in constant amortised time
/// (Wright, Richmond, Odlyzko and McKay). The order is fixed for a given `n`.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    layout: Option<Vec<usize>>,
    single: bool,
}

impl FreeTrees {
    pub fn new(n: usize) -> Self {
        match n {
            0 => FreeTrees { layout: None, single: false },
            1 => FreeTrees { layout: None, single: true },
            _ => {
                // The path rooted at its center.
                let layout = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
                FreeTrees { layout: Some(layout), single: false }
            }
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if std::mem::take(&mut self.single) {
            return Some(Tree::path(1));
        }
        let candidate = self.layout.take()?;
        let layout = next_free(candidate)?;
        self.layout = next_rooted(&layout, None);
        Some(layout_to_tree(&layout))
    }
}

/// Splits a level sequence into the first subtree of the root (levels shifted
/// down by one) and the rest of the tree.
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let second_child =
        layout.iter().enumerate().skip(1).filter(|&(_, &l)| l == 1).nth(1).map(|(i, _)| i).unwrap_or(layout.len());
    let left = layout[1..second_child].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[second_child..].iter().copied()).collect();
    (left, rest)
}

/// Next rooted level sequence (Beyer-Hedetniemi), changing position `p` onward.
fn next_rooted(prev: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = prev.len() - 1;
            while prev[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while prev[q] != prev[p] - 1 {
        q -= 1;
    }
    let mut result = prev.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// Returns `candidate` if it is the center-rooted sequence of a free tree,
/// otherwise jumps to the next sequence that is.
fn next_free(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let new_left_height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        let suffix = new_left_height + 1;
        for (slot, level) in next[len - suffix..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    Some(next)
}

fn layout_to_tree(layout: &[usize]) -> Tree {
    let mut parent = vec![0; layout.len()];
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        stack.truncate(level);
        if let Some(&p) = stack.last() {
            parent[i] = p;
        }
        stack.push(i);
    }
    Tree::from_parents(&parent).expect("level sequence describes a tree")
}

/// Decodes a Prüfer sequence of length `n - 2` into a labelled tree on `n` vertices.
pub fn prufer_decode(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(std::cmp::Reverse).collect();
    for &s in seq {
        let std::cmp::Reverse(leaf) = heap.pop().expect("a leaf remains");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            heap.push(std::cmp::Reverse(s));
        }
    }
    let std::cmp::Reverse(a) = heap.pop().unwrap();
    let std::cmp::Reverse(b) = heap.pop().unwrap();
    edges.push((a, b));
    Tree::new(n, edges).expect("Prüfer decoding yields a tree")
}

/// Every labelled tree on `n` vertices, one per Prüfer sequence.
pub fn prufer_trees(n: usize) -> impl Iterator<Item = Tree> {
    let len = n.saturating_sub(2);
    let total = if n <= 2 { 1 } else { n.pow(len as u32) };
    let count = if n == 0 { 0 } else { total };
    (0..count).map(move |mut idx| {
        if n == 1 {
            return Tree::path(1);
        }
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = idx % n;
            idx /= n;
        }
        prufer_decode(&seq)
    })
}

/// Number of isomorphism classes of `n`-vertex trees, counted through all
/// `n^(n-2)` labelled trees.
pub fn count_free_trees_by_prufer(n: usize) -> usize {
    prufer_trees(n).map(|t| canonical_form(&t)).collect::<HashSet<_>>().len()
}
