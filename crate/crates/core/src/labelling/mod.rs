//! Vertex labellings, the graceful and strongly graceful predicates, and the
//! label permutations that act on them.

mod anchor;
mod perm;

use std::fmt;

use thiserror::Error;

use crate::tree::{content_lines, parse_pair, Matching, Tree, Vertex};

pub use anchor::{anchor_lookup, anchored_quad_from, extract_anchor_path, AnchorLookup, AnchorPath, StrongQuad};
pub use perm::LabelPermutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("labels are not a bijection onto 0..{n}")]
    NotBijection { n: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertices must be distinct")]
    SameVertex,
    #[error("size {0} is odd")]
    OddSize(usize),
    #[error("need at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("matching is not perfect")]
    NotPerfect,
    #[error("labelling is not graceful")]
    NotGraceful,
    #[error("labelling is not strongly graceful")]
    NotStronglyGraceful,
    #[error("no labellings supplied; the tree is not strongly graceful or the search was empty")]
    NoLabellings,
    #[error("labels 0 and {second_largest} are adjacent, so no anchor path exists")]
    AnchorAbsent { second_largest: usize },
    #[error("quad member {member} failed verification: {reason}")]
    QuadVerification { member: &'static str, reason: String },
}

/// A bijection from vertices `0..n` to labels `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labelling {
    values: Vec<usize>,
}

impl Labelling {
    pub fn new(values: Vec<usize>) -> Result<Self, LabelError> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &b in &values {
            if b >= n || std::mem::replace(&mut seen[b], true) {
                return Err(LabelError::NotBijection { n });
            }
        }
        Ok(Labelling { values })
    }

    /// Caller guarantees `values` is a bijection.
    pub(crate) fn from_bijection(values: Vec<usize>) -> Self {
        debug_assert!(Labelling::new(values.clone()).is_ok());
        Labelling { values }
    }

    pub fn identity(n: usize) -> Self {
        Labelling { values: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn get(&self, v: Vertex) -> usize {
        self.values[v]
    }

    /// The vertex carrying label `b`.
    pub fn vertex_of(&self, b: usize) -> Vertex {
        self.values.iter().position(|&x| x == b).expect("labels form a bijection")
    }

    /// `|f(u) - f(v)|`.
    pub fn edge_label(&self, u: Vertex, v: Vertex) -> Result<usize, LabelError> {
        let n = self.len();
        for w in [u, v] {
            if w >= n {
                return Err(LabelError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(LabelError::SameVertex);
        }
        Ok(self.values[u].abs_diff(self.values[v]))
    }

    /// Induced edge labels in the tree's edge order.
    pub fn edge_labels(&self, tree: &Tree) -> Vec<usize> {
        tree.edges().iter().map(|&(u, v)| self.values[u].abs_diff(self.values[v])).collect()
    }

    /// Renders the labelling document: `L`, then one `vertex label` line per vertex.
    pub fn to_text(&self) -> String {
        let mut out = String::from("L\n");
        for (v, b) in self.values.iter().enumerate() {
            out.push_str(&format!("{v} {b}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, LabelError> {
        let mut lines = content_lines(text);
        match lines.next() {
            Some((_, "L")) => {}
            Some((line, _)) => return Err(LabelError::Malformed { line, msg: "expected L header".into() }),
            None => return Err(LabelError::Malformed { line: 1, msg: "missing L header".into() }),
        }
        let pairs = lines
            .map(|(no, line)| parse_pair(no, line).map_err(|e| LabelError::Malformed { line: no, msg: e.to_string() }))
            .collect::<Result<Vec<_>, _>>()?;
        let n = pairs.len();
        let mut values = vec![usize::MAX; n];
        for (vertex, label) in pairs {
            if vertex >= n {
                return Err(LabelError::VertexOutOfRange { vertex, n });
            }
            if values[vertex] != usize::MAX {
                return Err(LabelError::Malformed { line: 0, msg: format!("vertex {vertex} labelled twice") });
            }
            values[vertex] = label;
        }
        Labelling::new(values)
    }
}

impl fmt::Display for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// True iff the induced edge labels are exactly `1..n`.
pub fn is_graceful(tree: &Tree, f: &Labelling) -> bool {
    let n = tree.n();
    if f.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    tree.edges().iter().all(|&(u, v)| {
        let d = f.values[u].abs_diff(f.values[v]);
        d != 0 && !std::mem::replace(&mut seen[d], true)
    })
}

/// Graceful, and every matched pair's labels sum to `n - 1`.
pub fn is_strongly_graceful(tree: &Tree, m: &Matching, f: &Labelling) -> Result<bool, LabelError> {
    if m.n() != tree.n() || !m.is_perfect() {
        return Err(LabelError::NotPerfect);
    }
    Ok(matched_sums_hold(m, f) && is_graceful(tree, f))
}

fn matched_sums_hold(m: &Matching, f: &Labelling) -> bool {
    let target = m.n() - 1;
    f.len() == m.n() && m.pairs().iter().all(|&(u, v)| f.values[u] + f.values[v] == target)
}

/// Whether `g[f]` is still graceful, for a graceful `f`.
pub fn is_graceful_perm(tree: &Tree, f: &Labelling, g: &LabelPermutation) -> Result<bool, LabelError> {
    if !is_graceful(tree, f) {
        return Err(LabelError::NotGraceful);
    }
    Ok(is_graceful(tree, &g.apply(f)?))
}

/// Whether `g` maps every labelling in `all_f` to a strongly graceful one.
///
/// `all_f` is expected to be the complete set of strongly graceful labellings
/// of `(tree, m)`, in which case this decides generalised strong gracefulness.
pub fn is_generalized_strong_perm(
    tree: &Tree,
    m: &Matching,
    g: &LabelPermutation,
    all_f: &[Labelling],
) -> Result<bool, LabelError> {
    if all_f.is_empty() {
        return Err(LabelError::NoLabellings);
    }
    for f in all_f {
        if !is_strongly_graceful(tree, m, &g.apply(f)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}
