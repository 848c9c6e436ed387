//! Strongly graceful labellings of lobsters whose end edges form a perfect
//! matching, built by peeling two spine vertices at a time.
//!
//! Each step removes the first two spine vertices `v0, v1`, labels the
//! remaining lobster recursively with label 0 on `v2`, shifts every label up
//! by one and gives `v0, v1` the labels `0, n - 1`. The complement,
//! pair-swap and complement-pair-swap permutations then move label 0 onto
//! `v1`, `v2` and the partner `u2` of `v2`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::labelling::{is_strongly_graceful, LabelError, LabelPermutation, Labelling, StrongQuad};
use crate::tree::{end_edge_perfect_matching, is_k_distant, make_spine, Matching, Spine, SpineError, Tree, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LobsterError {
    #[error("lobster labelling needs an even number of vertices, at least 4 (got {0})")]
    Size(usize),
    #[error("no end-edge perfect matching")]
    NoEndEdgeMatching,
    #[error("tree is not a lobster (2-distant)")]
    NotLobster,
    #[error("no longest path covers the tree within distance 2")]
    NoSpine,
    #[error("spine condition fails: {0}")]
    SpineShape(&'static str),
    #[error("derived spine on {n} vertices is invalid: {source}")]
    DerivedSpine { n: usize, source: SpineError },
    #[error("verification failed on the {n}-vertex subtree [{edges}]: {source}")]
    Verification { n: usize, edges: String, source: LabelError },
}

/// Which branch of the peeling step applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StripCase {
    /// After removing `v0, v1`, vertex `v2` still has a pendant path `x, y` besides `u2` and `v3`.
    Branch,
    /// After removing `v0, v1`, vertex `v2` is adjacent to `u2` and `v3` only.
    Bare,
}

impl fmt::Display for StripCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StripCase::Branch => "branch",
            StripCase::Bare => "bare",
        })
    }
}

/// Verifies the structure a matched lobster spine must have and returns, for
/// each interior spine index `i` (`2 <= i <= p - 2`), the off-spine leaf
/// matched with `v_i`.
pub fn spine_partners(tree: &Tree, spine: &Spine, m: &Matching) -> Result<Vec<(usize, Vertex)>, LobsterError> {
    let p = spine.last();
    let v = spine.vertices();
    if p < 3 {
        return Err(LobsterError::SpineShape("spine has fewer than four vertices"));
    }
    if tree.degree(v[0]) != 1 || !m.contains(v[0], v[1]) {
        return Err(LobsterError::SpineShape("v0 must be a leaf matched with v1"));
    }
    if tree.degree(v[1]) != 2 {
        return Err(LobsterError::SpineShape("v1 must have degree 2"));
    }
    if !m.contains(v[p - 1], v[p]) {
        return Err(LobsterError::SpineShape("v(p-1) v(p) must be matched"));
    }
    if (1..p - 1).any(|i| m.contains(v[i], v[i + 1])) {
        return Err(LobsterError::SpineShape("an interior spine edge is matched"));
    }
    let mut on_spine = vec![false; tree.n()];
    for &w in v {
        on_spine[w] = true;
    }
    (2..p - 1)
        .map(|i| match m.partner(v[i]) {
            Some(u) if !on_spine[u] && tree.is_leaf(u) => Ok((i, u)),
            _ => Err(LobsterError::SpineShape("interior spine vertex not matched with an off-spine leaf")),
        })
        .collect()
}

/// The lobster left after removing `v0` and `v1`, renumbered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strip {
    pub tree: Tree,
    pub matching: Matching,
    pub spine: Spine,
    pub case: StripCase,
    /// New id of every surviving vertex of the original tree.
    pub map: Vec<Option<Vertex>>,
}

/// One peeling step. The derived spine is `u2, v2, v3, ...` in the bare case
/// and `y, x, v2, v3, ...` in the branch case, where `x` is the smallest-id
/// branch vertex of `v2`; it is re-validated as a longest covering path.
pub fn strip_step(tree: &Tree, spine: &Spine) -> Result<Strip, LobsterError> {
    let v = spine.vertices();
    if v.len() < 4 || tree.n() < 6 {
        return Err(LobsterError::SpineShape("nothing to strip from the base case"));
    }
    let (sub, map) =
        tree.without(&v[..2]).map_err(|_| LobsterError::SpineShape("removing v0, v1 disconnects the tree"))?;
    let matching = end_edge_perfect_matching(&sub).ok_or(LobsterError::NoEndEdgeMatching)?;
    let new = |w: Vertex| map[w].expect("survivor");
    let v2 = new(v[2]);
    let v3 = new(v[3]);
    let u2 =
        matching.partner(v2).filter(|&u| u != v3).ok_or(LobsterError::SpineShape("v2 is not matched off the spine"))?;
    let rest = v[2..].iter().map(|&w| new(w));
    let (case, prefix) = match sub.degree(v2) {
        2 => (StripCase::Bare, vec![u2]),
        d if d >= 3 => {
            let x = sub
                .neighbors(v2)
                .iter()
                .copied()
                .find(|&x| x != u2 && x != v3 && sub.degree(x) == 2)
                .ok_or(LobsterError::SpineShape("v2 carries no pendant two-vertex path"))?;
            let y = matching
                .partner(x)
                .filter(|&y| sub.is_leaf(y))
                .ok_or(LobsterError::SpineShape("branch vertex next to v2 is not matched with a leaf"))?;
            (StripCase::Branch, vec![y, x])
        }
        _ => return Err(LobsterError::SpineShape("v2 became a leaf")),
    };
    let derived: Vec<Vertex> = prefix.into_iter().chain(rest).collect();
    let spine =
        Spine::new(&sub, derived, spine.k()).map_err(|source| LobsterError::DerivedSpine { n: sub.n(), source })?;
    Ok(Strip { tree: sub, matching, spine, case, map })
}

/// A verified quad together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LobsterLabelling {
    pub quad: StrongQuad,
    /// The spine the construction ran along (possibly the reversed tie-break spine).
    pub spine: Spine,
    pub reversed: bool,
    /// Why the tie-break orientation failed, when the reversed one was needed.
    pub forward_error: Option<LobsterError>,
    /// Peeling case at each level, outermost first; the base case is not listed.
    pub cases: Vec<StripCase>,
}

impl LobsterLabelling {
    /// Number of recursion levels including the base case.
    pub fn depth(&self) -> usize {
        self.cases.len() + 1
    }
}

fn check_family(tree: &Tree) -> Result<Matching, LobsterError> {
    let n = tree.n();
    if n < 4 || n % 2 == 1 {
        return Err(LobsterError::Size(n));
    }
    let m = end_edge_perfect_matching(tree).ok_or(LobsterError::NoEndEdgeMatching)?;
    if !is_k_distant(tree, 2) {
        return Err(LobsterError::NotLobster);
    }
    Ok(m)
}

/// Labels a lobster whose end edges form a perfect matching, returning the
/// four strongly graceful labellings with label 0 on `v0`, `v1`, `v2`, `u2`.
pub fn label_lobster(tree: &Tree) -> Result<StrongQuad, LobsterError> {
    label_lobster_traced(tree).map(|l| l.quad)
}

/// As [`label_lobster`], also reporting the spine, orientation and peeling cases.
///
/// The tie-break spine is tried first; if the construction fails along it the
/// reversed spine is tried before giving up.
pub fn label_lobster_traced(tree: &Tree) -> Result<LobsterLabelling, LobsterError> {
    let m = check_family(tree)?;
    let spine = make_spine(tree, 2).ok_or(LobsterError::NoSpine)?;
    match label_along(tree, &m, &spine) {
        Ok((quad, cases)) => Ok(LobsterLabelling { quad, spine, reversed: false, forward_error: None, cases }),
        Err(forward) => {
            let back = spine.reversed();
            let (quad, cases) = label_along(tree, &m, &back)?;
            Ok(LobsterLabelling { quad, spine: back, reversed: true, forward_error: Some(forward), cases })
        }
    }
}

/// Runs the construction along a given spine without trying the other orientation.
pub fn label_along(tree: &Tree, m: &Matching, spine: &Spine) -> Result<(StrongQuad, Vec<StripCase>), LobsterError> {
    spine_partners(tree, spine, m)?;
    let mut cases = Vec::new();
    let f = base_labelling(tree, m, spine, &mut cases)?;
    let v = spine.vertices();
    let u2 = m.partner(v[2]).expect("perfect matching");
    let quad = StrongQuad::from_base(f, v[0], v[1], v[2], u2).map_err(|e| failure(tree, e))?;
    quad.verify(tree, m).map_err(|e| failure(tree, e))?;
    Ok((quad, cases))
}

fn failure(tree: &Tree, source: LabelError) -> LobsterError {
    let edges = tree.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ");
    LobsterError::Verification { n: tree.n(), edges, source }
}

/// Strongly graceful `f` with `f(v0) = 0`, `f(v1) = n-1`, `f(v2) = 1`, `f(u2) = n-2`.
fn base_labelling(
    tree: &Tree,
    m: &Matching,
    spine: &Spine,
    cases: &mut Vec<StripCase>,
) -> Result<Labelling, LobsterError> {
    let n = tree.n();
    let v = spine.vertices();
    let f = if n == 4 {
        if v.len() != 4 {
            return Err(LobsterError::SpineShape("four-vertex base must be a path"));
        }
        let mut values = vec![0; 4];
        for (&w, b) in v.iter().zip([0, 3, 1, 2]) {
            values[w] = b;
        }
        Labelling::new(values).expect("base labels are a bijection")
    } else {
        let strip = strip_step(tree, spine)?;
        cases.push(strip.case);
        let child = base_labelling(&strip.tree, &strip.matching, &strip.spine, cases)?;
        // Label 0 must sit on v2: index 1 of the derived spine in the bare
        // case (complement), index 2 in the branch case (pair swap).
        let to_zero = match strip.case {
            StripCase::Bare => LabelPermutation::complement(n - 2),
            StripCase::Branch => LabelPermutation::pair_swap(n - 2).expect("even size"),
        };
        let h = to_zero.apply(&child).expect("sizes agree");
        let mut values = vec![0; n];
        for (w, slot) in strip.map.iter().enumerate() {
            if let Some(id) = slot {
                values[w] = h.get(*id) + 1;
            }
        }
        values[v[0]] = 0;
        values[v[1]] = n - 1;
        Labelling::new(values).map_err(|e| failure(tree, e))?
    };
    let u2 = m.partner(v[2]).expect("perfect matching");
    if !is_strongly_graceful(tree, m, &f).map_err(|e| failure(tree, e))? {
        return Err(failure(tree, LabelError::NotStronglyGraceful));
    }
    let placed = [f.get(v[0]), f.get(v[1]), f.get(v[2]), f.get(u2)];
    if placed != [0, n - 1, 1, n - 2] {
        return Err(failure(
            tree,
            LabelError::QuadVerification { member: "f", reason: format!("anchors carry {placed:?}") },
        ));
    }
    Ok(f)
}
