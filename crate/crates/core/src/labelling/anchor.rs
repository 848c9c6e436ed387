use serde::{Deserialize, Serialize};

use super::{is_strongly_graceful, LabelError, LabelPermutation, Labelling};
use crate::tree::{Matching, Tree, Vertex};

/// The path carrying labels `0, n-1, 1, n-2` whose outer edges are matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AnchorPath {
    pub v0: Vertex,
    pub v1: Vertex,
    pub v2: Vertex,
    pub v3: Vertex,
}

/// Where the edge labelled `n - 2` sits in a strongly graceful labelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnchorLookup {
    /// The edge joins labels `n - 1` and `1`, giving an anchor path.
    Path(AnchorPath),
    /// The edge joins labels `0` and `n - 2` instead.
    ZeroMeetsSecondLargest { zero: Vertex, second_largest: Vertex },
}

impl AnchorLookup {
    pub fn path(self) -> Option<AnchorPath> {
        match self {
            AnchorLookup::Path(p) => Some(p),
            AnchorLookup::ZeroMeetsSecondLargest { .. } => None,
        }
    }
}

/// Locates the vertices labelled `0, n-1, 1, n-2` and reports how the
/// label `n - 2` is realised.
pub fn anchor_lookup(tree: &Tree, m: &Matching, f: &Labelling) -> Result<AnchorLookup, LabelError> {
    let n = tree.n();
    if n < 4 {
        return Err(LabelError::TooSmall { n, min: 4 });
    }
    if !is_strongly_graceful(tree, m, f)? {
        return Err(LabelError::NotStronglyGraceful);
    }
    let mut at = vec![0; n];
    for (v, &b) in f.values().iter().enumerate() {
        at[b] = v;
    }
    let (v0, v1, v2, v3) = (at[0], at[n - 1], at[1], at[n - 2]);
    if tree.has_edge(v1, v2) {
        debug_assert!(m.contains(v0, v1) && m.contains(v2, v3) && tree.has_edge(v0, v1));
        Ok(AnchorLookup::Path(AnchorPath { v0, v1, v2, v3 }))
    } else {
        // Exactly one edge carries label n - 2; with (1, n-1) absent it must be (0, n-2).
        debug_assert!(tree.has_edge(v0, v3));
        Ok(AnchorLookup::ZeroMeetsSecondLargest { zero: v0, second_largest: v3 })
    }
}

/// The anchor path, or `None` when labels `0` and `n - 2` are adjacent instead.
pub fn extract_anchor_path(tree: &Tree, m: &Matching, f: &Labelling) -> Result<Option<AnchorPath>, LabelError> {
    anchor_lookup(tree, m, f).map(AnchorLookup::path)
}

/// Four strongly graceful labellings placing label 0 on four anchor vertices:
/// `f(v0) = f1(v1) = f2(v2) = f3(u2) = 0`, where `v2 u2` is matched.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrongQuad {
    pub f: Labelling,
    pub f1: Labelling,
    pub f2: Labelling,
    pub f3: Labelling,
    pub v0: Vertex,
    pub v1: Vertex,
    pub v2: Vertex,
    pub u2: Vertex,
}

impl StrongQuad {
    /// Builds `(f, r[f], g1[f], g2[f])` for a labelling with `f(v0) = 0`,
    /// `f(v1) = n-1`, `f(v2) = 1` and `f(u2) = n-2`.
    pub(crate) fn from_base(f: Labelling, v0: Vertex, v1: Vertex, v2: Vertex, u2: Vertex) -> Result<Self, LabelError> {
        let n = f.len();
        let [_, r, g1, g2] = LabelPermutation::klein_four(n)?;
        Ok(StrongQuad { f1: r.apply(&f)?, f2: g1.apply(&f)?, f3: g2.apply(&f)?, f, v0, v1, v2, u2 })
    }

    pub fn members(&self) -> [(&'static str, &Labelling); 4] {
        [("f", &self.f), ("f1", &self.f1), ("f2", &self.f2), ("f3", &self.f3)]
    }

    pub fn anchors(&self) -> [Vertex; 4] {
        [self.v0, self.v1, self.v2, self.u2]
    }

    /// Checks all four members are strongly graceful with label 0 on their anchor.
    pub fn verify(&self, tree: &Tree, m: &Matching) -> Result<(), LabelError> {
        if !m.contains(self.v2, self.u2) {
            return Err(LabelError::QuadVerification {
                member: "f3",
                reason: format!("anchor {} is not matched with {}", self.u2, self.v2),
            });
        }
        for ((member, f), anchor) in self.members().into_iter().zip(self.anchors()) {
            if !is_strongly_graceful(tree, m, f)? {
                return Err(LabelError::QuadVerification { member, reason: "not strongly graceful".into() });
            }
            if f.get(anchor) != 0 {
                return Err(LabelError::QuadVerification {
                    member,
                    reason: format!("anchor vertex {anchor} has label {}", f.get(anchor)),
                });
            }
        }
        Ok(())
    }
}

/// Applies the complement, pair-swap and complement-pair-swap permutations to
/// a strongly graceful labelling and checks the resulting label placements
/// along its anchor path.
pub fn anchored_quad_from(f: &Labelling, tree: &Tree, m: &Matching) -> Result<StrongQuad, LabelError> {
    let n = tree.n();
    let path = match anchor_lookup(tree, m, f)? {
        AnchorLookup::Path(p) => p,
        AnchorLookup::ZeroMeetsSecondLargest { .. } => return Err(LabelError::AnchorAbsent { second_largest: n - 2 }),
    };
    let AnchorPath { v0, v1, v2, v3 } = path;
    let quad = StrongQuad::from_base(f.clone(), v0, v1, v2, v3)?;
    quad.verify(tree, m)?;
    let expected: [(&'static str, &Labelling, [usize; 4]); 3] = [
        ("f1", &quad.f1, [n - 1, 0, n - 2, 1]),
        ("f2", &quad.f2, [1, n - 2, 0, n - 1]),
        ("f3", &quad.f3, [n - 2, 1, n - 1, 0]),
    ];
    for (member, g, labels) in expected {
        let got = [g.get(v0), g.get(v1), g.get(v2), g.get(v3)];
        if got != labels {
            return Err(LabelError::QuadVerification {
                member,
                reason: format!("anchor path carries {got:?}, expected {labels:?}"),
            });
        }
    }
    Ok(quad)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> (Tree, Matching) {
        let t = Tree::path(4);
        let m = Matching::perfect(&t, [(0, 1), (2, 3)]).unwrap();
        (t, m)
    }

    #[test]
    fn anchor_path_of_p4() {
        let (t, m) = p4();
        let f = Labelling::new(vec![0, 3, 1, 2]).unwrap();
        assert_eq!(extract_anchor_path(&t, &m, &f).unwrap(), Some(AnchorPath { v0: 0, v1: 1, v2: 2, v3: 3 }));
    }

    #[test]
    fn anchor_needs_four_vertices() {
        let t = Tree::path(2);
        let m = Matching::perfect(&t, [(0, 1)]).unwrap();
        let f = Labelling::new(vec![0, 1]).unwrap();
        assert_eq!(extract_anchor_path(&t, &m, &f), Err(LabelError::TooSmall { n: 2, min: 4 }));
    }

    #[test]
    fn quad_of_p4_base() {
        let (t, m) = p4();
        let f = Labelling::new(vec![0, 3, 1, 2]).unwrap();
        let q = anchored_quad_from(&f, &t, &m).unwrap();
        assert_eq!(q.f1.values(), &[3, 0, 2, 1]);
        assert_eq!(q.f2.values(), &[1, 2, 0, 3]);
        assert_eq!(q.f3.values(), &[2, 1, 3, 0]);
        assert_eq!(q.anchors(), [0, 1, 2, 3]);
        assert_eq!((q.f1.get(1), q.f2.get(2), q.f3.get(3)), (0, 0, 0));
        for (_, g) in q.members() {
            assert!(m.pairs().iter().all(|&(u, v)| g.get(u) + g.get(v) == 3));
        }
    }

    #[test]
    fn quad_rejects_non_strong() {
        let (t, m) = p4();
        let f = Labelling::new(vec![1, 3, 0, 2]).unwrap();
        assert_eq!(anchored_quad_from(&f, &t, &m), Err(LabelError::NotStronglyGraceful));
    }

    #[test]
    fn verify_catches_wrong_anchor() {
        let (t, m) = p4();
        let f = Labelling::new(vec![0, 3, 1, 2]).unwrap();
        let mut q = anchored_quad_from(&f, &t, &m).unwrap();
        q.u2 = 2;
        q.v2 = 3;
        assert!(matches!(q.verify(&t, &m), Err(LabelError::QuadVerification { member: "f2", .. })));
    }
}
