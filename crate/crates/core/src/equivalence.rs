//! Moving between graceful labellings of a tree and strongly graceful
//! labellings of its spike tree.

use thiserror::Error;

use crate::labelling::{is_graceful, is_strongly_graceful, LabelError, Labelling};
use crate::tree::{contract_matching, spike, Matching, Tree, TreeError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error("labelling is not graceful")]
    NotGraceful,
    #[error("labelling is not strongly graceful")]
    NotStronglyGraceful,
    #[error("matched vertices {0} and {1} have labels of equal parity")]
    SameParity(Vertex, Vertex),
    #[error("constructed labelling failed its check: {0}")]
    Postcondition(&'static str),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// A spike tree with its pendant matching and a strongly graceful labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lifted {
    pub tree: Tree,
    pub matching: Matching,
    pub labelling: Labelling,
    /// Spike partner of each original vertex.
    pub partner: Vec<Vertex>,
}

/// Lifts a graceful labelling of an `m`-vertex tree to its spike tree.
///
/// The pendant partner `v'` of `v` receives `2 f(v)` and `v` itself receives
/// `2m - 1 - 2 f(v)`, so every pendant pair sums to `2m - 1` and each original
/// edge label doubles.
pub fn lift_to_spike(tree: &Tree, f: &Labelling) -> Result<Lifted, EquivalenceError> {
    if !is_graceful(tree, f) {
        return Err(EquivalenceError::NotGraceful);
    }
    let m = tree.n();
    let spiked = spike(tree);
    let mut values = vec![0; 2 * m];
    for v in 0..m {
        values[spiked.partner[v]] = 2 * f.get(v);
        values[v] = 2 * m - 1 - 2 * f.get(v);
    }
    let labelling = Labelling::new(values)?;
    if !is_strongly_graceful(&spiked.tree, &spiked.matching, &labelling)? {
        return Err(EquivalenceError::Postcondition("lifted labelling is not strongly graceful"));
    }
    Ok(Lifted { tree: spiked.tree, matching: spiked.matching, labelling, partner: spiked.partner })
}

/// A contree with the graceful labelling read off the matched pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projected {
    pub tree: Tree,
    pub labelling: Labelling,
    /// Contracted vertex of each original vertex.
    pub map: Vec<Vertex>,
}

/// Contracts the matching and labels each contracted vertex with half the
/// even label of its pair, whichever endpoint carries it.
pub fn project_to_contree(tree: &Tree, m: &Matching, g: &Labelling) -> Result<Projected, EquivalenceError> {
    if !is_strongly_graceful(tree, m, g)? {
        return Err(EquivalenceError::NotStronglyGraceful);
    }
    let contraction = contract_matching(tree, m)?;
    let mut values = vec![0; m.len()];
    for &(u, v) in m.pairs() {
        let (a, b) = (g.get(u), g.get(v));
        let even = match (a % 2, b % 2) {
            (0, 1) => a,
            (1, 0) => b,
            _ => return Err(EquivalenceError::SameParity(u, v)),
        };
        values[contraction.map[u]] = even / 2;
    }
    let labelling = Labelling::new(values)?;
    if !is_graceful(&contraction.tree, &labelling) {
        return Err(EquivalenceError::Postcondition("projected labelling is not graceful"));
    }
    Ok(Projected { tree: contraction.tree, labelling, map: contraction.map })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(v: &[usize]) -> Labelling {
        Labelling::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lift_k2() {
        let lifted = lift_to_spike(&Tree::path(2), &lab(&[0, 1])).unwrap();
        // Spike of K2 is the path 2-0-1-3: a'=2, a=0, b=1, b'=3.
        assert_eq!(lifted.labelling.values(), &[3, 1, 0, 2]);
        let path = [2, 0, 1, 3];
        let labels: Vec<usize> = path.iter().map(|&v| lifted.labelling.get(v)).collect();
        assert_eq!(labels, vec![0, 3, 1, 2]);
        let edge_labels: Vec<usize> =
            path.windows(2).map(|w| lifted.labelling.edge_label(w[0], w[1]).unwrap()).collect();
        assert_eq!(edge_labels, vec![3, 2, 1]);
    }

    #[test]
    fn lift_k1() {
        let lifted = lift_to_spike(&Tree::path(1), &lab(&[0])).unwrap();
        assert_eq!(lifted.tree, Tree::path(2));
        assert_eq!(lifted.labelling.values(), &[1, 0]);
    }

    #[test]
    fn lift_rejects_non_graceful() {
        assert_eq!(lift_to_spike(&Tree::path(4), &lab(&[0, 1, 2, 3])), Err(EquivalenceError::NotGraceful));
    }

    #[test]
    fn matched_labels_cover_odd_values_once() {
        for m in 1..=10usize {
            let mut labels: Vec<usize> = (0..m).map(|b| (2 * m - 1).abs_diff(4 * b)).collect();
            labels.sort_unstable();
            let odd: Vec<usize> = (0..m).map(|i| 2 * i + 1).collect();
            assert_eq!(labels, odd, "m = {m}");
        }
    }

    #[test]
    fn project_p4() {
        let t = Tree::path(4);
        let m = Matching::perfect(&t, [(0, 1), (2, 3)]).unwrap();
        let p = project_to_contree(&t, &m, &lab(&[0, 3, 1, 2])).unwrap();
        assert_eq!(p.tree, Tree::path(2));
        assert_eq!(p.labelling.values(), &[0, 1]);
        assert_eq!(project_to_contree(&t, &m, &lab(&[1, 3, 0, 2])), Err(EquivalenceError::NotStronglyGraceful));
    }

    #[test]
    fn project_k2() {
        let t = Tree::path(2);
        let m = Matching::perfect(&t, [(0, 1)]).unwrap();
        let p = project_to_contree(&t, &m, &lab(&[0, 1])).unwrap();
        assert_eq!(p.tree, Tree::path(1));
        assert_eq!(p.labelling.values(), &[0]);
    }

    #[test]
    fn lift_doubles_original_edge_labels() {
        let t = Tree::new(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let f = lab(&[0, 4, 3, 2, 1]);
        assert!(is_graceful(&t, &f));
        let lifted = lift_to_spike(&t, &f).unwrap();
        for &(u, v) in t.edges() {
            assert_eq!(lifted.labelling.edge_label(u, v).unwrap(), 2 * f.edge_label(u, v).unwrap());
        }
        let back = project_to_contree(&lifted.tree, &lifted.matching, &lifted.labelling).unwrap();
        assert_eq!(back.tree, t);
        assert_eq!(back.labelling, f);
    }
}
