use super::{Matching, Tree, TreeError, Vertex};

/// A spike tree together with its pendant matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spiked {
    pub tree: Tree,
    /// The `n` new pendant edges `(v, n + v)`.
    pub matching: Matching,
    /// Spike partner of each original vertex; original vertices keep their ids.
    pub partner: Vec<Vertex>,
}

/// Attaches a new pendant vertex `n + v` to every vertex `v`.
pub fn spike(tree: &Tree) -> Spiked {
    let n = tree.n();
    let edges = tree.edges().iter().copied().chain((0..n).map(|v| (v, n + v)));
    let spiked = Tree::new(2 * n, edges).expect("spike of a tree is a tree");
    let matching = Matching::perfect(&spiked, (0..n).map(|v| (v, n + v))).expect("pendant edges are disjoint");
    Spiked { tree: spiked, matching, partner: (n..2 * n).collect() }
}

/// A contree and the map from original vertices to contracted ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub tree: Tree,
    /// `map[v]` is the contracted vertex containing `v`.
    pub map: Vec<Vertex>,
}

/// Contracts every edge of a perfect matching.
///
/// Contracted vertices are numbered by the smaller endpoint of their pair,
/// so contracting a spike tree returns the original ids.
pub fn contract_matching(tree: &Tree, matching: &Matching) -> Result<Contraction, TreeError> {
    if matching.n() != tree.n() {
        return Err(TreeError::NotPerfect);
    }
    for &(u, v) in matching.pairs() {
        if !tree.has_edge(u, v) {
            return Err(TreeError::NotAnEdge(u, v));
        }
    }
    if !matching.is_perfect() {
        return Err(TreeError::NotPerfect);
    }
    let mut map = vec![0; tree.n()];
    for (id, &(u, v)) in matching.pairs().iter().enumerate() {
        map[u] = id;
        map[v] = id;
    }
    let edges = tree.edges().iter().filter(|&&(u, v)| !matching.contains(u, v)).map(|&(u, v)| (map[u], map[v]));
    let contracted = Tree::new(matching.len(), edges)?;
    Ok(Contraction { tree: contracted, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{end_edge_perfect_matching, longest_path};

    #[test]
    fn spike_of_k1_and_k2() {
        let s = spike(&Tree::path(1));
        assert_eq!(s.tree, Tree::path(2));
        assert_eq!(s.matching.pairs(), &[(0, 1)]);

        let s = spike(&Tree::path(2));
        assert_eq!(s.tree.edges(), &[(0, 1), (0, 2), (1, 3)]);
        assert_eq!(s.matching.pairs(), &[(0, 2), (1, 3)]);
        assert_eq!(s.tree.end_edges(), s.matching.pairs());
        assert_eq!(end_edge_perfect_matching(&s.tree).unwrap(), s.matching);
        assert_eq!(s.partner, vec![2, 3]);
    }

    #[test]
    fn spike_of_path_on_three() {
        let s = spike(&Tree::path(3));
        assert_eq!(s.tree.n(), 6);
        assert_eq!(s.matching.len(), 3);
        assert_eq!(s.tree.end_edges(), s.matching.pairs());
        // Leaf-to-leaf through the original path: 3-0-1-2-5.
        assert_eq!(longest_path(&s.tree), vec![3, 0, 1, 2, 5]);
    }

    #[test]
    fn contractions() {
        let c = contract_matching(&Tree::path(2), &Matching::perfect(&Tree::path(2), [(0, 1)]).unwrap()).unwrap();
        assert_eq!(c.tree, Tree::path(1));
        let p4 = Tree::path(4);
        let m = Matching::perfect(&p4, [(0, 1), (2, 3)]).unwrap();
        let c = contract_matching(&p4, &m).unwrap();
        assert_eq!(c.tree, Tree::path(2));
        assert_eq!(c.map, vec![0, 0, 1, 1]);
    }

    #[test]
    fn contract_rejects_non_perfect() {
        let p4 = Tree::path(4);
        let m = Matching::new(&p4, [(1, 2)]).unwrap();
        assert_eq!(contract_matching(&p4, &m), Err(TreeError::NotPerfect));
        let other = Matching::new(&Tree::star(4), [(0, 3)]).unwrap();
        assert_eq!(contract_matching(&p4, &other), Err(TreeError::NotAnEdge(0, 3)));
    }

    #[test]
    fn spike_then_contract_is_identity_on_ids() {
        let t = Tree::new(5, [(0, 3), (3, 1), (1, 4), (3, 2)]).unwrap();
        let s = spike(&t);
        let c = contract_matching(&s.tree, &s.matching).unwrap();
        assert_eq!(c.tree, t);
    }
}
