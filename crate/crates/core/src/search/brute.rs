//! Exhaustive graceful and strongly graceful labelling search.

use crate::labelling::{LabelPermutation, Labelling};
use crate::tree::{Matching, Tree, Vertex};

use super::{Caps, SearchError};

const FREE: usize = usize::MAX;

/// What the search looks for.
#[derive(Debug, Clone, Copy)]
pub enum Mode<'a> {
    Graceful,
    /// Strongly graceful with respect to the given perfect matching.
    Strong(&'a Matching),
}

/// Every labelling of `tree` accepted by `mode`, sorted.
///
/// With `dedup_mod_group`, only the lexicographically smallest member of each
/// orbit is kept: orbits under `{e, r}` for graceful search and under the
/// four label permutations `{e, r, g1, g2}` for strong search.
pub fn brute_force_labellings(
    tree: &Tree,
    mode: Mode<'_>,
    dedup_mod_group: bool,
    caps: &Caps,
) -> Result<Vec<Labelling>, SearchError> {
    let n = tree.n();
    let partner = match mode {
        Mode::Graceful => {
            if n > caps.graceful {
                return Err(SearchError::CapExceeded { what: "graceful search", n, cap: caps.graceful });
            }
            None
        }
        Mode::Strong(m) => {
            if n > caps.strong {
                return Err(SearchError::CapExceeded { what: "strong search", n, cap: caps.strong });
            }
            if m.n() != n || !m.is_perfect() || m.pairs().iter().any(|&(u, v)| !tree.has_edge(u, v)) {
                return Err(SearchError::NotPerfect);
            }
            Some((0..n).map(|v| m.partner(v).expect("perfect")).collect())
        }
    };
    let mut found = Vec::new();
    if n == 1 {
        found.push(Labelling::identity(1));
    } else {
        let mut search = Search::new(tree, partner);
        search.descend(n - 1, &mut |values| found.push(Labelling::from_bijection(values.to_vec())));
    }
    if dedup_mod_group {
        let group: Vec<LabelPermutation> = match mode {
            Mode::Graceful => vec![LabelPermutation::complement(n)],
            Mode::Strong(_) => LabelPermutation::klein_four(n)?.into_iter().skip(1).collect(),
        };
        found.retain(|f| group.iter().all(|g| *f <= g.apply(f).expect("same size")));
    }
    found.sort_unstable();
    Ok(found)
}

/// Backtracking state. Edge labels are realised from the largest down: at
/// each step the largest unused edge label `k` must come from some label pair
/// `(a, a + k)` on a tree edge, and every way of placing such a pair is tried.
struct Search<'a> {
    tree: &'a Tree,
    n: usize,
    partner: Option<Vec<Vertex>>,
    label: Vec<usize>,
    holder: Vec<Vertex>,
    used: Vec<bool>,
    assigned: Vec<Vertex>,
    used_trail: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(tree: &'a Tree, partner: Option<Vec<Vertex>>) -> Self {
        let n = tree.n();
        Search {
            tree,
            n,
            partner,
            label: vec![FREE; n],
            holder: vec![FREE; n],
            used: vec![false; n],
            assigned: Vec::with_capacity(n),
            used_trail: Vec::with_capacity(n),
        }
    }

    fn checkpoint(&self) -> (usize, usize) {
        (self.assigned.len(), self.used_trail.len())
    }

    fn rollback(&mut self, (a, u): (usize, usize)) {
        while self.assigned.len() > a {
            let v = self.assigned.pop().unwrap();
            self.holder[self.label[v]] = FREE;
            self.label[v] = FREE;
        }
        while self.used_trail.len() > u {
            let d = self.used_trail.pop().unwrap();
            self.used[d] = false;
        }
    }

    /// Gives `v` label `b`, registering the labels of edges to labelled neighbours.
    /// On failure the state may be partially updated; the caller rolls back.
    fn assign_one(&mut self, v: Vertex, b: usize) -> bool {
        if self.label[v] == b {
            return true;
        }
        if self.label[v] != FREE || self.holder[b] != FREE {
            return false;
        }
        self.label[v] = b;
        self.holder[b] = v;
        self.assigned.push(v);
        for &w in self.tree.neighbors(v) {
            let lw = self.label[w];
            if lw != FREE {
                let d = b.abs_diff(lw);
                if self.used[d] {
                    return false;
                }
                self.used[d] = true;
                self.used_trail.push(d);
            }
        }
        true
    }

    /// In strong mode the matched partner takes the complementary label at once.
    fn assign(&mut self, v: Vertex, b: usize) -> bool {
        if !self.assign_one(v, b) {
            return false;
        }
        match &self.partner {
            Some(partner) => {
                let w = partner[v];
                self.assign_one(w, self.n - 1 - b)
            }
            None => true,
        }
    }

    fn try_pair(&mut self, first: (Vertex, usize), second: (Vertex, usize), emit: &mut dyn FnMut(&[usize]), k: usize) {
        let mark = self.checkpoint();
        if self.assign(first.0, first.1) && self.assign(second.0, second.1) {
            self.descend(k - 1, emit);
        }
        self.rollback(mark);
    }

    fn descend(&mut self, mut k: usize, emit: &mut dyn FnMut(&[usize])) {
        while k > 0 && self.used[k] {
            k -= 1;
        }
        if k == 0 {
            emit(&self.label);
            return;
        }
        let n = self.n;
        let strong = self.partner.is_some();
        if strong && k % 2 == 1 {
            // Odd labels come only from matched pairs (a, n-1-a).
            let a = (n - 1 - k) / 2;
            let b = n - 1 - a;
            if self.holder[a] != FREE || self.holder[b] != FREE {
                return;
            }
            for x in 0..n {
                let y = self.partner.as_ref().expect("strong mode")[x];
                if self.label[x] == FREE && self.label[y] == FREE {
                    self.try_pair((x, a), (y, b), emit, k);
                }
            }
            return;
        }
        let tree = self.tree;
        for a in 0..n - k {
            let b = a + k;
            match (self.holder[a], self.holder[b]) {
                (FREE, FREE) => {
                    for &(x, y) in tree.edges() {
                        if self.label[x] != FREE || self.label[y] != FREE {
                            continue;
                        }
                        if strong && self.partner.as_ref().unwrap()[x] == y {
                            continue;
                        }
                        self.try_pair((x, a), (y, b), emit, k);
                        self.try_pair((x, b), (y, a), emit, k);
                    }
                }
                (u, FREE) => self.extend_from(u, b, emit, k),
                (FREE, w) => self.extend_from(w, a, emit, k),
                _ => {}
            }
        }
    }

    fn extend_from(&mut self, anchor: Vertex, value: usize, emit: &mut dyn FnMut(&[usize]), k: usize) {
        let tree = self.tree;
        for &x in tree.neighbors(anchor) {
            if self.label[x] == FREE {
                let mark = self.checkpoint();
                if self.assign(x, value) {
                    self.descend(k - 1, emit);
                }
                self.rollback(mark);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labelling::{is_graceful, is_strongly_graceful};

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            if prefix.len() == used.len() {
                out.push(prefix.clone());
                return;
            }
            for b in 0..used.len() {
                if !used[b] {
                    used[b] = true;
                    prefix.push(b);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[b] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    #[test]
    fn k2_strong_has_two_labellings_one_orbit() {
        let t = Tree::path(2);
        let m = Matching::perfect(&t, [(0, 1)]).unwrap();
        let caps = Caps::default();
        let all = brute_force_labellings(&t, Mode::Strong(&m), false, &caps).unwrap();
        assert_eq!(all.iter().map(|f| f.values().to_vec()).collect::<Vec<_>>(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(brute_force_labellings(&t, Mode::Strong(&m), true, &caps).unwrap().len(), 1);
    }

    #[test]
    fn p4_strong_contains_base_labelling() {
        let t = Tree::path(4);
        let m = Matching::perfect(&t, [(0, 1), (2, 3)]).unwrap();
        let all = brute_force_labellings(&t, Mode::Strong(&m), false, &Caps::default()).unwrap();
        assert!(all.contains(&Labelling::new(vec![0, 3, 1, 2]).unwrap()));
    }

    #[test]
    fn matches_permutation_enumeration() {
        // Every tree up to 7 vertices, compared with filtering all n! bijections.
        let caps = Caps::default();
        for n in 1..=7 {
            let perms = all_permutations(n);
            for t in super::super::FreeTrees::new(n) {
                let expect: Vec<Labelling> =
                    perms.iter().map(|p| Labelling::new(p.clone()).unwrap()).filter(|f| is_graceful(&t, f)).collect();
                let got = brute_force_labellings(&t, Mode::Graceful, false, &caps).unwrap();
                assert_eq!(got, expect, "graceful, tree {t:?}");
                if let Some(m) = crate::tree::perfect_matching(&t) {
                    let expect: Vec<Labelling> =
                        expect.into_iter().filter(|f| is_strongly_graceful(&t, &m, f).unwrap()).collect();
                    let got = brute_force_labellings(&t, Mode::Strong(&m), false, &caps).unwrap();
                    assert_eq!(got, expect, "strong, tree {t:?}");
                }
            }
        }
    }

    #[test]
    fn caps_are_enforced() {
        let caps = Caps { graceful: 3, strong: 3, ..Caps::default() };
        let t = Tree::path(4);
        let m = Matching::perfect(&t, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            brute_force_labellings(&t, Mode::Graceful, false, &caps),
            Err(SearchError::CapExceeded { .. })
        ));
        assert!(matches!(
            brute_force_labellings(&t, Mode::Strong(&m), false, &caps),
            Err(SearchError::CapExceeded { .. })
        ));
        let partial = Matching::new(&t, [(1, 2)]).unwrap();
        assert!(matches!(
            brute_force_labellings(&t, Mode::Strong(&partial), false, &Caps::default()),
            Err(SearchError::NotPerfect)
        ));
    }
}
