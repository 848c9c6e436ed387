//! Trees on vertices `0..n`, their matchings, paths and structural transforms.

mod canon;
mod matching;
mod paths;
mod transform;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use canon::canonical_form;
pub use matching::{end_edge_perfect_matching, perfect_matching, Matching};
pub use paths::{
    cover_radius, diameter, is_k_distant, is_k_distant_by_paths, longest_path, make_spine, Spine, SpineError,
};
pub use transform::{contract_matching, spike, Contraction, Spiked};

/// Vertex identifier.
pub type Vertex = usize;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("tree must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge {0} {1} is not an edge of the tree")]
    NotAnEdge(Vertex, Vertex),
    #[error("vertex {0} is covered twice by the matching")]
    OverlappingMatching(Vertex),
    #[error("matching is not perfect")]
    NotPerfect,
}

/// Orders an edge so that the smaller endpoint comes first.
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A validated tree. Edges are kept sorted and adjacency lists ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
}

impl Tree {
    /// Builds a tree on `n` vertices, checking every tree invariant.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::with_capacity(n - 1);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(TreeError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            list.push(edge(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(TreeError::DuplicateEdge(w[0].0, w[0].1));
        }
        if list.len() != n - 1 {
            return Err(TreeError::EdgeCount { expected: n - 1, found: list.len() });
        }
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let tree = Tree { edges: list, adj };
        if tree.bfs_distances(&[0]).contains(&usize::MAX) {
            return Err(TreeError::Disconnected);
        }
        Ok(tree)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Tree::new(n, (1..n).map(|i| (i - 1, i))).expect("path is a tree")
    }

    /// The star with center 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        Tree::new(n, (1..n).map(|i| (0, i))).expect("star is a tree")
    }

    /// Builds a tree from a parent array, `parent[0]` being ignored.
    pub fn from_parents(parent: &[Vertex]) -> Result<Self, TreeError> {
        Tree::new(parent.len(), parent.iter().enumerate().skip(1).map(|(v, &p)| (p, v)))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.adj[v].len() == 1
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges incident to a degree-1 vertex.
    pub fn end_edges(&self) -> Vec<Edge> {
        self.edges.iter().copied().filter(|&(u, v)| self.is_leaf(u) || self.is_leaf(v)).collect()
    }

    /// Multi-source BFS distances; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, sources: &[Vertex]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s] != 0 {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The unique path from `from` to `to`.
    pub fn path_between(&self, from: Vertex, to: Vertex) -> Vec<Vertex> {
        let mut parent = vec![usize::MAX; self.n()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &w in &self.adj[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// True when the vertices form a simple path in this tree.
    pub fn is_path(&self, vertices: &[Vertex]) -> bool {
        let mut seen = vec![false; self.n()];
        for &v in vertices {
            if v >= self.n() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        vertices.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// Removes `removed` and renumbers the survivors in increasing id order.
    ///
    /// Returns the subtree and, for every old vertex, its new id if it survived.
    pub fn without(&self, removed: &[Vertex]) -> Result<(Tree, Vec<Option<Vertex>>), TreeError> {
        let mut map = vec![Some(0); self.n()];
        for &v in removed {
            map[v] = None;
        }
        let mut next = 0;
        for slot in map.iter_mut().flatten() {
            *slot = next;
            next += 1;
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| Some((map[u]?, map[v]?)));
        Ok((Tree::new(next, edges)?, map))
    }

    /// Renders the edge-list document.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

/// Yields `(line number, trimmed content)` for every non-blank line with comments stripped.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub(crate) fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), TreeError> {
    let malformed = |msg: &str| TreeError::Malformed { line: line_no, msg: msg.to_string() };
    let mut parts = line.split_whitespace();
    let mut next = || -> Result<usize, TreeError> {
        parts
            .next()
            .ok_or_else(|| malformed("expected two integers"))?
            .parse()
            .map_err(|_| malformed("invalid integer"))
    };
    let pair = (next()?, next()?);
    if parts.next().is_some() {
        return Err(malformed("trailing tokens"));
    }
    Ok(pair)
}

/// Parses the edge-list document: a vertex count, then one `u v` pair per line.
pub fn parse_tree(text: &str) -> Result<Tree, TreeError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or(TreeError::Malformed { line: 1, msg: "missing vertex count".into() })?;
    let n: usize =
        header.parse().map_err(|_| TreeError::Malformed { line: line_no, msg: "invalid vertex count".into() })?;
    let edges = lines.map(|(no, line)| parse_pair(no, line)).collect::<Result<Vec<_>, _>>()?;
    Tree::new(n, edges)
}

impl FromStr for Tree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_tree(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_smallest_tree_and_path() {
        let k2 = parse_tree("2\n0 1").unwrap();
        assert_eq!(k2.n(), 2);
        assert_eq!(k2.edges(), &[(0, 1)]);
        let p4 = parse_tree("4\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(p4, Tree::path(4));
    }

    #[test]
    fn accepts_comments_and_crlf() {
        let t = parse_tree("# a path\r\n3\r\n0 1 # first\r\n\r\n2 1\r\n").unwrap();
        assert_eq!(t, Tree::path(3));
    }

    #[test]
    fn rejects_invalid_documents() {
        assert_eq!(parse_tree("4\n0 1\n2 3"), Err(TreeError::EdgeCount { expected: 3, found: 2 }));
        assert_eq!(parse_tree("4\n0 1\n2 3\n3 2"), Err(TreeError::DuplicateEdge(2, 3)));
        assert_eq!(parse_tree("3\n0 1\n0 1\n"), Err(TreeError::DuplicateEdge(0, 1)));
        assert_eq!(parse_tree("4\n0 1\n2 3\n2 2"), Err(TreeError::SelfLoop(2)));
        assert_eq!(parse_tree("4\n0 1\n0 2\n1 2"), Err(TreeError::Disconnected));
        assert_eq!(parse_tree("2\n0 2"), Err(TreeError::VertexOutOfRange { vertex: 2, n: 2 }));
        assert!(matches!(parse_tree("2\n0 x"), Err(TreeError::Malformed { line: 2, .. })));
        assert!(matches!(parse_tree("2\n0 1 5"), Err(TreeError::Malformed { .. })));
        assert!(matches!(parse_tree(""), Err(TreeError::Malformed { .. })));
        assert_eq!(parse_tree("0"), Err(TreeError::Empty));
    }

    #[test]
    fn disconnected_with_right_edge_count() {
        // 4 vertices, 3 edges, but a triangle plus an isolated vertex.
        assert_eq!(Tree::new(4, [(0, 1), (1, 2), (2, 0)]), Err(TreeError::Disconnected));
    }

    #[test]
    fn end_edges_of_path_and_star() {
        assert_eq!(Tree::path(4).end_edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(Tree::star(4).end_edges(), vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(Tree::path(2).end_edges(), vec![(0, 1)]);
    }

    #[test]
    fn edge_list_round_trip() {
        let t = Tree::new(5, [(3, 1), (1, 0), (4, 1), (2, 4)]).unwrap();
        assert_eq!(parse_tree(&t.to_edge_list()).unwrap(), t);
    }

    #[test]
    fn without_renumbers_survivors() {
        let (sub, map) = Tree::path(5).without(&[0, 1]).unwrap();
        assert_eq!(sub, Tree::path(3));
        assert_eq!(map, vec![None, None, Some(0), Some(1), Some(2)]);
    }
}
