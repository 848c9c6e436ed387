use std::fmt;

use super::{content_lines, edge, parse_pair, Edge, Tree, TreeError, Vertex};

/// A set of vertex-disjoint edges of a particular tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    pairs: Vec<Edge>,
    partner: Vec<Option<Vertex>>,
}

impl Matching {
    /// Validates that every pair is a tree edge and that the pairs are disjoint.
    pub fn new(tree: &Tree, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, TreeError> {
        let mut partner = vec![None; tree.n()];
        let mut list = Vec::new();
        for (u, v) in pairs {
            if !tree.has_edge(u, v) {
                return Err(TreeError::NotAnEdge(u, v));
            }
            for w in [u, v] {
                if partner[w].is_some() {
                    return Err(TreeError::OverlappingMatching(w));
                }
            }
            partner[u] = Some(v);
            partner[v] = Some(u);
            list.push(edge(u, v));
        }
        list.sort_unstable();
        Ok(Matching { pairs: list, partner })
    }

    /// Like [`Matching::new`] but additionally requires every vertex to be covered.
    pub fn perfect(tree: &Tree, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, TreeError> {
        let m = Matching::new(tree, pairs)?;
        if m.is_perfect() {
            Ok(m)
        } else {
            Err(TreeError::NotPerfect)
        }
    }

    pub fn pairs(&self) -> &[Edge] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Number of vertices of the tree this matching belongs to.
    pub fn n(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        self.partner.get(v).copied().flatten()
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.partner(u) == Some(v)
    }

    pub fn is_perfect(&self) -> bool {
        self.partner.iter().all(Option::is_some)
    }

    /// Renders the matching document: `M`, the pair count, then one pair per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("M\n{}\n", self.pairs.len());
        for (u, v) in &self.pairs {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses a matching document against `tree`. The count may share the header line (`M 2`).
    pub fn parse(text: &str, tree: &Tree) -> Result<Self, TreeError> {
        let mut lines = content_lines(text).peekable();
        let malformed = |line, msg: &str| TreeError::Malformed { line, msg: msg.to_string() };
        let (line_no, header) = lines.next().ok_or_else(|| malformed(1, "missing M header"))?;
        let mut head = header.split_whitespace();
        if head.next() != Some("M") {
            return Err(malformed(line_no, "expected M header"));
        }
        let count_token = match head.next() {
            Some(tok) => (line_no, tok.to_string()),
            None => {
                let (no, line) = lines.next().ok_or_else(|| malformed(line_no, "missing pair count"))?;
                (no, line.to_string())
            }
        };
        let count: usize = count_token.1.parse().map_err(|_| malformed(count_token.0, "invalid pair count"))?;
        let pairs = lines.map(|(no, line)| parse_pair(no, line)).collect::<Result<Vec<_>, _>>()?;
        if pairs.len() != count {
            return Err(malformed(count_token.0, &format!("header says {count} pairs, found {}", pairs.len())));
        }
        for &(u, v) in &pairs {
            for w in [u, v] {
                if w >= tree.n() {
                    return Err(TreeError::VertexOutOfRange { vertex: w, n: tree.n() });
                }
            }
        }
        Matching::new(tree, pairs)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The perfect matching of `tree`, if one exists. A tree has at most one.
///
/// Works from the leaves inward: a vertex not yet matched when all of its
/// children are done must take its parent.
pub fn perfect_matching(tree: &Tree) -> Option<Matching> {
    let n = tree.n();
    if n % 2 == 1 {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    parent[0] = 0;
    order.push(0);
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in tree.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut matched = vec![false; n];
    let mut pairs = Vec::with_capacity(n / 2);
    for &v in order.iter().rev() {
        if matched[v] {
            continue;
        }
        if v == 0 || matched[parent[v]] {
            return None;
        }
        matched[v] = true;
        matched[parent[v]] = true;
        pairs.push((parent[v], v));
    }
    Some(Matching::new(tree, pairs).expect("leaf-inward matching is valid"))
}

/// The end edges of `tree` as a matching, provided they form a perfect matching.
pub fn end_edge_perfect_matching(tree: &Tree) -> Option<Matching> {
    Matching::perfect(tree, tree.end_edges()).ok()
}
