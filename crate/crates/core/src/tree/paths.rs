use thiserror::Error;

use super::{Tree, Vertex};

/// Length in edges of a longest path.
pub fn diameter(tree: &Tree) -> usize {
    let far = farthest(&tree.bfs_distances(&[0]));
    let dist = tree.bfs_distances(&[far]);
    dist[farthest(&dist)]
}

fn farthest(dist: &[usize]) -> Vertex {
    // First vertex attaining the maximum keeps the choice deterministic.
    let max = *dist.iter().max().expect("non-empty tree");
    dist.iter().position(|&d| d == max).unwrap()
}

/// A maximum-length simple path.
///
/// Among all longest paths, each oriented so that its first vertex id is
/// smaller than its last, the lexicographically smallest sequence is returned.
pub fn longest_path(tree: &Tree) -> Vec<Vertex> {
    let n = tree.n();
    if n == 1 {
        return vec![0];
    }
    let a = farthest(&tree.bfs_distances(&[0]));
    let dist_a = tree.bfs_distances(&[a]);
    let b = farthest(&dist_a);
    let dist_b = tree.bfs_distances(&[b]);
    let diam = dist_a[b];
    // The smallest vertex of eccentricity `diam` is the smallest longest-path endpoint.
    let start = (0..n).find(|&v| dist_a[v].max(dist_b[v]) == diam).expect("diameter endpoints exist");

    let depth = tree.bfs_distances(&[start]);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| depth[v]);
    let mut reach = depth.clone();
    for &v in order.iter().rev() {
        for &w in tree.neighbors(v) {
            if depth[w] + 1 == depth[v] {
                reach[w] = reach[w].max(reach[v]);
            }
        }
    }
    let mut path = vec![start];
    let mut cur = start;
    while depth[cur] < diam {
        cur = *tree
            .neighbors(cur)
            .iter()
            .find(|&&w| depth[w] == depth[cur] + 1 && reach[w] == diam)
            .expect("a child continues the longest path");
        path.push(cur);
    }
    path
}

/// Iterated leaf pruning: strip all leaves `k` times, then test for a path.
pub fn is_k_distant(tree: &Tree, k: usize) -> bool {
    let n = tree.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut remaining = n;
    for _ in 0..k {
        if remaining <= 2 {
            return true;
        }
        let leaves: Vec<Vertex> = (0..n).filter(|&v| alive[v] && degree[v] <= 1).collect();
        for &v in &leaves {
            alive[v] = false;
            remaining -= 1;
            for &w in tree.neighbors(v) {
                if alive[w] {
                    degree[w] -= 1;
                }
            }
        }
    }
    (0..n).all(|v| !alive[v] || degree[v] <= 2)
}

/// Exhaustive form of [`is_k_distant`]: tries every leaf-to-leaf path.
///
/// Quadratic in the number of leaves; meant as a cross-check on small trees.
pub fn is_k_distant_by_paths(tree: &Tree, k: usize) -> bool {
    if tree.n() == 1 {
        return true;
    }
    let leaves: Vec<Vertex> = (0..tree.n()).filter(|&v| tree.is_leaf(v)).collect();
    leaves
        .iter()
        .enumerate()
        .any(|(i, &a)| leaves[i + 1..].iter().any(|&b| cover_radius(tree, &tree.path_between(a, b)) <= k))
}

/// Largest distance from any vertex to the nearest vertex of `path`.
pub fn cover_radius(tree: &Tree, path: &[Vertex]) -> usize {
    tree.bfs_distances(path).into_iter().max().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpineError {
    #[error("spine is not a simple path of the tree")]
    NotAPath,
    #[error("spine has {edges} edges but the tree has diameter {diameter}")]
    NotMaximal { edges: usize, diameter: usize },
    #[error("vertex {vertex} is at distance {distance} from the spine, above radius {k}")]
    NotCovering { vertex: Vertex, distance: usize, k: usize },
}

/// A longest path of a tree that certifies the distance-`k` cover property.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Spine {
    vertices: Vec<Vertex>,
    k: usize,
}

impl Spine {
    /// Checks that `vertices` is a longest path and that every vertex lies within `k` of it.
    pub fn new(tree: &Tree, vertices: Vec<Vertex>, k: usize) -> Result<Self, SpineError> {
        if vertices.is_empty() || !tree.is_path(&vertices) {
            return Err(SpineError::NotAPath);
        }
        let diam = diameter(tree);
        if vertices.len() != diam + 1 {
            return Err(SpineError::NotMaximal { edges: vertices.len() - 1, diameter: diam });
        }
        let dist = tree.bfs_distances(&vertices);
        if let Some((vertex, &distance)) = dist.iter().enumerate().find(|(_, &d)| d > k) {
            return Err(SpineError::NotCovering { vertex, distance, k });
        }
        Ok(Spine { vertices, k })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Index of the last vertex (`p` in `v_0 .. v_p`).
    pub fn last(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn reversed(&self) -> Spine {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Spine { vertices, k: self.k }
    }
}

impl std::ops::Index<usize> for Spine {
    type Output = Vertex;

    fn index(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }
}

/// The tie-broken longest path as a spine, if it covers the tree within `k`.
pub fn make_spine(tree: &Tree, k: usize) -> Option<Spine> {
    Spine::new(tree, longest_path(tree), k).ok()
}
