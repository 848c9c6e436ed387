//! Fixtures shared by the benchmarks.

use graceful_core::{spike, Tree};

/// A caterpillar on `spine` spine vertices, each carrying `legs` pendant leaves.
pub fn caterpillar(spine: usize, legs: usize) -> Tree {
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut next = spine;
    for v in 0..spine {
        for _ in 0..legs {
            edges.push((v, next));
            next += 1;
        }
    }
    Tree::new(next, edges).expect("caterpillar is a tree")
}

/// Spike of a caterpillar: a lobster whose end edges form a perfect matching.
pub fn matched_lobster(spine: usize, legs: usize) -> Tree {
    spike(&caterpillar(spine, legs)).tree
}
