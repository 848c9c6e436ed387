use super::{Tree, Vertex};

/// Centers of the tree (one or two vertices), found by peeling leaves.
fn centers(tree: &Tree) -> Vec<Vertex> {
    let n = tree.n();
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in tree.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Parenthesis encoding of the tree rooted at `root`, children in sorted order.
fn rooted_code(tree: &Tree, root: Vertex) -> Vec<u8> {
    let n = tree.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    parent[root] = root;
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
    let mut child_codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut child_codes[v]);
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for k in kids {
            code.extend_from_slice(&k);
        }
        code.push(b')');
        if v == root {
            codes[v] = code;
        } else {
            child_codes[parent[v]].push(code);
        }
    }
    std::mem::take(&mut codes[root])
}

/// Isomorphism-invariant encoding: the smallest center-rooted level code.
pub fn canonical_form(tree: &Tree) -> Vec<u8> {
    centers(tree).into_iter().map(|c| rooted_code(tree, c)).min().expect("a tree has a center")
}
