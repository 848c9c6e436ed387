//! Graphviz output.

use std::fmt::Write as _;

use crate::labelling::{LabelError, Labelling};
use crate::tree::{Matching, Tree};

/// Renders `tree` as an undirected DOT graph. Matched edges are drawn bold;
/// with a labelling, each vertex is captioned `v: label` and each edge
/// carries its induced label.
pub fn to_dot(tree: &Tree, labelling: Option<&Labelling>, matching: Option<&Matching>) -> Result<String, LabelError> {
    if let Some(f) = labelling {
        if f.len() != tree.n() {
            return Err(LabelError::SizeMismatch { expected: tree.n(), found: f.len() });
        }
    }
    if let Some(m) = matching {
        if m.n() != tree.n() {
            return Err(LabelError::SizeMismatch { expected: tree.n(), found: m.n() });
        }
    }
    let mut out = String::from("graph tree {\n  node [shape=circle];\n");
    for v in 0..tree.n() {
        match labelling {
            Some(f) => writeln!(out, "  {v} [label=\"{v}: {}\"];", f.get(v)),
            None => writeln!(out, "  {v} [label=\"{v}\"];"),
        }
        .expect("writing to a String");
    }
    for &(u, v) in tree.edges() {
        let mut attrs = Vec::new();
        if let Some(f) = labelling {
            attrs.push(format!("label=\"{}\"", f.get(u).abs_diff(f.get(v))));
        }
        if matching.is_some_and(|m| m.contains(u, v)) {
            attrs.push("style=bold".to_string());
            attrs.push("penwidth=3".to_string());
        }
        if attrs.is_empty() {
            writeln!(out, "  {u} -- {v};")
        } else {
            writeln!(out, "  {u} -- {v} [{}];", attrs.join(", "))
        }
        .expect("writing to a String");
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_with_quad_labelling() {
        let t = Tree::path(4);
        let m = Matching::perfect(&t, [(0, 1), (2, 3)]).unwrap();
        let f = Labelling::new(vec![0, 3, 1, 2]).unwrap();
        let dot = to_dot(&t, Some(&f), Some(&m)).unwrap();
        assert!(dot.contains("  0 -- 1 [label=\"3\", style=bold, penwidth=3];"));
        assert!(dot.contains("  1 -- 2 [label=\"2\"];"));
        assert!(dot.contains("  2 -- 3 [label=\"1\", style=bold, penwidth=3];"));
        assert!(dot.contains("  1 [label=\"1: 3\"];"));
    }

    #[test]
    fn bare_tree_and_mismatch() {
        let t = Tree::path(3);
        let dot = to_dot(&t, None, None).unwrap();
        assert!(dot.contains("  0 -- 1;") && !dot.contains("bold"));
        let f = Labelling::identity(4);
        assert!(matches!(to_dot(&t, Some(&f), None), Err(LabelError::SizeMismatch { .. })));
    }
}
