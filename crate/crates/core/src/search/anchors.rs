use std::time::Instant;

use crate::labelling::{LabelPermutation, Labelling};
use crate::tree::{Matching, Tree};

use super::{
    brute_force_labellings, check_cap, enumerate_family, Family, InstanceVerdict, Mode, SearchConfig, SearchError,
    SearchReport, Witness,
};

/// How labels `0, n-1, 1, n-2` sit in one strongly graceful labelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnchorShape {
    /// `0 - (n-1) - 1 - (n-2)` is a path with both outer edges matched.
    Path,
    /// Labels `0` and `n-2` are adjacent.
    ZeroNextToSecondLargest,
    /// Neither; impossible for a strongly graceful labelling.
    Other,
}

/// Classifies `f` directly from the tree, independent of the labelling module.
pub fn anchor_shape(tree: &Tree, m: &Matching, f: &Labelling) -> AnchorShape {
    let n = tree.n();
    let at = |b: usize| f.vertex_of(b);
    let (z, top, one, second) = (at(0), at(n - 1), at(1), at(n - 2));
    if m.contains(z, top) && tree.has_edge(top, one) && m.contains(one, second) {
        AnchorShape::Path
    } else if tree.has_edge(z, second) {
        AnchorShape::ZeroNextToSecondLargest
    } else {
        AnchorShape::Other
    }
}

/// Checks, over every tree with a perfect matching on `4..=n_max` vertices
/// and every strongly graceful labelling, whether the vertices labelled
/// `0, n-1, 1, n-2` always form a path whose outer edges are matched.
///
/// Labellings where `0` and `n-2` are adjacent instead are counted per
/// instance; the smallest one is attached as a counterexample.
pub fn sweep_anchor_paths(n_max: usize, config: &SearchConfig) -> Result<SearchReport, SearchError> {
    let start = Instant::now();
    check_cap("anchor-path sweep", n_max, config.caps.anchor_sweep)?;
    let sizes: Vec<usize> = (4..=n_max).step_by(2).collect();
    let mut pairs: Vec<(Tree, Matching)> = Vec::new();
    for &n in &sizes {
        pairs.extend(enumerate_family(n, Family::AnyPm, &config.caps)?);
    }
    let results = config.par_map(&pairs, |(t, m)| -> Result<_, SearchError> {
        let all = brute_force_labellings(t, Mode::Strong(m), false, &config.caps)?;
        let r = LabelPermutation::complement(t.n());
        let mut counts = [0usize; 3];
        let mut first_alt = None;
        let mut repaired = true;
        for f in &all {
            let shape = anchor_shape(t, m, f);
            counts[shape as usize] += 1;
            if shape == AnchorShape::ZeroNextToSecondLargest {
                first_alt.get_or_insert_with(|| f.clone());
                let flipped = r.apply(f).expect("same size");
                repaired &= anchor_shape(t, m, &flipped) == AnchorShape::Path;
            }
        }
        Ok((all.len(), counts, first_alt, repaired))
    });

    let mut report = SearchReport::new("verify-anchor-paths", Family::AnyPm.name(), sizes);
    report.instance_count = pairs.len();
    let (mut total, mut with_path, mut alternative, mut other) = (0, 0, 0, 0);
    let mut repaired_all = true;
    for (index, ((tree, _), result)) in pairs.iter().zip(results).enumerate() {
        let (count, [path, alt, neither], first_alt, repaired) = result?;
        total += count;
        with_path += path;
        alternative += alt;
        other += neither;
        repaired_all &= repaired;
        let verdict = match (count, alt + neither) {
            (0, _) => "no-labellings",
            (_, 0) => "holds",
            _ => "alternative",
        };
        report.instances.push(
            InstanceVerdict::new(index, tree, verdict)
                .with("labellings", count)
                .with("anchor_path", path)
                .with("zero_next_to_n_minus_2", alt),
        );
        if let Some(f) = first_alt {
            report.counterexamples.push(Witness::AnchorAlternative { instance: index, labelling: f.to_text() });
        }
    }
    let failing = report.instances.iter().filter(|i| i.verdict == "alternative").count();
    report.notes.push(format!("labellings {total}"));
    report.notes.push(format!("with anchor path {with_path}"));
    report.notes.push(format!("with labels 0 and n-2 adjacent {alternative}"));
    report.notes.push(format!("with neither shape {other}"));
    report.notes.push(format!("instances with an alternative labelling {failing}"));
    report.notes.push(format!("complement turns every alternative into an anchor path {repaired_all}"));
    report.notes.push(format!("verdict {}", if failing == 0 { "holds" } else { "fails" }));
    if config.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labelling::extract_anchor_path;

    #[test]
    fn four_vertex_path_has_both_shapes() {
        let t = Tree::path(4);
        let m = Matching::perfect(&t, [(0, 1), (2, 3)]).unwrap();
        let anchored = Labelling::new(vec![0, 3, 1, 2]).unwrap();
        let alt = Labelling::new(vec![1, 2, 0, 3]).unwrap();
        assert_eq!(anchor_shape(&t, &m, &anchored), AnchorShape::Path);
        assert_eq!(anchor_shape(&t, &m, &alt), AnchorShape::ZeroNextToSecondLargest);
        assert!(extract_anchor_path(&t, &m, &alt).unwrap().is_none());
    }

    #[test]
    fn sweep_to_eight() {
        let report = sweep_anchor_paths(8, &SearchConfig::default()).unwrap();
        assert_eq!(report.sizes, vec![4, 6, 8]);
        assert!(report.notes.contains(&"with neither shape 0".to_string()));
        assert!(report.notes.contains(&"complement turns every alternative into an anchor path true".to_string()));
        report.revalidate().unwrap();
    }

    #[test]
    fn cap() {
        assert!(matches!(
            sweep_anchor_paths(16, &SearchConfig::default()),
            Err(SearchError::CapExceeded { n: 16, cap: 14, .. })
        ));
    }
}
