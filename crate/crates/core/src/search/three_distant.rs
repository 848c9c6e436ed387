use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::labelling::Labelling;
use crate::tree::{end_edge_perfect_matching, is_k_distant, make_spine, Matching, Spine, SpineError, Tree, Vertex};

use super::{
    brute_force_labellings, check_cap, enumerate_family, Family, InstanceVerdict, Mode, SearchConfig, SearchError,
    SearchReport, Witness,
};

/// How the first peeling step behaves on a 3-distant tree with matched end edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ThreeDistantCase {
    /// The four-vertex path.
    Base,
    /// After removing `v0, v1`, `v2` has degree at least 3.
    Case1,
    /// `v2` has degree 2 and `u2, v2, v3, ...` is a longest covering path of the remainder.
    Case2a,
    /// `v2` has degree 2 but `u2, v2, v3, ...` is not a longest covering path.
    Case2b,
}

impl fmt::Display for ThreeDistantCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThreeDistantCase::Base => "base",
            ThreeDistantCase::Case1 => "case1",
            ThreeDistantCase::Case2a => "case2a",
            ThreeDistantCase::Case2b => "case2b",
        })
    }
}

/// Full classification of one spine orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub case: ThreeDistantCase,
    /// Partner of `v2` in the matching.
    pub u2: Vertex,
    /// Why `u2, v2, v3, ...` was rejected, in case 2b.
    pub rejected: Option<SpineError>,
}

/// Classifies `tree` along `spine`. The tree must be 3-distant with its end
/// edges forming a perfect matching, and `spine` a longest path covering the
/// tree within distance 3.
pub fn classify_three_distant_case(tree: &Tree, spine: &Spine) -> Result<ThreeDistantCase, SearchError> {
    classify(tree, spine).map(|c| c.case)
}

pub fn classify(tree: &Tree, spine: &Spine) -> Result<Classification, SearchError> {
    let m = family_matching(tree)?;
    let v = spine.vertices();
    Spine::new(tree, v.to_vec(), 3).map_err(|e| SearchError::Precondition(format!("spine: {e}")))?;
    if v.len() < 4 {
        return Err(SearchError::Precondition("spine has fewer than four vertices".into()));
    }
    let u2 = m.partner(v[2]).expect("perfect matching");
    if tree.n() == 4 {
        return Ok(Classification { case: ThreeDistantCase::Base, u2, rejected: None });
    }
    if tree.degree(v[0]) != 1 || tree.degree(v[1]) != 2 || u2 == v[3] || u2 == v[1] {
        return Err(SearchError::Precondition("spine start does not have the matched-leaf shape".into()));
    }
    let (sub, map) =
        tree.without(&v[..2]).map_err(|_| SearchError::Precondition("removing v0, v1 disconnects the tree".into()))?;
    let new = |w: Vertex| map[w].expect("survivor");
    let degree = sub.degree(new(v[2]));
    let case = match degree {
        d if d >= 3 => return Ok(Classification { case: ThreeDistantCase::Case1, u2, rejected: None }),
        2 => {
            let derived: Vec<Vertex> = std::iter::once(u2).chain(v[2..].iter().copied()).map(new).collect();
            match Spine::new(&sub, derived, 3) {
                Ok(_) => Classification { case: ThreeDistantCase::Case2a, u2, rejected: None },
                Err(e) => Classification { case: ThreeDistantCase::Case2b, u2, rejected: Some(e) },
            }
        }
        _ => return Err(SearchError::Precondition("v2 is a leaf after removing v0, v1".into())),
    };
    Ok(case)
}

fn family_matching(tree: &Tree) -> Result<Matching, SearchError> {
    let m = end_edge_perfect_matching(tree)
        .ok_or_else(|| SearchError::Precondition("end edges do not form a perfect matching".into()))?;
    if !is_k_distant(tree, 3) {
        return Err(SearchError::Precondition("tree is not 3-distant".into()));
    }
    Ok(m)
}

/// For each anchor, the smallest labelling with label 0 there.
fn anchored_zeros(all: &[Labelling], anchors: [Vertex; 4]) -> [Option<&Labelling>; 4] {
    anchors.map(|a| all.iter().find(|f| f.get(a) == 0))
}

fn missing(found: &[Option<&Labelling>; 4]) -> Vec<&'static str> {
    ["v0", "v1", "v2", "u2"].into_iter().zip(found).filter(|(_, f)| f.is_none()).map(|(name, _)| name).collect()
}

/// Every orientation of every longest path that covers `tree` within distance 3, sorted.
pub fn covering_spines(tree: &Tree) -> Vec<Spine> {
    let leaves: Vec<Vertex> = (0..tree.n()).filter(|&v| tree.is_leaf(v)).collect();
    let mut out: Vec<Spine> = Vec::new();
    for &a in &leaves {
        for &b in &leaves {
            if a != b {
                if let Ok(s) = Spine::new(tree, tree.path_between(a, b), 3) {
                    out.push(s);
                }
            }
        }
    }
    out.sort_by(|x, y| x.vertices().cmp(y.vertices()));
    out
}

fn spine_text(spine: &Spine) -> String {
    spine.vertices().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Sweeps every 3-distant tree on `4..=n_max` vertices whose end edges form a
/// perfect matching. Each instance is classified along its tie-break spine,
/// and for every oriented longest covering path `v0, v1, v2, ...` an
/// exhaustive search decides whether strongly graceful labellings with label
/// 0 on each of `v0, v1, v2, u2` exist.
///
/// An instance is flagged when some path lacks one of the four, or when it has
/// no strongly graceful labelling at all.
pub fn explore_case2b(n_max: usize, config: &SearchConfig) -> Result<SearchReport, SearchError> {
    let start = Instant::now();
    check_cap("three-distant sweep", n_max, config.caps.case2b)?;
    let sizes: Vec<usize> = (4..=n_max).step_by(2).collect();
    let mut pairs: Vec<(Tree, Matching)> = Vec::new();
    for &n in &sizes {
        pairs.extend(enumerate_family(n, Family::ThreeDistantEndEdgePm, &config.caps)?);
    }
    let searched = config.par_map(&pairs, |(t, m)| brute_force_labellings(t, Mode::Strong(m), false, &config.caps));

    let mut report = SearchReport::new("explore-case2b", Family::ThreeDistantEndEdgePm.name(), sizes);
    report.instance_count = pairs.len();
    let mut by_instance = BTreeMap::<ThreeDistantCase, (usize, usize)>::new();
    let mut by_spine = BTreeMap::<ThreeDistantCase, (usize, usize)>::new();
    for (index, ((tree, _), all)) in pairs.iter().zip(searched).enumerate() {
        let all = all?;
        let Some(primary) = make_spine(tree, 3) else {
            report.instances.push(InstanceVerdict::new(index, tree, "no-spine"));
            report.counterexamples.push(Witness::Flag { instance: index, reason: "no covering longest path".into() });
            continue;
        };
        let spines = covering_spines(tree);
        let mut failures = Vec::new();
        let mut cases = BTreeMap::<ThreeDistantCase, usize>::new();
        for spine in &spines {
            let c = classify(tree, spine)?;
            let v = spine.vertices();
            let lacking = missing(&anchored_zeros(&all, [v[0], v[1], v[2], c.u2]));
            *cases.entry(c.case).or_default() += 1;
            let tally = by_spine.entry(c.case).or_default();
            tally.0 += 1;
            tally.1 += usize::from(lacking.is_empty());
            if !lacking.is_empty() {
                failures.push((spine_text(spine), c.case, lacking.join(",")));
            }
        }
        let head = classify(tree, &primary)?;
        let v = primary.vertices();
        let anchors = [v[0], v[1], v[2], head.u2];
        let found = anchored_zeros(&all, anchors);
        let verdict = if all.is_empty() {
            "no-strong-labelling"
        } else if failures.is_empty() {
            "quad"
        } else {
            "no-quad"
        };
        let tally = by_instance.entry(head.case).or_default();
        tally.0 += 1;
        tally.1 += usize::from(verdict == "quad");
        let case_counts: Vec<String> = cases.iter().map(|(c, k)| format!("{c}:{k}")).collect();
        let mut inst = InstanceVerdict::new(index, tree, verdict)
            .with("case", head.case)
            .with("spine", spine_text(&primary))
            .with("u2", head.u2)
            .with("labellings", all.len())
            .with("spines", spines.len())
            .with("spine_cases", case_counts.join(","))
            .with("spines_without_quad", failures.len());
        if let Some(e) = &head.rejected {
            inst = inst.with("rejected", e);
        }
        report.instances.push(inst);
        for (f, &anchor) in found.iter().zip(&anchors) {
            if let Some(f) = f {
                report.witnesses.push(Witness::StrongLabelling {
                    instance: index,
                    zero_at: Some(anchor),
                    labelling: f.to_text(),
                });
            }
        }
        if all.is_empty() {
            report.counterexamples.push(Witness::Flag { instance: index, reason: verdict.to_string() });
        }
        for (spine, case, lacking) in failures {
            report.counterexamples.push(Witness::Flag {
                instance: index,
                reason: format!("spine {spine} ({case}) has no labelling with 0 on {lacking}"),
            });
        }
    }
    for (case, (count, with_quad)) in &by_instance {
        report.notes.push(format!("{case} instances {count} with quad on every spine {with_quad}"));
    }
    for (case, (count, with_quad)) in &by_spine {
        report.notes.push(format!("{case} oriented spines {count} with quad {with_quad}"));
    }
    let flagged = report.instances.iter().filter(|i| i.verdict != "quad").count();
    report.notes.push(format!("instances lacking the quad {flagged}"));
    if config.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}
