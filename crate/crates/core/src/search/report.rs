use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::labelling::{
    anchor_lookup, is_generalized_strong_perm, is_strongly_graceful, AnchorLookup, LabelPermutation, Labelling,
};
use crate::tree::{canonical_form, perfect_matching, Matching, Tree, Vertex};

use super::{brute_force_labellings, Caps, Mode};

/// Outcome of a sweep: one verdict per instance plus witnesses.
///
/// Instances and witnesses are kept in a fixed order and wall-clock timing is
/// only recorded on request, so equal inputs give byte-identical output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub kind: String,
    pub family: String,
    pub sizes: Vec<usize>,
    pub instance_count: usize,
    pub instances: Vec<InstanceVerdict>,
    pub witnesses: Vec<Witness>,
    pub counterexamples: Vec<Witness>,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceVerdict {
    pub index: usize,
    pub n: usize,
    /// Center-rooted parenthesis code of the tree.
    pub canonical: String,
    /// Edges as space-separated `u-v` pairs.
    pub edges: String,
    pub verdict: String,
    pub detail: BTreeMap<String, String>,
}

impl InstanceVerdict {
    pub fn new(index: usize, tree: &Tree, verdict: impl Into<String>) -> Self {
        InstanceVerdict {
            index,
            n: tree.n(),
            canonical: String::from_utf8(canonical_form(tree)).expect("ASCII code"),
            edges: tree.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" "),
            verdict: verdict.into(),
            detail: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.detail.insert(key.to_string(), value.to_string());
        self
    }

    pub fn tree(&self) -> Result<Tree, String> {
        let pair = |e: &str| -> Option<(Vertex, Vertex)> {
            let (u, v) = e.split_once('-')?;
            Some((u.parse().ok()?, v.parse().ok()?))
        };
        let edges = self
            .edges
            .split_whitespace()
            .map(|e| pair(e).ok_or_else(|| format!("instance {}: bad edge {e:?}", self.index)))
            .collect::<Result<Vec<_>, _>>()?;
        Tree::new(self.n, edges).map_err(|e| format!("instance {}: {e}", self.index))
    }
}

/// Evidence attached to a report. Labellings use the labelling document format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// Strongly graceful labelling of an instance, optionally with label 0 on a given vertex.
    StrongLabelling { instance: usize, zero_at: Option<Vertex>, labelling: String },
    /// Permutation preserving strong gracefulness across the report's instances.
    Permutation { n: usize, cycles: String },
    /// Strongly graceful labelling in which labels 0 and n-2 are adjacent.
    AnchorAlternative { instance: usize, labelling: String },
    /// An instance singled out by the sweep, with the reason.
    Flag { instance: usize, reason: String },
}

impl SearchReport {
    pub fn new(kind: &str, family: &str, sizes: Vec<usize>) -> Self {
        SearchReport {
            kind: kind.to_string(),
            family: family.to_string(),
            sizes,
            instance_count: 0,
            instances: Vec::new(),
            witnesses: Vec::new(),
            counterexamples: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Line-oriented summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let sizes: Vec<String> = self.sizes.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "report {}", self.kind);
        let _ = writeln!(out, "family {}", self.family);
        let _ = writeln!(out, "sizes {}", sizes.join(","));
        let _ = writeln!(out, "instances {}", self.instance_count);
        for note in &self.notes {
            let _ = writeln!(out, "note {note}");
        }
        for inst in &self.instances {
            let _ = write!(out, "instance {} n={} {} {}", inst.index, inst.n, inst.canonical, inst.verdict);
            for (k, v) in &inst.detail {
                let _ = write!(out, " {k}={v}");
            }
            out.push('\n');
        }
        for (tag, list) in [("witness", &self.witnesses), ("counterexample", &self.counterexamples)] {
            for w in list {
                let _ = writeln!(out, "{tag} {}", w.summary());
            }
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed_ms {ms}");
        }
        out
    }

    /// Re-checks every witness against the report's instances. Permutations
    /// are checked against a fresh exhaustive search of each instance.
    pub fn revalidate(&self) -> Result<(), String> {
        let mut searched: Option<Vec<(Tree, Matching, Vec<Labelling>)>> = None;
        for w in self.witnesses.iter().chain(&self.counterexamples) {
            if let Witness::Permutation { n, cycles } = w {
                let g = LabelPermutation::from_cycles(*n, cycles).map_err(|e| e.to_string())?;
                let pool = match &mut searched {
                    Some(pool) => pool,
                    none => none.insert(self.search_instances()?),
                };
                for (tree, m, all) in pool.iter().filter(|(t, _, all)| t.n() == *n && !all.is_empty()) {
                    if !is_generalized_strong_perm(tree, m, &g, all).map_err(|e| e.to_string())? {
                        return Err(format!("permutation {cycles} breaks a labelling"));
                    }
                }
            } else {
                w.revalidate(&self.instances)?;
            }
        }
        Ok(())
    }

    fn search_instances(&self) -> Result<Vec<(Tree, Matching, Vec<Labelling>)>, String> {
        self.instances
            .iter()
            .map(|inst| {
                let tree = inst.tree()?;
                let m = perfect_matching(&tree).ok_or("instance has no perfect matching")?;
                let all = brute_force_labellings(&tree, Mode::Strong(&m), false, &Caps::default())
                    .map_err(|e| e.to_string())?;
                Ok((tree, m, all))
            })
            .collect()
    }
}

impl Witness {
    fn summary(&self) -> String {
        let flat = |l: &str| Labelling::parse(l).map(|f| format!("{:?}", f.values())).unwrap_or_default();
        match self {
            Witness::StrongLabelling { instance, zero_at, labelling } => match zero_at {
                Some(v) => format!("instance={instance} zero_at={v} labels={}", flat(labelling)),
                None => format!("instance={instance} labels={}", flat(labelling)),
            },
            Witness::Permutation { n, cycles } => format!("n={n} permutation={cycles}"),
            Witness::AnchorAlternative { instance, labelling } => {
                format!("instance={instance} anchor-alternative labels={}", flat(labelling))
            }
            Witness::Flag { instance, reason } => format!("instance={instance} {reason}"),
        }
    }

    fn revalidate(&self, instances: &[InstanceVerdict]) -> Result<(), String> {
        let lookup = |i: usize| instances.get(i).ok_or_else(|| format!("witness refers to missing instance {i}"));
        let strong = |i: usize, text: &str| -> Result<(Tree, Labelling), String> {
            let tree = lookup(i)?.tree()?;
            let m = perfect_matching(&tree).ok_or("instance has no perfect matching")?;
            let f = Labelling::parse(text).map_err(|e| e.to_string())?;
            match is_strongly_graceful(&tree, &m, &f) {
                Ok(true) => Ok((tree, f)),
                _ => Err(format!("witness for instance {i} is not strongly graceful")),
            }
        };
        match self {
            Witness::StrongLabelling { instance, zero_at, labelling } => {
                let (_, f) = strong(*instance, labelling)?;
                if let Some(v) = zero_at {
                    if f.get(*v) != 0 {
                        return Err(format!("witness for instance {instance} does not put 0 on {v}"));
                    }
                }
                Ok(())
            }
            Witness::Permutation { .. } | Witness::Flag { .. } => Ok(()),
            Witness::AnchorAlternative { instance, labelling } => {
                lookup(*instance)?;
                let (tree, f) = strong(*instance, labelling)?;
                let m = perfect_matching(&tree).expect("checked above");
                match anchor_lookup(&tree, &m, &f) {
                    Ok(AnchorLookup::ZeroMeetsSecondLargest { .. }) => Ok(()),
                    _ => Err(format!("instance {instance}: witness does not join labels 0 and n-2")),
                }
            }
        }
    }
}
