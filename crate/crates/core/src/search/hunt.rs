use std::time::Instant;

use itertools::Itertools;

use crate::labelling::{LabelPermutation, Labelling};
use crate::tree::{Matching, Tree};

use super::{
    brute_force_labellings, check_cap, enumerate_family, Family, InstanceVerdict, Mode, SearchConfig, SearchError,
    SearchReport, Witness,
};

/// Which instances a candidate permutation must respect.
#[derive(Debug, Clone)]
pub enum HuntScope {
    Single { tree: Tree, matching: Matching },
    Family(Family),
}

/// How candidate permutations are generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HuntStrategy {
    /// All `n!` permutations up to the exhaustive cap, pair-preserving ones beyond it.
    #[default]
    Auto,
    /// All `n!` permutations.
    Exhaustive,
    /// Permutations with `g(n-1-b) = n-1-g(b)`. Any permutation that keeps a
    /// strongly graceful labelling strongly graceful has this form, because
    /// every label pair `{b, n-1-b}` is a matched pair, so nothing is lost.
    PairPreserving,
}

impl HuntStrategy {
    fn name(self) -> &'static str {
        match self {
            HuntStrategy::Auto => "auto",
            HuntStrategy::Exhaustive => "exhaustive",
            HuntStrategy::PairPreserving => "pair-preserving",
        }
    }
}

struct Instance {
    tree: Tree,
    matching: Matching,
    labellings: Vec<Labelling>,
}

impl Instance {
    /// Whether `g` maps every stored labelling to a strongly graceful one.
    fn accepts(&self, g: &[usize], scratch: &mut [usize]) -> bool {
        let n = g.len();
        self.labellings.iter().all(|f| {
            for (slot, &b) in scratch.iter_mut().zip(f.values()) {
                *slot = g[b];
            }
            if self.matching.pairs().iter().any(|&(u, v)| scratch[u] + scratch[v] != n - 1) {
                return false;
            }
            let mut seen = 0u64;
            for &(u, v) in self.tree.edges() {
                let bit = 1u64 << scratch[u].abs_diff(scratch[v]);
                if seen & bit != 0 {
                    return false;
                }
                seen |= bit;
            }
            true
        })
    }
}

/// Every label permutation that maps each strongly graceful labelling of each
/// in-scope instance on `n` vertices to a strongly graceful labelling.
///
/// Instances without any strongly graceful labelling impose no condition and
/// are listed with verdict `no-labellings`. Permutations are reported in
/// lexicographic order of their value tables.
pub fn hunt_generalized_perms(
    n: usize,
    scope: &HuntScope,
    strategy: HuntStrategy,
    config: &SearchConfig,
) -> Result<SearchReport, SearchError> {
    let start = Instant::now();
    let caps = &config.caps;
    if n % 2 == 1 || n == 0 {
        return Err(SearchError::OddSize(n));
    }
    let strategy = match strategy {
        HuntStrategy::Auto if n <= caps.hunt_exhaustive => HuntStrategy::Exhaustive,
        HuntStrategy::Auto => HuntStrategy::PairPreserving,
        s => s,
    };
    match strategy {
        HuntStrategy::Exhaustive => check_cap("exhaustive permutation hunt", n, caps.hunt_exhaustive)?,
        _ => check_cap("pair-preserving permutation hunt", n, caps.hunt_structured)?,
    }
    let (family, pairs): (String, Vec<(Tree, Matching)>) = match scope {
        HuntScope::Single { tree, matching } => {
            if tree.n() != n {
                return Err(SearchError::Precondition(format!("tree has {} vertices, expected {n}", tree.n())));
            }
            ("single".into(), vec![(tree.clone(), matching.clone())])
        }
        HuntScope::Family(f) => (f.name().into(), enumerate_family(n, *f, caps)?.collect()),
    };
    let searched = config.par_map(&pairs, |(t, m)| brute_force_labellings(t, Mode::Strong(m), false, caps));
    let mut instances = Vec::with_capacity(pairs.len());
    for ((tree, matching), labellings) in pairs.into_iter().zip(searched) {
        instances.push(Instance { tree, matching, labellings: labellings? });
    }
    let active: Vec<&Instance> = instances.iter().filter(|i| !i.labellings.is_empty()).collect();
    if active.is_empty() {
        return Err(SearchError::Precondition("no in-scope instance has a strongly graceful labelling".into()));
    }

    let check = |g: &[usize], scratch: &mut Vec<usize>| active.iter().all(|i| i.accepts(g, scratch));
    let found: Vec<Vec<usize>> = match strategy {
        HuntStrategy::Exhaustive => {
            let heads: Vec<usize> = (0..n).collect();
            config
                .par_map(&heads, |&head| {
                    let mut scratch = vec![0; n];
                    let rest: Vec<usize> = (0..n).filter(|&b| b != head).collect();
                    let mut out = Vec::new();
                    for tail in rest.into_iter().permutations(n - 1) {
                        let g: Vec<usize> = std::iter::once(head).chain(tail).collect();
                        if check(&g, &mut scratch) {
                            out.push(g);
                        }
                    }
                    out
                })
                .concat()
        }
        _ => {
            let half = n / 2;
            let heads: Vec<usize> = (0..half).collect();
            config
                .par_map(&heads, |&head| {
                    let mut scratch = vec![0; n];
                    let mut g = vec![0; n];
                    let mut out = Vec::new();
                    let rest: Vec<usize> = (0..half).filter(|&p| p != head).collect();
                    for tail in rest.into_iter().permutations(half - 1) {
                        let order: Vec<usize> = std::iter::once(head).chain(tail).collect();
                        for flips in 0u32..1 << half {
                            for (i, &p) in order.iter().enumerate() {
                                let image = if flips >> i & 1 == 1 { n - 1 - p } else { p };
                                g[i] = image;
                                g[n - 1 - i] = n - 1 - image;
                            }
                            if check(&g, &mut scratch) {
                                out.push(g.clone());
                            }
                        }
                    }
                    out
                })
                .concat()
        }
    };
    let mut found = found;
    found.sort_unstable();

    let mut report = SearchReport::new("hunt-perms", &family, vec![n]);
    report.instance_count = instances.len();
    for (index, inst) in instances.iter().enumerate() {
        let verdict = if inst.labellings.is_empty() { "no-labellings" } else { "checked" };
        report
            .instances
            .push(InstanceVerdict::new(index, &inst.tree, verdict).with("labellings", inst.labellings.len()));
    }
    let klein = LabelPermutation::klein_four(n)?;
    let perms: Vec<LabelPermutation> =
        found.into_iter().map(|g| LabelPermutation::new(g).expect("candidates are permutations")).collect();
    let has_klein = klein.iter().all(|k| perms.contains(k));
    let extras = perms.iter().filter(|g| !klein.contains(g)).count();
    report.notes.push(format!("strategy {}", strategy.name()));
    report.notes.push(format!("permutations {}", perms.len()));
    report.notes.push(format!("contains klein four-group {has_klein}"));
    report.notes.push(format!("permutations outside the klein four-group {extras}"));
    report.witnesses = perms.iter().map(|g| Witness::Permutation { n, cycles: g.to_string() }).collect();
    if config.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

/// All `(n/2)! * 2^(n/2)` permutations commuting with the complement `b -> n-1-b`, sorted.
pub fn pair_preserving_permutations(n: usize) -> Vec<LabelPermutation> {
    let half = n / 2;
    let mut out = Vec::new();
    for order in (0..half).permutations(half) {
        for flips in 0u32..1 << half {
            let mut g = vec![0; n];
            for (i, &p) in order.iter().enumerate() {
                let image = if flips >> i & 1 == 1 { n - 1 - p } else { p };
                g[i] = image;
                g[n - 1 - i] = n - 1 - image;
            }
            out.push(LabelPermutation::new(g).expect("pair-preserving map is a bijection"));
        }
    }
    out.sort_unstable_by(|a, b| a.as_slice().cmp(b.as_slice()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labelling::is_generalized_strong_perm;
    use crate::tree::perfect_matching;

    fn perms(report: &SearchReport) -> Vec<String> {
        report
            .witnesses
            .iter()
            .map(|w| match w {
                Witness::Permutation { cycles, .. } => cycles.clone(),
                other => panic!("unexpected witness {other:?}"),
            })
            .collect()
    }

    #[test]
    fn pair_preserving_count() {
        assert_eq!(pair_preserving_permutations(6).len(), 48);
        let r = LabelPermutation::complement(6);
        for g in pair_preserving_permutations(6) {
            assert_eq!(g.compose(&r).unwrap(), r.compose(&g).unwrap());
        }
    }

    #[test]
    fn strategies_agree() {
        let config = SearchConfig::default();
        for n in [4, 6, 8] {
            let scope = HuntScope::Family(Family::AnyPm);
            let a = hunt_generalized_perms(n, &scope, HuntStrategy::Exhaustive, &config).unwrap();
            let b = hunt_generalized_perms(n, &scope, HuntStrategy::PairPreserving, &config).unwrap();
            assert_eq!(perms(&a), perms(&b), "n = {n}");
        }
    }

    #[test]
    fn four_vertex_family_contains_klein_group() {
        let report =
            hunt_generalized_perms(4, &HuntScope::Family(Family::AnyPm), HuntStrategy::Auto, &SearchConfig::default())
                .unwrap();
        let found = perms(&report);
        for k in LabelPermutation::klein_four(4).unwrap() {
            assert!(found.contains(&k.to_string()), "{k}");
        }
    }

    #[test]
    fn single_scope_results_pass_the_checker() {
        let t = Tree::path(6);
        let m = perfect_matching(&t).unwrap();
        let config = SearchConfig::default();
        let all = brute_force_labellings(&t, Mode::Strong(&m), false, &config.caps).unwrap();
        let scope = HuntScope::Single { tree: t.clone(), matching: m.clone() };
        let report = hunt_generalized_perms(6, &scope, HuntStrategy::Auto, &config).unwrap();
        assert_eq!(report.family, "single");
        for cycles in perms(&report) {
            let g = LabelPermutation::from_cycles(6, &cycles).unwrap();
            assert!(is_generalized_strong_perm(&t, &m, &g, &all).unwrap());
        }
    }

    #[test]
    fn caps_and_sizes() {
        let config = SearchConfig::default();
        let scope = HuntScope::Family(Family::AnyPm);
        assert!(matches!(
            hunt_generalized_perms(12, &scope, HuntStrategy::Exhaustive, &config),
            Err(SearchError::CapExceeded { .. })
        ));
        assert!(matches!(hunt_generalized_perms(5, &scope, HuntStrategy::Auto, &config), Err(SearchError::OddSize(5))));
    }
}
