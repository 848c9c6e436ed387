use std::fmt;
use std::str::FromStr;

use crate::tree::{end_edge_perfect_matching, is_k_distant, perfect_matching, Matching, Tree};

use super::{check_cap, Caps, FreeTrees, InstanceVerdict, SearchError, SearchReport};

/// Trees on `n` vertices up to isomorphism, in generation order.
pub fn enumerate_free_trees(n: usize, caps: &Caps) -> Result<FreeTrees, SearchError> {
    check_cap("free-tree enumeration", n, caps.free_trees)?;
    Ok(FreeTrees::new(n))
}

/// Families of matched trees swept by the search harnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Trees with a perfect matching.
    AnyPm,
    /// Trees whose end edges form a perfect matching.
    EndEdgePm,
    /// Lobsters whose end edges form a perfect matching.
    LobsterEndEdgePm,
    /// 3-distant trees whose end edges form a perfect matching.
    ThreeDistantEndEdgePm,
}

impl Family {
    pub const ALL: [Family; 4] =
        [Family::AnyPm, Family::EndEdgePm, Family::LobsterEndEdgePm, Family::ThreeDistantEndEdgePm];

    pub fn name(self) -> &'static str {
        match self {
            Family::AnyPm => "any-pm",
            Family::EndEdgePm => "end-edge-pm",
            Family::LobsterEndEdgePm => "lobster-end-edge-pm",
            Family::ThreeDistantEndEdgePm => "three-distant-end-edge-pm",
        }
    }

    /// The family's matching for `tree`, or `None` if the tree is outside it.
    pub fn matching(self, tree: &Tree) -> Option<Matching> {
        match self {
            Family::AnyPm => perfect_matching(tree),
            Family::EndEdgePm => end_edge_perfect_matching(tree),
            Family::LobsterEndEdgePm => end_edge_perfect_matching(tree).filter(|_| is_k_distant(tree, 2)),
            Family::ThreeDistantEndEdgePm => end_edge_perfect_matching(tree).filter(|_| is_k_distant(tree, 3)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| SearchError::InvalidFamily(s.to_string()))
    }
}

/// Members of `family` on `n` vertices with their matching, in free-tree order.
pub fn enumerate_family(
    n: usize,
    family: Family,
    caps: &Caps,
) -> Result<impl Iterator<Item = (Tree, Matching)>, SearchError> {
    if n % 2 == 1 {
        return Err(SearchError::OddSize(n));
    }
    Ok(enumerate_free_trees(n, caps)?.filter_map(move |t| family.matching(&t).map(|m| (t, m))))
}

/// Report listing the trees on `n` vertices, or the members of `family`
/// with their matching pairs.
pub fn enumerate_report(n: usize, family: Option<Family>, caps: &Caps) -> Result<SearchReport, SearchError> {
    let mut report = SearchReport::new("enumerate", family.map_or("all", Family::name), vec![n]);
    match family {
        None => {
            for (index, t) in enumerate_free_trees(n, caps)?.enumerate() {
                report.instances.push(InstanceVerdict::new(index, &t, "tree"));
            }
        }
        Some(f) => {
            for (index, (t, m)) in enumerate_family(n, f, caps)?.enumerate() {
                let pairs: Vec<String> = m.pairs().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                report.instances.push(InstanceVerdict::new(index, &t, "member").with("matching", pairs.join(",")));
            }
        }
    }
    report.instance_count = report.instances.len();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{canonical_form, spike};

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("lobster".parse::<Family>(), Err(SearchError::InvalidFamily("lobster".into())));
    }

    #[test]
    fn four_vertex_families() {
        let caps = Caps::default();
        for f in Family::ALL {
            let members: Vec<_> = enumerate_family(4, f, &caps).unwrap().collect();
            assert_eq!(members.len(), 1, "{f}");
            assert_eq!(canonical_form(&members[0].0), canonical_form(&Tree::path(4)));
        }
    }

    #[test]
    fn six_vertex_lobsters_include_spiked_path() {
        let target = canonical_form(&spike(&Tree::path(3)).tree);
        let caps = Caps::default();
        assert!(enumerate_family(6, Family::LobsterEndEdgePm, &caps)
            .unwrap()
            .any(|(t, _)| canonical_form(&t) == target));
    }

    #[test]
    fn odd_sizes_and_caps() {
        let caps = Caps::default();
        assert!(matches!(enumerate_family(5, Family::AnyPm, &caps), Err(SearchError::OddSize(5))));
        assert!(matches!(enumerate_free_trees(19, &caps), Err(SearchError::CapExceeded { n: 19, cap: 18, .. })));
        assert_eq!(enumerate_free_trees(1, &caps).unwrap().count(), 1);
    }

    #[test]
    fn seven_vertex_report() {
        let report = enumerate_report(7, None, &Caps::default()).unwrap();
        assert_eq!(report.instance_count, 11);
        assert_eq!(report.instances.len(), 11);
    }
}
