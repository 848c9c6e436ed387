//! Exhaustive search over small trees: enumeration, labelling search,
//! permutation hunting and the sweeps behind the open cases.

mod anchors;
mod brute;
mod enumerate;
mod family;
mod hunt;
mod report;
mod three_distant;

use thiserror::Error;

use crate::labelling::LabelError;

pub use anchors::{anchor_shape, sweep_anchor_paths, AnchorShape};
pub use brute::{brute_force_labellings, Mode};
pub use enumerate::{count_free_trees_by_prufer, prufer_decode, prufer_trees, FreeTrees};
pub use family::{enumerate_family, enumerate_free_trees, enumerate_report, Family};
pub use hunt::{hunt_generalized_perms, pair_preserving_permutations, HuntScope, HuntStrategy};
pub use report::{InstanceVerdict, SearchReport, Witness};
pub use three_distant::{
    classify, classify_three_distant_case, covering_spines, explore_case2b, Classification, ThreeDistantCase,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("size {0} is odd but the family needs a perfect matching")]
    OddSize(usize),
    #[error("unknown family {0:?}; expected any-pm, end-edge-pm, lobster-end-edge-pm or three-distant-end-edge-pm")]
    InvalidFamily(String),
    #[error("matching is not a perfect matching of the tree")]
    NotPerfect,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Label(#[from] LabelError),
}

/// Size limits for the exhaustive operations. All are plain configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    pub free_trees: usize,
    pub graceful: usize,
    pub strong: usize,
    /// Largest `n` for which the permutation hunt scans all `n!` candidates.
    pub hunt_exhaustive: usize,
    /// Largest `n` for the pair-preserving permutation hunt.
    pub hunt_structured: usize,
    pub anchor_sweep: usize,
    pub case2b: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            free_trees: 18,
            graceful: 14,
            strong: 16,
            hunt_exhaustive: 10,
            hunt_structured: 16,
            anchor_sweep: 14,
            case2b: 16,
        }
    }
}

/// Settings shared by the sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SearchConfig {
    pub caps: Caps,
    /// Worker threads; 0 lets the thread pool choose.
    pub workers: usize,
    /// Record wall-clock time in reports. Off by default so reports are reproducible.
    pub timing: bool,
}

impl SearchConfig {
    /// Maps `f` over `items` on the configured pool. Output order follows input order.
    pub(crate) fn par_map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new().num_threads(self.workers).build().expect("thread pool");
        pool.install(|| items.par_iter().map(&f).collect())
    }
}

pub(crate) fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<(), SearchError> {
    if n > cap {
        Err(SearchError::CapExceeded { what, n, cap })
    } else {
        Ok(())
    }
}
