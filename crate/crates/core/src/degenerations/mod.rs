//! Maximal matroid degenerations: the general search and the stratified
//! rank-4 search.

mod general;
mod rank4;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use crate::matroid::Matroid;

pub use general::{min_above_general, min_above_general_with, min_above_hyp, min_above_hyp_with};
pub use rank4::{min_above_rank4, min_above_rank4_with, stratum_min, stratum_min_with};

/// Limits on a search. Exceeding one yields a partial report.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Explore independent roots on the rayon pool.
    pub parallel: bool,
    /// In the general search, explore one root per orbit of the
    /// automorphism group and map the results around the orbit.
    pub orbit_roots: bool,
}

impl Default for SearchOptions {
    fn default() -> SearchOptions {
        SearchOptions {
            node_limit: None,
            time_limit: None,
            parallel: false,
            orbit_roots: true,
        }
    }
}

impl SearchOptions {
    pub fn parallel() -> SearchOptions {
        SearchOptions {
            parallel: true,
            ..SearchOptions::default()
        }
    }
}

/// Largest group whose elements are listed to map results around orbits.
pub const MAX_LISTED_GROUP: usize = 1_000_000;

/// Shared node counter and deadline.
pub(crate) struct Budget {
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    nodes: AtomicU64,
    exhausted: AtomicBool,
}

impl Budget {
    pub(crate) fn new(opts: &SearchOptions) -> Budget {
        Budget {
            node_limit: opts.node_limit,
            deadline: opts.time_limit.map(|t| Instant::now() + t),
            nodes: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
        }
    }

    /// Counts one visited hypergraph; false once a limit is hit.
    pub(crate) fn tick(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = self.node_limit.is_some_and(|l| n > l);
        let over_time = n.is_multiple_of(256) && self.deadline.is_some_and(|d| Instant::now() > d);
        if over_nodes || over_time {
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Hypergraphs popped from the search stacks.
    pub nodes: u64,
    /// Matroids emitted before filtering.
    pub candidates: usize,
    pub comparisons: usize,
    pub wall: Duration,
}

/// Per-stratum results of the rank-4 search, indexed by the size of the
/// first new circuit (1 to 4).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strata {
    pub maximal: [Vec<Matroid>; 4],
}

#[derive(Clone, Debug)]
pub struct DegenerationReport {
    pub source: Matroid,
    /// The weak-order maximal degenerations, sorted canonically.
    pub maximal: Vec<Matroid>,
    pub strata: Option<Strata>,
    pub stats: SearchStats,
    /// False when a budget stopped the search early.
    pub complete: bool,
}
