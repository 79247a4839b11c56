//! Size caps for the exhaustive algorithms.

use crate::error::{Error, Result};

/// Caps on input size for operations whose cost is exponential.
///
/// Every capped operation takes a `&Limits` and fails with
/// [`Error::CapExceeded`] instead of running away.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Edge count for subset expansions, circle enumeration, balancing sets.
    pub max_edges: usize,
    /// Edge count for the closed-set lattice.
    pub max_lattice_edges: usize,
    /// Order for the Matrix-Tree enumeration.
    pub max_matrix_tree_order: usize,
    /// Number of edge ends for acyclic-orientation enumeration.
    pub max_ends: usize,
    /// Order for the signed-permutation region oracle.
    pub max_oracle_order: usize,
    /// Number of colorations enumerated by brute force.
    pub max_colorations: u64,
    /// Order for brute-force isomorphism search.
    pub max_iso_order: usize,
    /// Order for frame-circuit enumeration.
    pub max_frame_order: usize,
    /// Order for stable-set enumeration.
    pub max_stable_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_edges: 20,
            max_lattice_edges: 16,
            max_matrix_tree_order: 8,
            max_ends: 24,
            max_oracle_order: 6,
            max_colorations: 50_000_000,
            max_iso_order: 12,
            max_frame_order: 10,
            max_stable_order: 20,
        }
    }
}

pub(crate) fn check(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}
