//! Alon-Tarsi orientations and Alon-Tarsi numbers.
//!
//! An orientation `D` of a graph `G` is *Alon-Tarsi* when the numbers of
//! even and odd spanning Eulerian subdigraphs of `D` differ. The Alon-Tarsi
//! number `AT(G)` is the least `k` such that `G` has an Alon-Tarsi orientation
//! with maximum outdegree `k - 1`; it bounds the choice number from above.
//!
//! The crate provides:
//!
//! * [`graph`]: simple graphs, digraphs and orientations with stable arc indices;
//! * [`halin`]: construction, enumeration and decomposition of Halin graphs;
//! * [`eulerian`]: exact even/odd Eulerian subdigraph tallies, directed cycles
//!   and an independent graph-polynomial coefficient oracle;
//! * [`orient`]: degeneracy orientations and the constructive Alon-Tarsi
//!   orientations of Halin graphs, packaged as verifiable certificates;
//! * [`atnum`]: exhaustive Alon-Tarsi number search, chromatic numbers and the
//!   closed form `AT(H)` for Halin graphs.

pub mod atnum;
pub mod error;
pub mod eulerian;
pub mod graph;
pub mod halin;
pub mod orient;

pub use error::{Error, Result};
pub use graph::{Digraph, Graph, Orientation};

/// Enumeration caps shared by the exponential routines.
///
/// Crossing a cap is always an error, never an approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum arc count for Eulerian tallies.
    pub tally_arcs: usize,
    /// Maximum arc count for the polynomial-coefficient oracle.
    pub oracle_arcs: usize,
    /// Maximum number of simple directed cycles enumerated.
    pub cycles: usize,
    /// Maximum edge count for exhaustive orientation search.
    pub search_edges: usize,
    /// Maximum vertex count for exact chromatic numbers.
    pub chromatic_vertices: usize,
    /// Maximum vertex count for Halin graph enumeration.
    pub enumerate_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            tally_arcs: 30,
            oracle_arcs: 16,
            cycles: 1_000_000,
            search_edges: 20,
            chromatic_vertices: 16,
            enumerate_vertices: 12,
        }
    }
}

pub(crate) fn check_cap(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::CapExceeded {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
