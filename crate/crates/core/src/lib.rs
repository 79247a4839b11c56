//! Signed graphs: balance, switching, minors, frame circuits and closure,
//! incidence and Laplacian matrices, chromatic and characteristic
//! polynomials, bidirected line graphs and angle representations.
//!
//! Graphs are small and everything is exact unless a function says
//! otherwise. Exponential algorithms are guarded by [`Limits`].

pub mod angle;
pub mod balance;
pub mod catalog;
pub mod circles;
pub mod coloring;
pub mod edgeset;
pub mod error;
pub mod frame;
pub mod graph;
pub mod iso;
pub mod limits;
pub mod linegraph;
pub mod matrices;
pub mod minors;
pub mod orientation;
pub mod poly;

pub use angle::{AngleMode, AngleRepresentation, RootSystem, RootSystemKind};
pub use balance::{BalancePartition, BalancingClass, SwitchingFunction};
pub use catalog::{CatalogEntry, CatalogFamily, SimpleGraph};
pub use circles::Circle;
pub use coloring::{ChromaticNumbers, Coloration};
pub use edgeset::EdgeSet;
pub use error::{Error, Result};
pub use frame::{ClosedSetLattice, FrameCircuit, FrameCircuitKind};
pub use graph::{Edge, EdgeKind, Sign, SignedGraph};
pub use iso::SwitchingIsomorphism;
pub use limits::Limits;
pub use linegraph::LineGraphResult;
pub use matrices::{IntMatrix, MatrixTreeReport, RationalMatrix};
pub use minors::MinorTrace;
pub use orientation::{BidirectedGraph, Hyperplane, RegionReport};
pub use poly::IntPolynomial;

#[cfg(test)]
pub(crate) mod fixtures {
    pub const SIGMA4: &str = "sg 1\nn 4\n\
        edge a 1 2 +\nedge b 2 3 -\nedge c 3 4 +\nedge d 1 4 -\n\
        edge e 1 4 +\nedge f 1 3 -\nhalf h 3\n";
}
