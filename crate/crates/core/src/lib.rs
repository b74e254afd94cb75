//! Star-structure cuts of folded hypercubes and augmented cubes.
//!
//! Builds the explicit `K_{1,m}` cut families, verifies them by component
//! analysis, brute-forces minimum cuts on small instances, and sweeps the
//! supporting adjacency facts exhaustively.

pub mod analysis;
pub mod cli;
pub mod cuts;
pub mod error;
pub mod par;
pub mod starform;
pub mod topology;

pub use error::{Error, Result};
pub use topology::{Kind, Topology, Vertex};
