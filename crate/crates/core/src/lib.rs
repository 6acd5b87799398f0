//! Minimum 3-path coverings of graphs and their spectral energy.
//!
//! A 3-covering of a graph is a vertex set meeting every path on three
//! vertices; attaching a unit loop to each cover vertex turns the adjacency
//! matrix into the covering matrix, whose absolute eigenvalue sum is the
//! covering energy. This crate provides:
//!
//! * [`graph`] — validated simple graphs, 3-path enumeration, distances;
//! * [`covering`] — covering oracles, exact minimum search, and the
//!   structural classification of non-covered edges and vertices;
//! * [`spectral`] — covering matrices, Jacobi eigenvalues, exact integer
//!   characteristic polynomials, covering energy;
//! * [`families`] — star/path/complete/G(n,p) generators and the
//!   closed-form spectra of star families;
//! * [`verify`] — a seeded random-graph corpus for the structural
//!   properties;
//! * [`io`] — edge-list and JSON graph formats.

#![forbid(unsafe_code)]

pub mod covering;
pub mod families;
pub mod graph;
pub mod io;
mod poly;
pub mod spectral;
pub mod verify;

pub use covering::{CoverKind, CoverSet};
pub use graph::{Distance, Graph, GraphError, Path3};
pub use spectral::{CharPoly, CoveringMatrix, EnergyReport, Spectrum};
