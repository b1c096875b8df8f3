//! Exact computation of the skew characteristic polynomial and its relatives.
//!
//! The invariant Q_G of a simple graph is the subset sum of GF(2) nondegeneracies
//! of induced subgraphs; for oriented graphs it is the characteristic polynomial
//! of the antisymmetric adjacency matrix, and the two agree on intersection
//! graphs of chord diagrams under any cut-point orientation. The crate also
//! implements the refined two-variable polynomial, the delta-matroid extension
//! Q_D(u, w) built from ribbon-graph quasi-trees, the Hopf-algebra projection to
//! primitives, and the 4-term/2-term relation machinery, all over exact integer
//! (and rational) arithmetic.
//!
//! The `parallel` feature (on by default) runs the subset enumerations and corpus
//! checks on rayon; without it every path falls back to the single-threaded code
//! that the benchmark suite compares against.

pub mod chord;
pub mod corpus;
pub mod dmatroid;
pub mod error;
pub mod fourterm;
pub mod gf2;
pub mod graph;
pub mod hopf;
pub mod partitions;
pub mod polynomial;
pub mod ribbon;
pub mod verify;

pub use error::{Error, Result};
pub use polynomial::{Monomial, Polynomial, Var};
