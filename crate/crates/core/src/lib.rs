//! Digital topology over integer lattices.
//!
//! Finite digital images `(M, kappa_l)` in `Z^d`, their adjacency graphs,
//! digital continuity and isomorphism, model neighborhoods of `Z^n` and of
//! the non-negative orthant, digital manifold classification with
//! interior/boundary decomposition, Euler characteristics from clique
//! censuses, connected-ray linear orders, digital supports, and partitions
//! of unity.
//!
//! Everything is exact integer combinatorics: no floating point anywhere.
//! All values are immutable after construction and every operation is a
//! pure function of its inputs, so results are deterministic and safe to
//! use from concurrent contexts without coordination.

pub mod analysis;
pub mod error;
pub mod io;
pub mod lattice;
pub mod manifold;
pub mod models;
pub mod morphisms;

pub use error::{Error, Result};
pub use lattice::{Adjacency, AdjacencyGraph, DigitalImage, LatticePoint, SimplexCensus};
pub use manifold::ManifoldReport;
pub use morphisms::DigitalMap;
