//! Exact combinatorics for cyclic, multiplex, braxtope and periodically-cyclic
//! Gale polytopes.
//!
//! Polytopes are handled purely combinatorially, as facet families over a
//! fixed vertex array `0 < 1 < … < n`. Exact rational realizations serve as an
//! independent geometric oracle for the combinatorial constructions.

pub mod comb;
pub mod construction;
mod error;
pub mod families;
pub mod format;
pub mod realization;
pub mod verify;

pub use comb::{CombPolytope, Face, FaceLattice};
pub use error::{Error, Result};
