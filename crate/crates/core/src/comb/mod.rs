//! Faces, facet families, face lattices and the order-relative predicates
//! (Gale evenness, paired sets) everything else is built on.

mod face;
mod lattice;
mod polytope;

pub use face::{is_gale_subset, is_paired_set, Face, InducedFace};
pub use lattice::{edges_of, face_lattice, ridges, FaceLattice, Ridge};
pub use polytope::CombPolytope;
