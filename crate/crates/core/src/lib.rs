//! Exact verification of denominator vectors for cluster algebras from
//! marked surfaces.

pub mod arc_model;
pub mod cluster_engine;
pub mod intersection;
pub mod modification;
pub mod surface_model;
pub mod verifier;
