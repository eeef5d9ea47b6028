//! Marked surfaces, ideal triangulations, flips and admissibility.

mod build;
mod strong;
mod surface;
mod triangulation;

use thiserror::Error;

pub use build::{
    admissible_flip_candidates, admissible_triangulation, random_admissible_walk,
    standard_triangulation,
};
pub use strong::{loop_case, make_strong_admissible, LoopCase, StrongOutcome, StrongStep};
pub use surface::{validate_surface, MarkedSurface, PointId, PointKind, SurfaceDescriptor};
pub use triangulation::{
    ArcRecord, EdgeId, IdealTriangulation, LoopType, Slot, Triangle, TriangleKind, TriangleRecord,
    TriangulationRecord,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("forbidden surface: {0}")]
    ForbiddenSurface(String),
    #[error("surface has no boundary component")]
    EmptyBoundary,
    #[error("boundary component {0} carries no marked point")]
    BoundaryComponentWithoutMarkedPoint(usize),
    #[error("edge {0} is not a loop")]
    NotALoop(u32),
    #[error("edge {0} cannot be flipped")]
    UnflippableArc(u32),
    #[error("need at least 3 boundary marked points, found {0}")]
    TooFewBoundaryMarkedPoints(u32),
    #[error("input triangulation is not admissible")]
    NotAdmissibleInput,
    #[error("invalid triangulation: {0}")]
    Invalid(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
