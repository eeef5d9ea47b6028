//! Tagged arcs on disks with at most two punctures, as crossing sequences
//! with a fixed reference triangulation.

pub mod cover;
pub mod curve;
mod enumerate;
mod faces;
mod model;
mod multiset;
mod tagged;
mod tiles;

use thiserror::Error;

use crate::surface_model::SurfaceError;

pub use curve::{Curve, Port, Step};
pub use enumerate::simple_curves;
pub use faces::triangulation_of;
pub use model::{
    default_cap, enumerate_arcs, frame_key, wrap_curve, ArcFamilyModel, ArcId, Cluster, PlainId,
};
pub use multiset::{ArcMultiset, Multiset, PlainMultiset};
pub use tagged::{untag, PlainArc, Tag, TaggedArc};
pub use tiles::{circ_set, ideal_of_tagged, tags_at, TaggedTriangulation, Tile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArcError {
    #[error("arcs belong to different models")]
    SurfaceMismatch,
    #[error("surface {0} is outside the disk family")]
    UnsupportedSurface(String),
    #[error("arc is not incident to exactly one puncture")]
    NotPunctureIncident,
    #[error("arc is a loop")]
    IsLoop,
    #[error("arc not eligible: {0}")]
    NotEligible(String),
    #[error("expected exactly one exchange partner, found {0}")]
    NoExchange(usize),
    #[error("arc universe is truncated by the crossing cap")]
    Incomplete,
    #[error("not a triangulation: {0}")]
    NotATriangulation(String),
    #[error("tagged triangulation is not admissible: {0}")]
    NotAdmissible(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}
