//! Intersection numbers of tagged arcs and their segment decompositions.

pub mod crossing;
mod segments;

use thiserror::Error;

use crate::arc_model::{ArcError, ArcFamilyModel, ArcMultiset, PlainArc, PlainMultiset, TaggedArc};

pub use segments::{
    arc_segments, reconstruct_counts, segment_counts, segment_multiset, Segment, SegmentClass,
    SegmentCounts, SegmentDecomposition, SegmentKind,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntersectionError {
    #[error("arcs come from different models")]
    UnsupportedPair,
    #[error("arc belongs to the reference triangulation")]
    ArcInT,
    #[error("multiset members are not pairwise compatible")]
    IncompatibleMultiset,
    #[error("triangle {0} is not covered by the reconstruction")]
    UnsupportedTriangle(u32),
    #[error(transparent)]
    Arc(#[from] ArcError),
}

/// Integer vector indexed by the arcs of a reference triangulation.
pub type IntersectionVector = Vec<i64>;

fn same_frame(model: &ArcFamilyModel, a: &PlainArc, b: &PlainArc) -> Result<(), IntersectionError> {
    if a.frame != model.key() || b.frame != model.key() {
        return Err(IntersectionError::UnsupportedPair);
    }
    Ok(())
}

/// Number of interior crossings in minimal position.
pub fn int_a(model: &ArcFamilyModel, a: &PlainArc, b: &PlainArc) -> Result<u32, IntersectionError> {
    same_frame(model, a, b)?;
    Ok(model.int_a_plain(a, b))
}

/// Minus the number of segments of `b` between consecutive crossings with
/// the loop `a` that bound a puncture-free triangle with the base point.
pub fn int_b(model: &ArcFamilyModel, a: &PlainArc, b: &PlainArc) -> Result<i64, IntersectionError> {
    same_frame(model, a, b)?;
    Ok(-(model.int_b_plain(a, b) as i64))
}

pub fn int_c(a: &PlainArc, b: &PlainArc) -> i64 {
    if a == b {
        -1
    } else {
        0
    }
}

pub fn int_circ(
    model: &ArcFamilyModel,
    a: &PlainArc,
    b: &PlainArc,
) -> Result<i64, IntersectionError> {
    Ok(int_a(model, a, b)? as i64 + int_b(model, a, b)? + int_c(a, b))
}

/// Ends of `b` at an endpoint of `a` carrying a different tag than `a`.
pub fn int_d(a: &TaggedArc, b: &TaggedArc) -> u32 {
    (0..2)
        .filter(|&k| a.tag_at(b.arc.ends[k]).is_some_and(|t| t != b.tags[k]))
        .count() as u32
}

pub fn int_tagged(
    model: &ArcFamilyModel,
    a: &TaggedArc,
    b: &TaggedArc,
) -> Result<i64, IntersectionError> {
    Ok(int_circ(model, &a.arc, &b.arc)? + int_d(a, b) as i64)
}

/// `(Int(a|b))` over the members `a` of a tagged triangulation.
pub fn intersection_vector(
    model: &ArcFamilyModel,
    t: &[TaggedArc],
    b: &TaggedArc,
) -> Result<IntersectionVector, IntersectionError> {
    t.iter().map(|a| int_tagged(model, a, b)).collect()
}

/// `(Int°(a|b))` over the arcs of an ideal triangulation.
pub fn ideal_intersection_vector(
    model: &ArcFamilyModel,
    t: &[PlainArc],
    b: &PlainArc,
) -> Result<IntersectionVector, IntersectionError> {
    t.iter().map(|a| int_circ(model, a, b)).collect()
}

fn add(acc: &mut [i64], v: &[i64]) {
    for (x, y) in acc.iter_mut().zip(v) {
        *x += y;
    }
}

pub fn multiset_intersection_vector(
    model: &ArcFamilyModel,
    t: &[TaggedArc],
    m: &ArcMultiset,
) -> Result<IntersectionVector, IntersectionError> {
    if !m.is_compatible(model)? {
        return Err(IntersectionError::IncompatibleMultiset);
    }
    let mut acc = vec![0; t.len()];
    for b in m.iter() {
        add(&mut acc, &intersection_vector(model, t, b)?);
    }
    Ok(acc)
}

pub fn ideal_multiset_vector(
    model: &ArcFamilyModel,
    t: &[PlainArc],
    m: &PlainMultiset,
) -> Result<IntersectionVector, IntersectionError> {
    if !m.is_compatible(model) {
        return Err(IntersectionError::IncompatibleMultiset);
    }
    let mut acc = vec![0; t.len()];
    for b in m.iter() {
        add(&mut acc, &ideal_intersection_vector(model, t, b)?);
    }
    Ok(acc)
}
