//! Decomposition of arcs into pieces inside the triangles of the reference
//! triangulation.

use serde::Serialize;

use super::IntersectionError;
use crate::arc_model::{ArcFamilyModel, Multiset, PlainArc, Port};
use crate::surface_model::{EdgeId, PointId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SegmentKind {
    /// From a corner to the opposite side.
    EndAtVertex,
    /// From the puncture of a self-folded triangle to its loop.
    EndAtPuncture,
    /// Between two sides, cutting off the corner they share.
    Crossing,
}

/// Isotopy class of a segment inside its triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SegmentClass {
    pub tri: u32,
    pub ports: (Port, Port),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub class: SegmentClass,
    pub kind: SegmentKind,
    /// Corner cut off by a crossing segment, or the corner an end segment
    /// starts from.
    pub corner: u8,
    pub point: PointId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentDecomposition {
    pub segments: Vec<Segment>,
}

/// Per-triangle segment counts: end segments by starting corner and
/// crossing segments by cut corner.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SegmentCounts {
    pub total: i64,
    pub ends: [i64; 3],
    pub angles: [i64; 3],
}

fn cut_corner(i: u8, j: u8) -> u8 {
    if (i + 1) % 3 == j {
        j
    } else {
        debug_assert_eq!((j + 1) % 3, i, "segment returns through its entry side");
        i
    }
}

/// Segments of an arc not in the reference triangulation, in order.
pub fn arc_segments(
    model: &ArcFamilyModel,
    arc: &PlainArc,
) -> Result<SegmentDecomposition, IntersectionError> {
    if arc.frame != model.key() {
        return Err(IntersectionError::UnsupportedPair);
    }
    if arc.code.crossings() == 0 {
        return Err(IntersectionError::ArcInT);
    }
    let frame = model.frame();
    let segments = arc
        .code
        .steps()
        .iter()
        .map(|s| {
            let ports = if s.entry <= s.exit {
                (s.entry, s.exit)
            } else {
                (s.exit, s.entry)
            };
            let class = SegmentClass { tri: s.tri, ports };
            let (kind, corner) = match ports {
                (Port::Corner(c), Port::Side(_)) => {
                    let p = frame.corner(s.tri, c);
                    let kind = if frame.triangle(s.tri).is_self_folded()
                        && frame.surface().is_puncture(p)
                    {
                        SegmentKind::EndAtPuncture
                    } else {
                        SegmentKind::EndAtVertex
                    };
                    (kind, c)
                }
                (Port::Side(i), Port::Side(j)) => (SegmentKind::Crossing, cut_corner(i, j)),
                _ => unreachable!("a crossing arc has no corner-to-corner step"),
            };
            Segment {
                class,
                kind,
                corner,
                point: frame.corner(s.tri, corner),
            }
        })
        .collect();
    Ok(SegmentDecomposition { segments })
}

/// Multiset of segment classes of all members.
pub fn segment_multiset<'a>(
    model: &ArcFamilyModel,
    arcs: impl IntoIterator<Item = &'a PlainArc>,
) -> Result<Multiset<SegmentClass>, IntersectionError> {
    let mut out = Vec::new();
    for a in arcs {
        out.extend(
            arc_segments(model, a)?
                .segments
                .into_iter()
                .map(|s| s.class),
        );
    }
    Ok(Multiset::new(out))
}

/// Counts of the segments of `arcs` inside triangle `tri`.
pub fn segment_counts<'a>(
    model: &ArcFamilyModel,
    arcs: impl IntoIterator<Item = &'a PlainArc>,
    tri: u32,
) -> Result<SegmentCounts, IntersectionError> {
    let mut c = SegmentCounts::default();
    for a in arcs {
        for s in arc_segments(model, a)?.segments {
            if s.class.tri != tri {
                continue;
            }
            c.total += 1;
            match s.kind {
                SegmentKind::Crossing => c.angles[s.corner as usize] += 1,
                _ => c.ends[s.corner as usize] += 1,
            }
        }
    }
    Ok(c)
}

/// Recovers the segment counts in `tri` from the vector `(Int°(a|M))` over
/// the reference arcs, for a multiset `M` of compatible arcs avoiding the
/// (strong admissible) reference triangulation.
pub fn reconstruct_counts(
    model: &ArcFamilyModel,
    v: &[i64],
    tri: u32,
) -> Result<SegmentCounts, IntersectionError> {
    let frame = model.frame();
    let t = frame.triangle(tri);
    let mut c = SegmentCounts::default();
    if let Some((i, _)) = t.folded_slots() {
        let r = t.sides[i as usize];
        let l = t.sides[((i + 2) % 3) as usize];
        let eta = v[r.index()];
        c.angles[i as usize] = eta;
        c.angles[((i + 2) % 3) as usize] = eta;
        c.ends[((i + 1) % 3) as usize] = v[l.index()] - eta;
        c.total = 2 * eta + v[l.index()] - eta;
        return Ok(c);
    }
    let mut radius_of = std::collections::BTreeMap::new();
    for s in frame.self_folded_triangles() {
        let (r, l, _) = frame.self_folded_parts(s).expect("self-folded");
        radius_of.insert(l, r);
    }
    let crossing_count = |e: EdgeId| -> Result<i64, IntersectionError> {
        if frame.is_boundary(e) {
            return Ok(0);
        }
        if frame.is_loop(e) {
            let r = radius_of
                .get(&e)
                .ok_or(IntersectionError::UnsupportedTriangle(tri))?;
            return Ok(v[e.index()] + v[r.index()]);
        }
        Ok(v[e.index()])
    };
    let big: Vec<i64> = t
        .sides
        .iter()
        .map(|&e| crossing_count(e))
        .collect::<Result<_, _>>()?;
    let at = |k: usize| big[k % 3];
    match (0..3).find(|&k| at(k + 1) - at(k) - at(k + 2) > 0) {
        Some(k) => {
            c.ends[k] = at(k + 1) - at(k) - at(k + 2);
            c.angles[(k + 1) % 3] = at(k);
            c.angles[(k + 2) % 3] = at(k + 2);
        }
        None => {
            for k in 0..3 {
                let twice = at(k) + at(k + 2) - at(k + 1);
                c.angles[k] = twice.div_euclid(2);
                if twice.rem_euclid(2) != 0 {
                    // Inconsistent input; make the mismatch visible.
                    c.angles[k] = -1;
                }
            }
        }
    }
    c.total = c.ends.iter().sum::<i64>() + c.angles.iter().sum::<i64>();
    Ok(c)
}
