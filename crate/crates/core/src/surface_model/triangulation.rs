use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use super::surface::{MarkedSurface, PointId, PointKind};
use super::SurfaceError;

/// Edge identifier. Arcs occupy `0..arc_count()`, boundary segments follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub u32);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Triangle with corners in counterclockwise order. Side `i` runs from
/// corner `i` to corner `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triangle {
    pub corners: [PointId; 3],
    pub sides: [EdgeId; 3],
}

impl Triangle {
    /// Index of the side occupied twice, if the triangle is self-folded.
    pub fn folded_slots(&self) -> Option<(u8, u8)> {
        for i in 0..3u8 {
            let j = (i + 1) % 3;
            if self.sides[i as usize] == self.sides[j as usize] {
                return Some((i, j));
            }
        }
        None
    }

    pub fn is_self_folded(&self) -> bool {
        self.folded_slots().is_some()
    }

    pub fn distinct_corners(&self) -> usize {
        let s: BTreeSet<_> = self.corners.iter().collect();
        s.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoopType {
    TypeI,
    TypeII,
}

/// Triangle shapes that occur in a strong admissible triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TriangleKind {
    ThreeVertices,
    TwoVertices,
    SelfFolded,
    Other,
}

/// A slot is one side of one triangle.
pub type Slot = (u32, u8);

const NO_SLOT: Slot = (u32::MAX, 0);

/// Ideal triangulation stored as an edge/triangle incidence structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealTriangulation {
    surface: MarkedSurface,
    arc_count: usize,
    triangles: Vec<Triangle>,
    slots: Vec<[Slot; 2]>,
}

impl IdealTriangulation {
    /// Builds and validates a triangulation from raw triangles.
    pub fn from_triangles(
        surface: MarkedSurface,
        arc_count: usize,
        triangles: Vec<Triangle>,
    ) -> Result<Self, SurfaceError> {
        let boundary_segments = surface.boundary_point_count() as usize;
        let edge_count = arc_count + boundary_segments;
        let mut slots = vec![[NO_SLOT, NO_SLOT]; edge_count];
        let mut seen = vec![0usize; edge_count];
        for (t, tri) in triangles.iter().enumerate() {
            for s in 0..3u8 {
                let e = tri.sides[s as usize].index();
                if e >= edge_count {
                    return Err(SurfaceError::Invalid(format!("edge {e} out of range")));
                }
                if seen[e] >= 2 {
                    return Err(SurfaceError::Invalid(format!(
                        "edge {e} used more than twice"
                    )));
                }
                slots[e][seen[e]] = (t as u32, s);
                seen[e] += 1;
            }
        }
        let t = IdealTriangulation {
            surface,
            arc_count,
            triangles,
            slots,
        };
        for e in 0..edge_count {
            let want = if e < arc_count { 2 } else { 1 };
            if seen[e] != want {
                return Err(SurfaceError::Invalid(format!(
                    "edge {e} lies in {} slots, expected {want}",
                    seen[e]
                )));
            }
        }
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<(), SurfaceError> {
        let s = &self.surface;
        if self.arc_count != s.rank() {
            return Err(SurfaceError::Invalid(format!(
                "{} arcs, expected {}",
                self.arc_count,
                s.rank()
            )));
        }
        for e in 0..self.arc_count {
            let [(t1, s1), (t2, s2)] = self.slots[e];
            let a = self.slot_ends((t1, s1));
            let b = self.slot_ends((t2, s2));
            if a.0 != b.1 || a.1 != b.0 {
                return Err(SurfaceError::Invalid(format!(
                    "arc {e} glued inconsistently"
                )));
            }
        }
        let mut corners_of = vec![Vec::new(); s.point_count() as usize];
        for (t, tri) in self.triangles.iter().enumerate() {
            for c in 0..3u8 {
                let p = tri.corners[c as usize];
                if p.0 >= s.point_count() {
                    return Err(SurfaceError::Invalid(format!("unknown point {p}")));
                }
                corners_of[p.0 as usize].push((t as u32, c));
            }
        }
        for (p, corners) in corners_of.iter().enumerate() {
            let p = PointId(p as u32);
            if corners.is_empty() {
                return Err(SurfaceError::Invalid(format!("point {p} has no corner")));
            }
            let fan = self.fan(p);
            if fan.len() != corners.len() {
                return Err(SurfaceError::Invalid(format!(
                    "link of {p} is not connected ({} of {} corners)",
                    fan.len(),
                    corners.len()
                )));
            }
            let open = self.boundary_ray_count(p);
            let expect = if s.is_puncture(p) { 0 } else { 2 };
            if open != expect {
                return Err(SurfaceError::Invalid(format!(
                    "point {p} has {open} boundary rays"
                )));
            }
        }
        let v = s.point_count() as i64;
        let e = (self.arc_count + s.boundary_point_count() as usize) as i64;
        let f = self.triangles.len() as i64;
        let chi = 2 - 2 * s.genus() as i64 - s.boundary().len() as i64;
        // Punctures and boundary points are vertices of the cell structure.
        if v - e + f != chi {
            return Err(SurfaceError::Invalid(format!(
                "Euler characteristic {} but surface has {chi}",
                v - e + f
            )));
        }
        Ok(())
    }

    fn boundary_ray_count(&self, p: PointId) -> usize {
        let mut n = 0;
        for tri in &self.triangles {
            for c in 0..3 {
                if tri.corners[c] != p {
                    continue;
                }
                if self.is_boundary(tri.sides[c]) {
                    n += 1;
                }
                if self.is_boundary(tri.sides[(c + 2) % 3]) {
                    n += 1;
                }
            }
        }
        n
    }

    pub fn surface(&self) -> &MarkedSurface {
        &self.surface
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn edge_count(&self) -> usize {
        self.slots.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.arc_count as u32).map(EdgeId)
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn triangle(&self, t: u32) -> &Triangle {
        &self.triangles[t as usize]
    }

    pub fn is_boundary(&self, e: EdgeId) -> bool {
        e.index() >= self.arc_count
    }

    pub fn slots(&self, e: EdgeId) -> &[Slot] {
        if self.is_boundary(e) {
            &self.slots[e.index()][..1]
        } else {
            &self.slots[e.index()][..]
        }
    }

    pub fn corner(&self, t: u32, c: u8) -> PointId {
        self.triangles[t as usize].corners[(c % 3) as usize]
    }

    fn slot_ends(&self, (t, s): Slot) -> (PointId, PointId) {
        (self.corner(t, s), self.corner(t, s + 1))
    }

    /// Endpoints of an edge, oriented along its first slot.
    pub fn edge_ends(&self, e: EdgeId) -> (PointId, PointId) {
        self.slot_ends(self.slots[e.index()][0])
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (a, b) = self.edge_ends(e);
        a == b
    }

    /// The slot glued to `(t, s)`, or `None` on the boundary.
    pub fn glue(&self, t: u32, s: u8) -> Option<Slot> {
        let e = self.triangles[t as usize].sides[s as usize];
        if self.is_boundary(e) {
            return None;
        }
        let [a, b] = self.slots[e.index()];
        if a == (t, s) {
            Some(b)
        } else {
            Some(a)
        }
    }

    /// Next corner counterclockwise around the same marked point.
    pub fn ccw_next(&self, t: u32, c: u8) -> Option<Slot> {
        self.glue(t, (c + 2) % 3)
    }

    /// Corners around `p` in counterclockwise order. For a boundary point the
    /// first corner has a boundary segment as its side `c`.
    pub fn fan(&self, p: PointId) -> Vec<Slot> {
        let mut start = None;
        for (t, tri) in self.triangles.iter().enumerate() {
            for c in 0..3u8 {
                if tri.corners[c as usize] != p {
                    continue;
                }
                if start.is_none() {
                    start = Some((t as u32, c));
                }
                // Corner whose previous neighbour is across the boundary.
                let prev_side = tri.sides[c as usize];
                if self.is_boundary(prev_side) {
                    start = Some((t as u32, c));
                    break;
                }
            }
        }
        let Some(start) = start else {
            return Vec::new();
        };
        let mut out = vec![start];
        let mut cur = start;
        while let Some(next) = self.ccw_next(cur.0, cur.1) {
            if next == start || out.len() > 4 * self.triangles.len() {
                break;
            }
            out.push(next);
            cur = next;
        }
        out
    }

    pub fn degree(&self, p: PointId) -> usize {
        self.fan(p).len()
    }

    pub fn self_folded_triangles(&self) -> impl Iterator<Item = u32> + '_ {
        self.triangles
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_self_folded())
            .map(|(i, _)| i as u32)
    }

    /// `(folded side, remaining side, puncture)` of a self-folded triangle.
    pub fn self_folded_parts(&self, t: u32) -> Option<(EdgeId, EdgeId, PointId)> {
        let tri = self.triangle(t);
        let (i, j) = tri.folded_slots()?;
        let k = 3 - i - j;
        Some((
            tri.sides[i as usize],
            tri.sides[k as usize],
            tri.corners[j as usize],
        ))
    }

    /// Self-folded triangle enclosing puncture `p`, if any.
    pub fn self_folded_at(&self, p: PointId) -> Option<u32> {
        self.self_folded_triangles()
            .find(|&t| self.self_folded_parts(t).map(|x| x.2) == Some(p))
    }

    pub fn is_radius(&self, e: EdgeId) -> bool {
        self.self_folded_triangles()
            .any(|t| self.self_folded_parts(t).map(|x| x.0) == Some(e))
    }

    pub fn loop_type(&self, e: EdgeId) -> Result<LoopType, SurfaceError> {
        if self.is_boundary(e) || !self.is_loop(e) {
            return Err(SurfaceError::NotALoop(e.0));
        }
        let remaining = self
            .self_folded_triangles()
            .any(|t| self.self_folded_parts(t).map(|x| x.1) == Some(e));
        Ok(if remaining {
            LoopType::TypeI
        } else {
            LoopType::TypeII
        })
    }

    pub fn loops(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.arcs().filter(|&e| self.is_loop(e))
    }

    pub fn type_two_loops(&self) -> Vec<EdgeId> {
        self.loops()
            .filter(|&e| self.loop_type(e) == Ok(LoopType::TypeII))
            .collect()
    }

    /// Every puncture lies inside a self-folded triangle.
    pub fn is_admissible(&self) -> bool {
        self.surface
            .puncture_ids()
            .all(|p| self.self_folded_at(p).is_some())
    }

    pub fn is_strong_admissible(&self) -> bool {
        self.is_admissible() && self.type_two_loops().is_empty()
    }

    pub fn triangle_kind(&self, t: u32) -> TriangleKind {
        let tri = self.triangle(t);
        if tri.is_self_folded() {
            return TriangleKind::SelfFolded;
        }
        match tri.distinct_corners() {
            3 => TriangleKind::ThreeVertices,
            2 if tri.sides.iter().any(|&e| self.is_loop(e)) => TriangleKind::TwoVertices,
            _ => TriangleKind::Other,
        }
    }

    pub fn is_flippable(&self, e: EdgeId) -> bool {
        !self.is_boundary(e) && {
            let [(t1, _), (t2, _)] = self.slots[e.index()];
            t1 != t2
        }
    }

    /// Replaces `e` by the other diagonal of its quadrilateral. The new arc
    /// keeps the identifier `e`.
    pub fn flip(&self, e: EdgeId) -> Result<IdealTriangulation, SurfaceError> {
        if self.is_boundary(e) {
            return Err(SurfaceError::UnflippableArc(e.0));
        }
        let [(t1, s1), (t2, s2)] = self.slots[e.index()];
        if t1 == t2 {
            return Err(SurfaceError::UnflippableArc(e.0));
        }
        let a_tri = self.triangles[t1 as usize];
        let b_tri = self.triangles[t2 as usize];
        let r = |k: u8| (k % 3) as usize;
        let x = a_tri.corners[r(s1)];
        let w = a_tri.corners[r(s1 + 2)];
        let a = a_tri.sides[r(s1 + 1)];
        let b = a_tri.sides[r(s1 + 2)];
        let y = b_tri.corners[r(s2)];
        let z = b_tri.corners[r(s2 + 2)];
        let c = b_tri.sides[r(s2 + 1)];
        let d = b_tri.sides[r(s2 + 2)];
        let mut triangles = self.triangles.clone();
        triangles[t1 as usize] = Triangle {
            corners: [x, z, w],
            sides: [c, e, b],
        };
        triangles[t2 as usize] = Triangle {
            corners: [z, y, w],
            sides: [d, a, e],
        };
        IdealTriangulation::from_triangles(self.surface.clone(), self.arc_count, triangles)
    }

    /// Triangles up to rotation and reordering.
    pub fn canonical_triangles(&self) -> Vec<Triangle> {
        let mut out: Vec<Triangle> = self
            .triangles
            .iter()
            .map(|t| {
                (0..3)
                    .map(|k| Triangle {
                        corners: [0, 1, 2].map(|i| t.corners[(i + k) % 3]),
                        sides: [0, 1, 2].map(|i| t.sides[(i + k) % 3]),
                    })
                    .min_by_key(|r| (r.sides, r.corners))
                    .expect("three rotations")
            })
            .collect();
        out.sort_by_key(|r| (r.sides, r.corners));
        out
    }

    /// Triangles adjacent to `e` with the corner opposite to it.
    pub fn opposite_corners(&self, e: EdgeId) -> Vec<(u32, PointId)> {
        self.slots(e)
            .iter()
            .map(|&(t, s)| (t, self.corner(t, s + 2)))
            .collect()
    }

    pub fn record(&self) -> TriangulationRecord {
        TriangulationRecord {
            surface: self.surface.descriptor(),
            arcs: self
                .arcs()
                .map(|e| {
                    let (a, b) = self.edge_ends(e);
                    ArcRecord {
                        id: e.0,
                        ends: [a.0, b.0],
                        is_loop: a == b,
                    }
                })
                .collect(),
            triangles: self
                .triangles
                .iter()
                .map(|t| TriangleRecord {
                    sides: t.sides.map(|e| e.0),
                    corners: t.corners.map(|p| p.0),
                    self_folded: t.is_self_folded(),
                })
                .collect(),
        }
    }

    pub fn points(&self) -> impl Iterator<Item = (PointId, PointKind)> + '_ {
        (0..self.surface.point_count()).map(|i| (PointId(i), self.surface.kind(PointId(i))))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcRecord {
    pub id: u32,
    pub ends: [u32; 2],
    pub is_loop: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleRecord {
    pub sides: [u32; 3],
    pub corners: [u32; 3],
    pub self_folded: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationRecord {
    pub surface: super::surface::SurfaceDescriptor,
    pub arcs: Vec<ArcRecord>,
    pub triangles: Vec<TriangleRecord>,
}
