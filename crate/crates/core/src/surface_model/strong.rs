//! Removal of type II loops by flips.

use std::collections::{HashSet, VecDeque};

use super::build::admissible_flip_candidates;
use super::triangulation::{EdgeId, IdealTriangulation, TriangleKind};
use super::SurfaceError;

/// Vertex pattern of the two triangles next to a type II loop at `A`, with
/// third vertices `B` and `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum LoopCase {
    /// B, C and A pairwise distinct.
    Distinct,
    /// Exactly one of B, C equals A.
    OneAtBase,
    /// B = C = A.
    BothAtBase,
    /// B = C, distinct from A.
    SameApex,
}

pub fn loop_case(t: &IdealTriangulation, e: EdgeId) -> LoopCase {
    let a = t.edge_ends(e).0;
    let opp = t.opposite_corners(e);
    let (b, c) = (opp[0].1, opp[1].1);
    match (b == a, c == a, b == c) {
        (true, true, _) => LoopCase::BothAtBase,
        (true, false, _) | (false, true, _) => LoopCase::OneAtBase,
        (false, false, true) => LoopCase::SameApex,
        (false, false, false) => LoopCase::Distinct,
    }
}

/// One pass of the outer loop.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct StrongStep {
    pub case: LoopCase,
    pub flips: Vec<EdgeId>,
    pub type_two_before: usize,
    pub type_two_after: usize,
    /// Set when the fallback search produced the step.
    pub searched: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongOutcome {
    pub triangulation: IdealTriangulation,
    pub flip_log: Vec<EdgeId>,
    pub steps: Vec<StrongStep>,
}

impl StrongOutcome {
    /// True when every step strictly lowered the type II count.
    pub fn monotone(&self) -> bool {
        self.steps
            .iter()
            .all(|s| s.type_two_after < s.type_two_before)
    }

    pub fn used_fallback(&self) -> bool {
        self.steps.iter().any(|s| s.searched)
    }
}

/// Flips type II loops away until every loop encloses a self-folded triangle.
pub fn make_strong_admissible(t: &IdealTriangulation) -> Result<StrongOutcome, SurfaceError> {
    let s = t.surface();
    let marked = s.boundary_point_count();
    let whitelisted = s.genus() == 0 && marked >= 2;
    if marked < 3 && !whitelisted {
        return Err(SurfaceError::TooFewBoundaryMarkedPoints(marked));
    }
    if !t.is_admissible() {
        return Err(SurfaceError::NotAdmissibleInput);
    }
    let mut cur = t.clone();
    let mut flip_log = Vec::new();
    let mut steps = Vec::new();
    // Each step removes at least one loop, so this bound is generous.
    let limit = t.arc_count() + 1;
    while !cur.type_two_loops().is_empty() {
        if steps.len() > limit {
            return Err(SurfaceError::Internal(
                "no progress removing type II loops".into(),
            ));
        }
        let before = cur.type_two_loops().len();
        let (case, flips, searched) = match choose_step(&cur)? {
            Some((case, flips)) => (case, flips, false),
            // With two boundary points the case analysis does not apply, and
            // on higher genus a same-apex loop need not border a triangle
            // next to a three-vertex one.
            None => {
                let flips = search_step(&cur, 4).ok_or_else(|| {
                    SurfaceError::Internal("no reducing flip sequence within depth 4".into())
                })?;
                (LoopCase::SameApex, flips, true)
            }
        };
        for &e in &flips {
            cur = cur.flip(e)?;
        }
        let after = cur.type_two_loops().len();
        if after >= before || !cur.is_admissible() {
            return Err(SurfaceError::Internal(format!(
                "step {case:?} left {after} type II loops (had {before})"
            )));
        }
        flip_log.extend(flips.iter().copied());
        steps.push(StrongStep {
            case,
            flips,
            type_two_before: before,
            type_two_after: after,
            searched,
        });
    }
    Ok(StrongOutcome {
        triangulation: cur,
        flip_log,
        steps,
    })
}

fn choose_step(t: &IdealTriangulation) -> Result<Option<(LoopCase, Vec<EdgeId>)>, SurfaceError> {
    let loops = t.type_two_loops();
    let cases: Vec<_> = loops.iter().map(|&e| (e, loop_case(t, e))).collect();
    if let Some(&(e, case)) = cases
        .iter()
        .find(|(_, c)| matches!(c, LoopCase::Distinct | LoopCase::OneAtBase))
    {
        return Ok(Some((case, vec![e])));
    }
    if let Some((e, _)) = cases.iter().find(|(_, c)| *c == LoopCase::BothAtBase) {
        return Err(SurfaceError::Internal(format!(
            "loop {} has both neighbours apexed at its base while no flippable case remains",
            e.0
        )));
    }
    // Every loop now has the same apex on both sides. Find a three-vertex
    // triangle sharing an edge beta with a triangle next to such a loop.
    for &(alpha, _) in &cases {
        for (tri_alpha, _) in t.opposite_corners(alpha) {
            for &beta in &t.triangle(tri_alpha).sides {
                if beta == alpha || t.is_boundary(beta) || t.is_loop(beta) {
                    continue;
                }
                let other = t
                    .slots(beta)
                    .iter()
                    .map(|&(tt, _)| tt)
                    .find(|&tt| tt != tri_alpha);
                let Some(other) = other else { continue };
                if t.triangle_kind(other) != TriangleKind::ThreeVertices {
                    continue;
                }
                let after_beta = t.flip(beta)?;
                if !after_beta.is_admissible() {
                    continue;
                }
                if after_beta.loop_type(alpha) != Ok(super::LoopType::TypeII) {
                    continue;
                }
                let after = after_beta.flip(alpha)?;
                if after.type_two_loops().len() < loops.len() && after.is_admissible() {
                    return Ok(Some((LoopCase::SameApex, vec![beta, alpha])));
                }
            }
        }
    }
    Ok(None)
}

/// Breadth-first search over admissible flips for a sequence that lowers the
/// type II count, for when no case applies directly.
fn search_step(t: &IdealTriangulation, depth: usize) -> Option<Vec<EdgeId>> {
    let target = t.type_two_loops().len();
    let mut seen = HashSet::new();
    seen.insert(t.triangles().to_vec());
    let mut queue = VecDeque::from([(t.clone(), Vec::new())]);
    while let Some((cur, path)) = queue.pop_front() {
        if path.len() >= depth {
            continue;
        }
        for e in admissible_flip_candidates(&cur) {
            let next = cur.flip(e).ok()?;
            let mut p = path.clone();
            p.push(e);
            if next.type_two_loops().len() < target {
                return Some(p);
            }
            if seen.insert(next.triangles().to_vec()) {
                queue.push_back((next, p));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface_model::{admissible_triangulation, standard_triangulation, MarkedSurface};

    #[test]
    fn already_strong_is_untouched() {
        let s = MarkedSurface::disk(4, 1).unwrap();
        let t = standard_triangulation(&s).unwrap();
        let out = make_strong_admissible(&t).unwrap();
        assert!(out.flip_log.is_empty());
        assert_eq!(out.triangulation, t);
    }

    #[test]
    fn random_twice_punctured_inputs() {
        let s = MarkedSurface::disk(5, 2).unwrap();
        for seed in 0..30 {
            let t = admissible_triangulation(&s, seed).unwrap();
            let out = make_strong_admissible(&t).unwrap();
            assert!(out.triangulation.is_strong_admissible());
            assert!(out.monotone());
            let mut replay = t.clone();
            for &e in &out.flip_log {
                replay = replay.flip(e).unwrap();
            }
            assert_eq!(replay, out.triangulation);
        }
    }

    #[test]
    fn too_few_points() {
        let s = crate::surface_model::validate_surface(&crate::surface_model::SurfaceDescriptor {
            genus: 1,
            boundary: vec![2],
            punctures: 1,
        })
        .unwrap();
        let t = admissible_triangulation(&s, 0).unwrap();
        assert!(matches!(
            make_strong_admissible(&t),
            Err(SurfaceError::TooFewBoundaryMarkedPoints(2))
        ));
    }

    fn surface(genus: u32, boundary: &[u32], punctures: u32) -> MarkedSurface {
        crate::surface_model::validate_surface(&crate::surface_model::SurfaceDescriptor {
            genus,
            boundary: boundary.to_vec(),
            punctures,
        })
        .unwrap()
    }

    fn first_step(s: &MarkedSurface, wanted: impl Fn(&StrongStep) -> bool) -> StrongStep {
        (0..500)
            .flat_map(|seed| {
                let t = admissible_triangulation(s, seed).unwrap();
                make_strong_admissible(&t).unwrap().steps
            })
            .find(|st| wanted(st))
            .expect("case occurs within 500 seeds")
    }

    #[test]
    fn distinct_apexes_take_one_flip() {
        let s = surface(0, &[3, 1], 1);
        let st = first_step(&s, |st| st.case == LoopCase::Distinct);
        assert_eq!(st.flips.len(), 1);
        assert!(st.type_two_after < st.type_two_before);
    }

    #[test]
    fn same_apex_takes_two_flips() {
        let s = surface(1, &[3], 1);
        let st = first_step(&s, |st| st.case == LoopCase::SameApex && !st.searched);
        assert_eq!(st.flips.len(), 2);
        assert!(st.type_two_after < st.type_two_before);
    }

    #[test]
    fn search_covers_loops_away_from_three_vertex_triangles() {
        let s = surface(1, &[3], 1);
        let st = first_step(&s, |st| st.searched);
        assert!(!st.flips.is_empty());
        assert!(st.type_two_after < st.type_two_before);
    }
}
