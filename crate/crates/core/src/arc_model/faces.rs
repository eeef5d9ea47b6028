//! Rebuilding an ideal triangulation from a maximal set of plain arcs.

use super::cover::Cover;
use super::curve::{Curve, Port};
use super::model::ArcFamilyModel;
use super::tagged::PlainArc;
use super::ArcError;
use crate::surface_model::{EdgeId, IdealTriangulation, PointId, Triangle};

#[derive(Debug, Clone, Copy)]
struct Dart {
    point: PointId,
    edge: EdgeId,
}

/// Ideal triangulation whose arc `i` is `arcs[i]`. Boundary segments keep
/// the numbering of the model's frame.
pub fn triangulation_of(
    model: &ArcFamilyModel,
    arcs: &[PlainArc],
) -> Result<IdealTriangulation, ArcError> {
    let frame = model.frame();
    let surface = frame.surface();
    let n = arcs.len();
    if n != frame.arc_count() {
        return Err(ArcError::NotATriangulation(format!(
            "{n} arcs, expected {}",
            frame.arc_count()
        )));
    }
    let m = surface.boundary_point_count();
    let mut darts: Vec<Dart> = Vec::new();
    // Dart indices per edge end: arcs use (start, end), segments (at i, at i+1).
    let mut ends = vec![[usize::MAX; 2]; n + m as usize];
    for p in 0..surface.point_count() {
        let x = PointId(p);
        let fan = frame.fan(x);
        let mut cov = Cover::new(frame);
        let mut nodes = vec![cov.root(fan[0].0)];
        for k in 1..fan.len() {
            let side = (fan[k - 1].1 + 2) % 3;
            nodes.push(cov.cross(nodes[k - 1], side).expect("fan is glued"));
        }
        let mut local: Vec<(u32, EdgeId, usize)> = Vec::new();
        for (i, a) in arcs.iter().enumerate() {
            for end in 0..2 {
                if a.ends[end] != x {
                    continue;
                }
                let c = if end == 0 {
                    a.code.clone()
                } else {
                    a.code.reversed()
                };
                let far = far_label(&mut cov, &fan, &nodes, &c);
                local.push((far, EdgeId(i as u32), end));
            }
        }
        if !surface.is_puncture(x) {
            let (t0, c0) = fan[0];
            let (tl, cl) = fan[fan.len() - 1];
            let seg_out = frame.triangle(t0).sides[c0 as usize];
            let seg_in = frame.triangle(tl).sides[((cl + 2) % 3) as usize];
            let first = cov.node(nodes[0]).verts[((c0 + 1) % 3) as usize];
            let last = cov.node(nodes[fan.len() - 1]).verts[((cl + 2) % 3) as usize];
            local.push((first, seg_out, 0));
            local.push((last, seg_in, 1));
        }
        let x_label = cov.node(nodes[0]).verts[fan[0].1 as usize];
        let cyc = cov.cycle(nodes[0]);
        let pos = cov.positions(&cyc);
        let len = cyc.len() as u32;
        // Far ends sorted counterclockwise along the cycle starting at x.
        let key = |far: u32| (pos[far as usize] + len - pos[x_label as usize]) % len;
        local.sort_by_key(|&(far, _, _)| key(far));
        for w in local.windows(2) {
            if key(w[0].0) == key(w[1].0) {
                return Err(ArcError::NotATriangulation("parallel arcs".into()));
            }
        }
        for &(_, edge, end) in &local {
            ends[edge.index()][end] = darts.len();
            darts.push(Dart { point: x, edge });
        }
    }
    if ends.iter().any(|e| e.contains(&usize::MAX)) {
        return Err(ArcError::NotATriangulation("dangling edge end".into()));
    }
    let opp = |d: usize| {
        let e = darts[d].edge.index();
        if ends[e][0] == d {
            ends[e][1]
        } else {
            ends[e][0]
        }
    };
    // Successor of a dart counterclockwise around its point.
    let mut next = vec![None; darts.len()];
    let mut i = 0;
    while i < darts.len() {
        let mut j = i;
        while j < darts.len() && darts[j].point == darts[i].point {
            j += 1;
        }
        for d in i..j - 1 {
            next[d] = Some(d + 1);
        }
        if surface.is_puncture(darts[i].point) {
            next[j - 1] = Some(i);
        }
        i = j;
    }
    let mut used = vec![false; darts.len()];
    let mut triangles = Vec::new();
    for d0 in 0..darts.len() {
        if used[d0] {
            continue;
        }
        let Some(d1) = next[d0] else { continue };
        let broken = || ArcError::NotATriangulation("face is not a triangle".into());
        let o1 = opp(d1);
        let e = next[o1].ok_or_else(broken)?;
        let o2 = opp(e);
        let f = next[o2].ok_or_else(broken)?;
        if opp(f) != d0 {
            return Err(broken());
        }
        for w in [d0, o1, o2] {
            if used[w] {
                return Err(broken());
            }
            used[w] = true;
        }
        triangles.push(Triangle {
            corners: [darts[d0].point, darts[o2].point, darts[o1].point],
            sides: [darts[d0].edge, darts[e].edge, darts[d1].edge],
        });
    }
    IdealTriangulation::from_triangles(surface.clone(), n, triangles)
        .map_err(|e| ArcError::NotATriangulation(e.to_string()))
}

/// Label of the far end of `c`, which starts at the fan point.
fn far_label(cov: &mut Cover, fan: &[(u32, u8)], nodes: &[u32], c: &Curve) -> u32 {
    let first = c.steps()[0];
    let Port::Corner(start) = first.entry else {
        unreachable!("curves start at a corner")
    };
    let k = fan
        .iter()
        .position(|&s| s == (first.tri, start))
        .expect("start corner lies in the fan");
    if c.len() == 1 {
        let Port::Corner(end) = first.exit else {
            unreachable!("single step ends at a corner")
        };
        if end == (start + 1) % 3 {
            return cov.node(nodes[k]).verts[end as usize];
        }
        // Along side `start + 2`: attributed to the next corner of the fan.
        let k1 = (k + 1) % fan.len();
        let c1 = fan[k1].1;
        return cov.node(nodes[k1]).verts[((c1 + 1) % 3) as usize];
    }
    cov.embed(c, 0, nodes[k]).end
}
