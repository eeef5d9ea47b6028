//! Exhaustive listing of simple arcs by their crossing sequences.

use std::collections::BTreeSet;

use super::cover::{steps_from_nodes, Cover};
use super::curve::Curve;
use crate::intersection::crossing::self_crossings;
use crate::surface_model::IdealTriangulation;

/// All simple arcs crossing at most `max_crossings` reference arcs, in
/// canonical form and sorted. Reference arcs themselves are included.
pub fn simple_curves(frame: &IdealTriangulation, max_crossings: usize) -> Vec<Curve> {
    let mut found: BTreeSet<Curve> = frame
        .arcs()
        .map(|e| Curve::along_edge(frame, e).canonical(frame).0)
        .collect();
    let mut candidates = BTreeSet::new();
    for t in 0..frame.triangles().len() as u32 {
        for c in 0..3u8 {
            walk_from(frame, t, c, max_crossings, &mut candidates);
        }
    }
    for curve in candidates {
        if !found.contains(&curve) && self_crossings(frame, &curve) == 0 {
            found.insert(curve);
        }
    }
    found.into_iter().collect()
}

fn walk_from(
    frame: &IdealTriangulation,
    t: u32,
    c: u8,
    max_crossings: usize,
    out: &mut BTreeSet<Curve>,
) {
    let mut cov = Cover::new(frame);
    let root = cov.root(t);
    let u = cov.node(root).verts[c as usize];
    let first_side = (c + 1) % 3;
    let Some((_, entry)) = frame.glue(t, first_side) else {
        return;
    };
    let next = cov.cross(root, first_side).expect("glued side");
    let mut path = vec![root, next];
    let mut crossed = vec![
        cov.node(root).verts[first_side as usize],
        cov.node(root).verts[((first_side + 1) % 3) as usize],
    ];
    descend(
        &mut cov,
        u,
        c,
        entry,
        max_crossings,
        &mut path,
        &mut crossed,
        out,
    );
}

#[allow(clippy::too_many_arguments)]
fn descend(
    cov: &mut Cover,
    u: u32,
    start_corner: u8,
    entry: u8,
    max_crossings: usize,
    path: &mut Vec<u32>,
    crossed: &mut Vec<u32>,
    out: &mut BTreeSet<Curve>,
) {
    let m = *path.last().expect("non-empty path");
    let verts = cov.node(m).verts;
    let apex = (entry + 2) % 3;
    let v = verts[apex as usize];
    if !crossed.contains(&v) {
        let curve = steps_from_nodes(cov, path, start_corner, apex);
        out.insert(curve.canonical(cov.frame()).0);
    }
    if path.len() > max_crossings {
        return;
    }
    for side in [(entry + 1) % 3, (entry + 2) % 3] {
        let a = verts[side as usize];
        let b = verts[((side + 1) % 3) as usize];
        if a == u || b == u {
            continue;
        }
        let Some((_, next_entry)) = cov.frame().glue(cov.node(m).tri, side) else {
            continue;
        };
        let n = cov.cross(m, side).expect("glued side");
        path.push(n);
        crossed.push(a);
        crossed.push(b);
        descend(
            cov,
            u,
            start_corner,
            next_entry,
            max_crossings,
            path,
            crossed,
            out,
        );
        path.pop();
        crossed.pop();
        crossed.pop();
    }
}
