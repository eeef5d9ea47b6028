//! Crossing counts between curves, computed on lifts to the universal cover.

use crate::arc_model::cover::{chords_cross, Cover, Lift};
use crate::arc_model::curve::Curve;
use crate::surface_model::IdealTriangulation;

/// Smallest pair `(i, j)` with `outer.nodes[i] == inner.nodes[j]`.
fn first_shared(outer: &Lift, inner: &Lift) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (j, n) in inner.nodes.iter().enumerate() {
        if let Some(i) = outer.nodes.iter().position(|m| m == n) {
            if best.is_none_or(|b| (i, j) < b) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Minimal number of interior crossings between `a` and `b`.
pub fn int_a_curves(frame: &IdealTriangulation, a: &Curve, b: &Curve) -> u32 {
    let mut base = Cover::new(frame);
    let la = base.embed_fresh(a);
    let mut count = 0;
    for (i, sa) in a.steps().iter().enumerate() {
        for (j, sb) in b.steps().iter().enumerate() {
            if sa.tri != sb.tri {
                continue;
            }
            let mut cov = base.clone();
            let lb = cov.embed(b, j, la.nodes[i]);
            if first_shared(&la, &lb) != Some((i, j)) {
                continue;
            }
            let cyc = cov.cycle(la.nodes[0]);
            let pos = cov.positions(&cyc);
            if chords_cross(&pos, (la.start, la.end), (lb.start, lb.end)) {
                count += 1;
            }
        }
    }
    count
}

/// Number of transverse self-crossings of a curve.
pub fn self_crossings(frame: &IdealTriangulation, a: &Curve) -> u32 {
    int_a_curves(frame, a, a) / 2
}

/// Count of consecutive crossings of `b` with the loop `a` that cut off a
/// triangle at a lift of the base point. Zero when `a` is not a loop.
pub fn loop_triangles(frame: &IdealTriangulation, a: &Curve, b: &Curve) -> u32 {
    let [x, y] = a.ends(frame);
    if x != y {
        return 0;
    }
    let mut cov = Cover::new(frame);
    let lb = cov.embed_fresh(b);
    let mut lifts = Vec::new();
    for (j, sb) in b.steps().iter().enumerate() {
        for (i, sa) in a.steps().iter().enumerate() {
            if sa.tri != sb.tri {
                continue;
            }
            let la = cov.embed(a, i, lb.nodes[j]);
            if first_shared(&lb, &la) != Some((j, i)) {
                continue;
            }
            lifts.push(la);
        }
    }
    let cyc = cov.cycle(lb.nodes[0]);
    let pos = cov.positions(&cyc);
    let len = cyc.len() as u32;
    let s = pos[lb.start as usize];
    let mut crossing: Vec<(u32, u32, u32)> = lifts
        .iter()
        .filter(|la| chords_cross(&pos, (lb.start, lb.end), (la.start, la.end)))
        .map(|la| {
            let (p, q) = (pos[la.start as usize], pos[la.end as usize]);
            let (lo, hi) = (p.min(q), p.max(q));
            // Size of the side of the chord holding the start of `b`.
            let side = if lo < s && s < hi {
                hi - lo
            } else {
                len - (hi - lo)
            };
            (side, la.start, la.end)
        })
        .collect();
    crossing.sort_unstable();
    crossing
        .windows(2)
        .filter(|w| {
            let (_, a0, a1) = w[0];
            let (_, b0, b1) = w[1];
            a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1
        })
        .count() as u32
}
