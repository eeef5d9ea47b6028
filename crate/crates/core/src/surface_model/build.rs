//! Construction of admissible triangulations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::surface::{MarkedSurface, PointId};
use super::triangulation::{EdgeId, IdealTriangulation, Triangle};
use super::SurfaceError;

/// Mutable triangle soup used while building.
struct Soup {
    triangles: Vec<Triangle>,
    next_arc: u32,
}

impl Soup {
    fn arc(&mut self) -> EdgeId {
        let e = EdgeId(self.next_arc);
        self.next_arc += 1;
        e
    }

    fn find_slot(&self, e: EdgeId) -> (usize, usize) {
        for (t, tri) in self.triangles.iter().enumerate() {
            if let Some(s) = tri.sides.iter().position(|&x| x == e) {
                return (t, s);
            }
        }
        unreachable!("edge {e:?} not present")
    }

    /// Cuts a digon off the boundary segment `seg` and puts puncture `p`
    /// inside a self-folded triangle based at the segment's start.
    fn insert_puncture(&mut self, seg: EdgeId, p: PointId) {
        let (t, s) = self.find_slot(seg);
        let x = self.triangles[t].corners[s];
        let y = self.triangles[t].corners[(s + 1) % 3];
        let parallel = self.arc();
        let l = self.arc();
        let r = self.arc();
        self.triangles[t].sides[s] = parallel;
        self.triangles.push(Triangle {
            corners: [y, x, x],
            sides: [parallel, l, seg],
        });
        self.triangles.push(Triangle {
            corners: [x, x, p],
            sides: [l, r, r],
        });
    }
}

/// Side of the identification polygon.
#[derive(Clone, Copy)]
enum Side {
    Boundary(EdgeId),
    Paired(u32, bool),
}

/// Builds the polygon word, fan-triangulates it and resolves vertex classes.
fn polygon_triangulation(surface: &MarkedSurface, soup: &mut Soup, first_segment: u32) {
    let comps = surface.boundary();
    let mut sides: Vec<Side> = Vec::new();
    // Corner i of the polygon sits at the start of side i.
    let mut corner_hint: Vec<Option<PointId>> = Vec::new();
    let mut seg = first_segment;
    for i in 0..comps[0] {
        sides.push(Side::Boundary(EdgeId(seg)));
        corner_hint.push(Some(surface.boundary_point(0, i)));
        seg += 1;
    }
    let mut label = 0u32;
    for _ in 0..surface.genus() {
        let (a, b) = (label, label + 1);
        label += 2;
        for side in [
            Side::Paired(a, true),
            Side::Paired(b, true),
            Side::Paired(a, false),
            Side::Paired(b, false),
        ] {
            sides.push(side);
            corner_hint.push(None);
        }
    }
    for (j, &m) in comps.iter().enumerate().skip(1) {
        let c = label;
        label += 1;
        sides.push(Side::Paired(c, true));
        corner_hint.push(None);
        // Hole segments run from point i to point i + 1 of component j.
        for i in 0..m {
            sides.push(Side::Boundary(EdgeId(seg + i)));
            corner_hint.push(Some(surface.boundary_point(j, i)));
        }
        seg += m;
        sides.push(Side::Paired(c, false));
        corner_hint.push(Some(surface.boundary_point(j, 0)));
    }
    let k = sides.len();

    // Union-find over polygon corners.
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let n = p[y];
            p[y] = r;
            y = n;
        }
        r
    }
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        if ra != rb {
            p[ra] = rb;
        }
    };
    // Outer boundary: the last segment ends at point 0.
    if k > comps[0] as usize {
        union(&mut parent, comps[0] as usize, 0);
    }
    for i in 0..k {
        if let Side::Paired(lbl, true) = sides[i] {
            let j = (0..k)
                .find(|&j| matches!(sides[j], Side::Paired(l2, false) if l2 == lbl))
                .expect("paired side");
            // Forward side runs i -> i+1; backward side j runs j+1 -> j.
            union(&mut parent, i, (j + 1) % k);
            union(&mut parent, (i + 1) % k, j);
        }
    }
    let mut point_of = vec![None; k];
    for i in 0..k {
        if let Some(p) = corner_hint[i] {
            let r = find(&mut parent, i);
            point_of[r] = Some(p);
        }
    }
    let corner = |parent: &mut Vec<usize>, i: usize| -> PointId {
        let r = find(parent, i % k);
        point_of[r].expect("every corner class holds a boundary point")
    };

    let mut pair_arc = std::collections::HashMap::new();
    let mut edge_of = |soup: &mut Soup, side: Side| -> EdgeId {
        match side {
            Side::Boundary(e) => e,
            Side::Paired(l, _) => *pair_arc.entry(l).or_insert_with(|| soup.arc()),
        }
    };
    let side_edges: Vec<EdgeId> = sides.iter().map(|&s| edge_of(soup, s)).collect();
    let mut prev = side_edges[0];
    for i in 1..k - 1 {
        let last = if i + 1 == k - 1 {
            side_edges[k - 1]
        } else {
            soup.arc()
        };
        soup.triangles.push(Triangle {
            corners: [
                corner(&mut parent, 0),
                corner(&mut parent, i),
                corner(&mut parent, i + 1),
            ],
            sides: [prev, side_edges[i], last],
        });
        prev = last;
    }
}

/// A triangulation in which every puncture sits in a self-folded triangle.
///
/// The seed picks the boundary segments receiving the punctures and drives a
/// short run of flips that keep punctures enclosed.
pub fn admissible_triangulation(
    surface: &MarkedSurface,
    rng_seed: u64,
) -> Result<IdealTriangulation, SurfaceError> {
    let base = base_triangulation(surface, &mut ChaCha8Rng::seed_from_u64(rng_seed))?;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed ^ 0x9e37_79b9_7f4a_7c15);
    let steps = rng.gen_range(0..=2 * base.arc_count());
    Ok(random_admissible_walk(base, steps, &mut rng))
}

/// Deterministic strong admissible triangulation: punctures go on the first
/// boundary segments, no further flips.
pub fn standard_triangulation(surface: &MarkedSurface) -> Result<IdealTriangulation, SurfaceError> {
    build(surface, |_, i| i)
}

fn base_triangulation(
    surface: &MarkedSurface,
    rng: &mut ChaCha8Rng,
) -> Result<IdealTriangulation, SurfaceError> {
    build(surface, |segments, _| rng.gen_range(0..segments))
}

fn build(
    surface: &MarkedSurface,
    mut choose: impl FnMut(u32, u32) -> u32,
) -> Result<IdealTriangulation, SurfaceError> {
    let n = surface.rank() as u32;
    let segments = surface.boundary_point_count();
    let mut soup = Soup {
        triangles: Vec::new(),
        next_arc: 0,
    };
    // Boundary segments get ids after the arcs; they are known up front.
    let seg = |i: u32| EdgeId(n + i);
    let mut placed = 0u32;
    let single = surface.genus() == 0 && surface.boundary().len() == 1;
    let m = surface.boundary()[0];
    if single && m == 1 {
        // Monogon: two self-folded triangles inside one triangle.
        let x = surface.boundary_point(0, 0);
        let l1 = soup.arc();
        let l2 = soup.arc();
        let r1 = soup.arc();
        let r2 = soup.arc();
        soup.triangles.push(Triangle {
            corners: [x, x, x],
            sides: [seg(0), l1, l2],
        });
        soup.triangles.push(Triangle {
            corners: [x, x, surface.puncture(0)],
            sides: [l1, r1, r1],
        });
        soup.triangles.push(Triangle {
            corners: [x, x, surface.puncture(1)],
            sides: [l2, r2, r2],
        });
        placed = 2;
    } else if single && m == 2 {
        let x = surface.boundary_point(0, 0);
        let y = surface.boundary_point(0, 1);
        let l = soup.arc();
        let r = soup.arc();
        soup.triangles.push(Triangle {
            corners: [x, y, x],
            sides: [seg(0), seg(1), l],
        });
        soup.triangles.push(Triangle {
            corners: [x, x, surface.puncture(0)],
            sides: [l, r, r],
        });
        placed = 1;
    } else {
        polygon_triangulation(surface, &mut soup, n);
    }
    for i in placed..surface.punctures() {
        let s = choose(segments, i) % segments;
        soup.insert_puncture(seg(s), surface.puncture(i));
    }
    debug_assert_eq!(soup.next_arc, n);
    IdealTriangulation::from_triangles(surface.clone(), n as usize, soup.triangles)
}

/// Arcs that may be flipped without destroying any self-folded triangle.
pub fn admissible_flip_candidates(t: &IdealTriangulation) -> Vec<EdgeId> {
    let mut protected = std::collections::BTreeSet::new();
    for tri in t.self_folded_triangles() {
        if let Some((r, l, _)) = t.self_folded_parts(tri) {
            protected.insert(r);
            protected.insert(l);
        }
    }
    t.arcs()
        .filter(|e| !protected.contains(e) && t.is_flippable(*e))
        .collect()
}

/// Random walk in the flip graph that never touches radii or their loops.
pub fn random_admissible_walk(
    mut t: IdealTriangulation,
    steps: usize,
    rng: &mut impl Rng,
) -> IdealTriangulation {
    for _ in 0..steps {
        let cands = admissible_flip_candidates(&t);
        if cands.is_empty() {
            break;
        }
        let e = cands[rng.gen_range(0..cands.len())];
        t = t.flip(e).expect("candidate is flippable");
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface_model::surface::{validate_surface, SurfaceDescriptor};
    use crate::surface_model::triangulation::TriangleKind;

    fn surf(genus: u32, boundary: &[u32], punctures: u32) -> MarkedSurface {
        validate_surface(&SurfaceDescriptor {
            genus,
            boundary: boundary.to_vec(),
            punctures,
        })
        .unwrap()
    }

    #[test]
    fn hexagon_is_a_fan() {
        let t = standard_triangulation(&surf(0, &[6], 0)).unwrap();
        assert_eq!(t.arc_count(), 3);
        assert_eq!(t.triangles().len(), 4);
        assert!(t.is_strong_admissible());
        for e in t.arcs() {
            let (a, b) = t.edge_ends(e);
            assert!(a == PointId(0) || b == PointId(0));
        }
    }

    #[test]
    fn punctured_triangle_and_square() {
        let t = standard_triangulation(&surf(0, &[3], 1)).unwrap();
        assert_eq!(t.arc_count(), 3);
        assert_eq!(t.self_folded_triangles().count(), 1);
        let t = standard_triangulation(&surf(0, &[4], 1)).unwrap();
        assert_eq!(t.self_folded_triangles().count(), 1);
        assert!(t.is_strong_admissible());
        let kinds: Vec<_> = (0..t.triangles().len() as u32)
            .map(|i| t.triangle_kind(i))
            .collect();
        assert!(kinds.contains(&TriangleKind::TwoVertices));
        assert!(!kinds.contains(&TriangleKind::Other));
    }

    #[test]
    fn many_surfaces_build() {
        let cases: &[(u32, &[u32], u32)] = &[
            (0, &[1], 2),
            (0, &[1], 3),
            (0, &[2], 1),
            (0, &[2], 2),
            (0, &[5], 2),
            (0, &[2, 2], 0),
            (0, &[1, 1], 1),
            (0, &[3, 1, 2], 1),
            (1, &[1], 0),
            (1, &[3], 1),
            (2, &[2], 1),
            (1, &[1, 2], 2),
        ];
        for &(g, b, p) in cases {
            let s = surf(g, b, p);
            for seed in 0..20 {
                let t = admissible_triangulation(&s, seed).unwrap();
                assert_eq!(t.arc_count(), s.rank());
                assert!(t.is_admissible(), "{s} seed {seed}");
            }
        }
    }

    #[test]
    fn deterministic_for_seed() {
        let s = surf(0, &[5], 2);
        let a = admissible_triangulation(&s, 7).unwrap();
        let b = admissible_triangulation(&s, 7).unwrap();
        assert_eq!(a.record(), b.record());
    }
}
