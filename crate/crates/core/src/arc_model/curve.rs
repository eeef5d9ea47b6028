use serde::{Deserialize, Serialize};

use crate::surface_model::{EdgeId, IdealTriangulation, PointId};

/// Where a curve enters or leaves a triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Port {
    Corner(u8),
    Side(u8),
}

/// A curve's passage through one triangle of the reference triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Step {
    pub tri: u32,
    pub entry: Port,
    pub exit: Port,
}

impl Step {
    fn reversed(self) -> Step {
        Step {
            tri: self.tri,
            entry: self.exit,
            exit: self.entry,
        }
    }
}

/// Crossing sequence of an arc with a reference triangulation. The first
/// entry and the last exit are corners; everything between is a side.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Curve {
    steps: Vec<Step>,
}

impl Curve {
    pub fn from_steps(steps: Vec<Step>) -> Curve {
        debug_assert!(!steps.is_empty());
        Curve { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of arcs of the reference triangulation crossed.
    pub fn crossings(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn reversed(&self) -> Curve {
        Curve {
            steps: self.steps.iter().rev().map(|s| s.reversed()).collect(),
        }
    }

    pub fn start_corner(&self) -> (u32, u8) {
        match self.steps[0].entry {
            Port::Corner(c) => (self.steps[0].tri, c),
            Port::Side(_) => unreachable!("curve starts at a side"),
        }
    }

    pub fn end_corner(&self) -> (u32, u8) {
        let last = self.steps[self.steps.len() - 1];
        match last.exit {
            Port::Corner(c) => (last.tri, c),
            Port::Side(_) => unreachable!("curve ends at a side"),
        }
    }

    pub fn ends(&self, frame: &IdealTriangulation) -> [PointId; 2] {
        let (t0, c0) = self.start_corner();
        let (t1, c1) = self.end_corner();
        [frame.corner(t0, c0), frame.corner(t1, c1)]
    }

    /// The reference edge this curve runs along, if it crosses nothing.
    pub fn frame_edge(&self, frame: &IdealTriangulation) -> Option<EdgeId> {
        if self.steps.len() != 1 {
            return None;
        }
        let s = self.steps[0];
        let (Port::Corner(a), Port::Corner(b)) = (s.entry, s.exit) else {
            return None;
        };
        let side = if (a + 1) % 3 == b {
            a
        } else if (b + 1) % 3 == a {
            b
        } else {
            return None;
        };
        Some(frame.triangle(s.tri).sides[side as usize])
    }

    /// Curve running along a reference edge, in the orientation of its first
    /// slot.
    pub fn along_edge(frame: &IdealTriangulation, e: EdgeId) -> Curve {
        let (t, s) = frame.slots(e)[0];
        Curve {
            steps: vec![Step {
                tri: t,
                entry: Port::Corner(s),
                exit: Port::Corner((s + 1) % 3),
            }],
        }
    }

    /// Representative that does not depend on which triangle a zero-crossing
    /// curve was read from. Orientation is left alone.
    pub fn normalized(self, frame: &IdealTriangulation) -> Curve {
        match self.frame_edge(frame) {
            Some(e) => {
                let c = Curve::along_edge(frame, e);
                if c.ends(frame) == self.ends(frame) {
                    // Loops keep the slot orientation; both readings agree up
                    // to reversal, which canonical forms absorb.
                    c
                } else {
                    c.reversed()
                }
            }
            None => self,
        }
    }

    /// Orientation-free representative: the smaller of the curve and its
    /// reversal. Returns whether the input was reversed.
    pub fn canonical(self, frame: &IdealTriangulation) -> (Curve, bool) {
        let c = self.normalized(frame);
        let r = c.reversed();
        let r = if c.frame_edge(frame).is_some() {
            r.normalized(frame)
        } else {
            r
        };
        if r < c {
            (r, true)
        } else {
            (c, false)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface_model::{standard_triangulation, MarkedSurface};

    #[test]
    fn edge_curves_are_canonical_from_either_side() {
        let s = MarkedSurface::disk(4, 1).unwrap();
        let t = standard_triangulation(&s).unwrap();
        for e in t.arcs() {
            let a = Curve::along_edge(&t, e).canonical(&t).0;
            for &(tri, side) in t.slots(e) {
                let c = Curve::from_steps(vec![Step {
                    tri,
                    entry: Port::Corner((side + 1) % 3),
                    exit: Port::Corner(side),
                }]);
                assert_eq!(c.canonical(&t).0, a);
                assert_eq!(a.frame_edge(&t), Some(e));
            }
        }
    }
}
