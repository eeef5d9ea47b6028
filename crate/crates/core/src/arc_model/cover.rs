//! Finite pieces of the universal cover, grown triangle by triangle.
//!
//! Nodes are lifted triangles; labels are lifted marked points. Since the
//! dual graph of the cover is a tree, a node's neighbour across a side is
//! unique and a fresh third vertex never coincides with an existing label.

use std::collections::VecDeque;

use super::curve::{Curve, Port, Step};
use crate::surface_model::{IdealTriangulation, PointId};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct Node {
    pub tri: u32,
    pub verts: [u32; 3],
    nbr: [u32; 3],
}

/// A lifted curve: the node of each step and the labels of both ends.
#[derive(Debug, Clone)]
pub struct Lift {
    pub nodes: Vec<u32>,
    pub start: u32,
    pub end: u32,
}

#[derive(Clone)]
pub struct Cover<'a> {
    frame: &'a IdealTriangulation,
    nodes: Vec<Node>,
    points: Vec<PointId>,
}

impl<'a> Cover<'a> {
    pub fn new(frame: &'a IdealTriangulation) -> Self {
        Cover {
            frame,
            nodes: Vec::new(),
            points: Vec::new(),
        }
    }

    pub fn frame(&self) -> &'a IdealTriangulation {
        self.frame
    }

    pub fn node(&self, n: u32) -> &Node {
        &self.nodes[n as usize]
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn label_count(&self) -> usize {
        self.points.len()
    }

    /// Marked point under a label.
    pub fn point(&self, label: u32) -> PointId {
        self.points[label as usize]
    }

    fn fresh(&mut self, p: PointId) -> u32 {
        self.points.push(p);
        (self.points.len() - 1) as u32
    }

    pub fn root(&mut self, tri: u32) -> u32 {
        let verts = [0u8, 1, 2].map(|c| {
            let p = self.frame.corner(tri, c);
            self.fresh(p)
        });
        self.nodes.push(Node {
            tri,
            verts,
            nbr: [NONE; 3],
        });
        (self.nodes.len() - 1) as u32
    }

    /// Neighbour across `side`, created on first use. `None` on the boundary.
    pub fn cross(&mut self, n: u32, side: u8) -> Option<u32> {
        let side = side % 3;
        let existing = self.nodes[n as usize].nbr[side as usize];
        if existing != NONE {
            return Some(existing);
        }
        let node = &self.nodes[n as usize];
        let (t2, s2) = self.frame.glue(node.tri, side)?;
        let a = node.verts[side as usize];
        let b = node.verts[((side + 1) % 3) as usize];
        let mut verts = [0u32; 3];
        verts[s2 as usize] = b;
        verts[((s2 + 1) % 3) as usize] = a;
        let third = self.frame.corner(t2, s2 + 2);
        verts[((s2 + 2) % 3) as usize] = self.fresh(third);
        self.nodes.push(Node {
            tri: t2,
            verts,
            nbr: [NONE; 3],
        });
        let m = (self.nodes.len() - 1) as u32;
        self.nodes[m as usize].nbr[s2 as usize] = n;
        self.nodes[n as usize].nbr[side as usize] = m;
        Some(m)
    }

    /// Side of `m` facing its neighbour `n`.
    fn side_towards(&self, m: u32, n: u32) -> u8 {
        self.nodes[m as usize]
            .nbr
            .iter()
            .position(|&x| x == n)
            .expect("nodes are adjacent") as u8
    }

    /// Lifts `curve` so that step `anchor` lies on node `at`.
    pub fn embed(&mut self, curve: &Curve, anchor: usize, at: u32) -> Lift {
        let steps = curve.steps();
        debug_assert_eq!(self.nodes[at as usize].tri, steps[anchor].tri);
        let mut nodes = vec![NONE; steps.len()];
        nodes[anchor] = at;
        for i in anchor..steps.len() - 1 {
            let Port::Side(s) = steps[i].exit else {
                unreachable!("interior exit is a side")
            };
            nodes[i + 1] = self.cross(nodes[i], s).expect("curve crosses an arc");
        }
        for i in (1..=anchor).rev() {
            let Port::Side(s) = steps[i].entry else {
                unreachable!("interior entry is a side")
            };
            nodes[i - 1] = self.cross(nodes[i], s).expect("curve crosses an arc");
        }
        let (_, c0) = curve.start_corner();
        let (_, c1) = curve.end_corner();
        let start = self.nodes[nodes[0] as usize].verts[c0 as usize];
        let end = self.nodes[nodes[steps.len() - 1] as usize].verts[c1 as usize];
        Lift { nodes, start, end }
    }

    /// Lifts a curve starting from a fresh root.
    pub fn embed_fresh(&mut self, curve: &Curve) -> Lift {
        let r = self.root(curve.steps()[0].tri);
        self.embed(curve, 0, r)
    }

    /// Labels around the boundary of the connected piece containing `root`,
    /// counterclockwise.
    pub fn cycle(&self, root: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let node = &self.nodes[root as usize];
        for k in 0..3u8 {
            out.push(node.verts[k as usize]);
            self.expand(root, k, &mut out);
        }
        out
    }

    fn expand(&self, n: u32, k: u8, out: &mut Vec<u32>) {
        let c = self.nodes[n as usize].nbr[k as usize];
        if c == NONE {
            return;
        }
        let kk = self.side_towards(c, n);
        self.expand(c, (kk + 1) % 3, out);
        out.push(self.nodes[c as usize].verts[((kk + 2) % 3) as usize]);
        self.expand(c, (kk + 2) % 3, out);
    }

    /// Position of every label in `cycle`, `u32::MAX` for absent labels.
    pub fn positions(&self, cycle: &[u32]) -> Vec<u32> {
        let mut pos = vec![NONE; self.points.len()];
        for (i, &l) in cycle.iter().enumerate() {
            pos[l as usize] = i as u32;
        }
        pos
    }

    /// Path of nodes between `a` and `b` in the tree.
    fn path(&self, a: u32, b: u32) -> Vec<u32> {
        let mut prev = vec![NONE; self.nodes.len()];
        prev[a as usize] = a;
        let mut q = VecDeque::from([a]);
        while let Some(n) = q.pop_front() {
            if n == b {
                break;
            }
            for &m in &self.nodes[n as usize].nbr {
                if m != NONE && prev[m as usize] == NONE {
                    prev[m as usize] = n;
                    q.push_back(m);
                }
            }
        }
        let mut out = vec![b];
        let mut cur = b;
        while cur != a {
            cur = prev[cur as usize];
            debug_assert_ne!(cur, NONE, "nodes are connected");
            out.push(cur);
        }
        out.reverse();
        out
    }

    fn corner_of(&self, n: u32, label: u32) -> Option<u8> {
        self.nodes[n as usize]
            .verts
            .iter()
            .position(|&v| v == label)
            .map(|c| c as u8)
    }

    /// Shortest curve between two labels, given nodes containing them.
    /// `None` when the labels coincide or are joined by a boundary segment.
    pub fn geodesic(&self, (na, u): (u32, u32), (nb, v): (u32, u32)) -> Option<Curve> {
        if u == v {
            return None;
        }
        let path = self.path(na, nb);
        let last = path.len() - 1;
        let mut iu = 0;
        while iu < last && self.corner_of(path[iu + 1], u).is_some() {
            iu += 1;
        }
        let mut jv = last;
        while jv > 0 && self.corner_of(path[jv - 1], v).is_some() {
            jv -= 1;
        }
        if iu >= jv {
            // Some node holds both labels: the curve is one of its sides.
            let n = path[jv];
            let cu = self.corner_of(n, u)?;
            let cv = self.corner_of(n, v)?;
            let side = if (cu + 1) % 3 == cv { cu } else { cv };
            let e = self.frame.triangle(self.nodes[n as usize].tri).sides[side as usize];
            if self.frame.is_boundary(e) {
                return None;
            }
            let c = Curve::from_steps(vec![Step {
                tri: self.nodes[n as usize].tri,
                entry: Port::Corner(cu),
                exit: Port::Corner(cv),
            }]);
            return Some(c.normalized(self.frame));
        }
        let nodes = &path[iu..=jv];
        let mut steps = Vec::with_capacity(nodes.len());
        for (i, &n) in nodes.iter().enumerate() {
            let entry = if i == 0 {
                Port::Corner(self.corner_of(n, u).expect("first node holds u"))
            } else {
                Port::Side(self.side_towards(n, nodes[i - 1]))
            };
            let exit = if i + 1 == nodes.len() {
                Port::Corner(self.corner_of(n, v).expect("last node holds v"))
            } else {
                Port::Side(self.side_towards(n, nodes[i + 1]))
            };
            steps.push(Step {
                tri: self.nodes[n as usize].tri,
                entry,
                exit,
            });
        }
        Some(Curve::from_steps(steps))
    }

    /// A node containing `label`, searching the given nodes.
    pub fn holder(&self, nodes: &[u32], label: u32) -> Option<u32> {
        nodes
            .iter()
            .copied()
            .find(|&n| self.corner_of(n, label).is_some())
    }
}

/// Whether chords `a` and `b` of a cycle cross in their interiors.
/// Chords sharing an endpoint never cross.
pub fn chords_cross(pos: &[u32], a: (u32, u32), b: (u32, u32)) -> bool {
    if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
        return false;
    }
    let (p, q) = {
        let (x, y) = (pos[a.0 as usize], pos[a.1 as usize]);
        (x.min(y), x.max(y))
    };
    let inside = |l: u32| {
        let x = pos[l as usize];
        p < x && x < q
    };
    inside(b.0) != inside(b.1)
}

/// Lifts a frame path from a corner, growing the tree of reachable nodes.
/// Used by enumeration to turn a node path back into steps.
pub fn steps_from_nodes(cover: &Cover, nodes: &[u32], start: u8, end: u8) -> Curve {
    let mut steps = Vec::with_capacity(nodes.len());
    for (i, &n) in nodes.iter().enumerate() {
        let entry = if i == 0 {
            Port::Corner(start)
        } else {
            Port::Side(cover.side_towards(n, nodes[i - 1]))
        };
        let exit = if i + 1 == nodes.len() {
            Port::Corner(end)
        } else {
            Port::Side(cover.side_towards(n, nodes[i + 1]))
        };
        steps.push(Step {
            tri: cover.node(n).tri,
            entry,
            exit,
        });
    }
    Curve::from_steps(steps)
}
