//! Tagged triangulations, their conjugate pairs, tiles and plain versions.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::faces::triangulation_of;
use super::model::ArcFamilyModel;
use super::tagged::{PlainArc, Tag, TaggedArc};
use super::ArcError;
use crate::surface_model::{EdgeId, IdealTriangulation, PointId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Tile {
    Triangle,
    OnePuncture(PointId),
    TwoPuncture(PointId, PointId),
}

/// Tags carried at `p` by the members of `arcs`.
pub fn tags_at(arcs: &[TaggedArc], p: PointId) -> BTreeSet<Tag> {
    let mut out = BTreeSet::new();
    for a in arcs {
        for k in 0..2 {
            if a.arc.ends[k] == p {
                out.insert(a.tags[k]);
            }
        }
    }
    out
}

/// Plain version of a set of compatible tagged arcs: notched partners of
/// conjugate pairs become wrapping loops, every other tag is dropped.
pub fn circ_set(model: &ArcFamilyModel, arcs: &[TaggedArc]) -> Vec<PlainArc> {
    let surface = model.surface();
    let mixed: BTreeSet<PointId> = surface
        .puncture_ids()
        .filter(|&p| tags_at(arcs, p).len() == 2)
        .collect();
    arcs.iter()
        .map(|a| {
            for k in 0..2 {
                let p = a.arc.ends[k];
                if mixed.contains(&p) && a.tags[k] == Tag::Notched && !a.is_loop() {
                    return model.wrap(&a.arc, p);
                }
            }
            a.arc.clone()
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct TaggedTriangulation {
    arcs: Vec<TaggedArc>,
    /// Puncture to positions of (plain at P, notched at P).
    pairs: BTreeMap<PointId, (usize, usize)>,
    circ: Vec<PlainArc>,
    ideal: IdealTriangulation,
    tiles: Vec<Tile>,
}

impl TaggedTriangulation {
    /// Validates a maximal compatible list of tagged arcs.
    pub fn new(model: &ArcFamilyModel, arcs: Vec<TaggedArc>) -> Result<Self, ArcError> {
        if arcs.len() != model.rank() {
            return Err(ArcError::NotATriangulation(format!(
                "{} arcs, expected {}",
                arcs.len(),
                model.rank()
            )));
        }
        for i in 0..arcs.len() {
            for j in i + 1..arcs.len() {
                if arcs[i] == arcs[j] || !model.compatible(&arcs[i], &arcs[j])? {
                    return Err(ArcError::NotATriangulation(format!(
                        "arcs {i} and {j} are not compatible"
                    )));
                }
            }
        }
        let surface = model.surface();
        let mut pairs = BTreeMap::new();
        for p in surface.puncture_ids() {
            let at: Vec<usize> = (0..arcs.len())
                .filter(|&i| arcs[i].arc.has_end(p))
                .collect();
            if let [i, j] = at[..] {
                let (a, b) = (&arcs[i], &arcs[j]);
                if a.arc == b.arc && !a.is_loop() && a.tag_at(p) != b.tag_at(p) {
                    let other = if a.arc.ends[0] == p {
                        a.arc.ends[1]
                    } else {
                        a.arc.ends[0]
                    };
                    if !surface.is_puncture(other) {
                        let pair = if a.tag_at(p) == Some(Tag::Plain) {
                            (i, j)
                        } else {
                            (j, i)
                        };
                        pairs.insert(p, pair);
                    }
                }
            }
        }
        let circ = circ_set(model, &arcs);
        let ideal = triangulation_of(model, &circ)?;
        let tiles = tiles_of(&ideal);
        Ok(TaggedTriangulation {
            arcs,
            pairs,
            circ,
            ideal,
            tiles,
        })
    }

    /// Tagged version of the model's frame: each radius stays plain and each
    /// enclosing loop becomes the radius notched at its puncture.
    pub fn standard(model: &ArcFamilyModel) -> Self {
        let frame = model.frame();
        let mut loops = BTreeMap::new();
        for t in frame.self_folded_triangles() {
            let (r, l, p) = frame.self_folded_parts(t).expect("self-folded");
            loops.insert(l, (r, p));
        }
        let arcs = frame
            .arcs()
            .map(|e| match loops.get(&e) {
                Some(&(r, p)) => TaggedArc::plain(model.frame_arc(r)).with_tag_at(p, Tag::Notched),
                None => TaggedArc::plain(model.frame_arc(e)),
            })
            .collect();
        Self::new(model, arcs).expect("frame is a triangulation")
    }

    pub fn arcs(&self) -> &[TaggedArc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn position(&self, a: &TaggedArc) -> Option<usize> {
        self.arcs.iter().position(|x| x == a)
    }

    pub fn conjugate_pairs(&self) -> &BTreeMap<PointId, (usize, usize)> {
        &self.pairs
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    /// Plain version `a°` of each member, index-aligned with `arcs()`.
    pub fn circ(&self) -> &[PlainArc] {
        &self.circ
    }

    pub fn ideal(&self) -> &IdealTriangulation {
        &self.ideal
    }

    /// Every puncture is joined to the boundary by a conjugate pair and by
    /// nothing else.
    pub fn is_admissible(&self) -> bool {
        let surface = self.ideal.surface();
        surface.puncture_ids().all(|p| {
            self.pairs.contains_key(&p)
                && self.arcs.iter().filter(|a| a.arc.has_end(p)).count() == 2
        })
    }

    pub fn is_strong_admissible(&self) -> bool {
        self.is_admissible() && self.arcs.iter().all(|a| !a.is_loop())
    }

    /// Swaps the members of the conjugate pairs at `punctures`, keeping
    /// positions.
    pub fn swapped(&self, model: &ArcFamilyModel, punctures: &[PointId]) -> Result<Self, ArcError> {
        let mut arcs = self.arcs.clone();
        for p in punctures {
            let &(i, j) = self
                .pairs
                .get(p)
                .ok_or_else(|| ArcError::NotAdmissible(format!("no conjugate pair at {p}")))?;
            arcs.swap(i, j);
        }
        Self::new(model, arcs)
    }
}

fn tiles_of(ideal: &IdealTriangulation) -> Vec<Tile> {
    let mut enclosed: BTreeMap<EdgeId, PointId> = BTreeMap::new();
    for t in ideal.self_folded_triangles() {
        let (_, l, p) = ideal.self_folded_parts(t).expect("self-folded");
        enclosed.insert(l, p);
    }
    let mut out = Vec::new();
    for tri in ideal.triangles() {
        if tri.is_self_folded() {
            continue;
        }
        let ps: Vec<PointId> = tri
            .sides
            .iter()
            .filter_map(|e| enclosed.get(e).copied())
            .collect();
        out.push(match ps[..] {
            [] => Tile::Triangle,
            [p] => Tile::OnePuncture(p),
            [p, q] => Tile::TwoPuncture(p.min(q), p.max(q)),
            _ => unreachable!("disk family has at most two punctures"),
        });
    }
    out
}

/// Plain ideal triangulation of an admissible tagged triangulation, with the
/// plain version of each member.
pub fn ideal_of_tagged(
    t: &TaggedTriangulation,
) -> Result<(IdealTriangulation, Vec<PlainArc>), ArcError> {
    if !t.is_admissible() {
        return Err(ArcError::NotAdmissible(
            "some puncture lacks a conjugate pair".into(),
        ));
    }
    Ok((t.ideal.clone(), t.circ.clone()))
}
