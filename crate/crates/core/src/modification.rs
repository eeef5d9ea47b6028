//! Tag signatures, the modified triangulation `T_C` and the plain
//! projections `C°` and `C⋄`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::arc_model::{
    circ_set, tags_at, ArcError, ArcFamilyModel, ArcMultiset, PlainArc, PlainMultiset, Tag,
    TaggedArc, TaggedTriangulation,
};
use crate::intersection::int_d;
use crate::surface_model::PointId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModificationError {
    #[error("{0} is not a puncture")]
    NotAPuncture(PointId),
    #[error("reference triangulation is not admissible")]
    NotAdmissible,
    #[error("input repeats an arc")]
    NotASet,
    #[error("input arcs are not pairwise compatible")]
    IncompatibleInput,
    #[error("signature does not match the recovered multiset: {0}")]
    InconsistentSignature(String),
    #[error(transparent)]
    Arc(#[from] ArcError),
}

/// Tags seen at each puncture and the plain-minus-notched end count.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TagSignature {
    pub sets: BTreeMap<PointId, BTreeSet<Tag>>,
    pub sigma: BTreeMap<PointId, i64>,
}

/// End-counting signature of a multiset.
pub fn signature(model: &ArcFamilyModel, c: &ArcMultiset) -> TagSignature {
    let mut sig = TagSignature::default();
    for p in model.surface().puncture_ids() {
        sig.sets.insert(p, tags_at(c.items(), p));
        let mut s = 0i64;
        for a in c.iter() {
            for k in 0..2 {
                if a.arc.ends[k] == p {
                    s += if a.tags[k] == Tag::Plain { 1 } else { -1 };
                }
            }
        }
        sig.sigma.insert(p, s);
    }
    sig
}

/// `σ_C(P)` through the conjugate pair of `t` at `P`.
pub fn sigma(
    c: &ArcMultiset,
    p: PointId,
    t: &TaggedTriangulation,
) -> Result<i64, ModificationError> {
    if !t.ideal().surface().is_puncture(p) {
        return Err(ModificationError::NotAPuncture(p));
    }
    let &(i, j) = t
        .conjugate_pairs()
        .get(&p)
        .ok_or(ModificationError::NotAdmissible)?;
    let (plain, notched) = (&t.arcs()[i], &t.arcs()[j]);
    let d = |a: &TaggedArc| c.iter().map(|b| int_d(a, b) as i64).sum::<i64>();
    Ok(d(notched) - d(plain))
}

/// `T_C` with the map `φ_C`, which is position-preserving: member `i` of
/// `T` goes to member `i` of `T_C`.
#[derive(Debug, Clone)]
pub struct ModifiedTriangulation {
    pub triangulation: TaggedTriangulation,
    pub swapped: Vec<PointId>,
}

impl ModifiedTriangulation {
    pub fn phi(&self, original: &TaggedTriangulation, a: &TaggedArc) -> Option<TaggedArc> {
        original
            .position(a)
            .map(|i| self.triangulation.arcs()[i].clone())
    }
}

/// Swaps the conjugate pair at every puncture where `σ_C < 0`.
pub fn modify_triangulation(
    model: &ArcFamilyModel,
    t: &TaggedTriangulation,
    c: &ArcMultiset,
) -> Result<ModifiedTriangulation, ModificationError> {
    if !t.is_admissible() {
        return Err(ModificationError::NotAdmissible);
    }
    if !c.is_compatible(model)? {
        return Err(ModificationError::IncompatibleInput);
    }
    let mut swapped = Vec::new();
    for p in model.surface().puncture_ids() {
        if sigma(c, p, t)? < 0 {
            swapped.push(p);
        }
    }
    Ok(ModifiedTriangulation {
        triangulation: t.swapped(model, &swapped)?,
        swapped,
    })
}

/// `C°` of a set of compatible tagged arcs.
pub fn set_circ(
    model: &ArcFamilyModel,
    c: &[TaggedArc],
) -> Result<Vec<PlainArc>, ModificationError> {
    let distinct: BTreeSet<&TaggedArc> = c.iter().collect();
    if distinct.len() != c.len() {
        return Err(ModificationError::NotASet);
    }
    if !ArcMultiset::new(c.to_vec()).is_compatible(model)? {
        return Err(ModificationError::IncompatibleInput);
    }
    Ok(circ_set(model, c))
}

/// `C⋄`: conjugate pairs become wrapping loops, then every tag is dropped.
pub fn multiset_diamond(
    model: &ArcFamilyModel,
    c: &ArcMultiset,
) -> Result<PlainMultiset, ModificationError> {
    if !c.is_compatible(model)? {
        return Err(ModificationError::IncompatibleInput);
    }
    let mut rest: Vec<TaggedArc> = c.items().to_vec();
    let mut out: Vec<PlainArc> = Vec::new();
    for p in model.surface().puncture_ids() {
        if tags_at(&rest, p).len() < 2 {
            continue;
        }
        // Every member at P is a copy of one of the two conjugates.
        let plain: Vec<usize> = (0..rest.len())
            .filter(|&i| rest[i].tag_at(p) == Some(Tag::Plain))
            .collect();
        let notched: Vec<usize> = (0..rest.len())
            .filter(|&i| rest[i].tag_at(p) == Some(Tag::Notched))
            .collect();
        let pairs = plain.len().min(notched.len());
        let loop_p = model.wrap(&rest[plain[0]].arc, p);
        let drop: BTreeSet<usize> = plain[..pairs]
            .iter()
            .chain(&notched[..pairs])
            .copied()
            .collect();
        out.extend(std::iter::repeat_n(loop_p, pairs));
        rest = rest
            .into_iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, a)| a)
            .collect();
    }
    out.extend(rest.into_iter().map(|a| a.arc));
    Ok(PlainMultiset::new(out))
}

/// Inverse of [`multiset_diamond`] given the signature values.
pub fn recover_from_diamond(
    model: &ArcFamilyModel,
    d: &PlainMultiset,
    sig: &BTreeMap<PointId, i64>,
) -> Result<ArcMultiset, ModificationError> {
    let negative: BTreeSet<PointId> = sig
        .iter()
        .filter(|&(_, &s)| s < 0)
        .map(|(&p, _)| p)
        .collect();
    let mut out = Vec::new();
    for a in d.iter() {
        let mut t = TaggedArc::plain(a.clone());
        for k in 0..2 {
            if negative.contains(&a.ends[k]) {
                t.tags[k] = Tag::Notched;
            }
        }
        match model.unwrap_loop(a) {
            Some((gamma, p)) => {
                let base = a.ends[0];
                let base_tag = t.tags[0];
                let minus = TaggedArc::plain(gamma)
                    .with_tag_at(base, base_tag)
                    .with_tag_at(p, Tag::Plain);
                let notched = minus.with_tag_at(p, Tag::Notched);
                out.push(minus);
                out.push(notched);
            }
            None => out.push(t),
        }
    }
    let c = ArcMultiset::new(out);
    let got = signature(model, &c).sigma;
    for (p, &want) in sig {
        if got.get(p).copied().unwrap_or(0) != want {
            return Err(ModificationError::InconsistentSignature(format!(
                "sigma at {p} is {} after recovery, expected {want}",
                got.get(p).copied().unwrap_or(0)
            )));
        }
    }
    if !c.is_compatible(model)? {
        return Err(ModificationError::InconsistentSignature(
            "recovered arcs are not compatible".into(),
        ));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc_model::enumerate_arcs;
    use crate::surface_model::MarkedSurface;

    fn punctured_square() -> (ArcFamilyModel, TaggedTriangulation) {
        let model = enumerate_arcs(&MarkedSurface::disk(4, 1).unwrap()).unwrap();
        let t = TaggedTriangulation::standard(&model);
        (model, t)
    }

    fn puncture(model: &ArcFamilyModel) -> PointId {
        model.surface().puncture_ids().next().unwrap()
    }

    #[test]
    fn empty_multiset_changes_nothing() {
        let (model, t) = punctured_square();
        let c = ArcMultiset::empty();
        assert_eq!(sigma(&c, puncture(&model), &t), Ok(0));
        let m = modify_triangulation(&model, &t, &c).unwrap();
        assert!(m.swapped.is_empty());
        assert_eq!(m.triangulation.arcs(), t.arcs());
        assert!(multiset_diamond(&model, &c).unwrap().is_empty());
    }

    #[test]
    fn sigma_counts_ends() {
        let (model, t) = punctured_square();
        let p = puncture(&model);
        for a in model.arcs() {
            let want = match a.tag_at(p) {
                None => 0,
                Some(Tag::Plain) => 1,
                Some(Tag::Notched) => -1,
            };
            let c = ArcMultiset::new(vec![a.clone(), a.clone()]);
            assert_eq!(sigma(&c, p, &t), Ok(2 * want), "{a}");
            assert_eq!(signature(&model, &c).sigma[&p], 2 * want);
        }
    }

    #[test]
    fn notched_input_swaps_the_pair() {
        let (model, t) = punctured_square();
        let p = puncture(&model);
        let (i, j) = t.conjugate_pairs()[&p];
        let notched = model
            .arcs()
            .iter()
            .find(|a| a.tag_at(p) == Some(Tag::Notched) && !t.arcs().contains(a))
            .unwrap();
        let c = ArcMultiset::new(vec![notched.clone()]);
        let m = modify_triangulation(&model, &t, &c).unwrap();
        assert_eq!(m.swapped, vec![p]);
        assert_eq!(m.phi(&t, &t.arcs()[i]).as_ref(), Some(&t.arcs()[j]));
        assert_eq!(m.phi(&t, &t.arcs()[j]).as_ref(), Some(&t.arcs()[i]));
        assert!(m.triangulation.is_admissible());
    }

    #[test]
    fn conjugate_pair_becomes_its_loop() {
        let (model, t) = punctured_square();
        let p = puncture(&model);
        let (i, j) = t.conjugate_pairs()[&p];
        let c = ArcMultiset::new(vec![t.arcs()[i].clone(), t.arcs()[j].clone()]);
        let d = multiset_diamond(&model, &c).unwrap();
        assert_eq!(d.items(), &[model.wrap(&t.arcs()[i].arc, p)]);
        let sig = signature(&model, &c).sigma;
        assert_eq!(recover_from_diamond(&model, &d, &sig), Ok(c));
    }

    #[test]
    fn wrong_signature_is_rejected() {
        let (model, _) = punctured_square();
        let p = puncture(&model);
        let a = model
            .arcs()
            .iter()
            .find(|a| a.tag_at(p) == Some(Tag::Plain))
            .unwrap();
        let d = PlainMultiset::new(vec![a.arc.clone()]);
        let sig = BTreeMap::from([(p, 3)]);
        assert!(matches!(
            recover_from_diamond(&model, &d, &sig),
            Err(ModificationError::InconsistentSignature(_))
        ));
    }

    #[test]
    fn set_circ_needs_a_compatible_set() {
        let (model, t) = punctured_square();
        let a = t.arcs()[0].clone();
        assert_eq!(
            set_circ(&model, &[a.clone(), a]),
            Err(ModificationError::NotASet)
        );
        let bad = model
            .arcs()
            .iter()
            .enumerate()
            .flat_map(|(i, _)| (0..i).map(move |j| (i, j)))
            .find(|&(i, j)| !model.compatible_ids(i, j))
            .unwrap();
        let pair = [model.arc(bad.0).clone(), model.arc(bad.1).clone()];
        assert_eq!(
            set_circ(&model, &pair),
            Err(ModificationError::IncompatibleInput)
        );
        assert_eq!(set_circ(&model, t.arcs()).unwrap(), t.circ());
    }

    #[test]
    fn boundary_points_have_no_sigma() {
        let (model, t) = punctured_square();
        let b = model.surface().boundary_point(0, 0);
        assert_eq!(
            sigma(&ArcMultiset::empty(), b, &t),
            Err(ModificationError::NotAPuncture(b))
        );
    }
}
