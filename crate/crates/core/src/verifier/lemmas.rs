//! Exhaustive checks of the wrapping-loop identities, the modification maps
//! and segment reconstruction over an enumerated model.

use std::collections::BTreeMap;

use serde_json::json;

use super::multisets::compatible_multisets;
use super::report::{Counts, Tally};
use super::{reference, Outcome, ScenarioConfig, VerifyError};
use crate::arc_model::{tags_at, ArcMultiset, PlainArc, Tag, TaggedArc};
use crate::intersection::{
    ideal_intersection_vector, ideal_multiset_vector, int_a, int_b, int_circ, int_d,
    intersection_vector, multiset_intersection_vector, reconstruct_counts, segment_counts,
};
use crate::modification::{
    modify_triangulation, multiset_diamond, recover_from_diamond, sigma, signature,
};
use crate::surface_model::PointId;

/// Configurations per check on twice-punctured surfaces.
pub const TWO_PUNCTURE_CAP: usize = 10_000;

fn show(arcs: &[TaggedArc]) -> Vec<String> {
    arcs.iter().map(|a| a.to_string()).collect()
}

const CHECKS: [&str; 18] = [
    "loop-b-is-minus-a",
    "loop-a-away-from-puncture",
    "loop-a-one-end-at-puncture",
    "loop-a-both-ends-at-puncture",
    "loop-sum-is-pair-d",
    "wrap-doubles-b",
    "loop-b-doubles-elsewhere",
    "loop-b-doubles-less-one-at-base",
    "loop-a-doubles",
    "wrap-doubles-a",
    "wrap-doubles-a-plus-one",
    "unmixed-tagged-equals-plain",
    "mixed-pair-equals-loop",
    "tagged-equals-diamond",
    "sigma-invariance",
    "diamond-round-trip",
    "modified-triangulation-admissible",
    "segment-reconstruction",
];

/// Counts cases until a per-check cap, then only tallies.
struct Suite {
    tallies: BTreeMap<&'static str, Tally>,
    cap: Option<u64>,
}

impl Suite {
    fn record(&mut self, name: &'static str, ok: bool, w: impl FnOnce() -> serde_json::Value) {
        let t = self.tallies.get_mut(name).expect("registered check");
        if self.cap.is_some_and(|c| t.cases() >= c) {
            return;
        }
        t.record(ok, w);
    }
}

pub(super) fn run(config: &ScenarioConfig) -> Result<Outcome, VerifyError> {
    let r = reference(config)?;
    let model = &r.model;
    let t = &r.t;
    let two = model.surface().punctures() >= 2;
    let mut s = Suite {
        tallies: CHECKS.iter().map(|&n| (n, Tally::new(n))).collect(),
        cap: two.then_some(TWO_PUNCTURE_CAP as u64),
    };
    let mut notes = Vec::new();
    if two {
        notes.push(format!(
            "arc model truncated at {} crossings; at most {TWO_PUNCTURE_CAP} configurations per check",
            model.max_crossings()
        ));
    }
    // Conjugate pairs of T with their wrapping loops.
    let pairs: Vec<(PointId, usize, usize, PlainArc)> = t
        .conjugate_pairs()
        .iter()
        .map(|(&p, &(i, j))| (p, i, j, model.wrap(&t.arcs()[i].arc, p)))
        .collect();

    for &(p, im, ix, ref lp) in &pairs {
        let (am, ax) = (&t.arcs()[im], &t.arcs()[ix]);
        for a in model.arcs() {
            let ia = int_a(model, &am.arc, &a.arc)? as i64;
            let la = int_a(model, lp, &a.arc)? as i64;
            let lb = int_b(model, lp, &a.arc)?;
            let dsum = (int_d(ax, a) + int_d(am, a)) as i64;
            let k = a.arc.ends.iter().filter(|&&e| e == p).count();
            let w = || json!({"puncture": p, "arc": a.to_string(), "int_a": ia, "loop_a": la, "loop_b": lb, "d_sum": dsum});
            s.record("loop-b-is-minus-a", lb == -ia, w);
            match k {
                0 => s.record("loop-a-away-from-puncture", dsum == 0 && la == 2 * ia, w),
                1 => s.record(
                    "loop-a-one-end-at-puncture",
                    dsum == 1 && (a.arc == am.arc || la == 2 * ia + 1),
                    w,
                ),
                _ => s.record(
                    "loop-a-both-ends-at-puncture",
                    dsum == 2 && la == 2 * ia + 2,
                    w,
                ),
            }
            if !t.arcs().contains(a) {
                let iax = int_a(model, &ax.arc, &a.arc)? as i64;
                s.record("loop-sum-is-pair-d", la + lb == iax + dsum && iax == ia, w);
            }
        }
    }

    // Conjugate pairs at Q drawn from the universe.
    for q in model.surface().puncture_ids() {
        for g in model.plain_arcs() {
            if g.is_loop() || !g.has_end(q) {
                continue;
            }
            let lq = model.wrap(g, q);
            for a in t.arcs() {
                let w =
                    || json!({"puncture": q, "gamma": format!("{:?}", g.ends), "a": a.to_string()});
                s.record(
                    "wrap-doubles-b",
                    int_b(model, &a.arc, &lq)? == 2 * int_b(model, &a.arc, g)?,
                    w,
                );
                let (ia_l, ia_g) = (
                    int_a(model, &a.arc, &lq)? as i64,
                    int_a(model, &a.arc, g)? as i64,
                );
                let at_q = pairs.iter().find(|x| x.0 == q);
                let is_aq = at_q.is_some_and(|x| t.arcs()[x.1].arc == a.arc);
                if !is_aq {
                    s.record("wrap-doubles-a", ia_l == 2 * ia_g, w);
                } else if at_q.is_some_and(|x| t.arcs()[x.1].arc != *g) {
                    s.record("wrap-doubles-a-plus-one", ia_l == 2 * ia_g + 1, w);
                }
            }
            for &(p, im, _, ref lp) in &pairs {
                let w = || json!({"p": p, "q": q, "gamma": format!("{:?}", g.ends)});
                let (b_l, b_g) = (int_b(model, lp, &lq)?, int_b(model, lp, g)?);
                if p != q {
                    s.record("loop-b-doubles-elsewhere", b_l == 2 * b_g, w);
                } else if t.arcs()[im].arc != *g {
                    s.record("loop-b-doubles-less-one-at-base", b_l == 2 * b_g - 1, w);
                }
                s.record(
                    "loop-a-doubles",
                    int_a(model, lp, &lq)? == 2 * int_a(model, lp, g)?,
                    w,
                );
            }
        }
    }

    // Multisets of tagged arcs.
    let d = config.resolved_max_degree();
    let limit = two.then_some(TWO_PUNCTURE_CAP);
    let (sets, truncated) = compatible_multisets(
        model.arcs().len(),
        d,
        |i, j| model.compatible_ids(i, j),
        limit,
    );
    if truncated {
        notes.push(format!("tagged multisets stopped at {}", sets.len()));
    }
    let strong = t.is_strong_admissible();
    for set in &sets {
        let items: Vec<TaggedArc> = set.iter().map(|&i| model.arc(i).clone()).collect();
        let c = ArcMultiset::new(items.clone());
        let w = || json!({"multiset": show(&items)});
        let sig = signature(model, &c);
        let vec_t = multiset_intersection_vector(model, t.arcs(), &c)?;
        for &(p, im, ix, _) in &pairs {
            let sp = sigma(&c, p, t)?;
            s.record(
                "sigma-invariance",
                sp == sig.sigma[&p] && sp == vec_t[ix] - vec_t[im],
                w,
            );
        }
        let diamond = multiset_diamond(model, &c)?;
        let back = recover_from_diamond(model, &diamond, &sig.sigma);
        s.record("diamond-round-trip", back.as_ref() == Ok(&c), w);
        let tm = modify_triangulation(model, t, &c)?;
        s.record(
            "modified-triangulation-admissible",
            tm.triangulation.is_admissible() && tm.triangulation.is_strong_admissible() == strong,
            w,
        );
        if items.iter().any(|a| t.arcs().contains(a)) {
            continue;
        }
        let circ = tm.triangulation.circ();
        let rhs = ideal_multiset_vector(model, circ, &diamond)?;
        s.record(
            "tagged-equals-diamond",
            vec_t == rhs,
            || json!({"multiset": show(&items), "tagged": vec_t, "plain": rhs}),
        );
        let mixed: Vec<PointId> = model
            .surface()
            .puncture_ids()
            .filter(|&p| tags_at(&items, p).len() == 2)
            .collect();
        if mixed.is_empty() {
            for a in c.distinct() {
                let lhs = intersection_vector(model, t.arcs(), &a.0)?;
                let rhs = ideal_intersection_vector(model, circ, &a.0.arc)?;
                s.record("unmixed-tagged-equals-plain", lhs == rhs, || {
                    json!({"multiset": show(&items), "arc": a.0.to_string(), "tagged": lhs, "plain": rhs})
                });
            }
        }
        for q in mixed {
            let plain = items
                .iter()
                .find(|a| a.tag_at(q) == Some(Tag::Plain))
                .expect("mixed");
            let notched = items
                .iter()
                .find(|a| a.tag_at(q) == Some(Tag::Notched))
                .expect("mixed");
            let mut lhs = intersection_vector(model, t.arcs(), plain)?;
            for (x, y) in lhs
                .iter_mut()
                .zip(intersection_vector(model, t.arcs(), notched)?)
            {
                *x += y;
            }
            let rhs = ideal_intersection_vector(model, circ, &model.wrap(&plain.arc, q))?;
            s.record(
                "mixed-pair-equals-loop",
                lhs == rhs,
                || json!({"multiset": show(&items), "puncture": q, "pair": lhs, "loop": rhs}),
            );
        }
    }

    // Segment counts recovered from plain intersection numbers.
    let frame = model.frame();
    let frame_arcs: Vec<PlainArc> = frame.arcs().map(|e| model.frame_arc(e)).collect();
    let outside: Vec<&PlainArc> = model
        .plain_arcs()
        .iter()
        .filter(|a| a.code.crossings() > 0)
        .collect();
    let (plain_sets, _) = compatible_multisets(
        outside.len(),
        d.min(2),
        |i, j| model.int_a_plain(outside[i], outside[j]) == 0,
        limit,
    );
    for set in &plain_sets {
        let m: Vec<PlainArc> = set.iter().map(|&i| outside[i].clone()).collect();
        let v: Vec<i64> = frame_arcs
            .iter()
            .map(|a| {
                m.iter()
                    .map(|b| int_circ(model, a, b))
                    .sum::<Result<i64, _>>()
            })
            .collect::<Result<_, _>>()?;
        for tri in 0..frame.triangles().len() as u32 {
            let direct = segment_counts(model, m.iter(), tri)?;
            let rec = reconstruct_counts(model, &v, tri)?;
            s.record("segment-reconstruction", direct == rec, || {
                json!({"arcs": m.iter().map(|a| format!("{:?}", a.ends)).collect::<Vec<_>>(), "triangle": tri, "direct": direct, "reconstructed": rec})
            });
        }
    }

    Ok(Outcome {
        counts: Counts {
            arcs: model.arcs().len(),
            clusters: 0,
            monomials: sets.len(),
        },
        checks: CHECKS
            .iter()
            .map(|n| s.tallies.remove(n).expect("registered").finish())
            .collect(),
        notes,
    })
}
