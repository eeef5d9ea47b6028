//! Geometric flips and algebraic mutations in lockstep.

use std::collections::{BTreeMap, HashMap, VecDeque};

use super::VerifyError;
use crate::arc_model::{ArcFamilyModel, ArcId, TaggedTriangulation};
use crate::cluster_engine::{ExchangeMatrix, LaurentPolynomial, Seed};
use crate::intersection::intersection_vector;

/// Arc of each variable and both sides' d-vectors.
#[derive(Debug, Clone)]
pub struct OraclePair {
    pub arc: ArcId,
    pub intersection: Vec<i64>,
    pub denominator: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct Lockstep {
    pub pairs: Vec<OraclePair>,
    pub clusters: usize,
    /// Edges visited, one per (cluster, position).
    pub steps: usize,
}

impl Lockstep {
    pub fn mismatches(&self) -> impl Iterator<Item = &OraclePair> {
        self.pairs
            .iter()
            .filter(|p| p.intersection != p.denominator)
    }
}

/// Breadth-first walk from `t`, mutating the seed of `b` at the same
/// position as each flip.
pub fn lockstep(
    model: &ArcFamilyModel,
    t: &TaggedTriangulation,
    b: ExchangeMatrix,
) -> Result<Lockstep, VerifyError> {
    let start: Vec<ArcId> = t
        .arcs()
        .iter()
        .map(|a| {
            model
                .arc_id(a)
                .ok_or(VerifyError::Divergence("arc of T is not enumerated".into()))
        })
        .collect::<Result<_, _>>()?;
    let n = start.len();
    let mut var_of_arc: HashMap<ArcId, LaurentPolynomial> = HashMap::new();
    let mut arc_of_var: HashMap<LaurentPolynomial, ArcId> = HashMap::new();
    let mut seen: HashMap<Vec<ArcId>, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    let seed = Seed::initial(b);
    let mut bind = |a: ArcId, p: &LaurentPolynomial| -> Result<(), VerifyError> {
        match (var_of_arc.get(&a), arc_of_var.get(p)) {
            (None, None) => {
                var_of_arc.insert(a, p.clone());
                arc_of_var.insert(p.clone(), a);
                Ok(())
            }
            (Some(q), Some(&x)) if q == p && x == a => Ok(()),
            _ => Err(VerifyError::Divergence(format!(
                "arc {} met a second variable or variable {p} a second arc",
                model.arc(a)
            ))),
        }
    };
    for i in 0..n {
        bind(start[i], &seed.cluster[i])?;
    }
    let key = |c: &[ArcId]| {
        let mut k = c.to_vec();
        k.sort_unstable();
        k
    };
    seen.insert(key(&start), ());
    queue.push_back((start, seed));
    let mut steps = 0;
    while let Some((cluster, seed)) = queue.pop_front() {
        for k in 0..n {
            let next = model.geometric_flip(&cluster, k)?;
            let s = seed.mutate(k)?;
            bind(next[k], &s.cluster[k])?;
            steps += 1;
            if seen.insert(key(&next), ()).is_none() {
                queue.push_back((next, s));
            }
        }
    }
    let mut pairs = Vec::new();
    let by_arc: BTreeMap<ArcId, LaurentPolynomial> = var_of_arc.into_iter().collect();
    for (a, p) in by_arc {
        pairs.push(OraclePair {
            arc: a,
            intersection: intersection_vector(model, t.arcs(), model.arc(a))?,
            denominator: p.denominator_vector()?,
        });
    }
    Ok(Lockstep {
        pairs,
        clusters: seen.len(),
        steps,
    })
}

pub(super) fn run(config: &super::ScenarioConfig) -> Result<super::Outcome, VerifyError> {
    use super::report::{Counts, Tally};
    use crate::cluster_engine::{b_matrix_of, explore, ExploreMode, DEFAULT_CLUSTER_CAP};
    use serde_json::json;

    let r = super::reference(config)?;
    let model = &r.model;
    if !model.is_complete() {
        return Err(VerifyError::UnsupportedSurface(
            "the oracle needs the complete arc model (at most one puncture)".into(),
        ));
    }
    let b = b_matrix_of(&r.t)?;
    let ls = lockstep(model, &r.t, b.clone())?;
    let geo = model.geometric_clusters()?.len();
    let ex = explore(
        &Seed::initial(b.clone()),
        ExploreMode::Full {
            cap: DEFAULT_CLUSTER_CAP,
        },
    )?;
    if ls.clusters != geo || ex.cluster_count() != geo {
        return Err(VerifyError::Divergence(format!(
            "cluster counts: lockstep {}, geometric {geo}, algebraic {}",
            ls.clusters,
            ex.cluster_count()
        )));
    }
    let mut eq = Tally::new("d-vector-equals-intersection-vector");
    for p in &ls.pairs {
        eq.record(p.intersection == p.denominator, || {
            json!({
                "arc": model.arc(p.arc).to_string(),
                "intersection": p.intersection,
                "denominator": p.denominator,
            })
        });
    }
    let mut all = Tally::new("every-arc-reached");
    all.record(
        ls.pairs.len() == model.arcs().len() && ex.variable_count() == model.arcs().len(),
        || json!({"paired": ls.pairs.len(), "arcs": model.arcs().len(), "variables": ex.variable_count()}),
    );
    let mut cc = Tally::new("cluster-count");
    cc.record(true, || json!(null));
    let mut init = Tally::new("initial-arcs");
    for (i, a) in r.t.arcs().iter().enumerate() {
        let id = model.arc_id(a).expect("enumerated");
        let p = ls.pairs.iter().find(|p| p.arc == id).expect("paired");
        let mut e = vec![0i64; r.t.len()];
        e[i] = -1;
        init.record(p.intersection == e && p.denominator == e, || {
            json!({"arc": a.to_string(), "intersection": p.intersection, "denominator": p.denominator})
        });
    }
    // The opposite global sign of B must give the same pairing.
    let flipped = lockstep(model, &r.t, b.negated())?;
    let mut sign = Tally::new("sign-independence");
    let key = |l: &Lockstep| {
        l.pairs
            .iter()
            .map(|p| (p.arc, p.denominator.clone()))
            .collect::<Vec<_>>()
    };
    sign.record(
        key(&flipped) == key(&ls) && flipped.clusters == ls.clusters,
        || json!("negated exchange matrix changes the d-vectors"),
    );
    Ok(super::Outcome {
        counts: Counts {
            arcs: model.arcs().len(),
            clusters: geo,
            monomials: 0,
        },
        checks: vec![
            eq.finish(),
            all.finish(),
            cc.finish(),
            init.finish(),
            sign.finish(),
        ],
        notes: Vec::new(),
    })
}
