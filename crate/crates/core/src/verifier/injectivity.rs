//! Distinct denominators for distinct cluster monomials, on both sides.

use std::collections::HashMap;

use serde_json::json;

use super::report::{Check, Counts, Tally};
use super::{reference, Outcome, ScenarioConfig, VerifyError};
use crate::cluster_engine::{
    b_matrix_of, enumerate_monomials, explore, ideal_b_matrix, ClusterError, ClusterMonomial,
    Exploration, ExploreMode, Seed, DEFAULT_CLUSTER_CAP,
};
use crate::intersection::intersection_vector;
use crate::surface_model::standard_triangulation;

use super::multisets::compatible_multisets;

/// Full closure for finite type, else (or past the cap) depth-bounded.
pub(super) fn explore_for(
    seed: &Seed,
    finite: bool,
    config: &ScenarioConfig,
    notes: &mut Vec<String>,
) -> Result<Exploration, VerifyError> {
    let depth = config.resolved_depth();
    if finite && config.depth.is_none() {
        match explore(
            seed,
            ExploreMode::Full {
                cap: DEFAULT_CLUSTER_CAP,
            },
        ) {
            Ok(ex) => return Ok(ex),
            Err(ClusterError::CapExceeded(cap)) => notes.push(format!(
                "full exploration passed {cap} clusters; degraded to depth {depth}"
            )),
            Err(e) => return Err(e.into()),
        }
    } else {
        notes.push(format!("depth-bounded exploration, depth {depth}"));
    }
    Ok(explore(seed, ExploreMode::Depth(depth))?)
}

fn monomial_json(ex: &Exploration, m: &ClusterMonomial) -> serde_json::Value {
    let vars = m.variables(ex);
    json!({
        "cluster": ex.cluster_key(m.cluster),
        "variables": vars,
        "factors": vars.iter().map(|&v| ex.variables[v].to_string()).collect::<Vec<_>>(),
    })
}

/// Collision check over monomial d-vectors, optionally with the last
/// coordinate dropped.
pub(super) fn monomial_check(
    name: &str,
    ex: &Exploration,
    mons: &[ClusterMonomial],
    weaken: bool,
) -> Check {
    let mut t = Tally::new(name);
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    for (i, m) in mons.iter().enumerate() {
        let mut d = m.denominator.clone();
        if weaken {
            d.pop();
        }
        let prev = seen.insert(d.clone(), i);
        t.record(prev.is_none(), || {
            json!({
                "vector": d,
                "first": monomial_json(ex, &mons[prev.expect("collision")]),
                "second": monomial_json(ex, m),
            })
        });
    }
    t.finish()
}

pub(super) fn structure_checks(ex: &Exploration) -> Vec<Check> {
    let mut pos = Tally::new("laurent-positivity");
    for v in &ex.variables {
        pos.record(v.has_positive_coefficients(), || json!(v.to_string()));
    }
    let mut reg = Tally::new("exchange-graph-regular");
    reg.record(ex.is_regular(), || {
        json!("a cluster lacks rank-many neighbors")
    });
    let mut inv = Tally::new("mutation-involution");
    inv.record(ex.is_involutive(), || json!("an edge has no reverse edge"));
    let mut add = Tally::new("d-vector-additivity");
    'outer: for c in &ex.clusters {
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                if add.cases() >= 500 {
                    break 'outer;
                }
                let (p, q) = (&ex.variables[c[i]], &ex.variables[c[j]]);
                let lhs = (p * q).denominator_vector().expect("non-zero");
                let rhs: Vec<i64> = ex.denominators[c[i]]
                    .iter()
                    .zip(&ex.denominators[c[j]])
                    .map(|(a, b)| a + b)
                    .collect();
                add.record(
                    lhs == rhs,
                    || json!({"p": p.to_string(), "q": q.to_string()}),
                );
            }
        }
    }
    vec![pos.finish(), reg.finish(), inv.finish(), add.finish()]
}

pub(super) fn run(config: &ScenarioConfig) -> Result<Outcome, VerifyError> {
    let surface = config.marked_surface()?;
    let d = config.resolved_max_degree();
    let r = reference(config)?;
    if !r.t.is_strong_admissible() {
        return Err(VerifyError::Config(
            "reference tagged triangulation is not strong admissible".into(),
        ));
    }
    let mut notes = Vec::new();
    let finite = surface.punctures() <= 1;
    let ex = explore_for(
        &Seed::initial(b_matrix_of(&r.t)?),
        finite,
        config,
        &mut notes,
    )?;
    let mons = enumerate_monomials(&ex, d);
    let mut checks = vec![monomial_check("algebraic-injectivity", &ex, &mons, false)];
    checks.extend(structure_checks(&ex));

    let model = &r.model;
    if model.is_complete() && finite {
        let geo = model.geometric_clusters()?;
        let mut vc = Tally::new("variable-count");
        vc.record(
            ex.variable_count() == model.arcs().len(),
            || json!({"algebraic": ex.variable_count(), "geometric": model.arcs().len()}),
        );
        let mut cc = Tally::new("cluster-count");
        cc.record(
            ex.cluster_count() == geo.len(),
            || json!({"algebraic": ex.cluster_count(), "geometric": geo.len()}),
        );
        checks.push(vc.finish());
        checks.push(cc.finish());

        let vectors: Vec<Vec<i64>> = model
            .arcs()
            .iter()
            .map(|a| intersection_vector(model, r.t.arcs(), a))
            .collect::<Result<_, _>>()?;
        let (sets, _) = compatible_multisets(
            model.arcs().len(),
            d,
            |i, j| model.compatible_ids(i, j),
            None,
        );
        let mut t = Tally::new("geometric-injectivity");
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        for (k, s) in sets.iter().enumerate() {
            let mut v = vec![0i64; r.t.len()];
            for &i in s {
                for (x, y) in v.iter_mut().zip(&vectors[i]) {
                    *x += y;
                }
            }
            let prev = seen.insert(v.clone(), k);
            t.record(prev.is_none(), || {
                let show = |s: &[usize]| {
                    s.iter()
                        .map(|&i| model.arc(i).to_string())
                        .collect::<Vec<_>>()
                };
                json!({
                    "vector": v,
                    "first": show(&sets[prev.expect("collision")]),
                    "second": show(s),
                })
            });
        }
        checks.push(t.finish());
    } else {
        notes.push("geometric side skipped: arc model is truncated".into());
    }
    Ok(Outcome {
        counts: Counts {
            arcs: model.arcs().len(),
            clusters: ex.cluster_count(),
            monomials: mons.len(),
        },
        checks,
        notes,
    })
}

/// Injectivity with the last coordinate of every d-vector dropped; meant to
/// fail.
pub(super) fn run_negative(config: &ScenarioConfig) -> Result<Outcome, VerifyError> {
    let r = reference(config)?;
    let mut notes = vec!["negative control: the weakened check is expected to fail".to_string()];
    let finite = r.model.surface().punctures() <= 1;
    let ex = explore_for(
        &Seed::initial(b_matrix_of(&r.t)?),
        finite,
        config,
        &mut notes,
    )?;
    let mons = enumerate_monomials(&ex, config.resolved_max_degree());
    Ok(Outcome {
        counts: Counts {
            arcs: r.model.arcs().len(),
            clusters: ex.cluster_count(),
            monomials: mons.len(),
        },
        checks: vec![monomial_check("weakened-injectivity", &ex, &mons, true)],
        notes,
    })
}

/// Depth-bounded run on a surface of infinite type.
pub(super) fn run_smoke(config: &ScenarioConfig) -> Result<Outcome, VerifyError> {
    let surface = config.marked_surface()?;
    let frame = standard_triangulation(&surface)?;
    let depth = config.resolved_depth();
    let ex = explore(
        &Seed::initial(ideal_b_matrix(&frame)),
        ExploreMode::Depth(depth),
    )?;
    let mons = enumerate_monomials(&ex, config.resolved_max_degree());
    let mut checks = vec![monomial_check("bounded-injectivity", &ex, &mons, false)];
    checks.extend(structure_checks(&ex));
    Ok(Outcome {
        counts: Counts {
            arcs: 0,
            clusters: ex.cluster_count(),
            monomials: mons.len(),
        },
        checks,
        notes: vec![format!(
            "bounded evidence: only the {} clusters within {depth} mutations were explored",
            ex.cluster_count()
        )],
    })
}
