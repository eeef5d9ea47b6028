//! Random admissible triangulations made strong admissible.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::config::DEFAULT_SAMPLES;
use super::report::{Counts, Tally};
use super::{Outcome, ScenarioConfig, VerifyError};
use crate::surface_model::{admissible_triangulation, make_strong_admissible};

pub(super) fn run(config: &ScenarioConfig) -> Result<Outcome, VerifyError> {
    let surface = config.marked_surface()?;
    let seed = config
        .rng_seed
        .ok_or_else(|| VerifyError::Config("build-strong needs an rng seed".into()))?;
    let n = config.samples.unwrap_or(DEFAULT_SAMPLES);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut strong = Tally::new("output-strong-admissible");
    let mut mono = Tally::new("type-two-count-decreases");
    let mut budget = Tally::new("flip-budget");
    let mut already = Tally::new("strong-input-untouched");
    let mut cases: BTreeMap<String, usize> = BTreeMap::new();
    let mut fallback = 0;
    for _ in 0..n {
        let s: u64 = rng.gen();
        let t = admissible_triangulation(&surface, s)?;
        let out = make_strong_admissible(&t)?;
        let w = || json!({"sample_seed": s, "flips": out.flip_log, "steps": out.steps});
        strong.record(out.triangulation.is_strong_admissible(), w);
        mono.record(out.monotone(), w);
        let loops = t.loops().count();
        let removed = t.type_two_loops().len();
        budget.record(out.flip_log.len() <= (loops + t.arc_count()) * removed, w);
        if removed == 0 {
            already.record(out.flip_log.is_empty() && out.triangulation == t, w);
        }
        for st in &out.steps {
            *cases.entry(format!("{:?}", st.case)).or_default() += 1;
        }
        fallback += out.used_fallback() as usize;
    }
    let mut notes = vec![format!("loop cases seen: {cases:?}")];
    if fallback > 0 {
        notes.push(format!("{fallback} samples used the bounded flip search"));
    }
    Ok(Outcome {
        counts: Counts {
            arcs: surface.rank(),
            clusters: 0,
            monomials: 0,
        },
        checks: vec![
            strong.finish(),
            mono.finish(),
            budget.finish(),
            already.finish(),
        ],
        notes,
    })
}
