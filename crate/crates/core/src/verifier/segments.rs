//! Multisets of plain arcs are determined by their segment classes.

use std::collections::HashMap;

use serde_json::json;

use super::multisets::compatible_multisets;
use super::report::{Counts, Tally};
use super::{reference, Outcome, ScenarioConfig, VerifyError};
use crate::arc_model::PlainArc;
use crate::intersection::{segment_multiset, SegmentClass};

pub(super) fn run(config: &ScenarioConfig) -> Result<Outcome, VerifyError> {
    let r = reference(config)?;
    let model = &r.model;
    if !model.frame().is_admissible() {
        return Err(VerifyError::Config(
            "reference triangulation is not admissible".into(),
        ));
    }
    let outside: Vec<&PlainArc> = model
        .plain_arcs()
        .iter()
        .filter(|a| a.code.crossings() > 0)
        .collect();
    let (sets, _) = compatible_multisets(
        outside.len(),
        config.resolved_max_degree(),
        |i, j| model.int_a_plain(outside[i], outside[j]) == 0,
        None,
    );
    let mut t = Tally::new("segments-determine-multiset");
    let mut seen: HashMap<Vec<SegmentClass>, usize> = HashMap::new();
    let show = |s: &[usize]| {
        s.iter()
            .map(|&i| format!("{:?} {:?}", outside[i].ends, outside[i].code))
            .collect::<Vec<_>>()
    };
    for (k, s) in sets.iter().enumerate() {
        let segs = segment_multiset(model, s.iter().map(|&i| outside[i]))?;
        let prev = seen.insert(segs.items().to_vec(), k);
        t.record(prev.is_none(), || {
            json!({
                "first": show(&sets[prev.expect("collision")]),
                "second": show(s),
            })
        });
    }
    Ok(Outcome {
        counts: Counts {
            arcs: outside.len(),
            clusters: 0,
            monomials: sets.len(),
        },
        checks: vec![t.finish()],
        notes: Vec::new(),
    })
}
