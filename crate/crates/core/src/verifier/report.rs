//! Reports and their text, JSON and CSV renderings.

use serde::Serialize;

use super::config::OutputFormat;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub arcs: usize,
    pub clusters: usize,
    pub monomials: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

/// Accumulates cases of one check, keeping the first failure.
#[derive(Debug, Clone)]
pub struct Tally {
    name: String,
    cases: u64,
    witness: Option<serde_json::Value>,
}

impl Tally {
    pub fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            cases: 0,
            witness: None,
        }
    }

    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> serde_json::Value) {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub fn cases(&self) -> u64 {
        self.cases
    }

    pub fn finish(self) -> Check {
        Check {
            name: self.name,
            pass: self.witness.is_none(),
            cases: self.cases,
            witness: self.witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub config_echo: serde_json::Value,
    pub counts: Counts,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub duration_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        render_all(std::slice::from_ref(self), format)
    }
}

/// Renders several reports; JSON gives an array when there is more than one.
pub fn render_all(reports: &[Report], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let v = if reports.len() == 1 {
                serde_json::to_value(&reports[0])
            } else {
                serde_json::to_value(reports)
            };
            let mut s = serde_json::to_string_pretty(&v.expect("report serializes"))
                .expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["scenario", "check", "pass", "cases", "witness"])
                .expect("in-memory write");
            for r in reports {
                for c in &r.checks {
                    let witness = c
                        .witness
                        .as_ref()
                        .map(|w| w.to_string())
                        .unwrap_or_default();
                    w.write_record([
                        r.scenario.as_str(),
                        c.name.as_str(),
                        if c.pass { "true" } else { "false" },
                        &c.cases.to_string(),
                        &witness,
                    ])
                    .expect("in-memory write");
                }
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for r in reports {
                s.push_str(&format!(
                    "scenario {}: {}\n",
                    r.scenario,
                    if r.passed() { "PASS" } else { "FAIL" }
                ));
                s.push_str(&format!(
                    "  arcs {}  clusters {}  monomials {}  time {} ms\n",
                    r.counts.arcs, r.counts.clusters, r.counts.monomials, r.duration_ms
                ));
                for n in &r.notes {
                    s.push_str(&format!("  note: {n}\n"));
                }
                for c in &r.checks {
                    s.push_str(&format!(
                        "  [{}] {} ({} cases)\n",
                        if c.pass { "PASS" } else { "FAIL" },
                        c.name,
                        c.cases
                    ));
                    if let Some(w) = &c.witness {
                        s.push_str(&format!("    witness: {w}\n"));
                    }
                }
            }
            s
        }
    }
}
