//! One line per acceptance criterion, each checked exactly.

use denom_core::surface_model::SurfaceDescriptor;
use denom_core::verifier::{
    reference, run, Report, ScenarioConfig, ScenarioKind, TWO_PUNCTURE_CAP,
};

struct Board {
    lines: Vec<(bool, String)>,
}

impl Board {
    fn record(&mut self, name: &str, ok: bool, detail: String) {
        let line = format!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        println!("{line}");
        self.lines.push((ok, line));
    }
}

fn report(kind: ScenarioKind, surface: SurfaceDescriptor) -> Report {
    run(&ScenarioConfig::new(kind, surface).without_timing()).expect("scenario runs")
}

fn failures(r: &Report) -> String {
    r.failures()
        .map(|c| {
            format!(
                "{} {}",
                c.name,
                c.witness
                    .as_ref()
                    .map(|w| w.to_string())
                    .unwrap_or_default()
            )
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Sets of `size` pairwise compatible items out of `n`.
fn cliques(n: usize, size: usize, compatible: &dyn Fn(usize, usize) -> bool) -> usize {
    fn grow(
        chosen: &mut Vec<usize>,
        from: usize,
        n: usize,
        size: usize,
        compatible: &dyn Fn(usize, usize) -> bool,
    ) -> usize {
        if chosen.len() == size {
            return 1;
        }
        let mut total = 0;
        for i in from..n {
            if chosen.iter().all(|&j| compatible(i, j)) {
                chosen.push(i);
                total += grow(chosen, i + 1, n, size, compatible);
                chosen.pop();
            }
        }
        total
    }
    grow(&mut Vec::new(), 0, n, size, compatible)
}

/// Triangulations of an `m`-gon, counted as maximal sets of non-crossing
/// diagonals.
fn polygon_triangulations(m: usize) -> usize {
    let diagonals: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 2..m).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i == 0 && j == m - 1))
        .collect();
    let crosses = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    };
    cliques(diagonals.len(), m - 3, &|i, j| {
        !crosses(diagonals[i], diagonals[j])
    })
}

fn catalan(k: u64) -> u64 {
    (0..k).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |c, i| c * (n - i) / (i + 1))
}

fn a_family(board: &mut Board) {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in 2..=6u32 {
        let m = n + 3;
        let r = report(ScenarioKind::Injectivity, SurfaceDescriptor::disk(m, 0));
        let cliques = polygon_triangulations(m as usize);
        let expected = catalan(n as u64 + 1) as usize;
        let good = r.passed()
            && r.config_echo["max_degree"] == 3
            && r.counts.clusters == expected
            && cliques == expected;
        ok &= good;
        detail.push(format!(
            "{m}-gon clusters {} cliques {cliques} catalan {expected} monomials {}{}",
            r.counts.clusters,
            r.counts.monomials,
            if r.passed() {
                String::new()
            } else {
                format!(" [{}]", failures(&r))
            }
        ));
    }
    board.record("a-family-injectivity", ok, detail.join(", "));
}

fn d_family(board: &mut Board) {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in 3..=5u32 {
        let surface = SurfaceDescriptor::disk(n, 1);
        let r = report(ScenarioKind::Injectivity, surface.clone());
        let reference = reference(&ScenarioConfig::new(ScenarioKind::Injectivity, surface))
            .expect("reference triangulation");
        let model = &reference.model;
        let cliques = cliques(model.arcs().len(), model.rank(), &|i, j| {
            model.compatible_ids(i, j)
        });
        // Closed forms for type D_n (n = 3 coincides with A_3).
        let k = n as u64;
        let want_vars = (k * k) as usize;
        let want_clusters = ((3 * k - 2) * binomial(2 * k - 2, k - 1) / k) as usize;
        let vars = r.check("variable-count").map(|c| c.pass).unwrap_or(false);
        let good = r.passed()
            && reference.t.is_strong_admissible()
            && r.config_echo["max_degree"] == 2
            && model.arcs().len() == want_vars
            && r.counts.clusters == want_clusters
            && cliques == want_clusters
            && vars;
        ok &= good;
        detail.push(format!(
            "n={n} arcs {} clusters {} cliques {cliques} expected {want_vars}/{want_clusters} monomials {}{}",
            model.arcs().len(),
            r.counts.clusters,
            r.counts.monomials,
            if r.passed() { String::new() } else { format!(" [{}]", failures(&r)) }
        ));
    }
    board.record("d-family-injectivity", ok, detail.join(", "));
}

fn oracle(board: &mut Board) {
    let mut ok = true;
    let mut arcs = 0;
    let mut detail = Vec::new();
    let surfaces = (4..=9)
        .map(|m| SurfaceDescriptor::disk(m, 0))
        .chain((3..=5).map(|n| SurfaceDescriptor::disk(n, 1)));
    for s in surfaces {
        let label = format!("({},{})", s.boundary[0], s.punctures);
        let r = report(ScenarioKind::Oracle, s);
        let matched = r
            .check("d-vector-equals-intersection-vector")
            .map(|c| c.cases)
            .unwrap_or(0);
        let good = r.passed() && matched as usize == r.counts.arcs;
        ok &= good;
        arcs += r.counts.arcs;
        detail.push(format!(
            "{label} {matched}/{} arcs {} clusters{}",
            r.counts.arcs,
            r.counts.clusters,
            if good {
                String::new()
            } else {
                format!(" [{}]", failures(&r))
            }
        ));
    }
    board.record(
        "oracle-equivalence",
        ok,
        format!("{arcs} arcs in total; {}", detail.join(", ")),
    );
}

fn lemmas(board: &mut Board) {
    let mut ok = true;
    let mut detail = Vec::new();
    for (m, p) in [(3, 1), (4, 1), (5, 1), (3, 2), (4, 2)] {
        let r = report(ScenarioKind::Lemmas, SurfaceDescriptor::disk(m, p));
        let capped = p < 2 || r.checks.iter().all(|c| c.cases <= TWO_PUNCTURE_CAP as u64);
        ok &= r.passed() && capped;
        let cases: u64 = r.checks.iter().map(|c| c.cases).sum();
        let vacuous: Vec<&str> = r
            .checks
            .iter()
            .filter(|c| c.cases == 0)
            .map(|c| c.name.as_str())
            .collect();
        detail.push(format!(
            "({m},{p}) {cases} cases{}{}",
            if vacuous.is_empty() {
                String::new()
            } else {
                format!(", vacuous {}", vacuous.join(" "))
            },
            if r.passed() {
                String::new()
            } else {
                format!(" [{}]", failures(&r))
            }
        ));
    }
    board.record("lemma-suites", ok, detail.join(", "));
}

fn segments(board: &mut Board) {
    let mut ok = true;
    let mut detail = Vec::new();
    for (m, p) in [(6, 0), (4, 1)] {
        let r = run(
            &ScenarioConfig::new(ScenarioKind::Segments, SurfaceDescriptor::disk(m, p))
                .with_max_degree(2)
                .without_timing(),
        )
        .expect("segments run");
        let cases = r
            .check("segments-determine-multiset")
            .map(|c| c.cases)
            .unwrap_or(0);
        ok &= r.passed() && cases > 0;
        detail.push(format!(
            "({m},{p}) {cases} multisets{}",
            if r.passed() {
                String::new()
            } else {
                format!(" [{}]", failures(&r))
            }
        ));
    }
    board.record("segment-uniqueness", ok, detail.join(", "));
}

fn builder(board: &mut Board) {
    let mut ok = true;
    let mut detail = Vec::new();
    for (m, p) in [(4, 1), (5, 1), (4, 2), (5, 2)] {
        let r = run(
            &ScenarioConfig::new(ScenarioKind::BuildStrong, SurfaceDescriptor::disk(m, p))
                .with_seed(7)
                .with_samples(100)
                .without_timing(),
        )
        .expect("builder runs");
        let samples = r
            .check("output-strong-admissible")
            .map(|c| c.cases)
            .unwrap_or(0);
        ok &= r.passed() && samples == 100;
        detail.push(format!(
            "({m},{p}) {samples} samples{}",
            if r.passed() {
                String::new()
            } else {
                format!(" [{}]", failures(&r))
            }
        ));
    }
    board.record("strong-admissible-builder", ok, detail.join(", "));
}

fn smoke(board: &mut Board) {
    let annulus = SurfaceDescriptor {
        genus: 0,
        boundary: vec![2, 2],
        punctures: 0,
    };
    let r = run(&ScenarioConfig::new(ScenarioKind::Smoke, annulus)
        .with_depth(6)
        .with_max_degree(2)
        .without_timing())
    .expect("smoke runs");
    let labelled = r.notes.iter().any(|n| n.contains("bounded evidence"));
    board.record(
        "infinite-type-smoke",
        r.passed() && labelled,
        format!(
            "annulus depth 6: {} clusters, {} monomials{}",
            r.counts.clusters,
            r.counts.monomials,
            if r.passed() {
                String::new()
            } else {
                format!(" [{}]", failures(&r))
            }
        ),
    );
}

fn negative_control(board: &mut Board) {
    let r = report(ScenarioKind::NegativeControl, SurfaceDescriptor::disk(6, 0));
    let witness = r.failures().next().and_then(|c| c.witness.clone());
    let serialized = serde_json::to_string(&r).expect("serializable");
    let ok = !r.passed() && witness.is_some() && serialized.contains("\"witness\"");
    board.record(
        "negative-control",
        ok,
        match witness {
            Some(w) => format!("weakened check failed with witness {w}"),
            None => "weakened check did not fail".into(),
        },
    );
}

fn main() {
    let mut board = Board { lines: Vec::new() };
    a_family(&mut board);
    d_family(&mut board);
    oracle(&mut board);
    lemmas(&mut board);
    segments(&mut board);
    builder(&mut board);
    smoke(&mut board);
    negative_control(&mut board);
    let failed = board.lines.iter().filter(|l| !l.0).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        board.lines.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
