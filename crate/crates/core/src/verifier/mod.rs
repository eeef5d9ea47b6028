//! Scenario runners wiring the geometric and algebraic sides together.

mod config;
mod injectivity;
mod lemmas;
mod multisets;
mod oracle;
mod report;
mod segments;
mod strong;

use std::time::Instant;

use thiserror::Error;

use crate::arc_model::{default_cap, ArcError, ArcFamilyModel, TaggedTriangulation};
use crate::cluster_engine::ClusterError;
use crate::intersection::IntersectionError;
use crate::modification::ModificationError;
use crate::surface_model::{
    admissible_triangulation, make_strong_admissible, standard_triangulation, SurfaceError,
};

pub use config::{
    OutputFormat, ScenarioConfig, ScenarioKind, TriangulationChoice, DEFAULT_DEPTH, DEFAULT_SAMPLES,
};
pub use lemmas::TWO_PUNCTURE_CAP;
pub use multisets::compatible_multisets;
pub use oracle::{lockstep, Lockstep, OraclePair};
pub use report::{render_all, Check, Counts, Report, Tally};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unsupported surface: {0}")]
    UnsupportedSurface(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("lockstep divergence: {0}")]
    Divergence(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Arc(#[from] ArcError),
    #[error(transparent)]
    Intersection(#[from] IntersectionError),
    #[error(transparent)]
    Modification(#[from] ModificationError),
    #[error(transparent)]
    Cluster(#[from] ClusterError),
}

impl VerifyError {
    /// 2 for configuration problems, 3 for internal inconsistencies.
    pub fn exit_code(&self) -> i32 {
        match self {
            VerifyError::UnsupportedSurface(_) | VerifyError::Config(_) => 2,
            VerifyError::Surface(e) => match e {
                SurfaceError::Internal(_) => 3,
                _ => 2,
            },
            VerifyError::Arc(ArcError::UnsupportedSurface(_)) => 2,
            _ => 3,
        }
    }
}

struct Outcome {
    counts: Counts,
    checks: Vec<Check>,
    notes: Vec<String>,
}

/// Arc model on the chosen reference triangulation, with its tagged version.
pub struct Reference {
    pub model: ArcFamilyModel,
    pub t: TaggedTriangulation,
}

pub fn reference(config: &ScenarioConfig) -> Result<Reference, VerifyError> {
    let surface = config.marked_surface()?;
    if !surface.is_disk_family() || surface.punctures() > 2 {
        return Err(VerifyError::UnsupportedSurface(format!(
            "{} {:?} with {} punctures; arcs are enumerated on disks with at most two punctures",
            surface.genus(),
            surface.boundary(),
            surface.punctures()
        )));
    }
    let frame = match config.triangulation {
        TriangulationChoice::Standard => standard_triangulation(&surface)?,
        TriangulationChoice::Generated => {
            let seed = config.rng_seed.ok_or_else(|| {
                VerifyError::Config("generated triangulation needs a seed".into())
            })?;
            make_strong_admissible(&admissible_triangulation(&surface, seed)?)?.triangulation
        }
    };
    let model = ArcFamilyModel::new(frame, default_cap(&surface))?;
    let t = TaggedTriangulation::standard(&model);
    Ok(Reference { model, t })
}

pub fn run(config: &ScenarioConfig) -> Result<Report, VerifyError> {
    config.validate()?;
    let start = Instant::now();
    let out = match config.kind {
        ScenarioKind::Injectivity => injectivity::run(config)?,
        ScenarioKind::NegativeControl => injectivity::run_negative(config)?,
        ScenarioKind::Smoke => injectivity::run_smoke(config)?,
        ScenarioKind::Oracle => oracle::run(config)?,
        ScenarioKind::Lemmas => lemmas::run(config)?,
        ScenarioKind::Segments => segments::run(config)?,
        ScenarioKind::BuildStrong => strong::run(config)?,
    };
    Ok(Report {
        scenario: config.kind.name().to_string(),
        config_echo: config.echo(),
        counts: out.counts,
        checks: out.checks,
        notes: out.notes,
        duration_ms: if config.timing {
            start.elapsed().as_millis() as u64
        } else {
            0
        },
    })
}

pub fn run_injectivity(config: &ScenarioConfig) -> Result<Report, VerifyError> {
    run(&ScenarioConfig {
        kind: ScenarioKind::Injectivity,
        ..config.clone()
    })
}

pub fn run_oracle(config: &ScenarioConfig) -> Result<Report, VerifyError> {
    run(&ScenarioConfig {
        kind: ScenarioKind::Oracle,
        ..config.clone()
    })
}

pub fn run_lemma_suite(config: &ScenarioConfig) -> Result<Report, VerifyError> {
    run(&ScenarioConfig {
        kind: ScenarioKind::Lemmas,
        ..config.clone()
    })
}

pub fn run_segments(config: &ScenarioConfig) -> Result<Report, VerifyError> {
    run(&ScenarioConfig {
        kind: ScenarioKind::Segments,
        ..config.clone()
    })
}

pub fn run_build_strong(config: &ScenarioConfig) -> Result<Report, VerifyError> {
    run(&ScenarioConfig {
        kind: ScenarioKind::BuildStrong,
        ..config.clone()
    })
}
