//! Scenario configuration.

use serde::{Deserialize, Serialize};

use super::VerifyError;
use crate::surface_model::{MarkedSurface, SurfaceDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScenarioKind {
    Injectivity,
    Oracle,
    Lemmas,
    Segments,
    BuildStrong,
    NegativeControl,
    Smoke,
}

impl ScenarioKind {
    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::Injectivity => "injectivity",
            ScenarioKind::Oracle => "oracle",
            ScenarioKind::Lemmas => "lemmas",
            ScenarioKind::Segments => "segments",
            ScenarioKind::BuildStrong => "build-strong",
            ScenarioKind::NegativeControl => "negative-control",
            ScenarioKind::Smoke => "smoke",
        }
    }
}

/// Which triangulation serves as reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TriangulationChoice {
    /// Punctures on the first boundary segments, no flips.
    Standard,
    /// Random admissible triangulation from `rng_seed`, made strong.
    Generated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioConfig {
    pub kind: ScenarioKind,
    pub surface: SurfaceDescriptor,
    pub triangulation: TriangulationChoice,
    pub max_degree: Option<u32>,
    pub depth: Option<usize>,
    pub rng_seed: Option<u64>,
    /// Number of random triangulations for `build-strong`.
    pub samples: Option<usize>,
    pub format: OutputFormat,
    /// Record wall-clock time; off gives byte-identical reports.
    pub timing: bool,
}

pub const DEFAULT_SAMPLES: usize = 100;
pub const DEFAULT_DEPTH: usize = 6;

impl ScenarioConfig {
    pub fn new(kind: ScenarioKind, surface: SurfaceDescriptor) -> Self {
        ScenarioConfig {
            kind,
            surface,
            triangulation: TriangulationChoice::Standard,
            max_degree: None,
            depth: None,
            rng_seed: None,
            samples: None,
            format: OutputFormat::Text,
            timing: true,
        }
    }

    pub fn with_max_degree(mut self, d: u32) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn with_seed(mut self, s: u64) -> Self {
        self.rng_seed = Some(s);
        self
    }

    pub fn with_samples(mut self, n: usize) -> Self {
        self.samples = Some(n);
        self
    }

    pub fn with_depth(mut self, d: usize) -> Self {
        self.depth = Some(d);
        self
    }

    pub fn generated(mut self) -> Self {
        self.triangulation = TriangulationChoice::Generated;
        self
    }

    pub fn without_timing(mut self) -> Self {
        self.timing = false;
        self
    }

    pub fn marked_surface(&self) -> Result<MarkedSurface, VerifyError> {
        Ok(crate::surface_model::validate_surface(&self.surface)?)
    }

    /// 3 without punctures, 2 with.
    pub fn default_max_degree(&self) -> u32 {
        if self.surface.punctures == 0 {
            3
        } else {
            2
        }
    }

    pub fn resolved_max_degree(&self) -> u32 {
        self.max_degree.unwrap_or_else(|| match self.kind {
            ScenarioKind::Lemmas => 3,
            ScenarioKind::Segments | ScenarioKind::Smoke => 2,
            _ => self.default_max_degree(),
        })
    }

    pub fn resolved_depth(&self) -> usize {
        self.depth.unwrap_or(DEFAULT_DEPTH)
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        let randomized = self.triangulation == TriangulationChoice::Generated
            || self.kind == ScenarioKind::BuildStrong;
        if randomized && self.rng_seed.is_none() {
            return Err(VerifyError::Config(format!(
                "{} with a generated triangulation needs an rng seed",
                self.kind.name()
            )));
        }
        if self.samples == Some(0) {
            return Err(VerifyError::Config("samples must be positive".into()));
        }
        self.marked_surface()?;
        Ok(())
    }

    /// Config with every default filled in, as echoed in reports.
    pub fn echo(&self) -> serde_json::Value {
        let mut c = self.clone();
        c.max_degree = Some(self.resolved_max_degree());
        if matches!(self.kind, ScenarioKind::Smoke | ScenarioKind::Injectivity) {
            c.depth = Some(self.resolved_depth());
        }
        if self.kind == ScenarioKind::BuildStrong {
            c.samples = Some(self.samples.unwrap_or(DEFAULT_SAMPLES));
        }
        serde_json::to_value(c).expect("config serializes")
    }
}
