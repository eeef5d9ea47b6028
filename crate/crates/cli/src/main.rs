use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use denom_core::surface_model::{validate_surface, SurfaceDescriptor};
use denom_core::verifier::{
    render_all, run, OutputFormat, Report, ScenarioConfig, ScenarioKind, VerifyError,
};

/// Exact checks of denominator vectors for cluster algebras of marked surfaces.
#[derive(Parser)]
#[command(name = "denom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Distinct cluster monomials have distinct denominator vectors.
    CheckInjectivity,
    /// Denominator vectors equal intersection vectors, arc by arc.
    CheckOracle,
    /// Wrapping-loop, modification and reconstruction identities.
    CheckLemmas,
    /// Segment classes determine multisets of plain arcs.
    CheckSegments,
    /// Random admissible triangulations made strong admissible.
    BuildStrong,
    /// Depth-bounded injectivity for infinite type.
    Smoke,
    /// Injectivity with a coordinate dropped; must fail.
    NegativeControl,
    /// Every scenario that applies to the surface.
    Report,
}

#[derive(Args)]
struct Opts {
    /// Surface descriptor (JSON: genus, boundary, punctures).
    #[arg(long, global = true, value_name = "FILE", conflicts_with = "disk")]
    surface: Option<PathBuf>,
    /// Disk with M boundary points and P punctures, as M or M,P.
    #[arg(long, global = true, value_name = "M[,P]")]
    disk: Option<String>,
    /// Reference triangulation.
    #[arg(long, global = true, value_enum, default_value_t = Triangulation::Standard)]
    triangulation: Triangulation,
    #[arg(long, global = true, value_name = "K")]
    max_degree: Option<u32>,
    /// Mutation depth for infinite type.
    #[arg(long, global = true, value_name = "K")]
    depth: Option<usize>,
    #[arg(long, global = true, value_name = "U64")]
    seed: Option<u64>,
    /// Random triangulations for build-strong.
    #[arg(long, global = true, value_name = "N")]
    samples: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Report zero duration, for byte-identical output.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(ValueEnum, Clone, Copy)]
enum Triangulation {
    Standard,
    Generated,
}

#[derive(ValueEnum, Clone, Copy)]
enum Format {
    Text,
    Json,
    Csv,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        }
    }
}

fn surface_of(opts: &Opts, command: Command) -> Result<SurfaceDescriptor, String> {
    if let Some(path) = &opts.surface {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        return SurfaceDescriptor::from_json(&text)
            .map_err(|e| format!("bad surface descriptor {}: {e}", path.display()));
    }
    if let Some(d) = &opts.disk {
        let parts: Vec<&str> = d.split(',').collect();
        let num = |s: &str| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad --disk value {d:?}"))
        };
        return match parts[..] {
            [m] => Ok(SurfaceDescriptor::disk(num(m)?, 0)),
            [m, p] => Ok(SurfaceDescriptor::disk(num(m)?, num(p)?)),
            _ => Err(format!("bad --disk value {d:?}")),
        };
    }
    match command {
        Command::NegativeControl => Ok(SurfaceDescriptor::disk(6, 0)),
        _ => Err("a surface is required: pass --surface FILE or --disk M[,P]".into()),
    }
}

fn config(opts: &Opts, kind: ScenarioKind, surface: SurfaceDescriptor) -> ScenarioConfig {
    let mut c = ScenarioConfig::new(kind, surface);
    if let Triangulation::Generated = opts.triangulation {
        c = c.generated();
    }
    c.max_degree = opts.max_degree;
    c.depth = opts.depth;
    c.rng_seed = opts.seed;
    c.samples = opts.samples;
    c.format = opts.format.into();
    c.timing = !opts.no_timing;
    c
}

/// Scenarios run by `report`.
fn applicable(surface: &SurfaceDescriptor, seeded: bool) -> Vec<ScenarioKind> {
    let disk = surface.genus == 0 && surface.boundary.len() == 1;
    let mut kinds = Vec::new();
    if disk && surface.punctures <= 2 {
        kinds.push(ScenarioKind::Injectivity);
        if surface.punctures <= 1 {
            kinds.push(ScenarioKind::Oracle);
        }
        kinds.push(ScenarioKind::Lemmas);
        kinds.push(ScenarioKind::Segments);
    } else {
        kinds.push(ScenarioKind::Smoke);
    }
    if seeded {
        kinds.push(ScenarioKind::BuildStrong);
    }
    kinds
}

fn execute(cli: &Cli) -> Result<Vec<Report>, (i32, String)> {
    let surface = surface_of(&cli.opts, cli.command).map_err(|e| (2, e))?;
    validate_surface(&surface).map_err(|e| (2, e.to_string()))?;
    let kinds = match cli.command {
        Command::CheckInjectivity => vec![ScenarioKind::Injectivity],
        Command::CheckOracle => vec![ScenarioKind::Oracle],
        Command::CheckLemmas => vec![ScenarioKind::Lemmas],
        Command::CheckSegments => vec![ScenarioKind::Segments],
        Command::BuildStrong => vec![ScenarioKind::BuildStrong],
        Command::Smoke => vec![ScenarioKind::Smoke],
        Command::NegativeControl => vec![ScenarioKind::NegativeControl],
        Command::Report => applicable(&surface, cli.opts.seed.is_some()),
    };
    kinds
        .into_iter()
        .map(|k| {
            run(&config(&cli.opts, k, surface.clone()))
                .map_err(|e: VerifyError| (e.exit_code(), e.to_string()))
        })
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let reports = match execute(&cli) {
        Ok(r) => r,
        Err((code, msg)) => {
            eprintln!("denom: {msg}");
            return ExitCode::from(code as u8);
        }
    };
    let format = cli.opts.format.into();
    let text = render_all(&reports, format);
    match &cli.opts.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("denom: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if reports.iter().all(Report::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
