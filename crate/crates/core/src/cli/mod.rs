//! The `bargmann` command-line tool.
//!
//! Structured results are JSON, grids are CSV, and every float is written
//! with 17 significant digits so a run can be reproduced bit for bit. The
//! same [`JobConfig`] (seed included) always produces byte-identical output.

pub mod io;
pub mod verify;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;
use thiserror::Error;

use crate::bargmann::{bargmann_series, stft_gaussian, ComplexPoint};
use crate::classify::{classify_with, gaussian_membership, ClassifyOptions, DEFAULT_NOISE_FLOOR, DEFAULT_TOL};
use crate::fracft::fractional_ft;
use crate::norms::{a2_weighted_norm_series, modulation_norm, pilipovic_seminorm, GridSpec, DEFAULT_N_SUP};
use crate::weights::{RadialProfile, SequenceWeight, WeightSpec};
use crate::{analyze, Error, FunctionSpec, HermiteExpansion};
use io::{csv_text, emit, expansion_json, to_json};
pub use verify::{run_suite, Check, Status, Suite, SuiteReport};

pub const DEFAULT_CUTOFF: u32 = 40;
pub const DEFAULT_SEED: u64 = 1;
/// Time-frequency grid used when `--grid` is absent.
pub const DEFAULT_GRID: &str = "-8:8:161,-8:8:161";
/// Bargmann-plane grid used by `transform bargmann` and `plotdata` when `--grid` is absent.
pub const DEFAULT_PLANE_GRID: &str = "-3:3:61,-3:3:61";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("i/o: {0}")]
    Io(String),
    #[error("usage: {0}")]
    Usage(String),
}

/// Command line of one job. Every numeric option has a default, and the
/// stochastic checks draw only from `--seed`.
#[derive(Debug, Clone, Parser)]
#[command(name = "bargmann", version, about = "Hermite expansions, Bargmann transforms and space classification")]
pub struct JobConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Function description or expansion: inline JSON or a file path.
    #[arg(long, global = true)]
    pub input: Option<String>,
    /// Output file (output directory for `plotdata`); stdout when absent.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Largest total degree `|α|` kept in an expansion.
    #[arg(long, global = true, default_value_t = DEFAULT_CUTOFF)]
    pub cutoff: u32,
    /// Gauss–Hermite nodes per axis for analysis (default `2·cutoff + 20`).
    #[arg(long = "quad-order", global = true)]
    pub quad_order: Option<usize>,
    /// `xmin:xmax:n,ximin:ximax:n`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub grid: Option<GridSpec>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Rate resolution of the classifier.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Hermite coefficients of a function, as expansion JSON.
    Analyze,
    /// Evaluate a transform of an expansion.
    Transform {
        #[command(subcommand)]
        kind: TransformKind,
    },
    /// Place a function in the ladder of spaces.
    Classify {
        /// Coefficients below this fraction of the running maximum are noise.
        #[arg(long, default_value_t = DEFAULT_NOISE_FLOOR)]
        noise_floor: f64,
    },
    /// Norms and seminorms of an expansion.
    Norm {
        #[arg(long, value_enum, default_value_t = NormKind::Modulation)]
        kind: NormKind,
        /// Weight, e.g. `unit`, `poly:r=2`, `quadratic:h=0.6`, `gs:s=1,t=1,r=0.5`.
        #[arg(long, default_value = "unit")]
        weight: String,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long, default_value_t = 2.0)]
        q: f64,
        #[arg(long, default_value_t = 1.0)]
        h: f64,
        #[arg(long, default_value_t = 0.5)]
        s: f64,
        #[arg(long, default_value_t = DEFAULT_N_SUP)]
        n_sup: u32,
    },
    /// Run a named suite of identity checks; exits nonzero if any fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// CSV data for external plotting.
    Plotdata {
        #[arg(long, value_enum, value_delimiter = ',', default_value = "heatmap,decay")]
        view: Vec<View>,
        /// Exponent of the decay scatter abscissa `|α|^{1/(2s)}`.
        #[arg(long, default_value_t = 0.5)]
        s: f64,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum TransformKind {
    /// `𝔙f(z)`; points are `re(z_1),…,re(z_d),im(z_1),…,im(z_d)`.
    Bargmann {
        #[arg(long, allow_hyphen_values = true)]
        points: Option<String>,
    },
    /// `V_φf(x, ξ)`; points are `x_1,…,x_d,ξ_1,…,ξ_d`.
    Stft {
        #[arg(long, allow_hyphen_values = true)]
        points: Option<String>,
    },
    /// Fractional Fourier transform of order `r` (one entry per coordinate,
    /// or a single entry for all).
    Fracft {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// `f(x)` from the expansion; points are `x_1,…,x_d`.
    Synthesize {
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormKind {
    L2,
    Modulation,
    Pilipovic,
    Fock,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum View {
    Heatmap,
    Decay,
}

/// Parses the process arguments, runs the job and returns the exit code.
pub fn main_entry() -> i32 {
    let cfg = JobConfig::parse();
    match run(&cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn run(cfg: &JobConfig) -> Result<i32, CliError> {
    match &cfg.command {
        Command::Analyze => cmd_analyze(cfg),
        Command::Transform { kind } => cmd_transform(cfg, kind),
        Command::Classify { noise_floor } => cmd_classify(cfg, *noise_floor),
        Command::Norm {
            kind,
            weight,
            p,
            q,
            h,
            s,
            n_sup,
        } => cmd_norm(cfg, *kind, weight, *p, *q, *h, *s, *n_sup),
        Command::Verify { suite } => cmd_verify(cfg, *suite),
        Command::Plotdata { view, s } => cmd_plotdata(cfg, view, *s),
    }
}

fn input(cfg: &JobConfig) -> Result<&str, CliError> {
    cfg.input.as_deref().ok_or_else(|| CliError::Usage("--input is required".into()))
}

/// The expansion named by `--input`, with the function description when one
/// was given instead of coefficients.
pub fn load_expansion(cfg: &JobConfig) -> Result<(HermiteExpansion, Option<FunctionSpec>), CliError> {
    let v = io::load_json(input(cfg)?)?;
    if io::is_expansion(&v) {
        return Ok((io::parse_expansion(&v)?, None));
    }
    let spec = io::parse_function_spec(&v)?;
    let e = analyze(&spec, spec.dim(), cfg.cutoff, cfg.quad_order)?;
    for w in &e.warnings {
        eprintln!("warning: {w}");
    }
    Ok((e, Some(spec)))
}

pub fn cmd_analyze(cfg: &JobConfig) -> Result<i32, CliError> {
    let (e, _) = load_expansion(cfg)?;
    emit(cfg.output.as_deref(), &expansion_json(&e)?)?;
    Ok(0)
}

fn grid_or(cfg: &JobConfig, default: &str) -> GridSpec {
    cfg.grid.unwrap_or_else(|| default.parse().expect("default grid is well formed"))
}

/// `(first, second)` coordinate pairs from `--points`, or the grid in
/// lexicographic order (first coordinates slowest).
fn plane_points(cfg: &JobConfig, points: Option<&str>, dim: usize, default: &str) -> Result<Vec<(Vec<f64>, Vec<f64>)>, CliError> {
    if let Some(p) = points {
        return Ok(io::parse_points(p, 2 * dim)?
            .into_iter()
            .map(|v| (v[..dim].to_vec(), v[dim..].to_vec()))
            .collect());
    }
    let g = grid_or(cfg, default).sample(dim, |_, _| Complex64::new(0.0, 0.0))?;
    Ok((0..g.len()).map(|i| g.point(i)).collect())
}

fn header(prefixes: &[&str], dim: usize, tail: &[&str]) -> Vec<String> {
    let mut h: Vec<String> = prefixes
        .iter()
        .flat_map(|p| (1..=dim).map(move |j| format!("{p}{j}")))
        .collect();
    h.extend(tail.iter().map(|s| s.to_string()));
    h
}

pub fn cmd_transform(cfg: &JobConfig, kind: &TransformKind) -> Result<i32, CliError> {
    let (e, _) = load_expansion(cfg)?;
    let d = e.dim();
    let out = cfg.output.as_deref();
    match kind {
        TransformKind::Bargmann { points } => {
            let rows: Vec<Vec<f64>> = plane_points(cfg, points.as_deref(), d, DEFAULT_PLANE_GRID)?
                .into_iter()
                .map(|(re, im)| {
                    let v = bargmann_series(&e, &ComplexPoint::from_parts(&re, &im));
                    [re, im, vec![v.re, v.im]].concat()
                })
                .collect();
            emit(out, &csv_text(&header(&["re_z", "im_z"], d, &["re", "im"]), &rows)?)?;
        }
        TransformKind::Stft { points } => {
            let rows: Vec<Vec<f64>> = plane_points(cfg, points.as_deref(), d, DEFAULT_GRID)?
                .into_iter()
                .map(|(x, xi)| {
                    let v = stft_gaussian(&e, &x, &xi);
                    [x, xi, vec![v.re, v.im]].concat()
                })
                .collect();
            emit(out, &csv_text(&header(&["x", "xi"], d, &["re", "im"]), &rows)?)?;
        }
        TransformKind::Fracft { r } => {
            let mut r = io::parse_reals(r, "r")?;
            if r.len() == 1 && d > 1 {
                r = vec![r[0]; d];
            }
            emit(out, &expansion_json(&fractional_ft(&e, &r)?)?)?;
        }
        TransformKind::Synthesize { points } => {
            let rows: Vec<Vec<f64>> = io::parse_points(points, d)?
                .into_iter()
                .map(|x| {
                    let v = e.synthesize(&x);
                    [x, vec![v.re, v.im]].concat()
                })
                .collect();
            emit(out, &csv_text(&header(&["x"], d, &["re", "im"]), &rows)?)?;
        }
    }
    Ok(0)
}

/// Reports are data: the exit code is 0 whatever the verdicts.
pub fn cmd_classify(cfg: &JobConfig, noise_floor: f64) -> Result<i32, CliError> {
    let (e, spec) = load_expansion(cfg)?;
    let mut report = classify_with(&e, &ClassifyOptions { tol: cfg.tol, noise_floor })?;
    if let Some(FunctionSpec::Gaussian(g)) = &spec {
        report.gaussian = Some(gaussian_membership(g.matrix(), g.linear())?);
    }
    emit(cfg.output.as_deref(), &to_json(&report)?)?;
    Ok(0)
}

/// `ω₀` of a weight that depends on `|z|²` only, with `ω = e^{|z|²/2} ω₀(|z|²)`.
fn fock_profile(w: &WeightSpec) -> Result<RadialProfile, CliError> {
    match w {
        WeightSpec::Radial(p) => Ok(p.clone()),
        WeightSpec::Quadratic { h } => Ok(RadialProfile::Exponential { h: *h }),
        WeightSpec::Unit => Ok(RadialProfile::Exponential { h: 0.5 }),
        other => Err(Error::NonRadialWeight(format!("{other:?} has no closed-form radial profile here")).into()),
    }
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_norm(
    cfg: &JobConfig,
    kind: NormKind,
    weight: &str,
    p: f64,
    q: f64,
    h: f64,
    s: f64,
    n_sup: u32,
) -> Result<i32, CliError> {
    let (e, _) = load_expansion(cfg)?;
    let report = match kind {
        NormKind::L2 => json!({"kind": "l2", "value": e.l2_norm()}),
        NormKind::Modulation => {
            let w = io::parse_weight(weight)?;
            let grid = grid_or(cfg, DEFAULT_GRID);
            let value = modulation_norm(&e, &w, p, q, &grid)?;
            let refined = modulation_norm(&e, &w, p, q, &grid.refined())?;
            let rel_change = if refined > 0.0 { (value - refined).abs() / refined } else { value.abs() };
            json!({
                "kind": "modulation",
                "weight": weight,
                "p": p,
                "q": q,
                "grid": grid.to_string(),
                "value": value,
                "refined_value": refined,
                "rel_change": rel_change,
            })
        }
        NormKind::Pilipovic => {
            let r = pilipovic_seminorm(&e, h, s, n_sup)?;
            json!({
                "kind": "pilipovic",
                "h": h,
                "s": s,
                "n_sup": n_sup,
                "value": r.value,
                "ln_value": r.ln_value,
                "argmax": r.argmax,
            })
        }
        NormKind::Fock => {
            let profile = fock_profile(&io::parse_weight(weight)?)?;
            let theta = SequenceWeight::from_radial(&profile, e.dim(), e.cutoff())?;
            json!({
                "kind": "fock",
                "weight": weight,
                "value": a2_weighted_norm_series(&e, &theta),
            })
        }
    };
    emit(cfg.output.as_deref(), &to_json(&report)?)?;
    Ok(0)
}

pub fn cmd_verify(cfg: &JobConfig, suite: Suite) -> Result<i32, CliError> {
    let report = run_suite(suite, cfg.seed)?;
    emit(cfg.output.as_deref(), &to_json(&report)?)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn write_view(dir: &Path, name: &str, text: &str) -> Result<(), CliError> {
    let path = dir.join(name);
    fs::write(&path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// `heatmap.csv`: `|𝔙f|` and `|𝔙f| e^{−|z|²/2}` over the `z_1` plane (other
/// coordinates zero). `decay.csv`: `ln|c_α|` against `|α|^{1/(2s)}`.
pub fn cmd_plotdata(cfg: &JobConfig, views: &[View], s: f64) -> Result<i32, CliError> {
    if !(s > 0.0) {
        return Err(crate::error::invalid("s", "must be positive").into());
    }
    let (e, _) = load_expansion(cfg)?;
    let d = e.dim();
    let dir = cfg.output.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir).map_err(|err| CliError::Io(format!("{}: {err}", dir.display())))?;
    let mut seen = Vec::new();
    for v in views {
        if seen.contains(v) {
            continue;
        }
        seen.push(*v);
        match v {
            View::Heatmap => {
                let g = grid_or(cfg, DEFAULT_PLANE_GRID).sample(1, |_, _| Complex64::new(0.0, 0.0))?;
                let rows: Vec<Vec<f64>> = (0..g.len())
                    .map(|i| {
                        let (x, xi) = g.point(i);
                        let mut re = vec![0.0; d];
                        let mut im = vec![0.0; d];
                        re[0] = x[0];
                        im[0] = xi[0];
                        let a = bargmann_series(&e, &ComplexPoint::from_parts(&re, &im)).norm();
                        let sq = x[0] * x[0] + xi[0] * xi[0];
                        vec![x[0], xi[0], a, a * (-0.5 * sq).exp()]
                    })
                    .collect();
                let h = ["re_z1", "im_z1", "abs", "abs_weighted"].map(String::from);
                write_view(&dir, "heatmap.csv", &csv_text(&h, &rows)?)?;
            }
            View::Decay => {
                let rows: Vec<Vec<f64>> = e
                    .iter()
                    .filter(|(_, c)| c.norm() > 0.0)
                    .map(|(a, c)| {
                        let k = a.order() as f64;
                        let mut row: Vec<f64> = a.entries().iter().map(|&x| x as f64).collect();
                        row.extend([k, k.powf(0.5 / s), c.norm().ln()]);
                        row
                    })
                    .collect();
                let h = header(&["alpha"], d, &["degree", "feature", "ln_abs_c"]);
                write_view(&dir, "decay.csv", &csv_text(&h, &rows)?)?;
            }
        }
    }
    eprintln!("wrote {} view(s) to {}", seen.len(), dir.display());
    Ok(0)
}
