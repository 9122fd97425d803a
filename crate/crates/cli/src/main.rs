// Negated float comparisons like !(a < b) are deliberate: they reject NaN
// along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

//! opx: experiment runner for the orthogonal-polynomial library.
//!
//! Every subcommand reads one JSON config (all flags are overrides of
//! config keys), runs one experiment, and writes `<prefix>.csv` plus
//! `<prefix>.meta.json`. Reruns with the same config and seed produce
//! byte-identical CSV bodies. `OPX_THREADS` caps the quadrature
//! reduction width without affecting results.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use opx_core::asymptotics::{
    kappa_ratio_mask, ratio_trace, weak_moments, widen_gaps, RatioMode, SubsequenceMask,
};
use opx_core::faber::keps_experiment;
use opx_core::measure::{set_parallelism, IntervalKind, Measure, SupportDescriptor};
use opx_core::opoly::{orthonormalize, verblunsky_to_basis, OrthoBasis, VerblunskySeq};
use opx_core::saff::{standard_z_grid, verify_nis};
use opx_core::transforms::{
    attract_experiment, christoffel_ratio_experiment, uvarov_ratio_experiment,
};

#[derive(Parser)]
#[command(
    name = "opx",
    version,
    about = "Orthonormal-polynomial experiments: bases, ratio traces, measure transforms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an orthonormal basis; emit kappas and monic norms
    Basis(RunArgs),
    /// Consecutive ratio trace z p_{n-1}/p_n over a z grid
    Ratio(RunArgs),
    /// Two-hypothesis ratio verification table for a Q family
    Nis(RunArgs),
    /// Point-mass perturbation experiment
    Uvarov(RunArgs),
    /// |z - x|^2 reweighting experiment
    Christoffel(RunArgs),
    /// Composition of the two transforms
    Attract(RunArgs),
    /// Moments of |p_n|^2 d mu
    WeakMoments(RunArgs),
    /// Faber-step ratio trace (lemniscate / disk)
    Keps(RunArgs),
    /// Gap-widened density-1 subsequence mask
    Mask(RunArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Basis(_) => "basis",
            Command::Ratio(_) => "ratio",
            Command::Nis(_) => "nis",
            Command::Uvarov(_) => "uvarov",
            Command::Christoffel(_) => "christoffel",
            Command::Attract(_) => "attract",
            Command::WeakMoments(_) => "weak-moments",
            Command::Keps(_) => "keps",
            Command::Mask(_) => "mask",
        }
    }

    fn args(&self) -> &RunArgs {
        match self {
            Command::Basis(a)
            | Command::Ratio(a)
            | Command::Nis(a)
            | Command::Uvarov(a)
            | Command::Christoffel(a)
            | Command::Attract(a)
            | Command::WeakMoments(a)
            | Command::Keps(a)
            | Command::Mask(a) => a,
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// JSON config file; flags below override its keys
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output path prefix for `<prefix>.csv` and `<prefix>.meta.json`
    #[arg(long)]
    out: Option<String>,
    /// Highest polynomial degree
    #[arg(long)]
    n_max: Option<usize>,
    /// Lowest polynomial degree
    #[arg(long)]
    n_min: Option<usize>,
    /// z-grid preset (standard)
    #[arg(long)]
    z_preset: Option<String>,
    /// Transform location, two reals
    #[arg(long, num_args = 2, value_names = ["RE", "IM"], allow_negative_numbers = true)]
    x: Option<Vec<f64>>,
    /// Atom mass for the point-mass transforms
    #[arg(long)]
    t: Option<f64>,
    /// Seed echoed into outputs and used by randomized sweeps
    #[arg(long)]
    seed: Option<u64>,
    /// Validate the configuration and exit without computing
    #[arg(long)]
    dry_run: bool,
}

// ---------------------------------------------------------------------------
// Config
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "builder", rename_all = "snake_case")]
enum MeasureSpec {
    CircleUniform {
        nodes: usize,
    },
    DiskArea {
        radial_order: usize,
        angular_order: usize,
    },
    Chebyshev {
        a: f64,
        b: f64,
        order: usize,
    },
    Legendre {
        a: f64,
        b: f64,
        order: usize,
    },
    Lemniscate {
        m: u32,
        nodes: usize,
    },
    /// Legendre rule on [inner, outer] mirrored through the origin
    TwoIntervalSymmetric {
        inner: f64,
        outer: f64,
        order: usize,
    },
    FromFile {
        path: String,
    },
    Verblunsky {
        kind: VerblunskyKind,
        #[serde(default)]
        alpha: Option<[f64; 2]>,
    },
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum VerblunskyKind {
    Zeros,
    Constant,
    HalfAtPowersOfTwo,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
struct ZSpec {
    #[serde(default)]
    preset: Option<String>,
    #[serde(default)]
    points: Option<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
struct ExcludedSpec {
    #[serde(default)]
    powers_of_two: bool,
    #[serde(default)]
    squares: bool,
    #[serde(default)]
    cubes: bool,
    #[serde(default)]
    explicit: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
struct Config {
    #[serde(default)]
    measure: Option<MeasureSpec>,
    #[serde(default)]
    n_max: Option<usize>,
    #[serde(default)]
    n_min: Option<usize>,
    #[serde(default)]
    z: Option<ZSpec>,
    #[serde(default)]
    out: Option<String>,
    #[serde(default)]
    seed: Option<u64>,
    /// Transform location (uvarov / christoffel / attract / nis-uvarov)
    #[serde(default)]
    x: Option<[f64; 2]>,
    /// Uvarov mass
    #[serde(default)]
    t: Option<f64>,
    /// kappa-ratio mask: ratio step
    #[serde(default)]
    step: Option<usize>,
    /// kappa-ratio mask: tolerance (mask applied when present)
    #[serde(default)]
    epsilon: Option<f64>,
    /// nis Q family: self | shifted | uvarov
    #[serde(default)]
    q_family: Option<String>,
    /// weak-moments: largest k
    #[serde(default)]
    k_max: Option<u32>,
    #[serde(default)]
    conj_power: Option<u32>,
    /// mask experiment
    #[serde(default)]
    excluded: Option<ExcludedSpec>,
    #[serde(default)]
    horizon: Option<u64>,
}

impl Config {
    fn load(args: &RunArgs) -> Result<Self> {
        let mut config = match &args.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("cannot read config {}", path.display()))?;
                serde_json::from_str(&text)
                    .with_context(|| format!("cannot parse config {}", path.display()))?
            }
            None => Config::default(),
        };
        if let Some(out) = &args.out {
            config.out = Some(out.clone());
        }
        if let Some(n) = args.n_max {
            config.n_max = Some(n);
        }
        if let Some(n) = args.n_min {
            config.n_min = Some(n);
        }
        if let Some(preset) = &args.z_preset {
            let z = config.z.get_or_insert_with(ZSpec::default);
            z.preset = Some(preset.clone());
        }
        if let Some(x) = &args.x {
            config.x = Some([x[0], x[1]]);
        }
        if let Some(t) = args.t {
            config.t = Some(t);
        }
        if let Some(seed) = args.seed {
            config.seed = Some(seed);
        }
        Ok(config)
    }

    fn out_prefix(&self) -> Result<&str> {
        self.out
            .as_deref()
            .ok_or_else(|| anyhow!("missing output prefix (--out or config key \"out\")"))
    }

    fn x_value(&self) -> Result<Complex64> {
        let [re, im] = self
            .x
            .ok_or_else(|| anyhow!("experiment needs \"x\": [re, im] in the config"))?;
        Ok(Complex64::new(re, im))
    }
}

/// What the basis is built from.
enum Source {
    Measure(Measure),
    Verblunsky(VerblunskySeq),
}

fn build_source(spec: &MeasureSpec) -> Result<Source> {
    Ok(match spec {
        MeasureSpec::CircleUniform { nodes } => {
            Source::Measure(Measure::unit_circle_uniform(*nodes)?)
        }
        MeasureSpec::DiskArea {
            radial_order,
            angular_order,
        } => Source::Measure(Measure::disk_area(*radial_order, *angular_order)?),
        MeasureSpec::Chebyshev { a, b, order } => {
            Source::Measure(Measure::interval(*a, *b, IntervalKind::Chebyshev, *order)?)
        }
        MeasureSpec::Legendre { a, b, order } => {
            Source::Measure(Measure::interval(*a, *b, IntervalKind::Legendre, *order)?)
        }
        MeasureSpec::Lemniscate { m, nodes } => {
            Source::Measure(Measure::lemniscate_boundary(*m, *nodes)?)
        }
        MeasureSpec::TwoIntervalSymmetric {
            inner,
            outer,
            order,
        } => {
            let right = Measure::interval(*inner, *outer, IntervalKind::Legendre, *order)?;
            let mut nodes = Vec::new();
            let mut weights = Vec::new();
            for (&z, &w) in right.nodes().iter().zip(right.weights()) {
                nodes.push(z);
                weights.push(w / 2.0);
                nodes.push(-z);
                weights.push(w / 2.0);
            }
            Source::Measure(Measure::from_parts(
                nodes,
                weights,
                Vec::new(),
                SupportDescriptor::Custom,
                right.exactness_degree(),
            )?)
        }
        MeasureSpec::FromFile { path } => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read measure file {path}"))?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .with_context(|| format!("cannot parse measure file {path}"))?;
            Source::Measure(Measure::from_json(&value)?)
        }
        MeasureSpec::Verblunsky { kind, alpha } => Source::Verblunsky(match kind {
            VerblunskyKind::Zeros => VerblunskySeq::zeros(),
            VerblunskyKind::HalfAtPowersOfTwo => VerblunskySeq::half_at_powers_of_two(),
            VerblunskyKind::Constant => {
                let [re, im] =
                    alpha.ok_or_else(|| anyhow!("constant Verblunsky needs \"alpha\""))?;
                VerblunskySeq::constant(Complex64::new(re, im))
            }
        }),
    })
}

/// Validates a measure spec without building quadratures.
fn validate_spec(spec: &MeasureSpec) -> Result<()> {
    match spec {
        MeasureSpec::CircleUniform { nodes } if *nodes < 1 => bail!("nodes must be >= 1"),
        MeasureSpec::DiskArea {
            radial_order,
            angular_order,
        } if *radial_order < 1 || *angular_order < 1 => bail!("orders must be >= 1"),
        MeasureSpec::Chebyshev { a, b, order } | MeasureSpec::Legendre { a, b, order } => {
            if !(a < b) {
                bail!("interval needs a < b");
            }
            if *order < 1 {
                bail!("order must be >= 1");
            }
        }
        MeasureSpec::Lemniscate { m, nodes } => {
            if *m < 1 {
                bail!("lemniscate needs m >= 1");
            }
            if *nodes < *m as usize {
                bail!("lemniscate needs at least m nodes");
            }
        }
        MeasureSpec::TwoIntervalSymmetric {
            inner,
            outer,
            order,
        } => {
            if !(inner < outer) || *inner <= 0.0 {
                bail!("two-interval needs 0 < inner < outer");
            }
            if *order < 1 {
                bail!("order must be >= 1");
            }
        }
        MeasureSpec::FromFile { path } => {
            if !std::path::Path::new(path).exists() {
                bail!("measure file {path} does not exist");
            }
        }
        MeasureSpec::Verblunsky {
            kind: VerblunskyKind::Constant,
            alpha,
        } => match alpha {
            Some([re, im]) if (re * re + im * im).sqrt() < 1.0 => {}
            Some(_) => bail!("constant Verblunsky coefficient must satisfy |alpha| < 1"),
            None => bail!("constant Verblunsky needs \"alpha\""),
        },
        _ => {}
    }
    Ok(())
}

fn z_grid(config: &Config, source: &Source) -> Result<Vec<Complex64>> {
    if let Some(z) = &config.z {
        if let Some(points) = &z.points {
            if !points.is_empty() {
                return Ok(points
                    .iter()
                    .map(|[re, im]| Complex64::new(*re, *im))
                    .collect());
            }
        }
        if let Some(preset) = &z.preset {
            if preset != "standard" {
                bail!("unknown z preset {preset:?} (available: standard)");
            }
        }
    }
    // standard preset
    Ok(match source {
        Source::Measure(mu) => standard_z_grid(mu),
        // circle of radius 1: same rings as the unit-disk standard grid
        Source::Verblunsky(_) => {
            let mut grid = Vec::with_capacity(64);
            for factor in [1.25, 1.5, 2.0, 4.0] {
                for j in 0..16 {
                    let theta = 2.0 * std::f64::consts::PI * j as f64 / 16.0;
                    grid.push(Complex64::from_polar(factor, theta));
                }
            }
            grid
        }
    })
}

fn build_basis(source: &Source, n_max: usize) -> Result<OrthoBasis> {
    Ok(match source {
        Source::Measure(mu) => orthonormalize(mu, n_max)?,
        Source::Verblunsky(seq) => verblunsky_to_basis(seq, n_max)?,
    })
}

fn mask_for(config: &Config, basis: &OrthoBasis) -> SubsequenceMask {
    match config.epsilon {
        Some(eps) => kappa_ratio_mask(basis, config.step.unwrap_or(1), eps),
        None => SubsequenceMask::full(basis.max_degree() as u64),
    }
}

fn excluded_set(spec: &ExcludedSpec, horizon: u64) -> BTreeSet<u64> {
    let mut set = BTreeSet::new();
    if spec.powers_of_two {
        set.extend((0..).map(|j| 1u64 << j).take_while(|&m| m <= horizon));
    }
    if spec.squares {
        set.extend((1u64..).map(|j| j * j).take_while(|&m| m <= horizon));
    }
    if spec.cubes {
        set.extend((1u64..).map(|j| j * j * j).take_while(|&m| m <= horizon));
    }
    set.extend(
        spec.explicit
            .iter()
            .copied()
            .filter(|&m| m >= 1 && m <= horizon),
    );
    set
}

// ---------------------------------------------------------------------------
// Runner
// ---------------------------------------------------------------------------

fn main() {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("OPX_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n >= 1 => set_parallelism(n),
            _ => {
                eprintln!("error: OPX_THREADS must be a positive integer");
                std::process::exit(1);
            }
        }
    }
    if let Err(e) = run(&cli.command) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run(command: &Command) -> Result<()> {
    let args = command.args();
    let config = Config::load(args)?;
    let name = command.name();

    // validation common to every experiment
    if name != "mask" {
        let spec = config
            .measure
            .as_ref()
            .ok_or_else(|| anyhow!("missing \"measure\" in config"))?;
        validate_spec(spec)?;
        if config.n_max.is_none() {
            bail!("missing n_max (--n-max or config key)");
        }
    } else if config.horizon.is_none() || config.excluded.is_none() {
        bail!("mask experiment needs \"excluded\" and \"horizon\"");
    }
    match name {
        "uvarov" | "attract" => {
            config.x_value()?;
            if config.t.is_none() {
                bail!("experiment needs \"t\" (atom mass)");
            }
        }
        "christoffel" => {
            config.x_value()?;
        }
        "nis" => {
            let family = config.q_family.as_deref().unwrap_or("shifted");
            if !["self", "shifted", "uvarov"].contains(&family) {
                bail!("unknown q_family {family:?} (available: self, shifted, uvarov)");
            }
            if family == "uvarov" {
                config.x_value()?;
                if config.t.is_none() {
                    bail!("q_family uvarov needs \"t\"");
                }
            }
        }
        _ => {}
    }
    config.out_prefix()?;

    if args.dry_run {
        println!("config ok: {name} -> {}", config.out_prefix()?);
        return Ok(());
    }

    let started = Instant::now();
    let (csv, extra_meta, side_files) = dispatch(name, &config)?;

    let prefix = config.out_prefix()?;
    if let Some(parent) = std::path::Path::new(prefix).parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    fs::write(format!("{prefix}.csv"), &csv)?;
    for (suffix, body) in side_files {
        fs::write(format!("{prefix}.{suffix}"), body)?;
    }
    let meta = serde_json::json!({
        "experiment": name,
        "config": serde_json::to_value(&config)?,
        "version": env!("CARGO_PKG_VERSION"),
        "wall_time_s": started.elapsed().as_secs_f64(),
        "extra": extra_meta,
    });
    fs::write(
        format!("{prefix}.meta.json"),
        serde_json::to_string_pretty(&meta)?,
    )?;
    println!("{name}: wrote {prefix}.csv and {prefix}.meta.json");
    Ok(())
}

type SideFiles = Vec<(&'static str, String)>;

fn dispatch(name: &str, config: &Config) -> Result<(String, serde_json::Value, SideFiles)> {
    match name {
        "mask" => {
            let horizon = config.horizon.unwrap();
            let excluded = excluded_set(config.excluded.as_ref().unwrap(), horizon);
            let mask = widen_gaps(&excluded, horizon);
            let thresholds: Vec<u64> = (1..=5)
                .map(|ell| mask.shift_threshold(&excluded, ell))
                .collect();
            let mut csv = String::from("excluded_index\n");
            for m in mask.excluded() {
                csv.push_str(&format!("{m}\n"));
            }
            let meta = serde_json::json!({
                "original_excluded": excluded.len(),
                "widened_excluded": mask.excluded().len(),
                "density_at_horizon": mask.density_at(horizon),
                "shift_thresholds": thresholds,
            });
            let side = vec![("mask.json", mask.to_json().to_string())];
            Ok((csv, meta, side))
        }
        "basis" => {
            let source = build_source(config.measure.as_ref().unwrap())?;
            let basis = build_basis(&source, config.n_max.unwrap())?;
            for w in basis.warnings() {
                eprintln!("warning: {w}");
            }
            let mut csv = String::from("n,kappa,monic_norm\n");
            for n in 0..=basis.max_degree() {
                csv.push_str(&format!("{n},{},{}\n", basis.kappa(n), basis.monic_norm(n)));
            }
            let side = vec![("basis.json", basis.to_json().to_string())];
            Ok((csv, serde_json::json!({"warnings": basis.warnings()}), side))
        }
        "ratio" | "keps" => {
            let source = build_source(config.measure.as_ref().unwrap())?;
            let n_max = config.n_max.unwrap();
            let basis = build_basis(&source, n_max)?;
            let grid = z_grid(config, &source)?;
            let mask = mask_for(config, &basis);
            let n_min = config.n_min.unwrap_or(1);
            let trace = if name == "keps" {
                keps_experiment(&basis, &grid, n_min..=n_max, &mask)?
            } else {
                ratio_trace(
                    &basis,
                    &RatioMode::ConsecutiveZ,
                    &grid,
                    n_min..=n_max,
                    &mask,
                )?
            };
            let meta = serde_json::json!({
                "rows": trace.rows.len(),
                "mask_density": mask.density_at(n_max as u64),
            });
            Ok((trace.to_csv(), meta, Vec::new()))
        }
        "nis" => {
            let source = build_source(config.measure.as_ref().unwrap())?;
            let mu = match &source {
                Source::Measure(mu) => mu.clone(),
                Source::Verblunsky(_) => {
                    bail!("nis needs a quadrature-backed measure (Cauchy sums)")
                }
            };
            let n_max = config.n_max.unwrap();
            let basis = orthonormalize(&mu, n_max)?;
            let grid = z_grid(config, &source)?;
            let n_min = config.n_min.unwrap_or(1).max(1);
            let family = config.q_family.as_deref().unwrap_or("shifted");
            let report = match family {
                "self" => verify_nis(
                    &basis,
                    |n| basis.coefficients(n).unwrap().clone(),
                    &grid,
                    n_min..=n_max,
                )?,
                "shifted" => verify_nis(
                    &basis,
                    |n| basis.coefficients(n - 1).unwrap().shift_up(),
                    &grid,
                    n_min.max(1)..=n_max,
                )?,
                "uvarov" => {
                    let x = config.x_value()?;
                    let t = config.t.unwrap();
                    let perturbed = orthonormalize(&mu.add_atom(x, t)?, n_max)?;
                    verify_nis(
                        &basis,
                        |n| perturbed.coefficients(n).unwrap().clone(),
                        &grid,
                        n_min..=n_max,
                    )?
                }
                other => bail!("unknown q_family {other:?}"),
            };
            let meta = serde_json::json!({"rows": report.rows.len(), "q_family": family});
            Ok((report.to_csv(), meta, Vec::new()))
        }
        "uvarov" | "christoffel" | "attract" => {
            let source = build_source(config.measure.as_ref().unwrap())?;
            let mu = match &source {
                Source::Measure(mu) => mu.clone(),
                Source::Verblunsky(_) => {
                    bail!("transform experiments need a quadrature-backed measure")
                }
            };
            let n_max = config.n_max.unwrap();
            let n_min = config.n_min.unwrap_or(1).max(1);
            let grid = z_grid(config, &source)?;
            let x = config.x_value()?;
            let report = match name {
                "uvarov" => {
                    uvarov_ratio_experiment(&mu, x, config.t.unwrap(), &grid, n_min..=n_max)?
                }
                "christoffel" => christoffel_ratio_experiment(&mu, x, &grid, n_min..=n_max)?,
                _ => attract_experiment(&mu, x, config.t.unwrap(), &grid, n_min..=n_max)?,
            };
            let meta = serde_json::json!({
                "rows": report.rows.len(),
                "crosscheck_max": report.crosscheck_max,
            });
            let side = vec![("report.json", report.to_json().to_string())];
            Ok((report.to_csv(), meta, side))
        }
        "weak-moments" => {
            let source = build_source(config.measure.as_ref().unwrap())?;
            let n_max = config.n_max.unwrap();
            let k_max = config.k_max.unwrap_or(3);
            let conj_power = config.conj_power.unwrap_or(0);
            // moments shift the degree by k, so build past n_max
            let basis = build_basis(&source, n_max + (k_max + conj_power) as usize)?;
            let mask = mask_for(config, &basis);
            let n_min = config.n_min.unwrap_or(0);
            let mut csv = String::from("n,k,moment_re,moment_im\n");
            let mut rows = 0usize;
            for n in n_min..=n_max {
                if !mask.retains(n.max(1) as u64) {
                    continue;
                }
                for k in 0..=k_max {
                    let m = weak_moments(&basis, n, k, conj_power)?;
                    csv.push_str(&format!("{n},{k},{},{}\n", m.re, m.im));
                    rows += 1;
                }
            }
            Ok((csv, serde_json::json!({"rows": rows}), Vec::new()))
        }
        other => bail!("unknown experiment {other:?}"),
    }
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn measure_spec_round_trips() {
        let spec: MeasureSpec = serde_json::from_str(
            r#"{"builder": "disk_area", "radial_order": 8, "angular_order": 16}"#,
        )
        .unwrap();
        match build_source(&spec).unwrap() {
            Source::Measure(mu) => assert_eq!(mu.nodes().len(), 128),
            _ => panic!("expected measure"),
        }
    }

    #[test]
    fn verblunsky_spec_builds() {
        let spec: MeasureSpec =
            serde_json::from_str(r#"{"builder": "verblunsky", "kind": "half_at_powers_of_two"}"#)
                .unwrap();
        assert!(matches!(
            build_source(&spec).unwrap(),
            Source::Verblunsky(_)
        ));
    }

    #[test]
    fn excluded_set_families() {
        let spec = ExcludedSpec {
            powers_of_two: true,
            squares: false,
            cubes: true,
            explicit: vec![7],
        };
        let set = excluded_set(&spec, 100);
        assert!(set.contains(&1));
        assert!(set.contains(&64));
        assert!(set.contains(&27));
        assert!(set.contains(&7));
        assert!(!set.contains(&9));
    }

    #[test]
    fn validate_rejects_bad_specs() {
        let bad: MeasureSpec =
            serde_json::from_str(r#"{"builder": "chebyshev", "a": 2.0, "b": -2.0, "order": 8}"#)
                .unwrap();
        assert!(validate_spec(&bad).is_err());
        let bad: MeasureSpec = serde_json::from_str(
            r#"{"builder": "verblunsky", "kind": "constant", "alpha": [1.5, 0.0]}"#,
        )
        .unwrap();
        assert!(validate_spec(&bad).is_err());
    }
}
