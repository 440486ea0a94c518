//! Subcommand implementations.

use crate::config::{RunConfig, SampleKind};
use crate::output::{csv_file, envelope, io_err, write_json};
use crate::Failure;
use fkpp_core::branching::{BranchingSolver, Diagnostics};
use fkpp_core::kernels::{
    build_charfn_table, default_kernel_table, kernel_property_report, riesz_feller_symbol, FracParams,
};
use fkpp_core::ml::{ml_survival, MittagLeffler};
use fkpp_core::picard::{reference_points, residual_check, GridMetadata, ReferencePoint};
use fkpp_core::samplers::ks::{ks_one_sample, KsResult};
use fkpp_core::samplers::{
    ks_against_table, sample_stable_feller, shared_clock, BranchOutcome, KernelSampler, RngStream,
};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::io::Write;

/// Halfwidth of the reference table for stable variates, in units of the
/// stable scale.
const STABLE_TABLE_SCALES: f64 = 64.0;
const STABLE_TABLE_POINTS: usize = 1 << 14;

#[derive(Serialize)]
struct MlValue {
    z: [f64; 2],
    value: [f64; 2],
}

pub fn ml_eval(cfg: &RunConfig) -> Result<(), Failure> {
    let ml = MittagLeffler::new(cfg.ml.alpha, cfg.ml.rho)?;
    let values = cfg
        .ml
        .z
        .iter()
        .map(|&[re, im]| {
            let v = ml.eval(Complex64::new(re, im))?;
            Ok(MlValue {
                z: [re, im],
                value: [v.re, v.im],
            })
        })
        .collect::<Result<Vec<_>, fkpp_core::Error>>()?;
    write_json(&cfg.output.path, &envelope("ml-eval", cfg, 0, values))
}

pub fn kernel_check(cfg: &RunConfig) -> Result<(), Failure> {
    let report = kernel_property_report(&cfg.kernel_id()?)?;
    write_json(&cfg.output.path, &envelope("kernel-check", cfg, 0, &report))?;
    if report.passed {
        Ok(())
    } else {
        Err(Failure::gate("kernel conditions failed".into()))
    }
}

#[derive(Serialize)]
struct SampleSummary {
    kind: SampleKind,
    n_draws: usize,
    /// draws compared against the reference law (clock: branching draws)
    n_tested: usize,
    ks: KsResult,
    significance: f64,
    passed: bool,
}

pub fn sample_diag(cfg: &RunConfig) -> Result<(), Failure> {
    let s = &cfg.sample;
    let params = cfg.frac_params()?;
    let stream = RngStream::new(s.seed, 0);
    let mut rng = stream.rng();
    let (draws, ks) = match s.kind {
        SampleKind::Clock => {
            let clock = shared_clock(params.alpha)?;
            let mut draws = Vec::with_capacity(s.n);
            let mut times = Vec::new();
            for _ in 0..s.n {
                match clock.sample(s.horizon, &mut rng)? {
                    BranchOutcome::Survive => draws.push(f64::INFINITY),
                    BranchOutcome::BranchAt(tau) => {
                        draws.push(tau);
                        times.push(tau);
                    }
                }
            }
            let surv = ml_survival(params.alpha, s.horizon)?;
            let err = std::cell::Cell::new(None);
            let ks = ks_one_sample(&times, |t| match ml_survival(params.alpha, t) {
                Ok(v) => (1.0 - v) / (1.0 - surv),
                Err(e) => {
                    err.set(Some(e));
                    0.0
                }
            });
            if let Some(e) = err.into_inner() {
                return Err(e.into());
            }
            (draws, ks)
        }
        SampleKind::Stable => {
            let draws: Vec<f64> = (0..s.n)
                .map(|_| sample_stable_feller(params.beta, params.theta, s.lambda, &mut rng))
                .collect();
            let scale = s.lambda.powf(1.0 / params.beta);
            let table = build_charfn_table(
                |k| Ok((-riesz_feller_symbol(params.beta, params.theta, k) * s.lambda).exp()),
                STABLE_TABLE_SCALES * scale,
                STABLE_TABLE_POINTS,
            )?;
            let ks = ks_against_table(&draws, &table, stream.child(1));
            (draws, ks)
        }
        SampleKind::Kernel => {
            let id = cfg.kernel_id()?;
            let table = default_kernel_table(&id)?;
            let sampler = KernelSampler::new(params)?;
            let draws: Vec<f64> = (0..s.n).map(|_| sampler.sample(id.rho, id.t, &mut rng)).collect();
            let ks = ks_against_table(&draws, &table, stream.child(1));
            (draws, ks)
        }
    };
    if !cfg.output.csv.is_empty() {
        let mut w = csv_file(&cfg.output.csv, "sample-diag", cfg)?;
        writeln!(w, "# seed = {}", s.seed).map_err(io_err)?;
        writeln!(w, "sample").map_err(io_err)?;
        for d in &draws {
            writeln!(w, "{d}").map_err(io_err)?;
        }
        w.flush().map_err(io_err)?;
    }
    let passed = ks.p_value >= s.significance;
    let summary = SampleSummary {
        kind: s.kind,
        n_draws: draws.len(),
        n_tested: ks.n_eff as usize,
        ks,
        significance: s.significance,
        passed,
    };
    write_json(&cfg.output.path, &envelope("sample-diag", cfg, s.seed, &summary))?;
    if passed {
        Ok(())
    } else {
        Err(Failure::gate(format!("KS p-value {:e} below {}", ks.p_value, s.significance)))
    }
}

/// One Monte Carlo estimate.
#[derive(Debug, Serialize, Deserialize)]
pub struct McRecord {
    pub params: FracParams,
    pub t: f64,
    pub x: f64,
    pub n_paths: usize,
    pub seed: u64,
    pub mean: f64,
    pub stderr: f64,
    pub diagnostics: Diagnostics,
}

pub fn solve_mc(cfg: &RunConfig) -> Result<(), Failure> {
    let params = cfg.frac_params()?;
    let u0 = cfg.initial_condition()?;
    let solver = BranchingSolver::new(params)?.with_max_depth(cfg.mc.max_depth);
    let mut records = Vec::new();
    for (t, x) in cfg.points() {
        let e = solver.estimate(&u0, t, x, cfg.mc.n_paths, cfg.mc.seed, cfg.mc.workers)?;
        records.push(McRecord {
            params,
            t,
            x,
            n_paths: e.n_paths,
            seed: e.master_seed,
            mean: e.mean,
            stderr: e.stderr,
            diagnostics: e.diagnostics,
        });
    }
    write_json(&cfg.output.path, &envelope("solve-mc", cfg, cfg.mc.seed, records))
}

#[derive(Serialize)]
struct RefResults<'a> {
    points: Vec<ReferencePoint>,
    grid_tolerance: f64,
    grid: GridMetadata<'a>,
    coarse_grid: GridMetadata<'a>,
}

pub fn solve_ref(cfg: &RunConfig) -> Result<(), Failure> {
    let params = cfg.frac_params()?;
    let u0 = cfg.initial_condition()?;
    let grid = cfg.grid_config()?;
    let run = reference_points(params, &u0, &grid, &cfg.points())?;
    let residual = if cfg.grid.residual {
        Some(residual_check(&run.fine, params, &u0)?)
    } else {
        None
    };
    if !cfg.output.csv.is_empty() {
        let mut w = csv_file(&cfg.output.csv, "solve-ref", cfg)?;
        run.fine.write_csv(&mut w, &[]).map_err(io_err)?;
        w.flush().map_err(io_err)?;
    }
    let results = RefResults {
        points: run.points.clone(),
        grid_tolerance: run.grid_tolerance,
        grid: run.fine.metadata(residual),
        coarse_grid: run.coarse.metadata(None),
    };
    write_json(&cfg.output.path, &envelope("solve-ref", cfg, 0, results))
}

#[derive(Deserialize)]
struct McFile {
    config: RunConfig,
    results: Vec<McRecord>,
}

#[derive(Deserialize)]
struct RefFileResults {
    points: Vec<ReferencePoint>,
    grid_tolerance: f64,
}

#[derive(Deserialize)]
struct RefFile {
    config: RunConfig,
    results: RefFileResults,
}

#[derive(Serialize)]
struct ComparePoint {
    t: f64,
    x: f64,
    mc: f64,
    stderr: f64,
    reference: f64,
    difference: f64,
    budget: f64,
    passed: bool,
}

#[derive(Serialize)]
struct CompareReport {
    grid_tolerance: f64,
    points: Vec<ComparePoint>,
    passed: bool,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &str) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::validation(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Failure::validation(format!("{path}: {e}")))
}

pub fn compare(cfg: &RunConfig, mc_path: &str, ref_path: &str) -> Result<(), Failure> {
    let mc: McFile = read_json(mc_path)?;
    let reference: RefFile = read_json(ref_path)?;
    if mc.config.params != reference.config.params || mc.config.initial != reference.config.initial {
        return Err(Failure::validation(
            "Monte Carlo and reference runs use different parameters or initial data".into(),
        ));
    }
    let tol = reference.results.grid_tolerance;
    let mut points = Vec::new();
    for r in &mc.results {
        let p = reference
            .results
            .points
            .iter()
            .find(|p| (p.t - r.t).abs() <= 1e-12 && (p.x - r.x).abs() <= 1e-12)
            .ok_or_else(|| Failure::validation(format!("no reference value at t = {}, x = {}", r.t, r.x)))?;
        let difference = (r.mean - p.u).abs();
        let budget = 3.0 * r.stderr + tol;
        points.push(ComparePoint {
            t: r.t,
            x: r.x,
            mc: r.mean,
            stderr: r.stderr,
            reference: p.u,
            difference,
            budget,
            passed: difference <= budget,
        });
    }
    let passed = points.iter().all(|p| p.passed);
    let report = CompareReport {
        grid_tolerance: tol,
        points,
        passed,
    };
    write_json(&cfg.output.path, &envelope("compare", cfg, mc.config.mc.seed, &report))?;
    if passed {
        Ok(())
    } else {
        Err(Failure::gate("Monte Carlo and reference disagree beyond 3 stderr + grid tolerance".into()))
    }
}

pub fn print_config(cfg: &RunConfig) -> Result<(), Failure> {
    let text = toml::to_string(cfg).map_err(|e| Failure::io(e.to_string()))?;
    if cfg.output.path.is_empty() {
        print!("{text}");
        Ok(())
    } else {
        std::fs::write(&cfg.output.path, text).map_err(|e| Failure::io(e.to_string()))
    }
}
