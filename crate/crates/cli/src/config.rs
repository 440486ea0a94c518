//! Run configuration: TOML sections, overridden field by field from flags.

use crate::Failure;
use clap::Args;
use fkpp_core::branching::{InitialCondition, DEFAULT_MAX_DEPTH};
use fkpp_core::kernels::{FracParams, KernelId, KernelRho};
use fkpp_core::ml::MittagLeffler;
use fkpp_core::picard::{GridConfig, DEFAULT_MAX_ITERS, DEFAULT_TOLERANCE};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub params: ParamsSection,
    pub kernel: KernelSection,
    pub ml: MlSection,
    pub initial: InitialSection,
    pub eval: EvalSection,
    pub mc: McSection,
    pub grid: GridSection,
    pub sample: SampleSection,
    pub output: OutputSection,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ParamsSection {
    pub alpha: f64,
    pub beta: f64,
    pub theta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct KernelSection {
    pub rho: KernelRho,
    pub t: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MlSection {
    pub alpha: f64,
    pub rho: f64,
    /// arguments as [re, im]
    pub z: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum InitialKind {
    Constant,
    Gaussian,
    Tabulated,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct InitialSection {
    pub kind: InitialKind,
    pub value: f64,
    pub amplitude: f64,
    pub center: f64,
    pub width: f64,
    /// CSV of x,u rows for the tabulated kind
    pub file: String,
    pub allow_unbounded: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EvalSection {
    pub t: Vec<f64>,
    pub x: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct McSection {
    pub n_paths: usize,
    pub seed: u64,
    /// 0 uses all cores; never changes results
    pub workers: usize,
    pub max_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridSection {
    /// 0 uses the largest evaluation time
    pub horizon: f64,
    /// 0 chooses the halfwidth from the truncation leak
    pub halfwidth: f64,
    pub min_halfwidth: f64,
    pub max_halfwidth: f64,
    pub n_t: usize,
    /// 0 chooses the smallest power of two with spacing <= dx
    pub n_x: usize,
    pub dx: f64,
    pub tol: f64,
    pub max_iters: usize,
    pub residual: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SampleKind {
    Clock,
    Stable,
    Kernel,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SampleSection {
    pub kind: SampleKind,
    pub n: usize,
    pub seed: u64,
    /// clock horizon
    pub horizon: f64,
    /// stable intensity
    pub lambda: f64,
    pub significance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct OutputSection {
    /// JSON report; empty writes to stdout
    pub path: String,
    /// CSV data (samples or grid); empty skips it
    pub csv: String,
}

impl Default for ParamsSection {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            beta: 2.0,
            theta: 0.0,
        }
    }
}

impl Default for KernelSection {
    fn default() -> Self {
        Self {
            rho: KernelRho::One,
            t: 1.0,
        }
    }
}

impl Default for MlSection {
    fn default() -> Self {
        Self {
            alpha: 0.5,
            rho: 1.0,
            z: vec![[-1.0, 0.0]],
        }
    }
}

impl Default for InitialSection {
    fn default() -> Self {
        Self {
            kind: InitialKind::Gaussian,
            value: 0.5,
            amplitude: 1.0,
            center: 0.0,
            width: 1.0,
            file: String::new(),
            allow_unbounded: false,
        }
    }
}

impl Default for EvalSection {
    fn default() -> Self {
        Self {
            t: vec![0.5],
            x: vec![-1.0, 0.0, 1.0],
        }
    }
}

impl Default for McSection {
    fn default() -> Self {
        Self {
            n_paths: 100_000,
            seed: 1,
            workers: 0,
            max_depth: DEFAULT_MAX_DEPTH,
        }
    }
}

impl Default for GridSection {
    fn default() -> Self {
        Self {
            horizon: 0.0,
            halfwidth: 0.0,
            min_halfwidth: 16.0,
            max_halfwidth: 8192.0,
            n_t: 32,
            n_x: 0,
            dx: 0.25,
            tol: DEFAULT_TOLERANCE,
            max_iters: DEFAULT_MAX_ITERS,
            residual: false,
        }
    }
}

impl Default for SampleSection {
    fn default() -> Self {
        Self {
            kind: SampleKind::Kernel,
            n: 100_000,
            seed: 1,
            horizon: 1.0,
            lambda: 1.0,
            significance: 0.01,
        }
    }
}

/// Flags mirroring the configuration fields.
#[derive(Debug, Clone, Default, Args)]
pub struct Overrides {
    /// TOML configuration file
    #[arg(long, global = true)]
    pub config: Option<String>,
    #[arg(long, global = true)]
    pub alpha: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub theta: Option<f64>,
    /// kernel rho: one or alpha
    #[arg(long, global = true)]
    pub rho: Option<String>,
    /// kernel duration
    #[arg(long, global = true)]
    pub kernel_t: Option<f64>,
    /// Mittag-Leffler alpha for ml-eval
    #[arg(long, global = true)]
    pub ml_alpha: Option<f64>,
    /// Mittag-Leffler rho for ml-eval
    #[arg(long, global = true)]
    pub ml_rho: Option<f64>,
    /// argument re,im (repeatable)
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub z: Vec<String>,
    #[arg(long, global = true, value_enum)]
    pub u0: Option<InitialKind>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub u0_value: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub u0_amplitude: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub u0_center: Option<f64>,
    #[arg(long, global = true)]
    pub u0_width: Option<f64>,
    #[arg(long, global = true)]
    pub u0_file: Option<String>,
    #[arg(long, global = true)]
    pub allow_unbounded: bool,
    /// evaluation time (repeatable)
    #[arg(long, global = true)]
    pub t: Vec<f64>,
    /// evaluation point (repeatable)
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub x: Vec<f64>,
    #[arg(long, global = true)]
    pub n_paths: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[arg(long, global = true)]
    pub max_depth: Option<usize>,
    #[arg(long, global = true)]
    pub horizon: Option<f64>,
    #[arg(long, global = true)]
    pub halfwidth: Option<f64>,
    #[arg(long, global = true)]
    pub n_t: Option<usize>,
    #[arg(long, global = true)]
    pub n_x: Option<usize>,
    #[arg(long, global = true)]
    pub dx: Option<f64>,
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true)]
    pub max_iters: Option<usize>,
    /// also run the residual check in solve-ref
    #[arg(long, global = true)]
    pub residual: bool,
    #[arg(long, global = true, value_enum)]
    pub sample_kind: Option<SampleKind>,
    #[arg(long, global = true)]
    pub n_samples: Option<usize>,
    #[arg(long, global = true)]
    pub sample_seed: Option<u64>,
    #[arg(long, global = true)]
    pub sample_horizon: Option<f64>,
    /// JSON output path
    #[arg(long, short, global = true)]
    pub output: Option<String>,
    /// CSV output path
    #[arg(long, global = true)]
    pub csv: Option<String>,
}

fn set<T: Clone>(dst: &mut T, src: &Option<T>) {
    if let Some(v) = src {
        *dst = v.clone();
    }
}

impl RunConfig {
    /// Defaults, then the config file, then the flags.
    pub fn resolve(o: &Overrides) -> Result<Self, Failure> {
        let mut c = match &o.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::validation(format!("cannot read config {path}: {e}")))?;
                toml::from_str(&text).map_err(|e| Failure::validation(format!("config {path}: {e}")))?
            }
            None => RunConfig::default(),
        };
        set(&mut c.params.alpha, &o.alpha);
        set(&mut c.params.beta, &o.beta);
        set(&mut c.params.theta, &o.theta);
        if let Some(r) = &o.rho {
            c.kernel.rho = match r.as_str() {
                "one" | "1" => KernelRho::One,
                "alpha" => KernelRho::Alpha,
                other => return Err(Failure::validation(format!("rho must be one or alpha, got {other}"))),
            };
        }
        set(&mut c.kernel.t, &o.kernel_t);
        set(&mut c.ml.alpha, &o.ml_alpha);
        set(&mut c.ml.rho, &o.ml_rho);
        if !o.z.is_empty() {
            c.ml.z = o.z.iter().map(|s| parse_complex(s)).collect::<Result<_, _>>()?;
        }
        set(&mut c.initial.kind, &o.u0);
        set(&mut c.initial.value, &o.u0_value);
        set(&mut c.initial.amplitude, &o.u0_amplitude);
        set(&mut c.initial.center, &o.u0_center);
        set(&mut c.initial.width, &o.u0_width);
        set(&mut c.initial.file, &o.u0_file);
        c.initial.allow_unbounded |= o.allow_unbounded;
        if !o.t.is_empty() {
            c.eval.t = o.t.clone();
        }
        if !o.x.is_empty() {
            c.eval.x = o.x.clone();
        }
        set(&mut c.mc.n_paths, &o.n_paths);
        set(&mut c.mc.seed, &o.seed);
        set(&mut c.mc.workers, &o.workers);
        set(&mut c.mc.max_depth, &o.max_depth);
        set(&mut c.grid.horizon, &o.horizon);
        set(&mut c.grid.halfwidth, &o.halfwidth);
        set(&mut c.grid.n_t, &o.n_t);
        set(&mut c.grid.n_x, &o.n_x);
        set(&mut c.grid.dx, &o.dx);
        set(&mut c.grid.tol, &o.tol);
        set(&mut c.grid.max_iters, &o.max_iters);
        c.grid.residual |= o.residual;
        set(&mut c.sample.kind, &o.sample_kind);
        set(&mut c.sample.n, &o.n_samples);
        set(&mut c.sample.seed, &o.sample_seed);
        set(&mut c.sample.horizon, &o.sample_horizon);
        set(&mut c.output.path, &o.output);
        set(&mut c.output.csv, &o.csv);
        c.validate()?;
        Ok(c)
    }

    /// Checks every section against the library preconditions.
    pub fn validate(&self) -> Result<(), Failure> {
        self.frac_params()?;
        self.kernel_id()?;
        MittagLeffler::new(self.ml.alpha, self.ml.rho)?;
        if self.ml.z.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Failure::validation("ml.z entries must be finite".into()));
        }
        self.initial_condition()?.validate()?;
        if self.eval.t.is_empty() || self.eval.x.is_empty() {
            return Err(Failure::validation("eval.t and eval.x must be nonempty".into()));
        }
        if self.eval.t.iter().any(|t| !(*t >= 0.0 && t.is_finite())) {
            return Err(Failure::validation("eval.t entries must be finite and >= 0".into()));
        }
        if self.eval.x.iter().any(|x| !x.is_finite()) {
            return Err(Failure::validation("eval.x entries must be finite".into()));
        }
        if self.mc.n_paths == 0 || self.mc.max_depth == 0 {
            return Err(Failure::validation("mc.n_paths and mc.max_depth must be positive".into()));
        }
        let g = &self.grid;
        if !(g.horizon >= 0.0 && g.halfwidth >= 0.0 && g.dx > 0.0 && g.min_halfwidth > 0.0) {
            return Err(Failure::validation(
                "grid.horizon, grid.halfwidth must be >= 0 and grid.dx, grid.min_halfwidth > 0".into(),
            ));
        }
        if g.max_halfwidth < g.min_halfwidth {
            return Err(Failure::validation("grid.max_halfwidth must be >= grid.min_halfwidth".into()));
        }
        if g.n_x != 0 && !(g.n_x.is_power_of_two() && g.n_x >= 4) {
            return Err(Failure::validation(format!("grid.n_x = {} must be a power of two >= 4", g.n_x)));
        }
        if g.n_t == 0 || !(g.tol > 0.0) || g.max_iters == 0 {
            return Err(Failure::validation("grid.n_t, grid.tol and grid.max_iters must be positive".into()));
        }
        let s = &self.sample;
        if s.n == 0 || !(s.horizon > 0.0) || !(s.lambda > 0.0) || !(s.significance > 0.0 && s.significance < 1.0) {
            return Err(Failure::validation(
                "sample.n, sample.horizon, sample.lambda must be positive and sample.significance in (0, 1)".into(),
            ));
        }
        Ok(())
    }

    pub fn frac_params(&self) -> Result<FracParams, Failure> {
        Ok(FracParams::new(self.params.alpha, self.params.beta, self.params.theta)?)
    }

    pub fn kernel_id(&self) -> Result<KernelId, Failure> {
        Ok(KernelId::new(self.frac_params()?, self.kernel.rho, self.kernel.t)?)
    }

    pub fn initial_condition(&self) -> Result<InitialCondition, Failure> {
        let i = &self.initial;
        let ic = match i.kind {
            InitialKind::Constant => InitialCondition::constant(i.value),
            InitialKind::Gaussian => InitialCondition::gaussian(i.amplitude, i.center, i.width),
            InitialKind::Tabulated => {
                let (x, u) = read_table(Path::new(&i.file))?;
                InitialCondition::tabulated(x, u)?
            }
        };
        Ok(ic.with_override(i.allow_unbounded))
    }

    pub fn points(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        for &t in &self.eval.t {
            for &x in &self.eval.x {
                out.push((t, x));
            }
        }
        out
    }

    /// Grid settings with automatic fields filled in.
    pub fn grid_config(&self) -> Result<GridConfig, Failure> {
        let g = &self.grid;
        let horizon = if g.horizon > 0.0 {
            g.horizon
        } else {
            self.eval.t.iter().cloned().fold(0.0, f64::max)
        };
        if !(horizon > 0.0) {
            return Err(Failure::validation("grid horizon must be positive".into()));
        }
        let halfwidth = if g.halfwidth > 0.0 {
            g.halfwidth
        } else {
            let span = self.eval.x.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            let min = g.min_halfwidth.max(2.0 * span);
            fkpp_core::picard::reference_halfwidth(self.frac_params()?, horizon, min, g.max_halfwidth)?
        };
        let n_x = if g.n_x > 0 {
            g.n_x
        } else {
            ((2.0 * halfwidth / g.dx).ceil() as usize).next_power_of_two().max(4)
        };
        Ok(GridConfig {
            horizon,
            halfwidth,
            n_t: g.n_t,
            n_x,
            tol: g.tol,
            max_iters: g.max_iters,
        })
    }
}

fn parse_complex(s: &str) -> Result<[f64; 2], Failure> {
    let bad = || Failure::validation(format!("cannot parse complex argument {s:?} (expected re,im)"));
    let mut parts = s.split(',');
    let re = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let im = match parts.next() {
        Some(p) => p.trim().parse().map_err(|_| bad())?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok([re, im])
}

/// Reads x,u rows, skipping `#` lines and a header row.
pub fn read_table(path: &Path) -> Result<(Vec<f64>, Vec<f64>), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::validation(format!("cannot read {}: {e}", path.display())))?;
    let mut xs = Vec::new();
    let mut us = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut cols = line.split(',').map(str::trim);
        let (a, b) = (cols.next(), cols.next());
        match (a.and_then(|v| v.parse().ok()), b.and_then(|v| v.parse().ok())) {
            (Some(x), Some(u)) => {
                xs.push(x);
                us.push(u);
            }
            _ if xs.is_empty() => continue,
            _ => {
                return Err(Failure::validation(format!(
                    "{}:{}: expected x,u",
                    path.display(),
                    i + 1
                )))
            }
        }
    }
    Ok((xs, us))
}
