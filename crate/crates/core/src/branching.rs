//! Stochastic solution of the fractional KPP equation.
//!
//! A particle started at x with time-to-go t either survives its fractional
//! clock, in which case it is displaced by G_{alpha,1}(t) and contributes
//! u0 at its final position, or branches after a delay tau, is displaced by
//! G_{alpha,alpha}(tau) and splits into two independent particles with time
//! to go t - tau. The product of all final u0 values is an unbiased sample of
//! u(t, x).

use crate::error::{Error, Result};
use crate::kernels::{FracParams, KernelRho};
use crate::samplers::{shared_clock, splitmix64, BranchClock, BranchOutcome, KernelSampler, RngStream};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::sync::Arc;

/// Default recursion depth guard.
pub const DEFAULT_MAX_DEPTH: usize = 10_000;
/// Stream tag separating forward-tree roots from backward roots.
const FORWARD_TAG: u64 = 0xF0F0_5EED_0000_0001;

/// Shape of the initial data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InitialShape {
    /// u0 = value
    Constant { value: f64 },
    /// u0 = amplitude exp(-((x - center) / width)^2)
    Gaussian { amplitude: f64, center: f64, width: f64 },
    /// linear interpolation, constant beyond the end points
    Tabulated { x: Vec<f64>, u: Vec<f64> },
}

/// Initial data with its declared bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InitialCondition {
    pub shape: InitialShape,
    /// permits sup|u0| > 1
    #[serde(default)]
    pub allow_unbounded: bool,
}

impl InitialCondition {
    pub fn new(shape: InitialShape) -> Result<Self> {
        let ic = Self {
            shape,
            allow_unbounded: false,
        };
        ic.validate_shape()?;
        Ok(ic)
    }

    pub fn constant(value: f64) -> Self {
        Self {
            shape: InitialShape::Constant { value },
            allow_unbounded: false,
        }
    }

    pub fn gaussian(amplitude: f64, center: f64, width: f64) -> Self {
        Self {
            shape: InitialShape::Gaussian {
                amplitude,
                center,
                width,
            },
            allow_unbounded: false,
        }
    }

    pub fn tabulated(x: Vec<f64>, u: Vec<f64>) -> Result<Self> {
        Self::new(InitialShape::Tabulated { x, u })
    }

    pub fn with_override(mut self, allow: bool) -> Self {
        self.allow_unbounded = allow;
        self
    }

    fn validate_shape(&self) -> Result<()> {
        match &self.shape {
            InitialShape::Constant { value } if !value.is_finite() => {
                Err(Error::Argument(format!("constant u0 = {value} is not finite")))
            }
            InitialShape::Gaussian { amplitude, center, width }
                if !(amplitude.is_finite() && center.is_finite() && *width > 0.0) =>
            {
                Err(Error::Argument("gaussian u0 needs finite amplitude and center and width > 0".into()))
            }
            InitialShape::Tabulated { x, u } => {
                if x.is_empty() || x.len() != u.len() {
                    return Err(Error::Argument("tabulated u0 needs equal, nonempty x and u".into()));
                }
                if !x.windows(2).all(|w| w[0] < w[1]) || !x.iter().chain(u).all(|v| v.is_finite()) {
                    return Err(Error::Argument("tabulated u0 needs finite, strictly increasing x".into()));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Checks the shape and the unit bound (unless overridden).
    pub fn validate(&self) -> Result<()> {
        self.validate_shape()?;
        let sup = self.sup();
        if sup > 1.0 && !self.allow_unbounded {
            return Err(Error::BoundViolation { sup });
        }
        Ok(())
    }

    pub fn eval(&self, x: f64) -> f64 {
        match &self.shape {
            InitialShape::Constant { value } => *value,
            InitialShape::Gaussian {
                amplitude,
                center,
                width,
            } => {
                let z = (x - center) / width;
                amplitude * (-z * z).exp()
            }
            InitialShape::Tabulated { x: xs, u } => {
                let n = xs.len();
                if x <= xs[0] {
                    return u[0];
                }
                if x >= xs[n - 1] {
                    return u[n - 1];
                }
                let j = xs.partition_point(|&v| v <= x) - 1;
                let w = (x - xs[j]) / (xs[j + 1] - xs[j]);
                u[j] + w * (u[j + 1] - u[j])
            }
        }
    }

    /// sup |u0|.
    pub fn sup(&self) -> f64 {
        match &self.shape {
            InitialShape::Constant { value } => value.abs(),
            InitialShape::Gaussian { amplitude, .. } => amplitude.abs(),
            InitialShape::Tabulated { u, .. } => u.iter().fold(0.0, |m, v| m.max(v.abs())),
        }
    }
}

/// A live particle of the tree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleTask {
    pub time_to_go: f64,
    pub position: f64,
    pub stream: RngStream,
    pub depth: usize,
}

/// Outcome of one tree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathSample {
    pub value: f64,
    pub leaves: usize,
    pub depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub mean_leaf_count: f64,
    pub leaf_count_stderr: f64,
    pub max_depth: usize,
    pub min_product: f64,
    pub max_product: f64,
}

/// Monte Carlo estimate of u(t, x).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub mean: f64,
    pub stderr: f64,
    pub n_paths: usize,
    pub master_seed: u64,
    pub diagnostics: Diagnostics,
}

/// Execution settings that never change results.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McOptions {
    /// worker threads; 0 uses the global pool
    pub workers: usize,
    pub max_depth: usize,
}

impl Default for McOptions {
    fn default() -> Self {
        Self {
            workers: 0,
            max_depth: DEFAULT_MAX_DEPTH,
        }
    }
}

/// Tree simulator for one parameter set.
#[derive(Debug, Clone)]
pub struct BranchingSolver {
    params: FracParams,
    clock: Arc<BranchClock>,
    kernels: KernelSampler,
    max_depth: usize,
}

impl BranchingSolver {
    pub fn new(params: FracParams) -> Result<Self> {
        params.validate()?;
        Ok(Self {
            params,
            clock: shared_clock(params.alpha)?,
            kernels: KernelSampler::new(params)?,
            max_depth: DEFAULT_MAX_DEPTH,
        })
    }

    pub fn with_max_depth(mut self, max_depth: usize) -> Self {
        self.max_depth = max_depth;
        self
    }

    pub fn params(&self) -> FracParams {
        self.params
    }

    /// Advances one particle: either a leaf value or two children.
    fn step(&self, u0: &InitialCondition, task: ParticleTask) -> Result<Step> {
        if task.depth > self.max_depth {
            return Err(Error::RunawayTree {
                max_depth: self.max_depth,
            });
        }
        if task.time_to_go <= 0.0 {
            return Ok(Step::Leaf(u0.eval(task.position)));
        }
        let mut rng = task.stream.rng();
        match self.clock.sample(task.time_to_go, &mut rng)? {
            BranchOutcome::Survive => {
                let xi = self.kernels.sample(KernelRho::One, task.time_to_go, &mut rng);
                Ok(Step::Leaf(u0.eval(task.position + xi)))
            }
            BranchOutcome::BranchAt(tau) => {
                let xi = self.kernels.sample(KernelRho::Alpha, tau, &mut rng);
                let child = |which| ParticleTask {
                    time_to_go: task.time_to_go - tau,
                    position: task.position + xi,
                    stream: task.stream.child(which),
                    depth: task.depth + 1,
                };
                Ok(Step::Split(child(0), child(1)))
            }
        }
    }

    /// One sample of u(t, x) by depth-first evaluation of the tree.
    pub fn path_value(&self, u0: &InitialCondition, t: f64, x: f64, stream: RngStream) -> Result<PathSample> {
        check_time(t)?;
        let mut stack = vec![ParticleTask {
            time_to_go: t,
            position: x,
            stream,
            depth: 0,
        }];
        let mut out = PathSample {
            value: 1.0,
            leaves: 0,
            depth: 0,
        };
        while let Some(task) = stack.pop() {
            out.depth = out.depth.max(task.depth);
            match self.step(u0, task)? {
                Step::Leaf(v) => {
                    out.value *= v;
                    out.leaves += 1;
                }
                Step::Split(a, b) => {
                    stack.push(b);
                    stack.push(a);
                }
            }
        }
        Ok(out)
    }

    /// The same tree grown generation by generation from time zero.
    pub fn forward_path(&self, u0: &InitialCondition, t: f64, x: f64, stream: RngStream) -> Result<PathSample> {
        check_time(t)?;
        let mut queue = VecDeque::new();
        // particles carry elapsed time; time to go is derived from it
        queue.push_back((0.0f64, x, stream, 0usize));
        let mut out = PathSample {
            value: 1.0,
            leaves: 0,
            depth: 0,
        };
        while let Some((elapsed, position, stream, depth)) = queue.pop_front() {
            out.depth = out.depth.max(depth);
            let task = ParticleTask {
                time_to_go: t - elapsed,
                position,
                stream,
                depth,
            };
            match self.step(u0, task)? {
                Step::Leaf(v) => {
                    out.value *= v;
                    out.leaves += 1;
                }
                Step::Split(a, b) => {
                    let born = t - a.time_to_go;
                    queue.push_back((born, a.position, a.stream, a.depth));
                    queue.push_back((born, b.position, b.stream, b.depth));
                }
            }
        }
        Ok(out)
    }

    /// Mean and standard error over `n_paths` backward trees.
    pub fn estimate(
        &self,
        u0: &InitialCondition,
        t: f64,
        x: f64,
        n_paths: usize,
        master_seed: u64,
        workers: usize,
    ) -> Result<Estimate> {
        self.run(u0, t, x, n_paths, master_seed, workers, |i| {
            self.path_value(u0, t, x, RngStream::new(master_seed, i))
        })
    }

    /// Mean and standard error over `n_paths` forward trees; the root streams
    /// are disjoint from those of [`Self::estimate`].
    pub fn forward_estimate(
        &self,
        u0: &InitialCondition,
        t: f64,
        x: f64,
        n_paths: usize,
        master_seed: u64,
        workers: usize,
    ) -> Result<Estimate> {
        self.run(u0, t, x, n_paths, master_seed, workers, |i| {
            self.forward_path(u0, t, x, RngStream::new(master_seed, splitmix64(i ^ FORWARD_TAG)))
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn run<F>(
        &self,
        u0: &InitialCondition,
        t: f64,
        x: f64,
        n_paths: usize,
        master_seed: u64,
        workers: usize,
        path: F,
    ) -> Result<Estimate>
    where
        F: Fn(u64) -> Result<PathSample> + Sync,
    {
        check_time(t)?;
        if !x.is_finite() {
            return Err(Error::Argument(format!("x = {x} is not finite")));
        }
        if n_paths == 0 {
            return Err(Error::Argument("n_paths must be at least 1".into()));
        }
        u0.validate()?;
        let work = || {
            (0..n_paths as u64)
                .into_par_iter()
                .map(&path)
                .collect::<Result<Vec<PathSample>>>()
        };
        let samples = if workers == 0 {
            work()?
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| Error::Argument(format!("thread pool: {e}")))?
                .install(work)?
        };
        Ok(reduce(&samples, master_seed))
    }
}

enum Step {
    Leaf(f64),
    Split(ParticleTask, ParticleTask),
}

fn check_time(t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("t = {t} must be finite and >= 0")))
    }
}

/// Sequential reduction in path order.
fn reduce(samples: &[PathSample], master_seed: u64) -> Estimate {
    let n = samples.len() as f64;
    let (mean, stderr) = mean_and_stderr(samples.iter().map(|s| s.value), n);
    let (mean_leaves, leaves_err) = mean_and_stderr(samples.iter().map(|s| s.leaves as f64), n);
    let diagnostics = Diagnostics {
        mean_leaf_count: mean_leaves,
        leaf_count_stderr: leaves_err,
        max_depth: samples.iter().map(|s| s.depth).max().unwrap_or(0),
        min_product: samples.iter().map(|s| s.value).fold(f64::INFINITY, f64::min),
        max_product: samples.iter().map(|s| s.value).fold(f64::NEG_INFINITY, f64::max),
    };
    Estimate {
        mean,
        stderr,
        n_paths: samples.len(),
        master_seed,
        diagnostics,
    }
}

fn mean_and_stderr<I: Iterator<Item = f64> + Clone>(values: I, n: f64) -> (f64, f64) {
    let mean = values.clone().sum::<f64>() / n;
    if n < 2.0 {
        return (mean, 0.0);
    }
    let var = values.map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// One unbiased sample of u(t, x) on substream `stream`.
pub fn path_value(params: FracParams, u0: &InitialCondition, t: f64, x: f64, stream: RngStream) -> Result<f64> {
    Ok(BranchingSolver::new(params)?.path_value(u0, t, x, stream)?.value)
}

/// Monte Carlo estimate of u(t, x) over `n_paths` backward trees.
pub fn estimate_point(
    params: FracParams,
    u0: &InitialCondition,
    t: f64,
    x: f64,
    n_paths: usize,
    master_seed: u64,
) -> Result<Estimate> {
    estimate_point_with(params, u0, t, x, n_paths, master_seed, McOptions::default())
}

pub fn estimate_point_with(
    params: FracParams,
    u0: &InitialCondition,
    t: f64,
    x: f64,
    n_paths: usize,
    master_seed: u64,
    options: McOptions,
) -> Result<Estimate> {
    BranchingSolver::new(params)?
        .with_max_depth(options.max_depth)
        .estimate(u0, t, x, n_paths, master_seed, options.workers)
}

/// Monte Carlo estimate of u(t, x) over `n_paths` forward trees.
pub fn simulate_forward_tree(
    params: FracParams,
    u0: &InitialCondition,
    t: f64,
    x: f64,
    n_paths: usize,
    master_seed: u64,
) -> Result<Estimate> {
    BranchingSolver::new(params)?.forward_estimate(u0, t, x, n_paths, master_seed, 0)
}
