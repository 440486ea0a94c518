//! Deterministic grid solver of the mild (integral) form
//!
//!   u(t) = E_{a,1}(-t^a) G_{a,1}(t) * u0
//!        + int_0^t tau^(a-1) E_{a,a}(-tau^a) G_{a,a}(tau) * u^2(t - tau) d tau
//!
//! by Picard iteration. Convolutions are Fourier multipliers on a periodic
//! domain; in Fourier space the two weighted kernels become
//! E_{a,1}(-lambda t^a) and tau^(a-1) E_{a,a}(-lambda tau^a) with
//! lambda = 1 + psi(k) / 2, and the time integral uses product integration
//! against piecewise-linear interpolants of u^2.

use crate::branching::InitialCondition;
use crate::error::{Error, Result};
use crate::kernels::{kernel_tail_mass, FracParams, KernelId, KernelRho};
use crate::ml::ray::RayInterpolant;
use crate::ml::{ml_survival, MittagLeffler};
use crate::quad::GaussLegendre;
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::io::Write;
use std::sync::Arc;

pub const DEFAULT_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_MAX_ITERS: usize = 200;
/// Largest admissible truncation leak.
pub const LEAK_LIMIT: f64 = 1e-4;
/// Leak aimed for by `reference_halfwidth`.
pub const LEAK_TARGET: f64 = 1e-6;
/// Iterates whose sup change exceeds this are treated as diverging.
const BLOWUP: f64 = 1e6;
const LEAK_NODES: usize = 24;
const RESIDUAL_NODES: usize = 8;
const FIRST_PANEL_LEVELS: usize = 6;

/// Grid and iteration settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridConfig {
    pub horizon: f64,
    pub halfwidth: f64,
    /// number of time steps
    pub n_t: usize,
    /// number of spatial points, a power of two
    pub n_x: usize,
    pub tol: f64,
    pub max_iters: usize,
}

impl GridConfig {
    pub fn new(horizon: f64, halfwidth: f64, n_t: usize, n_x: usize) -> Self {
        Self {
            horizon,
            halfwidth,
            n_t,
            n_x,
            tol: DEFAULT_TOLERANCE,
            max_iters: DEFAULT_MAX_ITERS,
        }
    }

    /// Same domain with both step sizes halved.
    pub fn refined(&self) -> Self {
        Self {
            n_t: 2 * self.n_t,
            n_x: 2 * self.n_x,
            ..*self
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.horizon > 0.0 && self.horizon.is_finite()) {
            return Err(Error::Argument(format!("horizon = {} must be positive", self.horizon)));
        }
        if !(self.halfwidth > 0.0 && self.halfwidth.is_finite()) {
            return Err(Error::Argument(format!("halfwidth = {} must be positive", self.halfwidth)));
        }
        if self.n_t == 0 {
            return Err(Error::Argument("n_t must be at least 1".into()));
        }
        if !(self.n_x.is_power_of_two() && self.n_x >= 4) {
            return Err(Error::Argument(format!("n_x = {} must be a power of two >= 4", self.n_x)));
        }
        if !(self.tol > 0.0) {
            return Err(Error::Argument(format!("tol = {} must be positive", self.tol)));
        }
        Ok(())
    }
}

/// Converged grid values u(t_n, x_j).
#[derive(Debug, Clone, Serialize)]
pub struct GridSolution {
    pub params: FracParams,
    pub config: GridConfig,
    /// n_t + 1 uniform times from 0 to the horizon
    pub t_grid: Vec<f64>,
    /// n_x uniform points from -L to L - dx
    pub x_grid: Vec<f64>,
    /// row-major, one row of n_x values per time
    #[serde(skip)]
    pub values: Vec<f64>,
    pub iteration_count: usize,
    pub final_sup_change: f64,
    pub history: Vec<f64>,
    pub mass_leak: f64,
}

/// Metadata written next to the CSV export.
#[derive(Debug, Clone, Serialize)]
pub struct GridMetadata<'a> {
    pub params: FracParams,
    pub config: GridConfig,
    pub iteration_count: usize,
    pub final_sup_change: f64,
    pub history: &'a [f64],
    pub mass_leak: f64,
    pub residual: Option<ResidualReport>,
}

impl GridSolution {
    pub fn row(&self, n: usize) -> &[f64] {
        let nx = self.config.n_x;
        &self.values[n * nx..(n + 1) * nx]
    }

    pub fn dt(&self) -> f64 {
        self.config.horizon / self.config.n_t as f64
    }

    pub fn dx(&self) -> f64 {
        2.0 * self.config.halfwidth / self.config.n_x as f64
    }

    /// u(t, x): trigonometric interpolation in x, linear in t.
    pub fn value_at(&self, t: f64, x: f64) -> f64 {
        let s = (t / self.dt()).clamp(0.0, self.config.n_t as f64);
        let n = (s.floor() as usize).min(self.config.n_t - 1);
        let f = s - n as f64;
        let a = self.row_value(n, x);
        if f < 1e-12 {
            return a;
        }
        let b = self.row_value(n + 1, x);
        if f > 1.0 - 1e-12 {
            return b;
        }
        (1.0 - f) * a + f * b
    }

    fn row_value(&self, n: usize, x: f64) -> f64 {
        let row = self.row(n);
        let l = self.config.halfwidth;
        let dx = self.dx();
        let pos = (x + l) / dx;
        let nearest = pos.round();
        if (pos - nearest).abs() < 1e-9 {
            let nx = self.config.n_x as i64;
            return row[(nearest as i64).rem_euclid(nx) as usize];
        }
        let nx = self.config.n_x;
        let mut spec: Vec<Complex64> = row.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        FftPlanner::new().plan_fft_inverse(nx).process(&mut spec);
        let mut sum = spec[0].re;
        for (m, c) in spec.iter().enumerate().take(nx / 2 + 1).skip(1) {
            let k = PI * m as f64 / l;
            let e = Complex64::from_polar(1.0, -k * (x + l));
            let term = (c * e).re;
            sum += if m == nx / 2 { term } else { 2.0 * term };
        }
        sum / nx as f64
    }

    pub fn metadata(&self, residual: Option<ResidualReport>) -> GridMetadata<'_> {
        GridMetadata {
            params: self.params,
            config: self.config,
            iteration_count: self.iteration_count,
            final_sup_change: self.final_sup_change,
            history: &self.history,
            mass_leak: self.mass_leak,
            residual,
        }
    }

    /// CSV with `#` metadata lines and columns t, x, u.
    pub fn write_csv<W: Write>(&self, mut w: W, meta: &[(&str, String)]) -> std::io::Result<()> {
        for (k, v) in meta {
            writeln!(w, "# {k} = {v}")?;
        }
        let p = self.params;
        let c = self.config;
        writeln!(w, "# alpha = {}", p.alpha)?;
        writeln!(w, "# beta = {}", p.beta)?;
        writeln!(w, "# theta = {}", p.theta)?;
        writeln!(w, "# horizon = {}", c.horizon)?;
        writeln!(w, "# halfwidth = {}", c.halfwidth)?;
        writeln!(w, "# n_t = {}", c.n_t)?;
        writeln!(w, "# n_x = {}", c.n_x)?;
        writeln!(w, "# tol = {}", c.tol)?;
        writeln!(w, "# iteration_count = {}", self.iteration_count)?;
        writeln!(w, "# final_sup_change = {}", self.final_sup_change)?;
        writeln!(w, "# mass_leak = {}", self.mass_leak)?;
        writeln!(w, "t,x,u")?;
        for (n, t) in self.t_grid.iter().enumerate() {
            for (x, u) in self.x_grid.iter().zip(self.row(n)) {
                writeln!(w, "{t},{x},{u}")?;
            }
        }
        Ok(())
    }
}

/// Largest |difference| of two solutions over `points` (t, x).
pub fn grid_difference(a: &GridSolution, b: &GridSolution, points: &[(f64, f64)]) -> f64 {
    points
        .iter()
        .map(|&(t, x)| (a.value_at(t, x) - b.value_at(t, x)).abs())
        .fold(0.0, f64::max)
}

/// Bound on the solution error caused by kernel mass outside [-L, L]:
/// the survival-weighted tail of G_{a,1}(T) plus the branching-weighted tails
/// of G_{a,a}(tau) over (0, T).
pub fn mass_leak(params: FracParams, horizon: f64, halfwidth: f64) -> Result<f64> {
    let a = params.alpha;
    let final_tail = kernel_tail_mass(&KernelId::new(params, KernelRho::One, horizon)?, halfwidth)?;
    let mut leak = ml_survival(a, horizon)? * final_tail;
    // int_0^T tau^(a-1) E_{a,a}(-tau^a) tail(tau) d tau in sigma = tau^a
    let ml = MittagLeffler::new(a, a)?;
    let rule = GaussLegendre::new(LEAK_NODES);
    let upper = horizon.powf(a);
    let mut err = None;
    let branch = rule.integrate(0.0, upper, |sigma| {
        let tau = sigma.powf(1.0 / a);
        let tail = KernelId::new(params, KernelRho::Alpha, tau)
            .and_then(|id| kernel_tail_mass(&id, halfwidth))
            .and_then(|t| Ok(t * ml.eval_real(-sigma)?));
        match tail {
            Ok(v) => v / a,
            Err(e) => {
                err = Some(e);
                0.0
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    leak += branch;
    Ok(leak)
}

/// Smallest halfwidth `min_halfwidth * 2^j` whose leak meets the target,
/// capped at `max_halfwidth` (where the gate may still reject it).
pub fn reference_halfwidth(params: FracParams, horizon: f64, min_halfwidth: f64, max_halfwidth: f64) -> Result<f64> {
    let mut l = min_halfwidth;
    while l < max_halfwidth && mass_leak(params, horizon, l)? > LEAK_TARGET {
        l *= 2.0;
    }
    Ok(l.min(max_halfwidth))
}

/// Fourier-side data shared by the solver and the residual check.
struct Spectral {
    params: FracParams,
    l: f64,
    nx: usize,
    /// number of retained wavenumbers 0..=nx/2
    nk: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl Spectral {
    fn new(params: FracParams, l: f64, nx: usize) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            params,
            l,
            nx,
            nk: nx / 2 + 1,
            forward: planner.plan_fft_forward(nx),
            inverse: planner.plan_fft_inverse(nx),
        }
    }

    fn u_max(&self) -> f64 {
        (PI * (self.nx / 2) as f64 / self.l).powf(self.params.beta)
    }

    /// |k_m|^beta for the retained wavenumbers
    fn u_values(&self) -> Vec<f64> {
        (0..self.nk)
            .map(|m| (PI * m as f64 / self.l).powf(self.params.beta))
            .collect()
    }

    /// E_{a,rho}(-lambda_m s) for the retained wavenumbers.
    fn multiplier(&self, rho: f64, s: f64, u: &[f64]) -> Result<Vec<Complex64>> {
        let ml = MittagLeffler::new(self.params.alpha, rho)?;
        let phase = Complex64::from_polar(1.0, self.params.theta * PI / 2.0);
        let z0 = Complex64::new(-s, 0.0);
        let dz = -phase * (0.5 * s);
        let ray = RayInterpolant::new(&ml, z0, dz, self.u_max())?;
        let mut out: Vec<Complex64> = u.iter().map(|&v| ray.eval(v)).collect();
        out[0] = ml.eval(z0)?;
        Ok(out)
    }

    /// Coefficients sum_j f_j e^{+i k_m (x_j + L)} for m = 0..=nx/2.
    fn analyze(&self, f: &[f64]) -> Vec<Complex64> {
        let mut buf: Vec<Complex64> = f.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        self.inverse.process(&mut buf);
        buf.truncate(self.nk);
        buf
    }

    /// Real field with the given half spectrum.
    fn synthesize(&self, half: &[Complex64], out: &mut [f64]) {
        let nx = self.nx;
        let mut buf = vec![Complex64::new(0.0, 0.0); nx];
        buf[..self.nk].copy_from_slice(half);
        buf[nx / 2] = Complex64::new(half[nx / 2].re, 0.0);
        for m in 1..nx / 2 {
            buf[nx - m] = half[m].conj();
        }
        self.forward.process(&mut buf);
        let inv = 1.0 / nx as f64;
        for (o, c) in out.iter_mut().zip(&buf) {
            *o = c.re * inv;
        }
    }
}

/// Solves the integral equation on the grid described by `config`.
pub fn solve_grid(params: FracParams, u0: &InitialCondition, config: &GridConfig) -> Result<GridSolution> {
    params.validate()?;
    config.validate()?;
    u0.validate()?;
    let leak = mass_leak(params, config.horizon, config.halfwidth)?;
    if !(leak <= LEAK_LIMIT) {
        return Err(Error::DomainTooSmall {
            leak,
            limit: LEAK_LIMIT,
        });
    }
    let a = params.alpha;
    let (nt, nx) = (config.n_t, config.n_x);
    let h = config.horizon / nt as f64;
    let l = config.halfwidth;
    let sp = Spectral::new(params, l, nx);
    let nk = sp.nk;
    let u_vals = sp.u_values();

    let t_grid: Vec<f64> = (0..=nt).map(|n| n as f64 * h).collect();
    let dx = 2.0 * l / nx as f64;
    let x_grid: Vec<f64> = (0..nx).map(|j| -l + j as f64 * dx).collect();
    let init: Vec<f64> = x_grid.iter().map(|&x| u0.eval(x)).collect();
    let u0_hat = sp.analyze(&init);

    // weights in wavenumber-major layout [m * nt + index]
    let mut prop = vec![Complex64::new(0.0, 0.0); nk * nt];
    let mut last = vec![Complex64::new(0.0, 0.0); nk * nt];
    let mut toeplitz = vec![Complex64::new(0.0, 0.0); nk * nt];
    let mut phi_prev = vec![Complex64::new(0.0, 0.0); nk];
    let mut phi_levels: Vec<Vec<Complex64>> = Vec::with_capacity(nt + 1);
    phi_levels.push(phi_prev.clone());
    for n in 1..=nt {
        let t = t_grid[n];
        let s = t.powf(a);
        let p = sp.multiplier(1.0, s, &u_vals)?;
        let i0 = sp.multiplier(a + 1.0, s, &u_vals)?;
        let phi = sp.multiplier(a + 2.0, s, &u_vals)?;
        let (ci, cp) = (s, s * t);
        // phi_prev holds Phi(t_{n-1})
        for m in 0..nk {
            let phim = phi[m] * cp;
            prop[m * nt + n - 1] = p[m];
            last[m * nt + n - 1] = i0[m] * ci - (phim - phi_prev[m]) / h;
            phi_prev[m] = phim;
        }
        phi_levels.push(phi_prev.clone());
    }
    for m in 0..nk {
        toeplitz[m * nt] = phi_levels[1][m] / h;
        for j in 1..nt {
            toeplitz[m * nt + j] =
                (phi_levels[j + 1][m] - phi_levels[j][m] * 2.0 + phi_levels[j - 1][m]) / h;
        }
    }
    drop(phi_levels);

    // first iterate: propagated initial data
    let mut values = vec![0.0; (nt + 1) * nx];
    values[..nx].copy_from_slice(&init);
    let mut half = vec![Complex64::new(0.0, 0.0); nk];
    for n in 1..=nt {
        for m in 0..nk {
            half[m] = prop[m * nt + n - 1] * u0_hat[m];
        }
        sp.synthesize(&half, &mut values[n * nx..(n + 1) * nx]);
    }

    let mut history = Vec::new();
    let mut v_hat = vec![Complex64::new(0.0, 0.0); nk * (nt + 1)];
    let mut u_hat = vec![Complex64::new(0.0, 0.0); nk * nt];
    let mut sq = vec![0.0; nx];
    let mut row = vec![0.0; nx];
    loop {
        for n in 0..=nt {
            for (s, v) in sq.iter_mut().zip(&values[n * nx..(n + 1) * nx]) {
                *s = v * v;
            }
            let c = sp.analyze(&sq);
            for m in 0..nk {
                v_hat[m * (nt + 1) + n] = c[m];
            }
        }
        for m in 0..nk {
            let w = &toeplitz[m * nt..(m + 1) * nt];
            let v = &v_hat[m * (nt + 1)..(m + 1) * (nt + 1)];
            let out = &mut u_hat[m * nt..(m + 1) * nt];
            for n in 1..=nt {
                let mut acc = prop[m * nt + n - 1] * u0_hat[m] + last[m * nt + n - 1] * v[0];
                for j in 0..n {
                    acc += w[j] * v[n - j];
                }
                out[n - 1] = acc;
            }
        }
        let mut change: f64 = 0.0;
        for n in 1..=nt {
            for m in 0..nk {
                half[m] = u_hat[m * nt + n - 1];
            }
            sp.synthesize(&half, &mut row);
            let dst = &mut values[n * nx..(n + 1) * nx];
            for (d, r) in dst.iter_mut().zip(&row) {
                change = change.max((r - *d).abs());
                *d = *r;
            }
        }
        history.push(change);
        let iterations = history.len();
        if change <= config.tol {
            return Ok(GridSolution {
                params,
                config: *config,
                t_grid,
                x_grid,
                values,
                iteration_count: iterations,
                final_sup_change: change,
                history,
                mass_leak: leak,
            });
        }
        if !change.is_finite() || change > BLOWUP || iterations >= config.max_iters {
            return Err(Error::Divergence {
                iterations,
                last_change: change,
                history,
            });
        }
    }
}

/// Residuals of the integral equation for a computed solution, with the time
/// integral evaluated by Gauss–Legendre quadrature in sigma = tau^a against
/// the piecewise-linear interpolant of u^2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    /// at the grid times; measures iteration and quadrature consistency
    pub node: f64,
    /// at the mid-step times against the interpolated solution; measures the
    /// time discretization
    pub midpoint: f64,
}

/// Nodes (tau, weight in tau^(a-1) d tau) covering [tau_a, tau_b].
fn panel_nodes(a: f64, tau_a: f64, tau_b: f64, rule: &GaussLegendre, out: &mut Vec<(f64, f64)>) {
    let mut push = |sa: f64, sb: f64| {
        let (c, r) = (0.5 * (sa + sb), 0.5 * (sb - sa));
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            let sigma = c + r * x;
            out.push((sigma.powf(1.0 / a), w * r / a));
        }
    };
    let (sa, sb) = (tau_a.powf(a), tau_b.powf(a));
    if tau_a == 0.0 {
        // geometric grading towards the origin
        let mut hi = sb;
        for _ in 0..FIRST_PANEL_LEVELS {
            let lo = hi / 4.0;
            push(lo, hi);
            hi = lo;
        }
        push(0.0, hi);
    } else {
        push(sa, sb);
    }
}

/// Residual report of `solution` for initial data `u0`.
pub fn residual_check(solution: &GridSolution, params: FracParams, u0: &InitialCondition) -> Result<ResidualReport> {
    let cfg = solution.config;
    let a = params.alpha;
    let (nt, nx) = (cfg.n_t, cfg.n_x);
    let h = solution.dt();
    let sp = Spectral::new(params, cfg.halfwidth, nx);
    let nk = sp.nk;
    let u_vals = sp.u_values();
    let init: Vec<f64> = solution.x_grid.iter().map(|&x| u0.eval(x)).collect();
    let u0_hat = sp.analyze(&init);
    let v_hat: Vec<Vec<Complex64>> = (0..=nt)
        .map(|n| {
            let sq: Vec<f64> = solution.row(n).iter().map(|v| v * v).collect();
            sp.analyze(&sq)
        })
        .collect();
    let rule = GaussLegendre::new(RESIDUAL_NODES);

    // targets: grid times t_1..t_nt, then mid-step times
    let mut targets: Vec<f64> = (1..=nt).map(|n| n as f64 * h).collect();
    targets.extend((0..nt).map(|n| (n as f64 + 0.5) * h));
    let mut nodes = Vec::new();
    for q in 0..nt {
        panel_nodes(a, q as f64 * h, (q + 1) as f64 * h, &rule, &mut nodes);
    }
    let grid_family = nodes.len();
    panel_nodes(a, 0.0, 0.5 * h, &rule, &mut nodes);
    for q in 1..nt {
        panel_nodes(a, (q as f64 - 0.5) * h, (q as f64 + 0.5) * h, &rule, &mut nodes);
    }
    // each target uses the node family whose breakpoints match its
    // interpolation nodes
    let mut acc = vec![vec![Complex64::new(0.0, 0.0); nk]; targets.len()];
    for (idx, &(tau, w)) in nodes.iter().enumerate() {
        let kernel = sp.multiplier(a, tau.powf(a), &u_vals)?;
        let on_grid = idx < grid_family;
        for (ti, &t) in targets.iter().enumerate() {
            let grid_target = ti < nt;
            if grid_target != on_grid || tau >= t {
                continue;
            }
            let s = (t - tau) / h;
            let j = (s.floor() as usize).min(nt - 1);
            let f = s - j as f64;
            let (v0, v1) = (&v_hat[j], &v_hat[j + 1]);
            let dst = &mut acc[ti];
            for m in 0..nk {
                dst[m] += kernel[m] * w * (v0[m] * (1.0 - f) + v1[m] * f);
            }
        }
    }
    let mut node: f64 = 0.0;
    let mut midpoint: f64 = 0.0;
    let mut row = vec![0.0; nx];
    for (ti, &t) in targets.iter().enumerate() {
        let p = sp.multiplier(1.0, t.powf(a), &u_vals)?;
        let half: Vec<Complex64> = (0..nk).map(|m| p[m] * u0_hat[m] + acc[ti][m]).collect();
        sp.synthesize(&half, &mut row);
        if ti < nt {
            let cur = solution.row(ti + 1);
            for (r, c) in row.iter().zip(cur) {
                node = node.max((r - c).abs());
            }
        } else {
            let n = ti - nt;
            let (lo, hi) = (solution.row(n), solution.row(n + 1));
            for ((r, x), y) in row.iter().zip(lo).zip(hi) {
                midpoint = midpoint.max((r - 0.5 * (x + y)).abs());
            }
        }
    }
    Ok(ResidualReport { node, midpoint })
}

/// Reference value of u at one (t, x).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReferencePoint {
    pub t: f64,
    pub x: f64,
    pub u: f64,
}

/// Point values from the refined grid, with the grid tolerance: the largest
/// change over the requested points when both steps are halved, plus the
/// truncation leak bound and the last iteration change.
#[derive(Debug, Clone)]
pub struct ReferenceRun {
    pub coarse: GridSolution,
    pub fine: GridSolution,
    pub points: Vec<ReferencePoint>,
    pub grid_tolerance: f64,
}

pub fn reference_points(
    params: FracParams,
    u0: &InitialCondition,
    config: &GridConfig,
    points: &[(f64, f64)],
) -> Result<ReferenceRun> {
    if let Some(&(t, _)) = points.iter().find(|p| !(p.0 >= 0.0 && p.0 <= config.horizon)) {
        return Err(Error::Argument(format!(
            "evaluation time {t} outside [0, {}]",
            config.horizon
        )));
    }
    let coarse = solve_grid(params, u0, config)?;
    let fine = solve_grid(params, u0, &config.refined())?;
    let grid_tolerance = grid_difference(&coarse, &fine, points) + fine.mass_leak + fine.final_sup_change;
    let points = points
        .iter()
        .map(|&(t, x)| ReferencePoint {
            t,
            x,
            u: fine.value_at(t, x),
        })
        .collect();
    Ok(ReferenceRun {
        coarse,
        fine,
        points,
        grid_tolerance,
    })
}
