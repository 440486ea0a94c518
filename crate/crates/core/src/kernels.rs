//! Propagation kernels G^beta_{alpha,rho}(t, .) defined through their
//! characteristic functions
//!
//! F{G}(t, k) = E_{alpha,rho}(-(1 + psi(k)/2) t^alpha) / E_{alpha,rho}(-t^alpha),
//!
//! with psi the Riesz–Feller symbol and F{f}(k) = int e^{ikx} f(x) dx.
//! Densities and distribution functions are recovered on a periodic grid by
//! FFT inversion.

use crate::error::{Error, Result};
use crate::ml::spectral::shared_table;
use crate::ml::{MLOrder, MittagLeffler};
use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::io::Write;

/// Default number of FFT points for kernel tables.
pub const DEFAULT_TABLE_POINTS: usize = 8192;
/// Limits of the tabulated-kernel invariants.
pub const MASS_DEFECT_LIMIT: f64 = 1e-6;
pub const IMAG_RESIDUAL_LIMIT: f64 = 1e-9;
pub const MIN_DENSITY_LIMIT: f64 = -1e-7;
/// Target truncated tail mass used to size tables.
pub const TAIL_TARGET: f64 = 1e-8;

/// Characteristic-function magnitude below which no smoothing is needed at
/// the Nyquist wavenumber.
const SPECTRAL_FLOOR: f64 = 1e-14;
/// Widest table measured in units of the kernel scale.
const MAX_WIDTH_SCALES: f64 = 64.0;
const MIN_WIDTH_SCALES: f64 = 8.0;

/// Orders and skewness of the fractional equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FracParams {
    pub alpha: f64,
    pub beta: f64,
    pub theta: f64,
}

impl FracParams {
    /// Accepts 0 < alpha <= 1, 0 < beta <= 2 and |theta| <= min(beta, 2 - beta).
    pub fn new(alpha: f64, beta: f64, theta: f64) -> Result<Self> {
        let p = Self { alpha, beta, theta };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let Self { alpha, beta, theta } = *self;
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Domain(format!("alpha = {alpha} outside (0, 1]")));
        }
        if !(beta > 0.0 && beta <= 2.0) {
            return Err(Error::Domain(format!("beta = {beta} outside (0, 2]")));
        }
        let bound = beta.min(2.0 - beta);
        if !(theta.abs() <= bound) {
            return Err(Error::Domain(format!(
                "theta = {theta} outside |theta| <= min(beta, 2 - beta) = {bound}"
            )));
        }
        Ok(())
    }
}

/// Which of the two kernels: rho = 1 drives final segments, rho = alpha the
/// segments that end in a branching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelRho {
    One,
    Alpha,
}

/// One propagation kernel: parameters, rho and duration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelId {
    pub params: FracParams,
    pub rho: KernelRho,
    pub t: f64,
}

impl KernelId {
    pub fn new(params: FracParams, rho: KernelRho, t: f64) -> Result<Self> {
        params.validate()?;
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::Domain(format!("kernel duration t = {t} must be positive")));
        }
        Ok(Self { params, rho, t })
    }

    pub fn rho_value(&self) -> f64 {
        match self.rho {
            KernelRho::One => 1.0,
            KernelRho::Alpha => self.params.alpha,
        }
    }

    pub fn order(&self) -> MLOrder {
        MLOrder {
            alpha: self.params.alpha,
            rho: self.rho_value(),
        }
    }
}

/// psi(k) = |k|^beta exp(i sign(k) theta pi / 2).
pub fn riesz_feller_symbol(beta: f64, theta: f64, k: f64) -> Complex64 {
    if k == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let phase = k.signum() * theta * PI / 2.0;
    Complex64::from_polar(k.abs().powf(beta), phase)
}

/// Reusable evaluator of one kernel's characteristic function.
#[derive(Debug, Clone)]
pub struct KernelCharFn {
    ml: MittagLeffler,
    beta: f64,
    theta: f64,
    s: f64,
    norm: f64,
}

impl KernelCharFn {
    pub fn new(id: &KernelId) -> Result<Self> {
        let ml = MittagLeffler::new(id.params.alpha, id.rho_value())?;
        let s = id.t.powf(id.params.alpha);
        let norm = ml.eval_real(-s)?;
        Ok(Self {
            ml,
            beta: id.params.beta,
            theta: id.params.theta,
            s,
            norm,
        })
    }

    pub fn eval(&self, k: f64) -> Result<Complex64> {
        if k == 0.0 {
            return Ok(Complex64::new(1.0, 0.0));
        }
        if k < 0.0 {
            return Ok(self.eval(-k)?.conj());
        }
        let psi = riesz_feller_symbol(self.beta, self.theta, k);
        if self.ml.alpha() == 1.0 && self.ml.rho() == 1.0 {
            return Ok((-psi * (self.s / 2.0)).exp());
        }
        let z = -(psi / 2.0 + 1.0) * self.s;
        Ok(self.ml.eval(z)? / self.norm)
    }
}

/// F{G}(t, k) for the kernel `id`.
pub fn kernel_charfn(id: &KernelId, k: f64) -> Result<Complex64> {
    KernelCharFn::new(id)?.eval(k)
}

/// Mean of the stable intensity lambda = r t^alpha / 2 under the subordinating
/// law; also the coefficient c in F{G}(t, k) = 1 - c psi(k) + o(psi).
pub fn mean_intensity(id: &KernelId) -> Result<f64> {
    let table = shared_table(id.order())?;
    let s = id.t.powf(id.params.alpha);
    Ok(0.5 * s * table.tilted_expectation(s, |r| r))
}

/// Estimated kernel mass outside [-halfwidth, halfwidth].
///
/// Gaussian mixtures (beta = 2) are integrated against the subordinating law;
/// heavy tails use the leading stable tail constant.
pub fn kernel_tail_mass(id: &KernelId, halfwidth: f64) -> Result<f64> {
    let beta = id.params.beta;
    let s = id.t.powf(id.params.alpha);
    if beta == 2.0 {
        let table = shared_table(id.order())?;
        return Ok(table.tilted_expectation(s, |r| {
            let lam = 0.5 * r * s;
            if lam > 0.0 {
                libm::erfc(halfwidth / (2.0 * lam.sqrt()))
            } else {
                0.0
            }
        }));
    }
    let lam = mean_intensity(id)?;
    Ok(stable_tail_constant(beta, id.params.theta) * lam * halfwidth.powf(-beta))
}

/// c with P(|X| > x) ~ c x^-beta for characteristic function exp(-psi(k)).
pub fn stable_tail_constant(beta: f64, theta: f64) -> f64 {
    2.0 / PI * libm::tgamma(beta) * (PI * beta / 2.0).sin() * (PI * theta / 2.0).cos()
}

/// Halfwidth meeting the tail target, limited to a practical multiple of the
/// kernel scale.
pub fn default_halfwidth(id: &KernelId) -> Result<f64> {
    let beta = id.params.beta;
    let lam = mean_intensity(id)?;
    let scale = if beta == 2.0 {
        (2.0 * lam).sqrt()
    } else {
        lam.powf(1.0 / beta)
    };
    let (lo, hi) = (MIN_WIDTH_SCALES * scale, MAX_WIDTH_SCALES * scale);
    if kernel_tail_mass(id, hi)? > TAIL_TARGET {
        return Ok(hi);
    }
    let (mut a, mut b) = (lo, hi);
    if kernel_tail_mass(id, a)? <= TAIL_TARGET {
        return Ok(a);
    }
    for _ in 0..60 {
        let m = 0.5 * (a + b);
        if kernel_tail_mass(id, m)? > TAIL_TARGET {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(b)
}

/// A density and distribution function tabulated on [-L, L].
///
/// The table describes the law wrapped onto the period [-L, L), convolved with
/// a centred Gaussian of standard deviation `smoothing` whenever the
/// characteristic function has not decayed at the Nyquist wavenumber.
#[derive(Debug, Clone, Serialize)]
pub struct KernelTable {
    pub halfwidth: f64,
    /// N + 1 uniform points from -L to L
    pub x_grid: Vec<f64>,
    pub density: Vec<f64>,
    pub cdf: Vec<f64>,
    pub mass_defect: f64,
    pub max_imag_residual: f64,
    /// smallest density value before clipping
    pub min_density: f64,
    pub smoothing: f64,
    pub tail_mass: f64,
}

/// Inverts `charfn` on a periodic grid of `n_points` cells over
/// [-halfwidth, halfwidth]. No invariants are enforced.
pub fn build_charfn_table<F>(charfn: F, halfwidth: f64, n_points: usize) -> Result<KernelTable>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if !(n_points.is_power_of_two() && n_points >= 1 << 10) {
        return Err(Error::Argument(format!(
            "n_points = {n_points} must be a power of two >= 1024"
        )));
    }
    if !(halfwidth > 0.0) || !halfwidth.is_finite() {
        return Err(Error::Argument(format!("halfwidth = {halfwidth} must be positive")));
    }
    let n = n_points;
    let l = halfwidth;
    let dk = PI / l;
    let nyquist = n / 2;
    let k_max = nyquist as f64 * dk;
    let edge = charfn(k_max)?.norm();
    let smoothing = if edge > SPECTRAL_FLOOR {
        (2.0 * (edge / 1e-16).ln()).sqrt() / k_max
    } else {
        0.0
    };

    // coefficients of the periodized density and of its primitive
    let mut dens = vec![Complex64::new(0.0, 0.0); n];
    let mut prim = vec![Complex64::new(0.0, 0.0); n];
    for m in 0..=nyquist {
        let k = m as f64 * dk;
        let window = (-0.5 * (smoothing * k).powi(2)).exp();
        let phi = charfn(k)? * window;
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        if m == 0 {
            dens[0] = phi;
            continue;
        }
        if m == nyquist {
            // the two Nyquist terms combine into their real part
            let c = Complex64::new(phi.re, 0.0) * sign;
            dens[m] = c;
            prim[m] = Complex64::new(0.0, 0.0);
            continue;
        }
        let c = phi * sign;
        dens[m] = c;
        dens[n - m] = c.conj();
        let p = c / Complex64::new(0.0, -k);
        prim[m] = p;
        prim[n - m] = p.conj();
    }
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(n);
    fft.process(&mut dens);
    fft.process(&mut prim);

    let inv = 1.0 / (2.0 * l);
    let mut density = Vec::with_capacity(n + 1);
    let mut max_re: f64 = 0.0;
    let mut max_im: f64 = 0.0;
    for c in &dens {
        density.push(c.re * inv);
        max_re = max_re.max(c.re.abs());
        max_im = max_im.max(c.im.abs());
    }
    density.push(density[0]);
    let mass_defect = density[..n].iter().sum::<f64>() * (2.0 * l / n as f64) - 1.0;
    let min_density = density.iter().cloned().fold(f64::INFINITY, f64::min);

    let dx = 2.0 * l / n as f64;
    let x_grid: Vec<f64> = (0..=n).map(|j| -l + j as f64 * dx).collect();
    let mut cdf = Vec::with_capacity(n + 1);
    let base = prim[0].re;
    let mut running: f64 = 0.0;
    for j in 0..=n {
        let g = if j == n { base } else { prim[j].re };
        let v = (x_grid[j] + l) * inv + (g - base) * inv;
        running = running.max(v.clamp(0.0, 1.0));
        cdf.push(running);
    }
    for d in &mut density {
        *d = d.max(0.0);
    }
    Ok(KernelTable {
        halfwidth: l,
        x_grid,
        density,
        cdf,
        mass_defect,
        max_imag_residual: if max_re > 0.0 { max_im / max_re } else { max_im },
        min_density,
        smoothing,
        tail_mass: f64::NAN,
    })
}

/// Tabulates the kernel and enforces its invariants.
pub fn build_kernel_table(id: &KernelId, halfwidth: f64, n_points: usize) -> Result<KernelTable> {
    let table = raw_kernel_table(id, halfwidth, n_points)?;
    if !(table.mass_defect.abs() <= MASS_DEFECT_LIMIT) {
        return Err(Error::KernelValidation {
            condition: "(ii) unit mass",
            detail: format!("mass defect {:e}", table.mass_defect),
        });
    }
    if !(table.max_imag_residual <= IMAG_RESIDUAL_LIMIT) {
        return Err(Error::KernelValidation {
            condition: "(iii) real valued",
            detail: format!("imaginary residual {:e}", table.max_imag_residual),
        });
    }
    if !(table.min_density >= MIN_DENSITY_LIMIT) {
        return Err(Error::KernelValidation {
            condition: "(iii) nonnegative",
            detail: format!("minimum density {:e}", table.min_density),
        });
    }
    Ok(table)
}

fn raw_kernel_table(id: &KernelId, halfwidth: f64, n_points: usize) -> Result<KernelTable> {
    let phi = KernelCharFn::new(id)?;
    let mut table = build_charfn_table(|k| phi.eval(k), halfwidth, n_points)?;
    table.tail_mass = kernel_tail_mass(id, halfwidth)?;
    Ok(table)
}

/// Kernel table with the default halfwidth and resolution.
pub fn default_kernel_table(id: &KernelId) -> Result<KernelTable> {
    build_kernel_table(id, default_halfwidth(id)?, DEFAULT_TABLE_POINTS)
}

impl KernelTable {
    fn dx(&self) -> f64 {
        self.x_grid[1] - self.x_grid[0]
    }

    /// Maps `x` onto the period [-L, L).
    pub fn wrap(&self, x: f64) -> f64 {
        let p = 2.0 * self.halfwidth;
        x - p * ((x + self.halfwidth) / p).floor()
    }

    /// Distribution function of the wrapped law at `x` (wrapped first),
    /// cubic Hermite between grid points.
    pub fn cdf_at(&self, x: f64) -> f64 {
        let x = self.wrap(x);
        let dx = self.dx();
        let pos = (x + self.halfwidth) / dx;
        let j = (pos.floor() as usize).min(self.cdf.len() - 2);
        let u = pos - j as f64;
        self.hermite(j, u, dx).clamp(0.0, 1.0)
    }

    fn hermite(&self, j: usize, u: f64, dx: f64) -> f64 {
        let (f0, f1) = (self.cdf[j], self.cdf[j + 1]);
        let (d0, d1) = (self.density[j] * dx, self.density[j + 1] * dx);
        let u2 = u * u;
        let u3 = u2 * u;
        (2.0 * u3 - 3.0 * u2 + 1.0) * f0
            + (u3 - 2.0 * u2 + u) * d0
            + (-2.0 * u3 + 3.0 * u2) * f1
            + (u3 - u2) * d1
    }

    /// Inverse of the wrapped distribution function.
    pub fn quantile(&self, u: f64) -> f64 {
        let j = self.cdf.partition_point(|&c| c <= u).clamp(1, self.cdf.len() - 1) - 1;
        let dx = self.dx();
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..52 {
            let mid = 0.5 * (lo + hi);
            if self.hermite(j, mid, dx) < u {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        self.x_grid[j] + 0.5 * (lo + hi) * dx
    }

    /// Density at the nearest grid point.
    pub fn density_at(&self, x: f64) -> f64 {
        let x = self.wrap(x);
        let j = ((x + self.halfwidth) / self.dx()).round() as usize;
        self.density[j.min(self.density.len() - 1)]
    }

    /// CSV with `#` metadata lines and columns x, density, cdf.
    pub fn write_csv<W: Write>(&self, mut w: W, meta: &[(&str, String)]) -> std::io::Result<()> {
        for (k, v) in meta {
            writeln!(w, "# {k} = {v}")?;
        }
        writeln!(w, "# halfwidth = {}", self.halfwidth)?;
        writeln!(w, "# smoothing = {}", self.smoothing)?;
        writeln!(w, "# mass_defect = {}", self.mass_defect)?;
        writeln!(w, "# tail_mass = {}", self.tail_mass)?;
        writeln!(w, "x,density,cdf")?;
        for ((x, d), c) in self.x_grid.iter().zip(&self.density).zip(&self.cdf) {
            writeln!(w, "{x},{d},{c}")?;
        }
        Ok(())
    }
}

/// Outcome of one Green's-function condition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionCheck {
    pub condition: String,
    pub residual: f64,
    pub limit: f64,
    pub passed: bool,
}

impl ConditionCheck {
    fn new(condition: &str, residual: f64, limit: f64) -> Self {
        Self {
            condition: condition.to_string(),
            residual,
            limit,
            passed: residual <= limit,
        }
    }
}

/// Pass/fail report of the kernel conditions with their residuals.
#[derive(Debug, Clone, Serialize)]
pub struct KernelReport {
    pub kernel: KernelId,
    pub halfwidth: f64,
    pub n_points: usize,
    pub smoothing: f64,
    pub tail_mass: f64,
    pub checks: Vec<ConditionCheck>,
    pub passed: bool,
}

/// Checks the three kernel conditions:
/// (i) the kernel tends to a delta as t -> 0,
/// (ii) unit mass,
/// (iii) real and nonnegative.
pub fn kernel_property_report(id: &KernelId) -> Result<KernelReport> {
    let halfwidth = default_halfwidth(id)?;
    let n_points = DEFAULT_TABLE_POINTS;
    let table = raw_kernel_table(id, halfwidth, n_points)?;
    let phi = KernelCharFn::new(id)?;

    // (i) at a duration with t^alpha = 1e-8 the transform is within O(1e-7)
    // of 1 on |k| <= 10
    let early = KernelId::new(id.params, id.rho, 1e-8f64.powf(1.0 / id.params.alpha))?;
    let phi0 = KernelCharFn::new(&early)?;
    let mut delta: f64 = 0.0;
    let mut symmetry: f64 = 0.0;
    let mut modulus: f64 = 0.0;
    for j in 0..=200 {
        let k = 10.0 * j as f64 / 200.0;
        delta = delta.max((phi0.eval(k)? - 1.0).norm());
        let (a, b) = (phi.eval(k)?, phi.eval(-k)?);
        symmetry = symmetry.max((b - a.conj()).norm());
        modulus = modulus.max(a.norm() - 1.0);
    }
    let checks = vec![
        ConditionCheck::new("(i) delta initial value", delta, 1e-6),
        ConditionCheck::new(
            "(ii) unit mass",
            (phi.eval(0.0)? - 1.0).norm().max(table.mass_defect.abs()),
            MASS_DEFECT_LIMIT,
        ),
        ConditionCheck::new(
            "(iii) real valued",
            table.max_imag_residual.max(symmetry),
            IMAG_RESIDUAL_LIMIT,
        ),
        ConditionCheck::new("(iii) nonnegative", (-table.min_density).max(0.0), -MIN_DENSITY_LIMIT),
        ConditionCheck::new("characteristic function bounded by 1", modulus.max(0.0), 1e-12),
    ];
    let passed = checks.iter().all(|c| c.passed);
    Ok(KernelReport {
        kernel: *id,
        halfwidth,
        n_points,
        smoothing: table.smoothing,
        tail_mass: table.tail_mass,
        checks,
        passed,
    })
}
