//! Spectral (Bernstein) measures of the completely monotone functions
//! x -> E_{alpha,rho}(-x), rho in {1, alpha}.
//!
//! For rho = 1 the density is the Wright function M_alpha(r); for rho = alpha
//! it is alpha r M_alpha(r). Both are tabulated on graded Gauss–Legendre panels
//! and accepted only if the forward Laplace transform of the table reproduces
//! the Mittag-Leffler function on [0, 100].

use super::{rgamma, MLOrder, MittagLeffler};
use crate::error::{Error, Result};
use crate::quad::{gauss_legendre, integrate_adaptive, legendre_all};
use parking_lot::{Mutex, RwLock};
use rand::Rng;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::io::Write;
use std::sync::{Arc, OnceLock};

/// Default number of table nodes.
pub const DEFAULT_POINTS: usize = 1024;
const PEAK_POINTS: f64 = 40.0;
const MAX_POINTS: usize = 1 << 17;
/// Relative tolerance of the forward-transform gate.
pub const GATE_TOLERANCE: f64 = 1e-8;
/// Negative values above this are rounding and get clipped.
pub const NEGATIVE_CLIP: f64 = -1e-12;

const ORDER: usize = 8;
/// Truncation where the density has decayed like exp(-TAIL_EXPONENT).
const TAIL_EXPONENT: f64 = 45.0;
const SERIES_LIMIT: f64 = 1.0;
const SERIES_TERMS: usize = 20_000;
const GATE_POINTS: usize = 80;
/// Tilted laws are cached at s0 = 0 and s0 = TILT_MIN * TILT_RATIO^j.
const TILT_MIN: f64 = 0.05;
const TILT_RATIO: f64 = 1.1;

/// Wright function M_alpha(r) for 0 < alpha < 1 and r >= 0.
pub fn wright_m(alpha: f64, r: f64) -> f64 {
    if r <= SERIES_LIMIT {
        wright_m_series(alpha, r)
    } else {
        wright_m_integral(alpha, r)
    }
}

fn wright_m_series(alpha: f64, r: f64) -> f64 {
    if r == 0.0 {
        return rgamma(1.0 - alpha);
    }
    let ln_r = r.ln();
    let mut sum = 0.0;
    for n in 0..SERIES_TERMS {
        let nf = n as f64;
        let x = 1.0 - alpha - alpha * nf;
        let ln_pow = nf * ln_r - libm::lgamma(nf + 1.0);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        // reflection keeps terms finite for large negative x
        let (term, bound) = if x > 0.0 {
            let t = ln_pow.exp() * rgamma(x);
            (t, t.abs())
        } else {
            let m = (ln_pow + libm::lgamma(1.0 - x)).exp() / PI;
            (m * (PI * x).sin(), m)
        };
        sum += sign * term;
        if n > 4 && bound < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// Positive-integrand representation on (0, pi).
fn wright_m_integral(alpha: f64, r: f64) -> f64 {
    let p = 1.0 / (1.0 - alpha);
    let scale = r.powf(p);
    let log_shape = |phi: f64| {
        let sa = (alpha * phi).sin();
        p * (sa / phi.sin()).ln() + (((1.0 - alpha) * phi).sin() / sa).ln()
    };
    let integrand = |phi: f64| {
        let la = log_shape(phi);
        if !la.is_finite() {
            return 0.0;
        }
        (la - scale * la.exp()).exp()
    };
    let (v, _) = integrate_adaptive(integrand, 0.0, PI, 0.0, 1e-14, 400);
    v * r.powf(alpha * p) / (PI * (1.0 - alpha))
}

/// Spectral density K_{alpha,rho}(r) for alpha < 1, rho in {1, alpha}.
pub fn spectral_density_value(order: MLOrder, r: f64) -> f64 {
    let m = wright_m(order.alpha, r);
    if order.rho == 1.0 {
        m
    } else {
        order.alpha * r * m
    }
}

/// Point mass of the degenerate alpha = 1 measure.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Atom {
    pub location: f64,
    pub weight: f64,
}

/// Tabulated spectral measure with cached tilted sampling laws.
#[derive(Debug)]
pub struct SpectralTable {
    order: MLOrder,
    r_grid: Vec<f64>,
    weights: Vec<f64>,
    k_values: Vec<f64>,
    edges: Vec<f64>,
    total_mass: f64,
    atom: Option<Atom>,
    gate_residual: f64,
    legendre: LegendreProjection,
    tilted: RwLock<HashMap<i64, Arc<TiltedLaw>>>,
}

/// Truncation point where K has decayed by exp(-45).
pub fn default_r_max(alpha: f64) -> f64 {
    let b = (1.0 - alpha) * alpha.powf(alpha / (1.0 - alpha));
    (TAIL_EXPONENT / b).powf(1.0 - alpha)
}

/// Grid size resolving the peak at r = 1 that forms as alpha approaches 1.
pub fn default_points(alpha: f64) -> usize {
    let n = (PEAK_POINTS / (1.0 - alpha)).ceil();
    if n.is_finite() {
        (n as usize).clamp(DEFAULT_POINTS, MAX_POINTS)
    } else {
        DEFAULT_POINTS
    }
}

/// Builds and validates the spectral table of E_{alpha,rho}(-x).
pub fn ml_spectral_density(order: MLOrder, r_max: f64, n_points: usize) -> Result<SpectralTable> {
    if order.rho != 1.0 && order.rho != order.alpha {
        return Err(Error::Domain(format!(
            "spectral tables support rho in {{1, alpha}}, got rho = {}",
            order.rho
        )));
    }
    if order.alpha == 1.0 {
        return Ok(SpectralTable::degenerate(order));
    }
    if !(r_max > 0.0) || !r_max.is_finite() {
        return Err(Error::Argument(format!("r_max = {r_max} must be positive")));
    }
    let panels = n_points.div_ceil(ORDER).max(4);
    let (nodes, gl_weights) = gauss_legendre(ORDER);
    // exponential grading keeps the first panels narrow enough to resolve
    // exp(-100 r) for wide tables
    let grading = (r_max.ln() + 1.5).max(3.0);
    let denom = grading.exp_m1();
    let edges: Vec<f64> = (0..=panels)
        .map(|j| r_max * (grading * j as f64 / panels as f64).exp_m1() / denom)
        .collect();
    let mut r_grid = Vec::with_capacity(panels * ORDER);
    let mut weights = Vec::with_capacity(panels * ORDER);
    for w in edges.windows(2) {
        let half = 0.5 * (w[1] - w[0]);
        let mid = 0.5 * (w[1] + w[0]);
        for (x, g) in nodes.iter().zip(&gl_weights) {
            r_grid.push(mid + half * x);
            weights.push(half * g);
        }
    }
    let mut k_values = Vec::with_capacity(r_grid.len());
    for &r in &r_grid {
        let k = spectral_density_value(order, r);
        if !(k >= NEGATIVE_CLIP) {
            return Err(Error::SpectralConstruction { residual: k.abs() });
        }
        k_values.push(k.max(0.0));
    }
    let total_mass = weights.iter().zip(&k_values).map(|(w, k)| w * k).sum();
    let mut table = SpectralTable {
        order,
        r_grid,
        weights,
        k_values,
        edges,
        total_mass,
        atom: None,
        gate_residual: 0.0,
        legendre: LegendreProjection::new(&nodes, &gl_weights),
        tilted: RwLock::new(HashMap::new()),
    };
    table.gate_residual = table.forward_residual()?;
    if !(table.gate_residual <= GATE_TOLERANCE) {
        return Err(Error::SpectralConstruction {
            residual: table.gate_residual,
        });
    }
    Ok(table)
}

impl SpectralTable {
    /// Table with default truncation and resolution.
    pub fn new(order: MLOrder) -> Result<Self> {
        let r_max = if order.alpha < 1.0 {
            default_r_max(order.alpha)
        } else {
            1.0
        };
        ml_spectral_density(order, r_max, default_points(order.alpha))
    }

    fn degenerate(order: MLOrder) -> Self {
        SpectralTable {
            order,
            r_grid: vec![1.0],
            weights: vec![1.0],
            k_values: vec![1.0],
            edges: vec![],
            total_mass: 1.0,
            atom: Some(Atom {
                location: 1.0,
                weight: 1.0,
            }),
            gate_residual: 0.0,
            legendre: LegendreProjection::new(&[0.0], &[2.0]),
            tilted: RwLock::new(HashMap::new()),
        }
    }

    pub fn order(&self) -> MLOrder {
        self.order
    }

    pub fn r_grid(&self) -> &[f64] {
        &self.r_grid
    }

    pub fn k_values(&self) -> &[f64] {
        &self.k_values
    }

    /// Quadrature weights paired with `r_grid`.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn total_mass(&self) -> f64 {
        self.total_mass
    }

    pub fn atom(&self) -> Option<Atom> {
        self.atom
    }

    /// Largest relative forward-transform residual found at construction.
    pub fn gate_residual(&self) -> f64 {
        self.gate_residual
    }

    /// Forward Laplace transform of the table at `x >= 0`.
    pub fn laplace(&self, x: f64) -> f64 {
        if let Some(a) = self.atom {
            return a.weight * (-a.location * x).exp();
        }
        self.weights
            .iter()
            .zip(&self.r_grid)
            .zip(&self.k_values)
            .map(|((w, r), k)| w * k * (-r * x).exp())
            .sum()
    }

    /// Expectation of `f(r)` under the measure tilted by exp(-r s).
    pub fn tilted_expectation<F: Fn(f64) -> f64>(&self, s: f64, f: F) -> f64 {
        if let Some(a) = self.atom {
            return f(a.location);
        }
        let mut num = 0.0;
        let mut den = 0.0;
        for ((w, r), k) in self.weights.iter().zip(&self.r_grid).zip(&self.k_values) {
            let m = w * k * (-r * s).exp();
            num += m * f(*r);
            den += m;
        }
        num / den
    }

    fn forward_residual(&self) -> Result<f64> {
        let ml = MittagLeffler::new(self.order.alpha, self.order.rho)?;
        let mut worst: f64 = 0.0;
        let mut xs = vec![0.0];
        for j in 0..GATE_POINTS {
            xs.push(1e-3 * 1e5f64.powf(j as f64 / (GATE_POINTS - 1) as f64));
        }
        for x in xs {
            let exact = ml.eval_real(-x)?;
            let approx = self.laplace(x);
            worst = worst.max(((approx - exact) / exact).abs());
        }
        Ok(worst)
    }

    /// Draws r from the density exp(-r s) K(r) / E_{alpha,rho}(-s).
    ///
    /// Samples come from a cached law tilted at some s0 <= s and are accepted
    /// with probability exp(-r (s - s0)), so the result is exact for every s.
    pub fn sample_tilted<R: Rng + ?Sized>(&self, s: f64, rng: &mut R) -> f64 {
        if let Some(a) = self.atom {
            return a.location;
        }
        let (key, s0) = tilt_key(s);
        let law = self.tilted_law(key, s0);
        loop {
            let r = law.invert(rng.random::<f64>(), &self.edges);
            let excess = s - s0;
            if excess <= 0.0 || rng.random::<f64>() < (-r * excess).exp() {
                return r;
            }
        }
    }

    fn tilted_law(&self, key: i64, s0: f64) -> Arc<TiltedLaw> {
        if let Some(law) = self.tilted.read().get(&key) {
            return law.clone();
        }
        let law = Arc::new(TiltedLaw::new(self, s0));
        self.tilted.write().entry(key).or_insert(law).clone()
    }

    /// Writes the table as CSV with columns r, K.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "# alpha = {}", self.order.alpha)?;
        writeln!(w, "# rho = {}", self.order.rho)?;
        writeln!(w, "# total_mass = {}", self.total_mass)?;
        writeln!(w, "# gate_residual = {}", self.gate_residual)?;
        if let Some(a) = self.atom {
            writeln!(w, "# atom = {} {}", a.location, a.weight)?;
        }
        writeln!(w, "r,K")?;
        for (r, k) in self.r_grid.iter().zip(&self.k_values) {
            writeln!(w, "{r},{k}")?;
        }
        Ok(())
    }
}

type TableCache = Mutex<HashMap<(u64, u64), Arc<SpectralTable>>>;

/// Process-wide default table for `order`, built once on first use.
pub fn shared_table(order: MLOrder) -> Result<Arc<SpectralTable>> {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (order.alpha.to_bits(), order.rho.to_bits());
    let mut guard = cache.lock();
    if let Some(t) = guard.get(&key) {
        return Ok(t.clone());
    }
    let table = Arc::new(SpectralTable::new(order)?);
    guard.insert(key, table.clone());
    Ok(table)
}

fn tilt_key(s: f64) -> (i64, f64) {
    if !(s >= TILT_MIN) {
        return (-1, 0.0);
    }
    let mut j = ((s / TILT_MIN).ln() / TILT_RATIO.ln()).floor() as i64;
    while TILT_MIN * TILT_RATIO.powi(j as i32) > s {
        j -= 1;
    }
    (j, TILT_MIN * TILT_RATIO.powi(j as i32))
}

/// Maps nodal values on a panel to Legendre coefficients of the interpolant.
#[derive(Debug)]
struct LegendreProjection {
    /// matrix[m][i] = (2m + 1) / 2 * w_i * P_m(x_i)
    matrix: Vec<Vec<f64>>,
}

impl LegendreProjection {
    fn new(nodes: &[f64], weights: &[f64]) -> Self {
        let n = nodes.len();
        let mut p = vec![0.0; n + 1];
        let mut matrix = vec![vec![0.0; n]; n];
        for (i, (&x, &w)) in nodes.iter().zip(weights).enumerate() {
            legendre_all(n, x, &mut p);
            for (m, row) in matrix.iter_mut().enumerate() {
                row[i] = (2 * m + 1) as f64 / 2.0 * w * p[m];
            }
        }
        Self { matrix }
    }
}

#[derive(Debug)]
struct TiltedLaw {
    /// cumulative panel masses, starting at 0
    cdf: Vec<f64>,
    /// Legendre coefficients of the tilted density per panel (local variable)
    coeffs: Vec<[f64; ORDER]>,
}

impl TiltedLaw {
    fn new(table: &SpectralTable, s0: f64) -> Self {
        let panels = table.edges.len() - 1;
        let mut cdf = Vec::with_capacity(panels + 1);
        let mut coeffs = Vec::with_capacity(panels);
        cdf.push(0.0);
        let mut acc = 0.0;
        for p in 0..panels {
            let half = 0.5 * (table.edges[p + 1] - table.edges[p]);
            let mut c = [0.0; ORDER];
            for (m, row) in table.legendre.matrix.iter().enumerate() {
                c[m] = (0..ORDER)
                    .map(|i| {
                        let idx = p * ORDER + i;
                        row[i] * table.k_values[idx] * (-table.r_grid[idx] * s0).exp()
                    })
                    .sum();
            }
            // the mass of the panel is the integral of P_0 only
            acc += 2.0 * c[0] * half;
            cdf.push(acc);
            coeffs.push(c);
        }
        Self { cdf, coeffs }
    }

    fn invert(&self, u: f64, edges: &[f64]) -> f64 {
        let total = *self.cdf.last().unwrap();
        let target = u * total;
        let p = (self.cdf.partition_point(|&c| c <= target).max(1) - 1).min(self.coeffs.len() - 1);
        let half = 0.5 * (edges[p + 1] - edges[p]);
        let local = (target - self.cdf[p]) / half;
        let c = &self.coeffs[p];
        let x = invert_panel(c, local);
        0.5 * (edges[p] + edges[p + 1]) + half * x
    }
}

/// Solves int_{-1}^x sum_m c_m P_m = target for x in [-1, 1].
fn invert_panel(c: &[f64; ORDER], target: f64) -> f64 {
    let mut p = [0.0; ORDER + 1];
    let eval = |x: f64, p: &mut [f64; ORDER + 1]| {
        legendre_all(ORDER, x, p);
        // int_{-1}^x P_m = (P_{m+1} - P_{m-1}) / (2m + 1), and x + 1 for m = 0
        let mut cum = c[0] * (x + 1.0);
        let mut dens = c[0];
        for m in 1..ORDER {
            cum += c[m] * (p[m + 1] - p[m - 1]) / (2 * m + 1) as f64;
            dens += c[m] * p[m];
        }
        (cum, dens)
    };
    let (mut lo, mut hi) = (-1.0, 1.0);
    let mut x = -1.0 + target / c[0].max(f64::MIN_POSITIVE);
    x = x.clamp(-1.0, 1.0);
    for _ in 0..100 {
        let (f, d) = eval(x, &mut p);
        let g = f - target;
        if g > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let mut next = if d > 0.0 { x - g / d } else { f64::NAN };
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 1e-15 || hi - lo <= 1e-15 {
            return next;
        }
        x = next;
    }
    x
}
