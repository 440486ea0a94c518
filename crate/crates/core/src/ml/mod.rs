//! Generalized Mittag-Leffler functions E_{alpha,rho}(z) = sum_j z^j / Gamma(alpha j + rho).
//!
//! Three evaluation regimes are combined:
//!
//! * the power series for `|z| <= SERIES_RADIUS`;
//! * the asymptotic expansion (pole residues plus the algebraic tail) once
//!   `|z|^(1/alpha)` is large enough for optimal truncation to reach double
//!   precision;
//! * contour inversion of the Laplace transform everywhere in between.
//!
//! On the negative real axis the survival function and the branching density
//! of the fractional clock are thin wrappers around the same evaluator.

mod contour;
pub mod ray;
pub mod spectral;

pub use spectral::{ml_spectral_density, SpectralTable};

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Series is used inside this radius.
pub const SERIES_RADIUS: f64 = 1.0;
/// `|z|^(1/alpha)` above which the asymptotic expansion is attempted.
pub const ASYMPTOTIC_THRESHOLD: f64 = 45.0;
/// Relative accuracy promised by [`ml_eval`].
pub const ML_TOLERANCE: f64 = 1e-12;

const CONTOUR_TARGET: f64 = 1e-15;
const MAX_SERIES_TERMS: usize = 400;
const MAX_ASYMPTOTIC_TERMS: usize = 200;
const ASYMPTOTIC_TOLERANCE: f64 = 2e-16;

/// Reciprocal gamma function, zero at the non-positive integers.
pub fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return 0.0;
    }
    if x > 170.0 {
        return (-libm::lgamma(x)).exp();
    }
    if x < -170.0 {
        // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi, which overflows here
        let (lg, _) = libm::lgamma_r(1.0 - x);
        let s = (std::f64::consts::PI * (x - x.floor())).sin();
        let sign = if (x.floor() as i64) % 2 == 0 { 1.0 } else { -1.0 };
        return sign * s * lg.exp() / std::f64::consts::PI;
    }
    1.0 / libm::tgamma(x)
}

/// Order pair (alpha, rho) restricted to the completely monotone range
/// `0 < alpha <= 1`, `rho >= alpha`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct MLOrder {
    pub alpha: f64,
    pub rho: f64,
}

impl MLOrder {
    pub fn new(alpha: f64, rho: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Domain(format!("alpha = {alpha} outside (0, 1]")));
        }
        if !(rho >= alpha) || !rho.is_finite() {
            return Err(Error::Domain(format!("rho = {rho} must satisfy rho >= alpha = {alpha}")));
        }
        Ok(Self { alpha, rho })
    }
}

/// Evaluator for a fixed order pair with cached series and asymptotic
/// coefficients.
#[derive(Debug, Clone)]
pub struct MittagLeffler {
    alpha: f64,
    rho: f64,
    /// 1 / Gamma(alpha k + rho)
    series: Vec<f64>,
    /// 1 / Gamma(rho - alpha k), k >= 1
    asymptotic: Vec<f64>,
    /// smooth upper bound on |1 / Gamma(rho - alpha k)|
    envelope: Vec<f64>,
}

impl MittagLeffler {
    /// Accepts `0 < alpha <= 2` and `rho > 0`.
    pub fn new(alpha: f64, rho: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 2.0) {
            return Err(Error::Domain(format!("alpha = {alpha} outside (0, 2]")));
        }
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(Error::Domain(format!("rho = {rho} must be positive")));
        }
        let mut series = Vec::new();
        for k in 0..MAX_SERIES_TERMS {
            let c = rgamma(alpha * k as f64 + rho);
            series.push(c);
            if k > 4 && c.abs() < 1e-300 {
                break;
            }
        }
        let asymptotic: Vec<f64> = (1..=MAX_ASYMPTOTIC_TERMS)
            .map(|k| rgamma(rho - alpha * k as f64))
            .collect();
        // |1/Gamma(x)| = |sin(pi x)| Gamma(1 - x) / pi <= Gamma(1 - x) / pi for x < 1
        let envelope = asymptotic
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let x = rho - alpha * (i + 1) as f64;
                let bound = if x < 1.0 {
                    libm::lgamma(1.0 - x).exp() / std::f64::consts::PI
                } else {
                    0.0
                };
                bound.max(c.abs())
            })
            .collect();
        Ok(Self {
            alpha,
            rho,
            series,
            asymptotic,
            envelope,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// E_{alpha,rho}(z) for complex `z`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::Argument(format!("non-finite argument {z}")));
        }
        let r = z.norm();
        let value = if r == 0.0 {
            Complex64::new(self.series[0], 0.0)
        } else if self.alpha == 1.0 && self.rho == 1.0 {
            z.exp()
        } else if r <= SERIES_RADIUS {
            self.eval_series(z)
        } else {
            let attempt = if r.powf(1.0 / self.alpha) >= ASYMPTOTIC_THRESHOLD {
                self.eval_asymptotic(z)
            } else {
                None
            };
            match attempt {
                Some(v) => v,
                None => {
                    let out = contour::evaluate(self.alpha, self.rho, z, CONTOUR_TARGET);
                    if !(out.achieved <= ML_TOLERANCE) || !out.value.re.is_finite() {
                        return Err(Error::Accuracy {
                            achieved: out.achieved,
                        });
                    }
                    out.value
                }
            }
        };
        if z.im == 0.0 {
            Ok(Complex64::new(value.re, 0.0))
        } else {
            Ok(value)
        }
    }

    /// E_{alpha,rho}(x) for real `x`.
    pub fn eval_real(&self, x: f64) -> Result<f64> {
        Ok(self.eval(Complex64::new(x, 0.0))?.re)
    }

    pub(crate) fn eval_series(&self, z: Complex64) -> Complex64 {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut pow = Complex64::new(1.0, 0.0);
        let mut small = 0;
        for (k, &c) in self.series.iter().enumerate() {
            let term = pow * c;
            sum += term;
            if term.norm() <= 1e-17 * sum.norm() && self.alpha * k as f64 + self.rho > 2.0 {
                small += 1;
                if small >= 2 {
                    break;
                }
            } else {
                small = 0;
            }
            pow *= z;
        }
        sum
    }

    /// Pole residues plus the optimally truncated algebraic series, or `None`
    /// if the truncation error cannot reach double precision.
    pub(crate) fn eval_asymptotic(&self, z: Complex64) -> Option<Complex64> {
        use std::f64::consts::PI;
        let alpha = self.alpha;
        let theta = z.arg();
        let modulus = z.norm().powf(1.0 / alpha);

        let mut exponential = Complex64::new(0.0, 0.0);
        let kmin = (-alpha / 2.0 - theta / (2.0 * PI)).ceil() as i64;
        let kmax = (alpha / 2.0 - theta / (2.0 * PI)).floor() as i64;
        for k in kmin..=kmax {
            let arg = (theta + 2.0 * PI * k as f64) / alpha;
            if arg <= -PI || arg > PI {
                continue;
            }
            let s = Complex64::from_polar(modulus, arg);
            exponential += s.powf(1.0 - self.rho) * s.exp() / alpha;
        }

        let zinv = z.inv();
        let mut pow = Complex64::new(1.0, 0.0);
        let mut algebraic = Complex64::new(0.0, 0.0);
        if self.terminates() {
            for &c in &self.asymptotic {
                pow *= zinv;
                algebraic -= pow * c;
            }
            return Some(exponential + algebraic);
        }
        let zabs_inv = zinv.norm();
        let mut scale = 1.0;
        let mut last = f64::INFINITY;
        for (&c, &env) in self.asymptotic.iter().zip(&self.envelope) {
            pow *= zinv;
            scale *= zabs_inv;
            // the envelope bounds |c| smoothly, so accidental near-zeros of
            // 1/Gamma cannot fake convergence
            let bound = env * scale;
            if bound > last {
                return None;
            }
            algebraic -= pow * c;
            if bound <= ASYMPTOTIC_TOLERANCE * (exponential + algebraic).norm() {
                return Some(exponential + algebraic);
            }
            last = bound;
        }
        None
    }

    #[doc(hidden)]
    pub fn eval_series_for_test(&self, z: Complex64) -> Complex64 {
        self.eval_series(z)
    }

    #[doc(hidden)]
    pub fn eval_asymptotic_for_test(&self, z: Complex64) -> Option<Complex64> {
        self.eval_asymptotic(z)
    }

    #[doc(hidden)]
    pub fn eval_contour_for_test(&self, z: Complex64) -> Complex64 {
        contour::evaluate(self.alpha, self.rho, z, CONTOUR_TARGET).value
    }

    /// Integer orders with alpha in {1, 2} have a terminating algebraic part.
    fn terminates(&self) -> bool {
        (self.alpha == 1.0 || self.alpha == 2.0) && self.rho == self.rho.floor()
    }
}

/// E_{alpha,rho}(z) for `0 < alpha <= 2`, `rho > 0`.
pub fn ml_eval(alpha: f64, rho: f64, z: Complex64) -> Result<Complex64> {
    MittagLeffler::new(alpha, rho)?.eval(z)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha <= 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("alpha = {alpha} outside (0, 1]")))
    }
}

/// Survival probability E_{alpha,1}(-t^alpha) of the fractional clock.
pub fn ml_survival(alpha: f64, t: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("t = {t} must be finite and >= 0")));
    }
    if t == 0.0 {
        return Ok(1.0);
    }
    MittagLeffler::new(alpha, 1.0)?.eval_real(-t.powf(alpha))
}

/// Branching density tau^(alpha-1) E_{alpha,alpha}(-tau^alpha).
pub fn branch_density(alpha: f64, tau: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(Error::Domain(format!("tau = {tau} must be finite and > 0")));
    }
    let e = MittagLeffler::new(alpha, alpha)?.eval_real(-tau.powf(alpha))?;
    Ok(tau.powf(alpha - 1.0) * e)
}

/// Integral of the branching density over (0, t], computed in the variable
/// sigma = tau^alpha where the weight tau^(alpha-1) d tau becomes d sigma / alpha
/// and the integrand is entire.
pub fn branch_probability(alpha: f64, t: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("t = {t} must be finite and >= 0")));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let ml = MittagLeffler::new(alpha, alpha)?;
    let upper = t.powf(alpha);
    let rule = crate::quad::GaussLegendre::new(20);
    // panels of unit length in sigma keep the entire integrand well resolved
    let panels = upper.ceil().max(1.0) as usize * 2;
    let width = upper / panels as f64;
    let mut total = 0.0;
    let mut failure = None;
    for p in 0..panels {
        let a = p as f64 * width;
        total += rule.integrate(a, a + width, |s| match ml.eval_real(-s) {
            Ok(v) => v,
            Err(e) => {
                failure = Some(e);
                0.0
            }
        });
    }
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(total / alpha)
}
