//! Mittag-Leffler evaluation by numerical inversion of the Laplace transform
//! s^(alpha - rho) / (s^alpha - z) along an optimal parabolic contour, with
//! the residues of poles lying outside the contour added back.
//!
//! Contour parameters follow the error-balancing rules of Garrappa (2015) for
//! the two-parameter case.

use num_complex::Complex64;
use std::f64::consts::PI;

const LOG_MACHINE_EPS: f64 = -36.043_653_389_117_154;

pub(super) struct ContourResult {
    pub value: Complex64,
    /// Tolerance actually used after any relaxation.
    pub achieved: f64,
}

pub(super) fn evaluate(alpha: f64, rho: f64, z: Complex64, target: f64) -> ContourResult {
    let mut log_eps = target.ln();
    let theta = z.arg();
    let az = z.norm();

    // poles s* = |z|^(1/alpha) exp(i (theta + 2 pi k) / alpha)
    let kmin = (-alpha / 2.0 - theta / (2.0 * PI)).ceil() as i64;
    let kmax = (alpha / 2.0 - theta / (2.0 * PI)).floor() as i64;
    let modulus = az.powf(1.0 / alpha);
    let mut poles: Vec<(f64, Complex64)> = (kmin..=kmax)
        .map(|k| {
            let s = Complex64::from_polar(modulus, (theta + 2.0 * PI * k as f64) / alpha);
            ((s.re + s.norm()) / 2.0, s)
        })
        .filter(|(phi, _)| *phi > 1.0e-15)
        .collect();
    poles.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut s_star = vec![Complex64::new(0.0, 0.0)];
    let mut phi = vec![0.0];
    for (p, s) in &poles {
        s_star.push(*s);
        phi.push(*p);
    }
    let j1 = s_star.len();
    let mut p = vec![(-2.0 * (alpha - rho + 1.0)).max(0.0)];
    p.extend(std::iter::repeat_n(1.0, j1 - 1));
    let mut q: Vec<f64> = std::iter::repeat_n(1.0, j1 - 1).collect();
    q.push(f64::INFINITY);
    phi.push(f64::INFINITY);

    let admissible = |log_eps: f64| -> Vec<usize> {
        (0..j1)
            .filter(|&j| phi[j] < (log_eps - LOG_MACHINE_EPS) && phi[j] < phi[j + 1])
            .collect()
    };

    let (mu, h, n, region) = loop {
        let regions = admissible(log_eps);
        let mut best: Option<(f64, f64, f64, usize)> = None;
        for &j in &regions {
            let (mu, h, n) = if j + 1 < j1 {
                optimal_param_bounded(phi[j], phi[j + 1], p[j], q[j], log_eps)
            } else {
                optimal_param_unbounded(phi[j], p[j], log_eps)
            };
            if best.is_none_or(|b| n < b.2) {
                best = Some((mu, h, n, j));
            }
        }
        match best {
            Some(b) if b.2 <= 200.0 => break b,
            _ => {
                log_eps += 10f64.ln();
                if log_eps > 0.0 {
                    return ContourResult {
                        value: Complex64::new(f64::NAN, f64::NAN),
                        achieved: f64::INFINITY,
                    };
                }
            }
        }
    };

    let n = n as i64;
    let mut sum = Complex64::new(0.0, 0.0);
    let i = Complex64::i();
    for k in -n..=n {
        let u = h * k as f64;
        let w = Complex64::new(1.0, u);
        let s = mu * w * w;
        let ds = Complex64::new(-2.0 * mu * u, 2.0 * mu);
        let f = s.powf(alpha - rho) / (s.powf(alpha) - z) * ds;
        sum += s.exp() * f;
    }
    let integral = sum * h / (2.0 * PI * i);

    let residues: Complex64 = s_star[region + 1..]
        .iter()
        .map(|&s| s.powf(1.0 - rho) * s.exp() / alpha)
        .sum();

    ContourResult {
        value: integral + residues,
        achieved: log_eps.exp(),
    }
}

/// Parameters for a region bounded on both sides by singularities.
fn optimal_param_bounded(
    phi_j: f64,
    phi_j1: f64,
    pj: f64,
    qj: f64,
    log_eps: f64,
) -> (f64, f64, f64) {
    let fac = 1.01;
    let f_max = (log_eps - LOG_MACHINE_EPS).exp();
    let sq_phi_j = phi_j.sqrt();
    let threshold = 2.0 * (log_eps - LOG_MACHINE_EPS).sqrt();
    let sq_phi_j1 = phi_j1.sqrt().min(threshold - sq_phi_j);

    let mut f_bar = 1.0;
    let (sq_bar_j, sq_bar_j1) = if pj < 1.0e-14 && qj < 1.0e-14 {
        (sq_phi_j, sq_phi_j1)
    } else if pj < 1.0e-14 {
        let f_min = if sq_phi_j > 0.0 {
            fac * (sq_phi_j / (sq_phi_j1 - sq_phi_j)).powf(qj)
        } else {
            fac
        };
        if f_min >= f_max {
            return (0.0, 0.0, f64::INFINITY);
        }
        f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fq = f_bar.powf(-1.0 / qj);
        (sq_phi_j, (2.0 * sq_phi_j1 - fq * sq_phi_j) / (2.0 + fq))
    } else if qj < 1.0e-14 {
        let f_min = fac * (sq_phi_j1 / (sq_phi_j1 - sq_phi_j)).powf(pj);
        if f_min >= f_max {
            return (0.0, 0.0, f64::INFINITY);
        }
        f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fp = f_bar.powf(-1.0 / pj);
        ((2.0 * sq_phi_j + fp * sq_phi_j1) / (2.0 - fp), sq_phi_j1)
    } else {
        let f_min = fac * (sq_phi_j + sq_phi_j1) / (sq_phi_j1 - sq_phi_j).powf(pj.max(qj));
        if f_min >= f_max {
            return (0.0, 0.0, f64::INFINITY);
        }
        let f_min = f_min.max(1.5);
        f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fp = f_bar.powf(-1.0 / pj);
        let fq = f_bar.powf(-1.0 / qj);
        let w = -phi_j1 / log_eps;
        let den = 2.0 + w - (1.0 + w) * fp + fq;
        (
            ((2.0 + w + fq) * sq_phi_j + fp * sq_phi_j1) / den,
            (-(1.0 + w) * fq * sq_phi_j + (2.0 + w - (1.0 + w) * fp) * sq_phi_j1) / den,
        )
    };

    let log_eps = log_eps - f_bar.ln();
    let w = -sq_bar_j1 * sq_bar_j1 / log_eps;
    let mu = (((1.0 + w) * sq_bar_j + sq_bar_j1) / (2.0 + w)).powi(2);
    let h = -2.0 * PI / log_eps * (sq_bar_j1 - sq_bar_j) / ((1.0 + w) * sq_bar_j + sq_bar_j1);
    let n = ((1.0 - log_eps / mu).sqrt() / h).ceil();
    (mu, h, n)
}

/// Parameters for the last (unbounded) region.
fn optimal_param_unbounded(phi_j: f64, pj: f64, log_eps: f64) -> (f64, f64, f64) {
    let sq_phi_j = phi_j.sqrt();
    let mut phibar = if phi_j > 0.0 { phi_j * 1.01 } else { 0.01 };
    let mut sq_phibar = phibar.sqrt();

    let (f_min, f_max, f_tar) = (1.0, 10.0, 5.0_f64);
    let (mut n, mut a, mut sq_mu);
    loop {
        let phi_t = phibar;
        let log_eps_phi_t = log_eps / phi_t;
        n = (phi_t / PI * (1.0 - 3.0 * log_eps_phi_t / 2.0 + (1.0 - 2.0 * log_eps_phi_t).sqrt()))
            .ceil();
        a = PI * n / phi_t;
        sq_mu = sq_phibar * (4.0 - a).abs() / (7.0 - (1.0 + 12.0 * a).sqrt()).abs();
        let fbar = ((sq_phibar - sq_phi_j) / sq_mu).powf(-pj);
        if pj < 1.0e-14 || (f_min < fbar && fbar < f_max) {
            break;
        }
        sq_phibar = f_tar.powf(-1.0 / pj) * sq_mu + sq_phi_j;
        phibar = sq_phibar * sq_phibar;
    }
    let mut mu = sq_mu * sq_mu;
    let mut h = (-3.0 * a - 2.0 + 2.0 * (1.0 + 12.0 * a).sqrt()) / (4.0 - a) / n;

    // keep round-off under control
    let threshold = log_eps - LOG_MACHINE_EPS;
    if mu > threshold {
        let q = if pj.abs() < 1.0e-14 {
            0.0
        } else {
            f_tar.powf(-1.0 / pj) * mu.sqrt()
        };
        let phibar = (q + phi_j.sqrt()).powi(2);
        if phibar < threshold {
            let w = (LOG_MACHINE_EPS / (LOG_MACHINE_EPS - log_eps)).sqrt();
            let u = (-phibar / LOG_MACHINE_EPS).sqrt();
            mu = threshold;
            n = (w * log_eps / 2.0 / PI / (u * w - 1.0)).ceil();
            h = (LOG_MACHINE_EPS / (LOG_MACHINE_EPS - log_eps)).sqrt() / n;
        } else {
            n = f64::INFINITY;
            h = 0.0;
        }
    }
    (mu, h, n)
}
