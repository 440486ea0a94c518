//! Piecewise Chebyshev interpolation of u -> E_{alpha,rho}(z0 + dz u) on a
//! segment, for bulk evaluation along one ray of the complex plane.

use super::MittagLeffler;
use crate::error::Result;
use num_complex::Complex64;
use std::f64::consts::PI;

const DEGREE: usize = 24;
const TOLERANCE: f64 = 1e-15;
const MAX_DEPTH: usize = 40;

#[derive(Debug, Clone)]
struct Piece {
    a: f64,
    b: f64,
    coeffs: Vec<Complex64>,
}

#[derive(Debug, Clone)]
pub struct RayInterpolant {
    pieces: Vec<Piece>,
}

fn chebyshev_coeffs(values: &[Complex64]) -> Vec<Complex64> {
    // values at the extrema x_j = cos(pi j / n), j = 0..=n
    let n = values.len() - 1;
    let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
    for (k, ck) in c.iter_mut().enumerate() {
        let mut s = Complex64::new(0.0, 0.0);
        for (j, v) in values.iter().enumerate() {
            let w = if j == 0 || j == n { 0.5 } else { 1.0 };
            s += v * (w * (PI * (j * k) as f64 / n as f64).cos());
        }
        let scale = if k == 0 || k == n { 1.0 } else { 2.0 };
        *ck = s * (scale / n as f64);
    }
    c
}

impl RayInterpolant {
    /// Interpolates E(z0 + dz u) for u in [0, u_max] with absolute accuracy
    /// about 1e-15 times the largest sampled magnitude.
    pub fn new(ml: &MittagLeffler, z0: Complex64, dz: Complex64, u_max: f64) -> Result<Self> {
        let f = |u: f64| ml.eval(z0 + dz * u);
        let scale = f(0.0)?.norm().max(f(u_max)?.norm());
        let mut pieces = Vec::new();
        let mut todo = vec![(0.0, u_max.max(f64::MIN_POSITIVE), 0usize)];
        while let Some((a, b, depth)) = todo.pop() {
            let mut values = Vec::with_capacity(DEGREE + 1);
            for j in 0..=DEGREE {
                let x = (PI * j as f64 / DEGREE as f64).cos();
                values.push(f(0.5 * (a + b) + 0.5 * (b - a) * x)?);
            }
            let local = values.iter().fold(scale, |m, v| m.max(v.norm()));
            let coeffs = chebyshev_coeffs(&values);
            let tail = coeffs[DEGREE - 2..].iter().map(|c| c.norm()).fold(0.0, f64::max);
            if tail <= TOLERANCE * local || depth >= MAX_DEPTH {
                pieces.push(Piece { a, b, coeffs });
            } else {
                let m = 0.5 * (a + b);
                todo.push((m, b, depth + 1));
                todo.push((a, m, depth + 1));
            }
        }
        pieces.sort_by(|p, q| p.a.total_cmp(&q.a));
        Ok(Self { pieces })
    }

    pub fn eval(&self, u: f64) -> Complex64 {
        let i = self
            .pieces
            .partition_point(|p| p.b < u)
            .min(self.pieces.len() - 1);
        let p = &self.pieces[i];
        let x = ((2.0 * u - p.a - p.b) / (p.b - p.a)).clamp(-1.0, 1.0);
        // Clenshaw recurrence
        let mut b1 = Complex64::new(0.0, 0.0);
        let mut b2 = Complex64::new(0.0, 0.0);
        for c in p.coeffs.iter().skip(1).rev() {
            let b0 = c + b1 * (2.0 * x) - b2;
            b2 = b1;
            b1 = b0;
        }
        p.coeffs[0] + b1 * x - b2
    }

    pub fn pieces(&self) -> usize {
        self.pieces.len()
    }
}
