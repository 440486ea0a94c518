//! Random variates of the branching process: fractional branching clocks,
//! Feller-parameterized stable displacements and subordinated kernel
//! displacements.

pub mod ks;

use crate::error::{Error, Result};
use crate::kernels::{FracParams, KernelId, KernelRho, KernelTable};
use crate::ml::spectral::shared_table;
use crate::ml::{MLOrder, MittagLeffler, SpectralTable};
use parking_lot::Mutex;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};
use ks::{ks_one_sample, KsResult};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock};

/// Counter-based substream: a ChaCha8 generator keyed by the master seed and
/// positioned on stream `stream_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngStream {
    pub master_seed: u64,
    pub stream_index: u64,
}

pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl RngStream {
    pub fn new(master_seed: u64, stream_index: u64) -> Self {
        Self {
            master_seed,
            stream_index,
        }
    }

    /// Fresh generator at the start of this stream.
    pub fn rng(&self) -> ChaCha8Rng {
        use rand::SeedableRng;
        let mut key = [0u8; 32];
        for (i, chunk) in key.chunks_mut(8).enumerate() {
            chunk.copy_from_slice(&splitmix64(self.master_seed.wrapping_add(i as u64)).to_le_bytes());
        }
        let mut rng = ChaCha8Rng::from_seed(key);
        rng.set_stream(self.stream_index);
        rng
    }

    /// Deterministic child stream number `which`.
    pub fn child(&self, which: u64) -> Self {
        let h = splitmix64(self.stream_index);
        Self {
            master_seed: self.master_seed,
            stream_index: splitmix64(h ^ which.wrapping_add(1)),
        }
    }
}

/// Result of running a fractional clock against a horizon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BranchOutcome {
    Survive,
    BranchAt(f64),
}

/// Open-interval uniform variate.
fn open01<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    loop {
        let u: f64 = rng.random();
        if u > 0.0 {
            return u;
        }
    }
}

/// Inverse-survival sampler for the clock with survival E_{alpha,1}(-t^alpha).
///
/// S is tabulated with its derivative on a uniform grid in ln t and
/// interpolated by cubic Hermite polynomials; arguments outside the table are
/// evaluated directly.
#[derive(Debug)]
pub struct BranchClock {
    alpha: f64,
    y0: f64,
    dy: f64,
    surv: Vec<f64>,
    slope: Vec<f64>,
    ml1: MittagLeffler,
    mla: MittagLeffler,
}

const CLOCK_STEP: f64 = 0.005;
const CLOCK_SMALL: f64 = 1e-4;
const CLOCK_LARGE: f64 = 1e3;

impl BranchClock {
    pub fn new(alpha: f64) -> Result<Self> {
        MLOrder::new(alpha, 1.0)?;
        let ml1 = MittagLeffler::new(alpha, 1.0)?;
        let mla = MittagLeffler::new(alpha, alpha)?;
        let mut clock = Self {
            alpha,
            y0: 0.0,
            dy: CLOCK_STEP,
            surv: vec![],
            slope: vec![],
            ml1,
            mla,
        };
        if alpha < 1.0 {
            // from t^alpha = CLOCK_SMALL up to t = CLOCK_LARGE
            let y0 = CLOCK_SMALL.ln() / alpha;
            let n = ((CLOCK_LARGE.ln() - y0) / CLOCK_STEP).ceil() as usize + 1;
            clock.y0 = y0;
            for i in 0..n {
                let t = (y0 + i as f64 * CLOCK_STEP).exp();
                let (s, d) = clock.exact(t)?;
                clock.surv.push(s);
                clock.slope.push(d * t);
            }
        }
        Ok(clock)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Survival and its t-derivative, -t^(alpha-1) E_{alpha,alpha}(-t^alpha).
    fn exact(&self, t: f64) -> Result<(f64, f64)> {
        let s = t.powf(self.alpha);
        let surv = self.ml1.eval_real(-s)?;
        let dens = s / t * self.mla.eval_real(-s)?;
        Ok((surv, -dens))
    }

    fn in_table(&self, y: f64) -> Option<(usize, f64)> {
        if self.surv.is_empty() {
            return None;
        }
        let pos = (y - self.y0) / self.dy;
        if pos < 0.0 || pos >= (self.surv.len() - 1) as f64 {
            return None;
        }
        let j = pos.floor() as usize;
        Some((j, pos - j as f64))
    }

    fn hermite(&self, j: usize, u: f64) -> (f64, f64) {
        let (f0, f1) = (self.surv[j], self.surv[j + 1]);
        let (d0, d1) = (self.slope[j] * self.dy, self.slope[j + 1] * self.dy);
        let u2 = u * u;
        let u3 = u2 * u;
        let v = (2.0 * u3 - 3.0 * u2 + 1.0) * f0
            + (u3 - 2.0 * u2 + u) * d0
            + (-2.0 * u3 + 3.0 * u2) * f1
            + (u3 - u2) * d1;
        let dv = (6.0 * u2 - 6.0 * u) * f0
            + (3.0 * u2 - 4.0 * u + 1.0) * d0
            + (-6.0 * u2 + 6.0 * u) * f1
            + (3.0 * u2 - 2.0 * u) * d1;
        (v, dv)
    }

    /// Survival probability P(T > t).
    pub fn survival(&self, t: f64) -> Result<f64> {
        if t <= 0.0 {
            return Ok(1.0);
        }
        if self.alpha == 1.0 {
            return Ok((-t).exp());
        }
        match self.in_table(t.ln()) {
            Some((j, u)) => Ok(self.hermite(j, u).0),
            None => Ok(self.exact(t)?.0),
        }
    }

    /// Solves S(t) = v for t by safeguarded Newton on exact values.
    fn invert_exact(&self, v: f64, mut lo: f64, mut hi: f64) -> Result<f64> {
        let mut t = (lo * hi).sqrt();
        for _ in 0..200 {
            let (s, d) = self.exact(t)?;
            if s > v {
                lo = t;
            } else {
                hi = t;
            }
            let mut next = t - (s - v) / d;
            if !(next > lo && next < hi) {
                next = (lo * hi).sqrt();
            }
            if (next - t).abs() <= 1e-14 * t {
                return Ok(next);
            }
            t = next;
        }
        Ok(t)
    }

    /// Draws the clock against horizon `h`.
    pub fn sample<R: Rng + ?Sized>(&self, h: f64, rng: &mut R) -> Result<BranchOutcome> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::Domain(format!("horizon h = {h} must be positive")));
        }
        let v = open01(rng);
        if self.alpha == 1.0 {
            let t = -v.ln();
            return Ok(if t >= h {
                BranchOutcome::Survive
            } else {
                BranchOutcome::BranchAt(t)
            });
        }
        if v <= self.survival(h)? {
            return Ok(BranchOutcome::Survive);
        }
        let n = self.surv.len();
        let tau = if v > self.surv[0] {
            self.invert_exact(v, 0.0f64.max(1e-300), (self.y0).exp().min(h))?
        } else if v < self.surv[n - 1] {
            self.invert_exact(v, CLOCK_LARGE, h)?
        } else {
            // surv is decreasing: first index with surv <= v
            let j = self.surv.partition_point(|&s| s > v).clamp(1, n - 1) - 1;
            let (mut lo, mut hi) = (0.0, 1.0);
            let mut u = 0.5;
            for _ in 0..100 {
                let (f, d) = self.hermite(j, u);
                if f > v {
                    lo = u;
                } else {
                    hi = u;
                }
                let mut next = u - (f - v) / d;
                if !(next > lo && next < hi) {
                    next = 0.5 * (lo + hi);
                }
                if (next - u).abs() <= 1e-15 {
                    u = next;
                    break;
                }
                u = next;
            }
            (self.y0 + (j as f64 + u) * self.dy).exp()
        };
        // rounding may put the draw on the horizon itself
        Ok(if tau > 0.0 && tau < h {
            BranchOutcome::BranchAt(tau)
        } else {
            BranchOutcome::Survive
        })
    }
}

fn clock_cache() -> &'static Mutex<HashMap<u64, Arc<BranchClock>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<BranchClock>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Process-wide clock for `alpha`, built once.
pub fn shared_clock(alpha: f64) -> Result<Arc<BranchClock>> {
    let mut guard = clock_cache().lock();
    if let Some(c) = guard.get(&alpha.to_bits()) {
        return Ok(c.clone());
    }
    let clock = Arc::new(BranchClock::new(alpha)?);
    guard.insert(alpha.to_bits(), clock.clone());
    Ok(clock)
}

/// Survive with probability E_{alpha,1}(-h^alpha), otherwise a branching
/// delay in (0, h) with density tau^(alpha-1) E_{alpha,alpha}(-tau^alpha).
pub fn sample_branch_time<R: Rng + ?Sized>(alpha: f64, h: f64, rng: &mut R) -> Result<BranchOutcome> {
    shared_clock(alpha)?.sample(h, rng)
}

/// Standard variate Y with E exp(ikY) = exp(-psi(k)), psi the Riesz–Feller
/// symbol, via the Chambers–Mallows–Stuck transformation.
///
/// With V uniform on (-pi/2, pi/2) and W standard exponential,
/// Y = sin(beta V - theta pi/2) / cos(V)^(1/beta)
///     * (cos((1 - beta) V + theta pi/2) / W)^((1 - beta)/beta).
pub fn standard_feller<R: Rng + ?Sized>(beta: f64, theta: f64, rng: &mut R) -> f64 {
    if beta == 2.0 {
        let z: f64 = StandardNormal.sample(rng);
        return std::f64::consts::SQRT_2 * z;
    }
    let v = PI * (open01(rng) - 0.5);
    let w: f64 = Exp1.sample(rng);
    let shift = theta * PI / 2.0;
    let lead = (beta * v - shift).sin() / v.cos().powf(1.0 / beta);
    if beta == 1.0 {
        return lead;
    }
    let inner = ((1.0 - beta) * v + shift).cos().max(0.0) / w;
    lead * inner.powf((1.0 - beta) / beta)
}

/// Displacement with characteristic function exp(-lam psi(k)).
pub fn sample_stable_feller<R: Rng + ?Sized>(beta: f64, theta: f64, lam: f64, rng: &mut R) -> f64 {
    lam.powf(1.0 / beta) * standard_feller(beta, theta, rng)
}

/// Subordinated sampler for the two kernels of one parameter set.
#[derive(Debug, Clone)]
pub struct KernelSampler {
    params: FracParams,
    one: Arc<SpectralTable>,
    alpha: Arc<SpectralTable>,
}

impl KernelSampler {
    pub fn new(params: FracParams) -> Result<Self> {
        params.validate()?;
        let one = shared_table(MLOrder::new(params.alpha, 1.0)?)?;
        let alpha = shared_table(MLOrder::new(params.alpha, params.alpha)?)?;
        Ok(Self { params, one, alpha })
    }

    pub fn params(&self) -> FracParams {
        self.params
    }

    /// Draws from G_{alpha,rho}(t, .): r from the spectral law tilted by
    /// exp(-r t^alpha), then a stable step with intensity r t^alpha / 2.
    pub fn sample<R: Rng + ?Sized>(&self, rho: KernelRho, t: f64, rng: &mut R) -> f64 {
        if t <= 0.0 {
            return 0.0;
        }
        let s = t.powf(self.params.alpha);
        let table = match rho {
            KernelRho::One => &self.one,
            KernelRho::Alpha => &self.alpha,
        };
        let r = table.sample_tilted(s, rng);
        sample_stable_feller(self.params.beta, self.params.theta, 0.5 * r * s, rng)
    }
}

/// One draw from the kernel `id`.
pub fn sample_kernel_displacement<R: Rng + ?Sized>(id: &KernelId, rng: &mut R) -> Result<f64> {
    Ok(KernelSampler::new(id.params)?.sample(id.rho, id.t, rng))
}

/// One-sample KS test of `draws` against the wrapped law of `table`; each
/// draw first receives the table's Gaussian smoothing (noise from `stream`)
/// and is wrapped onto its period.
pub fn ks_against_table(draws: &[f64], table: &KernelTable, stream: RngStream) -> KsResult {
    let mut rng = stream.rng();
    let ys: Vec<f64> = draws
        .iter()
        .map(|&x| {
            let z: f64 = StandardNormal.sample(&mut rng);
            table.wrap(x + table.smoothing * z)
        })
        .collect();
    ks_one_sample(&ys, |x| table.cdf_at(x))
}
