use thiserror::Error;

/// Errors raised by the solver library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A non-finite or otherwise malformed argument.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A parameter outside its admissible range.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested accuracy could not be reached.
    #[error("accuracy target not reached (achieved bound {achieved:e})")]
    Accuracy { achieved: f64 },

    /// The spectral table failed its forward-transform gate.
    #[error("spectral table construction failed: max relative residual {residual:e}")]
    SpectralConstruction { residual: f64 },

    /// A tabulated kernel violated one of the Green's-function conditions.
    #[error("kernel validation failed on condition {condition}: {detail}")]
    KernelValidation { condition: &'static str, detail: String },

    /// Initial data exceeds the unit bound and no override was given.
    #[error("initial condition bound violated: sup|u0| = {sup} > 1 (set the override to proceed)")]
    BoundViolation { sup: f64 },

    /// A branching tree exceeded the configured depth guard.
    #[error("runaway branching tree: depth exceeded {max_depth}")]
    RunawayTree { max_depth: usize },

    /// Picard iteration failed to converge.
    #[error("Picard iteration did not converge after {iterations} iterations (last sup change {last_change:e})")]
    Divergence {
        iterations: usize,
        last_change: f64,
        history: Vec<f64>,
    },

    /// Periodic domain too narrow for the kernel tails.
    #[error("domain too small: estimated kernel mass leak {leak:e} exceeds {limit:e}")]
    DomainTooSmall { leak: f64, limit: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
