use thiserror::Error;

/// Errors raised by the numeric core, the special functions and the
/// coefficient estimators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("value 10^{exponent} overflows the native floating point range")]
    Overflow { exponent: i64 },

    #[error("relative error against zero is undefined")]
    UndefinedComparison,

    #[error("|z| = {modulus} is outside the asymptotic seed regime (|z| > 3)")]
    SeedOutOfRegime { modulus: f64 },

    #[error("iteration did not converge within {iterations} steps (last residual {residual:e})")]
    ConvergenceFailure { iterations: usize, residual: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole of the Gamma function at z = {0}")]
    Pole(f64),

    #[error("quadrature did not converge (estimate {estimate:e}, error bound {error_bound:e})")]
    QuadratureFailure { estimate: f64, error_bound: f64 },

    #[error("saddle point rejected: residual {residual:e} above 1e-10")]
    SaddleRejected { residual: f64 },

    #[error("degenerate phase: |{factor}| = {value:e} is below the 1e-13 noise floor")]
    DegeneratePhase { factor: &'static str, value: f64 },

    #[error("n = {n} outside the supported range {min}..={max} for {method}")]
    OutOfRange { method: &'static str, n: usize, min: usize, max: usize },

    #[error("inconsistent input: {0}")]
    InconsistentInput(String),

    #[error("no reference record for n = {0}")]
    NotFound(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
