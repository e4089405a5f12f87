//! Maclaurin coefficients of the reciprocal Gamma function.
//!
//! `1/Γ(z) = Σ_{n≥1} aₙ zⁿ` is entire and its coefficients fall off faster
//! than any geometric sequence (`a₁₄₀₀ ≈ −6.08·10⁻²⁷⁹²`). The crate computes
//! them by recursion, by quadrature and by saddle-point asymptotics, and
//! carries every result as a sign/mantissa/decimal-exponent triple so the
//! tiny values stay representable.
//!
//! Algorithms are generic over the floating point type through [`Real`];
//! the aliases below fix it to `f64`.

pub mod error;
pub mod methods;
pub mod real;
pub mod reference;
pub mod scaled;
pub mod special;

pub use error::{Error, Result};
pub use methods::{CoefficientEstimate, Diagnostics, Method, MethodConfig, PhaseVariant};
pub use real::Real;
pub use scaled::Scaled;

pub type ScaledReal = Scaled<f64>;
pub type ComplexValue = num_complex::Complex<f64>;
pub type Estimate = CoefficientEstimate<f64>;
