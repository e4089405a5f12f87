//! Estimators of the Maclaurin coefficients `aₙ` of `1/Γ(z) = Σ aₙ zⁿ`.
//!
//! Three methods are exact up to floating point error (`bourguet`,
//! `integral`, `cauchy`); `saddle` and `hayman` are leading-order
//! asymptotics and `rough` is the crude growth law. Every value comes back
//! as a [`Scaled`] so magnitudes far below the native range are fine.

mod bn;
mod bourguet;
mod cauchy;
mod hayman;
mod integral;
mod rough;
mod saddle;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::real::Real;
use crate::scaled::Scaled;

pub use bn::b_sequence;
pub use bourguet::{bourguet_coefficient, bourguet_sequence, BOURGUET_MAX_N};
pub use cauchy::{cauchy_coefficient, hayman_radius};
pub use hayman::hayman_coefficient;
pub use integral::{integral_coefficient, INTEGRAL_MAX_N};
pub use rough::{rough_coefficient, rough_coefficient_literal, rough_exponent, RoughExponent};
pub use saddle::{saddle_coefficient, solve_saddle, SaddlePoint};

/// Euler's constant γ = a₂.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Noise floor below which a sine or cosine phase factor is not trusted.
pub const PHASE_FLOOR: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Bourguet,
    Cauchy,
    Integral,
    Saddle,
    Hayman,
    Rough,
}

impl Method {
    pub const ALL: [Method; 6] =
        [Method::Bourguet, Method::Cauchy, Method::Integral, Method::Saddle, Method::Hayman, Method::Rough];

    pub fn name(self) -> &'static str {
        match self {
            Method::Bourguet => "bourguet",
            Method::Cauchy => "cauchy",
            Method::Integral => "integral",
            Method::Saddle => "saddle",
            Method::Hayman => "hayman",
            Method::Rough => "rough",
        }
    }

    /// Smallest and largest `n` the method accepts.
    pub fn domain(self) -> (usize, usize) {
        match self {
            Method::Bourguet => (1, BOURGUET_MAX_N),
            Method::Integral => (1, INTEGRAL_MAX_N),
            Method::Cauchy => (1, usize::MAX),
            Method::Saddle | Method::Hayman => (2, usize::MAX),
            Method::Rough => (3, usize::MAX),
        }
    }

    pub fn check_domain(self, n: usize) -> Result<()> {
        let (min, max) = self.domain();
        if n < min || n > max {
            return Err(Error::OutOfRange { method: self.name(), n, min, max });
        }
        Ok(())
    }

    /// Dispatch to the estimator for this method.
    pub fn estimate<T: Real>(self, n: usize, cfg: &MethodConfig) -> Result<CoefficientEstimate<T>> {
        match self {
            Method::Bourguet => bourguet_coefficient(n),
            Method::Cauchy => cauchy_coefficient(n, cfg),
            Method::Integral => integral_coefficient(n, cfg),
            Method::Saddle => saddle_coefficient(n, cfg),
            Method::Hayman => hayman_coefficient(n, cfg),
            Method::Rough => rough_coefficient(n),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown method {s:?}")))
    }
}

/// Phase approximation in the Hayman estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PhaseVariant {
    /// `(n − ½)(sin²θ/θ − θ) + θ/(12(n − ½))`
    #[default]
    Bornemann,
    /// `(n − ½)(sin²θ/θ − θ)`
    Hayman,
}

impl FromStr for PhaseVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bornemann" => Ok(PhaseVariant::Bornemann),
            "hayman" => Ok(PhaseVariant::Hayman),
            _ => Err(Error::InvalidInput(format!("unknown phase variant {s:?}"))),
        }
    }
}

/// Integration path for the integral representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntegralPath {
    /// Starts at `u = iπ`, where `(u − iπ)ⁿ` vanishes, and bends down to the
    /// real axis. Keeps full accuracy up to `n = 40`.
    #[default]
    Deformed,
    /// The real `u` axis. Cancellation costs about `n/2` digits, so this is
    /// only good for small `n`.
    RealAxis,
}

/// Tunables shared by the estimators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodConfig {
    /// Initial trapezoid step of the integral method.
    pub quad_step: f64,
    /// Relative change at which step halving or node doubling stops.
    pub quad_rel_tol: f64,
    /// Contour radius of the Cauchy method; `None` picks the Hayman radius.
    pub contour_radius: Option<f64>,
    /// Fixed node count for the Cauchy method; `None` doubles until converged.
    pub contour_nodes: Option<usize>,
    /// Residual tolerance of the Lambert W solves.
    pub w_tol: f64,
    pub phase_variant: PhaseVariant,
    pub integral_path: IntegralPath,
}

impl Default for MethodConfig {
    fn default() -> Self {
        MethodConfig {
            quad_step: 0.05,
            quad_rel_tol: 1e-10,
            contour_radius: None,
            contour_nodes: None,
            w_tol: 1e-13,
            phase_variant: PhaseVariant::Bornemann,
            integral_path: IntegralPath::Deformed,
        }
    }
}

impl MethodConfig {
    pub fn validate(&self) -> Result<()> {
        let tol_ok = |t: f64| t > 0.0 && t <= 1e-3;
        if !(self.quad_step > 0.0 && self.quad_step.is_finite()) {
            return Err(Error::InvalidInput(format!("quad_step must be positive, got {}", self.quad_step)));
        }
        if !tol_ok(self.quad_rel_tol) {
            return Err(Error::InvalidInput(format!("quad_rel_tol must lie in (0, 1e-3], got {}", self.quad_rel_tol)));
        }
        if !tol_ok(self.w_tol) {
            return Err(Error::InvalidInput(format!("w_tol must lie in (0, 1e-3], got {}", self.w_tol)));
        }
        if let Some(r) = self.contour_radius {
            if !(r > 0.0 && r.is_finite()) {
                return Err(Error::InvalidInput(format!("contour radius must be positive, got {r}")));
            }
        }
        if let Some(m) = self.contour_nodes {
            if m < 16 {
                return Err(Error::InvalidInput(format!("contour nodes must be at least 16, got {m}")));
            }
        }
        Ok(())
    }
}

/// Side information attached to an estimate. Unused fields stay `None`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub saddle_residual: Option<f64>,
    pub nodes: Option<usize>,
    pub estimated_error: Option<f64>,
    pub phase_variant: Option<PhaseVariant>,
    pub radius: Option<f64>,
    /// Growth exponent with `+n ln ln n`.
    pub corrected_exponent: Option<f64>,
    /// Growth exponent with `−n ln ln n`.
    pub literal_exponent: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientEstimate<T> {
    pub n: usize,
    pub value: Scaled<T>,
    pub method: Method,
    pub diagnostics: Diagnostics,
}

/// `(−1)ⁿ`
pub(crate) fn alternating(n: usize) -> i8 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of a nonzero float as `±1`.
pub(crate) fn sign_of<T: Real>(x: T) -> i8 {
    if x < T::zero() {
        -1
    } else {
        1
    }
}

/// Working tolerance: the requested one, but never finer than the scalar
/// type can deliver.
pub(crate) fn attainable<T: Real>(tol: f64) -> T {
    T::lit(tol).max(T::epsilon() * T::lit(64.0))
}
