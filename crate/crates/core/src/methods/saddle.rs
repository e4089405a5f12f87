//! Saddle-point asymptotics of `I(n) = ∫₀^∞ e^{−t}(log t − iπ)ⁿ dt`.
//!
//! After `t = nz` the exponent is `n·f(z)` with
//! `f(z) = −z + log(log(nz) − iπ)`. The saddle solves
//! `z·(log(nz) − iπ) = 1`, i.e. `z₀ = −e^{w}/n` with `w = W₋₁(−n)` taken on
//! the cut closed on top. At the saddle `f(z₀) = −z₀ − log z₀` and
//! `f″(z₀) = −1 − 1/z₀`, which gives
//!
//! `I(n) ≈ √(2πn)·e^{−nz₀}·z₀^{½−n}/√(1 + z₀)` and
//! `aₙ ≈ (−1)ⁿ Im I(n) / (π·n!)`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::methods::{
    alternating, attainable, sign_of, CoefficientEstimate, Diagnostics, Method, MethodConfig, PHASE_FLOOR,
};
use crate::real::Real;
use crate::scaled::Scaled;
use crate::special::{lambert_w_lower_cut, log_factorial, Branch};

/// Largest accepted `|z₀(log(nz₀) − iπ) − 1|`.
const RESIDUAL_BOUND: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SaddlePoint<T> {
    pub n: usize,
    pub z0: Complex<T>,
    /// `−z₀ − log z₀`
    pub f_at_z0: Complex<T>,
    /// `|z₀(log(nz₀) − iπ) − 1|`
    pub residual: T,
}

impl<T: Real> SaddlePoint<T> {
    /// `log(nz₀) − iπ`
    fn shifted_log(&self) -> Complex<T> {
        (self.z0 * T::from_usize_lossy(self.n)).ln() - Complex::new(T::zero(), T::PI())
    }

    /// `f(z₀)` from the definition `−z + log(log(nz) − iπ)`.
    pub fn f_direct(&self) -> Complex<T> {
        -self.z0 + self.shifted_log().ln()
    }

    /// `f″(z₀) = −1 − 1/z₀`
    pub fn second_derivative(&self) -> Complex<T> {
        -self.z0.inv() - T::one()
    }

    /// `f″(z₀)` from `−1/(z²L) − 1/(z²L²)`, `L = log(nz) − iπ`.
    pub fn second_derivative_direct(&self) -> Complex<T> {
        let l = self.shifted_log();
        let z2 = self.z0 * self.z0;
        -(z2 * l).inv() - (z2 * l * l).inv()
    }

    /// `log I(n) = n·f(z₀) + ½[log(2πn) + log z₀ − log(1 + z₀)]`
    pub fn log_integral(&self) -> Complex<T> {
        let n = T::from_usize_lossy(self.n);
        let two_pi_n = T::PI() * T::lit(2.0) * n;
        let half = T::lit(0.5);
        self.f_at_z0 * n + (self.z0.ln() - (self.z0 + T::one()).ln() + two_pi_n.ln()) * half
    }
}

/// Saddle point of the integrand of `I(n)`, `n ≥ 2`.
///
/// The residual is recomputed from the saddle equation instead of relying
/// on the branch label of the W solve.
pub fn solve_saddle<T: Real>(n: usize, w_tol: f64) -> Result<SaddlePoint<T>> {
    if n < 2 {
        return Err(Error::OutOfRange { method: "saddle", n, min: 2, max: usize::MAX });
    }
    let nt = T::from_usize_lossy(n);
    let w = lambert_w_lower_cut(Branch::LOWER, -nt, attainable(w_tol))?;
    let z0 = -w.exp() / nt;
    let shifted = (z0 * nt).ln() - Complex::new(T::zero(), T::PI());
    let residual = (z0 * shifted - T::one()).norm();
    if !(residual <= attainable(RESIDUAL_BOUND)) {
        return Err(Error::SaddleRejected { residual: residual.to_f64_lossy() });
    }
    Ok(SaddlePoint { n, z0, f_at_z0: -z0 - z0.ln(), residual })
}

/// `aₙ` from the leading saddle-point term, `n ≥ 2`.
///
/// Assembled in log space, so any `n` up to about 10⁶ is representable.
pub fn saddle_coefficient<T: Real>(n: usize, cfg: &MethodConfig) -> Result<CoefficientEstimate<T>> {
    Method::Saddle.check_domain(n)?;
    cfg.validate()?;
    let saddle = solve_saddle::<T>(n, cfg.w_tol)?;
    let l = saddle.log_integral();
    let sine = l.im.sin();
    if sine.abs() < T::lit(PHASE_FLOOR) {
        return Err(Error::DegeneratePhase { factor: "sin(Im log I)", value: sine.abs().to_f64_lossy() });
    }
    let ln10 = T::LN_10();
    let log10 = (l.re + sine.abs().ln()) / ln10 - T::PI().log10() - log_factorial::<T>(n as i64)? / ln10;
    Ok(CoefficientEstimate {
        n,
        value: Scaled::from_log10(alternating(n) * sign_of(sine), log10)?,
        method: Method::Saddle,
        diagnostics: Diagnostics { saddle_residual: Some(saddle.residual.to_f64_lossy()), ..Default::default() },
    })
}
