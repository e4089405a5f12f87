//! Cauchy's coefficient formula on a circle, discretised by the trapezoidal
//! rule:
//!
//! `aₙ ≈ (1/(m·rⁿ)) Σⱼ Re[e^{−inθⱼ} / Γ(r·e^{iθⱼ})]`, `θⱼ = 2πj/m`.
//!
//! Each term is kept as a logarithm and the sum is rescaled by its largest
//! term, so neither `1/Γ` on a large circle nor `rⁿ` ever overflows.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::methods::{attainable, sign_of, CoefficientEstimate, Diagnostics, Method, MethodConfig};
use crate::real::Real;
use crate::scaled::Scaled;
use crate::special::{lambert_w, ln_reciprocal_gamma, Branch};

const MAX_DOUBLINGS: usize = 8;

/// `|e^{W₀(1/2 − n)}|`, the radius of the circle through Hayman's point.
pub fn hayman_radius<T: Real>(n: usize, w_tol: f64) -> Result<T> {
    let arg = Complex::new(T::lit(0.5) - T::from_usize_lossy(n), T::zero());
    let w = lambert_w(Branch::PRINCIPAL, arg, attainable(w_tol))?;
    Ok(w.re.exp())
}

/// `ln(1/Γ(z_j)) − i·n·θ_j` with the phase reduced exactly modulo 2π.
fn log_term<T: Real>(n: usize, radius: T, j: usize, m: usize) -> Complex<T> {
    let two_pi = T::PI() * T::lit(2.0);
    let m_t = T::from_usize_lossy(m);
    let theta = two_pi * T::from_usize_lossy(j) / m_t;
    let z = Complex::from_polar(radius, theta);
    let phase_index = ((n as u128 * j as u128) % m as u128) as usize;
    let phase = two_pi * T::from_usize_lossy(phase_index) / m_t;
    ln_reciprocal_gamma(z) - Complex::new(T::zero(), phase)
}

/// `(sign, ln|aₙ|)` from the log terms of one node set.
fn combine<T: Real>(n: usize, radius: T, logs: &[Complex<T>]) -> Result<Scaled<T>> {
    let shift = logs.iter().map(|l| l.re).filter(|x| x.is_finite()).fold(T::neg_infinity(), T::max);
    if !shift.is_finite() {
        return Ok(Scaled::zero());
    }
    let mut sum = T::zero();
    for l in logs {
        if l.re.is_finite() {
            sum += (*l - shift).exp().re;
        }
    }
    if sum == T::zero() {
        return Ok(Scaled::zero());
    }
    let ln = sum.abs().ln() + shift - T::from_usize_lossy(logs.len()).ln() - T::from_usize_lossy(n) * radius.ln();
    Scaled::from_ln(sign_of(sum), ln)
}

/// `aₙ` by the trapezoidal rule on `|z| = r`.
///
/// With `cfg.contour_nodes` unset, `m` starts at `max(64, 4n)` and doubles
/// (reusing the previous nodes) until consecutive estimates agree to
/// `cfg.quad_rel_tol`. The default radius is [`hayman_radius`].
pub fn cauchy_coefficient<T: Real>(n: usize, cfg: &MethodConfig) -> Result<CoefficientEstimate<T>> {
    Method::Cauchy.check_domain(n)?;
    cfg.validate()?;
    let radius = match cfg.contour_radius {
        Some(r) => T::lit(r),
        None => hayman_radius(n, cfg.w_tol)?,
    };
    let diagnostics = |nodes: usize, err: Option<T>| Diagnostics {
        nodes: Some(nodes),
        estimated_error: err.map(|e| e.to_f64_lossy()),
        radius: Some(radius.to_f64_lossy()),
        ..Default::default()
    };

    if let Some(m) = cfg.contour_nodes {
        let logs: Vec<_> = (0..m).map(|j| log_term(n, radius, j, m)).collect();
        return Ok(CoefficientEstimate {
            n,
            value: combine(n, radius, &logs)?,
            method: Method::Cauchy,
            diagnostics: diagnostics(m, None),
        });
    }

    let tol: T = attainable(cfg.quad_rel_tol);
    let mut m = 64.max(4 * n);
    let mut logs: Vec<_> = (0..m).map(|j| log_term(n, radius, j, m)).collect();
    let mut previous = combine(n, radius, &logs)?;
    let mut change = T::infinity();
    for _ in 0..MAX_DOUBLINGS {
        let doubled = 2 * m;
        let mut next = Vec::with_capacity(doubled);
        for (j, l) in logs.iter().enumerate() {
            next.push(*l);
            next.push(log_term(n, radius, 2 * j + 1, doubled));
        }
        m = doubled;
        logs = next;
        let current = combine(n, radius, &logs)?;
        change = match current.relative_error(&previous) {
            Ok(e) => e,
            Err(_) => T::zero(),
        };
        previous = current;
        if change <= tol {
            return Ok(CoefficientEstimate {
                n,
                value: previous,
                method: Method::Cauchy,
                diagnostics: diagnostics(m, Some(change)),
            });
        }
    }
    let estimate = previous.to_native().map(|v| v.value.to_f64_lossy()).unwrap_or(f64::NAN);
    Err(Error::QuadratureFailure { estimate, error_bound: change.to_f64_lossy() * estimate.abs() })
}
