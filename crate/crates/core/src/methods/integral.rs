//! Real integral representation
//!
//! `aₙ = ((−1)ⁿ/(π·n!)) ∫₀^∞ e^{−t} Im{(log t − iπ)ⁿ} dt`,
//!
//! which after `t = e^u` reads `Im ∫ F(u) du` with
//! `F(u) = exp(u − e^u)·(u − iπ)ⁿ`. `F` is entire in `u`, so the real line
//! may be swapped for the path
//!
//! `u(v) = ln(1 + e^v) + iπ/(1 + e^v)`,
//!
//! which leaves `u = iπ` at `v → −∞` and joins the real axis for `v ≫ 1`.
//! The piece from `−∞ + iπ` to `iπ` that closes the deformation is dropped:
//! on that ray `F(x + iπ) = −exp(x + e^x)·xⁿ` is real, so it adds nothing to
//! the imaginary part.
//! Near the start `(u − iπ)ⁿ` is tiny instead of huge and oscillating, which
//! removes the cancellation that ruins the real-axis sum for moderate `n`.
//! Both ends decay faster than exponentially in `v`, so the trapezoidal rule
//! converges geometrically.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::methods::{
    alternating, attainable, sign_of, CoefficientEstimate, Diagnostics, IntegralPath, Method, MethodConfig,
};
use crate::real::Real;
use crate::scaled::Scaled;
use crate::special::log_factorial;

pub const INTEGRAL_MAX_N: usize = 40;

const MAX_HALVINGS: usize = 12;
/// Tail cut relative to the largest integrand modulus seen.
const TRUNCATION: f64 = 1e-18;
const MAX_TAIL_STEPS: i64 = 1 << 20;

/// `F(u(v))·u'(v)`
fn integrand<T: Real>(v: T, n: usize, path: IntegralPath) -> Complex<T> {
    let pi = T::PI();
    let (u, du) = match path {
        IntegralPath::Deformed => {
            let ev = v.exp();
            let q = (T::one() + ev).recip();
            let u = Complex::new(ev.ln_1p(), pi * q);
            let du = Complex::new(ev * q, -pi * q * (T::one() - q));
            (u, du)
        }
        IntegralPath::RealAxis => (Complex::new(v, T::zero()), Complex::new(T::one(), T::zero())),
    };
    let shifted = u - Complex::new(T::zero(), pi);
    let exponent = u - u.exp() + shifted.ln() * T::from_usize_lossy(n);
    exponent.exp() * du
}

/// Last index in direction `dir` whose integrand is still above the cut.
fn tail_index<T: Real>(n: usize, path: IntegralPath, h: T, dir: i64, peak: &mut T) -> Result<i64> {
    let cut = T::lit(TRUNCATION);
    let mut j = 0i64;
    loop {
        let next = j + dir;
        if next.abs() > MAX_TAIL_STEPS {
            return Err(Error::InvalidInput("integrand does not decay".into()));
        }
        let m = integrand(h * T::from_i64(next).unwrap_or(T::nan()), n, path).norm();
        if m > *peak {
            *peak = m;
        }
        j = next;
        if m < cut * *peak {
            return Ok(j);
        }
    }
}

/// `aₙ` by the trapezoidal rule on the integral representation, `1 ≤ n ≤ 40`.
///
/// The step starts at `cfg.quad_step` and is halved until the relative change
/// of the integral is at most `cfg.quad_rel_tol`.
pub fn integral_coefficient<T: Real>(n: usize, cfg: &MethodConfig) -> Result<CoefficientEstimate<T>> {
    Method::Integral.check_domain(n)?;
    cfg.validate()?;
    let path = cfg.integral_path;
    let tol: T = attainable(cfg.quad_rel_tol);

    let mut h = T::lit(cfg.quad_step);
    let mut peak = integrand(T::zero(), n, path).norm();
    let lo = tail_index(n, path, h, -1, &mut peak)?;
    let hi = tail_index(n, path, h, 1, &mut peak)?;

    let mut total = Complex::new(T::zero(), T::zero());
    for j in lo..=hi {
        total += integrand(h * T::from_i64(j).unwrap_or(T::nan()), n, path);
    }
    let mut nodes = (hi - lo + 1) as usize;
    let mut previous = (total * h).im;
    let mut change = T::infinity();
    let (mut lo, mut hi) = (lo, hi);

    for _ in 0..MAX_HALVINGS {
        h = h / T::lit(2.0);
        lo *= 2;
        hi *= 2;
        for j in (lo + 1..hi).step_by(2) {
            total += integrand(h * T::from_i64(j).unwrap_or(T::nan()), n, path);
            nodes += 1;
        }
        let current = (total * h).im;
        change = ((current - previous) / current).abs();
        previous = current;
        if change <= tol {
            return assemble(n, current, nodes, change);
        }
    }
    let estimate = assemble::<T>(n, previous, nodes, change)?
        .value
        .to_native()
        .map(|v| v.value.to_f64_lossy())
        .unwrap_or(f64::NAN);
    Err(Error::QuadratureFailure { estimate, error_bound: (change * T::lit(estimate.abs())).to_f64_lossy() })
}

fn assemble<T: Real>(n: usize, im_integral: T, nodes: usize, change: T) -> Result<CoefficientEstimate<T>> {
    let value = if im_integral == T::zero() {
        Scaled::zero()
    } else {
        let ln10 = T::LN_10();
        let log10 = im_integral.abs().log10() - T::PI().log10() - log_factorial::<T>(n as i64)? / ln10;
        Scaled::from_log10(alternating(n) * sign_of(im_integral), log10)?
    };
    Ok(CoefficientEstimate {
        n,
        value,
        method: Method::Integral,
        diagnostics: Diagnostics {
            nodes: Some(nodes),
            estimated_error: Some(change.to_f64_lossy()),
            ..Default::default()
        },
    })
}
