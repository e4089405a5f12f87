//! Branch-indexed Lambert W, the inverse of `w ↦ w·e^w`.
//!
//! Branch cuts follow the usual counter-clockwise-continuity convention: the
//! cut of every branch lies on the negative real axis and is closed on top,
//! i.e. a point `x < 0` takes the value reached from `Im z > 0`. With
//! `log x = ln|x| + iπ` the branch-`k` seed logarithm is `ln|x| + (2k+1)πi`.
//!
//! Values are found by Halley iteration from one of three seeds:
//! the square-root series around the branch point `−1/e`, the two-term
//! logarithmic expansion for large `|z|` or `k ≠ 0`, and `log(1 + z)` for the
//! principal branch near the origin.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::real::Real;

pub const MAX_ITERATIONS: usize = 50;

/// Branch index `k` of the Lambert W function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Branch(pub i32);

impl Branch {
    pub const PRINCIPAL: Branch = Branch(0);
    pub const LOWER: Branch = Branch(-1);
    pub const UPPER: Branch = Branch(1);
}

fn two_pi_i_k<T: Real>(k: Branch) -> Complex<T> {
    Complex::new(T::zero(), T::TAU() * T::from_i32(k.0).unwrap_or(T::nan()))
}

/// Seed `L₁ − L₂` with `L₁ = log z + 2πik`, `L₂ = log L₁`.
///
/// Only meaningful as a starting point for iteration; its error decays like
/// `log L₁ / L₁`. Requires `|z| > 3`.
pub fn lambert_w_asymptotic_init<T: Real>(k: Branch, z: Complex<T>) -> Result<Complex<T>> {
    let modulus = z.norm();
    if !(modulus > T::lit(3.0)) {
        return Err(Error::SeedOutOfRegime { modulus: modulus.to_f64_lossy() });
    }
    Ok(asymptotic_seed(k, z))
}

fn asymptotic_seed<T: Real>(k: Branch, z: Complex<T>) -> Complex<T> {
    let l1 = z.ln() + two_pi_i_k(k);
    let l2 = l1.ln();
    l1 - l2 + l2 / l1
}

/// Square-root series around the branch point, `p = √(2(ez + 1))`.
fn branch_point_seed<T: Real>(p: Complex<T>) -> Complex<T> {
    let c2 = T::lit(-1.0 / 3.0);
    let c3 = T::lit(11.0 / 72.0);
    let c4 = T::lit(-43.0 / 540.0);
    let one = Complex::new(T::one(), T::zero());
    let tail = (p * c4 + c3) * p + c2;
    -one + p * (one + p * tail)
}

/// Which root of the branch-point series belongs to branch `k`, if any.
///
/// `W₀` uses `+p` everywhere. With the cut closed on top, `W₋₁` touches the
/// branch point from `Im z ≥ 0` and `W₁` from `Im z < 0`, both with `−p`.
fn branch_point_root_sign(k: Branch, z_im_sign_negative: bool) -> Option<i8> {
    match k.0 {
        0 => Some(1),
        -1 if !z_im_sign_negative => Some(-1),
        1 if z_im_sign_negative => Some(-1),
        _ => None,
    }
}

fn initial_guess<T: Real>(k: Branch, z: Complex<T>) -> Complex<T> {
    let e = T::E();
    let near_branch = z * e + T::one();
    let negative_im = z.im < T::zero() || (z.im == T::zero() && z.im.is_sign_negative());
    if near_branch.norm() < T::lit(0.3) {
        if let Some(s) = branch_point_root_sign(k, negative_im) {
            let p = (near_branch * T::lit(2.0)).sqrt();
            let p = if s < 0 { -p } else { p };
            return branch_point_seed(p);
        }
    }
    // Real lower branch on (−1/e, 0): keep the iteration on the real line.
    if k.0 == -1 && z.im == T::zero() && !negative_im && z.re < T::zero() && z.re > -T::one() / e {
        let l1 = (-z.re).ln();
        let l2 = (-l1).ln();
        return Complex::new(l1 - l2 + l2 / l1, T::zero());
    }
    if k.0 == 0 && z.norm() <= T::lit(3.0) {
        if z.im == T::zero() && z.re < -T::one() / e && z.re >= -T::one() {
            // log(1 + z) would be real (or infinite) here while W₀ is not.
            let p = (near_branch * T::lit(2.0)).sqrt();
            return branch_point_seed(p);
        }
        return (z + T::one()).ln();
    }
    asymptotic_seed(k, z)
}

/// Halley iteration on `w·e^w − z`.
fn halley<T: Real>(z: Complex<T>, mut w: Complex<T>, tol: T) -> Result<Complex<T>> {
    let scale = T::one().max(z.norm());
    let two = T::lit(2.0);
    let eps = T::epsilon();
    let mut residual = T::infinity();
    for _ in 0..MAX_ITERATIONS {
        let ew = w.exp();
        let f = w * ew - z;
        residual = f.norm();
        if residual == T::zero() {
            return Ok(w);
        }
        // Divided through by e^w so that the complex division never squares
        // a huge modulus.
        let g = w - z * (-w).exp();
        let wp1 = w + T::one();
        let denom = wp1 - (w + two) * g / (wp1 * two);
        let step = g / denom;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        w -= step;
        if step.norm() <= T::lit(4.0) * eps * (T::one() + w.norm()) {
            let res = (w * w.exp() - z).norm();
            if res <= tol * scale {
                return Ok(w);
            }
            residual = res;
            // Stalled at the rounding floor without meeting tol.
            break;
        }
    }
    let res = (w * w.exp() - z).norm();
    if res <= tol * scale {
        return Ok(w);
    }
    Err(Error::ConvergenceFailure { iterations: MAX_ITERATIONS, residual: residual.min(res).to_f64_lossy() })
}

/// `W_k(z)` with `|w·e^w − z| ≤ tol·max(1, |z|)`.
///
/// Real arguments on `[−1/e, 0)` return real values on branches 0 and −1;
/// for `x < −1/e` (or `x < 0` with `k ∉ {0, −1}`) the cut is closed on top.
/// A negative real `z` with a `-0.0` imaginary part is treated as lying below
/// the cut.
pub fn lambert_w<T: Real>(k: Branch, z: Complex<T>, tol: T) -> Result<Complex<T>> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::InvalidInput("non-finite argument".into()));
    }
    if z.re == T::zero() && z.im == T::zero() {
        return if k.0 == 0 {
            Ok(Complex::new(T::zero(), T::zero()))
        } else {
            Err(Error::Domain(format!("W_{}(0) is -infinity", k.0)))
        };
    }
    // Exact branch point.
    let branch_point = -T::one() / T::E();
    if z.im == T::zero() && z.re == branch_point && (k.0 == 0 || k.0 == -1) {
        return Ok(Complex::new(-T::one(), T::zero()));
    }
    let w = halley(z, initial_guess(k, z), tol)?;
    // Real inputs on the real-valued part of branches 0 and −1 give real output.
    let on_real_segment = z.im == T::zero()
        && ((k.0 == 0 && z.re >= branch_point) || (k.0 == -1 && z.re >= branch_point && z.re < T::zero()));
    if on_real_segment {
        return Ok(Complex::new(w.re, T::zero()));
    }
    Ok(w)
}

/// `W_k(x)` for a point `x < 0` of the cut, taken with `arg x = +π`.
///
/// The seed logarithm is then `ln|x| + (2k+1)πi`; for `k = −1` this is
/// `ln|x| − iπ`, the argument `−π` form in which the saddle equation of the
/// reciprocal Gamma coefficient integral is written. The resulting `W₋₁(x)`
/// for `x < −1/e` is the complex conjugate of the principal value, with
/// imaginary part in `(−π, 0)`, and equals what Maple returns for
/// `LambertW(-1, x)`.
pub fn lambert_w_lower_cut<T: Real>(k: Branch, x: T, tol: T) -> Result<Complex<T>> {
    if !(x < T::zero()) {
        return Err(Error::InvalidInput(format!("lambert_w_lower_cut needs x < 0, got {x}")));
    }
    // +0.0 imaginary part selects the arg = +π side of the principal log.
    lambert_w(k, Complex::new(x, T::zero()), tol)
}
