//! Complex log-Gamma, reciprocal Gamma and log-factorial.
//!
//! `log_gamma` evaluates the Stirling series with eight Bernoulli terms once
//! `Re z ≥ 10`, reaching smaller real parts through the recurrence
//! `log Γ(z) = log Γ(z + N) − Σ log(z + j)`. With principal logarithms in both
//! places this yields the principal branch, continuous on the plane cut along
//! the non-positive real axis and real on the positive axis.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::real::Real;

/// `B₂ₖ / (2k(2k−1))`, k = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// Real part above which the Stirling series is used directly. The first
/// omitted term is below 1e-17 there.
const STIRLING_MIN_RE: f64 = 10.0;

fn is_pole<T: Real>(z: Complex<T>) -> bool {
    z.im == T::zero() && z.re <= T::zero() && z.re == z.re.round()
}

fn stirling<T: Real>(z: Complex<T>) -> Complex<T> {
    let half = T::lit(0.5);
    let half_ln_two_pi = T::lit(0.918_938_533_204_672_8);
    let inv = z.inv();
    let inv2 = inv * inv;
    // Horner in 1/z²
    let mut series = Complex::new(T::lit(STIRLING[7]), T::zero());
    for &c in STIRLING[..7].iter().rev() {
        series = series * inv2 + T::lit(c);
    }
    (z - half) * z.ln() - z + half_ln_two_pi + series * inv
}

/// Principal branch of `log Γ(z)`.
///
/// Accuracy is limited by the magnitude of the result: about 1e-15 absolute
/// for moderate `|z|`, about `|log Γ(z)|·1e-16` in general.
pub fn log_gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::InvalidInput("non-finite argument".into()));
    }
    if is_pole(z) {
        return Err(Error::Pole(z.re.to_f64_lossy()));
    }
    let min_re = T::lit(STIRLING_MIN_RE);
    if z.re >= min_re {
        return Ok(stirling(z));
    }
    let shift = (min_re - z.re).ceil();
    let steps = shift.to_usize().unwrap_or(0);
    let mut correction = Complex::new(T::zero(), T::zero());
    let mut w = z;
    for _ in 0..steps {
        correction += w.ln();
        w += T::one();
    }
    Ok(stirling(w) - correction)
}

/// `sin(πx)` and `cos(πx)` with exact zeros at integers and half-integers.
fn sin_cos_pi<T: Real>(x: T) -> (T, T) {
    let k = x.round();
    let r = x - k;
    let (mut s, mut c) = (r * T::PI()).sin_cos();
    if r == T::zero() {
        s = T::zero();
    }
    if r.abs() == T::lit(0.5) {
        c = T::zero();
    }
    let odd = (k / T::lit(2.0)).fract() != T::zero();
    if odd {
        s = -s;
        c = -c;
    }
    (s, c)
}

/// A logarithm of `sin(πz)` (branch unspecified), stable for large `|Im z|`.
fn ln_sin_pi<T: Real>(z: Complex<T>) -> Complex<T> {
    if z.im < T::zero() {
        return ln_sin_pi(z.conj()).conj();
    }
    if z.im < T::lit(20.0) {
        let (s, c) = sin_cos_pi(z.re);
        let y = z.im * T::PI();
        return Complex::new(s * y.cosh(), c * y.sinh()).ln();
    }
    // sin(πz) = (i/2)·e^{−iπz}·(1 − e^{2πiz}), |e^{2πiz}| = e^{−2π Im z}
    let pi = T::PI();
    let i_pi_z = Complex::new(-z.im * pi, z.re * pi);
    let e2 = (i_pi_z * T::lit(2.0)).exp();
    let ln_half_i = Complex::new(T::lit(0.5).ln(), T::FRAC_PI_2());
    ln_half_i - i_pi_z + (Complex::new(T::one(), T::zero()) - e2).ln()
}

/// A logarithm of `1/Γ(z)`: exact modulus and phase modulo 2π.
///
/// The real part is `−∞` at the poles of Γ. Unlike [`log_gamma`] this never
/// overflows for large `|z|` in the left half-plane, which the contour
/// integral needs.
pub fn ln_reciprocal_gamma<T: Real>(z: Complex<T>) -> Complex<T> {
    if is_pole(z) {
        return Complex::new(T::neg_infinity(), T::zero());
    }
    if z.re >= T::lit(0.5) {
        // z is not a pole here.
        return -log_gamma(z).unwrap_or(Complex::new(T::nan(), T::nan()));
    }
    // 1/Γ(z) = sin(πz)·Γ(1 − z)/π
    let reflected = log_gamma(Complex::new(T::one(), T::zero()) - z).unwrap_or(Complex::new(T::nan(), T::nan()));
    ln_sin_pi(z) + reflected - T::PI().ln()
}

/// `1/Γ(z)`, an entire function; exactly zero at the poles of Γ.
pub fn reciprocal_gamma<T: Real>(z: Complex<T>) -> Complex<T> {
    if is_pole(z) {
        return Complex::new(T::zero(), T::zero());
    }
    if z.re < T::lit(0.5) && z.im.abs() < T::lit(20.0) {
        // Direct reflection keeps the zeros near the negative axis sharp.
        let (s, c) = sin_cos_pi(z.re);
        let y = z.im * T::PI();
        let sin_pi_z = Complex::new(s * y.cosh(), c * y.sinh());
        let gamma_reflected = log_gamma(Complex::new(T::one(), T::zero()) - z)
            .map(|l| l.exp())
            .unwrap_or(Complex::new(T::nan(), T::nan()));
        return sin_pi_z * gamma_reflected / T::PI();
    }
    ln_reciprocal_gamma(z).exp()
}

/// `ln(n!)`: exact product for `n ≤ 20`, log-Gamma above.
pub fn log_factorial<T: Real>(n: i64) -> Result<T> {
    if n < 0 {
        return Err(Error::Domain(format!("factorial of negative integer {n}")));
    }
    if n <= 20 {
        let product: u64 = (1..=n as u64).product();
        return Ok(T::from_u64(product).unwrap_or(T::nan()).ln());
    }
    let arg = T::from_i64(n + 1).unwrap_or(T::nan());
    log_gamma(Complex::new(arg, T::zero())).map(|l| l.re)
}
