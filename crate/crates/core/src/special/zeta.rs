//! Riemann zeta at integer arguments.

use crate::error::{Error, Result};
use crate::real::Real;

/// Terms summed explicitly before the Euler–Maclaurin tail.
const HEAD: u32 = 20;

/// `B₂ₘ / (2m)!`, m = 1..6.
const BERNOULLI_OVER_FACTORIAL: [f64; 6] =
    [1.0 / 12.0, -1.0 / 720.0, 1.0 / 30_240.0, -1.0 / 1_209_600.0, 1.0 / 47_900_160.0, -691.0 / 1_307_674_368_000.0];

/// `ζ(k)` for integer `k ≥ 2`, accurate to a few ulps.
///
/// The first nineteen terms are summed smallest first, the remainder
/// `Σ_{j≥20} j^{−k}` comes from Euler–Maclaurin with six Bernoulli
/// corrections.
pub fn zeta_int<T: Real>(k: u32) -> Result<T> {
    if k < 2 {
        return Err(Error::Domain(format!("zeta({k}) diverges or is out of range")));
    }
    let kf = T::from_u32(k).unwrap_or(T::nan());
    let n = T::from_u32(HEAD).unwrap_or(T::nan());
    let n_pow = n.powi(-(k as i32));

    // ∫ + half endpoint + derivative corrections
    let mut tail = n * n_pow / (kf - T::one()) + n_pow / T::lit(2.0);
    let mut rising = kf; // k(k+1)…(k+2m−2)
    let mut power = n_pow / n; // N^{−k−2m+1}
    for (m, &b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        tail += T::lit(b) * rising * power;
        let m = T::from_usize(m).unwrap_or(T::nan());
        rising *= (kf + T::lit(2.0) * m + T::one()) * (kf + T::lit(2.0) * m + T::lit(2.0));
        power = power / (n * n);
    }

    let mut head = T::zero();
    for j in (1..HEAD).rev() {
        head += T::from_u32(j).unwrap_or(T::nan()).powi(-(k as i32));
    }
    Ok(head + tail)
}
