//! Linear recursion in γ and ζ(k).
//!
//! From `1/Γ(z) = z·exp(γz − Σ_{k≥2} (−1)^k ζ(k) z^k / k)`, differentiating
//! the exponential gives
//!
//! `(n − 1)·aₙ = γ·a_{n−1} + Σ_{k=2}^{n−1} (−1)^{k+1} ζ(k)·a_{n−k}`.
//!
//! The terms alternate and grow while `aₙ` shrinks like `1/n!`, so the
//! recursion loses roughly a digit per step in fixed precision; by `n ≈ 27`
//! nothing is left.

use crate::error::{Error, Result};
use crate::methods::{CoefficientEstimate, Diagnostics, Method, EULER_GAMMA};
use crate::real::Real;
use crate::scaled::Scaled;
use crate::special::zeta_int;

pub const BOURGUET_MAX_N: usize = 60;

/// `a₁ … a_{n_max}` by the recursion.
pub fn bourguet_sequence<T: Real>(n_max: usize) -> Result<Vec<T>> {
    if n_max == 0 || n_max > BOURGUET_MAX_N {
        return Err(Error::OutOfRange { method: "bourguet", n: n_max, min: 1, max: BOURGUET_MAX_N });
    }
    let gamma = T::lit(EULER_GAMMA);
    let zeta: Vec<T> = (2..n_max.max(2) as u32).map(zeta_int).collect::<Result<_>>()?;
    // a[0] holds a₁
    let mut a: Vec<T> = Vec::with_capacity(n_max);
    a.push(T::one());
    for n in 2..=n_max {
        let mut acc = gamma * a[n - 2];
        for k in 2..n {
            let term = zeta[k - 2] * a[n - k - 1];
            if k % 2 == 0 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        a.push(acc / T::from_usize_lossy(n - 1));
    }
    Ok(a)
}

pub fn bourguet_coefficient<T: Real>(n: usize) -> Result<CoefficientEstimate<T>> {
    Method::Bourguet.check_domain(n)?;
    let a = bourguet_sequence::<T>(n)?;
    Ok(CoefficientEstimate {
        n,
        value: Scaled::from_native(a[n - 1])?,
        method: Method::Bourguet,
        diagnostics: Diagnostics::default(),
    })
}
