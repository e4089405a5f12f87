//! Closed-form growth law
//!
//! `aₙ ~ ((−1)ⁿ/π)·e^{E(n)}·sin(nπ/ln n)`,
//! `E(n) = −n ln n + n ln ln n + n − n/ln n`,
//!
//! obtained from the saddle estimate with `z₀ ≈ e^{iπ/ln n}/ln n` and
//! Stirling's formula. `1/z₀ⁿ ≈ (ln n)ⁿ` contributes `+n ln ln n`; the
//! variant with `−n ln ln n` is kept for comparison and is off by hundreds
//! of nats at `n = 100`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::methods::{alternating, sign_of, CoefficientEstimate, Diagnostics, Method};
use crate::real::Real;
use crate::scaled::Scaled;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RoughExponent<T> {
    /// `−n ln n + n ln ln n + n − n/ln n`
    pub corrected: T,
    /// `−n ln n − n ln ln n + n − n/ln n`
    pub literal: T,
}

pub fn rough_exponent<T: Real>(n: usize) -> RoughExponent<T> {
    let nt = T::from_usize_lossy(n);
    let ln_n = nt.ln();
    let ln_ln_n = ln_n.ln();
    let common = -nt * ln_n + nt - nt / ln_n;
    RoughExponent { corrected: common + nt * ln_ln_n, literal: common - nt * ln_ln_n }
}

fn assemble<T: Real>(n: usize, exponent: T, both: RoughExponent<T>) -> Result<CoefficientEstimate<T>> {
    let nt = T::from_usize_lossy(n);
    let sine = (nt * T::PI() / nt.ln()).sin();
    let value = if sine == T::zero() {
        Scaled::zero()
    } else {
        Scaled::from_ln(alternating(n) * sign_of(sine), exponent + sine.abs().ln() - T::PI().ln())?
    };
    Ok(CoefficientEstimate {
        n,
        value,
        method: Method::Rough,
        diagnostics: Diagnostics {
            corrected_exponent: Some(both.corrected.to_f64_lossy()),
            literal_exponent: Some(both.literal.to_f64_lossy()),
            ..Default::default()
        },
    })
}

/// Growth-law estimate with the `+n ln ln n` exponent, `n ≥ 3`.
pub fn rough_coefficient<T: Real>(n: usize) -> Result<CoefficientEstimate<T>> {
    Method::Rough.check_domain(n)?;
    let e = rough_exponent::<T>(n);
    assemble(n, e.corrected, e)
}

/// Same law with the `−n ln ln n` exponent.
pub fn rough_coefficient_literal<T: Real>(n: usize) -> Result<CoefficientEstimate<T>> {
    Method::Rough.check_domain(n)?;
    let e = rough_exponent::<T>(n);
    assemble(n, e.literal, e)
}
