//! Hayman-type estimate on the circle through `zₙ = e^{W₀(½ − n)}`.
//!
//! With `zₙ = rₙe^{iθₙ}`,
//!
//! `aₙ ≈ √(2/(πn)) · cos φₙ / (|Γ(zₙ)|·rₙⁿ)`,
//!
//! where `φₙ = (n − ½)(sin²θₙ/θₙ − θₙ) + θₙ/(12(n − ½))` by default, or
//! `(n − ½)(sin²θₙ/θₙ − θₙ)` for [`PhaseVariant::Hayman`].

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::methods::{
    attainable, sign_of, CoefficientEstimate, Diagnostics, Method, MethodConfig, PhaseVariant, PHASE_FLOOR,
};
use crate::real::Real;
use crate::scaled::Scaled;
use crate::special::{lambert_w, log_gamma, Branch};

fn phase<T: Real>(n: usize, theta: T, variant: PhaseVariant) -> T {
    let m = T::from_usize_lossy(n) - T::lit(0.5);
    let s = theta.sin();
    let base = m * (s * s / theta - theta);
    match variant {
        PhaseVariant::Hayman => base,
        PhaseVariant::Bornemann => base + theta / (T::lit(12.0) * m),
    }
}

pub fn hayman_coefficient<T: Real>(n: usize, cfg: &MethodConfig) -> Result<CoefficientEstimate<T>> {
    Method::Hayman.check_domain(n)?;
    cfg.validate()?;
    let nt = T::from_usize_lossy(n);
    let w = lambert_w(Branch::PRINCIPAL, Complex::new(T::lit(0.5) - nt, T::zero()), attainable(cfg.w_tol))?;
    let (ln_r, theta) = (w.re, w.im);
    let z = w.exp();
    let cosine = phase(n, theta, cfg.phase_variant).cos();
    if cosine.abs() < T::lit(PHASE_FLOOR) {
        return Err(Error::DegeneratePhase { factor: "cos φ", value: cosine.abs().to_f64_lossy() });
    }
    let half = T::lit(0.5);
    let ln = half * (T::lit(2.0) / T::PI()).ln() - half * nt.ln() - log_gamma(z)?.re - nt * ln_r + cosine.abs().ln();
    Ok(CoefficientEstimate {
        n,
        value: Scaled::from_ln(sign_of(cosine), ln)?,
        method: Method::Hayman,
        diagnostics: Diagnostics {
            phase_variant: Some(cfg.phase_variant),
            radius: Some(ln_r.exp().to_f64_lossy()),
            ..Default::default()
        },
    })
}
