//! Checks shared by the property tests and the acceptance run.

#![allow(dead_code)]

use num_complex::Complex;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rgc_core::methods::{b_sequence, integral_coefficient, solve_saddle, INTEGRAL_MAX_N};
use rgc_core::special::{lambert_w, log_gamma, Branch};
use rgc_core::MethodConfig;

pub const W_TOL: f64 = 1e-13;

/// Random point with log-uniform modulus in [1e-3, 1e3] and uniform argument.
pub fn random_point(rng: &mut ChaCha8Rng) -> Complex<f64> {
    let modulus = 10f64.powf(rng.gen_range(-3.0..3.0));
    let arg = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    Complex::from_polar(modulus, arg)
}

/// Largest `|w·e^w − z| / max(1, |z|)` over `samples` random `(k, z)`,
/// `k ∈ {−1, 0, 1}`; solver failures are returned as errors.
pub fn lambert_residual_sweep(samples: usize, seed: u64) -> Result<f64, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let k = Branch(rng.gen_range(-1..=1));
        let z = random_point(&mut rng);
        let w = lambert_w(k, z, W_TOL).map_err(|e| format!("W_{}({z}): {e}", k.0))?;
        worst = worst.max(w_residual(w, z));
    }
    Ok(worst)
}

pub fn w_residual(w: Complex<f64>, z: Complex<f64>) -> f64 {
    (w * w.exp() - z).norm() / z.norm().max(1.0)
}

/// Random point with `|z| ≤ 5` at least 0.05 away from every integer.
pub fn random_gamma_point(rng: &mut ChaCha8Rng) -> Complex<f64> {
    loop {
        let z: Complex<f64> = Complex::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        if z.norm() <= 5.0 && (z - z.re.round()).norm() > 0.05 {
            return z;
        }
    }
}

/// `|Γ(z)Γ(1 − z) sin(πz)/π − 1|`
pub fn reflection_error(z: Complex<f64>) -> f64 {
    let pi = std::f64::consts::PI;
    let one = Complex::new(1.0, 0.0);
    let product = (log_gamma(z).unwrap() + log_gamma(one - z).unwrap()).exp() * (z * pi).sin() / pi;
    (product - one).norm()
}

/// `|exp(log Γ(z + 1) − log Γ(z)) / z − 1|`
pub fn recurrence_error(z: Complex<f64>) -> f64 {
    let ratio = (log_gamma(z + 1.0).unwrap() - log_gamma(z).unwrap()).exp();
    (ratio / z - 1.0).norm()
}

/// Worst reflection and recurrence errors over `samples` random points.
pub fn log_gamma_identity_sweep(samples: usize, seed: u64) -> (f64, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut refl, mut rec) = (0.0f64, 0.0f64);
    for _ in 0..samples {
        let z = random_gamma_point(&mut rng);
        refl = refl.max(reflection_error(z));
        rec = rec.max(recurrence_error(z));
    }
    (refl, rec)
}

/// `2, 10, 100, …, 10^max_decade` together with the next two decades'
/// intermediate points `2·10^k, 5·10^k`.
pub fn decade_points(max_decade: u32) -> Vec<usize> {
    let mut ns = vec![2];
    for d in 1..=max_decade {
        let p = 10usize.pow(d);
        ns.push(p);
        if d < max_decade {
            ns.extend([2 * p, 5 * p]);
        }
    }
    ns
}

/// Worst saddle residual over `ns`.
pub fn saddle_residual_sweep(ns: &[usize]) -> Result<f64, String> {
    let mut worst = 0.0f64;
    for &n in ns {
        let s = solve_saddle::<f64>(n, W_TOL).map_err(|e| format!("n = {n}: {e}"))?;
        worst = worst.max(s.residual);
    }
    Ok(worst)
}

/// Worst relative gap between the closed forms `f(z₀) = −z₀ − log z₀`,
/// `f″(z₀) = −1 − 1/z₀` and direct evaluation of the definitions.
pub fn saddle_closed_form_sweep(ns: &[usize]) -> Result<f64, String> {
    let mut worst = 0.0f64;
    for &n in ns {
        let s = solve_saddle::<f64>(n, W_TOL).map_err(|e| format!("n = {n}: {e}"))?;
        let f = (s.f_at_z0 - s.f_direct()).norm() / s.f_direct().norm();
        let d2 = (s.second_derivative() - s.second_derivative_direct()).norm() / s.second_derivative_direct().norm();
        // e^{n f(z₀)} against e^{−n z₀} z₀^{−n}, compared in log space
        let nf = s.f_at_z0 * n as f64;
        let split = -s.z0 * n as f64 - s.z0.ln() * n as f64;
        let gap = nf - split;
        let tau = std::f64::consts::TAU;
        let wrapped = Complex::new(gap.re, gap.im - tau * (gap.im / tau).round());
        let identity = (wrapped.exp() - 1.0).norm();
        worst = worst.max(f).max(d2).max(identity);
    }
    Ok(worst)
}

/// `a₁ … a_count` from the integral method.
pub fn integral_sequence(count: usize) -> Vec<f64> {
    let cfg = MethodConfig::default();
    (1..=count.min(INTEGRAL_MAX_N))
        .map(|n| integral_coefficient::<f64>(n, &cfg).unwrap().value.to_native().unwrap().value)
        .collect()
}

/// Converts each `aₙ` exactly to a rational, builds `bₙ` and checks
/// `b_{n−1} + b_{n−2} = aₙ` exactly. Returns the first failing `n`.
pub fn bn_round_trip(a: &[f64]) -> Result<(), usize> {
    let exact: Vec<BigRational> = a.iter().map(|&x| BigRational::from_float(x).unwrap()).collect();
    let b = b_sequence(&exact, exact.len() - 1).map_err(|_| 1usize)?;
    for n in 2..=exact.len() {
        if &b[n - 1] + &b[n - 2] != exact[n - 1] {
            return Err(n);
        }
    }
    Ok(())
}
