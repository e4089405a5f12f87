//! Coefficients of `1/Γ(z) = z(1 + z)·Σ bₖ zᵏ`.

use num_traits::{Num, ToPrimitive};

use crate::error::{Error, Result};

/// `b₀ … b_{n_max}` from `a₁ … a_{n_max+1}` (`a[0]` is `a₁`).
///
/// `b₀ = a₁` and `bₙ = a_{n+1} − b_{n−1}`, so `aₙ = b_{n−1} + b_{n−2}` for
/// `n ≥ 2`. Generic over any number type; with an exact type such as a
/// big rational the relation holds exactly.
pub fn b_sequence<T: Num + Clone + ToPrimitive>(a: &[T], n_max: usize) -> Result<Vec<T>> {
    if a.len() < n_max + 1 {
        return Err(Error::InvalidInput(format!("need a₁..a_{} ({} values), got {}", n_max + 1, n_max + 1, a.len())));
    }
    let a1 = a[0].to_f64().unwrap_or(f64::NAN);
    if !((a1 - 1.0).abs() <= 1e-12) {
        return Err(Error::InconsistentInput(format!("a₁ = {a1}, expected 1")));
    }
    let mut b = Vec::with_capacity(n_max + 1);
    b.push(a[0].clone());
    for n in 1..=n_max {
        let next = a[n].clone() - b[n - 1].clone();
        b.push(next);
    }
    Ok(b)
}
