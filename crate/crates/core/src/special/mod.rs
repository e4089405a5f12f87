//! Special functions: Lambert W, log-Gamma and integer zeta values.

mod gamma;
mod lambert;
mod zeta;

pub use gamma::{ln_reciprocal_gamma, log_factorial, log_gamma, reciprocal_gamma};
pub use lambert::{lambert_w, lambert_w_asymptotic_init, lambert_w_lower_cut, Branch};
pub use zeta::zeta_int;
