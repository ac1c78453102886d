//! Limit laws as `n → ∞`: exponential integral, higher order Dickman
//! functions, the densities of the scaled longest and second longest cycles,
//! their medians and mode, and the moment constants.

mod density;
mod dickman;
mod expint;
mod moments;
mod quad;
mod roots;

pub use density::{density_f, density_g, g_prime, median_xi, mode_x0, ROOT_TOLERANCE};
pub use dickman::{
    default_table, dickman, install_default_table, largest_cdf, DickmanTable, DEFAULT_DEGREE, DEFAULT_X_MAX, MAX_DICKMAN_ORDER,
};
pub use expint::exp_integral;
pub use moments::{largest_variance, moment_largest, moment_smallest, MomentConstant};
pub use quad::{integrate_half_line, integrate_pieces, ACCEPTED_ERROR, REQUESTED_ERROR};
pub use roots::brent;
