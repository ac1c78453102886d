use crate::error::{Error, Result};
use crate::numeric::EULER_GAMMA;

/// Exponential integral `E(x) = ∫_x^∞ e^{−t}/t dt` for `x > 0`.
///
/// Power series below 1, modified Lentz continued fraction from 1 upward.
pub fn exp_integral(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            what: "the exponential integral",
            value: x,
        });
    }
    Ok(exp_integral_unchecked(x))
}

/// Caller guarantees `x > 0`.
pub(crate) fn exp_integral_unchecked(x: f64) -> f64 {
    if x < 1.0 {
        series(x)
    } else {
        continued_fraction(x)
    }
}

fn series(x: f64) -> f64 {
    // Σ_{k≥1} (−1)^{k+1} x^k / (k·k!)
    let mut term = 1.0;
    let mut sum = 0.0;
    for k in 1..200 {
        let kf = k as f64;
        term *= -x / kf;
        let contribution = -term / kf;
        sum += contribution;
        if contribution.abs() <= f64::EPSILON * 0.125 * sum.abs() {
            break;
        }
    }
    -EULER_GAMMA - x.ln() + sum
}

fn continued_fraction(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..1000 {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).abs() <= f64::EPSILON {
            break;
        }
    }
    h * (-x).exp()
}
