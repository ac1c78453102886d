use super::dickman::{default_table, DickmanTable};
use super::roots::brent;
use crate::error::{Error, Result};

/// Root tolerance in `x` for the median and mode searches.
pub const ROOT_TOLERANCE: f64 = 1e-14;

fn open_interval(what: &'static str, x: f64, hi: f64) -> Result<()> {
    if x > 0.0 && x < hi {
        Ok(())
    } else {
        Err(Error::Domain { what, value: x })
    }
}

/// Density of the limiting law of `Λ_1/n` on `(0, 1)`: `φ(1/x − 1)/x`.
pub fn density_f(x: f64) -> Result<f64> {
    open_interval("the longest-cycle density", x, 1.0)?;
    Ok(default_table().rho(1, 1.0 / x - 1.0)? / x)
}

/// Density of the limiting law of `Λ_2/n` on `(0, 1/2)`:
/// `[ψ(1/x − 1) − φ(1/x − 1)]/x`.
pub fn density_g(x: f64) -> Result<f64> {
    open_interval("the second-longest-cycle density", x, 0.5)?;
    let t = default_table();
    let y = 1.0 / x - 1.0;
    Ok((t.rho(2, y)? - t.rho(1, y)?) / x)
}

/// `g'(x)` on `(0, 1/2)`.
pub fn g_prime(x: f64) -> Result<f64> {
    open_interval("the second-longest-cycle density", x, 0.5)?;
    g_prime_with(default_table(), x)
}

fn g_prime_with(t: &DickmanTable, x: f64) -> Result<f64> {
    let y1 = 1.0 / x - 1.0;
    let y2 = 1.0 / x - 2.0;
    let x2 = x * x;
    let first = (t.rho(1, y1)? - t.rho(2, y1)?) / x2;
    let second = (2.0 * t.rho(1, y2)? - t.rho(2, y2)?) / (x2 * (1.0 - x));
    Ok(first - second)
}

/// Mode `x₀` of the limiting law of `Λ_2/n`: the zero of `g'` in `(0.1, 0.5)`.
pub fn mode_x0() -> Result<f64> {
    let t = default_table();
    let (lo, hi) = (0.1, 0.5 - 1e-9);
    brent(lo, hi, ROOT_TOLERANCE, |x| g_prime_with(t, x).unwrap_or(f64::NAN))
}

/// Median `ξ_r` of the limiting law of `Λ_r/n`: `ρ_r(1/ξ_r) = 1/2`.
pub fn median_xi(r: usize) -> Result<f64> {
    let t = default_table();
    if r == 0 || r > t.r_max() {
        return Err(Error::RankOutOfRange {
            what: "the limiting median",
            rank: r,
            min: 1,
            max: t.r_max(),
        });
    }
    // Solve in y = 1/x, where ρ_r is smooth and decreasing past 1.
    let y = brent(1.0, t.x_max(), ROOT_TOLERANCE, |y| t.rho_unchecked(r, y) - 0.5)?;
    Ok(1.0 / y)
}
