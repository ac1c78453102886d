use statrs::function::gamma::gamma;

use super::expint::exp_integral_unchecked;
use super::quad::integrate_half_line;
use crate::error::{Error, Result};
use crate::kind::Side;
use crate::numeric::EULER_GAMMA;

/// A limiting moment constant `_L G_a(r, h)` or `_S G_a(r, h)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentConstant {
    /// Exp-log parameter: 1 for permutations, 1/2 for mappings.
    pub a: f64,
    pub r: usize,
    pub h: f64,
    pub side: Side,
    pub value: f64,
    /// Quadrature error estimate; 0 for closed forms.
    pub error_estimate: f64,
    /// Whether the mapping factor √2 has been applied.
    pub corrected: bool,
}

fn check(a: f64, r: usize, h: f64) -> Result<()> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Domain {
            what: "the exp-log parameter",
            value: a,
        });
    }
    if r == 0 {
        return Err(Error::ZeroRank);
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidHeight(h));
    }
    Ok(())
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// `_L G_a(r, h) = Γ(a+1) a^{r−1} / (Γ(a+h) (r−1)!) ∫_0^∞ x^{h−1} E^{r−1} e^{−aE−x} dx`.
pub fn moment_largest(a: f64, r: usize, h: f64) -> Result<MomentConstant> {
    check(a, r, h)?;
    let integrand = |x: f64| {
        let e = exp_integral_unchecked(x);
        x.powf(h - 1.0) * e.powi(r as i32 - 1) * (-a * e - x).exp()
    };
    let (integral, error) = integrate_half_line(integrand)?;
    let prefactor = gamma(a + 1.0) * a.powi(r as i32 - 1) / (gamma(a + h) * factorial(r - 1));
    Ok(MomentConstant {
        a,
        r,
        h,
        side: Side::Largest,
        value: prefactor * integral,
        error_estimate: prefactor * error,
        corrected: false,
    })
}

/// `_S G_a(r, h)`: `e^{−hγ} a^{r−1}/r!` when `h = a`, otherwise
/// `Γ(a+1) / (Γ(h) (r−1)!) ∫_0^∞ x^{h−1} e^{aE−x} dx`.
///
/// `corrected` multiplies by √2 and is accepted only for `a = 1/2`.
pub fn moment_smallest(a: f64, r: usize, h: f64, corrected: bool) -> Result<MomentConstant> {
    check(a, r, h)?;
    if h < a {
        return Err(Error::HeightBelowParameter { h, a });
    }
    if corrected && a != 0.5 {
        return Err(Error::CorrectionNotApplicable);
    }
    let (raw, error) = if h == a {
        ((-h * EULER_GAMMA).exp() * a.powi(r as i32 - 1) / factorial(r), 0.0)
    } else {
        let integrand = |x: f64| x.powf(h - 1.0) * (a * exp_integral_unchecked(x) - x).exp();
        let (integral, error) = integrate_half_line(integrand)?;
        let prefactor = gamma(a + 1.0) / (gamma(h) * factorial(r - 1));
        (prefactor * integral, prefactor * error)
    };
    let factor = if corrected { std::f64::consts::SQRT_2 } else { 1.0 };
    Ok(MomentConstant {
        a,
        r,
        h,
        side: Side::Smallest,
        value: factor * raw,
        error_estimate: factor * error,
        corrected,
    })
}

/// `_L G_a(r, 2) − _L G_a(r, 1)²`.
pub fn largest_variance(a: f64, r: usize) -> Result<f64> {
    let second = moment_largest(a, r, 2.0)?.value;
    let first = moment_largest(a, r, 1.0)?.value;
    Ok(second - first * first)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golomb_dickman_constant() {
        let g = moment_largest(1.0, 1, 1.0).unwrap();
        assert!((g.value - 0.624_329_988_543_550_87).abs() < 1e-12, "{}", g.value);
    }

    #[test]
    fn closed_form_ratios() {
        let v: Vec<f64> = (2..=4).map(|r| moment_smallest(1.0, r, 1.0, false).unwrap().value).collect();
        assert!((v[1] / v[0] - 1.0 / 3.0).abs() < 1e-15);
        assert!((v[2] / v[0] - 1.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(moment_smallest(1.0, 2, 0.5, false), Err(Error::HeightBelowParameter { .. })));
        assert_eq!(moment_smallest(1.0, 2, 2.0, true), Err(Error::CorrectionNotApplicable));
        assert!(moment_largest(1.0, 0, 1.0).is_err());
        assert!(moment_largest(1.0, 2, 0.0).is_err());
    }
}
