use component_ranks::asymptotics::{
    default_table, density_f, density_g, dickman, exp_integral, largest_cdf, median_xi, mode_x0, DickmanTable,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;

mod common;
use common::integrate_knots;

const GAMMA: f64 = 0.577_215_664_901_532_9;

#[test]
fn e1_at_one_from_rational_series() {
    // E(1) = -γ + Σ_{k≥1} (-1)^{k+1} / (k·k!)
    let mut sum = BigRational::zero();
    let mut fact = BigInt::one();
    for k in 1..40u32 {
        fact *= k;
        let term = BigRational::new(BigInt::one(), &fact * BigInt::from(k));
        if k % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let oracle = sum.to_f64().unwrap() - GAMMA;
    assert!((exp_integral(1.0).unwrap() - oracle).abs() < 1e-15);
}

#[test]
fn e1_against_double_exponential_quadrature() {
    // E(x) = e^{-x} ∫_0^∞ e^{-u}/(x+u) du with u = exp(π/2 sinh τ)
    let oracle = |x: f64| {
        let h = 1.0 / 128.0;
        let mut s = 0.0;
        let mut tau: f64 = -6.0;
        while tau <= 6.0 {
            let u = (std::f64::consts::FRAC_PI_2 * tau.sinh()).exp();
            s += (-u).exp() / (x + u) * u * std::f64::consts::FRAC_PI_2 * tau.cosh();
            tau += h;
        }
        (-x).exp() * s * h
    };
    for x in [0.3, 2.0, 5.0, 10.0, 25.0] {
        let (ours, theirs) = (exp_integral(x).unwrap(), oracle(x));
        assert!(((ours - theirs) / theirs).abs() < 1e-13, "x={x} {ours} {theirs}");
    }
}

/// `ρ_1..ρ_r` on a grid of step `1/steps` from the integral form
/// `x ρ_r(x) = ∫_{x−1}^x ρ_r + ∫_0^{x−1} ρ_{r−1}` with the trapezoid rule.
fn trapezoid_dickman(r_max: usize, x_max: usize, steps: usize) -> Vec<Vec<f64>> {
    let h = 1.0 / steps as f64;
    let len = x_max * steps + 1;
    let mut rho = vec![vec![0.0; len]; r_max + 1];
    let mut cum = vec![vec![0.0; len]; r_max + 1];
    for r in 1..=r_max {
        for i in 0..len {
            if i <= steps {
                rho[r][i] = 1.0;
            } else {
                let x = i as f64 * h;
                let rest = cum[r][i - 1] + h / 2.0 * rho[r][i - 1] - cum[r][i - steps] + cum[r - 1][i - steps];
                rho[r][i] = rest / (x - h / 2.0);
            }
            if i > 0 {
                cum[r][i] = cum[r][i - 1] + h / 2.0 * (rho[r][i - 1] + rho[r][i]);
            }
        }
    }
    rho
}

#[test]
fn dickman_against_richardson_trapezoid() {
    let (coarse, fine) = (trapezoid_dickman(4, 8, 400), trapezoid_dickman(4, 8, 800));
    for r in 1..=4 {
        for x2 in 2..=16 {
            let x = x2 as f64 / 2.0;
            let (ic, if_) = (x2 * 200, x2 * 400);
            let extrapolated = (4.0 * fine[r][if_] - coarse[r][ic]) / 3.0;
            let ours = dickman(r, x).unwrap();
            assert!((ours - extrapolated).abs() < 1e-10, "r={r} x={x} {ours} {extrapolated}");
        }
    }
}

#[test]
fn dickman_ordering_on_grid() {
    let t = default_table();
    for i in 0..=4000 {
        let x = i as f64 / 100.0;
        let mut prev = 0.0;
        for r in 1..=4 {
            let v = t.rho(r, x).unwrap();
            assert!((0.0..=1.0).contains(&v), "r={r} x={x}");
            assert!(v >= prev, "r={r} x={x}");
            prev = v;
        }
    }
}

#[test]
fn densities_integrate_to_one() {
    // The mass below 1/40 is the CDF there, ρ_r(40); for r = 2 it is not small.
    let f_mass = integrate_knots(1.0, |x| density_f(x).unwrap()) + dickman(1, 40.0).unwrap();
    assert!((f_mass - 1.0).abs() < 1e-9, "{f_mass}");
    let g_mass = integrate_knots(0.5, |x| density_g(x).unwrap()) + dickman(2, 40.0).unwrap();
    assert!((g_mass - 1.0).abs() < 1e-8, "{g_mass}");
}

#[test]
fn f_rises_then_falls() {
    let grid = |a: f64, b: f64| (0..=200).map(move |i| a + (b - a) * (i as f64 + 0.5) / 201.0);
    let rising: Vec<f64> = grid(1.0 / 3.0, 0.5).map(|x| density_f(x).unwrap()).collect();
    assert!(rising.windows(2).all(|w| w[1] > w[0]));
    let falling: Vec<f64> = grid(0.5, 1.0).map(|x| density_f(x).unwrap()).collect();
    assert!(falling.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn medians_and_mode_are_what_they_claim() {
    for r in 1..=4 {
        let xi = median_xi(r).unwrap();
        assert!((largest_cdf(r, xi).unwrap() - 0.5).abs() < 1e-9);
    }
    let x0 = mode_x0().unwrap();
    let g0 = density_g(x0).unwrap();
    for d in [1e-3, 1e-2, 5e-2] {
        assert!(g0 > density_g(x0 - d).unwrap() && g0 > density_g(x0 + d).unwrap());
    }
}

#[test]
fn serialized_table_round_trips() {
    let t = DickmanTable::new(2, 10).unwrap();
    let back = DickmanTable::from_coefficients(2, 10, t.degree(), &t.coefficients()).unwrap();
    assert_eq!(back.rho(2, 7.3).unwrap(), t.rho(2, 7.3).unwrap());
}

proptest! {
    #[test]
    fn e1_is_decreasing_and_positive(x in 1e-6f64..60.0, dx in 1e-6f64..1.0) {
        let (a, b) = (exp_integral(x).unwrap(), exp_integral(x + dx).unwrap());
        prop_assert!(a > b && b > 0.0);
    }

    #[test]
    fn dickman_is_nonincreasing(r in 1usize..5, x in 0.0f64..39.0, dx in 0.0f64..1.0) {
        prop_assert!(dickman(r, x + dx).unwrap() <= dickman(r, x).unwrap());
    }
}
