//! Helpers shared by the integration and acceptance targets.

#![allow(dead_code)]

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
pub fn gauss_legendre(points: usize) -> Vec<(f64, f64)> {
    let nf = points as f64;
    (0..points)
        .map(|i| {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=points {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = nf * (x * p1 - p0) / (x * x - 1.0);
                let step = p1 / dp;
                x -= step;
                if step.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

pub fn integrate(rule: &[(f64, f64)], a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
    let (mid, half) = ((a + b) / 2.0, (b - a) / 2.0);
    rule.iter().map(|&(x, w)| w * f(mid + half * x)).sum::<f64>() * half
}

/// ∫ over `(1/40, hi)` split at the knots `1/k`, where `ρ` has kinks.
pub fn integrate_knots(hi: f64, f: impl Fn(f64) -> f64) -> f64 {
    let rule = gauss_legendre(30);
    let mut total = 0.0;
    for k in 1..40 {
        let (a, b) = (1.0 / (k + 1) as f64, (1.0 / k as f64).min(hi));
        if a < b {
            // a second split keeps each piece short enough for 30 points
            let m = (a + b) / 2.0;
            total += integrate(&rule, a, m, &f) + integrate(&rule, m, b, &f);
        }
    }
    total
}

/// Exact mean and variance of the r-th smallest cycle of a random
/// n-permutation, by classifying cycles as shorter than `k` (at most `r − 1`
/// allowed) or not (count capped at `r`).
///
/// `U_s(m) = T_s(m) · n!/m!` keeps every state integral, and peeling off the
/// cycle through the smallest label gives `m U(m) = Σ U(m')` over a window of
/// earlier sizes, so the recursion runs on exact prefix sums.
pub fn smallest_cycle_moments(r: usize, n: usize) -> (num_rational::BigRational, num_rational::BigRational) {
    use num_bigint::{BigInt, BigUint};
    use num_rational::BigRational;
    use num_traits::Zero;
    let nfact: BigUint = (1..=n).fold(BigUint::from(1u32), |a, i| a * i);
    let width = r + 1;
    let idx = |a: usize, b: usize| a * width + b;
    let (mut first, mut second) = (BigUint::zero(), BigUint::zero());
    for k in 1..=n {
        let mut prefix: Vec<Vec<BigUint>> = vec![vec![BigUint::zero()]; r * width];
        let mut last = vec![BigUint::zero(); r * width];
        for m in 0..=n {
            let mut cur = vec![BigUint::zero(); r * width];
            if m == 0 {
                cur[idx(0, 0)] = nfact.clone();
            } else {
                for a in 0..r {
                    for b in 0..=r {
                        let mut acc = BigUint::zero();
                        let lo = (m + 1).saturating_sub(k);
                        if a > 0 && lo < m {
                            let p = &prefix[idx(a - 1, b)];
                            acc += &p[m] - &p[lo];
                        }
                        if m >= k {
                            let hi = m - k + 1;
                            if b > 0 {
                                acc += &prefix[idx(a, b - 1)][hi];
                            }
                            if b == r {
                                acc += &prefix[idx(a, r)][hi];
                            }
                        }
                        cur[idx(a, b)] = acc / m;
                    }
                }
            }
            for (s, c) in cur.iter().enumerate() {
                let next = &prefix[s][m] + c;
                prefix[s].push(next);
            }
            last = cur;
        }
        // v_r(k, n) · (n!/n!) = permutations whose r-th smallest cycle is >= k
        let v: BigUint = (0..r)
            .flat_map(|a| (0..=r).map(move |b| (a, b)))
            .filter(|&(a, b)| a + b >= r)
            .map(|(a, b)| last[idx(a, b)].clone())
            .sum();
        second += &v * (2 * k - 1);
        first += v;
    }
    let total = BigInt::from(nfact);
    let mean = BigRational::new(first.into(), total.clone());
    let variance = BigRational::new(second.into(), total) - &mean * &mean;
    (mean, variance)
}
