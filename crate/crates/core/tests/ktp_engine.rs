use component_ranks::ktp::{
    delta, delta_closed_form, delta_integer, pmf_from_tables, pmf_from_tables_float, stirling_first_table,
    u_table, u_table_float, v_table, v_table_float,
};
use component_ranks::{pmf, ObjectKind, Side};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;

mod common;

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |a, i| a * i)
}

/// Permutations of `[n]` whose cycle lengths all lie in `allowed`, counted by
/// peeling off the cycle through the smallest label.
fn restricted_cycles(n_max: usize, allowed: impl Fn(usize) -> bool) -> Vec<BigUint> {
    let mut a = vec![BigUint::one()];
    for n in 1..=n_max {
        let mut acc = BigUint::zero();
        // choose j - 1 companions in order: (n-1)!/(n-j)!
        let mut ordered = BigUint::one();
        for j in 1..=n {
            if j > 1 {
                ordered *= n - j + 1;
            }
            if allowed(j) {
                acc += &ordered * &a[n - j];
            }
        }
        a.push(acc);
    }
    a
}

#[test]
fn rank_one_matches_restricted_counts() {
    let n_max = 30;
    let u = u_table(1, n_max, n_max).unwrap();
    let v = v_table(1, n_max + 1, n_max).unwrap();
    for k in 0..=n_max {
        let short = restricted_cycles(n_max, |j| j <= k);
        let long = restricted_cycles(n_max, |j| j >= k);
        for n in 1..=n_max {
            assert_eq!(u.get(k, n), &short[n], "u k={k} n={n}");
            assert_eq!(v.get(k, n), &long[n], "v k={k} n={n}");
        }
    }
}

#[test]
fn stirling_identity_to_two_hundred() {
    let s = stirling_first_table(200);
    for r in 2..=4 {
        for n in 1..=200 {
            assert_eq!(delta_integer(r, 1, n).unwrap(), s[n].get(r).cloned().unwrap_or_default(), "r={r} n={n}");
        }
    }
}

#[test]
fn correction_recursion_matches_closed_form() {
    let s = stirling_first_table(60);
    for r in 2..=4 {
        for n in 1..=60 {
            for k in 0..=n + 1 {
                let rec = delta(r, k, n).unwrap();
                assert!(rec.is_integer());
                assert_eq!(rec.to_integer(), delta_closed_form(r, k, n, &s).into(), "r={r} k={k} n={n}");
            }
        }
    }
}

#[test]
fn table_pmfs_equal_heinz() {
    for r in 1..=4 {
        for n in [1usize, 7, 25, 40] {
            for side in Side::ALL {
                let a = pmf_from_tables(r, n, side).unwrap();
                let b = pmf(ObjectKind::Permutation, n, r, side).unwrap();
                assert_eq!(a.counts(), b.counts(), "r={r} n={n} {side:?}");
            }
        }
    }
}

#[test]
fn smallest_moments_match_cycle_classification() {
    for (r, n) in [(1, 40), (2, 90), (3, 70), (4, 50)] {
        let (mean, variance) = common::smallest_cycle_moments(r, n);
        let s = component_ranks::stats(&pmf_from_tables(r, n, Side::Smallest).unwrap());
        assert_eq!(s.exact_mean, Some(mean), "r={r} n={n}");
        assert_eq!(s.exact_variance, Some(variance), "r={r} n={n}");
    }
}

#[test]
fn saturation_and_monotonicity() {
    let n_max = 40;
    for r in 1..=4 {
        let u = u_table(r, n_max + 1, n_max).unwrap();
        let v = v_table(r, n_max + 1, n_max).unwrap();
        for n in 0..=n_max {
            assert_eq!(u.get(n, n), &factorial(n));
            assert_eq!(v.get(0, n), &factorial(n));
            if n >= 1 {
                assert!(v.get(n + 1, n).is_zero());
            }
            for k in 1..=n_max + 1 {
                assert!(u.get(k, n) >= u.get(k - 1, n));
                assert!(v.get(k, n) <= v.get(k - 1, n));
            }
        }
        if r < 4 {
            // the (r+1)-th longest cycle is never longer than the r-th
            let next = u_table(r + 1, n_max, n_max).unwrap();
            for k in 0..=n_max {
                for n in 0..=n_max {
                    assert!(next.get(k, n) >= u.get(k, n));
                }
            }
        }
    }
}

#[test]
fn float_tables_track_exact() {
    for r in 1..=4 {
        let (ue, uf) = (u_table(r, 50, 50).unwrap(), u_table_float(r, 50, 50).unwrap());
        let (ve, vf) = (v_table(r, 51, 50).unwrap(), v_table_float(r, 51, 50).unwrap());
        assert_eq!(ve.conjectural(), r >= 2);
        assert!(!ue.conjectural());
        for n in 0..=50 {
            for k in 0..=50 {
                let e = ue.normalized(k, n);
                assert!((uf.get(k, n) - e).abs() <= 1e-12 * e.max(1e-300), "u r={r} k={k} n={n}");
                let e = ve.normalized(k, n);
                assert!((vf.get(k, n) - e).abs() <= 1e-12 * e.max(1e-300), "v r={r} k={k} n={n}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn float_pmf_is_a_distribution(r in 1usize..5, n in 1usize..300, largest in any::<bool>()) {
        let side = if largest { Side::Largest } else { Side::Smallest };
        let p = pmf_from_tables_float(r, n, side).unwrap();
        let probs = p.probabilities();
        prop_assert!(probs.iter().all(|&q| q >= -1e-15));
        prop_assert!((probs.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn delta_vanishes_off_domain(r in 2usize..5, n in 1usize..80, extra in 1usize..10) {
        prop_assert!(delta(r, 0, n).unwrap().is_zero());
        prop_assert!(delta(r, n + extra, n).unwrap().is_zero());
    }
}
