use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::harmonic::HarmonicValues;
use crate::error::{Error, Result};
use crate::kind::factorial;

pub const MIN_DELTA_RANK: usize = 2;
pub const MAX_DELTA_RANK: usize = 4;

fn check_rank(r: usize) -> Result<()> {
    if !(MIN_DELTA_RANK..=MAX_DELTA_RANK).contains(&r) {
        return Err(Error::RankOutOfRange {
            what: "the correction term",
            rank: r,
            min: MIN_DELTA_RANK,
            max: MAX_DELTA_RANK,
        });
    }
    Ok(())
}

/// Correction terms `Δ_s(k, n)` for one `n`, all `2 ≤ s ≤ r_max` and
/// `0 ≤ k ≤ n + 1`, stored as rationals exactly as the recursion produces
/// them. Entries outside `1 ≤ k ≤ n` are zero.
#[derive(Debug, Clone)]
pub struct DeltaColumn {
    n: usize,
    // [s - 2][k]
    values: Vec<Vec<BigRational>>,
}

impl DeltaColumn {
    pub fn new(r_max: usize, n: usize, harmonic: &HarmonicValues) -> Result<Self> {
        check_rank(r_max)?;
        let mut values = vec![vec![BigRational::zero(); n + 2]; r_max - 1];
        if n == 0 {
            return Ok(DeltaColumn { n, values });
        }
        let fact = BigRational::from_integer(BigInt::from(factorial(n - 1)));
        for k in 1..=n {
            values[0][k] = &fact * harmonic.h(n - k);
        }
        let m = n - 1;
        let (h, h2, h3) = (harmonic.h(m), harmonic.h_s(m, 2), harmonic.h_s(m, 3));
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());
        let six = BigRational::from_integer(6.into());
        if r_max >= 3 {
            values[1][1] = &fact * (h * h - h2) / &two;
        }
        if r_max >= 4 {
            values[2][1] = &fact * (h * h * h - &three * h * h2 + &two * h3) / &six;
        }
        for s in 3..=r_max {
            for k in 2..=n {
                let lower = &values[s - 3][k] / BigRational::from_integer(BigInt::from(n - k + 1));
                values[s - 2][k] = &values[s - 2][k - 1] - lower;
            }
        }
        Ok(DeltaColumn { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rational(&self, r: usize, k: usize) -> BigRational {
        self.values
            .get(r.wrapping_sub(2))
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// `Δ_r(k, n)` as an integer, failing if the rational is not a
    /// nonnegative integer.
    pub fn integer(&self, r: usize, k: usize) -> Result<BigUint> {
        let value = self.rational(r, k);
        to_natural(r, k, self.n, &value)
    }
}

fn to_natural(r: usize, k: usize, n: usize, value: &BigRational) -> Result<BigUint> {
    let bad = || Error::NonIntegralDelta {
        r,
        k,
        n,
        value: value.to_string(),
    };
    if value.is_negative() || !value.denom().is_one() {
        return Err(bad());
    }
    value.numer().to_biguint().ok_or_else(bad)
}

/// `Δ_r(k, n)` for `2 ≤ r ≤ 4`.
pub fn delta(r: usize, k: usize, n: usize) -> Result<BigRational> {
    check_rank(r)?;
    let harmonic = HarmonicValues::up_to(n.max(1));
    Ok(DeltaColumn::new(r, n, &harmonic)?.rational(r, k))
}

/// `Δ_r(k, n)` checked to be a nonnegative integer.
pub fn delta_integer(r: usize, k: usize, n: usize) -> Result<BigUint> {
    let value = delta(r, k, n)?;
    to_natural(r, k, n, &value)
}

/// Closed form `(n−1)!/(n−k)! · c(n−k+1, r)` on `1 ≤ k ≤ n`, zero elsewhere.
pub fn delta_closed_form(r: usize, k: usize, n: usize, stirling: &[Vec<BigUint>]) -> BigUint {
    if k == 0 || k > n {
        return BigUint::zero();
    }
    let falling: BigUint = ((n - k + 1)..n).map(BigUint::from).product();
    let c = stirling[n - k + 1].get(r).cloned().unwrap_or_default();
    falling * c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ktp::harmonic::stirling_first_table;

    #[test]
    fn worked_example_values() {
        assert_eq!(delta_integer(2, 1, 4).unwrap(), BigUint::from(11u32));
        assert_eq!(delta_integer(2, 2, 4).unwrap(), BigUint::from(9u32));
        assert_eq!(delta_integer(2, 3, 4).unwrap(), BigUint::from(6u32));
        assert_eq!(delta_integer(2, 1, 2).unwrap(), BigUint::from(1u32));
        assert_eq!(delta_integer(2, 1, 3).unwrap(), BigUint::from(3u32));
    }

    #[test]
    fn outside_domain_is_zero() {
        assert!(delta(3, 0, 5).unwrap().is_zero());
        assert!(delta(3, 6, 5).unwrap().is_zero());
        assert!(delta(4, 1, 0).unwrap().is_zero());
    }

    #[test]
    fn rank_range_enforced() {
        assert!(matches!(delta(1, 1, 3), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(delta(5, 1, 3), Err(Error::RankOutOfRange { .. })));
    }

    #[test]
    fn recursion_matches_closed_form() {
        let stirling = stirling_first_table(40);
        let harmonic = HarmonicValues::up_to(40);
        for n in 0..=40 {
            let col = DeltaColumn::new(4, n, &harmonic).unwrap();
            for r in 2..=4 {
                for k in 0..=n + 1 {
                    assert_eq!(col.integer(r, k).unwrap(), delta_closed_form(r, k, n, &stirling), "r={r} k={k} n={n}");
                }
            }
        }
    }
}
