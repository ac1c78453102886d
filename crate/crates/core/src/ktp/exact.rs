use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::delta::DeltaColumn;
use super::harmonic::HarmonicValues;
use super::Direction;
use crate::error::Result;

/// `n!` for `0 ≤ n ≤ n_max`.
pub(super) fn factorials(n_max: usize) -> Vec<BigUint> {
    let mut f = vec![BigUint::one()];
    for n in 1..=n_max {
        let next = &f[n - 1] * BigUint::from(n);
        f.push(next);
    }
    f
}

/// Integer correction terms `[n][s][k]`, `s` offset by 2.
pub(super) fn delta_integers(r: usize, n_max: usize) -> Result<Vec<Vec<Vec<BigUint>>>> {
    if r < 2 {
        return Ok(vec![Vec::new(); n_max + 1]);
    }
    let harmonic = HarmonicValues::up_to(n_max.max(1));
    (0..=n_max)
        .map(|n| {
            let col = DeltaColumn::new(r, n, &harmonic)?;
            (2..=r)
                .map(|s| (0..=n + 1).map(|k| col.integer(s, k)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()
        })
        .collect()
}

/// All levels `1..=r` at fixed `k` for `0 ≤ n ≤ n_max`, indexed `[s-1][n]`.
pub(super) fn sweep(
    direction: Direction,
    r: usize,
    k: usize,
    n_max: usize,
    fact: &[BigUint],
    deltas: &[Vec<Vec<BigUint>>],
) -> Vec<Vec<BigUint>> {
    let mut levels: Vec<Vec<BigUint>> = Vec::with_capacity(r);
    for s in 1..=r {
        let mut col: Vec<BigUint> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let prev = if s >= 2 { Some(&levels[s - 2]) } else { None };
            let value = match direction {
                Direction::AtMostK => u_entry(s, k, n, &col, prev, fact),
                Direction::AtLeastK => v_entry(s, k, n, &col, prev, fact, deltas),
            };
            col.push(value);
        }
        levels.push(col);
    }
    levels
}

/// `Σ_{m ∈ range} (n−1)!/(n−1−m)! · col[n−1−m]`.
fn falling_sum(n: usize, ms: std::ops::Range<usize>, col: &[BigUint]) -> BigUint {
    let mut acc = BigUint::zero();
    let mut ff = BigUint::one();
    for m in 0..ms.end.min(n) {
        if m > 0 {
            ff *= BigUint::from(n - m);
        }
        if m >= ms.start && !col[n - 1 - m].is_zero() {
            acc += &ff * &col[n - 1 - m];
        }
    }
    acc
}

fn u_entry(s: usize, k: usize, n: usize, own: &[BigUint], lower: Option<&Vec<BigUint>>, fact: &[BigUint]) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    if k >= n / s {
        return fact[n].clone();
    }
    let mut acc = falling_sum(n, 0..k, own);
    if let Some(lower) = lower {
        acc += falling_sum(n, k..n, lower);
    }
    acc
}

fn v_entry(
    s: usize,
    k: usize,
    n: usize,
    own: &[BigUint],
    lower: Option<&Vec<BigUint>>,
    fact: &[BigUint],
    deltas: &[Vec<Vec<BigUint>>],
) -> BigUint {
    match lower {
        None => {
            if n == 0 {
                BigUint::one()
            } else if k == 0 {
                fact[n].clone()
            } else if k <= n {
                falling_sum(n, (k - 1)..n, own)
            } else {
                BigUint::zero()
            }
        }
        Some(lower) => {
            if k == 0 {
                fact[n].clone()
            } else if n >= 1 && k + s <= n + 1 {
                let mut acc = deltas[n][s - 2][k].clone();
                acc += falling_sum(n, 0..(k - 1), lower);
                acc += falling_sum(n, (k - 1)..n, own);
                acc
            } else {
                BigUint::zero()
            }
        }
    }
}
