//! Cumulative-count recursions for permutations: `u_r(k, n)` counts
//! permutations whose r-th longest cycle has at most `k` nodes, and
//! `v_r(k, n)` those whose r-th shortest cycle has at least `k` nodes.
//!
//! The `v_r` recursion for `r ≥ 2` carries the correction term `Δ_r(k, n)`
//! and is conjectural: tables built from it are flagged accordingly and are
//! checked against the row-polynomial engine.

mod delta;
mod exact;
mod float;
mod harmonic;

use num_bigint::BigUint;
use rayon::prelude::*;

pub use delta::{delta, delta_closed_form, delta_integer, DeltaColumn, MAX_DELTA_RANK, MIN_DELTA_RANK};
pub use harmonic::{reciprocal_elementary_symmetric, stirling_first, stirling_first_table, HarmonicValues};

use crate::error::{Error, Result};
use crate::kind::{ObjectKind, Side};
use crate::numeric::ratio_to_f64;
use crate::pmf::ComponentPmf;

pub const MAX_KTP_RANK: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `u`: r-th longest cycle has at most `k` nodes.
    AtMostK,
    /// `v`: r-th shortest cycle has at least `k` nodes.
    AtLeastK,
}

impl Direction {
    pub fn side(self) -> Side {
        match self {
            Direction::AtMostK => Side::Largest,
            Direction::AtLeastK => Side::Smallest,
        }
    }

    pub fn for_side(side: Side) -> Self {
        match side {
            Side::Largest => Direction::AtMostK,
            Side::Smallest => Direction::AtLeastK,
        }
    }
}

fn check_rank(r: usize) -> Result<()> {
    if !(1..=MAX_KTP_RANK).contains(&r) {
        return Err(Error::RankOutOfRange {
            what: "the cumulative-count recursions",
            rank: r,
            min: 1,
            max: MAX_KTP_RANK,
        });
    }
    Ok(())
}

fn is_conjectural(direction: Direction, r: usize) -> bool {
    direction == Direction::AtLeastK && r >= 2
}

/// Exact table `values[k][n]` for `0 ≤ k ≤ k_max`, `0 ≤ n ≤ n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct CumulativeCountTable {
    r: usize,
    direction: Direction,
    values: Vec<Vec<BigUint>>,
    factorials: Vec<BigUint>,
    conjectural: bool,
}

impl CumulativeCountTable {
    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Set when the table comes from the correction-term recursion.
    pub fn conjectural(&self) -> bool {
        self.conjectural
    }

    pub fn k_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn n_max(&self) -> usize {
        self.factorials.len() - 1
    }

    pub fn get(&self, k: usize, n: usize) -> &BigUint {
        &self.values[k][n]
    }

    /// `value(k, n) / n!`.
    pub fn normalized(&self, k: usize, n: usize) -> f64 {
        ratio_to_f64(&self.values[k][n], &self.factorials[n])
    }
}

fn build_table(direction: Direction, r: usize, k_max: usize, n_max: usize) -> Result<CumulativeCountTable> {
    check_rank(r)?;
    let factorials = exact::factorials(n_max);
    let deltas = match direction {
        Direction::AtMostK => Vec::new(),
        Direction::AtLeastK => exact::delta_integers(r, n_max)?,
    };
    let values = (0..=k_max)
        .into_par_iter()
        .map(|k| {
            exact::sweep(direction, r, k, n_max, &factorials, &deltas)
                .pop()
                .expect("at least one level")
        })
        .collect();
    Ok(CumulativeCountTable {
        r,
        direction,
        values,
        factorials,
        conjectural: is_conjectural(direction, r),
    })
}

/// `u_r(k, n)`.
pub fn u_table(r: usize, k_max: usize, n_max: usize) -> Result<CumulativeCountTable> {
    build_table(Direction::AtMostK, r, k_max, n_max)
}

/// `v_r(k, n)`. Rank 1 uses the correction-free recursion.
pub fn v_table(r: usize, k_max: usize, n_max: usize) -> Result<CumulativeCountTable> {
    build_table(Direction::AtLeastK, r, k_max, n_max)
}

/// Exact column `value(k, n)` for `0 ≤ k ≤ n + 1`, keeping only one `k`
/// sweep in memory at a time.
pub fn exact_column(direction: Direction, r: usize, n: usize) -> Result<Vec<BigUint>> {
    check_rank(r)?;
    let factorials = exact::factorials(n);
    let deltas = match direction {
        Direction::AtMostK => Vec::new(),
        Direction::AtLeastK => exact::delta_integers(r, n)?,
    };
    Ok((0..=n + 1)
        .into_par_iter()
        .map(|k| {
            exact::sweep(direction, r, k, n, &factorials, &deltas)
                .pop()
                .and_then(|mut level| level.pop())
                .expect("nonempty sweep")
        })
        .collect())
}

/// Normalised table `values[k][n] = value(k, n) / n!` in `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatCumulativeTable {
    r: usize,
    direction: Direction,
    values: Vec<Vec<f64>>,
    conjectural: bool,
}

impl FloatCumulativeTable {
    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn conjectural(&self) -> bool {
        self.conjectural
    }

    pub fn k_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn n_max(&self) -> usize {
        self.values[0].len() - 1
    }

    pub fn get(&self, k: usize, n: usize) -> f64 {
        self.values[k][n]
    }
}

/// `w_r(k, n) = u_r(k, n) / n!`.
pub fn u_table_float(r: usize, k_max: usize, n_max: usize) -> Result<FloatCumulativeTable> {
    check_rank(r)?;
    Ok(FloatCumulativeTable {
        r,
        direction: Direction::AtMostK,
        values: float::grid(Direction::AtMostK, r, k_max, n_max),
        conjectural: false,
    })
}

/// `v_r(k, n) / n!`.
pub fn v_table_float(r: usize, k_max: usize, n_max: usize) -> Result<FloatCumulativeTable> {
    check_rank(r)?;
    Ok(FloatCumulativeTable {
        r,
        direction: Direction::AtLeastK,
        values: float::grid(Direction::AtLeastK, r, k_max, n_max),
        conjectural: is_conjectural(Direction::AtLeastK, r),
    })
}

/// Exact PMF of the r-th longest (`Largest`) or shortest (`Smallest`) cycle
/// by differencing the cumulative counts.
pub fn pmf_from_tables(r: usize, n: usize, side: Side) -> Result<ComponentPmf> {
    if n == 0 {
        return Err(Error::EmptyObject);
    }
    let direction = Direction::for_side(side);
    let col = exact_column(direction, r, n)?;
    let counts: Vec<BigUint> = match direction {
        Direction::AtMostK => (0..=n)
            .map(|k| if k == 0 { col[0].clone() } else { &col[k] - &col[k - 1] })
            .collect(),
        Direction::AtLeastK => (0..=n).map(|k| &col[k] - &col[k + 1]).collect(),
    };
    Ok(ComponentPmf::from_counts(ObjectKind::Permutation, n, r, side, counts))
}

fn float_pmf_from_column(r: usize, n: usize, side: Side, col: &[f64]) -> ComponentPmf {
    let probs: Vec<f64> = match side {
        Side::Largest => (0..=n)
            .map(|k| if k == 0 { col[0] } else { col[k] - col[k - 1] })
            .collect(),
        Side::Smallest => (0..=n)
            .map(|k| col[k] - col.get(k + 1).copied().unwrap_or(0.0))
            .collect(),
    };
    ComponentPmf::from_float(ObjectKind::Permutation, n, r, side, probs)
}

/// Float PMFs for several `n` from one normalised sweep.
pub fn pmfs_from_tables_float(r: usize, ns: &[usize], side: Side) -> Result<Vec<ComponentPmf>> {
    check_rank(r)?;
    if ns.contains(&0) {
        return Err(Error::EmptyObject);
    }
    let cols = float::columns(Direction::for_side(side), r, ns);
    Ok(ns
        .iter()
        .zip(&cols)
        .map(|(&n, col)| float_pmf_from_column(r, n, side, col))
        .collect())
}

pub fn pmf_from_tables_float(r: usize, n: usize, side: Side) -> Result<ComponentPmf> {
    Ok(pmfs_from_tables_float(r, &[n], side)?.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(t: &CumulativeCountTable, k: usize, n: usize) -> u64 {
        u64::try_from(t.get(k, n)).unwrap()
    }

    #[test]
    fn u_fixtures() {
        let u2 = u_table(2, 4, 4).unwrap();
        assert_eq!([0, 1, 2].map(|k| small(&u2, k, 4)), [6, 21, 24]);
        assert_eq!(small(&u2, 1, 3), 6);
        assert_eq!(small(&u2, 1, 2), 2);
        let u1 = u_table(1, 1, 12).unwrap();
        for n in 0..=12 {
            assert_eq!(small(&u1, 1, n), 1);
            assert_eq!(small(&u1, 0, n), u64::from(n == 0));
        }
        assert!(!u2.conjectural());
    }

    #[test]
    fn v_fixtures() {
        let v2 = v_table(2, 5, 4).unwrap();
        assert_eq!([1, 2, 3].map(|k| small(&v2, k, 4)), [18, 11, 8]);
        assert_eq!(small(&v2, 0, 4), 24);
        assert_eq!(small(&v2, 1, 3), 4);
        assert_eq!(small(&v2, 1, 2), 1);
        assert_eq!(small(&v2, 4, 4), 0);
        assert!(v2.conjectural());
        let v1 = v_table(1, 4, 3).unwrap();
        assert_eq!(small(&v1, 2, 3), 2);
        assert_eq!(small(&v1, 3, 3), 2);
        assert_eq!(small(&v1, 4, 3), 0);
        assert!(!v1.conjectural());
    }

    #[test]
    fn table_pmfs() {
        let p = pmf_from_tables(2, 4, Side::Largest).unwrap();
        let c: Vec<u32> = p.counts().unwrap().iter().map(|c| u32::try_from(c).unwrap()).collect();
        assert_eq!(c, [6, 15, 3]);
        let q = pmf_from_tables(2, 4, Side::Smallest).unwrap();
        let c: Vec<u32> = q.counts().unwrap().iter().map(|c| u32::try_from(c).unwrap()).collect();
        assert_eq!(c, [6, 7, 3, 8]);
        let one = pmf_from_tables(2, 1, Side::Largest).unwrap();
        assert_eq!(one.support_len(), 1);
        assert_eq!(one.probability(0), 1.0);
    }

    #[test]
    fn float_fixture() {
        let w = u_table_float(2, 3, 4).unwrap();
        assert_eq!([0, 1, 2].map(|k| w.get(k, 4)), [0.25, 0.875, 1.0]);
        assert_eq!(w.get(3, 4), 1.0);
    }

    #[test]
    fn float_agrees_with_exact() {
        for r in 1..=4 {
            let (ue, uf) = (u_table(r, 61, 60).unwrap(), u_table_float(r, 61, 60).unwrap());
            let (ve, vf) = (v_table(r, 61, 60).unwrap(), v_table_float(r, 61, 60).unwrap());
            for n in 0..=60 {
                for k in 0..=61 {
                    for (e, f) in [(ue.normalized(k, n), uf.get(k, n)), (ve.normalized(k, n), vf.get(k, n))] {
                        assert!((e - f).abs() <= 1e-12 * e.abs(), "r={r} k={k} n={n}: {e} vs {f}");
                    }
                }
            }
        }
    }

    #[test]
    fn rank_limits() {
        assert!(u_table(0, 1, 1).is_err());
        assert!(v_table(5, 1, 1).is_err());
        assert_eq!(pmf_from_tables(2, 0, Side::Largest), Err(Error::EmptyObject));
    }
}
