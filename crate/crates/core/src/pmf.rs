//! Probability mass functions of the r-th extreme component size and their
//! summary statistics.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::heinz::HeinzEngine;
use crate::kind::{total_count, ObjectKind, Side};
use crate::numeric::{ratio_to_f64, rational_to_f64};

#[derive(Debug, Clone, PartialEq)]
pub enum Masses {
    /// `counts[k] / total`, exactly.
    Exact { counts: Vec<BigUint>, total: BigUint },
    Float(Vec<f64>),
}

/// Distribution of the size of the r-th largest or r-th smallest component
/// of a uniformly random n-object. Index `k = 0` carries the probability
/// that there are fewer than `r` components.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentPmf {
    pub kind: ObjectKind,
    pub n: usize,
    pub rank: usize,
    pub side: Side,
    pub masses: Masses,
}

impl ComponentPmf {
    pub fn from_counts(kind: ObjectKind, n: usize, rank: usize, side: Side, mut counts: Vec<BigUint>) -> Self {
        trim(&mut counts, Zero::is_zero);
        ComponentPmf {
            kind,
            n,
            rank,
            side,
            masses: Masses::Exact {
                counts,
                total: total_count(kind, n),
            },
        }
    }

    pub fn from_float(kind: ObjectKind, n: usize, rank: usize, side: Side, mut probs: Vec<f64>) -> Self {
        trim(&mut probs, |p| *p == 0.0);
        ComponentPmf {
            kind,
            n,
            rank,
            side,
            masses: Masses::Float(probs),
        }
    }

    /// One past the largest size with nonzero mass.
    pub fn support_len(&self) -> usize {
        match &self.masses {
            Masses::Exact { counts, .. } => counts.len(),
            Masses::Float(p) => p.len(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.masses, Masses::Exact { .. })
    }

    pub fn probability(&self, k: usize) -> f64 {
        match &self.masses {
            Masses::Exact { counts, total } => counts.get(k).map_or(0.0, |c| ratio_to_f64(c, total)),
            Masses::Float(p) => p.get(k).copied().unwrap_or(0.0),
        }
    }

    pub fn exact_probability(&self, k: usize) -> Option<BigRational> {
        match &self.masses {
            Masses::Exact { counts, total } => Some(BigRational::new(
                BigInt::from(counts.get(k).cloned().unwrap_or_default()),
                BigInt::from(total.clone()),
            )),
            Masses::Float(_) => None,
        }
    }

    pub fn probabilities(&self) -> Vec<f64> {
        (0..self.support_len()).map(|k| self.probability(k)).collect()
    }

    pub fn counts(&self) -> Option<&[BigUint]> {
        match &self.masses {
            Masses::Exact { counts, .. } => Some(counts),
            Masses::Float(_) => None,
        }
    }

    /// Total mass as a float (exactly 1 for exact PMFs built from a full row).
    pub fn mass(&self) -> f64 {
        match &self.masses {
            Masses::Exact { counts, total } => ratio_to_f64(&counts.iter().sum(), total),
            Masses::Float(p) => p.iter().sum(),
        }
    }
}

fn trim<T>(v: &mut Vec<T>, is_zero: impl Fn(&T) -> bool) {
    while v.len() > 1 && v.last().is_some_and(&is_zero) {
        v.pop();
    }
}

/// Exact PMF from the row-polynomial recursion.
pub fn pmf(kind: ObjectKind, n: usize, rank: usize, side: Side) -> Result<ComponentPmf> {
    let mut engine = HeinzEngine::new(kind, side);
    pmf_with(&mut engine, n, rank)
}

/// Exact PMF reusing an existing engine (and its memo table).
pub fn pmf_with(engine: &mut HeinzEngine, n: usize, rank: usize) -> Result<ComponentPmf> {
    if n == 0 {
        return Err(Error::EmptyObject);
    }
    let poly = engine.full_polynomial(n, rank)?;
    Ok(ComponentPmf::from_counts(
        engine.kind(),
        n,
        rank,
        engine.side(),
        poly.into_coeffs(),
    ))
}

/// Mean, variance, median and mode together with the scaled versions used
/// in the normalised tables.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryStats {
    pub mean: f64,
    pub variance: f64,
    /// Present when the PMF is exact.
    pub exact_mean: Option<BigRational>,
    pub exact_variance: Option<BigRational>,
    /// Greatest `k` with `P{size <= k} < 1/2`, or 0 when `P{size = 0} >= 1/2`.
    pub median: usize,
    /// Least `k` maximising `P{size = k}`.
    pub mode: usize,
    pub normalized_mean: f64,
    pub normalized_variance: f64,
    pub normalized_median: f64,
    pub normalized_mode: f64,
}

/// Divisors `(mean, variance)` of the table normalisation.
///
/// Largest side: `n` and `n²`. Smallest side: `ln(n)^r` and `n ln(n)^(r-1)`
/// for permutations, `n^(1/2) ln(n)^(r-1)` and `n^(3/2) ln(n)^(r-1)` for
/// mappings. Medians and modes are always divided by `n`.
pub fn normalizers(kind: ObjectKind, side: Side, n: usize, rank: usize) -> (f64, f64) {
    let nf = n as f64;
    let ln = nf.ln();
    let r = rank as i32;
    match (side, kind) {
        (Side::Largest, _) => (nf, nf * nf),
        (Side::Smallest, ObjectKind::Permutation) => (ln.powi(r), nf * ln.powi(r - 1)),
        (Side::Smallest, ObjectKind::Mapping) => (nf.sqrt() * ln.powi(r - 1), nf.powf(1.5) * ln.powi(r - 1)),
    }
}

pub fn stats(pmf: &ComponentPmf) -> SummaryStats {
    let (mean, variance, exact_mean, exact_variance, median, mode) = match &pmf.masses {
        Masses::Exact { counts, total } => exact_moments(counts, total),
        Masses::Float(p) => float_moments(p),
    };
    let (mu_div, var_div) = normalizers(pmf.kind, pmf.side, pmf.n, pmf.rank);
    let nf = pmf.n as f64;
    SummaryStats {
        mean,
        variance,
        exact_mean,
        exact_variance,
        median,
        mode,
        normalized_mean: mean / mu_div,
        normalized_variance: variance / var_div,
        normalized_median: median as f64 / nf,
        normalized_mode: mode as f64 / nf,
    }
}

type Moments = (f64, f64, Option<BigRational>, Option<BigRational>, usize, usize);

fn exact_moments(counts: &[BigUint], total: &BigUint) -> Moments {
    let mut first = BigUint::zero();
    let mut second = BigUint::zero();
    let mut cumulative = BigUint::zero();
    let mut median = 0;
    let mut mode = 0;
    for (k, c) in counts.iter().enumerate() {
        first += c * k;
        second += c * (k * k);
        cumulative += c;
        if &cumulative * 2u32 < *total {
            median = k;
        }
        if c > &counts[mode] {
            mode = k;
        }
    }
    let total_i = BigInt::from(total.clone());
    let mean = BigRational::new(BigInt::from(first), total_i.clone());
    let second = BigRational::new(BigInt::from(second), total_i);
    let variance = second - &mean * &mean;
    (
        rational_to_f64(&mean),
        rational_to_f64(&variance),
        Some(mean),
        Some(variance),
        median,
        mode,
    )
}

fn float_moments(p: &[f64]) -> Moments {
    let mean: f64 = p.iter().enumerate().map(|(k, &q)| k as f64 * q).sum();
    let variance: f64 = p
        .iter()
        .enumerate()
        .map(|(k, &q)| {
            let d = k as f64 - mean;
            d * d * q
        })
        .sum();
    let mut cumulative = 0.0;
    let mut median = 0;
    let mut mode = 0;
    for (k, &q) in p.iter().enumerate() {
        cumulative += q;
        if cumulative < 0.5 {
            median = k;
        }
        if q > p[mode] {
            mode = k;
        }
    }
    (mean, variance, None, None, median, mode)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_pmfs() {
        let p = pmf(ObjectKind::Permutation, 4, 2, Side::Largest).unwrap();
        assert_eq!(p.exact_probability(1).unwrap(), BigRational::new(15.into(), 24.into()));
        assert_eq!(p.support_len(), 3);
        let q = pmf(ObjectKind::Mapping, 4, 2, Side::Smallest).unwrap();
        let c: Vec<u32> = q.counts().unwrap().iter().map(|c| u32::try_from(c).unwrap()).collect();
        assert_eq!(c, [142, 19, 27, 68]);
        let one = pmf(ObjectKind::Permutation, 1, 2, Side::Largest).unwrap();
        assert_eq!(one.support_len(), 1);
        assert_eq!(one.probability(0), 1.0);
        assert_eq!(pmf(ObjectKind::Permutation, 0, 2, Side::Largest), Err(Error::EmptyObject));
    }

    #[test]
    fn exact_stats_of_hand_example() {
        let p = pmf(ObjectKind::Permutation, 4, 2, Side::Largest).unwrap();
        let s = stats(&p);
        assert_eq!(s.exact_mean, Some(BigRational::new(7.into(), 8.into())));
        // E[k^2] = (15 + 12)/24 = 9/8, variance = 9/8 - 49/64 = 23/64
        assert_eq!(s.exact_variance, Some(BigRational::new(23.into(), 64.into())));
        // P{size <= 0} = 1/4 < 1/2 <= P{size <= 1}
        assert_eq!(s.median, 0);
        assert_eq!(s.mode, 1);
        assert_eq!(s.normalized_mean, 0.875 / 4.0);
    }

    #[test]
    fn float_and_exact_stats_agree() {
        let p = pmf(ObjectKind::Mapping, 12, 3, Side::Smallest).unwrap();
        let f = ComponentPmf::from_float(p.kind, p.n, p.rank, p.side, p.probabilities());
        let (a, b) = (stats(&p), stats(&f));
        assert!((a.mean - b.mean).abs() < 1e-14);
        assert!((a.variance - b.variance).abs() < 1e-13);
        assert_eq!((a.median, a.mode), (b.median, b.mode));
    }

    #[test]
    fn mode_ties_pick_least() {
        let f = ComponentPmf::from_float(ObjectKind::Permutation, 3, 1, Side::Largest, vec![0.0, 0.4, 0.4, 0.2]);
        assert_eq!(stats(&f).mode, 1);
        assert_eq!(stats(&f).median, 1);
        let heavy_zero = ComponentPmf::from_float(ObjectKind::Permutation, 3, 1, Side::Largest, vec![0.6, 0.2, 0.2]);
        assert_eq!(stats(&heavy_zero).median, 0);
    }
}
