use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Order ceiling of the tabulated Dickman functions.
pub const MAX_DICKMAN_ORDER: usize = 4;
/// Default upper end of the table; covers `1/ξ₄ ≈ 36.9`.
pub const DEFAULT_X_MAX: usize = 40;
/// Taylor degree per unit interval. The series about `i + 1/2` has radius
/// at least 3/2 while evaluation stays within 1/2 of the centre.
pub const DEFAULT_DEGREE: usize = 56;

/// Higher order Dickman functions `ρ_1, …, ρ_{r_max}` on `[0, x_max]`,
/// stored as one Taylor polynomial per order and unit interval, expanded
/// about the interval midpoint.
///
/// `ρ_r` solves `x ρ_r'(x) = ρ_{r−1}(x−1) − ρ_r(x−1)` for `x > 1` with
/// `ρ_r = 1` on `[0, 1]` and `ρ_0 ≡ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct DickmanTable {
    r_max: usize,
    x_max: usize,
    degree: usize,
    // [order - 1][interval][j]
    coeffs: Vec<Vec<Vec<f64>>>,
}

impl DickmanTable {
    pub fn new(r_max: usize, x_max: usize) -> Result<Self> {
        Self::with_degree(r_max, x_max, DEFAULT_DEGREE)
    }

    pub fn with_degree(r_max: usize, x_max: usize, degree: usize) -> Result<Self> {
        if !(1..=MAX_DICKMAN_ORDER).contains(&r_max) {
            return Err(Error::RankOutOfRange {
                what: "the Dickman table",
                rank: r_max,
                min: 1,
                max: MAX_DICKMAN_ORDER,
            });
        }
        let x_max = x_max.max(1);
        let zero = vec![vec![0.0; degree + 1]; x_max];
        let mut coeffs: Vec<Vec<Vec<f64>>> = Vec::with_capacity(r_max);
        for order in 1..=r_max {
            let lower = if order == 1 { &zero } else { &coeffs[order - 2] };
            let table = solve_order(lower, x_max, degree);
            coeffs.push(table);
        }
        Ok(DickmanTable {
            r_max,
            x_max,
            degree,
            coeffs,
        })
    }

    /// Rebuilds a table from [`DickmanTable::coefficients`] output.
    pub fn from_coefficients(r_max: usize, x_max: usize, degree: usize, flat: &[f64]) -> Option<Self> {
        if !(1..=MAX_DICKMAN_ORDER).contains(&r_max) || flat.len() != r_max * x_max * (degree + 1) {
            return None;
        }
        let mut chunks = flat.chunks_exact(degree + 1);
        let coeffs = (0..r_max)
            .map(|_| (0..x_max).map(|_| chunks.next().expect("length checked").to_vec()).collect())
            .collect();
        Some(DickmanTable {
            r_max,
            x_max,
            degree,
            coeffs,
        })
    }

    /// All coefficients, order-major then interval then power.
    pub fn coefficients(&self) -> Vec<f64> {
        self.coeffs.iter().flatten().flatten().copied().collect()
    }

    pub fn r_max(&self) -> usize {
        self.r_max
    }

    pub fn x_max(&self) -> f64 {
        self.x_max as f64
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn check(&self, r: usize, x: f64) -> Result<()> {
        if r == 0 || r > self.r_max {
            return Err(Error::RankOutOfRange {
                what: "the Dickman table",
                rank: r,
                min: 1,
                max: self.r_max,
            });
        }
        if !(x >= 0.0) {
            return Err(Error::Domain { what: "the Dickman function", value: x });
        }
        if x > self.x_max as f64 {
            return Err(Error::OutOfTable { x, x_max: self.x_max as f64 });
        }
        Ok(())
    }

    /// `ρ_r(x)`.
    pub fn rho(&self, r: usize, x: f64) -> Result<f64> {
        self.check(r, x)?;
        Ok(self.rho_unchecked(r, x))
    }

    /// `ρ_r'(x)` (right derivative at integer knots), from the delay equation.
    pub fn rho_derivative(&self, r: usize, x: f64) -> Result<f64> {
        self.check(r, x)?;
        if x <= 1.0 {
            return Ok(0.0);
        }
        let lower = if r == 1 { 0.0 } else { self.rho_unchecked(r - 1, x - 1.0) };
        Ok((lower - self.rho_unchecked(r, x - 1.0)) / x)
    }

    /// Caller guarantees `1 ≤ r ≤ r_max` and `0 ≤ x ≤ x_max`; `r = 0` gives 0.
    pub(crate) fn rho_unchecked(&self, r: usize, x: f64) -> f64 {
        if r == 0 {
            return 0.0;
        }
        if x <= 1.0 {
            return 1.0;
        }
        let i = (x.floor() as usize).min(self.x_max - 1);
        let s = x - (i as f64 + 0.5);
        horner(&self.coeffs[r - 1][i], s)
    }
}

fn horner(c: &[f64], s: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &cj| acc * s + cj)
}

/// One order, given the previous order's table (all zero for order 1).
fn solve_order(lower: &[Vec<f64>], x_max: usize, degree: usize) -> Vec<Vec<f64>> {
    let mut table: Vec<Vec<f64>> = Vec::with_capacity(x_max);
    let mut first = vec![0.0; degree + 1];
    first[0] = 1.0;
    table.push(first);
    for i in 1..x_max {
        let m = i as f64 + 0.5;
        // Forcing e(x) = ρ_{r−1}(x−1) − ρ_r(x−1) in the local variable s.
        let e: Vec<f64> = lower[i - 1].iter().zip(&table[i - 1]).map(|(a, b)| a - b).collect();
        let mut c = vec![0.0; degree + 1];
        for j in 0..degree {
            c[j + 1] = (e[j] - j as f64 * c[j]) / (m * (j + 1) as f64);
        }
        let left_value = horner(&table[i - 1], 0.5);
        c[0] = left_value - horner(&c, -0.5);
        table.push(c);
    }
    table
}

static DEFAULT_TABLE: OnceLock<DickmanTable> = OnceLock::new();

/// Shared table of orders 1..=4 on `[0, 40]`.
pub fn default_table() -> &'static DickmanTable {
    DEFAULT_TABLE.get_or_init(|| DickmanTable::new(MAX_DICKMAN_ORDER, DEFAULT_X_MAX).expect("valid default order"))
}

/// Installs a precomputed shared table (for example one loaded from disk).
///
/// Only succeeds before the first use of [`default_table`], and only for a
/// table with the default shape; otherwise the table is handed back.
pub fn install_default_table(table: DickmanTable) -> std::result::Result<(), DickmanTable> {
    if table.r_max != MAX_DICKMAN_ORDER || table.x_max != DEFAULT_X_MAX {
        return Err(table);
    }
    DEFAULT_TABLE.set(table)
}

/// `ρ_r(x)` from the shared table.
pub fn dickman(r: usize, x: f64) -> Result<f64> {
    default_table().rho(r, x)
}

/// `P{Λ_r < x·n} → ρ_r(1/x)` for the scaled r-th longest cycle.
pub fn largest_cdf(r: usize, x: f64) -> Result<f64> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(Error::Domain {
            what: "the limiting distribution of the scaled r-th longest cycle",
            value: x,
        });
    }
    dickman(r, 1.0 / x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_interval_and_first_piece() {
        let t = default_table();
        for &x in &[0.0, 0.3, 1.0] {
            assert_eq!(t.rho(1, x).unwrap(), 1.0);
        }
        for &x in &[1.0, 1.25, 1.5, 1.9, 2.0] {
            assert!((t.rho(1, x).unwrap() - (1.0 - f64::ln(x))).abs() < 1e-15);
        }
        for &x in &[1.0, 1.5, 2.0] {
            assert!((t.rho(2, x).unwrap() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_outside_table() {
        let t = default_table();
        assert!(matches!(t.rho(1, 40.5), Err(Error::OutOfTable { .. })));
        assert!(t.rho(5, 1.0).is_err());
        assert!(t.rho(1, -0.1).is_err());
        assert!(largest_cdf(1, 0.0).is_err());
    }

    #[test]
    fn export_round_trip() {
        let t = DickmanTable::new(2, 6).unwrap();
        let back = DickmanTable::from_coefficients(2, 6, t.degree(), &t.coefficients()).unwrap();
        assert_eq!(t, back);
        assert!(DickmanTable::from_coefficients(2, 6, t.degree(), &[1.0]).is_none());
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let t = default_table();
        for r in 1..=4 {
            for &x in &[1.5, 2.7, 5.3, 11.1] {
                let h = 1e-5;
                let fd = (t.rho(r, x + h).unwrap() - t.rho(r, x - h).unwrap()) / (2.0 * h);
                assert!((fd - t.rho_derivative(r, x).unwrap()).abs() < 1e-9);
            }
        }
    }
}
