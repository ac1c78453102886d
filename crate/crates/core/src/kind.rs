//! Object kinds and the basic counting sequences behind every recursion.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Which combinatorial class is being sampled uniformly at random.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectKind {
    /// Permutations of `{1..n}`; components are cycles. Exp-log type a = 1.
    Permutation,
    /// Arbitrary maps `{1..n} -> {1..n}`; components are weakly connected
    /// pieces of the functional graph. Exp-log type a = 1/2.
    Mapping,
}

impl ObjectKind {
    pub const ALL: [ObjectKind; 2] = [ObjectKind::Permutation, ObjectKind::Mapping];

    /// The exp-log parameter `a`.
    pub fn exp_log_parameter(self) -> f64 {
        match self {
            ObjectKind::Permutation => 1.0,
            ObjectKind::Mapping => 0.5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ObjectKind::Permutation => "permutation",
            ObjectKind::Mapping => "mapping",
        }
    }
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether the r-th largest or the r-th smallest component is tracked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Largest,
    Smallest,
}

impl Side {
    pub const ALL: [Side; 2] = [Side::Largest, Side::Smallest];

    pub fn name(self) -> &'static str {
        match self {
            Side::Largest => "largest",
            Side::Smallest => "smallest",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Number of connected n-objects, `c_n`.
///
/// For mappings this uses the all-integer form
/// `sum_{j=1}^{n} (n-1)!/(n-j)! * n^(n-j)`.
pub fn connected_count(kind: ObjectKind, n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::EmptyObject);
    }
    Ok(match kind {
        ObjectKind::Permutation => factorial(n - 1),
        ObjectKind::Mapping => {
            let base = BigUint::from(n);
            // powers[i] = n^i
            let mut powers = Vec::with_capacity(n);
            powers.push(BigUint::one());
            for i in 1..n {
                let next = &powers[i - 1] * &base;
                powers.push(next);
            }
            let mut falling = BigUint::one(); // (n-1)!/(n-j)!
            let mut sum = BigUint::zero();
            for j in 1..=n {
                if j > 1 {
                    falling *= n - j + 1;
                }
                sum += &falling * &powers[n - j];
            }
            sum
        }
    })
}

/// Total number of n-objects: `n!` or `n^n` (with `0^0 = 1`).
pub fn total_count(kind: ObjectKind, n: usize) -> BigUint {
    match kind {
        ObjectKind::Permutation => factorial(n),
        ObjectKind::Mapping => num_traits::pow(BigUint::from(n), n),
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Lazily grown tables of `c_j`, totals and binomial coefficients shared by
/// the recursion engines.
#[derive(Debug, Clone)]
pub struct CountTable {
    kind: ObjectKind,
    connected: Vec<BigUint>,
    totals: Vec<BigUint>,
    binomials: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn new(kind: ObjectKind) -> Self {
        CountTable {
            kind,
            connected: vec![BigUint::zero()],
            totals: vec![BigUint::one()],
            binomials: vec![vec![BigUint::one()]],
        }
    }

    pub fn kind(&self) -> ObjectKind {
        self.kind
    }

    /// Make every quantity up to size `n` available.
    pub fn ensure(&mut self, n: usize) {
        while self.connected.len() <= n {
            let j = self.connected.len();
            self.connected
                .push(connected_count(self.kind, j).expect("j >= 1"));
        }
        while self.totals.len() <= n {
            let j = self.totals.len();
            self.totals.push(total_count(self.kind, j));
        }
        while self.binomials.len() <= n {
            let prev = self.binomials.last().expect("row 0 present");
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigUint::one());
            for i in 1..prev.len() {
                row.push(&prev[i - 1] + &prev[i]);
            }
            row.push(BigUint::one());
            self.binomials.push(row);
        }
    }

    /// `c_j`; requires `ensure(j)`.
    pub fn connected(&self, j: usize) -> &BigUint {
        &self.connected[j]
    }

    pub fn total(&self, n: usize) -> &BigUint {
        &self.totals[n]
    }

    /// `C(n, k)`; requires `ensure(n)` and `k <= n`.
    pub fn binomial(&self, n: usize, k: usize) -> &BigUint {
        &self.binomials[n][k]
    }

    /// Weight of extracting the component of size `j` that contains the
    /// smallest label from an object of size `m`: `c_j * C(m-1, j-1)`.
    pub fn extraction_weight(&self, m: usize, j: usize) -> BigUint {
        self.connected(j) * self.binomial(m - 1, j - 1)
    }
}
