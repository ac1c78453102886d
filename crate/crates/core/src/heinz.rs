//! Exact row-polynomial recursion over rank lists.
//!
//! `p[n, ℓ] = Σ_j c_j p[n-j, ℓ^j] C(n-1, j-1)` with `p[0, ℓ] = x^{i_1}`, and
//! the mirrored recursion `q[n, ℓ]` with `ℓ_j` and base `y^{i_r}` (or `y^0`
//! when `i_r = ∞`). Each term extracts the component containing the
//! smallest remaining label.
//!
//! Memo keys are canonicalised without changing the polynomial they map to:
//!
//! * largest side, remaining size `m ≥ 1`: entries `> m` can never be
//!   displaced and never become the answer unless every entry is `> m`. If
//!   all are, the row is `total(m) x^{i_1}`; otherwise they are clamped to
//!   `m + 1`.
//! * smallest side, `m ≥ 1`: an entry `i_r > m` is certainly displaced by
//!   the next component, so it is equivalent to `∞`.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::kind::{CountTable, ObjectKind, Side};
use crate::poly::RowPolynomial;
use crate::ranklist::{Entry, RankList};

type Coeffs = Arc<Vec<BigUint>>;

/// Memoised evaluator for one `(kind, side)` pair.
///
/// A single engine may be reused for many `n` and rank lists; sub-results are
/// shared through the memo table.
#[derive(Debug, Clone)]
pub struct HeinzEngine {
    kind: ObjectKind,
    side: Side,
    counts: CountTable,
    memo: FxHashMap<(usize, RankList), Coeffs>,
}

impl HeinzEngine {
    pub fn new(kind: ObjectKind, side: Side) -> Self {
        HeinzEngine {
            kind,
            side,
            counts: CountTable::new(kind),
            memo: FxHashMap::default(),
        }
    }

    pub fn kind(&self) -> ObjectKind {
        self.kind
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Number of memoised `(m, ℓ)` states so far.
    pub fn state_count(&self) -> usize {
        self.memo.len()
    }

    pub fn counts(&mut self, n: usize) -> &CountTable {
        self.counts.ensure(n);
        &self.counts
    }

    /// `p[n, ℓ]` or `q[n, ℓ]` depending on the engine side.
    pub fn row_polynomial(&mut self, n: usize, list: &RankList) -> Result<RowPolynomial> {
        if self.side == Side::Largest && !list.all_finite() {
            return Err(Error::InfiniteEntry);
        }
        self.counts.ensure(n);
        let coeffs = self.eval(n, list);
        Ok(RowPolynomial::new(n, self.side, coeffs.as_ref().clone()))
    }

    /// Row polynomial at the standard root (`{0,…,0}` or `{∞,…,∞}`).
    pub fn full_polynomial(&mut self, n: usize, rank: usize) -> Result<RowPolynomial> {
        let root = match self.side {
            Side::Largest => RankList::zeros(rank)?,
            Side::Smallest => RankList::infinities(rank)?,
        };
        self.row_polynomial(n, &root)
    }

    fn eval(&mut self, m: usize, list: &RankList) -> Coeffs {
        if m == 0 {
            return Arc::new(self.base(list));
        }
        let list = match self.canonical(m, list) {
            Canonical::Key(l) => l,
            Canonical::Closed(c) => return Arc::new(c),
        };
        if let Some(hit) = self.memo.get(&(m, list.clone())) {
            return Arc::clone(hit);
        }
        let mut acc: Vec<BigUint> = Vec::new();
        for j in 1..=m {
            let next = match self.side {
                Side::Largest => list.promote(j as u32),
                Side::Smallest => list.demote(j as u32),
            };
            let sub = self.eval(m - j, &next);
            let weight = self.counts.extraction_weight(m, j);
            if acc.len() < sub.len() {
                acc.resize(sub.len(), BigUint::zero());
            }
            for (a, s) in acc.iter_mut().zip(sub.iter()) {
                if !s.is_zero() {
                    *a += &weight * s;
                }
            }
        }
        let coeffs = Arc::new(acc);
        self.memo.insert((m, list), Arc::clone(&coeffs));
        coeffs
    }

    fn base(&self, list: &RankList) -> Vec<BigUint> {
        let power = match self.side {
            Side::Largest => list.first().finite().expect("largest lists are finite"),
            Side::Smallest => list.last().finite().unwrap_or(0),
        };
        monomial(power as usize, BigUint::one())
    }

    fn canonical(&self, m: usize, list: &RankList) -> Canonical {
        let bound = Entry::Finite(m as u32);
        match self.side {
            Side::Largest => {
                if list.first() > bound {
                    let power = list.first().finite().expect("finite") as usize;
                    return Canonical::Closed(monomial(power, self.counts.total(m).clone()));
                }
                let mut out = list.clone();
                for (i, &e) in list.entries().iter().enumerate() {
                    if e > bound {
                        out = out.with_entry(i, Entry::Finite(m as u32 + 1));
                    }
                }
                Canonical::Key(out)
            }
            Side::Smallest => {
                let last = list.last();
                if !last.is_infinite() && last > bound {
                    Canonical::Key(list.with_entry(list.rank() - 1, Entry::Infinite))
                } else {
                    Canonical::Key(list.clone())
                }
            }
        }
    }
}

enum Canonical {
    Key(RankList),
    Closed(Vec<BigUint>),
}

fn monomial(power: usize, coeff: BigUint) -> Vec<BigUint> {
    let mut v = vec![BigUint::zero(); power + 1];
    v[power] = coeff;
    v
}

/// `p[n, ℓ]` for a finite rank list.
pub fn largest_poly(kind: ObjectKind, n: usize, list: &RankList) -> Result<RowPolynomial> {
    HeinzEngine::new(kind, Side::Largest).row_polynomial(n, list)
}

/// `q[n, ℓ]`.
pub fn smallest_poly(kind: ObjectKind, n: usize, list: &RankList) -> Result<RowPolynomial> {
    HeinzEngine::new(kind, Side::Smallest).row_polynomial(n, list)
}
