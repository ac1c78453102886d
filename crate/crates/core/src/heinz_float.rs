//! Forward ("push") evaluation of the row-polynomial recursion.
//!
//! The recursion is linear, so instead of pulling a polynomial for every
//! `(m, ℓ)` state one can push a scalar weight from the root towards the
//! leaves: extracting a component of size `j` from a state of size `m` moves
//! weight `c_j C(m-1, j-1)` (or, normalised, the probability
//! `c_j C(m-1, j-1) total(m-j) / total(m)`) to `(m-j, ℓ^j)` or `(m-j, ℓ_j)`.
//! Terminal states deposit their weight on the coefficient the base case
//! names. Two weight types are supported: `f64` probabilities and exact
//! `BigUint` counts.
//!
//! States are stored as four 16-bit fields packed into a `u64`, so ranks are
//! limited to 1..=4 and sizes to below 65535. Levels are processed in
//! decreasing `m` and, within a level, in increasing key order, which fixes
//! the floating-point summation order.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::kind::{CountTable, ObjectKind, Side};
use crate::numeric::ratio_to_f64;
use crate::pmf::ComponentPmf;

const INF: u16 = u16::MAX;
pub const MAX_PUSH_RANK: usize = 4;
/// Allowed drift of the total probability mass.
pub const MASS_TOLERANCE: f64 = 1e-9;

trait Weights {
    type W: Clone;
    fn zero(&self) -> Self::W;
    fn one(&self) -> Self::W;
    fn step(&self, m: usize, j: usize) -> &Self::W;
    /// Total weight of all completions of a state with `m` nodes left.
    fn completions(&self, m: usize) -> Self::W;
    fn mul(a: &Self::W, b: &Self::W) -> Self::W;
    fn add_assign(acc: &mut Self::W, v: &Self::W);
}

struct Probabilities {
    steps: Vec<Vec<f64>>,
}

impl Probabilities {
    fn new(kind: ObjectKind, n: usize) -> Self {
        let mut steps = vec![Vec::new()];
        match kind {
            ObjectKind::Permutation => {
                // c_j C(m-1,j-1) (m-j)! / m! = 1/m
                for m in 1..=n {
                    steps.push(vec![1.0 / m as f64; m + 1]);
                }
            }
            ObjectKind::Mapping => {
                let mut counts = CountTable::new(kind);
                counts.ensure(n);
                for m in 1..=n {
                    let mut row = vec![0.0; m + 1];
                    for (j, slot) in row.iter_mut().enumerate().skip(1) {
                        let num = counts.extraction_weight(m, j) * counts.total(m - j);
                        *slot = ratio_to_f64(&num, counts.total(m));
                    }
                    steps.push(row);
                }
            }
        }
        Probabilities { steps }
    }
}

impl Weights for Probabilities {
    type W = f64;
    fn zero(&self) -> f64 {
        0.0
    }
    fn one(&self) -> f64 {
        1.0
    }
    fn step(&self, m: usize, j: usize) -> &f64 {
        &self.steps[m][j]
    }
    fn completions(&self, _m: usize) -> f64 {
        1.0
    }
    fn mul(a: &f64, b: &f64) -> f64 {
        a * b
    }
    fn add_assign(acc: &mut f64, v: &f64) {
        *acc += v;
    }
}

struct Counts {
    table: CountTable,
    steps: Vec<Vec<BigUint>>,
}

impl Counts {
    fn new(kind: ObjectKind, n: usize) -> Self {
        let mut table = CountTable::new(kind);
        table.ensure(n);
        let mut steps = vec![Vec::new()];
        for m in 1..=n {
            let mut row = vec![BigUint::zero()];
            for j in 1..=m {
                row.push(table.extraction_weight(m, j));
            }
            steps.push(row);
        }
        Counts { table, steps }
    }
}

impl Weights for Counts {
    type W = BigUint;
    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn step(&self, m: usize, j: usize) -> &BigUint {
        &self.steps[m][j]
    }
    fn completions(&self, m: usize) -> BigUint {
        self.table.total(m).clone()
    }
    fn mul(a: &BigUint, b: &BigUint) -> BigUint {
        a * b
    }
    fn add_assign(acc: &mut BigUint, v: &BigUint) {
        *acc += v;
    }
}

type Packed = [u16; MAX_PUSH_RANK];

fn pack(arr: &Packed) -> u64 {
    arr.iter().fold(0u64, |acc, &e| (acc << 16) | e as u64)
}

fn unpack(key: u64) -> Packed {
    let mut arr = [0u16; MAX_PUSH_RANK];
    for (i, slot) in arr.iter_mut().enumerate() {
        *slot = (key >> (16 * (MAX_PUSH_RANK - 1 - i))) as u16;
    }
    arr
}

fn promote(arr: &Packed, rank: usize, j: u16) -> Packed {
    if j <= arr[0] {
        return *arr;
    }
    let mut out = [0u16; MAX_PUSH_RANK];
    let mut w = 0;
    let mut placed = false;
    for &e in &arr[1..rank] {
        if !placed && j <= e {
            out[w] = j;
            w += 1;
            placed = true;
        }
        out[w] = e;
        w += 1;
    }
    if !placed {
        out[w] = j;
    }
    out
}

fn demote(arr: &Packed, rank: usize, j: u16) -> Packed {
    if j >= arr[rank - 1] {
        return *arr;
    }
    let mut out = [0u16; MAX_PUSH_RANK];
    let mut w = 0;
    let mut placed = false;
    for &e in &arr[..rank - 1] {
        if !placed && j < e {
            out[w] = j;
            w += 1;
            placed = true;
        }
        out[w] = e;
        w += 1;
    }
    if !placed {
        out[w] = j;
    }
    out
}

enum Next {
    Done(usize),
    State(Packed),
}

fn classify(mut arr: Packed, rank: usize, side: Side, rest: usize) -> Next {
    let rest16 = rest as u16;
    match side {
        Side::Largest => {
            if rest == 0 || arr[0] > rest16 {
                debug_assert!(arr[0] != INF);
                return Next::Done(arr[0] as usize);
            }
            for e in arr[..rank].iter_mut() {
                if *e > rest16 {
                    *e = INF;
                }
            }
            Next::State(arr)
        }
        Side::Smallest => {
            let last = arr[rank - 1];
            if rest == 0 {
                return Next::Done(if last == INF { 0 } else { last as usize });
            }
            if last != INF && last > rest16 {
                arr[rank - 1] = INF;
            }
            Next::State(arr)
        }
    }
}

struct PushOutcome<W> {
    masses: Vec<W>,
    states: usize,
}

fn push<P: Weights>(weights: &P, side: Side, rank: usize, n: usize) -> PushOutcome<P::W> {
    let mut root = [0u16; MAX_PUSH_RANK];
    if side == Side::Smallest {
        root[..rank].fill(INF);
    }
    let mut masses = vec![weights.zero(); n + 1];
    let mut levels: Vec<FxHashMap<u64, P::W>> = (0..=n).map(|_| FxHashMap::default()).collect();
    match classify(root, rank, side, n) {
        Next::Done(k) => {
            P::add_assign(&mut masses[k], &weights.completions(n));
            return PushOutcome { masses, states: 0 };
        }
        Next::State(arr) => {
            levels[n].insert(pack(&arr), weights.one());
        }
    }
    let mut states = 0;
    for m in (1..=n).rev() {
        let mut items: Vec<(u64, P::W)> = std::mem::take(&mut levels[m]).into_iter().collect();
        items.sort_unstable_by_key(|(k, _)| *k);
        states += items.len();
        for (key, w) in items {
            let arr = unpack(key);
            for j in 1..=m {
                let next = match side {
                    Side::Largest => promote(&arr, rank, j as u16),
                    Side::Smallest => demote(&arr, rank, j as u16),
                };
                let rest = m - j;
                let contrib = P::mul(&w, weights.step(m, j));
                match classify(next, rank, side, rest) {
                    Next::Done(k) => {
                        let c = weights.completions(rest);
                        P::add_assign(&mut masses[k], &P::mul(&contrib, &c));
                    }
                    Next::State(a) => {
                        let slot = levels[rest].entry(pack(&a)).or_insert_with(|| weights.zero());
                        P::add_assign(slot, &contrib);
                    }
                }
            }
        }
    }
    PushOutcome { masses, states }
}

fn check_push_args(n: usize, rank: usize) -> Result<()> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    if rank > MAX_PUSH_RANK {
        return Err(Error::RankOutOfRange {
            what: "the push engine",
            rank,
            min: 1,
            max: MAX_PUSH_RANK,
        });
    }
    if n >= INF as usize {
        return Err(Error::SizeLimit {
            what: "push engine",
            n,
            max: INF as usize - 1,
        });
    }
    Ok(())
}

/// Result of a floating-point push run.
#[derive(Debug, Clone)]
pub struct FloatRun {
    pub probabilities: Vec<f64>,
    /// Number of distinct non-terminal states processed.
    pub states: usize,
    /// Total probability mass (ideally 1).
    pub mass: f64,
}

/// Normalised push run returning `P{r-th extreme component = k}` for
/// `k = 0..=n`, with the mass check applied.
pub fn float_run(kind: ObjectKind, n: usize, rank: usize, side: Side) -> Result<FloatRun> {
    check_push_args(n, rank)?;
    let weights = Probabilities::new(kind, n);
    let out = push(&weights, side, rank, n);
    let mass: f64 = out.masses.iter().sum();
    if !((mass - 1.0).abs() <= MASS_TOLERANCE) {
        return Err(Error::MassDrift {
            sum: mass,
            tolerance: MASS_TOLERANCE,
        });
    }
    Ok(FloatRun {
        probabilities: out.masses,
        states: out.states,
        mass,
    })
}

/// Floating-point PMF of the r-th largest/smallest component.
pub fn pmf_float(kind: ObjectKind, n: usize, rank: usize, side: Side) -> Result<ComponentPmf> {
    if n == 0 {
        return Err(Error::EmptyObject);
    }
    let run = float_run(kind, n, rank, side)?;
    Ok(ComponentPmf::from_float(kind, n, rank, side, run.probabilities))
}

/// Exact counts by the push route; `counts[k]` is the number of n-objects
/// whose r-th extreme component has size `k`.
pub fn exact_push_counts(kind: ObjectKind, n: usize, rank: usize, side: Side) -> Result<Vec<BigUint>> {
    check_push_args(n, rank)?;
    let weights = Counts::new(kind, n);
    Ok(push(&weights, side, rank, n).masses)
}

/// Exact PMF by the push route.
pub fn pmf_exact_push(kind: ObjectKind, n: usize, rank: usize, side: Side) -> Result<ComponentPmf> {
    if n == 0 {
        return Err(Error::EmptyObject);
    }
    let counts = exact_push_counts(kind, n, rank, side)?;
    Ok(ComponentPmf::from_counts(kind, n, rank, side, counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heinz::HeinzEngine;

    #[test]
    fn packed_promote_demote_match_rank_list() {
        use crate::ranklist::{Entry, RankList};
        let to_list = |a: &Packed, r: usize| {
            RankList::new(
                a[..r]
                    .iter()
                    .map(|&e| if e == INF { Entry::Infinite } else { Entry::Finite(e as u32) })
                    .collect(),
            )
            .unwrap()
        };
        let samples: [[u16; 4]; 5] = [[0, 0, 0, 0], [1, 3, 3, 9], [2, 5, INF, INF], [INF; 4], [0, 4, 7, INF]];
        for r in 1..=4 {
            for s in samples {
                let mut a = [0u16; 4];
                a[..r].copy_from_slice(&s[4 - r..]);
                let mut sorted = a[..r].to_vec();
                sorted.sort();
                a[..r].copy_from_slice(&sorted);
                let l = to_list(&a, r);
                for j in 1..12u16 {
                    if !a[..r].contains(&INF) {
                        assert_eq!(to_list(&promote(&a, r, j), r), l.promote(j as u32));
                    }
                    assert_eq!(to_list(&demote(&a, r, j), r), l.demote(j as u32));
                }
            }
        }
    }

    #[test]
    fn push_counts_equal_pull_polynomials() {
        for kind in ObjectKind::ALL {
            for side in Side::ALL {
                for r in 1..=4 {
                    let mut engine = HeinzEngine::new(kind, side);
                    for n in 0..=18 {
                        let pull = engine.full_polynomial(n, r).unwrap();
                        let push = exact_push_counts(kind, n, r, side).unwrap();
                        for (k, c) in push.iter().enumerate() {
                            assert_eq!(c, &pull.coefficient(k), "{kind} {side} r={r} n={n} k={k}");
                        }
                        assert!(pull.degree() < push.len());
                    }
                }
            }
        }
    }

    #[test]
    fn float_matches_exact_small() {
        let exact = exact_push_counts(ObjectKind::Mapping, 4, 2, Side::Smallest).unwrap();
        let run = float_run(ObjectKind::Mapping, 4, 2, Side::Smallest).unwrap();
        for (c, p) in exact.iter().zip(&run.probabilities) {
            assert!((ratio_to_f64(c, &BigUint::from(256u32)) - p).abs() < 1e-15);
        }
    }

    #[test]
    fn rank_limits() {
        assert!(matches!(
            float_run(ObjectKind::Mapping, 10, 5, Side::Largest),
            Err(Error::RankOutOfRange { .. })
        ));
        assert_eq!(float_run(ObjectKind::Mapping, 10, 0, Side::Largest).unwrap_err(), Error::ZeroRank);
    }
}
