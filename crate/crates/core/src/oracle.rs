//! Brute-force ground truth by exhaustive enumeration.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kind::{ObjectKind, Side};
use crate::pmf::ComponentPmf;

pub const MAX_PERMUTATION_N: usize = 8;
pub const MAX_MAPPING_N: usize = 7;

/// Component sizes of one object, sorted in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentSpectrum {
    sizes: Vec<usize>,
}

impl ComponentSpectrum {
    pub fn from_sizes(mut sizes: Vec<usize>) -> Self {
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        ComponentSpectrum { sizes }
    }

    /// Sizes in decreasing order.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Size of the r-th largest (or smallest) component; 0 if there are
    /// fewer than `rank` components. Equal sizes occupy separate ranks.
    pub fn rank_size(&self, rank: usize, side: Side) -> usize {
        if rank == 0 || rank > self.sizes.len() {
            return 0;
        }
        match side {
            Side::Largest => self.sizes[rank - 1],
            Side::Smallest => self.sizes[self.sizes.len() - rank],
        }
    }
}

/// Weakly connected components of the functional graph `i -> f[i]`
/// (0-based). For permutations these are the cycles.
pub fn decompose(kind: ObjectKind, f: &[usize]) -> Result<ComponentSpectrum> {
    let n = f.len();
    for (position, &value) in f.iter().enumerate() {
        if value >= n {
            return Err(Error::NotAFunction { position, value, n });
        }
    }
    if kind == ObjectKind::Permutation {
        let mut seen = vec![false; n];
        for &v in f {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotABijection);
            }
        }
    }
    Ok(ComponentSpectrum::from_sizes(component_sizes(f)))
}

fn component_sizes(f: &[usize]) -> Vec<usize> {
    let n = f.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, &j) in f.iter().enumerate() {
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut size = vec![0usize; n];
    for i in 0..n {
        let root = find(&mut parent, i);
        size[root] += 1;
    }
    size.into_iter().filter(|&s| s > 0).collect()
}

/// Number of n-objects with each component spectrum.
pub type Census = BTreeMap<ComponentSpectrum, u64>;

fn check_budget(kind: ObjectKind, n: usize) -> Result<()> {
    let max = match kind {
        ObjectKind::Permutation => MAX_PERMUTATION_N,
        ObjectKind::Mapping => MAX_MAPPING_N,
    };
    if n > max {
        return Err(Error::EnumerationBudget { kind, n, max });
    }
    Ok(())
}

/// Enumerates every n-object and tallies component spectra.
///
/// Work is split on the image of the first point; per-part tallies are merged
/// by exact addition, so the result does not depend on the partitioning.
pub fn census(kind: ObjectKind, n: usize) -> Result<Census> {
    check_budget(kind, n)?;
    if n == 0 {
        let mut c = Census::new();
        c.insert(ComponentSpectrum::from_sizes(vec![]), 1);
        return Ok(c);
    }
    let parts: Vec<Census> = (0..n)
        .into_par_iter()
        .map(|first| match kind {
            ObjectKind::Permutation => permutation_part(n, first),
            ObjectKind::Mapping => mapping_part(n, first),
        })
        .collect();
    let mut total = Census::new();
    for part in parts {
        for (spectrum, count) in part {
            *total.entry(spectrum).or_insert(0) += count;
        }
    }
    Ok(total)
}

/// All maps with `f[0] = first`, in odometer order over `f[1..]`.
fn mapping_part(n: usize, first: usize) -> Census {
    let mut tally = Census::new();
    let mut f = vec![0usize; n];
    f[0] = first;
    loop {
        *tally
            .entry(ComponentSpectrum::from_sizes(component_sizes(&f)))
            .or_insert(0) += 1;
        let mut i = n - 1;
        loop {
            if i == 0 {
                return tally;
            }
            f[i] += 1;
            if f[i] < n {
                break;
            }
            f[i] = 0;
            i -= 1;
        }
    }
}

/// All permutations with `f[0] = first`, the rest in lexicographic order.
fn permutation_part(n: usize, first: usize) -> Census {
    let mut tally = Census::new();
    let mut rest: Vec<usize> = (0..n).filter(|&v| v != first).collect();
    let mut f = vec![first; n];
    loop {
        f[1..].copy_from_slice(&rest);
        *tally
            .entry(ComponentSpectrum::from_sizes(component_sizes(&f)))
            .or_insert(0) += 1;
        if !next_permutation(&mut rest) {
            return tally;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Exact PMF of the r-th largest/smallest component by enumeration.
pub fn enumerate_pmf(kind: ObjectKind, n: usize, rank: usize, side: Side) -> Result<ComponentPmf> {
    let c = census(kind, n)?;
    Ok(pmf_from_census(&c, kind, n, rank, side))
}

pub fn pmf_from_census(c: &Census, kind: ObjectKind, n: usize, rank: usize, side: Side) -> ComponentPmf {
    let mut counts = vec![BigUint::default(); n + 1];
    for (spectrum, &count) in c {
        counts[spectrum.rank_size(rank, side)] += count;
    }
    ComponentPmf::from_counts(kind, n, rank, side, counts)
}

/// Number of enumerated objects with exactly one component.
pub fn connected_in_census(c: &Census) -> u64 {
    c.iter().filter(|(s, _)| s.len() == 1).map(|(_, &k)| k).sum()
}
