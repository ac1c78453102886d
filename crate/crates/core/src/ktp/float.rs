use rayon::prelude::*;

use super::harmonic::reciprocal_elementary_symmetric;
use super::Direction;

/// Append-only sequence of positive numbers answering range sums from
/// aligned power-of-two blocks, so no two partial sums are ever subtracted.
#[derive(Debug, Default)]
struct BlockSums {
    // levels[l][b] = sum of values[b·2^l .. (b+1)·2^l]
    levels: Vec<Vec<f64>>,
    prefix: Vec<f64>,
}

impl BlockSums {
    fn with_capacity(n: usize) -> Self {
        let mut prefix = Vec::with_capacity(n + 1);
        prefix.push(0.0);
        BlockSums {
            levels: vec![Vec::with_capacity(n)],
            prefix,
        }
    }

    fn push(&mut self, x: f64) {
        let last = *self.prefix.last().expect("prefix starts at zero");
        self.prefix.push(last + x);
        self.levels[0].push(x);
        let mut l = 0;
        while self.levels[l].len() % 2 == 0 {
            let len = self.levels[l].len();
            let pair = self.levels[l][len - 2] + self.levels[l][len - 1];
            if self.levels.len() == l + 1 {
                self.levels.push(Vec::new());
            }
            self.levels[l + 1].push(pair);
            l += 1;
        }
    }

    /// Σ values[0..end], accumulated left to right.
    fn head(&self, end: usize) -> f64 {
        self.prefix[end]
    }

    /// Σ values[start..end].
    fn range(&self, mut start: usize, end: usize) -> f64 {
        let mut acc = 0.0;
        while start < end {
            let mut l = 0;
            while start % (2 << l) == 0 && start + (2 << l) <= end && l + 1 < self.levels.len() {
                l += 1;
            }
            acc += self.levels[l][start >> l];
            start += 1 << l;
        }
        acc
    }
}

/// For one `k`, the normalised values at level `r` for `0 ≤ n ≤ n_max`.
pub(super) fn sweep(direction: Direction, r: usize, k: usize, n_max: usize, esym: &[Vec<f64>]) -> Vec<f64> {
    let mut below: Option<BlockSums> = None;
    let mut top = Vec::new();
    for s in 1..=r {
        let mut own = BlockSums::with_capacity(n_max + 1);
        let mut values = Vec::with_capacity(if s == r { n_max + 1 } else { 0 });
        for n in 0..=n_max {
            let x = match direction {
                Direction::AtMostK => w_entry(s, k, n, &own, below.as_ref()),
                Direction::AtLeastK => z_entry(s, k, n, &own, below.as_ref(), esym),
            };
            own.push(x);
            if s == r {
                values.push(x);
            }
        }
        below = Some(own);
        top = values;
    }
    top
}

fn w_entry(s: usize, k: usize, n: usize, own: &BlockSums, lower: Option<&BlockSums>) -> f64 {
    if n == 0 || k >= n / s {
        return 1.0;
    }
    let mut acc = own.range(n - k, n);
    if let Some(lower) = lower {
        acc += lower.head(n - k);
    }
    acc / n as f64
}

fn z_entry(s: usize, k: usize, n: usize, own: &BlockSums, lower: Option<&BlockSums>, esym: &[Vec<f64>]) -> f64 {
    match lower {
        None => {
            if n == 0 || k == 0 {
                1.0
            } else if k <= n {
                own.head(n - k + 1) / n as f64
            } else {
                0.0
            }
        }
        Some(lower) => {
            if k == 0 {
                1.0
            } else if n >= 1 && k + s <= n + 1 {
                let delta = esym[s - 1][n - k] / n as f64;
                delta + (lower.range(n - k + 1, n) + own.head(n - k + 1)) / n as f64
            } else {
                0.0
            }
        }
    }
}

/// Normalised cumulative columns `[i][k]` (`0 ≤ k ≤ ns[i]`) for each requested
/// `n`, computed in one independent sweep per `k`.
pub(super) fn columns(direction: Direction, r: usize, ns: &[usize]) -> Vec<Vec<f64>> {
    let n_max = ns.iter().copied().max().unwrap_or(0);
    let esym = reciprocal_elementary_symmetric(r.saturating_sub(1).max(1), n_max);
    let per_k: Vec<Vec<f64>> = (0..=n_max)
        .into_par_iter()
        .map(|k| {
            let full = sweep(direction, r, k, n_max, &esym);
            ns.iter().map(|&n| if k <= n { full[n] } else { f64::NAN }).collect()
        })
        .collect();
    ns.iter()
        .enumerate()
        .map(|(i, &n)| (0..=n).map(|k| per_k[k][i]).collect())
        .collect()
}

pub(super) fn grid(direction: Direction, r: usize, k_max: usize, n_max: usize) -> Vec<Vec<f64>> {
    let esym = reciprocal_elementary_symmetric(r.saturating_sub(1).max(1), n_max);
    (0..=k_max)
        .into_par_iter()
        .map(|k| sweep(direction, r, k, n_max, &esym))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_sums_match_direct_sums() {
        let mut b = BlockSums::with_capacity(40);
        let xs: Vec<f64> = (0..37).map(|i| 1.0 / (1.0 + i as f64)).collect();
        for &x in &xs {
            b.push(x);
        }
        for start in 0..=37 {
            for end in start..=37 {
                let direct: f64 = xs[start..end].iter().sum();
                assert!((b.range(start, end) - direct).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn tiny_windows_keep_relative_accuracy() {
        let mut b = BlockSums::with_capacity(4);
        b.push(1.0);
        b.push(1e-300);
        b.push(3e-300);
        assert_eq!(b.range(1, 3), 4e-300);
    }
}
