use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact harmonic numbers `H_j` and generalised harmonic numbers `H_{j,2}`,
/// `H_{j,3}` for `0 ≤ j ≤ len - 1`.
#[derive(Debug, Clone)]
pub struct HarmonicValues {
    h: Vec<BigRational>,
    h2: Vec<BigRational>,
    h3: Vec<BigRational>,
}

impl HarmonicValues {
    pub fn up_to(j_max: usize) -> Self {
        let mut h = Vec::with_capacity(j_max + 1);
        let mut h2 = Vec::with_capacity(j_max + 1);
        let mut h3 = Vec::with_capacity(j_max + 1);
        h.push(BigRational::zero());
        h2.push(BigRational::zero());
        h3.push(BigRational::zero());
        for j in 1..=j_max {
            let i = BigInt::from(j);
            let one = BigInt::one();
            h.push(&h[j - 1] + BigRational::new(one.clone(), i.clone()));
            h2.push(&h2[j - 1] + BigRational::new(one.clone(), &i * &i));
            h3.push(&h3[j - 1] + BigRational::new(one, &i * &i * &i));
        }
        HarmonicValues { h, h2, h3 }
    }

    pub fn max_index(&self) -> usize {
        self.h.len() - 1
    }

    /// `H_j`.
    pub fn h(&self, j: usize) -> &BigRational {
        &self.h[j]
    }

    /// `H_{j,s}` for `s ∈ {1, 2, 3}`.
    pub fn h_s(&self, j: usize, s: u32) -> &BigRational {
        match s {
            1 => &self.h[j],
            2 => &self.h2[j],
            3 => &self.h3[j],
            _ => panic!("generalised harmonic order {s} is not tabulated"),
        }
    }
}

/// Unsigned Stirling numbers of the first kind `c(n, k)` for `n ≤ n_max`,
/// from `c(n+1, k) = n·c(n, k) + c(n, k−1)`.
pub fn stirling_first_table(n_max: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for n in 0..n_max {
        let prev = &rows[n];
        let mut next = vec![BigUint::zero(); n + 2];
        for (k, slot) in next.iter_mut().enumerate() {
            if k <= n {
                *slot += &prev[k] * BigUint::from(n);
            }
            if k >= 1 {
                *slot += &prev[k - 1];
            }
        }
        rows.push(next);
    }
    rows
}

pub fn stirling_first(n: usize, k: usize) -> BigUint {
    stirling_first_table(n)[n].get(k).cloned().unwrap_or_default()
}

/// Elementary symmetric polynomials `e_s(1, 1/2, …, 1/j)` for `s ≤ s_max`,
/// indexed `[s][j]`. Every term is positive.
pub fn reciprocal_elementary_symmetric(s_max: usize, j_max: usize) -> Vec<Vec<f64>> {
    let mut e = vec![vec![0.0f64; j_max + 1]; s_max + 1];
    e[0].iter_mut().for_each(|x| *x = 1.0);
    for s in 1..=s_max {
        for j in 1..=j_max {
            e[s][j] = e[s][j - 1] + e[s - 1][j - 1] / j as f64;
        }
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_invariants() {
        let hv = HarmonicValues::up_to(30);
        assert!(hv.h(0).is_zero());
        for j in 1..=30 {
            let step = hv.h(j) - hv.h(j - 1);
            assert_eq!(step, BigRational::new(BigInt::one(), BigInt::from(j)));
        }
        assert_eq!(*hv.h(3), BigRational::new(11.into(), 6.into()));
        assert_eq!(*hv.h_s(2, 2), BigRational::new(5.into(), 4.into()));
        assert_eq!(*hv.h_s(2, 3), BigRational::new(9.into(), 8.into()));
    }

    #[test]
    fn stirling_small_values() {
        let t = stirling_first_table(7);
        let row: Vec<u32> = t[5].iter().map(|c| u32::try_from(c).unwrap()).collect();
        assert_eq!(row, [0, 24, 50, 35, 10, 1]);
        let total: BigUint = t[7].iter().sum();
        assert_eq!(total, BigUint::from(5040u32));
    }

    #[test]
    fn elementary_symmetric_matches_stirling() {
        // c(j+1, s+1) / j! = e_s(1, …, 1/j)
        let e = reciprocal_elementary_symmetric(3, 15);
        let t = stirling_first_table(16);
        for j in 0..=15 {
            for s in 0..=3 {
                let c = t[j + 1].get(s + 1).cloned().unwrap_or_default();
                let expect = crate::numeric::ratio_to_f64(&c, &crate::kind::factorial(j));
                assert!((e[s][j] - expect).abs() <= 1e-14 * expect.max(1.0));
            }
        }
    }
}
