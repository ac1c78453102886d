use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::kind::Side;

/// Exact coefficients of a row polynomial `p[n, ℓ]` (variable `x`, largest
/// side) or `q[n, ℓ]` (variable `y`, smallest side). Index = power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowPolynomial {
    n: usize,
    side: Side,
    coeffs: Vec<BigUint>,
}

impl RowPolynomial {
    pub fn new(n: usize, side: Side, mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigUint::zero());
        }
        RowPolynomial { n, side, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigUint> {
        self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for RowPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = match self.side {
            Side::Largest => "x",
            Side::Smallest => "y",
        };
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if *c == BigUint::from(1u32) => write!(f, "{var}")?,
                1 => write!(f, "{c}{var}")?,
                _ if *c == BigUint::from(1u32) => write!(f, "{var}^{k}")?,
                _ => write!(f, "{c}{var}^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_trim() {
        let p = RowPolynomial::new(
            4,
            Side::Largest,
            [6u32, 15, 3, 0, 0].iter().map(|&c| BigUint::from(c)).collect(),
        );
        assert_eq!(p.degree(), 2);
        assert_eq!(p.to_string(), "6 + 15x + 3x^2");
        let q = RowPolynomial::new(0, Side::Smallest, vec![BigUint::zero(), BigUint::from(1u32)]);
        assert_eq!(q.to_string(), "y");
    }
}
