use roots::{find_root_brent, Convergency, SearchError};

use crate::error::{Error, Result};

/// Stops on bracket width only, never on a small residual.
struct BracketWidth {
    tolerance: f64,
}

impl Convergency<f64> for BracketWidth {
    fn is_root_found(&mut self, y: f64) -> bool {
        y == 0.0
    }

    fn is_converged(&mut self, x1: f64, x2: f64) -> bool {
        (x1 - x2).abs() <= self.tolerance
    }

    fn is_iteration_limit_reached(&mut self, iter: usize) -> bool {
        iter >= 500
    }
}

/// Brent's method on `[lo, hi]` to absolute tolerance `tolerance` in `x`.
pub fn brent<F: FnMut(f64) -> f64>(lo: f64, hi: f64, tolerance: f64, mut f: F) -> Result<f64> {
    let (f_lo, f_hi) = (f(lo), f(hi));
    let mut conv = BracketWidth { tolerance };
    find_root_brent(lo, hi, f, &mut conv).map_err(|e| match e {
        SearchError::NoBracketing => Error::NotBracketed { lo, hi, f_lo, f_hi },
        _ => Error::RootNotConverged { lo, hi },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_simple_roots() {
        let r = brent(0.0, 2.0, 1e-15, |x| x * x - 2.0).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-14);
        assert!(matches!(brent(2.0, 3.0, 1e-12, |x| x * x - 2.0), Err(Error::NotBracketed { .. })));
    }
}
