//! Exact finite-n distributions and n → ∞ limit constants for the size of the
//! r-th largest and r-th smallest component of random permutations and
//! random mappings.
//!
//! Three independent routes compute the finite-n distributions:
//!
//! * [`heinz`]: the row-polynomial recursion over rank lists (exact), with a
//!   forward-propagating variant in [`heinz_float`] for large `n`;
//! * [`ktp`]: cumulative-count recursions for permutations, including the
//!   harmonic-number correction term for the smallest side;
//! * [`oracle`]: brute-force enumeration for small `n`.
//!
//! [`asymptotics`] holds the limiting laws: exponential integral, higher
//! order Dickman functions, medians, the mode of the second longest cycle
//! and the moment constants.

pub mod asymptotics;
pub mod error;
pub mod heinz;
pub mod heinz_float;
pub mod kind;
pub mod ktp;
pub mod numeric;
pub mod oracle;
pub mod pmf;
pub mod poly;
pub mod ranklist;

pub use error::{Error, Result};
pub use heinz::{largest_poly, smallest_poly, HeinzEngine};
pub use heinz_float::{pmf_float, FloatRun};
pub use kind::{connected_count, total_count, ObjectKind, Side};
pub use pmf::{pmf, stats, ComponentPmf, Masses, SummaryStats};
pub use poly::RowPolynomial;
pub use ranklist::{Entry, RankList};
