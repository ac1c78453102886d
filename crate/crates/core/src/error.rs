use thiserror::Error;

use crate::kind::ObjectKind;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("undefined for the empty object (n = 0)")]
    EmptyObject,

    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("rank {rank} is outside the supported range {min}..={max} for {what}")]
    RankOutOfRange {
        what: &'static str,
        rank: usize,
        min: usize,
        max: usize,
    },

    #[error("largest-side rank lists must have finite entries only")]
    InfiniteEntry,

    #[error("rank list has length {found}, expected {expected}")]
    RankListLength { expected: usize, found: usize },

    #[error("size {n} exceeds the {what} limit of {max}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("enumeration of {kind} objects of size {n} exceeds the budget (max n = {max})")]
    EnumerationBudget {
        kind: ObjectKind,
        n: usize,
        max: usize,
    },

    #[error("function table is not a bijection, so it is not a permutation")]
    NotABijection,

    #[error("function table value {value} at position {position} is outside 0..{n}")]
    NotAFunction {
        position: usize,
        value: usize,
        n: usize,
    },

    #[error("probability mass drifted to {sum} (tolerance {tolerance:e})")]
    MassDrift { sum: f64, tolerance: f64 },

    #[error("correction term Delta_{r}({k},{n}) = {value} is not a nonnegative integer")]
    NonIntegralDelta {
        r: usize,
        k: usize,
        n: usize,
        value: String,
    },

    #[error("argument {value} is outside the domain of {what}")]
    Domain { what: &'static str, value: f64 },

    #[error("x = {x} lies beyond the tabulated range [0, {x_max}]")]
    OutOfTable { x: f64, x_max: f64 },

    #[error("root is not bracketed on [{lo}, {hi}] (f values {f_lo}, {f_hi})")]
    NotBracketed {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("root search on [{lo}, {hi}] did not converge")]
    RootNotConverged { lo: f64, hi: f64 },

    #[error("quadrature did not converge: error estimate {achieved:e} exceeds {requested:e}")]
    Quadrature { achieved: f64, requested: f64 },

    #[error("height {h} must be at least the exp-log parameter {a}")]
    HeightBelowParameter { h: f64, a: f64 },

    #[error("height {0} must be a positive multiple of 1/2")]
    InvalidHeight(f64),

    #[error("the sqrt(2) correction applies to mappings only")]
    CorrectionNotApplicable,
}

pub type Result<T> = std::result::Result<T, Error>;
