//! Dispatch from an engine choice to a library route, with compatibility
//! checks and the optional on-disk cache for exact results.

use component_ranks::heinz_float::pmf_float;
use component_ranks::ktp::{pmf_from_tables, pmfs_from_tables_float};
use component_ranks::oracle::{enumerate_pmf, MAX_MAPPING_N, MAX_PERMUTATION_N};
use component_ranks::{pmf, ComponentPmf, ObjectKind, Side};
use rayon::prelude::*;

use crate::args::EngineArg;
use crate::cache::Cache;
use crate::error::CliError;

pub fn engine_name(e: EngineArg) -> &'static str {
    match e {
        EngineArg::Exact => "exact",
        EngineArg::ExactFloat => "exact-float",
        EngineArg::Ktp => "ktp",
        EngineArg::KtpFloat => "ktp-float",
        EngineArg::Oracle => "oracle",
    }
}

/// Rejects combinations the engine cannot serve before any work starts.
pub fn check(engine: EngineArg, kind: ObjectKind, rank: usize, ns: &[usize]) -> Result<(), CliError> {
    if ns.contains(&0) {
        return Err(CliError::Config("n must be at least 1".into()));
    }
    if rank == 0 {
        return Err(CliError::Config("rank must be at least 1".into()));
    }
    match engine {
        EngineArg::Ktp | EngineArg::KtpFloat if kind != ObjectKind::Permutation => Err(CliError::Config(format!(
            "engine {} is defined for permutations only; use exact or exact-float for mappings",
            engine_name(engine)
        ))),
        EngineArg::Ktp | EngineArg::KtpFloat | EngineArg::ExactFloat if rank > 4 => Err(CliError::Config(format!(
            "engine {} supports ranks 1..=4",
            engine_name(engine)
        ))),
        EngineArg::Oracle => {
            let max = match kind {
                ObjectKind::Permutation => MAX_PERMUTATION_N,
                ObjectKind::Mapping => MAX_MAPPING_N,
            };
            match ns.iter().find(|&&n| n > max) {
                Some(n) => Err(CliError::Config(format!(
                    "oracle enumeration of {kind} objects is limited to n <= {max} (got {n})"
                ))),
                None => Ok(()),
            }
        }
        _ => Ok(()),
    }
}

/// Rough wall-clock projection in seconds for the mapping push engine on one
/// core, fitted to measured runs (cost grows like `n^(r+2)`).
pub fn projected_push_seconds(rank: usize, n: usize, side: Side) -> f64 {
    let coefficient = match rank {
        1 | 2 => 9.8e-10,
        3 => 1.0e-10,
        _ => 4.5e-12,
    };
    let side_factor = if side == Side::Largest { 1.0 } else { 0.2 };
    coefficient * side_factor * (n as f64).powi(rank.max(2) as i32 + 2)
}

fn compute(engine: EngineArg, kind: ObjectKind, n: usize, rank: usize, side: Side) -> Result<ComponentPmf, CliError> {
    Ok(match engine {
        EngineArg::Exact => pmf(kind, n, rank, side)?,
        EngineArg::ExactFloat => pmf_float(kind, n, rank, side)?,
        EngineArg::Ktp => pmf_from_tables(rank, n, side)?,
        EngineArg::KtpFloat => component_ranks::ktp::pmf_from_tables_float(rank, n, side)?,
        EngineArg::Oracle => enumerate_pmf(kind, n, rank, side)?,
    })
}

/// PMFs for every `n` on one side, in input order. Exact results go through
/// the cache when one is configured.
pub fn pmfs(
    engine: EngineArg,
    kind: ObjectKind,
    ns: &[usize],
    rank: usize,
    side: Side,
    cache: Option<&Cache>,
) -> Result<Vec<ComponentPmf>, CliError> {
    check(engine, kind, rank, ns)?;
    if engine == EngineArg::KtpFloat {
        // one normalised sweep serves every n
        return Ok(pmfs_from_tables_float(rank, ns, side)?);
    }
    ns.par_iter()
        .map(|&n| {
            let exact = matches!(engine, EngineArg::Exact | EngineArg::Ktp | EngineArg::Oracle);
            if let (true, Some(c)) = (exact, cache) {
                if let Some(counts) = c.load_counts(engine_name(engine), kind, side, rank, n) {
                    return Ok(ComponentPmf::from_counts(kind, n, rank, side, counts));
                }
            }
            let p = compute(engine, kind, n, rank, side)?;
            if let (Some(c), Some(counts)) = (cache, p.counts()) {
                // a failed write only costs a recomputation next time
                let _ = c.store_counts(engine_name(engine), kind, side, rank, n, counts);
            }
            Ok(p)
        })
        .collect()
}

pub fn pmf_one(
    engine: EngineArg,
    kind: ObjectKind,
    n: usize,
    rank: usize,
    side: Side,
    cache: Option<&Cache>,
) -> Result<ComponentPmf, CliError> {
    Ok(pmfs(engine, kind, &[n], rank, side, cache)?.remove(0))
}
