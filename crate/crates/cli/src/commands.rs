use component_ranks::asymptotics::{
    default_table, largest_variance, median_xi, mode_x0, moment_largest, moment_smallest, ROOT_TOLERANCE,
};
use component_ranks::{
    connected_count, largest_poly, smallest_poly, stats, total_count, ObjectKind, RankList, Side, SummaryStats,
};
use rayon::prelude::*;

use crate::args::{EngineArg, KindArg, SideArg};
use crate::cache::Cache;
use crate::engine::{self, projected_push_seconds};
use crate::error::CliError;
use crate::output::{Cell, Table};

/// Decimals for means and variances, and for scaled medians and modes.
#[derive(Debug, Clone, Copy)]
pub struct Digits {
    pub moments: usize,
    pub order: usize,
}

impl Digits {
    pub fn from_precision(p: Option<usize>) -> Self {
        Digits {
            moments: p.unwrap_or(6),
            order: p.unwrap_or(4),
        }
    }
}

pub fn count(kind: KindArg, ns: &[usize]) -> Result<Table, CliError> {
    let kind = ObjectKind::from(kind);
    let mut t = Table::new(&["n", "total", "connected"]);
    for &n in ns {
        let connected = if n == 0 { Cell::Text("-".into()) } else { Cell::Int(connected_count(kind, n)?) };
        t.push(vec![Cell::int(n as u64), Cell::Int(total_count(kind, n)), connected]);
    }
    Ok(t)
}

pub struct PolyOutput {
    pub display: String,
    pub table: Table,
}

pub fn poly(kind: KindArg, n: usize, list: &str, side: Option<SideArg>) -> Result<PolyOutput, CliError> {
    let list: RankList = list.parse().map_err(CliError::Config)?;
    let side = side.map(Side::from).unwrap_or(if list.all_finite() { Side::Largest } else { Side::Smallest });
    let kind = ObjectKind::from(kind);
    let p = match side {
        Side::Largest => largest_poly(kind, n, &list)?,
        Side::Smallest => smallest_poly(kind, n, &list)?,
    };
    let mut table = Table::new(&["k", "coefficient"]);
    for (k, c) in p.coeffs().iter().enumerate() {
        table.push(vec![Cell::int(k as u64), Cell::Int(c.clone())]);
    }
    let name = if side == Side::Largest { "p" } else { "q" };
    Ok(PolyOutput {
        display: format!("{name}[{n},{list}] = {p}"),
        table,
    })
}

pub fn pmf(
    kind: KindArg,
    rank: usize,
    side: SideArg,
    n: usize,
    engine: EngineArg,
    digits: Digits,
    cache: Option<&Cache>,
) -> Result<Table, CliError> {
    let p = engine::pmf_one(engine, kind.into(), n, rank, side.into(), cache)?;
    let exact = p.counts().is_some();
    let mut t = if exact {
        Table::new(&["k", "count", "probability"])
    } else {
        Table::new(&["k", "probability"])
    };
    let digits = digits.moments.max(12);
    for k in 0..p.support_len() {
        let mut row = vec![Cell::int(k as u64)];
        if let Some(c) = p.counts() {
            row.push(Cell::Int(c[k].clone()));
        }
        row.push(Cell::Float(p.probability(k), digits));
        t.push(row);
    }
    Ok(t)
}

pub fn stats_table(
    kind: KindArg,
    rank: usize,
    side: SideArg,
    ns: &[usize],
    engine: EngineArg,
    digits: Digits,
    cache: Option<&Cache>,
) -> Result<Table, CliError> {
    let pmfs = engine::pmfs(engine, kind.into(), ns, rank, side.into(), cache)?;
    let mut t = Table::new(&[
        "n", "mean", "variance", "median", "mode", "mean_norm", "variance_norm", "median_norm", "mode_norm",
    ]);
    for (p, &n) in pmfs.iter().zip(ns) {
        let s = stats(p);
        let d = digits.moments;
        t.push(vec![
            Cell::int(n as u64),
            Cell::Float(s.mean, d),
            Cell::Float(s.variance, d),
            Cell::int(s.median as u64),
            Cell::int(s.mode as u64),
            Cell::Float(s.normalized_mean, d),
            Cell::Float(s.normalized_variance, d),
            Cell::Float(s.normalized_median, digits.order),
            Cell::Float(s.normalized_mode, digits.order),
        ]);
    }
    Ok(t)
}

/// Standard row sizes for each kind and rank.
pub fn default_ns(kind: ObjectKind, rank: usize) -> Vec<usize> {
    match (kind, rank) {
        (ObjectKind::Permutation, _) => vec![1000, 1500, 2000, 2500],
        (ObjectKind::Mapping, 3) => vec![100, 150, 200, 250],
        (ObjectKind::Mapping, 4) => vec![100, 125, 150, 175],
        (ObjectKind::Mapping, _) => vec![100, 200, 300, 400],
    }
}

pub fn default_engine(kind: ObjectKind) -> EngineArg {
    match kind {
        ObjectKind::Permutation => EngineArg::KtpFloat,
        ObjectKind::Mapping => EngineArg::ExactFloat,
    }
}

#[derive(Clone, Copy)]
enum Stat {
    Mu,
    Sigma2,
    Nu,
    Theta,
}

/// Column layout per kind: permutations report the largest-side mode,
/// mappings the smallest-side median instead.
fn layout(kind: ObjectKind) -> Vec<(Side, Stat, &'static str)> {
    use Side::*;
    use Stat::*;
    match kind {
        ObjectKind::Permutation => vec![
            (Largest, Mu, "L_mu_norm"),
            (Largest, Sigma2, "L_sigma2_norm"),
            (Largest, Nu, "L_nu_norm"),
            (Largest, Theta, "L_theta_norm"),
            (Smallest, Mu, "S_mu_norm"),
            (Smallest, Sigma2, "S_sigma2_norm"),
        ],
        ObjectKind::Mapping => vec![
            (Largest, Mu, "L_mu_norm"),
            (Largest, Sigma2, "L_sigma2_norm"),
            (Largest, Nu, "L_nu_norm"),
            (Smallest, Mu, "S_mu_norm"),
            (Smallest, Sigma2, "S_sigma2_norm"),
            (Smallest, Nu, "S_nu_norm"),
        ],
    }
}

const RAW_COLUMNS: [&str; 8] = ["L_mu", "L_sigma2", "L_nu", "L_theta", "S_mu", "S_sigma2", "S_nu", "S_theta"];

pub fn table(
    kind: KindArg,
    rank: usize,
    ns: &[usize],
    engine: Option<EngineArg>,
    raw: bool,
    digits: Digits,
    cache: Option<&Cache>,
) -> Result<Table, CliError> {
    let kind = ObjectKind::from(kind);
    let ns = if ns.is_empty() { default_ns(kind, rank) } else { ns.to_vec() };
    let engine = engine.unwrap_or_else(|| default_engine(kind));
    engine::check(engine, kind, rank, &ns)?;
    if engine == EngineArg::ExactFloat {
        let projected: f64 = ns
            .iter()
            .flat_map(|&n| Side::ALL.map(|s| projected_push_seconds(rank, n, s)))
            .sum();
        if projected > 60.0 {
            eprintln!("warning: projected runtime about {projected:.0} s on one core");
        }
    }
    // both sides for every n, computed concurrently, kept in input order
    let sides: Vec<Vec<SummaryStats>> = Side::ALL
        .par_iter()
        .map(|&side| -> Result<Vec<SummaryStats>, CliError> {
            Ok(engine::pmfs(engine, kind, &ns, rank, side, cache)?.iter().map(stats).collect())
        })
        .collect::<Result<_, _>>()?;
    let columns = layout(kind);
    let mut names: Vec<&str> = vec!["n"];
    names.extend(columns.iter().map(|c| c.2));
    if raw {
        names.extend(RAW_COLUMNS);
    }
    let mut t = Table::new(&names);
    for (i, &n) in ns.iter().enumerate() {
        let pick = |side: Side| &sides[if side == Side::Largest { 0 } else { 1 }][i];
        let mut row = vec![Cell::int(n as u64)];
        for &(side, stat, _) in &columns {
            let s = pick(side);
            row.push(match stat {
                Stat::Mu => Cell::Float(s.normalized_mean, digits.moments),
                Stat::Sigma2 => Cell::Float(s.normalized_variance, digits.moments),
                Stat::Nu => Cell::Float(s.normalized_median, digits.order),
                Stat::Theta => Cell::Float(s.normalized_mode, digits.order),
            });
        }
        if raw {
            for side in Side::ALL {
                let s = pick(side);
                row.push(Cell::Float(s.mean, digits.moments));
                row.push(Cell::Float(s.variance, digits.moments));
                row.push(Cell::int(s.median as u64));
                row.push(Cell::int(s.mode as u64));
            }
        }
        t.push(row);
    }
    Ok(t)
}

pub fn constants(precision: Option<usize>) -> Result<Table, CliError> {
    let d = precision.unwrap_or(20);
    let mut t = Table::new(&["name", "meaning", "value", "error_estimate"]);
    let mut push = |name: String, meaning: String, value: f64, err: f64| {
        t.push(vec![Cell::Text(name), Cell::Text(meaning), Cell::Float(value, d), Cell::Float(err, 3)]);
    };
    for (a, label, kind) in [(1.0, "1", "permutations"), (0.5, "1/2", "mappings")] {
        for r in 1..=4 {
            let first = moment_largest(a, r, 1.0)?;
            let second = moment_largest(a, r, 2.0)?;
            push(
                format!("L_G_{label}({r},1)"),
                format!("lim L_mu(n,{r})/n, {kind}"),
                first.value,
                first.error_estimate,
            );
            push(
                format!("L_G_{label}({r},2)-L_G_{label}({r},1)^2"),
                format!("lim L_sigma2(n,{r})/n^2, {kind}"),
                largest_variance(a, r)?,
                second.error_estimate + 2.0 * first.value * first.error_estimate,
            );
        }
    }
    for r in 2..=4 {
        let m = moment_smallest(1.0, r, 1.0, false)?;
        push(format!("S_G_1({r},1)"), format!("lim S_mu(n,{r})/ln(n)^{r} = e^-gamma/{r}!, permutations"), m.value, m.error_estimate);
    }
    for r in 2..=4 {
        let m = moment_smallest(1.0, r, 2.0, false)?;
        push(
            format!("S_G_P({r},2)"),
            format!("lim S_sigma2(n,{r})/(n ln(n)^{}), permutations", r - 1),
            m.value,
            m.error_estimate,
        );
    }
    for r in 2..=4 {
        let (m1, m2) = (moment_smallest(0.5, r, 1.0, true)?, moment_smallest(0.5, r, 2.0, true)?);
        push(
            format!("sqrt2*S_G_1/2({r},1)"),
            format!("lim S_mu(n,{r})/(n^(1/2) ln(n)^{}), mappings", r - 1),
            m1.value,
            m1.error_estimate,
        );
        push(
            format!("sqrt2*S_G_1/2({r},2)"),
            format!("lim S_sigma2(n,{r})/(n^(3/2) ln(n)^{}), mappings", r - 1),
            m2.value,
            m2.error_estimate,
        );
    }
    let table = default_table();
    for r in 1..=table.r_max() {
        push(format!("xi_{r}"), format!("lim L_nu(n,{r})/n, permutations"), median_xi(r)?, ROOT_TOLERANCE);
    }
    push("x0".into(), "lim L_theta(n,2)/n, permutations".into(), mode_x0()?, ROOT_TOLERANCE);
    Ok(t)
}

pub fn dickman(rank: usize, xs: &[f64], precision: Option<usize>) -> Result<Table, CliError> {
    let table = default_table();
    let d = precision.unwrap_or(17);
    let mut t = Table::new(&["x", "rho"]);
    for &x in xs {
        t.push(vec![Cell::Text(x.to_string()), Cell::Float(table.rho(rank, x)?, d)]);
    }
    Ok(t)
}
