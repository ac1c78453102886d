//! Verification suites surfaced by `verify`.

use component_ranks::heinz_float::float_run;
use component_ranks::ktp::{delta_integer, u_table, v_table, CumulativeCountTable, Direction};
use component_ranks::oracle::{census, pmf_from_census};
use component_ranks::pmf::pmf_with;
use component_ranks::{largest_poly, pmf, smallest_poly, stats, HeinzEngine, ObjectKind, Side};
use num_bigint::BigUint;

use crate::args::Suite;
use crate::output::{Cell, Table};

pub struct Outcome {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn outcome(suite: &'static str, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        suite,
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn big(v: &[u32]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

fn small_exact() -> Vec<Outcome> {
    use ObjectKind::*;
    let s = "small-exact";
    let mut out = Vec::new();
    let z = "{0,0}".parse().expect("valid list");
    let inf = "{inf,inf}".parse().expect("valid list");
    let rows = [
        ("p[4,{0,0}] permutations", largest_poly(Permutation, 4, &z), big(&[6, 15, 3])),
        ("p[4,{0,0}] mappings", largest_poly(Mapping, 4, &z), big(&[142, 87, 27])),
        ("q[4,{inf,inf}] permutations", smallest_poly(Permutation, 4, &inf), big(&[6, 7, 3, 8])),
        ("q[4,{inf,inf}] mappings", smallest_poly(Mapping, 4, &inf), big(&[142, 19, 27, 68])),
    ];
    for (name, got, want) in rows {
        let got = got.map(|p| p.coeffs().to_vec());
        out.push(outcome(s, name, got.as_ref() == Ok(&want), format!("{got:?}")));
    }
    let tables = u_table(2, 4, 4).and_then(|u| Ok((u, v_table(2, 4, 4)?)));
    match tables {
        Ok((u, v)) => {
            let uk: Vec<BigUint> = (0..=2).map(|k| u.get(k, 4).clone()).collect();
            let vk: Vec<BigUint> = (1..=3).map(|k| v.get(k, 4).clone()).collect();
            out.push(outcome(s, "u_2(k,4), k=0..2 = {6,21,24}", uk == big(&[6, 21, 24]), format!("{uk:?}")));
            out.push(outcome(s, "v_2(k,4), k=1..3 = {18,11,8}", vk == big(&[18, 11, 8]), format!("{vk:?}")));
            out.push(outcome(s, "u_2(1,3) = 6", *u.get(1, 3) == BigUint::from(6u32), u.get(1, 3).to_string()));
            out.push(outcome(s, "v_2(1,3) = 4", *v.get(1, 3) == BigUint::from(4u32), v.get(1, 3).to_string()));
        }
        Err(e) => out.push(outcome(s, "cumulative tables", false, e.to_string())),
    }
    for (k, want) in [(1, 11u32), (2, 9), (3, 6)] {
        let got = delta_integer(2, k, 4);
        out.push(outcome(s, format!("Delta_2({k},4) = {want}"), got == Ok(BigUint::from(want)), format!("{got:?}")));
    }
    let p = pmf(Mapping, 4, 2, Side::Smallest).map(|p| p.counts().map(<[BigUint]>::to_vec));
    out.push(outcome(
        s,
        "mapping n=4 second-smallest PMF = {142,19,27,68}/256",
        p == Ok(Some(big(&[142, 19, 27, 68]))),
        format!("{p:?}"),
    ));
    out
}

fn oracle() -> Vec<Outcome> {
    let mut out = Vec::new();
    for kind in ObjectKind::ALL {
        let mut engines = Side::ALL.map(|side| HeinzEngine::new(kind, side));
        let mut mismatches = Vec::new();
        for n in 1..=7 {
            let tally = match census(kind, n) {
                Ok(t) => t,
                Err(e) => {
                    mismatches.push(e.to_string());
                    continue;
                }
            };
            for engine in engines.iter_mut() {
                for rank in 1..=4 {
                    let brute = pmf_from_census(&tally, kind, n, rank, engine.side());
                    let exact = pmf_with(engine, n, rank);
                    if exact.as_ref().map(|p| p.counts()) != Ok(brute.counts()) {
                        mismatches.push(format!("{} n={n} r={rank}", engine.side()));
                    }
                }
            }
        }
        out.push(outcome(
            "oracle",
            format!("{kind}: recursion equals enumeration, n <= 7, r = 1..4, both sides"),
            mismatches.is_empty(),
            mismatches.join("; "),
        ));
    }
    out
}

fn differenced(t: &CumulativeCountTable, n: usize) -> Vec<BigUint> {
    let mut v: Vec<BigUint> = match t.direction() {
        Direction::AtMostK => (0..=n)
            .map(|k| if k == 0 { t.get(0, n).clone() } else { t.get(k, n) - t.get(k - 1, n) })
            .collect(),
        Direction::AtLeastK => (0..=n).map(|k| t.get(k, n) - t.get(k + 1, n)).collect(),
    };
    while v.len() > 1 && v.last().is_some_and(|c| *c == BigUint::default()) {
        v.pop();
    }
    v
}

fn cross() -> Vec<Outcome> {
    let n_max = 40;
    let mut out = Vec::new();
    for r in 2..=4 {
        let tables = u_table(r, n_max + 1, n_max).and_then(|u| Ok((u, v_table(r, n_max + 1, n_max)?)));
        let (u, v) = match tables {
            Ok(t) => t,
            Err(e) => {
                out.push(outcome("cross", format!("r={r}"), false, e.to_string()));
                continue;
            }
        };
        for (table, side) in [(&u, Side::Largest), (&v, Side::Smallest)] {
            let mut engine = HeinzEngine::new(ObjectKind::Permutation, side);
            let bad: Vec<usize> = (1..=n_max)
                .filter(|&n| {
                    pmf_with(&mut engine, n, r).map(|p| p.counts().map(<[BigUint]>::to_vec))
                        != Ok(Some(differenced(table, n)))
                })
                .collect();
            let route = if side == Side::Largest { "u" } else { "v" };
            out.push(outcome(
                "cross",
                format!("{route}_{r} PMFs equal recursion PMFs, n <= {n_max}"),
                bad.is_empty(),
                format!("mismatched n: {bad:?}"),
            ));
        }
    }
    out
}

fn mode_shift() -> Vec<Outcome> {
    (432..=435)
        .map(|n| {
            let want = if n <= 433 { 0 } else { 2 };
            let got = float_run(ObjectKind::Mapping, n, 2, Side::Smallest).map(|run| {
                let p = component_ranks::ComponentPmf::from_float(
                    ObjectKind::Mapping,
                    n,
                    2,
                    Side::Smallest,
                    run.probabilities,
                );
                stats(&p).mode
            });
            outcome(
                "mode-shift",
                format!("mapping second-smallest mode at n={n} is {want}"),
                got == Ok(want),
                format!("{got:?}"),
            )
        })
        .collect()
}

pub fn run(suite: Suite) -> Vec<Outcome> {
    match suite {
        Suite::SmallExact => small_exact(),
        Suite::Oracle => oracle(),
        Suite::Cross => cross(),
        Suite::ModeShift => mode_shift(),
        Suite::All => [small_exact(), oracle(), cross(), mode_shift()].into_iter().flatten().collect(),
    }
}

pub fn report(outcomes: &[Outcome]) -> Table {
    let mut t = Table::new(&["suite", "check", "passed", "detail"]);
    for o in outcomes {
        let detail = if o.passed { String::new() } else { o.detail.clone() };
        t.push(vec![Cell::Text(o.suite.into()), Cell::Text(o.name.clone()), Cell::Bool(o.passed), Cell::Text(detail)]);
    }
    t
}
