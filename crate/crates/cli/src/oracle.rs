//! Formula-vs-enumeration suites behind `oracle-check`.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use kjcolor::boxes::sizes::merca_nrm;
use kjcolor::boxes::{box_sizes_brute_all, f_box_sizes, f_box_sizes_all, BoxSpec};
use kjcolor::colored::{ckj_brute, ckj_series, ColoredCountParams};
use kjcolor::congruence::two_p::theorem2_check;

use crate::commands::{err, object};
use crate::output::{Outcome, Table};
use crate::OracleSuite;

struct SuiteResult {
    name: &'static str,
    bounds: Value,
    checked_count: u64,
    header: Vec<&'static str>,
    /// One object per mismatch, keyed by `header`.
    mismatches: Vec<Value>,
}

fn ckj(kmax: u32, nmax: u64) -> Result<SuiteResult, String> {
    let pairs: Vec<(u32, u32)> = (1..=kmax).flat_map(|k| (1..=k).map(move |j| (k, j))).collect();
    let per_pair: Result<Vec<Vec<Value>>, String> = pairs
        .par_iter()
        .map(|&(k, j)| {
            let params = ColoredCountParams::new(k, j).map_err(err)?;
            let s = ckj_series::<BigInt>(params, nmax as usize, None).map_err(err)?;
            Ok((0..=nmax)
                .filter_map(|n| {
                    let brute = ckj_brute::<BigInt>(params, n);
                    let got = s.coeff(n as usize);
                    (got != &brute).then(|| json!({ "k": k, "j": j, "n": n, "series": got.to_string(), "brute": brute.to_string() }))
                })
                .collect())
        })
        .collect();
    Ok(SuiteResult {
        name: "ckj",
        bounds: json!({ "kmax": kmax, "nmax": nmax }),
        checked_count: pairs.len() as u64 * (nmax + 1),
        header: vec!["k", "j", "n", "series", "brute"],
        mismatches: per_pair?.concat(),
    })
}

fn boxes(m_max: usize, n_max: usize) -> Result<SuiteResult, String> {
    let mut specs = Vec::new();
    for m in 1..=m_max {
        for n in 1..=n_max {
            specs.push(BoxSpec::new(m, n).map_err(err)?);
        }
    }
    let per_box: Vec<(u64, Vec<Value>)> = specs
        .par_iter()
        .map(|&bx| {
            let formula = f_box_sizes_all::<BigInt>(bx);
            let brute = box_sizes_brute_all::<BigInt>(bx);
            let mut out = Vec::new();
            let mut checked = 0;
            for (r, (f, b)) in formula.iter().zip(&brute).enumerate() {
                for n in 0..=bx.area() {
                    checked += 1;
                    let (x, y) = (f.coeff(n), b.coeff(n));
                    if x != y {
                        out.push(json!({ "M": bx.max_part, "N": bx.max_parts, "r": r, "n": n, "formula": x.to_string(), "brute": y.to_string() }));
                    }
                }
            }
            (checked, out)
        })
        .collect();
    Ok(SuiteResult {
        name: "box",
        bounds: json!({ "Mmax": m_max, "Nmax": n_max }),
        checked_count: per_box.iter().map(|(c, _)| c).sum(),
        header: vec!["M", "N", "r", "n", "formula", "brute"],
        mismatches: per_box.into_iter().flat_map(|(_, v)| v).collect(),
    })
}

fn theorem2(p: u64, nmax: u64) -> Result<SuiteResult, String> {
    let rep = theorem2_check(p, nmax).map_err(err)?;
    Ok(SuiteResult {
        name: "theorem2",
        bounds: json!({ "p": p, "nmax": nmax }),
        checked_count: rep.checked_count,
        header: vec!["n", "lhs", "rhs"],
        mismatches: rep.mismatches.iter().map(|m| json!({ "n": m.n, "lhs": m.lhs, "rhs": m.rhs })).collect(),
    })
}

/// Tall boxes (N = order) agree with the bounded-largest-part series below q^order.
fn merca_limit(m_max: usize, order: usize) -> Result<SuiteResult, String> {
    let tall = order.max(1);
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for m in 1..=m_max {
        let bx = BoxSpec::new(m, tall).map_err(err)?;
        for r in 0..=m {
            let merca = merca_nrm::<BigInt>(r, m, order).map_err(err)?;
            let f = f_box_sizes::<BigInt>(bx, r);
            for n in 0..=order {
                checked += 1;
                let (x, y) = (merca.coeff(n), f.coeff(n));
                if x != &y {
                    mismatches.push(json!({ "M": m, "r": r, "n": n, "merca": x.to_string(), "box": y.to_string() }));
                }
            }
        }
    }
    Ok(SuiteResult {
        name: "merca-limit",
        bounds: json!({ "Mmax": m_max, "order": order }),
        checked_count: checked,
        header: vec!["M", "r", "n", "merca", "box"],
        mismatches,
    })
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn run(suite: &OracleSuite) -> Result<Outcome, String> {
    let res = match *suite {
        OracleSuite::Ckj { kmax, nmax } => ckj(kmax, nmax)?,
        OracleSuite::Box { m_max, n_max } => boxes(m_max, n_max)?,
        OracleSuite::Theorem2 { p, nmax } => theorem2(p, nmax)?,
        OracleSuite::MercaLimit { m_max, order } => merca_limit(m_max, order)?,
    };
    let holds = res.mismatches.is_empty();
    let mut parameters = res.bounds.clone();
    parameters.as_object_mut().expect("bounds are an object").insert("suite".into(), json!(res.name));
    let report = object(vec![
        ("suite", json!(res.name)),
        ("bounds", res.bounds.clone()),
        ("checked_count", json!(res.checked_count)),
        ("mismatches", Value::Array(res.mismatches.clone())),
    ]);
    let bounds: Vec<String> = res.bounds.as_object().expect("bounds are an object").iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut text = format!("oracle-check {} ({}): {} comparisons, ", res.name, bounds.join(", "), res.checked_count);
    let mut table = Table::new(res.header.iter().copied());
    if holds {
        text.push_str("no mismatches\n");
    } else {
        text.push_str(&format!("{} mismatches\n", res.mismatches.len()));
    }
    for m in &res.mismatches {
        let row: Vec<String> = res.header.iter().map(|h| cell(&m[*h])).collect();
        text.push_str(&res.header.iter().zip(&row).map(|(h, c)| format!("{h}={c}")).collect::<Vec<_>>().join(" "));
        text.push('\n');
        table.push(row);
    }
    Ok(Outcome { command: "oracle-check", parameters, holds, report, text, table })
}
