use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use kjcolor::boxes::array::{box_color_array, ColorCoefficientArray};
use kjcolor::boxes::sizes::{macmahon_nr, merca_nrm};
use kjcolor::boxes::unimodal::{scan_array, unimodality_sweep, CutViolation, UnimodalityReport};
use kjcolor::boxes::{f_box_sizes, BoxSpec};
use kjcolor::colored::{ckj_eta_series, ckj_series, kcolored_series, overpartition_series, ColoredCountParams, EtaForm};
use kjcolor::congruence::nine_colors::{self, witness_search};
use kjcolor::congruence::two_p::{mod_p_check, theorem2_check};
use kjcolor::congruence::{verify_progression, CongruenceReport, ProgressionForm, ProgressionSpec};
use kjcolor::products::pochhammer_inf_series;
use kjcolor::{Coefficient, Series};

use crate::output::{matrix, strings, tuple, Outcome, Table};
use crate::{BoxArgs, CongruenceArgs, FormArg, SeriesArgs, SeriesKind, Theorem2Args, UnimodalArgs};

pub fn err(e: kjcolor::Error) -> String {
    e.to_string()
}

/// JSON object from the entries that are present.
pub fn object(entries: Vec<(&str, Value)>) -> Value {
    let map: Map<String, Value> = entries.into_iter().filter(|(_, v)| !v.is_null()).map(|(k, v)| (k.to_string(), v)).collect();
    Value::Object(map)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn insert(v: &mut Value, key: &str, x: Value) {
    v.as_object_mut().expect("report is an object").insert(key.to_string(), x);
}

fn enum_name<E: ValueEnum>(e: &E) -> String {
    e.to_possible_value().expect("no skipped variants").get_name().to_string()
}

pub fn series(a: &SeriesArgs) -> Result<Outcome, String> {
    let kind = enum_name(&a.kind);
    let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| format!("--kind {kind} needs --{flag}"));
    let need_usize = |v: Option<usize>, flag: &str| v.ok_or_else(|| format!("--kind {kind} needs --{flag}"));
    let modulus = a.modulus.map(BigInt::from);
    let order = a.order;
    let (s, label): (Series, String) = match a.kind {
        SeriesKind::Ckj => {
            let (k, j) = (need(a.k, "k")?, need(a.j, "j")?);
            let params = ColoredCountParams::new(k, j).map_err(err)?;
            (ckj_series(params, order, modulus.clone()).map_err(err)?, format!("C_{{{k},{j}}}"))
        }
        SeriesKind::Eta => {
            let k = need(a.k, "k")?;
            let form = match a.form.ok_or_else(|| format!("--kind {kind} needs --form"))? {
                FormArg::One => EtaForm::One,
                FormArg::KMinusOne => EtaForm::KMinusOne,
                FormArg::K => EtaForm::K,
            };
            let s = ckj_eta_series(k, form, order, modulus.clone()).map_err(err)?;
            (s, format!("C_{{{k},{}}}", form.j_for(k)))
        }
        SeriesKind::Overpartition => (overpartition_series(order, modulus.clone()).map_err(err)?, "pbar".into()),
        SeriesKind::Kcolored => {
            let k = need(a.k, "k")?;
            (kcolored_series(k, order, modulus.clone()).map_err(err)?, format!("1/(q;q)^{k}"))
        }
        SeriesKind::Pochhammer => {
            let d = need_usize(a.d, "d")?;
            (pochhammer_inf_series(d, order, modulus.clone()).map_err(err)?, format!("(q^{d};q^{d})_inf"))
        }
        SeriesKind::Macmahon => {
            let r = need_usize(a.r, "r")?;
            (macmahon_nr(r, order).map_err(err)?, format!("N_{r}"))
        }
        SeriesKind::Merca => {
            let (r, m) = (need_usize(a.r, "r")?, need_usize(a.max_part, "M")?);
            (merca_nrm(r, m, order).map_err(err)?, format!("N_{{{r},<={m}}}"))
        }
    };
    let s = match (&modulus, s.modulus()) {
        (Some(m), None) => s.reduce_mod(m).map_err(err)?,
        _ => s,
    };

    let parameters = object(vec![
        ("kind", json!(kind)),
        ("k", json!(a.k)),
        ("j", json!(a.j)),
        ("form", json!(a.form.map(|f| enum_name(&f)))),
        ("d", json!(a.d)),
        ("r", json!(a.r)),
        ("M", json!(a.max_part)),
        ("order", json!(order)),
        ("mod", json!(a.modulus)),
    ]);
    let report = json!({ "kind": kind, "label": label, "series": to_value(&s) });

    let suffix = a.modulus.map(|m| format!(" mod {m}")).unwrap_or_default();
    let mut text = format!("{label} through q^{order}{suffix}\n");
    for (n, c) in s.coeffs().iter().enumerate() {
        text.push_str(&format!("{n:>6}  {c}\n"));
    }
    let mut table = Table::new((0..=order).map(|n| format!("q^{n}")));
    table.push(strings(s.coeffs()));
    Ok(Outcome { command: "series", parameters, holds: true, report, text, table })
}

fn progression_report<T: Coefficient>(params: ColoredCountParams, spec: &ProgressionSpec) -> Result<CongruenceReport, String> {
    let m = T::from_u(spec.modulus);
    let s = ckj_series::<T>(params, spec.max_index as usize, Some(m)).map_err(err)?;
    verify_progression(&s, spec).map_err(err)
}

pub fn congruence(a: &CongruenceArgs) -> Result<Outcome, String> {
    if a.search {
        return witness_scan(a);
    }
    let text_in = a.progression.as_deref().expect("clap requires --progression without --search");
    let form = ProgressionForm::parse(text_in, a.ell).map_err(err)?;
    let spec = ProgressionSpec::new(form.residue, form.step, a.modulus, a.max).map_err(err)?;
    let params = ColoredCountParams::new(a.k, a.j).map_err(err)?;
    // i64 products stay in range below 2^31
    let rep = if a.modulus < 1 << 31 && a.k <= 40 {
        progression_report::<i64>(params, &spec)?
    } else {
        progression_report::<BigInt>(params, &spec)?
    };

    let parameters = object(vec![
        ("k", json!(a.k)),
        ("j", json!(a.j)),
        ("mod", json!(a.modulus)),
        ("progression", json!(text_in)),
        ("ell", json!(a.ell)),
        ("max", json!(a.max)),
    ]);
    let mut report = to_value(&rep);
    insert(&mut report, "k", json!(a.k));
    insert(&mut report, "j", json!(a.j));
    insert(&mut report, "progression", json!(form.to_string()));

    let head = format!("c_{{{},{}}}({form}) mod {}, indices <= {}", a.k, a.j, a.modulus, a.max);
    let text = if rep.holds {
        format!("{head}: holds ({} coefficients checked)\n", rep.checked_count)
    } else {
        let shown: Vec<String> = rep.witnesses.iter().take(10).map(|(i, r)| format!("({i}, {r})")).collect();
        format!(
            "{head}: fails ({} coefficients checked, {} witnesses recorded)\nwitnesses (index, residue): {}\n",
            rep.checked_count,
            rep.witnesses.len(),
            shown.join(" ")
        )
    };
    let mut table = Table::new(["index", "residue"]);
    for (i, r) in &rep.witnesses {
        table.push(vec![i.to_string(), r.to_string()]);
    }
    Ok(Outcome { command: "congruence", parameters, holds: rep.holds, report, text, table })
}

fn witness_scan(a: &CongruenceArgs) -> Result<Outcome, String> {
    if a.k != nine_colors::COLORS || a.modulus != nine_colors::MODULUS {
        return Err(format!("--search scans c_{{9,j}} modulo 27, got k={} and mod={}", a.k, a.modulus));
    }
    let rep = witness_search(a.j, a.ell_max, a.bound).map_err(err)?;
    let holds = rep.entries.iter().all(|e| e.witness.is_none());
    let parameters = object(vec![
        ("k", json!(a.k)),
        ("j", json!(a.j)),
        ("mod", json!(a.modulus)),
        ("search", json!(true)),
        ("ell_max", json!(a.ell_max)),
        ("bound", json!(a.bound)),
    ]);
    let mut text = format!("c_{{9,{}}}(3^l n+2) mod 27, coefficient indices <= {}\n", a.j, a.bound);
    let mut table = Table::new(["ell", "step", "witness_index", "witness_residue", "checked_count"]);
    for e in &rep.entries {
        let found = match e.witness {
            Some((i, r)) => format!("witness ({i}, {r})"),
            None => "no witness".into(),
        };
        text.push_str(&format!("l={} ({}n+2): {found} after {} checked\n", e.ell, e.step, e.checked_count));
        let (wi, wr) = e.witness.map(|(i, r)| (i.to_string(), r.to_string())).unwrap_or_default();
        table.push(vec![e.ell.to_string(), e.step.to_string(), wi, wr, e.checked_count.to_string()]);
    }
    Ok(Outcome { command: "congruence", parameters, holds, report: to_value(&rep), text, table })
}

pub fn theorem2(a: &Theorem2Args) -> Result<Outcome, String> {
    let rep = if a.mod_p { mod_p_check(a.p, a.nmax) } else { theorem2_check(a.p, a.nmax) }.map_err(err)?;
    let parameters = object(vec![("p", json!(a.p)), ("nmax", json!(a.nmax)), ("mod_p", json!(a.mod_p))]);
    let mut report = to_value(&rep);
    let relation = if a.mod_p { "c_2p,p(n) = pbar(n/p) mod p" } else { "c_2p,p(n) = pbar(n/p) + p*sum_S mod p^2" };
    insert(&mut report, "relation", json!(relation));
    let head = format!("{relation} with p={}, n <= {}", a.p, a.nmax);
    let mut text = if rep.holds() {
        format!("{head}: holds ({} values checked)\n", rep.checked_count)
    } else {
        format!("{head}: {} mismatches ({} values checked)\n", rep.mismatches.len(), rep.checked_count)
    };
    let mut table = Table::new(["n", "lhs", "rhs"]);
    for m in &rep.mismatches {
        text.push_str(&format!("n={}: series {} vs sum {}\n", m.n, m.lhs, m.rhs));
        table.push(vec![m.n.to_string(), m.lhs.to_string(), m.rhs.to_string()]);
    }
    Ok(Outcome { command: "theorem2", parameters, holds: rep.holds(), report, text, table })
}

/// `x1^t1*x2^t2...` over the variables that were not set to 1.
fn exponent_labels(arr: &ColorCoefficientArray<BigInt>) -> Vec<String> {
    let vars: Vec<usize> = (1..=arr.k).filter(|&i| arr.specialized() != Some(i - 1)).collect();
    let shape = arr.shape();
    let len: usize = shape.iter().product();
    (0..len)
        .map(|mut flat| {
            let mut exps = vec![0; shape.len()];
            for a in (0..shape.len()).rev() {
                exps[a] = flat % shape[a];
                flat /= shape[a];
            }
            if exps.is_empty() {
                return "1".to_string();
            }
            vars.iter().zip(&exps).map(|(v, e)| format!("x{v}^{e}")).collect::<Vec<_>>().join("*")
        })
        .collect()
}

/// Leading rows and columns that hold every nonzero entry of a 2-D array.
fn trimmed_rows(arr: &ColorCoefficientArray<BigInt>) -> Option<Vec<Vec<BigInt>>> {
    let rows = arr.rows()?;
    let ext = arr.nonzero_extent();
    Some(rows.into_iter().take(ext[0]).map(|r| r.into_iter().take(ext[1]).collect()).collect())
}

fn array_text(arr: &ColorCoefficientArray<BigInt>) -> String {
    let fixed = arr.specialized().map(|a| format!(", x{} = 1", a + 1)).unwrap_or_default();
    let mut s = format!(
        "box {}x{}, k={}, coefficient of q^{}{fixed}, shape {:?}\n",
        arr.bx.max_part,
        arr.bx.max_parts,
        arr.k,
        arr.n,
        arr.shape()
    );
    match trimmed_rows(arr) {
        Some(rows) if rows.is_empty() => s.push_str("all entries are zero\n"),
        Some(rows) => {
            let ext = arr.nonzero_extent();
            if ext != arr.shape() {
                s.push_str(&format!("leading {}x{} block (all other entries are zero):\n", ext[0], ext[1]));
            }
            s.push_str(&matrix(&rows));
        }
        None => {
            for (label, v) in exponent_labels(arr).iter().zip(arr.data()) {
                if *v != BigInt::default() {
                    s.push_str(&format!("{label}: {v}\n"));
                }
            }
        }
    }
    s
}

fn array_table(arr: &ColorCoefficientArray<BigInt>) -> Table {
    let mut t = Table::new(exponent_labels(arr));
    t.push(strings(arr.data()));
    t
}

fn build_array(bx: BoxSpec, k: usize, n: usize, specialize: Option<usize>) -> Result<ColorCoefficientArray<BigInt>, String> {
    let arr = box_color_array::<BigInt>(bx, k, n).map_err(err)?;
    match specialize {
        None => Ok(arr),
        Some(s) if s == 0 || s > k => Err(format!("--specialize must be between 1 and k={k}, got {s}")),
        Some(s) => arr.specialize_one(s - 1).map_err(err),
    }
}

pub fn box_cmd(a: &BoxArgs) -> Result<Outcome, String> {
    let bx = BoxSpec::new(a.max_part, a.max_parts).map_err(err)?;
    let parameters = object(vec![
        ("M", json!(a.max_part)),
        ("N", json!(a.max_parts)),
        ("r", json!(a.r)),
        ("k", json!(a.k)),
        ("n", json!(a.n)),
        ("specialize", json!(a.specialize)),
    ]);
    if let Some(k) = a.k {
        let n = a.n.expect("clap requires --n with --k");
        let arr = build_array(bx, k, n, a.specialize)?;
        return Ok(Outcome { command: "box", parameters, holds: true, report: to_value(&arr), text: array_text(&arr), table: array_table(&arr) });
    }
    let rs: Vec<usize> = match a.r {
        Some(r) => vec![r],
        None => (0..=bx.max_sizes()).collect(),
    };
    let area = bx.area();
    let mut polys = Vec::new();
    let mut text = String::new();
    let mut table = Table::new(std::iter::once("r".to_string()).chain((0..=area).map(|n| format!("q^{n}"))));
    for r in rs {
        let f = f_box_sizes::<BigInt>(bx, r);
        let coeffs: Vec<BigInt> = (0..=area).map(|n| f.coeff(n)).collect();
        text.push_str(&format!("f_{{{}x{};{r}}}(q) = {f}\n", bx.max_part, bx.max_parts));
        polys.push(json!({ "r": r, "coeffs": strings(&coeffs) }));
        table.push(std::iter::once(r.to_string()).chain(strings(&coeffs)).collect());
    }
    let report = json!({ "box": to_value(&bx), "polynomials": polys });
    Ok(Outcome { command: "box", parameters, holds: true, report, text, table })
}

fn violation_lines(vs: &[CutViolation<BigInt>]) -> String {
    vs.iter().map(|v| format!("start {} direction {}: {}\n", tuple(&v.cut.start), tuple(&v.cut.direction), tuple(&v.sequence))).collect()
}

pub fn unimodal(a: &UnimodalArgs) -> Result<Outcome, String> {
    if a.dirbound < 1 {
        return Err(format!("--dirbound must be at least 1, got {}", a.dirbound));
    }
    if a.sweep {
        return sweep(a);
    }
    let k = match a.k.as_slice() {
        [k] => *k,
        _ => return Err("--k takes a single value unless --sweep is given".into()),
    };
    let n = a.n.expect("clap requires --n without --sweep");
    let bx = BoxSpec::new(a.max_part, a.max_parts).map_err(err)?;
    let axis = a.specialize.unwrap_or(k);
    let arr = build_array(bx, k, n, Some(axis))?;
    let (cuts_checked, violations) = scan_array(&arr, a.dirbound);
    let rep = UnimodalityReport { bx, k, n, specialized: arr.specialized(), direction_bound: a.dirbound, cuts_checked, violations };

    let parameters = object(vec![
        ("M", json!(a.max_part)),
        ("N", json!(a.max_parts)),
        ("k", json!(k)),
        ("n", json!(n)),
        ("specialize", json!(axis)),
        ("dirbound", json!(a.dirbound)),
    ]);
    let mut report = to_value(&rep);
    insert(&mut report, "array", to_value(&arr));
    let mut text = array_text(&arr);
    if rep.holds() {
        text.push_str(&format!("no violations ({cuts_checked} cuts checked, direction bound {})\n", a.dirbound));
    } else {
        text.push_str(&format!("{} violations ({cuts_checked} cuts checked, direction bound {}):\n", rep.violations.len(), a.dirbound));
        text.push_str(&violation_lines(&rep.violations));
    }
    let mut table = Table::new(["start", "direction", "sequence"]);
    for v in &rep.violations {
        table.push(vec![tuple(&v.cut.start), tuple(&v.cut.direction), tuple(&v.sequence)]);
    }
    Ok(Outcome { command: "unimodal", parameters, holds: rep.holds(), report, text, table })
}

fn sweep(a: &UnimodalArgs) -> Result<Outcome, String> {
    if a.k.contains(&0) {
        return Err("--k values must be at least 1".into());
    }
    let rep = unimodality_sweep::<BigInt>(a.max_part, a.max_parts, &a.k, a.dirbound).map_err(err)?;
    let parameters = object(vec![
        ("M", json!(a.max_part)),
        ("N", json!(a.max_parts)),
        ("k", json!(a.k)),
        ("dirbound", json!(a.dirbound)),
        ("sweep", json!(true)),
    ]);
    let mut text = format!(
        "boxes up to {}x{}, k in {}, direction bound {}: {} arrays, {} cuts checked\n",
        a.max_part,
        a.max_parts,
        tuple(&a.k),
        a.dirbound,
        rep.arrays_checked,
        rep.cuts_checked
    );
    let mut table = Table::new(["M", "N", "k", "n", "start", "direction", "sequence"]);
    if rep.holds() {
        text.push_str("no violations\n");
    }
    for f in &rep.findings {
        text.push_str(&format!("box {}x{}, k={}, q^{}:\n", f.bx.max_part, f.bx.max_parts, f.k, f.n));
        text.push_str(&violation_lines(&f.violations));
        for v in &f.violations {
            table.push(vec![
                f.bx.max_part.to_string(),
                f.bx.max_parts.to_string(),
                f.k.to_string(),
                f.n.to_string(),
                tuple(&v.cut.start),
                tuple(&v.cut.direction),
                tuple(&v.sequence),
            ]);
        }
    }
    Ok(Outcome { command: "unimodal", parameters, holds: rep.holds(), report: to_value(&rep), text, table })
}
