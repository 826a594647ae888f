use std::fmt::Write as _;
use std::time::Duration;

use binrec_core::charlab::{charpoly as find_charpoly, conjecture_scan, extract_v_factors, markdown_report, ScanOptions};
use binrec_core::exactalg::{BiPoly, JsonPoly};
use binrec_core::recurrence::{assemble_pk, pk_closed, pk_oracle};
use binrec_core::seqgen::{a_closed_i1, a_sum, enumerate_paths, list_paths, BinomArray, PathSet};
use binrec_core::verify::{gf_expand, markdown_summary, run_suite, GfFamily, Status, SuiteOptions};
use binrec_core::{Error, Result};
use serde_json::{json, Value};

use crate::output::{Report, Table};
use crate::{CellArgs, ConjArgs, GfArgs, MArgs, PathArgs, PkArgs, PkSource, SeqArgs, SeqTable, VerifyArgs};

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(usage(msg))
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn text_of(table: &Table) -> String {
    let widths: Vec<usize> = (0..table.headers.len())
        .map(|c| table.rows.iter().map(|r| r[c].len()).chain([table.headers[c].len()]).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for row in std::iter::once(&table.headers).chain(&table.rows) {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(s, "{}", cells.join("  ").trim_end());
    }
    s
}

fn from_table(table: Table, json: Value) -> Report {
    Report::new(text_of(&table), json, table)
}

pub fn seq(a: &SeqArgs) -> Result<Report> {
    need(a.n_max >= 0, "--n-max must be nonnegative")?;
    need(a.m >= 2, "--m must be at least 2")?;
    let value = |n: i64| -> Result<String> {
        let p = match a.table {
            SeqTable::ASum => {
                need(a.i >= 1, "--i must be at least 1")?;
                a_sum(n, a.i, a.l, a.m)
            }
            SeqTable::AClosed => a_closed_i1(n, a.m),
            SeqTable::BinomFloor => unreachable!(),
        };
        Ok(if a.at_minus_one {
            p.eval_at_unit(&(-1).into()).expect("-1 is a unit").to_string()
        } else {
            p.to_string()
        })
    };
    let mut rows = Vec::new();
    let table = match a.table {
        SeqTable::BinomFloor => {
            let mut t = Table::new(&["n", "k", "value"]);
            for n in 0..=a.n_max {
                let row = BinomArray::new(a.m, n);
                let (lo, hi) = row.support();
                for k in lo..=hi {
                    let v = row.get(k).to_string();
                    rows.push(json!({"n": n, "k": k, "value": v}));
                    t.push(vec![n.to_string(), k.to_string(), v]);
                }
            }
            t
        }
        _ => {
            let mut t = Table::new(&["n", "value"]);
            for n in 0..=a.n_max {
                let v = value(n)?;
                rows.push(json!({"n": n, "value": v}));
                t.push(vec![n.to_string(), v]);
            }
            t
        }
    };
    let params = json!({"i": a.i, "l": a.l, "m": a.m, "at_minus_one": a.at_minus_one});
    Ok(from_table(table, json!({"table": format!("{:?}", a.table), "params": params, "rows": rows})))
}

pub fn pk(a: &PkArgs) -> Result<Report> {
    need(a.n >= 0 && a.m >= 2, "need --n >= 0 and --m >= 2")?;
    let ks: Vec<i64> = match a.k {
        Some(k) => {
            need((1..a.m).contains(&k), "--k must lie in 1..m-1")?;
            vec![k]
        }
        None if a.source == PkSource::Closed => {
            let mut v = vec![1];
            if a.m > 2 {
                v.push(a.m - 1);
            }
            v
        }
        None => (1..a.m).collect(),
    };
    let (polys, provenance): (Vec<BiPoly>, String) = match a.source {
        PkSource::Newton | PkSource::Oracle => {
            let fam = if a.source == PkSource::Newton { assemble_pk(a.n, a.m)? } else { pk_oracle(a.n, a.m)? };
            (ks.iter().map(|&k| fam.get(k as usize).clone()).collect(), fam.provenance.to_string())
        }
        PkSource::Closed => (ks.iter().map(|&k| pk_closed(a.n, a.m, k)).collect::<Result<_>>()?, "closed-form".into()),
    };
    let mut table = Table::new(&["k", "provenance", "p_k"]);
    let mut text = String::new();
    let mut items = Vec::new();
    for (k, p) in ks.iter().zip(&polys) {
        let s = p.to_string();
        let _ = writeln!(text, "{s}");
        items.push(json!({"k": k, "text": s, "poly": to_value(&p.to_json())}));
        table.push(vec![k.to_string(), provenance.clone(), s]);
    }
    let json = json!({"n": a.n, "m": a.m, "provenance": provenance, "polys": items});
    Ok(Report::new(text, json, table))
}

pub fn charpoly(a: &CellArgs) -> Result<Report> {
    let cell = find_charpoly(a.m, a.k)?;
    let text = match (&cell.charpoly, &cell.failure) {
        (Some(c), _) => c.to_string(),
        (None, f) => format!("no recurrence found: {}", f.as_deref().unwrap_or("unknown reason")),
    };
    let mut table = Table::new(&["m", "k", "order", "charpoly"]);
    table.push(vec![
        a.m.to_string(),
        a.k.to_string(),
        cell.charpoly.as_ref().map_or("-".into(), |c| c.order().to_string()),
        text.clone(),
    ]);
    let json = json!({
        "m": a.m,
        "k": a.k,
        "charpoly": cell.charpoly.as_ref().map(|c| c.to_string()),
        "poly": cell.charpoly.as_ref().map(|c| to_value(&c.to_json())),
        "order": cell.charpoly.as_ref().map(|c| c.order()),
        "escalated": cell.escalated,
        "order_without_zero": cell.order_without_zero,
        "failure": cell.failure,
    });
    let mut r = Report::new(text, json, table);
    r.failed = cell.charpoly.is_none();
    Ok(r)
}

pub fn vfactors(a: &MArgs) -> Result<Report> {
    need(a.m >= 2, "--m must be at least 2")?;
    let (_, peeling) = extract_v_factors(a.m)?;
    let mut table = Table::new(&["k", "degree", "v"]);
    let mut items = Vec::new();
    let mut text = String::new();
    for (k, f) in peeling.factors.iter().enumerate() {
        if a.m % 2 == 0 && 2 * k as i64 == a.m {
            continue;
        }
        let (deg, s) = f.as_ref().map_or(("-".to_string(), "-".to_string()), |c| (c.order().to_string(), c.to_string()));
        let _ = writeln!(text, "v[{}, {k}] = {s}", a.m);
        items.push(json!({"k": k, "degree": f.as_ref().map(|c| c.order()), "v": f.as_ref().map(|c| c.to_string())}));
        table.push(vec![k.to_string(), deg, s]);
    }
    for (k, msg) in &peeling.failures {
        let _ = writeln!(text, "peeling failed at k={k}: {msg}");
    }
    let failures: Vec<Value> = peeling.failures.iter().map(|(k, m)| json!({"k": k, "message": m})).collect();
    let mut r = Report::new(text, json!({"m": a.m, "factors": items, "failures": failures}), table);
    r.failed = !peeling.failures.is_empty();
    Ok(r)
}

fn parse_range(s: &str) -> Result<(i64, i64)> {
    let bad = || usage(format!("bad range `{s}`; expected a..b"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    need(2 <= lo && lo <= hi, "the m-range must satisfy 2 <= a <= b")?;
    Ok((lo, hi))
}

pub fn conjectures(a: &ConjArgs) -> Result<Report> {
    let (lo, hi) = parse_range(&a.m_range)?;
    if hi >= 7 && !a.stretch {
        return Err(usage("m >= 7 takes minutes; pass --stretch to run it"));
    }
    let opts = ScanOptions { time_budget: a.time_budget.map(Duration::from_secs), ..ScanOptions::default() };
    let reports = conjecture_scan(lo, hi, &opts)?;
    let mut table = Table::new(&["m", "clause", "k", "status", "detail"]);
    for r in &reports {
        if let Some(why) = &r.skipped {
            table.push(vec![r.m.to_string(), "skipped".into(), String::new(), "report-only".into(), why.clone()]);
        }
        for c in &r.clauses {
            table.push(vec![
                r.m.to_string(),
                c.name.clone(),
                c.k.map_or(String::new(), |k| k.to_string()),
                c.status.to_string(),
                c.detail.clone().unwrap_or_default(),
            ]);
        }
    }
    let md = markdown_report(&reports);
    let mut r = Report::new(md.clone(), to_value(&reports), table);
    r.markdown = Some(md);
    r.failed = reports.iter().any(|r| r.failures().next().is_some());
    Ok(r)
}

pub fn verify(a: &VerifyArgs) -> Result<Report> {
    let opts = SuiteOptions { n_max: a.n_max, path_cap: a.path_cap };
    let results = run_suite(&a.checks, &opts)?;
    let mut table = Table::new(&["check", "parameters", "status", "witness_index", "lhs", "rhs", "note"]);
    let mut text = String::new();
    for r in &results {
        let _ = writeln!(text, "{r}");
        let (i, l, rh) = r.witness.as_ref().map_or(Default::default(), |w| (w.index.clone(), w.lhs.clone(), w.rhs.clone()));
        table.push(vec![r.id.clone(), r.params.clone(), r.status.to_string(), i, l, rh, r.note.clone().unwrap_or_default()]);
    }
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    let _ = writeln!(
        text,
        "{} passed, {} failed, {} report-only",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::ReportOnly)
    );
    let mut r = Report::new(text, to_value(&results), table);
    r.markdown = Some(markdown_summary(&results));
    r.failed = count(Status::Fail) > 0;
    Ok(r)
}

pub fn gf(a: &GfArgs) -> Result<Report> {
    let family: GfFamily = a.family.parse()?;
    let coeffs = gf_expand(family, a.i, a.terms)?;
    let mut table = Table::new(&["n", "coefficient"]);
    for (n, c) in coeffs.iter().enumerate() {
        table.push(vec![n.to_string(), c.clone()]);
    }
    let i = family.needs_step().then_some(a.i);
    Ok(from_table(table, json!({"family": family.name(), "i": i, "coefficients": coeffs})))
}

pub fn paths(a: &PathArgs) -> Result<Report> {
    need(a.m >= 2, "--m must be at least 2")?;
    if a.list {
        let set = list_paths(a.n, a.m, a.cap)?;
        let mut table = Table::new(&["path", "extremal_points"]);
        for p in &set.paths {
            let steps: Vec<String> = p.iter().map(ToString::to_string).collect();
            table.push(vec![steps.join(" "), PathSet::extremal_points(p).to_string()]);
        }
        let weight = set.weight();
        let mut text = text_of(&table);
        let _ = writeln!(text, "weight: {weight}\ncount: {}", weight.at_one());
        let json = json!({"n": a.n, "m": a.m, "weight": weight.to_string(), "count": weight.at_one().to_string(), "paths": to_value(&set.paths)});
        return Ok(Report::new(text, json, table));
    }
    let weight = enumerate_paths(a.n, a.m, a.cap)?;
    let mut table = Table::new(&["n", "m", "weight", "count"]);
    table.push(vec![a.n.to_string(), a.m.to_string(), weight.to_string(), weight.at_one().to_string()]);
    let text = format!("weight: {weight}\ncount: {}\n", weight.at_one());
    let json = json!({"n": a.n, "m": a.m, "weight": weight.to_string(), "count": weight.at_one().to_string()});
    Ok(Report::new(text, json, table))
}
