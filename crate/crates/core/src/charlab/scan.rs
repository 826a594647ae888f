use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::cell::{charpoly, CharCell};
use super::charpoly::{duality_transform, CharPoly};
use super::peel::{peel, v_high, v_low, Peeling};
use crate::error::Result;
use crate::exactalg::binomial;
use crate::verify::Status;

/// One conjecture clause evaluated for one `m` (and possibly one `k`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Clause {
    fn new(name: &str, k: Option<i64>, ok: bool, detail: Option<String>) -> Self {
        Clause { name: name.into(), k, status: Status::from_bool(ok), detail }
    }

    fn report(name: &str, k: Option<i64>, detail: String) -> Self {
        Clause { name: name.into(), k, status: Status::ReportOnly, detail: Some(detail) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellRow {
    pub k: i64,
    pub degree: Option<usize>,
    pub expected_degree: u64,
    pub factor_degrees: Vec<usize>,
    pub charpoly: Option<String>,
    pub escalated: bool,
    pub order_without_zero: Option<usize>,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorRow {
    pub k: i64,
    pub degree: usize,
    pub poly: String,
}

/// Everything the scan found for one `m`. Apart from the timings the report
/// depends only on `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub m: i64,
    pub cells: Vec<CellRow>,
    pub factors: Vec<FactorRow>,
    pub clauses: Vec<Clause>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    pub millis: u64,
}

impl ConjectureReport {
    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.status.is_fail())
    }

    pub fn passed(&self) -> bool {
        self.skipped.is_none() && self.failures().next().is_none()
    }

    pub fn clause(&self, name: &str, k: Option<i64>) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name && c.k == k)
    }
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    /// Stop starting new values of `m` once this much time has elapsed.
    pub time_budget: Option<Duration>,
    /// Duality is asserted up to this `m` and only reported beyond it.
    pub duality_assert_max_m: i64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { time_budget: None, duality_assert_max_m: 5 }
    }
}

fn expected_v_degree(m: i64, k: i64) -> u64 {
    binomial(m - 1, k.min(m - k)).try_into().unwrap_or(u64::MAX)
}

/// The two factors that `c_{m,k}` is conjectured to split into.
fn factor_pair(m: i64, k: i64) -> (i64, i64) {
    match (2 * k).cmp(&m) {
        std::cmp::Ordering::Less => (k - 1, k),
        std::cmp::Ordering::Greater => (k, k + 1),
        std::cmp::Ordering::Equal => (k - 1, k + 1),
    }
}

fn factor_clause_name(m: i64, k: i64) -> &'static str {
    match (2 * k).cmp(&m) {
        std::cmp::Ordering::Less => "factor_below_half",
        std::cmp::Ordering::Greater => "factor_above_half",
        std::cmp::Ordering::Equal => "factor_at_half",
    }
}

fn scan_one(m: i64, opts: &ScanOptions) -> Result<ConjectureReport> {
    let start = Instant::now();
    let timed: Vec<(CharCell, u64)> = (1..m)
        .into_par_iter()
        .map(|k| {
            let t = Instant::now();
            charpoly(m, k).map(|c| (c, t.elapsed().as_millis() as u64))
        })
        .collect::<Result<_>>()?;
    let cs: Vec<Option<CharPoly>> = timed.iter().map(|(c, _)| c.charpoly.clone()).collect();
    let peeling = peel(m, &cs);
    let mut clauses = Vec::new();
    let mut rows = Vec::new();

    for (cell, millis) in &timed {
        let k = cell.k;
        let expected: u64 = binomial(m, k).try_into().unwrap_or(u64::MAX);
        let Some(c) = &cell.charpoly else {
            clauses.push(Clause::new("certified", Some(k), false, cell.failure.clone()));
            rows.push(CellRow {
                k,
                degree: None,
                expected_degree: expected,
                factor_degrees: vec![],
                charpoly: None,
                escalated: cell.escalated,
                order_without_zero: None,
                millis: *millis,
            });
            continue;
        };
        clauses.push(Clause::new("certified", Some(k), true, None));
        let deg = c.order();
        clauses.push(Clause::new(
            "deg_c",
            Some(k),
            deg as u64 == expected,
            (deg as u64 != expected).then(|| format!("order {deg}, expected C({m},{k}) = {expected}")),
        ));

        let (a, b) = factor_pair(m, k);
        let (fa, fb) = (peeling.get(a), peeling.get(b));
        let mut factor_degrees = vec![];
        match (fa, fb) {
            (Some(fa), Some(fb)) => {
                factor_degrees = vec![fa.order(), fb.order()];
                let ok = fa.mul(fb) == *c;
                let detail = (!ok).then(|| format!("v_{{{m},{a}}} * v_{{{m},{b}}} != c_{{{m},{k}}}"));
                clauses.push(Clause::new(factor_clause_name(m, k), Some(k), ok, detail));
                clauses.push(minimality(c, &[fa, fb], &cell.sequence, k));
            }
            _ => {
                let why = peeling
                    .failures
                    .iter()
                    .map(|(kk, msg)| format!("k={kk}: {msg}"))
                    .collect::<Vec<_>>()
                    .join("; ");
                clauses.push(Clause::new(factor_clause_name(m, k), Some(k), false, Some(why)));
            }
        }

        let dual_target = &cs[(m - k - 1) as usize];
        let dual = duality_transform(c, m);
        let holds = dual_target.as_ref().is_some_and(|t| *t == dual);
        if m <= opts.duality_assert_max_m {
            let detail = (!holds).then(|| format!("transform of c_{{{m},{k}}} is {dual}"));
            clauses.push(Clause::new("duality", Some(k), holds, detail));
        } else {
            let verdict = if holds { "holds" } else { "differs" };
            clauses.push(Clause::report("duality", Some(k), format!("c_{{{m},{}}} ~ transform of c_{{{m},{k}}}: {verdict}", m - k)));
        }

        if let Some(r) = cell.order_without_zero {
            clauses.push(Clause::report("order_without_zero", Some(k), format!("dropping n=0 lowers the order from {deg} to {r}")));
        }

        rows.push(CellRow {
            k,
            degree: Some(deg),
            expected_degree: expected,
            factor_degrees,
            charpoly: Some(c.to_string()),
            escalated: cell.escalated,
            order_without_zero: cell.order_without_zero,
            millis: *millis,
        });
    }

    clauses.push(divides_clause("v_low", cs.first().and_then(Option::as_ref), &v_low(m), 1));
    clauses.push(divides_clause("v_high", cs.last().and_then(Option::as_ref), &v_high(m), m - 1));

    if m % 2 == 1 {
        let (lo, hi) = (m / 2, m / 2 + 1);
        let ok = matches!((peeling.get(lo), peeling.get(hi)), (Some(a), Some(b)) if a == b);
        let detail = (!ok).then(|| {
            let show = |v: Option<&CharPoly>| v.map_or("missing".to_string(), |p| p.to_string());
            format!("v_{{{m},{lo}}} = {}, v_{{{m},{hi}}} = {}", show(peeling.get(lo)), show(peeling.get(hi)))
        });
        clauses.push(Clause::new("middle_equal", None, ok, detail));
    }

    clauses.extend(degree_clauses(m, &peeling));
    clauses.extend(gcd_clauses(m, &cs, &peeling));

    let factors = peeling
        .factors
        .iter()
        .enumerate()
        .filter_map(|(k, v)| v.as_ref().map(|v| FactorRow { k: k as i64, degree: v.order(), poly: v.to_string() }))
        .collect();
    Ok(ConjectureReport { m, cells: rows, factors, clauses, skipped: None, millis: start.elapsed().as_millis() as u64 })
}

fn divides_clause(name: &str, c: Option<&CharPoly>, v: &CharPoly, k: i64) -> Clause {
    let ok = c.is_some_and(|c| c.div_exact(v).is_some());
    Clause::new(name, Some(k), ok, (!ok).then(|| format!("{v} does not divide c_{{m,{k}}}")))
}

/// Removing either factor must leave a polynomial that no longer annihilates.
fn minimality(c: &CharPoly, factors: &[&CharPoly], seq: &[crate::exactalg::IntPoly], k: i64) -> Clause {
    let mut witnesses = Vec::new();
    for f in factors {
        match c.div_exact(f) {
            Some(q) => match q.first_violation(seq) {
                Some(n) => witnesses.push(format!("without {f}: fails at n={n}")),
                None => return Clause::new("minimal", Some(k), false, Some(format!("{q} already annihilates"))),
            },
            None => return Clause::new("minimal", Some(k), false, Some(format!("{f} is not a factor"))),
        }
    }
    Clause { name: "minimal".into(), k: Some(k), status: Status::Pass, detail: Some(witnesses.join("; ")) }
}

fn degree_clauses(m: i64, peeling: &Peeling) -> Vec<Clause> {
    let mut out = Vec::new();
    for k in 0..=m {
        let Some(v) = peeling.get(k) else { continue };
        let d = v.order() as u64;
        let want = expected_v_degree(m, k);
        out.push(Clause::new(
            "deg_v",
            Some(k),
            d == want,
            (d != want).then(|| format!("deg v_{{{m},{k}}} = {d}, expected C({},{}) = {want}", m - 1, k.min(m - k))),
        ));
        let literal: u64 = binomial(m - 1, k).try_into().unwrap_or(u64::MAX);
        let verdict = if d == literal { "agrees" } else { "disagrees" };
        out.push(Clause::report(
            "deg_v_literal",
            Some(k),
            format!("deg v_{{{m},{k}}} = {d}, C({},{k}) = {literal}: {verdict}", m - 1),
        ));
    }
    out
}

/// Adjacent `c`'s share exactly the peeled factor between them.
fn gcd_clauses(m: i64, cs: &[Option<CharPoly>], peeling: &Peeling) -> Vec<Clause> {
    let mut out = Vec::new();
    for k in 1..m - 1 {
        let (Some(a), Some(b)) = (&cs[(k - 1) as usize], &cs[k as usize]) else { continue };
        // c_{m,k} and c_{m,k+1} share v_{m,k} below the middle and v_{m,k+1} above it
        let shared = if 2 * (k + 1) <= m || (m % 2 == 1 && k == m / 2) { k } else { k + 1 };
        let Some(v) = peeling.get(shared) else { continue };
        let (ok, detail) = match a.gcd(b) {
            Ok(g) if g == *v => (true, None),
            Ok(g) => (false, Some(format!("gcd(c_{{{m},{k}}}, c_{{{m},{}}}) = {g}", k + 1))),
            Err(e) => (false, Some(e.to_string())),
        };
        out.push(Clause::new("adjacent_gcd", Some(k), ok, detail));
    }
    out
}

/// Run every clause for `m_lo <= m <= m_hi`. Reports come back ordered by `m`.
pub fn conjecture_scan(m_lo: i64, m_hi: i64, opts: &ScanOptions) -> Result<Vec<ConjectureReport>> {
    if m_lo < 2 || m_hi < m_lo {
        return Err(crate::error::Error::usage(format!("need 2 <= m_lo <= m_hi, got {m_lo}..{m_hi}")));
    }
    let start = Instant::now();
    let mut out = Vec::new();
    for m in m_lo..=m_hi {
        if let Some(budget) = opts.time_budget {
            if start.elapsed() > budget {
                out.push(ConjectureReport {
                    m,
                    cells: vec![],
                    factors: vec![],
                    clauses: vec![],
                    skipped: Some(format!("time budget of {} s exhausted", budget.as_secs())),
                    millis: 0,
                });
                continue;
            }
        }
        out.push(scan_one(m, opts)?);
    }
    Ok(out)
}

/// Markdown table with one row per `(m, k)` and a list of the remaining clauses.
pub fn markdown_report(reports: &[ConjectureReport]) -> String {
    let mut s = String::new();
    s.push_str("| m | k | deg c | C(m,k) | factor degrees | clauses | ms |\n");
    s.push_str("|---|---|---|---|---|---|---|\n");
    for r in reports {
        if let Some(why) = &r.skipped {
            let _ = writeln!(s, "| {} | - | - | - | - | skipped: {why} | - |", r.m);
            continue;
        }
        for row in &r.cells {
            let clauses = r
                .clauses
                .iter()
                .filter(|c| c.k == Some(row.k) && c.status != Status::ReportOnly)
                .map(|c| format!("{}={}", c.name, c.status))
                .collect::<Vec<_>>()
                .join(", ");
            let deg = row.degree.map_or("-".to_string(), |d| d.to_string());
            let fd = row.factor_degrees.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("+");
            let _ = writeln!(s, "| {} | {} | {deg} | {} | {fd} | {clauses} | {} |", r.m, row.k, row.expected_degree, row.millis);
        }
    }
    s.push('\n');
    for r in reports {
        for c in r.clauses.iter().filter(|c| c.k.is_none() || c.status != Status::Pass) {
            let k = c.k.map_or(String::new(), |k| format!(" k={k}"));
            let d = c.detail.as_deref().map_or(String::new(), |d| format!(": {d}"));
            let _ = writeln!(s, "- m={}{k} {} {}{d}", r.m, c.name, c.status);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_m_all_pass() {
        let reports = conjecture_scan(2, 5, &ScanOptions::default()).unwrap();
        for r in &reports {
            let fails: Vec<_> = r.failures().collect();
            assert!(fails.is_empty(), "m={} {fails:?}", r.m);
        }
        let r4 = &reports[2];
        assert_eq!(r4.cells[1].degree, Some(6));
        assert_eq!(r4.clause("factor_at_half", Some(2)).unwrap().status, Status::Pass);
        let r5 = &reports[3];
        assert_eq!(r5.clause("middle_equal", None).unwrap().status, Status::Pass);
        assert_eq!(r5.clause("deg_v_literal", Some(4)).unwrap().status, Status::ReportOnly);
    }

    #[test]
    fn markdown_has_a_row_per_cell() {
        let reports = conjecture_scan(2, 3, &ScanOptions::default()).unwrap();
        let md = markdown_report(&reports);
        assert_eq!(md.lines().filter(|l| l.starts_with("| 3 |")).count(), 2);
    }

    #[test]
    fn zero_budget_skips() {
        let opts = ScanOptions { time_budget: Some(Duration::ZERO), ..ScanOptions::default() };
        let reports = conjecture_scan(2, 3, &opts).unwrap();
        assert!(reports.iter().all(|r| r.skipped.is_some()));
    }

    #[test]
    fn bad_range() {
        assert!(conjecture_scan(1, 3, &ScanOptions::default()).is_err());
        assert!(conjecture_scan(4, 3, &ScanOptions::default()).is_err());
    }
}
