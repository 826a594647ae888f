use rayon::prelude::*;

use super::gf::gf_check;
use super::oeis::{oeis_prefix, OeisId, OEIS_OFFSET_NOTE};
use super::paths::{pathweight_formula_report, pathweight_recurrence_check, pathweight_values_check};
use super::result::{CheckResult, Witness};
use super::schur::schur_fibonacci_check;
use crate::error::{Error, Result};
use crate::exactalg::{IntPoly, Ring, Var};
use crate::recurrence::{
    assemble_pk, check_laurent_identity_8, check_shift_identity, master_sign, p2_m4, p2_m4_series, pk_closed,
    pk_oracle, roots_of_unity_check,
};
use crate::seqgen::{v_poly_explicit, w_poly_explicit, DEFAULT_PATH_CAP};

/// Names accepted by [`run_suite`], in report order.
pub const CHECK_NAMES: [&str; 11] =
    ["schur", "gf", "paths", "master", "oracle", "closed-forms", "shift", "laurent", "roots", "p2m4", "oeis"];

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Overrides the upper index bound of every check.
    pub n_max: Option<usize>,
    pub path_cap: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { n_max: None, path_cap: DEFAULT_PATH_CAP }
    }
}

impl SuiteOptions {
    fn n(&self, default: usize) -> usize {
        self.n_max.unwrap_or(default)
    }
}

/// Run the named checks (all of them when `names` is empty). Checks run
/// concurrently; results keep the order of `names`, then of parameters.
pub fn run_suite(names: &[String], opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let names: Vec<&str> = if names.is_empty() { CHECK_NAMES.to_vec() } else { names.iter().map(String::as_str).collect() };
    if let Some(bad) = names.iter().find(|n| !CHECK_NAMES.contains(n)) {
        return Err(Error::usage(format!("unknown check `{bad}`; known checks: {}", CHECK_NAMES.join(", "))));
    }
    let groups: Vec<Result<Vec<CheckResult>>> = names.par_iter().map(|name| run_one(name, opts)).collect();
    let mut out = Vec::new();
    for g in groups {
        out.extend(g?);
    }
    Ok(out)
}

fn run_one(name: &str, opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let cap = opts.path_cap;
    Ok(match name {
        "schur" => vec![schur_fibonacci_check(opts.n(60))],
        "gf" => {
            let cells: Vec<(usize, usize)> = [2, 3].into_iter().flat_map(|m| (1..=6).map(move |i| (m, i))).collect();
            cells.par_iter().map(|&(m, i)| gf_check(m, i, opts.n(30))).collect()
        }
        "paths" => (2..=4)
            .into_par_iter()
            .flat_map_iter(|m| {
                [
                    pathweight_values_check(m, opts.n(16), cap),
                    pathweight_recurrence_check(m, opts.n(14), cap),
                    pathweight_formula_report(m, opts.n(16), cap),
                ]
            })
            .collect(),
        "master" => vec![master_check(7, opts.n(30))?],
        "oracle" => vec![oracle_check(6, opts.n(24))?],
        "closed-forms" => vec![closed_forms_check(6, opts.n(24))?],
        "shift" => vec![shift_check(5, 6, opts.n(30))?],
        "laurent" => vec![laurent_check(6, opts.n(12))?],
        "roots" => vec![roots_check(4, opts.n(12).max(1), 1e-6)?],
        "p2m4" => vec![p2m4_check(opts.n(24))?],
        "oeis" => vec![oeis_report(opts.n(20) + 1)],
        _ => unreachable!("names are validated by run_suite"),
    })
}

/// First failing cell of a parameter grid, searched in parallel but
/// reported in grid order.
fn first_failure<P: Sync>(cells: &[P], test: impl Fn(&P) -> Result<Option<Witness>> + Sync + Send) -> Result<Option<Witness>> {
    let found: Vec<Option<Witness>> = cells.par_iter().map(test).collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().next())
}

fn grid(m_hi: i64, n_lo: i64, n_hi: usize) -> Vec<(i64, i64)> {
    (2..=m_hi).flat_map(|m| (n_lo..=n_hi as i64).map(move |n| (m, n))).collect()
}

fn violated(index: String) -> Option<Witness> {
    Some(Witness { index, lhs: "identity violated".into(), rhs: "identity".into() })
}

pub fn master_check(m_hi: i64, n_max: usize) -> Result<CheckResult> {
    let w = first_failure(&grid(m_hi, 0, n_max), |&(m, n)| {
        let fam = assemble_pk(n, m)?;
        let lhs = fam.polys.iter().fold(IntPoly::zero_in(Var::X), |acc, p| &acc + &p.substitute_shifted());
        let rhs = &IntPoly::one() + &IntPoly::monomial(Var::X, master_sign(n, m), n as usize);
        Ok((lhs != rhs).then(|| Witness { index: format!("n={n}, m={m}"), lhs: lhs.to_string(), rhs: rhs.to_string() }))
    })?;
    Ok(CheckResult::from_mismatch("master", format!("m in [2,{m_hi}], n in [0,{n_max}]"), w))
}

pub fn oracle_check(m_hi: i64, n_max: usize) -> Result<CheckResult> {
    let w = first_failure(&grid(m_hi, 0, n_max), |&(m, n)| {
        let (engine, oracle) = (assemble_pk(n, m)?, pk_oracle(n, m)?);
        Ok(engine.polys.iter().zip(&oracle.polys).enumerate().find(|(_, (a, b))| a != b).map(|(k, (a, b))| Witness {
            index: format!("n={n}, m={m}, k={}", k + 1),
            lhs: a.to_string(),
            rhs: b.to_string(),
        }))
    })?;
    Ok(CheckResult::from_mismatch("oracle", format!("m in [2,{m_hi}], n in [0,{n_max}]"), w))
}

/// Outer members against their closed forms, plus the `m = 3` pair
/// `p_1 = v_n`, `-p_2 = w_n` to `max(n_max, 30)`.
pub fn closed_forms_check(m_hi: i64, n_max: usize) -> Result<CheckResult> {
    let mut cells = grid(m_hi, 0, n_max);
    cells.extend((n_max as i64 + 1..=30).map(|n| (3, n)));
    let w = first_failure(&cells, |&(m, n)| {
        let fam = assemble_pk(n, m)?;
        for k in [1, m - 1] {
            let closed = pk_closed(n, m, k)?;
            if fam.get(k as usize) != &closed {
                return Ok(Some(Witness {
                    index: format!("n={n}, m={m}, k={k}"),
                    lhs: fam.get(k as usize).to_string(),
                    rhs: closed.to_string(),
                }));
            }
        }
        if m == 3 {
            let (v, w) = (v_poly_explicit(n as usize, 3), w_poly_explicit(n as usize, 3));
            if n > 0 && (fam.get(1) != &v || fam.get(2).neg_ref() != w) {
                return Ok(violated(format!("n={n}, m=3: p_1 = v_n, -p_2 = w_n")));
            }
        }
        Ok(None)
    })?;
    Ok(CheckResult::from_mismatch("closed-forms", format!("m in [2,{m_hi}], n in [0,{n_max}]"), w))
}

pub fn shift_check(m_hi: i64, i_hi: i64, n_max: usize) -> Result<CheckResult> {
    let cells: Vec<(i64, i64, i64)> =
        (2..=m_hi).flat_map(|m| (1..=i_hi).flat_map(move |i| (-2..=2).map(move |l| (m, i, l)))).collect();
    let w = first_failure(&cells, |&(m, i, l)| {
        Ok((!check_shift_identity(i, l, m, n_max)?).then(|| format!("m={m}, i={i}, l={l}")).and_then(violated))
    })?;
    Ok(CheckResult::from_mismatch("shift", format!("m in [2,{m_hi}], i in [1,{i_hi}], l in [-2,2], n in [0,{n_max}]"), w))
}

pub fn laurent_check(m_hi: i64, i_hi: usize) -> Result<CheckResult> {
    let w = first_failure(&grid(m_hi, 1, i_hi), |&(m, i)| {
        Ok((!check_laurent_identity_8(i, m)?).then(|| format!("i={i}, m={m}")).and_then(violated))
    })?;
    Ok(CheckResult::from_mismatch("laurent", format!("m in [2,{m_hi}], i in [1,{i_hi}]"), w))
}

pub fn roots_check(m_hi: i64, n_max: usize, tol: f64) -> Result<CheckResult> {
    let w = first_failure(&grid(m_hi, 1, n_max), |&(m, n)| {
        Ok((!roots_of_unity_check(n, m, tol)?).then(|| format!("n={n}, m={m}")).and_then(violated))
    })?;
    Ok(CheckResult::from_mismatch("roots", format!("m in [2,{m_hi}], n in [1,{n_max}], tol={tol:e}"), w))
}

/// `p_2(n, 4)` from its recursion and from its generating function against the engine.
pub fn p2m4_check(n_max: usize) -> Result<CheckResult> {
    let series = p2_m4_series(n_max + 1);
    let cells: Vec<usize> = (0..=n_max).collect();
    let w = first_failure(&cells, |&n| {
        let engine = assemble_pk(n as i64, 4)?.get(2).clone();
        let candidates = [(p2_m4(n), "recursion"), (series[n].clone(), "generating function")];
        Ok(candidates.into_iter().find(|(p, _)| *p != engine).map(|(p, how)| Witness {
            index: format!("n={n} ({how})"),
            lhs: p.to_string(),
            rhs: engine.to_string(),
        }))
    })?;
    Ok(CheckResult::from_mismatch("p2m4", format!("n in [0,{n_max}]"), w))
}

pub fn oeis_report(count: usize) -> CheckResult {
    let lines: Vec<String> = OeisId::ALL
        .iter()
        .map(|&id| {
            let terms: Vec<String> = oeis_prefix(id, count).iter().map(ToString::to_string).collect();
            format!("{id}: {}", terms.join(", "))
        })
        .collect();
    CheckResult::report("oeis", format!("count={count}"), format!("{OEIS_OFFSET_NOTE}\n    {}", lines.join("\n    ")))
}

/// Markdown summary table of suite results.
pub fn markdown_summary(results: &[CheckResult]) -> String {
    let mut out = String::from("| check | parameters | status | detail |\n|---|---|---|---|\n");
    for r in results {
        let detail = match (&r.witness, &r.note) {
            (Some(w), _) => format!("first mismatch at {}: `{}` vs `{}`", w.index, w.lhs, w.rhs),
            (None, Some(n)) => n.replace('\n', "<br>"),
            (None, None) => String::new(),
        };
        out.push_str(&format!("| {} | {} | {} | {} |\n", r.id, r.params, r.status, detail.replace('|', "\\|")));
    }
    out
}
