//! JSON encoding of polynomials:
//! `{"var": "x,s", "terms": [[[5, 0], "1"], [[3, 1], "-5"]]}`.
//!
//! `var` lists the variables (main variable first) separated by commas; each
//! term pairs an exponent vector of the same length with a decimal string
//! coefficient. Terms appear in canonical text order.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::bipoly::BiPoly;
use super::dense::{DensePoly, IntPoly};
use super::laurent::LaurentPoly;
use super::var::Var;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub var: String,
    pub terms: Vec<(Vec<i64>, String)>,
}

pub trait JsonPoly: Sized {
    fn to_json(&self) -> PolyJson;
    fn from_json(j: &PolyJson) -> Result<Self>;
}

fn vars_of(j: &PolyJson) -> Result<Vec<Var>> {
    j.var
        .split(',')
        .map(|v| Var::from_name(v.trim()).ok_or_else(|| Error::usage(format!("unknown variable `{v}` in JSON"))))
        .collect()
}

fn coef(s: &str) -> Result<BigInt> {
    s.parse().map_err(|_| Error::usage(format!("bad coefficient `{s}` in JSON")))
}

fn expect_arity(j: &PolyJson, n: usize) -> Result<Vec<Var>> {
    let vars = vars_of(j)?;
    if vars.len() != n || j.terms.iter().any(|(e, _)| e.len() != n) {
        return Err(Error::usage(format!("expected {n} variable(s) in JSON polynomial")));
    }
    Ok(vars)
}

fn nonneg(e: i64) -> Result<usize> {
    usize::try_from(e).map_err(|_| Error::usage("negative exponent in JSON polynomial"))
}

impl JsonPoly for IntPoly {
    fn to_json(&self) -> PolyJson {
        PolyJson { var: self.var().to_string(), terms: self.terms().rev().map(|(e, c)| (vec![e as i64], c.to_string())).collect() }
    }
    fn from_json(j: &PolyJson) -> Result<Self> {
        let vars = expect_arity(j, 1)?;
        let terms = j.terms.iter().map(|(e, c)| Ok((nonneg(e[0])?, coef(c)?))).collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::from_terms(vars[0], terms))
    }
}

impl JsonPoly for BiPoly {
    fn to_json(&self) -> PolyJson {
        PolyJson {
            var: "x,s".into(),
            terms: self.terms().rev().map(|(&(a, b), c)| (vec![a as i64, b as i64], c.to_string())).collect(),
        }
    }
    fn from_json(j: &PolyJson) -> Result<Self> {
        let vars = expect_arity(j, 2)?;
        if vars != [Var::X, Var::S] {
            return Err(Error::usage("BiPoly JSON must use variables x,s"));
        }
        let terms = j
            .terms
            .iter()
            .map(|(e, c)| Ok((nonneg(e[0])? as u32, nonneg(e[1])? as u32, coef(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(BiPoly::from_terms(terms))
    }
}

impl JsonPoly for LaurentPoly<BigInt> {
    fn to_json(&self) -> PolyJson {
        PolyJson { var: self.var().to_string(), terms: self.terms().rev().map(|(&e, c)| (vec![e], c.to_string())).collect() }
    }
    fn from_json(j: &PolyJson) -> Result<Self> {
        let vars = expect_arity(j, 1)?;
        let terms = j.terms.iter().map(|(e, c)| Ok((e[0], coef(c)?))).collect::<Result<Vec<_>>>()?;
        Ok(LaurentPoly::from_terms(vars[0], terms))
    }
}

impl JsonPoly for DensePoly<IntPoly> {
    fn to_json(&self) -> PolyJson {
        let inner = self.coeffs().iter().find(|c| !c.is_constant()).map(|c| c.var()).unwrap_or(Var::X);
        let mut terms = Vec::new();
        for (k, c) in self.terms().rev() {
            for (e, v) in c.terms().rev() {
                terms.push((vec![k as i64, e as i64], v.to_string()));
            }
        }
        PolyJson { var: format!("{},{}", self.var(), inner), terms }
    }
    fn from_json(j: &PolyJson) -> Result<Self> {
        let vars = expect_arity(j, 2)?;
        let mut by_main: Vec<Vec<(usize, BigInt)>> = Vec::new();
        for (e, c) in &j.terms {
            let k = nonneg(e[0])?;
            if by_main.len() <= k {
                by_main.resize(k + 1, Vec::new());
            }
            by_main[k].push((nonneg(e[1])?, coef(c)?));
        }
        Ok(DensePoly::new(vars[0], by_main.into_iter().map(|ts| IntPoly::from_terms(vars[1], ts)).collect()))
    }
}
