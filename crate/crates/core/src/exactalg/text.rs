//! Canonical text form of every polynomial type, and its parser.
//!
//! Terms are printed by descending exponent of the main variable (ties by
//! descending exponent of the secondary variable), coefficients in decimal,
//! products with `*` and powers with `^`. A coefficient that is itself a
//! polynomial with several terms is parenthesized, with its sign pulled out
//! front: `z^5 - (x^4 + x^3)*z - x^4`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use super::bipoly::BiPoly;
use super::dense::{DensePoly, IntPoly};
use super::laurent::LaurentPoly;
use super::ring::Ring;
use super::var::Var;
use crate::error::{Error, Result};

/// How a coefficient prints in front of a monomial.
#[derive(Clone, Debug)]
pub struct CoefParts {
    pub negative: bool,
    /// Text of the absolute value (or of the negated polynomial).
    pub body: String,
    /// The absolute value is one, so it can be dropped before a monomial.
    pub unit: bool,
    /// More than one term: needs parentheses when multiplied.
    pub compound: bool,
}

/// Coefficients that know how to print themselves inside a larger term.
pub trait TermCoef {
    fn coef_parts(&self) -> CoefParts;
}

impl TermCoef for BigInt {
    fn coef_parts(&self) -> CoefParts {
        CoefParts { negative: self.is_negative(), body: self.abs().to_string(), unit: self.abs().is_one(), compound: false }
    }
}

fn monomial(var: Var, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.name().to_string(),
        _ => format!("{}^{}", var.name(), e),
    }
}

fn join_mono(parts: &[String]) -> String {
    parts.iter().filter(|p| !p.is_empty()).cloned().collect::<Vec<_>>().join("*")
}

fn term_body(c: &CoefParts, mono: &str) -> String {
    if mono.is_empty() {
        if c.compound {
            format!("({})", c.body)
        } else {
            c.body.clone()
        }
    } else if c.unit && !c.compound {
        mono.to_string()
    } else if c.compound {
        format!("({})*{}", c.body, mono)
    } else {
        format!("{}*{}", c.body, mono)
    }
}

fn write_sum(f: &mut impl fmt::Write, terms: &[(CoefParts, String)]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, (c, mono)) in terms.iter().enumerate() {
        let body = term_body(c, mono);
        match (i, c.negative) {
            (0, false) => f.write_str(&body)?,
            (0, true) => write!(f, "-{body}")?,
            (_, false) => write!(f, " + {body}")?,
            (_, true) => write!(f, " - {body}")?,
        }
    }
    Ok(())
}

fn sum_to_string(terms: &[(CoefParts, String)]) -> String {
    let mut s = String::new();
    write_sum(&mut s, terms).expect("writing to a String");
    s
}

/// Coefficient parts for a polynomial given its printed terms (descending).
fn poly_parts(terms: Vec<(CoefParts, String)>) -> CoefParts {
    match terms.len() {
        0 => CoefParts { negative: false, body: "0".into(), unit: false, compound: false },
        1 => {
            let (c, mono) = &terms[0];
            CoefParts {
                negative: c.negative,
                body: term_body(c, mono),
                unit: c.unit && mono.is_empty() && !c.compound,
                compound: c.compound && !mono.is_empty(),
            }
        }
        _ => {
            let negative = terms[0].0.negative;
            let flipped: Vec<(CoefParts, String)> = terms
                .into_iter()
                .map(|(mut c, m)| {
                    if negative {
                        c.negative = !c.negative;
                    }
                    (c, m)
                })
                .collect();
            CoefParts { negative, body: sum_to_string(&flipped), unit: false, compound: true }
        }
    }
}

impl<R: Ring + TermCoef> DensePoly<R> {
    fn printed_terms(&self) -> Vec<(CoefParts, String)> {
        self.terms().rev().map(|(e, c)| (c.coef_parts(), monomial(self.var(), e as i64))).collect()
    }
}

impl<R: Ring + TermCoef> TermCoef for DensePoly<R> {
    fn coef_parts(&self) -> CoefParts {
        poly_parts(self.printed_terms())
    }
}

impl<R: Ring + TermCoef> fmt::Display for DensePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, &self.printed_terms())
    }
}

impl<R: Ring + TermCoef> LaurentPoly<R> {
    fn printed_terms(&self) -> Vec<(CoefParts, String)> {
        self.terms().rev().map(|(&e, c)| (c.coef_parts(), monomial(self.var(), e))).collect()
    }
}

impl<R: Ring + TermCoef> TermCoef for LaurentPoly<R> {
    fn coef_parts(&self) -> CoefParts {
        poly_parts(self.printed_terms())
    }
}

impl<R: Ring + TermCoef> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, &self.printed_terms())
    }
}

impl BiPoly {
    fn printed_terms(&self) -> Vec<(CoefParts, String)> {
        self.terms()
            .rev()
            .map(|(&(xe, se), c)| {
                (c.coef_parts(), join_mono(&[monomial(Var::X, xe as i64), monomial(Var::S, se as i64)]))
            })
            .collect()
    }
}

impl TermCoef for BiPoly {
    fn coef_parts(&self) -> CoefParts {
        poly_parts(self.printed_terms())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, &self.printed_terms())
    }
}

// ---------------------------------------------------------------------------
// Parsing

const NVARS: usize = Var::ALL.len();
type Exps = [i64; NVARS];

/// A parsed polynomial in any of the known variables, exponents possibly
/// negative. Converted into a concrete type afterwards.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ParsedPoly {
    terms: BTreeMap<Exps, BigInt>,
}

impl ParsedPoly {
    fn constant(c: BigInt) -> Self {
        let mut p = ParsedPoly::default();
        p.add([0; NVARS], c);
        p
    }

    fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        let mut p = ParsedPoly::default();
        p.add(e, BigInt::one());
        p
    }

    fn add(&mut self, e: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn plus(mut self, other: ParsedPoly) -> Self {
        for (e, c) in other.terms {
            self.add(e, c);
        }
        self
    }

    fn negate(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }

    fn times(&self, other: &ParsedPoly) -> Self {
        let mut out = ParsedPoly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = *e1;
                for (a, b) in e.iter_mut().zip(e2) {
                    *a += b;
                }
                out.add(e, c1 * c2);
            }
        }
        out
    }

    fn is_unit_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    fn power(&self, exp: i64) -> Option<Self> {
        if exp >= 0 {
            let mut acc = ParsedPoly::constant(BigInt::one());
            for _ in 0..exp {
                acc = acc.times(self);
            }
            return Some(acc);
        }
        if !self.is_unit_monomial() {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        let mut out = ParsedPoly::default();
        let sign = if exp.rem_euclid(2) == 1 { c.clone() } else { BigInt::one() };
        out.add(e.map(|v| v * exp), sign);
        Some(out)
    }

    /// Variables with a nonzero exponent somewhere.
    pub fn vars_used(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|v| self.terms.keys().any(|e| e[v.index()] != 0)).collect()
    }

    fn check_vars(&self, allowed: &[Var], what: &str) -> Result<()> {
        for v in self.vars_used() {
            if !allowed.contains(&v) {
                return Err(Error::Parse { pos: 0, msg: format!("variable {v} not allowed in {what}") });
            }
        }
        Ok(())
    }

    fn check_nonnegative(&self, what: &str) -> Result<()> {
        if self.terms.keys().any(|e| e.iter().any(|&v| v < 0)) {
            return Err(Error::Parse { pos: 0, msg: format!("negative exponent in {what}") });
        }
        Ok(())
    }

    /// Univariate integer polynomial; the variable is inferred (`x` if none).
    pub fn into_intpoly(self) -> Result<IntPoly> {
        let used = self.vars_used();
        if used.len() > 1 {
            return Err(Error::Parse { pos: 0, msg: "more than one variable in a univariate polynomial".into() });
        }
        let var = used.first().copied().unwrap_or(Var::X);
        self.into_intpoly_in(var)
    }

    pub fn into_intpoly_in(self, var: Var) -> Result<IntPoly> {
        self.check_vars(&[var], "univariate polynomial")?;
        self.check_nonnegative("polynomial")?;
        Ok(IntPoly::from_terms(var, self.terms.into_iter().map(|(e, c)| (e[var.index()] as usize, c))))
    }

    pub fn into_bipoly(self) -> Result<BiPoly> {
        self.check_vars(&[Var::X, Var::S], "polynomial in x, s")?;
        self.check_nonnegative("polynomial")?;
        Ok(BiPoly::from_terms(
            self.terms.into_iter().map(|(e, c)| (e[Var::X.index()] as u32, e[Var::S.index()] as u32, c)),
        ))
    }

    pub fn into_laurent(self, var: Var) -> Result<LaurentPoly<BigInt>> {
        self.check_vars(&[var], "Laurent polynomial")?;
        Ok(LaurentPoly::from_terms(var, self.terms.into_iter().map(|(e, c)| (e[var.index()], c))))
    }

    /// Polynomial in `main` whose coefficients are polynomials in `inner`.
    pub fn into_nested(self, main: Var, inner: Var) -> Result<DensePoly<IntPoly>> {
        self.check_vars(&[main, inner], "nested polynomial")?;
        self.check_nonnegative("polynomial")?;
        let mut by_main: BTreeMap<usize, Vec<(usize, BigInt)>> = BTreeMap::new();
        for (e, c) in self.terms {
            by_main.entry(e[main.index()] as usize).or_default().push((e[inner.index()] as usize, c));
        }
        Ok(DensePoly::from_terms(main, by_main.into_iter().map(|(k, ts)| (k, IntPoly::from_terms(inner, ts)))))
    }

    /// Polynomial in `main` with `(x, s)` coefficients.
    pub fn into_bipoly_coeffs(self, main: Var) -> Result<Vec<BiPoly>> {
        self.check_vars(&[main, Var::X, Var::S], "polynomial with (x, s) coefficients")?;
        self.check_nonnegative("polynomial")?;
        let mut out: Vec<BiPoly> = Vec::new();
        for (e, c) in self.terms {
            let k = e[main.index()] as usize;
            if out.len() <= k {
                out.resize(k + 1, BiPoly::zero());
            }
            out[k].add_term(c, e[Var::X.index()] as u32, e[Var::S.index()] as u32);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(Var),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        let start = i;
        match ch {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' | '\u{2212}' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits parse as an integer");
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                    i += 1;
                }
                let name = &text[start..i];
                let var = Var::from_name(name)
                    .ok_or_else(|| Error::Parse { pos: start, msg: format!("unknown variable `{name}`") })?;
                out.push((start, Tok::Ident(var)));
                continue;
            }
            other => return Err(Error::Parse { pos: start, msg: format!("unexpected character `{other}`") }),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<ParsedPoly> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                self.term()?.negate()
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.plus(self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.plus(self.term()?.negate());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ParsedPoly> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = acc.times(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<ParsedPoly> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let negative = if let Some(Tok::Minus) = self.peek() {
                self.pos += 1;
                true
            } else {
                false
            };
            let at = self.here();
            let e = match self.peek() {
                Some(Tok::Int(n)) => {
                    let n = i64::try_from(n.clone()).or_else(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    n
                }
                _ => return self.err("expected an integer exponent"),
            };
            let e = if negative { -e } else { e };
            return base
                .power(e)
                .ok_or(Error::Parse { pos: at, msg: "negative power of a non-monomial".into() });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ParsedPoly> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(ParsedPoly::constant(n))
            }
            Some(Tok::Ident(v)) => {
                self.pos += 1;
                Ok(ParsedPoly::var(v))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.atom()?.negate())
            }
            Some(_) => self.err("expected a number, variable or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse canonical (or any equivalent) polynomial text.
pub fn parse_poly(text: &str) -> Result<ParsedPoly> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len() };
    if p.peek().is_none() {
        return p.err("empty input");
    }
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

impl FromStr for IntPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)?.into_intpoly()
    }
}

impl FromStr for BiPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)?.into_bipoly()
    }
}
