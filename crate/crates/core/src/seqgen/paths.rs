use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{binomial, floor_div, IntPoly, Var};

pub const DEFAULT_PATH_CAP: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    NE,
    SE,
}

impl Step {
    fn dy(self) -> i64 {
        match self {
            Step::NE => 1,
            Step::SE => -1,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Step::NE => "NE",
            Step::SE => "SE",
        })
    }
}

/// All admissible paths of length `n` inside the strip `-m-1 < y < m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSet {
    pub n: usize,
    pub m: usize,
    pub paths: Vec<Vec<Step>>,
}

impl PathSet {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Number of extremal points on one path.
    pub fn extremal_points(path: &[Step]) -> usize {
        let mut y = 0;
        let mut count = 0;
        for pair in path.windows(2) {
            y += pair[0].dy();
            match (pair[0], pair[1]) {
                (Step::NE, Step::SE) if y >= 1 => count += 1,
                (Step::SE, Step::NE) if y <= -2 => count += 1,
                _ => {}
            }
        }
        count
    }

    pub fn weight(&self) -> WeightPoly {
        let mut counts = vec![0u64; self.n + 1];
        for p in &self.paths {
            counts[Self::extremal_points(p)] += 1;
        }
        WeightPoly::from_counts(&counts)
    }
}

/// Generating polynomial in `t` of extremal-point counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightPoly(IntPoly);

impl WeightPoly {
    fn from_counts(counts: &[u64]) -> Self {
        WeightPoly(IntPoly::from_terms(Var::T, counts.iter().enumerate().map(|(e, &c)| (e, BigInt::from(c)))))
    }

    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn into_poly(self) -> IntPoly {
        self.0
    }

    pub fn at_one(&self) -> BigInt {
        self.0.coeffs().iter().sum()
    }
}

impl fmt::Display for WeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

struct Walker {
    n: usize,
    m: i64,
    keep: bool,
    counts: Vec<u64>,
    paths: Vec<Vec<Step>>,
    current: Vec<Step>,
}

impl Walker {
    fn walk(&mut self, y: i64, ne_left: usize, se_left: usize, extremal: usize) {
        if ne_left == 0 && se_left == 0 {
            self.counts[extremal] += 1;
            if self.keep {
                self.paths.push(self.current.clone());
            }
            return;
        }
        for (step, left) in [(Step::NE, ne_left), (Step::SE, se_left)] {
            if left == 0 {
                continue;
            }
            let ny = y + step.dy();
            if ny < -self.m || ny >= self.m {
                continue;
            }
            let bonus = match (self.current.last(), step) {
                (Some(Step::NE), Step::SE) if y >= 1 => 1,
                (Some(Step::SE), Step::NE) if y <= -2 => 1,
                _ => 0,
            };
            self.current.push(step);
            match step {
                Step::NE => self.walk(ny, ne_left - 1, se_left, extremal + bonus),
                Step::SE => self.walk(ny, ne_left, se_left - 1, extremal + bonus),
            }
            self.current.pop();
        }
    }
}

fn run(n: usize, m: usize, cap: u64, keep: bool) -> Result<Walker> {
    assert!(m >= 2, "lattice paths need m >= 2");
    let total = binomial(n as i64, (n / 2) as i64);
    if total > BigInt::from(cap) {
        return Err(Error::Resource(format!(
            "path enumeration for n={n} would visit up to {total} paths, above the cap of {cap}"
        )));
    }
    let mut w = Walker { n, m: m as i64, keep, counts: vec![0; n + 1], paths: Vec::new(), current: Vec::with_capacity(n) };
    w.walk(0, n / 2, n.div_ceil(2), 0);
    debug_assert_eq!(w.n, n);
    Ok(w)
}

/// Weight of the path set by exhaustive depth-first enumeration.
pub fn enumerate_paths(n: usize, m: usize, cap: u64) -> Result<WeightPoly> {
    Ok(WeightPoly::from_counts(&run(n, m, cap, false)?.counts))
}

/// The path set itself, for display.
pub fn list_paths(n: usize, m: usize, cap: u64) -> Result<PathSet> {
    let w = run(n, m, cap, true)?;
    Ok(PathSet { n, m, paths: w.paths })
}

/// The closed double sum for the weight, evaluated literally.
///
/// Binomials with a negative upper index vanish. The result is a plain
/// polynomial since nothing forces its coefficients to be nonnegative.
pub fn pathweight_formula(n: usize, m: usize) -> IntPoly {
    assert!(m >= 2, "lattice paths need m >= 2");
    let (n, c) = (n as i64, 2 * m as i64 - 3);
    let mut coeffs: Vec<BigInt> = vec![BigInt::from(0); n as usize + 2];
    for j in -(n + 1)..=(n + 1) {
        let top_a = floor_div(n + c * j, 2);
        let top_b = floor_div(n + 1 - c * j, 2);
        if top_a < 0 || top_b < 0 {
            continue;
        }
        let sign = if j.rem_euclid(2) == 0 { 1 } else { -1 };
        for l in j.abs()..=(top_a + j).min(top_b - j) {
            let term = binomial(top_a, l - j) * binomial(top_b, l + j) * sign;
            let l = l as usize;
            if coeffs.len() <= l {
                coeffs.resize(l + 1, BigInt::from(0));
            }
            coeffs[l] += term;
        }
    }
    IntPoly::new(Var::T, coeffs)
}

/// Outcome of comparing the closed formula with enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaComparison {
    Equal,
    Unequal { formula: IntPoly, enumerated: IntPoly },
    Skipped { reason: String },
}

pub fn compare_formula(n: usize, m: usize, cap: u64) -> FormulaComparison {
    let formula = pathweight_formula(n, m);
    match enumerate_paths(n, m, cap) {
        Ok(w) if *w.poly() == formula => FormulaComparison::Equal,
        Ok(w) => FormulaComparison::Unequal { formula, enumerated: w.into_poly() },
        Err(e) => FormulaComparison::Skipped { reason: e.to_string() },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Ring;
    use crate::seqgen::{a_sum_at_minus_one, fib_lucas, FibKind};

    fn tp(s: &str) -> IntPoly {
        crate::exactalg::parse_poly(s).unwrap().into_intpoly_in(Var::T).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(*enumerate_paths(2, 2, DEFAULT_PATH_CAP).unwrap().poly(), tp("1 + t"));
        assert_eq!(*enumerate_paths(0, 2, DEFAULT_PATH_CAP).unwrap().poly(), tp("1"));
        let set = list_paths(2, 2, DEFAULT_PATH_CAP).unwrap();
        assert_eq!(set.paths, vec![vec![Step::NE, Step::SE], vec![Step::SE, Step::NE]]);
        assert_eq!(set.weight(), enumerate_paths(2, 2, DEFAULT_PATH_CAP).unwrap());
    }

    #[test]
    fn paths_respect_shape() {
        for m in 2..=4 {
            for n in 0..=12 {
                let set = list_paths(n, m, DEFAULT_PATH_CAP).unwrap();
                for p in &set.paths {
                    assert_eq!(p.iter().filter(|s| **s == Step::NE).count(), n / 2);
                    assert_eq!(p.iter().filter(|s| **s == Step::SE).count(), n.div_ceil(2));
                    let mut y = 0i64;
                    for s in p {
                        y += s.dy();
                        assert!(-(m as i64) - 1 < y && y < m as i64);
                    }
                }
                assert_eq!(set.weight().at_one(), BigInt::from(set.len()));
            }
        }
    }

    #[test]
    fn strip_two_gives_fibonacci() {
        for n in 0..=16 {
            let want = fib_lucas(n + 1, FibKind::Fibonacci).eval_in(&tp("1"), &tp("t"));
            assert_eq!(*enumerate_paths(n, 2, DEFAULT_PATH_CAP).unwrap().poly(), want, "n={n}");
        }
    }

    #[test]
    fn count_matches_floored_sum() {
        for m in 2..=4 {
            for n in 0..=16 {
                let w = enumerate_paths(n, m, DEFAULT_PATH_CAP).unwrap();
                assert_eq!(w.at_one(), a_sum_at_minus_one(n as i64, 2 * m as i64 + 1, 0, 2), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn formula_at_empty_path() {
        for m in 2..=6 {
            assert_eq!(pathweight_formula(0, m), IntPoly::one().with_var(Var::T));
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_paths(30, 3, 1000), Err(Error::Resource(_))));
        assert!(matches!(compare_formula(30, 3, 1000), FormulaComparison::Skipped { .. }));
    }
}
