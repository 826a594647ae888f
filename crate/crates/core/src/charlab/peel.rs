use num_bigint::BigInt;

use super::cell::{charpoly, CharCell};
use super::charpoly::CharPoly;
use crate::error::{Error, Result};
use crate::exactalg::{IntPoly, Ring, Var};

/// The factors `v_{m,0}, ..., v_{m,m}` recovered by exact division.
#[derive(Clone, Debug, PartialEq)]
pub struct Peeling {
    pub m: i64,
    /// `factors[k]` is `v_{m,k}` when it was obtained.
    pub factors: Vec<Option<CharPoly>>,
    /// Divisions that did not go through, as `(k, message)`.
    pub failures: Vec<(i64, String)>,
}

impl Peeling {
    pub fn get(&self, k: i64) -> Option<&CharPoly> {
        self.factors.get(k as usize).and_then(Option::as_ref)
    }
}

/// `v_{m,0} = z - 1`.
pub fn v_low(_m: i64) -> CharPoly {
    CharPoly::linear(IntPoly::constant(Var::X, BigInt::from(1)))
}

/// `v_{m,m} = z + (-1)^(m-1) x`.
pub fn v_high(m: i64) -> CharPoly {
    CharPoly::linear(IntPoly::monomial(Var::X, BigInt::sign_pow(m), 1))
}

/// Peel `v_{m,k}` off `c_{m,1}, ..., c_{m,m-1}`: upward from `v_{m,0}` while
/// `2k < m`, downward from `v_{m,m}` while `2k > m`.
pub fn peel(m: i64, cs: &[Option<CharPoly>]) -> Peeling {
    let mut factors: Vec<Option<CharPoly>> = vec![None; m as usize + 1];
    let mut failures = Vec::new();
    factors[0] = Some(v_low(m));
    factors[m as usize] = Some(v_high(m));
    let mut step = |k: i64, from: i64, factors: &mut Vec<Option<CharPoly>>| -> bool {
        let (Some(c), Some(prev)) = (&cs[(k - 1) as usize], factors[from as usize].clone()) else {
            failures.push((k, "missing input".to_string()));
            return false;
        };
        match c.div_exact(&prev) {
            Some(q) => {
                factors[k as usize] = Some(q);
                true
            }
            None => {
                failures.push((k, format!("v_{{{m},{from}}} = {prev} does not divide c_{{{m},{k}}} = {c}")));
                false
            }
        }
    };
    let mut k = 1;
    while 2 * k < m && step(k, k - 1, &mut factors) {
        k += 1;
    }
    let mut k = m - 1;
    while 2 * k > m && step(k, k + 1, &mut factors) {
        k -= 1;
    }
    Peeling { m, factors, failures }
}

/// Compute every `c_{m,k}` and peel the factors.
pub fn extract_v_factors(m: i64) -> Result<(Vec<CharCell>, Peeling)> {
    if m < 2 {
        return Err(Error::usage(format!("need m >= 2, got {m}")));
    }
    let cells = (1..m).map(|k| charpoly(m, k)).collect::<Result<Vec<_>>>()?;
    let cs: Vec<Option<CharPoly>> = cells.iter().map(|c| c.charpoly.clone()).collect();
    let peeling = peel(m, &cs);
    Ok((cells, peeling))
}

/// Product of two factors, for reconstruction checks.
pub fn product(a: &CharPoly, b: &CharPoly) -> CharPoly {
    a.mul(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(s: &str) -> CharPoly {
        s.parse().unwrap()
    }

    #[test]
    fn m5_factors() {
        let (_, p) = extract_v_factors(5).unwrap();
        assert!(p.failures.is_empty());
        assert_eq!(*p.get(1).unwrap(), cp("z^4 - x*z^3 - x*z^2 - x*z - x"));
        let mid = cp("z^6 + x*z^5 + x*(1+x)*z^4 + x^2*(1+x)*z^3 - x^2*(1+x)*z^2 + x^3*z - x^3");
        assert_eq!(*p.get(2).unwrap(), mid);
        assert_eq!(*p.get(3).unwrap(), mid);
        assert_eq!(*p.get(4).unwrap(), cp("z^4 - x*z^3 + x^2*z^2 - x^3*z - x^3"));
        assert_eq!(*p.get(5).unwrap(), cp("z + x"));
    }

    #[test]
    fn m3_and_m2() {
        let (_, p) = extract_v_factors(3).unwrap();
        assert_eq!(*p.get(1).unwrap(), cp("z^2 - x*z - x"));
        let (cells, p) = extract_v_factors(2).unwrap();
        assert_eq!(*p.get(2).unwrap(), cp("z - x"));
        let c = cells[0].charpoly.clone().unwrap();
        assert_eq!(product(p.get(0).unwrap(), p.get(2).unwrap()), c);
    }
}
