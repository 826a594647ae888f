use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::newton::b_coefs;
use crate::error::{Error, Result};
use crate::exactalg::{binomial, series_coeffs, BiPoly, Ring};
use crate::seqgen::{v_poly_explicit, w_poly_explicit};

/// How a [`PkFamily`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Newton,
    Oracle,
    ClosedForm,
    Gf,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Newton => "newton",
            Provenance::Oracle => "oracle",
            Provenance::ClosedForm => "closed-form",
            Provenance::Gf => "gf",
        })
    }
}

/// `p_1, ..., p_{m-1}` for one pair `(n, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PkFamily {
    pub n: i64,
    pub m: i64,
    pub polys: Vec<BiPoly>,
    pub provenance: Provenance,
}

impl PkFamily {
    /// `p_k` for `1 <= k <= m-1`.
    pub fn get(&self, k: usize) -> &BiPoly {
        &self.polys[k - 1]
    }

    /// Whether every `p_k` has the shape its degree window prescribes.
    pub fn windows_hold(&self) -> bool {
        let (n, m) = (self.n, self.m);
        if n == 0 {
            return self
                .polys
                .iter()
                .enumerate()
                .all(|(i, p)| *p == BiPoly::constant(BigInt::sign_pow(i as i64) * binomial(m, i as i64 + 1)));
        }
        self.polys.iter().enumerate().all(|(i, p)| {
            let k = i as i64 + 1;
            let lo = if k == 1 { 0 } else { (k - 1) * n / m + 1 };
            let hi = k * n / m;
            let shaped = p.terms().all(|(&(xe, se), _)| {
                let j = se as i64;
                lo <= j && j <= hi && xe as i64 == k * n - m * j
            });
            shaped && (k != 1 || p.coeff(n as u32, 0) == BigInt::from(1))
        })
    }
}

/// `(-1)^(m(n-1))`.
pub fn master_sign(n: i64, m: i64) -> BigInt {
    BigInt::sign_pow(m * (n - 1))
}

fn zero_family(m: i64, provenance: Provenance) -> PkFamily {
    let polys = (1..m).map(|k| BiPoly::constant(BigInt::sign_pow(k - 1) * binomial(m, k))).collect();
    PkFamily { n: 0, m, polys, provenance }
}

pub(crate) fn check_params(n: i64, m: i64) -> Result<()> {
    if n < 0 || m < 2 {
        return Err(Error::usage(format!("need n >= 0 and m >= 2, got n={n}, m={m}")));
    }
    Ok(())
}

/// `p_k(n, m, x, s)` assembled from the Newton coefficients `b(n, m, j)`.
pub fn assemble_pk(n: i64, m: i64) -> Result<PkFamily> {
    check_params(n, m)?;
    if n == 0 {
        return Ok(zero_family(m, Provenance::Newton));
    }
    let table = b_coefs(n, m)?;
    let sigma = master_sign(n, m);
    let polys = (1..m)
        .map(|k| {
            let lo = if k == 1 { 1 } else { (k - 1) * n / m + 1 };
            let mut p = if k == 1 { BiPoly::term(1, n as u32, 0) } else { BiPoly::zero() };
            for j in lo..=k * n / m {
                p.add_term(-(&sigma * table.b(j)), (k * n - m * j) as u32, j as u32);
            }
            p
        })
        .collect();
    Ok(PkFamily { n, m, polys, provenance: Provenance::Newton })
}

/// Closed forms for the outer members: `p_1 = v_n(m, x, s)` and
/// `p_{m-1} = (-1)^m w_n(m, x, (-1)^(m-1) s)`.
pub fn pk_closed(n: i64, m: i64, k: i64) -> Result<BiPoly> {
    check_params(n, m)?;
    let (nu, mu) = (n as usize, m as usize);
    if k == 1 {
        Ok(v_poly_explicit(nu, mu))
    } else if k == m - 1 {
        Ok(w_poly_explicit(nu, mu).scale_s(&BigInt::sign_pow(m - 1)).scale(&BigInt::sign_pow(m)))
    } else {
        Err(Error::usage(format!("closed forms exist only for k = 1 and k = m-1, got k={k}, m={m}")))
    }
}

fn p2_m4_initial() -> Vec<BiPoly> {
    vec![
        BiPoly::constant(-6),
        BiPoly::zero(),
        BiPoly::term(-2, 0, 1),
        BiPoly::term(-3, 2, 1),
        BiPoly::term(-6, 0, 2),
        BiPoly::term(-5, 2, 2),
    ]
}

/// `p_2(n, 4, x, s)` from its order-6 recurrence and six initial values.
pub fn p2_m4(n: usize) -> BiPoly {
    let mut seq = p2_m4_initial();
    let s = BiPoly::s();
    let sx2 = BiPoly::term(1, 2, 1);
    let s2 = BiPoly::term(1, 0, 2);
    let s3 = BiPoly::term(1, 0, 3);
    while seq.len() <= n {
        let k = seq.len();
        let next = &s * &seq[k - 2] + &sx2 * &seq[k - 3] + &s2 * &seq[k - 4] - &s3 * &seq[k - 6];
        seq.push(next);
    }
    seq.swap_remove(n)
}

/// First `count` series coefficients of the rational generating function of `p_2(n, 4, x, s)`.
pub fn p2_m4_series(count: usize) -> Vec<BiPoly> {
    let num = [BiPoly::constant(-6), BiPoly::zero(), BiPoly::term(4, 0, 1), BiPoly::term(3, 2, 1), BiPoly::term(2, 0, 2)];
    let den = [
        BiPoly::constant(1),
        BiPoly::zero(),
        BiPoly::term(-1, 0, 1),
        BiPoly::term(-1, 2, 1),
        BiPoly::term(-1, 0, 2),
        BiPoly::zero(),
        BiPoly::term(1, 0, 3),
    ];
    series_coeffs(&num, &den, count).expect("denominator has constant term 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqgen::{fib_lucas, w_poly, FibKind};

    fn bp(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn assemble_examples() {
        assert_eq!(*assemble_pk(5, 2).unwrap().get(1), bp("x^5 - 5*x^3*s + 5*x*s^2"));
        assert_eq!(*assemble_pk(0, 4).unwrap().get(2), bp("-6"));
        assert_eq!(*assemble_pk(3, 3).unwrap().get(2), bp("-3*s^2"));
        assert_eq!(*assemble_pk(6, 4).unwrap().get(2), bp("-2*s^3 - 3*s^2*x^4"));
        assert_eq!(*assemble_pk(3, 4).unwrap().get(3), bp("3*s^2*x"));
    }

    #[test]
    fn closed_examples() {
        assert_eq!(pk_closed(7, 3, 1).unwrap(), bp("x^7 - 7*x^4*s + 7*x*s^2"));
        assert_eq!(pk_closed(2, 2, 1).unwrap(), bp("x^2 - 2*s"));
        assert_eq!(pk_closed(3, 4, 3).unwrap(), bp("3*s^2*x"));
        assert!(pk_closed(5, 5, 2).is_err());
    }

    #[test]
    fn windows_hold_for_newton() {
        for m in 2..=7 {
            for n in 0..=30 {
                assert!(assemble_pk(n, m).unwrap().windows_hold(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn closed_forms_match_newton() {
        for m in 2..=6 {
            for n in 0..=30 {
                let fam = assemble_pk(n, m).unwrap();
                assert_eq!(pk_closed(n, m, 1).unwrap(), *fam.get(1), "p_1 n={n} m={m}");
                assert_eq!(pk_closed(n, m, m - 1).unwrap(), *fam.get(m as usize - 1), "p_m-1 n={n} m={m}");
            }
        }
    }

    #[test]
    fn special_cases_of_small_m() {
        for n in 0..=30usize {
            let lucas = fib_lucas(n, FibKind::Lucas).scale_s(&BigInt::from(-1));
            assert_eq!(*assemble_pk(n as i64, 2).unwrap().get(1), lucas, "m=2 n={n}");
            let fam = assemble_pk(n as i64, 3).unwrap();
            assert_eq!(*fam.get(1), v_poly_explicit(n, 3));
            assert_eq!(*fam.get(2), -w_poly(n, 3), "m=3 n={n}");
        }
    }

    #[test]
    fn p2_m4_examples() {
        assert_eq!(p2_m4(5), bp("-5*s^2*x^2"));
        assert_eq!(p2_m4(6), bp("-2*s^3 - 3*s^2*x^4"));
        assert_eq!(p2_m4(1), BiPoly::zero());
    }

    #[test]
    fn p2_m4_recursion_gf_newton() {
        let series = p2_m4_series(25);
        for (n, gf) in series.iter().enumerate() {
            let rec = p2_m4(n);
            assert_eq!(rec, *gf, "n={n}");
            assert_eq!(rec, *assemble_pk(n as i64, 4).unwrap().get(2), "n={n}");
        }
    }
}
