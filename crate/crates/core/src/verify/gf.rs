use std::str::FromStr;

use num_bigint::BigInt;

use super::result::{CheckResult, Witness};
use crate::error::{Error, Result};
use crate::exactalg::{series_coeffs, IntPoly, LaurentPoly, Var};
use crate::recurrence::p2_m4_series;
use crate::seqgen::{
    a_closed_i1, a_sum, a_sum_at_minus_one, bc_poly, fib_lucas, rs_series, v_poly, w_poly, BcKind, FibKind, RsKind,
};

type Coeff = LaurentPoly<BigInt>;

/// A polynomial in `x` whose coefficients are Laurent polynomials in `z`.
#[derive(Default)]
struct XZPoly(Vec<Coeff>);

impl XZPoly {
    fn add(&mut self, xe: usize, c: Coeff) {
        if self.0.len() <= xe {
            self.0.resize(xe + 1, LaurentPoly::zero_in(Var::Z));
        }
        self.0[xe] = &self.0[xe] + &c;
    }

    /// Add `sign * p(x) * z^ze`.
    fn add_poly(&mut self, p: &IntPoly, ze: i64, sign: i64) {
        for (xe, c) in p.terms() {
            self.add(xe, LaurentPoly::monomial(Var::Z, c * sign, ze));
        }
    }

    fn add_mono(&mut self, c: i64, xe: usize, ze: i64) {
        self.add(xe, LaurentPoly::monomial(Var::Z, BigInt::from(c), ze));
    }
}

fn expand(num: &XZPoly, den: &XZPoly, count: usize) -> Vec<Coeff> {
    series_coeffs(&num.0, &den.0, count).expect("denominators here have constant term 1")
}

fn x_poly(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_i64s(Var::X, coeffs)
}

/// `F_j(1, -x^2)` or `L_j(1, -x^2)`.
fn at_one_minus_x2(j: usize, kind: FibKind) -> IntPoly {
    fib_lucas(j, kind).eval_in(&x_poly(&[1]), &x_poly(&[0, 0, -1]))
}

fn mirror(p: &Coeff) -> Coeff {
    LaurentPoly::from_terms(Var::Z, p.terms().map(|(&e, c)| (-e, c.clone())))
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Modulus-2 generating function; `inverse_numerator` selects the
/// numerator term `x^(i-1)/z` instead of `x^(i-1) z`.
fn gf_mod2(i: usize, inverse_numerator: bool, count: usize) -> Vec<Coeff> {
    let mut num = XZPoly::default();
    num.add_mono(1, i - 1, if inverse_numerator { -1 } else { 1 });
    num.add_poly(&at_one_minus_x2(i, FibKind::Fibonacci), 0, 1);
    num.add_poly(&at_one_minus_x2(i - 1, FibKind::Fibonacci).shift_up(1), 0, 1);
    let mut den = XZPoly::default();
    den.add_poly(&at_one_minus_x2(i, FibKind::Lucas), 0, 1);
    den.add_mono(-1, i, 1);
    den.add_mono(-1, i, -1);
    expand(&num, &den, count)
}

/// Modulus-3 generating function built from `b_i`, `c_i`, `v_i(1, x^3)` and
/// `w_i(1, x^3) / x^i`.
fn gf_mod3(i: usize, count: usize) -> Vec<Coeff> {
    let sg = sign(i - 1);
    let mut num = XZPoly::default();
    num.add_poly(&bc_poly(i, BcKind::B), 0, 1);
    num.add_poly(&bc_poly(i, BcKind::C), 1, 1);
    num.add_mono(sg, i - 1, 2);

    let one = x_poly(&[1]);
    let x3 = x_poly(&[0, 0, 0, 1]);
    let v = v_poly(i, 3).eval_in(&one, &x3);
    let w = w_poly(i, 3).eval_in(&one, &x3);
    let mut den = XZPoly::default();
    den.add_poly(&v, 0, 1);
    for (xe, c) in w.terms() {
        let xe = xe.checked_sub(i).expect("w_i(1, x^3) is divisible by x^i");
        den.add(xe, LaurentPoly::monomial(Var::Z, -c, 1));
    }
    den.add_mono(-1, i, -1);
    den.add_mono(-sg, i, 2);
    expand(&num, &den, count)
}

/// `F_k(1, -x^2) / (F_{k+1}(1, -x^2) - x F_k(1, -x^2))`, the `z = -1` form for odd steps `2k + 1`.
fn gf_odd_minus_one(k: usize, count: usize) -> Vec<BigInt> {
    let fk = at_one_minus_x2(k, FibKind::Fibonacci);
    let den = &at_one_minus_x2(k + 1, FibKind::Fibonacci) - &fk.shift_up(1);
    series_coeffs(fk.coeffs(), den.coeffs(), count).expect("constant term of the denominator is 1")
}

fn first_mismatch<T: PartialEq + ToString>(label: &str, lhs: &[T], rhs: impl Fn(usize) -> T) -> Option<Witness> {
    lhs.iter().enumerate().find_map(|(n, l)| {
        let r = rhs(n);
        (*l != r).then(|| Witness { index: format!("{label}, n={n}"), lhs: l.to_string(), rhs: r.to_string() })
    })
}

/// The rational generating functions that [`gf_expand`] can expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfFamily {
    /// `sum_n a(n, i, 0, 2, z) x^n`.
    Mod2,
    /// The modulus-2 form with numerator term `x^(i-1)/z`, i.e. the sums at `1/z`.
    Mod2Mirrored,
    /// `sum_n a(n, i, 0, 3, z) x^n`.
    Mod3,
    /// `sum_n a(n, i, 0, 2, -1) x^n` for odd `i`.
    Mod2MinusOne,
    /// `sum_n r_n(x) t^n`.
    R,
    /// `sum_n s_n(x) t^n`.
    S,
    /// `sum_n p_2(n, 4, x, s) t^n`.
    P2M4,
}

impl GfFamily {
    pub const NAMES: [&'static str; 7] = ["mod2", "mod2-mirrored", "mod3", "mod2-minus-one", "r", "s", "p2m4"];
    const ALL: [GfFamily; 7] = [
        GfFamily::Mod2,
        GfFamily::Mod2Mirrored,
        GfFamily::Mod3,
        GfFamily::Mod2MinusOne,
        GfFamily::R,
        GfFamily::S,
        GfFamily::P2M4,
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES[Self::ALL.iter().position(|f| *f == self).expect("listed")]
    }

    pub fn needs_step(self) -> bool {
        matches!(self, GfFamily::Mod2 | GfFamily::Mod2Mirrored | GfFamily::Mod3 | GfFamily::Mod2MinusOne)
    }
}

impl FromStr for GfFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::NAMES.iter().position(|n| *n == s).map(|p| Self::ALL[p]).ok_or_else(|| {
            Error::usage(format!("unknown generating function `{s}`; expected one of {}", Self::NAMES.join(", ")))
        })
    }
}

/// First `count` coefficients of a generating function, in canonical text.
pub fn gf_expand(family: GfFamily, i: usize, count: usize) -> Result<Vec<String>> {
    if family.needs_step() && i == 0 {
        return Err(Error::usage("the step i must be at least 1"));
    }
    let text = |v: Vec<_>| v.iter().map(ToString::to_string).collect();
    Ok(match family {
        GfFamily::Mod2 => text(gf_mod2(i, false, count)),
        GfFamily::Mod2Mirrored => text(gf_mod2(i, true, count)),
        GfFamily::Mod3 => text(gf_mod3(i, count)),
        GfFamily::Mod2MinusOne => {
            if i.is_multiple_of(2) {
                return Err(Error::usage(format!("the z = -1 form needs an odd step, got i={i}")));
            }
            gf_odd_minus_one(i / 2, count).iter().map(ToString::to_string).collect()
        }
        GfFamily::R => rs_series(RsKind::R, count).iter().map(ToString::to_string).collect(),
        GfFamily::S => rs_series(RsKind::S, count).iter().map(ToString::to_string).collect(),
        GfFamily::P2M4 => p2_m4_series(count).iter().map(ToString::to_string).collect(),
    })
}

/// Expands the rational generating function of `a(n, i, 0, m, z)` for
/// `m = 2` or `3` and compares the first `n_max + 1` coefficients with
/// direct summation.
///
/// For `m = 2` the numerator term `x^(i-1)/z` yields the sums with `z`
/// replaced by `1/z`; both orientations are checked, along with the `z = -1`
/// specialization for odd `i`.
pub fn gf_check(m: usize, i: usize, n_max: usize) -> CheckResult {
    let id = "gf";
    let params = format!("m={m}, i={i}, n_max={n_max}");
    assert!(i >= 1, "gf_check needs i >= 1");
    let count = n_max + 1;
    let direct = |n: usize| a_sum(n as i64, i as i64, 0, m as i64);
    let mismatch = match m {
        2 => {
            let mirrored = gf_mod2(i, true, count);
            let forward = gf_mod2(i, false, count);
            first_mismatch("z in numerator", &forward, direct)
                .or_else(|| first_mismatch("1/z in numerator vs a(n, i, 0, 2, 1/z)", &mirrored, |n| mirror(&direct(n))))
                .or_else(|| {
                    if i == 1 {
                        first_mismatch("closed form", &forward, |n| a_closed_i1(n as i64, 2))
                    } else {
                        None
                    }
                })
                .or_else(|| {
                    if i % 2 == 1 {
                        let odd = gf_odd_minus_one(i / 2, count);
                        first_mismatch("z=-1 odd form", &odd, |n| a_sum_at_minus_one(n as i64, i as i64, 0, 2))
                    } else {
                        None
                    }
                })
        }
        3 => first_mismatch("m=3", &gf_mod3(i, count), direct),
        _ => panic!("generating functions are known only for m = 2 and m = 3"),
    };
    CheckResult::from_mismatch(id, params, mismatch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Status;

    #[test]
    fn fifth_coefficient_at_minus_one() {
        let s = gf_mod2(5, false, 21);
        assert_eq!(s[5].eval_at_unit(&BigInt::from(-1)), Some(BigInt::from(8)));
        assert_eq!(gf_odd_minus_one(2, 8), [1, 1, 2, 3, 5, 8, 13, 21].map(BigInt::from).to_vec());
    }

    #[test]
    fn inverse_numerator_gives_mirrored_sums() {
        let mirrored = gf_mod2(1, true, 1);
        assert_ne!(mirrored[0], a_sum(0, 1, 0, 2));
        assert_eq!(mirrored[0], mirror(&a_sum(0, 1, 0, 2)));
    }

    #[test]
    fn both_moduli_through_thirty() {
        for m in [2, 3] {
            for i in 1..=6 {
                let r = gf_check(m, i, 30);
                assert_eq!(r.status, Status::Pass, "{r}");
            }
        }
    }

    #[test]
    fn expansion_by_name() {
        let f: GfFamily = "mod2-minus-one".parse().unwrap();
        assert_eq!(gf_expand(f, 5, 6).unwrap(), ["1", "1", "2", "3", "5", "8"]);
        assert_eq!(gf_expand(GfFamily::Mod3, 1, 2).unwrap()[1], "z^4 + z^3 + z^2 + z + 1 + z^-1");
        assert!(gf_expand(f, 4, 6).is_err());
        assert!("nope".parse::<GfFamily>().is_err());
        for name in GfFamily::NAMES {
            assert_eq!(name.parse::<GfFamily>().unwrap().name(), name);
        }
    }

    #[test]
    fn listed_examples() {
        assert_eq!(gf_check(2, 5, 20).status, Status::Pass);
        assert_eq!(gf_check(3, 1, 10).status, Status::Pass);
        assert_eq!(gf_check(2, 1, 5).status, Status::Pass);
    }
}
