use binrec_core::charlab::{guess_recurrence, shifted_pk_table, CharPoly, GuessOutcome};
use binrec_core::exactalg::{
    parse_poly, series_coeffs, substitute, BiPoly, GcdDomain, IntPoly, JsonPoly, LaurentPoly, RatFunc, Ring, ShiftOp,
    Var,
};
use binrec_core::recurrence::{assemble_pk, check_master_identity};
use binrec_core::seqgen::{a_closed_i1, a_sum, BinomArray};
use num_bigint::BigInt;
use proptest::prelude::*;

fn int_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..=20, 0..7).prop_map(|c| IntPoly::from_i64s(Var::X, &c))
}

fn nonzero_int_poly() -> impl Strategy<Value = IntPoly> {
    int_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn bi_poly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..5, 0u32..4, -9i64..=9), 0..6)
        .prop_map(|ts| BiPoly::from_terms(ts.into_iter().map(|(a, b, c)| (a, b, BigInt::from(c)))))
}

fn laurent() -> impl Strategy<Value = LaurentPoly<BigInt>> {
    prop::collection::vec((-4i64..5, -9i64..=9), 0..6)
        .prop_map(|ts| LaurentPoly::from_terms(Var::Z, ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn int_poly_ring_axioms(a in int_poly(), b in int_poly(), c in int_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &IntPoly::one(), a);
    }

    #[test]
    fn bipoly_ring_axioms(a in bi_poly(), b in bi_poly(), c in bi_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(a.shift(3).shift(-3), a);
    }

    #[test]
    fn substitution_is_a_ring_map(a in bi_poly(), b in bi_poly()) {
        prop_assert_eq!(substitute(&(&a + &b)), &substitute(&a) + &substitute(&b));
        prop_assert_eq!(substitute(&(&a * &b)), &substitute(&a) * &substitute(&b));
        let xv = IntPoly::from_i64s(Var::X, &[1, 1]);
        let sv = IntPoly::from_i64s(Var::X, &[0, 1]);
        prop_assert_eq!(a.eval_in(&xv, &sv), substitute(&a));
    }

    #[test]
    fn gcd_divides_and_is_maximal(a in nonzero_int_poly(), b in nonzero_int_poly(), c in nonzero_int_poly()) {
        let g = GcdDomain::gcd(&a, &b);
        prop_assert!(a.exact_div(&g).is_some());
        prop_assert!(b.exact_div(&g).is_some());
        let ac = &a * &c;
        let bc = &b * &c;
        let h = GcdDomain::gcd(&ac, &bc);
        prop_assert!(h.exact_div(&c.primitive_part()).is_some(), "gcd({}, {}) = {} misses {}", ac, bc, h, c);
        prop_assert_eq!(GcdDomain::gcd(&a, &b), GcdDomain::gcd(&b, &a));
    }

    #[test]
    fn series_times_denominator_is_numerator(num in int_poly(), tail in int_poly()) {
        let den = &IntPoly::one() + &tail.shift_up(1);
        let count = 12;
        let s = series_coeffs(num.coeffs(), den.coeffs(), count).unwrap();
        let prod = &IntPoly::new(Var::X, s) * &den;
        for k in 0..count {
            prop_assert_eq!(prod.coeff(k), num.coeff(k));
        }
    }

    #[test]
    fn canonical_text_round_trips(a in int_poly(), b in bi_poly(), c in laurent()) {
        let a2: IntPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(a2, a.clone());
        let b2: BiPoly = b.to_string().parse().unwrap();
        prop_assert_eq!(b2, b.clone());
        let c2 = parse_poly(&c.to_string()).unwrap().into_laurent(Var::Z).unwrap();
        prop_assert_eq!(c2, c.clone());
        prop_assert_eq!(IntPoly::from_json(&a.to_json()).unwrap(), a);
        prop_assert_eq!(BiPoly::from_json(&b.to_json()).unwrap(), b);
        prop_assert_eq!(LaurentPoly::from_json(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn charpoly_text_round_trips(roots in prop::collection::vec(-3i64..=3, 1..4)) {
        let mut c = CharPoly::linear(IntPoly::from_i64s(Var::X, &[roots[0], 1]));
        for r in &roots[1..] {
            c = c.mul(&CharPoly::linear(IntPoly::from_i64s(Var::X, &[*r, -1])));
        }
        let back: CharPoly = c.to_string().parse().unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn ratfunc_field_axioms(a in nonzero_int_poly(), b in nonzero_int_poly(), c in nonzero_int_poly()) {
        let f = RatFunc::new(a.clone(), b.clone()).unwrap();
        let g = RatFunc::new(c.clone(), a.clone()).unwrap();
        prop_assert_eq!(f.mul_ref(&g), RatFunc::new(c, b).unwrap());
        prop_assert!(f.mul_ref(&f.unit_inverse().unwrap()).is_one());
        prop_assert_eq!(f.add_ref(&g).sub_ref(&g), f);
    }

    #[test]
    fn shift_operators_are_linear(
        op in prop::collection::vec(-5i64..=5, 1..4),
        u in prop::collection::vec(-50i64..=50, 8),
        v in prop::collection::vec(-50i64..=50, 8),
    ) {
        let op = ShiftOp::from_terms(op.iter().enumerate().map(|(k, c)| (k as u32, BigInt::from(*c))));
        let u: Vec<BigInt> = u.into_iter().map(BigInt::from).collect();
        let v: Vec<BigInt> = v.into_iter().map(BigInt::from).collect();
        let sum: Vec<BigInt> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
        let lhs = op.apply(&sum);
        let rhs: Vec<BigInt> = op.apply(&u).iter().zip(op.apply(&v)).map(|(a, b)| a + b).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn floored_sums_total(n in 0i64..14, i in 1i64..6, l in -3i64..4, m in 2i64..6) {
        // every k in the exact range contributes, and at z = 1 with i = 1 each C(n, j) is hit m times
        let s = a_sum(n, i, l, m);
        for (&k, c) in s.terms() {
            prop_assert_eq!(c.clone(), BinomArray::new(m, n).get(i * k + l));
        }
        if i == 1 && l == 0 {
            prop_assert_eq!(s.clone(), a_closed_i1(n, m));
            let at_one: BigInt = s.terms().map(|(_, c)| c.clone()).sum();
            prop_assert_eq!(at_one, BigInt::from(m) << n as usize);
        }
    }

    #[test]
    fn master_identity_random(n in 0i64..40, m in 2i64..9) {
        prop_assert!(check_master_identity(&assemble_pk(n, m).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn guess_is_stable_under_extension(m in 2i64..5, k_seed in 0i64..4, extra in 0usize..6) {
        let k = 1 + k_seed % (m - 1);
        let table = shifted_pk_table(m, 40 + extra).unwrap();
        let seq = &table[(k - 1) as usize];
        let short = guess_recurrence(&seq[..34], 8).unwrap();
        let long = guess_recurrence(seq, 8).unwrap();
        match (short, long) {
            (GuessOutcome::Found(a), GuessOutcome::Found(b)) => {
                prop_assert_eq!(&a, &b);
                prop_assert!(a.annihilates(seq));
            }
            other => prop_assert!(false, "no recurrence for m={} k={}: {:?}", m, k, other),
        }
    }
}
