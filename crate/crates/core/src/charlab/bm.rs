use crate::exactalg::Field;

/// Shortest linear recurrence of a finite sequence over a field.
///
/// Returns `(l, c)` with `c[0] = 1`, `c.len() == l + 1` and
/// `sum_i c[i] seq[n - i] = 0` for every `l <= n < seq.len()`.
pub fn berlekamp_massey<F: Field>(seq: &[F]) -> (usize, Vec<F>) {
    let mut c = vec![F::one()];
    let mut b = vec![F::one()];
    let mut l = 0usize;
    let mut gap = 1usize;
    let mut last = F::one();
    for n in 0..seq.len() {
        let mut d = seq[n].clone();
        for i in 1..=l.min(c.len() - 1) {
            d.mul_acc(&c[i], &seq[n - i]);
        }
        if d.is_zero() {
            gap += 1;
            continue;
        }
        let f = d.div_ref(&last).expect("previous discrepancy is nonzero");
        let prev = c.clone();
        if c.len() < b.len() + gap {
            c.resize(b.len() + gap, F::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            let t = f.mul_ref(bi);
            c[i + gap].sub_assign_ref(&t);
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = prev;
            last = d;
            gap = 1;
        } else {
            gap += 1;
        }
    }
    c.resize(l + 1, F::zero());
    (l, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
    }

    #[test]
    fn fibonacci() {
        let (l, c) = berlekamp_massey(&q(&[0, 1, 1, 2, 3, 5, 8, 13, 21]));
        assert_eq!(l, 2);
        assert_eq!(c, q(&[1, -1, -1]));
    }

    #[test]
    fn constant_and_zero() {
        assert_eq!(berlekamp_massey(&q(&[1, 1, 1, 1])), (1, q(&[1, -1])));
        assert_eq!(berlekamp_massey(&q(&[0, 0, 0])), (0, q(&[1])));
    }

    #[test]
    fn late_start() {
        // 0, 0, 1, 0, 0, ... needs order 3
        let (l, c) = berlekamp_massey(&q(&[0, 0, 1, 0, 0, 0, 0]));
        assert_eq!(l, 3);
        assert_eq!(c, q(&[1, 0, 0, 0]));
    }
}
