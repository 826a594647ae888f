use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::seqgen::a_sum_at_minus_one;

/// OEIS entries realized by `a(n, i, 0, 2, -1)` for `i = 5, 7, 9`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OeisId {
    A000045,
    A028495,
    A061551,
}

/// Terms are emitted from `n = 0`; for A000045 term `n` is `F_{n+1}`.
pub const OEIS_OFFSET_NOTE: &str = "terms are a(n, i, 0, 2, -1) for n = 0, 1, ...; for A000045 the term at n is F(n+1)";

impl OeisId {
    pub const ALL: [OeisId; 3] = [OeisId::A000045, OeisId::A028495, OeisId::A061551];

    pub fn step(self) -> i64 {
        match self {
            OeisId::A000045 => 5,
            OeisId::A028495 => 7,
            OeisId::A061551 => 9,
        }
    }
}

impl fmt::Display for OeisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for OeisId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        OeisId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::usage(format!("unknown sequence `{s}`; expected A000045, A028495 or A061551")))
    }
}

/// First `count` terms by direct summation.
pub fn oeis_prefix(which: OeisId, count: usize) -> Vec<BigInt> {
    (0..count as i64).map(|n| a_sum_at_minus_one(n, which.step(), 0, 2)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn fibonacci_prefix() {
        assert_eq!(oeis_prefix(OeisId::A000045, 7), ints(&[1, 1, 2, 3, 5, 8, 13]));
    }

    #[test]
    fn other_prefixes() {
        assert_eq!(oeis_prefix(OeisId::A028495, 10), ints(&[1, 1, 2, 3, 6, 10, 19, 33, 61, 108]));
        assert_eq!(oeis_prefix(OeisId::A061551, 10), ints(&[1, 1, 2, 3, 6, 10, 20, 35, 69, 124]));
    }

    #[test]
    fn parse_names() {
        assert_eq!("a028495".parse::<OeisId>().unwrap(), OeisId::A028495);
        assert!("A1".parse::<OeisId>().is_err());
    }
}
