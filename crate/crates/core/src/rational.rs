//! Exact rational coefficients.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number used for every coefficient in the crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`; whitespace around the value is ignored.
pub fn parse_q(text: &str) -> Option<Q> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    let r = Q::from_str(t).ok()?;
    Some(r)
}

/// Canonical text form: `p` for integers, `p/q` otherwise (reduced, sign on numerator).
pub fn format_q(value: &Q) -> String {
    value.to_string()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn is_negative(value: &Q) -> bool {
    value.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["1", "-3", "2/3", "-7/12", "0"] {
            let v = parse_q(text).unwrap();
            assert_eq!(format_q(&v), text);
        }
        assert_eq!(format_q(&parse_q("4/6").unwrap()), "2/3");
        assert!(parse_q("").is_none());
        assert!(parse_q("1/x").is_none());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
