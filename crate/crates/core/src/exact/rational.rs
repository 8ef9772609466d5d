//! Arbitrary-precision rationals and their textual form.
//!
//! `BigRational` keeps every value gcd-reduced with a positive denominator,
//! so structural equality is value equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` in base 10 with an optional leading minus sign.
///
/// Non-canonical input such as `"4/-2"`, `"+1"` or `" 1"` is rejected;
/// `"4/2"` is accepted and reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom: BigInt = match den {
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical text: `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub(crate) fn lcm_of_denominators<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

pub(crate) fn gcd_of_numerators<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::zero(), |acc, q| acc.gcd(q.numer()))
        .abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-3/6").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational("0/5").unwrap(), int(0));
        assert_eq!(
            parse_rational("123456789012345678901234567890/3").unwrap().numer(),
            &"41152263004115226300411522630".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "-", "1/", "/2", "1/0", "+1", " 1", "1.5", "1/-2", "--1", "1_0", "a"] {
            assert!(parse_rational(s).is_err(), "{s:?} should be rejected");
        }
    }

    #[test]
    fn formats_reduced() {
        assert_eq!(format_rational(&frac(4, -6)), "-2/3");
        assert_eq!(format_rational(&frac(6, 3)), "2");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn zero_is_zero_over_one() {
        let z = frac(0, -7);
        assert!(z.denom().is_one());
        assert!(z.numer().is_zero());
    }
}
