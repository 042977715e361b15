//! Arbitrary-precision rational scalars.
//!
//! `Rational` is the single number type used across the crate: every
//! polynomial coefficient, matrix entry, and report value is exact. The type
//! is backed by `num_rational::BigRational`, which keeps values reduced with
//! a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part in rational literal {0:?}")]
    BadInteger(String),
    #[error("zero denominator in rational literal {0:?}")]
    ZeroDenominator(String),
    #[error("rational literal {0:?} has more than one '/'")]
    TooManySlashes(String),
}

/// Builds `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` with optional sign, e.g. `"-3"`, `"2/9"`.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let parts: Vec<&str> = s.split('/').collect();
    let parse_int = |p: &str| -> Result<BigInt, RationalParseError> {
        p.trim()
            .parse::<BigInt>()
            .map_err(|_| RationalParseError::BadInteger(s.to_string()))
    };
    match parts.as_slice() {
        [n] => Ok(Rational::from_integer(parse_int(n)?)),
        [n, d] => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(RationalParseError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(num, den))
        }
        _ => Err(RationalParseError::TooManySlashes(s.to_string())),
    }
}

/// Exact conversion to f64 (numerator/denominator division), for the numeric
/// pole and singular-value routines.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Extremely large components: fall back to a quotient of big floats.
        let n = r.numer().to_f64().unwrap_or(f64::MAX.copysign(if r.numer().is_negative() { -1.0 } else { 1.0 }));
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// True if `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_and_fractional_literals() {
        assert_eq!(parse_rational("-3").unwrap(), rat_int(-3));
        assert_eq!(parse_rational("2/9").unwrap(), rat(2, 9));
        assert_eq!(parse_rational(" -1/2 ").unwrap(), rat(-1, 2));
        // Reduction and sign normalization happen on construction.
        assert_eq!(parse_rational("4/-6").unwrap(), rat(-2, 3));
    }

    #[test]
    fn rejects_malformed_literals() {
        assert!(matches!(parse_rational(""), Err(RationalParseError::Empty)));
        assert!(matches!(parse_rational("1/0"), Err(RationalParseError::ZeroDenominator(_))));
        assert!(matches!(parse_rational("1/2/3"), Err(RationalParseError::TooManySlashes(_))));
        assert!(matches!(parse_rational("a"), Err(RationalParseError::BadInteger(_))));
    }

    #[test]
    fn reduced_with_positive_denominator() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }
}
