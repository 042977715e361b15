//! Rational functions in `(q, u)` as unreduced numerator/denominator pairs.
//!
//! Equality is decided by cross-multiplication, so no polynomial gcd is ever
//! required. Display normalizes the denominator's graded-lex leading
//! coefficient to be positive.

use super::bipoly::BiPoly;
use num_traits::Zero;
use std::fmt;

#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: BiPoly,
    den: BiPoly,
}

impl RationalFunction {
    pub fn new(num: BiPoly, den: BiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RationalFunction { num, den }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        RationalFunction {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_poly(&self, p: &BiPoly) -> Self {
        RationalFunction::new(self.num.mul(p), self.den.clone())
    }

    /// Cross-multiplied difference `num*other.den - other.num*den`; zero iff
    /// the two rational functions are equal.
    pub fn cross_difference(&self, other: &Self) -> BiPoly {
        self.num.mul(&other.den).sub(&other.num.mul(&self.den))
    }

    /// Sign-normalized copy: denominator's graded-lex leading coefficient
    /// made positive.
    pub fn normalized_sign(&self) -> Self {
        let Some((_, lead)) = self.den.leading_term() else {
            unreachable!("denominator is nonzero");
        };
        if lead < num_rational::BigRational::zero() {
            RationalFunction {
                num: self.num.neg(),
                den: self.den.neg(),
            }
        } else {
            self.clone()
        }
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.cross_difference(other).is_zero()
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.normalized_sign();
        if n.den.is_one() {
            write!(f, "{}", n.num.render())
        } else {
            write!(f, "({}) / ({})", n.num.render(), n.den.render())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_is_cross_multiplication() {
        let q = BiPoly::var_q();
        let one_minus_q = BiPoly::one().sub(&q);
        let scale = BiPoly::one().add(&q.pow(2));
        let a = RationalFunction::new(one_minus_q.clone(), BiPoly::from_int(2));
        let b = RationalFunction::new(
            one_minus_q.mul(&scale),
            BiPoly::from_int(2).mul(&scale),
        );
        assert_eq!(a, b);
        let c = RationalFunction::new(one_minus_q, BiPoly::from_int(3));
        assert_ne!(a, c);
    }

    #[test]
    fn display_normalizes_denominator_sign() {
        let q = BiPoly::var_q();
        let f = RationalFunction::new(q.clone(), q.neg().sub(&BiPoly::one()));
        assert_eq!(f.to_string(), "(-q) / (1 + q)");
        let p = RationalFunction::from_poly(BiPoly::from_int(1).sub(&q));
        assert_eq!(p.to_string(), "1 - q");
    }
}
