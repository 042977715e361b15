//! Truncated formal power series in `q` with `u`-polynomial coefficients.
//!
//! Used to compare the determinant forms of the zeta function against the
//! cycle oracle: `log(1/p)` must reproduce the walk-trace series `T_m/m`,
//! and `1/p` must reproduce the truncated Euler product.

use super::bipoly::BiPoly;
use super::rational::{rat_int, Rational};
use super::unipoly::UniPoly;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series inversion/log requires constant term 1, found {0}")]
    BadConstantTerm(String),
}

/// Coefficients `c_0 .. c_lmax` of a series in `q`; each `c_m` is a
/// polynomial in `u`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    pub lmax: usize,
    pub coeffs: Vec<UniPoly>,
}

impl TruncatedSeries {
    pub fn one(lmax: usize) -> Self {
        let mut coeffs = vec![UniPoly::zero(); lmax + 1];
        coeffs[0] = UniPoly::one();
        TruncatedSeries { lmax, coeffs }
    }

    pub fn coeff(&self, m: usize) -> &UniPoly {
        &self.coeffs[m]
    }

    /// Multiplies in place by `(1 - q^len * u^bumps)^{-1}`, i.e. by the
    /// geometric series `sum_k q^{len k} u^{bumps k}`, truncated at `lmax`.
    pub fn mul_geometric(&mut self, len: usize, bumps: usize) {
        assert!(len >= 1, "geometric factor needs positive q-degree");
        // In-place forward recurrence: new[m] = old[m] + u^b * new[m-len].
        for m in len..=self.lmax {
            let shifted = UniPoly::monomial(Rational::one(), bumps).mul(&self.coeffs[m - len]);
            self.coeffs[m] = self.coeffs[m].add(&shifted);
        }
    }

    fn q_coeffs(p: &BiPoly, lmax: usize) -> Result<Vec<UniPoly>, SeriesError> {
        let a0 = p.coeff_of_q(0);
        if !a0.is_one() {
            return Err(SeriesError::BadConstantTerm(a0.render("u")));
        }
        Ok((0..=lmax as u32).map(|m| p.coeff_of_q(m)).collect())
    }
}

/// Coefficients of `log(1/p) = -log p` up to `q^lmax`, where `p(0,u) = 1`.
///
/// Recurrence from `p * (log 1/p)' = -p'`:
/// `m c_m = -m a_m - sum_{i=1}^{m-1} i c_i a_{m-i}`.
pub fn log_inverse_series(p: &BiPoly, lmax: usize) -> Result<TruncatedSeries, SeriesError> {
    let a = TruncatedSeries::q_coeffs(p, lmax)?;
    let mut c = vec![UniPoly::zero(); lmax + 1];
    for m in 1..=lmax {
        let mut acc = a[m].mul_scalar(&rat_int(-(m as i64)));
        for i in 1..m {
            acc = acc.sub(&c[i].mul(&a[m - i]).mul_scalar(&rat_int(i as i64)));
        }
        c[m] = acc.mul_scalar(&Rational::new(1.into(), (m as i64).into()));
    }
    Ok(TruncatedSeries { lmax, coeffs: c })
}

/// Coefficients of `1/p` up to `q^lmax`, where `p(0,u) = 1`.
pub fn inverse_series(p: &BiPoly, lmax: usize) -> Result<TruncatedSeries, SeriesError> {
    let a = TruncatedSeries::q_coeffs(p, lmax)?;
    let mut inv = vec![UniPoly::zero(); lmax + 1];
    inv[0] = UniPoly::one();
    for m in 1..=lmax {
        let mut acc = UniPoly::zero();
        for i in 1..=m {
            acc = acc.sub(&a[i].mul(&inv[m - i]));
        }
        inv[m] = acc;
    }
    Ok(TruncatedSeries { lmax, coeffs: inv })
}

/// Exponential of a series with zero constant term:
/// `m E_m = sum_{i=1}^{m} i s_i E_{m-i}`.
pub fn exp_series(s: &TruncatedSeries) -> TruncatedSeries {
    assert!(s.coeffs[0].is_zero(), "exp needs zero constant term");
    let mut e = vec![UniPoly::zero(); s.lmax + 1];
    e[0] = UniPoly::one();
    for m in 1..=s.lmax {
        let mut acc = UniPoly::zero();
        for i in 1..=m {
            acc = acc.add(&s.coeffs[i].mul(&e[m - i]).mul_scalar(&rat_int(i as i64)));
        }
        e[m] = acc.mul_scalar(&Rational::new(1.into(), (m as i64).into()));
    }
    TruncatedSeries {
        lmax: s.lmax,
        coeffs: e,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn log_inverse_of_one_minus_q() {
        // log(1/(1-q)) = sum q^m / m
        let p = BiPoly::one().sub(&BiPoly::var_q());
        let s = log_inverse_series(&p, 6).unwrap();
        for m in 1..=6 {
            assert_eq!(
                s.coeff(m),
                &UniPoly::constant(Rational::new(1.into(), (m as i64).into()))
            );
        }
    }

    #[test]
    fn log_inverse_of_deformed_pair() {
        // log(1/(1 - u^2 q^2)): c_2 = u^2, c_4 = u^4/2, odd coefficients 0
        let p = BiPoly::one().sub(&BiPoly::term(Rational::one(), 2, 2));
        let s = log_inverse_series(&p, 5).unwrap();
        assert_eq!(s.coeff(1), &UniPoly::zero());
        assert_eq!(s.coeff(2), &UniPoly::from_i64(&[0, 0, 1]));
        assert_eq!(s.coeff(3), &UniPoly::zero());
        assert_eq!(
            s.coeff(4),
            &UniPoly::from_coeffs(vec![
                rat_int(0),
                rat_int(0),
                rat_int(0),
                rat_int(0),
                rat(1, 2)
            ])
        );
    }

    #[test]
    fn bad_constant_term_rejected() {
        let p = BiPoly::from_int(2);
        assert!(matches!(
            log_inverse_series(&p, 3),
            Err(SeriesError::BadConstantTerm(_))
        ));
        assert!(inverse_series(&p, 3).is_err());
    }

    #[test]
    fn exp_of_log_inverse_matches_direct_inverse() {
        // p = 1 - q - q^2 u + 3 q^3
        let p = BiPoly::one()
            .sub(&BiPoly::var_q())
            .sub(&BiPoly::term(Rational::one(), 2, 1))
            .add(&BiPoly::term(rat_int(3), 3, 0));
        let lmax = 8;
        let via_exp = exp_series(&log_inverse_series(&p, lmax).unwrap());
        let direct = inverse_series(&p, lmax).unwrap();
        assert_eq!(via_exp, direct);
    }

    #[test]
    fn geometric_factor_multiplication() {
        // (1 - q^2 u^2)^{-1} truncated at 5: 1 + q^2 u^2 + q^4 u^4
        let mut s = TruncatedSeries::one(5);
        s.mul_geometric(2, 2);
        assert_eq!(s.coeff(0), &UniPoly::one());
        assert_eq!(s.coeff(2), &UniPoly::from_i64(&[0, 0, 1]));
        assert_eq!(s.coeff(4), &UniPoly::from_i64(&[0, 0, 0, 0, 1]));
        assert_eq!(s.coeff(5), &UniPoly::zero());
        // matches inverse_series of the same polynomial
        let p = BiPoly::one().sub(&BiPoly::term(Rational::one(), 2, 2));
        assert_eq!(s, inverse_series(&p, 5).unwrap());
    }
}
