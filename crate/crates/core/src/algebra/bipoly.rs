//! Bivariate polynomials in `(q, u)` over `Rational`.
//!
//! `q` is the zeta-function argument, `u` the cycle-deformation parameter.
//! Terms are stored sparsely keyed by `(q_degree, u_degree)` with no zero
//! coefficients. The canonical monomial order everywhere (leading terms,
//! display, sign normalization) is graded lexicographic with `q` before `u`.

use super::rational::{rat_int, Rational};
use super::unipoly::UniPoly;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bivariate division was not exact")]
pub struct InexactDivision;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

fn graded_lex(a: &(u32, u32), b: &(u32, u32)) -> std::cmp::Ordering {
    (a.0 + a.1, a.0, a.1).cmp(&(b.0 + b.1, b.0, b.1))
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::term(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        BiPoly::constant(rat_int(n))
    }

    /// `c * q^a * u^b`
    pub fn term(c: Rational, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        BiPoly { terms }
    }

    pub fn var_q() -> Self {
        BiPoly::term(Rational::one(), 1, 0)
    }

    pub fn var_u() -> Self {
        BiPoly::term(Rational::one(), 0, 1)
    }

    /// Interprets a univariate polynomial as a polynomial in `q`.
    pub fn from_q_poly(p: &UniPoly) -> Self {
        let mut out = BiPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.terms.insert((i as u32, 0), c.clone());
            }
        }
        out
    }

    /// Interprets a univariate polynomial as a polynomial in `u`.
    pub fn from_u_poly(p: &UniPoly) -> Self {
        let mut out = BiPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.terms.insert((0, i as u32), c.clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// Highest power of `q` appearing; `None` for the zero polynomial.
    pub fn q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn u_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn coeff(&self, q_deg: u32, u_deg: u32) -> Rational {
        self.terms
            .get(&(q_deg, u_deg))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `q^m` as a polynomial in `u`.
    pub fn coeff_of_q(&self, m: u32) -> UniPoly {
        let max_u = self
            .terms
            .keys()
            .filter(|k| k.0 == m)
            .map(|k| k.1)
            .max();
        let Some(max_u) = max_u else {
            return UniPoly::zero();
        };
        let mut coeffs = vec![Rational::zero(); max_u as usize + 1];
        for (k, c) in self.terms.range((m, 0)..=(m, max_u)) {
            coeffs[k.1 as usize] = c.clone();
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Builds `sum_m c_m(u) q^m` from per-power `u`-polynomials.
    pub fn from_q_coeffs(coeffs: &[UniPoly]) -> Self {
        let mut out = BiPoly::zero();
        for (m, cm) in coeffs.iter().enumerate() {
            for (j, c) in cm.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.terms.insert((m as u32, j as u32), c.clone());
                }
            }
        }
        out
    }

    fn insert_add(&mut self, key: (u32, u32), val: Rational) {
        if val.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(val);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += val;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(*k, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BiPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.insert_add((ka.0 + kb.0, ka.1 + kb.1), ca * cb);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, a)| (*k, a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut exp = e;
        let mut acc = BiPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Leading term in graded-lex order: `((q_deg, u_deg), coeff)`.
    pub fn leading_term(&self) -> Option<((u32, u32), Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| graded_lex(a.0, b.0))
            .map(|(k, c)| (*k, c.clone()))
    }

    /// Exact division in the polynomial ring; `Err` if not divisible.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, InexactDivision> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let (dk, dc) = divisor.leading_term().unwrap();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some((rk, rc)) = rem.leading_term() {
            if rk.0 < dk.0 || rk.1 < dk.1 {
                return Err(InexactDivision);
            }
            let tk = (rk.0 - dk.0, rk.1 - dk.1);
            let tc = rc / &dc;
            let t = BiPoly::term(tc, tk.0, tk.1);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(divisor));
        }
        Ok(quot)
    }

    pub fn eval(&self, q: &Rational, u: &Rational) -> Rational {
        // Horner in q over Horner in u.
        let Some(qd) = self.q_degree() else {
            return Rational::zero();
        };
        let mut acc = Rational::zero();
        for m in (0..=qd).rev() {
            acc = acc * q + self.coeff_of_q(m).eval(u);
        }
        acc
    }

    /// Specializes `u`, producing a polynomial in `q`.
    pub fn substitute_u(&self, u0: &Rational) -> UniPoly {
        let Some(qd) = self.q_degree() else {
            return UniPoly::zero();
        };
        UniPoly::from_coeffs(
            (0..=qd)
                .map(|m| self.coeff_of_q(m).eval(u0))
                .collect(),
        )
    }

    /// Specializes `q`, producing a polynomial in `u`.
    pub fn substitute_q(&self, q0: &Rational) -> UniPoly {
        let mut acc = UniPoly::zero();
        let mut power = Rational::one();
        let Some(qd) = self.q_degree() else {
            return UniPoly::zero();
        };
        for m in 0..=qd {
            acc = acc.add(&self.coeff_of_q(m).mul_scalar(&power));
            power *= q0;
        }
        acc
    }

    /// Substitutes `u := a + b*u` (affine), e.g. the deformation reflection
    /// `u := (1 - t) - u`.
    pub fn substitute_u_affine(&self, a: &Rational, b: &Rational) -> Self {
        let Some(ud) = self.u_degree() else {
            return BiPoly::zero();
        };
        let lin = BiPoly::constant(a.clone()).add(&BiPoly::term(b.clone(), 0, 1));
        // Horner in u with q-polynomial coefficients.
        let coeff_at_u = |j: u32| -> BiPoly {
            let mut out = BiPoly::zero();
            for (k, c) in self.terms.iter().filter(|(k, _)| k.1 == j) {
                out.terms.insert((k.0, 0), c.clone());
            }
            out
        };
        let mut acc = coeff_at_u(ud);
        for j in (0..ud).rev() {
            acc = acc.mul(&lin).add(&coeff_at_u(j));
        }
        acc
    }

    /// `p(1/(c*q), u) * (c*q)^cap` as a polynomial: the coefficient-reversal
    /// substitution used by the functional equations. Requires
    /// `cap >= q_degree` and `c != 0`.
    pub fn reverse_q(&self, c: &Rational, cap: u32) -> Self {
        assert!(!c.is_zero(), "reversal scale must be nonzero");
        assert!(
            self.q_degree().unwrap_or(0) <= cap,
            "reversal cap below q-degree"
        );
        let mut out = BiPoly::zero();
        for (k, coeff) in &self.terms {
            let new_q = cap - k.0;
            // (c q)^cap * c^{-k.0} q^{-k.0} = c^{cap - k.0} q^{cap - k.0}
            let scale = pow_rational(c, new_q);
            out.insert_add((new_q, k.1), coeff * scale);
        }
        out
    }

    /// Evaluates at `q = 1/(1-u)` in cleared form: returns `(N(u), k)` with
    /// `p(1/(1-u), u) = N(u) / (1-u)^k` and `k = q_degree`.
    pub fn eval_q_at_inv_one_minus_u(&self) -> (UniPoly, u32) {
        let Some(qd) = self.q_degree() else {
            return (UniPoly::zero(), 0);
        };
        let one_minus_u = UniPoly::from_i64(&[1, -1]);
        let mut n = UniPoly::zero();
        for m in 0..=qd {
            let cm = self.coeff_of_q(m);
            if cm.is_zero() {
                continue;
            }
            n = n.add(&cm.mul(&one_minus_u.pow(qd - m)));
        }
        (n, qd)
    }

    pub fn derivative_q(&self) -> Self {
        let mut out = BiPoly::zero();
        for (k, c) in &self.terms {
            if k.0 > 0 {
                out.terms.insert((k.0 - 1, k.1), c * rat_int(k.0 as i64));
            }
        }
        out
    }

    /// The polynomial as a univariate in `q` if no `u` appears.
    pub fn as_q_poly(&self) -> Option<UniPoly> {
        if self.u_degree().unwrap_or(0) > 0 {
            return None;
        }
        Some(self.substitute_u(&Rational::zero()))
    }

    /// Canonical rendering: terms ascending in graded-lex order, `q` powers
    /// before `u` powers inside a term.
    pub fn render(&self) -> String {
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by(|a, b| graded_lex(a, b));
        let mut out = String::new();
        let mut first = true;
        for k in keys {
            let c = &self.terms[k];
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (k.0 == 0 && k.1 == 0) {
                parts.push(mag.to_string());
            }
            match k.0 {
                0 => {}
                1 => parts.push("q".into()),
                d => parts.push(format!("q^{d}")),
            }
            match k.1 {
                0 => {}
                1 => parts.push("u".into()),
                d => parts.push(format!("u^{d}")),
            }
            out.push_str(&parts.join("*"));
        }
        if first {
            out.push('0');
        }
        out
    }
}

/// `c^e` for a rational base and small exponent.
pub fn pow_rational(c: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= c;
    }
    acc
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn q() -> BiPoly {
        BiPoly::var_q()
    }
    fn u() -> BiPoly {
        BiPoly::var_u()
    }

    #[test]
    fn arithmetic_and_display() {
        // 1 - q^2 u^2
        let p = BiPoly::one().sub(&q().pow(2).mul(&u().pow(2)));
        assert_eq!(p.render(), "1 - q^2*u^2");
        assert_eq!(p.q_degree(), Some(2));
        assert_eq!(p.u_degree(), Some(2));
        assert_eq!(p.eval(&rat_int(2), &rat(1, 2)), rat_int(0));
    }

    #[test]
    fn coeff_of_q_extracts_u_polynomials() {
        let p = BiPoly::one().sub(&q().pow(2).mul(&u().pow(2)));
        assert_eq!(p.coeff_of_q(0), UniPoly::one());
        assert_eq!(p.coeff_of_q(1), UniPoly::zero());
        assert_eq!(p.coeff_of_q(2), UniPoly::from_i64(&[0, 0, -1]));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = BiPoly::one().add(&q().mul(&u())).add(&q().pow(2));
        let b = BiPoly::one().sub(&q()).add(&u().pow(3));
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert!(prod.add(&BiPoly::one()).div_exact(&a).is_err());
    }

    #[test]
    fn reversal_substitutes_reciprocal_argument() {
        // p = 1 + 3q + q^2 u, c = 2, cap = 2:
        // p(1/(2q)) * (2q)^2 = 4q^2 + 6q + u
        let p = BiPoly::one()
            .add(&q().mul_scalar(&rat_int(3)))
            .add(&q().pow(2).mul(&u()));
        let r = p.reverse_q(&rat_int(2), 2);
        let expected = BiPoly::term(rat_int(4), 2, 0)
            .add(&BiPoly::term(rat_int(6), 1, 0))
            .add(&BiPoly::term(rat_int(1), 0, 1));
        assert_eq!(r, expected);
    }

    #[test]
    fn affine_u_substitution() {
        // p = u^2; u := 1 - u -> 1 - 2u + u^2
        let p = u().pow(2);
        let s = p.substitute_u_affine(&rat_int(1), &rat_int(-1));
        assert_eq!(s.render(), "1 - 2*u + u^2");
        // involution: substituting twice returns the original
        assert_eq!(s.substitute_u_affine(&rat_int(1), &rat_int(-1)), p);
    }

    #[test]
    fn eval_at_critical_q_clears_denominator() {
        // p = 1 - q^2 u^2 at q = 1/(1-u):
        // N(u) = (1-u)^2 - u^2 = 1 - 2u, k = 2
        let p = BiPoly::one().sub(&q().pow(2).mul(&u().pow(2)));
        let (n, k) = p.eval_q_at_inv_one_minus_u();
        assert_eq!(k, 2);
        assert_eq!(n, UniPoly::from_i64(&[1, -2]));
    }
}
