//! Dense univariate polynomials over `Rational`.
//!
//! Coefficient index = power of the variable. The variable itself is
//! anonymous: the same type serves polynomials in `q` (zeta inverses at a
//! fixed deformation value) and in `u` (trace series, power sums). The
//! invariant is that the trailing coefficient is nonzero; the zero polynomial
//! is the empty vector.

use super::rational::{rat_int, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// The variable `x`.
    pub fn var() -> Self {
        UniPoly::monomial(Rational::one(), 1)
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `self += c * x^shift * other`; the workhorse of the sparse power-sum
    /// iteration, where `c` is 1 and `shift` is 0 or 1.
    pub fn add_assign_shifted(&mut self, other: &Self, shift: usize) {
        if other.is_zero() {
            return;
        }
        let needed = other.coeffs.len() + shift;
        if self.coeffs.len() < needed {
            self.coeffs.resize(needed, Rational::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i + shift] += c;
        }
        self.trim();
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_int(i as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut quot_coeffs = vec![
            Rational::zero();
            self.coeffs.len().saturating_sub(divisor.coeffs.len()) + 1
        ];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_coeff() / &lead;
            let shift = rd - dd;
            quot_coeffs[shift] = factor.clone();
            // rem -= factor * x^shift * divisor
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let delta = c * &factor;
                rem.coeffs[i + shift] -= delta;
            }
            rem.trim();
        }
        (UniPoly::from_coeffs(quot_coeffs), rem)
    }

    /// Division known to be exact; panics if a remainder appears.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "inexact univariate division");
        q
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let monic = |p: &UniPoly| -> UniPoly {
            if p.is_zero() {
                UniPoly::zero()
            } else {
                p.mul_scalar(&p.leading_coeff().recip())
            }
        };
        let mut a = monic(self);
        let mut b = monic(other);
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = monic(&r);
        }
        a
    }

    /// Yun square-free decomposition: returns `[(f_i, i)]` with the `f_i`
    /// monic, square-free, pairwise coprime, nonconstant, and
    /// `self = lc * prod f_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        assert!(!self.is_zero(), "square-free decomposition of zero");
        if self.degree() == Some(0) {
            return Vec::new();
        }
        let a = self.mul_scalar(&self.leading_coeff().recip());
        let da = a.derivative();
        let g = a.gcd(&da);
        let mut out = Vec::new();
        let mut w = a.div_exact(&g);
        let mut z = da.div_exact(&g).sub(&w.derivative());
        let mut i = 1u32;
        while w.degree().unwrap_or(0) > 0 {
            let gi = w.gcd(&z);
            if gi.degree().unwrap_or(0) > 0 {
                out.push((gi.clone(), i));
            }
            w = w.div_exact(&gi);
            z = z.div_exact(&gi).sub(&w.derivative());
            i += 1;
        }
        out
    }

    /// Divides by `(x - root)` once; `None` if `root` is not a root.
    pub fn synthetic_div(&self, root: &Rational) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // Horner: p(x) = (x - root) * q(x) + p(root)
        let n = self.coeffs.len();
        let mut quot = vec![Rational::zero(); n - 1];
        let mut acc = Rational::zero();
        for i in (0..n).rev() {
            acc = acc * root + &self.coeffs[i];
            if i > 0 {
                quot[i - 1] = acc.clone();
            }
        }
        if acc.is_zero() {
            Some(UniPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Exact multiplicity of `root`; 0 if not a root. The caller guarantees
    /// `self` is nonzero.
    pub fn root_multiplicity(&self, root: &Rational) -> usize {
        assert!(!self.is_zero(), "root multiplicity of the zero polynomial");
        let mut m = 0;
        let mut p = self.clone();
        while let Some(q) = p.synthetic_div(root) {
            m += 1;
            p = q;
            if p.is_zero() {
                break;
            }
        }
        m
    }

    /// Scales to integer coefficients with content 1 and positive
    /// lowest-degree coefficient. Returns the scaled polynomial.
    pub fn primitive_integer(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        let first_nonzero = ints.iter().find(|v| !v.is_zero()).unwrap();
        if first_nonzero.is_negative() {
            content = -content;
        }
        UniPoly::from_coeffs(
            ints.iter()
                .map(|v| Rational::from_integer(v / &content))
                .collect(),
        )
    }

    /// Renders with the given variable name, terms in ascending degree.
    pub fn render(&self, var: &str) -> String {
        render_terms(
            var,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c.clone(), i)),
        )
    }
}

/// Shared term renderer: `terms` yields `(coefficient, power)` in display
/// order.
pub(crate) fn render_terms<I: Iterator<Item = (Rational, usize)>>(var: &str, terms: I) -> String {
    let mut out = String::new();
    let mut first = true;
    for (c, k) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let coeff_part = if mag.is_one() && k > 0 {
            String::new()
        } else {
            mag.to_string()
        };
        let var_part = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        match (coeff_part.is_empty(), var_part.is_empty()) {
            (true, _) => out.push_str(&var_part),
            (false, true) => out.push_str(&coeff_part),
            (false, false) => {
                out.push_str(&coeff_part);
                out.push('*');
                out.push_str(&var_part);
            }
        }
    }
    if first {
        out.push('0');
    }
    out
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn arithmetic_and_eval() {
        let p = UniPoly::from_i64(&[1, -3, 2]); // 1 - 3x + 2x^2 = (1-x)(1-2x)
        let q = UniPoly::from_i64(&[-1, 1]); // x - 1
        assert_eq!(p.eval(&rat_int(1)), rat_int(0));
        assert_eq!(p.eval(&rat(1, 2)), rat_int(0));
        assert_eq!(p.eval(&rat_int(2)), rat_int(3));
        let prod = p.mul(&q);
        assert_eq!(prod.degree(), Some(3));
        assert_eq!(prod.eval(&rat_int(3)), p.eval(&rat_int(3)) * q.eval(&rat_int(3)));
    }

    #[test]
    fn divrem_roundtrip() {
        let a = UniPoly::from_i64(&[2, 0, -7, 1, 3]);
        let b = UniPoly::from_i64(&[1, 2, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_common_factor() {
        let f = UniPoly::from_i64(&[-1, 1]); // x - 1
        let a = f.mul(&UniPoly::from_i64(&[1, 1]));
        let b = f.mul(&UniPoly::from_i64(&[2, 0, 1]));
        let g = a.gcd(&b);
        assert_eq!(g, f.mul_scalar(&f.leading_coeff().recip()));
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        // (1 - q^3)^2 -> single square-free factor of multiplicity 2
        let base = UniPoly::from_i64(&[1, 0, 0, -1]);
        let p = base.mul(&base);
        let dec = p.squarefree_decomposition();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec[0].1, 2);
        assert_eq!(dec[0].0.mul_scalar(&rat_int(-1)), base); // monic = q^3 - 1
    }

    #[test]
    fn root_multiplicity_examples() {
        // 1 - q^2 at q=1 -> 1
        assert_eq!(UniPoly::from_i64(&[1, 0, -1]).root_multiplicity(&rat_int(1)), 1);
        // (1 - q^3)^2 at q=1 -> 2
        let base = UniPoly::from_i64(&[1, 0, 0, -1]);
        assert_eq!(base.mul(&base).root_multiplicity(&rat_int(1)), 2);
        // 1 - u^2 q^2 at u=1/2: 1 - q^2/4 at q=2 -> 1
        let p = UniPoly::from_coeffs(vec![rat_int(1), rat_int(0), rat(-1, 4)]);
        assert_eq!(p.root_multiplicity(&rat_int(2)), 1);
        assert_eq!(p.root_multiplicity(&rat_int(3)), 0);
    }

    #[test]
    fn primitive_integer_normalization() {
        let p = UniPoly::from_coeffs(vec![rat(-1, 2), rat(3, 4)]); // -1/2 + 3/4 x
        assert_eq!(p.primitive_integer(), UniPoly::from_i64(&[2, -3]));
    }

    #[test]
    fn renders_canonical_strings() {
        assert_eq!(UniPoly::from_i64(&[1, 0, -2]).render("q"), "1 - 2*q^2");
        assert_eq!(UniPoly::from_i64(&[0, 1]).render("u"), "u");
        assert_eq!(UniPoly::zero().render("q"), "0");
        assert_eq!(
            UniPoly::from_coeffs(vec![rat(1, 2), rat_int(-1)]).render("q"),
            "1/2 - q"
        );
    }
}
