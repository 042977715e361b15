//! Floating-point support routines: polynomial rooting via a Weierstrass
//! (Durand-Kerner) iteration, and rational reconstruction of near-rational
//! roots.
//!
//! Shifted-QR eigenvalue iterations stall on companion matrices whose roots
//! share a magnitude (roots of unity, critical-line constellations), which
//! is the typical shape of a zeta polynomial; the simultaneous Weierstrass
//! iteration has no such failure mode and is deterministic.
//!
//! Exactness discipline: these routines never feed values back into the
//! symbolic layer unverified. Rational candidates recovered from numeric
//! roots are always confirmed by exact evaluation before use.

use super::rational::{rational_to_f64, Rational};
use super::unipoly::UniPoly;
use nalgebra::Complex;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// All complex roots `(re, im)` of a nonconstant polynomial, with
/// multiplicity, in a deterministic order (magnitude, then components).
pub fn complex_roots(p: &UniPoly) -> Vec<(f64, f64)> {
    let n = p.degree().expect("rooting the zero polynomial");
    assert!(n >= 1, "rooting a constant polynomial");
    let lead = p.leading_coeff();
    let monic: Vec<f64> = (0..n)
        .map(|i| rational_to_f64(&(p.coeff(i) / &lead)))
        .collect();
    let mut roots = if n == 1 {
        vec![(-monic[0], 0.0)]
    } else {
        weierstrass(&monic)
    };
    for z in &mut roots {
        // real coefficients pair non-real roots with their conjugates, so an
        // imaginary part at iteration resolution is a real root's float fuzz
        if z.1.abs() <= 1e-13 * (1.0 + z.0.abs()) {
            z.1 = 0.0;
        }
    }
    roots.sort_by(|a, b| {
        let ma = (a.0 * a.0 + a.1 * a.1).sqrt();
        let mb = (b.0 * b.0 + b.1 * b.1).sqrt();
        ma.total_cmp(&mb)
            .then(a.0.total_cmp(&b.0))
            .then(a.1.total_cmp(&b.1))
    });
    roots
}

/// Simultaneous root iteration on a monic polynomial given by its low
/// coefficients `c[0..n]` (the leading 1 implicit). The asymmetric spiral
/// start breaks every root symmetry; convergence is quadratic for simple
/// roots, and the iteration count is capped so pathological inputs degrade
/// to reduced accuracy instead of hanging.
fn weierstrass(c: &[f64]) -> Vec<(f64, f64)> {
    let n = c.len();
    let eval = |z: Complex<f64>| -> Complex<f64> {
        let mut acc = Complex::new(1.0, 0.0);
        for k in (0..n).rev() {
            acc = acc * z + Complex::new(c[k], 0.0);
        }
        acc
    };
    // Cauchy bound keeps the start circle around all roots
    let radius = 1.0 + c.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let seed = Complex::new(0.4, 0.9) / Complex::new(0.4f64, 0.9).norm();
    let turn = Complex::from_polar(1.0, 2.0 * std::f64::consts::PI / n as f64 + 0.3);
    let mut z: Vec<Complex<f64>> = (0..n)
        .scan(seed * radius * 0.7, |s, _| {
            let v = *s;
            *s *= turn;
            Some(v)
        })
        .collect();

    for _ in 0..600 {
        let mut biggest_step = 0.0f64;
        for k in 0..n {
            let mut denom = Complex::new(1.0, 0.0);
            for j in 0..n {
                if j != k {
                    denom *= z[k] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                // coincident iterates: nudge apart and retry next sweep
                z[k] += Complex::new(1e-8, 1e-8);
                biggest_step = f64::MAX;
                continue;
            }
            let step = eval(z[k]) / denom;
            z[k] -= step;
            biggest_step = biggest_step.max(step.norm() / (1.0 + z[k].norm()));
        }
        if biggest_step < 1e-14 {
            break;
        }
    }
    z.iter().map(|w| (w.re, w.im)).collect()
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// by continued fractions.
pub fn reconstruct_rational(x: f64, max_den: u64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let mut a = x;
    let (mut p0, mut q0) = (BigInt::from(1), BigInt::from(0));
    let (mut p1, mut q1) = (BigInt::from(a.floor() as i64), BigInt::from(1));
    a -= a.floor();
    for _ in 0..64 {
        if q1.abs() > BigInt::from(max_den) {
            break;
        }
        if a.abs() < 1e-12 {
            break;
        }
        a = 1.0 / a;
        let whole = a.floor();
        if !whole.is_finite() || whole.abs() > 1e15 {
            break;
        }
        let w = BigInt::from(whole as i64);
        let p2 = &w * &p1 + &p0;
        let q2 = &w * &q1 + &q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        a -= whole;
    }
    if q1.is_zero() || q1.abs() > BigInt::from(max_den) {
        if q0.is_zero() || q0.abs() > BigInt::from(max_den) {
            return None;
        }
        return Some(Rational::new(p0, q0));
    }
    Some(Rational::new(p1, q1))
}

/// Splits off all rational linear factors: returns `(roots with exact
/// multiplicity, remaining factor)`. Candidates come from numeric roots and
/// are verified by exact evaluation, so the output is exact.
pub fn extract_rational_roots(p: &UniPoly) -> (Vec<(Rational, usize)>, UniPoly) {
    let mut rest = p.clone();
    let mut found: Vec<(Rational, usize)> = Vec::new();
    if rest.degree().unwrap_or(0) == 0 {
        return (found, rest);
    }
    let mut candidates: Vec<Rational> = Vec::new();
    for (re, im) in complex_roots(&rest) {
        if im.abs() > 1e-7 * (1.0 + re.abs()) {
            continue;
        }
        if let Some(r) = reconstruct_rational(re, 1_000_000) {
            if !candidates.contains(&r) {
                candidates.push(r);
            }
        }
    }
    for cand in candidates {
        let mult = if rest.is_zero() { 0 } else { rest.root_multiplicity(&cand) };
        if mult > 0 {
            for _ in 0..mult {
                rest = rest.synthetic_div(&cand).expect("verified root divides");
            }
            found.push((cand, mult));
        }
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    (found, rest)
}
