//! Pole analysis of the graph zeta function: critical-strip bounds, numeric
//! pole location, exact pole orders at `q = ±(1-u)^{-1}`, the order
//! enhancement at `u_* = 1 - n_E/n_V` together with the Laplacian
//! pseudoinverse condition that governs its exactness, Riemann-hypothesis
//! verdicts for regular graphs, and the eigenvector families of the deformed
//! edge operator.
//!
//! Pole orders are always exact (synthetic division over the rationals).
//! Numeric machinery is confined to root location and spectra; every order,
//! bound, and identity is rational arithmetic.

use crate::algebra::{
    complex_roots, extract_rational_roots, pow_rational, rat, rat_int, rational_to_f64, BiPoly,
    PolyMatrix, Rational, UniPoly, solve_on_complement,
};
use crate::graph::{Digraph, GraphInfo, GraphMatrices};
use crate::zeta::edge_zeta_inverse;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PoleError {
    #[error("u = {0} is excluded (pole targets ±(1-u)^{{-1}} undefined)")]
    ForbiddenU(Rational),
    #[error("analysis requires a regular graph")]
    NotRegular,
}

/// A radius that may be infinite (a vanishing singular value gives a vacuous
/// upper bound).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    Finite(Rational),
    Unbounded,
}

impl Bound {
    /// Reciprocal of a distance; zero distance gives the vacuous bound.
    pub fn from_distance(d: Rational) -> Self {
        if d.is_zero() {
            Bound::Unbounded
        } else {
            Bound::Finite(d.recip())
        }
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            Bound::Finite(r) => rational_to_f64(r),
            Bound::Unbounded => f64::INFINITY,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Bound::Finite(r) => r.to_string(),
            Bound::Unbounded => "unbounded".to_string(),
        }
    }
}

/// Inner and outer radius bounds for the annulus containing all poles in
/// `q`, from the singular values of the deformed edge operator: the inner
/// bound is the reciprocal of the largest singular value, the outer bound
/// the reciprocal of the smallest. Branch labels record which piecewise case
/// fired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripBounds {
    pub u0: Rational,
    pub inner: Bound,
    pub inner_branch: String,
    pub outer: Bound,
    pub outer_branch: String,
}

/// Piecewise-exact strip bounds in the real parameter `u0`. The distinct
/// degree offsets `t̃_1 < … < t̃_M` split the line at midpoints between the
/// points `{-t̃_i} ∪ {1}`; the convention `t̃_0 := -1` makes the outer-bound
/// branches tile the line for every M (for M = 1 the middle branches are
/// empty and the split is at `-(t̃_1 - 1)/2`).
pub fn critical_strip_bounds(g: &Digraph, u0: &Rational) -> StripBounds {
    let info = GraphInfo::analyze(g);
    let offsets: Vec<i64> = info
        .distinct_degree_offsets
        .iter()
        .map(|&t| t as i64)
        .collect();
    let m = offsets.len();
    let t_max = offsets[m - 1];

    let unit_distance = (u0 - rat_int(1)).abs();
    let offset_distance = |t: i64| (u0 + rat_int(t)).abs();

    // a lone edge contributes no |u-1| singular values (2 n_E = n_V), so
    // both extremes come from the degree offsets alone
    if g.n_directed() == g.n_vertices() {
        let far = *offsets.iter().max_by_key(|&&t| offset_distance(t)).unwrap();
        let near = *offsets.iter().min_by_key(|&&t| offset_distance(t)).unwrap();
        return StripBounds {
            u0: u0.clone(),
            inner: Bound::from_distance(offset_distance(far)),
            inner_branch: format!("1/|u+{far}|"),
            outer: Bound::from_distance(offset_distance(near)),
            outer_branch: format!("1/|u+{near}|"),
        };
    }

    let (inner, inner_branch) = if u0 >= &rat(-(t_max - 1), 2) {
        (
            Bound::from_distance(offset_distance(t_max)),
            format!("1/|u+{}|", t_max),
        )
    } else {
        (Bound::from_distance(unit_distance.clone()), "1/|u-1|".to_string())
    };

    // extended offsets with t̃_0 = -1; branch i covers
    // [-(t̃_i + t̃_{i+1})/2, -(t̃_{i-1} + t̃_i)/2), scanned from the top
    let mut ext = Vec::with_capacity(m + 1);
    ext.push(-1i64);
    ext.extend_from_slice(&offsets);
    let mut outer = None;
    if u0 >= &rat(-(ext[0] + ext[1]), 2) {
        outer = Some((Bound::from_distance(unit_distance), "1/|u-1|".to_string()));
    } else {
        for i in 1..m {
            if u0 >= &rat(-(ext[i] + ext[i + 1]), 2) {
                outer = Some((
                    Bound::from_distance(offset_distance(ext[i])),
                    format!("1/|u+{}|", ext[i]),
                ));
                break;
            }
        }
    }
    let (outer, outer_branch) = outer.unwrap_or((
        Bound::from_distance(offset_distance(t_max)),
        format!("1/|u+{}|", t_max),
    ));

    StripBounds {
        u0: u0.clone(),
        inner,
        inner_branch,
        outer,
        outer_branch,
    }
}

/// Location of a pole relative to the distinguished rational targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleClass {
    /// q = (1-u)^{-1} or q = -(1-u)^{-1}
    UnitReciprocal { negative: bool },
    /// q = (t+u)^{-1} on a regular graph
    DegreeReciprocal,
    /// q = -(t+u)^{-1} on a bipartite regular graph (spectral mirror of the
    /// Perron eigenvalue; classified separately so it never counts as a
    /// critical-line violation)
    MirrorDegreeReciprocal,
    Other,
}

#[derive(Debug, Clone)]
pub struct PoleEntry {
    pub re: f64,
    pub im: f64,
    pub magnitude: f64,
    pub multiplicity: usize,
    /// set when the root is exactly rational
    pub exact: Option<Rational>,
    /// Re(s) under q = r_G^s r'_G^{1-s}; None when the strip is degenerate
    pub s_re: Option<f64>,
    pub class: PoleClass,
}

/// Riemann-hypothesis verdict for a regular graph at real rational u.
#[derive(Debug, Clone)]
pub struct RhVerdict {
    /// largest |λ| over Spec A with one copy of the Perron eigenvalue removed
    pub max_subleading: f64,
    /// 2√|(1-u)(t+u)|
    pub spectral_bound: f64,
    pub hypothesis_holds: bool,
    /// |(1-u)(t+u)|^{-1/2}
    pub critical_magnitude: f64,
    pub nontrivial_count: usize,
    pub mirror_count: usize,
    /// None when the hypothesis fails (the theorem asserts nothing)
    pub on_critical_line: Option<bool>,
    pub max_deviation: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct PoleReport {
    pub u0: Rational,
    pub poles: Vec<PoleEntry>,
    /// min/max pole magnitudes (None when the specialized zeta has no poles)
    pub min_pole_magnitude: Option<f64>,
    pub max_pole_magnitude: Option<f64>,
    pub order_plus: usize,
    pub order_minus: usize,
    /// min and max magnitudes coincide (or no poles): the s-map is undefined
    pub degenerate_strip: bool,
    pub bounds: StripBounds,
    /// present for regular graphs
    pub rh: Option<RhVerdict>,
}

struct RawRoot {
    re: f64,
    im: f64,
    multiplicity: usize,
    exact: Option<Rational>,
}

/// Exact-multiplicity root extraction: square-free decomposition first (each
/// factor carries its exact multiplicity), then rational roots exactly, then
/// simultaneous numeric iteration for the irrational remainder.
fn numeric_roots(p: &UniPoly) -> Vec<RawRoot> {
    let mut out = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        let (rational, rest) = extract_rational_roots(&factor);
        for (root, _) in rational {
            out.push(RawRoot {
                re: rational_to_f64(&root),
                im: 0.0,
                multiplicity: mult as usize,
                exact: Some(root),
            });
        }
        if rest.degree().unwrap_or(0) >= 1 {
            for (re, im) in complex_roots(&rest) {
                out.push(RawRoot {
                    re,
                    im,
                    multiplicity: mult as usize,
                    exact: None,
                });
            }
        }
    }
    out
}

pub fn poles_numeric(g: &Digraph, u0: &Rational, tol: f64) -> Result<PoleReport, PoleError> {
    let edge = edge_zeta_inverse(g);
    poles_numeric_of(g, &edge, u0, tol)
}

/// Same as [`poles_numeric`] with the edge determinant precomputed.
pub fn poles_numeric_of(
    g: &Digraph,
    edge: &BiPoly,
    u0: &Rational,
    tol: f64,
) -> Result<PoleReport, PoleError> {
    if u0 == &rat_int(1) {
        return Err(PoleError::ForbiddenU(u0.clone()));
    }
    let info = GraphInfo::analyze(g);
    let p = edge.substitute_u(u0);

    let plus_target = (rat_int(1) - u0).recip();
    let minus_target = -plus_target.clone();
    let order_plus = p.root_multiplicity(&plus_target);
    let order_minus = p.root_multiplicity(&minus_target);

    let mut raw = numeric_roots(&p);
    raw.sort_by(|a, b| {
        let ma = (a.re * a.re + a.im * a.im, a.re, a.im);
        let mb = (b.re * b.re + b.im * b.im, b.re, b.im);
        ma.partial_cmp(&mb).unwrap()
    });

    let magnitudes: Vec<f64> = raw.iter().map(|r| (r.re * r.re + r.im * r.im).sqrt()).collect();
    let min_mag = magnitudes.iter().cloned().fold(f64::INFINITY, f64::min);
    let max_mag = magnitudes.iter().cloned().fold(0.0f64, f64::max);
    let has_poles = !raw.is_empty();
    let degenerate = !has_poles || (max_mag - min_mag) <= tol * max_mag.max(1.0);

    // classification targets
    let t = info.regularity.map(|t| t as i64);
    let degree_target = t.and_then(|t| {
        let d = rat_int(t) + u0;
        if d.is_zero() { None } else { Some(d.recip()) }
    });
    let bipartite = info.bipartition.is_some();

    let classify = |root: &RawRoot| -> PoleClass {
        let near = |target: &Rational| -> bool {
            if let Some(exact) = &root.exact {
                return exact == target;
            }
            let tf = rational_to_f64(target);
            let dist = ((root.re - tf).powi(2) + root.im.powi(2)).sqrt();
            dist <= tol * tf.abs().max(1.0)
        };
        if near(&plus_target) {
            PoleClass::UnitReciprocal { negative: false }
        } else if near(&minus_target) {
            PoleClass::UnitReciprocal { negative: true }
        } else if degree_target.as_ref().is_some_and(&near) {
            PoleClass::DegreeReciprocal
        } else if bipartite
            && degree_target
                .as_ref()
                .is_some_and(|d| near(&-d.clone()))
        {
            PoleClass::MirrorDegreeReciprocal
        } else {
            PoleClass::Other
        }
    };

    let poles: Vec<PoleEntry> = raw
        .iter()
        .zip(&magnitudes)
        .map(|(root, &mag)| {
            let s_re = if degenerate || mag <= 0.0 {
                None
            } else {
                Some((mag.ln() - max_mag.ln()) / (min_mag.ln() - max_mag.ln()))
            };
            PoleEntry {
                re: root.re,
                im: root.im,
                magnitude: mag,
                multiplicity: root.multiplicity,
                exact: root.exact.clone(),
                s_re,
                class: classify(root),
            }
        })
        .collect();

    let rh = t.map(|t| rh_verdict_from(g, t, u0, tol, &poles));

    Ok(PoleReport {
        u0: u0.clone(),
        poles,
        min_pole_magnitude: has_poles.then_some(min_mag),
        max_pole_magnitude: has_poles.then_some(max_mag),
        order_plus,
        order_minus,
        degenerate_strip: degenerate,
        bounds: critical_strip_bounds(g, u0),
        rh,
    })
}

fn adjacency_spectrum(g: &Digraph) -> Vec<f64> {
    let mats = GraphMatrices::build(g);
    let n = g.n_vertices();
    let a = nalgebra::DMatrix::from_fn(n, n, |i, j| rational_to_f64(mats.adjacency.get(i, j)));
    let mut eig: Vec<f64> = a.symmetric_eigen().eigenvalues.iter().cloned().collect();
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
    eig
}

fn rh_verdict_from(
    g: &Digraph,
    t: i64,
    u0: &Rational,
    tol: f64,
    poles: &[PoleEntry],
) -> RhVerdict {
    let c = rational_to_f64(&((rat_int(1) - u0) * (rat_int(t) + u0)));
    let spectral_bound = 2.0 * c.abs().sqrt();
    let spectrum = adjacency_spectrum(g);
    // drop one copy of the Perron eigenvalue t+1 (the largest; simple for
    // connected graphs)
    let max_subleading = spectrum
        .iter()
        .skip(1)
        .fold(0.0f64, |acc, &l| acc.max(l.abs()));
    let hypothesis_holds = max_subleading < spectral_bound - tol;

    let critical_magnitude = if c.abs() > 0.0 {
        c.abs().powf(-0.5)
    } else {
        f64::INFINITY
    };
    let nontrivial: Vec<&PoleEntry> = poles
        .iter()
        .filter(|p| p.class == PoleClass::Other)
        .collect();
    let mirror_count = poles
        .iter()
        .filter(|p| p.class == PoleClass::MirrorDegreeReciprocal)
        .map(|p| p.multiplicity)
        .sum();
    let nontrivial_count = nontrivial.iter().map(|p| p.multiplicity).sum();

    let (on_critical_line, max_deviation) = if hypothesis_holds {
        let max_dev = nontrivial
            .iter()
            .fold(0.0f64, |acc, p| acc.max((p.magnitude - critical_magnitude).abs()));
        (Some(max_dev <= tol * critical_magnitude.max(1.0)), Some(max_dev))
    } else {
        (None, None)
    };

    RhVerdict {
        max_subleading,
        spectral_bound,
        hypothesis_holds,
        critical_magnitude,
        nontrivial_count,
        mirror_count,
        on_critical_line,
        max_deviation,
    }
}

/// Checks the spectral precondition `|λ| < 2√|(1-u)(t+u)|` for every
/// adjacency eigenvalue except one Perron copy, and (when it holds) that
/// every pole outside `{±(1-u)^{-1}, (t+u)^{-1}}` sits on the critical
/// circle `|q| = |(1-u)(t+u)|^{-1/2}`.
pub fn rh_check(g: &Digraph, u0: &Rational, tol: f64) -> Result<RhVerdict, PoleError> {
    let info = GraphInfo::analyze(g);
    if info.regularity.is_none() {
        return Err(PoleError::NotRegular);
    }
    let report = poles_numeric(g, u0, tol)?;
    Ok(report.rh.expect("regular graph always carries an RH verdict"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryEnd {
    /// smallest pole magnitude (Perron eigenvalue of the edge operator)
    Inner,
    /// largest pole magnitude (Perron eigenvalue of its inverse)
    Outer,
}

/// Outcome of the boundary simplicity check. The hypothesis ranges are
/// u ≥ 0 (inner) and u ≤ 1 - t̃_M (outer); outside both the theorem is
/// silent. `NotSimple` reports honestly when the Perron argument fails
/// (e.g. cycle graphs at u = 0, whose edge operator is reducible).
#[derive(Debug, Clone, PartialEq)]
pub enum BoundaryVerdict {
    Simple { end: BoundaryEnd, q: f64 },
    NotSimple { end: BoundaryEnd, detail: String },
    NoPoles,
    NotApplicable,
}

pub fn boundary_pole_simplicity(g: &Digraph, u0: &Rational, tol: f64) -> BoundaryVerdict {
    let info = GraphInfo::analyze(g);
    let t_max = *info.distinct_degree_offsets.last().unwrap() as i64;
    let end = if u0 >= &rat_int(0) {
        BoundaryEnd::Inner
    } else if u0 <= &rat_int(1 - t_max) {
        BoundaryEnd::Outer
    } else {
        return BoundaryVerdict::NotApplicable;
    };

    let p = edge_zeta_inverse(g).substitute_u(u0);
    let raw = numeric_roots(&p);
    if raw.is_empty() {
        return BoundaryVerdict::NoPoles;
    }
    let mags: Vec<f64> = raw.iter().map(|r| (r.re * r.re + r.im * r.im).sqrt()).collect();
    let target = match end {
        BoundaryEnd::Inner => mags.iter().cloned().fold(f64::INFINITY, f64::min),
        BoundaryEnd::Outer => mags.iter().cloned().fold(0.0f64, f64::max),
    };
    // the claimed pole sits at the positive real point of the boundary
    // circle; cluster roots near that point and demand a single simple one
    let radius = tol * target.max(1.0);
    let cluster: Vec<&RawRoot> = raw
        .iter()
        .filter(|r| ((r.re - target).powi(2) + r.im.powi(2)).sqrt() <= radius)
        .collect();
    if cluster.is_empty() {
        return BoundaryVerdict::NotSimple {
            end,
            detail: format!("no pole at the real positive boundary point {:.9}", target),
        };
    }
    let total_multiplicity: usize = cluster.iter().map(|r| r.multiplicity).sum();
    if total_multiplicity != 1 {
        return BoundaryVerdict::NotSimple {
            end,
            detail: format!(
                "multiplicity {} at the boundary point {:.9}",
                total_multiplicity, target
            ),
        };
    }
    BoundaryVerdict::Simple { end, q: cluster[0].re }
}

/// Exact saturation data for regular graphs: both `q = (1-u)^{-1}` and
/// `q = (t+u)^{-1}` are roots of the edge determinant, and their magnitudes
/// equal the two strip bounds. The (inner, outer) assignment swaps at
/// `u = -(t-1)/2`.
#[derive(Debug, Clone)]
pub struct RegularSaturation {
    pub unit_pole: Rational,
    pub degree_pole: Rational,
    pub unit_multiplicity: usize,
    pub degree_multiplicity: usize,
    pub inner: Rational,
    pub outer: Rational,
    pub saturates: bool,
}

pub fn regular_boundary_poles(g: &Digraph, u0: &Rational) -> Result<RegularSaturation, PoleError> {
    let info = GraphInfo::analyze(g);
    let Some(t) = info.regularity else {
        return Err(PoleError::NotRegular);
    };
    let t = t as i64;
    if u0 == &rat_int(1) || u0 == &rat_int(-t) {
        return Err(PoleError::ForbiddenU(u0.clone()));
    }

    let p = edge_zeta_inverse(g).substitute_u(u0);
    let unit_pole = (rat_int(1) - u0).recip();
    let degree_pole = (rat_int(t) + u0).recip();
    let unit_multiplicity = p.root_multiplicity(&unit_pole);
    let degree_multiplicity = p.root_multiplicity(&degree_pole);

    let (inner, outer) = if u0 >= &rat(-(t - 1), 2) {
        (degree_pole.abs(), unit_pole.abs())
    } else {
        (unit_pole.abs(), degree_pole.abs())
    };

    let bounds = critical_strip_bounds(g, u0);
    let saturates = unit_multiplicity >= 1
        && degree_multiplicity >= 1
        && bounds.inner == Bound::Finite(inner.clone())
        && bounds.outer == Bound::Finite(outer.clone());

    Ok(RegularSaturation {
        unit_pole,
        degree_pole,
        unit_multiplicity,
        degree_multiplicity,
        inner,
        outer,
        saturates,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Exact multiplicity of `q = ±(1-u0)^{-1}` as a root of the edge
/// determinant (equals the pole order of the zeta function there).
pub fn pole_order_at(g: &Digraph, u0: &Rational, sign: Sign) -> Result<usize, PoleError> {
    let edge = edge_zeta_inverse(g);
    pole_order_at_of(&edge, u0, sign)
}

/// Same as [`pole_order_at`] with the edge determinant precomputed.
pub fn pole_order_at_of(edge: &BiPoly, u0: &Rational, sign: Sign) -> Result<usize, PoleError> {
    if u0 == &rat_int(1) {
        return Err(PoleError::ForbiddenU(u0.clone()));
    }
    let mut target = (rat_int(1) - u0).recip();
    if sign == Sign::Minus {
        target = -target;
    }
    Ok(edge.substitute_u(u0).root_multiplicity(&target))
}

/// The quadratic form `d⃗·Δ⁺d⃗` of the degree vector against the Laplacian
/// pseudoinverse, and whether it differs from `n_E` (the condition that
/// makes the enhanced pole order exact).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpConditionResult {
    pub value: Rational,
    pub n_edges: usize,
    pub condition_holds: bool,
}

pub fn mp_condition(g: &Digraph) -> MpConditionResult {
    let mats = GraphMatrices::build(g);
    let n = g.n_vertices();
    let mean_degree = rat(2 * g.n_edges() as i64, n as i64);
    let rhs: Vec<Rational> = g
        .degrees()
        .iter()
        .map(|&d| rat_int(d as i64) - &mean_degree)
        .collect();
    // Δ x = d⃗ - d̄·1 restricted to the complement of the kernel; the
    // right-hand side is orthogonal to the all-ones kernel by construction
    let x = solve_on_complement(&mats.laplacian, &rhs)
        .expect("connected Laplacian solves on the kernel complement");
    let value: Rational = g
        .degrees()
        .iter()
        .zip(&x)
        .map(|(&d, xi)| rat_int(d as i64) * xi)
        .sum();
    MpConditionResult {
        condition_holds: value != rat_int(g.n_edges() as i64),
        value,
        n_edges: g.n_edges(),
    }
}

/// Pole order of the unit-reciprocal pole across the enhancement point:
/// order `n_E - n_V + 1` at generic u, at least `n_E - n_V + 2` at
/// `u = u_*`, and exactly that when the pseudoinverse condition holds.
/// (For trees the same formulas give 0 and 1.)
#[derive(Debug, Clone)]
pub struct EnhancementReport {
    pub u_star: Rational,
    pub mp: MpConditionResult,
    pub generic_orders: Vec<(Rational, usize)>,
    pub order_at_star: usize,
    pub expected_generic: usize,
    pub expected_enhanced: usize,
    pub holds: bool,
}

pub fn enhancement_check(g: &Digraph) -> EnhancementReport {
    let info = GraphInfo::analyze(g);
    let u_star = info.u_star.clone();
    assert!(u_star != rat_int(1), "u_* < 1 for every connected graph");
    let edge = edge_zeta_inverse(g);

    let expected_generic = g.n_edges() + 1 - g.n_vertices();
    let expected_enhanced = expected_generic + 1;

    let candidates = [rat(1, 2), rat(1, 3), rat(2, 5), rat_int(-3)];
    let generic_orders: Vec<(Rational, usize)> = candidates
        .into_iter()
        .filter(|c| c != &u_star)
        .take(2)
        .map(|c| {
            let order = pole_order_at_of(&edge, &c, Sign::Plus).expect("u != 1");
            (c, order)
        })
        .collect();
    let order_at_star = pole_order_at_of(&edge, &u_star, Sign::Plus).expect("u_* != 1");

    let mp = mp_condition(g);
    let generic_ok = generic_orders.iter().all(|(_, o)| *o == expected_generic);
    let enhanced_ok = order_at_star >= expected_enhanced
        && (!mp.condition_holds || order_at_star == expected_enhanced);

    EnhancementReport {
        u_star,
        mp,
        generic_orders,
        order_at_star,
        expected_generic,
        expected_enhanced,
        holds: generic_ok && enhanced_ok,
    }
}

/// The vertex determinant matrix `Σ = 1 - qA + q²Q_u` with its first two
/// q-derivatives and determinant.
#[derive(Debug, Clone)]
pub struct SigmaBundle {
    pub sigma: PolyMatrix,
    pub det: BiPoly,
}

impl SigmaBundle {
    pub fn build(g: &Digraph) -> Self {
        let sigma = GraphMatrices::build(g).sigma();
        let det = sigma.det_fraction_free();
        SigmaBundle { sigma, det }
    }
}

/// Exact symbolic checks of the vertex determinant around the critical
/// point `q = (1-u)^{-1}`:
/// - evaluation: `Σ|_{q=(1-u)^{-1}} = Δ/(1-u)` entrywise;
/// - adjugate: `adj((1-u)Δ) = κ (1-u)^{n_V-1} · all-ones` (spanning-tree
///   count from an independent cofactor);
/// - first derivative: `∂_q det Σ|_{q=(1-u)^{-1}} = 2κ n_V (u-u_*)/(1-u)^{n_V-1}`;
/// - second derivative at `u_*`:
///   `∂²_q det Σ = -2κ (d⃗·Δ⁺d⃗ - n_E)/(1-u_*)^{n_V-2}`.
#[derive(Debug, Clone)]
pub struct SigmaLemmaReport {
    pub kappa: BigInt,
    pub evaluation_holds: bool,
    pub adjugate_holds: bool,
    pub first_derivative_holds: bool,
    pub second_derivative_holds: bool,
    pub second_derivative_value: Rational,
}

impl SigmaLemmaReport {
    pub fn holds(&self) -> bool {
        self.evaluation_holds
            && self.adjugate_holds
            && self.first_derivative_holds
            && self.second_derivative_holds
    }
}

pub fn sigma_lemma_checks(g: &Digraph) -> SigmaLemmaReport {
    let mats = GraphMatrices::build(g);
    let info = GraphInfo::analyze(g);
    let n = g.n_vertices();
    let kappa = info.spanning_tree_count.clone();
    let kappa_rat = Rational::from_integer(kappa.clone());
    let one_minus_u = UniPoly::from_i64(&[1, -1]);

    let bundle = SigmaBundle::build(g);

    // evaluation: entry (N, k) with Σ_ij(1/(1-u)) = N/(1-u)^k must equal
    // Δ_ij/(1-u), i.e. N·(1-u) == Δ_ij·(1-u)^k
    let mut evaluation_holds = true;
    for i in 0..n {
        for j in 0..n {
            let (num, k) = bundle.sigma.get(i, j).eval_q_at_inv_one_minus_u();
            let lhs = num.mul(&one_minus_u);
            let rhs = one_minus_u
                .pow(k)
                .mul_scalar(mats.laplacian.get(i, j));
            if lhs != rhs {
                evaluation_holds = false;
            }
        }
    }

    // adjugate of the cleared matrix (1-u)²·Σ|_{q=(1-u)^{-1}} = (1-u)Δ,
    // assembled from components rather than from Δ
    let qu = mats.vertex_deform();
    let cleared = PolyMatrix::from_fn(n, n, |i, j| {
        let mut entry = qu.get(i, j).clone();
        let a_ij = mats.adjacency.get(i, j);
        if !a_ij.is_zero() {
            entry = entry.sub(&BiPoly::from_u_poly(&one_minus_u.mul_scalar(a_ij)));
        }
        if i == j {
            entry = entry.add(&BiPoly::from_u_poly(&one_minus_u.mul(&one_minus_u)));
        }
        entry
    });
    let adj = cleared.adjugate();
    let expected_adj = BiPoly::from_u_poly(
        &one_minus_u
            .pow((n - 1) as u32)
            .mul_scalar(&kappa_rat),
    );
    let mut adjugate_holds = true;
    for i in 0..n {
        for j in 0..n {
            if adj.get(i, j) != &expected_adj {
                adjugate_holds = false;
            }
        }
    }

    // first derivative at the critical point, cleared of (1-u) powers
    let d1 = bundle.det.derivative_q();
    let (num1, k1) = d1.eval_q_at_inv_one_minus_u();
    let target1 = {
        // 2 κ n_V (u - u_*)
        let scale = rat_int(2 * n as i64) * &kappa_rat;
        UniPoly::from_coeffs(vec![-&info.u_star * &scale, scale])
    };
    let first_derivative_holds =
        num1.mul(&one_minus_u.pow((n - 1) as u32)) == target1.mul(&one_minus_u.pow(k1));

    // second derivative at (q, u) = ((1-u_*)^{-1}, u_*)
    let d2 = d1.derivative_q();
    let at_star = d2.substitute_u(&info.u_star);
    let q_star = (rat_int(1) - &info.u_star).recip();
    let value = at_star.eval(&q_star);
    let mp = mp_condition(g);
    let expected2 = rat_int(-2) * &kappa_rat * (&mp.value - rat_int(g.n_edges() as i64))
        / pow_rational(&(rat_int(1) - &info.u_star), (n - 2) as u32);
    let second_derivative_holds = value == expected2;

    SigmaLemmaReport {
        kappa,
        evaluation_holds,
        adjugate_holds,
        first_derivative_holds,
        second_derivative_holds,
        second_derivative_value: value,
    }
}

/// Eigenvector families of the deformed edge operator built from incidence
/// kernels: circulations (kernel of the signed incidence transpose) lift
/// antisymmetrically to eigenvalue `+(1-u)`; kernel vectors of the unsigned
/// incidence transpose lift symmetrically to eigenvalue `-(1-u)`. Eigen
/// relations are verified with u symbolic.
#[derive(Debug, Clone)]
pub struct BumpEigenvectors {
    /// eigenvalue +(1-u); dimension n_E - n_V + 1
    pub plus_family: Vec<Vec<Rational>>,
    /// eigenvalue -(1-u); dimension n_E - n_V + 1 if bipartite, else n_E - n_V
    pub minus_family: Vec<Vec<Rational>>,
    pub verified: bool,
}

pub fn bump_eigenvectors(g: &Digraph) -> BumpEigenvectors {
    let mats = GraphMatrices::build(g);
    let n_e = g.n_edges();
    let n2 = g.n_directed();

    let lift = |alpha: &[Rational], antisymmetric: bool| -> Vec<Rational> {
        let mut w = Vec::with_capacity(n2);
        w.extend_from_slice(alpha);
        for a in alpha {
            w.push(if antisymmetric { -a.clone() } else { a.clone() });
        }
        w
    };

    let plus_family: Vec<Vec<Rational>> = mats
        .incidence
        .transpose()
        .kernel_basis()
        .iter()
        .map(|alpha| lift(alpha, true))
        .collect();
    let minus_family: Vec<Vec<Rational>> = mats
        .unsigned_incidence
        .transpose()
        .kernel_basis()
        .iter()
        .map(|beta| lift(beta, false))
        .collect();

    let b = mats.deformed_edge();
    let one_minus_u = BiPoly::from_u_poly(&UniPoly::from_i64(&[1, -1]));
    let check_family = |family: &[Vec<Rational>], eigen_sign: i64| -> bool {
        family.iter().all(|w| {
            (0..n2).all(|i| {
                let mut acc = BiPoly::zero();
                for (j, wj) in w.iter().enumerate() {
                    if !wj.is_zero() {
                        acc = acc.add(&b.get(i, j).mul_scalar(wj));
                    }
                }
                let expected = one_minus_u
                    .mul_scalar(&(rat_int(eigen_sign) * &w[i]));
                acc == expected
            })
        })
    };
    let verified = check_family(&plus_family, 1) && check_family(&minus_family, -1);

    debug_assert_eq!(plus_family.len(), n_e + 1 - g.n_vertices());
    BumpEigenvectors {
        plus_family,
        minus_family,
        verified,
    }
}

/// Numeric cross-check of the closed-form singular-value multiset
/// `{|d_v + u - 1|} ∪ {|1-u| × (2n_E - n_V)}` against an SVD of the
/// deformed edge operator.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularValuesVerdict {
    pub holds: bool,
    pub max_gap: f64,
}

pub fn singular_values_check(g: &Digraph, u0: &Rational, tol: f64) -> SingularValuesVerdict {
    let mats = GraphMatrices::build(g);
    let n2 = g.n_directed();

    let mut exact: Vec<f64> = g
        .degrees()
        .iter()
        .map(|&d| rational_to_f64(&(u0 + rat_int(d as i64 - 1)).abs()))
        .collect();
    let unit = rational_to_f64(&(rat_int(1) - u0).abs());
    for _ in 0..(n2 - g.n_vertices()) {
        exact.push(unit);
    }
    exact.sort_by(|a, b| b.partial_cmp(a).unwrap());

    let u0_f = rational_to_f64(u0);
    let b = nalgebra::DMatrix::from_fn(n2, n2, |i, j| {
        rational_to_f64(mats.edge_adjacency.get(i, j)) + u0_f * rational_to_f64(mats.bump.get(i, j))
    });
    let mut numeric: Vec<f64> = b.svd(false, false).singular_values.iter().cloned().collect();
    numeric.sort_by(|a, b| b.partial_cmp(a).unwrap());

    let max_gap = exact
        .iter()
        .zip(&numeric)
        .fold(0.0f64, |acc, (e, n)| acc.max((e - n).abs()));
    SingularValuesVerdict {
        holds: exact.len() == numeric.len() && max_gap <= tol,
        max_gap,
    }
}
