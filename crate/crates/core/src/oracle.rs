//! Brute-force verification of the zeta function from its cycle-counting
//! definition, independent of the determinant machinery: closed-walk trace
//! series (two ways), primitive-cycle Euler product truncation, and the
//! comparison of both against the edge determinant.
//!
//! A step onto the previous edge's inverse is a bump and weighs `u`; any
//! other composable step weighs 1. Bump counting is cyclic: the wrap-around
//! step from the last edge back to the first counts too.

use crate::algebra::{
    inverse_series, log_inverse_series, rat, rat_int, BiPoly, TruncatedSeries, UniPoly,
};
use crate::graph::{Digraph, GraphMatrices};
use crate::zeta::edge_zeta_inverse;
use thiserror::Error;

pub const DEFAULT_BUDGET: f64 = 1e8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("estimated walk count {estimate:.3e} exceeds budget {budget:.3e}")]
    BudgetExceeded { estimate: f64, budget: f64 },
}

/// Trace polynomials `T_m(u)` for `m = 1 ..= l_max`: each counts cyclic
/// edge sequences of length m weighted by `u^{bumps}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkSeries {
    pub l_max: usize,
    /// `traces[m-1]` is `T_m`
    pub traces: Vec<UniPoly>,
}

impl WalkSeries {
    pub fn trace(&self, m: usize) -> &UniPoly {
        assert!((1..=self.l_max).contains(&m));
        &self.traces[m - 1]
    }
}

/// `T_m = Tr(B_u^m)` by exact symbolic powers of the deformed edge
/// operator.
pub fn trace_series_matrix(g: &Digraph, l_max: usize) -> WalkSeries {
    assert!(l_max >= 1);
    let b = GraphMatrices::build(g).deformed_edge();
    let n2 = g.n_directed();
    let mut traces = Vec::with_capacity(l_max);
    let mut power = b.clone();
    for m in 1..=l_max {
        if m > 1 {
            power = power.mul(&b);
        }
        let mut tr = BiPoly::zero();
        for i in 0..n2 {
            tr = tr.add(power.get(i, i));
        }
        traces.push(tr.substitute_q(&rat_int(0)));
    }
    WalkSeries { l_max, traces }
}

fn budget_guard(g: &Digraph, l_max: usize, budget: f64) -> Result<(), OracleError> {
    let estimate = (g.max_degree() as f64).powi(l_max as i32) * g.n_directed() as f64;
    if estimate > budget {
        return Err(OracleError::BudgetExceeded { estimate, budget });
    }
    Ok(())
}

/// Same trace polynomials by explicit depth-first enumeration of closed
/// edge sequences, no matrix arithmetic involved.
pub fn trace_series_walks(g: &Digraph, l_max: usize, budget: f64) -> Result<WalkSeries, OracleError> {
    assert!(l_max >= 1);
    budget_guard(g, l_max, budget)?;

    // counts[m][b] = number of closed length-m sequences with b bumps
    let mut counts = vec![vec![0u64; l_max + 2]; l_max + 1];
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for start in 0..g.n_directed() {
        stack.push((start, 1, 0));
        while let Some((edge, depth, bumps)) = stack.pop() {
            if g.target(edge) == g.source(start) {
                let closing = (start == g.inverse(edge)) as usize;
                counts[depth][bumps + closing] += 1;
            }
            if depth == l_max {
                continue;
            }
            for &next in g.successors(edge) {
                let nb = bumps + (next == g.inverse(edge)) as usize;
                stack.push((next, depth + 1, nb));
            }
        }
    }

    let traces = (1..=l_max)
        .map(|m| {
            UniPoly::from_coeffs(
                counts[m][..=m]
                    .iter()
                    .map(|&c| rat_int(c as i64))
                    .collect(),
            )
        })
        .collect();
    Ok(WalkSeries { l_max, traces })
}

/// A rotation class of primitive cyclic edge sequences, identified by its
/// lexicographically least rotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleClass {
    pub representative: Vec<usize>,
    pub length: usize,
    pub bumps: usize,
}

/// Primitive cycle classes up to length `l_max` and the Euler product
/// `∏ (1 - q^{|C|} u^{b(C)})^{-1}` truncated to q-order `l_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTruncation {
    pub l_max: usize,
    pub classes: Vec<CycleClass>,
    pub series: TruncatedSeries,
}

fn is_least_rotation(seq: &[usize]) -> bool {
    let m = seq.len();
    (1..m).all(|r| (0..m).map(|i| seq[(i + r) % m]).ge(seq.iter().copied()))
}

fn is_primitive(seq: &[usize]) -> bool {
    let m = seq.len();
    for p in 1..m {
        if m.is_multiple_of(p) && (0..m).all(|i| seq[i] == seq[(i + p) % m]) {
            return false;
        }
    }
    true
}

fn cyclic_bumps(g: &Digraph, seq: &[usize]) -> usize {
    let m = seq.len();
    (0..m)
        .filter(|&i| seq[(i + 1) % m] == g.inverse(seq[i]))
        .count()
}

/// Enumerates representatives of primitive cycle classes by depth-first
/// search. Only sequences that are their own least rotation survive, so
/// any branch opening with an edge smaller than the start is pruned.
pub fn euler_truncation(g: &Digraph, l_max: usize, budget: f64) -> Result<EulerTruncation, OracleError> {
    assert!(l_max >= 1);
    budget_guard(g, l_max, budget)?;

    let mut classes: Vec<CycleClass> = Vec::new();
    let mut path: Vec<usize> = Vec::new();

    fn dfs(
        g: &Digraph,
        l_max: usize,
        path: &mut Vec<usize>,
        classes: &mut Vec<CycleClass>,
    ) {
        let last = *path.last().unwrap();
        let start = path[0];
        if g.target(last) == g.source(start)
            && is_least_rotation(path)
            && is_primitive(path)
        {
            classes.push(CycleClass {
                representative: path.clone(),
                length: path.len(),
                bumps: cyclic_bumps(g, path),
            });
        }
        if path.len() == l_max {
            return;
        }
        for &next in g.successors(last) {
            if next < start {
                continue;
            }
            path.push(next);
            dfs(g, l_max, path, classes);
            path.pop();
        }
    }

    for start in 0..g.n_directed() {
        path.push(start);
        dfs(g, l_max, &mut path, &mut classes);
        path.pop();
    }

    classes.sort_by(|a, b| (a.length, &a.representative).cmp(&(b.length, &b.representative)));
    let mut series = TruncatedSeries::one(l_max);
    for c in &classes {
        series.mul_geometric(c.length, c.bumps);
    }
    Ok(EulerTruncation { l_max, classes, series })
}

/// Outcome of checking the cycle oracle against the edge determinant, as
/// exact polynomial identities in u.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleComparison {
    pub l_max: usize,
    /// matrix traces == walk-enumeration traces
    pub traces_agree: bool,
    /// m-th coefficient of log(1/det) == T_m/m
    pub log_matches: bool,
    /// Euler product truncation == formal inverse of the determinant
    pub euler_matches: bool,
}

impl OracleComparison {
    pub fn holds(&self) -> bool {
        self.traces_agree && self.log_matches && self.euler_matches
    }
}

pub fn compare_to_determinant(
    g: &Digraph,
    l_max: usize,
    budget: f64,
) -> Result<OracleComparison, OracleError> {
    let matrix = trace_series_matrix(g, l_max);
    let walks = trace_series_walks(g, l_max, budget)?;
    let traces_agree = matrix == walks;

    let p = edge_zeta_inverse(g);
    let log = log_inverse_series(&p, l_max).expect("edge determinant has constant term 1");
    let log_matches = (1..=l_max)
        .all(|m| log.coeff(m) == &matrix.trace(m).mul_scalar(&rat(1, m as i64)));

    let euler = euler_truncation(g, l_max, budget)?;
    let inv = inverse_series(&p, l_max).expect("edge determinant has constant term 1");
    let euler_matches = euler.series == inv;

    Ok(OracleComparison {
        l_max,
        traces_agree,
        log_matches,
        euler_matches,
    })
}
