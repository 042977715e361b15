//! Matrices attached to a graph: adjacency, Laplacians, incidence matrices,
//! and the directed-edge operators driving the zeta determinant expressions.
//!
//! Numeric (integer-entry) matrices are stored eagerly as `RatMatrix`; the
//! polynomial deformations in `u` (and `q`) are built on demand as
//! `PolyMatrix`.

use crate::algebra::{rat_int, BiPoly, PolyMatrix, RatMatrix, UniPoly};
use crate::graph::Digraph;

/// `(1-u)(d - (1-u))` as a polynomial in `u`, the diagonal deformation
/// attached to a vertex (or edge target) of degree `d`.
fn deform_entry(d: usize) -> BiPoly {
    let one_minus_u = UniPoly::from_i64(&[1, -1]);
    let shifted = UniPoly::from_i64(&[d as i64 - 1, 1]);
    BiPoly::from_u_poly(&one_minus_u.mul(&shifted))
}

#[derive(Clone, Debug)]
pub struct GraphMatrices {
    /// Adjacency matrix, `n_V x n_V`, symmetric 0/1 with zero diagonal.
    pub adjacency: RatMatrix,
    /// Diagonal degree matrix `D`.
    pub degree: RatMatrix,
    /// Graph Laplacian `D - A`.
    pub laplacian: RatMatrix,
    /// Signless Laplacian `D + A`.
    pub signless_laplacian: RatMatrix,
    /// Signed incidence matrix, `n_E x n_V`: +1 at the target of the
    /// canonical orientation, -1 at the source.
    pub incidence: RatMatrix,
    /// Unsigned (0,1)-incidence matrix, `n_E x n_V`.
    pub unsigned_incidence: RatMatrix,
    /// Edge adjacency matrix `W`, `2n_E x 2n_E`: `W[a][b] = 1` iff `b`
    /// continues `a` head-to-tail and is not its reversal.
    pub edge_adjacency: RatMatrix,
    /// Bump matrix `J`: the permutation pairing each directed edge with its
    /// reversal.
    pub bump: RatMatrix,
    degrees: Vec<usize>,
    target_degrees: Vec<usize>,
}

impl GraphMatrices {
    pub fn build(g: &Digraph) -> Self {
        let n = g.n_vertices();
        let m2 = g.n_directed();

        let mut adjacency = RatMatrix::zeros(n, n);
        for &(a, b) in g.edges() {
            adjacency.set(a, b, rat_int(1));
            adjacency.set(b, a, rat_int(1));
        }
        let degree = RatMatrix::from_fn(n, n, |i, j| {
            if i == j {
                rat_int(g.degrees()[i] as i64)
            } else {
                rat_int(0)
            }
        });
        let laplacian = degree.sub(&adjacency);
        let signless_laplacian = degree.add(&adjacency);

        let mut incidence = RatMatrix::zeros(g.n_edges(), n);
        let mut unsigned_incidence = RatMatrix::zeros(g.n_edges(), n);
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            incidence.set(e, a, rat_int(-1));
            incidence.set(e, b, rat_int(1));
            unsigned_incidence.set(e, a, rat_int(1));
            unsigned_incidence.set(e, b, rat_int(1));
        }

        let mut edge_adjacency = RatMatrix::zeros(m2, m2);
        let mut bump = RatMatrix::zeros(m2, m2);
        for a in 0..m2 {
            bump.set(a, g.inverse(a), rat_int(1));
            for &b in g.successors(a) {
                if b != g.inverse(a) {
                    edge_adjacency.set(a, b, rat_int(1));
                }
            }
        }

        let target_degrees = (0..m2).map(|a| g.degrees()[g.target(a)]).collect();

        GraphMatrices {
            adjacency,
            degree,
            laplacian,
            signless_laplacian,
            incidence,
            unsigned_incidence,
            edge_adjacency,
            bump,
            degrees: g.degrees().to_vec(),
            target_degrees,
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.degrees.len()
    }

    pub fn n_directed(&self) -> usize {
        self.target_degrees.len()
    }

    /// Diagonal deformation `Q_u = (1-u)(D - (1-u))`, entries polynomials
    /// in `u`.
    pub fn vertex_deform(&self) -> PolyMatrix {
        let n = self.n_vertices();
        let mut m = PolyMatrix::zeros(n, n);
        for (v, &d) in self.degrees.iter().enumerate() {
            m.set(v, v, deform_entry(d));
        }
        m
    }

    /// `Sigma = 1 - qA + q^2 Q_u`, the matrix whose determinant gives the
    /// vertex expression of the zeta function.
    pub fn sigma(&self) -> PolyMatrix {
        let n = self.n_vertices();
        let q = BiPoly::var_q();
        let q2 = q.mul(&q);
        let mut m = PolyMatrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                if self.adjacency.get(i, j) != &rat_int(0) {
                    let cur = m.get(i, j).sub(&q);
                    m.set(i, j, cur);
                }
            }
            let cur = m.get(i, i).add(&q2.mul(&deform_entry(self.degrees[i])));
            m.set(i, i, cur);
        }
        m
    }

    /// Deformed edge operator `B_u = W + uJ`, entries in `{0, 1, u}`.
    pub fn deformed_edge(&self) -> PolyMatrix {
        let m2 = self.n_directed();
        let u = BiPoly::var_u();
        let mut m = PolyMatrix::zeros(m2, m2);
        for i in 0..m2 {
            for j in 0..m2 {
                if self.edge_adjacency.get(i, j) != &rat_int(0) {
                    m.set(i, j, BiPoly::one());
                } else if self.bump.get(i, j) != &rat_int(0) {
                    m.set(i, j, u.clone());
                }
            }
        }
        m
    }

    /// Diagonal deformation on directed edges: entry `(1-u)(deg t(e) - (1-u))`
    /// at edge `e`. Inverts the deformed edge operator via the closed-form
    /// inverse `((edge deform)^{-1}(W+J) - (1-u)^{-1}J)^T`.
    pub fn edge_deform(&self) -> PolyMatrix {
        let m2 = self.n_directed();
        let mut m = PolyMatrix::zeros(m2, m2);
        for (a, &d) in self.target_degrees.iter().enumerate() {
            m.set(a, a, deform_entry(d));
        }
        m
    }

    /// Per-edge target degrees (diagonal of the edge degree matrix).
    pub fn target_degrees(&self) -> &[usize] {
        &self.target_degrees
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Rational};
    use crate::graph::build_digraph;

    fn p2() -> Digraph {
        build_digraph(2, &[(0, 1)]).unwrap()
    }

    fn p3() -> Digraph {
        build_digraph(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn c3() -> Digraph {
        build_digraph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn k4() -> Digraph {
        build_digraph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn p2_edge_operators() {
        let m = GraphMatrices::build(&p2());
        // single edge: no head-to-tail continuation other than the reversal
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m.edge_adjacency.get(i, j), &rat_int(0));
            }
        }
        assert_eq!(m.bump.get(0, 1), &rat_int(1));
        assert_eq!(m.bump.get(1, 0), &rat_int(1));
        let b = m.deformed_edge();
        assert_eq!(b.get(0, 1), &BiPoly::var_u());
        assert_eq!(b.get(0, 0), &BiPoly::zero());
    }

    #[test]
    fn c3_edge_adjacency_trace_cubed() {
        // two oriented triangles, each contributing 3 closed length-3 walks
        let m = GraphMatrices::build(&c3());
        let w = &m.edge_adjacency;
        let w3 = w.mul(w).mul(w);
        let trace: Rational = (0..6).map(|i| w3.get(i, i).clone()).sum();
        assert_eq!(trace, rat_int(6));
    }

    #[test]
    fn k4_edge_adjacency_row_sums() {
        // degree of every target is 3, so each row of W sums to 2
        let m = GraphMatrices::build(&k4());
        for i in 0..12 {
            let sum: Rational = (0..12).map(|j| m.edge_adjacency.get(i, j).clone()).sum();
            assert_eq!(sum, rat_int(2));
        }
    }

    #[test]
    fn bump_is_symmetric_involution() {
        let m = GraphMatrices::build(&k4());
        let j2 = m.bump.mul(&m.bump);
        assert_eq!(j2, RatMatrix::identity(12));
        assert_eq!(m.bump.transpose(), m.bump);
        // W has zero entries against each edge's reversal
        for a in 0..12 {
            for b in 0..12 {
                if m.bump.get(a, b) == &rat_int(1) {
                    assert_eq!(m.edge_adjacency.get(a, b), &rat_int(0));
                }
            }
        }
    }

    #[test]
    fn incidence_products_give_laplacians() {
        for g in [p3(), c3(), k4()] {
            let m = GraphMatrices::build(&g);
            let lt_l = m.incidence.transpose().mul(&m.incidence);
            assert_eq!(lt_l, m.laplacian);
            let ut_u = m.unsigned_incidence.transpose().mul(&m.unsigned_incidence);
            assert_eq!(ut_u, m.signless_laplacian);
        }
    }

    #[test]
    fn laplacian_row_sums_vanish() {
        let m = GraphMatrices::build(&k4());
        for i in 0..4 {
            let sum: Rational = (0..4).map(|j| m.laplacian.get(i, j).clone()).sum();
            assert_eq!(sum, rat_int(0));
        }
    }

    #[test]
    fn degree_is_diagonal_of_adjacency_squared() {
        for g in [p3(), c3(), k4()] {
            let m = GraphMatrices::build(&g);
            let a2 = m.adjacency.mul(&m.adjacency);
            for v in 0..g.n_vertices() {
                assert_eq!(a2.get(v, v), m.degree.get(v, v));
            }
        }
    }

    #[test]
    fn sigma_at_critical_point_is_scaled_laplacian() {
        // at q = (1-u)^{-1} with u = 1/2: Sigma = Delta / (1-u) = 2 Delta
        let g = c3();
        let m = GraphMatrices::build(&g);
        let sigma = m.sigma();
        let u0 = rat(1, 2);
        let q0 = rat_int(2);
        for i in 0..3 {
            for j in 0..3 {
                let val = sigma.get(i, j).eval(&q0, &u0);
                let expect = m.laplacian.get(i, j) * rat_int(2);
                assert_eq!(val, expect);
            }
        }
    }

    #[test]
    fn edge_deform_uses_target_degrees() {
        let g = p3();
        let m = GraphMatrices::build(&g);
        // directed edges: 0->1, 1->2, 1->0, 2->1 with target degrees 2,1,1,2
        assert_eq!(m.target_degrees(), &[2, 1, 1, 2]);
        let d = m.edge_deform();
        let u0 = rat(1, 3);
        // (1-u)(d_t - (1-u)) at u=1/3: d_t=2 -> (2/3)(4/3)=8/9, d_t=1 -> (2/3)(1/3)=2/9
        assert_eq!(d.get(0, 0).eval(&rat_int(0), &u0), rat(8, 9));
        assert_eq!(d.get(1, 1).eval(&rat_int(0), &u0), rat(2, 9));
    }
}
