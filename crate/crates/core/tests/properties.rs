//! Randomized invariants: exact linear algebra laws, power-series
//! roundtrips, graph-matrix structure, strip bounds, the dual determinant
//! routes, and the cycle oracle, on generated connected graphs.

use num_traits::Signed;
use proptest::prelude::*;
use zeta_core::algebra::{
    exp_series, inverse_series, log_inverse_series, rat, rat_int, solve_on_complement, BiPoly,
    PolyMatrix, RatMatrix, Rational, UniPoly,
};
use zeta_core::graph::{build_digraph, Digraph, GraphInfo, GraphMatrices};
use zeta_core::oracle::{trace_series_matrix, trace_series_walks};
use zeta_core::poles::{critical_strip_bounds, Bound};
use zeta_core::zeta::check_expressions_agree;

/// Connected simple graph on 3..=n_max vertices: a random spanning tree
/// (vertex i attaches below itself) plus a random subset of chords.
fn connected_graph(n_max: usize) -> impl Strategy<Value = Digraph> {
    (3usize..=n_max)
        .prop_flat_map(|n| {
            let parents = proptest::collection::vec(any::<u32>(), n - 1);
            let chords = proptest::collection::vec(proptest::bool::weighted(0.3), n * (n - 1) / 2);
            (Just(n), parents, chords)
        })
        .prop_map(|(n, parents, chords)| {
            let mut edges = Vec::new();
            for (i, r) in parents.iter().enumerate() {
                let child = i + 1;
                edges.push((*r as usize % child, child));
            }
            let mut k = 0;
            for a in 0..n {
                for b in (a + 1)..n {
                    if chords[k] && !edges.contains(&(a, b)) {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            build_digraph(n, &edges).expect("generated graph is simple and connected")
        })
}

/// Random tree: bipartite by construction.
fn random_tree(n_max: usize) -> impl Strategy<Value = Digraph> {
    (3usize..=n_max)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<u32>(), n - 1)))
        .prop_map(|(n, parents)| {
            let edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, r)| (*r as usize % (i + 1), i + 1))
                .collect();
            build_digraph(n, &edges).expect("trees are simple and connected")
        })
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

/// Dense polynomial a + b q + c u + d q u with small integer coefficients.
fn small_bipoly() -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec(-3i64..=3, 4).prop_map(|c| {
        let mut p = BiPoly::constant(rat_int(c[0]));
        p = p.add(&BiPoly::term(rat_int(c[1]), 1, 0));
        p = p.add(&BiPoly::term(rat_int(c[2]), 0, 1));
        p.add(&BiPoly::term(rat_int(c[3]), 1, 1))
    })
}

fn poly_matrix(n: usize) -> impl Strategy<Value = PolyMatrix> {
    proptest::collection::vec(small_bipoly(), n * n)
        .prop_map(move |cells| PolyMatrix::from_fn(n, n, |i, j| cells[i * n + j].clone()))
}

/// Cofactor expansion along the first row, the naive reference determinant.
fn cofactor_det(m: &PolyMatrix) -> BiPoly {
    let n = m.rows();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = BiPoly::zero();
    for j in 0..n {
        let term = m.get(0, j).mul(&cofactor_det(&m.minor(0, j)));
        if j % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fraction_free_det_matches_cofactor_expansion(m in (1usize..=4).prop_flat_map(poly_matrix)) {
        prop_assert!(m.det_fraction_free().sub(&cofactor_det(&m)).is_zero());
    }

    #[test]
    fn adjugate_law_holds(m in (1usize..=3).prop_flat_map(poly_matrix)) {
        let det = m.det_fraction_free();
        let prod = m.mul(&m.adjugate());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let expect = if i == j { det.clone() } else { BiPoly::zero() };
                prop_assert!(prod.get(i, j).sub(&expect).is_zero());
            }
        }
    }

    #[test]
    fn exp_of_log_inverse_is_inverse_series(
        a in -3i64..=3, b in -3i64..=3, c in -3i64..=3,
    ) {
        // p has constant term 1, so both series exist
        let p = BiPoly::one()
            .add(&BiPoly::term(rat_int(a), 1, 0))
            .add(&BiPoly::term(rat_int(b), 1, 1))
            .add(&BiPoly::term(rat_int(c), 2, 0));
        let lmax = 7;
        let log = log_inverse_series(&p, lmax).unwrap();
        let direct = inverse_series(&p, lmax).unwrap();
        let exp = exp_series(&log);
        for m in 0..=lmax {
            prop_assert_eq!(exp.coeff(m), direct.coeff(m));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn laplacian_solver_inverts_on_complement(g in connected_graph(7), seed in proptest::collection::vec(-5i64..=5, 7)) {
        let n = g.n_vertices();
        let lap = &GraphMatrices::build(&g).laplacian;
        // zero-sum right-hand side
        let mut b: Vec<Rational> = (0..n - 1).map(|i| rat_int(seed[i])).collect();
        let total: Rational = b.iter().cloned().sum();
        b.push(-total);
        let x = solve_on_complement(lap, &b).unwrap();
        let sum_x: Rational = x.iter().cloned().sum();
        prop_assert_eq!(sum_x, rat_int(0));
        prop_assert_eq!(lap.mul_vec(&x), b);
    }

    #[test]
    fn incidence_ranks_detect_bipartiteness(g in connected_graph(7)) {
        let n = g.n_vertices();
        let m = GraphMatrices::build(&g);
        let info = GraphInfo::analyze(&g);
        prop_assert_eq!(m.incidence.rank(), n - 1);
        let expected = if info.bipartition.is_some() { n - 1 } else { n };
        prop_assert_eq!(m.unsigned_incidence.rank(), expected);
        if let Some(side) = &info.bipartition {
            for &(a, b) in g.edges() {
                prop_assert_ne!(side[a], side[b]);
            }
        }
    }

    #[test]
    fn spanning_tree_count_matches_laplacian_cofactor(g in connected_graph(7)) {
        let info = GraphInfo::analyze(&g);
        let lap = &GraphMatrices::build(&g).laplacian;
        let n = g.n_vertices();
        let minor = RatMatrix::from_fn(n - 1, n - 1, |i, j| lap.get(i + 1, j + 1).clone());
        prop_assert_eq!(
            Rational::from(info.spanning_tree_count.clone()),
            minor.det()
        );
    }

    #[test]
    fn strip_bounds_match_singular_value_extremes(g in connected_graph(7), u0 in small_rational()) {
        prop_assume!(u0 != rat_int(1));
        let b = critical_strip_bounds(&g, &u0);
        let mut s: Vec<Rational> = g
            .degrees()
            .iter()
            .map(|&d| (&u0 + rat_int(d as i64 - 1)).abs())
            .collect();
        let unit = (rat_int(1) - &u0).abs();
        for _ in 0..(g.n_directed() - g.n_vertices()) {
            s.push(unit.clone());
        }
        prop_assert_eq!(b.inner, Bound::from_distance(s.iter().max().unwrap().clone()));
        prop_assert_eq!(b.outer, Bound::from_distance(s.iter().min().unwrap().clone()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn determinant_routes_agree_on_random_graphs(g in connected_graph(5)) {
        prop_assert!(check_expressions_agree(&g).holds);
    }

    #[test]
    fn walk_counts_match_matrix_traces(g in connected_graph(5)) {
        let by_matrix = trace_series_matrix(&g, 5);
        let by_walks = trace_series_walks(&g, 5, 1e8).unwrap();
        for m in 1..=5 {
            prop_assert_eq!(by_matrix.trace(m), by_walks.trace(m));
        }
    }

    #[test]
    fn undeformed_traces_match_full_cycle_counts(g in connected_graph(6)) {
        // at u = 1 every backtracking penalty disappears: traces count all
        // closed walks in the directed edge graph, Tr((W + J)^m)
        let series = trace_series_matrix(&g, 5);
        let m = GraphMatrices::build(&g);
        let full = m.edge_adjacency.add(&m.bump);
        let mut power = full.clone();
        for step in 1..=5 {
            let trace: Rational = (0..power.rows()).map(|i| power.get(i, i).clone()).sum();
            prop_assert_eq!(series.trace(step).eval(&rat_int(1)), trace);
            power = power.mul(&full);
        }
    }

    #[test]
    fn bipartite_graphs_have_no_odd_cycles(g in random_tree(7)) {
        let series = trace_series_matrix(&g, 7);
        for m in [1, 3, 5, 7] {
            prop_assert!(series.trace(m).is_zero());
        }
    }

    #[test]
    fn edge_route_has_unit_constant_term(g in connected_graph(5)) {
        let z = zeta_core::zeta::edge_zeta_inverse(&g);
        let at_zero = z.substitute_q(&rat_int(0));
        prop_assert_eq!(at_zero, UniPoly::from_i64(&[1]));
    }
}
