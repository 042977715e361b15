//! Structural predicates and counts: regularity, bipartiteness, tree test,
//! spanning-tree count, and the critical bump parameter.

use crate::algebra::{rat, rat_int, RatMatrix, Rational};
use crate::graph::{Digraph, GraphMatrices};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInfo {
    /// `t` such that the graph is (t+1)-regular, when all degrees agree.
    pub regularity: Option<usize>,
    /// Two-coloring with every edge crossing, when one exists.
    pub bipartition: Option<Vec<bool>>,
    pub is_tree: bool,
    /// Number of spanning trees (any cofactor of the Laplacian).
    pub spanning_tree_count: BigInt,
    /// `1 - n_E/n_V`, the bump parameter where the pole at `(1-u)^{-1}`
    /// gains an extra order.
    pub u_star: Rational,
    /// Sorted distinct values of `deg v - 1`.
    pub distinct_degree_offsets: Vec<usize>,
}

impl GraphInfo {
    pub fn analyze(g: &Digraph) -> Self {
        let degrees = g.degrees();
        let regularity = if degrees.iter().all(|&d| d == degrees[0]) {
            Some(degrees[0] - 1)
        } else {
            None
        };

        let bipartition = two_color(g);
        let is_tree = g.n_edges() == g.n_vertices() - 1;
        let spanning_tree_count = laplacian_cofactor(g, 0, 0);
        let u_star = rat_int(1) - rat(g.n_edges() as i64, g.n_vertices() as i64);

        let mut distinct_degree_offsets: Vec<usize> = degrees.iter().map(|&d| d - 1).collect();
        distinct_degree_offsets.sort_unstable();
        distinct_degree_offsets.dedup();

        GraphInfo {
            regularity,
            bipartition,
            is_tree,
            spanning_tree_count,
            u_star,
            distinct_degree_offsets,
        }
    }

    pub fn is_regular(&self) -> bool {
        self.regularity.is_some()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

/// BFS 2-coloring; `None` when an odd cycle obstructs.
fn two_color(g: &Digraph) -> Option<Vec<bool>> {
    let n = g.n_vertices();
    let mut color: Vec<Option<bool>> = vec![None; n];
    color[0] = Some(false);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        let cv = color[v].unwrap();
        for &e in g.out_edges(v) {
            let w = g.target(e);
            match color[w] {
                None => {
                    color[w] = Some(!cv);
                    queue.push_back(w);
                }
                Some(cw) => {
                    if cw == cv {
                        return None;
                    }
                }
            }
        }
    }
    Some(color.into_iter().map(|c| c.unwrap()).collect())
}

/// Cofactor of the Laplacian at (row, col): exact integer determinant of the
/// minor, signed. Every position yields the spanning-tree count.
pub fn laplacian_cofactor(g: &Digraph, row: usize, col: usize) -> BigInt {
    let m = GraphMatrices::build(g);
    let n = g.n_vertices();
    let minor = RatMatrix::from_fn(n - 1, n - 1, |i, j| {
        let si = if i < row { i } else { i + 1 };
        let sj = if j < col { j } else { j + 1 };
        m.laplacian.get(si, sj).clone()
    });
    let sign = if (row + col).is_multiple_of(2) { 1 } else { -1 };
    let det = minor.det() * rat_int(sign);
    debug_assert!(det.is_integer());
    det.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_digraph;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn path_is_tree_with_one_spanning_tree() {
        let g = build_digraph(3, &[(0, 1), (1, 2)]).unwrap();
        let info = GraphInfo::analyze(&g);
        assert!(info.is_tree);
        assert_eq!(info.spanning_tree_count, big(1));
        assert!(info.is_bipartite());
        assert_eq!(info.regularity, None);
        assert_eq!(info.u_star, rat(1, 3));
        assert_eq!(info.distinct_degree_offsets, vec![0, 1]);
    }

    #[test]
    fn square_counts_and_flags() {
        let g = build_digraph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let info = GraphInfo::analyze(&g);
        assert!(!info.is_tree);
        assert_eq!(info.spanning_tree_count, big(4));
        assert!(info.is_bipartite());
        assert_eq!(info.regularity, Some(1));
        assert_eq!(info.u_star, rat_int(0));
    }

    #[test]
    fn complete_four_counts_and_flags() {
        let g = build_digraph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let info = GraphInfo::analyze(&g);
        // Cayley: 4^{4-2} = 16 spanning trees
        assert_eq!(info.spanning_tree_count, big(16));
        assert!(!info.is_bipartite());
        assert_eq!(info.regularity, Some(2));
        assert_eq!(info.u_star, rat(-1, 2));
    }

    #[test]
    fn triangle_flags() {
        let g = build_digraph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let info = GraphInfo::analyze(&g);
        assert_eq!(info.spanning_tree_count, big(3));
        assert!(!info.is_bipartite());
        assert_eq!(info.regularity, Some(1));
        assert_eq!(info.u_star, rat_int(0));
    }

    #[test]
    fn cofactor_position_independent() {
        let g = build_digraph(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let base = laplacian_cofactor(&g, 0, 0);
        for row in 0..4 {
            for col in 0..4 {
                assert_eq!(laplacian_cofactor(&g, row, col), base);
            }
        }
    }

    #[test]
    fn bipartition_crosses_every_edge() {
        let g = build_digraph(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
            .unwrap();
        let info = GraphInfo::analyze(&g);
        let part = info.bipartition.as_ref().unwrap();
        for &(a, b) in g.edges() {
            assert_ne!(part[a], part[b]);
        }
    }
}
