//! Named graph constructors and the standard test corpus.

use crate::graph::{build_digraph, Digraph};

/// Cycle on n >= 3 vertices.
pub fn cycle(n: usize) -> Digraph {
    assert!(n >= 3);
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build_digraph(n, &edges).expect("cycle is simple and connected")
}

/// Path on n >= 2 vertices.
pub fn path(n: usize) -> Digraph {
    assert!(n >= 2);
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    build_digraph(n, &edges).expect("path is simple and connected")
}

/// Complete graph on n >= 2 vertices.
pub fn complete(n: usize) -> Digraph {
    assert!(n >= 2);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((i, j));
        }
    }
    build_digraph(n, &edges).expect("complete graph is simple and connected")
}

/// Complete bipartite graph K_{a,b} with parts {0..a} and {a..a+b}.
pub fn complete_bipartite(a: usize, b: usize) -> Digraph {
    assert!(a >= 1 && b >= 1);
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    build_digraph(a + b, &edges).expect("complete bipartite graph is simple and connected")
}

/// Star with k >= 1 leaves around vertex 0 (= K_{1,k}).
pub fn star(k: usize) -> Digraph {
    complete_bipartite(1, k)
}

/// The Petersen graph: outer 5-cycle, spokes, inner pentagram.
pub fn petersen() -> Digraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build_digraph(10, &edges).expect("Petersen graph is simple and connected")
}

/// Looks up a named builtin graph, case-insensitively.
pub fn builtin(name: &str) -> Option<Digraph> {
    match name.to_ascii_lowercase().as_str() {
        "c3" => Some(cycle(3)),
        "c4" => Some(cycle(4)),
        "c5" => Some(cycle(5)),
        "c6" => Some(cycle(6)),
        "p2" => Some(path(2)),
        "p3" => Some(path(3)),
        "k4" => Some(complete(4)),
        "k5" => Some(complete(5)),
        "k33" => Some(complete_bipartite(3, 3)),
        "k13" => Some(star(3)),
        "petersen" => Some(petersen()),
        _ => None,
    }
}

/// The full builtin corpus in a fixed order.
pub fn corpus() -> Vec<(&'static str, Digraph)> {
    [
        "C3", "C4", "C5", "C6", "P2", "P3", "K4", "K5", "K33", "K13", "Petersen",
    ]
    .into_iter()
    .map(|name| (name, builtin(name).expect("corpus names are builtin")))
    .collect()
}
