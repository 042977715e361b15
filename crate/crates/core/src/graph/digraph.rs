//! Validated connected simple graphs with a canonical directed-edge layout.
//!
//! Undirected edges are normalized to `source < target` and sorted; the
//! directed edge set lists the `n_edges` canonical orientations first,
//! followed by their inverses, so edge `a` and edge `a + n_edges` (mod
//! `2 n_edges`) are always mutual inverses.

use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("graph needs at least one edge")]
    NoEdges,
    #[error("vertex {vertex} out of range (n_vertices = {n_vertices})")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected: vertex {0} is unreachable from vertex 0")]
    Disconnected(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n_vertices: usize,
    /// Canonical undirected edges, each `(a, b)` with `a < b`, sorted.
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
    /// Directed edges leaving each vertex, by directed-edge index.
    out_edges: Vec<Vec<usize>>,
}

/// Validates and canonicalizes a simple connected graph.
pub fn build_digraph(n_vertices: usize, edges: &[(usize, usize)]) -> Result<Digraph, GraphError> {
    if n_vertices < 2 {
        return Err(GraphError::TooFewVertices(n_vertices));
    }
    if edges.is_empty() {
        return Err(GraphError::NoEdges);
    }
    let mut canonical: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &(a, b) in edges {
        for v in [a, b] {
            if v >= n_vertices {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n_vertices,
                });
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        let e = (a.min(b), a.max(b));
        if !seen.insert(e) {
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
        canonical.push(e);
    }
    canonical.sort_unstable();

    let n_edges = canonical.len();
    let mut degrees = vec![0usize; n_vertices];
    let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); n_vertices];
    for (i, &(a, b)) in canonical.iter().enumerate() {
        degrees[a] += 1;
        degrees[b] += 1;
        out_edges[a].push(i); // canonical orientation a -> b
        out_edges[b].push(i + n_edges); // inverse orientation b -> a
    }

    // Connectivity: BFS from vertex 0.
    let mut visited = vec![false; n_vertices];
    let mut queue = std::collections::VecDeque::from([0usize]);
    visited[0] = true;
    while let Some(v) = queue.pop_front() {
        for &e in &out_edges[v] {
            let w = if e < n_edges {
                canonical[e].1
            } else {
                canonical[e - n_edges].0
            };
            if !visited[w] {
                visited[w] = true;
                queue.push_back(w);
            }
        }
    }
    if let Some(unreached) = visited.iter().position(|&v| !v) {
        return Err(GraphError::Disconnected(unreached));
    }

    Ok(Digraph {
        n_vertices,
        edges: canonical,
        degrees,
        out_edges,
    })
}

impl Digraph {
    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn n_directed(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// Source vertex of directed edge `a` (0 <= a < 2 n_edges).
    pub fn source(&self, a: usize) -> usize {
        let n = self.n_edges();
        if a < n {
            self.edges[a].0
        } else {
            self.edges[a - n].1
        }
    }

    /// Target vertex of directed edge `a`.
    pub fn target(&self, a: usize) -> usize {
        let n = self.n_edges();
        if a < n {
            self.edges[a].1
        } else {
            self.edges[a - n].0
        }
    }

    /// The reversed directed edge; an involution without fixed points.
    pub fn inverse(&self, a: usize) -> usize {
        (a + self.n_edges()) % self.n_directed()
    }

    /// Directed edges with the given source vertex.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    /// Directed edges that may follow `a` in an edge sequence (all edges
    /// leaving `target(a)`, including the inverse of `a`).
    pub fn successors(&self, a: usize) -> &[usize] {
        &self.out_edges[self.target(a)]
    }
}
