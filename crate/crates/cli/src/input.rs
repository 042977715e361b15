//! Graph ingestion: builtin names, edge-list text files, and structured
//! JSON documents.

use serde::Deserialize;
use thiserror::Error;
use zeta_core::corpus;
use zeta_core::graph::{build_digraph, Digraph, GraphError};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("unknown builtin graph '{0}'")]
    UnknownBuiltin(String),
    #[error("{path}:{line}: expected 'a b' with integer vertex ids, found '{text}'")]
    EdgeListParse {
        path: String,
        line: usize,
        text: String,
    },
    #[error("{0}: invalid graph document: {1}")]
    Json(String, #[source] serde_json::Error),
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
}

#[derive(Deserialize)]
struct GraphDoc {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
}

/// Loads a graph from `builtin:<name>` or from a file path. Files opening
/// with `{` parse as a JSON document, anything else as edge-list text.
pub fn load_graph(spec: &str) -> Result<Digraph, InputError> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return corpus::builtin(name).ok_or_else(|| InputError::UnknownBuiltin(name.to_string()));
    }
    let text = std::fs::read_to_string(spec).map_err(|source| InputError::Io {
        path: spec.to_string(),
        source,
    })?;
    if text.trim_start().starts_with('{') {
        let doc: GraphDoc = serde_json::from_str(&text)
            .map_err(|e| InputError::Json(spec.to_string(), e))?;
        return Ok(build_digraph(doc.n_vertices, &doc.edges)?);
    }
    parse_edge_list(spec, &text)
}

fn parse_edge_list(path: &str, text: &str) -> Result<Digraph, InputError> {
    let mut edges = Vec::new();
    let mut max_vertex = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let parse_err = || InputError::EdgeListParse {
            path: path.to_string(),
            line: idx + 1,
            text: raw.trim().to_string(),
        };
        let a: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(parse_err)?;
        let b: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(parse_err)?;
        if parts.next().is_some() {
            return Err(parse_err());
        }
        max_vertex = max_vertex.max(a).max(b);
        edges.push((a, b));
    }
    Ok(build_digraph(max_vertex + 1, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_and_edge_list_agree() {
        let g = load_graph("builtin:C3").unwrap();
        assert_eq!((g.n_vertices(), g.n_edges()), (3, 3));
        assert!(matches!(
            load_graph("builtin:nope"),
            Err(InputError::UnknownBuiltin(_))
        ));
    }

    #[test]
    fn edge_list_text_parses_with_comments() {
        let g = parse_edge_list("t", "# triangle\n0 1\n1 2 # back\n\n0 2\n").unwrap();
        assert_eq!((g.n_vertices(), g.n_edges()), (3, 3));
        let err = parse_edge_list("t", "0 1\n1 x").unwrap_err();
        assert!(matches!(err, InputError::EdgeListParse { line: 2, .. }));
    }
}
