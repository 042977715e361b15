//! Report assembly and deterministic rendering.
//!
//! JSON output serializes through `serde_json` maps (sorted keys) so that
//! identical inputs produce byte-identical bytes; text output is assembled
//! line by line in a fixed order.

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use zeta_core::algebra::{rat_int, UniPoly};
use zeta_core::graph::Digraph;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub payload: Value,
    pub text: Vec<String>,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "tool": "graph-zeta",
                    "tool_version": env!("CARGO_PKG_VERSION"),
                    "command": self.command,
                    "inputs": self.inputs,
                    "result": self.payload,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = self.text.join("\n");
                s.push('\n');
                s
            }
        }
    }
}

/// FNV-1a over the vertex count and canonical edge list; identifies the
/// graph independent of its input syntax.
pub fn fingerprint(g: &Digraph) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |x: u64| {
        for byte in x.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(g.n_vertices() as u64);
    for e in 0..g.n_edges() {
        eat(g.source(e) as u64);
        eat(g.target(e) as u64);
    }
    format!("{h:016x}")
}

pub fn graph_inputs(label: &str, g: &Digraph) -> Value {
    json!({
        "graph": label,
        "fingerprint": fingerprint(g),
        "n_vertices": g.n_vertices(),
        "n_edges": g.n_edges(),
    })
}

/// Exact factorization display: square-free factors normalized to primitive
/// integer coefficients with positive constant term, sorted by degree then
/// lexicographically, exponents folded as `(...)^k`.
pub fn factor_display(p: &UniPoly, var: &str) -> String {
    let Some(degree) = p.degree() else {
        return "0".to_string();
    };
    if degree == 0 {
        return p.render(var);
    }
    let mut factors: Vec<(usize, String, u32)> = Vec::new();
    let mut scalar = p.leading_coeff();
    for (factor, mult) in p.squarefree_decomposition() {
        let d = factor.degree().expect("square-free factors are nonzero");
        if d == 0 {
            continue;
        }
        let mut f = factor.primitive_integer();
        let constant = f.coeff(0);
        let flip = if constant.is_negative() {
            true
        } else if constant.is_zero() {
            f.leading_coeff().is_negative()
        } else {
            false
        };
        if flip {
            f = f.mul_scalar(&rat_int(-1));
        }
        for _ in 0..mult {
            scalar /= f.leading_coeff();
        }
        factors.push((d, f.render(var), mult));
    }
    factors.sort();
    let mut out = String::new();
    if !scalar.is_one() {
        out.push_str(&scalar.to_string());
        out.push_str(" * ");
    }
    for (_, text, mult) in &factors {
        out.push('(');
        out.push_str(text);
        out.push(')');
        if *mult > 1 {
            out.push_str(&format!("^{mult}"));
        }
    }
    out
}

/// Fixed-width float formatting shared by text and JSON payloads.
/// Negative zero is folded into zero so output is reproducible.
pub fn fmt_f64(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.12}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use zeta_core::corpus::builtin;
    use zeta_core::zeta::edge_zeta_inverse;

    #[test]
    fn factorizations_match_known_forms() {
        let c3 = edge_zeta_inverse(&builtin("C3").unwrap()).substitute_u(&rat_int(0));
        assert_eq!(factor_display(&c3, "q"), "(1 - q^3)^2");
        // Square-free parts merge same-multiplicity factors:
        // (1 - q)^3 (1 + q + 2q^2)^3 displays as their product cubed.
        let k4 = edge_zeta_inverse(&builtin("K4").unwrap()).substitute_u(&rat_int(0));
        assert_eq!(
            factor_display(&k4, "q"),
            "(1 + q)^2(1 - 2*q)(1 + q^2 - 2*q^3)^3"
        );
    }

    #[test]
    fn fingerprint_distinguishes_graphs() {
        let a = fingerprint(&builtin("C4").unwrap());
        let b = fingerprint(&builtin("K4").unwrap());
        assert_ne!(a, b);
        assert_eq!(a, fingerprint(&builtin("C4").unwrap()));
    }
}
