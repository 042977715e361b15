//! Command-line interface: graph ingestion, zeta computation, identity
//! suites, and pole reports.
//!
//! Exit codes: 0 success (all applicable checks hold), 1 identity violation,
//! 2 input error.

mod checks;
mod input;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use zeta_core::algebra::{parse_rational, Rational};
use zeta_core::graph::{Digraph, GraphInfo};
use zeta_core::poles::{
    mp_condition, poles_numeric, Bound, PoleClass, PoleReport,
};
use zeta_core::zeta::{edge_zeta_inverse, vertex_zeta_inverse};

use checks::{all_hold, run_suite, Suite, SuiteOptions};
use input::load_graph;
use report::{factor_display, fmt_f64, graph_inputs, Format, Report};

#[derive(Parser)]
#[command(
    name = "graph-zeta",
    version,
    about = "Exact Bartholdi/Ihara zeta functions of graphs: two determinant routes, identity suites, pole analysis, and a cycle oracle"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Args)]
struct GraphArg {
    /// Graph source: a file path (edge list or JSON document) or "builtin:<name>"
    #[arg(long)]
    graph: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Edge,
    Vertex,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Expressions,
    #[value(name = "fe-q")]
    FeQ,
    #[value(name = "fe-u")]
    FeU,
    #[value(name = "det-bu")]
    DetBu,
    #[value(name = "bu-inv")]
    BuInv,
    Sigma,
    Oracle,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Expressions => Suite::Expressions,
            SuiteArg::FeQ => Suite::FeQ,
            SuiteArg::FeU => Suite::FeU,
            SuiteArg::DetBu => Suite::DetBu,
            SuiteArg::BuInv => Suite::BuInv,
            SuiteArg::Sigma => Suite::Sigma,
            SuiteArg::Oracle => Suite::Oracle,
        }
    }
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Structural summary: sizes, degrees, flags, spanning trees, u*, and
    /// the Laplacian pseudoinverse condition
    Info {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// The zeta inverse, symbolically in (q, u) or specialized at a
    /// rational u
    Zeta {
        #[command(flatten)]
        graph: GraphArg,
        /// Deformation parameter as a rational "p/q"
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, conflicts_with = "symbolic", required_unless_present = "symbolic")]
        u: Option<Rational>,
        /// Keep u symbolic
        #[arg(long)]
        symbolic: bool,
        /// Which determinant route to display
        #[arg(long, value_enum, default_value_t = FormArg::Edge)]
        form: FormArg,
    },
    /// Identity suites; exit 0 iff every applicable identity holds
    Check {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Override the default evaluation points with one rational u
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        u: Option<Rational>,
        /// Cycle-oracle truncation length
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Cycle-oracle walk budget
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        /// Damage the edge determinant first (negative control)
        #[arg(long, hide = true)]
        debug_corrupt: bool,
    },
    /// Pole locations, strip bounds, exact orders, and the critical-line
    /// verdict
    Poles {
        #[command(flatten)]
        graph: GraphArg,
        /// Deformation parameter as a rational "p/q" (u = 1 is excluded)
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        u: Rational,
        /// Numeric tolerance for clustering and verdicts
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format.into();
    match run(cli.command, format) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, format: Format) -> Result<ExitCode, String> {
    match command {
        Command::Info { graph } => {
            let g = load_graph(&graph.graph).map_err(|e| e.to_string())?;
            let report = cmd_info(&graph.graph, &g);
            print!("{}", report.render(format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Zeta {
            graph,
            u,
            symbolic,
            form,
        } => {
            let g = load_graph(&graph.graph).map_err(|e| e.to_string())?;
            let report = cmd_zeta(&graph.graph, &g, u.as_ref(), symbolic, form);
            print!("{}", report.render(format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            graph,
            suite,
            u,
            max_len,
            budget,
            debug_corrupt,
        } => {
            let g = load_graph(&graph.graph).map_err(|e| e.to_string())?;
            let opts = SuiteOptions {
                u_override: u,
                max_len,
                budget: budget as f64,
                corrupt: debug_corrupt,
            };
            let (report, ok) = cmd_check(&graph.graph, &g, suite.into(), &opts);
            print!("{}", report.render(format));
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Poles { graph, u, tol } => {
            let g = load_graph(&graph.graph).map_err(|e| e.to_string())?;
            let r = poles_numeric(&g, &u, tol).map_err(|e| e.to_string())?;
            let report = cmd_poles(&graph.graph, &g, &r, tol);
            print!("{}", report.render(format));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_info(label: &str, g: &Digraph) -> Report {
    let info = GraphInfo::analyze(g);
    let mp = mp_condition(g);
    let degrees: Vec<usize> = g.degrees().to_vec();

    let payload = json!({
        "n_vertices": g.n_vertices(),
        "n_edges": g.n_edges(),
        "degrees": degrees,
        "regular": info.regularity.is_some(),
        "degree": info.regularity.map(|t| t + 1),
        "bipartite": info.bipartition.is_some(),
        "tree": info.is_tree,
        "spanning_trees": info.spanning_tree_count.to_string(),
        "u_star": info.u_star.to_string(),
        "mp_value": mp.value.to_string(),
        "mp_condition_holds": mp.condition_holds,
    });

    let mut text = vec![
        format!("graph {label}"),
        format!("vertices: {}", g.n_vertices()),
        format!("edges: {}", g.n_edges()),
        format!(
            "degrees: {}",
            degrees
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ),
        match info.regularity {
            Some(t) => format!("regular: yes (degree {})", t + 1),
            None => "regular: no".to_string(),
        },
        format!("bipartite: {}", if info.bipartition.is_some() { "yes" } else { "no" }),
        format!("tree: {}", if info.is_tree { "yes" } else { "no" }),
        format!("spanning trees: {}", info.spanning_tree_count),
        format!("u*: {}", info.u_star),
    ];
    text.push(format!(
        "pseudoinverse form value: {} (condition {})",
        mp.value,
        if mp.condition_holds { "holds" } else { "degenerate" }
    ));

    Report {
        command: "info",
        inputs: graph_inputs(label, g),
        payload,
        text,
    }
}

fn cmd_zeta(
    label: &str,
    g: &Digraph,
    u: Option<&Rational>,
    symbolic: bool,
    form: FormArg,
) -> Report {
    let mut inputs = graph_inputs(label, g);
    inputs["u"] = match u {
        Some(u0) => json!(u0.to_string()),
        None => json!("symbolic"),
    };
    inputs["form"] = json!(match form {
        FormArg::Edge => "edge",
        FormArg::Vertex => "vertex",
    });
    let _ = symbolic;

    let (payload, text) = match (form, u) {
        (FormArg::Edge, None) => {
            let p = edge_zeta_inverse(g);
            let rendered = p.render();
            (
                json!({ "zeta_inverse": rendered }),
                vec![format!("zeta inverse (edge route): {rendered}")],
            )
        }
        (FormArg::Edge, Some(u0)) => {
            let p = edge_zeta_inverse(g).substitute_u(u0);
            let rendered = p.render("q");
            let factored = factor_display(&p, "q");
            (
                json!({ "zeta_inverse": rendered, "factorization": factored }),
                vec![
                    format!("zeta inverse (edge route, u = {u0}): {rendered}"),
                    format!("factorization: {factored}"),
                ],
            )
        }
        (FormArg::Vertex, None) => {
            let v = vertex_zeta_inverse(g).normalized_sign();
            let num = v.num().render();
            let den = v.den().render();
            (
                json!({ "numerator": num, "denominator": den }),
                vec![
                    format!("zeta inverse (vertex route) numerator: {num}"),
                    format!("zeta inverse (vertex route) denominator: {den}"),
                ],
            )
        }
        (FormArg::Vertex, Some(u0)) => {
            let v = vertex_zeta_inverse(g).normalized_sign();
            let num = v.num().substitute_u(u0);
            let den = v.den().substitute_u(u0);
            let num_s = num.render("q");
            let den_s = den.render("q");
            (
                json!({
                    "numerator": num_s,
                    "denominator": den_s,
                    "numerator_factorization": factor_display(&num, "q"),
                }),
                vec![
                    format!("zeta inverse (vertex route, u = {u0}) numerator: {num_s}"),
                    format!("denominator: {den_s}"),
                    format!("numerator factorization: {}", factor_display(&num, "q")),
                ],
            )
        }
    };

    Report {
        command: "zeta",
        inputs,
        payload,
        text,
    }
}

fn cmd_check(label: &str, g: &Digraph, suite: Suite, opts: &SuiteOptions) -> (Report, bool) {
    let lines = run_suite(g, suite, opts);
    let ok = all_hold(&lines);

    let mut inputs = graph_inputs(label, g);
    inputs["suite"] = json!(suite_name(suite));
    inputs["u"] = match &opts.u_override {
        Some(u0) => json!(u0.to_string()),
        None => json!("default"),
    };
    inputs["max_len"] = json!(opts.max_len);
    inputs["budget"] = json!(opts.budget);

    let payload = json!({
        "checks": lines.iter().map(|l| l.json()).collect::<Vec<_>>(),
        "all_hold": ok,
    });
    let mut text: Vec<String> = lines.iter().map(|l| l.text()).collect();
    text.push(format!(
        "result: {}",
        if ok { "all applicable identities hold" } else { "VIOLATION" }
    ));

    (
        Report {
            command: "check",
            inputs,
            payload,
            text,
        },
        ok,
    )
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::All => "all",
        Suite::Expressions => "expressions",
        Suite::FeQ => "fe-q",
        Suite::FeU => "fe-u",
        Suite::DetBu => "det-bu",
        Suite::BuInv => "bu-inv",
        Suite::Sigma => "sigma",
        Suite::Oracle => "oracle",
    }
}

fn class_name(c: PoleClass) -> &'static str {
    match c {
        PoleClass::UnitReciprocal { negative: false } => "unit-reciprocal",
        PoleClass::UnitReciprocal { negative: true } => "negative-unit-reciprocal",
        PoleClass::DegreeReciprocal => "degree-reciprocal",
        PoleClass::MirrorDegreeReciprocal => "mirror-degree-reciprocal",
        PoleClass::Other => "other",
    }
}

fn bound_json(b: &Bound) -> Value {
    match b {
        Bound::Finite(r) => json!(r.to_string()),
        Bound::Unbounded => json!("unbounded"),
    }
}

fn cmd_poles(label: &str, g: &Digraph, r: &PoleReport, tol: f64) -> Report {
    let info = GraphInfo::analyze(g);
    let expected_generic = g.n_edges() + 1 - g.n_vertices();
    let at_star = r.u0 == info.u_star;

    let poles_json: Vec<Value> = r
        .poles
        .iter()
        .map(|p| {
            json!({
                "re": fmt_f64(p.re),
                "im": fmt_f64(p.im),
                "magnitude": fmt_f64(p.magnitude),
                "multiplicity": p.multiplicity,
                "exact": p.exact.as_ref().map(|e| e.to_string()),
                "s_re": p.s_re.map(fmt_f64),
                "class": class_name(p.class),
            })
        })
        .collect();

    let rh_json = r.rh.as_ref().map(|v| {
        json!({
            "hypothesis_holds": v.hypothesis_holds,
            "max_subleading_eigenvalue": fmt_f64(v.max_subleading),
            "spectral_bound": fmt_f64(v.spectral_bound),
            "critical_magnitude": fmt_f64(v.critical_magnitude),
            "nontrivial_pole_count": v.nontrivial_count,
            "mirror_pole_count": v.mirror_count,
            "on_critical_line": v.on_critical_line,
            "max_deviation": v.max_deviation.map(fmt_f64),
        })
    });

    let payload = json!({
        "u": r.u0.to_string(),
        "bounds": {
            "inner": bound_json(&r.bounds.inner),
            "inner_branch": r.bounds.inner_branch,
            "outer": bound_json(&r.bounds.outer),
            "outer_branch": r.bounds.outer_branch,
        },
        "poles": poles_json,
        "min_pole_magnitude": r.min_pole_magnitude.map(fmt_f64),
        "max_pole_magnitude": r.max_pole_magnitude.map(fmt_f64),
        "order_plus": r.order_plus,
        "order_minus": r.order_minus,
        "degenerate_strip": r.degenerate_strip,
        "u_star": info.u_star.to_string(),
        "at_enhancement_point": at_star,
        "expected_order_plus": if at_star { expected_generic + 1 } else { expected_generic },
        "rh": rh_json,
    });

    let mut text = vec![
        format!("poles of the zeta function at u = {}", r.u0),
        format!(
            "strip bounds: inner {} ({}), outer {} ({})",
            r.bounds.inner.render(),
            r.bounds.inner_branch,
            r.bounds.outer.render(),
            r.bounds.outer_branch
        ),
    ];
    if r.poles.is_empty() {
        text.push("no poles (zeta inverse is constant in q)".to_string());
    }
    for p in &r.poles {
        let im_part = if p.im < 0.0 {
            format!("- {}i", fmt_f64(-p.im))
        } else {
            format!("+ {}i", fmt_f64(p.im))
        };
        let mut line = format!(
            "pole q = {} {}  |q| = {}  multiplicity {}",
            fmt_f64(p.re),
            im_part,
            fmt_f64(p.magnitude),
            p.multiplicity
        );
        if let Some(e) = &p.exact {
            line.push_str(&format!("  exact {e}"));
        }
        if let Some(s) = p.s_re {
            line.push_str(&format!("  Re(s) = {}", fmt_f64(s)));
        }
        line.push_str(&format!("  [{}]", class_name(p.class)));
        text.push(line);
    }
    text.push(format!(
        "orders at +/-(1-u)^-1: {} / {}",
        r.order_plus, r.order_minus
    ));
    text.push(format!(
        "enhancement point u* = {}: {} (expected order {})",
        info.u_star,
        if at_star { "at u*" } else { "off u*" },
        if at_star { expected_generic + 1 } else { expected_generic },
    ));
    if r.degenerate_strip {
        text.push("degenerate strip: min and max pole magnitudes coincide; s-map undefined".to_string());
    }
    match &r.rh {
        Some(v) => {
            if v.hypothesis_holds {
                text.push(format!(
                    "critical-line hypothesis holds (max |eigenvalue| {} < bound {}); nontrivial poles: {}, on critical line: {}",
                    fmt_f64(v.max_subleading),
                    fmt_f64(v.spectral_bound),
                    v.nontrivial_count,
                    v.on_critical_line.map(|b| if b { "yes" } else { "no" }).unwrap_or("n/a"),
                ));
            } else {
                text.push(format!(
                    "critical-line hypothesis fails: max |eigenvalue| {} >= bound {}",
                    fmt_f64(v.max_subleading),
                    fmt_f64(v.spectral_bound),
                ));
            }
            if v.mirror_count > 0 {
                text.push(format!(
                    "mirror poles (bipartite spectral reflection): {}",
                    v.mirror_count
                ));
            }
        }
        None => text.push("critical-line verdict: not applicable (irregular graph)".to_string()),
    }

    let mut inputs = graph_inputs(label, g);
    inputs["u"] = json!(r.u0.to_string());
    inputs["tol"] = json!(tol);

    Report {
        command: "poles",
        inputs,
        payload,
        text,
    }
}
