//! `trifree` command-line front end.
//!
//! Exit status: 0 on success, 1 on invalid input or a violated contract,
//! 2 when an audit or table check fails.

mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use trifree::constructions::{
    andrasfai, blow_up, extremal_blowup, twin_contraction, BlowupWeights,
};
use trifree::formulas::FormulaPoint;
use trifree::search::{ex_search, verify_table, SearchProblem, DEFAULT_NODE_LIMIT};
use trifree::solvers::{independence_number, max_bipartite_matching};
use trifree::transforms::{
    enforce_pair_structure, enforce_pair_structure_with, enforce_triple_structure,
    isolate_unmatched, sym,
};
use trifree::validation::{andrasfai_class, extremal_family_audit, prop32_audit, suites};
use trifree::{encode_graph6, Graph, VertexSet};

use io::{csv_line, parse_set, read_graph, read_graphs, Sink};

#[derive(Parser, Debug)]
#[command(
    name = "trifree",
    version,
    about = "Triangle-free graphs with bounded independence number"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; each subcommand accepts a subset.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
    Graph6,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build Andrásfai graphs, blow-ups and extremal blow-ups.
    #[command(subcommand)]
    Construct(Construct),
    /// Tabulate g, g_k and the classical bounds.
    Formulas {
        #[arg(long)]
        n: u64,
        /// Single value of s; all 0..=n when omitted.
        #[arg(long)]
        s: Option<u64>,
    },
    /// Compute ex(n, s) exhaustively, or the comparison table with --table.
    Search(SearchArgs),
    /// Run structural audits and randomized property suites.
    #[command(subcommand)]
    Verify(Verify),
    /// Apply symmetrisation steps to a graph6 input.
    #[command(subcommand)]
    Transform(Transform),
    /// Report basic invariants of graph6 inputs.
    Inspect {
        /// graph6 file, one graph per line; stdin when omitted.
        input: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// The Andrásfai graph Γ_k.
    Andrasfai {
        #[arg(long)]
        k: usize,
    },
    /// A blow-up of Γ_k with the given class sizes.
    Blowup {
        #[arg(long)]
        k: usize,
        /// Comma-separated class sizes, one per vertex of Γ_k.
        #[arg(long)]
        weights: String,
    },
    /// The blow-up attaining g(n, s) for n/3 < s < n/2.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, required_unless_present = "table")]
    s: Option<usize>,
    /// Tabulate every feasible (n', s) with n' <= n.
    #[arg(long)]
    table: bool,
    /// Worker threads; 0 picks the machine default.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    node_limit: u64,
    /// Also write the witnesses as graph6 lines to this file.
    #[arg(long)]
    witnesses: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Seeded property suites for the symmetrisation and matching lemmas.
    Suites {
        #[arg(long, default_value_t = suites::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        instances: usize,
    },
    /// Check the hypotheses and bound of the pentagon proposition.
    Prop32 {
        #[arg(long)]
        a: String,
        #[arg(long, default_value = "")]
        q: String,
        input: Option<PathBuf>,
    },
    /// Search (n, s) and audit every extremal witness.
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
}

#[derive(Subcommand, Debug)]
enum Transform {
    /// Delete edges meeting B, then join A to B.
    Sym {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        input: Option<PathBuf>,
    },
    /// Isolate the vertices of a maximum independent set A left unmatched by
    /// a maximum matching from the rest of the graph.
    Isolate {
        #[arg(long)]
        a: String,
        input: Option<PathBuf>,
    },
    /// Two-set pipeline; picks A and B itself unless both are given.
    Pair {
        #[arg(long)]
        s: usize,
        #[arg(long, requires = "b")]
        a: Option<String>,
        #[arg(long, requires = "a")]
        b: Option<String>,
        input: Option<PathBuf>,
    },
    /// Three-set pipeline.
    Triple {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        input: Option<PathBuf>,
    },
}

enum Status {
    Ok,
    AuditFailed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::AuditFailed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn pick(requested: Option<Format>, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = requested.unwrap_or(default);
    if !allowed.contains(&f) {
        bail!("format {f:?} is not available here; use one of {allowed:?}");
    }
    Ok(f)
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn run(cli: Cli) -> Result<Status> {
    let sink = Sink::new(cli.output.clone());
    match cli.command {
        Command::Construct(c) => construct(c, cli.format, &sink),
        Command::Formulas { n, s } => formulas(n, s, cli.format, &sink),
        Command::Search(args) => search(args, cli.format, &sink),
        Command::Verify(v) => verify(v, cli.format, &sink),
        Command::Transform(t) => transform(t, cli.format, &sink),
        Command::Inspect { input } => inspect(input, cli.format, &sink),
    }
}

#[derive(Serialize)]
struct GraphOut {
    order: usize,
    edges: usize,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<usize>>,
}

fn emit_graph(g: &Graph, name: &str, format: Format, extra: GraphOut, sink: &Sink) -> Result<()> {
    match format {
        Format::Graph6 => sink.write(&format!("{}\n", encode_graph6(g))),
        Format::Dot => sink.write(&g.to_dot(name)),
        Format::Json => sink.write(&json(&extra)?),
        Format::Csv => unreachable!("rejected by format selection"),
    }
}

fn construct(c: Construct, format: Option<Format>, sink: &Sink) -> Result<Status> {
    let format = pick(
        format,
        Format::Graph6,
        &[Format::Graph6, Format::Dot, Format::Json],
    )?;
    let (g, name, k, weights) = match c {
        Construct::Andrasfai { k } => (andrasfai(k)?, format!("andrasfai_{k}"), Some(k), None),
        Construct::Blowup { k, weights } => {
            let w: Vec<usize> = weights
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .with_context(|| format!("cannot parse weights {weights:?}"))?;
            let spec = BlowupWeights::new(andrasfai(k)?, w.clone())?;
            (blow_up(&spec), format!("blowup_{k}"), Some(k), Some(w))
        }
        Construct::Extremal { n, s } => {
            let b = extremal_blowup(n, s)?;
            (
                b.graph,
                format!("extremal_{n}_{s}"),
                Some(b.k),
                Some(b.weights),
            )
        }
    };
    let out = GraphOut {
        order: g.order(),
        edges: g.edge_count(),
        graph6: encode_graph6(&g),
        k,
        weights,
    };
    emit_graph(&g, &name, format, out, sink)?;
    Ok(Status::Ok)
}

fn formulas(n: u64, s: Option<u64>, format: Option<Format>, sink: &Sink) -> Result<Status> {
    let format = pick(format, Format::Csv, &[Format::Csv, Format::Json])?;
    let points: Vec<FormulaPoint> = match s {
        Some(s) => vec![FormulaPoint::at(n, s)?],
        None => (0..=n)
            .map(|s| FormulaPoint::at(n, s))
            .collect::<trifree::Result<_>>()?,
    };
    let text = match format {
        Format::Json => json(&points)?,
        _ => {
            let mut out = csv_line([
                "n", "s", "range", "g_k", "g", "g_floor", "trivial", "mantel",
            ]);
            for p in &points {
                out += &csv_line([
                    p.n.to_string(),
                    p.s.to_string(),
                    p.range.to_string(),
                    p.g_k.map_or(String::new(), |v| v.to_string()),
                    p.g.to_string(),
                    p.g_floor.to_string(),
                    p.trivial.to_string(),
                    p.mantel.to_string(),
                ]);
            }
            out
        }
    };
    sink.write(&text)?;
    Ok(Status::Ok)
}

fn search(args: SearchArgs, format: Option<Format>, sink: &Sink) -> Result<Status> {
    let format = pick(format, Format::Json, &[Format::Json, Format::Csv])?;
    if args.table {
        let rows = verify_table(args.n, args.workers)?;
        let text = match format {
            Format::Json => json(&rows)?,
            _ => {
                let mut out = csv_line([
                    "n",
                    "s",
                    "ex",
                    "g_floor",
                    "trivial",
                    "mantel",
                    "range",
                    "blowup_edges",
                    "proof",
                    "ex_eq_g",
                    "consistent",
                ]);
                for r in &rows {
                    out += &csv_line([
                        r.n.to_string(),
                        r.s.to_string(),
                        r.ex.to_string(),
                        r.g_floor.to_string(),
                        r.trivial.to_string(),
                        r.mantel.to_string(),
                        r.range.to_string(),
                        r.blowup_edges.map_or(String::new(), |b| b.to_string()),
                        serde_json::to_value(r.proof)?
                            .as_str()
                            .unwrap_or_default()
                            .to_string(),
                        r.ex_eq_g.to_string(),
                        r.consistent.to_string(),
                    ]);
                }
                out
            }
        };
        sink.write(&text)?;
        let ok = rows.iter().all(|r| r.consistent);
        return Ok(if ok { Status::Ok } else { Status::AuditFailed });
    }

    let s = args.s.expect("clap requires --s without --table");
    let p = SearchProblem::new(args.n, s)?
        .with_workers(args.workers)
        .with_node_limit(args.node_limit);
    let report = ex_search(&p)?;
    eprintln!("elapsed: {:.3?}", report.elapsed);
    if let Some(path) = &args.witnesses {
        let lines: String = report.witnesses.iter().map(|c| format!("{c}\n")).collect();
        std::fs::write(path, lines).with_context(|| format!("cannot write {}", path.display()))?;
    }
    let text = match format {
        Format::Json => json(&report)?,
        _ => {
            csv_line(["n", "s", "status", "max_edges", "witnesses", "nodes"])
                + &csv_line([
                    report.n.to_string(),
                    report.s.to_string(),
                    report.status.to_string(),
                    report.max_edges.map_or(String::new(), |e| e.to_string()),
                    report.witnesses.len().to_string(),
                    report.nodes.to_string(),
                ])
        }
    };
    sink.write(&text)?;
    Ok(Status::Ok)
}

fn verify(v: Verify, format: Option<Format>, sink: &Sink) -> Result<Status> {
    match v {
        Verify::Suites { seed, instances } => {
            let format = pick(format, Format::Json, &[Format::Json, Format::Csv])?;
            let results = suites::run_all(seed, instances);
            let text = match format {
                Format::Json => json(&results)?,
                _ => {
                    let mut out = csv_line(["suite", "instances", "violations"]);
                    for r in &results {
                        out += &csv_line([
                            r.name.to_string(),
                            r.instances.to_string(),
                            r.violations.to_string(),
                        ]);
                    }
                    out
                }
            };
            sink.write(&text)?;
            let ok = results.iter().all(|r| r.passed());
            Ok(if ok { Status::Ok } else { Status::AuditFailed })
        }
        Verify::Prop32 { a, q, input } => {
            pick(format, Format::Json, &[Format::Json])?;
            let g = read_graph(input.as_deref())?;
            let a = parse_set(&a, g.order())?;
            let q = parse_set(&q, g.order())?;
            let report = prop32_audit(&g, a, q);
            sink.write(&json(&report)?)?;
            Ok(if report.overall {
                Status::Ok
            } else {
                Status::AuditFailed
            })
        }
        Verify::Family { n, s, workers } => {
            pick(format, Format::Json, &[Format::Json])?;
            let report = ex_search(&SearchProblem::new(n, s)?.with_workers(workers))?;
            let audit = extremal_family_audit(&report.witness_graphs(), n, s);
            sink.write(&json(&audit)?)?;
            Ok(if audit.overall {
                Status::Ok
            } else {
                Status::AuditFailed
            })
        }
    }
}

#[derive(Serialize)]
struct TransformOut<T: Serialize> {
    input: String,
    output: String,
    edges_before: usize,
    edges_after: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    structure: Option<T>,
}

fn transform(t: Transform, format: Option<Format>, sink: &Sink) -> Result<Status> {
    let format = pick(
        format,
        Format::Graph6,
        &[Format::Graph6, Format::Dot, Format::Json],
    )?;
    let (g, h, structure) = match t {
        Transform::Sym { a, b, input } => {
            let g = read_graph(input.as_deref())?;
            let h = sym(&g, parse_set(&a, g.order())?, parse_set(&b, g.order())?)?;
            (g, h, None)
        }
        Transform::Isolate { a, input } => {
            let g = read_graph(input.as_deref())?;
            let a = parse_set(&a, g.order())?;
            let m = max_bipartite_matching(&g, g.vertices() - a, a)?;
            let h = isolate_unmatched(&g, a, &m)?;
            (g, h, None)
        }
        Transform::Pair { s, a, b, input } => {
            let g = read_graph(input.as_deref())?;
            let p = match (a, b) {
                (Some(a), Some(b)) => {
                    let (a, b) = (parse_set(&a, g.order())?, parse_set(&b, g.order())?);
                    if a.len() != s || b.len() != s {
                        bail!("A and B must both have size s = {s}");
                    }
                    enforce_pair_structure_with(&g, a, b)?
                }
                _ => enforce_pair_structure(&g, s)?,
            };
            let h = p.graph.clone();
            (g, h, Some(serde_json::to_value(&p)?))
        }
        Transform::Triple { a, b, c, input } => {
            let g = read_graph(input.as_deref())?;
            let n = g.order();
            let t = enforce_triple_structure(
                &g,
                parse_set(&a, n)?,
                parse_set(&b, n)?,
                parse_set(&c, n)?,
            )?;
            let h = t.graph.clone();
            (g, h, Some(serde_json::to_value(&t)?))
        }
    };
    let out = TransformOut {
        input: encode_graph6(&g),
        output: encode_graph6(&h),
        edges_before: g.edge_count(),
        edges_after: h.edge_count(),
        structure,
    };
    match format {
        Format::Json => sink.write(&json(&out)?)?,
        Format::Dot => sink.write(&h.to_dot("transformed"))?,
        _ => sink.write(&format!("{}\n", out.output))?,
    }
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct Inspection {
    graph6: String,
    order: usize,
    edges: usize,
    triangle_free: bool,
    alpha: usize,
    min_degree: usize,
    max_degree: usize,
    degrees: Vec<usize>,
    twin_classes: Vec<VertexSet>,
    contracted: String,
    /// Smallest k <= 5 with the graph a blow-up of Γ_k.
    andrasfai_k: Option<usize>,
    andrasfai_weights: Option<Vec<usize>>,
}

fn inspect(input: Option<PathBuf>, format: Option<Format>, sink: &Sink) -> Result<Status> {
    let format = pick(format, Format::Json, &[Format::Json, Format::Csv])?;
    let graphs = read_graphs(input.as_deref())?;
    let reports: Vec<Inspection> = graphs
        .iter()
        .map(|g| {
            let profile = g.degree_profile();
            let tc = twin_contraction(g);
            let class = andrasfai_class(g);
            Inspection {
                graph6: encode_graph6(g),
                order: g.order(),
                edges: g.edge_count(),
                triangle_free: g.is_triangle_free(),
                alpha: independence_number(g),
                min_degree: g.min_degree(),
                max_degree: profile.max,
                degrees: profile.degrees,
                twin_classes: tc.classes.clone(),
                contracted: encode_graph6(&tc.graph),
                andrasfai_k: class.as_ref().map(|c| c.0),
                andrasfai_weights: class.map(|c| c.1),
            }
        })
        .collect();
    let text = match format {
        Format::Json => json(&reports)?,
        _ => {
            let mut out = csv_line([
                "graph6",
                "order",
                "edges",
                "triangle_free",
                "alpha",
                "min_degree",
                "max_degree",
                "twin_classes",
                "andrasfai_k",
            ]);
            for r in &reports {
                out += &csv_line([
                    r.graph6.clone(),
                    r.order.to_string(),
                    r.edges.to_string(),
                    r.triangle_free.to_string(),
                    r.alpha.to_string(),
                    r.min_degree.to_string(),
                    r.max_degree.to_string(),
                    r.twin_classes.len().to_string(),
                    r.andrasfai_k.map_or(String::new(), |k| k.to_string()),
                ]);
            }
            out
        }
    };
    sink.write(&text)?;
    Ok(Status::Ok)
}
