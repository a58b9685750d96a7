mod verify;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ssn_core::{
    em1_path, em1_vertex, em2_path, em2_vertex, em3_path, em3_surgery_description, em3_vertex,
    export_graph, recognize, torus_reducible_surgery, ExtendedRational, GraphFamily, GraphSpec,
    NetworkPath, ParamRange, SurgeryResult,
};

#[derive(Parser)]
#[command(
    name = "ssn",
    version,
    about = "Seifert surgery calculus: family vertices, network paths, subgraphs, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a surgery vertex: slope, Seifert invariants, classification
    Vertex {
        #[command(subcommand)]
        family: VertexFamily,
    },
    /// Build the network path from a family vertex to a torus-knot/unknot surgery
    Path {
        #[command(subcommand)]
        family: PathFamily,
    },
    /// Export a subgraph of the network over integer parameter ranges
    Graph {
        #[command(subcommand)]
        family: GraphFamilyCmd,
    },
    /// Run the full cross-consistency suite over the default ranges
    Verify,
}

#[derive(Args, Clone)]
struct DocArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = DocFormat::Json)]
    format: DocFormat,
    /// Write to a file instead of standard output
    #[arg(long)]
    output: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum DocFormat {
    Json,
    Text,
}

#[derive(Args, Clone)]
struct GraphArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = GraphDocFormat::Dot)]
    format: GraphDocFormat,
    /// Write to a file instead of standard output
    #[arg(long)]
    output: Option<String>,
    /// Include the slope-1 vertex family as well
    #[arg(long)]
    minus_one: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GraphDocFormat {
    Dot,
    Json,
}

#[derive(Args, Clone)]
struct Em1Params {
    #[arg(long, allow_hyphen_values = true)]
    l: i64,
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    #[arg(long, allow_hyphen_values = true)]
    p: i64,
    /// Use the slope γ-1 instead of γ
    #[arg(long)]
    minus_one: bool,
}

#[derive(Args, Clone)]
struct Em2Params {
    #[arg(long, allow_hyphen_values = true)]
    l: i64,
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    #[arg(long, allow_hyphen_values = true)]
    p: i64,
    /// Use the slope γ-1 instead of γ
    #[arg(long)]
    minus_one: bool,
}

fn parse_rational(s: &str) -> Result<ExtendedRational, String> {
    s.parse().map_err(|e: ssn_core::Error| e.to_string())
}

#[derive(Args, Clone)]
struct Em3Params {
    /// First tangle parameter, as "p/q" or an integer
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    a1: ExtendedRational,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    a2: ExtendedRational,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    a3: ExtendedRational,
}

#[derive(Subcommand, Clone)]
enum VertexFamily {
    Em1 {
        #[command(flatten)]
        params: Em1Params,
        #[command(flatten)]
        doc: DocArgs,
    },
    Em2 {
        #[command(flatten)]
        params: Em2Params,
        #[command(flatten)]
        doc: DocArgs,
    },
    Em3 {
        #[command(flatten)]
        params: Em3Params,
        #[command(flatten)]
        doc: DocArgs,
    },
    Torus {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[command(flatten)]
        doc: DocArgs,
    },
}

#[derive(Subcommand, Clone)]
enum PathFamily {
    Em1 {
        #[command(flatten)]
        params: Em1Params,
        #[command(flatten)]
        doc: DocArgs,
    },
    Em2 {
        #[command(flatten)]
        params: Em2Params,
        #[command(flatten)]
        doc: DocArgs,
    },
    Em3 {
        #[command(flatten)]
        params: Em3Params,
        #[command(flatten)]
        doc: DocArgs,
    },
}

fn parse_range(s: &str) -> Result<ParamRange, String> {
    let parse = |t: &str| t.parse::<i64>().map_err(|e| format!("bad integer {t:?}: {e}"));
    match s.split_once(':') {
        None => parse(s).map(ParamRange::single),
        Some((lo, hi)) => Ok(ParamRange::new(parse(lo)?, parse(hi)?)),
    }
}

#[derive(Subcommand, Clone)]
enum GraphFamilyCmd {
    Em1 {
        /// Inclusive range "a" or "a:b"
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        l: ParamRange,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        n: ParamRange,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        p: ParamRange,
        #[command(flatten)]
        graph: GraphArgs,
    },
    Em2 {
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        l: ParamRange,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        m: ParamRange,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        n: ParamRange,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        p: ParamRange,
        #[command(flatten)]
        graph: GraphArgs,
    },
}

fn vertex_text(r: &SurgeryResult) -> String {
    let mut out = format!("vertex: {}\nspace: {}\n", r.vertex.id(), r.space);
    out.push_str(&format!("classification: {}\n", recognize(&r.space).to_json()));
    out
}

fn vertex_doc(r: &SurgeryResult, doc: &DocArgs) -> String {
    match doc.format {
        DocFormat::Json => serde_json::to_string_pretty(&r.to_json()).unwrap() + "\n",
        DocFormat::Text => vertex_text(r),
    }
}

fn path_doc(p: &NetworkPath, doc: &DocArgs) -> String {
    match doc.format {
        DocFormat::Json => serde_json::to_string_pretty(&p.to_json()).unwrap() + "\n",
        DocFormat::Text => format!("{p}\n"),
    }
}

fn emit(doc: String, output: &Option<String>) -> Result<(), String> {
    match output {
        None => {
            print!("{doc}");
            Ok(())
        }
        Some(path) => fs::write(path, doc).map_err(|e| format!("cannot write {path}: {e}")),
    }
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Vertex { family } => {
            let (doc, out) = match family {
                VertexFamily::Em1 { params, doc } => {
                    let r = em1_vertex(params.l, params.n, params.p, params.minus_one)
                        .map_err(|e| e.to_string())?;
                    (vertex_doc(&r, &doc), doc.output)
                }
                VertexFamily::Em2 { params, doc } => {
                    let r = em2_vertex(params.l, params.m, params.n, params.p, params.minus_one)
                        .map_err(|e| e.to_string())?;
                    (vertex_doc(&r, &doc), doc.output)
                }
                VertexFamily::Em3 { params, doc } => {
                    let r = em3_vertex(&params.a1, &params.a2, &params.a3)
                        .map_err(|e| e.to_string())?;
                    let d = em3_surgery_description(&params.a1, &params.a2, &params.a3)
                        .map_err(|e| e.to_string())?;
                    let text = match doc.format {
                        DocFormat::Json => {
                            let mut v = r.to_json();
                            v.as_object_mut()
                                .unwrap()
                                .insert("surgery_description".into(), d.to_json());
                            serde_json::to_string_pretty(&v).unwrap() + "\n"
                        }
                        DocFormat::Text => {
                            format!("{}surgery description: {}\n", vertex_text(&r), d)
                        }
                    };
                    (text, doc.output)
                }
                VertexFamily::Torus { p, q, doc } => {
                    let r = torus_reducible_surgery(p, q).map_err(|e| e.to_string())?;
                    (vertex_doc(&r, &doc), doc.output)
                }
            };
            emit(doc, &out)
        }
        Command::Path { family } => {
            let (doc, out) = match family {
                PathFamily::Em1 { params, doc } => {
                    let p = em1_path(params.l, params.n, params.p, params.minus_one)
                        .map_err(|e| e.to_string())?;
                    (path_doc(&p, &doc), doc.output)
                }
                PathFamily::Em2 { params, doc } => {
                    let p = em2_path(params.l, params.m, params.n, params.p, params.minus_one)
                        .map_err(|e| e.to_string())?;
                    (path_doc(&p, &doc), doc.output)
                }
                PathFamily::Em3 { params, doc } => {
                    let p = em3_path(&params.a1, &params.a2, &params.a3)
                        .map_err(|e| e.to_string())?;
                    (path_doc(&p, &doc), doc.output)
                }
            };
            emit(doc, &out)
        }
        Command::Graph { family } => {
            let (spec, graph) = match family {
                GraphFamilyCmd::Em1 { l, n, p, graph } => (
                    GraphSpec {
                        family: GraphFamily::Em1,
                        l,
                        m: ParamRange::single(0),
                        n,
                        p,
                        minus_one: graph.minus_one,
                    },
                    graph,
                ),
                GraphFamilyCmd::Em2 { l, m, n, p, graph } => (
                    GraphSpec { family: GraphFamily::Em2, l, m, n, p, minus_one: graph.minus_one },
                    graph,
                ),
            };
            let format = match graph.format {
                GraphDocFormat::Dot => ssn_core::GraphFormat::Dot,
                GraphDocFormat::Json => ssn_core::GraphFormat::Json,
            };
            let doc = export_graph(&spec, format).map_err(|e| e.to_string())?;
            emit(doc, &graph.output)
        }
        Command::Verify => {
            if verify::run_all() {
                Ok(())
            } else {
                Err("verification failed".to_string())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse(); // clap exits with status 2 on usage errors
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
