//! Command line surface over the linkless embeddability library.
//!
//! JSON reports are the certificate of record; text output is a short
//! projection of the same data. Exit codes: 0 on success, 2 on parse or
//! input errors, 3 when a resource cap is exceeded, 1 otherwise.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use linkless::{
    build_web, convex_diagram, enumerate_cycles, has_minor, is_connected_web,
    is_linklessly_embeddable, parse_graph, petersen_family, to_graph6, AdjacencyKind, Crossing,
    EdgeId, Error, InputFormat, LabeledGraph, OverRule, SubdivisionKind, Vertex, WebLink,
    DEFAULT_CYCLE_CAP, DEFAULT_DECIDE_CAP, DEFAULT_WEB_CAP,
};

#[derive(Parser)]
#[command(
    name = "linkless",
    version,
    about = "Decide linkless embeddability of graphs and compute the supporting structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input format; auto treats a leading digit as an edge list.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Auto, env = "LINKLESS_FORMAT")]
    format: FormatArg,

    /// Vertex cap overriding the per-command default.
    #[arg(long, global = true, env = "LINKLESS_CAP_VERTICES")]
    cap_vertices: Option<usize>,

    /// Seed for the seeded over-rule.
    #[arg(long, global = true, default_value_t = 0, env = "LINKLESS_SEED")]
    seed: u64,

    /// Report style.
    #[arg(long, global = true, value_enum, default_value_t = OutputArg::Json, env = "LINKLESS_OUTPUT")]
    output: OutputArg,
}

#[derive(Subcommand)]
enum Command {
    /// Decide linkless embeddability, emitting a certificate either way.
    Decide {
        /// Graph file, or - for stdin.
        input: PathBuf,
    },
    /// Print the seven excluded minors.
    Family,
    /// Enumerate Kuratowski subgraphs and their adjacency web.
    Web {
        /// Graph file, or - for stdin.
        input: PathBuf,
        /// Emit the web as DOT instead of a report.
        #[arg(long)]
        dot: bool,
    },
    /// Sum of mod-2 linking numbers over disjoint cycle pairs of a
    /// convex diagram of the input.
    Invariant {
        /// Graph file, or - for stdin.
        input: PathBuf,
        /// Circle order as comma-separated input labels; defaults to
        /// ascending label order.
        #[arg(long, value_delimiter = ',', env = "LINKLESS_ORDER")]
        order: Option<Vec<Vertex>>,
        /// How crossings are resolved.
        #[arg(long, value_enum, default_value_t = RuleArg::Lex, env = "LINKLESS_OVER_RULE")]
        over_rule: RuleArg,
        /// JSON file with one {"a", "b", "over"} record per crossing,
        /// replacing the rule's resolution.
        #[arg(long)]
        assignment: Option<PathBuf>,
    },
    /// Search for the second graph as a minor of the first.
    Minor {
        /// Host graph file.
        host: PathBuf,
        /// Pattern graph file.
        pattern: PathBuf,
    },
    /// List all simple cycles.
    Cycles {
        /// Graph file, or - for stdin.
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    EdgeList,
    Graph6,
    Auto,
}

impl From<FormatArg> for InputFormat {
    fn from(f: FormatArg) -> InputFormat {
        match f {
            FormatArg::EdgeList => InputFormat::EdgeList,
            FormatArg::Graph6 => InputFormat::Graph6,
            FormatArg::Auto => InputFormat::Auto,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Lex,
    Seeded,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::CapExceeded { .. } => 3,
            Error::Parse { .. } | Error::Input(_) => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Decide { input } => decide(&cli, input),
        Command::Family => family(&cli),
        Command::Web { input, dot } => web(&cli, input, *dot),
        Command::Invariant {
            input,
            order,
            over_rule,
            assignment,
        } => invariant(&cli, input, order.as_deref(), *over_rule, assignment.as_deref()),
        Command::Minor { host, pattern } => minor(&cli, host, pattern),
        Command::Cycles { input } => cycles(&cli, input),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure {
                code: 1,
                message: format!("reading stdin: {e}"),
            })?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| Failure {
        code: 1,
        message: format!("reading {}: {e}", path.display()),
    })
}

fn load(path: &Path, format: FormatArg) -> Result<LabeledGraph, Failure> {
    let text = read_input(path)?;
    Ok(parse_graph(&text, format.into())?)
}

/// Translates dense library vertices back to the labels the input used.
fn to_labels(lg: &LabeledGraph, vs: &[Vertex]) -> Vec<Vertex> {
    vs.iter().map(|&v| lg.original(v)).collect()
}

fn from_label(lg: &LabeledGraph, label: Vertex) -> Result<Vertex, Failure> {
    lg.labels
        .iter()
        .position(|&l| l == label)
        .map(|i| i as Vertex)
        .ok_or(Failure {
            code: 2,
            message: format!("vertex label {label} does not occur in the input"),
        })
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("reports serialize"));
}

#[derive(Serialize)]
struct DecideReport {
    embeddable: bool,
    family_member: Option<usize>,
    branch_sets: Vec<Vec<Vertex>>,
    edge_map: Vec<(EdgeId, EdgeId)>,
}

fn decide(cli: &Cli, input: &Path) -> Result<(), Failure> {
    let lg = load(input, cli.format)?;
    let cap = cli.cap_vertices.unwrap_or(DEFAULT_DECIDE_CAP);
    let verdict = is_linklessly_embeddable(&lg.graph, cap)?;
    let report = match verdict.witness() {
        Some((member, model)) => DecideReport {
            embeddable: false,
            family_member: Some(member),
            branch_sets: model.branch_sets.iter().map(|s| to_labels(&lg, s)).collect(),
            edge_map: model.edge_map.clone(),
        },
        None => DecideReport {
            embeddable: true,
            family_member: None,
            branch_sets: Vec::new(),
            edge_map: Vec::new(),
        },
    };
    match cli.output {
        OutputArg::Json => emit(&report),
        OutputArg::Text => {
            if report.embeddable {
                println!("embeddable");
            } else {
                println!(
                    "not embeddable: contains excluded minor {} via branch sets {}",
                    report.family_member.unwrap(),
                    report
                        .branch_sets
                        .iter()
                        .map(|s| format!("{s:?}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct FamilyEntry {
    member: usize,
    graph6: String,
    vertices: usize,
    edges: usize,
    degree_sequence: Vec<usize>,
}

fn family(cli: &Cli) -> Result<(), Failure> {
    let mut entries = Vec::new();
    for (i, g) in petersen_family().iter().enumerate() {
        entries.push(FamilyEntry {
            member: i + 1,
            graph6: to_graph6(g)?,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            degree_sequence: g.degree_sequence(),
        });
    }
    match cli.output {
        OutputArg::Json => emit(&entries),
        OutputArg::Text => {
            for e in &entries {
                println!("{}", e.graph6);
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct WebNode {
    kind: SubdivisionKind,
    branch_vertices: Vec<Vertex>,
    edges: Vec<EdgeId>,
}

#[derive(Serialize)]
struct WebReport {
    nodes: Vec<WebNode>,
    links: Vec<WebLink>,
    connected: bool,
}

fn adjacency_label(kind: AdjacencyKind) -> &'static str {
    match kind {
        AdjacencyKind::One => "1",
        AdjacencyKind::Two => "2",
        AdjacencyKind::Both => "both",
    }
}

fn web(cli: &Cli, input: &Path, dot: bool) -> Result<(), Failure> {
    let lg = load(input, cli.format)?;
    let cap = cli.cap_vertices.unwrap_or(DEFAULT_WEB_CAP);
    let web = build_web(&lg.graph, cap)?;
    if dot {
        println!("graph kuratowski_web {{");
        for (i, m) in web.nodes.iter().enumerate() {
            println!("  h{i} [label=\"{:?}\"];", m.kind);
        }
        for l in &web.links {
            println!("  h{} -- h{} [label=\"{}\"];", l.a, l.b, adjacency_label(l.kind));
        }
        println!("}}");
        return Ok(());
    }
    let report = WebReport {
        nodes: web
            .nodes
            .iter()
            .map(|m| WebNode {
                kind: m.kind,
                branch_vertices: to_labels(&lg, &m.branch_vertices),
                edges: m.edge_set.iter().copied().collect(),
            })
            .collect(),
        links: web.links.clone(),
        connected: is_connected_web(&web),
    };
    match cli.output {
        OutputArg::Json => emit(&report),
        OutputArg::Text => println!(
            "{} nodes, {} links, connected: {}",
            report.nodes.len(),
            report.links.len(),
            report.connected
        ),
    }
    Ok(())
}

#[derive(Serialize)]
struct InvariantReport {
    sum: u8,
    order: Vec<Vertex>,
    crossings: Vec<Crossing>,
}

fn invariant(
    cli: &Cli,
    input: &Path,
    order: Option<&[Vertex]>,
    rule: RuleArg,
    assignment: Option<&Path>,
) -> Result<(), Failure> {
    let lg = load(input, cli.format)?;
    let cap = cli.cap_vertices.unwrap_or(DEFAULT_CYCLE_CAP);
    if lg.graph.vertex_count() > cap {
        return Err(Error::CapExceeded {
            size: lg.graph.vertex_count(),
            cap,
        }
        .into());
    }
    let dense_order: Vec<Vertex> = match order {
        Some(labels) => labels
            .iter()
            .map(|&l| from_label(&lg, l))
            .collect::<Result<_, _>>()?,
        None => lg.graph.vertices().to_vec(),
    };
    let rule = match rule {
        RuleArg::Lex => OverRule::Lex,
        RuleArg::Seeded => OverRule::Seeded(cli.seed),
    };
    let mut diagram = convex_diagram(&lg.graph, &dense_order, rule)?;
    if let Some(path) = assignment {
        let text = read_input(path)?;
        let crossings: Vec<Crossing> = serde_json::from_str(&text).map_err(|e| Failure {
            code: 2,
            message: format!("assignment file: {e}"),
        })?;
        diagram = diagram.with_assignment(&crossings)?;
    }
    let report = InvariantReport {
        sum: diagram.conway_gordon_sum().value(),
        order: to_labels(&lg, &dense_order),
        crossings: diagram.crossings().to_vec(),
    };
    match cli.output {
        OutputArg::Json => emit(&report),
        OutputArg::Text => println!("{}", report.sum),
    }
    Ok(())
}

#[derive(Serialize)]
struct MinorReport {
    found: bool,
    branch_sets: Vec<Vec<Vertex>>,
    edge_map: Vec<(EdgeId, EdgeId)>,
}

fn minor(cli: &Cli, host: &Path, pattern: &Path) -> Result<(), Failure> {
    let host = load(host, cli.format)?;
    let pattern = load(pattern, cli.format)?;
    let cap = cli.cap_vertices.unwrap_or(DEFAULT_DECIDE_CAP);
    let report = match has_minor(&host.graph, &pattern.graph, cap)? {
        Some(model) => MinorReport {
            found: true,
            branch_sets: model.branch_sets.iter().map(|s| to_labels(&host, s)).collect(),
            edge_map: model.edge_map.clone(),
        },
        None => MinorReport {
            found: false,
            branch_sets: Vec::new(),
            edge_map: Vec::new(),
        },
    };
    match cli.output {
        OutputArg::Json => emit(&report),
        OutputArg::Text => {
            if report.found {
                println!(
                    "minor found via branch sets {}",
                    report
                        .branch_sets
                        .iter()
                        .map(|s| format!("{s:?}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            } else {
                println!("no minor");
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CyclesReport {
    count: usize,
    cycles: Vec<Vec<Vertex>>,
}

fn cycles(cli: &Cli, input: &Path) -> Result<(), Failure> {
    let lg = load(input, cli.format)?;
    let cap = cli.cap_vertices.unwrap_or(DEFAULT_CYCLE_CAP);
    let found = enumerate_cycles(&lg.graph, cap)?;
    let report = CyclesReport {
        count: found.len(),
        cycles: found.iter().map(|c| to_labels(&lg, c)).collect(),
    };
    match cli.output {
        OutputArg::Json => emit(&report),
        OutputArg::Text => {
            for c in &report.cycles {
                println!(
                    "{}",
                    c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                );
            }
        }
    }
    Ok(())
}
