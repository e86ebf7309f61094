use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symbreak::automorphism::vertex_orbits;
use symbreak::distinguishing::{distinguishing_edge_labeling_with, distinguishing_vertex_labeling_with};
use symbreak::graphoidal::{
    construct_gap_instance, construct_spider_instance, for_each_cover, format_cover, omega,
    parse_cover, DEFAULT_COVER_CAP,
};
use symbreak::harness::TheoremId;
use symbreak::linegraph::{is_claw_free, is_line_graph, line_graph, root_graph_oracle, ROOT_ORACLE_MAX_ORDER};
use symbreak::{automorphisms, corpus, encode_graph6, parse_graph6, Error, Graph, GraphoidalCover};

const EXIT_DOMAIN: u8 = 1;
const EXIT_VIOLATIONS: u8 = 2;
const EXIT_CAPACITY: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "symbreak", version, about = "Distinguishing labelings, line graphs and graphoidal covers of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distinguishing number or index with a witness labeling.
    Dist(DistArgs),
    /// Line graph as graph6.
    Line(GraphArg),
    /// Line-graph recognition with a root graph when one exists.
    Recognize(GraphArg),
    /// Intersection graph of a graphoidal cover.
    Omega {
        graph6: String,
        /// Cover file, or `-` for stdin.
        cover: PathBuf,
    },
    /// All graphoidal covers of a graph.
    Covers {
        graph6: Option<String>,
        #[arg(long, default_value_t = DEFAULT_COVER_CAP)]
        cap: usize,
        /// Print only the number of covers.
        #[arg(long)]
        count: bool,
    },
    /// Build one of the extremal cover constructions.
    Construct {
        #[command(subcommand)]
        kind: Construction,
        /// Write the cover here instead of after the graph6 line.
        #[arg(long, global = true)]
        cover_out: Option<PathBuf>,
    },
    /// Named graphs.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Run an exhaustive verification scan.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GraphArg {
    /// graph6 string; read from stdin when omitted or `-`.
    graph6: Option<String>,
}

#[derive(Args)]
struct DistArgs {
    #[arg(long, conflicts_with = "edge", required_unless_present = "edge")]
    vertex: bool,
    #[arg(long)]
    edge: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    graph6: Option<String>,
}

#[derive(Subcommand)]
enum Construction {
    /// Graph with D = D' = 2 whose cover has D(Ω) = D'(Ω) = n.
    Gap {
        #[arg(long)]
        n: usize,
    },
    /// Spider with `x` legs of `p` edges hung on a path.
    Spider {
        #[arg(long)]
        x: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        t1: usize,
        #[arg(long)]
        t2: usize,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a named graph, e.g. `petersen` or `cycle(5)`, as graph6.
    Show { name: String },
}

#[derive(Args)]
struct VerifyArgs {
    theorem: String,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include elapsed time in JSON output.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    env_logger::Builder::new().filter_level(log::LevelFilter::Warn).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_capacity() { EXIT_CAPACITY } else { EXIT_DOMAIN })
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DOMAIN)
        }
    }
}

fn run(command: Command) -> Outcome {
    let mut out = io::stdout().lock();
    match command {
        Command::Dist(args) => dist(&mut out, args),
        Command::Line(arg) => {
            let g = read_graph(arg.graph6)?;
            writeln!(out, "{}", encode_graph6(&line_graph(&g)?.line)?)?;
            Ok(0)
        }
        Command::Recognize(arg) => recognize(&mut out, read_graph(arg.graph6)?),
        Command::Omega { graph6, cover } => {
            let g = read_graph(Some(graph6))?;
            let cover = parse_cover(&read_text(&cover)?)?;
            omega_command(&mut out, &g, &cover)
        }
        Command::Covers { graph6, cap, count } => covers(&mut out, read_graph(graph6)?, cap, count),
        Command::Construct { kind, cover_out } => {
            let (g, cover) = match kind {
                Construction::Gap { n } => construct_gap_instance(n)?,
                Construction::Spider { x, p, t1, t2 } => construct_spider_instance(x, p, t1, t2)?,
            };
            writeln!(out, "{}", encode_graph6(&g)?)?;
            match cover_out {
                Some(path) => fs::write(path, format_cover(&cover))?,
                None => write!(out, "{}", format_cover(&cover))?,
            }
            Ok(0)
        }
        Command::Corpus { action } => match action {
            CorpusAction::List { format } => {
                let entries = corpus::list();
                match format {
                    Format::Json => writeln!(out, "{}", to_json(&entries))?,
                    Format::Csv => return Err(Failure::Usage("corpus list supports json and text".into())),
                    Format::Text => {
                        for e in &entries {
                            let order = e.order.map_or_else(|| "-".to_string(), |n| n.to_string());
                            writeln!(out, "{:<24} {:>3}  {}", e.name, order, e.description)?;
                        }
                    }
                }
                Ok(0)
            }
            CorpusAction::Show { name } => {
                writeln!(out, "{}", encode_graph6(&corpus::get(&name)?)?)?;
                Ok(0)
            }
        },
        Command::Verify(args) => verify(&mut out, args),
    }
}

fn dist(out: &mut impl Write, args: DistArgs) -> Outcome {
    let g = read_graph(args.graph6)?;
    let aut = automorphisms(&g)?;
    let (kind, result) = if args.edge {
        ("edge", distinguishing_edge_labeling_with(&g, &aut)?)
    } else {
        ("vertex", distinguishing_vertex_labeling_with(&g, &aut)?)
    };
    match args.format {
        Format::Json => {
            let value = json!({
                "graph6": encode_graph6(&g)?,
                "kind": kind,
                "value": result.value,
                "witness": result.witness,
                "group_order": aut.order(),
                "orbits": vertex_orbits(&aut),
            });
            writeln!(out, "{}", to_json(&value))?;
        }
        Format::Text => {
            writeln!(out, "{}", result.value)?;
            let witness: Vec<String> = result.witness.iter().map(usize::to_string).collect();
            writeln!(out, "witness {}", witness.join(","))?;
        }
        Format::Csv => {
            writeln!(out, "graph6,kind,value,group_order")?;
            writeln!(out, "{},{kind},{},{}", encode_graph6(&g)?, result.value, aut.order())?;
        }
    }
    Ok(0)
}

fn recognize(out: &mut impl Write, g: Graph) -> Outcome {
    let line = is_line_graph(&g);
    let root = if line && g.is_connected() && g.order() <= ROOT_ORACLE_MAX_ORDER {
        root_graph_oracle(&g)?.map(|h| encode_graph6(&h)).transpose()?
    } else {
        None
    };
    let value = json!({
        "graph6": encode_graph6(&g)?,
        "line_graph": line,
        "claw_free": is_claw_free(&g),
        "root": root,
    });
    writeln!(out, "{}", to_json(&value))?;
    Ok(0)
}

fn omega_command(out: &mut impl Write, g: &Graph, cover: &GraphoidalCover) -> Outcome {
    let om = omega(g, cover)?;
    writeln!(out, "{}", encode_graph6(&om)?)?;
    let legend: Vec<Value> = cover
        .paths()
        .iter()
        .enumerate()
        .map(|(i, p)| json!({ "vertex": i, "path": p.vertices(), "closed": p.is_closed() }))
        .collect();
    writeln!(out, "{}", to_json(&legend))?;
    Ok(0)
}

fn covers(out: &mut impl Write, g: Graph, cap: usize, count_only: bool) -> Outcome {
    let mut text = String::new();
    let mut first = true;
    let count = for_each_cover(&g, cap, |paths| {
        if count_only {
            return;
        }
        if !first {
            text.push('\n');
        }
        first = false;
        text.push_str(&format_cover(&GraphoidalCover::new(paths.to_vec())));
    })?;
    if count_only {
        writeln!(out, "{count}")?;
    } else {
        write!(out, "{text}")?;
    }
    Ok(0)
}

fn verify(out: &mut impl Write, args: VerifyArgs) -> Outcome {
    let theorem: TheoremId = args.theorem.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let max_n = args.max_n.unwrap_or(theorem.default_order());
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        pool = pool.num_threads(jobs);
    }
    let pool = pool.build().map_err(|e| Failure::Usage(e.to_string()))?;
    let report = pool.install(|| theorem.run(max_n))?;
    let text = match args.format {
        Format::Json => report.to_json(args.timing) + "\n",
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    };
    out.write_all(text.as_bytes())?;
    Ok(if report.passed() { 0 } else { EXIT_VIOLATIONS })
}

fn to_json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn read_text(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn read_graph(arg: Option<String>) -> Result<Graph, Failure> {
    let text = match arg {
        Some(s) if s != "-" => s,
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s.lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| Failure::Usage("no graph6 input on stdin".into()))?
                .to_string()
        }
    };
    Ok(parse_graph6(text.trim())?)
}
