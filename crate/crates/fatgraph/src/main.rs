//! Command-line front end. Every subcommand is a thin adapter: parse the
//! input, call one library entry point, print the result, so identical
//! invocations produce byte-identical stdout.

use std::io::Read as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fatgraph::boundary::boundary_walks;
use fatgraph::census::{classify_table, enumerate, CensusFilter};
use fatgraph::dot::export_dot;
use fatgraph::error::Error;
use fatgraph::families;
use fatgraph::io::{graph_from_json, graph_to_json, graph_to_json_value};
use fatgraph::iso::{are_isomorphic_components, are_isomorphic_up_to_reflection, component_codes};
use fatgraph::report::report;
use fatgraph::{standard_curves, CanonicalCode, FatGraph};

#[derive(Parser)]
#[command(name = "fatgraph", version, about = "Fat-graph invariants, census, and filling-pair constructions")]
struct Cli {
    /// Print results as JSON; errors become structured JSON on stderr.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a graph file (`-` reads standard input).
    Validate { file: String },
    /// Invariants, boundary walks, curves, and the filling verdict.
    Report { file: String },
    /// Boundary walks, one line per walk.
    Boundaries { file: String },
    /// Straight-ahead curves, one line per curve.
    Curves { file: String },
    /// Canonical code in hex; component codes joined by `.`.
    Canon { file: String },
    /// Decide whether two graphs are isomorphic.
    Iso {
        a: String,
        b: String,
        /// Also accept orientation-reversing isomorphisms.
        #[arg(long)]
        reflection: bool,
    },
    /// Enumerate four-regular fat graphs up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Classification table of all connected classes on N vertices.
    Classify {
        #[arg(long)]
        vertices: usize,
        /// Worker threads; any value gives identical output.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Emit a named or parametric family graph as canonical JSON.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Connected sum with the six-vertex genus-2 summand.
    Sum {
        file: String,
        /// Vertex where the summand is spliced in.
        #[arg(long, default_value_t = 0)]
        at: usize,
    },
    /// Export as Graphviz DOT or canonical JSON.
    Export {
        file: String,
        #[arg(long, value_enum)]
        format: Format,
    },
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    vertices: usize,
    /// Keep classes with exactly this many curves.
    #[arg(long)]
    curves: Option<usize>,
    /// Keep classes with at least this many curves.
    #[arg(long)]
    min_curves: Option<usize>,
    /// Keep classes with exactly this many boundary walks.
    #[arg(long)]
    boundaries: Option<usize>,
    /// Keep classes where every curve is simple.
    #[arg(long, conflicts_with = "no_simple")]
    simple: bool,
    /// Keep classes where some curve is not simple.
    #[arg(long)]
    no_simple: bool,
    /// Keep connected classes only.
    #[arg(long)]
    connected: bool,
    /// Keep classes with exactly this curve length multiset, e.g. `2,1,1`.
    #[arg(long, value_delimiter = ',')]
    lengths: Option<Vec<usize>>,
    /// Worker threads; any value gives identical output.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Family {
    /// Two trivalent vertices joined by three edges; three boundary walks.
    Theta,
    /// The theta graph with aligned rotations; one boundary walk.
    ThetaBar,
    /// The four-vertex filling pair of the genus-2 surface.
    Fig8,
    /// The six-vertex summand used by `sum`.
    Gamma,
    /// Genus-2 filling pair with K boundary walks (K >= 2).
    G2 {
        #[arg(short, long)]
        k: usize,
    },
    /// Genus-3 filling pair with K boundary walks (K >= 1).
    G3 {
        #[arg(short, long)]
        k: usize,
    },
    /// Filling pair for any admissible genus and boundary count.
    Pair {
        #[arg(short, long)]
        genus: usize,
        #[arg(short, long)]
        k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::File(format!("<stdin>: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::File(format!("{path}: {e}")))
    }
}

fn load(path: &str) -> Result<FatGraph, Error> {
    Ok(graph_from_json(&read_input(path)?)?)
}

fn print_graph(g: &FatGraph) -> Result<(), Error> {
    print!("{}", graph_to_json(g)?);
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::Validate { file } => {
            let g = load(file)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "valid": true,
                        "vertices": g.vertex_count(),
                        "edges": g.edge_count(),
                    })
                );
            } else {
                println!("ok: {} vertices, {} edges", g.vertex_count(), g.edge_count());
            }
        }
        Command::Report { file } => {
            let r = report(&load(file)?);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&r).expect("serializable"));
            } else {
                println!("{}", r.to_text());
            }
        }
        Command::Boundaries { file } => {
            let g = load(file)?;
            let walks: Vec<Vec<String>> = boundary_walks(&g)
                .iter()
                .map(|w| g.name_cycle(w.darts()))
                .collect();
            if cli.json {
                println!("{}", serde_json::to_string(&walks).expect("serializable"));
            } else {
                for walk in &walks {
                    println!("{}", walk.join(" "));
                }
            }
        }
        Command::Curves { file } => {
            let g = load(file)?;
            let dec = standard_curves(&g).map_err(Error::from)?;
            if cli.json {
                let curves: Vec<serde_json::Value> = dec
                    .curves
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "length": c.len(),
                            "simple": c.simple,
                            "darts": g.name_cycle(&c.darts),
                        })
                    })
                    .collect();
                println!("{}", serde_json::Value::Array(curves));
            } else {
                for c in &dec.curves {
                    println!(
                        "length {} {}: {}",
                        c.len(),
                        if c.simple { "simple" } else { "not simple" },
                        g.name_cycle(&c.darts).join(" ")
                    );
                }
            }
        }
        Command::Canon { file } => {
            let g = load(file)?;
            let key = component_codes(&g)
                .iter()
                .map(CanonicalCode::to_hex)
                .collect::<Vec<_>>()
                .join(".");
            if cli.json {
                println!("{}", serde_json::json!({ "code": key }));
            } else {
                println!("{key}");
            }
        }
        Command::Iso { a, b, reflection } => {
            let ga = load(a)?;
            let gb = load(b)?;
            let isomorphic = if *reflection {
                are_isomorphic_up_to_reflection(&ga, &gb)
            } else {
                are_isomorphic_components(&ga, &gb)
            };
            if cli.json {
                println!("{}", serde_json::json!({ "isomorphic": isomorphic }));
            } else if isomorphic {
                println!("isomorphic");
            } else {
                println!("not isomorphic");
            }
        }
        Command::Enumerate(args) => {
            let mut lengths = args.lengths.clone();
            if let Some(l) = &mut lengths {
                l.sort_unstable();
            }
            let filter = CensusFilter {
                connected: args.connected,
                curves: args.curves,
                min_curves: args.min_curves,
                boundaries: args.boundaries,
                simple: if args.simple {
                    Some(true)
                } else if args.no_simple {
                    Some(false)
                } else {
                    None
                },
                lengths,
            };
            let classes = enumerate(args.vertices, &filter, args.jobs)?;
            if cli.json {
                let items: Vec<serde_json::Value> = classes
                    .iter()
                    .map(|class| {
                        let s = &class.summary;
                        serde_json::json!({
                            "code": class.key_hex(),
                            "summary": s,
                            "labelled": class.labeled_count,
                            "graph": graph_to_json_value(&class.representative())
                                .expect("generated names are representable"),
                        })
                    })
                    .collect();
                println!("{}", serde_json::Value::Array(items));
            } else {
                for class in &classes {
                    let s = &class.summary;
                    let lengths = s
                        .curve_lengths
                        .iter()
                        .map(|l| l.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    println!(
                        "{} vertices={} edges={} boundaries={} curves={} simple={} lengths={} genus={} labelled={}",
                        class.key_hex(),
                        s.vertices,
                        s.edges,
                        s.boundary_components,
                        s.curve_count,
                        if s.all_simple { "yes" } else { "no" },
                        lengths,
                        match s.genus {
                            Some(g) => g.to_string(),
                            None => "n/a".to_string(),
                        },
                        class.labeled_count,
                    );
                }
            }
        }
        Command::Classify { vertices, jobs } => {
            let table = classify_table(*vertices, *jobs)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&table).expect("serializable"));
            } else {
                println!("{}", table.to_text());
            }
        }
        Command::Construct { family } => {
            let g = match family {
                Family::Theta => families::theta(),
                Family::ThetaBar => families::theta_bar(),
                Family::Fig8 => families::f2_two_disc_pair(),
                Family::Gamma => families::gamma(),
                Family::G2 { k } => families::g2_pair(*k)?,
                Family::G3 { k } => families::g3_pair(*k)?,
                Family::Pair { genus, k } => families::filling_pair(*genus, *k)?,
            };
            print_graph(&g)?;
        }
        Command::Sum { file, at } => {
            let g = load(file)?;
            let normal = families::normalize_pair(&g, *at)?;
            print_graph(&families::connect_sum_gamma(&normal)?)?;
        }
        Command::Export { file, format } => {
            let g = load(file)?;
            match format {
                Format::Dot => print!("{}", export_dot(&g)),
                Format::Json => print_graph(&g)?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes, like any other filter.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if cli.json {
                eprintln!(
                    "{}",
                    serde_json::json!({
                        "error": { "kind": err.kind(), "message": err.to_string() }
                    })
                );
            } else {
                eprintln!("error[{}]: {err}", err.kind());
            }
            ExitCode::from(1)
        }
    }
}
