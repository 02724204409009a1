//! Command-line front end: compute edge cover polynomials, list minimum
//! covers, run the cubic census against a golden table, partition corpora
//! into polynomial-equal classes, build coronas, and verify the coefficient
//! identities.
//!
//! Conventions: data goes to stdout, diagnostics to stderr; exit 0 on
//! success, 1 when a verification or golden comparison fails, 2 on usage or
//! parse errors. Output is byte-deterministic for fixed inputs and flags.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use ecpoly::census::{census_report, generate_cubic, golden, partition_by_polynomial};
use ecpoly::engines::{edge_cover_polynomial, enumerate_minimum_covers, Engine};
use ecpoly::graph::Graph;
use ecpoly::graph6::{parse_graph6_stream, to_graph6};
use ecpoly::identities::{check_corona_identity, identity_report};

#[derive(Parser)]
#[command(
    name = "ecpoly",
    version,
    about = "Exact edge cover polynomials of small simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// Newline-delimited graph6.
    G6,
    /// "n m" header then one "u v" line per edge, 0-based.
    Edgelist,
}

fn parse_engine(s: &str) -> Result<Engine, String> {
    Engine::from_str(s)
}

#[derive(Subcommand)]
enum Command {
    /// Edge cover polynomial of each input graph.
    Compute {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
        #[arg(long, value_parser = parse_engine, default_value = "dp")]
        engine: Engine,
        /// Emit one JSON object per graph instead of text.
        #[arg(long)]
        json: bool,
    },
    /// All minimum edge covers of each input graph, 1-based pairs.
    Rhosets {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
    },
    /// Census of cubic graphs of the given order, with optional golden check.
    Census {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, value_parser = parse_engine, default_value = "dp")]
        engine: Engine,
        /// Golden coefficient CSV to compare against (exit 1 on mismatch).
        #[arg(long)]
        golden: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Polynomial-equality classes of a graph6 corpus.
    Equiv {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_parser = parse_engine, default_value = "dp")]
        engine: Engine,
    },
    /// Corona with pendant copies: each vertex gains i fresh neighbors.
    Corona {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
        #[arg(long)]
        i: usize,
        /// Also verify the closed form x^(i*n) (1+x)^m (exit 1 on failure).
        #[arg(long)]
        check: bool,
        #[arg(long, value_parser = parse_engine, default_value = "dp")]
        engine: Engine,
    },
    /// Identity report for each input graph (exit 1 if any check fails).
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
        #[arg(long, value_parser = parse_engine, default_value = "dp")]
        engine: Engine,
    },
    /// All cubic graphs of the given order, one graph6 line each.
    GenCubic {
        #[arg(long)]
        order: usize,
    },
}

/// Errors that should exit with status 2 (usage and parse problems).
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

enum Outcome {
    Ok,
    VerificationFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {}", e.0);
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e.0);
            ExitCode::from(2)
        }
    }
}

/// ECP_THREADS caps the worker pool. Without the parallel feature the
/// variable is still validated, there is just nothing to configure.
fn configure_threads() -> Result<(), UsageError> {
    let Ok(raw) = std::env::var("ECP_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.parse().ok().filter(|&t| t >= 1).ok_or_else(|| {
        UsageError(format!(
            "ECP_THREADS must be a positive integer, got {raw:?}"
        ))
    })?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| UsageError(format!("thread pool: {e}")))?;
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn load_graphs(path: &PathBuf, format: Format) -> Result<Vec<Graph>, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    let graphs = match format {
        Format::G6 => parse_graph6_stream(&text)?,
        Format::Edgelist => vec![Graph::parse_edge_list_text(&text)?],
    };
    if graphs.is_empty() {
        return Err(UsageError(format!("{}: no graphs found", path.display())));
    }
    Ok(graphs)
}

fn graph_id(g: &Graph, index: usize) -> String {
    to_graph6(g).unwrap_or_else(|_| format!("#{index}"))
}

fn run(command: Command) -> Result<Outcome, UsageError> {
    match command {
        Command::Compute {
            input,
            format,
            engine,
            json,
        } => {
            let graphs = load_graphs(&input, format)?;
            for (idx, g) in graphs.iter().enumerate() {
                let poly = edge_cover_polynomial(g, engine)?;
                let id = graph_id(g, idx);
                if json {
                    let mut v = poly.to_json();
                    v["graph"] = serde_json::json!(id);
                    v["engine"] = serde_json::json!(engine.name());
                    println!("{v}");
                } else if poly.is_zero() {
                    println!("{id}\tE=0");
                } else {
                    let rho = poly.low_degree().unwrap();
                    let m = poly.degree().unwrap();
                    let coeffs: Vec<String> =
                        (rho..=m).map(|i| poly.coeff(i).to_string()).collect();
                    println!("{id}\trho={rho} m={m} e={}", coeffs.join(","));
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Rhosets { input, format } => {
            let graphs = load_graphs(&input, format)?;
            for (idx, g) in graphs.iter().enumerate() {
                let covers = enumerate_minimum_covers(g)?;
                println!(
                    "# {} rho={} count={}",
                    graph_id(g, idx),
                    g.edge_cover_number(),
                    covers.len()
                );
                for cover in covers {
                    let pairs: Vec<String> = cover
                        .iter()
                        .map(|&(u, v)| format!("{{{},{}}}", u + 1, v + 1))
                        .collect();
                    println!("{}", pairs.join(" "));
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Census {
            order,
            degree,
            engine,
            golden,
            json,
        } => {
            let report = census_report(order, degree, engine)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_csv());
            }
            if let Some(path) = golden {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
                let table = golden::parse(&text)?;
                let comparison = golden::compare(&report, &table);
                for dispute in &comparison.disputes {
                    let verdict = match dispute.supports {
                        Some(golden::Support::Primary) => format!(
                            "computed {} supports the golden value; contradicts the alternate {}",
                            dispute.computed, dispute.alternate
                        ),
                        Some(golden::Support::Alternate) => format!(
                            "computed {} supports the alternate; contradicts the golden value {}",
                            dispute.computed, dispute.primary
                        ),
                        None => format!(
                            "computed {} matches neither recorded value ({} / {})",
                            dispute.computed, dispute.primary, dispute.alternate
                        ),
                    };
                    eprintln!(
                        "annotated cell {} j={}: {verdict}",
                        dispute.row_label, dispute.exponent
                    );
                }
                if !comparison.matches {
                    for m in &comparison.mismatches {
                        eprintln!("golden mismatch: {m}");
                    }
                    return Ok(Outcome::VerificationFailed);
                }
                eprintln!(
                    "golden comparison passed ({} rows, {} annotated cells)",
                    table.rows.len(),
                    comparison.disputes.len()
                );
            }
            Ok(Outcome::Ok)
        }
        Command::Equiv { input, engine } => {
            let graphs = load_graphs(&input, Format::G6)?;
            let classes = partition_by_polynomial(&graphs, engine)?;
            for class in classes {
                let members: Vec<&str> = class.members.iter().map(|c| c.as_str()).collect();
                let mut v = class.polynomial.to_json();
                v["members"] = serde_json::json!(members);
                println!("{v}");
            }
            Ok(Outcome::Ok)
        }
        Command::Corona {
            input,
            format,
            i,
            check,
            engine,
        } => {
            if i == 0 {
                return Err(UsageError("--i must be at least 1".into()));
            }
            let graphs = load_graphs(&input, format)?;
            let mut all_ok = true;
            for g in &graphs {
                let corona = g.corona_empty(i)?;
                println!("{}", to_graph6(&corona)?);
                if check {
                    let ok = check_corona_identity(g, i, engine)?;
                    all_ok &= ok;
                    eprintln!(
                        "corona check (n={}, m={}, i={i}): {}",
                        g.order(),
                        g.size(),
                        if ok { "pass" } else { "FAIL" }
                    );
                }
            }
            if check && !all_ok {
                return Ok(Outcome::VerificationFailed);
            }
            Ok(Outcome::Ok)
        }
        Command::Verify {
            input,
            format,
            engine,
        } => {
            let graphs = load_graphs(&input, format)?;
            let mut all_ok = true;
            for (idx, g) in graphs.iter().enumerate() {
                let report = identity_report(g, engine)?;
                all_ok &= report.all_pass();
                let mut v = report.to_json();
                v["graph"] = serde_json::json!(graph_id(g, idx));
                println!("{v}");
            }
            if !all_ok {
                return Ok(Outcome::VerificationFailed);
            }
            Ok(Outcome::Ok)
        }
        Command::GenCubic { order } => {
            for g in generate_cubic(order)? {
                println!("{}", to_graph6(&g)?);
            }
            Ok(Outcome::Ok)
        }
    }
}
