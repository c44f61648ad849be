//! `edgealg`: decide whether the edge algebra of a graph is a complete
//! intersection.
//!
//! JSON goes to stdout and diagnostics to stderr. Exit status is 0 for a
//! complete intersection, 1 for not, 2 for errors and inconclusive runs.
//! Commands without a verdict exit 0 on success.

use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use edgealg::binomial::{self, BinomialIdealBasis};
use edgealg::cycles::{self, ChordlessCount};
use edgealg::families::Family;
use edgealg::groebner::DEFAULT_DEGREE_CAP;
use edgealg::hilbert;
use edgealg::oracle::{self, OracleVerdict, DEFAULT_MONOMIAL_CAP};
use edgealg::report::{self, AnalyzeConfig, Verdict};
use edgealg::Graph;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "edgealg", version, about = "Complete-intersection checker for edge algebras of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    caps: Caps,
    /// Print a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Args)]
struct Caps {
    /// Largest census degree (default: a degree bound derived from the graph).
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Maximum number of monomials the census may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_MONOMIAL_CAP)]
    monomial_cap: u64,
    /// Maximum number of chordless cycles to enumerate.
    #[arg(long, global = true, default_value_t = cycles::DEFAULT_CYCLE_CAP)]
    cycle_cap: usize,
    /// Largest S-pair degree considered during Gröbner computations.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_CAP)]
    degree_cap: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Full report combining the cycle criterion, the census and elimination.
    Analyze {
        #[arg(default_value = "-")]
        file: String,
        /// Skip elimination and minimalization.
        #[arg(long)]
        no_groebner: bool,
    },
    /// Emit one of the built-in graph families as an edge list.
    Generate {
        /// gn, hn, cube, octagon or remark
        family: Family,
        n: Option<usize>,
    },
    /// Chordless cycles and the cycle-count bound.
    Cycles {
        #[arg(default_value = "-")]
        file: String,
    },
    /// A minimal generating set of the toric ideal.
    Gens {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Reduced lex Gröbner basis of the toric ideal.
    Groebner {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Hilbert function and h-vector.
    Hvector {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Brute-force minimal generator census.
    OracleCheck {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Graphviz rendering.
    Dot {
        #[arg(default_value = "-")]
        file: String,
    },
}

enum Output {
    Json(Value, u8),
    Text(String),
}

fn read_graph(path: &str) -> Result<Graph> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    Graph::parse(&text).with_context(|| format!("parsing {path}"))
}

fn rendered(basis: &BinomialIdealBasis) -> Vec<String> {
    basis.elements.iter().map(ToString::to_string).collect()
}

fn verdict_code(v: Option<bool>) -> u8 {
    match v {
        Some(true) => 0,
        Some(false) => 1,
        None => 2,
    }
}

fn run(cli: &Cli) -> Result<Output> {
    let caps = &cli.caps;
    let out = match &cli.command {
        Command::Analyze { file, no_groebner } => {
            let g = read_graph(file)?;
            let config = AnalyzeConfig {
                max_degree: caps.max_degree,
                monomial_cap: caps.monomial_cap,
                cycle_cap: caps.cycle_cap,
                degree_cap: caps.degree_cap,
                algebraic: !no_groebner,
            };
            let r = report::analyze(&g, &config)?;
            let code = r.ci.exit_code() as u8;
            let mut value = serde_json::to_value(&r)?;
            // a boolean verdict keeps `ci` in step with the exit status
            value["ci"] = match r.ci {
                Verdict::Ci => json!(true),
                Verdict::NotCi => json!(false),
                Verdict::Inconclusive => Value::Null,
            };
            Output::Json(value, code)
        }
        Command::Generate { family, n } => Output::Text(family.generate(*n)?.to_edge_list()),
        Command::Cycles { file } => {
            let g = read_graph(file)?;
            let cyc = cycles::chordless_cycles_capped(&g, caps.cycle_cap)?;
            let ci_graph = g.is_bipartite().map(|_| cycles::pair_sharing_two_edges(&cyc));
            let relation = g
                .is_connected()
                .then(|| ChordlessCount::new(cyc.len(), g.cycle_rank() as i64).relation);
            Output::Json(
                json!({
                    "count": cyc.len(),
                    "bound": g.cycle_rank(),
                    "relation": relation,
                    "ci_graph": ci_graph.as_ref().map(Option::is_none),
                    "witness": ci_graph.flatten(),
                    "cycles": cyc,
                }),
                0,
            )
        }
        Command::Gens { file } => {
            let g = read_graph(file)?;
            let gb = binomial::elimination_generators_capped(&g, caps.degree_cap)?;
            let minimal = binomial::minimalize(&gb, &g)?;
            Output::Json(
                json!({
                    "count": minimal.len(),
                    "height": g.toric_height(),
                    "degrees": minimal.degree_counts(),
                    "generators": rendered(&minimal),
                }),
                0,
            )
        }
        Command::Groebner { file } => {
            let g = read_graph(file)?;
            let gb = binomial::elimination_generators_capped(&g, caps.degree_cap)?;
            let walks = binomial::groebner_walk_subset(&g, &gb);
            Output::Json(
                json!({
                    "size": gb.len(),
                    "degrees": gb.degree_counts(),
                    "walks_matched": walks.all_matched(),
                    "basis": rendered(&gb),
                }),
                0,
            )
        }
        Command::Hvector { file } => {
            let g = read_graph(file)?;
            let max = caps.max_degree.unwrap_or_else(|| g.toric_height() + 1);
            Output::Json(serde_json::to_value(hilbert::h_vector(&g, max)?)?, 0)
        }
        Command::OracleCheck { file } => {
            let g = read_graph(file)?;
            let max = match caps.max_degree {
                Some(d) => d,
                None => oracle::default_max_degree(&g)?,
            };
            let r = oracle::ci_oracle(&g, max, caps.monomial_cap)?;
            let ci = match r.verdict {
                OracleVerdict::Ci => Some(true),
                OracleVerdict::NotCi => Some(false),
                OracleVerdict::Inconclusive => None,
            };
            Output::Json(
                json!({
                    "degrees": r.census.degrees,
                    "total": r.census.total,
                    "height": r.census.height,
                    "ci": ci,
                    "complete_up_to": r.census.complete_up_to,
                }),
                verdict_code(ci),
            )
        }
        Command::Dot { file } => Output::Text(read_graph(file)?.to_dot()),
    };
    Ok(out)
}

fn table(value: &Value) -> String {
    let Value::Object(map) = value else {
        return format!("{value:#}\n");
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in map {
        let cell = match v {
            Value::String(s) => s.clone(),
            Value::Null => "-".into(),
            other => other.to_string(),
        };
        out.push_str(&format!("{k:<width$}  {cell}\n"));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let (text, code) = match out {
                Output::Json(v, code) if cli.pretty => (table(&v), code),
                Output::Json(v, code) => (format!("{v}\n"), code),
                Output::Text(t) => (t, 0),
            };
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
