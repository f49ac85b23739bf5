//! `hfw`: batch reports on finite and symbolic hyperfields.
//!
//! Exit codes: 0 ok, 1 check failure, 2 schema or usage error, 3 two
//! independent computations that should agree did not.

mod commands;
mod report;
mod spec;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use commands::{Failure, Outcome};
use report::{digest, Parameters, Report};
use spec::Structure;

#[derive(Parser)]
#[command(name = "hfw", version, about = "Hyperfield workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct Common {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Height bound for searches over rationals.
    #[arg(long, global = true, default_value_t = 100)]
    height: u64,
    /// Value window [-B, B]^k for symbolic sweeps.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(i64).range(1..=32))]
    window: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Run the axiom checkers.
    Check { spec: String },
    /// Build a factor hyperfield F_p/T, or the sum table of Q/T.
    Factor {
        /// Prime p of F_p.
        #[arg(required_unless_present = "q", conflicts_with = "q")]
        p: Option<u64>,
        /// Generators of T ⊆ F_p×; defaults to the squares.
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        generators: Vec<u64>,
        /// One of squares, pos, p_units(p).
        #[arg(long)]
        q: Option<String>,
    },
    /// Orderings, realness and archimedean flags.
    Orderings { spec: String },
    /// Valuation hyperrings, value groups and residues.
    Valuations { spec: String },
    /// Every ordering against every valuation, condition by condition.
    Compat { spec: String },
    /// The Baer–Krull correspondence with its base orderings.
    BaerKrull { spec: String },
    /// Hyperfields of order at most N up to isomorphism.
    Enumerate {
        n: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
    },
}

fn usage(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("hfw: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = std::env::var("HFW_SEED").ok();
    let mut params = Parameters {
        height: cli.common.height,
        window: cli.common.window,
        order: None,
        seed,
    };

    let (name, input, structure): (&'static str, Vec<u8>, Option<Structure>) = match &cli.command {
        Command::Enumerate { n, order } => {
            let Some(n) = order.or(*n) else {
                return usage("enumerate needs an order");
            };
            params.order = Some(n);
            ("enumerate", Vec::new(), None)
        }
        Command::Factor { p, generators, q } => {
            let (s, input) = if let Some(q) = q {
                let key = match q.as_str() {
                    "squares" => "q_squares".to_string(),
                    "pos" => "q_pos".to_string(),
                    other => format!("q_{other}"),
                };
                (spec::builtin(&key), key)
            } else {
                let p = p.expect("clap requires p");
                let text = if generators.is_empty() {
                    format!("fp_squares({p})")
                } else {
                    serde_json::json!({"kind": "factor_fp", "p": p, "generators": generators}).to_string()
                };
                let s = if generators.is_empty() { spec::builtin(&text) } else { spec::parse(&text) };
                (s, text)
            };
            match s {
                Ok(s) => ("factor", input.into_bytes(), Some(s)),
                Err(e) => return usage(e),
            }
        }
        Command::Check { spec }
        | Command::Orderings { spec }
        | Command::Valuations { spec }
        | Command::Compat { spec }
        | Command::BaerKrull { spec } => {
            let name = match cli.command {
                Command::Check { .. } => "check",
                Command::Orderings { .. } => "orderings",
                Command::Valuations { .. } => "valuations",
                Command::Compat { .. } => "compat",
                _ => "baer-krull",
            };
            match spec::load(spec) {
                Ok((s, bytes)) => (name, bytes, Some(s)),
                Err(e) => return usage(e),
            }
        }
    };

    let started = Instant::now();
    let result: Result<Outcome, Failure> = match (&cli.command, &structure) {
        (Command::Enumerate { .. }, _) => commands::enumerate(params.order.expect("set above")),
        (Command::Check { .. }, Some(s)) => commands::check(s, &params),
        (Command::Factor { .. }, Some(s)) => commands::factor(s, &params),
        (Command::Orderings { .. }, Some(s)) => commands::orderings(s, &params),
        (Command::Valuations { .. }, Some(s)) => commands::valuations(s, &params),
        (Command::Compat { .. }, Some(s)) => commands::compat(s, &params),
        (Command::BaerKrull { .. }, Some(s)) => commands::baer_krull(s, &params),
        _ => unreachable!("every other command loads a structure"),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(f) => {
            eprintln!("hfw {name}: {}", f.message);
            return ExitCode::from(f.code);
        }
    };

    let report = Report {
        command: name,
        input_digest: digest(name, &input, &params),
        structure: structure.as_ref().map_or_else(|| "enumeration".into(), Structure::name),
        status: outcome.status,
        parameters: params,
        findings: outcome.findings,
        witnesses: outcome.witnesses,
    };
    if cli.common.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", outcome.text);
        for w in &report.witnesses {
            println!("witness: {w}");
        }
        eprintln!("{name}: {:?} in {:.2?}", report.status, started.elapsed());
    }
    ExitCode::from(report.status.exit_code())
}
