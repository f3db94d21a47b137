//! `fdds`: evaluate, solve and inspect polynomial equations over finite
//! discrete dynamical systems.
//!
//! Exit codes: 0 on success, a true answer or a solution; 1 on a false
//! answer or no solution; 2 on usage or input errors.

mod input;
mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fdds::oracle;
use fdds::{Fdds, Forest};

use input::{load, load_fdds, load_fdds_poly, load_forest_poly, InputError};
use output::{Report, Value};

#[derive(Parser)]
#[command(
    name = "fdds",
    version,
    about = "Polynomial equations over finite discrete dynamical systems"
)]
struct Cli {
    /// Print one JSON record {status, value, trace} instead of literals.
    #[arg(long, global = true)]
    json: bool,

    /// Write the resulting system(s) in Graphviz DOT format to FILE.
    #[arg(long, global = true, value_name = "FILE")]
    dot: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Fdds,
    Unroll,
    Forest,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate P(X).
    Eval {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        x: String,
        /// `fdds` or `forest`.
        #[arg(long, value_enum, default_value = "fdds")]
        mode: Mode,
    },
    /// Solve P(X) = B.
    Solve {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        rhs: String,
        #[arg(long, value_enum, default_value = "fdds")]
        mode: Mode,
        /// Cut depth for `--mode unroll` (default 2α² + depth of B).
        #[arg(long)]
        depth: Option<u32>,
    },
    /// Decide whether X ↦ P(X) is injective; exit 1 if it is not.
    Injective {
        #[arg(long)]
        poly: String,
    },
    /// Print X ≠ Y with P(X) = P(Y), or with C_b X^k = C_b Y^k for each b.
    Witness {
        #[arg(long, conflicts_with = "cycles", required_unless_present = "cycles")]
        poly: Option<String>,
        /// Comma-separated cycle lengths, each at least 2.
        #[arg(long, value_delimiter = ',')]
        cycles: Option<Vec<u64>>,
        #[arg(long, default_value_t = 1, requires = "cycles")]
        k: u32,
    },
    /// Semiring operations on FDDS.
    Op {
        #[command(subcommand)]
        op: Op,
    },
    /// Print the unroll of X cut at a depth, one tree per periodic state.
    Unroll {
        x: String,
        #[arg(long)]
        depth: u32,
    },
    /// Decide whether two FDDS are isomorphic; exit 1 if they are not.
    Iso { a: String, b: String },
    /// Brute-force reference answers for small sizes.
    Oracle {
        #[command(subcommand)]
        query: Query,
    },
}

#[derive(Subcommand)]
enum Op {
    Sum {
        a: String,
        b: String,
    },
    Product {
        a: String,
        b: String,
    },
    /// A − B; exit 1 if B is not contained in A.
    Subtract {
        a: String,
        b: String,
    },
    /// Components whose cycle length divides the period.
    Dive {
        a: String,
        #[arg(long)]
        period: usize,
    },
    /// Components whose cycle length equals the period.
    Size {
        a: String,
        #[arg(long)]
        period: usize,
    },
    Power {
        a: String,
        #[arg(long)]
        exponent: u32,
    },
}

#[derive(Subcommand)]
enum Query {
    /// Rooted trees with exactly N nodes.
    Trees { n: usize },
    /// Connected FDDS with exactly N states.
    Components { n: usize },
    /// FDDS with exactly N states.
    Fdds { n: usize },
    /// Every X with at most N states and P(X) = B.
    Solve {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        rhs: String,
        #[arg(long)]
        max_nodes: usize,
    },
}

fn lib_err(e: fdds::Error) -> InputError {
    InputError(e.to_string())
}

fn literals<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Many(xs.into_iter().map(|x| x.to_string()).collect())
}

fn run(command: Command) -> Result<Report, InputError> {
    Ok(match command {
        Command::Eval { poly, x, mode } => match mode {
            Mode::Forest => {
                let p = load_forest_poly(&poly)?;
                let x: Forest = load(&x)?;
                Report::ok(Value::One(p.evaluate(&x).to_string()))
            }
            _ => {
                let p = load_fdds_poly(&poly)?;
                let y = p.evaluate(&load_fdds(&x)?);
                Report::ok(Value::One(y.to_string())).with_graph("result", &y)
            }
        },
        Command::Solve { poly, rhs, mode, depth } => match mode {
            Mode::Forest => {
                let p = load_forest_poly(&poly)?;
                let b: Forest = load(&rhs)?;
                let out = fdds::solve_forest(&p, &b).map_err(lib_err)?;
                Report::solved(out.value.map(|x| x.to_string()), &out.trace)
            }
            Mode::Fdds | Mode::Unroll => {
                let p = load_fdds_poly(&poly)?;
                let b = load_fdds(&rhs)?;
                let out = match (mode, depth) {
                    (Mode::Unroll, Some(n)) => fdds::solve_unroll_at(&p, &b, n),
                    (Mode::Unroll, None) => fdds::solve_unroll(&p, &b),
                    _ => fdds::solve_fdds(&p, &b),
                }
                .map_err(lib_err)?;
                let report = Report::solved(out.value.as_ref().map(Fdds::to_string), &out.trace);
                match &out.value {
                    Some(x) => report.with_graph("solution", x),
                    None => report,
                }
            }
        },
        Command::Injective { poly } => {
            let p = load_fdds_poly(&poly)?;
            let injective = fdds::is_injective(&p).map_err(lib_err)?;
            let message = if injective {
                "injective: some non-constant coefficient has a fixed point"
            } else {
                "not injective: no non-constant coefficient has a fixed point"
            };
            Report::boolean(injective, message.into())
        }
        Command::Witness { poly, cycles, k } => {
            let pair = match (poly, cycles) {
                (Some(poly), _) => fdds::counterexample(&load_fdds_poly(&poly)?).map_err(lib_err)?,
                (None, Some(set)) => Some(fdds::counterexample_monomial(&set, k).map_err(lib_err)?),
                (None, None) => unreachable!("clap requires one of --poly and --cycles"),
            };
            match pair {
                Some((x, y)) => Report::ok(literals([&x, &y])).with_graph("x", &x).with_graph("y", &y),
                None => Report::boolean(false, "injective: no witness exists".into()),
            }
        }
        Command::Op { op } => {
            let result = match op {
                Op::Sum { a, b } => Some(load_fdds(&a)?.sum(&load_fdds(&b)?)),
                Op::Product { a, b } => Some(load_fdds(&a)?.product(&load_fdds(&b)?)),
                Op::Subtract { a, b } => load_fdds(&a)?.checked_sub(&load_fdds(&b)?),
                Op::Dive { a, period } => Some(load_fdds(&a)?.set_dive(period)),
                Op::Size { a, period } => Some(load_fdds(&a)?.set_size(period)),
                Op::Power { a, exponent } => Some(load_fdds(&a)?.pow(exponent)),
            };
            match result {
                Some(x) => Report::ok(Value::One(x.to_string())).with_graph("result", &x),
                None => Report::boolean(false, "not contained: subtraction undefined".into()),
            }
        }
        Command::Unroll { x, depth } => {
            let forest = fdds::unroll_cut(&load_fdds(&x)?, depth);
            Report::ok(Value::One(forest.to_string()))
        }
        Command::Iso { a, b } => {
            let (a, b) = (load_fdds(&a)?, load_fdds(&b)?);
            let same = a == b;
            let message = if same { "isomorphic" } else { "not isomorphic" };
            Report::boolean(same, message.into())
        }
        Command::Oracle { query } => match query {
            Query::Trees { n } => Report::ok(literals(oracle::enumerate_trees(n).map_err(lib_err)?)),
            Query::Components { n } => Report::ok(literals(oracle::enumerate_components(n).map_err(lib_err)?)),
            Query::Fdds { n } => Report::ok(literals(oracle::enumerate_fdds(n).map_err(lib_err)?)),
            Query::Solve { poly, rhs, max_nodes } => {
                let p = load_fdds_poly(&poly)?;
                let sols = oracle::brute_solve(&p, &load_fdds(&rhs)?, max_nodes).map_err(lib_err)?;
                if sols.is_empty() {
                    Report::solved(None, &[])
                } else {
                    let mut r = Report::ok(literals(&sols));
                    r.status = "solution";
                    r
                }
            }
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(path) = &cli.dot {
        let Some(dot) = report.dot() else {
            eprintln!("error: --dot: this result has no FDDS to draw");
            return ExitCode::from(2);
        };
        if let Err(e) = fs::write(path, dot) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    report.print(cli.json)
}
