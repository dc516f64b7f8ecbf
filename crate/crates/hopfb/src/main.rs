use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hopfb::error::Error;
use hopfb::registry::{
    self, render_tensor_terms_text, render_terms_text, AlgebraId, TensorTerm, Term,
};

/// Exact computations in the registered signed combinatorial Hopf algebras.
#[derive(Parser)]
#[command(name = "hopfb", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Render barred (negative) values with combining overbars instead of a
    /// leading minus. Text output only.
    #[arg(long, global = true)]
    unicode: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the graded dimensions for degrees 0..=DEGREE.
    Dims {
        algebra: String,
        degree: usize,
        /// Largest degree this command will accept.
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Multiply two basis labels.
    Mul { algebra: String, x: String, y: String },
    /// Coproduct of a basis label.
    Comul { algebra: String, x: String },
    /// Antipode of a basis label.
    Antipode { algebra: String, x: String },
    /// Check every bialgebra axiom exhaustively up to a total degree.
    Verify {
        algebra: String,
        /// Total degree bound for the sweep.
        #[arg(default_value_t = 4)]
        degree: usize,
        /// Largest degree this command will accept.
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// List the degree-DEGREE basis labels.
    Enumerate { algebra: String, degree: usize },
    /// Apply the sign-forgetting morphism from dqsym to qsym.
    MapQsym { x: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Dims {
            algebra,
            degree,
            max_degree,
        } => {
            if degree > max_degree {
                return Err(Error::DegreeBound {
                    requested: *degree,
                    maximum: *max_degree,
                });
            }
            let id: AlgebraId = algebra.parse()?;
            let dims = registry::dims(id, *degree);
            match cli.format {
                Format::Text => println!(
                    "{}",
                    dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
                ),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "algebra": id.name(),
                        "max_degree": degree,
                        "dims": dims,
                    })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mul { algebra, x, y } => {
            let id: AlgebraId = algebra.parse()?;
            let terms = registry::mul_terms(id, x, y)?;
            self::print_terms(cli, id, "mul", &terms);
            Ok(ExitCode::SUCCESS)
        }
        Command::Antipode { algebra, x } => {
            let id: AlgebraId = algebra.parse()?;
            let terms = registry::antipode_terms(id, x)?;
            self::print_terms(cli, id, "antipode", &terms);
            Ok(ExitCode::SUCCESS)
        }
        Command::MapQsym { x } => {
            let terms = registry::map_qsym_terms(x)?;
            self::print_terms(cli, AlgebraId::QSym, "map-qsym", &terms);
            Ok(ExitCode::SUCCESS)
        }
        Command::Comul { algebra, x } => {
            let id: AlgebraId = algebra.parse()?;
            let terms = registry::comul_terms(id, x)?;
            match cli.format {
                Format::Text => {
                    let terms = rebar_tensor(cli, terms);
                    println!("{}", render_tensor_terms_text(&terms));
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "algebra": id.name(),
                        "op": "comul",
                        "terms": registry::tensor_terms_json(&terms),
                    })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { algebra, degree } => {
            let id: AlgebraId = algebra.parse()?;
            let labels = registry::enumerate_terms(id, *degree);
            match cli.format {
                Format::Text => {
                    for (text, _) in labels {
                        println!("{}", rebar(cli, text));
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "algebra": id.name(),
                        "degree": degree,
                        "basis": labels.iter().map(|(t, j)| serde_json::json!({
                            "basis": t,
                            "basis_json": j,
                        })).collect::<Vec<_>>(),
                    })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            algebra,
            degree,
            max_degree,
        } => {
            if degree > max_degree {
                return Err(Error::DegreeBound {
                    requested: *degree,
                    maximum: *max_degree,
                });
            }
            let id: AlgebraId = algebra.parse()?;
            let report = registry::run_verify(id, *degree);
            match cli.format {
                Format::Text => println!("{}", report.summary()),
                Format::Json => {
                    let mut value = serde_json::to_value(&report).expect("report serializes");
                    value["passed"] = serde_json::Value::Bool(report.passed());
                    println!("{value}");
                }
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn print_terms(cli: &Cli, id: AlgebraId, op: &str, terms: &[Term]) {
    match cli.format {
        Format::Text => {
            let terms: Vec<Term> = terms
                .iter()
                .map(|t| Term {
                    basis: rebar(cli, t.basis.clone()),
                    ..t.clone()
                })
                .collect();
            println!("{}", render_terms_text(&terms));
        }
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "algebra": id.name(),
                "op": op,
                "terms": registry::terms_json(terms),
            })
        ),
    }
}

fn rebar_tensor(cli: &Cli, terms: Vec<TensorTerm>) -> Vec<TensorTerm> {
    terms
        .into_iter()
        .map(|t| TensorTerm {
            left: rebar(cli, t.left.clone()),
            right: rebar(cli, t.right.clone()),
            ..t
        })
        .collect()
}

/// Optionally rewrite `-12` as `1\u{0304}2\u{0304}` in label text.
fn rebar(cli: &Cli, text: String) -> String {
    if !cli.unicode {
        return text;
    }
    let mut out = String::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '-' && chars.peek().is_some_and(|d| d.is_ascii_digit()) {
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                out.push(d);
                out.push('\u{0304}');
                chars.next();
            }
        } else {
            out.push(c);
        }
    }
    out
}
