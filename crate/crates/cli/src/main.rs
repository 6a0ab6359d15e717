//! `hyperlie` analyzes hypercomplex nilpotent Lie algebras from the command
//! line.
//!
//! Inputs name either a bundled catalog entry or a file; files holding the
//! JSON schema are recognised by a `.json` extension and everything else is
//! parsed as structure equations. Exit codes: 0 when the input is valid,
//! 2 when validity checks fail (the report is still emitted), 1 on I/O or
//! parse errors.

mod data;

use clap::{Parser, Subcommand};
use hyperlie_core::dsl::{self, AlgebraSpec};
use hyperlie_core::obata::CyclicPermutation;
use hyperlie_core::report::{self, AnalyzeOptions, Report};
use hyperlie_core::{catalog, construct, HypercomplexLieAlgebra};
use std::fs;
use std::path::Path;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hyperlie",
    version,
    about = "Exact analysis of hypercomplex nilpotent Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the report as a single JSON document on standard output
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity, quaternion relations, and integrability
    Validate {
        /// Catalog entry name, or path to a structure-equation or JSON file
        input: String,
    },
    /// Report nilpotency data, the Obata connection, curvature, and holonomy
    Analyze {
        /// Catalog entry name, or path to a structure-equation or JSON file
        input: String,
        /// Cyclic permutation of (1, 2, 3) defining the connection form
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
        permutation: u8,
        /// Cap on series iterations (defaults to the ambient dimension)
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Compute the holonomy algebra of the Obata connection
    Holonomy {
        /// Catalog entry name, or path to a structure-equation or JSON file
        input: String,
    },
    /// Build a new algebra from a base and construction data
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// List the bundled algebras or print one
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Central extension of a base along mu data (see the data format docs)
    Mu {
        /// Catalog entry name, or path to a structure-equation or JSON file
        base: String,
        /// Path to a JSON mu file
        data: String,
    },
    /// Semidirect product of a base with a quaternionic representation
    Semidirect {
        /// Catalog entry name, or path to a structure-equation or JSON file
        base: String,
        /// Path to a JSON representation file
        data: String,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Print the catalog entry names
    List,
    /// Print one catalog entry as structure equations (JSON with --json)
    Show { name: String },
}

/// A terminal failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    /// I/O or parse failure (exit 1).
    fn parse(message: String) -> Failure {
        Failure { code: 1, message }
    }

    /// Validity failure (exit 2).
    fn invalid(message: String) -> Failure {
        Failure { code: 2, message }
    }
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
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Writes to standard output; a closed pipe ends the process quietly.
fn emit(text: &str) {
    use std::io::Write;
    if write!(std::io::stdout().lock(), "{text}").is_err() {
        std::process::exit(0);
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Validate { input } => {
            let spec = load_spec(input)?;
            let report = match &spec.j {
                Some(_) => report::validation_report(
                    &spec.to_hypercomplex().expect("structures are present"),
                ),
                None => report::lie_validation_report(&spec.name, &spec.to_lie_algebra()),
            };
            emit_report(&report, cli.json)
        }
        Command::Analyze {
            input,
            permutation,
            max_iter,
        } => {
            let h = load_hypercomplex(input)?;
            let opts = AnalyzeOptions {
                permutation: CyclicPermutation::from_index(*permutation as usize)
                    .expect("the argument parser keeps the index in 1..=3"),
                max_iter: *max_iter,
            };
            emit_report(&report::analyze(&h, &opts), cli.json)
        }
        Command::Holonomy { input } => {
            let h = load_hypercomplex(input)?;
            let validation = report::validation_report(&h);
            if !validation.valid {
                return emit_report(&validation, cli.json);
            }
            let report = report::holonomy_report(&h).map_err(|e| Failure::invalid(e.to_string()))?;
            if cli.json {
                emit(&report.to_json());
                emit("\n");
            } else {
                emit(&report.render_text());
            }
            Ok(0)
        }
        Command::Construct(cmd) => run_construct(cmd, cli.json),
        Command::Catalog(CatalogCommand::List) => {
            let names = catalog::names();
            if cli.json {
                let doc = serde_json::to_string_pretty(&names).expect("name lists serialize");
                emit(&doc);
                emit("\n");
            } else {
                for name in names {
                    emit(&name);
                    emit("\n");
                }
            }
            Ok(0)
        }
        Command::Catalog(CatalogCommand::Show { name }) => {
            let h = catalog::entry(name).map_err(|e| Failure::parse(e.to_string()))?;
            print_spec(&AlgebraSpec::from_hypercomplex(&h), cli.json);
            Ok(0)
        }
    }
}

fn run_construct(cmd: &ConstructCommand, json: bool) -> Result<u8, Failure> {
    let product = match cmd {
        ConstructCommand::Mu { base, data } => {
            let base = load_hypercomplex(base)?;
            let text = read_file(data)?;
            let mu = data::parse_mu(&text, base.dim())
                .map_err(|m| Failure::parse(format!("{data}: {m}")))?;
            construct::mu_extension(&base, &mu)
        }
        ConstructCommand::Semidirect { base, data } => {
            let base = load_hypercomplex(base)?;
            let text = read_file(data)?;
            let rho = data::parse_rho(&text, base.dim())
                .map_err(|m| Failure::parse(format!("{data}: {m}")))?;
            construct::semidirect(&base, &rho)
        }
    };
    let product = product.map_err(|e| Failure::invalid(e.to_string()))?;
    print_spec(&AlgebraSpec::from_hypercomplex(&product), json);
    Ok(0)
}

fn read_file(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::parse(format!("{path}: {e}")))
}

/// Resolves `input` to a parsed spec: an existing file is read (JSON when
/// the extension says so, structure equations otherwise); anything else
/// must name a catalog entry.
fn load_spec(input: &str) -> Result<AlgebraSpec, Failure> {
    let path = Path::new(input);
    if path.is_file() {
        let text = read_file(input)?;
        let parsed = if path.extension().is_some_and(|e| e == "json") {
            dsl::parse_json(&text)
        } else {
            dsl::parse_dsl(&text)
        };
        parsed.map_err(|e| Failure::parse(format!("{input}: {e}")))
    } else {
        match catalog::entry(input) {
            Ok(h) => Ok(AlgebraSpec::from_hypercomplex(&h)),
            Err(_) => Err(Failure::parse(format!(
                "'{input}' is neither a readable file nor a catalog entry"
            ))),
        }
    }
}

fn load_hypercomplex(input: &str) -> Result<HypercomplexLieAlgebra, Failure> {
    load_spec(input)?
        .to_hypercomplex()
        .map_err(|e| Failure::parse(e.to_string()))
}

fn emit_report(report: &Report, json: bool) -> Result<u8, Failure> {
    if json {
        emit(&report.to_json());
        emit("\n");
    } else {
        emit(&report.render_text());
    }
    Ok(if report.valid { 0 } else { 2 })
}

fn print_spec(spec: &AlgebraSpec, json: bool) {
    if json {
        emit(&spec.to_json());
        emit("\n");
    } else {
        emit(&spec.to_dsl());
    }
}
