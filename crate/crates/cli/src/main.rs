//! `coorbit`: build, validate and analyze Lie algebras given by rational
//! structure constants.
//!
//! Exit codes: 0 success, 1 validation or analysis failure, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use coorbit::casimir::{polynomial_casimirs, DEFAULT_DEGREE};
use coorbit::catalog::{theta_template, CatalogEntry, ExFParams, ThetaTag, NAMES};
use coorbit::document::{load, load_matrix, save};
use coorbit::exactalg::{parse_rational, Rational};
use coorbit::report::{analyze, AnalysisOptions};
use coorbit::spectral::spectral_report;
use coorbit::LieAlgebra;

#[derive(Parser)]
#[command(
    name = "coorbit",
    version,
    about = "Exact analysis of Lie algebras with rational structure constants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the format and the Jacobi identity of an algebra file.
    Validate { file: PathBuf },
    /// List or build catalog algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Analyze an algebra file or a catalog member (`catalog:NAME`).
    Analyze {
        target: String,
        #[command(flatten)]
        params: CatalogParams,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        max_casimir_degree: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a basis of the polynomial Casimirs up to a degree.
    Casimir {
        target: String,
        #[arg(long)]
        degree: u32,
        #[command(flatten)]
        params: CatalogParams,
    },
    /// Eigenvalue analysis of a matrix and closedness of S_A.
    Spectral {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List catalog names.
    List,
    /// Write a catalog algebra to a file.
    Build {
        name: String,
        #[command(flatten)]
        params: CatalogParams,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

#[derive(Args, Default)]
struct CatalogParams {
    /// Heisenberg half-dimension, or the size of A for exF.
    #[arg(long)]
    n: Option<usize>,
    /// Rational θ in the template A = diag(J, θJ).
    #[arg(long, conflicts_with = "theta_irrational")]
    theta: Option<String>,
    /// Symbolic irrational θ in the template A = diag(J, θJ).
    #[arg(long)]
    theta_irrational: Option<String>,
    /// Scalar c of the exF derivation.
    #[arg(long)]
    c: Option<String>,
    /// JSON file holding the matrix A.
    #[arg(long, conflicts_with_all = ["theta", "theta_irrational"])]
    matrix: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

enum Failure {
    Usage(String),
    Invalid(String),
}

impl From<coorbit::Error> for Failure {
    fn from(e: coorbit::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn rational_arg(flag: &str, text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|_| Failure::Usage(format!("--{flag}: invalid rational {text:?}")))
}

impl CatalogParams {
    fn theta_tag(&self) -> Result<Option<ThetaTag>, Failure> {
        if let Some(t) = &self.theta {
            return Ok(Some(ThetaTag::Rational(rational_arg("theta", t)?)));
        }
        Ok(self.theta_irrational.clone().map(ThetaTag::SymbolicIrrational))
    }

    /// `A` from `--matrix` or from the θ template; `None` if neither is given.
    fn matrix_a(&self) -> Result<Option<(coorbit::RatMatrix, Option<ThetaTag>)>, Failure> {
        if let Some(path) = &self.matrix {
            return Ok(Some((load_matrix(path)?, None)));
        }
        match self.theta_tag()? {
            Some(tag) => {
                if self.n.is_some_and(|n| n != 4) {
                    return Err(Failure::Usage("the θ template requires --n 4".into()));
                }
                Ok(Some((theta_template(&tag.stored_value()), Some(tag))))
            }
            None => Ok(None),
        }
    }

    fn entry(&self, name: &str) -> Result<CatalogEntry, Failure> {
        let uses_matrix = self.matrix.is_some() || self.theta.is_some() || self.theta_irrational.is_some();
        let reject = |what: &str| Failure::Usage(format!("{name} does not take {what}"));
        match name {
            "heisenberg" => {
                if uses_matrix || self.c.is_some() {
                    return Err(reject("matrix, θ or c parameters"));
                }
                Ok(CatalogEntry::Heisenberg(self.n.unwrap_or(1)))
            }
            "aff_real" | "aff_complex" => {
                if uses_matrix || self.c.is_some() || self.n.is_some() {
                    return Err(reject("parameters"));
                }
                Ok(if name == "aff_real" {
                    CatalogEntry::AffReal
                } else {
                    CatalogEntry::AffComplex
                })
            }
            "exF" => {
                let c = match &self.c {
                    Some(t) => rational_arg("c", t)?,
                    None => Rational::from_integer(1.into()),
                };
                let (a, theta) = self
                    .matrix_a()?
                    .ok_or_else(|| Failure::Usage("exF needs --matrix, --theta or --theta-irrational".into()))?;
                check_size(self.n, &a)?;
                let params = match theta {
                    Some(tag) => ExFParams::template(tag, c),
                    None => ExFParams::new(a, c)?,
                };
                Ok(CatalogEntry::ExF(params))
            }
            "abelian_extension" => {
                if self.c.is_some() {
                    return Err(reject("--c"));
                }
                let (a, theta) = self.matrix_a()?.ok_or_else(|| {
                    Failure::Usage("abelian_extension needs --matrix, --theta or --theta-irrational".into())
                })?;
                check_size(self.n, &a)?;
                Ok(CatalogEntry::AbelianExtension { a, theta })
            }
            other => Err(Failure::Usage(format!(
                "unknown catalog name {other:?}; expected one of {}",
                NAMES.join(", ")
            ))),
        }
    }
}

fn check_size(n: Option<usize>, a: &coorbit::RatMatrix) -> Result<(), Failure> {
    match n {
        Some(n) if n != a.rows() => Err(Failure::Usage(format!(
            "--n {n} does not match the {}x{} matrix",
            a.rows(),
            a.cols()
        ))),
        _ => Ok(()),
    }
}

/// Resolves `catalog:NAME` or a file path.
fn resolve(target: &str, params: &CatalogParams) -> Result<(LieAlgebra, Option<CatalogEntry>, String), Failure> {
    match target.strip_prefix("catalog:") {
        Some(name) => {
            let entry = params.entry(name)?;
            Ok((entry.build()?, Some(entry), name.to_string()))
        }
        None => {
            if params.n.is_some()
                || params.theta.is_some()
                || params.theta_irrational.is_some()
                || params.c.is_some()
                || params.matrix.is_some()
            {
                return Err(Failure::Usage(
                    "catalog parameters apply only to catalog: targets".into(),
                ));
            }
            Ok((load(target)?, None, target.to_string()))
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { file } => {
            let g = load(&file)?;
            println!(
                "ok: {} (dim {}, fingerprint {})",
                file.display(),
                g.dim(),
                g.fingerprint()
            );
        }
        Command::Catalog {
            action: CatalogAction::List,
        } => {
            for name in NAMES {
                println!("{name}");
            }
        }
        Command::Catalog {
            action: CatalogAction::Build { name, params, output },
        } => {
            let g = params.entry(&name)?.build()?;
            save(&g, &output)?;
            println!("wrote {} (dim {})", output.display(), g.dim());
        }
        Command::Analyze {
            target,
            params,
            max_casimir_degree,
            seed,
            format,
        } => {
            let (g, entry, name) = resolve(&target, &params)?;
            let options = AnalysisOptions {
                name,
                degree: max_casimir_degree,
                seed,
                entry,
            };
            let report = analyze(&g, &options)?;
            match format {
                Format::Text => print!("{}", report.render_text()),
                Format::Machine => println!("{}", report.to_machine()),
            }
        }
        Command::Casimir { target, degree, params } => {
            let (g, _, _) = resolve(&target, &params)?;
            let basis = polynomial_casimirs(&g, degree);
            println!("polynomial Casimirs of degree <= {degree}: {}", basis.len());
            for p in &basis.basis {
                println!("{p}");
            }
        }
        Command::Spectral { matrix, format } => {
            let report = spectral_report(&load_matrix(&matrix)?, None)?;
            match format {
                Format::Text => print!("{}", report.render_text()),
                Format::Machine => {
                    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"))
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
