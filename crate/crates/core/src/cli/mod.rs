//! The `capax` command line: argument parsing, dispatch and exit codes.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | parse or validation error |
//! | 2 | enumeration budget exceeded |
//! | 3 | lattice/polar cross-check mismatch |
//! | 4 | domain is not big (contact commands) |
//! | 5 | T not admissible (structure; report still printed) |

mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::capacities::{
    capacity_sequence, obstruct_embedding, CapacityConfig, CapacityError, CapacityReport, Method,
    ObstructionReport,
};
use crate::contact::{
    contact_sequence, ekp_squeezing_verdict, obstruct_contact_embedding, ContactCapacityReport,
    ContactError, SqueezingVerdict,
};
use crate::module_structure::{
    spectrum_report, structure_report, CirculantForm, SpectrumReport, StructureError, StructureReport,
};
use crate::rational::Rational;
use crate::toric_geometry::spec_file::{self, SpecError};
use crate::toric_geometry::{GeometryError, ToricDomain, DEFAULT_ENUM_BUDGET};

pub use render::{render, DISCREPANCY_NOTE};

pub const BUDGET_ENV: &str = "CAPAX_ENUM_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "capax", version, about = "Capacities of convex toric domains, computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Lattice,
    Polar,
    Closed,
    CrossCheck,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Symplectic capacities c_1..c_kmax.
    Caps {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long, default_value_t = 10)]
        kmax: u64,
        #[arg(long, value_enum, default_value = "cross-check")]
        method: MethodArg,
        #[command(flatten)]
        output: Output,
        /// Append the E(3.5,4) table note when that domain is printed.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        note_discrepancy: bool,
    },
    /// Contact capacities [c]_1..[c]_kmax of X_Ω × S¹.
    ContactCaps {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long, default_value_t = 10)]
        kmax: u64,
        /// JSON array of c_k values used instead of the computed ones.
        #[arg(long = "override")]
        override_file: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        note_discrepancy: bool,
    },
    /// Degree data of the cohomology at level T over F_{p_ℓ}.
    Structure {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long = "T")]
        t: Rational,
        #[arg(long)]
        ell: u64,
        /// A point Z of the polar slice, comma separated; repeatable.
        #[arg(long = "eta", allow_hyphen_values = true)]
        eta: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Embedding obstructions from c_k (or [c]_k with --contact), or the
    /// ball squeezing criteria with --ekp.
    Obstruct {
        #[arg(long, required_unless_present = "ekp")]
        source: Option<PathBuf>,
        #[arg(long, required_unless_present = "ekp")]
        target: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        kmax: u64,
        #[arg(long)]
        contact: bool,
        #[arg(long, requires_all = ["r2", "big_r2"])]
        ekp: bool,
        /// πr² of the target ball.
        #[arg(long)]
        r2: Option<Rational>,
        /// πR² of the source ball.
        #[arg(long = "R2")]
        big_r2: Option<Rational>,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[command(flatten)]
        output: Output,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        note_discrepancy: bool,
    },
    /// Spectrum and indices of the circulant form A_z.
    Spectrum {
        /// Odd multiplier; defaults to the smallest odd M with −z < Mℓ/4.
        #[arg(long = "M")]
        m: Option<u64>,
        #[arg(long)]
        ell: u64,
        #[arg(long, allow_hyphen_values = true)]
        z: Rational,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommandMeta {
    pub name: String,
    pub version: String,
    pub input_digest: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "report", rename_all = "snake_case")]
pub enum Payload {
    Capacities(CapacityReport),
    Contact(ContactCapacityReport),
    Structure(StructureReport),
    Obstruction(ObstructionReport),
    Squeezing(SqueezingVerdict),
    Spectrum(SpectrumReport),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub command: CommandMeta,
    pub format: Format,
    pub payload: Payload,
    pub notes: Vec<String>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Spec { path: PathBuf, source: SpecError },
    #[error(transparent)]
    Capacity(#[from] CapacityError),
    #[error(transparent)]
    Contact(#[from] ContactError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("cross-check failed at k={k}: lattice gives {lattice}, polar gives {polar}")]
    OracleMismatch {
        k: u64,
        lattice: Rational,
        polar: Rational,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use CapacityError::KTooLargeForEnumeration as Budget;
        match self {
            CliError::Capacity(Budget { .. })
            | CliError::Contact(ContactError::Capacity(Budget { .. }))
            | CliError::Structure(StructureError::EnumerationBudgetExceeded { .. })
            | CliError::Structure(StructureError::Geometry(GeometryError::EnumerationBudgetExceeded {
                ..
            })) => 2,
            CliError::OracleMismatch { .. } => 3,
            CliError::Contact(ContactError::NotBig { .. }) => 4,
            _ => 1,
        }
    }
}

/// Budget from `CAPAX_ENUM_BUDGET`, falling back to the default.
pub fn config_from_env() -> Result<CapacityConfig, CliError> {
    match std::env::var(BUDGET_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map(|enum_budget| CapacityConfig { enum_budget })
            .map_err(|_| CliError::Usage(format!("{BUDGET_ENV} must be a positive integer, got {s:?}"))),
        Err(_) => Ok(CapacityConfig {
            enum_budget: DEFAULT_ENUM_BUDGET,
        }),
    }
}

struct Input {
    bytes: Vec<u8>,
}

impl Input {
    fn new() -> Self {
        Input { bytes: Vec::new() }
    }

    fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        self.bytes.extend_from_slice(text.as_bytes());
        Ok(text)
    }

    fn domain(&mut self, path: &Path) -> Result<ToricDomain, CliError> {
        let text = self.read(path)?;
        spec_file::parse_domain(&text).map_err(|source| CliError::Spec {
            path: path.to_path_buf(),
            source,
        })
    }

    fn digest(&self) -> String {
        hex::encode(Sha256::digest(&self.bytes))
    }
}

fn meta(name: &str, input: &Input) -> CommandMeta {
    CommandMeta {
        name: name.to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        input_digest: input.digest(),
    }
}

fn parse_point(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid point {s:?}")))
        })
        .collect()
}

fn parse_override(text: &str, path: &Path) -> Result<Vec<Rational>, CliError> {
    let spec_err = |source| CliError::Spec {
        path: path.to_path_buf(),
        source,
    };
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| spec_err(e.into()))?;
    spec_file::rational_list_from_json(&value).map_err(spec_err)
}

/// Result of one command: the document plus the exit status to report with
/// it (0, or 5 for an inadmissible structure request).
pub struct Outcome {
    pub document: OutputDocument,
    pub status: i32,
}

fn table_example_note(note: bool, domains: &[&ToricDomain]) -> Vec<String> {
    if note && domains.iter().any(|d| d.is_table_example()) {
        vec![DISCREPANCY_NOTE.to_string()]
    } else {
        vec![]
    }
}

pub fn execute(command: &Command, config: &CapacityConfig) -> Result<Outcome, CliError> {
    let mut input = Input::new();
    let (name, format, payload, notes, status) = match command {
        Command::Caps {
            domain,
            kmax,
            method,
            output,
            note_discrepancy,
        } => {
            let d = input.domain(domain)?;
            let mut notes = Vec::new();
            let report = match method {
                MethodArg::Lattice => capacity_sequence(&d, *kmax, Method::Lattice, config)?,
                MethodArg::Polar => capacity_sequence(&d, *kmax, Method::Polar, config)?,
                MethodArg::Closed => capacity_sequence(&d, *kmax, Method::ClosedForm, config)?,
                MethodArg::CrossCheck => {
                    let lattice = capacity_sequence(&d, *kmax, Method::Lattice, config)?;
                    let polar = capacity_sequence(&d, *kmax, Method::Polar, config)?;
                    if let Some((a, b)) = lattice
                        .entries
                        .iter()
                        .zip(&polar.entries)
                        .find(|(a, b)| a.c_k != b.c_k)
                    {
                        return Err(CliError::OracleMismatch {
                            k: a.k,
                            lattice: a.c_k.clone(),
                            polar: b.c_k.clone(),
                        });
                    }
                    notes.push("lattice and polar computations agree for every k".to_string());
                    lattice
                }
            };
            notes.extend(table_example_note(*note_discrepancy, &[&d]));
            ("caps", output.format, Payload::Capacities(report), notes, 0)
        }
        Command::ContactCaps {
            domain,
            kmax,
            override_file,
            output,
            note_discrepancy,
        } => {
            let d = input.domain(domain)?;
            let row = match override_file {
                Some(p) => {
                    let text = input.read(p)?;
                    Some(parse_override(&text, p)?)
                }
                None => None,
            };
            let report = contact_sequence(&d, *kmax, row.as_deref(), config)?;
            let notes = table_example_note(*note_discrepancy, &[&d]);
            ("contact-caps", output.format, Payload::Contact(report), notes, 0)
        }
        Command::Structure {
            domain,
            t,
            ell,
            eta,
            output,
        } => {
            let d = input.domain(domain)?;
            let points = eta.iter().map(|s| parse_point(s)).collect::<Result<Vec<_>, _>>()?;
            let report = structure_report(&d, t.clone(), *ell, &points, config.enum_budget)?;
            let status = if report.admissible { 0 } else { 5 };
            let notes = if report.admissible {
                vec![]
            } else {
                vec!["T is outside the admissible range; only the verdict is reported".to_string()]
            };
            ("structure", output.format, Payload::Structure(report), notes, status)
        }
        Command::Obstruct {
            source,
            target,
            kmax,
            contact,
            ekp,
            r2,
            big_r2,
            dim,
            output,
            note_discrepancy,
        } => {
            if *ekp {
                let (Some(r2), Some(big_r2)) = (r2, big_r2) else {
                    return Err(CliError::Usage("--ekp needs --r2 and --R2".into()));
                };
                input.bytes.extend_from_slice(format!("{r2} {big_r2} {dim}").as_bytes());
                let verdict = ekp_squeezing_verdict(r2.clone(), big_r2.clone(), *dim)?;
                ("obstruct", output.format, Payload::Squeezing(verdict), vec![], 0)
            } else {
                let (Some(source), Some(target)) = (source, target) else {
                    return Err(CliError::Usage("--source and --target are required".into()));
                };
                let s = input.domain(source)?;
                let t = input.domain(target)?;
                let report = if *contact {
                    obstruct_contact_embedding(&s, &t, *kmax, config)?
                } else {
                    obstruct_embedding(&s, &t, *kmax, config)?
                };
                let notes = table_example_note(*note_discrepancy, &[&s, &t]);
                ("obstruct", output.format, Payload::Obstruction(report), notes, 0)
            }
        }
        Command::Spectrum { m, ell, z, output } => {
            input
                .bytes
                .extend_from_slice(format!("{m:?} {ell} {z}").as_bytes());
            let form = match m {
                Some(m) => CirculantForm::new(*m, *ell, z.clone())?,
                None => CirculantForm::with_auto_m(*ell, z.clone())?,
            };
            let report = spectrum_report(&form);
            let notes = if report.oracle_agrees {
                vec![]
            } else {
                vec!["closed-form eigenvalues disagree with the dense eigensolver".to_string()]
            };
            ("spectrum", output.format, Payload::Spectrum(report), notes, 0)
        }
    };
    Ok(Outcome {
        document: OutputDocument {
            command: meta(name, &input),
            format,
            payload,
            notes,
        },
        status,
    })
}

/// Parses `args` (including the program name), runs the command and writes
/// the rendered document to `out`. Returns the process exit code.
pub fn run_with_config<I, T>(args: I, config: &CapacityConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli.command, config) {
        Ok(outcome) => match render(&outcome.document) {
            Ok(rendered) => {
                let _ = out.write_all(rendered.stdout.as_bytes());
                for line in rendered.stderr {
                    let _ = writeln!(err, "{line}");
                }
                outcome.status
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                1
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Like [`run_with_config`], with the budget taken from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match config_from_env() {
        Ok(config) => run_with_config(args, &config, out, err),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
