//! Command-line front end: conversions, Puiseux characteristics, plane
//! branches, per-germ info, and the census catalog.
//!
//! Exit codes: 0 on success, 1 for bad input or I/O trouble, 2 when an
//! internal identity check fails (method comparison mismatch, census
//! violations, round-trip failures).

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use goursat_core::census::{cross_validate, write_catalog_csv, write_catalog_jsonl, InfoRecord};
use goursat_core::{
    derived_to_rvt, puiseux_from_derived, puiseux_from_exponents, puiseux_from_rvt,
    rvt_to_derived, BranchSupport, DerivedVector, Error, PuiseuxCharacteristic, RvtCode,
    SmallGrowthVector,
};

#[derive(Parser)]
#[command(
    name = "goursat",
    version,
    about = "Goursat germ invariants: growth vectors, letter codes, Puiseux characteristics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between the four representations.
    Convert {
        /// Representation of VALUE.
        #[arg(long, value_enum)]
        from: Kind,
        /// Representation to print.
        #[arg(long, value_enum)]
        to: Kind,
        value: String,
    },
    /// Puiseux characteristic of a critical germ.
    Puiseux {
        #[command(flatten)]
        input: ReprInput,
        /// Computation route; `both` prints the two results and fails on
        /// mismatch.
        #[arg(long, value_enum, default_value_t = Method::Theorem)]
        method: Method,
    },
    /// Puiseux characteristic of a parametrized plane branch.
    Curve {
        /// Multiplicity m of the branch (t^m, ...).
        #[arg(short, long)]
        multiplicity: u64,
        /// Comma-separated support exponents, e.g. "6,7".
        #[arg(short, long)]
        exponents: String,
    },
    /// Everything known about one germ.
    Info {
        #[command(flatten)]
        input: ReprInput,
        /// Emit a single JSON object with a schema marker.
        #[arg(long)]
        json: bool,
    },
    /// Write the catalog of all codes up to a level and cross-validate.
    Census {
        #[arg(long)]
        max_level: u64,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
        /// Catalog path; defaults to census.csv / census.jsonl.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Cross-validate without writing a catalog.
    Verify {
        #[arg(long)]
        max_level: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Small growth vector, comma-separated ("2,3,4,4,5").
    Sgv,
    /// Flat derived vector, comma-separated ("1,1,2").
    Der,
    /// Derived vector in block form ("1^2 2^6 4").
    Blocks,
    /// Letter code over R, V, T ("RRV").
    Rvt,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Direct formula on the derived vector.
    Theorem,
    /// Stage recursion over the code's critical strings.
    Mz,
    /// Run both and compare.
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Jsonl,
}

/// One germ, given in whichever representation is at hand.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct ReprInput {
    /// Small growth vector, comma-separated.
    #[arg(long)]
    sgv: Option<String>,
    /// Flat derived vector, comma-separated.
    #[arg(long)]
    der: Option<String>,
    /// Derived vector in block form.
    #[arg(long)]
    blocks: Option<String>,
    /// Letter code over R, V, T.
    #[arg(long)]
    rvt: Option<String>,
}

impl ReprInput {
    fn to_derived(&self) -> Result<DerivedVector, Error> {
        if let Some(s) = &self.sgv {
            return Ok(SmallGrowthVector::parse(s)?.to_derived());
        }
        if let Some(s) = &self.der {
            return DerivedVector::parse_flat(s);
        }
        if let Some(s) = &self.blocks {
            return DerivedVector::parse_blocks(s);
        }
        if let Some(s) = &self.rvt {
            return rvt_to_derived(&RvtCode::parse(s)?);
        }
        unreachable!("clap enforces exactly one representation")
    }
}

struct Failure {
    exit: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let exit = match err {
            Error::RoundTripFailure { .. } => 2,
            _ => 1,
        };
        Failure { exit, message: err.to_string() }
    }
}

fn identity_failure(message: String) -> Failure {
    Failure { exit: 2, message }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let exit = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(exit);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.exit)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Convert { from, to, value } => {
            let der = parse_as(from, &value)?;
            println!("{}", render_as(to, &der)?);
            Ok(())
        }
        Command::Puiseux { input, method } => {
            let der = input.to_derived()?;
            match method {
                Method::Theorem => println!("{}", puiseux_from_derived(&der)?),
                Method::Mz => println!("{}", staged_puiseux(&der)?),
                Method::Both => {
                    let direct = puiseux_from_derived(&der)?;
                    let staged = staged_puiseux(&der)?;
                    println!("{direct}");
                    println!("{staged}");
                    if direct != staged {
                        return Err(identity_failure(format!(
                            "methods disagree: {direct} vs {staged}"
                        )));
                    }
                }
            }
            Ok(())
        }
        Command::Curve { multiplicity, exponents } => {
            let exps = parse_exponents(&exponents)?;
            let branch = BranchSupport::new(multiplicity, exps)?;
            println!("{}", puiseux_from_exponents(&branch)?);
            Ok(())
        }
        Command::Info { input, json } => {
            let record = InfoRecord::from_derived(&input.to_derived()?)?;
            if json {
                let doc = record.into_document();
                let text = serde_json::to_string(&doc)
                    .map_err(|e| Failure { exit: 1, message: e.to_string() })?;
                println!("{text}");
            } else {
                print_record(&record);
            }
            Ok(())
        }
        Command::Census { max_level, format, output } => {
            let report = cross_validate(max_level)?;
            let path = output.unwrap_or_else(|| {
                PathBuf::from(match format {
                    Format::Csv => "census.csv",
                    Format::Jsonl => "census.jsonl",
                })
            });
            let file = File::create(&path).map_err(|e| Failure {
                exit: 1,
                message: format!("cannot write {}: {e}", path.display()),
            })?;
            let mut writer = BufWriter::new(file);
            match format {
                Format::Csv => write_catalog_csv(&mut writer, max_level)?,
                Format::Jsonl => write_catalog_jsonl(&mut writer, max_level)?,
            }
            writer.flush().map_err(|e| Failure { exit: 1, message: e.to_string() })?;
            println!("wrote {}", path.display());
            print!("{}", report.summary());
            if report.is_clean() {
                Ok(())
            } else {
                Err(identity_failure(format!("{} checks failed", report.failures.len())))
            }
        }
        Command::Verify { max_level } => {
            let report = cross_validate(max_level)?;
            print!("{}", report.summary());
            if report.is_clean() {
                Ok(())
            } else {
                Err(identity_failure(format!("{} checks failed", report.failures.len())))
            }
        }
    }
}

fn parse_as(kind: Kind, value: &str) -> Result<DerivedVector, Error> {
    match kind {
        Kind::Sgv => Ok(SmallGrowthVector::parse(value)?.to_derived()),
        Kind::Der => DerivedVector::parse_flat(value),
        Kind::Blocks => DerivedVector::parse_blocks(value),
        Kind::Rvt => rvt_to_derived(&RvtCode::parse(value)?),
    }
}

fn render_as(kind: Kind, der: &DerivedVector) -> Result<String, Error> {
    Ok(match kind {
        Kind::Sgv => der.to_sgv()?.to_string(),
        Kind::Der => der.to_string(),
        Kind::Blocks => der.blocks_string(),
        Kind::Rvt => derived_to_rvt(der)?.word(),
    })
}

fn staged_puiseux(der: &DerivedVector) -> Result<PuiseuxCharacteristic, Error> {
    puiseux_from_rvt(&derived_to_rvt(der)?)
}

fn parse_exponents(text: &str) -> Result<Vec<u64>, Failure> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<u64>().map_err(|_| Failure {
                exit: 1,
                message: format!("expected a number in the exponent list, got '{t}'"),
            })
        })
        .collect()
}

fn print_record(rec: &InfoRecord) {
    println!("code        {}", rec.code);
    println!("level       {}", rec.level);
    println!("dim         {}", rec.dim);
    println!("sgv         {}", rec.sgv);
    println!("der         {}", rec.der);
    println!("der_blocks  {}", rec.der_blocks);
    println!("critical    {}", rec.critical);
    match &rec.puiseux {
        Some(pc) => println!("puiseux     {pc}"),
        None => println!("puiseux     none"),
    }
    if let Some(reason) = &rec.reason {
        println!("reason      {reason}");
    }
    println!("g           {}", rec.g);
    println!("sgv_length  {}", rec.sgv_length);
}
