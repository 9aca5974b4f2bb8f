// SPDX-License-Identifier: MIT OR Apache-2.0
//! Command-line front end of the `quartic_strata` library.

use std::fs;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use quartic_strata::arith::{parse_rational, Rational, INVARIANT_NAMES};
use quartic_strata::classify::reduction_candidates;
use quartic_strata::forms::Form;
use quartic_strata::huicatalog::HuiCatalog;
use quartic_strata::invariants::dixmier_ohno;
use quartic_strata::pipeline::{
    classify_record, run_batch, selftest_with, BatchItem, BatchOptions, CurveRecord, DEMO_CORPUS,
};
use quartic_strata::singclass::{quartic_singularity_type, quartic_singularity_type_mod_p};
use quartic_strata::strata::{StrataCatalog, SyzygyRule};
use quartic_strata::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Rule {
    Quotient,
    Keep,
}

#[derive(Parser, Debug)]
#[command(name = "quartic", version, about = "Stable-reduction candidates of plane quartics from their invariants")]
struct Cli {
    /// Residue characteristic, above 7.
    #[arg(long, global = true)]
    prime: Option<u64>,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Stratum catalog file replacing the shipped one.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for batch jobs; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the 13 Dixmier-Ohno invariants of a quartic, over Q or modulo --prime.
    Invariants {
        /// A polynomial such as "x^4 + y^4 + z^4", or 15 coefficients.
        #[arg(required = true, num_args = 1..)]
        curve: Vec<String>,
    },
    /// Print the singularity type of a quartic, over Q or modulo --prime.
    SingType {
        #[arg(required = true, num_args = 1..)]
        curve: Vec<String>,
    },
    /// Stable-reduction candidates at --prime, or at every supported bad prime.
    Classify {
        #[arg(required = true, num_args = 1..)]
        curve: Vec<String>,
    },
    /// Stratum catalog maintenance.
    Strata {
        #[command(subcommand)]
        action: StrataAction,
    },
    /// Classify a file of curve records ("-" reads standard input).
    Batch {
        /// Record file; omit with --demo.
        input: Option<PathBuf>,
        /// Classify the built-in demo corpus.
        #[arg(long)]
        demo: bool,
        /// Record per-prime timings in the reports.
        #[arg(long)]
        timings: bool,
    },
    /// Run the calibration and catalog self-test.
    Selftest,
}

#[derive(Subcommand, Debug)]
enum StrataAction {
    /// Rebuild the stratum catalog by modular interpolation.
    Build {
        /// Output file for the stratum catalog; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also re-derive the excluded loci and specializations of the normal-form catalog into this file.
        #[arg(long)]
        hui_output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Rule::Quotient)]
        rule: Rule,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn parse_curve(args: &[String]) -> Result<Form<Rational>> {
    let joined = args.join(" ");
    let tokens: Vec<&str> = joined.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).collect();
    if tokens.len() == 15 {
        if let Ok(coeffs) = tokens.iter().map(|t| parse_rational(t)).collect::<Result<Vec<_>>>() {
            return Form::quartic(coeffs);
        }
    }
    let f = Form::parse(&joined)?;
    if f.degree() != 4 {
        return Err(Error::Input(format!("expected a quartic, found degree {}", f.degree())));
    }
    Ok(f)
}

fn reduce(f: &Form<Rational>, p: u64) -> Result<Form<quartic_strata::arith::Fp>> {
    f.reduce_mod(p).ok_or_else(|| Error::Input(format!("the curve has a coefficient with {p} in the denominator")))
}

fn strata_catalog(cli: &Cli) -> Result<StrataCatalog> {
    match &cli.catalog {
        Some(path) => StrataCatalog::load(path),
        None => Ok(StrataCatalog::standard().clone()),
    }
}

fn emit<T: Serialize>(cli: &Cli, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    let out = match cli.format {
        Format::Text => text(),
        Format::Structured => {
            serde_json::to_string(value).map_err(|e| Error::Internal(format!("serialization: {e}")))?
        }
    };
    println!("{out}");
    Ok(())
}

fn invariant_lines<F: std::fmt::Display>(coords: &[F]) -> (Vec<String>, String) {
    let values: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    let text = INVARIANT_NAMES.iter().zip(&values).map(|(n, v)| format!("{n} = {v}")).collect::<Vec<_>>().join("\n");
    (values, text)
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Invariants { curve } => {
            let f = parse_curve(curve)?;
            let (values, text) = match cli.prime {
                Some(p) => invariant_lines(&dixmier_ohno(&reduce(&f, p)?)?.coords),
                None => invariant_lines(&dixmier_ohno(&f)?.coords),
            };
            emit(cli, &json!({ "prime": cli.prime, "names": INVARIANT_NAMES, "values": values }), || text)?;
        }
        Command::SingType { curve } => {
            let f = parse_curve(curve)?;
            let t = match cli.prime {
                Some(p) => quartic_singularity_type_mod_p(&reduce(&f, p)?, cli.seed)?,
                None => quartic_singularity_type(&f, cli.seed)?,
            };
            emit(cli, &json!({ "name": t.name(), "type": t }), || t.to_string())?;
        }
        Command::Classify { curve } => {
            let f = parse_curve(curve)?;
            let strata = strata_catalog(cli)?;
            match cli.prime {
                Some(p) => {
                    let r = reduction_candidates(&f, p, &strata)?;
                    emit(cli, &r, || format!("p = {}: singularities {} reduction {}", r.prime, r.singularities, r.types))?;
                }
                None => {
                    let rec = CurveRecord::from_form("curve", &f)?;
                    let r = classify_record(&rec, &strata, false)?;
                    emit(cli, &r, || r.to_text())?;
                }
            }
        }
        Command::Strata { action: StrataAction::Build { output, hui_output, rule } } => {
            let rule = match rule {
                Rule::Quotient => SyzygyRule::Quotient,
                Rule::Keep => SyzygyRule::Keep,
            };
            let (cat, reports) = StrataCatalog::build(cli.seed, rule)?;
            for r in &reports {
                let status = match r.profile_matches() {
                    Some(true) => "matches the expected profile",
                    Some(false) => "differs from the expected profile",
                    None => "no expected profile",
                };
                eprintln!("{}: profile {:?} {status}", r.ideal.id, r.ideal.profile());
            }
            match output {
                Some(path) => write_file(path, &cat.to_text())?,
                None => print!("{}", cat.to_text()),
            }
            if let Some(path) = hui_output {
                let hui = HuiCatalog::standard().rederived(&cat, cli.seed)?;
                write_file(path, &hui.to_text())?;
            }
        }
        Command::Batch { input, demo, timings } => {
            let strata = strata_catalog(cli)?;
            let opts = BatchOptions { jobs: cli.jobs, timings: *timings, ..BatchOptions::default() };
            let stdout = io::stdout();
            let mut out = stdout.lock();
            let structured = cli.format == Format::Structured;
            let mut sink = |item: &BatchItem| {
                let line = if structured { serde_json::to_string(item).unwrap_or_default() } else { item.to_text() };
                let _ = writeln!(out, "{line}");
            };
            let summary = match (input, demo) {
                (None, true) => run_batch(DEMO_CORPUS.as_bytes(), &strata, &opts, &mut sink)?,
                (Some(p), false) if p.as_os_str() == "-" => run_batch(io::stdin().lock(), &strata, &opts, &mut sink)?,
                (Some(p), false) => {
                    let file = fs::File::open(p).map_err(|e| Error::Input(format!("{}: {e}", p.display())))?;
                    run_batch(BufReader::new(file), &strata, &opts, &mut sink)?
                }
                _ => return Err(Error::Input("give either an input file or --demo".into())),
            };
            emit(cli, &json!({ "summary": summary }), || summary.to_text())?;
        }
        Command::Selftest => {
            let strata = strata_catalog(cli)?;
            let report = selftest_with(HuiCatalog::standard(), &strata);
            emit(cli, &report, || report.to_text())?;
            if !report.passed() {
                return Ok(2);
            }
        }
    }
    Ok(0)
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}
