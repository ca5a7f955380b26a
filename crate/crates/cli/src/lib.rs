//! Command-line driver: build family data, run verification suites,
//! classify rings and search Lagrangian subgroups.

pub mod family;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use fusionf_core::classifier::{classify, Outcome};
use fusionf_core::constructors::{lagrangian_search, AbelianGroup, BilinearForm};
use fusionf_core::numeric::DEFAULT_PRECISION;
use serde_json::{json, Value};
use thiserror::Error;

use family::Data;
use report::Suite;

pub const PRECISION_VAR: &str = "FUSIONF_PRECISION";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("i/o error: {0}")]
    Io(String),
}

#[derive(Parser, Debug)]
#[command(name = "fusionf", version, about = "Exact fusion rings and partial modular data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the JSON form of a family member.
    Build {
        /// B:r, D:r, BEVEN:r, DEVEN:r, TY:A, DTYPLUS:A[/gram@M], SL2:l, SU3, DIH:n, SEMI:k, POINTED:A[/Q@M]
        spec: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Run a verification suite on a JSON file or family spec.
    Check {
        input: String,
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Classify a fusion ring with simples of dimension 1 and 2.
    Classify { input: String },
    /// Search for a Lagrangian subgroup of a finite abelian group with a bilinear form.
    Lagrangian {
        /// Comma-separated cyclic orders, e.g. 3,3
        #[arg(long)]
        group: String,
        /// Gram matrix of exponents with the root-of-unity order, e.g. "0,1;1,0@3"
        #[arg(long)]
        form: Option<String>,
    },
    /// Render a check report, running the checks first if given data.
    Report(ReportArgs),
}

#[derive(Args, Debug)]
struct ReportArgs {
    input: String,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
    #[arg(long, default_value = "all")]
    suite: String,
}

fn precision() -> Result<u32, CliError> {
    match std::env::var(PRECISION_VAR) {
        Err(_) => Ok(DEFAULT_PRECISION),
        Ok(s) => match s.trim().parse::<u32>() {
            Ok(p) if (32..=4096).contains(&p) => Ok(p),
            _ => Err(CliError::Usage(format!("{PRECISION_VAR} must be an integer number of bits in 32..=4096, got '{s}'"))),
        },
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

/// Runs the CLI and returns the process exit code: 0 when everything
/// passes, 1 when a check fails or a ring cannot be classified, 2 on usage,
/// schema or i/o errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            2
        }
    }
}

fn write(out: &mut dyn Write, s: &str) -> Result<(), CliError> {
    out.write_all(s.as_bytes()).map_err(|e| CliError::Io(e.to_string()))
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Build { spec, output } => {
            let data = family::build(&spec)?;
            let text = pretty(&data.to_json());
            match output {
                Some(path) => std::fs::write(&path, text).map_err(|e| CliError::Io(format!("{path}: {e}")))?,
                None => write(out, &text)?,
            }
            Ok(0)
        }
        Command::Check { input, suite } => {
            let suite = Suite::parse(&suite)?;
            let data = family::load(&input)?;
            let rep = report::check(&input, &data, suite, precision()?)?;
            write(out, &pretty(&rep.to_json()))?;
            Ok(i32::from(rep.failed()))
        }
        Command::Report(args) => {
            let v = report_value(&args.input, &args.suite)?;
            if args.json {
                write(out, &pretty(&v))?;
            } else {
                write(out, &report::render_text(&v))?;
            }
            let failed = v["checks"].as_array().into_iter().flatten().any(|c| c["status"] == "fail");
            Ok(i32::from(failed))
        }
        Command::Classify { input } => {
            let ring = match family::load(&input)? {
                Data::Ring(r) => r,
                Data::Modular(m) => m
                    .fusion_ring()
                    .ok_or_else(|| CliError::Usage(format!("{input}: fusion rules are only partly known")))?,
            };
            let result = classify(&ring);
            write(out, &pretty(&result.to_json()))?;
            Ok(i32::from(matches!(result.outcome, Outcome::NotApplicable(_))))
        }
        Command::Lagrangian { group, form } => {
            let v = lagrangian(&group, form.as_deref())?;
            write(out, &pretty(&v))?;
            Ok(0)
        }
    }
}

/// A saved report is rendered as is; anything else is checked first.
fn report_value(input: &str, suite: &str) -> Result<Value, CliError> {
    if std::path::Path::new(input).is_file() {
        let text = std::fs::read_to_string(input).map_err(|e| CliError::Io(format!("{input}: {e}")))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Schema(format!("{input}: {e}")))?;
        if v.get("schema_version").is_some() {
            if v["schema_version"] != json!(report::SCHEMA_VERSION) {
                return Err(CliError::Schema(format!("$.schema_version: expected {}", report::SCHEMA_VERSION)));
            }
            return Ok(v);
        }
        let data = Data::from_json(&v)?;
        return Ok(report::check(input, &data, Suite::parse(suite)?, precision()?)?.to_json());
    }
    let data = family::build(input)?;
    Ok(report::check(input, &data, Suite::parse(suite)?, precision()?)?.to_json())
}

/// Generators of a subgroup, picked greedily in element order.
fn generators(g: &AbelianGroup, sub: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![0];
    for &x in sub {
        if !span.contains(&x) {
            gens.push(x);
            span = g.span(&gens);
        }
    }
    gens
}

pub fn lagrangian(group: &str, form: Option<&str>) -> Result<Value, CliError> {
    let g = AbelianGroup::parse(group).map_err(|e| CliError::Usage(format!("--group '{group}': {e}")))?;
    let form = match form {
        Some(f) => BilinearForm::parse(g.clone(), f),
        None => BilinearForm::diagonal(g.clone()),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let found = lagrangian_search(&form);
    let labels = |s: &[usize]| s.iter().map(|&x| g.label(x)).collect::<Vec<_>>();
    Ok(match found {
        Some(l) => json!({
            "group": g.orders(),
            "gram": form.gram(),
            "modulus": form.modulus(),
            "lagrangian": labels(&l),
            "generators": labels(&generators(&g, &l)),
            "conclusion": "the Drinfeld center of TY(A, χ, τ) is group-theoretical for both signs of τ",
        }),
        None => json!({
            "group": g.orders(),
            "gram": form.gram(),
            "modulus": form.modulus(),
            "lagrangian": Value::Null,
            "result": "none",
        }),
    })
}
