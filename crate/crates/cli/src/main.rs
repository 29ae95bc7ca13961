//! `noncomm`: verification suites and invariant-decomposition services.
//!
//! Exit codes: 0 when everything passed, 1 when a check failed or an input is
//! not invariant, 2 for usage and format errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use noncomm::arith::Rational;
use noncomm::error::Error;
use noncomm::groups::{ActionVariant, Family, GroupSpec};
use noncomm::invariants::{decompose, reynolds, Basis, Decomposition};
use noncomm::laurent::LaurentPoly;
use noncomm::sign::Sign;
use noncomm::suites::{run_suite, SuiteName, SuiteParams};

const SEED_VAR: &str = "NONCOMM_SEED";

#[derive(Parser)]
#[command(name = "noncomm", version, about = "Exact checks for invariants of reflection groups on Weyl and shift algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite.
    Suite(SuiteArgs),
    /// Write an invariant Laurent polynomial in the fundamental invariants.
    Decompose(DecomposeArgs),
    /// Expand a decomposition back into a Laurent polynomial.
    Expand(IoArgs),
    /// Average a Laurent polynomial over a group.
    Reynolds(ReynoldsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SuiteArgs {
    /// One of: weyl-involutions, phi-isomorphism, bn-invariants,
    /// dn-invariants, discriminant-freeness, skew-invariance-J, idempotents,
    /// clearing.
    #[arg(long)]
    suite: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    sign: Option<Sign>,
    #[arg(long)]
    c: Option<Rational>,
    /// Overridden by the NONCOMM_SEED environment variable.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Add wall time per check (the report is then no longer reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct IoArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct DecomposeArgs {
    /// `B` or `D`, optionally with the rank attached (`B2`).
    #[arg(long)]
    group: String,
    #[arg(long)]
    n: Option<usize>,
    /// Selects the B generators `e_i(x ∓ x⁻¹)`; ignored for D.
    #[arg(long, default_value = "minus")]
    sign: Sign,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct ReynoldsArgs {
    /// `S`, `B` or `D`, optionally with the rank attached.
    #[arg(long)]
    group: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = VariantArg::TorusMinus)]
    variant: VariantArg,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Linear,
    TorusMinus,
    TorusPlus,
}

impl From<VariantArg> for ActionVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Linear => ActionVariant::Linear,
            VariantArg::TorusMinus => ActionVariant::TorusMinus,
            VariantArg::TorusPlus => ActionVariant::TorusPlus,
        }
    }
}

/// Failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn check(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInvariant { monomial } => {
                Failure::check(format!("input is not invariant: offending monomial {monomial:?}"))
            }
            Error::InvariantViolation { .. } | Error::TheoryViolation(_) | Error::Internal(_) => {
                Failure::check(e.to_string())
            }
            other => Failure::usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Suite(args) => suite(args),
        Command::Decompose(args) => decompose_file(args),
        Command::Expand(args) => expand_file(args),
        Command::Reynolds(args) => reynolds_file(args),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(output: Option<&Path>, body: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, body)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::usage(format!("cannot write output: {e}")))
        }
    }
}

fn suite(args: SuiteArgs) -> Result<ExitCode, Failure> {
    let name: SuiteName = args.suite.parse().map_err(|e: Error| Failure::usage(e.to_string()))?;
    let seed = match std::env::var(SEED_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{SEED_VAR}={v:?} is not a seed")))?,
        Err(_) => args.seed,
    };
    let params = SuiteParams {
        n: args.n,
        seed,
        trials: args.trials,
        sign: args.sign,
        c: args.c,
        timings: args.timings,
    };
    let report = run_suite(name, &params).map_err(|e| Failure::usage(e.to_string()))?;
    let body = match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    emit(args.output.as_deref(), &body)?;
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn parse_group(group: &str, n: Option<usize>) -> Result<GroupSpec, Failure> {
    let split = group.find(|ch: char| ch.is_ascii_digit()).unwrap_or(group.len());
    let (letter, digits) = group.split_at(split);
    let family: Family = letter.parse().map_err(|e: Error| Failure::usage(e.to_string()))?;
    let rank = match (digits.is_empty(), n) {
        (true, Some(n)) => n,
        (true, None) => return Err(Failure::usage("the group rank is missing (use --n)")),
        (false, _) => {
            let embedded: usize = digits
                .parse()
                .map_err(|_| Failure::usage(format!("bad group {group:?}")))?;
            if n.is_some_and(|n| n != embedded) {
                return Err(Failure::usage(format!("--group {group} disagrees with --n")));
            }
            embedded
        }
    };
    GroupSpec::new(family, rank).map_err(|e| Failure::usage(e.to_string()))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("malformed JSON in {}: {e}", path.display())))
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn decompose_file(args: DecomposeArgs) -> Result<ExitCode, Failure> {
    let spec = parse_group(&args.group, args.n)?;
    let basis = match spec.family {
        Family::B if args.sign == Sign::Minus => Basis::BMinus,
        Family::B => Basis::BPlus,
        Family::D => Basis::D,
        Family::S => return Err(Failure::usage("decompose supports the B and D families")),
    };
    let f: LaurentPoly = read_json(&args.io.input)?;
    if f.nvars() != spec.n {
        return Err(Failure::usage(format!(
            "input has {} variables, {spec} needs {}",
            f.nvars(),
            spec.n
        )));
    }
    let dec = decompose(&f, basis)?;
    let back = dec.expand()?;
    if back != f {
        return Err(Failure::check("reconstruction differs from the input"));
    }
    let body = match args.io.format {
        Format::Json => pretty(&dec),
        Format::Text => format!("{dec}\n"),
    };
    emit(args.io.output.as_deref(), &body)?;
    let certificate = format!("CERTIFICATE {basis} n={}: reconstructed == input", spec.n);
    if args.io.output.is_some() {
        println!("{certificate}");
    } else {
        eprintln!("{certificate}");
    }
    Ok(ExitCode::SUCCESS)
}

fn expand_file(args: IoArgs) -> Result<ExitCode, Failure> {
    let dec: Decomposition = read_json(&args.input)?;
    let f = dec.expand()?;
    let body = match args.format {
        Format::Json => pretty(&f),
        Format::Text => format!("{f}\n"),
    };
    emit(args.output.as_deref(), &body)?;
    Ok(ExitCode::SUCCESS)
}

fn reynolds_file(args: ReynoldsArgs) -> Result<ExitCode, Failure> {
    let spec = parse_group(&args.group, args.n)?;
    let f: LaurentPoly = read_json(&args.io.input)?;
    if f.nvars() != spec.n {
        return Err(Failure::usage(format!(
            "input has {} variables, {spec} needs {}",
            f.nvars(),
            spec.n
        )));
    }
    let avg = reynolds(&f, &spec, args.variant.into())?;
    let body = match args.io.format {
        Format::Json => pretty(&avg),
        Format::Text => format!("{avg}\n"),
    };
    emit(args.io.output.as_deref(), &body)?;
    Ok(ExitCode::SUCCESS)
}
