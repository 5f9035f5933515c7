use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use adelic::archimedean::{gamma_complex_field, gamma_real, ComplexWeight, RealParity};
use adelic::characters::{CharacterSpec, IdeleClassCharacter};
use adelic::literal::{format_complex, format_significant, parse_complex};
use adelic::nonarch::{beta_q, gamma_q, gamma_q_twisted, gamma_ramified, ResidueModule};
use adelic::places::NumberFieldDescriptor;
use adelic::regularization::{
    finite_v_identity_check, verify_beta_identity, verify_gamma_identity, TruncationSchedule,
};
use adelic::report::VerificationReport;
use adelic::{AdelicError, ComplexValue};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

/// Local gamma/beta functions and numerical checks of the regularized
/// adelic gamma and beta product formulas.
#[derive(Parser)]
#[command(name = "adelic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a local gamma- or beta-function.
    Local {
        #[command(subcommand)]
        function: LocalFunction,
    },
    /// Check an identity over a truncation schedule and write the report.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print the per-cutoff convergence table with local log-log slopes.
    Converge {
        #[arg(value_enum)]
        identity: Identity,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Subcommand)]
enum LocalFunction {
    /// Γ_∞(α; ν) of ℝ for the sign character of parity ν.
    GammaReal {
        #[arg(long, allow_hyphen_values = true)]
        nu: i64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Γ_{−∞}(α; ν) of ℂ for the character z ↦ (z/|z|)^ν.
    GammaComplex {
        #[arg(long, allow_hyphen_values = true)]
        nu: i64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Reduced gamma-function Γ_q(α), or its twist by an unramified character value λ.
    GammaQ {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Reduced beta-function B_q(α, β).
    BetaQ {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Gamma-function of ℚ_p for the p-component of a primitive Dirichlet character.
    GammaRamified {
        #[arg(long = "char")]
        character: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Ramified prime; required when the conductor has several prime factors.
        #[arg(long)]
        p: Option<u64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Identity {
    Gamma,
    Beta,
    Finite,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct RunArgs {
    /// Q, Q(sqrt,d) or Q(zeta,m).
    #[arg(long, default_value = "Q")]
    field: String,
    /// trivial or chi(m=M,k=K).
    #[arg(long = "char", default_value = "trivial")]
    character: String,
    /// Second character of a beta run; defaults to --char.
    #[arg(long = "char2")]
    character2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// 2^a..2^b, or a comma-separated list of cutoffs.
    #[arg(long, default_value = "2^8..2^17")]
    schedule: String,
    /// Cutoff V of the finite identity.
    #[arg(long, default_value_t = 1000)]
    cutoff: u64,
    /// Relative tolerance at the final cutoff.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Report destination; standard output when absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

enum Failure {
    Engine(AdelicError),
    Io(String),
}

impl From<AdelicError> for Failure {
    fn from(e: AdelicError) -> Self {
        Failure::Engine(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(message) = configure_threads() {
        eprintln!("ParseError: {message}");
        return ExitCode::from(EXIT_USAGE);
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Engine(e)) => {
            eprintln!("{}: {e}", e.name());
            ExitCode::from(if e.is_usage() { EXIT_USAGE } else { EXIT_DOMAIN })
        }
        Err(Failure::Io(message)) => {
            eprintln!("IoError: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn configure_threads() -> std::result::Result<(), String> {
    let Ok(text) = std::env::var("ADELIC_THREADS") else {
        return Ok(());
    };
    let threads: usize = text
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("ADELIC_THREADS must be a positive integer, got {text:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Local { function } => {
            println!("{}", format_complex(local_value(function)?));
            Ok(0)
        }
        Command::Verify { identity, run } => verify(identity, &run),
        Command::Converge { identity, run } => {
            let report = compute(identity, &run)?;
            emit(&run, &report.to_convergence_csv())?;
            Ok(0)
        }
    }
}

fn local_value(function: LocalFunction) -> Result<ComplexValue, AdelicError> {
    match function {
        LocalFunction::GammaReal { nu, alpha } => gamma_real(parse_complex(&alpha)?, RealParity::new(nu)),
        LocalFunction::GammaComplex { nu, alpha } => {
            gamma_complex_field(parse_complex(&alpha)?, ComplexWeight::new(nu)?)
        }
        LocalFunction::GammaQ { q, alpha, lambda } => {
            let (alpha, q) = (parse_complex(&alpha)?, ResidueModule::from_q(q)?);
            match lambda {
                Some(lambda) => gamma_q_twisted(alpha, &q, parse_complex(&lambda)?),
                None => gamma_q(alpha, &q),
            }
        }
        LocalFunction::BetaQ { q, alpha, beta } => {
            beta_q(parse_complex(&alpha)?, parse_complex(&beta)?, &ResidueModule::from_q(q)?)
        }
        LocalFunction::GammaRamified { character, alpha, p } => {
            let alpha = parse_complex(&alpha)?;
            let omega = build_character(&character, &NumberFieldDescriptor::rationals())?;
            let components = omega.ramified();
            let component = match p {
                Some(p) => components.iter().find(|c| c.local.prime() == p),
                None if components.len() == 1 => components.first(),
                None => {
                    return Err(AdelicError::Parse(format!(
                        "{character} is ramified at {} primes; choose one with --p",
                        components.len()
                    )))
                }
            }
            .ok_or_else(|| AdelicError::Domain(format!("{character} is unramified at the requested prime")))?;
            Ok(gamma_ramified(alpha, &component.local)?.value)
        }
    }
}

fn build_character(spec: &str, field: &NumberFieldDescriptor) -> Result<IdeleClassCharacter, AdelicError> {
    spec.parse::<CharacterSpec>()?.build(field)
}

fn compute(identity: Identity, run: &RunArgs) -> Result<VerificationReport, Failure> {
    if let Some(tol) = run.tol {
        if tol.is_nan() || tol <= 0.0 {
            return Err(AdelicError::Parse(format!("tolerance must be positive, got {tol}")).into());
        }
    }
    let field: NumberFieldDescriptor = run.field.parse()?;
    let omega = build_character(&run.character, &field)?;
    let alpha = parse_complex(&run.alpha)?;
    let report = match identity {
        Identity::Gamma => verify_gamma_identity(&omega, alpha, &run.schedule.parse::<TruncationSchedule>()?)?,
        Identity::Beta => {
            let beta_text = run.beta.as_deref().ok_or_else(|| AdelicError::Parse("a beta run needs --beta".into()))?;
            let omega2 = match &run.character2 {
                Some(spec) => build_character(spec, &field)?,
                None => omega.clone(),
            };
            let schedule = run.schedule.parse::<TruncationSchedule>()?;
            verify_beta_identity(&omega, &omega2, alpha, parse_complex(beta_text)?, &schedule)?
        }
        Identity::Finite => finite_v_identity_check(&omega, alpha, run.cutoff)?,
    };
    Ok(match run.tol {
        Some(tol) => report.with_tolerance(tol),
        None => report,
    })
}

fn verify(identity: Identity, run: &RunArgs) -> Result<u8, Failure> {
    let report = compute(identity, run)?;
    let body = match run.format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    };
    emit(run, &body)?;
    let line = summary(&report, run);
    // keep standard output machine-readable when it carries the report
    if run.output.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
    Ok(if report.passed { 0 } else { EXIT_FAIL })
}

fn summary(report: &VerificationReport, run: &RunArgs) -> String {
    let last = report.final_record().expect("reports hold at least one record");
    let mut line = format!("{} {} field={} char={}", report.verdict(), report.identity, run.field, run.character);
    if report.identity == "beta" {
        let second = run.character2.as_deref().unwrap_or(&run.character);
        line += &format!(" char2={second} alpha={} beta={}", run.alpha, run.beta.as_deref().unwrap_or(""));
    } else {
        line += &format!(" alpha={}", run.alpha);
    }
    line += &format!(
        " V={} rhs={} rel_err={} tol={}",
        last.cutoff,
        format_complex(last.rhs),
        format_significant(last.rel_err, 3),
        format_significant(report.tolerance, 3)
    );
    line
}

fn emit(run: &RunArgs, body: &str) -> Result<(), Failure> {
    match &run.output {
        Some(path) => fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => io::stdout().lock().write_all(body.as_bytes()).map_err(|e| Failure::Io(e.to_string())),
    }
}
