use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pi_core::algebras::FiniteAlgebra;
use pi_core::engine::evaluate_ncpoly;
use pi_core::free_algebra::parse;
use pi_core::Rational;
use pi_verify::{run_check, run_suite, suite_passed, CheckReport, Options, Status, Suite, VerifyError, CHECKS};

#[derive(Parser)]
#[command(name = "pi-verify", version, about = "Verify polynomial-identity statements by exact computation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one named check.
    Check(CheckArgs),
    /// Run every check with default parameters.
    Suite(SuiteArgs),
    /// Evaluate a polynomial on basis elements of an algebra.
    Eval(EvalArgs),
    /// List the available checks.
    List,
}

#[derive(Args)]
struct CheckArgs {
    name: String,
    /// `key=value`, repeatable.
    #[arg(long = "param", value_name = "K=V")]
    params: Vec<String>,
    #[arg(long)]
    degree_max: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Allow degrees above the cap.
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteKind {
    Fast,
    Full,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(value_enum)]
    kind: SuiteKind,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    /// Polynomial, e.g. `[x1,x2]*[x3,x4]`.
    #[arg(long)]
    poly: String,
    /// Algebra name, e.g. `A(n=2)`, `UT2`, `E(n=3)`, `Rp(p=2,d=4)`.
    #[arg(long)]
    algebra: String,
    /// Zero-based basis indices, comma separated, one per variable.
    #[arg(long)]
    tuple: String,
}

fn parse_params(raw: &[String]) -> Result<BTreeMap<String, String>, VerifyError> {
    let mut out = BTreeMap::new();
    for p in raw {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| VerifyError::Usage(format!("--param expects key=value, got {p:?}")))?;
        if out.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(VerifyError::Usage(format!("parameter {k} given twice")));
        }
    }
    Ok(out)
}

fn in_pool<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T, VerifyError> {
    match threads {
        None => Ok(job()),
        Some(0) => Err(VerifyError::Usage("--threads must be positive".into())),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| VerifyError::Usage(format!("thread pool: {e}")))?;
            Ok(pool.install(job))
        }
    }
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), VerifyError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

fn check(args: CheckArgs) -> Result<bool, VerifyError> {
    let params = parse_params(&args.params)?;
    let opts = Options {
        degree_max: args.degree_max,
        force: args.force,
    };
    let report: CheckReport = in_pool(args.threads, || run_check(&args.name, &params, opts))??;
    print!("{}", report.render_text());
    if let Some(path) = &args.report {
        write_json(path, &report)?;
    }
    Ok(report.status != Status::Fail)
}

fn suite(args: SuiteArgs) -> Result<bool, VerifyError> {
    let kind = match args.kind {
        SuiteKind::Fast => Suite::Fast,
        SuiteKind::Full => Suite::Full,
    };
    let reports = in_pool(args.threads, || run_suite(kind, |r| print!("{}", r.render_text())))??;
    let passed = suite_passed(&reports);
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    println!(
        "suite {}: {} checks, {failed} failed, {}",
        if kind == Suite::Fast { "fast" } else { "full" },
        reports.len(),
        if passed { "PASS" } else { "FAIL" }
    );
    if let Some(path) = &args.report {
        write_json(path, &reports)?;
    }
    Ok(passed)
}

fn eval(args: EvalArgs) -> Result<bool, VerifyError> {
    let alg = FiniteAlgebra::parse(&args.algebra)?;
    let f = parse::<Rational>(&args.poly)?;
    let mut tuple = Vec::new();
    for t in args.tuple.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i: usize = t
            .parse()
            .map_err(|_| VerifyError::Usage(format!("tuple entries are basis indices, got {t:?}")))?;
        if i >= alg.dim() {
            return Err(VerifyError::Usage(format!("basis index {i} out of range, {} has dimension {}", alg.name(), alg.dim())));
        }
        tuple.push(alg.basis_element::<Rational>(i)?);
    }
    let v = evaluate_ncpoly(&alg, &f, &tuple)?;
    let shown: Vec<String> = tuple.iter().map(|x| alg.render(x)).collect();
    println!("{} at ({}) = {}", alg.name(), shown.join(", "), alg.render(&v));
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Check(a) => check(a),
        Command::Suite(a) => suite(a),
        Command::Eval(a) => eval(a),
        Command::List => {
            for c in CHECKS {
                let gate = if c.gating { "" } else { " (informational)" };
                println!("{:<18} {}{gate}", c.name, c.summary);
            }
            Ok(true)
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("pi-verify: {e}");
            let code = match e {
                VerifyError::Core(pi_core::Error::Parse { .. } | pi_core::Error::InvalidAlgebra(_)) => 2,
                _ => e.exit_code(),
            };
            ExitCode::from(code as u8)
        }
    }
}
