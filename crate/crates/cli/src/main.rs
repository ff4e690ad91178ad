use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use gvpf::algebra::{parse_rational, Polynomial, Rational, VariableTable};
use gvpf::harness::{
    campaign, campaign_json, registry, verify, CampaignConfig, HarnessError, Mode, Params, VerificationReport,
    VerifyRequest,
};
use gvpf::linalg::{pfaffian, SkewMatrix};
use gvpf::lr::{lr_bruteforce, lr_rectangle_theorem, lr_via_pfaffian};
use gvpf::symfunc::{schur, skew_schur, Partition, SkewShape};

/// `println!` that exits quietly once stdout is closed (e.g. piped into `head`).
macro_rules! emit {
    ($($arg:tt)*) => {
        if writeln!(std::io::stdout().lock(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    };
}

#[derive(Parser)]
#[command(name = "gvpf", version, about = "Exact identity checks for generalized Vandermonde determinants and Pfaffians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the registered identities.
    List,
    /// Verify one identity instance.
    Verify {
        #[arg(long)]
        name: String,
        /// Parameter override, as `key=value`; repeatable.
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, usize)>,
        #[arg(long, value_enum, default_value = "numeric")]
        mode: ModeArg,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 40)]
        bound: u64,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run a campaign file.
    Campaign {
        #[arg(long)]
        config: PathBuf,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Littlewood-Richardson coefficients.
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        /// Third shape for the tableau count; implied by `--rect`.
        #[arg(long, required_unless_present = "rect", conflicts_with = "rect")]
        nu: Option<Partition>,
        /// Take `ν = □(n, f)` and allow the rectangle methods.
        #[arg(long, requires_all = ["n", "e", "f"])]
        rect: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        e: Option<usize>,
        #[arg(long)]
        f: Option<usize>,
        #[arg(long, value_enum, default_value = "oracle")]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Schur or skew Schur polynomial in `x1..xV`.
    Schur {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        inner: Option<Partition>,
        #[arg(long)]
        vars: usize,
    },
    /// Pfaffian of a skew matrix given as a JSON upper triangle.
    Pf {
        #[arg(long)]
        matrix: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Symbolic,
    Numeric,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Pfaffian,
    Theorem,
    All,
}

/// Exit status classes: 1 usage, 2 failed verification, 3 internal.
enum Fail {
    Usage(String),
    Check(String),
    Internal(String),
}

impl From<HarnessError> for Fail {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::GuardExhaustion { .. } => Fail::Check(e.to_string()),
            _ => Fail::Usage(e.to_string()),
        }
    }
}

fn parse_param(s: &str) -> Result<(String, usize), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected key=value, got {s:?}"))?;
    let v = v.trim().parse().map_err(|_| format!("{k}: {v:?} is not a non-negative integer"))?;
    Ok((k.trim().to_string(), v))
}

fn show_params(p: &BTreeMap<String, usize>) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Symbolic => "symbolic",
        Mode::Numeric => "numeric",
    }
}

fn summary(r: &VerificationReport) -> String {
    let verdict = if r.passed { "PASS" } else { "FAIL" };
    let mut line = format!("{verdict} {} {} [{}]", r.identity, mode_name(r.mode), show_params(&r.params));
    if r.mode == Mode::Numeric {
        line.push_str(&format!(" trials={} seed={} bound={}", r.trials, r.seed, r.bound));
    }
    if let Some(f) = r.failures.first() {
        line.push_str(&format!("\n  {} failing; first: trial {} `{}`: {} != {}", r.failures.len(), f.trial, f.equation, f.lhs, f.rhs));
    }
    line
}

fn run_list() -> Result<(), Fail> {
    for spec in registry() {
        let keys: Vec<_> = spec.param_names().collect();
        emit!("{:<14} {:<22} {}", spec.name, keys.join(","), spec.label);
    }
    Ok(())
}

fn run_verify(req: VerifyRequest, json: bool) -> Result<(), Fail> {
    let report = verify(&req)?;
    if json {
        let text = serde_json::to_string_pretty(&report).map_err(|e| Fail::Internal(e.to_string()))?;
        emit!("{text}");
    } else {
        emit!("{}", summary(&report));
    }
    if report.passed {
        Ok(())
    } else {
        Err(Fail::Check(format!("{} does not hold", report.identity)))
    }
}

fn run_campaign(config: PathBuf, json: Option<PathBuf>, workers: Option<usize>) -> Result<(), Fail> {
    let mut cfg = CampaignConfig::load(&config)?;
    if workers.is_some() {
        cfg.workers = workers;
    }
    let start = Instant::now();
    let reports = campaign(&cfg)?;
    for r in &reports {
        emit!("{}", summary(r));
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    emit!("{passed}/{} passed", reports.len());
    eprintln!("elapsed {:.2}s", start.elapsed().as_secs_f64());
    if let Some(path) = json {
        std::fs::write(&path, campaign_json(&reports))
            .map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
    }
    if passed == reports.len() {
        Ok(())
    } else {
        Err(Fail::Check(format!("{} identities failed", reports.len() - passed)))
    }
}

fn run_lr(
    lambda: Partition,
    mu: Partition,
    nu: Option<Partition>,
    rect: Option<(usize, usize, usize)>,
    method: Method,
    json: bool,
) -> Result<(), Fail> {
    let usage = |e: gvpf::lr::LrError| Fail::Usage(e.to_string());
    let mut values: Vec<(&str, u64)> = Vec::new();
    match (rect, nu) {
        (Some((n, e, f)), _) => {
            let want = |m: Method| method == m || method == Method::All;
            if want(Method::Oracle) {
                values.push(("oracle", lr_bruteforce(&lambda, &mu, &Partition::rectangle(n, f))));
            }
            if want(Method::Pfaffian) {
                values.push(("pfaffian", lr_via_pfaffian(&lambda, n, e, f, &mu).map_err(usage)?));
            }
            if want(Method::Theorem) {
                values.push(("theorem", lr_rectangle_theorem(&lambda, n, e, f, &mu).map_err(usage)?));
            }
        }
        (None, Some(nu)) => {
            if method != Method::Oracle && method != Method::All {
                return Err(Fail::Usage("the pfaffian and theorem methods need --rect".into()));
            }
            values.push(("oracle", lr_bruteforce(&lambda, &mu, &nu)));
        }
        (None, None) => return Err(Fail::Usage("give --nu or --rect".into())),
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    if json {
        let map: BTreeMap<&str, u64> = values.iter().copied().collect();
        let body = serde_json::json!({ "lambda": lambda.to_string(), "mu": mu.to_string(), "values": map, "agree": agree });
        emit!("{body}");
    } else if agree {
        emit!("{}", values[0].1);
    } else {
        for (name, v) in &values {
            emit!("{name} {v}");
        }
    }
    if agree {
        Ok(())
    } else {
        Err(Fail::Check("methods disagree".into()))
    }
}

fn run_schur(shape: Partition, inner: Option<Partition>, vars: usize) -> Result<(), Fail> {
    let mut table = VariableTable::new();
    let ids = table.vector("x", vars);
    let poly: Polynomial = match inner {
        Some(inner) => {
            let skew = SkewShape::new(shape, inner).map_err(|e| Fail::Usage(e.to_string()))?;
            skew_schur(&skew, &ids)
        }
        None => schur(&shape, &ids),
    };
    emit!("{}", poly.display(&table));
    Ok(())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    dim: usize,
    upper: Vec<(usize, usize, String)>,
}

fn run_pf(path: PathBuf) -> Result<(), Fail> {
    let usage = |m: String| Fail::Usage(format!("{}: {m}", path.display()));
    let text = std::fs::read_to_string(&path).map_err(|e| usage(e.to_string()))?;
    let file: MatrixFile = serde_json::from_str(&text).map_err(|e| usage(e.to_string()))?;
    let mut a = SkewMatrix::<Rational>::zeros(file.dim);
    for (i, j, v) in file.upper {
        if i >= j || j >= file.dim {
            return Err(usage(format!("entry ({i}, {j}) is not strictly upper triangular in dim {}", file.dim)));
        }
        let value = parse_rational(&v).ok_or_else(|| usage(format!("{v:?} is not a rational")))?;
        a.set(i, j, value);
    }
    emit!("{}", pfaffian(&a));
    Ok(())
}

fn run(cli: Cli) -> Result<(), Fail> {
    match cli.command {
        Command::List => run_list(),
        Command::Verify { name, params, mode, trials, seed, bound, json } => {
            let mode = match mode {
                ModeArg::Symbolic => Mode::Symbolic,
                ModeArg::Numeric => Mode::Numeric,
            };
            let req = VerifyRequest {
                name,
                params: Params(params.into_iter().collect()),
                mode,
                trials,
                seed,
                bound,
                workers: Some(1),
            };
            run_verify(req, json)
        }
        Command::Campaign { config, json, workers } => run_campaign(config, json, workers),
        Command::Lr { lambda, mu, nu, rect, n, e, f, method, json } => {
            let rect = if rect { Some((n.unwrap_or(0), e.unwrap_or(0), f.unwrap_or(0))) } else { None };
            run_lr(lambda, mu, nu, rect, method, json)
        }
        Command::Schur { shape, inner, vars } => run_schur(shape, inner, vars),
        Command::Pf { matrix } => run_pf(matrix),
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
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Fail::Usage(m))) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Ok(Err(Fail::Check(m))) => {
            eprintln!("{m}");
            ExitCode::from(2)
        }
        Ok(Err(Fail::Internal(m))) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
        Err(_) => ExitCode::from(3),
    }
}
