//! Command-line front end: exact coefficient vectors, verification suites
//! over degree grids, and numeric quadrature cross-checks.
//!
//! Rationals cross this boundary as exact "p/q" strings. Exit codes: 0
//! when every requested check passes, 1 on check failures or internal
//! inconsistencies, 2 on domain or usage errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use linrel::contiguous::{
    fold_records, scaled_families, verify_grid, SuiteWitness, TupleRecord, TupleStatus,
};
use linrel::exactcore::{q, Rat};
use linrel::polyalg::{self, GENFUN_BUDGET};
use linrel::report::{
    family_params, rat_str, records_to_csv, GridSpec, SuiteReport, WitnessReport, SCHEMA_VERSION,
};
use linrel::{lincoef, numquad, Error, FamilySpec};
use serde::Serialize;
use std::collections::BTreeMap;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

/// What stopped a run: bad usage of the tool, or an error from the
/// library while carrying out a well-formed request.
enum Failure {
    /// Missing or inconsistent command-line input. Exits with 2.
    Usage(String),
    /// Library error; internal inconsistencies exit with 1, domain and
    /// range errors with 2.
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

#[derive(Parser)]
#[command(
    name = "linrel",
    version,
    about = "Exact linearization coefficients and contiguous-relation verification \
             for classical orthogonal polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an exact linearization coefficient vector.
    Coeff(CoeffArgs),
    /// Verify a suite of identities over a degree grid.
    Verify(VerifyArgs),
    /// Integrate a weighted product numerically and cross-check it.
    Quad(QuadArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Gegenbauer,
    Hermite,
    Jacobi,
    Laguerre,
    ScaledLaguerre,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Five-term contiguous relations must have exactly zero residuals.
    Contiguous,
    /// Closed-form integrals must equal the polynomial-algebra oracle.
    Oracle,
    /// Exact integrals must match Gauss quadrature numerically.
    Quad,
    /// Truncated generating functions must reproduce the integrals.
    Genfun,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Contiguous => "contiguous",
            Suite::Oracle => "oracle",
            Suite::Quad => "quad",
            Suite::Genfun => "genfun",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Family selection shared by all subcommands; parameters are exact
/// rationals written as "p/q".
#[derive(Args, Clone)]
struct FamilyArgs {
    /// Polynomial family.
    #[arg(long, value_enum)]
    family: FamilyKind,
    /// Gegenbauer parameter λ.
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    lambda: Option<Rat>,
    /// Jacobi/Laguerre parameter α.
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    alpha: Option<Rat>,
    /// Jacobi parameter β.
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    beta: Option<Rat>,
    /// Argument scales for the scaled-Laguerre product (two values a,b;
    /// the first factor stays unscaled).
    #[arg(long, value_delimiter = ',', value_parser = parse_rat, allow_hyphen_values = true)]
    scales: Option<Vec<Rat>>,
}

#[derive(Args)]
struct CoeffArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Degrees of the product factors, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    degrees: Vec<u32>,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which identity suite to run.
    #[arg(long, value_enum)]
    suite: Suite,
    #[command(flatten)]
    family: FamilyArgs,
    /// Smallest per-factor degree of the grid.
    #[arg(long, default_value_t = 0)]
    min_degree: u32,
    /// Largest per-factor degree of the grid.
    #[arg(long)]
    max_degree: u32,
    /// Factors per product (3 or 4; 4 only for Gegenbauer and Hermite).
    #[arg(long, default_value_t = 3)]
    factors: usize,
    /// Worker threads (overrides LINREL_THREADS; default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Relative tolerance for the quad suite.
    #[arg(long, default_value_t = 1e-10)]
    rtol: f64,
    /// Absolute tolerance for the quad suite.
    #[arg(long, default_value_t = 1e-12)]
    atol: f64,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Append one synthetic failing witness (report-plumbing test hook).
    #[arg(long, hide = true)]
    inject_failure: bool,
}

#[derive(Args)]
struct QuadArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Degrees of the product factors, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    degrees: Vec<u32>,
    /// Relative tolerance of the cross-check.
    #[arg(long, default_value_t = 1e-10)]
    rtol: f64,
    /// Absolute tolerance of the cross-check.
    #[arg(long, default_value_t = 1e-12)]
    atol: f64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    Rat::from_str(s).map_err(|e| format!("not an exact rational \"p/q\": {e}"))
}

impl FamilyArgs {
    fn resolve(&self) -> Result<FamilySpec, Failure> {
        let need = |o: &Option<Rat>, flag: &str| {
            o.clone().ok_or_else(|| {
                Failure::Usage(format!("this family requires --{flag} (exact \"p/q\")"))
            })
        };
        match self.family {
            FamilyKind::Gegenbauer => {
                Ok(FamilySpec::Gegenbauer { lambda: need(&self.lambda, "lambda")? })
            }
            FamilyKind::Hermite => Ok(FamilySpec::Hermite),
            FamilyKind::Jacobi => Ok(FamilySpec::Jacobi {
                alpha: need(&self.alpha, "alpha")?,
                beta: need(&self.beta, "beta")?,
            }),
            FamilyKind::Laguerre => {
                Ok(FamilySpec::Laguerre { alpha: need(&self.alpha, "alpha")? })
            }
            FamilyKind::ScaledLaguerre => {
                // The representative spec carries the first scale; products
                // always use the explicit per-factor list.
                let (a, _) = self.scale_pair()?;
                Ok(FamilySpec::ScaledLaguerre { alpha: need(&self.alpha, "alpha")?, scale: a })
            }
        }
    }

    fn scale_pair(&self) -> Result<(Rat, Rat), Failure> {
        match self.scales.as_deref() {
            Some([a, b]) => Ok((a.clone(), b.clone())),
            _ => Err(Failure::Usage(
                "scaled-laguerre requires --scales a,b (two exact rationals)".into(),
            )),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::InternalInconsistency(_) | Error::EigenFailure(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Coeff(args) => cmd_coeff(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Quad(args) => cmd_quad(args),
    }
}

#[derive(Serialize)]
struct CoeffEntry {
    degree: u32,
    value: String,
}

#[derive(Serialize)]
struct CoeffReport {
    version: u32,
    family: String,
    params: BTreeMap<String, String>,
    degrees: Vec<u32>,
    coefficients: Vec<CoeffEntry>,
}

fn cmd_coeff(args: CoeffArgs) -> Result<ExitCode, Failure> {
    let family = args.family.resolve()?;
    let vector = lincoef::coeff_vector(&family, &args.degrees)?;
    let report = CoeffReport {
        version: SCHEMA_VERSION,
        family: family.name().to_string(),
        params: family_params(&family),
        degrees: args.degrees.clone(),
        coefficients: vector
            .iter()
            .map(|(degree, value)| CoeffEntry { degree: *degree, value: rat_str(value) })
            .collect(),
    };
    let output = match args.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("coeff report json"),
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(["degree", "value"]).expect("csv header");
            for entry in &report.coefficients {
                writer
                    .write_record([entry.degree.to_string(), entry.value.clone()])
                    .expect("csv row");
            }
            String::from_utf8(writer.into_inner().expect("csv flush")).expect("csv utf8")
        }
    };
    emit(&output, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Failure> {
    init_threads(args.threads);
    let family = args.family.resolve()?;
    let started = Instant::now();
    let mut records = run_suite(&args, &family)?;
    if args.inject_failure {
        records.push(TupleRecord {
            degrees: Vec::new(),
            status: TupleStatus::Fail(SuiteWitness {
                degrees: Vec::new(),
                j: 0,
                k: 0,
                evaluator_id: "injected".into(),
                detail: "synthetic failure injected for report plumbing".into(),
            }),
        });
    }
    let tuples = records.len();
    let outcome = fold_records(records.clone());

    let mut params = family_params(&family);
    if let Some(scales) = args.family.scales.as_deref() {
        // The product carries an explicit per-factor scale list; drop the
        // single-spec entry in favor of the numbered ones.
        params.remove("scale");
        for (i, s) in scales.iter().enumerate() {
            params.insert(format!("scale{}", i + 1), rat_str(s));
        }
    }
    let report = SuiteReport {
        version: SCHEMA_VERSION,
        suite: args.suite.name().to_string(),
        family: family.name().to_string(),
        params,
        grid: GridSpec {
            factors: grid_factors(&args),
            min_degree: args.min_degree,
            max_degree: args.max_degree,
            tuples,
        },
        passed: outcome.passed,
        failed: outcome.failed,
        skipped: outcome.skipped,
        witnesses: outcome.witnesses.iter().map(WitnessReport::from).collect(),
        wall_time_ms: started.elapsed().as_millis() as u64,
    };
    let output = match args.format {
        Format::Json => report.to_json(),
        Format::Csv => records_to_csv(&report.suite, &report.family, &records),
    };
    emit(&output, args.out.as_deref())?;
    Ok(if report.failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn grid_factors(args: &VerifyArgs) -> usize {
    match args.suite {
        Suite::Genfun => 1,
        _ => args.factors,
    }
}

/// Produces the per-tuple records of one suite run.
fn run_suite(args: &VerifyArgs, family: &FamilySpec) -> Result<Vec<TupleRecord>, Failure> {
    let factors = args.factors;
    if !(2..=4).contains(&factors) {
        return Err(Failure::Usage(format!("--factors {factors} unsupported (need 2..=4)")));
    }
    let is_scaled = matches!(family, FamilySpec::ScaledLaguerre { .. });
    if is_scaled && factors != 3 {
        return Err(Failure::Usage(
            "scaled-laguerre verification is a three-factor product".into(),
        ));
    }
    match args.suite {
        Suite::Contiguous => {
            if is_scaled {
                let alpha = args.family.alpha.clone().expect("resolved");
                let (a, b) = args.family.scale_pair()?;
                let families = scaled_families(&alpha, &a, &b);
                Ok(verify_grid(
                    &families,
                    args.min_degree,
                    args.max_degree,
                    |d| lincoef::laguerre::scaled_lag_integral_ratio(d[0], d[1], d[2], &alpha, &a, &b),
                    "scaled_lag_integral_ratio",
                ))
            } else {
                let families = vec![family.clone(); factors];
                Ok(verify_grid(
                    &families,
                    args.min_degree,
                    args.max_degree,
                    |d| lincoef::integral_ratio(family, d),
                    "integral_ratio",
                ))
            }
        }
        Suite::Oracle => Ok(equivalence_grid(args, family, is_scaled)?),
        Suite::Quad => Ok(quad_grid(args, family, is_scaled)?),
        Suite::Genfun => genfun_grid(args, family),
    }
}

/// Per-tuple equality of the closed form against the expansion oracle.
fn equivalence_grid(
    args: &VerifyArgs,
    family: &FamilySpec,
    is_scaled: bool,
) -> Result<Vec<TupleRecord>, Failure> {
    use rayon::prelude::*;
    let scaled = if is_scaled {
        let alpha = args.family.alpha.clone().expect("resolved");
        let (a, b) = args.family.scale_pair()?;
        Some((alpha, a, b))
    } else {
        None
    };
    let grid = linrel::contiguous::degree_grid(args.factors, args.min_degree, args.max_degree);
    Ok(grid
        .into_par_iter()
        .map(|degrees| {
            let routes = match &scaled {
                Some((alpha, a, b)) => {
                    let scales = [q(1), a.clone(), b.clone()];
                    (
                        lincoef::laguerre::scaled_lag_integral_ratio(
                            degrees[0], degrees[1], degrees[2], alpha, a, b,
                        ),
                        polyalg::oracle_scaled_integral_ratio(alpha, &degrees, &scales),
                    )
                }
                None => (
                    lincoef::integral_ratio(family, &degrees),
                    polyalg::oracle_integral_ratio(family, &degrees),
                ),
            };
            let status = match routes {
                (Ok(closed), Ok(oracle)) if closed == oracle => TupleStatus::Pass,
                (Ok(closed), Ok(oracle)) => TupleStatus::Fail(SuiteWitness {
                    degrees: degrees.clone(),
                    j: 0,
                    k: 0,
                    evaluator_id: "oracle_equivalence".into(),
                    detail: format!("closed form {closed} but oracle {oracle}"),
                }),
                (Err(Error::InternalInconsistency(msg)), _) => TupleStatus::Fail(SuiteWitness {
                    degrees: degrees.clone(),
                    j: 0,
                    k: 0,
                    evaluator_id: "oracle_equivalence".into(),
                    detail: msg,
                }),
                _ => TupleStatus::Skip,
            };
            TupleRecord { degrees, status }
        })
        .collect())
}

/// Per-tuple numeric cross-check of the exact integral via Gauss rules.
fn quad_grid(
    args: &VerifyArgs,
    family: &FamilySpec,
    is_scaled: bool,
) -> Result<Vec<TupleRecord>, Failure> {
    use rayon::prelude::*;
    let scaled = if is_scaled {
        let alpha = args.family.alpha.clone().expect("resolved");
        let (a, b) = args.family.scale_pair()?;
        Some((alpha, a, b))
    } else {
        None
    };
    let grid = linrel::contiguous::degree_grid(args.factors, args.min_degree, args.max_degree);
    Ok(grid
        .into_par_iter()
        .map(|degrees| {
            let (exact, measure, scales) = match &scaled {
                Some((alpha, a, b)) => (
                    lincoef::laguerre::scaled_lag_integral_ratio(
                        degrees[0], degrees[1], degrees[2], alpha, a, b,
                    ),
                    FamilySpec::Laguerre { alpha: alpha.clone() },
                    vec![q(1), a.clone(), b.clone()],
                ),
                None => (
                    lincoef::integral_ratio(family, &degrees),
                    family.clone(),
                    vec![q(1); degrees.len()],
                ),
            };
            let status = match exact {
                Ok(exact) => {
                    match (
                        numquad::quad_product_integral(&measure, &degrees, &scales),
                        numquad::h0_value(&measure),
                    ) {
                        (Ok(numeric), Ok(h0)) => {
                            if numquad::cross_check_with(&exact, numeric, h0, args.rtol, args.atol)
                            {
                                TupleStatus::Pass
                            } else {
                                TupleStatus::Fail(SuiteWitness {
                                    degrees: degrees.clone(),
                                    j: 0,
                                    k: 0,
                                    evaluator_id: "quad_cross_check".into(),
                                    detail: format!(
                                        "exact {exact} vs numeric {numeric} (h0 {h0})"
                                    ),
                                })
                            }
                        }
                        _ => TupleStatus::Skip,
                    }
                }
                Err(Error::InternalInconsistency(msg)) => TupleStatus::Fail(SuiteWitness {
                    degrees: degrees.clone(),
                    j: 0,
                    k: 0,
                    evaluator_id: "quad_cross_check".into(),
                    detail: msg,
                }),
                Err(_) => TupleStatus::Skip,
            };
            TupleRecord { degrees, status }
        })
        .collect())
}

/// One record per truncation degree of the generating-function check.
fn genfun_grid(args: &VerifyArgs, family: &FamilySpec) -> Result<Vec<TupleRecord>, Failure> {
    let mut records = Vec::new();
    for t in args.min_degree..=args.max_degree {
        let status = if t > GENFUN_BUDGET {
            TupleStatus::Skip
        } else {
            match polyalg::genfun_truncation_check(family, t) {
                Ok(true) => TupleStatus::Pass,
                Ok(false) => TupleStatus::Fail(SuiteWitness {
                    degrees: vec![t],
                    j: 0,
                    k: 0,
                    evaluator_id: "genfun_truncation_check".into(),
                    detail: format!("series mismatch at total degree {t}"),
                }),
                // Unsupported family: a genuine domain error for the run.
                Err(e @ Error::IndexOutOfRange(_)) => return Err(e.into()),
                Err(_) => TupleStatus::Skip,
            }
        };
        records.push(TupleRecord { degrees: vec![t], status });
    }
    Ok(records)
}

#[derive(Serialize)]
struct QuadReport {
    version: u32,
    family: String,
    params: BTreeMap<String, String>,
    degrees: Vec<u32>,
    scales: Vec<String>,
    numeric: f64,
    exact: String,
    h0: f64,
    agree: bool,
}

fn cmd_quad(args: QuadArgs) -> Result<ExitCode, Failure> {
    let family = args.family.resolve()?;
    let is_scaled = matches!(family, FamilySpec::ScaledLaguerre { .. });
    let (exact, measure, scales) = if is_scaled {
        let alpha = args.family.alpha.clone().expect("resolved");
        let (a, b) = args.family.scale_pair()?;
        if args.degrees.len() != 3 {
            return Err(Failure::Usage(
                "scaled-laguerre quadrature needs exactly three degrees".into(),
            ));
        }
        (
            lincoef::laguerre::scaled_lag_integral_ratio(
                args.degrees[0],
                args.degrees[1],
                args.degrees[2],
                &alpha,
                &a,
                &b,
            )?,
            FamilySpec::Laguerre { alpha },
            vec![q(1), a, b],
        )
    } else {
        (
            lincoef::integral_ratio(&family, &args.degrees)?,
            family.clone(),
            vec![q(1); args.degrees.len()],
        )
    };
    let numeric = numquad::quad_product_integral(&measure, &args.degrees, &scales)?;
    let h0 = numquad::h0_value(&measure)?;
    let agree = numquad::cross_check_with(&exact, numeric, h0, args.rtol, args.atol);
    let mut params = family_params(&family);
    if is_scaled {
        params.remove("scale");
    }
    let report = QuadReport {
        version: SCHEMA_VERSION,
        family: family.name().to_string(),
        params,
        degrees: args.degrees.clone(),
        scales: scales.iter().map(rat_str).collect(),
        numeric,
        exact: rat_str(&exact),
        h0,
        agree,
    };
    let output = serde_json::to_string_pretty(&report).expect("quad report json");
    emit(&output, args.out.as_deref())?;
    Ok(if agree { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// Applies --threads, then LINREL_THREADS, then the rayon default; keeps
/// the current pool when one is already installed.
fn init_threads(flag: Option<usize>) {
    let from_env = std::env::var("LINREL_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    if let Some(n) = flag.or(from_env).filter(|&n| n > 0) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn emit(output: &str, out: Option<&std::path::Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, output.as_bytes()).map_err(|e| {
            Failure::Usage(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            println!("{output}");
            Ok(())
        }
    }
}
