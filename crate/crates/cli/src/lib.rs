//! Command-line front end for `ellfib`: fiber tables, adiabatic verdicts,
//! beta values, GIT weights and grid scans.
//!
//! Exit codes: 0 success, 1 verdict outside the covered cases, 2 input
//! error, 3 internal invariant breach.

pub mod input;
pub mod report;
pub mod scan;

use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use ellfib::batch::PipelineError;
use ellfib::canbundle::{base_data, euler, lct_of_fiber, validate_config};
use ellfib::dfweights::{
    hm_weight_form, hm_weight_pencil, miranda_weight, parse_ternary, point_degeneration_df, OnePS,
};
use ellfib::exactmath::{Place, Rational};
use ellfib::int;
use ellfib::stability::{
    adiabatic_verdict, alpha_delta_limits, base_pair, beta, delta, StabilityError, VerdictTag,
};
use ellfib::weierstrass::{analyze, FiberConfig, WeierstrassError};
use serde::Serialize;
use thiserror::Error;

use input::{load, Input};
use report::{BetaPoint, BetaReport, ClassifyReport, FiberRow, LimitsReport, WeightsReport};
use scan::ParamRange;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal invariant breach: {0}")]
    Breach(String),
    #[error("output: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Breach(_) => 3,
        }
    }
}

impl From<WeierstrassError> for CliError {
    fn from(e: WeierstrassError) -> Self {
        match e {
            WeierstrassError::NonMinimal { place } => CliError::Input(format!(
                "model is not minimal at {place}; rerun with --minimalize"
            )),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<StabilityError> for CliError {
    fn from(e: StabilityError) -> Self {
        match e {
            StabilityError::InvariantBreach(msg) => CliError::Breach(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Weierstrass(e) => e.into(),
            PipelineError::Stability(e) => e.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "ellfib",
    version,
    about = "Kodaira fibers and adiabatic K-stability of elliptic surfaces over P^1"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fiber table: place, valuations, Kodaira type, lct, Euler number.
    Classify(InputArgs),
    /// Adiabatic K-stability verdict.
    Verdict(InputArgs),
    /// Limits of the alpha and delta invariants as the fibers shrink.
    Limits(InputArgs),
    /// Beta invariants of the log-twisted base at its boundary points.
    Beta(BetaArgs),
    /// Hilbert-Mumford weight of forms under a one-parameter subgroup.
    Weights(WeightsArgs),
    /// Verdict strata over a grid of parameter values, as CSV.
    Scan(ScanArgs),
}

/// A model (`{chi, A, B}`) or fiber configuration (`{chi, fibers}`) file in
/// JSON or TOML, or a model given inline.
#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["file", "a_poly"])))]
pub struct InputArgs {
    pub file: Option<PathBuf>,
    /// Coefficient A as a polynomial in t, homogenized to degree 4 chi.
    #[arg(
        long = "A",
        id = "a_poly",
        requires = "b_poly",
        conflicts_with = "file",
        allow_hyphen_values = true
    )]
    pub a_poly: Option<String>,
    /// Coefficient B, homogenized to degree 6 chi.
    #[arg(
        long = "B",
        id = "b_poly",
        requires = "a_poly",
        allow_hyphen_values = true
    )]
    pub b_poly: Option<String>,
    #[arg(long, conflicts_with = "file")]
    pub chi: Option<u32>,
    /// Divide out non-minimal places before classifying.
    #[arg(long)]
    pub minimalize: bool,
}

#[derive(Debug, Args)]
pub struct BetaArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Extra places to evaluate (`infinity` or a squarefree polynomial in t).
    #[arg(long)]
    pub at: Vec<Place>,
}

/// Either ternary forms in x, y, z with `--lambda`, or a Weierstrass model
/// with `--a` for the torus acting on `(s, t)` by weights `(a, -a)`.
#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["form", "a_poly"])))]
pub struct WeightsArgs {
    #[arg(long, requires = "lambda", conflicts_with = "a_poly")]
    pub form: Option<String>,
    /// Second generator of a pencil.
    #[arg(long = "with", requires = "form")]
    pub with: Option<String>,
    /// Weights on x, y, z, summing to zero.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub lambda: Vec<i64>,
    #[arg(long = "A", id = "a_poly", requires_all = ["b_poly", "weight"], allow_hyphen_values = true)]
    pub a_poly: Option<String>,
    #[arg(
        long = "B",
        id = "b_poly",
        requires = "a_poly",
        allow_hyphen_values = true
    )]
    pub b_poly: Option<String>,
    #[arg(long, requires = "a_poly")]
    pub chi: Option<u32>,
    #[arg(long = "a", id = "weight", allow_hyphen_values = true)]
    pub weight: Option<i64>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Literal for A in t and the parameters.
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a_poly: String,
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b_poly: String,
    #[arg(long, default_value_t = 1)]
    pub chi: u32,
    /// `name=start:end:step`, inclusive; repeat for more parameters.
    #[arg(long = "param", allow_hyphen_values = true)]
    pub params: Vec<String>,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn emit<T: Serialize>(
    format: Format,
    value: &T,
    text: impl FnOnce(&T) -> String,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let rendered = match format {
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(value).map_err(|e| CliError::Breach(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Text => text(value),
    };
    out.write_all(rendered.as_bytes())
        .map_err(|e| CliError::Io(e.to_string()))
}

fn load_args(args: &InputArgs) -> Result<(Input, Vec<Place>), CliError> {
    load(
        args.file.as_deref(),
        args.a_poly.as_deref(),
        args.b_poly.as_deref(),
        args.chi,
        args.minimalize,
    )
}

fn config_of(input: &Input) -> Result<FiberConfig, CliError> {
    match input {
        Input::Model(m) => Ok(analyze(m)?),
        Input::Config(c) => Ok(c.clone()),
    }
}

pub fn classify(args: &InputArgs) -> Result<ClassifyReport, CliError> {
    let (input, minimalized_at) = load_args(args)?;
    let config = config_of(&input)?;
    if let Input::Config(c) = &input {
        if let Err(violations) = validate_config(c) {
            let listed: Vec<String> = violations.iter().map(ToString::to_string).collect();
            return Err(CliError::Input(format!(
                "invalid fiber configuration: {}",
                listed.join("; ")
            )));
        }
    }
    let mut fibers = Vec::new();
    for e in &config.entries {
        let lct =
            lct_of_fiber(e.kind, e.multiplicity).map_err(|err| CliError::Input(err.to_string()))?;
        fibers.push(FiberRow {
            place: e.place.clone(),
            valuations: e.valuations.map(|v| v.map(|x| x.to_string())),
            kind: e.kind,
            m: e.multiplicity,
            deg: e.place_degree,
            lct,
            euler: euler(e.kind),
        });
    }
    let euler_sum = config
        .entries
        .iter()
        .map(|e| euler(e.kind) * e.place_degree)
        .sum();
    let report = ClassifyReport {
        chi: config.chi,
        minimalized_at,
        fibers,
        euler_sum,
        euler_expected: 12 * config.chi,
    };
    if matches!(input, Input::Model(_)) && report.euler_sum != report.euler_expected {
        return Err(CliError::Breach(format!(
            "Euler numbers of a model sum to {}, not {}",
            report.euler_sum, report.euler_expected
        )));
    }
    Ok(report)
}

fn beta_report(args: &BetaArgs) -> Result<BetaReport, CliError> {
    let (input, _) = load_args(&args.input)?;
    let base = base_data(&config_of(&input)?).map_err(StabilityError::from)?;
    let pair = base_pair(&base)?;
    let boundary = pair.boundary();
    let mut places: Vec<Place> = boundary.iter().map(|(p, _)| p.clone()).collect();
    // one point off the boundary stands for all generic points
    let generic = std::iter::once(Place::Infinity)
        .chain((0..).map(|n| Place::rational_point(int(n))))
        .find(|p| boundary.coefficient(p) == Rational::from_integer(0.into()))
        .expect("the boundary has finite support");
    places.push(generic);
    for p in &args.at {
        if !places.contains(p) {
            places.push(p.clone());
        }
    }
    let points = places
        .into_iter()
        .map(|place| {
            let b = beta(&pair, &place)?;
            Ok(BetaPoint {
                coefficient: boundary.coefficient(&place),
                beta: b,
                place,
            })
        })
        .collect::<Result<Vec<_>, StabilityError>>()?;
    Ok(BetaReport {
        boundary_degree: boundary.degree(),
        twist: pair.twist().clone(),
        polarization: pair.degree().clone(),
        points,
        delta: delta(&pair)?,
    })
}

fn weights_report(args: &WeightsArgs) -> Result<WeightsReport, CliError> {
    let bad = |e: &dyn std::fmt::Display| CliError::Input(e.to_string());
    if let Some(form) = &args.form {
        let lam = OnePS::new(args.lambda.clone()).map_err(|e| bad(&e))?;
        let f = parse_ternary(form).map_err(|e| CliError::Input(format!("--form: line 1, {e}")))?;
        let mu = match &args.with {
            Some(g) => {
                let g = parse_ternary(g)
                    .map_err(|e| CliError::Input(format!("--with: line 1, {e}")))?;
                hm_weight_pencil(&f, &g, &lam).map_err(|e| bad(&e))?
            }
            None => hm_weight_form(&f, &lam).map_err(|e| bad(&e))?,
        };
        return Ok(WeightsReport { mu, df: None });
    }
    let (a, b) = (
        args.a_poly.as_deref().unwrap_or_default(),
        args.b_poly.as_deref().unwrap_or_default(),
    );
    let model = input::model_from_literals(a, b, args.chi.unwrap_or(1), "--")?;
    let weight = args.weight.expect("clap requires --a with --A");
    let mu = miranda_weight(model.a(), model.b(), weight).map_err(|e| bad(&e))?;
    // positive a pushes the family towards s = 0, negative a towards t = 0
    let place = match weight.signum() {
        1 => Some(Place::Infinity),
        -1 => Some(Place::rational_point(int(0))),
        _ => None,
    };
    let df = place.and_then(|p| {
        let config = analyze(&model).ok()?;
        let pair = base_pair(&base_data(&config).ok()?).ok()?;
        point_degeneration_df(&pair, &p).ok()
    });
    Ok(WeightsReport { mu, df })
}

fn scan_command(
    args: &ScanArgs,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let params = args
        .params
        .iter()
        .map(|p| ParamRange::parse(p))
        .collect::<Result<Vec<_>, _>>()?;
    let rows = scan::run_scan(
        &args.a_poly,
        &args.b_poly,
        args.chi,
        &params,
        scan::scan_cap()?,
    )?;
    match &args.out {
        Some(path) => {
            let file = std::fs::File::create(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            scan::write_csv(&rows, file)?;
        }
        None => scan::write_csv(&rows, &mut *out)?,
    }
    let summary = scan::summarize(&rows);
    emit(
        format,
        &summary,
        |s| {
            let mut text = format!("rows: {}, flagged: {}\n", s.rows, s.flagged);
            for (tag, n) in &s.strata {
                text.push_str(&format!("{tag}: {n}\n"));
            }
            text
        },
        err,
    )
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Classify(args) => emit(format, &classify(args)?, report::classify_text, out)?,
        Command::Verdict(args) => {
            let (input, _) = load_args(args)?;
            let r = adiabatic_verdict(&config_of(&input)?)?;
            emit(format, &r, report::verdict_text, out)?;
            if r.base.tag == VerdictTag::CoverageGap || r.total.tag == VerdictTag::CoverageGap {
                return Ok(1);
            }
        }
        Command::Limits(args) => {
            let (input, _) = load_args(args)?;
            let (alpha, delta) = alpha_delta_limits(&config_of(&input)?)?;
            emit(
                format,
                &LimitsReport { alpha, delta },
                report::limits_text,
                out,
            )?;
        }
        Command::Beta(args) => emit(format, &beta_report(args)?, report::beta_text, out)?,
        Command::Weights(args) => emit(format, &weights_report(args)?, report::weights_text, out)?,
        Command::Scan(args) => scan_command(args, format, out, err)?,
    }
    Ok(0)
}

/// Runs one command and returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
