//! `residual`: deterministic JSON/CSV front end for the residual-category
//! calculators.
//!
//! Subcommands: `info` (model invariants, Serre data, closed forms),
//! `hilbert` (section dimensions over a twist range), `ext` (bigraded Hom
//! table), `sdim` (Serre-orbit series plus dimension estimates), `check`
//! (invariant battery). The primary document goes to stdout or `--output`;
//! errors are single JSON objects on stderr with a stable code. Exit codes:
//! 0 success, 1 validation error, 2 invariant failure during `check`.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_rational::Rational64;
use num_traits::ToPrimitive;
use residual_core::lattice::{self, Side};
use residual_core::model::ModelError;
use residual_core::selfcheck::run_checks;
use residual_core::serredim::{self, SerredimError};
use residual_core::{
    extremal_rcharge, reduce_linear, CompleteIntersectionModel, HomTables, LatticeFunctor,
    SectionCounter,
};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(
    name = "residual",
    version,
    about = "Exact Hom tables, Serre orbits, and Serre dimensions for residual categories of Fano complete intersections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ModelArgs {
    /// Dimension n of the ambient projective space P^n
    #[arg(long)]
    n: i64,
    /// Comma-separated multidegree, e.g. 2,3
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_hyphen_values = true
    )]
    degrees: Vec<i64>,
    /// Eliminate degree-1 entries (lowering n accordingly) before validating
    #[arg(long)]
    reduce_linear: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Model invariants, Serre functors, closed-form Serre dimensions (JSON)
    Info {
        #[command(flatten)]
        model: ModelArgs,
        /// Render rationals as decimals with this many digits
        #[arg(long, value_name = "DIGITS")]
        float: Option<usize>,
        /// Write the document here instead of stdout
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Section dimension and extremal R-charges per twist (CSV: j,dim,min_r,max_r)
    Hilbert {
        #[command(flatten)]
        model: ModelArgs,
        /// First twist of the range
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        jmin: i64,
        /// Last twist of the range (inclusive)
        #[arg(long, allow_hyphen_values = true)]
        jmax: i64,
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Bigraded Hom table between two twists (CSV: t,dim)
    Ext {
        #[command(flatten)]
        model: ModelArgs,
        /// Source twist a of Hom(O(a), O(b))
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        a: i64,
        /// Target twist b of Hom(O(a), O(b))
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Serre-orbit samples over (M/2, M] with dimension estimates (JSON summary; CSV series via --csv)
    Sdim {
        #[command(flatten)]
        model: ModelArgs,
        /// Horizon M
        #[arg(long)]
        horizon: i64,
        /// Write the series (CSV: m,e_minus,e_plus,upper_sample,lower_sample) here
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        /// Render rationals as decimals with this many digits
        #[arg(long, value_name = "DIGITS")]
        float: Option<usize>,
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Run the invariant battery against the model (JSON; exit 2 on failure)
    Check {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

struct Failure {
    code: &'static str,
    message: String,
}

impl Failure {
    fn new(code: &'static str, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

fn model_error_code(err: &ModelError) -> &'static str {
    match err {
        ModelError::EmptyDegrees => "EmptyDegrees",
        ModelError::AmbientTooSmall { .. } => "AmbientTooSmall",
        ModelError::DegreeBelowTwo { .. } => "DegreeBelowTwo",
        ModelError::NotFano { .. } => "NotFano",
        ModelError::AllLinear => "AllLinear",
    }
}

fn serredim_error_code(err: &SerredimError) -> &'static str {
    match err {
        SerredimError::HorizonTooSmall { .. } => "HorizonTooSmall",
        SerredimError::EmptyHom { .. } => "EmptyHom",
    }
}

// ---------------------------------------------------------------------------
// JSON documents (field order is part of the output contract)
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ModelJson {
    n: i64,
    degrees: Vec<i64>,
    d_total: i64,
    codim: i64,
    dim_x: i64,
    index: i64,
    dim_y_minus: i64,
    d_max: i64,
    d_min: i64,
}

impl ModelJson {
    fn new(model: &CompleteIntersectionModel) -> Self {
        Self {
            n: model.n(),
            degrees: model.degrees().to_vec(),
            d_total: model.d_total(),
            codim: model.codim(),
            dim_x: model.dim_x(),
            index: model.index(),
            dim_y_minus: model.dim_y_minus(),
            d_max: model.d_max(),
            d_min: model.d_min(),
        }
    }
}

#[derive(Serialize)]
struct FunctorJson {
    twist: i64,
    shift: i64,
}

impl From<LatticeFunctor> for FunctorJson {
    fn from(f: LatticeFunctor) -> Self {
        Self {
            twist: f.twist,
            shift: f.shift,
        }
    }
}

#[derive(Serialize)]
struct PowerIdentitiesJson {
    last_degree: i64,
    c: i64,
    serre_power: i64,
    twist_power: i64,
    cotwist_power: i64,
    twist_extra_shift: i64,
    cotwist_extra_shift: i64,
    twist: FunctorJson,
    cotwist: FunctorJson,
    twist_identity_holds: bool,
    cotwist_identity_holds: bool,
}

#[derive(Serialize)]
struct FractionalCyJson {
    power: i64,
    shift: i64,
    cy_dimension: String,
}

#[derive(Serialize)]
struct InfoJson {
    schema_version: &'static str,
    model: ModelJson,
    serre_functor: FunctorJson,
    serre_functor_ambient: FunctorJson,
    canonical_bundle: FunctorJson,
    generator_twists: Vec<i64>,
    sdim_upper: String,
    sdim_lower: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    power_identities: Option<PowerIdentitiesJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fractional_cy: Option<FractionalCyJson>,
}

#[derive(Serialize)]
struct SdimSummaryJson {
    schema_version: &'static str,
    model: ModelJson,
    horizon: i64,
    window_start: i64,
    window_end: i64,
    sample_count: usize,
    upper_estimate: String,
    lower_estimate: String,
    upper_closed: String,
    lower_closed: String,
}

#[derive(Serialize)]
struct CheckEntryJson {
    name: &'static str,
    pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    detail: String,
}

#[derive(Serialize)]
struct CheckJson {
    schema_version: &'static str,
    model: ModelJson,
    checks: Vec<CheckEntryJson>,
    passed: usize,
    failed: usize,
}

#[derive(Serialize)]
struct ErrorJson {
    schema_version: &'static str,
    error: ErrorBodyJson,
}

#[derive(Serialize)]
struct ErrorBodyJson {
    code: &'static str,
    message: String,
}

// ---------------------------------------------------------------------------

fn render_ratio(value: Rational64, float_digits: Option<usize>) -> String {
    match float_digits {
        None => value.to_string(),
        Some(digits) => format!("{:.*}", digits, value.to_f64().expect("finite ratio")),
    }
}

fn to_json(document: &impl Serialize) -> String {
    let mut text = serde_json::to_string_pretty(document).expect("serializable document");
    text.push('\n');
    text
}

fn emit(document: String, output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        None => {
            print!("{document}");
            Ok(())
        }
        Some(path) => std::fs::write(path, document)
            .map_err(|e| Failure::new("Io", format!("cannot write {}: {e}", path.display()))),
    }
}

fn build_model(args: &ModelArgs) -> Result<CompleteIntersectionModel, Failure> {
    let (n, degrees) = if args.reduce_linear {
        reduce_linear(args.n, args.degrees.clone())
            .map_err(|e| Failure::new(model_error_code(&e), e.to_string()))?
    } else {
        (args.n, args.degrees.clone())
    };
    CompleteIntersectionModel::validate(n, degrees)
        .map_err(|e| Failure::new(model_error_code(&e), e.to_string()))
}

fn info_document(model: &CompleteIntersectionModel, float: Option<usize>) -> InfoJson {
    let (upper, lower) = serredim::sdim_closed_form(model);
    let power_identities = lattice::power_identity_report(model).ok().map(|report| {
        let (twist, cotwist) = lattice::twist_cotwist(model).expect("k >= 2 here");
        PowerIdentitiesJson {
            last_degree: report.last_degree,
            c: report.c,
            serre_power: report.serre_power,
            twist_power: report.twist_power,
            cotwist_power: report.cotwist_power,
            twist_extra_shift: report.twist_extra_shift,
            cotwist_extra_shift: report.cotwist_extra_shift,
            twist: twist.into(),
            cotwist: cotwist.into(),
            twist_identity_holds: report.twist_identity_holds,
            cotwist_identity_holds: report.cotwist_identity_holds,
        }
    });
    let fractional_cy = lattice::fractional_cy(model)
        .ok()
        .map(|(p, q)| FractionalCyJson {
            power: p,
            shift: q,
            cy_dimension: render_ratio(Rational64::new(q, p), float),
        });
    InfoJson {
        schema_version: SCHEMA_VERSION,
        model: ModelJson::new(model),
        serre_functor: lattice::serre_functor(model, Side::Yminus).into(),
        serre_functor_ambient: lattice::serre_functor(model, Side::Yplus).into(),
        canonical_bundle: lattice::canonical_bundle(model).into(),
        generator_twists: serredim::generator_twists(model),
        sdim_upper: render_ratio(upper, float),
        sdim_lower: render_ratio(lower, float),
        power_identities,
        fractional_cy,
    }
}

fn hilbert_csv(model: &CompleteIntersectionModel, jmin: i64, jmax: i64) -> String {
    let mut counter = SectionCounter::new(model.degrees());
    let mut csv = String::from("j,dim,min_r,max_r\n");
    for j in jmin..=jmax {
        let dim = counter.h0(j).total();
        match extremal_rcharge(model.degrees(), j) {
            Some((min_r, max_r)) => writeln!(csv, "{j},{dim},{min_r},{max_r}"),
            None => writeln!(csv, "{j},{dim},,"),
        }
        .expect("writing to string");
    }
    csv
}

fn ext_csv(model: &CompleteIntersectionModel, a: i64, b: i64) -> String {
    let mut tables = HomTables::new(model);
    let mut csv = String::from("t,dim\n");
    for (t, dim) in tables.table(a, b).iter() {
        writeln!(csv, "{t},{dim}").expect("writing to string");
    }
    csv
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Info {
            model,
            float,
            output,
        } => {
            let model = build_model(&model)?;
            emit(to_json(&info_document(&model, float)), output.as_ref())?;
            Ok(0)
        }
        Command::Hilbert {
            model,
            jmin,
            jmax,
            output,
        } => {
            let model = build_model(&model)?;
            if jmin > jmax {
                return Err(Failure::new(
                    "InvalidArguments",
                    format!("empty twist range: jmin = {jmin} > jmax = {jmax}"),
                ));
            }
            emit(hilbert_csv(&model, jmin, jmax), output.as_ref())?;
            Ok(0)
        }
        Command::Ext {
            model,
            a,
            b,
            output,
        } => {
            let model = build_model(&model)?;
            emit(ext_csv(&model, a, b), output.as_ref())?;
            Ok(0)
        }
        Command::Sdim {
            model,
            horizon,
            csv,
            float,
            output,
        } => {
            let model = build_model(&model)?;
            let report = serredim::sdim_estimates(&model, horizon)
                .map_err(|e| Failure::new(serredim_error_code(&e), e.to_string()))?;
            if let Some(path) = csv {
                let mut series = String::from("m,e_minus,e_plus,upper_sample,lower_sample\n");
                for point in &report.series {
                    writeln!(
                        series,
                        "{},{},{},{},{}",
                        point.m,
                        point.e_minus,
                        point.e_plus,
                        render_ratio(point.upper_sample, float),
                        render_ratio(point.lower_sample, float)
                    )
                    .expect("writing to string");
                }
                emit(series, Some(&path))?;
            }
            let summary = SdimSummaryJson {
                schema_version: SCHEMA_VERSION,
                model: ModelJson::new(&model),
                horizon: report.horizon,
                window_start: report.series.first().expect("nonempty window").m,
                window_end: report.series.last().expect("nonempty window").m,
                sample_count: report.series.len(),
                upper_estimate: render_ratio(report.upper_estimate, float),
                lower_estimate: render_ratio(report.lower_estimate, float),
                upper_closed: render_ratio(report.upper_closed, float),
                lower_closed: render_ratio(report.lower_closed, float),
            };
            emit(to_json(&summary), output.as_ref())?;
            Ok(0)
        }
        Command::Check { model, output } => {
            let model = build_model(&model)?;
            let results = run_checks(&model);
            let failed = results.iter().filter(|r| !r.pass).count();
            let document = CheckJson {
                schema_version: SCHEMA_VERSION,
                model: ModelJson::new(&model),
                passed: results.len() - failed,
                failed,
                checks: results
                    .into_iter()
                    .map(|r| CheckEntryJson {
                        name: r.name,
                        pass: r.pass,
                        detail: r.detail,
                    })
                    .collect(),
            };
            emit(to_json(&document), output.as_ref())?;
            Ok(if failed > 0 { 2 } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err)
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            print!("{err}");
            return ExitCode::SUCCESS;
        }
        Err(err) => {
            report_failure(&Failure::new("InvalidArguments", err.to_string()));
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            report_failure(&failure);
            ExitCode::from(1)
        }
    }
}

fn report_failure(failure: &Failure) {
    let document = ErrorJson {
        schema_version: SCHEMA_VERSION,
        error: ErrorBodyJson {
            code: failure.code,
            message: failure.message.clone(),
        },
    };
    eprint!("{}", to_json(&document));
}
