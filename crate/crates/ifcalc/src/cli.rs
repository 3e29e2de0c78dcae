//! The batch command line interface.
//!
//! Eight subcommands map onto the library operations: `eval`, `mvt`,
//! `cmvt`, `rolle`, `region`, `curve`, `trend`, `derive`. Results are
//! emitted as JSON lines with a fixed envelope (command echo, inputs echo,
//! output payload, diagnostics); `region` and `curve` emit plain `u,v` CSV
//! unless `--json` is given. Payload numbers carry 15 significant digits.
//!
//! Exit codes are a stable contract:
//!
//! * `0` success (including reported fallbacks and invalid derivatives),
//! * `1` usage or parse errors,
//! * `2` precondition failures (non-comparable pairs, singularities, ...),
//! * `3` an identity check that ran but did not pass.

use crate::calculus::{
    add_cmvt_check, add_derivative, add_mvt_solve, mul_cmvt_check, mul_derivative, rolle_check,
    secant_add_derivative, CmvtReport, DerivativeKind, DerivativeValue, MeanValueResult, Pair,
    DEFAULT_TOLERANCE,
};
use crate::expr::{evaluate, parse, Evaluated};
use crate::iff::Iff;
use crate::ifn::{lambda_curve, region_membership, Ifn, RegionKind};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{Map, Number, Value};
use std::fmt;

/// One emitted result line: the envelope every JSON-producing subcommand
/// shares.
#[derive(Debug, Clone, Serialize)]
pub struct CommandResult {
    pub command: &'static str,
    pub inputs: Value,
    pub output: Value,
    pub diagnostics: Value,
}

/// A classified failure carrying its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad invocation or unparseable input text. Exit code 1.
    Usage(String),
    /// Well-formed request whose mathematical preconditions fail. Exit code 2.
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Precondition(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Precondition(m) => write!(f, "{m}"),
        }
    }
}

/// Everything a command run produces: lines for stdout plus the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub stdout: Vec<String>,
    pub exit_code: i32,
}

const OPERATOR_HELP: &str = "\
Expressions combine IFN literals \"(u,v)\" and the function variable X.\n\
Operators map onto the IFN algebra: + is ⊕, - is ⊖, * is ⊗, / is ⊘\n\
(⊖ and ⊘ fall back to their identity and set the fallback flag when no\n\
witness exists). ^ raises to a power, a leading \"n*\" is a scalar\n\
multiple, and \"p/q\" directly after a number is a fraction. \"(\" always\n\
opens an IFN literal; there is no grouping.";

#[derive(Debug, Parser)]
#[command(name = "ifcalc", version, about = "Batch calculator for intuitionistic fuzzy numbers", long_about = None, after_help = OPERATOR_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Which derivative or identity form a command works in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    /// Addition form (d⊕, the ⊖/⊗ identity).
    Add,
    /// Multiplication form (d⊗, the ⊘/⊕ identity).
    Mul,
}

/// Which reachability region of the anchor to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    /// S⊕: reachable from the anchor by addition.
    Add,
    /// S⊖: reaches the anchor by addition.
    Sub,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression to an IFN value or a function.
    Eval { expr: String },
    /// Solve for the addition-form mean value point of PHI over [X, Y].
    Mvt {
        phi: String,
        x: String,
        y: String,
        /// Residual tolerance for the bisection.
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Check the Cauchy mean value identity for PHI and GAMMA over [X, Y].
    Cmvt {
        phi: String,
        gamma: String,
        x: String,
        y: String,
        #[arg(long, value_enum, default_value_t = Form::Add)]
        form: Form,
        /// Largest accepted componentwise gap between the two sides.
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Check the Rolle form: equal endpoint values force the derivative to (0,1).
    Rolle { phi: String, x: String, y: String },
    /// Emit the grid points of a reachability region of ALPHA.
    Region {
        #[arg(value_enum)]
        kind: KindArg,
        alpha: String,
        /// Grid points per axis.
        #[arg(long, default_value_t = 100)]
        resolution: usize,
        /// Emit a JSON line instead of CSV.
        #[arg(long)]
        json: bool,
        /// Emit CSV with a u,v header (the default).
        #[arg(long)]
        csv: bool,
    },
    /// Sample the scalar-multiple curve through ALPHA.
    Curve {
        alpha: String,
        /// Number of curve samples.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Emit a JSON line instead of CSV.
        #[arg(long)]
        json: bool,
        /// Emit CSV with a u,v header (the default).
        #[arg(long)]
        csv: bool,
    },
    /// Classify consecutive steps of a t,u,v CSV series (experimental).
    Trend {
        /// Path to a CSV file with header t,u,v, rows in time order.
        path: String,
        /// Optional function: adds the secant derivative over each step.
        #[arg(long)]
        phi: Option<String>,
    },
    /// Evaluate a derivative of PHI at X.
    Derive {
        phi: String,
        x: String,
        #[arg(long, value_enum, default_value_t = Form::Add)]
        form: Form,
    },
}

/// Formats with exactly 15 significant digits; small magnitudes switch to
/// scientific notation so residuals stay readable.
fn format_sig(x: f64) -> String {
    debug_assert!(x.is_finite(), "payload numbers must be finite");
    if x == 0.0 {
        return "0".to_string();
    }
    let mut exponent = x.abs().log10().floor() as i32;
    if 10f64.powi(exponent + 1) <= x.abs() {
        exponent += 1;
    }
    if (-5..=14).contains(&exponent) {
        let decimals = (14 - exponent).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.14e}")
    }
}

fn sig15(x: f64) -> Value {
    match format_sig(x).parse::<Number>() {
        Ok(n) => Value::Number(n),
        Err(_) => Value::Null,
    }
}

fn obj(entries: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in entries {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

fn ifn_value(x: Ifn) -> Value {
    obj(vec![("u", sig15(x.u())), ("v", sig15(x.v()))])
}

fn pair_value(p: Pair) -> Value {
    obj(vec![("u", sig15(p.u)), ("v", sig15(p.v))])
}

fn derivative_value(d: &DerivativeValue) -> Value {
    let kind = match d.kind {
        DerivativeKind::Addition => "addition",
        DerivativeKind::Multiplication => "multiplication",
        DerivativeKind::SecantAddition => "secant-addition",
        DerivativeKind::SecantMultiplication => "secant-multiplication",
    };
    obj(vec![
        ("value", pair_value(d.value)),
        ("is_valid_ifn", Value::Bool(d.is_valid_ifn)),
        ("kind", Value::String(kind.to_string())),
    ])
}

fn mean_value_payload(r: &MeanValueResult) -> Value {
    obj(vec![
        ("point", ifn_value(r.point)),
        ("residual_mu", sig15(r.residual_mu)),
        ("residual_v", sig15(r.residual_v)),
        ("iterations_mu", Value::from(r.iterations_mu)),
        ("iterations_v", Value::from(r.iterations_v)),
    ])
}

fn report_payload(r: &CmvtReport) -> Value {
    obj(vec![
        ("lhs", pair_value(r.lhs)),
        ("rhs", pair_value(r.rhs)),
        ("max_component_gap", sig15(r.max_component_gap)),
        ("passed", Value::Bool(r.passed)),
    ])
}

fn emit(result: &CommandResult) -> String {
    serde_json::to_string(result).expect("JSON envelope serializes")
}

fn parse_ifn_arg(name: &str, text: &str) -> Result<Ifn, CliError> {
    let tree = parse(text).map_err(|e| CliError::Usage(format!("{name}: {e}")))?;
    match evaluate(&tree).map_err(|e| CliError::Usage(format!("{name}: {e}")))? {
        Evaluated::Ifn { value, .. } => Ok(value),
        Evaluated::Iff(_) => Err(CliError::Usage(format!(
            "{name}: expected an IFN value, got a function"
        ))),
    }
}

/// Function arguments accept IFN-valued expressions as constant functions,
/// so a Rolle check can be run on `φ ≡ (0.5,0.3)` directly.
fn parse_iff_arg(name: &str, text: &str) -> Result<Iff, CliError> {
    let tree = parse(text).map_err(|e| CliError::Usage(format!("{name}: {e}")))?;
    match evaluate(&tree).map_err(|e| CliError::Usage(format!("{name}: {e}")))? {
        Evaluated::Iff(f) => Ok(f),
        Evaluated::Ifn { value, .. } => Ok(Iff::constant(value)),
    }
}

fn check_tolerance(tolerance: f64) -> Result<(), CliError> {
    if !tolerance.is_finite() || tolerance < 0.0 {
        return Err(CliError::Usage(format!(
            "--tolerance must be a finite non-negative number, got {tolerance}"
        )));
    }
    Ok(())
}

fn precondition<E: fmt::Display>(e: E) -> CliError {
    CliError::Precondition(e.to_string())
}

fn echo(text: &str) -> Value {
    Value::String(text.to_string())
}

/// Output format shared by `region` and `curve`.
enum PointsFormat {
    Csv,
    Json,
}

fn points_format(json: bool, csv: bool) -> Result<PointsFormat, CliError> {
    match (json, csv) {
        (true, true) => Err(CliError::Usage("--json and --csv are mutually exclusive".to_string())),
        (true, false) => Ok(PointsFormat::Json),
        _ => Ok(PointsFormat::Csv),
    }
}

fn points_csv(points: &[Ifn]) -> Vec<String> {
    let mut lines = Vec::with_capacity(points.len() + 1);
    lines.push("u,v".to_string());
    for p in points {
        lines.push(format!("{},{}", format_sig(p.u()), format_sig(p.v())));
    }
    lines
}

fn run_eval(expr_text: &str) -> Result<Execution, CliError> {
    let tree = parse(expr_text).map_err(|e| CliError::Usage(e.to_string()))?;
    let evaluated = evaluate(&tree).map_err(|e| CliError::Usage(e.to_string()))?;
    let (output, diagnostics) = match evaluated {
        Evaluated::Ifn { value, fallback_used } => (
            obj(vec![
                ("type", Value::String("ifn".to_string())),
                ("value", ifn_value(value)),
            ]),
            obj(vec![("fallback_used", Value::Bool(fallback_used))]),
        ),
        Evaluated::Iff(f) => (
            obj(vec![
                ("type", Value::String("iff".to_string())),
                ("expr", Value::String(f.to_string())),
            ]),
            obj(vec![]),
        ),
    };
    let result = CommandResult {
        command: "eval",
        inputs: obj(vec![("expr", echo(expr_text))]),
        output,
        diagnostics,
    };
    Ok(Execution { stdout: vec![emit(&result)], exit_code: 0 })
}

fn run_mvt(phi_text: &str, x_text: &str, y_text: &str, tolerance: f64) -> Result<Execution, CliError> {
    check_tolerance(tolerance)?;
    let phi = parse_iff_arg("phi", phi_text)?;
    let x = parse_ifn_arg("x", x_text)?;
    let y = parse_ifn_arg("y", y_text)?;
    let solved = add_mvt_solve(&phi, x, y, tolerance).map_err(precondition)?;
    let result = CommandResult {
        command: "mvt",
        inputs: obj(vec![
            ("phi", echo(phi_text)),
            ("x", echo(x_text)),
            ("y", echo(y_text)),
            ("tolerance", sig15(tolerance)),
        ]),
        output: mean_value_payload(&solved),
        diagnostics: obj(vec![]),
    };
    Ok(Execution { stdout: vec![emit(&result)], exit_code: 0 })
}

fn run_cmvt(
    phi_text: &str,
    gamma_text: &str,
    x_text: &str,
    y_text: &str,
    form: Form,
    tolerance: f64,
) -> Result<Execution, CliError> {
    check_tolerance(tolerance)?;
    let phi = parse_iff_arg("phi", phi_text)?;
    let gamma = parse_iff_arg("gamma", gamma_text)?;
    let x = parse_ifn_arg("x", x_text)?;
    let y = parse_ifn_arg("y", y_text)?;
    let report = match form {
        Form::Add => add_cmvt_check(&phi, &gamma, x, y, tolerance),
        Form::Mul => mul_cmvt_check(&phi, &gamma, x, y, tolerance),
    }
    .map_err(precondition)?;
    let result = CommandResult {
        command: "cmvt",
        inputs: obj(vec![
            ("phi", echo(phi_text)),
            ("gamma", echo(gamma_text)),
            ("x", echo(x_text)),
            ("y", echo(y_text)),
            ("form", Value::String(match form {
                Form::Add => "add".to_string(),
                Form::Mul => "mul".to_string(),
            })),
            ("tolerance", sig15(tolerance)),
        ]),
        output: report_payload(&report),
        diagnostics: obj(vec![]),
    };
    let exit_code = if report.passed { 0 } else { 3 };
    Ok(Execution { stdout: vec![emit(&result)], exit_code })
}

fn run_rolle(phi_text: &str, x_text: &str, y_text: &str) -> Result<Execution, CliError> {
    let phi = parse_iff_arg("phi", phi_text)?;
    let x = parse_ifn_arg("x", x_text)?;
    let y = parse_ifn_arg("y", y_text)?;
    let report = rolle_check(&phi, x, y).map_err(precondition)?;
    let result = CommandResult {
        command: "rolle",
        inputs: obj(vec![
            ("phi", echo(phi_text)),
            ("x", echo(x_text)),
            ("y", echo(y_text)),
        ]),
        output: report_payload(&report),
        diagnostics: obj(vec![]),
    };
    let exit_code = if report.passed { 0 } else { 3 };
    Ok(Execution { stdout: vec![emit(&result)], exit_code })
}

fn run_region(
    kind: KindArg,
    alpha_text: &str,
    resolution: usize,
    json: bool,
    csv: bool,
) -> Result<Execution, CliError> {
    let format = points_format(json, csv)?;
    if resolution < 2 {
        return Err(CliError::Usage(format!(
            "--resolution must be at least 2, got {resolution}"
        )));
    }
    let alpha = parse_ifn_arg("alpha", alpha_text)?;
    let region = match kind {
        KindArg::Add => RegionKind::AddReachable,
        KindArg::Sub => RegionKind::SubReachable,
    };
    let step = (resolution - 1) as f64;
    let mut points = Vec::new();
    for i in 0..resolution {
        for j in 0..resolution - i {
            let u = i as f64 / step;
            let v = j as f64 / step;
            let Ok(candidate) = Ifn::new(u, v) else { continue };
            if region_membership(region, alpha, candidate) {
                points.push(candidate);
            }
        }
    }
    let kind_text = match kind {
        KindArg::Add => "add",
        KindArg::Sub => "sub",
    };
    match format {
        PointsFormat::Csv => Ok(Execution { stdout: points_csv(&points), exit_code: 0 }),
        PointsFormat::Json => {
            let result = CommandResult {
                command: "region",
                inputs: obj(vec![
                    ("kind", Value::String(kind_text.to_string())),
                    ("alpha", echo(alpha_text)),
                    ("resolution", Value::from(resolution as u64)),
                ]),
                output: obj(vec![(
                    "points",
                    Value::Array(points.iter().map(|p| ifn_value(*p)).collect()),
                )]),
                diagnostics: obj(vec![("count", Value::from(points.len() as u64))]),
            };
            Ok(Execution { stdout: vec![emit(&result)], exit_code: 0 })
        }
    }
}

fn run_curve(alpha_text: &str, samples: usize, json: bool, csv: bool) -> Result<Execution, CliError> {
    let format = points_format(json, csv)?;
    if samples < 2 {
        return Err(CliError::Usage(format!("--samples must be at least 2, got {samples}")));
    }
    let alpha = parse_ifn_arg("alpha", alpha_text)?;
    let points = lambda_curve(alpha, samples).map_err(precondition)?;
    match format {
        PointsFormat::Csv => Ok(Execution { stdout: points_csv(&points), exit_code: 0 }),
        PointsFormat::Json => {
            let result = CommandResult {
                command: "curve",
                inputs: obj(vec![
                    ("alpha", echo(alpha_text)),
                    ("samples", Value::from(samples as u64)),
                ]),
                output: obj(vec![(
                    "points",
                    Value::Array(points.iter().map(|p| ifn_value(*p)).collect()),
                )]),
                diagnostics: obj(vec![("count", Value::from(points.len() as u64))]),
            };
            Ok(Execution { stdout: vec![emit(&result)], exit_code: 0 })
        }
    }
}

fn run_trend(path: &str, phi_text: Option<&str>) -> Result<Execution, CliError> {
    let phi = phi_text.map(|t| parse_iff_arg("phi", t)).transpose()?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
    {
        let headers = reader
            .headers()
            .map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
        let expected = ["t", "u", "v"];
        let got: Vec<&str> = headers.iter().collect();
        if got != expected {
            return Err(CliError::Usage(format!(
                "{path}: expected header t,u,v, got {}",
                got.join(",")
            )));
        }
    }
    let mut series: Vec<(String, Ifn)> = Vec::new();
    for (index, record) in reader.records().enumerate() {
        let row = index + 1;
        let record = record.map_err(|e| CliError::Usage(format!("{path} row {row}: {e}")))?;
        if record.len() != 3 {
            return Err(CliError::Usage(format!(
                "{path} row {row}: expected 3 fields, got {}",
                record.len()
            )));
        }
        let t = record[0].to_string();
        let u: f64 = record[1]
            .parse()
            .map_err(|_| CliError::Usage(format!("{path} row {row}: malformed u {:?}", &record[1])))?;
        let v: f64 = record[2]
            .parse()
            .map_err(|_| CliError::Usage(format!("{path} row {row}: malformed v {:?}", &record[2])))?;
        let value = Ifn::new(u, v)
            .map_err(|e| CliError::Usage(format!("{path} row {row}: {e}")))?;
        series.push((t, value));
    }
    let mut steps = Vec::new();
    let mut increasing = 0u64;
    let mut not_comparable = 0u64;
    for window in series.windows(2) {
        let (from_t, from) = &window[0];
        let (to_t, to) = &window[1];
        let difference = to.sub(*from);
        let is_increasing = from.leq_add(*to);
        if is_increasing {
            increasing += 1;
        } else {
            not_comparable += 1;
        }
        let derivative = match &phi {
            Some(f) if is_increasing => secant_add_derivative(f, *from, *to)
                .ok()
                .map(|d| derivative_value(&d))
                .unwrap_or(Value::Null),
            _ => Value::Null,
        };
        steps.push(obj(vec![
            ("from_t", Value::String(from_t.clone())),
            ("to_t", Value::String(to_t.clone())),
            ("difference", ifn_value(difference.value)),
            ("fallback_used", Value::Bool(difference.fallback_used)),
            (
                "classification",
                Value::String(
                    if is_increasing { "increasing" } else { "not-comparable" }.to_string(),
                ),
            ),
            ("derivative", derivative),
        ]));
    }
    let result = CommandResult {
        command: "trend",
        inputs: obj(vec![
            ("path", echo(path)),
            ("phi", phi_text.map_or(Value::Null, echo)),
        ]),
        output: obj(vec![
            ("steps", Value::Array(steps)),
            (
                "summary",
                obj(vec![
                    ("steps", Value::from(series.len().saturating_sub(1) as u64)),
                    ("increasing", Value::from(increasing)),
                    ("not_comparable", Value::from(not_comparable)),
                ]),
            ),
        ]),
        diagnostics: obj(vec![]),
    };
    Ok(Execution { stdout: vec![emit(&result)], exit_code: 0 })
}

fn run_derive(phi_text: &str, x_text: &str, form: Form) -> Result<Execution, CliError> {
    let phi = parse_iff_arg("phi", phi_text)?;
    let x = parse_ifn_arg("x", x_text)?;
    let d = match form {
        Form::Add => add_derivative(&phi, x),
        Form::Mul => mul_derivative(&phi, x),
    }
    .map_err(precondition)?;
    if !d.value.u.is_finite() || !d.value.v.is_finite() {
        return Err(CliError::Precondition(format!(
            "derivative is unbounded at {x}"
        )));
    }
    let result = CommandResult {
        command: "derive",
        inputs: obj(vec![
            ("phi", echo(phi_text)),
            ("x", echo(x_text)),
            ("form", Value::String(match form {
                Form::Add => "add".to_string(),
                Form::Mul => "mul".to_string(),
            })),
        ]),
        output: derivative_value(&d),
        diagnostics: obj(vec![]),
    };
    Ok(Execution { stdout: vec![emit(&result)], exit_code: 0 })
}

/// Runs a parsed command to its printable result.
pub fn run(command: &Command) -> Result<Execution, CliError> {
    match command {
        Command::Eval { expr } => run_eval(expr),
        Command::Mvt { phi, x, y, tolerance } => run_mvt(phi, x, y, *tolerance),
        Command::Cmvt { phi, gamma, x, y, form, tolerance } => {
            run_cmvt(phi, gamma, x, y, *form, *tolerance)
        }
        Command::Rolle { phi, x, y } => run_rolle(phi, x, y),
        Command::Region { kind, alpha, resolution, json, csv } => {
            run_region(*kind, alpha, *resolution, *json, *csv)
        }
        Command::Curve { alpha, samples, json, csv } => run_curve(alpha, *samples, *json, *csv),
        Command::Trend { path, phi } => run_trend(path, phi.as_deref()),
        Command::Derive { phi, x, form } => run_derive(phi, x, *form),
    }
}

/// Full program behavior: parse argv, run, print, map failures onto the
/// exit code contract. Returns the process exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version arrive here as non-error displays.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli.command) {
        Ok(execution) => {
            for line in &execution.stdout {
                println!("{line}");
            }
            execution.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
