//! `fracrot` command-line tool.

// `!(x <= bound)` is used on purpose so that NaN fails the check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod output;

use std::f64::consts::FRAC_PI_2;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fracrot::fracpow::{convergence_study_with, real_power_detailed};
use fracrot::rotation::frac_power_closed;
use fracrot::verify::{verify, Suite};
use fracrot::{
    generator, interpolate, log_rotation, mat_exp, quarter_turn, rodrigues, rotate_vector, rotation_of, semigroup,
    Error, QuadratureConfig, QuadratureMethod, UnitAxis, Vec3,
};

use output::{Envelope, ErrorBody, Field, Ordered, Payload, Table, MATRIX_HEADER};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ENGINE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "fracrot", version, about = "Rotations as fractional powers of the quarter-turn matrix")]
struct Cli {
    /// Output format. Tables default to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    output: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Closed-form formulas.
    Closed,
    /// Balakrishnan integral by quadrature.
    #[value(alias = "fracpow")]
    Quadrature,
    /// Matrix exponential of the scaled generator.
    ExpGenerator,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Quadrature => "quadrature",
            Method::ExpGenerator => "exp-generator",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Rule {
    DoubleExponential,
    GaussLegendreSplit,
}

impl From<Rule> for QuadratureMethod {
    fn from(r: Rule) -> Self {
        match r {
            Rule::DoubleExponential => QuadratureMethod::DoubleExponential,
            Rule::GaussLegendreSplit => QuadratureMethod::GaussLegendreSplit,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rotation matrix for an axis and angle.
    Matrix {
        #[command(flatten)]
        axis: AxisArg,
        #[command(flatten)]
        angle: AngleArg,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
        #[command(flatten)]
        quad: QuadArgs,
    },
    /// Real power of the quarter-turn matrix.
    Power {
        #[command(flatten)]
        axis: AxisArg,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
        #[command(flatten)]
        quad: QuadArgs,
    },
    /// Rotate a vector.
    Rotate {
        #[command(flatten)]
        axis: AxisArg,
        #[command(flatten)]
        angle: AngleArg,
        /// Vector as x,y,z.
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        vector: [f64; 3],
    },
    /// Rotations sampled evenly between two angles (table).
    Interp {
        #[command(flatten)]
        axis: AxisArg,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        /// Angles are in degrees.
        #[arg(long)]
        degrees: bool,
        #[arg(long)]
        steps: usize,
    },
    /// Quadrature error against the eigendecomposition oracle per level (table).
    Convergence {
        #[command(flatten)]
        axis: AxisArg,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, value_delimiter = ',', required = true)]
        levels: Vec<u32>,
        #[arg(long, value_enum, default_value = "double-exponential")]
        rule: Rule,
    },
    /// Run the verification suites (table).
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Principal logarithm of a rotation.
    Log {
        #[command(flatten)]
        axis: AxisArg,
        #[command(flatten)]
        angle: AngleArg,
    },
    /// Skew generator of an axis.
    Generator {
        #[command(flatten)]
        axis: AxisArg,
    },
    /// exp(t A) for the quarter-turn matrix A.
    Semigroup {
        #[command(flatten)]
        axis: AxisArg,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
    },
}

#[derive(Debug, Args)]
struct AxisArg {
    /// Axis as x,y,z; normalized before use.
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    axis: [f64; 3],
}

#[derive(Debug, Args)]
struct AngleArg {
    /// Angle in radians.
    #[arg(long, allow_hyphen_values = true)]
    angle: f64,
    /// Read the angle in degrees.
    #[arg(long)]
    degrees: bool,
}

impl AngleArg {
    fn radians(&self) -> f64 {
        to_radians(self.angle, self.degrees)
    }
}

#[derive(Debug, Args)]
struct QuadArgs {
    /// Quadrature level (double-exponential) or node count (gauss-legendre-split).
    #[arg(long)]
    level: Option<u32>,
    #[arg(long, value_enum, default_value = "double-exponential")]
    rule: Rule,
    /// Absolute tolerance on the quadrature error estimate.
    #[arg(long)]
    tol: Option<f64>,
}

impl QuadArgs {
    fn config(&self) -> Result<QuadratureConfig, Error> {
        let level = self.level.unwrap_or(match self.rule {
            Rule::DoubleExponential => QuadratureConfig::DEFAULT_LEVEL,
            // algebraic convergence when 1/α is not an integer; 256 clears 1e-10
            Rule::GaussLegendreSplit => 256,
        });
        QuadratureConfig::new(self.rule.into(), level, self.tol.unwrap_or(QuadratureConfig::DEFAULT_TOLERANCE))
    }
}

fn parse_triple(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated numbers, got `{s}`"));
    }
    let mut out = [0.0; 3];
    for (slot, p) in out.iter_mut().zip(&parts) {
        let v: f64 = p.parse().map_err(|_| format!("`{p}` is not a number"))?;
        if !v.is_finite() {
            return Err(format!("`{p}` is not finite"));
        }
        *slot = v;
    }
    Ok(out)
}

fn to_radians(value: f64, degrees: bool) -> f64 {
    if degrees {
        value.to_radians()
    } else {
        value
    }
}

/// What a command produced, before formatting.
struct Outcome {
    payload: Payload,
    method: Option<String>,
    error_estimate: Option<f64>,
    exit: u8,
}

impl Outcome {
    fn plain(payload: Payload) -> Self {
        Self { payload, method: None, error_estimate: None, exit: 0 }
    }

    fn with_method(payload: Payload, method: Method) -> Self {
        Self { payload, method: Some(method.name().into()), error_estimate: None, exit: 0 }
    }
}

struct Invocation {
    name: &'static str,
    inputs: Ordered,
}

fn axis_of(arg: &AxisArg, inputs: &mut Ordered) -> Result<UnitAxis, Error> {
    let [x, y, z] = arg.axis;
    let axis = UnitAxis::new(x, y, z)?;
    inputs.0.push(("axis", Field::Nums(axis.components().to_vec())));
    Ok(axis)
}

fn quad_inputs(inputs: &mut Ordered, cfg: &QuadratureConfig) {
    inputs.0.push(("rule", Field::Text(cfg.method().name().into())));
    inputs.0.push(("level", Field::Int(cfg.level().into())));
    inputs.0.push(("abs_tolerance", Field::Num(cfg.abs_tolerance())));
}

fn describe(command: &Command) -> (&'static str, bool) {
    match command {
        Command::Matrix { .. } => ("matrix", false),
        Command::Power { .. } => ("power", false),
        Command::Rotate { .. } => ("rotate", false),
        Command::Interp { .. } => ("interp", true),
        Command::Convergence { .. } => ("convergence", true),
        Command::Verify { .. } => ("verify", true),
        Command::Log { .. } => ("log", false),
        Command::Generator { .. } => ("generator", false),
        Command::Semigroup { .. } => ("semigroup", false),
    }
}

fn run(command: &Command, inv: &mut Invocation) -> Result<Outcome, Error> {
    let inputs = &mut inv.inputs;
    match command {
        Command::Matrix { axis, angle, method, quad } => {
            let axis = axis_of(axis, inputs)?;
            let theta = angle.radians();
            inputs.0.push(("angle", Field::Num(theta)));
            inputs.0.push(("method", Field::Text(method.name().into())));
            match method {
                Method::Closed => {
                    Ok(Outcome::with_method(Payload::Matrix(rodrigues(axis, theta).into_matrix()), *method))
                }
                Method::ExpGenerator => {
                    let m = mat_exp(&generator(axis).scale(theta));
                    Ok(Outcome::with_method(Payload::Matrix(m), *method))
                }
                Method::Quadrature => {
                    let cfg = quad.config()?;
                    quad_inputs(inputs, &cfg);
                    let out = real_power_detailed(quarter_turn(axis).matrix(), theta / FRAC_PI_2, &cfg)?;
                    Ok(Outcome {
                        error_estimate: Some(out.error_estimate),
                        ..Outcome::with_method(Payload::Matrix(out.matrix), *method)
                    })
                }
            }
        }
        Command::Power { axis, alpha, method, quad } => {
            let axis = axis_of(axis, inputs)?;
            inputs.0.push(("alpha", Field::Num(*alpha)));
            inputs.0.push(("method", Field::Text(method.name().into())));
            if !alpha.is_finite() {
                return Err(Error::DomainAlpha(*alpha));
            }
            match method {
                Method::Closed => {
                    let r = if alpha.abs() <= 1.0 {
                        frac_power_closed(axis, *alpha)?
                    } else {
                        rotation_of(axis, alpha * FRAC_PI_2)
                    };
                    Ok(Outcome::with_method(Payload::Matrix(r.into_matrix()), *method))
                }
                Method::ExpGenerator => {
                    let m = mat_exp(&generator(axis).scale(alpha * FRAC_PI_2));
                    Ok(Outcome::with_method(Payload::Matrix(m), *method))
                }
                Method::Quadrature => {
                    let cfg = quad.config()?;
                    quad_inputs(inputs, &cfg);
                    let out = real_power_detailed(quarter_turn(axis).matrix(), *alpha, &cfg)?;
                    Ok(Outcome {
                        error_estimate: Some(out.error_estimate),
                        ..Outcome::with_method(Payload::Matrix(out.matrix), *method)
                    })
                }
            }
        }
        Command::Rotate { axis, angle, vector } => {
            let axis = axis_of(axis, inputs)?;
            let theta = angle.radians();
            let u = Vec3::from_array(*vector);
            inputs.0.push(("angle", Field::Num(theta)));
            inputs.0.push(("vector", Field::Nums(vector.to_vec())));
            Ok(Outcome::plain(Payload::Vector(rotate_vector(axis, theta, u))))
        }
        Command::Interp { axis, from, to, degrees, steps } => {
            let axis = axis_of(axis, inputs)?;
            let (t0, t1) = (to_radians(*from, *degrees), to_radians(*to, *degrees));
            inputs.0.push(("from", Field::Num(t0)));
            inputs.0.push(("to", Field::Num(t1)));
            inputs.0.push(("steps", Field::Int(*steps as i64)));
            let frames = interpolate(axis, t0, t1, *steps)?;
            let delta = (t1 - t0) / *steps as f64;
            let mut header = vec!["index", "theta"];
            header.extend(MATRIX_HEADER);
            let rows = frames
                .iter()
                .enumerate()
                .map(|(k, r)| {
                    let mut row = vec![Field::Int(k as i64), Field::Num(t0 + k as f64 * delta)];
                    row.extend(r.matrix().to_row_major().iter().map(|&x| Field::Num(x)));
                    row
                })
                .collect();
            Ok(Outcome::plain(Payload::Table(Table { header, rows })))
        }
        Command::Convergence { axis, alpha, levels, rule } => {
            let axis = axis_of(axis, inputs)?;
            let method: QuadratureMethod = (*rule).into();
            inputs.0.push(("alpha", Field::Num(*alpha)));
            inputs.0.push(("levels", Field::Ints(levels.iter().map(|&l| l.into()).collect())));
            inputs.0.push(("rule", Field::Text(method.name().into())));
            let report = convergence_study_with(quarter_turn(axis).matrix(), *alpha, levels, method)?;
            let rows = report
                .rows
                .iter()
                .map(|r| vec![Field::Int(r.level.into()), Field::Int(r.nodes as i64), Field::Num(r.error)])
                .collect();
            Ok(Outcome {
                method: Some(method.name().into()),
                ..Outcome::plain(Payload::Table(Table { header: vec!["level", "nodes", "frobenius_error"], rows }))
            })
        }
        Command::Verify { suite, tol } => {
            inputs.0.push(("suite", Field::Text(suite.to_string())));
            inputs.0.push(("tol", Field::Num(*tol)));
            if !(*tol > 0.0) || !tol.is_finite() {
                return Err(Error::InvalidArgument("tol must be a positive finite number".into()));
            }
            let report = verify(*suite, *tol);
            let rows = report
                .results
                .iter()
                .map(|r| {
                    vec![
                        Field::Text(r.suite.to_string()),
                        Field::Text(r.name.into()),
                        Field::Num(r.max_error),
                        Field::Num(r.bound),
                        Field::Text(if r.passed { "pass" } else { "fail" }.into()),
                    ]
                })
                .collect();
            let header = vec!["suite", "property", "max_error", "bound", "status"];
            Ok(Outcome {
                exit: if report.all_passed() { 0 } else { EXIT_VERIFY_FAILED },
                ..Outcome::plain(Payload::Table(Table { header, rows }))
            })
        }
        Command::Log { axis, angle } => {
            let axis = axis_of(axis, inputs)?;
            let theta = angle.radians();
            inputs.0.push(("angle", Field::Num(theta)));
            Ok(Outcome::plain(Payload::Matrix(log_rotation(axis, theta)?)))
        }
        Command::Generator { axis } => {
            let axis = axis_of(axis, inputs)?;
            Ok(Outcome::plain(Payload::Matrix(generator(axis))))
        }
        Command::Semigroup { axis, t } => {
            let axis = axis_of(axis, inputs)?;
            inputs.0.push(("t", Field::Num(*t)));
            Ok(Outcome::plain(Payload::Matrix(semigroup(axis, *t))))
        }
    }
}

/// Bad axes and malformed arguments are usage errors; everything else is an engine error.
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::DegenerateAxis(_) | Error::InvalidArgument(_) => EXIT_USAGE,
        _ => EXIT_ENGINE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };

    let (name, table) = describe(&cli.command);
    let format = cli.output.unwrap_or(if table { Format::Csv } else { Format::Json });
    if format == Format::Csv && !table {
        eprintln!("error: --output csv is only available for interp, convergence and verify");
        return ExitCode::from(EXIT_USAGE);
    }

    let mut inv = Invocation { name, inputs: Ordered::default() };
    let result = run(&cli.command, &mut inv);
    let mut stdout = std::io::stdout().lock();

    match result {
        Ok(outcome) => {
            let text = match format {
                Format::Csv => outcome.payload.to_csv(),
                Format::Json => Envelope {
                    command: inv.name,
                    inputs: inv.inputs,
                    result: Some(outcome.payload),
                    method: outcome.method,
                    error_estimate: outcome.error_estimate.map(Field::Num),
                    error: None,
                }
                .to_json(),
            };
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::from(outcome.exit)
        }
        Err(e) => {
            let code = exit_code_for(&e);
            eprintln!("error: {e}");
            // the error envelope is JSON even for table commands
            let env = Envelope {
                command: inv.name,
                inputs: inv.inputs,
                result: None,
                method: None,
                error_estimate: None,
                error: Some(ErrorBody { kind: e.kind().into(), message: e.to_string() }),
            };
            let _ = stdout.write_all(env.to_json().as_bytes());
            ExitCode::from(code)
        }
    }
}
