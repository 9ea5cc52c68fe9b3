//! Command-line front end: composition, polar decomposition, Wigner
//! rotation, orbit classification, and matrix export over JSON.
//!
//! Subcommands: `compose`, `polar`, `wigner`, `classify`, `matrices`.
//! JSON-input commands read from `--input <path>` (`-` for stdin); `wigner`
//! takes its parameters as flags. `--pretty` indents the envelope. Exit
//! codes: 0 success, 2 input error, 3 internal numerical failure. Errors are
//! reported as a JSON object on stdout so scripts consume one stream.

use std::io::Read;

use clap::{Args, Parser, Subcommand};

use lorentz_turns::{
    boost_deflection, classify_orbit, compose, matrix_polar_oracle, polar_factors,
    resultant_rapidity, tol, wigner_angle, BoostSpec, CVec3, CompositionPath, OrbitClass,
    PolarFactors, Turn,
};

mod jsonfmt;
pub mod schema;

pub use jsonfmt::to_string as to_json_string;

use schema::{
    ClassifyInput, ClassifyOutput, ComposeInput, ComposeOutput, ElementJson, Envelope, ErrorBody,
    ErrorEnvelope, MatricesOutput, PolarOutput, Tolerances, WignerConstructed, WignerInput,
    WignerOutput, WignerScalars,
};

#[derive(Debug, Parser)]
#[command(
    name = "lorentz-turns",
    about = "SL(2,C) turns: parallelogram composition, polar decomposition, Wigner rotation",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compose two elements by the parallelogram law of turns, with the
    /// 2x2 matrix product as cross-check. Input: {"left": E, "right": E}
    /// where "right" acts first and E = `{"a0": [re,im], "a": [[re,im] x3]}`.
    Compose(InputArgs),
    /// Decompose an element into boost x rotation. Input: an element E.
    Polar(InputArgs),
    /// Compose two pure boosts and report the Wigner rotation, resultant
    /// rapidity, and deflection, closed-form and constructed.
    Wigner(WignerArgs),
    /// Classify a complex 3-vector by its adjoint orbit and reduce it to
    /// canonical form. Input: `{"z": [[re,im] x3]}`.
    Classify(InputArgs),
    /// Export the 2x2 complex, 3x3 complex-orthogonal, and 4x4 Lorentz
    /// matrices of an element. Input: an element E.
    Matrices(InputArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Path to the JSON input, or '-' to read stdin.
    #[arg(long)]
    pub input: String,
    /// Indent the output envelope.
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Args)]
pub struct WignerArgs {
    /// Rapidity of the first boost (> 0).
    #[arg(long)]
    pub beta_m: f64,
    /// Rapidity of the second boost (> 0).
    #[arg(long)]
    pub beta_n: f64,
    /// Angle between the boost directions, in [0, pi].
    #[arg(long)]
    pub theta: f64,
    /// Explicit first-boost direction "x,y,z" (default: in the xy-plane at
    /// angle theta from the x-axis). Requires --axis-n.
    #[arg(long, value_parser = parse_axis)]
    pub axis_m: Option<[f64; 3]>,
    /// Explicit second-boost direction "x,y,z" (default: the x-axis).
    #[arg(long, value_parser = parse_axis)]
    pub axis_n: Option<[f64; 3]>,
    /// Indent the output envelope.
    #[arg(long)]
    pub pretty: bool,
}

fn parse_axis(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated numbers, got {s:?}"));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("bad component {part:?}: {e}"))?;
    }
    Ok(out)
}

/// A failed run: the error envelope to print and the process exit code.
#[derive(Debug)]
pub struct CliFailure {
    pub exit_code: i32,
    pub body: String,
}

impl CliFailure {
    fn envelope(exit_code: i32, message: &str) -> Self {
        let body = jsonfmt::to_string(
            &ErrorEnvelope {
                error: ErrorBody {
                    exit_code,
                    message: message.to_string(),
                },
            },
            false,
        )
        .expect("error envelope serializes");
        CliFailure { exit_code, body }
    }

    pub fn input(message: &str) -> Self {
        CliFailure::envelope(2, message)
    }

    pub fn numeric(message: &str) -> Self {
        CliFailure::envelope(3, message)
    }
}

/// Parses argv and runs the command, returning the envelope to print.
pub fn run_from_args<I, T>(args: I) -> Result<String, CliFailure>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            CliFailure {
                exit_code: 0,
                body: e.to_string(),
            }
        }
        _ => CliFailure::input(&e.to_string()),
    })?;
    run(&cli)
}

pub fn run(cli: &Cli) -> Result<String, CliFailure> {
    let body = match &cli.command {
        Command::Compose(args) => cmd_compose(args)?,
        Command::Polar(args) => cmd_polar(args)?,
        Command::Wigner(args) => cmd_wigner(args)?,
        Command::Classify(args) => cmd_classify(args)?,
        Command::Matrices(args) => cmd_matrices(args)?,
    };
    if body.contains("NaN") || body.contains("inf") {
        return Err(CliFailure::numeric("non-finite value in result"));
    }
    Ok(body)
}

fn read_input(path: &str) -> Result<String, CliFailure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliFailure::input(&format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliFailure::input(&format!("cannot read {path}: {e}")))
    }
}

fn parse_json<'a, T: serde::Deserialize<'a>>(text: &'a str) -> Result<T, CliFailure> {
    serde_json::from_str(text).map_err(|e| CliFailure::input(&format!("invalid input JSON: {e}")))
}

fn path_name(path: CompositionPath) -> &'static str {
    match path {
        CompositionPath::Geometric => "geometric",
        CompositionPath::DegenerateFactorized => "degenerate-factorized",
        CompositionPath::Algebraic => "algebraic",
    }
}

fn numeric_failure(e: lorentz_turns::Error) -> CliFailure {
    CliFailure::numeric(&e.to_string())
}

fn emit<I: serde::Serialize, O: serde::Serialize>(
    envelope: &Envelope<I, O>,
    pretty: bool,
) -> Result<String, CliFailure> {
    jsonfmt::to_string(envelope, pretty)
        .map_err(|e| CliFailure::numeric(&format!("serialization failed: {e}")))
}

/// Deviation between two factorizations: rapidity gap, circular angle gap,
/// sign gap, and axis gaps wherever the factor is large enough for its axis
/// to be meaningful.
pub fn factor_deviation(a: &PolarFactors, b: &PolarFactors) -> f64 {
    let mut d = (a.beta - b.beta).abs();
    let de = (a.epsilon - b.epsilon).abs();
    d = d.max(de.min(std::f64::consts::TAU - de));
    d = d.max((a.sign - b.sign).abs());
    if a.beta.min(b.beta) > 1e-9 {
        d = d.max(a.boost_axis.max_diff(&b.boost_axis));
    }
    if a.epsilon.min(b.epsilon) > 1e-9 {
        d = d.max(a.rotation_axis.max_diff(&b.rotation_axis));
    }
    d
}

fn cmd_compose(args: &InputArgs) -> Result<String, CliFailure> {
    let text = read_input(&args.input)?;
    let input: ComposeInput = parse_json(&text)?;
    let left = input.left.to_element()?;
    let right = input.right.to_element()?;

    let comp = compose(&Turn::from_element(&left), &Turn::from_element(&right))
        .map_err(numeric_failure)?;
    let product = comp.turn.element();
    let oracle = left.multiply(&right);
    let max_deviation = product.max_component_diff(&oracle);

    emit(
        &Envelope {
            command: "compose",
            input,
            output: ComposeOutput {
                product: ElementJson::from_element(&product),
                oracle: ElementJson::from_element(&oracle),
                max_deviation,
            },
            path: path_name(comp.path),
            tolerances: Tolerances::current(),
        },
        args.pretty,
    )
}

fn cmd_polar(args: &InputArgs) -> Result<String, CliFailure> {
    let text = read_input(&args.input)?;
    let input: ElementJson = parse_json(&text)?;
    let s = input.to_element()?;

    let factors = polar_factors(&s);
    let oracle = matrix_polar_oracle(&s);
    let deviation = factor_deviation(&factors, &oracle);

    // Generic turn construction vs the closed-form commuting fallback.
    let ar = s.a().re();
    let ai = s.a().im();
    let cross = [
        ar[1] * ai[2] - ar[2] * ai[1],
        ar[2] * ai[0] - ar[0] * ai[2],
        ar[0] * ai[1] - ar[1] * ai[0],
    ];
    let nr = (ar[0] * ar[0] + ar[1] * ar[1] + ar[2] * ar[2]).sqrt();
    let ni = (ai[0] * ai[0] + ai[1] * ai[1] + ai[2] * ai[2]).sqrt();
    let nc = (cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]).sqrt();
    let path = if nc >= tol::PARALLEL_TOL * (nr * ni + 1e-300) {
        "geometric"
    } else {
        "algebraic"
    };

    emit(
        &Envelope {
            command: "polar",
            input,
            output: PolarOutput::from_factors(&factors, deviation),
            path,
            tolerances: Tolerances::current(),
        },
        args.pretty,
    )
}

fn cmd_wigner(args: &WignerArgs) -> Result<String, CliFailure> {
    for (name, value) in [("--beta-m", args.beta_m), ("--beta-n", args.beta_n)] {
        if !value.is_finite() || value <= 0.0 {
            return Err(CliFailure::input(&format!(
                "{name} must be finite and positive, got {value}"
            )));
        }
    }
    if !args.theta.is_finite() || !(0.0..=std::f64::consts::PI).contains(&args.theta) {
        return Err(CliFailure::input(&format!(
            "--theta must lie in [0, pi], got {}",
            args.theta
        )));
    }

    let (m, n) = match (&args.axis_m, &args.axis_n) {
        (None, None) => ([args.theta.cos(), args.theta.sin(), 0.0], [1.0, 0.0, 0.0]),
        (Some(m), Some(n)) => {
            for axis in [m, n] {
                let norm = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
                if (norm - 1.0).abs() > tol::UNIT_TOL {
                    return Err(CliFailure::input(&format!(
                        "axis {axis:?} is not unit length (norm {norm})"
                    )));
                }
            }
            let dot = m[0] * n[0] + m[1] * n[1] + m[2] * n[2];
            let cross = [
                m[1] * n[2] - m[2] * n[1],
                m[2] * n[0] - m[0] * n[2],
                m[0] * n[1] - m[1] * n[0],
            ];
            let cn = (cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]).sqrt();
            let angle = cn.atan2(dot);
            if (angle - args.theta).abs() > 1e-9 {
                return Err(CliFailure::input(&format!(
                    "--theta ({}) disagrees with the angle between the axes ({angle})",
                    args.theta
                )));
            }
            (*m, *n)
        }
        _ => {
            return Err(CliFailure::input(
                "--axis-m and --axis-n must be given together",
            ))
        }
    };

    let input = WignerInput {
        beta_m: args.beta_m,
        beta_n: args.beta_n,
        theta: args.theta,
        axis_m: args.axis_m,
        axis_n: args.axis_n,
    };

    let first = BoostSpec::new(args.beta_m, CVec3::from_real(m))
        .map_err(|e| CliFailure::input(&e.to_string()))?;
    let second = BoostSpec::new(args.beta_n, CVec3::from_real(n))
        .map_err(|e| CliFailure::input(&e.to_string()))?;
    let result = lorentz_turns::compose_boosts(&first, &second).map_err(numeric_failure)?;

    let closed = WignerScalars {
        epsilon: wigner_angle(args.beta_m, args.beta_n, args.theta),
        beta_res: resultant_rapidity(args.beta_m, args.beta_n, args.theta),
        phi: boost_deflection(args.beta_m, args.beta_n, args.theta),
    };
    let max_deviation = (closed.epsilon - result.epsilon)
        .abs()
        .max((closed.beta_res - result.beta_res).abs())
        .max((closed.phi - result.phi).abs());

    // The collinear branch is algebraic; otherwise report the path the turn
    // composition of the two boost turns takes.
    let cross = [
        m[1] * n[2] - m[2] * n[1],
        m[2] * n[0] - m[0] * n[2],
        m[0] * n[1] - m[1] * n[0],
    ];
    let cn = (cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]).sqrt();
    let path = if cn < tol::MEET_TOL {
        "algebraic"
    } else {
        let t_first = Turn::from_element(&first.element());
        let t_second = Turn::from_element(&second.element());
        path_name(compose(&t_second, &t_first).map_err(numeric_failure)?.path)
    };

    emit(
        &Envelope {
            command: "wigner",
            input,
            output: WignerOutput {
                closed_form: closed,
                constructed: WignerConstructed {
                    epsilon: result.epsilon,
                    beta_res: result.beta_res,
                    phi: result.phi,
                    rotation_axis: result.rotation_axis.re(),
                    boost_axis: result.boost_axis.re(),
                    product: ElementJson::from_element(&result.product),
                },
                max_deviation,
            },
            path,
            tolerances: Tolerances::current(),
        },
        args.pretty,
    )
}

fn cmd_classify(args: &InputArgs) -> Result<String, CliFailure> {
    let text = read_input(&args.input)?;
    let input: ClassifyInput = parse_json(&text)?;
    let z = schema::cvec_from_json(&input.z)?;

    let output = match classify_orbit(&z) {
        OrbitClass::Zero => ClassifyOutput {
            class: "zero",
            r: None,
            phi: None,
            canonical: None,
            reducing_element: None,
        },
        OrbitClass::TypeI { r, phi } => {
            let (s, z0) = lorentz_turns::reduce_to_canonical(&z).map_err(numeric_failure)?;
            ClassifyOutput {
                class: "type-i",
                r: Some(r),
                phi: Some(phi),
                canonical: Some(schema::cvec_json(&z0)),
                reducing_element: Some(ElementJson::from_element(&s)),
            }
        }
        OrbitClass::TypeII => {
            let (s, z0) = lorentz_turns::reduce_to_canonical(&z).map_err(numeric_failure)?;
            ClassifyOutput {
                class: "type-ii",
                r: None,
                phi: None,
                canonical: Some(schema::cvec_json(&z0)),
                reducing_element: Some(ElementJson::from_element(&s)),
            }
        }
    };

    emit(
        &Envelope {
            command: "classify",
            input,
            output,
            path: "algebraic",
            tolerances: Tolerances::current(),
        },
        args.pretty,
    )
}

fn cmd_matrices(args: &InputArgs) -> Result<String, CliFailure> {
    let text = read_input(&args.input)?;
    let input: ElementJson = parse_json(&text)?;
    let s = input.to_element()?;

    emit(
        &Envelope {
            command: "matrices",
            input,
            output: MatricesOutput {
                sl2c: schema::mat2_json(&s.to_matrix()),
                so3c: schema::mat3_json(&s.adjoint_rotation()),
                lorentz: schema::lorentz_json(&s.lorentz_matrix()),
            },
            path: "algebraic",
            tolerances: Tolerances::current(),
        },
        args.pretty,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_parser() {
        assert_eq!(parse_axis("1,0,0").unwrap(), [1.0, 0.0, 0.0]);
        assert_eq!(parse_axis("0.5, -0.5, 0.1").unwrap(), [0.5, -0.5, 0.1]);
        assert!(parse_axis("1,2").is_err());
        assert!(parse_axis("a,b,c").is_err());
    }

    #[test]
    fn wigner_rejects_bad_ranges() {
        for argv in [
            vec![
                "lorentz-turns",
                "wigner",
                "--beta-m",
                "0",
                "--beta-n",
                "1",
                "--theta",
                "1",
            ],
            vec![
                "lorentz-turns",
                "wigner",
                "--beta-m",
                "1",
                "--beta-n",
                "1",
                "--theta",
                "4",
            ],
            vec![
                "lorentz-turns",
                "wigner",
                "--beta-m",
                "1",
                "--beta-n",
                "1",
                "--theta",
                "1",
                "--axis-m",
                "1,0,0",
            ],
        ] {
            let err = run_from_args(argv).unwrap_err();
            assert_eq!(err.exit_code, 2, "{}", err.body);
            assert!(err.body.starts_with("{\"error\":"));
        }
    }

    #[test]
    fn compose_identity_runs_end_to_end() {
        let dir = std::env::temp_dir().join("lorentz_turns_cli_unit");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("identity_pair.json");
        std::fs::write(
            &path,
            r#"{"left":{"a0":[1,0],"a":[[0,0],[0,0],[0,0]]},
                "right":{"a0":[1,0],"a":[[0,0],[0,0],[0,0]]}}"#,
        )
        .unwrap();
        let out = run_from_args([
            "lorentz-turns".to_string(),
            "compose".to_string(),
            "--input".to_string(),
            path.display().to_string(),
        ])
        .unwrap();
        assert!(out.contains("\"command\":\"compose\""));
        assert!(out.contains("\"path\":\"algebraic\""));
        assert!(out.contains("\"max_deviation\":0.0000000000000000e0"));
    }

    #[test]
    fn constraint_violation_is_input_error() {
        let dir = std::env::temp_dir().join("lorentz_turns_cli_unit");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad_element.json");
        std::fs::write(&path, r#"{"a0":[1,0],"a":[[1,0],[0,0],[0,0]]}"#).unwrap();
        let err = run_from_args([
            "lorentz-turns".to_string(),
            "polar".to_string(),
            "--input".to_string(),
            path.display().to_string(),
        ])
        .unwrap_err();
        assert_eq!(err.exit_code, 2);
        assert!(err.body.contains("constraint violation"));
    }
}
