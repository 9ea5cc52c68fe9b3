//! JSON schemas for command inputs and result envelopes.
//!
//! Complex numbers are explicit `[re, im]` pairs, never strings, so the
//! format parses identically from any language. Struct field order is the
//! serialization order.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use lorentz_turns::{CVec3, ComplexRotation3, GroupElement, LorentzMat4, Mat2C, PolarFactors};

use crate::CliFailure;

pub type ComplexJson = [f64; 2];
pub type CVecJson = [ComplexJson; 3];

/// A group element as `{"a0": [re, im], "a": [[re, im] x 3]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub a0: ComplexJson,
    pub a: CVecJson,
}

pub fn complex_json(z: Complex64) -> ComplexJson {
    [z.re, z.im]
}

pub fn cvec_json(v: &CVec3) -> CVecJson {
    [
        complex_json(v.0[0]),
        complex_json(v.0[1]),
        complex_json(v.0[2]),
    ]
}

pub fn cvec_from_json(v: &CVecJson) -> Result<CVec3, CliFailure> {
    let vec = CVec3::new(
        Complex64::new(v[0][0], v[0][1]),
        Complex64::new(v[1][0], v[1][1]),
        Complex64::new(v[2][0], v[2][1]),
    );
    if !vec.is_finite() {
        return Err(CliFailure::input("vector components must be finite"));
    }
    Ok(vec)
}

impl ElementJson {
    pub fn from_element(s: &GroupElement) -> Self {
        ElementJson {
            a0: complex_json(s.a0()),
            a: cvec_json(&s.a()),
        }
    }

    /// Parses and checks the unit-determinant constraint.
    pub fn to_element(&self) -> Result<GroupElement, CliFailure> {
        if !self.a0.iter().all(|x| x.is_finite()) {
            return Err(CliFailure::input("a0 components must be finite"));
        }
        let a0 = Complex64::new(self.a0[0], self.a0[1]);
        let a = cvec_from_json(&self.a)?;
        GroupElement::new(a0, a).map_err(|e| CliFailure::input(&e.to_string()))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComposeInput {
    /// Left factor (applied second).
    pub left: ElementJson,
    /// Right factor (applied first).
    pub right: ElementJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyInput {
    pub z: CVecJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct WignerInput {
    pub beta_m: f64,
    pub beta_n: f64,
    pub theta: f64,
    pub axis_m: Option<[f64; 3]>,
    pub axis_n: Option<[f64; 3]>,
}

#[derive(Debug, Serialize)]
pub struct Tolerances {
    pub unit_tol: f64,
    pub iso_tol: f64,
    pub meet_tol: f64,
}

impl Tolerances {
    pub fn current() -> Self {
        Tolerances {
            unit_tol: lorentz_turns::tol::UNIT_TOL,
            iso_tol: lorentz_turns::tol::ISO_TOL,
            meet_tol: lorentz_turns::tol::MEET_TOL,
        }
    }
}

/// The uniform result wrapper: command name, echoed input, payload, the
/// computation path that produced it, and the tolerances in force.
#[derive(Debug, Serialize)]
pub struct Envelope<I: Serialize, O: Serialize> {
    pub command: &'static str,
    pub input: I,
    pub output: O,
    pub path: &'static str,
    pub tolerances: Tolerances,
}

#[derive(Debug, Serialize)]
pub struct ComposeOutput {
    pub product: ElementJson,
    pub oracle: ElementJson,
    pub max_deviation: f64,
}

#[derive(Debug, Serialize)]
pub struct PolarOutput {
    pub beta: f64,
    pub boost_axis: [f64; 3],
    pub epsilon: f64,
    pub rotation_axis: [f64; 3],
    pub sign: i32,
    pub oracle_deviation: f64,
}

impl PolarOutput {
    pub fn from_factors(f: &PolarFactors, oracle_deviation: f64) -> Self {
        PolarOutput {
            beta: f.beta,
            boost_axis: f.boost_axis.re(),
            epsilon: f.epsilon,
            rotation_axis: f.rotation_axis.re(),
            sign: if f.sign < 0.0 { -1 } else { 1 },
            oracle_deviation,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WignerScalars {
    pub epsilon: f64,
    pub beta_res: f64,
    pub phi: f64,
}

#[derive(Debug, Serialize)]
pub struct WignerConstructed {
    pub epsilon: f64,
    pub beta_res: f64,
    pub phi: f64,
    pub rotation_axis: [f64; 3],
    pub boost_axis: [f64; 3],
    pub product: ElementJson,
}

#[derive(Debug, Serialize)]
pub struct WignerOutput {
    pub closed_form: WignerScalars,
    pub constructed: WignerConstructed,
    pub max_deviation: f64,
}

#[derive(Debug, Serialize)]
pub struct ClassifyOutput {
    pub class: &'static str,
    pub r: Option<f64>,
    pub phi: Option<f64>,
    pub canonical: Option<CVecJson>,
    pub reducing_element: Option<ElementJson>,
}

pub type Mat2Json = [[ComplexJson; 2]; 2];
pub type Mat3Json = [[ComplexJson; 3]; 3];

#[derive(Debug, Serialize)]
pub struct MatricesOutput {
    pub sl2c: Mat2Json,
    pub so3c: Mat3Json,
    pub lorentz: [[f64; 4]; 4],
}

pub fn mat2_json(m: &Mat2C) -> Mat2Json {
    m.0.map(|row| row.map(complex_json))
}

pub fn mat3_json(m: &ComplexRotation3) -> Mat3Json {
    m.0.map(|row| row.map(complex_json))
}

pub fn lorentz_json(m: &LorentzMat4) -> [[f64; 4]; 4] {
    m.0
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub exit_code: i32,
    pub message: String,
}

#[derive(Debug, Serialize)]
pub struct ErrorEnvelope {
    pub error: ErrorBody,
}
