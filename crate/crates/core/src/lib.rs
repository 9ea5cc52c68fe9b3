//! Turns for the Lorentz group.
//!
//! An element of SL(2,C) written as `S(a0, a) = a0 - i a·σ` (with
//! `a0² + a·a = 1` under the bilinear, non-conjugating dot product) is
//! represented geometrically by an equivalence class of ordered pairs of
//! complex unit vectors `(tail, head)` with `a0 = tail·head` and
//! `a = tail∧head`. Group multiplication then takes the form of the
//! head-to-tail parallelogram law, generalizing Hamilton's great-circle-arc
//! picture for SU(2) to the double cover of SO(3,1).
//!
//! Modules:
//! - [`calg`]: complex 3-vector algebra over the symmetric bilinear form.
//! - [`group`]: SL(2,C) elements, 2x2 matrix oracle, maps to SO(3,C) and
//!   SO(3,1), adjoint-orbit classification.
//! - [`turns`]: the turn construction, sliding, meets, and parallelogram
//!   composition with degenerate-case remedies.
//! - [`polar`]: boost x rotation polar decomposition in turn language plus an
//!   independent matrix-based oracle.
//! - [`wigner`]: two-boost composition and the closed-form Wigner (Thomas)
//!   rotation, resultant rapidity, and deflection angle.
//! - [`sample`]: random element generation for tests and fixtures.

pub mod calg;
mod error;
pub mod group;
pub mod polar;
pub mod sample;
pub mod tol;
pub mod turns;
pub mod wigner;

pub use calg::{CScalar, CVec3, UnitCVec3};
pub use error::{Error, Result};
pub use group::{
    classify_orbit, reduce_to_canonical, ComplexRotation3, GroupElement, LorentzMat4, Mat2C,
    OrbitClass,
};
pub use polar::{matrix_polar_oracle, polar_factors, polar_turns, PolarFactors};
pub use turns::{compose, meet, Composition, CompositionPath, Turn};
pub use wigner::{
    boost_deflection, compose_boosts, resultant_rapidity, wigner_angle, BoostSpec, WignerResult,
};
