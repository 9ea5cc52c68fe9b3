//! Polar decomposition S = H·U into boost x rotation, in turn language.
//!
//! Writing a = a_R + i a_I and a0 = a0R + i a0I, the rotation factor is
//! fixed by (a0R, a_R) and the boost factor by
//!
//!   cosh(β/2) = sqrt(a0R² + a_R·a_R),
//!   sinh(β/2) k_b ∝ a0R a_I - a0I a_R + a_R∧a_I,
//!
//! which drop out of choosing a real tail x̂ ∝ a_R∧a_I for the turn of S
//! and splitting it at the intermediate point ẑ ∝ a0R x̂ + a_R∧x̂. An
//! independent oracle computes the same factors through the principal square
//! root of M M† in the 2x2 representation.
//!
//! The decomposition itself has no sign freedom, but the factors stored as
//! (angle, axis) pairs cannot express U = -1; a separate sign flag keeps the
//! reconstruction exact in that central case.

use num_complex::Complex64;

use crate::calg::{rcross, rdot, rnorm, rscale, CVec3, UnitCVec3};
use crate::group::{GroupElement, Mat2C, PAULI};
use crate::tol;
use crate::turns::Turn;

const C_I: Complex64 = Complex64::new(0.0, 1.0);

/// Boost rapidity/axis and rotation angle/axis of the polar decomposition,
/// with sign = ±1 such that S = sign · boost(β, k_b) · rotation(ε, k_r).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarFactors {
    /// Rapidity β ≥ 0.
    pub beta: f64,
    /// Real unit boost axis k_b (e1 when β = 0).
    pub boost_axis: CVec3,
    /// Rotation angle ε in [0, 2π).
    pub epsilon: f64,
    /// Real unit rotation axis k_r (e1 when ε = 0).
    pub rotation_axis: CVec3,
    /// +1 or -1; -1 only when the unitary factor is the central element -1.
    pub sign: f64,
}

impl PolarFactors {
    /// sign · boost(β, k_b) · rotation(ε, k_r).
    pub fn reconstruct(&self) -> GroupElement {
        let h = GroupElement::boost(self.beta, &self.boost_axis)
            .expect("boost axis is real unit by construction");
        let u = GroupElement::rotation(self.epsilon, &self.rotation_axis)
            .expect("rotation axis is real unit by construction");
        let p = h.multiply(&u);
        if self.sign < 0.0 {
            p.negated()
        } else {
            p
        }
    }
}

/// Angle/axis/sign of a rotation given its real components (u0, u), folding
/// the central element -1 into the sign flag so the angle stays in [0, 2π).
fn rotation_angle_axis_sign(u0: f64, u: [f64; 3]) -> (f64, CVec3, f64) {
    let nu = rnorm(u);
    let scale = (u0 * u0 + nu * nu).sqrt();
    if u0 < 0.0 && nu <= 1e-12 * scale {
        return (0.0, CVec3::E1, -1.0);
    }
    let epsilon = 2.0 * nu.atan2(u0);
    let axis = if nu > 1e-300 {
        CVec3::from_real(rscale(u, 1.0 / nu))
    } else {
        CVec3::E1
    };
    (epsilon, axis, 1.0)
}

/// Polar factors in closed form from the (a0, a) components.
pub fn polar_factors(s: &GroupElement) -> PolarFactors {
    let a0 = s.a0();
    let a = s.a();
    let ar = a.re();
    let ai = a.im();

    let (epsilon, rotation_axis, sign) = rotation_angle_axis_sign(a0.re, ar);

    // Boost part; invariant under S -> -S, so no sign correction is needed.
    let n = (a0.re * a0.re + rdot(ar, ar)).sqrt();
    let mut w = rcross(ar, ai);
    for k in 0..3 {
        w[k] += a0.re * ai[k] - a0.im * ar[k];
    }
    let nw = rnorm(w);
    let beta = 2.0 * (nw / n).asinh();
    let boost_axis = if nw > 1e-300 {
        CVec3::from_real(rscale(w, 1.0 / nw))
    } else {
        CVec3::E1
    };

    PolarFactors {
        beta,
        boost_axis,
        epsilon,
        rotation_axis,
        sign,
    }
}

/// The two turns of the decomposition: S(x̂, ŷ) = S(ẑ, ŷ) S(x̂, ẑ) with
/// x̂, ẑ real (the rotation turn) and Re ŷ a positive multiple of ẑ (the
/// boost turn). The rotation turn's head is the boost turn's tail, so the
/// pair is ready for head-to-tail composition.
pub fn polar_turns(s: &GroupElement) -> (Turn, Turn) {
    let a = s.a();
    let ar = a.re();
    let ai = a.im();
    let cross_norm = rnorm(rcross(ar, ai));

    if cross_norm >= tol::PARALLEL_TOL * (rnorm(ar) * rnorm(ai) + 1e-300) {
        // Generic branch: the canonical tail of the full turn is exactly the
        // real vector x̂ ∝ a_R ∧ a_I required here.
        let t = Turn::from_element(s);
        let xhat = t.tail;
        let n = (s.a0().re * s.a0().re + rdot(ar, ar)).sqrt();
        let mut zr = rscale(xhat.re(), s.a0().re);
        let az = CVec3::from_real(ar).wedge(&xhat);
        for (z, w) in zr.iter_mut().zip(az.0.iter()) {
            *z += w.re;
        }
        let zhat = UnitCVec3::new_unchecked(CVec3::from_real(rscale(zr, 1.0 / n)));
        let rotation_turn = Turn::new(xhat, zhat);
        let boost_turn = Turn::new(zhat, t.head);
        (rotation_turn, boost_turn)
    } else {
        // Commuting branch: a_R ∥ a_I, so boost and rotation share an axis
        // and both carriers coincide. Reconstruct the factors and chain
        // their turns at a common point.
        let f = polar_factors(s);
        let h = GroupElement::boost(f.beta, &f.boost_axis)
            .expect("boost axis is real unit by construction");
        let u = GroupElement::rotation(f.epsilon, &f.rotation_axis)
            .expect("rotation axis is real unit by construction");
        let su = if f.sign < 0.0 { u.negated() } else { u };

        if su.a().norm_h() < 1e-14 {
            // Unitary factor is ±1: park its null turn at the boost tail.
            let boost_turn = Turn::from_element(&h);
            let z = boost_turn.tail;
            let rotation_turn = Turn::new(UnitCVec3::new_unchecked(z.vec() * f.sign), z);
            (rotation_turn, boost_turn)
        } else {
            let rotation_turn = Turn::from_element(&su);
            let z = rotation_turn.head;
            // z lies in the common carrier, orthogonal to the boost axis.
            let head = z.vec() * h.a0() + h.a().wedge(&z);
            let boost_turn = Turn::new(z, UnitCVec3::new_unchecked(head));
            (rotation_turn, boost_turn)
        }
    }
}

/// Independent matrix oracle for the polar factors.
///
/// Forms P = M M†, takes its principal positive square root in closed form
/// (for det P = 1: sqrt(P) = (P + 1)/sqrt(tr P + 2)), and extracts the
/// factors from H and U = H⁻¹ M.
pub fn matrix_polar_oracle(s: &GroupElement) -> PolarFactors {
    let m = s.to_matrix();
    let p = m.mul(&m.dagger());
    // Scrub the anti-Hermitian rounding residue.
    let p = p.add(&p.dagger()).scale(Complex64::new(0.5, 0.0));

    let denom = (p.trace().re + 2.0).sqrt();
    let h = p
        .add(&Mat2C::identity())
        .scale(Complex64::new(1.0 / denom, 0.0));
    // det H = 1, so the adjugate inverts it.
    let u = h.unimodular_inverse().mul(&m);

    let hv = [
        0.5 * PAULI[0].mul(&h).trace().re,
        0.5 * PAULI[1].mul(&h).trace().re,
        0.5 * PAULI[2].mul(&h).trace().re,
    ];
    let nh = rnorm(hv);
    let beta = 2.0 * nh.asinh();
    let boost_axis = if nh > 1e-300 {
        CVec3::from_real(rscale(hv, 1.0 / nh))
    } else {
        CVec3::E1
    };

    let u0 = 0.5 * u.trace().re;
    let uv = [
        (C_I * 0.5 * PAULI[0].mul(&u).trace()).re,
        (C_I * 0.5 * PAULI[1].mul(&u).trace()).re,
        (C_I * 0.5 * PAULI[2].mul(&u).trace()).re,
    ];
    let (epsilon, rotation_axis, sign) = rotation_angle_axis_sign(u0, uv);

    PolarFactors {
        beta,
        boost_axis,
        epsilon,
        rotation_axis,
        sign,
    }
}
