//! Random generation of group elements and vectors.
//!
//! Elements are drawn by sampling all components from a complex normal
//! distribution and projecting onto the constraint surface: divide (a0, a)
//! by the principal square root of a0² + a·a, rejecting draws where that
//! scalar is numerically tiny. This covers the full group up to a measure
//! zero set.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::calg::CVec3;
use crate::group::GroupElement;

fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(normal(rng), normal(rng))
}

/// Standard complex-normal 3-vector.
pub fn complex_vector<R: Rng + ?Sized>(rng: &mut R) -> CVec3 {
    CVec3::new(
        complex_normal(rng),
        complex_normal(rng),
        complex_normal(rng),
    )
}

/// Uniform direction on the real unit sphere.
pub fn real_unit_vector<R: Rng + ?Sized>(rng: &mut R) -> CVec3 {
    loop {
        let v = [normal(rng), normal(rng), normal(rng)];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 1e-3 {
            return CVec3::from_real([v[0] / n, v[1] / n, v[2] / n]);
        }
    }
}

/// Constraint-projected complex-normal SL(2,C) element.
pub fn element<R: Rng + ?Sized>(rng: &mut R) -> GroupElement {
    loop {
        let a0 = complex_normal(rng);
        let a = complex_vector(rng);
        let s = (a0 * a0 + a.dot(&a)).sqrt();
        if s.norm() < 1e-6 {
            continue;
        }
        let inv = s.inv();
        return GroupElement::new_unchecked(a0 * inv, a * inv);
    }
}

/// Haar-distributed SU(2) element (real a0, real a).
pub fn rotation_element<R: Rng + ?Sized>(rng: &mut R) -> GroupElement {
    loop {
        let q = [normal(rng), normal(rng), normal(rng), normal(rng)];
        let n = (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]).sqrt();
        if n > 1e-3 {
            return GroupElement::new_unchecked(
                Complex64::new(q[0] / n, 0.0),
                CVec3::from_real([q[1] / n, q[2] / n, q[3] / n]),
            );
        }
    }
}

/// Pure boost with rapidity uniform in (0, max_rapidity] along a uniform
/// random direction.
pub fn boost_element<R: Rng + ?Sized>(rng: &mut R, max_rapidity: f64) -> GroupElement {
    let beta = rng.gen_range(1e-3..=max_rapidity);
    let axis = real_unit_vector(rng);
    GroupElement::boost(beta, &axis).expect("axis is real unit by construction")
}
