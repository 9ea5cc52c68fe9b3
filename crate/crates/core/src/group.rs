//! SL(2,C) elements in Pauli-component form `S(a0, a) = a0 - i a·σ`.
//!
//! The 2x2 matrix representation is the independent multiplication oracle:
//! `multiply` is defined through it. The adjoint action gives the map to
//! SO(3,C); Hermitian congruence `H -> S H S†` gives the two-to-one map to
//! the proper orthochronous Lorentz group SO(3,1), with metric
//! η = diag(+1,-1,-1,-1) and the time index first.

use num_complex::Complex64;

use crate::calg::{rcross, rdot, rnorm, rscale, rsub, CVec3};
use crate::error::{Error, Result};
use crate::tol;

const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
const C_ONE: Complex64 = Complex64::new(1.0, 0.0);
const C_I: Complex64 = Complex64::new(0.0, 1.0);

/// An SL(2,C) element as (a0, a) with a0² + a·a = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    a0: Complex64,
    a: CVec3,
}

impl GroupElement {
    /// Builds (a0, a), checking the unit-determinant constraint. The
    /// constraint is checked, never silently repaired.
    pub fn new(a0: Complex64, a: CVec3) -> Result<Self> {
        let elem = GroupElement { a0, a };
        let defect = elem.constraint_defect();
        if !defect.is_finite() || defect > tol::UNIT_TOL {
            return Err(Error::ConstraintViolation { defect });
        }
        Ok(elem)
    }

    /// Wraps components known to satisfy the constraint by construction.
    pub(crate) fn new_unchecked(a0: Complex64, a: CVec3) -> Self {
        GroupElement { a0, a }
    }

    pub fn identity() -> Self {
        GroupElement {
            a0: C_ONE,
            a: CVec3::ZERO,
        }
    }

    pub fn a0(&self) -> Complex64 {
        self.a0
    }

    pub fn a(&self) -> CVec3 {
        self.a
    }

    /// |a0² + a·a - 1|
    pub fn constraint_defect(&self) -> f64 {
        (self.a0 * self.a0 + self.a.dot(&self.a) - C_ONE).norm()
    }

    /// Spatial rotation by `theta` (radians) about the real unit axis `n`:
    /// (cos θ/2, n̂ sin θ/2). The angle is not canonicalized to any range.
    pub fn rotation(theta: f64, axis: &CVec3) -> Result<Self> {
        let n = real_unit_axis(axis)?;
        let half = theta / 2.0;
        Ok(GroupElement {
            a0: Complex64::new(half.cos(), 0.0),
            a: CVec3::from_real(rscale(n, half.sin())),
        })
    }

    /// Boost of rapidity `beta` along the real unit axis `n`:
    /// (cosh β/2, i n̂ sinh β/2). Hermitian positive definite as a matrix.
    pub fn boost(beta: f64, axis: &CVec3) -> Result<Self> {
        let n = real_unit_axis(axis)?;
        let half = beta / 2.0;
        let s = half.sinh();
        Ok(GroupElement {
            a0: Complex64::new(half.cosh(), 0.0),
            a: CVec3::new(
                Complex64::new(0.0, s * n[0]),
                Complex64::new(0.0, s * n[1]),
                Complex64::new(0.0, s * n[2]),
            ),
        })
    }

    /// S(a0, a)⁻¹ = S(a0, -a).
    pub fn inverse(&self) -> Self {
        GroupElement {
            a0: self.a0,
            a: -self.a,
        }
    }

    /// The other preimage -S of the same SO(3,1) element.
    pub fn negated(&self) -> Self {
        GroupElement {
            a0: -self.a0,
            a: -self.a,
        }
    }

    /// Group product `self · first` (i.e. `first` acts first), computed
    /// through the 2x2 matrix representation. This is the multiplication
    /// oracle; turn-based composition must not call it outside of tests and
    /// fallback paths.
    pub fn multiply(&self, first: &GroupElement) -> GroupElement {
        let m = self.to_matrix().mul(&first.to_matrix());
        let (a0, a) = m.pauli_components();
        GroupElement { a0, a }
    }

    /// 2x2 matrix a0·I - i a·σ.
    pub fn to_matrix(&self) -> Mat2C {
        let [a1, a2, a3] = self.a.0;
        Mat2C([
            [self.a0 - C_I * a3, -C_I * a1 - a2],
            [-C_I * a1 + a2, self.a0 + C_I * a3],
        ])
    }

    /// Inverse of `to_matrix`: a0 = tr(M)/2, a_k = (i/2) tr(σ_k M).
    /// Requires |det M - 1| ≤ the unit tolerance.
    pub fn from_matrix(m: &Mat2C) -> Result<Self> {
        let defect = (m.det() - C_ONE).norm();
        if !defect.is_finite() || defect > tol::UNIT_TOL {
            return Err(Error::NotUnimodular { defect });
        }
        let (a0, a) = m.pauli_components();
        Ok(GroupElement { a0, a })
    }

    /// Image in SO(3,C) under the adjoint action S (z·σ) S⁻¹ = (R z)·σ.
    /// Columns are the Pauli expansions of the conjugated basis elements.
    pub fn adjoint_rotation(&self) -> ComplexRotation3 {
        let m = self.to_matrix();
        let minv = m.unimodular_inverse();
        let mut r = [[C_ZERO; 3]; 3];
        for (k, sigma) in PAULI.iter().enumerate() {
            // S (e_k·σ) S⁻¹ = z'·σ with z'_j = tr(σ_j z'·σ)/2.
            let conj = m.mul(sigma).mul(&minv);
            for j in 0..3 {
                r[j][k] = 0.5 * PAULI[j].mul(&conj).trace();
            }
        }
        ComplexRotation3(r)
    }

    /// Image in SO(3,1) under Hermitian congruence S H S†, H = ξ0 + ξ·σ.
    /// Columns are the images of the Hermitian basis {1, σ1, σ2, σ3}.
    pub fn lorentz_matrix(&self) -> LorentzMat4 {
        let m = self.to_matrix();
        let md = m.dagger();
        let mut l = [[0.0; 4]; 4];
        let basis = [Mat2C::identity(), PAULI[0], PAULI[1], PAULI[2]];
        for (mu, h) in basis.iter().enumerate() {
            let img = m.mul(h).mul(&md);
            l[0][mu] = 0.5 * (img.0[0][0] + img.0[1][1]).re;
            for j in 0..3 {
                l[j + 1][mu] = 0.5 * PAULI[j].mul(&img).trace().re;
            }
        }
        LorentzMat4(l)
    }

    /// Largest difference over the eight real components of (a0, a).
    pub fn max_component_diff(&self, other: &GroupElement) -> f64 {
        let d0 = self.a0 - other.a0;
        let mut m = d0.re.abs().max(d0.im.abs());
        for k in 0..3 {
            let d = self.a.0[k] - other.a.0[k];
            m = m.max(d.re.abs()).max(d.im.abs());
        }
        m
    }
}

fn real_unit_axis(axis: &CVec3) -> Result<[f64; 3]> {
    let max_im = axis.max_im();
    if !max_im.is_finite() || max_im > tol::REAL_AXIS_TOL {
        return Err(Error::NonRealAxis { max_im });
    }
    let n = axis.re();
    let norm = rnorm(n);
    if !norm.is_finite() || (norm - 1.0).abs() > tol::UNIT_TOL {
        return Err(Error::AxisNotUnit { norm });
    }
    Ok(n)
}

/// 2x2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2C(pub [[Complex64; 2]; 2]);

/// Pauli matrices σ1, σ2, σ3 in the standard physics convention.
pub const PAULI: [Mat2C; 3] = [
    Mat2C([[C_ZERO, C_ONE], [C_ONE, C_ZERO]]),
    Mat2C([[C_ZERO, Complex64::new(0.0, -1.0)], [C_I, C_ZERO]]),
    Mat2C([[C_ONE, C_ZERO], [C_ZERO, Complex64::new(-1.0, 0.0)]]),
];

impl Mat2C {
    pub fn identity() -> Self {
        Mat2C([[C_ONE, C_ZERO], [C_ZERO, C_ONE]])
    }

    pub fn mul(&self, rhs: &Mat2C) -> Mat2C {
        let a = &self.0;
        let b = &rhs.0;
        Mat2C([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }

    pub fn det(&self) -> Complex64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Mat2C {
        Mat2C([
            [self.0[0][0].conj(), self.0[1][0].conj()],
            [self.0[0][1].conj(), self.0[1][1].conj()],
        ])
    }

    /// Inverse of a det = 1 matrix (the adjugate).
    pub fn unimodular_inverse(&self) -> Mat2C {
        Mat2C([[self.0[1][1], -self.0[0][1]], [-self.0[1][0], self.0[0][0]]])
    }

    /// Expansion in {1, σ}: M = a0·I - i a·σ.
    pub fn pauli_components(&self) -> (Complex64, CVec3) {
        let a0 = 0.5 * self.trace();
        let a = CVec3::new(
            C_I * 0.5 * PAULI[0].mul(self).trace(),
            C_I * 0.5 * PAULI[1].mul(self).trace(),
            C_I * 0.5 * PAULI[2].mul(self).trace(),
        );
        (a0, a)
    }

    pub fn scale(&self, s: Complex64) -> Mat2C {
        Mat2C([
            [self.0[0][0] * s, self.0[0][1] * s],
            [self.0[1][0] * s, self.0[1][1] * s],
        ])
    }

    pub fn add(&self, rhs: &Mat2C) -> Mat2C {
        Mat2C([
            [self.0[0][0] + rhs.0[0][0], self.0[0][1] + rhs.0[0][1]],
            [self.0[1][0] + rhs.0[1][0], self.0[1][1] + rhs.0[1][1]],
        ])
    }

    pub fn max_diff(&self, other: &Mat2C) -> f64 {
        let mut m = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                m = m.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        m
    }
}

/// 3x3 complex-orthogonal matrix (R Rᵀ = 1 bilinearly, det = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexRotation3(pub [[Complex64; 3]; 3]);

impl ComplexRotation3 {
    pub fn identity() -> Self {
        let mut r = [[C_ZERO; 3]; 3];
        for (k, row) in r.iter_mut().enumerate() {
            row[k] = C_ONE;
        }
        ComplexRotation3(r)
    }

    /// Matrix built from its rows.
    pub fn from_rows(r0: CVec3, r1: CVec3, r2: CVec3) -> Self {
        ComplexRotation3([r0.0, r1.0, r2.0])
    }

    pub fn apply(&self, z: &CVec3) -> CVec3 {
        let mut out = [C_ZERO; 3];
        for (cell, row) in out.iter_mut().zip(self.0.iter()) {
            *cell = row[0] * z.0[0] + row[1] * z.0[1] + row[2] * z.0[2];
        }
        CVec3(out)
    }

    pub fn mul(&self, rhs: &ComplexRotation3) -> ComplexRotation3 {
        let mut out = [[C_ZERO; 3]; 3];
        for (row_out, row) in out.iter_mut().zip(self.0.iter()) {
            for (j, cell) in row_out.iter_mut().enumerate() {
                for (k, rhs_row) in rhs.0.iter().enumerate() {
                    *cell += row[k] * rhs_row[j];
                }
            }
        }
        ComplexRotation3(out)
    }

    pub fn transpose(&self) -> ComplexRotation3 {
        let mut out = [[C_ZERO; 3]; 3];
        for (i, row_out) in out.iter_mut().enumerate() {
            for (j, cell) in row_out.iter_mut().enumerate() {
                *cell = self.0[j][i];
            }
        }
        ComplexRotation3(out)
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Entrywise defect of RᵀR = 1 (bilinear orthogonality).
    pub fn orthogonality_defect(&self) -> f64 {
        let p = self.transpose().mul(self);
        let mut m = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { C_ONE } else { C_ZERO };
                m = m.max((p.0[i][j] - expected).norm());
            }
        }
        m
    }

    pub fn max_diff(&self, other: &ComplexRotation3) -> f64 {
        let mut m = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                m = m.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        m
    }
}

/// Real 4x4 Lorentz matrix; index 0 is time, 1..3 space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzMat4(pub [[f64; 4]; 4]);

impl LorentzMat4 {
    pub fn identity() -> Self {
        let mut l = [[0.0; 4]; 4];
        for (k, row) in l.iter_mut().enumerate() {
            row[k] = 1.0;
        }
        LorentzMat4(l)
    }

    pub fn apply(&self, xi: [f64; 4]) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (j, row) in self.0.iter().enumerate() {
            out[j] = row[0] * xi[0] + row[1] * xi[1] + row[2] * xi[2] + row[3] * xi[3];
        }
        out
    }

    pub fn mul(&self, rhs: &LorentzMat4) -> LorentzMat4 {
        let mut out = [[0.0; 4]; 4];
        for (row_out, row) in out.iter_mut().zip(self.0.iter()) {
            for (j, cell) in row_out.iter_mut().enumerate() {
                for (k, rhs_row) in rhs.0.iter().enumerate() {
                    *cell += row[k] * rhs_row[j];
                }
            }
        }
        LorentzMat4(out)
    }

    /// Entrywise defect of Lᵀ η L = η with η = diag(+1,-1,-1,-1).
    pub fn minkowski_defect(&self) -> f64 {
        let eta = [1.0, -1.0, -1.0, -1.0];
        let mut m = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                let mut s = 0.0;
                for (k, &ek) in eta.iter().enumerate() {
                    s += self.0[k][i] * ek * self.0[k][j];
                }
                let expected = if i == j { eta[i] } else { 0.0 };
                m = m.max((s - expected).abs());
            }
        }
        m
    }

    pub fn max_diff(&self, other: &LorentzMat4) -> f64 {
        let mut m = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                m = m.max((self.0[i][j] - other.0[i][j]).abs());
            }
        }
        m
    }
}

/// Adjoint-orbit class of a Lie-algebra element z·σ, determined by the
/// complex invariant z·z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrbitClass {
    /// z·z = r² e^{2iφ} with r > 0 and φ in [0, π); canonical form
    /// (r e^{iφ}, 0, 0).
    TypeI { r: f64, phi: f64 },
    /// z·z = 0 with z ≠ 0; canonical form (1, i, 0).
    TypeII,
    /// The zero vector.
    Zero,
}

/// Classifies a vector by its adjoint orbit.
pub fn classify_orbit(z: &CVec3) -> OrbitClass {
    let zz = z.dot(z);
    if zz.norm() >= tol::ISO_TOL {
        let r = zz.norm().sqrt();
        let mut phi = zz.arg() / 2.0;
        if phi < 0.0 {
            phi += std::f64::consts::PI;
        }
        OrbitClass::TypeI { r, phi }
    } else if z.norm_h() >= tol::ISO_TOL {
        OrbitClass::TypeII
    } else {
        OrbitClass::Zero
    }
}

/// Recovers a group element from its adjoint image.
///
/// Inverts z' = (a0² - a·a) z + 2 (a·z) a + 2 a0 (a∧z) by the
/// largest-diagonal branch of the quaternion extraction, carried over to
/// complex entries. The two preimages ±S act identically; which one is
/// returned depends on the principal square-root branch.
pub fn from_adjoint(r: &ComplexRotation3) -> Result<GroupElement> {
    let m = &r.0;
    let tr = m[0][0] + m[1][1] + m[2][2];
    // 4a0², 4a1², 4a2², 4a3²; they sum to 4, so the largest has modulus ≥ 1.
    let cands = [
        C_ONE + tr,
        C_ONE + m[0][0] - m[1][1] - m[2][2],
        C_ONE - m[0][0] + m[1][1] - m[2][2],
        C_ONE - m[0][0] - m[1][1] + m[2][2],
    ];
    let mut k = 0;
    for j in 1..4 {
        if cands[j].norm() > cands[k].norm() {
            k = j;
        }
    }
    let s = cands[k].sqrt();
    if s.norm() < 1e-8 {
        return Err(Error::NumericalDegeneracy {
            context: "adjoint inversion: all quaternion branches degenerate",
        });
    }
    let d = (2.0 * s).inv();
    let (a0, a1, a2, a3) = match k {
        0 => (
            0.5 * s,
            (m[2][1] - m[1][2]) * d,
            (m[0][2] - m[2][0]) * d,
            (m[1][0] - m[0][1]) * d,
        ),
        1 => (
            (m[2][1] - m[1][2]) * d,
            0.5 * s,
            (m[0][1] + m[1][0]) * d,
            (m[0][2] + m[2][0]) * d,
        ),
        2 => (
            (m[0][2] - m[2][0]) * d,
            (m[0][1] + m[1][0]) * d,
            0.5 * s,
            (m[1][2] + m[2][1]) * d,
        ),
        _ => (
            (m[1][0] - m[0][1]) * d,
            (m[0][2] + m[2][0]) * d,
            (m[1][2] + m[2][1]) * d,
            0.5 * s,
        ),
    };
    GroupElement::new(a0, CVec3::new(a1, a2, a3)).map_err(|_| Error::NumericalDegeneracy {
        context: "adjoint inversion: input is not special orthogonal",
    })
}

/// Reduces z to the canonical form of its orbit.
///
/// Returns (S, z0) with adjoint_rotation(S)·z = z0, where z0 = (r e^{iφ}, 0, 0)
/// for type I and z0 = (1, i, 0) for type II.
pub fn reduce_to_canonical(z: &CVec3) -> Result<(GroupElement, CVec3)> {
    match classify_orbit(z) {
        OrbitClass::Zero => Err(Error::ZeroVector {
            norm: z.norm_h(),
            tol: tol::ISO_TOL,
        }),
        OrbitClass::TypeI { r, phi } => reduce_type_i(z, r, phi),
        OrbitClass::TypeII => reduce_type_ii(z),
    }
}

fn reduce_type_i(z: &CVec3, r: f64, phi: f64) -> Result<(GroupElement, CVec3)> {
    let zhat = z.normalize()?.vec();

    // Complete ẑ to a bilinear-orthonormal right-handed triad. Basis seeds
    // always suffice (the 4a_k² cannot all be near zero); perturbed seeds are
    // retried before giving up.
    let seeds = [
        CVec3::E1,
        CVec3::E2,
        CVec3::E3,
        CVec3::from_real([0.577_350_269_189_625_8; 3]),
        CVec3::from_real([0.48, -0.6, 0.64]),
    ];
    let mut phat = None;
    for seed in &seeds {
        let p = *seed - zhat * seed.dot(&zhat);
        if p.dot(&p).norm() >= 1e-8 {
            phat = Some(p.normalize()?.vec());
            break;
        }
    }
    let phat = phat.ok_or(Error::NumericalDegeneracy {
        context: "triad completion: every seed produced an isotropic complement",
    })?;
    let qhat = zhat.wedge(&phat);

    // Rows (ẑ, p̂, q̂) send ẑ to e1; det = (ẑ·ẑ)(p̂·p̂) - (ẑ·p̂)² = 1.
    let rot = ComplexRotation3::from_rows(zhat, phat, qhat);
    let mut s = from_adjoint(&rot)?;

    // The reduction scales e1 by the principal sqrt of z·z, whose argument
    // lies in (-π/2, π/2]; the canonical phase lives in [0, π). When they
    // disagree (by π), flip e1 with a π-rotation about the third axis.
    let principal = z.dot(z).sqrt();
    let canonical = Complex64::from_polar(r, phi);
    if (principal - canonical).norm() > (principal + canonical).norm() {
        let flip = GroupElement::rotation(std::f64::consts::PI, &CVec3::E3)?;
        s = flip.multiply(&s);
    }
    Ok((s, CVec3::new(canonical, C_ZERO, C_ZERO)))
}

fn reduce_type_ii(z: &CVec3) -> Result<(GroupElement, CVec3)> {
    // An isotropic z has |Re z| = |Im z| and Re z ⊥ Im z. Map the real frame
    // {Re z, Im z, Re z × Im z} onto {e1, e2, e3} with a real rotation; the
    // image is λ(1, i, 0), and the e3-boost subgroup scales (1, i, 0) by e^β.
    let u = z.re();
    let w = z.im();
    let nu = rnorm(u);
    if nu < 1e-13 {
        return Err(Error::NumericalDegeneracy {
            context: "type-II reduction: real part vanishes",
        });
    }
    let uhat = rscale(u, 1.0 / nu);
    let wp = rsub(w, rscale(uhat, rdot(w, uhat)));
    let nwp = rnorm(wp);
    if nwp < 1e-13 {
        return Err(Error::NumericalDegeneracy {
            context: "type-II reduction: imaginary part parallel to real part",
        });
    }
    let vhat = rscale(wp, 1.0 / nwp);
    let what = rcross(uhat, vhat);

    let rot = ComplexRotation3::from_rows(
        CVec3::from_real(uhat),
        CVec3::from_real(vhat),
        CVec3::from_real(what),
    );
    let s_rot = from_adjoint(&rot)?;

    // Coefficient of (1, i, 0) in the rotated vector: α = (z1' - i z2')/2.
    let zp = rot.apply(z);
    let alpha = 0.5 * (zp.0[0] - C_I * zp.0[1]);
    let beta = -alpha.norm().ln();
    let s_boost = GroupElement::boost(beta, &CVec3::E3)?;

    Ok((s_boost.multiply(&s_rot), CVec3::new(C_ONE, C_I, C_ZERO)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn make_element_checks_constraint() {
        assert!(GroupElement::new(c(1.0, 0.0), CVec3::ZERO).is_ok());
        let theta = 0.83f64;
        assert!(GroupElement::new(
            c((theta / 2.0).cos(), 0.0),
            CVec3::from_real([(theta / 2.0).sin(), 0.0, 0.0])
        )
        .is_ok());
        assert!(matches!(
            GroupElement::new(c(1.0, 0.0), CVec3::E1),
            Err(Error::ConstraintViolation { .. })
        ));
    }

    #[test]
    fn rotation_matrix_matches_compact_subgroup() {
        let theta = 1.3;
        let g = GroupElement::rotation(theta, &CVec3::E1).unwrap();
        let m = g.to_matrix();
        let h = theta / 2.0;
        let expected = Mat2C([
            [c(h.cos(), 0.0), c(0.0, -h.sin())],
            [c(0.0, -h.sin()), c(h.cos(), 0.0)],
        ]);
        assert!(m.max_diff(&expected) < 1e-15);
    }

    #[test]
    fn boost_matrix_matches_noncompact_subgroup() {
        let beta = 0.7;
        let g = GroupElement::boost(beta, &CVec3::E1).unwrap();
        let m = g.to_matrix();
        let h = beta / 2.0;
        let expected = Mat2C([
            [c(h.cosh(), 0.0), c(h.sinh(), 0.0)],
            [c(h.sinh(), 0.0), c(h.cosh(), 0.0)],
        ]);
        assert!(m.max_diff(&expected) < 1e-15);
    }

    #[test]
    fn axis_validation() {
        let imag_axis = CVec3::new(c(1.0, 1e-6), c(0.0, 0.0), c(0.0, 0.0));
        assert!(matches!(
            GroupElement::rotation(1.0, &imag_axis),
            Err(Error::NonRealAxis { .. })
        ));
        let long_axis = CVec3::from_real([2.0, 0.0, 0.0]);
        assert!(matches!(
            GroupElement::boost(1.0, &long_axis),
            Err(Error::AxisNotUnit { .. })
        ));
    }

    #[test]
    fn matrix_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let s = sample::element(&mut rng);
            let back = GroupElement::from_matrix(&s.to_matrix()).unwrap();
            assert!(s.max_component_diff(&back) < 1e-12);
        }
    }

    #[test]
    fn from_matrix_rejects_non_unimodular() {
        let m = Mat2C([[c(2.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
        assert!(matches!(
            GroupElement::from_matrix(&m),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn multiply_identity_and_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let s = sample::element(&mut rng);
        assert!(
            GroupElement::identity()
                .multiply(&s)
                .max_component_diff(&s)
                .abs()
                < 1e-15
        );
        let prod = s.inverse().multiply(&s);
        assert!(prod.max_component_diff(&GroupElement::identity()) < 1e-10);
    }

    #[test]
    fn same_axis_boosts_add() {
        let b1 = GroupElement::boost(0.9, &CVec3::E1).unwrap();
        let b2 = GroupElement::boost(1.4, &CVec3::E1).unwrap();
        let sum = GroupElement::boost(2.3, &CVec3::E1).unwrap();
        assert!(b2.multiply(&b1).max_component_diff(&sum) < 1e-12);
    }

    #[test]
    fn same_axis_rotations_add() {
        let r1 = GroupElement::rotation(0.9, &CVec3::E2).unwrap();
        let r2 = GroupElement::rotation(1.4, &CVec3::E2).unwrap();
        let sum = GroupElement::rotation(2.3, &CVec3::E2).unwrap();
        assert!(r2.multiply(&r1).max_component_diff(&sum) < 1e-12);
    }

    #[test]
    fn boost_inverse_negates_rapidity() {
        let b = GroupElement::boost(1.1, &CVec3::E2).unwrap();
        let binv = GroupElement::boost(-1.1, &CVec3::E2).unwrap();
        assert!(b.inverse().max_component_diff(&binv) < 1e-15);
    }

    #[test]
    fn adjoint_of_identity_and_subgroups() {
        assert!(
            GroupElement::identity()
                .adjoint_rotation()
                .max_diff(&ComplexRotation3::identity())
                < 1e-15
        );

        // Compact subgroup about e1 (rotation block in the 2-3 plane).
        let theta = 0.9f64;
        let g = GroupElement::rotation(theta, &CVec3::E1).unwrap();
        let r = g.adjoint_rotation();
        let expected = ComplexRotation3([
            [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(theta.cos(), 0.0), c(-theta.sin(), 0.0)],
            [c(0.0, 0.0), c(theta.sin(), 0.0), c(theta.cos(), 0.0)],
        ]);
        assert!(r.max_diff(&expected) < 1e-14);

        // Noncompact subgroup along e1 (complex rotation in the 2-3 plane).
        let beta = 0.6f64;
        let g = GroupElement::boost(beta, &CVec3::E1).unwrap();
        let r = g.adjoint_rotation();
        let expected = ComplexRotation3([
            [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(beta.cosh(), 0.0), c(0.0, -beta.sinh())],
            [c(0.0, 0.0), c(0.0, beta.sinh()), c(beta.cosh(), 0.0)],
        ]);
        assert!(r.max_diff(&expected) < 1e-14);
    }

    #[test]
    fn lorentz_of_subgroups() {
        let id = GroupElement::identity();
        assert!(id.lorentz_matrix().max_diff(&LorentzMat4::identity()) < 1e-15);
        assert!(
            id.negated()
                .lorentz_matrix()
                .max_diff(&LorentzMat4::identity())
                < 1e-15
        );

        let theta = 1.7f64;
        let g = GroupElement::rotation(theta, &CVec3::E1).unwrap();
        let mut expected = [[0.0; 4]; 4];
        expected[0][0] = 1.0;
        expected[1][1] = 1.0;
        expected[2][2] = theta.cos();
        expected[2][3] = -theta.sin();
        expected[3][2] = theta.sin();
        expected[3][3] = theta.cos();
        assert!(g.lorentz_matrix().max_diff(&LorentzMat4(expected)) < 1e-13);

        let beta = 2.0f64;
        let g = GroupElement::boost(beta, &CVec3::E1).unwrap();
        let mut expected = [[0.0; 4]; 4];
        expected[0][0] = beta.cosh();
        expected[0][1] = beta.sinh();
        expected[1][0] = beta.sinh();
        expected[1][1] = beta.cosh();
        expected[2][2] = 1.0;
        expected[3][3] = 1.0;
        assert!(g.lorentz_matrix().max_diff(&LorentzMat4(expected)) < 1e-13);
    }

    #[test]
    fn kernel_sign_is_invisible_downstream() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let s = sample::element(&mut rng);
            let neg = s.negated();
            // Same computation path on negated inputs: exactly equal.
            assert_eq!(s.adjoint_rotation(), neg.adjoint_rotation());
            assert_eq!(s.lorentz_matrix(), neg.lorentz_matrix());
        }
    }

    #[test]
    fn adjoint_preserves_invariant_and_lorentz_preserves_metric() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..200 {
            let s = sample::element(&mut rng);
            let z = sample::complex_vector(&mut rng);
            let r = s.adjoint_rotation();
            let rz = r.apply(&z);
            assert!((rz.dot(&rz) - z.dot(&z)).norm() < 1e-10);

            let l = s.lorentz_matrix();
            assert!(l.minkowski_defect() < 1e-9);
            assert!(l.0[0][0] >= 1.0 - 1e-12);

            // Quadratic form preserved on a random 4-vector.
            let xi = [
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            ];
            let xi2 = l.apply(xi);
            let q = |v: [f64; 4]| v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3];
            assert!((q(xi) - q(xi2)).abs() < 1e-9);
        }
    }

    #[test]
    fn det_equals_constraint() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for _ in 0..200 {
            let s = sample::element(&mut rng);
            assert!((s.to_matrix().det() - c(1.0, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn classify_examples() {
        match classify_orbit(&CVec3::E1) {
            OrbitClass::TypeI { r, phi } => {
                assert!((r - 1.0).abs() < 1e-15);
                assert!(phi.abs() < 1e-15);
            }
            other => panic!("expected type I, got {other:?}"),
        }
        let null = CVec3::new(c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0));
        assert_eq!(classify_orbit(&null), OrbitClass::TypeII);
        assert_eq!(classify_orbit(&CVec3::ZERO), OrbitClass::Zero);
    }

    #[test]
    fn reduce_already_canonical() {
        let z = CVec3::from_real([1.7, 0.0, 0.0]);
        let (s, z0) = reduce_to_canonical(&z).unwrap();
        assert!(s.adjoint_rotation().apply(&z).max_diff(&z0) < 1e-12);
        assert!(z0.max_diff(&z) < 1e-12);
    }

    #[test]
    fn reduce_e2_to_e1() {
        let (s, z0) = reduce_to_canonical(&CVec3::E2).unwrap();
        assert!(z0.max_diff(&CVec3::E1) < 1e-12);
        assert!(s.adjoint_rotation().apply(&CVec3::E2).max_diff(&z0) < 1e-12);
    }

    #[test]
    fn reduce_type_ii_canonical_fixed_point() {
        let null = CVec3::new(c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0));
        let (s, z0) = reduce_to_canonical(&null).unwrap();
        assert!(z0.max_diff(&null) < 1e-12);
        assert!(s.adjoint_rotation().apply(&null).max_diff(&z0) < 1e-10);
    }

    #[test]
    fn reduce_rejects_zero() {
        assert!(matches!(
            reduce_to_canonical(&CVec3::ZERO),
            Err(Error::ZeroVector { .. })
        ));
    }

    #[test]
    fn from_adjoint_inverts_up_to_sign() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..100 {
            let s = sample::element(&mut rng);
            let back = from_adjoint(&s.adjoint_rotation()).unwrap();
            let d_plus = back.max_component_diff(&s);
            let d_minus = back.max_component_diff(&s.negated());
            assert!(d_plus.min(d_minus) < 1e-9);
        }
    }
}
