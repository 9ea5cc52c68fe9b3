//! Complex 3-vector algebra over the symmetric bilinear product.
//!
//! The dot product here is Σ u_k v_k with **no complex conjugation**; it is
//! the invariant form of SO(3,C). Hermitian (conjugating) norms appear only
//! as numerical magnitudes, never in the algebra itself. The wedge product is
//! the componentwise cross product extended to complex entries. Both satisfy
//! the familiar R³ identities verbatim.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

/// Complex scalar. Finite components are assumed throughout.
pub type CScalar = Complex64;

/// A complex 3-vector `(z1, z2, z3)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CVec3(pub [Complex64; 3]);

const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

impl CVec3 {
    pub const ZERO: CVec3 = CVec3([C_ZERO, C_ZERO, C_ZERO]);
    pub const E1: CVec3 = CVec3([C_ONE, C_ZERO, C_ZERO]);
    pub const E2: CVec3 = CVec3([C_ZERO, C_ONE, C_ZERO]);
    pub const E3: CVec3 = CVec3([C_ZERO, C_ZERO, C_ONE]);

    pub fn new(z1: Complex64, z2: Complex64, z3: Complex64) -> Self {
        CVec3([z1, z2, z3])
    }

    /// Vector with the given real components and zero imaginary parts.
    pub fn from_real(v: [f64; 3]) -> Self {
        CVec3([
            Complex64::new(v[0], 0.0),
            Complex64::new(v[1], 0.0),
            Complex64::new(v[2], 0.0),
        ])
    }

    /// Symmetric bilinear dot product Σ u_k v_k (no conjugation).
    pub fn dot(&self, other: &CVec3) -> Complex64 {
        self.0[0] * other.0[0] + self.0[1] * other.0[1] + self.0[2] * other.0[2]
    }

    /// Componentwise cross product with complex entries.
    pub fn wedge(&self, other: &CVec3) -> CVec3 {
        let u = &self.0;
        let v = &other.0;
        CVec3([
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ])
    }

    /// Hermitian (Euclidean C³) norm. A magnitude only; not the invariant.
    pub fn norm_h(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Real parts as an R³ vector.
    pub fn re(&self) -> [f64; 3] {
        [self.0[0].re, self.0[1].re, self.0[2].re]
    }

    /// Imaginary parts as an R³ vector.
    pub fn im(&self) -> [f64; 3] {
        [self.0[0].im, self.0[1].im, self.0[2].im]
    }

    /// Largest imaginary component in magnitude.
    pub fn max_im(&self) -> f64 {
        self.0.iter().fold(0.0, |m, z| m.max(z.im.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest componentwise difference (Hermitian modulus) to `other`.
    pub fn max_diff(&self, other: &CVec3) -> f64 {
        (0..3).fold(0.0f64, |m, k| m.max((self.0[k] - other.0[k]).norm()))
    }

    /// Normalizes by the principal branch of sqrt(z·z).
    ///
    /// The principal branch has argument in (-π/2, π/2], so the result is
    /// deterministic. Fails with [`Error::IsotropicVector`] when z·z is
    /// numerically on the null cone.
    pub fn normalize(&self) -> Result<UnitCVec3> {
        let zz = self.dot(self);
        let zz_norm = zz.norm();
        if !zz_norm.is_finite() || zz_norm < tol::ISO_TOL {
            return Err(Error::IsotropicVector {
                zz_norm,
                tol: tol::ISO_TOL,
            });
        }
        let s = zz.sqrt();
        Ok(UnitCVec3(*self * s.inv()))
    }

    /// Deterministic orthonormal completion of a real direction.
    ///
    /// Returns real unit vectors (p, q) with p·q = 0, p·v = 0, q·v = 0 and
    /// p∧q a positive multiple of v. p is the Gram-Schmidt image of the
    /// standard basis vector with the smallest |component along v| (ties
    /// broken by lowest index), and q = v̂ ∧ p.
    ///
    /// Only the real part of `self` is used; callers pass real vectors.
    pub fn orthonormal_complement(&self) -> Result<(CVec3, CVec3)> {
        let v = self.re();
        let n = rnorm(v);
        if n < tol::ISO_TOL {
            return Err(Error::ZeroVector {
                norm: n,
                tol: tol::ISO_TOL,
            });
        }
        let vhat = rscale(v, 1.0 / n);
        let mut k = 0;
        for j in 1..3 {
            if vhat[j].abs() < vhat[k].abs() {
                k = j;
            }
        }
        let mut seed = [0.0; 3];
        seed[k] = 1.0;
        let p = rsub(seed, rscale(vhat, rdot(seed, vhat)));
        let p = rscale(p, 1.0 / rnorm(p));
        let q = rcross(vhat, p);
        Ok((CVec3::from_real(p), CVec3::from_real(q)))
    }
}

impl std::ops::Add for CVec3 {
    type Output = CVec3;
    fn add(self, rhs: CVec3) -> CVec3 {
        CVec3([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
        ])
    }
}

impl std::ops::Sub for CVec3 {
    type Output = CVec3;
    fn sub(self, rhs: CVec3) -> CVec3 {
        CVec3([
            self.0[0] - rhs.0[0],
            self.0[1] - rhs.0[1],
            self.0[2] - rhs.0[2],
        ])
    }
}

impl std::ops::Neg for CVec3 {
    type Output = CVec3;
    fn neg(self) -> CVec3 {
        CVec3([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl std::ops::Mul<Complex64> for CVec3 {
    type Output = CVec3;
    fn mul(self, s: Complex64) -> CVec3 {
        CVec3([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }
}

impl std::ops::Mul<f64> for CVec3 {
    type Output = CVec3;
    fn mul(self, s: f64) -> CVec3 {
        CVec3([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }
}

/// A complex vector with bilinear self-product 1 within [`tol::UNIT_TOL`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitCVec3(CVec3);

impl UnitCVec3 {
    /// Checks |v·v - 1| ≤ the unit tolerance.
    pub fn new(v: CVec3) -> Result<Self> {
        let defect = (v.dot(&v) - C_ONE).norm();
        if !defect.is_finite() || defect > tol::UNIT_TOL {
            return Err(Error::NotUnit { defect });
        }
        Ok(UnitCVec3(v))
    }

    /// Wraps a vector known to satisfy the unit constraint by construction.
    pub(crate) fn new_unchecked(v: CVec3) -> Self {
        UnitCVec3(v)
    }

    pub fn vec(&self) -> CVec3 {
        self.0
    }
}

impl std::ops::Deref for UnitCVec3 {
    type Target = CVec3;
    fn deref(&self) -> &CVec3 {
        &self.0
    }
}

impl From<UnitCVec3> for CVec3 {
    fn from(u: UnitCVec3) -> CVec3 {
        u.0
    }
}

// Real 3-vector helpers used by the deterministic real constructions.

pub(crate) fn rdot(u: [f64; 3], v: [f64; 3]) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

pub(crate) fn rcross(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

pub(crate) fn rnorm(v: [f64; 3]) -> f64 {
    rdot(v, v).sqrt()
}

pub(crate) fn rscale(v: [f64; 3], s: f64) -> [f64; 3] {
    [v[0] * s, v[1] * s, v[2] * s]
}

pub(crate) fn rsub(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [u[0] - v[0], u[1] - v[1], u[2] - v[2]]
}
