use thiserror::Error;

/// Errors reported by the turn machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The vector lies on (or numerically near) the null cone z·z = 0 and
    /// cannot be normalized.
    #[error("isotropic vector: |z·z| = {zz_norm:.3e} is below {tol:.1e}")]
    IsotropicVector { zz_norm: f64, tol: f64 },

    /// A (numerically) zero vector where a direction was required.
    #[error("zero vector: Hermitian norm {norm:.3e} is below {tol:.1e}")]
    ZeroVector { norm: f64, tol: f64 },

    /// A pair (v, v·v) fails the unit-vector constraint.
    #[error("not a unit vector: |v·v - 1| = {defect:.3e}")]
    NotUnit { defect: f64 },

    /// (a0, a) fails the unit-determinant constraint a0² + a·a = 1.
    #[error("constraint violation: |a0² + a·a - 1| = {defect:.3e}")]
    ConstraintViolation { defect: f64 },

    /// A 2x2 matrix with det ≠ 1 cannot represent a group element.
    #[error("matrix not unimodular: |det - 1| = {defect:.3e}")]
    NotUnimodular { defect: f64 },

    /// Rotation/boost axes must be real.
    #[error("axis has imaginary parts: max |Im| = {max_im:.3e}")]
    NonRealAxis { max_im: f64 },

    /// Rotation/boost axes must be unit length.
    #[error("axis is not unit length: |axis| = {norm}")]
    AxisNotUnit { norm: f64 },

    /// The requested tail does not lie in the turn's carrier plane.
    #[error("tail not admissible: |new_tail·a| = {residual:.3e}")]
    TailNotAdmissible { residual: f64 },

    /// Boost rapidities must be finite and positive.
    #[error("invalid rapidity: {value}")]
    InvalidRapidity { value: f64 },

    /// A canonical-form reduction hit an isotropic intermediate that the
    /// deterministic retries could not avoid.
    #[error("numerical degeneracy in {context}")]
    NumericalDegeneracy { context: &'static str },

    /// The factorized composition path exhausted its deterministic axis
    /// sweep. Unreachable for valid inputs; signals numerical pathology.
    #[error("degenerate composition: no admissible factorization axis found")]
    DegenerateCompositionFailure,
}

pub type Result<T> = std::result::Result<T, Error>;
