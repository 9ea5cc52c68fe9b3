//! Numerical tolerances shared across the crate.
//!
//! All thresholds are absolute unless stated otherwise.

/// Below this value of |z·z| a complex vector counts as isotropic (on the
/// null cone) and cannot be normalized. Separates the type-II orbit from
/// numerical noise at double precision.
pub const ISO_TOL: f64 = 1e-12;

/// Allowed defect for unit constraints: |v·v - 1| for unit vectors and
/// |a0² + a·a - 1| for group elements, and |det - 1| for 2x2 matrices.
pub const UNIT_TOL: f64 = 1e-10;

/// Below this value of |(a∧b)·(a∧b)| two turns are treated as
/// non-intersecting and composition falls back to the factorized path.
pub const MEET_TOL: f64 = 1e-9;

/// Maximum imaginary component allowed in a real rotation/boost axis.
pub const REAL_AXIS_TOL: f64 = 1e-12;

/// Tolerance for turn equivalence: both derived invariants must agree
/// componentwise within this bound.
pub const EQUIV_TOL: f64 = 1e-9;

/// Admissibility bound for a new tail in `slide`: |new_tail·a| must not
/// exceed this.
pub const TAIL_TOL: f64 = 1e-9;

/// Relative threshold on |Re a ∧ Im a| below which the real and imaginary
/// parts of a vector parameter count as linearly dependent (the commuting
/// branch of the polar decomposition and the axis-fallback tail rule).
pub const PARALLEL_TOL: f64 = 1e-10;

/// Hermitian norm below which a turn's vector invariant counts as trivial
/// (element is ±1 up to that size); composition with such a factor is done
/// algebraically since no meet can exist.
pub const TRIVIAL_TOL: f64 = 1e-4;

/// Intermediate meets in the factorized composition path must clear the
/// meet threshold with this safety factor.
pub const SWEEP_MARGIN: f64 = 10.0;
