//! Turns: equivalence classes of ordered pairs of complex unit vectors.
//!
//! A pair (x̂, ŷ) represents the element S(x̂, ŷ) = x̂·ŷ - i (x̂∧ŷ)·σ.
//! Two pairs represent the same element iff both derived invariants
//! x̂·ŷ and x̂∧ŷ agree; representatives slide freely in their carrier
//! plane (the plane orthogonal to x̂∧ŷ). Composition is the parallelogram
//! law: slide both factors so the head of the first meets the tail of the
//! second at the common point of the two carriers, then read off the free
//! tail and free head. When the carriers fail to intersect in the orbit of
//! unit vectors (a measure zero set), one factor is split in two so the law
//! can be applied twice.

use num_complex::Complex64;

use crate::calg::{rdot, rnorm, rscale, rsub, CVec3, UnitCVec3};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::tol;

/// A directed turn from `tail` to `head`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Turn {
    pub tail: UnitCVec3,
    pub head: UnitCVec3,
}

/// Which route `compose` took.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositionPath {
    /// The generic parallelogram law at the meet of the two carriers.
    Geometric,
    /// Non-intersecting carriers: one factor was factorized and the
    /// parallelogram law applied twice.
    DegenerateFactorized,
    /// A factor was trivial (element ±1 up to numerical size): the product
    /// was formed algebraically and re-expressed as a turn.
    Algebraic,
}

/// Result of a composition, tagged with the path that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Composition {
    pub turn: Turn,
    pub path: CompositionPath,
}

impl Turn {
    pub fn new(tail: UnitCVec3, head: UnitCVec3) -> Self {
        Turn { tail, head }
    }

    /// The scalar invariant a0 = tail·head.
    pub fn scalar_invariant(&self) -> Complex64 {
        self.tail.dot(&self.head)
    }

    /// The vector invariant a = tail∧head.
    pub fn vector_invariant(&self) -> CVec3 {
        self.tail.wedge(&self.head)
    }

    /// The group element S = (tail·head) - i (tail∧head)·σ. Satisfies the
    /// unit-determinant constraint identically.
    pub fn element(&self) -> GroupElement {
        GroupElement::new_unchecked(self.scalar_invariant(), self.vector_invariant())
    }

    /// The canonical representative of the turn of S.
    ///
    /// The tail is always real, chosen deterministically: for a = 0 it is
    /// e1; when Re a and Im a span a plane it is their normalized cross
    /// product (re-orthogonalized against both); when they are parallel the
    /// tail is the first orthonormal complement of the common real axis.
    /// The head is then fixed by head = a0·tail + a∧tail.
    pub fn from_element(s: &GroupElement) -> Turn {
        let a0 = s.a0();
        let a = s.a();
        let tail = canonical_tail(&a);
        let head = tail * a0 + a.wedge(&tail);
        Turn {
            tail: UnitCVec3::new_unchecked(tail),
            head: UnitCVec3::new_unchecked(head),
        }
    }

    /// True iff both derived invariants agree within the equivalence
    /// tolerance.
    pub fn is_equivalent_to(&self, other: &Turn) -> bool {
        let da0 = (self.scalar_invariant() - other.scalar_invariant()).norm();
        let da = self.vector_invariant().max_diff(&other.vector_invariant());
        da0 <= tol::EQUIV_TOL && da <= tol::EQUIV_TOL
    }

    /// Slides the representative along its carrier to a new tail.
    ///
    /// The new tail must lie in the carrier plane: new_tail·a = 0.
    pub fn slide(&self, new_tail: &UnitCVec3) -> Result<Turn> {
        let a = self.vector_invariant();
        let residual = new_tail.dot(&a).norm();
        if residual > tol::TAIL_TOL {
            return Err(Error::TailNotAdmissible { residual });
        }
        let a0 = self.scalar_invariant();
        let head = new_tail.vec() * a0 + a.wedge(new_tail);
        Ok(Turn {
            tail: *new_tail,
            head: UnitCVec3::new_unchecked(head),
        })
    }

    /// The inverse turn: reversing the sense swaps tail and head.
    pub fn reversed(&self) -> Turn {
        Turn {
            tail: self.head,
            head: self.tail,
        }
    }
}

fn canonical_tail(a: &CVec3) -> CVec3 {
    let a_norm = a.norm_h();
    if a_norm < 1e-30 {
        return CVec3::E1;
    }
    let ar = a.re();
    let ai = a.im();
    let nr = rnorm(ar);
    let ni = rnorm(ai);
    let cross = crate::calg::rcross(ar, ai);
    if rnorm(cross) >= tol::PARALLEL_TOL * (nr * ni + 1e-300) {
        // Generic case: tail ⊥ both parts. One Gram-Schmidt pass against the
        // spanning pair keeps the orthogonality sharp when they are nearly
        // parallel.
        let rhat = rscale(ar, 1.0 / nr);
        let mut c = rsub(cross, rscale(rhat, rdot(cross, rhat)));
        let iperp = rsub(ai, rscale(rhat, rdot(ai, rhat)));
        let niperp = rnorm(iperp);
        if niperp > 1e-300 {
            let ihat = rscale(iperp, 1.0 / niperp);
            c = rsub(c, rscale(ihat, rdot(c, ihat)));
        }
        CVec3::from_real(rscale(c, 1.0 / rnorm(c)))
    } else {
        // Re a ∥ Im a: the carrier axis is real; fall back to its
        // deterministic complement.
        let axis = if nr >= ni {
            rscale(ar, 1.0 / nr)
        } else {
            rscale(ai, 1.0 / ni)
        };
        let (p, _) = CVec3::from_real(axis)
            .orthonormal_complement()
            .expect("axis is unit by construction");
        p
    }
}

/// The common unit vector of two turns' carriers, if it exists.
///
/// With a, b the vector invariants of `first` and `second`, the meet is the
/// normalization of a∧b, defined iff |(a∧b)·(a∧b)| clears the meet
/// tolerance. The sign is fixed deterministically: the first component with
/// Hermitian modulus ≥ 1e-6 gets a complex argument in (-π/2, π/2].
pub fn meet(first: &Turn, second: &Turn) -> Option<UnitCVec3> {
    meet_vectors(
        &first.vector_invariant(),
        &second.vector_invariant(),
        tol::MEET_TOL,
    )
}

fn meet_vectors(a: &CVec3, b: &CVec3, threshold: f64) -> Option<UnitCVec3> {
    let w = a.wedge(b);
    let ww = w.dot(&w);
    if ww.norm() < threshold {
        return None;
    }
    let mut z = w * ww.sqrt().inv();
    for k in 0..3 {
        if z.0[k].norm() >= 1e-6 {
            let arg = z.0[k].arg();
            if !(arg > -std::f64::consts::FRAC_PI_2 && arg <= std::f64::consts::FRAC_PI_2) {
                z = -z;
            }
            break;
        }
    }
    Some(UnitCVec3::new_unchecked(z))
}

/// Parallelogram-law product: the turn of S(second)·S(first).
///
/// Path A (geometric): slide `first` so its head sits at the meet ẑ of the
/// two carriers and `second` so its tail does; the product runs from the
/// free tail to the free head. Path B (degenerate): when the carriers do
/// not meet, split `second` as second″∘second′ with second′ a π/2 rotation
/// about a swept axis chosen so both intermediate meets exist, and apply
/// Path A twice. When either factor is numerically ±1 no carrier geometry
/// exists at all; the product is then formed algebraically.
pub fn compose(second: &Turn, first: &Turn) -> Result<Composition> {
    let a = first.vector_invariant();
    let b = second.vector_invariant();

    if a.norm_h() <= tol::TRIVIAL_TOL || b.norm_h() <= tol::TRIVIAL_TOL {
        let product = second.element().multiply(&first.element());
        return Ok(Composition {
            turn: Turn::from_element(&product),
            path: CompositionPath::Algebraic,
        });
    }

    if let Some(turn) = path_a(second, first, tol::MEET_TOL) {
        return Ok(Composition {
            turn,
            path: CompositionPath::Geometric,
        });
    }

    match path_b(second, first)? {
        Some(turn) => Ok(Composition {
            turn,
            path: CompositionPath::DegenerateFactorized,
        }),
        None => {
            let product = second.element().multiply(&first.element());
            Ok(Composition {
                turn: Turn::from_element(&product),
                path: CompositionPath::Algebraic,
            })
        }
    }
}

fn path_a(second: &Turn, first: &Turn, threshold: f64) -> Option<Turn> {
    let a0 = first.scalar_invariant();
    let a = first.vector_invariant();
    let b0 = second.scalar_invariant();
    let b = second.vector_invariant();
    let z = meet_vectors(&a, &b, threshold)?;
    // Representative of `first` with head ẑ, and of `second` with tail ẑ.
    let free_tail = z.vec() * a0 - a.wedge(&z);
    let free_head = z.vec() * b0 + b.wedge(&z);
    Some(Turn {
        tail: UnitCVec3::new_unchecked(free_tail),
        head: UnitCVec3::new_unchecked(free_head),
    })
}

/// Deterministic sweep order for the factorization axis: signed coordinate
/// axes first, then the twelve face diagonals.
const SWEEP_AXES: [[f64; 3]; 18] = {
    const D: f64 = std::f64::consts::FRAC_1_SQRT_2;
    [
        [1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
        [D, D, 0.0],
        [D, -D, 0.0],
        [-D, D, 0.0],
        [-D, -D, 0.0],
        [D, 0.0, D],
        [D, 0.0, -D],
        [-D, 0.0, D],
        [-D, 0.0, -D],
        [0.0, D, D],
        [0.0, D, -D],
        [0.0, -D, D],
        [0.0, -D, -D],
    ]
};

fn path_b(second: &Turn, first: &Turn) -> Result<Option<Turn>> {
    let s1 = first.element();
    let s2 = second.element();
    let margin = tol::SWEEP_MARGIN * tol::MEET_TOL;

    // When the product itself is central (an inverse-like pair), no
    // factorization can help: the last parallelogram step is again an
    // inverse pair whatever the split. The caller handles it algebraically.
    if s2.multiply(&s1).a().norm_h() <= tol::TRIVIAL_TOL {
        return Ok(None);
    }

    for axis in &SWEEP_AXES {
        let axis = CVec3::from_real(*axis);
        let r = GroupElement::rotation(std::f64::consts::FRAC_PI_2, &axis)
            .expect("sweep axes are real unit vectors");
        let r_turn = Turn::from_element(&r);

        // Split the left factor: second·first = (second·r⁻¹)·(r·first).
        if let Some(intermediate) = path_a(&r_turn, first, margin) {
            let remainder = Turn::from_element(&s2.multiply(&r.inverse()));
            if let Some(result) = path_a(&remainder, &intermediate, margin) {
                return Ok(Some(result));
            }
        }

        // Mirrored split of the right factor:
        // second·first = (second·first·r⁻¹)·r.
        let remainder = Turn::from_element(&s1.multiply(&r.inverse()));
        if let Some(intermediate) = path_a(second, &remainder, margin) {
            if let Some(result) = path_a(&intermediate, &r_turn, margin) {
                return Ok(Some(result));
            }
        }
    }
    Err(Error::DegenerateCompositionFailure)
}
