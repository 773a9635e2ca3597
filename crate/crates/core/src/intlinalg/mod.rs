//! Exact integer linear algebra.
//!
//! Everything the toric pipeline needs reduces to one diagonalization: the
//! Smith normal form `X·S·Y = diag(d₁, …, d_s, 0, …, 0)`. From it we read off
//! kernel lattices, saturations (smallest direct summands containing a
//! column span), coordinates in a summand basis, cokernels, and the homology
//! of a two-map segment `Z^l → Z^m → Z^n`.

mod group;
mod matrix;
mod smith;

pub(crate) use group::write_group;
pub use group::FinAbGroup;
pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, SmithForm};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("expected {rows}x{cols} = {} entries, found {found}", rows * cols)]
    EntryCount {
        rows: usize,
        cols: usize,
        found: usize,
    },
    #[error("cannot {op} a {}x{} matrix with a {}x{} matrix", left.0, left.1, right.0, right.1)]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {}x{}, expected square", .0.0, .0.1)]
    NotSquare((usize, usize)),
    #[error("column {column} is outside the rational span of the basis")]
    OutsideSpan { column: usize },
    #[error("column {column} lies in the rational span of the basis but not in its integer span")]
    NotInLattice { column: usize },
    #[error("composition B·A is nonzero, so im A is not contained in ker B")]
    CompositionNonzero,
    #[error("cannot pad {rank} invariant factors to length {pad_to}")]
    PadTooShort { rank: usize, pad_to: usize },
    #[error(
        "invalid torsion coefficient {0}: entries must be at least 2 and form a divisibility chain"
    )]
    InvalidTorsion(BigInt),
}

/// Invariant factors `d₁, …, d_s` followed by zeros up to length `pad_to`.
pub fn invariant_factors(s: &IntMatrix, pad_to: usize) -> Result<Vec<BigInt>, LinalgError> {
    let mut d = smith_normal_form(s).invariants;
    if d.len() > pad_to {
        return Err(LinalgError::PadTooShort {
            rank: d.len(),
            pad_to,
        });
    }
    d.resize(pad_to, BigInt::zero());
    Ok(d)
}

/// Basis of the kernel lattice `ker(S) ∩ Zⁿ`, as the columns of an
/// `n×(n−s)` matrix: the trailing columns of the right Smith transform.
pub fn kernel_basis(s: &IntMatrix) -> IntMatrix {
    let f = smith_normal_form(s);
    f.right.column_range(f.rank(), s.cols())
}

/// Basis of the smallest direct summand of `Z^m` containing the column span
/// of `S`, as the columns of an `m×s` matrix.
///
/// Column `i` is column `i` of `S·Y` divided by `dᵢ`, which equals column
/// `i` of `X⁻¹` without inverting `X`.
pub fn saturation_basis(s: &IntMatrix) -> IntMatrix {
    let f = smith_normal_form(s);
    let rank = f.rank();
    let sy = s * &f.right.column_range(0, rank);
    let mut out = sy;
    for (j, d) in f.invariants.iter().enumerate() {
        for i in 0..out.rows() {
            let (q, r) = out[(i, j)].div_rem(d);
            debug_assert!(r.is_zero());
            out[(i, j)] = q;
        }
    }
    out
}

/// Solves `B·C = A` for an integer matrix `C`.
///
/// `B` is normally a basis of a saturated summand, in which case `C` exists
/// whenever the columns of `A` lie in the rational span of `B`. For a
/// non-saturated `B` the division by its invariant factors may fail and
/// [`LinalgError::NotInLattice`] is returned.
pub fn coordinates_in_basis(b: &IntMatrix, a: &IntMatrix) -> Result<IntMatrix, LinalgError> {
    if b.rows() != a.rows() {
        return Err(LinalgError::ShapeMismatch {
            op: "express columns of",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let f = smith_normal_form(b);
    let rank = f.rank();
    // X·A = D·Y⁻¹·C, so the rows past the rank must vanish and the top rows
    // are Y⁻¹·C scaled row-wise by the invariants.
    let xa = &f.left * a;
    for j in 0..a.cols() {
        if (rank..xa.rows()).any(|i| !xa[(i, j)].is_zero()) {
            return Err(LinalgError::OutsideSpan { column: j });
        }
    }
    let mut top = xa.row_range(0, rank);
    for (i, d) in f.invariants.iter().enumerate() {
        for j in 0..top.cols() {
            let (q, r) = top[(i, j)].div_rem(d);
            if !r.is_zero() {
                return Err(LinalgError::NotInLattice { column: j });
            }
            top[(i, j)] = q;
        }
    }
    Ok(&f.right.column_range(0, rank) * &top)
}

/// `Z^m / colspan(S)` in invariant-factor form.
pub fn cokernel(s: &IntMatrix) -> FinAbGroup {
    let f = smith_normal_form(s);
    FinAbGroup::from_smith_invariants(s.rows() - f.rank(), &f.invariants)
}

/// `ker B / im A` for `A: Z^l → Z^m` and `B: Z^m → Zⁿ` with `B·A = 0`.
pub fn homology(a: &IntMatrix, b: &IntMatrix) -> Result<FinAbGroup, LinalgError> {
    let ba = b.try_mul(a)?;
    if !ba.is_zero() {
        return Err(LinalgError::CompositionNonzero);
    }
    let kernel = kernel_basis(b);
    let coords = coordinates_in_basis(&kernel, a)?;
    Ok(cokernel(&coords))
}
