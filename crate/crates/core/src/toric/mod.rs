//! Cohomology of the units sheaf on a toric variety, computed from its fan.
//!
//! For a cone `σ` let `L(σ)` be a basis of the saturated sublattice
//! `N ∩ R·σ`. Dual groups are written in coordinates dual to these bases,
//! so the restriction `L(Δ(σ)) → L(Δ(τ))` for a face `τ ⊆ σ` is the
//! transpose of the coordinate matrix of `L(τ)` in `L(σ)`. The Čech complex
//! of those restrictions over the maximal cones gives
//!
//! * `Pic(X) = ker δ⁰ / im(M → C⁰)`,
//! * the unit characters `ker(M → C⁰)`,
//! * the relative Brauer group `H²(K/X, G_m) = ker δ¹ / im δ⁰`,
//!
//! while the class group is a cokernel of the ray matrix and the Brauer group
//! of a desingularization depends only on the invariant factors of the
//! union of the `L(σ)`.

mod cech;
mod groups;

pub use cech::{build_cech, build_cech_with, CechComplex};
pub use groups::{
    class_group, cohomological_brauer, cohomological_brauer_with, desing_brauer,
    desing_brauer_with, picard_group, relative_brauer, units_rank, BrauerGroup, CohomologyReport,
    H2Group,
};

use thiserror::Error;

use crate::fan::{Cone, Fan};
use crate::intlinalg::{coordinates_in_basis, saturation_basis, IntMatrix, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    /// A Čech composition did not vanish or a restriction could not be
    /// expressed; this means the fan (or an injected basis) is inconsistent.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// Basis of `N ∩ R·σ` for a cone `σ`, as the columns of an `r × s` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LBasis {
    pub cone: Cone,
    pub basis: IntMatrix,
}

impl LBasis {
    pub fn rank(&self) -> usize {
        self.basis.cols()
    }
}

pub fn l_basis(fan: &Fan, cone: &Cone) -> LBasis {
    LBasis {
        cone: cone.clone(),
        basis: saturation_basis(&fan.cone_matrix(cone)),
    }
}

/// Matrix of the dual projection `L(Δ(big)) → L(Δ(small))`: the transpose of
/// the coordinates of `small.basis` in `big.basis`.
pub fn restriction_matrix(big: &LBasis, small: &LBasis) -> Result<IntMatrix, LinalgError> {
    Ok(coordinates_in_basis(&big.basis, &small.basis)?.transpose())
}
