use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bigint_serde;
use crate::fan::{Cone, Fan};
use crate::intlinalg::{
    cokernel, homology, invariant_factors, smith_normal_form, FinAbGroup, IntMatrix,
};

use super::cech::{build_cech, build_cech_with, CechComplex};
use super::{l_basis, ToricError};

/// `(Q/Z)^qz ⊕ Z/t₁ ⊕ … ⊕ Z/t_k`, torsion in invariant-factor form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BrauerGroup {
    pub qz: usize,
    #[serde(with = "bigint_serde::vec")]
    pub torsion: Vec<BigInt>,
}

impl BrauerGroup {
    pub fn is_trivial(&self) -> bool {
        self.qz == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for BrauerGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::intlinalg::write_group(f, 0, &self.torsion, self.qz)
    }
}

/// `H²(X, G_m)`: a free part may a priori come from `H²(K/X, G_m)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct H2Group {
    pub qz: usize,
    pub rank: usize,
    #[serde(with = "bigint_serde::vec")]
    pub torsion: Vec<BigInt>,
}

impl H2Group {
    /// Direct sum of the relative and desingularization parts; the exact
    /// sequence joining them splits.
    pub fn assemble(relative: &FinAbGroup, desing: &BrauerGroup) -> Self {
        let finite =
            FinAbGroup::from_cyclic_orders(relative.torsion().iter().chain(&desing.torsion));
        H2Group {
            qz: desing.qz,
            rank: relative.free_rank(),
            torsion: finite.torsion().to_vec(),
        }
    }
}

impl fmt::Display for H2Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::intlinalg::write_group(f, self.rank, &self.torsion, self.qz)
    }
}

/// Units, class group, Picard group and both parts of the cohomological
/// Brauer group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohomologyReport {
    /// `H⁰(X, G_m) = k* × Z^units_rank`.
    pub units_rank: usize,
    pub class_group: FinAbGroup,
    pub picard: FinAbGroup,
    pub relative_brauer: FinAbGroup,
    pub desing_brauer: BrauerGroup,
    pub h2: H2Group,
}

/// Cokernel of `M → ⊕ Z·ρᵢ`, whose matrix has the ray generators as rows.
pub fn class_group(fan: &Fan) -> FinAbGroup {
    cokernel(&fan.ray_matrix().transpose())
}

fn units_rank_of(cech: &CechComplex) -> usize {
    cech.lattice_rank() - smith_normal_form(cech.phi()).rank()
}

fn picard_of(cech: &CechComplex) -> Result<FinAbGroup, ToricError> {
    homology(cech.phi(), cech.delta0()).map_err(inconsistent)
}

fn relative_of(cech: &CechComplex) -> Result<FinAbGroup, ToricError> {
    homology(cech.delta0(), cech.delta1()).map_err(inconsistent)
}

fn inconsistent(e: crate::intlinalg::LinalgError) -> ToricError {
    ToricError::InternalInconsistency(e.to_string())
}

/// Rank of the group of unit characters `ker(M → ⊕ L(Δ(σᵢ)))`.
pub fn units_rank(fan: &Fan) -> Result<usize, ToricError> {
    Ok(units_rank_of(&build_cech(fan)?))
}

/// `SF(Δ) / im M = ker δ⁰ / im φ`.
pub fn picard_group(fan: &Fan) -> Result<FinAbGroup, ToricError> {
    picard_of(&build_cech(fan)?)
}

/// `H²(K/X, G_m) = ker δ¹ / im δ⁰`.
pub fn relative_brauer(fan: &Fan) -> Result<FinAbGroup, ToricError> {
    relative_of(&build_cech(fan)?)
}

pub fn desing_brauer(fan: &Fan) -> BrauerGroup {
    desing_brauer_with(fan, &mut |_, b| b)
}

/// Brauer group of an equivariant desingularization. With `a₁, …, a_r` the
/// invariant factors (zero-padded to length `r`) of the matrix holding every
/// maximal cone's L-basis, it is `⊕_{i<r} Hom(Z/aᵢ, Q/Z)^{r−i}`, where the
/// Hom is `0`, `Z/aᵢ` or `Q/Z` as `aᵢ` is `1`, `> 1` or `0`.
pub fn desing_brauer_with(
    fan: &Fan,
    rebase: &mut dyn FnMut(&Cone, IntMatrix) -> IntMatrix,
) -> BrauerGroup {
    let r = fan.rank();
    let bases: Vec<IntMatrix> = fan
        .max_cones()
        .iter()
        .map(|c| rebase(c, l_basis(fan, c).basis))
        .collect();
    let refs: Vec<&IntMatrix> = bases.iter().collect();
    let union = IntMatrix::hstack(r, &refs);
    let a = invariant_factors(&union, r).expect("at most r invariants for r rows");
    brauer_from_invariants(&a)
}

fn brauer_from_invariants(a: &[BigInt]) -> BrauerGroup {
    let r = a.len();
    let mut qz = 0;
    let mut orders = Vec::new();
    for (i, ai) in a.iter().enumerate().take(r.saturating_sub(1)) {
        let exponent = r - (i + 1);
        if ai.is_zero() {
            qz += exponent;
        } else if !ai.is_one() {
            orders.extend(std::iter::repeat_n(ai.clone(), exponent));
        }
    }
    BrauerGroup {
        qz,
        torsion: FinAbGroup::from_cyclic_orders(&orders).torsion().to_vec(),
    }
}

pub fn cohomological_brauer(fan: &Fan) -> Result<CohomologyReport, ToricError> {
    cohomological_brauer_with(fan, &mut |_, b| b)
}

/// As [`cohomological_brauer`], with every L-basis passed through `rebase`
/// (see [`build_cech_with`]).
pub fn cohomological_brauer_with(
    fan: &Fan,
    rebase: &mut dyn FnMut(&Cone, IntMatrix) -> IntMatrix,
) -> Result<CohomologyReport, ToricError> {
    let cech = build_cech_with(fan, rebase)?;
    let relative_brauer = relative_of(&cech)?;
    let desing_brauer = desing_brauer_with(fan, rebase);
    let h2 = H2Group::assemble(&relative_brauer, &desing_brauer);
    Ok(CohomologyReport {
        units_rank: units_rank_of(&cech),
        class_group: class_group(fan),
        picard: picard_of(&cech)?,
        relative_brauer,
        desing_brauer,
        h2,
    })
}
