use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{smith_normal_form, IntMatrix, LinalgError};
use crate::bigint_serde;

/// Finitely generated abelian group `Z^rank ⊕ Z/t₁ ⊕ … ⊕ Z/t_k` with
/// `2 ≤ t₁ | t₂ | … | t_k`. The representation is unique, so equality of
/// values is isomorphism of groups.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGroup", into = "RawGroup")]
pub struct FinAbGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FinAbGroup {
    /// Validates an invariant-factor description.
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Result<Self, LinalgError> {
        for (i, t) in torsion.iter().enumerate() {
            let bad = *t < BigInt::from(2) || (i > 0 && !t.is_multiple_of(&torsion[i - 1]));
            if bad {
                return Err(LinalgError::InvalidTorsion(t.clone()));
            }
        }
        Ok(FinAbGroup { free_rank, torsion })
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// From the positive invariants of a Smith form: unit entries are dropped.
    pub(crate) fn from_smith_invariants(free_rank: usize, invariants: &[BigInt]) -> Self {
        FinAbGroup {
            free_rank,
            torsion: invariants.iter().filter(|d| !d.is_one()).cloned().collect(),
        }
    }

    /// `⊕ Z/nᵢ` for arbitrary orders, normalized. An order of 0 contributes a
    /// free summand; orders of ±1 contribute nothing.
    pub fn from_cyclic_orders<'a>(orders: impl IntoIterator<Item = &'a BigInt>) -> Self {
        let orders: Vec<BigInt> = orders.into_iter().map(|o| o.abs()).collect();
        let diag = IntMatrix::diagonal(orders.len(), orders.len(), &orders);
        let f = smith_normal_form(&diag);
        Self::from_smith_invariants(orders.len() - f.rank(), &f.invariants)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut g = Self::from_cyclic_orders(self.torsion.iter().chain(&other.torsion));
        g.free_rank = self.free_rank + other.free_rank;
        g
    }
}

/// Writes `Z^a (+) Z/d₁ (+) … (+) (Q/Z)^q`, omitting trivial factors, or `0`.
pub(crate) fn write_group(
    f: &mut fmt::Formatter<'_>,
    free_rank: usize,
    torsion: &[BigInt],
    qz: usize,
) -> fmt::Result {
    let mut parts = Vec::new();
    match free_rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        a => parts.push(format!("Z^{a}")),
    }
    parts.extend(torsion.iter().map(|t| format!("Z/{t}")));
    match qz {
        0 => {}
        1 => parts.push("Q/Z".to_string()),
        q => parts.push(format!("(Q/Z)^{q}")),
    }
    if parts.is_empty() {
        f.write_str("0")
    } else {
        f.write_str(&parts.join(" (+) "))
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_group(f, self.free_rank, &self.torsion, 0)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    rank: usize,
    #[serde(with = "bigint_serde::vec")]
    torsion: Vec<BigInt>,
}

impl TryFrom<RawGroup> for FinAbGroup {
    type Error = LinalgError;

    fn try_from(raw: RawGroup) -> Result<Self, Self::Error> {
        FinAbGroup::new(raw.rank, raw.torsion)
    }
}

impl From<FinAbGroup> for RawGroup {
    fn from(g: FinAbGroup) -> Self {
        RawGroup {
            rank: g.free_rank,
            torsion: g.torsion,
        }
    }
}
