//! Rational polyhedral fans given by primitive rays and maximal cones.
//!
//! A maximal cone is recorded as the set of *all* rays of the fan that lie in
//! it. In a fan the intersection of two cones is a common face, and the rays
//! of a face are exactly the fan rays it contains, so intersections are plain
//! set intersections of ray indices.
//!
//! Only structural properties are checked here. Strong convexity and the
//! face-intersection axiom need linear programming and are the caller's
//! responsibility.

mod io;
mod standard;

pub use io::{parse_fan, parse_fan_unchecked, to_json, ParseOptions};
pub use standard::{standard_fan, GENERATORS};

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::intlinalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("ray {ray} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        ray: usize,
        expected: usize,
        found: usize,
    },
    #[error("ray {ray} is the zero vector")]
    ZeroRay { ray: usize },
    #[error("ray {ray} is not primitive (gcd of coordinates is {gcd})")]
    NonPrimitiveRay { ray: usize, gcd: BigInt },
    #[error("cone {cone} refers to ray {index}, but the fan has {rays} rays")]
    IndexOutOfRange {
        cone: usize,
        index: usize,
        rays: usize,
    },
    #[error("cone {cone} lists ray {index} more than once")]
    DuplicateIndex { cone: usize, index: usize },
    #[error("rays {first} and {second} are equal")]
    DuplicateRay { first: usize, second: usize },
    #[error("the list of maximal cones is empty")]
    EmptyConesList,
    #[error("cone {cone} is contained in cone {contained_in} and is not maximal")]
    NonMaximalCone { cone: usize, contained_in: usize },
    #[error("ray {ray} does not belong to any maximal cone")]
    UnusedRay { ray: usize },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("lattice map must be a unimodular {expected}x{expected} matrix")]
    NotUnimodular { expected: usize },
}

/// Primitive nonzero lattice vector spanning a ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RayVector(Vec<BigInt>);

fn content(coords: &[BigInt]) -> BigInt {
    coords.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

impl RayVector {
    /// Fails unless `coords` is nonzero and primitive. The error carries ray
    /// index 0; callers that know the index rewrite it.
    pub fn new(coords: Vec<BigInt>) -> Result<Self, FanError> {
        let g = content(&coords);
        if g.is_zero() {
            Err(FanError::ZeroRay { ray: 0 })
        } else if !g.is_one() {
            Err(FanError::NonPrimitiveRay { ray: 0, gcd: g })
        } else {
            Ok(RayVector(coords))
        }
    }

    /// Divides by the gcd of the coordinates.
    pub fn normalized(coords: Vec<BigInt>) -> Result<Self, FanError> {
        let g = content(&coords);
        if g.is_zero() {
            return Err(FanError::ZeroRay { ray: 0 });
        }
        Ok(RayVector(coords.into_iter().map(|c| c / &g).collect()))
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self, FanError> {
        Self::new(coords.iter().copied().map(BigInt::from).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

/// Cone given by a strictly increasing list of ray indices. The empty list
/// is the zero cone `{0}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone(Vec<usize>);

impl Cone {
    /// Sorts the indices; fails on a repeated index (reported as cone 0).
    pub fn new(mut indices: Vec<usize>) -> Result<Self, FanError> {
        indices.sort_unstable();
        if let Some(w) = indices.windows(2).find(|w| w[0] == w[1]) {
            return Err(FanError::DuplicateIndex {
                cone: 0,
                index: w[0],
            });
        }
        Ok(Cone(indices))
    }

    pub fn zero() -> Self {
        Cone(Vec::new())
    }

    pub fn ray_indices(&self) -> &[usize] {
        &self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_ray(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &Cone) -> bool {
        self.0.iter().all(|i| other.contains_ray(*i))
    }

    /// Common face of two cones of the same fan.
    pub fn intersection(&self, other: &Cone) -> Cone {
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        let mut out = Vec::new();
        while let (Some(&&x), Some(&&y)) = (a.peek(), b.peek()) {
            match x.cmp(&y) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => {
                    out.push(x);
                    a.next();
                    b.next();
                }
            }
        }
        Cone(out)
    }
}

pub fn cone_intersection(a: &Cone, b: &Cone) -> Cone {
    a.intersection(b)
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Fan on `N_R = R^rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    rays: Vec<RayVector>,
    max_cones: Vec<Cone>,
}

impl Fan {
    /// Builds a fan, rejecting the first structural violation.
    pub fn new(rank: usize, rays: Vec<RayVector>, max_cones: Vec<Cone>) -> Result<Self, FanError> {
        let fan = Self::new_unchecked(rank, rays, max_cones);
        match validate_fan(&fan).iter().find_map(Finding::to_error) {
            Some(e) => Err(e),
            None => Ok(fan),
        }
    }

    /// Builds a fan without structural checks; see [`validate_fan`].
    pub fn new_unchecked(rank: usize, rays: Vec<RayVector>, max_cones: Vec<Cone>) -> Self {
        Fan {
            rank,
            rays,
            max_cones,
        }
    }

    /// Convenience constructor from small integer data.
    pub fn from_i64(
        rank: usize,
        rays: &[&[i64]],
        max_cones: &[&[usize]],
    ) -> Result<Self, FanError> {
        let rays = rays
            .iter()
            .enumerate()
            .map(|(i, r)| RayVector::from_i64(r).map_err(|e| with_ray_index(e, i)))
            .collect::<Result<Vec<_>, _>>()?;
        let cones = max_cones
            .iter()
            .enumerate()
            .map(|(k, c)| Cone::new(c.to_vec()).map_err(|e| with_cone_index(e, k)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(rank, rays, cones)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[RayVector] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    /// `rank × n` matrix whose columns are the ray generators of `cone`.
    pub fn cone_matrix(&self, cone: &Cone) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = cone
            .ray_indices()
            .iter()
            .map(|&i| self.rays[i].coords().to_vec())
            .collect();
        IntMatrix::from_columns(self.rank, &cols)
    }

    /// `rank × n` matrix with all ray generators as columns.
    pub fn ray_matrix(&self) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = self.rays.iter().map(|r| r.coords().to_vec()).collect();
        IntMatrix::from_columns(self.rank, &cols)
    }

    /// Renumbers rays and cones: ray `i` becomes ray `ray_perm[i]` and cone
    /// `k` becomes cone `cone_perm[k]`.
    pub fn relabeled(&self, ray_perm: &[usize], cone_perm: &[usize]) -> Fan {
        assert_eq!(ray_perm.len(), self.rays.len());
        assert_eq!(cone_perm.len(), self.max_cones.len());
        let mut rays = vec![None; self.rays.len()];
        for (i, r) in self.rays.iter().enumerate() {
            rays[ray_perm[i]] = Some(r.clone());
        }
        let mut cones = vec![None; self.max_cones.len()];
        for (k, c) in self.max_cones.iter().enumerate() {
            let idx = c.ray_indices().iter().map(|&i| ray_perm[i]).collect();
            cones[cone_perm[k]] = Some(Cone::new(idx).expect("permutation keeps indices distinct"));
        }
        Fan {
            rank: self.rank,
            rays: rays
                .into_iter()
                .map(|r| r.expect("ray_perm is a permutation"))
                .collect(),
            max_cones: cones
                .into_iter()
                .map(|c| c.expect("cone_perm is a permutation"))
                .collect(),
        }
    }

    /// Image of the fan under a lattice automorphism `u` (`η ↦ u·η`).
    pub fn transformed(&self, u: &IntMatrix) -> Result<Fan, FanError> {
        if u.shape() != (self.rank, self.rank) || !u.is_unimodular() {
            return Err(FanError::NotUnimodular {
                expected: self.rank,
            });
        }
        let image = u * &self.ray_matrix();
        let rays = image
            .columns()
            .map(|c| RayVector::new(c).expect("unimodular maps preserve primitivity"))
            .collect();
        Ok(Fan {
            rank: self.rank,
            rays,
            max_cones: self.max_cones.clone(),
        })
    }
}

pub(crate) fn with_ray_index(e: FanError, ray: usize) -> FanError {
    match e {
        FanError::ZeroRay { .. } => FanError::ZeroRay { ray },
        FanError::NonPrimitiveRay { gcd, .. } => FanError::NonPrimitiveRay { ray, gcd },
        other => other,
    }
}

pub(crate) fn with_cone_index(e: FanError, cone: usize) -> FanError {
    match e {
        FanError::DuplicateIndex { index, .. } => FanError::DuplicateIndex { cone, index },
        other => other,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    /// Breaks a structural invariant; the fan cannot be used.
    Violation,
    /// Informational only.
    Advisory,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding {
    DimensionMismatch {
        ray: usize,
        expected: usize,
        found: usize,
    },
    IndexOutOfRange {
        cone: usize,
        index: usize,
        rays: usize,
    },
    EmptyConesList,
    DuplicateRay {
        first: usize,
        second: usize,
    },
    UnusedRay {
        ray: usize,
    },
    NonMaximalCone {
        cone: usize,
        contained_in: usize,
    },
    /// The listed rays of the cone are linearly dependent.
    NonSimplicial {
        cone: usize,
        rays: usize,
        span_rank: usize,
    },
}

impl Finding {
    pub fn severity(&self) -> Severity {
        match self {
            Finding::NonSimplicial { .. } => Severity::Advisory,
            _ => Severity::Violation,
        }
    }

    pub fn is_violation(&self) -> bool {
        self.severity() == Severity::Violation
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finding::NonSimplicial { cone, rays, span_rank } => write!(
                f,
                "advisory: cone {cone} is not simplicial ({rays} rays spanning a rank {span_rank} sublattice)"
            ),
            other => match other.to_error() {
                Some(e) => write!(f, "violation: {e}"),
                None => Ok(()),
            },
        }
    }
}

impl Finding {
    /// The error a violation stands for; `None` for advisories.
    pub fn to_error(&self) -> Option<FanError> {
        Some(match self.clone() {
            Finding::DimensionMismatch {
                ray,
                expected,
                found,
            } => FanError::DimensionMismatch {
                ray,
                expected,
                found,
            },
            Finding::IndexOutOfRange { cone, index, rays } => {
                FanError::IndexOutOfRange { cone, index, rays }
            }
            Finding::EmptyConesList => FanError::EmptyConesList,
            Finding::DuplicateRay { first, second } => FanError::DuplicateRay { first, second },
            Finding::UnusedRay { ray } => FanError::UnusedRay { ray },
            Finding::NonMaximalCone { cone, contained_in } => {
                FanError::NonMaximalCone { cone, contained_in }
            }
            Finding::NonSimplicial { .. } => return None,
        })
    }
}

/// Structural violations first, then advisories.
pub fn validate_fan(fan: &Fan) -> Vec<Finding> {
    let mut findings = Vec::new();
    let n = fan.rays.len();

    for (i, r) in fan.rays.iter().enumerate() {
        if r.dim() != fan.rank {
            findings.push(Finding::DimensionMismatch {
                ray: i,
                expected: fan.rank,
                found: r.dim(),
            });
        }
    }
    for (k, c) in fan.max_cones.iter().enumerate() {
        for &index in c.ray_indices().iter().filter(|&&i| i >= n) {
            findings.push(Finding::IndexOutOfRange {
                cone: k,
                index,
                rays: n,
            });
        }
    }
    if fan.max_cones.is_empty() {
        findings.push(Finding::EmptyConesList);
    }

    let mut seen: HashMap<&RayVector, usize> = HashMap::new();
    for (i, r) in fan.rays.iter().enumerate() {
        if let Some(&first) = seen.get(r) {
            findings.push(Finding::DuplicateRay { first, second: i });
        } else {
            seen.insert(r, i);
        }
    }

    let mut used = vec![false; n];
    for c in &fan.max_cones {
        for &i in c.ray_indices().iter().filter(|&&i| i < n) {
            used[i] = true;
        }
    }
    findings.extend(
        (0..n)
            .filter(|&i| !used[i])
            .map(|ray| Finding::UnusedRay { ray }),
    );

    for (k, c) in fan.max_cones.iter().enumerate() {
        let container = fan
            .max_cones
            .iter()
            .enumerate()
            .find(|&(j, d)| j != k && c.is_subset(d) && (c != d || j < k));
        if let Some((j, _)) = container {
            findings.push(Finding::NonMaximalCone {
                cone: k,
                contained_in: j,
            });
        }
    }

    let structurally_sound = findings.is_empty();
    if structurally_sound {
        for (k, c) in fan.max_cones.iter().enumerate() {
            let span_rank = fan.cone_matrix(c).rational_rank();
            if span_rank < c.len() {
                findings.push(Finding::NonSimplicial {
                    cone: k,
                    rays: c.len(),
                    span_rank,
                });
            }
        }
    }
    findings
}
