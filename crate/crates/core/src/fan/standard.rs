//! Generators for a small corpus of well-known fans.

use num_bigint::BigInt;
use num_integer::Integer;

use super::{Cone, Fan, FanError, RayVector};
use crate::intlinalg::{smith_normal_form, IntMatrix};

/// Generator names accepted by [`standard_fan`], with their parameters.
pub const GENERATORS: &[(&str, &str)] = &[
    ("projective", "r"),
    ("torus", "r"),
    ("affine_plane", ""),
    ("quotient_cone", "a b"),
    ("hirzebruch", "a"),
    ("weighted", "w0 w1 w2"),
    ("product-of-two-projective-lines", ""),
];

pub fn standard_fan(name: &str, params: &[i64]) -> Result<Fan, FanError> {
    match name {
        "projective" => projective(count_param(name, params)?),
        "torus" => torus(count_param(name, params)?),
        "affine_plane" => {
            arity(name, params, 0)?;
            build(2, vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1]])
        }
        "quotient_cone" => {
            arity(name, params, 2)?;
            quotient_cone(params[0], params[1])
        }
        "hirzebruch" => {
            arity(name, params, 1)?;
            let a = params[0];
            build(
                2,
                vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]],
                vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
            )
        }
        "weighted" => {
            arity(name, params, 3)?;
            weighted([params[0], params[1], params[2]])
        }
        "product-of-two-projective-lines" | "p1xp1" => {
            arity(name, params, 0)?;
            build(
                2,
                vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
                vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]],
            )
        }
        other => Err(FanError::UnknownGenerator(other.to_string())),
    }
}

fn arity(name: &str, params: &[i64], n: usize) -> Result<(), FanError> {
    if params.len() != n {
        return Err(FanError::BadParams(format!(
            "{name} takes {n} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

fn count_param(name: &str, params: &[i64]) -> Result<usize, FanError> {
    arity(name, params, 1)?;
    usize::try_from(params[0]).map_err(|_| {
        FanError::BadParams(format!(
            "{name}: rank must be nonnegative, got {}",
            params[0]
        ))
    })
}

fn build(rank: usize, rays: Vec<Vec<i64>>, cones: Vec<Vec<usize>>) -> Result<Fan, FanError> {
    let rays = rays
        .iter()
        .map(|r| RayVector::from_i64(r))
        .collect::<Result<Vec<_>, _>>()?;
    let cones = cones
        .into_iter()
        .map(Cone::new)
        .collect::<Result<Vec<_>, _>>()?;
    Fan::new(rank, rays, cones)
}

fn unit(rank: usize, i: usize) -> Vec<i64> {
    (0..rank).map(|j| i64::from(i == j)).collect()
}

/// Rays `e₁, …, e_r, −(e₁ + … + e_r)`; maximal cones are all `r`-subsets.
fn projective(r: usize) -> Result<Fan, FanError> {
    let mut rays: Vec<Vec<i64>> = (0..r).map(|i| unit(r, i)).collect();
    if r > 0 {
        rays.push(vec![-1; r]);
    }
    let cones = if r == 0 {
        vec![vec![]]
    } else {
        // cone k omits ray k − 1 (mod r + 1), so P² lists [0,1], [1,2], [0,2]
        (0..=r)
            .map(|k| {
                let skip = (k + r) % (r + 1);
                (0..=r).filter(|&i| i != skip).collect()
            })
            .collect()
    };
    build(r, rays, cones)
}

fn torus(r: usize) -> Result<Fan, FanError> {
    build(r, vec![], vec![vec![]])
}

/// Two-dimensional cone spanned by `(1, 0)` and `(a, b)`; its class group is
/// `Z/b`.
fn quotient_cone(a: i64, b: i64) -> Result<Fan, FanError> {
    if b < 1 || a.gcd(&b) != 1 {
        return Err(FanError::BadParams(format!(
            "quotient_cone needs b >= 1 and gcd(a, b) = 1, got a = {a}, b = {b}"
        )));
    }
    build(2, vec![vec![1, 0], vec![a, b]], vec![vec![0, 1]])
}

/// Weighted projective plane `P(w₀, w₁, w₂)`. Ray `i` is the image of the
/// `i`-th unit vector in `Z³ / Z·(w₀, w₁, w₂)`, so `Σ wᵢ ηᵢ = 0`.
fn weighted(w: [i64; 3]) -> Result<Fan, FanError> {
    if w.iter().any(|&x| x < 1) {
        return Err(FanError::BadParams(format!(
            "weights must be positive, got {w:?}"
        )));
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if w[i].gcd(&w[j]) != 1 {
            return Err(FanError::BadParams(format!(
                "weights must be pairwise coprime, got {w:?}"
            )));
        }
    }
    let cones = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
    if let Some(k) = w.iter().position(|&x| x == 1) {
        // Unit weight k: the other two rays are the standard basis and
        // η_k = −Σ_{i≠k} wᵢ ηᵢ.
        let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
        let mut rays = vec![Vec::new(); 3];
        for (slot, &i) in others.iter().enumerate() {
            rays[i] = unit(2, slot);
        }
        rays[k] = others.iter().map(|&i| -w[i]).collect();
        return build(2, rays, cones);
    }
    let col = IntMatrix::from_rows(w.iter().map(|&x| vec![x]).collect());
    let f = smith_normal_form(&col);
    debug_assert_eq!(f.invariants, vec![BigInt::from(1)]);
    let quotient = f.left.row_range(1, 3);
    let rays = quotient
        .columns()
        .map(RayVector::new)
        .collect::<Result<Vec<_>, _>>()?;
    let cones = cones
        .into_iter()
        .map(Cone::new)
        .collect::<Result<Vec<_>, _>>()?;
    Fan::new(2, rays, cones)
}
