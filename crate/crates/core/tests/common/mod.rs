//! Test-only oracles and generators. Nothing here calls the Smith reduction;
//! determinants are expanded over permutations and ranks come from the
//! separate fraction-free elimination in `IntMatrix::rational_rank`.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use toric_brauer::fan::{standard_fan, Cone, Fan, RayVector};
use toric_brauer::IntMatrix;

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().copied().map(BigInt::from).collect()
}

/// Determinant by expansion over all permutations (sizes ≤ 5 in practice).
pub fn leibniz_det(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = BigInt::zero();
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &IntMatrix, total: &mut BigInt) {
    let n = perm.len();
    if k == n {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut prod = BigInt::one();
        for (i, &p) in perm.iter().enumerate() {
            prod *= &m[(i, p)];
        }
        if inversions % 2 == 1 {
            prod = -prod;
        }
        *total += prod;
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all k×k minors of `m`.
pub fn minor_gcd(m: &IntMatrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in subsets(m.rows(), k) {
        for cols in subsets(m.cols(), k) {
            let mut sub = IntMatrix::zeros(k, k);
            for (a, &i) in rows.iter().enumerate() {
                for (b, &j) in cols.iter().enumerate() {
                    sub[(a, b)] = m[(i, j)].clone();
                }
            }
            g = g.gcd(&leibniz_det(&sub));
        }
    }
    g
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let entries = (0..rows * cols)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntMatrix::from_vec(rows, cols, entries).unwrap()
}

/// Random matrix of rank at most `rank`, as a product of two random factors.
pub fn random_low_rank(rng: &mut impl Rng, rows: usize, cols: usize, rank: usize) -> IntMatrix {
    let a = random_matrix(rng, rows, rank, 3);
    let b = random_matrix(rng, rank, cols, 3);
    &a * &b
}

/// Random unimodular matrix together with its inverse, built from elementary
/// operations whose inverses are known.
pub fn random_unimodular_pair(
    rng: &mut impl Rng,
    n: usize,
    steps: usize,
) -> (IntMatrix, IntMatrix) {
    let mut u = IntMatrix::identity(n);
    let mut inv = IntMatrix::identity(n);
    if n == 0 {
        return (u, inv);
    }
    for _ in 0..steps {
        match rng.gen_range(0..3) {
            0 if n > 1 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                let k = BigInt::from(rng.gen_range(-2..=2));
                // u ← E·u with E = I + k·e_i e_jᵀ; inv ← inv·E⁻¹
                u.add_row_multiple(i, j, &k);
                inv.add_col_multiple(j, i, &-k);
            }
            1 if n > 1 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                u.swap_rows(i, j);
                inv.swap_cols(i, j);
            }
            _ => {
                let i = rng.gen_range(0..n);
                u.negate_row(i);
                inv.negate_col(i);
            }
        }
    }
    debug_assert_eq!(&u * &inv, IntMatrix::identity(n));
    (u, inv)
}

pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> IntMatrix {
    random_unimodular_pair(rng, n, 3 * n + 2).0
}

pub fn fan(name: &str, params: &[i64]) -> Fan {
    standard_fan(name, params).unwrap()
}

pub fn a1_times_gm() -> Fan {
    Fan::from_i64(2, &[&[1, 0]], &[&[0]]).unwrap()
}

pub fn affine_plane() -> Fan {
    Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]).unwrap()
}

pub fn weighted_112() -> Fan {
    Fan::from_i64(
        2,
        &[&[1, 0], &[0, 1], &[-1, -2]],
        &[&[0, 1], &[1, 2], &[0, 2]],
    )
    .unwrap()
}

pub fn p1_cubed() -> Fan {
    let mut rays: Vec<Vec<i64>> = Vec::new();
    for i in 0..3 {
        for s in [1, -1] {
            let mut v = vec![0; 3];
            v[i] = s;
            rays.push(v);
        }
    }
    let mut cones = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                cones.push(vec![a, 2 + b, 4 + c]);
            }
        }
    }
    let rays: Vec<&[i64]> = rays.iter().map(Vec::as_slice).collect();
    let cones: Vec<&[usize]> = cones.iter().map(Vec::as_slice).collect();
    Fan::from_i64(3, &rays, &cones).unwrap()
}

/// Named fans with hand-derived groups.
pub fn golden_fans() -> Vec<(String, Fan)> {
    let mut out = vec![
        ("P2".to_string(), fan("projective", &[2])),
        (
            "P1xP1".to_string(),
            fan("product-of-two-projective-lines", &[]),
        ),
    ];
    for a in 1..=3 {
        out.push((format!("F{a}"), fan("hirzebruch", &[a])));
    }
    for r in 1..=3 {
        out.push((format!("torus{r}"), fan("torus", &[r])));
    }
    for n in 2..=5 {
        out.push((
            format!("quotient_cone 1 {n}"),
            fan("quotient_cone", &[1, n]),
        ));
    }
    out.push(("P(1,1,2)".to_string(), weighted_112()));
    out.push(("A1xGm".to_string(), a1_times_gm()));
    out.push(("A2".to_string(), affine_plane()));
    out
}

/// Keeps the listed maximal cones and the rays they use, renumbered.
pub fn subfan(f: &Fan, keep: &[usize]) -> Fan {
    let mut used: Vec<usize> = keep
        .iter()
        .flat_map(|&k| f.max_cones()[k].ray_indices().to_vec())
        .collect();
    used.sort_unstable();
    used.dedup();
    let mut new_index = vec![usize::MAX; f.rays().len()];
    for (n, &old) in used.iter().enumerate() {
        new_index[old] = n;
    }
    let rays = used.iter().map(|&i| f.rays()[i].clone()).collect();
    let cones = keep
        .iter()
        .map(|&k| {
            Cone::new(
                f.max_cones()[k]
                    .ray_indices()
                    .iter()
                    .map(|&i| new_index[i])
                    .collect(),
            )
            .unwrap()
        })
        .collect();
    Fan::new(f.rank(), rays, cones).unwrap()
}

fn half(v: &[i64; 2]) -> u8 {
    if v[1] > 0 || (v[1] == 0 && v[0] > 0) {
        0
    } else {
        1
    }
}

fn cross(a: &[i64; 2], b: &[i64; 2]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Random two-dimensional simplicial fan: random primitive rays in angular
/// order, a random subset of the strictly convex cones between angular
/// neighbours, and some leftover rays as one-dimensional cones.
pub fn random_planar_fan(rng: &mut impl Rng) -> Fan {
    loop {
        let mut rays: Vec<[i64; 2]> = Vec::new();
        for _ in 0..rng.gen_range(1..=7) {
            let v = [rng.gen_range(-4..=4i64), rng.gen_range(-4..=4i64)];
            if v[0].gcd(&v[1]) == 1 && !rays.contains(&v) {
                rays.push(v);
            }
        }
        if rays.is_empty() {
            continue;
        }
        rays.sort_by(|a, b| half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b))));
        let n = rays.len();
        let mut cones: Vec<Vec<usize>> = Vec::new();
        let mut in_cone = vec![false; n];
        if n > 1 {
            for i in 0..n {
                let j = (i + 1) % n;
                if i != j && cross(&rays[i], &rays[j]) > 0 && rng.gen_bool(0.7) {
                    cones.push(vec![i, j]);
                    in_cone[i] = true;
                    in_cone[j] = true;
                }
            }
        }
        for (i, used) in in_cone.iter().enumerate() {
            if !used && rng.gen_bool(0.5) {
                cones.push(vec![i]);
            }
        }
        if cones.is_empty() {
            continue;
        }
        // leftover rays are dropped by `subfan`
        let rays = rays
            .iter()
            .map(|r| RayVector::from_i64(r).unwrap())
            .collect();
        let cones = cones.into_iter().map(|c| Cone::new(c).unwrap()).collect();
        let full = Fan::new_unchecked(2, rays, cones);
        let keep: Vec<usize> = (0..full.max_cones().len()).collect();
        return subfan(&full, &keep);
    }
}

/// Random simplicial fan: either planar, or a random subfan of a lattice
/// image of a standard fan.
pub fn random_simplicial_fan(rng: &mut impl Rng) -> Fan {
    if rng.gen_bool(0.5) {
        return random_planar_fan(rng);
    }
    let base = match rng.gen_range(0..3) {
        0 => fan("projective", &[3]),
        1 => p1_cubed(),
        _ => fan("weighted", &[1, 2, 3]),
    };
    let u = random_unimodular(rng, base.rank());
    let moved = base.transformed(&u).unwrap();
    let m = moved.max_cones().len();
    let mut keep: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.6)).collect();
    if keep.is_empty() {
        keep.push(rng.gen_range(0..m));
    }
    subfan(&moved, &keep)
}

pub fn random_relabeling(rng: &mut impl Rng, f: &Fan) -> Fan {
    let mut rp: Vec<usize> = (0..f.rays().len()).collect();
    let mut cp: Vec<usize> = (0..f.max_cones().len()).collect();
    rp.shuffle(rng);
    cp.shuffle(rng);
    f.relabeled(&rp, &cp)
}

/// Closure that right-multiplies every L-basis by a random unimodular matrix.
pub fn random_rebase(rng: &mut impl Rng) -> impl FnMut(&Cone, IntMatrix) -> IntMatrix + '_ {
    move |_, b| {
        let u = random_unimodular(rng, b.cols());
        &b * &u
    }
}

/// Every maximal cone's rays are part of a lattice basis.
pub fn is_smooth(f: &Fan) -> bool {
    f.max_cones().iter().all(|c| {
        let m = f.cone_matrix(c);
        let k = c.len();
        if m.rational_rank() < k {
            return false;
        }
        minor_gcd(&m, k).is_one()
    })
}

pub fn abs(b: &BigInt) -> BigInt {
    b.abs()
}

pub fn rays(v: &[&[i64]]) -> Vec<RayVector> {
    v.iter().map(|r| RayVector::from_i64(r).unwrap()).collect()
}

pub const P2_TEXT: &str = "Units rank 0\nCl = Z\nPic = Z\nH2(K/X) = 0\nB(X~) = 0\nH2(X) = 0\n";
pub const TORUS2_TEXT: &str =
    "Units rank 2\nCl = 0\nPic = 0\nH2(K/X) = 0\nB(X~) = Q/Z\nH2(X) = Q/Z\n";
pub const QUOTIENT12_TEXT: &str =
    "Units rank 0\nCl = Z/2\nPic = 0\nH2(K/X) = 0\nB(X~) = 0\nH2(X) = 0\n";

pub const P2_STRUCTURED: &str = concat!(
    r#"{"units_rank":0,"class_group":{"rank":1,"torsion":[]},"picard":{"rank":1,"torsion":[]},"#,
    r#""relative_brauer":{"rank":0,"torsion":[]},"desing_brauer":{"qz":0,"torsion":[]},"#,
    r#""h2":{"qz":0,"rank":0,"torsion":[]}}"#,
    "\n"
);
pub const TORUS2_STRUCTURED: &str = concat!(
    r#"{"units_rank":2,"class_group":{"rank":0,"torsion":[]},"picard":{"rank":0,"torsion":[]},"#,
    r#""relative_brauer":{"rank":0,"torsion":[]},"desing_brauer":{"qz":1,"torsion":[]},"#,
    r#""h2":{"qz":1,"rank":0,"torsion":[]}}"#,
    "\n"
);
pub const QUOTIENT12_STRUCTURED: &str = concat!(
    r#"{"units_rank":0,"class_group":{"rank":0,"torsion":[2]},"picard":{"rank":0,"torsion":[]},"#,
    r#""relative_brauer":{"rank":0,"torsion":[]},"desing_brauer":{"qz":0,"torsion":[]},"#,
    r#""h2":{"qz":0,"rank":0,"torsion":[]}}"#,
    "\n"
);

/// (generator arguments, text report, structured report)
pub fn cli_goldens() -> [(&'static [&'static str], &'static str, &'static str); 3] {
    [
        (&["projective", "2"], P2_TEXT, P2_STRUCTURED),
        (&["torus", "2"], TORUS2_TEXT, TORUS2_STRUCTURED),
        (
            &["quotient_cone", "1", "2"],
            QUOTIENT12_TEXT,
            QUOTIENT12_STRUCTURED,
        ),
    ]
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the built binary with `stdin` piped in.
pub fn run_bin(args: &[&str], stdin: &str) -> Run {
    use std::io::Write;
    use std::process::{Command, Stdio};
    let mut child = Command::new(env!("CARGO_BIN_EXE_toric-brauer"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}
