//! Smith normal form by elementary row and column operations.
//!
//! The pivot is always a nonzero entry of minimal absolute value in the
//! working submatrix. Its row and column are cleared with Euclidean
//! remainders; whenever a remainder survives, the smallest surviving entry
//! becomes the new pivot, so `|pivot|` strictly decreases and the loop
//! terminates. Once the cross is clear, an entry not divisible by the pivot
//! has its row added to the pivot row and the clearing restarts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Unimodular `left`, `right` with `left · S · right = diag(d₁, …, d_s, 0, …)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub left: IntMatrix,
    pub right: IntMatrix,
    /// Positive invariant factors with `d₁ | d₂ | … | d_s`.
    pub invariants: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    /// The diagonal matrix `left · S · right`, with the shape of `S`.
    pub fn diagonal(&self) -> IntMatrix {
        IntMatrix::diagonal(self.left.rows(), self.right.rows(), &self.invariants)
    }
}

pub fn smith_normal_form(s: &IntMatrix) -> SmithForm {
    let (m, n) = s.shape();
    let mut work = s.clone();
    let mut left = IntMatrix::identity(m);
    let mut right = IntMatrix::identity(n);
    let mut invariants = Vec::new();

    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_abs_entry(&work, (t..m).flat_map(|i| (t..n).map(move |j| (i, j))))
        else {
            break;
        };
        move_to_pivot(&mut work, &mut left, &mut right, t, pi, pj);

        loop {
            clear_cross(&mut work, &mut left, &mut right, t);
            let survivor = min_abs_entry(
                &work,
                (t + 1..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j))),
            );
            if let Some((pi, pj)) = survivor {
                move_to_pivot(&mut work, &mut left, &mut right, t, pi, pj);
                continue;
            }
            let pivot = work[(t, t)].clone();
            let offending =
                (t + 1..m).find(|&i| (t + 1..n).any(|j| !work[(i, j)].is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    let one = BigInt::from(1);
                    work.add_row_multiple(t, i, &one);
                    left.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if work[(t, t)].is_negative() {
            work.negate_row(t);
            left.negate_row(t);
        }
        invariants.push(work[(t, t)].clone());
    }

    debug_assert!(invariants.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
    SmithForm {
        left,
        right,
        invariants,
    }
}

/// Nonzero entry of minimal absolute value among `candidates`.
fn min_abs_entry(
    work: &IntMatrix,
    candidates: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (i, j) in candidates {
        let v = &work[(i, j)];
        if v.is_zero() {
            continue;
        }
        let a = v.abs();
        if best.as_ref().is_none_or(|(_, b)| a < *b) {
            let done = a == BigInt::from(1);
            best = Some(((i, j), a));
            if done {
                break;
            }
        }
    }
    best.map(|(pos, _)| pos)
}

fn move_to_pivot(
    work: &mut IntMatrix,
    left: &mut IntMatrix,
    right: &mut IntMatrix,
    t: usize,
    i: usize,
    j: usize,
) {
    work.swap_rows(t, i);
    left.swap_rows(t, i);
    work.swap_cols(t, j);
    right.swap_cols(t, j);
}

/// Replaces every entry below and to the right of the pivot by its remainder.
fn clear_cross(work: &mut IntMatrix, left: &mut IntMatrix, right: &mut IntMatrix, t: usize) {
    let (m, n) = work.shape();
    let pivot = work[(t, t)].clone();
    for i in t + 1..m {
        if work[(i, t)].is_zero() {
            continue;
        }
        let q = -(&work[(i, t)] / &pivot);
        work.add_row_multiple(i, t, &q);
        left.add_row_multiple(i, t, &q);
    }
    for j in t + 1..n {
        if work[(t, j)].is_zero() {
            continue;
        }
        let q = -(&work[(t, j)] / &pivot);
        work.add_col_multiple(j, t, &q);
        right.add_col_multiple(j, t, &q);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(BigInt::from).collect()
    }

    fn check(s: &IntMatrix) -> SmithForm {
        let f = smith_normal_form(s);
        assert_eq!(&(&f.left * s) * &f.right, f.diagonal());
        assert!(f.left.is_unimodular());
        assert!(f.right.is_unimodular());
        f
    }

    #[test]
    fn identity_is_fixed() {
        let f = check(&IntMatrix::identity(2));
        assert_eq!(f.invariants, ints(&[1, 1]));
        assert_eq!(f.left, IntMatrix::identity(2));
        assert_eq!(f.right, IntMatrix::identity(2));
    }

    #[test]
    fn two_by_two() {
        // gcd of entries is 2 and |det| = 8
        let f = check(&IntMatrix::from_rows(vec![vec![2, 4], vec![6, 8]]));
        assert_eq!(f.invariants, ints(&[2, 4]));
    }

    #[test]
    fn zero_and_empty() {
        let f = check(&IntMatrix::zeros(2, 3));
        assert_eq!(f.rank(), 0);
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let f = check(&IntMatrix::zeros(r, c));
            assert_eq!(f.rank(), 0);
            assert_eq!(f.left.shape(), (r, r));
            assert_eq!(f.right.shape(), (c, c));
        }
    }

    #[test]
    fn needs_divisibility_repair() {
        // diag(2, 3) is diagonal but not in normal form: invariants (1, 6)
        let f = check(&IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]));
        assert_eq!(f.invariants, ints(&[1, 6]));
        let f = check(&IntMatrix::from_rows(vec![
            vec![4, 0, 0],
            vec![0, 6, 0],
            vec![0, 0, 10],
        ]));
        assert_eq!(f.invariants, ints(&[2, 2, 60]));
    }

    #[test]
    fn negative_pivot_normalized() {
        let f = check(&IntMatrix::from_rows(vec![vec![-3]]));
        assert_eq!(f.invariants, ints(&[3]));
    }
}
