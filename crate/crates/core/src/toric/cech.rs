use crate::fan::{Cone, Fan};
use crate::intlinalg::IntMatrix;

use super::{l_basis, restriction_matrix, LBasis, ToricError};

/// `C⁰ → C¹ → C²` for the presheaf `L` on the cover by maximal cones, plus
/// the map `φ: M → C⁰` restricting characters to each maximal cone.
///
/// Signs: `(δ⁰f)ᵢⱼ = fⱼ|ᵢⱼ − fᵢ|ᵢⱼ` and `(δ¹g)ᵢⱼₖ = gⱼₖ − gᵢₖ + gᵢⱼ`.
#[derive(Clone, Debug)]
pub struct CechComplex {
    rank: usize,
    c0: Vec<LBasis>,
    c1: Vec<LBasis>,
    c2: Vec<LBasis>,
    pairs: Vec<(usize, usize)>,
    triples: Vec<(usize, usize, usize)>,
    delta0: IntMatrix,
    delta1: IntMatrix,
    phi: IntMatrix,
}

impl CechComplex {
    pub fn lattice_rank(&self) -> usize {
        self.rank
    }

    /// L-bases of the maximal cones, in fan order.
    pub fn cones(&self) -> &[LBasis] {
        &self.c0
    }

    /// L-bases of the pairwise intersections, indexed like [`Self::pair_index`].
    pub fn pair_bases(&self) -> &[LBasis] {
        &self.c1
    }

    pub fn triple_bases(&self) -> &[LBasis] {
        &self.c2
    }

    pub fn pair_index(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn triple_index(&self) -> &[(usize, usize, usize)] {
        &self.triples
    }

    pub fn c0_blocks(&self) -> Vec<usize> {
        self.c0.iter().map(LBasis::rank).collect()
    }

    pub fn c1_blocks(&self) -> Vec<usize> {
        self.c1.iter().map(LBasis::rank).collect()
    }

    pub fn c2_blocks(&self) -> Vec<usize> {
        self.c2.iter().map(LBasis::rank).collect()
    }

    pub fn delta0(&self) -> &IntMatrix {
        &self.delta0
    }

    pub fn delta1(&self) -> &IntMatrix {
        &self.delta1
    }

    pub fn phi(&self) -> &IntMatrix {
        &self.phi
    }
}

pub fn build_cech(fan: &Fan) -> Result<CechComplex, ToricError> {
    build_cech_with(fan, &mut |_, b| b)
}

/// Builds the complex, passing every freshly computed L-basis through
/// `rebase` first. `rebase` must return another basis of the same lattice
/// (for instance `basis · U` with `U` unimodular); anything else surfaces as
/// [`ToricError::InternalInconsistency`].
pub fn build_cech_with(
    fan: &Fan,
    rebase: &mut dyn FnMut(&Cone, IntMatrix) -> IntMatrix,
) -> Result<CechComplex, ToricError> {
    let rank = fan.rank();
    let mut basis_of = |cone: Cone| {
        let b = l_basis(fan, &cone);
        let basis = rebase(&cone, b.basis);
        LBasis { cone, basis }
    };

    let maximal = fan.max_cones();
    let m = maximal.len();
    let c0: Vec<LBasis> = maximal.iter().cloned().map(&mut basis_of).collect();

    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let c1: Vec<LBasis> = pairs
        .iter()
        .map(|&(i, j)| basis_of(maximal[i].intersection(&maximal[j])))
        .collect();

    let mut pair_pos = vec![vec![usize::MAX; m]; m];
    for (p, &(i, j)) in pairs.iter().enumerate() {
        pair_pos[i][j] = p;
    }
    let triples: Vec<(usize, usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).flat_map(move |j| (j + 1..m).map(move |k| (i, j, k))))
        .collect();
    let c2: Vec<LBasis> = triples
        .iter()
        .map(|&(i, j, k)| {
            let c = maximal[i]
                .intersection(&maximal[j])
                .intersection(&maximal[k]);
            basis_of(c)
        })
        .collect();

    let off0 = offsets(&c0);
    let off1 = offsets(&c1);
    let off2 = offsets(&c2);

    let mut delta0 = IntMatrix::zeros(off1[c1.len()], off0[c0.len()]);
    for (p, &(i, j)) in pairs.iter().enumerate() {
        put(
            &mut delta0,
            off1[p],
            off0[j],
            restrict(&c0[j], &c1[p])?,
            false,
        );
        put(
            &mut delta0,
            off1[p],
            off0[i],
            restrict(&c0[i], &c1[p])?,
            true,
        );
    }

    let mut delta1 = IntMatrix::zeros(off2[c2.len()], off1[c1.len()]);
    for (t, &(i, j, k)) in triples.iter().enumerate() {
        for (p, negate) in [
            (pair_pos[j][k], false),
            (pair_pos[i][k], true),
            (pair_pos[i][j], false),
        ] {
            put(
                &mut delta1,
                off2[t],
                off1[p],
                restrict(&c1[p], &c2[t])?,
                negate,
            );
        }
    }

    let mut phi = IntMatrix::zeros(off0[c0.len()], rank);
    for (i, b) in c0.iter().enumerate() {
        phi.set_block(off0[i], 0, &b.basis.transpose());
    }

    if !(&delta1 * &delta0).is_zero() {
        return Err(ToricError::InternalInconsistency("δ¹·δ⁰ is nonzero".into()));
    }
    if !(&delta0 * &phi).is_zero() {
        return Err(ToricError::InternalInconsistency("δ⁰·φ is nonzero".into()));
    }

    Ok(CechComplex {
        rank,
        c0,
        c1,
        c2,
        pairs,
        triples,
        delta0,
        delta1,
        phi,
    })
}

fn offsets(blocks: &[LBasis]) -> Vec<usize> {
    let mut out = Vec::with_capacity(blocks.len() + 1);
    let mut acc = 0;
    out.push(0);
    for b in blocks {
        acc += b.rank();
        out.push(acc);
    }
    out
}

fn restrict(big: &LBasis, small: &LBasis) -> Result<IntMatrix, ToricError> {
    restriction_matrix(big, small).map_err(|e| {
        ToricError::InternalInconsistency(format!(
            "cannot restrict from cone {} to cone {}: {e}",
            big.cone, small.cone
        ))
    })
}

fn put(target: &mut IntMatrix, row: usize, col: usize, block: IntMatrix, negate: bool) {
    if negate {
        target.set_block(row, col, &block.scale(&(-1).into()));
    } else {
        target.set_block(row, col, &block);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::standard_fan;

    #[test]
    fn single_cone_has_no_differentials() {
        let q = standard_fan("quotient_cone", &[1, 2]).unwrap();
        let c = build_cech(&q).unwrap();
        assert_eq!(c.delta0().shape(), (0, 2));
        assert_eq!(c.delta1().shape(), (0, 0));
        assert_eq!(c.phi().shape(), (2, 2));
    }

    #[test]
    fn torus_is_all_empty() {
        let t = standard_fan("torus", &[3]).unwrap();
        let c = build_cech(&t).unwrap();
        assert_eq!(c.delta0().shape(), (0, 0));
        assert_eq!(c.delta1().shape(), (0, 0));
        assert_eq!(c.phi().shape(), (0, 3));
    }

    #[test]
    fn projective_plane_shapes() {
        let p2 = standard_fan("projective", &[2]).unwrap();
        let c = build_cech(&p2).unwrap();
        assert_eq!(c.c0_blocks(), vec![2, 2, 2]);
        assert_eq!(c.c1_blocks(), vec![1, 1, 1]);
        assert_eq!(c.c2_blocks(), vec![0]);
        assert_eq!(c.delta0().shape(), (3, 6));
        assert_eq!(c.delta1().shape(), (0, 3));
        assert_eq!(c.pair_index(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(c.triple_index(), &[(0, 1, 2)]);
        // every row of δ⁰ is (restriction of f_j) − (restriction of f_i):
        // two nonzero 1x2 blocks
        for r in 0..3 {
            let nonzero = c.delta0().row(r).iter().filter(|e| **e != 0.into()).count();
            assert!(nonzero >= 2, "row {r}: {}", c.delta0());
        }
    }

    #[test]
    fn bogus_basis_is_detected() {
        let fan = Fan::from_i64(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
            &[&[0, 1], &[1, 2]],
        )
        .unwrap();
        // the common ray gets a vector outside both maximal cones' spans
        let mut rebase = |cone: &Cone, b: IntMatrix| {
            if cone.len() == 1 {
                IntMatrix::from_rows(vec![vec![1], vec![1], vec![1]])
            } else {
                b
            }
        };
        assert!(matches!(
            build_cech_with(&fan, &mut rebase),
            Err(ToricError::InternalInconsistency(_))
        ));
    }
}
