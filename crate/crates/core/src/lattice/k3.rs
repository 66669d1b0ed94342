use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{build_gram, smith_normal_form, GramLattice, IntMatrix, PureType};
use crate::algebra::intpoly::JsonInt;
use crate::error::{Error, Result};
use crate::Axis;

pub const LK3_RANK: usize = 22;

fn hyperbolic_plane() -> IntMatrix {
    IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]])
}

fn rank_eight_block() -> IntMatrix {
    IntMatrix::from_rows(&[
        vec![-2, 0, 0, 1, 0, 0, 0, 0],
        vec![0, -2, 1, 0, 0, 0, 0, 0],
        vec![0, 1, -2, 1, 0, 0, 0, 0],
        vec![1, 0, 1, -2, 1, 0, 0, 0],
        vec![0, 0, 0, 1, -2, 1, 0, 0],
        vec![0, 0, 0, 0, 1, -2, 1, 0],
        vec![0, 0, 0, 0, 0, 1, -2, 1],
        vec![0, 0, 0, 0, 0, 0, 1, -2],
    ])
}

/// Three hyperbolic planes (β₁..β₆) followed by two copies of the negative
/// definite rank-8 block (β₇..β₁₄, β₁₅..β₂₂).
pub fn build_lk3() -> GramLattice {
    let (u, e) = (hyperbolic_plane(), rank_eight_block());
    GramLattice {
        labels: (1..=LK3_RANK).map(|i| format!("b{i}")).collect(),
        gram: IntMatrix::block_diagonal(&[&u, &u, &u, &e, &e]),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EmbeddingName {
    B600,
    B511,
    B422,
    B332,
}

impl EmbeddingName {
    pub const ALL: [EmbeddingName; 4] = [EmbeddingName::B600, EmbeddingName::B511, EmbeddingName::B422, EmbeddingName::B332];

    /// The pure type whose lattice the vectors should span.
    pub fn expected_type(self) -> PureType {
        match self {
            EmbeddingName::B600 => PureType::new(6, 0, 0),
            EmbeddingName::B511 => PureType::new(5, 1, 1),
            EmbeddingName::B422 => PureType::new(4, 2, 2),
            EmbeddingName::B332 => PureType::new(3, 3, 2),
        }
    }
}

impl fmt::Display for EmbeddingName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for EmbeddingName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        EmbeddingName::ALL
            .into_iter()
            .find(|n| n.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Integer vectors in the β-basis of the K3 lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingData {
    pub name: EmbeddingName,
    pub vectors: Vec<Vec<BigInt>>,
}

/// `terms` lists `(coefficient, β index)` with 1-based indices.
fn beta(terms: &[(i64, usize)]) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); LK3_RANK];
    for &(c, i) in terms {
        v[i - 1] += c;
    }
    v
}

fn betas(singles: &[usize]) -> impl Iterator<Item = Vec<BigInt>> + '_ {
    singles.iter().map(|&i| beta(&[(1, i)]))
}

/// The three fiber vectors followed by the curve vectors.
pub fn embedding_vectors(name: EmbeddingName) -> EmbeddingData {
    let e_511 = || {
        vec![
            beta(&[(1, 1), (2, 2), (1, 4), (1, 6), (1, 10), (1, 18)]),
            beta(&[(1, 3), (1, 4), (1, 2), (1, 6), (1, 13)]),
            beta(&[(1, 5), (1, 6), (1, 2), (1, 4), (1, 21)]),
        ]
    };
    let vectors = match name {
        EmbeddingName::B600 => {
            let mut v = vec![
                beta(&[(1, 1), (2, 2), (1, 4), (1, 6), (1, 10), (1, 18)]),
                beta(&[(1, 3), (1, 2), (1, 6)]),
                beta(&[(1, 5), (1, 2), (1, 4)]),
            ];
            v.extend(betas(&[7, 9, 11, 15, 17, 19]));
            v
        }
        EmbeddingName::B511 => {
            let mut v = e_511();
            v.extend(betas(&[7, 9, 11, 14, 15, 17, 22]));
            v
        }
        EmbeddingName::B422 => {
            let mut v = e_511();
            v.extend(betas(&[7, 9, 12, 14, 15, 17, 20, 22]));
            v
        }
        EmbeddingName::B332 => {
            let mut v = vec![
                beta(&[(1, 1), (1, 2), (1, 4), (1, 6), (1, 10)]),
                beta(&[(1, 3), (1, 4), (1, 2), (1, 6), (1, 18)]),
                beta(&[(1, 5), (2, 6), (1, 2), (1, 4), (1, 13), (1, 21)]),
            ];
            v.extend(betas(&[7, 9, 11, 14, 15, 17, 19, 22]));
            v
        }
    };
    EmbeddingData { name, vectors }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub gram_ok: bool,
    pub primitive: bool,
    /// Self-intersections `v·v` in the original vector order.
    pub self_ints: Vec<BigInt>,
    /// The pairing matrix of the vectors after ordering curves by axis.
    pub gram: IntMatrix,
    /// Invariant factors of the 22 × r coordinate matrix.
    pub invariant_factors: Vec<BigInt>,
}

impl Serialize for EmbeddingReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let ints = |v: &[BigInt]| v.iter().map(JsonInt::from).collect::<Vec<_>>();
        let mut st = s.serialize_struct("EmbeddingReport", 5)?;
        st.serialize_field("gram_ok", &self.gram_ok)?;
        st.serialize_field("primitive", &self.primitive)?;
        st.serialize_field("self_ints", &ints(&self.self_ints))?;
        st.serialize_field("gram", &self.gram)?;
        st.serialize_field("invariant_factors", &ints(&self.invariant_factors))?;
        st.end()
    }
}

/// Checks that the vectors span a primitive copy of `M_{expected}`.
///
/// The first three vectors are the fibers. Curve vectors may be listed in
/// any order; each is assigned to the axis whose fiber it meets once, and
/// the curves are stably reordered x, y, z before comparing with
/// [`build_gram`]. A curve meeting no single fiber once keeps its place at
/// the end, which makes the comparison fail.
pub fn check_embedding(e: &EmbeddingData, expected: PureType) -> Result<EmbeddingReport> {
    if let Some(bad) = e.vectors.iter().find(|v| v.len() != LK3_RANK) {
        return Err(Error::DimensionMismatch { expected: LK3_RANK, found: bad.len() });
    }
    let lk3 = build_lk3().gram;
    let n = e.vectors.len();
    let pairing = IntMatrix::from_bigint_rows(
        (0..n).map(|i| (0..n).map(|j| lk3.pair(&e.vectors[i], &e.vectors[j])).collect()).collect(),
    )?;
    let self_ints = (0..n).map(|i| pairing[(i, i)].clone()).collect();

    let mut order: Vec<usize> = (0..n.min(3)).collect();
    let mut curves: Vec<(usize, usize)> = (3..n)
        .map(|c| {
            let hits: Vec<usize> = (0..3).filter(|&a| pairing[(a, c)].is_one()).collect();
            let key = if hits.len() == 1 { hits[0] } else { Axis::ALL.len() };
            (key, c)
        })
        .collect();
    curves.sort_by_key(|&(key, _)| key);
    order.extend(curves.into_iter().map(|(_, c)| c));
    let gram = pairing.sub_matrix(&order, &order);
    let gram_ok = gram == build_gram(expected).gram;

    let coords = IntMatrix::from_columns(&e.vectors)?;
    let invariant_factors = smith_normal_form(&coords).invariant_factors();
    let primitive = invariant_factors.len() == n && invariant_factors.iter().all(|d| d.is_one());
    Ok(EmbeddingReport { gram_ok, primitive, self_ints, gram, invariant_factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::det_bareiss;
    use num_traits::Signed;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn lk3_shape() {
        let l = build_lk3();
        assert_eq!(l.rank(), 22);
        assert!(l.gram.is_symmetric());
        assert_eq!(l.gram[(0, 1)], BigInt::one());
        assert_eq!(l.gram[(6, 6)], BigInt::from(-2));
        assert_eq!(det_bareiss(&l.gram).unwrap().abs(), BigInt::one());
    }

    #[test]
    fn lk3_is_even() {
        let g = build_lk3().gram;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let v: Vec<BigInt> = (0..LK3_RANK).map(|_| BigInt::from(rng.gen_range(-20i64..=20))).collect();
            assert!((g.pair(&v, &v) % 2i32).is_zero());
        }
    }

    #[test]
    fn vector_counts_and_first_vector() {
        let counts: Vec<usize> = EmbeddingName::ALL.iter().map(|&n| embedding_vectors(n).vectors.len()).collect();
        assert_eq!(counts, [9, 10, 11, 11]);
        let v = &embedding_vectors(EmbeddingName::B600).vectors[0];
        assert_eq!(v, &beta(&[(1, 1), (2, 2), (1, 4), (1, 6), (1, 10), (1, 18)]));
        // by hand: 2·(1·2) from the first plane, −2 from each of β₁₀ and β₁₈
        assert_eq!(build_lk3().gram.pair(v, v), BigInt::zero());
    }

    #[test]
    fn all_embeddings_verify() {
        for name in EmbeddingName::ALL {
            let r = check_embedding(&embedding_vectors(name), name.expected_type()).unwrap();
            assert!(r.gram_ok, "{name}: {:?}", r.gram);
            assert!(r.primitive, "{name}: {:?}", r.invariant_factors);
        }
    }

    #[test]
    fn broken_embeddings_fail() {
        let mut e = embedding_vectors(EmbeddingName::B600);
        e.vectors[4] = vec![BigInt::zero(); LK3_RANK];
        let r = check_embedding(&e, PureType::new(6, 0, 0)).unwrap();
        assert!(!r.gram_ok);
        assert!(!r.primitive);

        let mut e = embedding_vectors(EmbeddingName::B600);
        e.vectors[3] = e.vectors[3].iter().map(|x| x * 2).collect();
        assert!(!check_embedding(&e, PureType::new(6, 0, 0)).unwrap().primitive);

        let mut e = embedding_vectors(EmbeddingName::B600);
        e.vectors[0].pop();
        assert_eq!(
            check_embedding(&e, PureType::new(6, 0, 0)),
            Err(Error::DimensionMismatch { expected: 22, found: 21 })
        );
        assert_eq!("B700".parse::<EmbeddingName>(), Err(Error::UnknownName("B700".into())));
    }
}
