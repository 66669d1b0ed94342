//! Pure Picard lattices `M_{k,l,m}`, the K3 lattice, determinants and Smith
//! normal form.
//!
//! A pure lattice of type `(k, l, m)` has basis `E_x, E_y, E_z` (the fiber
//! classes of the three projections) followed by `k` curves parallel to the
//! x-axis, `l` parallel to y and `m` parallel to z.
//!
//! ```
//! use k3dyn::lattice::{build_gram, det_bareiss, det_formula, PureType};
//!
//! let t = PureType::new(2, 0, 1);
//! let g = build_gram(t);
//! assert_eq!(g.labels, ["Ex", "Ey", "Ez", "Cx1", "Cx2", "Cz1"]);
//! assert_eq!(det_bareiss(&g.gram).unwrap(), det_formula(t).unwrap());
//! ```

mod k3;
mod matrix;
mod snf;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Axis;

pub use k3::{build_lk3, check_embedding, embedding_vectors, EmbeddingData, EmbeddingName, EmbeddingReport};
pub use matrix::{det_bareiss, IntMatrix};
pub use snf::{smith_normal_form, Smith};

/// Numbers of curves parallel to the x-, y- and z-axes. Serialized as `[k, l, m]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 3]", into = "[u32; 3]")]
pub struct PureType {
    pub k: u32,
    pub l: u32,
    pub m: u32,
}

impl From<[u32; 3]> for PureType {
    fn from([k, l, m]: [u32; 3]) -> Self {
        PureType { k, l, m }
    }
}

impl From<PureType> for [u32; 3] {
    fn from(t: PureType) -> Self {
        t.as_array()
    }
}

impl PureType {
    pub const fn new(k: u32, l: u32, m: u32) -> Self {
        PureType { k, l, m }
    }

    pub fn as_array(self) -> [u32; 3] {
        [self.k, self.l, self.m]
    }

    pub fn count(self, axis: Axis) -> u32 {
        self.as_array()[axis.index()]
    }

    pub fn total(self) -> u32 {
        self.k + self.l + self.m
    }

    pub fn rank(self) -> usize {
        3 + self.total() as usize
    }

    /// Sorted descending; the key for unordered comparisons.
    pub fn canonical(self) -> Self {
        let mut a = self.as_array();
        a.sort_unstable_by(|x, y| y.cmp(x));
        PureType::new(a[0], a[1], a[2])
    }

    /// All distinct orderings of the triple.
    pub fn permutations(self) -> Vec<PureType> {
        let [a, b, c] = self.as_array();
        let mut v = vec![
            PureType::new(a, b, c),
            PureType::new(a, c, b),
            PureType::new(b, a, c),
            PureType::new(b, c, a),
            PureType::new(c, a, b),
            PureType::new(c, b, a),
        ];
        v.sort();
        v.dedup();
        v
    }

    fn le(self, other: PureType) -> bool {
        self.k <= other.k && self.l <= other.l && self.m <= other.m
    }
}

impl fmt::Display for PureType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k, self.l, self.m)
    }
}

impl FromStr for PureType {
    type Err = Error;

    /// Accepts `k,l,m` with optional surrounding parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        let bad = || Error::Parse(format!("expected a type k,l,m, got {s:?}"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let n: Vec<u32> = parts.iter().map(|p| p.parse().map_err(|_| bad())).collect::<Result<_>>()?;
        Ok(PureType::new(n[0], n[1], n[2]))
    }
}

/// The maximal types; every realizable type is dominated by a permutation of one.
pub const MAXIMAL_TYPES: [PureType; 4] =
    [PureType::new(6, 0, 0), PureType::new(5, 1, 1), PureType::new(4, 2, 2), PureType::new(3, 3, 3)];

/// Whether `t` is bounded componentwise by some ordering of a maximal type.
pub fn in_n(t: PureType) -> bool {
    MAXIMAL_TYPES.iter().flat_map(|n| n.permutations()).any(|nu| t.le(nu))
}

/// Every unordered type in the set, each sorted descending, in lexicographic order.
pub fn enumerate_n_unordered() -> Vec<PureType> {
    let mut out = Vec::new();
    for k in 0..=6 {
        for l in 0..=k {
            for m in 0..=l {
                let t = PureType::new(k, l, m);
                if in_n(t) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// A labelled basis together with its symmetric intersection matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramLattice {
    pub labels: Vec<String>,
    pub gram: IntMatrix,
}

impl GramLattice {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// The axis of each basis vector of `M_{k,l,m}` beyond the three fibers.
pub fn curve_axes(t: PureType) -> Vec<Axis> {
    Axis::ALL.iter().flat_map(|&a| std::iter::repeat_n(a, t.count(a) as usize)).collect()
}

/// `E·E' = 2` for distinct fibers, `E_ω·C = 1` iff `C` is parallel to the
/// ω-axis, `C² = −2`, and distinct curves are orthogonal.
pub fn build_gram(t: PureType) -> GramLattice {
    let n = t.rank();
    let axes = curve_axes(t);
    let mut g = IntMatrix::zeros(n, n);
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                g[(i, j)] = BigInt::from(2);
            }
        }
    }
    for (c, axis) in axes.iter().enumerate() {
        let ci = 3 + c;
        g[(ci, ci)] = BigInt::from(-2);
        g[(axis.index(), ci)] = BigInt::one();
        g[(ci, axis.index())] = BigInt::one();
    }
    let mut labels: Vec<String> = Axis::ALL.iter().map(|a| format!("E{a}")).collect();
    for a in Axis::ALL {
        labels.extend((1..=t.count(a)).map(|i| format!("C{a}{i}")));
    }
    GramLattice { labels, gram: g }
}

/// Closed form `−(−2)^{s−3} (128 − 16s + klm)` with `s = k + l + m`.
pub fn det_formula(t: PureType) -> Result<BigInt> {
    let s = t.total() as i32;
    let two = BigRational::from_integer(BigInt::from(-2));
    let factor: BigRational = Pow::pow(&two, s - 3);
    let bracket = BigInt::from(128) - BigInt::from(16 * s as i64) + BigInt::from(t.k) * t.l * t.m;
    let v = -(factor * BigRational::from_integer(bracket));
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::NonIntegerResult(v.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    #[test]
    fn membership() {
        assert!(in_n(PureType::new(5, 1, 1)));
        assert!(in_n(PureType::new(1, 5, 1)));
        assert!(in_n(PureType::new(0, 0, 0)));
        assert!(!in_n(PureType::new(7, 0, 0)));
        assert!(!in_n(PureType::new(4, 3, 0)));
    }

    #[test]
    fn enumeration() {
        let all = enumerate_n_unordered();
        assert_eq!(all.len(), 30);
        assert_eq!(all[0], PureType::new(0, 0, 0));
        assert_eq!(*all.last().unwrap(), PureType::new(6, 0, 0));
        assert!(all.contains(&PureType::new(3, 3, 3)));
        assert!(!all.contains(&PureType::new(4, 3, 0)));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn gram_examples() {
        assert_eq!(build_gram(PureType::new(0, 0, 0)).gram, IntMatrix::from_rows(&[vec![0, 2, 2], vec![2, 0, 2], vec![2, 2, 0]]));
        let m201 = IntMatrix::from_rows(&[
            vec![0, 2, 2, 1, 1, 0],
            vec![2, 0, 2, 0, 0, 0],
            vec![2, 2, 0, 0, 0, 1],
            vec![1, 0, 0, -2, 0, 0],
            vec![1, 0, 0, 0, -2, 0],
            vec![0, 0, 1, 0, 0, -2],
        ]);
        assert_eq!(build_gram(PureType::new(2, 0, 1)).gram, m201);
        let g = build_gram(PureType::new(1, 0, 0)).gram;
        assert_eq!(g.row(0), &[0, 2, 2, 1].map(BigInt::from));
        assert_eq!(g.row(3), &[1, 0, 0, -2].map(BigInt::from));
    }

    #[test]
    fn det_examples() {
        for (t, d) in [((0, 0, 0), 16), ((2, 0, 1), -80), ((3, 3, 3), -704)] {
            let t = PureType::new(t.0, t.1, t.2);
            assert_eq!(det_formula(t).unwrap(), BigInt::from(d));
            assert_eq!(det_bareiss(&build_gram(t).gram).unwrap(), BigInt::from(d));
        }
    }

    /// Leibniz expansion over all permutations, for small matrices.
    fn det_leibniz(m: &IntMatrix) -> BigInt {
        fn rec(m: &IntMatrix, row: usize, used: &mut Vec<bool>, sign: i64) -> BigInt {
            let n = m.rows();
            if row == n {
                return BigInt::from(sign);
            }
            let mut acc = BigInt::from(0);
            for j in 0..n {
                if used[j] || m[(row, j)] == BigInt::from(0) {
                    continue;
                }
                let inversions = used[j + 1..].iter().filter(|&&u| u).count();
                used[j] = true;
                let s = if inversions % 2 == 0 { sign } else { -sign };
                acc += &m[(row, j)] * rec(m, row + 1, used, s);
                used[j] = false;
            }
            acc
        }
        rec(m, 0, &mut vec![false; m.rows()], 1)
    }

    #[test]
    fn bareiss_matches_leibniz() {
        for t in [(0, 0, 0), (1, 0, 0), (2, 0, 1), (1, 1, 1), (2, 2, 1), (3, 1, 1)] {
            let g = build_gram(PureType::new(t.0, t.1, t.2)).gram;
            assert_eq!(det_bareiss(&g).unwrap(), det_leibniz(&g));
        }
    }

    #[test]
    fn det_sweep() {
        for k in 0..=8 {
            for l in 0..=8 {
                for m in 0..=8 {
                    let t = PureType::new(k, l, m);
                    assert_eq!(det_bareiss(&build_gram(t).gram).unwrap(), det_formula(t).unwrap(), "{t}");
                }
            }
        }
    }

    #[test]
    fn det_sign_matches_signature() {
        // Signature (1, 2 + s) forces sign (−1)^s.
        for t in enumerate_n_unordered().into_iter().flat_map(|t| t.permutations()) {
            let d = det_formula(t).unwrap();
            let expect = if t.total() % 2 == 0 { 1 } else { -1 };
            assert_eq!(d.signum(), BigInt::from(expect), "{t}");
        }
    }

    proptest! {
        #[test]
        fn gram_entry_pattern(k in 0u32..6, l in 0u32..6, m in 0u32..6) {
            let t = PureType::new(k, l, m);
            let g = build_gram(t);
            prop_assert!(g.gram.is_symmetric());
            let axes = curve_axes(t);
            for i in 0..t.rank() {
                for j in 0..t.rank() {
                    let e = g.gram[(i, j)].clone();
                    let expect = match (i < 3, j < 3) {
                        (true, true) => if i == j { 0 } else { 2 },
                        (true, false) => i64::from(axes[j - 3].index() == i),
                        (false, true) => i64::from(axes[i - 3].index() == j),
                        (false, false) => if i == j { -2 } else { 0 },
                    };
                    prop_assert_eq!(e, BigInt::from(expect));
                }
            }
        }

        #[test]
        fn canonical_is_sorted_permutation(k in 0u32..9, l in 0u32..9, m in 0u32..9) {
            let t = PureType::new(k, l, m);
            let c = t.canonical();
            prop_assert!(c.k >= c.l && c.l >= c.m);
            prop_assert!(t.permutations().contains(&c));
            prop_assert_eq!(in_n(t), in_n(c));
        }
    }
}
