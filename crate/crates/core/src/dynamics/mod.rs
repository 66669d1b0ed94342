//! Pullbacks of the three covering involutions to a pure Picard lattice,
//! their composition, and the spectral data that determines entropy.
//!
//! ```
//! use k3dyn::dynamics::{f_star, spectral_radius};
//! use k3dyn::lattice::PureType;
//!
//! let s = spectral_radius(&f_star(PureType::new(6, 0, 0))).unwrap();
//! assert_eq!(s.min_poly.to_string(), "t^2 - 6t + 1");
//! assert!((s.lambda - (3.0 + 8f64.sqrt())).abs() < 1e-12);
//! ```

mod charpoly;
mod entropy;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{build_gram, curve_axes, GramLattice, IntMatrix, PureType};
use crate::Axis;

pub use charpoly::{char_poly, cyclotomic, euler_phi, strip_cyclotomic, Cyclotomics, Stripped, MAX_CYCLOTOMIC_INDEX};
pub use entropy::{
    entropy_table, lambda_of, monotonicity_check, permutation_invariance_check, render_csv, render_json, render_text,
    spectral_radius, sig_digits, EntropyRow, Spectral, Violation, INVARIANCE_TOL, MONOTONICITY_MARGIN,
};

/// An integer matrix acting on the basis of `M_{k,l,m}`; column `j` is the
/// image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsometryMatrix {
    #[serde(rename = "type")]
    pub ty: PureType,
    pub labels: Vec<String>,
    pub entries: IntMatrix,
}

/// Action of the covering involution along `axis` on `M_{k,l,m}`.
///
/// With `(ω', ω'')` the remaining axes in cyclic order: both other fibers
/// and the curves parallel to ω are fixed, a curve `C ∥ ω'` goes to
/// `E_ω'' − C`, a curve `C ∥ ω''` goes to `E_ω' − C`, and
/// `E_ω ↦ −E_ω + 2E_ω' + 2E_ω'' − Σ_{C ∥ ω} C`.
pub fn tau_star(axis: Axis, t: PureType) -> IsometryMatrix {
    let g = build_gram(t);
    let n = t.rank();
    let axes = curve_axes(t);
    let (w1, w2) = axis.others();
    let mut a = IntMatrix::zeros(n, n);
    let one = BigInt::one;
    for f in Axis::ALL {
        if f != axis {
            a[(f.index(), f.index())] = one();
        }
    }
    let e = axis.index();
    a[(e, e)] = -one();
    a[(w1.index(), e)] = BigInt::from(2);
    a[(w2.index(), e)] = BigInt::from(2);
    for (c, &ca) in axes.iter().enumerate() {
        let j = 3 + c;
        if ca == axis {
            a[(j, j)] = one();
            a[(j, e)] = -one();
        } else {
            let target = if ca == w1 { w2 } else { w1 };
            a[(target.index(), j)] = one();
            a[(j, j)] = -one();
        }
    }
    IsometryMatrix { ty: t, labels: g.labels, entries: a }
}

/// Pullback of `f = τ_z ∘ τ_y ∘ τ_x`, which is `T_x · T_y · T_z`.
pub fn f_star(t: PureType) -> IsometryMatrix {
    let [tx, ty, tz] = Axis::ALL.map(|a| tau_star(a, t).entries);
    let entries = &(&tx * &ty) * &tz;
    IsometryMatrix { ty: t, labels: build_gram(t).labels, entries }
}

/// Pullback of the inverse map, `T_z · T_y · T_x`.
pub fn f_star_inverse(t: PureType) -> IsometryMatrix {
    let [tx, ty, tz] = Axis::ALL.map(|a| tau_star(a, t).entries);
    let entries = &(&tz * &ty) * &tx;
    IsometryMatrix { ty: t, labels: build_gram(t).labels, entries }
}

/// `Aᵀ M A == M`.
pub fn is_isometry(a: &IntMatrix, m: &GramLattice) -> Result<bool> {
    let n = m.gram.rows();
    if !a.is_square() {
        return Err(Error::NonSquare { rows: a.rows(), cols: a.cols() });
    }
    if a.rows() != n {
        return Err(Error::DimensionMismatch { expected: n, found: a.rows() });
    }
    Ok(&(&a.transpose() * &m.gram) * a == m.gram)
}
