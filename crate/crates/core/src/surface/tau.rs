use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;

use super::{FloatPoint, SurfacePoint, TriForm};
use crate::algebra::{MultiPoly, ProjPoint};
use crate::error::{Error, Result};
use crate::Axis;

/// Which of the two expressions for the involution to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formula {
    /// `[ω₀Q₂ + ω₁Q₁ : −ω₁Q₂]`, valid everywhere it is defined.
    General,
    /// `[ω₁Q₀ : ω₀Q₂]`, which agrees with `General` on the surface.
    OnSurface,
}

/// The covering involution along `axis` applied to `p`: the ω-coordinate is
/// replaced, the others are kept.
pub fn tau_point(q: &TriForm, axis: Axis, p: &SurfacePoint, formula: Formula) -> Result<SurfacePoint> {
    let (u, v) = axis.others();
    let [q0, q1, q2] = q.slices(axis).map(|s| s.eval(p.get(u), p.get(v)));
    let w = p.get(axis);
    let (a, b) = match formula {
        Formula::General => (w.c0() * &q2 + w.c1() * &q1, -(w.c1() * &q2)),
        Formula::OnSurface => (w.c1() * &q0, w.c0() * &q2),
    };
    let image = ProjPoint::new(a, b).map_err(|_| Error::Indeterminate)?;
    Ok(p.with(axis, image))
}

/// Floating-point [`tau_point`] with the general formula; `None` when the
/// image coordinates are both below `eps` relative to the input scale.
pub fn tau_point_f64(q: &TriForm, axis: Axis, p: &FloatPoint, eps: f64) -> Option<FloatPoint> {
    let (u, v) = axis.others();
    let slices = q.slices(axis);
    let mono = |a: Axis| {
        let (c0, c1) = (p.0[2 * a.index()], p.0[2 * a.index() + 1]);
        [c1 * c1, c0 * c1, c0 * c0]
    };
    let (mu, mv) = (mono(u), mono(v));
    let vals: Vec<Complex64> = slices
        .iter()
        .map(|s| {
            let mut acc = Complex64::zero();
            for (row, ma) in s.coeffs.iter().zip(mu) {
                for (c, mb) in row.iter().zip(mv) {
                    acc += c.to_complex() * ma * mb;
                }
            }
            acc
        })
        .collect();
    let (w0, w1) = (p.0[2 * axis.index()], p.0[2 * axis.index() + 1]);
    let a = w0 * vals[2] + w1 * vals[1];
    let b = -w1 * vals[2];
    let scale = (a.norm() + b.norm()).max(f64::MIN_POSITIVE);
    let size = vals.iter().map(|c| c.norm()).fold(0.0, f64::max) * (w0.norm() + w1.norm());
    if scale <= eps * size.max(1.0) {
        return None;
    }
    let mut out = *p;
    out.0[2 * axis.index()] = a / scale;
    out.0[2 * axis.index() + 1] = b / scale;
    Some(out)
}

/// Outcome of the two symbolic identities behind the involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TauIdentityReport {
    /// `Q(ω₀Q₂ + ω₁Q₁, −ω₁Q₂, …) = Q₂² · Q`.
    pub conjugation: bool,
    /// `(ω₁Q₀)(−ω₁Q₂) − (ω₀Q₂)(ω₀Q₂ + ω₁Q₁) = −Q₂ · Q`.
    pub cross: bool,
}

pub fn verify_tau_identities(q: &TriForm, axis: Axis) -> TauIdentityReport {
    let [q0, q1, q2] = q.slices(axis).map(|s| s.to_multipoly());
    let full = q.to_multipoly();
    let (i0, i1) = (2 * axis.index(), 2 * axis.index() + 1);
    let (w0, w1) = (MultiPoly::var(i0), MultiPoly::var(i1));

    let new0 = &(&w0 * &q2) + &(&w1 * &q1);
    let new1 = -&(&w1 * &q2);
    let mut subs: [MultiPoly; 6] = std::array::from_fn(MultiPoly::var);
    subs[i0] = new0.clone();
    subs[i1] = new1.clone();
    let conjugation = full.substitute(&subs) == &(&q2 * &q2) * &full;

    let lhs = &(&(&w1 * &q0) * &new1) - &(&(&w0 * &q2) * &new0);
    let cross = lhs == -&(&q2 * &full);
    TauIdentityReport { conjugation, cross }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::build_tilde_q;
    use crate::surface::tests::arb_triform;
    use proptest::prelude::*;

    fn pt(s: &str) -> SurfacePoint {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let q = build_tilde_q();
        let p = pt("i,0,1");
        assert_eq!(tau_point(&q, Axis::X, &p, Formula::General).unwrap(), pt("-i,0,1"));
        assert_eq!(tau_point(&q, Axis::X, &p, Formula::OnSurface).unwrap(), pt("-i,0,1"));
        assert_eq!(tau_point(&q, Axis::X, &pt("5,i,0"), Formula::General), Err(Error::Indeterminate));
    }

    #[test]
    fn tilde_identities() {
        let q = build_tilde_q();
        for axis in Axis::ALL {
            assert_eq!(verify_tau_identities(&q, axis), TauIdentityReport { conjugation: true, cross: true });
        }
    }

    #[test]
    fn degenerate_form() {
        let mut q = TriForm::default();
        *q.get_mut([2, 2, 2]) = crate::algebra::GaussianRational::from(1);
        let r = verify_tau_identities(&q, Axis::X);
        assert!(r.conjugation && r.cross);
    }

    #[test]
    fn broken_identity_is_detected() {
        // The same check with a wrong sign in the substitution fails.
        let q = build_tilde_q();
        let [_, q1, q2] = q.slices(Axis::X).map(|s| s.to_multipoly());
        let (w0, w1) = (MultiPoly::var(0), MultiPoly::var(1));
        let mut subs: [MultiPoly; 6] = std::array::from_fn(MultiPoly::var);
        subs[0] = &(&w0 * &q2) + &(&w1 * &q1);
        subs[1] = &w1 * &q2;
        let full = q.to_multipoly();
        assert_ne!(full.substitute(&subs), &(&q2 * &q2) * &full);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn random_forms_satisfy_identities(q in arb_triform(), a in 0usize..3) {
            let r = verify_tau_identities(&q, Axis::from_index(a));
            prop_assert!(r.conjugation && r.cross);
        }
    }
}
