use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{SurfacePoint, TriForm};
use crate::algebra::{GaussianRational, ProjPoint};
use crate::curvegeom::AxisCurve;

/// Value and gradient of a form at a point, in the given representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jacobian {
    pub value: GaussianRational,
    /// `∂/∂x₀, ∂/∂x₁, ∂/∂y₀, ∂/∂y₁, ∂/∂z₀, ∂/∂z₁`.
    pub grad: [GaussianRational; 6],
}

impl Jacobian {
    /// Whether the point is singular on the zero set. Independent of the
    /// chosen representative because every entry is homogeneous.
    pub fn is_singular(&self) -> bool {
        self.value.is_zero() && self.grad.iter().all(Zero::is_zero)
    }
}

pub fn jacobian(q: &TriForm, p: &SurfacePoint) -> Jacobian {
    let mp = q.to_multipoly();
    let coords = p.coords();
    Jacobian { value: mp.eval(&coords), grad: std::array::from_fn(|i| mp.partial(i).eval(&coords)) }
}

/// Homogeneous coordinates `(x₀, x₁, y₀, y₁, z₀, z₁)` in floating point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatPoint(pub [Complex64; 6]);

impl FloatPoint {
    pub fn from_exact(p: &SurfacePoint) -> Self {
        FloatPoint(p.coords().map(|c| c.to_complex()))
    }

    /// `Q(p)` divided by the size of its terms, so that scaling does not matter.
    pub fn relative_residual(&self, q: &TriForm) -> f64 {
        let mono = |a: usize| {
            let (c0, c1) = (self.0[2 * a], self.0[2 * a + 1]);
            [c1 * c1, c0 * c1, c0 * c0]
        };
        let (mx, my, mz) = (mono(0), mono(1), mono(2));
        let (mut acc, mut size) = (Complex64::zero(), 0.0);
        for (plane, x) in q.coeffs.iter().zip(mx) {
            for (row, y) in plane.iter().zip(my) {
                for (c, z) in row.iter().zip(mz) {
                    let t = c.to_complex() * x * y * z;
                    acc += t;
                    size += t.norm();
                }
            }
        }
        acc.norm() / size.max(f64::MIN_POSITIVE)
    }

    /// Projective agreement on every factor up to relative `tol`.
    pub fn proj_close(&self, other: &FloatPoint, tol: f64) -> bool {
        (0..3).all(|a| {
            let (p0, p1) = (self.0[2 * a], self.0[2 * a + 1]);
            let (q0, q1) = (other.0[2 * a], other.0[2 * a + 1]);
            let cross = (p0 * q1 - p1 * q0).norm();
            cross <= tol * (p0.norm() + p1.norm()) * (q0.norm() + q1.norm())
        })
    }
}

/// Nonzero, so that sampled coordinates avoid the special values 0 and ∞.
fn small_rational(rng: &mut ChaCha8Rng) -> GaussianRational {
    let num = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
    GaussianRational::ratio(num, rng.gen_range(1..=7))
}

/// Points on `q = 0` found by fixing random rational `y, z` and solving the
/// quadratic in `x` numerically. Points whose relative residual exceeds
/// `1e-9` are discarded, so fewer than `n` may be returned.
pub fn sample_surface_points_f64(q: &TriForm, n: usize, seed: u64) -> Vec<FloatPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let slices = q.slices(crate::Axis::X);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n * 4 {
        if out.len() == n {
            break;
        }
        let (y, z) = (ProjPoint::affine(small_rational(&mut rng)), ProjPoint::affine(small_rational(&mut rng)));
        let [c, b, a] = slices.clone().map(|s| s.eval(&y, &z).to_complex());
        if a.norm() < 1e-12 {
            continue;
        }
        let disc = (b * b - 4.0 * a * c).sqrt();
        let root = if rng.gen_bool(0.5) { (-b + disc) / (2.0 * a) } else { (-b - disc) / (2.0 * a) };
        let p = FloatPoint([
            root,
            Complex64::new(1.0, 0.0),
            y.c0().to_complex(),
            Complex64::new(1.0, 0.0),
            z.c0().to_complex(),
            Complex64::new(1.0, 0.0),
        ]);
        if p.relative_residual(q) < 1e-9 {
            out.push(p);
        }
    }
    out
}

/// Exact points on the given curves at random rational parameters.
pub fn sample_curve_points(curves: &[AxisCurve], n: usize, seed: u64) -> Vec<SurfacePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let c = &curves[rng.gen_range(0..curves.len())];
            let s = ProjPoint::affine(small_rational(&mut rng));
            let coords = c.point_at(&s);
            let pp = |i: usize| ProjPoint::new(coords[i].clone(), coords[i + 1].clone()).expect("nonzero coordinates");
            SurfacePoint::new(pp(0), pp(2), pp(4))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvegeom::tilde_curves;
    use crate::surface::{build_tilde_q, tau_point, tau_point_f64, Formula};
    use crate::{Axis, Error};
    use num_traits::One;

    #[test]
    fn jacobian_examples() {
        let q = build_tilde_q();
        let j = jacobian(&q, &"i,0,1".parse().unwrap());
        assert!(j.value.is_zero());
        assert!(!j.is_singular());

        let mut m = TriForm::default();
        *m.get_mut([2, 2, 2]) = GaussianRational::one();
        let j = jacobian(&m, &"0,0,0".parse().unwrap());
        assert!(j.is_singular());
    }

    #[test]
    fn smooth_along_the_curves() {
        let q = build_tilde_q();
        let pts = sample_curve_points(&tilde_curves(), 50, 11);
        assert_eq!(pts.len(), 50);
        for p in &pts {
            let j = jacobian(&q, p);
            assert!(j.value.is_zero(), "{p}");
            assert!(!j.is_singular(), "{p}");
        }
    }

    #[test]
    fn exact_involutions_on_curve_points() {
        let q = build_tilde_q();
        let mut checked = 0;
        for p in sample_curve_points(&tilde_curves(), 100, 5) {
            for axis in Axis::ALL {
                let Ok(once) = tau_point(&q, axis, &p, Formula::General) else { continue };
                assert!(q.eval(&once).is_zero());
                if let Ok(other) = tau_point(&q, axis, &p, Formula::OnSurface) {
                    assert_eq!(once, other);
                }
                match tau_point(&q, axis, &once, Formula::General) {
                    Ok(twice) => {
                        assert_eq!(twice, p);
                        checked += 1;
                    }
                    Err(Error::Indeterminate) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
        assert!(checked >= 100, "{checked}");
    }

    #[test]
    fn float_involutions() {
        let q = build_tilde_q();
        let pts = sample_surface_points_f64(&q, 100, 3);
        assert_eq!(pts.len(), 100);
        for p in &pts {
            for axis in Axis::ALL {
                let once = tau_point_f64(&q, axis, p, 1e-12).unwrap();
                assert!(once.relative_residual(&q) < 1e-8);
                let twice = tau_point_f64(&q, axis, &once, 1e-12).unwrap();
                assert!(twice.proj_close(p, 1e-8));
            }
        }
    }
}
