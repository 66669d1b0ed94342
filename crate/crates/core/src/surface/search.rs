use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{BiForm, TriForm};
use crate::algebra::numeric::{complex_roots_f64, horner};
use crate::algebra::{complex_roots_numeric, recognize_gaussian_rational, resultant, GaussianRational, Poly, ProjPoint};
use crate::curvegeom::AxisCurve;
use crate::error::{Error, Result};
use crate::Axis;

type Gq = GaussianRational;
type GqPoly = Poly<Gq>;

/// Tolerance for matching a numeric root to a Gaussian rational.
const RECOGNITION_TOL: f64 = 1e-6;
/// Largest acceptable relative residual for a numeric-only candidate.
const NUMERIC_RESIDUAL: f64 = 1e-6;

/// Whether all three slices along the curve's axis vanish at its fixed point.
pub fn curve_contained(q: &TriForm, c: &AxisCurve) -> bool {
    let (u, v) = c.fixed();
    q.slices(c.axis()).iter().all(|s| s.eval(u, v).is_zero())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "certainty", rename_all = "lowercase")]
pub enum Certainty {
    /// Recognized as Gaussian rational and confirmed by exact evaluation.
    Exact,
    /// Only known numerically; `residual` is the largest relative slice value.
    Numeric { residual: f64 },
}

/// A solution of the slice system, i.e. a parallel curve on the surface.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FoundCurve {
    /// Present exactly when `certainty` is [`Certainty::Exact`].
    pub curve: Option<AxisCurve>,
    pub axis: Axis,
    /// Affine approximations of the two fixed coordinates (`None` at infinity).
    #[serde(serialize_with = "ser_approx")]
    pub approx: [Option<Complex64>; 2],
    #[serde(flatten)]
    pub certainty: Certainty,
}

fn ser_approx<S: serde::Serializer>(a: &[Option<Complex64>; 2], s: S) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<Option<[f64; 2]>> = a.iter().map(|c| c.map(|z| [z.re, z.im])).collect();
    v.serialize(s)
}

/// `[s : 1]` or `[1 : s]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Chart {
    Affine,
    Inverted,
}

impl Chart {
    fn point(self, s: Gq) -> ProjPoint {
        match self {
            Chart::Affine => ProjPoint::affine(s),
            Chart::Inverted => ProjPoint::new(Gq::one(), s).expect("first coordinate is 1"),
        }
    }

    fn approx(self, s: Complex64) -> Option<Complex64> {
        match self {
            Chart::Affine => Some(s),
            Chart::Inverted if s.norm() < 1e-12 => None,
            Chart::Inverted => Some(1.0 / s),
        }
    }

    /// Power of the chart variable carried by `w₀ᵃ w₁^{2−a}`.
    fn power(self, a: usize) -> usize {
        match self {
            Chart::Affine => a,
            Chart::Inverted => 2 - a,
        }
    }
}

/// The slice in chart coordinates, as a polynomial in `t` (second axis)
/// whose coefficients are polynomials in `s` (first axis).
fn dehomogenize(f: &BiForm, cu: Chart, cv: Chart) -> Poly<GqPoly> {
    let mut grid = vec![vec![Gq::zero(); 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            grid[cv.power(b)][cu.power(a)] = f.coeffs[a][b].clone();
        }
    }
    Poly::new(grid.into_iter().map(Poly::new).collect())
}

fn eval_at_s(f: &Poly<GqPoly>, s: &Gq) -> GqPoly {
    Poly::new(f.coeffs().iter().map(|c| c.eval(s)).collect())
}

/// Coefficients in `t` at a numeric `s`, each with the size of the terms
/// that produced it, so that cancellation can be told apart from zero.
fn eval_at_s_f64(f: &Poly<GqPoly>, s: Complex64) -> Vec<(Complex64, f64)> {
    let r = s.norm();
    f.coeffs()
        .iter()
        .map(|c| {
            let cs: Vec<Complex64> = c.coeffs().iter().map(Gq::to_complex).collect();
            let size = cs.iter().rev().fold(0.0, |acc, z| acc * r + z.norm());
            (horner(&cs, s), size)
        })
        .collect()
}

/// Drops leading coefficients that vanish up to rounding.
fn trim_numeric(c: &[(Complex64, f64)]) -> Vec<Complex64> {
    let keep = c.iter().rposition(|(z, m)| z.norm() > 1e-9 * m).map_or(0, |i| i + 1);
    c[..keep].iter().map(|(z, _)| *z).collect()
}

fn relative_value(coeffs: &[Complex64], t: Complex64) -> f64 {
    let size: f64 = coeffs.iter().enumerate().map(|(k, c)| c.norm() * t.norm().powi(k as i32)).sum();
    horner(coeffs, t).norm() / size.max(f64::MIN_POSITIVE)
}

/// Like [`relative_value`] but measured against the pre-evaluation sizes.
fn relative_value_sized(coeffs: &[(Complex64, f64)], t: Complex64) -> f64 {
    let (mut acc, mut size, mut pow) = (Complex64::zero(), 0.0, 1.0);
    let mut tk = Complex64::new(1.0, 0.0);
    for (c, m) in coeffs {
        acc += c * tk;
        size += m * pow;
        tk *= t;
        pow *= t.norm();
    }
    acc.norm() / size.max(f64::MIN_POSITIVE)
}

struct Search<'a> {
    q: &'a TriForm,
    axis: Axis,
    denom_bound: u64,
    found: Vec<FoundCurve>,
}

impl Search<'_> {
    fn push(&mut self, fc: FoundCurve) {
        let dup = self.found.iter().any(|g| match (&g.curve, &fc.curve) {
            (Some(a), Some(b)) => a == b,
            (None, None) => g.approx.iter().zip(&fc.approx).all(|(x, y)| match (x, y) {
                (Some(x), Some(y)) => (x - y).norm() < 1e-6 * (1.0 + x.norm()),
                (None, None) => true,
                _ => false,
            }),
            _ => false,
        });
        if !dup {
            self.found.push(fc);
        }
    }

    fn chart(&mut self, slices: &[BiForm], cu: Chart, cv: Chart) -> Result<()> {
        let polys: Vec<Poly<GqPoly>> =
            slices.iter().map(|f| dehomogenize(f, cu, cv)).filter(|p| !p.is_zero()).collect();
        let mut g = GqPoly::zero();
        for i in 0..polys.len() {
            for j in i + 1..polys.len() {
                let r = resultant(&polys[i], &polys[j])?;
                g = g.gcd(&r);
            }
        }
        if g.is_zero() {
            return Err(Error::SharedComponent(format!("slice resultants along {} vanish identically", self.axis)));
        }
        if g.is_constant() {
            return Ok(());
        }
        let mut seen: Vec<Complex64> = Vec::new();
        for s in complex_roots_numeric(&g)? {
            if seen.iter().any(|x| (x - s).norm() < 1e-7 * (1.0 + s.norm())) {
                continue;
            }
            seen.push(s);
            match recognize_gaussian_rational(s, self.denom_bound, RECOGNITION_TOL) {
                Some(se) if g.eval(&se).is_zero() => self.exact_s(&polys, se, s, cu, cv)?,
                _ => self.numeric_s(&polys, s, cu, cv),
            }
        }
        Ok(())
    }

    fn exact_s(&mut self, polys: &[Poly<GqPoly>], se: Gq, s: Complex64, cu: Chart, cv: Chart) -> Result<()> {
        let h = polys.iter().fold(GqPoly::zero(), |acc, p| acc.gcd(&eval_at_s(p, &se)));
        if h.is_zero() {
            let u = cu.point(se);
            return Err(Error::SharedComponent(format!("all slices vanish on the line {} = {u}", self.axis.others().0)));
        }
        if h.is_constant() {
            return Ok(());
        }
        for t in complex_roots_numeric(&h)? {
            let approx = [cu.approx(s), cv.approx(t)];
            let exact = recognize_gaussian_rational(t, self.denom_bound, RECOGNITION_TOL)
                .map(|te| AxisCurve::new(self.axis, cu.point(se.clone()), cv.point(te)))
                .filter(|c| curve_contained(self.q, c));
            match exact {
                Some(c) => self.push(FoundCurve { curve: Some(c), axis: self.axis, approx, certainty: Certainty::Exact }),
                None => {
                    let residual = relative_value(&h.coeffs().iter().map(Gq::to_complex).collect::<Vec<_>>(), t);
                    self.push(FoundCurve { curve: None, axis: self.axis, approx, certainty: Certainty::Numeric { residual } })
                }
            }
        }
        Ok(())
    }

    fn numeric_s(&mut self, polys: &[Poly<GqPoly>], s: Complex64, cu: Chart, cv: Chart) {
        let evaluated: Vec<Vec<(Complex64, f64)>> = polys.iter().map(|p| eval_at_s_f64(p, s)).collect();
        let trimmed: Vec<Vec<Complex64>> = evaluated.iter().map(|c| trim_numeric(c)).collect();
        let Some(base) = trimmed.iter().filter(|c| c.len() > 1).min_by_key(|c| c.len()) else { return };
        let Ok(roots) = complex_roots_f64(base) else { return };
        for t in roots {
            let residual = evaluated.iter().map(|c| relative_value_sized(c, t)).fold(0.0, f64::max);
            if residual < NUMERIC_RESIDUAL {
                let approx = [cu.approx(s), cv.approx(t)];
                self.push(FoundCurve { curve: None, axis: self.axis, approx, certainty: Certainty::Numeric { residual } });
            }
        }
    }
}

/// All curves parallel to `axis` on `q = 0`, by solving `Q₀ = Q₁ = Q₂ = 0`
/// on the product of the other two lines in each of the four affine charts.
///
/// Exact results come first in the order found; Gaussian-rational
/// solutions with denominators up to `denom_bound` are found completely.
pub fn find_axis_curves(q: &TriForm, axis: Axis, denom_bound: u64) -> Result<Vec<FoundCurve>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let slices: Vec<BiForm> = q.slices(axis).into_iter().filter(|s| !s.is_zero()).collect();
    if slices.len() == 1 {
        return Err(Error::SharedComponent(format!("only one slice along {axis} is nonzero")));
    }
    let mut search = Search { q, axis, denom_bound, found: Vec::new() };
    for cu in [Chart::Affine, Chart::Inverted] {
        for cv in [Chart::Affine, Chart::Inverted] {
            search.chart(&slices, cu, cv)?;
        }
    }
    let mut found = search.found;
    found.sort_by_key(|f| !matches!(f.certainty, Certainty::Exact));
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvegeom::tilde_curves;
    use crate::surface::build_tilde_q;
    use crate::surface::tests::arb_triform;
    use proptest::prelude::*;

    #[test]
    fn containment_examples() {
        let q = build_tilde_q();
        assert!(curve_contained(&q, &AxisCurve::parse(Axis::Z, "i", "0").unwrap()));
        assert!(!curve_contained(&q, &AxisCurve::parse(Axis::Z, "0", "0").unwrap()));
        assert!(tilde_curves().iter().all(|c| curve_contained(&q, c)));
    }

    #[test]
    fn finds_all_tilde_curves() {
        let q = build_tilde_q();
        let expected = tilde_curves();
        let mut total = 0;
        for axis in Axis::ALL {
            let found = find_axis_curves(&q, axis, 64).unwrap();
            assert_eq!(found.len(), 8, "{axis}: {found:?}");
            for f in &found {
                assert_eq!(f.certainty, Certainty::Exact);
                let c = f.curve.as_ref().unwrap();
                assert!(curve_contained(&q, c));
                assert!(expected.contains(c), "{c}");
            }
            total += found.len();
        }
        assert_eq!(total, 24);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(find_axis_curves(&TriForm::default(), Axis::X, 64), Err(Error::ZeroPolynomial));
        let mut q = TriForm::default();
        *q.get_mut([2, 1, 1]) = Gq::one();
        assert!(matches!(find_axis_curves(&q, Axis::X, 64), Err(Error::SharedComponent(_))));
        // x₀² y₀y₁ z₀z₁ + x₁² y₀y₁ z₁²: every slice vanishes along y = 0
        let mut q = TriForm::default();
        *q.get_mut([2, 1, 1]) = Gq::one();
        *q.get_mut([0, 1, 0]) = Gq::one();
        assert!(matches!(find_axis_curves(&q, Axis::X, 64), Err(Error::SharedComponent(_))));
    }

    #[test]
    fn irrational_basepoint_is_numeric() {
        // Q₂ = (y₀² − 2y₁²) z₁², Q₁ = 0, Q₀ = y₀y₁ z₀²: common zeros are
        // y = ±√2 with z = 0, and z = ∞ with y ∈ {0, ∞}.
        let mut q = TriForm::default();
        *q.get_mut([2, 2, 0]) = Gq::one();
        *q.get_mut([2, 0, 0]) = Gq::from(-2);
        *q.get_mut([0, 1, 2]) = Gq::one();
        let found = find_axis_curves(&q, Axis::X, 64).unwrap();
        assert_eq!(found.len(), 4, "{found:?}");
        let exact: Vec<&AxisCurve> = found.iter().filter_map(|f| f.curve.as_ref()).collect();
        assert_eq!(exact.len(), 2);
        assert!(exact.contains(&&AxisCurve::parse(Axis::X, "0", "inf").unwrap()));
        assert!(exact.contains(&&AxisCurve::parse(Axis::X, "inf", "inf").unwrap()));
        for f in found.iter().filter(|f| f.curve.is_none()) {
            assert!(matches!(f.certainty, Certainty::Numeric { residual } if residual < NUMERIC_RESIDUAL), "{f:?}");
            let y = f.approx[0].unwrap();
            assert!((y.re.abs() - 2f64.sqrt()).abs() < 1e-6 && y.im.abs() < 1e-6, "{y}");
            assert_eq!(f.approx[1], Some(Complex64::zero()));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]
        #[test]
        fn generic_forms_have_no_parallel_curves(q in arb_triform(), a in 0usize..3) {
            prop_assume!(q.slices(Axis::from_index(a)).iter().all(|s| !s.is_zero()));
            prop_assert!(find_axis_curves(&q, Axis::from_index(a), 64).unwrap().is_empty());
        }
    }
}
