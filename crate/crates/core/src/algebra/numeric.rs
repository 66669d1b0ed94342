//! Floating-point root finding and exact recognition of small Gaussian
//! rationals. Used to generate candidates that are then confirmed exactly.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::poly::Poly;
use super::GaussianRational;
use crate::error::{Error, Result};

pub const MAX_ITERATIONS: usize = 200;
pub const DEFAULT_DENOM_BOUND: u64 = 64;

/// Residual threshold for an accepted root `r` of `p`:
/// `|p(r)| ≤ 1e-8 · (1 + max |cᵢ|) · max(1, |r|)^deg`.
///
/// The `max(1, |r|)^deg` factor keeps the test scale-free for roots of
/// modulus above one, where plain `f64` evaluation loses absolute accuracy.
pub fn residual_threshold(coeffs: &[Complex64], root: Complex64) -> f64 {
    let cmax = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let deg = coeffs.len().saturating_sub(1) as i32;
    1e-8 * (1.0 + cmax) * root.norm().max(1.0).powi(deg)
}

pub fn horner(coeffs: &[Complex64], x: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::zero(), |acc, c| acc * x + c)
}

/// All complex roots (with multiplicity) of a polynomial over ℚ(i), by
/// Aberth–Ehrlich simultaneous iteration.
pub fn complex_roots_numeric(p: &Poly<GaussianRational>) -> Result<Vec<Complex64>> {
    let coeffs: Vec<Complex64> = p.coeffs().iter().map(|c| c.to_complex()).collect();
    complex_roots_f64(&coeffs)
}

/// [`complex_roots_numeric`] on floating coefficients, lowest degree first.
pub fn complex_roots_f64(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
        coeffs.pop();
    }
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Err(Error::ZeroPolynomial);
    }
    // Exact zero roots are split off so they don't stall the iteration.
    let zeros = coeffs.iter().take_while(|c| c.norm() == 0.0).count();
    let reduced = &coeffs[zeros..];
    let mut roots = vec![Complex64::zero(); zeros];
    let m = reduced.len() - 1;
    if m == 0 {
        return Ok(roots);
    }
    let lc = reduced[m];
    let monic: Vec<Complex64> = reduced.iter().map(|c| c / lc).collect();
    let deriv: Vec<Complex64> = monic.iter().enumerate().skip(1).map(|(i, c)| c * i as f64).collect();

    // Initial guesses on a circle of radius ~ geometric mean root modulus,
    // rotated off the real axis.
    let radius = monic[0].norm().powf(1.0 / m as f64).max(1e-3);
    let mut z: Vec<Complex64> = (0..m)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / m as f64 + 0.4))
        .collect();

    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let mut max_step: f64 = 0.0;
        for i in 0..m {
            let pv = horner(&monic, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let dv = horner(&deriv, z[i]);
            let ratio = pv / dv;
            let sum: Complex64 = (0..m).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let step = ratio / (1.0 - ratio * sum);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            converged = true;
            break;
        }
    }
    let ok = z.iter().all(|r| horner(&monic, *r).norm() <= residual_threshold(&monic, *r));
    roots.extend(z);
    if converged || ok {
        Ok(roots)
    } else {
        Err(Error::NonConvergence { iterations: MAX_ITERATIONS, partial: roots })
    }
}

/// Best rational approximation of `x` with denominator `≤ bound`, via
/// continued fractions (convergents plus the last semiconvergent).
pub fn best_rational(x: f64, bound: u64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut frac = x;
    let bound = bound as i128;
    for _ in 0..64 {
        let a = frac.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > bound {
            // Largest admissible semiconvergent.
            let t = (bound - k0) / k1;
            let (hs, ks) = (t * h1 + h0, t * k1 + k0);
            let cand = [(h1, k1), (hs, ks)];
            let best = cand
                .iter()
                .filter(|&&(_, k)| k > 0)
                .min_by(|a, b| {
                    let ea = (x - a.0 as f64 / a.1 as f64).abs();
                    let eb = (x - b.0 as f64 / b.1 as f64).abs();
                    ea.partial_cmp(&eb).unwrap()
                })?;
            return Some(BigRational::new(BigInt::from(best.0), BigInt::from(best.1)));
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let rem = frac - a;
        if rem.abs() < 1e-300 {
            break;
        }
        frac = 1.0 / rem;
    }
    (k1 > 0).then(|| BigRational::new(BigInt::from(h1), BigInt::from(k1)))
}

/// The Gaussian rational with both denominators `≤ denom_bound` lying within
/// `tol` of `z` (componentwise), if any.
pub fn recognize_gaussian_rational(z: Complex64, denom_bound: u64, tol: f64) -> Option<GaussianRational> {
    let part = |x: f64| -> Option<BigRational> {
        let r = best_rational(x, denom_bound.max(1))?;
        ((x - r.to_f64()?).abs() <= tol).then_some(r)
    };
    Some(GaussianRational::new(part(z.re)?, part(z.im)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_by_re(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap()));
        v
    }

    fn gp(v: &[&str]) -> Poly<GaussianRational> {
        Poly::new(v.iter().map(|s| s.parse().unwrap()).collect())
    }

    #[test]
    fn root_examples() {
        let r = sorted_by_re(complex_roots_numeric(&gp(&["1", "0", "1"])).unwrap());
        assert!((r[0] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((r[1] - Complex64::new(0.0, 1.0)).norm() < 1e-12);

        let r = complex_roots_numeric(&gp(&["-2/3", "1"])).unwrap();
        assert!((r[0] - Complex64::new(2.0 / 3.0, 0.0)).norm() < 1e-12);

        let r = sorted_by_re(complex_roots_numeric(&gp(&["1", "-18", "1"])).unwrap());
        let big = 9.0 + 4.0 * 5f64.sqrt();
        assert!((r[1].re - big).abs() < 1e-10 && r[1].im.abs() < 1e-10);
        assert!((r[0].re * r[1].re - 1.0).abs() < 1e-10);
    }

    #[test]
    fn gaussian_coefficients_and_zero_roots() {
        // t^2 (t - i)(t + 2/3)
        let p = gp(&["0", "0", "-2/3*i", "2/3-i", "1"]);
        let r = complex_roots_numeric(&p).unwrap();
        assert_eq!(r.len(), 4);
        for expect in [Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(-2.0 / 3.0, 0.0)] {
            assert!(r.iter().any(|z| (z - expect).norm() < 1e-9), "{expect} missing from {r:?}");
        }
    }

    #[test]
    fn constant_is_rejected() {
        assert_eq!(complex_roots_numeric(&gp(&["3"])), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn recognition_examples() {
        assert_eq!(
            recognize_gaussian_rational(Complex64::new(0.666666667, 0.0), 64, 1e-6),
            Some("2/3".parse().unwrap())
        );
        assert_eq!(recognize_gaussian_rational(Complex64::new(1e-13, 0.0), 64, 1e-6), Some(GaussianRational::zero()));
        assert_eq!(recognize_gaussian_rational(Complex64::new(2f64.sqrt(), 0.0), 64, 1e-9), None);
        assert_eq!(
            recognize_gaussian_rational(Complex64::new(-0.2, -1.0 + 1e-12), 64, 1e-9),
            Some("-1/5-i".parse().unwrap())
        );
    }

    #[test]
    fn best_rational_respects_bound() {
        assert_eq!(best_rational(std::f64::consts::PI, 10), Some(BigRational::new(22.into(), 7.into())));
        assert_eq!(best_rational(-0.75, 64), Some(BigRational::new((-3).into(), 4.into())));
        assert_eq!(best_rational(5.0, 1), Some(BigRational::from_integer(5.into())));
    }
}
