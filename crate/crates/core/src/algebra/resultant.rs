use super::poly::Poly;
use super::ring::{bareiss_det, ExactRing};
use crate::error::{Error, Result};

/// The Sylvester matrix of `p` (degree m) and `q` (degree n): n shifted rows
/// of `p`'s coefficients followed by m shifted rows of `q`'s, highest degree
/// first.
pub fn sylvester_matrix<R: ExactRing>(p: &Poly<R>, q: &Poly<R>) -> Vec<Vec<R>> {
    let m = p.degree().unwrap_or(0);
    let n = q.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (shifts, poly, deg) in [(n, p, m), (m, q, n)] {
        for s in 0..shifts {
            let mut row = vec![R::zero(); size];
            for k in 0..=deg {
                row[s + k] = poly.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    rows
}

/// `Res(p, q)` as the Sylvester determinant, computed fraction-free.
///
/// Works over any exact coefficient ring, so bivariate elimination passes
/// `Poly<Poly<_>>` and gets back a polynomial in the remaining variable.
/// A zero polynomial against a nonzero one gives 0; two nonzero constants
/// give 1.
pub fn resultant<R: ExactRing>(p: &Poly<R>, q: &Poly<R>) -> Result<R> {
    match (p.degree(), q.degree()) {
        (None, None) => Err(Error::BothZero),
        (None, _) | (_, None) => Ok(R::zero()),
        (Some(0), Some(0)) => Ok(R::one()),
        _ => Ok(bareiss_det(sylvester_matrix(p, q))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussianRational;
    use proptest::prelude::*;

    fn gp(v: &[i64]) -> Poly<GaussianRational> {
        Poly::new(v.iter().map(|&c| GaussianRational::from(c)).collect())
    }

    #[test]
    fn examples() {
        assert_eq!(resultant(&gp(&[-1, 1]), &gp(&[1, 1])).unwrap(), GaussianRational::from(2));
        assert_eq!(resultant(&gp(&[-1, 0, 1]), &gp(&[-2, 1])).unwrap(), GaussianRational::from(3));
        let p = gp(&[3, -1, 4, 1]);
        assert_eq!(resultant(&p, &p).unwrap(), GaussianRational::from(0));
        assert_eq!(resultant(&gp(&[]), &gp(&[])), Err(Error::BothZero));
    }

    #[test]
    fn gaussian_coefficients() {
        let p = Poly::new(vec![-GaussianRational::i(), GaussianRational::from(1)]);
        let q = Poly::new(vec![GaussianRational::from(1), GaussianRational::from(0), GaussianRational::from(1)]);
        // Res(t - a, q) = q(a) for monic linear p; q(i) = 0.
        assert_eq!(resultant(&p, &q).unwrap(), GaussianRational::from(0));
        let r = Poly::new(vec![GaussianRational::from(2), GaussianRational::from(1)]);
        // Res(t - i, t + 2) = (i + 2)
        assert_eq!(resultant(&p, &r).unwrap(), "2+i".parse().unwrap());
    }

    fn from_roots(roots: &[i64]) -> Poly<GaussianRational> {
        roots.iter().fold(gp(&[1]), |acc, &r| acc.mul_ref(&gp(&[-r, 1])))
    }

    proptest! {
        // Res vanishes exactly when the inputs share a root.
        #[test]
        fn vanishes_iff_common_factor(
            a in prop::collection::vec(-6i64..6, 1..5),
            b in prop::collection::vec(-6i64..6, 1..5),
            shared in prop::option::of(-6i64..6),
        ) {
            let mut a = a;
            let mut b = b;
            if let Some(s) = shared {
                a.push(s);
                b.push(s);
            }
            let (p, q) = (from_roots(&a), from_roots(&b));
            let res = resultant(&p, &q).unwrap();
            let nonconstant_gcd = !p.gcd(&q).is_constant();
            prop_assert_eq!(res == GaussianRational::from(0), nonconstant_gcd);
        }

        // Res(p, t - a) = ± p(a) for monic linear second argument.
        #[test]
        fn evaluation_property(coeffs in prop::collection::vec(-9i64..9, 1..6), a in -5i64..5) {
            let p = gp(&coeffs);
            prop_assume!(p.degree().is_some());
            let lin = gp(&[-a, 1]);
            let res = resultant(&p, &lin).unwrap();
            let val = p.eval(&GaussianRational::from(a));
            let deg = p.degree().unwrap();
            let expected = if deg.is_multiple_of(2) { val } else { -val };
            prop_assert_eq!(res, expected);
        }
    }
}
