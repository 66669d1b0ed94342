//! Certified real-root isolation with Sturm sequences over ℚ.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::gaussian::rat_to_f64;
use super::intpoly::IntPolynomial;
use super::poly::Poly;
use super::ring::ExactRing;
use crate::error::{Error, Result};

/// Default bisection tolerance for [`refine_root`].
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

/// A closed rational interval `[lo, hi]`. Isolating intervals produced by
/// [`isolate_real_roots`] either have `lo == hi` (an exact rational root) or
/// endpoints that are not roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        Interval { lo, hi }
    }

    pub fn from_f64(lo: f64, hi: f64) -> Self {
        let r = |x: f64| BigRational::from_float(x).expect("finite endpoint");
        Interval { lo: r(lo), hi: r(hi) }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        rat_to_f64(&((&self.lo + &self.hi) / BigRational::from_integer(2.into())))
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        rat_to_f64(&self.lo) <= x && x <= rat_to_f64(&self.hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub interval: Interval,
    pub multiplicity: usize,
}

impl Serialize for IsolatedRoot {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("IsolatedRoot", 3)?;
        st.serialize_field("lo", &self.interval.lo.to_string())?;
        st.serialize_field("hi", &self.interval.hi.to_string())?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.end()
    }
}

/// Sturm chain `p, p', -rem(p, p'), …` of a square-free rational polynomial.
struct SturmChain {
    chain: Vec<Poly<BigRational>>,
}

impl SturmChain {
    fn new(p: &Poly<BigRational>) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(r.neg_ref());
        }
        SturmChain { chain }
    }

    fn sign_changes(&self, x: &BigRational) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for q in &self.chain {
            let s = sign(&q.eval(x));
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Number of distinct roots in `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.sign_changes(a) - self.sign_changes(b)
    }
}

fn sign(x: &BigRational) -> i8 {
    match x.cmp(&BigRational::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Strict bound on the modulus of every root (Cauchy).
fn cauchy_bound(p: &Poly<BigRational>) -> BigRational {
    let lc = p.leading().unwrap().abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(BigRational::zero);
    max + BigRational::one()
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// A point strictly inside `(a, b)` at which `p` does not vanish.
fn split_point(p: &Poly<BigRational>, a: &BigRational, b: &BigRational) -> BigRational {
    let mut mid = (a + b) * half();
    while p.eval(&mid).is_zero() {
        mid = (a + &mid) * half();
    }
    mid
}

/// Isolates every distinct real root of `p`, in increasing order.
///
/// The polynomial is first reduced to its square-free factors; each interval
/// contains exactly one root of `p` and carries that root's multiplicity.
pub fn isolate_real_roots(p: &IntPolynomial) -> Result<Vec<IsolatedRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let rp = p.to_rational();
    if rp.is_constant() {
        return Ok(Vec::new());
    }
    let factors = rp.square_free_decomposition();
    let sqf = factors.iter().fold(Poly::constant(BigRational::one()), |acc, (f, _)| acc.mul_ref(f));
    let sturm = SturmChain::new(&sqf);
    let factor_chains: Vec<(SturmChain, usize)> = factors.iter().map(|(f, m)| (SturmChain::new(f), *m)).collect();

    let bound = cauchy_bound(&sqf);
    let mut pending = vec![(-bound.clone(), bound)];
    let mut found = Vec::new();
    while let Some((a, b)) = pending.pop() {
        match sturm.count(&a, &b) {
            0 => {}
            1 => found.push(Interval::new(a, b)),
            _ => {
                let m = split_point(&sqf, &a, &b);
                pending.push((m.clone(), b));
                pending.push((a, m));
            }
        }
    }
    found.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(found
        .into_iter()
        .map(|interval| {
            let multiplicity = factor_chains
                .iter()
                .find(|(c, _)| c.count(&interval.lo, &interval.hi) == 1)
                .map(|(_, m)| *m)
                .expect("isolated root belongs to exactly one square-free factor");
            IsolatedRoot { interval, multiplicity }
        })
        .collect())
}

/// Bisects an isolating interval down to width `< tol` and returns its
/// midpoint, which is then within `tol` of the root.
pub fn refine_root(p: &IntPolynomial, interval: &Interval, tol: f64) -> Result<f64> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sqf = p.to_rational().square_free_part();
    let (mut lo, mut hi) = (interval.lo.clone(), interval.hi.clone());
    if lo > hi {
        std::mem::swap(&mut lo, &mut hi);
    }
    let mut s_lo = sign(&sqf.eval(&lo));
    let s_hi = sign(&sqf.eval(&hi));
    if s_lo == 0 {
        return Ok(rat_to_f64(&lo));
    }
    if s_hi == 0 {
        return Ok(rat_to_f64(&hi));
    }
    if s_lo == s_hi {
        return Err(Error::NoSignChange);
    }
    let tol = BigRational::from_float(tol).filter(|t| t.is_positive()).ok_or(Error::NoSignChange)?;
    while &hi - &lo >= tol {
        let mid = (&lo + &hi) * half();
        let s = sign(&sqf.eval(&mid));
        if s == 0 {
            return Ok(rat_to_f64(&mid));
        }
        if s == s_lo {
            lo = mid;
            s_lo = s;
        } else {
            hi = mid;
        }
    }
    Ok(rat_to_f64(&((lo + hi) * half())))
}

/// Largest real root of `p`, refined to `tol`, or `None` without real roots.
pub fn largest_real_root(p: &IntPolynomial, tol: f64) -> Result<Option<f64>> {
    let roots = isolate_real_roots(p)?;
    roots.last().map(|r| refine_root(p, &r.interval, tol)).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn salem_quadratic() {
        let p = IntPolynomial::from_i64(&[1, -18, 1]);
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.multiplicity == 1));
        assert!(roots[1].interval.contains_f64(17.944));
        let big = refine_root(&p, &roots[1].interval, 1e-12).unwrap();
        // 9 + 4√5 from the quadratic formula
        assert!((big - (9.0 + 4.0 * 5f64.sqrt())).abs() < 1e-12);
        let small = refine_root(&p, &roots[0].interval, 1e-12).unwrap();
        assert!((small * big - 1.0).abs() < 1e-10);
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&IntPolynomial::from_i64(&[1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn double_root() {
        let roots = isolate_real_roots(&IntPolynomial::from_i64(&[1, -2, 1])).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity, 2);
        let x = refine_root(&IntPolynomial::from_i64(&[1, -2, 1]), &roots[0].interval, 1e-12).unwrap();
        assert!((x - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mixed_multiplicities_are_ordered() {
        // (t + 2)^3 (t - 1) (t - 3)^2
        let p = IntPolynomial::from_i64(&[2, 1])
            .pow(3)
            .mul(&IntPolynomial::from_i64(&[-1, 1]))
            .mul(&IntPolynomial::from_i64(&[-3, 1]).pow(2));
        let roots = isolate_real_roots(&p).unwrap();
        let got: Vec<(f64, usize)> = roots
            .iter()
            .map(|r| (refine_root(&p, &r.interval, 1e-12).unwrap(), r.multiplicity))
            .collect();
        assert_eq!(got.len(), 3);
        for ((x, m), (ex, em)) in got.iter().zip([(-2.0, 3), (1.0, 1), (3.0, 2)]) {
            assert!((x - ex).abs() < 1e-12);
            assert_eq!(*m, em);
        }
    }

    #[test]
    fn refine_examples() {
        let x = refine_root(&IntPolynomial::from_i64(&[1, -18, 1]), &Interval::from_f64(17.0, 18.0), 1e-12).unwrap();
        assert!((x - 17.944_271_909_999_16).abs() < 1e-11);
        let x = refine_root(&IntPolynomial::from_i64(&[-1, 1]), &Interval::from_f64(0.0, 2.0), 1e-12).unwrap();
        assert_eq!(x, 1.0);
        let x = refine_root(&IntPolynomial::from_i64(&[1, -6, 1]), &Interval::from_f64(5.0, 6.0), 1e-12).unwrap();
        assert!((x - 5.828_427_124_746_19).abs() < 1e-11);
        assert_eq!(
            refine_root(&IntPolynomial::from_i64(&[1, -18, 1]), &Interval::from_f64(1.0, 2.0), 1e-12),
            Err(Error::NoSignChange)
        );
    }

    #[test]
    fn zero_polynomial() {
        assert_eq!(isolate_real_roots(&IntPolynomial::from_i64(&[])), Err(Error::ZeroPolynomial));
    }
}
