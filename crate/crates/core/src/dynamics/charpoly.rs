use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::IntPolynomial;
use crate::error::{Error, Result};
use crate::lattice::IntMatrix;

/// Largest cyclotomic index tried when stripping.
pub const MAX_CYCLOTOMIC_INDEX: u64 = 1000;

/// `det(t·I − A)` by the Faddeev–LeVerrier recurrence. Every division in the
/// recurrence is exact over ℤ.
pub fn char_poly(a: &IntMatrix) -> Result<IntPolynomial> {
    if !a.is_square() {
        return Err(Error::NonSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = IntMatrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I
        m = a * &m;
        for i in 0..n {
            m[(i, i)] += &coeffs[n - k + 1];
        }
        let am = a * &m;
        let trace: BigInt = (0..n).map(|i| am[(i, i)].clone()).sum();
        let (q, r) = trace.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        coeffs[n - k] = -q;
    }
    Ok(IntPolynomial::new(coeffs))
}

pub fn euler_phi(n: u64) -> u64 {
    let (mut n, mut out, mut p) = (n, n, 2);
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Cyclotomic polynomials Φ₁, Φ₂, … built from `tⁿ − 1 = Π_{d|n} Φ_d`.
#[derive(Default)]
pub struct Cyclotomics {
    cache: HashMap<u64, IntPolynomial>,
}

impl Cyclotomics {
    pub fn get(&mut self, n: u64) -> IntPolynomial {
        if let Some(p) = self.cache.get(&n) {
            return p.clone();
        }
        let mut c = vec![BigInt::zero(); n as usize + 1];
        c[0] = -BigInt::one();
        c[n as usize] = BigInt::one();
        let mut p = IntPolynomial::new(c);
        for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
            p = p.div_rem_monic(&self.get(d)).0;
        }
        self.cache.insert(n, p.clone());
        p
    }
}

pub fn cyclotomic(n: u64) -> IntPolynomial {
    Cyclotomics::default().get(n)
}

/// A monic polynomial with all cyclotomic factors removed, and the removed
/// indices with multiplicities in increasing order of index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stripped {
    pub salem: IntPolynomial,
    pub parts: Vec<(u64, usize)>,
}

pub fn strip_cyclotomic(p: &IntPolynomial) -> Result<Stripped> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NonMonic);
    }
    let mut rest = p.clone();
    let mut parts = Vec::new();
    let mut cyc = Cyclotomics::default();
    for n in 1..=MAX_CYCLOTOMIC_INDEX {
        let deg = rest.degree().unwrap_or(0) as u64;
        if deg == 0 {
            break;
        }
        if euler_phi(n) > deg {
            continue;
        }
        let phi = cyc.get(n);
        let mut mult = 0;
        loop {
            let (q, r) = rest.div_rem_monic(&phi);
            if !r.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            parts.push((n, mult));
        }
    }
    Ok(Stripped { salem: rest, parts })
}
