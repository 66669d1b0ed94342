//! Sparse polynomials in the six homogeneous coordinates
//! `x₀, x₁, y₀, y₁, z₀, z₁` over ℚ(i).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::GaussianRational;

pub const NVARS: usize = 6;
pub const VAR_NAMES: [&str; NVARS] = ["x0", "x1", "y0", "y1", "z0", "z1"];

pub type Exponent = [u32; NVARS];

/// Term map from exponent tuple to nonzero coefficient.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Exponent, GaussianRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MpOp {
    Add,
    Sub,
    Mul,
}

pub fn mp_arith(p: &MultiPoly, q: &MultiPoly, op: MpOp) -> MultiPoly {
    match op {
        MpOp::Add => p + q,
        MpOp::Sub => p - q,
        MpOp::Mul => p * q,
    }
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        MultiPoly::monomial([0; NVARS], c)
    }

    pub fn monomial(exp: Exponent, c: GaussianRational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(exp, &c);
        p
    }

    /// The coordinate with the given index (0 = x₀, …, 5 = z₁).
    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        MultiPoly::monomial(e, GaussianRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &Exponent) -> GaussianRational {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exp: Exponent, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(MultiPoly::constant(GaussianRational::one()), |acc, _| &acc * self)
    }

    pub fn eval(&self, point: &[GaussianRational; NVARS]) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (v, &k) in point.iter().zip(exp) {
                if k > 0 {
                    term = &term * &v.pow(k);
                }
            }
            acc += &term;
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut out = MultiPoly::zero();
        for (exp, c) in &self.terms {
            if exp[var] == 0 {
                continue;
            }
            let mut e = *exp;
            e[var] -= 1;
            out.add_term(e, &c.clone().mul(GaussianRational::from(exp[var] as i64)));
        }
        out
    }

    /// Simultaneous substitution of every coordinate by a polynomial.
    pub fn substitute(&self, subs: &[MultiPoly; NVARS]) -> Self {
        let mut powers: Vec<Vec<MultiPoly>> = Vec::with_capacity(NVARS);
        for (i, s) in subs.iter().enumerate() {
            let max = self.terms.keys().map(|e| e[i]).max().unwrap_or(0);
            let mut pw = vec![MultiPoly::constant(GaussianRational::one())];
            for k in 1..=max as usize {
                pw.push(&pw[k - 1] * s);
            }
            powers.push(pw);
        }
        let mut out = MultiPoly::zero();
        for (exp, c) in &self.terms {
            let mut term = MultiPoly::constant(c.clone());
            for i in 0..NVARS {
                if exp[i] > 0 {
                    term = &term * &powers[i][exp[i] as usize];
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Multidegree restricted to a pair of coordinates, e.g. `(0, 1)` for x.
    pub fn pair_degrees(&self, a: usize, b: usize) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|e| e[a] + e[b]).collect();
        d.sort_unstable();
        d.dedup();
        d
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for i in 0..NVARS {
                    e[i] += eb[i];
                }
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-GaussianRational::one())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .zip(VAR_NAMES)
                    .filter(|(k, _)| **k > 0)
                    .map(|(k, n)| if *k == 1 { n.to_string() } else { format!("{n}^{k}") })
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{self}]")
    }
}

/// JSON form: a list of `{"exp": [6 ints], "c": "a/b+c/d*i"}` terms.
#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Exponent,
    c: GaussianRational,
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self.terms.iter().map(|(e, c)| TermJson { exp: *e, c: c.clone() }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<TermJson>::deserialize(d)?;
        let mut p = MultiPoly::zero();
        for t in v {
            p.add_term(t.exp, &t.c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x0() -> MultiPoly {
        MultiPoly::var(0)
    }
    fn x1() -> MultiPoly {
        MultiPoly::var(1)
    }

    #[test]
    fn examples() {
        let prod = mp_arith(&x0(), &x1(), MpOp::Mul);
        assert_eq!(prod, MultiPoly::monomial([1, 1, 0, 0, 0, 0], GaussianRational::one()));
        let p = &x0() + &MultiPoly::var(3);
        assert_eq!(mp_arith(&p, &MultiPoly::zero(), MpOp::Add), p);
        let s = &x0() + &x1();
        let sq = mp_arith(&s, &s, MpOp::Mul);
        let mut expect = MultiPoly::zero();
        expect.add_term([2, 0, 0, 0, 0, 0], &GaussianRational::from(1));
        expect.add_term([1, 1, 0, 0, 0, 0], &GaussianRational::from(2));
        expect.add_term([0, 2, 0, 0, 0, 0], &GaussianRational::from(1));
        assert_eq!(sq, expect);
        assert!(mp_arith(&s, &s, MpOp::Sub).is_zero());
    }

    #[test]
    fn partials_and_substitution() {
        // d/dx0 (x0^2 x1) = 2 x0 x1
        let p = MultiPoly::monomial([2, 1, 0, 0, 0, 0], GaussianRational::one());
        assert_eq!(p.partial(0), MultiPoly::monomial([1, 1, 0, 0, 0, 0], GaussianRational::from(2)));
        assert!(p.partial(2).is_zero());
        // x0 -> x0 + x1 in x0^2 gives the binomial expansion
        let mut subs: [MultiPoly; NVARS] = std::array::from_fn(MultiPoly::var);
        subs[0] = &x0() + &x1();
        let sub = MultiPoly::monomial([2, 0, 0, 0, 0, 0], GaussianRational::one()).substitute(&subs);
        assert_eq!(sub, (&x0() + &x1()).pow(2));
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::array::uniform6(0u32..3), -5i64..5), 0..6).prop_map(|terms| {
            let mut p = MultiPoly::zero();
            for (e, c) in terms {
                p.add_term(e, &GaussianRational::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws_and_no_zero_terms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            for (_, v) in (&a * &b).terms() {
                prop_assert!(!v.is_zero());
            }
        }

        #[test]
        fn json_roundtrip(a in arb_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<MultiPoly>(&s).unwrap(), a);
        }
    }
}
