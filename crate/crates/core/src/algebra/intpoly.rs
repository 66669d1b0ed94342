use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Poly;

/// Dense polynomial in `t` with arbitrary-precision integer coefficients,
/// lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Serializes as a JSON array of integers (strings beyond the `i64` range).
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let items: Vec<JsonInt> = self.coeffs.iter().map(JsonInt::from).collect();
        items.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<JsonInt>::deserialize(d)?;
        let coeffs = items
            .into_iter()
            .map(|j| j.into_bigint().map_err(serde::de::Error::custom))
            .collect::<Result<_, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum JsonInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for JsonInt {
    fn from(v: &BigInt) -> Self {
        use num_traits::ToPrimitive;
        match v.to_i64() {
            Some(x) => JsonInt::Small(x),
            None => JsonInt::Big(v.to_string()),
        }
    }
}

impl JsonInt {
    pub(crate) fn into_bigint(self) -> Result<BigInt, String> {
        match self {
            JsonInt::Small(x) => Ok(x.into()),
            JsonInt::Big(s) => s.parse().map_err(|_| format!("invalid integer {s:?}")),
        }
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        IntPolynomial::from_i64(&[1])
    }

    /// `t - 1`.
    pub fn t_minus_one() -> Self {
        IntPolynomial::from_i64(&[-1, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Coefficient list equals its own reverse.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// `tⁿ p(1/t) = ± p(t)`.
    pub fn is_reciprocal_up_to_sign(&self) -> bool {
        let rev: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        rev == self.coeffs || rev.iter().zip(&self.coeffs).all(|(a, b)| *a == -b)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::new(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(IntPolynomial::one(), |acc, _| acc.mul(self))
    }

    /// Division by a monic divisor: `(quotient, remainder)`.
    pub fn div_rem_monic(&self, d: &Self) -> (Self, Self) {
        assert!(d.is_monic(), "divisor must be monic");
        let dd = d.degree().unwrap();
        if self.coeffs.len() <= dd {
            return (IntPolynomial::new(vec![]), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (IntPolynomial::new(quot), IntPolynomial::new(rem))
    }

    /// Exact divisibility test (over ℚ, which agrees with ℤ for monic divisors).
    pub fn divides(&self, p: &Self) -> bool {
        if self.is_zero() {
            return p.is_zero();
        }
        p.to_rational().div_rem(&self.to_rational()).1.is_zero()
    }

    pub fn to_rational(&self) -> Poly<BigRational> {
        Poly::new(self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Clears denominators and content of a rational polynomial; the result
    /// has positive leading coefficient.
    pub fn primitive_from_rational(p: &Poly<BigRational>) -> Self {
        if p.degree().is_none() {
            return IntPolynomial::new(vec![]);
        }
        let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * &lcm).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        IntPolynomial::new(ints.into_iter().map(|c| c / &g * &sign).collect())
    }
}

impl fmt::Display for IntPolynomial {
    /// Human-readable form in `t`, e.g. `t^2 - 18t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push('t'),
                _ => out.push_str(&format!("t^{i}")),
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::from_i64(&[1, -18, 1]).to_string(), "t^2 - 18t + 1");
        assert_eq!(IntPolynomial::from_i64(&[-1, 1]).to_string(), "t - 1");
        assert_eq!(IntPolynomial::from_i64(&[1, -8, 10, -8, 1]).to_string(), "t^4 - 8t^3 + 10t^2 - 8t + 1");
        assert_eq!(IntPolynomial::from_i64(&[0, 0, -2]).to_string(), "-2t^2");
        assert_eq!(IntPolynomial::from_i64(&[]).to_string(), "0");
    }

    #[test]
    fn monic_division() {
        let p = IntPolynomial::from_i64(&[-1, 1]).mul(&IntPolynomial::from_i64(&[1, -18, 1]));
        let (q, r) = p.div_rem_monic(&IntPolynomial::t_minus_one());
        assert_eq!(q, IntPolynomial::from_i64(&[1, -18, 1]));
        assert!(r.is_zero());
        assert!(IntPolynomial::t_minus_one().divides(&p));
        assert!(!IntPolynomial::from_i64(&[1, 0, 1]).divides(&p));
    }

    #[test]
    fn reciprocity() {
        assert!(IntPolynomial::from_i64(&[1, -18, 1]).is_palindromic());
        assert!(IntPolynomial::from_i64(&[-1, 1]).is_reciprocal_up_to_sign());
        assert!(!IntPolynomial::from_i64(&[2, 1]).is_reciprocal_up_to_sign());
    }

    #[test]
    fn serde_as_coefficient_list() {
        let p = IntPolynomial::from_i64(&[1, -18, 1]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[1,-18,1]");
        assert_eq!(serde_json::from_str::<IntPolynomial>(&s).unwrap(), p);
    }
}
