use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::GaussianRational;
use crate::error::{Error, Result};

/// A point `[c0 : c1]` of P¹ over ℚ(i).
///
/// Equality is projective. The canonical representative has `c1 = 1`, or
/// `[1 : 0]` for the point at infinity.
#[derive(Clone)]
pub struct ProjPoint {
    c0: GaussianRational,
    c1: GaussianRational,
}

impl ProjPoint {
    pub fn new(c0: GaussianRational, c1: GaussianRational) -> Result<Self> {
        if c0.is_zero() && c1.is_zero() {
            return Err(Error::InvalidPoint);
        }
        Ok(ProjPoint { c0, c1 })
    }

    /// The affine point `[a : 1]`.
    pub fn affine(a: GaussianRational) -> Self {
        ProjPoint { c0: a, c1: GaussianRational::one() }
    }

    pub fn infinity() -> Self {
        ProjPoint { c0: GaussianRational::one(), c1: GaussianRational::zero() }
    }

    pub fn c0(&self) -> &GaussianRational {
        &self.c0
    }

    pub fn c1(&self) -> &GaussianRational {
        &self.c1
    }

    pub fn is_infinity(&self) -> bool {
        self.c1.is_zero()
    }

    pub fn canonical(&self) -> Self {
        if self.c1.is_zero() {
            ProjPoint::infinity()
        } else {
            ProjPoint::affine(&self.c0 / &self.c1)
        }
    }

    /// Affine coordinate `c0/c1`, or `None` at infinity.
    pub fn affine_value(&self) -> Option<GaussianRational> {
        (!self.c1.is_zero()).then(|| &self.c0 / &self.c1)
    }

    pub fn to_complex(&self) -> [Complex64; 2] {
        [self.c0.to_complex(), self.c1.to_complex()]
    }
}

/// Projective equality via the 2×2 cross product.
pub fn proj_eq(p: &ProjPoint, q: &ProjPoint) -> bool {
    &p.c0 * &q.c1 - &p.c1 * &q.c0 == GaussianRational::zero()
}

/// Raw-coordinate form of [`proj_eq`]; rejects `[0:0]` on either side.
pub fn proj_eq_coords(
    p: (&GaussianRational, &GaussianRational),
    q: (&GaussianRational, &GaussianRational),
) -> Result<bool> {
    let p = ProjPoint::new(p.0.clone(), p.1.clone())?;
    let q = ProjPoint::new(q.0.clone(), q.1.clone())?;
    Ok(proj_eq(&p, &q))
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        proj_eq(self, other)
    }
}

impl Eq for ProjPoint {}

impl fmt::Display for ProjPoint {
    /// The affine value, or `inf` for `[1:0]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.affine_value() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.c0, self.c1)
    }
}

impl std::str::FromStr for ProjPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(ProjPoint::infinity());
        }
        Ok(ProjPoint::affine(s.parse()?))
    }
}
