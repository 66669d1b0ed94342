//! Intersection numbers of fibers and axis-parallel curves, and the named
//! configuration of 27 classes on the surface `S̃`.
//!
//! ```
//! use k3dyn::curvegeom::{intersection, tilde_curves, Divisor};
//! use k3dyn::Axis;
//!
//! let c = tilde_curves();
//! let (c1, c7) = (Divisor::Curve(c[0].clone()), Divisor::Curve(c[6].clone()));
//! assert_eq!(intersection(&c7, &c7), -2);
//! // C₇ fixes y = i while C₁ fixes y = 0
//! assert_eq!(intersection(&c7, &c1), 0);
//! assert_eq!(intersection(&Divisor::Fiber(Axis::X), &c7), 1);
//! ```

mod tilde;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{proj_eq, GaussianRational, ProjPoint};
use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
use crate::Axis;

pub use tilde::{
    gamma0_report, tilde_configuration, tilde_curves, tilde_relations, tilde_selections, Configuration, Gamma0Report,
    InBasis, PicClass, Relation, Selection,
};

/// A curve `{ω' = p₁} ∩ {ω'' = p₂}` parallel to the ω-axis, where
/// `(ω', ω'')` are the other axes in cyclic order: `C_{x,p}` fixes
/// `y = p₁, z = p₂`; `C_{y,p}` fixes `z = p₁, x = p₂`; `C_{z,p}` fixes
/// `x = p₁, y = p₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisCurve {
    axis: Axis,
    fixed: [ProjPoint; 2],
}

impl AxisCurve {
    pub fn new(axis: Axis, p1: ProjPoint, p2: ProjPoint) -> Self {
        AxisCurve { axis, fixed: [p1, p2] }
    }

    /// Shorthand taking affine values or `"inf"`.
    pub fn parse(axis: Axis, p1: &str, p2: &str) -> Result<Self> {
        Ok(AxisCurve::new(axis, p1.parse()?, p2.parse()?))
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    /// `(p₁, p₂)` in the cyclic convention.
    pub fn fixed(&self) -> (&ProjPoint, &ProjPoint) {
        (&self.fixed[0], &self.fixed[1])
    }

    /// The fixed value on `axis`, or `None` for the parallel axis.
    pub fn value_on(&self, axis: Axis) -> Option<&ProjPoint> {
        let (a, b) = self.axis.others();
        if axis == a {
            Some(&self.fixed[0])
        } else if axis == b {
            Some(&self.fixed[1])
        } else {
            None
        }
    }

    /// The point of the surface's ambient space over parameter `s` on the
    /// free axis, as homogeneous coordinates `(x₀, x₁, y₀, y₁, z₀, z₁)`.
    pub fn point_at(&self, s: &ProjPoint) -> [GaussianRational; 6] {
        let mut out: [GaussianRational; 6] = Default::default();
        for a in Axis::ALL {
            let p = self.value_on(a).unwrap_or(s);
            out[2 * a.index()] = p.c0().clone();
            out[2 * a.index() + 1] = p.c1().clone();
        }
        out
    }
}

impl fmt::Display for AxisCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{{{},({},{})}}", self.axis, self.fixed[0], self.fixed[1])
    }
}

#[derive(Serialize, Deserialize)]
struct CurveJson {
    axis: Axis,
    fixed: std::collections::BTreeMap<Axis, String>,
}

/// `{"axis": "x", "fixed": {"y": "i", "z": "0"}}`
impl Serialize for AxisCurve {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (a, b) = self.axis.others();
        let fixed = [(a, self.fixed[0].to_string()), (b, self.fixed[1].to_string())].into_iter().collect();
        CurveJson { axis: self.axis, fixed }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AxisCurve {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = CurveJson::deserialize(d)?;
        let (a, b) = j.axis.others();
        let get = |ax: Axis| -> std::result::Result<ProjPoint, D::Error> {
            let s = j.fixed.get(&ax).ok_or_else(|| D::Error::custom(format!("missing fixed value for {ax}")))?;
            s.parse().map_err(|e: Error| D::Error::custom(e.to_string()))
        };
        if j.fixed.contains_key(&j.axis) {
            return Err(D::Error::custom("a curve cannot fix its own axis"));
        }
        Ok(AxisCurve::new(j.axis, get(a)?, get(b)?))
    }
}

/// A fiber class `E_ω` or an axis-parallel curve.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Divisor {
    Fiber(Axis),
    Curve(AxisCurve),
}

/// Intersection number of two fibers or axis-parallel curves.
pub fn intersection(a: &Divisor, b: &Divisor) -> i64 {
    match (a, b) {
        (Divisor::Fiber(u), Divisor::Fiber(v)) => {
            if u == v {
                0
            } else {
                2
            }
        }
        (Divisor::Fiber(w), Divisor::Curve(c)) | (Divisor::Curve(c), Divisor::Fiber(w)) => i64::from(c.axis == *w),
        (Divisor::Curve(c), Divisor::Curve(d)) if c.axis == d.axis => {
            let same = c.fixed.iter().zip(&d.fixed).all(|(p, q)| proj_eq(p, q));
            if same {
                -2
            } else {
                0
            }
        }
        (Divisor::Curve(c), Divisor::Curve(d)) => {
            let shared = c.axis.third(d.axis);
            let meet = proj_eq(c.value_on(shared).unwrap(), d.value_on(shared).unwrap());
            i64::from(meet)
        }
    }
}

/// Pairwise intersection matrix.
pub fn gram_of(generators: &[Divisor]) -> IntMatrix {
    let n = generators.len();
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = intersection(&generators[i], &generators[j]).into();
        }
    }
    m
}
