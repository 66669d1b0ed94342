//! Surfaces in P¹×P¹×P¹ cut out by forms of tri-degree (2,2,2), the three
//! covering involutions as point maps, and searches for curves parallel to
//! the axes.
//!
//! ```
//! use k3dyn::surface::{build_tilde_q, tau_point, Formula, SurfacePoint};
//! use k3dyn::Axis;
//! use num_traits::Zero;
//!
//! let q = build_tilde_q();
//! let p: SurfacePoint = "i,0,1".parse().unwrap();
//! assert!(q.eval(&p).is_zero());
//! let image = tau_point(&q, Axis::X, &p, Formula::General).unwrap();
//! assert_eq!(image, "-i,0,1".parse().unwrap());
//! ```

mod jacobian;
mod search;
mod tau;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{GaussianRational, MultiPoly, ProjPoint};
use crate::error::{Error, Result};
use crate::Axis;

pub use jacobian::{jacobian, sample_curve_points, sample_surface_points_f64, FloatPoint, Jacobian};
pub use search::{curve_contained, find_axis_curves, Certainty, FoundCurve};
pub use tau::{tau_point, tau_point_f64, verify_tau_identities, Formula, TauIdentityReport};

type Gq = GaussianRational;

/// A form of tri-degree (2,2,2). Slot `[j][k][l]` holds the coefficient of
/// `x₀ʲx₁^{2−j} y₀ᵏy₁^{2−k} z₀ˡz₁^{2−l}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TriForm {
    pub coeffs: [[[Gq; 3]; 3]; 3],
}

/// A form of bidegree (2,2) in two of the factors. Slot `[a][b]` holds the
/// coefficient of `u₀ᵃu₁^{2−a} v₀ᵇv₁^{2−b}` where `(u, v) = axes`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiForm {
    pub axes: (Axis, Axis),
    pub coeffs: [[Gq; 3]; 3],
}

fn exponent(powers: [usize; 3]) -> [u32; 6] {
    let mut e = [0; 6];
    for (a, &p) in powers.iter().enumerate() {
        e[2 * a] = p as u32;
        e[2 * a + 1] = 2 - p as u32;
    }
    e
}

/// `c0²`, `c0·c1`, `c1²` indexed by the power of `c0`.
fn quad_monomials(p: &ProjPoint) -> [Gq; 3] {
    [p.c1() * p.c1(), p.c0() * p.c1(), p.c0() * p.c0()]
}

impl TriForm {
    /// Coefficient indexed by the power of `ω₀` on each axis.
    pub fn get(&self, powers: [usize; 3]) -> &Gq {
        &self.coeffs[powers[0]][powers[1]][powers[2]]
    }

    pub fn get_mut(&mut self, powers: [usize; 3]) -> &mut Gq {
        &mut self.coeffs[powers[0]][powers[1]][powers[2]]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().flatten().all(Zero::is_zero)
    }

    fn slots() -> impl Iterator<Item = [usize; 3]> {
        (0..3).flat_map(|j| (0..3).flat_map(move |k| (0..3).map(move |l| [j, k, l])))
    }

    pub fn to_multipoly(&self) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for s in Self::slots() {
            p.add_term(exponent(s), self.get(s));
        }
        p
    }

    /// Fails unless every term has degree exactly 2 in each factor.
    pub fn from_multipoly(p: &MultiPoly) -> Result<Self> {
        let mut t = TriForm::default();
        for (e, c) in p.terms() {
            if (0..3).any(|a| e[2 * a] + e[2 * a + 1] != 2) {
                return Err(Error::Parse(format!("term with exponents {e:?} is not of tri-degree (2,2,2)")));
            }
            *t.get_mut([e[0] as usize, e[2] as usize, e[4] as usize]) += c;
        }
        Ok(t)
    }

    pub fn eval(&self, p: &SurfacePoint) -> Gq {
        let [mx, my, mz] = [&p.x, &p.y, &p.z].map(quad_monomials);
        let mut acc = Gq::zero();
        for s in Self::slots() {
            let c = self.get(s);
            if !c.is_zero() {
                acc += &(c * &mx[s[0]] * &my[s[1]] * &mz[s[2]]);
            }
        }
        acc
    }

    /// `(Q₀, Q₁, Q₂)` with `Q = Σ ω₀ʲ ω₁^{2−j} Q_j`, each a form in the other
    /// two axes taken in cyclic order.
    pub fn slices(&self, axis: Axis) -> [BiForm; 3] {
        let (u, v) = axis.others();
        std::array::from_fn(|j| {
            let coeffs = std::array::from_fn(|a| {
                std::array::from_fn(|b| {
                    let mut s = [0; 3];
                    s[axis.index()] = j;
                    s[u.index()] = a;
                    s[v.index()] = b;
                    self.get(s).clone()
                })
            });
            BiForm { axes: (u, v), coeffs }
        })
    }

    /// Inverse of [`TriForm::slices`].
    pub fn from_slices(axis: Axis, slices: &[BiForm; 3]) -> Self {
        let mut t = TriForm::default();
        for (j, sl) in slices.iter().enumerate() {
            for a in 0..3 {
                for b in 0..3 {
                    let mut s = [0; 3];
                    s[axis.index()] = j;
                    s[sl.axes.0.index()] = a;
                    s[sl.axes.1.index()] = b;
                    *t.get_mut(s) = sl.coeffs[a][b].clone();
                }
            }
        }
        t
    }
}

impl BiForm {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }

    /// Value at `(u, v)` for the representatives given.
    pub fn eval(&self, u: &ProjPoint, v: &ProjPoint) -> Gq {
        let (mu, mv) = (quad_monomials(u), quad_monomials(v));
        let mut acc = Gq::zero();
        for (row, ma) in self.coeffs.iter().zip(&mu) {
            for (c, mb) in row.iter().zip(&mv) {
                if !c.is_zero() {
                    acc += &(c * ma * mb);
                }
            }
        }
        acc
    }

    pub fn to_multipoly(&self) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for a in 0..3 {
            for b in 0..3 {
                let mut e = [0u32; 6];
                let (u, v) = (self.axes.0.index(), self.axes.1.index());
                e[2 * u] = a as u32;
                e[2 * u + 1] = 2 - a as u32;
                e[2 * v] = b as u32;
                e[2 * v + 1] = 2 - b as u32;
                p.add_term(e, &self.coeffs[a][b]);
            }
        }
        p
    }
}

/// `Q̃ = (x₀²+x₁²)(y₀²+y₁²)(z₀²+z₁²) + 3x₀x₁y₀y₁z₀z₁ − 2x₁²y₀y₁z₀z₁`.
pub fn build_tilde_q() -> TriForm {
    let mut t = TriForm::default();
    for j in [0, 2] {
        for k in [0, 2] {
            for l in [0, 2] {
                *t.get_mut([j, k, l]) = Gq::one();
            }
        }
    }
    *t.get_mut([1, 1, 1]) = Gq::from(3);
    *t.get_mut([0, 1, 1]) = Gq::from(-2);
    t
}

#[derive(Serialize, Deserialize)]
struct SlotJson {
    x: usize,
    y: usize,
    z: usize,
    c: Gq,
}

#[derive(Serialize, Deserialize)]
struct TriFormJson {
    coeffs: Vec<SlotJson>,
}

/// `{"coeffs": [{"x": j, "y": k, "z": l, "c": "a/b+c/d*i"}, …]}`, zero
/// slots omitted; `x`, `y`, `z` are the powers of `x₀`, `y₀`, `z₀`.
impl Serialize for TriForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = Self::slots()
            .filter(|&sl| !self.get(sl).is_zero())
            .map(|[x, y, z]| SlotJson { x, y, z, c: self.get([x, y, z]).clone() })
            .collect();
        TriFormJson { coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TriForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = TriFormJson::deserialize(d)?;
        let mut t = TriForm::default();
        let mut seen = std::collections::HashSet::new();
        for s in j.coeffs {
            if s.x > 2 || s.y > 2 || s.z > 2 {
                return Err(D::Error::custom(format!("exponent out of range in slot ({},{},{})", s.x, s.y, s.z)));
            }
            if !seen.insert((s.x, s.y, s.z)) {
                return Err(D::Error::custom(format!("duplicate slot ({},{},{})", s.x, s.y, s.z)));
            }
            *t.get_mut([s.x, s.y, s.z]) = s.c;
        }
        Ok(t)
    }
}

/// A point of P¹×P¹×P¹.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfacePoint {
    pub x: ProjPoint,
    pub y: ProjPoint,
    pub z: ProjPoint,
}

impl SurfacePoint {
    pub fn new(x: ProjPoint, y: ProjPoint, z: ProjPoint) -> Self {
        SurfacePoint { x, y, z }
    }

    pub fn get(&self, axis: Axis) -> &ProjPoint {
        match axis {
            Axis::X => &self.x,
            Axis::Y => &self.y,
            Axis::Z => &self.z,
        }
    }

    pub fn with(&self, axis: Axis, p: ProjPoint) -> Self {
        let mut out = self.clone();
        match axis {
            Axis::X => out.x = p,
            Axis::Y => out.y = p,
            Axis::Z => out.z = p,
        }
        out
    }

    /// Homogeneous coordinates `(x₀, x₁, y₀, y₁, z₀, z₁)`.
    pub fn coords(&self) -> [Gq; 6] {
        [
            self.x.c0().clone(),
            self.x.c1().clone(),
            self.y.c0().clone(),
            self.y.c1().clone(),
            self.z.c0().clone(),
            self.z.c1().clone(),
        ]
    }
}

impl fmt::Display for SurfacePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl FromStr for SurfacePoint {
    type Err = Error;

    /// Three comma-separated affine values or `inf`, optionally parenthesized.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected three coordinates, got {s:?}")));
        }
        Ok(SurfacePoint::new(parts[0].parse()?, parts[1].parse()?, parts[2].parse()?))
    }
}
