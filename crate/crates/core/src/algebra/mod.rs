//! Exact scalar and polynomial arithmetic over ℚ and ℚ(i), plus the root
//! finders built on it.

mod gaussian;
pub mod intpoly;
pub mod multipoly;
pub mod numeric;
pub mod poly;
mod proj;
pub mod resultant;
pub mod ring;
pub mod roots;

pub use gaussian::{gq_arith, GaussianRational, GqOp};
pub use intpoly::IntPolynomial;
pub use multipoly::{mp_arith, MpOp, MultiPoly};
pub use numeric::{complex_roots_numeric, recognize_gaussian_rational};
pub use poly::Poly;
pub use proj::{proj_eq, proj_eq_coords, ProjPoint};
pub use resultant::resultant;
pub use roots::{isolate_real_roots, refine_root, Interval, IsolatedRoot};

/// Univariate polynomial over ℚ(i).
pub type GqPoly = Poly<GaussianRational>;
