//! Exact computation of topological entropies of the automorphism
//! `f = τ_z ∘ τ_y ∘ τ_x` on K3 surfaces of tri-degree (2,2,2) in P¹×P¹×P¹.
//!
//! The crate is organized bottom-up:
//!
//! * [`algebra`]: ℚ(i) scalars, projective points, polynomials, resultants,
//!   Sturm root isolation and numeric root finding.
//! * [`lattice`]: the Gram matrices `M_{k,l,m}`, the K3 lattice, Bareiss
//!   determinants, Smith normal form and embedding checks.
//! * [`dynamics`]: the pullbacks `τ_ω*`, `f*`, characteristic and Salem
//!   polynomials, and the entropy table.
//! * [`surface`]: tri-forms, the involutions as point maps and their
//!   symbolic identities, axis-parallel curve search.
//! * [`curvegeom`]: intersection numbers of fibers and axis-parallel curves
//!   on the explicit surface `Q̃ = 0`.

pub mod algebra;
pub mod axis;
pub mod curvegeom;
pub mod dynamics;
mod error;
pub mod lattice;
pub mod surface;

pub use axis::Axis;
pub use error::{Error, Result};
