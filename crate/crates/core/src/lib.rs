//! Geometry of Jordan curves on the Riemann sphere and their convex hulls in
//! hyperbolic 3-space.
//!
//! The sphere is the ideal boundary of H^3 in the Klein-ball picture; a curve
//! made of circular arcs spans a convex hull whose boundary splits into two
//! disks. This crate computes lower-bound estimates of the width invariants of
//! that hull, a bounded-turning constant for the curve, and quasi-isometry
//! constants for the nearest-point projection between the two boundary disks.

pub mod analyze;
pub mod curves;
pub mod error;
pub mod hull;
pub mod hyp;
pub mod mobius;
pub mod report;
pub mod width;

pub use error::{Error, Result};

/// Tolerance for algebraic identities (normalizations, closure, symmetry).
pub const TOL_ALG: f64 = 1e-9;
/// Tolerance when comparing against brute-force sampling oracles.
pub const TOL_ORACLE: f64 = 1e-6;
