//! Truncated Taylor ("jet") arithmetic in one and two variables.
//!
//! A [`Jet1`] stores the coefficients `a_0..a_K` of a scalar series in one
//! parameter; a [`Jet2`] stores `a_ij` for `i + j <= K` around a base point.
//! Binary operators truncate to the smaller degree of their operands; the
//! `checked_*` forms insist on equal degrees instead.

mod jet1;
mod jet2;
mod vec3;

pub use jet1::Jet1;
pub use jet2::Jet2;
pub use vec3::{cross3, det3, det3_values, dot3, norm3, sub3, Vec3Jet1, Vec3Jet2};

/// Default degree for jets along the singular curve.
pub const CURVE_DEGREE: usize = 9;

/// Default degree for two-variable surface jets.
pub const SURFACE_DEGREE: usize = 6;
