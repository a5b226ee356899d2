//! Numeric thresholds used across the crate.
//!
//! Inputs are evaluated analytically through jet arithmetic, so true zeros
//! carry only rounding noise; the relative bands below separate that noise
//! from honestly nonzero values.

/// A scalar `x` counts as zero when `|x| <= ZERO_REL * (1 + scale)`, where
/// `scale` is a magnitude representative of the terms that produced `x`.
pub const ZERO_REL: f64 = 1e-9;

/// Relative tolerance on the constant term for the Hadamard quotient
/// (division of a jet by its parameter).
pub const DIV_PARAM_REL: f64 = 1e-10;

/// Hard floor for ordinary jet division: the divisor's constant term must
/// exceed this in absolute value.
pub const DIV_MIN_ABS: f64 = 1e-300;

/// Rank test for the front condition: second singular value relative to the
/// first.
pub const FRONT_RANK_REL: f64 = 1e-8;

/// Sampled validation of the frontal condition (|nu| = 1, nu orthogonal to
/// df) and of spec-file consistency.
pub const FRONTAL_COND_TOL: f64 = 1e-8;

/// Default tolerance for the cylinder/cone shape detectors.
pub const SHAPE_TOL: f64 = 1e-8;

/// Base-point agreement required when composing a surface jet with a curve.
pub const BASE_MATCH_TOL: f64 = 1e-9;

/// Jet polynomial evaluation is trusted on |t| <= TRUST_RADIUS.
pub const TRUST_RADIUS: f64 = 0.5;

/// Samples closer to the origin than this are evaluated from the jets
/// centered at 0; farther samples get a fresh local expansion. Near the
/// origin the local Hadamard quotient is ill-conditioned while the centered
/// jets are exact, and the centered truncation error is negligible inside
/// this radius.
pub const LOCAL_SWITCH: f64 = 0.05;

/// Scale-aware zero test.
pub fn is_zero(x: f64, scale: f64) -> bool {
    x.abs() <= ZERO_REL * (1.0 + scale.abs())
}
