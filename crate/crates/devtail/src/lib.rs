//! Geometry of frontal surfaces near singular points of the second kind.
//!
//! Given a parametrized frontal `f : (R^2, 0) -> (R^3, 0)` together with its
//! unit normal and a parametrization of its singular curve, this crate builds
//! the Darboux frame `{e, b, nu}` along the singular locus, extracts the frame
//! invariants, constructs the osculating and normal developable surfaces,
//! classifies their singularities at the origin and detects the special
//! cylinder and cone shapes.
//!
//! All derivatives are exact: every quantity is carried as a truncated Taylor
//! series ([`Jet1`], [`Jet2`]) and surface/curve data enter through a small
//! expression language ([`expr`]).

pub mod analysis;
pub mod catalog;
pub mod classify;
pub mod darboux;
pub mod developable;
mod error;
pub mod expr;
pub mod frontal;
pub mod jets;
pub mod mesh;
pub mod tolerances;

pub use analysis::Analysis;
pub use catalog::CatalogEntry;
pub use classify::{Classification, Outcome, Shape, ShapeReport};
pub use darboux::{DarbouxData, OracleInvariants};
pub use developable::{Developable, DevelopableKind};
pub use error::{Error, Result};
pub use expr::{Expr, SurfaceSpec};
pub use frontal::{FrontalDiagnostics, Kind};
pub use jets::{Jet1, Jet2, Vec3Jet1, Vec3Jet2};
pub use mesh::Mesh;
