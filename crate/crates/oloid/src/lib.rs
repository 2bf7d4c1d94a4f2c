//! Geometry of the extended oloid and its inscribed quadric family.
//!
//! The oloid is the convex hull of two unit circles in orthogonal planes,
//! each passing through the other's center. Extending its rulings to full
//! lines sweeps the extended oloid, and inside it sits a one-parameter
//! family of quadrics touching the surface along closed space curves. This
//! crate provides:
//!
//! - the ruled surface itself: circle points, rulings, partial derivatives
//!   and the hull area ([`surface`]),
//! - the quadric pencil with its classification, projective apparatus and
//!   the self-polar tetrahedron ([`pencil`]),
//! - the touching curves with their poles, asymptotes, axis points and
//!   plane projections ([`touching`]),
//! - the edge of regression swept by the touching curves, with cusps and
//!   straight asymptotes ([`regression`]),
//! - common generating lines shared by surface and quadric
//!   ([`generators`]),
//! - the isometric development of surface curves into the plane
//!   ([`development`]),
//! - quantitative verification suites with pinned thresholds ([`verify`]).
//!
//! Everything is plain `f64` geometry. Functions whose formulas break down
//! at poles, sheet boundaries or degenerate parameters return a typed
//! [`Error`] naming the violated precondition instead of silently emitting
//! non-finite values.

pub mod development;
pub mod error;
pub mod generators;
pub mod geom;
pub mod numeric;
pub mod pencil;
pub mod regression;
pub mod surface;
pub mod touching;
pub mod verify;

pub use error::{Error, Result};
pub use geom::{Line3, Point3, Vec3};
pub use pencil::{ExtendedParam, QuadricClass};
pub use surface::{Angle, ZBranch};
