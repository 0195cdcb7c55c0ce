//! Numerical toolkit for slant submanifold geometry in quaternionic space forms.
//!
//! The crate builds pointwise extrinsic-geometry data (tangent/normal frames,
//! second fundamental forms) on subspaces of Euclidean `R^{4m}` carrying the
//! standard quaternionic structure, and machine-checks the identities,
//! inequalities and obstructions that govern slant submanifolds:
//!
//! - [`quat`] — the standard triple `J1,J2,J3`, tangential/normal splitting of
//!   the structure operators, slant testing and adapted slant frames;
//! - [`geometry`] — ambient curvature of a space form with parameter `c`,
//!   Gauss equation, shape operators, mean and scalar curvature;
//! - [`ricci`] — k-Ricci curvatures and the Chen-type invariant `Θ_k` via
//!   exact inner eigensolves and multi-start Grassmannian descent, with an
//!   independent sampling oracle;
//! - [`verify`] — certificate-producing verifiers for the mean-curvature and
//!   shape-operator bounds;
//! - [`normal`] — first normal space, the quaternionic-slant criterion and the
//!   flatness obstruction for unfull first normal bundles;
//! - [`immersion`] — parametric charts into flat `R^{4m}`, numerical jets,
//!   extracted point data and the flat Codazzi residual;
//! - [`catalog`] — deterministic generators for every example class the test
//!   and CLI layers use.
//!
//! All operations are pure functions over immutable data and safe to call
//! concurrently. Every randomized routine is seeded and reproducible.

pub mod catalog;
pub mod error;
pub mod geometry;
pub mod immersion;
pub mod linalg;
pub mod normal;
pub mod quat;
pub mod ricci;
pub mod verify;

pub use error::{QsfError, Result};
pub use geometry::{ambient_curvature, CurvatureTensor, PointDatum};
pub use quat::{QuaternionicTriple, SlantClass, SlantDecomposition, SlantResult, Subspace};
pub use ricci::{PlaneSection, ThetaConfig, ThetaResult};
pub use verify::{Check, VerificationReport, VerifyConfig};

/// Default absolute tolerance for residual checks.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Tolerance below which a strict inequality is reported as "boundary".
pub const STRICT_TOL: f64 = 1e-12;

/// Window inside which `Θ_k` is treated as equal to a threshold value.
pub const EQUALITY_WINDOW: f64 = 1e-8;

/// Singular-value threshold for numerical rank decisions.
pub const RANK_THRESHOLD: f64 = 1e-10;

/// Principal-angle tolerance for subspace equality.
pub const PRINCIPAL_ANGLE_TOL: f64 = 1e-8;
