//! Spinor-module constructions, hypersurface geometry, Dirac and
//! Laplace-Beltrami spectra, and extrinsic eigenvalue bounds, verified at
//! desk scale against exactly known spectra of model hypersurfaces in
//! Euclidean, spherical and hyperbolic ambient spaces.
//!
//! Everything numeric is generic over the scalar type through
//! [`scalar::Real`]; the `*64` aliases at the crate root fix `f64` for
//! ordinary use.

pub mod clifford;
pub mod error;
pub mod linalg;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

/// `f64` Clifford representation.
pub type CliffordRep64 = clifford::CliffordRep<f64>;
/// `f64` sum decomposition.
pub type SumDecomposition64 = clifford::SumDecomposition<f64>;
/// `f64` dense complex matrix.
pub type CMat64 = linalg::CMat<f64>;

pub mod geometry;

/// `f64` immersion.
pub type Immersion64 = geometry::Immersion<f64>;
/// `f64` quadrature grid.
pub type QuadratureGrid64 = geometry::QuadratureGrid<f64>;

pub mod spectra;

/// `f64` spectrum.
pub type Spectrum64 = spectra::Spectrum<f64>;

pub mod killing;

/// `f64` Killing field.
pub type KillingField64 = killing::KillingField<f64>;

pub mod bounds;

/// `f64` geometric summary.
pub type SurfaceSummary64 = bounds::SurfaceSummary<f64>;
/// `f64` bound specification.
pub type BoundSpec64 = bounds::BoundSpec<f64>;
/// `f64` check report.
pub type CheckReport64 = bounds::CheckReport<f64>;
