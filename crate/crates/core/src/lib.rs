//! Random variate generation on the circle and on the surface of a curved torus.
//!
//! The crate provides
//!
//! * [`geometry`]: the torus parametrization, its area element and the
//!   area-measure quadrant proportions;
//! * [`special`]: modified Bessel functions `I_p` and periodic quadrature;
//! * [`distributions`]: uniform, von Mises, wrapped Cauchy and Kato–Jones
//!   densities and their area-weighted torus marginals;
//! * [`samplers`]: the rejection-free area-uniform transform, step-envelope
//!   rejection sampling (streaming and batch), and two baselines;
//! * [`validation`]: KS and chi-square checks, histograms and acceptance tables.
//!
//! ```
//! use curvtorus::{eau_sample, RngStream, TorusGeometry};
//!
//! let torus = TorusGeometry::new(3.0, 1.5).unwrap();
//! let mut rng = RngStream::new(42);
//! let (pairs, report) = eau_sample(1000, torus.aspect(), &mut rng).unwrap();
//! assert_eq!(pairs.len(), 1000);
//! assert_eq!(report.rate_percent(), 100.0);
//! let _cloud: Vec<_> = pairs.iter().map(|&p| torus.embed(p)).collect();
//! ```

pub mod distributions;
pub mod error;
pub mod geometry;
pub mod samplers;
pub mod special;
pub mod validation;

pub use distributions::{CatalogEntry, CircularDensity, TorusWeighted};
pub use error::{Error, Result};
pub use geometry::{AnglePair, Point3, TorusGeometry};
pub use samplers::{
    aur_sample, eau_sample, eau_transform, har_sample_batch, har_sample_stream, torus_sample, vmbfr_sample,
    AcceptanceReport, HarEnvelope, HarSampler, RngStream,
};
