//! Samplers for the circle and the curved torus.
//!
//! * [`eau_sample`]: rejection-free area-uniform sampler built on [`eau_transform`].
//! * [`aur_sample`]: acceptance-rejection baseline for the same target.
//! * [`HarEnvelope`] with [`har_sample_stream`] and [`har_sample_batch`]: rejection
//!   sampling under a step-function envelope of per-cell density suprema.
//! * [`VmBestFisher`]: wrapped-Cauchy-envelope rejection sampler for von Mises.
//! * [`torus_sample`]: joint draws on the surface from independent marginals.

mod aur;
mod batch;
mod eau;
mod har;
mod report;
mod rng;
mod torus;
mod vmbfr;

pub use aur::{aur_sample, AurEnvelope};
pub use batch::har_sample_batch;
pub use eau::{eau_sample, eau_transform, flat_uniform_pairs};
pub use har::{
    har_build, har_sample_stream, har_sample_stream_tallied, CellTally, DominanceCheck, HarEnvelope, HarSampler,
    HeightRule, DEFAULT_CELLS,
};
pub use report::AcceptanceReport;
pub use rng::{RngStream, RNG_ALGORITHM};
pub use torus::{torus_sample, Theta1Sampler, TorusSample, UniformAngle};
pub use vmbfr::{vmbfr_sample, VmBestFisher};
