//! Statistical checks: Kolmogorov–Smirnov against analytic or numeric CDFs,
//! chi-square tests on quadrant and binned counts, histograms, and
//! acceptance-rate tables.

mod chisq;
mod histogram;
mod ks;
mod tables;

pub use chisq::{chi_square_binned, chi_square_critical, chi_square_quadrants, BinnedChiSquare, QuadrantTable};
pub use histogram::{histogram, Histogram};
pub use ks::{ks_critical, ks_statistic, EcdfSummary, NumericCdf, SignificanceLevel};
pub use tables::{
    acceptance_table, reference_rates, standard_table, AcceptanceTable, SamplerKind, TableCell, TableConfig, TableId,
};
