//! Nearest distance-profile selection under the Lp metric family.
//!
//! A set of candidates, each described by its distances to a fixed list of
//! reference points, is ranked against a target profile. On top of the
//! rankings the crate computes relative errors, top-two gaps and full
//! configuration sweeps, and renders them as tables.

pub mod analysis;
pub mod cli;
pub mod dataset;
pub mod error;
pub mod metric;
pub mod profile;
pub mod report;

pub use error::{Error, Result};
pub use metric::{magnitude, metric_distance, Metric};
pub use profile::{convert, ConversionRates, Profile, Unit};
