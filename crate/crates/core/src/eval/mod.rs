//! Classifier evaluation: correspondence and coverage, per-taxon
//! breakdowns, calibration bands, fairness counts and paired bootstrap
//! comparisons.

mod bootstrap;
mod calibration;
mod report;
mod sample;

pub use bootstrap::{bootstrap_paired_diff, PairedDiff};
pub use calibration::{calibration_bands, BandEdges, CalibrationBand, CalibrationReport, HoldoutStats};
pub use report::{evaluate, ClassRates, EvalReport, TaxonStats};
pub use sample::{LabeledRow, LabeledSample};
