//! Consensus name–gender associations from heterogeneous reference sources.
//!
//! The crate is organised around the pipeline a study would run:
//!
//! 1. [`corpus`]: ingest standardized per-source TSV files, normalize names,
//!    post-stratify each source and fold everything into a [`NameTable`].
//! 2. [`consensus`]: binarize per-source reports and fit the consensus model
//!    by expectation maximization, jointly estimating how each name is
//!    gendered and how competent each source is. A simple average consensus
//!    is provided alongside as the equal-competence baseline.
//! 3. [`taxonomy`]: place each name in one of six entropy-based categories
//!    (no data, gendered with high/low coverage, conditionally gendered by
//!    country or decade, weakly gendered).
//! 4. [`classify`]: threshold an estimator into female / male / unclassified,
//!    optionally conditioned on country hints.
//! 5. [`eval`]: correspondence, coverage, calibration bands, fairness counts
//!    and paired bootstrap comparisons.
//!
//! ```
//! use namegender::corpus::{normalize_name, SourceTable, NameTable};
//!
//! let tsv = "name\tdecade\tcountry\twf\twm\nAnna\t1990\tUS\t412\t3\nJosé\t-\tES\t0\t90\n";
//! let source = SourceTable::from_reader(tsv.as_bytes(), "inline", "demo").unwrap();
//! let (source, _) = source.poststratify().unwrap();
//! let table = NameTable::build(vec![source]).unwrap();
//! let jose = normalize_name("José").unwrap();
//! assert_eq!(jose.as_str(), "jose");
//! assert!(table.get(&jose).is_some());
//! ```

#![forbid(unsafe_code)]

pub mod classify;
pub mod consensus;
pub mod corpus;
pub mod eval;
pub mod taxonomy;

mod error;
mod fmt;
mod fsum;

pub use classify::{Classification, Classifier, Estimator, Label};
pub use consensus::{ConsensusFit, FitOptions, ReportMatrix};
pub use corpus::{ContextKey, Country, Decade, NameKey, NameTable, SourceTable};
pub use error::{Error, Result};
pub use fmt::sig12;
pub use fsum::exact_sum;
pub use taxonomy::{TaxonLabel, TaxonomyParams};
