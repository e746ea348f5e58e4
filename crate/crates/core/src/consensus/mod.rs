//! Consensus estimation over binary per-source reports.
//!
//! Each source `n` reports, for each name `m` it covers, whether the name is
//! gendered female (`x = 1`) or male (`x = 0`). The model assumes a single
//! latent consensus per name and a per-source competence `c(n)`, the
//! probability that the source reports the consensus. Expectation
//! maximization alternates between the posterior consensus `z` given
//! competences and the competences given `z`.

mod average;
mod em;
mod io;
mod report;
mod synth;

pub use average::{average_consensus, average_p_f};
pub use em::{cct_expectation, cct_fit, cct_maximization, ConsensusFit, FitOptions};
pub use io::{read_competences, read_consensus, write_competences, write_consensus};
pub use report::{binarize_reports, BinarizedReports, ReportMatrix};
pub use synth::{plant, synth_generate, Planted, panel_table, synthetic_name};
