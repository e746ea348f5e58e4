use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod config;
mod input;

use config::Format;

#[derive(Parser)]
#[command(name = "namegender", version, about = "Name-gender reference data, consensus and evaluation")]
struct Cli {
    /// TOML file with default settings (same keys as the long flags)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a corpus file from a directory of standardized source files
    Ingest {
        dir: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Post-stratify this source (file stem); repeatable
        #[arg(long = "stratify", value_name = "ID")]
        stratify: Vec<String>,
        /// Post-stratify every source
        #[arg(long)]
        stratify_all: bool,
    },
    /// Fit the consensus model and write competences and consensus estimates
    FitCct {
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        out_prefix: PathBuf,
        /// Initial competence, in (0.5, 1)
        #[arg(long)]
        c0: Option<f64>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Classify a list of names
    Classify {
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        input: PathBuf,
        /// 1-based column holding the name
        #[arg(long, default_value_t = 1)]
        name_col: usize,
        /// 1-based column holding comma-separated country codes
        #[arg(long)]
        countries_col: Option<usize>,
        /// Skip the first input line
        #[arg(long)]
        header: bool,
        #[arg(long, value_enum, default_value_t = commands::EstimatorKind::Avg)]
        estimator: commands::EstimatorKind,
        /// Abstain when p_f is within this distance of 0.5
        #[arg(long)]
        band: Option<f64>,
        #[arg(long)]
        entropy_threshold: Option<f64>,
        #[arg(long)]
        coverage_threshold: Option<f64>,
    },
    /// Assign taxonomy leaves
    Taxonomy {
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Names to describe; every corpus name when omitted
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        name_col: usize,
        #[arg(long)]
        header: bool,
        #[arg(long)]
        entropy_threshold: Option<f64>,
        #[arg(long)]
        coverage_threshold: Option<f64>,
    },
    /// Score classifications against labeled data
    Evaluate {
        #[arg(long)]
        preds: PathBuf,
        #[arg(long)]
        labels: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Add calibration bands using this corpus
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Number of quantile calibration bands
        #[arg(long, default_value_t = 5)]
        bands: usize,
        /// Report these names outside the bands; repeatable
        #[arg(long, value_name = "NAME")]
        holdout: Vec<String>,
    },
    /// Bootstrap the difference in matches between two classifications
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        labels: PathBuf,
        /// Number of resamples
        #[arg(long)]
        bootstrap: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Per-source coverage and consensus competence
    Sources {
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let cfg = match &cli.config {
        Some(p) => config::Config::load(p)?,
        None => config::Config::default(),
    };
    match cli.command {
        Command::Ingest { dir, out, stratify, stratify_all } => commands::ingest(&dir, &out, &stratify, stratify_all),
        Command::FitCct { corpus, out_prefix, c0, tol, max_iter } => {
            commands::fit_cct(&cfg.corpus(corpus)?, &out_prefix, c0, tol, max_iter)
        }
        Command::Classify {
            corpus,
            input,
            name_col,
            countries_col,
            header,
            estimator,
            band,
            entropy_threshold,
            coverage_threshold,
        } => {
            let band = config::pick(band, cfg.band, 0.0);
            let params = commands::taxonomy_params(&cfg, entropy_threshold, coverage_threshold);
            let spec = input::InputSpec { name_col, countries_col, header };
            commands::classify(&cfg.corpus(corpus)?, &input, &spec, estimator, band, params)
        }
        Command::Taxonomy { corpus, input, name_col, header, entropy_threshold, coverage_threshold } => {
            let params = commands::taxonomy_params(&cfg, entropy_threshold, coverage_threshold);
            let spec = input::InputSpec { name_col, countries_col: None, header };
            commands::taxonomy(&cfg.corpus(corpus)?, input.as_deref(), &spec, params)
        }
        Command::Evaluate { preds, labels, format, corpus, bands, holdout } => {
            let format = config::pick(format, cfg.format, Format::Tsv);
            commands::evaluate(&preds, &labels, format, corpus.as_deref(), bands, &holdout)
        }
        Command::Compare { a, b, labels, bootstrap, seed, format } => {
            let resamples = config::pick(bootstrap, cfg.bootstrap, 1000);
            let seed = config::pick(seed, cfg.seed, 0);
            let format = config::pick(format, cfg.format, Format::Tsv);
            commands::compare(&a, &b, &labels, resamples, seed, format)
        }
        Command::Sources { corpus } => commands::sources(&cfg.corpus(corpus)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
