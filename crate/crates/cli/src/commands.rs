use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use namegender::classify::{read_classifications, write_classifications, Classification, Classifier, Estimator};
use namegender::consensus::{binarize_reports, cct_fit, write_competences, write_consensus, FitOptions};
use namegender::corpus::{IngestOptions, SourceTable, StratifyReport};
use namegender::eval::{bootstrap_paired_diff, calibration_bands, evaluate as score, BandEdges, LabeledSample};
use namegender::corpus::normalize_name;
use namegender::taxonomy::{describe, TaxonLabel, TaxonomyParams, TaxonomyRow};
use namegender::{sig12, NameTable};
use serde::Serialize;

use crate::config::{pick, Config, Format};
use crate::input::{read_names, InputSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum EstimatorKind {
    Avg,
    Cct,
}

fn stdout() -> BufWriter<std::io::StdoutLock<'static>> {
    BufWriter::new(std::io::stdout().lock())
}

fn create(path: &Path) -> anyhow::Result<BufWriter<File>> {
    let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    Ok(BufWriter::new(f))
}

fn opt(x: Option<f64>) -> String {
    x.map(sig12).unwrap_or_default()
}

fn source_files(dir: &Path) -> anyhow::Result<Vec<PathBuf>> {
    let mut paths = Vec::new();
    for entry in std::fs::read_dir(dir).with_context(|| format!("reading {}", dir.display()))? {
        let p = entry?.path();
        if p.is_file() && p.extension().is_some_and(|e| e == "tsv") {
            paths.push(p);
        }
    }
    if paths.is_empty() {
        bail!("no .tsv source files in {}", dir.display());
    }
    paths.sort();
    Ok(paths)
}

fn stratify_one(source: SourceTable) -> anyhow::Result<SourceTable> {
    let id = source.id().to_string();
    let (t, report) = source.poststratify()?;
    match report {
        StratifyReport::Degenerate => eprintln!("warning: {id}: one gender has no weight, left unweighted"),
        StratifyReport::UpweightedFemale { factor } => eprintln!("{id}: female weight x{}", sig12(factor)),
        StratifyReport::UpweightedMale { factor } => eprintln!("{id}: male weight x{}", sig12(factor)),
        StratifyReport::Balanced => {}
    }
    Ok(if report.is_warning() { t.pass_through() } else { t })
}

fn ingest_dir(dir: &Path, stratify: impl Fn(&str) -> bool) -> anyhow::Result<NameTable> {
    let mut sources = Vec::new();
    for path in source_files(dir)? {
        let id = path
            .file_stem()
            .and_then(|s| s.to_str())
            .with_context(|| format!("bad file name {}", path.display()))?
            .to_string();
        let s = SourceTable::ingest(&path, &id, &IngestOptions::default())?;
        if s.skipped_rows() > 0 {
            eprintln!("{id}: skipped {} rows without a usable name or weight", s.skipped_rows());
        }
        sources.push(if stratify(&id) { stratify_one(s)? } else { s.pass_through() });
    }
    Ok(NameTable::build(sources)?)
}

/// A serialized corpus file, or a directory of source files (all
/// post-stratified).
pub fn load_corpus(path: &Path) -> anyhow::Result<NameTable> {
    if path.is_dir() {
        return ingest_dir(path, |_| true);
    }
    let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    Ok(NameTable::read_tsv(std::io::BufReader::new(f), &path.display().to_string())?)
}

pub fn taxonomy_params(cfg: &Config, entropy: Option<f64>, coverage: Option<f64>) -> TaxonomyParams {
    let d = TaxonomyParams::default();
    TaxonomyParams {
        entropy_threshold: pick(entropy, cfg.entropy_threshold, d.entropy_threshold),
        coverage_threshold: pick(coverage, cfg.coverage_threshold, d.coverage_threshold),
        ..d
    }
}

pub fn ingest(dir: &Path, out: &Path, stratify: &[String], all: bool) -> anyhow::Result<()> {
    let ids: Vec<String> = source_files(dir)?
        .iter()
        .filter_map(|p| p.file_stem()?.to_str().map(String::from))
        .collect();
    for s in stratify {
        if !ids.contains(s) {
            bail!("--stratify {s}: no such source in {}", dir.display());
        }
    }
    let table = ingest_dir(dir, |id| all || stratify.iter().any(|s| s == id))?;
    let mut w = create(out)?;
    table.write_tsv(&mut w)?;
    w.flush()?;
    eprintln!("{} names from {} sources", table.len(), table.sources().len());
    Ok(())
}

fn prefixed(prefix: &Path, file: &str) -> PathBuf {
    if prefix.is_dir() {
        prefix.join(file)
    } else {
        let mut s = prefix.as_os_str().to_owned();
        s.push(file);
        PathBuf::from(s)
    }
}

pub fn fit_cct(
    corpus: &Path,
    prefix: &Path,
    c0: Option<f64>,
    tol: Option<f64>,
    max_iter: Option<usize>,
) -> anyhow::Result<()> {
    let table = load_corpus(corpus)?;
    let b = binarize_reports(&table)?;
    let d = FitOptions::default();
    let opts = FitOptions {
        initial_competence: c0.unwrap_or(d.initial_competence),
        tolerance: tol.unwrap_or(d.tolerance),
        max_iterations: max_iter.unwrap_or(d.max_iterations),
    };
    let fit = cct_fit(&b.matrix, &opts)?;

    let mut w = create(&prefixed(prefix, "competences.tsv"))?;
    write_competences(&mut w, &b.source_ids, fit.competences())?;
    w.flush()?;
    let mut w = create(&prefixed(prefix, "consensus.tsv"))?;
    write_consensus(&mut w, &b.names, fit.z())?;
    w.flush()?;

    let mut out = stdout();
    writeln!(out, "sources\t{}", b.matrix.n_sources())?;
    writeln!(out, "names\t{}", b.matrix.n_names())?;
    writeln!(out, "reports\t{}", b.matrix.n_reports())?;
    writeln!(out, "skipped_names\t{}", b.skipped_names.len())?;
    writeln!(out, "skipped_sources\t{}", b.skipped_sources.join(","))?;
    writeln!(out, "iterations\t{}", fit.iterations())?;
    writeln!(out, "converged\t{}", fit.converged())?;
    out.flush()?;
    if !fit.converged() {
        eprintln!("warning: no convergence after {} iterations", fit.iterations());
    }
    Ok(())
}

pub fn classify(
    corpus: &Path,
    input: &Path,
    spec: &InputSpec,
    kind: EstimatorKind,
    band: f64,
    params: TaxonomyParams,
) -> anyhow::Result<()> {
    let table = load_corpus(corpus)?;
    let estimator = match kind {
        EstimatorKind::Avg => Estimator::average(&table),
        EstimatorKind::Cct => Estimator::cct(&table, &FitOptions::default())?.0,
    };
    let classifier = Classifier::with_taxonomy(&table, estimator, band, params)?;
    let mut rows = Vec::new();
    for row in read_names(input, spec)? {
        let c = if row.countries.is_empty() {
            classifier.classify(&row.name)
        } else {
            classifier.classify_conditioned(&row.name, &row.countries)?
        };
        rows.push((row.name, c));
    }
    let mut out = stdout();
    write_classifications(&mut out, &rows)?;
    out.flush()?;
    Ok(())
}

pub fn taxonomy(corpus: &Path, input: Option<&Path>, spec: &InputSpec, params: TaxonomyParams) -> anyhow::Result<()> {
    params.validate()?;
    let table = load_corpus(corpus)?;
    let names: Vec<String> = match input {
        Some(p) => read_names(p, spec)?.into_iter().map(|r| r.name).collect(),
        None => table.names().map(|k| k.to_string()).collect(),
    };
    let mut out = stdout();
    writeln!(out, "name\tnormalized\tlabel\tentropy\tentropy_country\tentropy_decade\ttotal_weight")?;
    for raw in names {
        let key = normalize_name(&raw);
        let row = match &key {
            Some(k) => describe(k, &table, &params),
            None => TaxonomyRow {
                label: TaxonLabel::NoData,
                entropy: None,
                entropy_country: None,
                entropy_decade: None,
                total_weight: None,
            },
        };
        writeln!(
            out,
            "{raw}\t{}\t{}\t{}\t{}\t{}\t{}",
            key.as_ref().map_or("", |k| k.as_str()),
            row.label.as_str(),
            opt(row.entropy),
            opt(row.entropy_country),
            opt(row.entropy_decade),
            opt(row.total_weight)
        )?;
    }
    out.flush()?;
    Ok(())
}

fn read_preds(path: &Path) -> anyhow::Result<Vec<Classification>> {
    let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let rows = read_classifications(std::io::BufReader::new(f), &path.display().to_string())?;
    Ok(rows.into_iter().map(|(_, c)| c).collect())
}

fn read_labels(path: &Path) -> anyhow::Result<LabeledSample> {
    let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    Ok(LabeledSample::read_tsv(std::io::BufReader::new(f), &path.display().to_string())?)
}

pub fn evaluate(
    preds: &Path,
    labels: &Path,
    format: Format,
    corpus: Option<&Path>,
    bands: usize,
    holdouts: &[String],
) -> anyhow::Result<()> {
    let preds = read_preds(preds)?;
    let sample = read_labels(labels)?;
    let report = score(&preds, &sample)?;
    let calibration = match corpus {
        Some(c) => {
            let table = load_corpus(c)?;
            let held: Vec<&str> = holdouts.iter().map(String::as_str).collect();
            Some(calibration_bands(&preds, &sample, &table, &BandEdges::Quantiles(bands), &held)?)
        }
        None => None,
    };
    let mut out = stdout();
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                report: &'a namegender::eval::EvalReport,
                #[serde(skip_serializing_if = "Option::is_none")]
                calibration: Option<&'a namegender::eval::CalibrationReport>,
            }
            let doc = Doc { report: &report, calibration: calibration.as_ref() };
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        }
        Format::Tsv => {
            let r = &report;
            writeln!(out, "metric\tvalue")?;
            let metrics = [
                ("n", r.n.to_string()),
                ("classified", r.n_classified.to_string()),
                ("coverage", sig12(r.coverage)),
                ("correspondence", opt(r.correspondence)),
                ("misclassified_female", r.misclassified_female.to_string()),
                ("misclassified_male", r.misclassified_male.to_string()),
                ("misclass_rate_female", opt(r.misclassification.female)),
                ("misclass_rate_male", opt(r.misclassification.male)),
                ("bias_error", r.bias_error.to_string()),
                ("composition_estimate", opt(r.composition_estimate)),
                ("composition_target", sig12(r.composition_target)),
            ];
            for (k, v) in metrics {
                writeln!(out, "{k}\t{v}")?;
            }
            writeln!(out)?;
            writeln!(out, "taxon\tcount\tclassified\tmatches\tcoverage\tcorrespondence")?;
            for (t, s) in &r.per_taxon {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    t.as_str(),
                    s.count,
                    s.classified,
                    s.matches,
                    sig12(s.coverage),
                    opt(s.correspondence)
                )?;
            }
            if let Some(cal) = &calibration {
                writeln!(out)?;
                writeln!(out, "band_lower\tband_upper\tcount\tmatches\tcorrespondence\texpected\tstd_error")?;
                for b in &cal.bands {
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        sig12(b.lower),
                        sig12(b.upper),
                        b.count,
                        b.matches,
                        sig12(b.correspondence),
                        sig12(b.expected),
                        sig12(b.std_error)
                    )?;
                }
                if !cal.holdouts.is_empty() {
                    writeln!(out)?;
                    writeln!(out, "holdout\tstrength\tcount\tmatches\tcorrespondence")?;
                    for h in &cal.holdouts {
                        writeln!(
                            out,
                            "{}\t{}\t{}\t{}\t{}",
                            h.name,
                            opt(h.strength),
                            h.count,
                            h.matches,
                            opt(h.correspondence)
                        )?;
                    }
                }
            }
        }
    }
    out.flush()?;
    Ok(())
}

pub fn compare(a: &Path, b: &Path, labels: &Path, resamples: usize, seed: u64, format: Format) -> anyhow::Result<()> {
    let pa = read_preds(a)?;
    let pb = read_preds(b)?;
    let sample = read_labels(labels)?;
    let d = bootstrap_paired_diff(&pa, &pb, &sample, resamples, seed)?;
    let mut out = stdout();
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &d)?;
            writeln!(out)?;
        }
        Format::Tsv => {
            writeln!(out, "# seed={seed} resamples={resamples} interval=0.95 units=matches(b-a)")?;
            writeln!(out, "observed\tci_low\tci_high")?;
            writeln!(out, "{}\t{}\t{}", sig12(d.observed), sig12(d.ci_low), sig12(d.ci_high))?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn sources(corpus: &Path) -> anyhow::Result<()> {
    let table = load_corpus(corpus)?;
    let b = binarize_reports(&table)?;
    let fit = cct_fit(&b.matrix, &FitOptions::default())?;
    let mut out = stdout();
    writeln!(out, "source_id\tweighting\tnames\treports\twf_total\twm_total\tcompetence")?;
    for info in table.sources() {
        let row = b.source_ids.iter().position(|s| *s == info.id);
        let (reports, c) = match row {
            Some(i) => (b.matrix.source_reports(i).len(), Some(fit.competences()[i])),
            None => (0, None),
        };
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            info.id,
            info.weighting.as_str(),
            info.n_names,
            reports,
            sig12(info.totals.female),
            sig12(info.totals.male),
            opt(c)
        )?;
    }
    out.flush()?;
    Ok(())
}
