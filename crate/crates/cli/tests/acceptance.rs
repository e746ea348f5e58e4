//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use namegender::classify::{Classification, Classifier, Estimator, Gender, Label};
use namegender::consensus::{average_consensus, cct_expectation, cct_fit, panel_table, plant, synth_generate, synthetic_name, FitOptions, ReportMatrix};
use namegender::corpus::{ContextKey, Country, Decade, DecadeRange, SourceTable, Weights};
use namegender::eval::{bootstrap_paired_diff, calibration_bands, BandEdges, LabeledRow, LabeledSample};
use namegender::taxonomy::{
    assign_taxon, conditional_entropy, entropy, Conditioning, Prior, TaxonLabel, TaxonomyParams,
};
use namegender::NameTable;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn workspace() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture_dir() -> PathBuf {
    workspace().join("data/fixture")
}

fn fixture_sources() -> Vec<SourceTable> {
    let mut paths: Vec<_> = std::fs::read_dir(fixture_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "tsv"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| namegender::corpus::ingest_source(p, p.file_stem().unwrap().to_str().unwrap()).unwrap())
        .collect()
}

fn fixture_table() -> NameTable {
    let sources = fixture_sources().into_iter().map(|s| s.poststratify().unwrap().0).collect();
    NameTable::build(sources).unwrap()
}

const SEEDS: [u64; 5] = [0, 1, 2, 3, 4];

fn recovery() -> Outcome {
    let mut worst_c: f64 = 0.0;
    let mut slowest = 0.0f64;
    let mut per_seed = Vec::new();
    let mut worst_acc: f64 = 1.0;
    for seed in SEEDS {
        let p = plant(10, 2000, 0.6, 0.95, seed).unwrap();
        let t = Instant::now();
        let fit = cct_fit(&p.reports, &FitOptions::default()).unwrap();
        slowest = slowest.max(t.elapsed().as_secs_f64());
        for (c, c_true) in fit.competences().iter().zip(&p.competences) {
            worst_c = worst_c.max((c - c_true).abs());
        }
        let accuracy = |z: &[f64]| {
            z.iter().zip(&p.consensus).filter(|(z, y)| (**z > 0.5) == **y).count() as f64 / p.consensus.len() as f64
        };
        let acc = accuracy(fit.z());
        // the same posterior with the planted competences: the best any estimator can do
        let oracle = accuracy(&cct_expectation(&p.reports, &p.competences).unwrap());
        worst_acc = worst_acc.min(acc);
        per_seed.push(format!("{acc:.4}/{oracle:.4}"));
    }
    outcome(
        worst_c <= 0.03 && worst_acc >= 0.97 && slowest < 5.0,
        format!(
            "max |c - c_true| = {worst_c:.4}; sign accuracy fitted/true-competence per seed [{}]; slowest fit {slowest:.3}s",
            per_seed.join(" ")
        ),
    )
}

fn init_invariance() -> Outcome {
    let mut worst: f64 = 0.0;
    for seed in SEEDS {
        let p = plant(10, 2000, 0.6, 0.95, seed).unwrap();
        let fits: Vec<_> = [0.55, 0.7, 0.9, 0.99]
            .iter()
            .map(|&c0| cct_fit(&p.reports, &FitOptions::default().with_initial_competence(c0)).unwrap())
            .collect();
        for f in &fits[1..] {
            for (a, b) in fits[0].z().iter().zip(f.z()) {
                worst = worst.max((a - b).abs());
            }
        }
    }
    outcome(worst <= 1e-6, format!("max z difference across c0 = {worst:.3e} (5 seeds)"))
}

fn fuzz_matrix(rng: &mut ChaCha8Rng) -> ReportMatrix {
    loop {
        let n = rng.random_range(2..12);
        let m = rng.random_range(2..60);
        let density = rng.random_range(0.3..1.0);
        let mut trip = Vec::new();
        for s in 0..n {
            for j in 0..m {
                if rng.random_bool(density) {
                    trip.push((s, j, rng.random_bool(0.5)));
                }
            }
        }
        if let Ok(x) = ReportMatrix::from_triplets(n, m, trip) {
            return x;
        }
    }
}

fn shuffled(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        v.swap(i, rng.random_range(0..=i));
    }
    v
}

fn symmetries() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let opts = FitOptions::default();
    let (mut flip_bad, mut perm_bad) = (0, 0);
    for _ in 0..100 {
        let x = fuzz_matrix(&mut rng);
        let a = cct_fit(&x, &opts).unwrap();
        let f = cct_fit(&x.flipped(), &opts).unwrap();
        let flip_ok = a.competences() == f.competences()
            && a.z().iter().zip(f.z()).all(|(za, zf)| *zf == 1.0 - za);
        flip_bad += usize::from(!flip_ok);

        let sp = shuffled(x.n_sources(), &mut rng);
        let np = shuffled(x.n_names(), &mut rng);
        let p = cct_fit(&x.permuted(&sp, &np).unwrap(), &opts).unwrap();
        // old index i moves to perm[i]
        let perm_ok = sp.iter().enumerate().all(|(i, &j)| p.competences()[j] == a.competences()[i])
            && np.iter().enumerate().all(|(i, &j)| p.z()[j] == a.z()[i]);
        perm_bad += usize::from(!perm_ok);
    }
    outcome(
        flip_bad == 0 && perm_bad == 0,
        format!("100 fuzzed matrices: {flip_bad} flip mismatches, {perm_bad} permutation mismatches (bitwise)"),
    )
}

fn entropy_boundary() -> Outcome {
    let (h9, h89) = (entropy(0.9), entropy(0.89));
    let pass = (h9 - 0.4690).abs() <= 1e-4 && h9 <= 0.47 && (h89 - 0.4999).abs() <= 1e-4 && h89 > 0.47;
    outcome(pass, format!("H(0.9) = {h9:.6}, H(0.89) = {h89:.6}"))
}

fn fuzz_corpus(rng: &mut ChaCha8Rng, n: usize) -> NameTable {
    let countries: Vec<Country> = ["US", "FR", "DE", "JP", "BR"].iter().map(|c| c.parse().unwrap()).collect();
    let decades: Vec<Decade> = (1950..2020).step_by(10).map(|y| Decade::new(y, DecadeRange::default()).unwrap()).collect();
    let mut sources: Vec<SourceTable> = (0..3).map(|i| SourceTable::new(&format!("fuzz{i}")).unwrap()).collect();
    // background mass so stratum totals are comparable
    for (i, c) in countries.iter().enumerate() {
        for (j, d) in decades.iter().enumerate() {
            let key = synthetic_name(1_000_000 + i * 100 + j);
            sources[0].add(key, ContextKey::new(Some(*c), Some(*d)), Weights::new(500.0, 500.0)).unwrap();
        }
    }
    for i in 0..n {
        let key = synthetic_name(i);
        let src = &mut sources[rng.random_range(0..3)];
        let scale = if rng.random_bool(0.3) { rng.random_range(0.5..3.0) } else { rng.random_range(10.0..400.0) };
        let c1 = countries[rng.random_range(0..countries.len())];
        let c2 = countries[rng.random_range(0..countries.len())];
        let d1 = decades[rng.random_range(0..decades.len())];
        let d2 = decades[rng.random_range(0..decades.len())];
        let mut add = |c: Option<Country>, d: Option<Decade>, f: f64, m: f64| {
            src.add(key.clone(), ContextKey::new(c, d), Weights::new(f * scale, m * scale)).unwrap();
        };
        match i % 6 {
            0 => add(Some(c1), Some(d1), 0.97, 0.03),
            1 => add(None, None, 0.02, 0.98),
            2 => {
                add(Some(c1), None, 1.0, 0.0);
                if c2 != c1 {
                    add(Some(c2), None, 0.0, 1.0);
                }
            }
            3 => {
                add(None, Some(d1), 1.0, 0.0);
                if d2 != d1 {
                    add(None, Some(d2), 0.0, 1.0);
                }
            }
            4 => add(Some(c1), Some(d1), 0.5, 0.5),
            _ => {
                for _ in 0..rng.random_range(1..5) {
                    let c = rng.random_bool(0.8).then(|| countries[rng.random_range(0..countries.len())]);
                    let d = rng.random_bool(0.8).then(|| decades[rng.random_range(0..decades.len())]);
                    let f = rng.random_range(0.0..1.0);
                    add(c, d, f, 1.0 - f);
                }
            }
        }
    }
    NameTable::build(sources.into_iter().map(SourceTable::pass_through).collect()).unwrap()
}

fn taxonomy_partition() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 12_000;
    let table = fuzz_corpus(&mut rng, n);
    let params = TaxonomyParams::default();
    let mut counts: BTreeMap<TaxonLabel, usize> = BTreeMap::new();
    // absent names land in NoData
    let queries = (0..n).map(synthetic_name).chain((0..500).map(|i| synthetic_name(2_000_000 + i)));
    let mut queried = 0;
    for q in queries {
        *counts.entry(assign_taxon(&q, &table, &params)).or_default() += 1;
        queried += 1;
    }
    let all_leaves = TaxonLabel::ALL.iter().all(|l| counts.get(l).copied().unwrap_or(0) > 0);
    let partition = counts.values().sum::<usize>() == queried;

    // Uniform prior: conditional entropy against the entropy of the same
    // posterior-weighted mixture. Empirical context prior: against the pooled
    // known-context distribution, computed here directly.
    let mut ctx_totals: BTreeMap<ContextKey, f64> = BTreeMap::new();
    for (_, rec) in table.records() {
        for (ctx, w) in rec.contexts() {
            *ctx_totals.entry(ctx).or_default() += w.total();
        }
    }
    let grand: f64 = ctx_totals.values().sum();
    let empirical = TaxonomyParams {
        prior: Prior::Supplied(ctx_totals.iter().map(|(k, v)| (*k, v / grand)).collect()),
        ..TaxonomyParams::default()
    };
    let (mut mixture_bad, mut pooled_bad, mut pooled_uniform_exceed, mut checked) = (0, 0, 0, 0);
    for (name, rec) in table.records() {
        let unconditional = entropy(rec.p_female());
        for by in [Conditioning::Country, Conditioning::Decade] {
            checked += 1;
            let u = conditional_entropy(name, by, &table, &params).unwrap();
            mixture_bad += usize::from(u.bits > u.mixture_bits + 1e-12);
            pooled_uniform_exceed += usize::from(u.bits > unconditional + 1e-12);

            let mut pooled = Weights::default();
            for (ctx, w) in rec.contexts() {
                let known = match by {
                    Conditioning::Country => ctx.country.is_some(),
                    _ => ctx.decade.is_some(),
                };
                if known {
                    pooled.add(w);
                }
            }
            let e = conditional_entropy(name, by, &table, &empirical).unwrap();
            let bound = pooled.p_female().map_or(unconditional, entropy);
            pooled_bad += usize::from(e.bits > bound + 1e-12);
        }
    }
    let summary: Vec<String> = counts.iter().map(|(l, c)| format!("{}={c}", l.as_str())).collect();
    outcome(
        all_leaves && partition && mixture_bad == 0 && pooled_bad == 0,
        format!(
            "{queried} names, leaves [{}]; {checked} conditional checks: {mixture_bad} above mixture entropy (uniform prior), {pooled_bad} above pooled entropy (empirical prior); {pooled_uniform_exceed} uniform-prior values above pooled entropy (informational)",
            summary.join(", ")
        ),
    )
}

fn conditioning_identity(table: &NameTable) -> Outcome {
    let c = Classifier::new(table, Estimator::average(table), 0.0).unwrap();
    let all = table.country_keys();
    let (mut worst, mut label_bad, mut fallbacks) = (0.0f64, 0, 0);
    for name in table.names() {
        let g = c.classify(name.as_str());
        let k = c.classify_conditioned(name.as_str(), &all).unwrap();
        fallbacks += usize::from(k.fallback);
        match (g.p_f, k.p_f) {
            (Some(a), Some(b)) => worst = worst.max((a - b).abs()),
            (None, None) => {}
            _ => worst = f64::INFINITY,
        }
        label_bad += usize::from(g.label != k.label);
    }
    outcome(
        worst <= 1e-12 && label_bad == 0 && fallbacks == 0,
        format!("{} fixture names: max |dp_f| = {worst:.3e}, {label_bad} label mismatches, {fallbacks} fallbacks", table.len()),
    )
}

fn panel_agreement(n_sources: usize, seed: u64) -> (usize, usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z: Vec<bool> = (0..2000).map(|_| rng.random_bool(0.5)).collect();
    let x = synth_generate(&vec![0.85; n_sources], &z, seed.wrapping_add(1000)).unwrap();
    let fit = cct_fit(&x, &FitOptions::default()).unwrap();
    let avg = average_consensus(&panel_table(&x).unwrap());
    let mut agree = 0;
    let mut ties = 0;
    for (m, zc) in fit.z().iter().enumerate() {
        let a = namegender::classify::threshold(avg.get(&synthetic_name(m)).copied(), 0.0);
        let b = namegender::classify::threshold(Some(*zc), 0.0);
        agree += usize::from(a == b);
        ties += usize::from(a == Label::Unclassified);
    }
    (agree, ties, z.len())
}

fn cct_vs_average() -> Outcome {
    // Odd panels, so the average always gives a hard call.
    let mut worst: f64 = 1.0;
    for seed in SEEDS {
        let (agree, _, n) = panel_agreement(11, seed);
        worst = worst.min(agree as f64 / n as f64);
    }
    let (mut even_worst, mut even_ties): (f64, usize) = (1.0, 0);
    for seed in SEEDS {
        let (agree, ties, n) = panel_agreement(10, seed);
        even_worst = even_worst.min(agree as f64 / n as f64);
        even_ties += ties;
    }
    outcome(
        worst >= 0.99,
        format!(
            "11-source panels, c = 0.85, 2000 names: min agreement {:.2}% (5 seeds); 10-source panels (informational): min {:.2}%, {even_ties} average ties",
            100.0 * worst,
            100.0 * even_worst
        ),
    )
}

fn calibration(table: &NameTable) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let avg = average_consensus(table);
    let mut rows = Vec::new();
    for (name, p) in &avg {
        for _ in 0..50 {
            let label = if rng.random_bool(*p) { Gender::Female } else { Gender::Male };
            rows.push(LabeledRow { name: name.to_string(), label, countries: vec![] });
        }
    }
    let sample = LabeledSample::new(rows).unwrap();
    let c = Classifier::new(table, Estimator::average(table), 0.0).unwrap();
    let preds: Vec<Classification> = sample.rows().iter().map(|r| c.classify(&r.name)).collect();

    let edges = BandEdges::Explicit(vec![0.5, 0.56, 0.6, 0.7, 0.8, 0.9, 0.95, 1.0]);
    let mut lines = Vec::new();
    let mut pass = true;
    let mut low_band = None;
    for spec in [edges, BandEdges::Quantiles(5)] {
        let r = calibration_bands(&preds, &sample, table, &spec, &[]).unwrap();
        for b in &r.bands {
            let z = if b.std_error > 0.0 {
                (b.correspondence - b.expected) / b.std_error
            } else if b.correspondence == b.expected {
                0.0
            } else {
                f64::INFINITY
            };
            pass &= z.abs() <= 3.0;
            lines.push(format!("{z:+.2}"));
            if b.lower == 0.56 {
                low_band = Some((b.expected, 1.0 - b.correspondence, b.count));
            }
        }
    }
    let Some((expected, miss, count)) = low_band else {
        return outcome(false, "no individuals in the [0.56, 0.60) band");
    };
    pass &= (expected - 0.58).abs() < 0.02;
    outcome(
        pass,
        format!(
            "{} individuals; band z-scores [{}]; [0.56, 0.60) band: mean strength {expected:.4}, misclassification {:.2}% over {count}",
            sample.len(),
            lines.join(" "),
            100.0 * miss
        ),
    )
}

fn pred(label: Label) -> Classification {
    Classification {
        label,
        p_f: None,
        basis: namegender::classify::Basis::Average,
        taxon: TaxonLabel::NoData,
        normalized: None,
        fallback: false,
    }
}

fn binomial_quantile(n: u64, p: f64, q: f64) -> u64 {
    let mut cdf = 0.0;
    let mut pmf = (1.0 - p).powi(n as i32);
    for k in 0..=n {
        cdf += pmf;
        if cdf >= q {
            return k;
        }
        pmf *= (n - k) as f64 / (k + 1) as f64 * p / (1.0 - p);
    }
    n
}

fn bootstrap() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let females = |n: usize| {
        LabeledSample::new(
            (0..n)
                .map(|i| LabeledRow { name: format!("p{i}"), label: Gender::Female, countries: vec![] })
                .collect(),
        )
        .unwrap()
    };

    let s100 = females(100);
    let a: Vec<_> = (0..100).map(|_| pred(if rng.random_bool(0.8) { Label::Female } else { Label::Male })).collect();
    let same = bootstrap_paired_diff(&a, &a, &s100, 1000, 1).unwrap();
    let zero = (same.observed, same.ci_low, same.ci_high) == (0.0, 0.0, 0.0);

    // B fixes exactly five rows A gets wrong
    let mut a5 = vec![pred(Label::Female); 100];
    for p in a5.iter_mut().take(5) {
        *p = pred(Label::Male);
    }
    let b5 = vec![pred(Label::Female); 100];
    let adv = bootstrap_paired_diff(&a5, &b5, &s100, 1000, 3).unwrap();
    let rev = bootstrap_paired_diff(&b5, &a5, &s100, 1000, 3).unwrap();
    let anti = rev.observed == -adv.observed && rev.ci_low == -adv.ci_high && rev.ci_high == -adv.ci_low;
    // resampled sums are Binomial(100, 0.05); compare with its quantiles
    let (q_lo, q_hi) = (binomial_quantile(100, 0.05, 0.025), binomial_quantile(100, 0.05, 0.975));
    let detected = adv.observed == 5.0 && adv.ci_low > 0.0;
    let near_oracle = (adv.ci_low - q_lo as f64).abs() <= 1.0 && (adv.ci_high - q_hi as f64).abs() <= 1.0;

    let s200 = females(200);
    let mut covered = 0;
    for rep in 0..200u64 {
        let draw = |rng: &mut ChaCha8Rng| -> Vec<Classification> {
            (0..200).map(|_| pred(if rng.random_bool(0.8) { Label::Female } else { Label::Male })).collect()
        };
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        let d = bootstrap_paired_diff(&a, &b, &s200, 1000, rep).unwrap();
        covered += usize::from(d.ci_low <= 0.0 && 0.0 <= d.ci_high);
    }
    let coverage = covered as f64 / 200.0;
    outcome(
        zero && anti && detected && near_oracle && (0.90..=0.98).contains(&coverage),
        format!(
            "A vs A = ({}, {}, {}); 5-row advantage CI [{}, {}] (binomial oracle [{q_lo}, {q_hi}]); swap antisymmetric: {anti}; null coverage {:.1}% over 200 replications",
            same.observed, same.ci_low, same.ci_high, adv.ci_low, adv.ci_high, 100.0 * coverage
        ),
    )
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_namegender"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    Ok(out.stdout)
}

fn snapshot() -> Outcome {
    let golden = workspace().join("crates/cli/tests/golden");
    let corpus = fixture_dir();
    let corpus = corpus.to_str().unwrap();
    let names = golden.join("names.tsv");
    let names = names.to_str().unwrap();
    let runs: [(&str, Vec<&str>); 4] = [
        ("classify.tsv", vec!["classify", "--corpus", corpus, "--input", names, "--header", "--countries-col", "2"]),
        ("classify_cct.tsv", vec!["classify", "--corpus", corpus, "--input", names, "--header", "--estimator", "cct", "--band", "0.1"]),
        ("taxonomy.tsv", vec!["taxonomy", "--corpus", corpus]),
        ("sources.tsv", vec!["sources", "--corpus", corpus]),
    ];
    let mut problems = Vec::new();
    let mut rows = 0;
    for (file, args) in &runs {
        let first = run_cli(args);
        let second = run_cli(args);
        match (first, second) {
            (Ok(a), Ok(b)) => {
                if a != b {
                    problems.push(format!("{file}: runs differ"));
                }
                match std::fs::read(golden.join(file)) {
                    Ok(g) if g == a => rows += a.iter().filter(|&&c| c == b'\n').count(),
                    Ok(_) => problems.push(format!("{file}: differs from snapshot")),
                    Err(e) => problems.push(format!("{file}: {e}")),
                }
            }
            (Err(e), _) | (_, Err(e)) => problems.push(format!("{file}: {}", e.trim())),
        }
    }
    let table = fixture_table();
    let pass = problems.is_empty() && table.len() >= 2000;
    let detail = if problems.is_empty() {
        format!("{} fixture names; {} snapshot files, {rows} lines, identical across two runs", table.len(), runs.len())
    } else {
        problems.join("; ")
    };
    outcome(pass, detail)
}

fn poststratification() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut n = 0;
    for s in fixture_sources() {
        let (t, _) = s.poststratify().unwrap();
        let w = t.totals();
        worst = worst.max((w.female - w.male).abs() / w.female.max(w.male));
        n += 1;
    }
    let mut ex = SourceTable::new("example").unwrap();
    let key = |s: &str| namegender::corpus::normalize_name(s).unwrap();
    ex.add(key("kim"), ContextKey::UNKNOWN, Weights::new(10.0, 10.0)).unwrap();
    ex.add(key("anna"), ContextKey::UNKNOWN, Weights::new(290.0, 0.0)).unwrap();
    ex.add(key("bob"), ContextKey::UNKNOWN, Weights::new(0.0, 90.0)).unwrap();
    let (ex, _) = ex.poststratify().unwrap();
    let kim = ex.entries()[&(key("kim"), ContextKey::UNKNOWN)].p_female();
    outcome(
        worst <= 1e-9 && kim == Some(0.25),
        format!("{n} fixture sources: max relative |F - M| = {worst:.3e}; worked example p_f = {kim:?}"),
    )
}

fn main() {
    let table = fixture_table();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("CCT recovery on synthetic panels", Box::new(recovery)),
        ("initialization invariance", Box::new(init_invariance)),
        ("exact flip and permutation symmetries", Box::new(symmetries)),
        ("entropy boundary", Box::new(entropy_boundary)),
        ("taxonomy partition and conditional entropy bound", Box::new(taxonomy_partition)),
        ("country conditioning identity", Box::new(|| conditioning_identity(&table))),
        ("CCT and average agreement", Box::new(cct_vs_average)),
        ("calibration at the Bayes ceiling", Box::new(|| calibration(&table))),
        ("bootstrap correctness", Box::new(bootstrap)),
        ("fixture snapshot", Box::new(snapshot)),
        ("post-stratification", Box::new(poststratification)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        failed += usize::from(!o.pass);
        println!("{} {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
