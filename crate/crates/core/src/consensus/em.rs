use super::ReportMatrix;
use crate::fsum::exact_sum;
use crate::{Error, Result};

/// Competences are clamped into `[C_MIN, 1 - C_MIN]` before taking logs.
const C_MIN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitOptions {
    /// Starting competence for every source; must lie in (0.5, 1).
    pub initial_competence: f64,
    /// Max-norm change in both `z` and `c` below which the fit stops.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions {
            initial_competence: 0.9,
            tolerance: 1e-8,
            max_iterations: 500,
        }
    }
}

impl FitOptions {
    pub fn with_initial_competence(mut self, c0: f64) -> Self {
        self.initial_competence = c0;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.initial_competence > 0.5 && self.initial_competence < 1.0) {
            return Err(Error::InvalidParam(format!(
                "initial competence {} must lie in (0.5, 1)",
                self.initial_competence
            )));
        }
        if !(self.tolerance > 0.0) || self.max_iterations == 0 {
            return Err(Error::InvalidParam(
                "tolerance must be positive and max_iterations at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Posterior consensus per name, kept as a (female, male) pair. The smaller
/// member is computed directly and rounded to a multiple of 2^-53, so the
/// larger is its exact complement and `male == 1 - female` holds in floating
/// point. Inverting every report then swaps the pair exactly.
#[derive(Debug, Clone, PartialEq)]
struct Posterior {
    female: Vec<f64>,
    male: Vec<f64>,
}

fn check_len(what: &str, got: usize, want: usize) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::InvalidParam(format!("{what} has length {got}, expected {want}")))
    }
}

const GRID: f64 = 9007199254740992.0; // 2^53

fn posterior(x: &ReportMatrix, c: &[f64]) -> Posterior {
    let logs: Vec<(f64, f64)> = c
        .iter()
        .map(|&c| {
            let c = c.clamp(C_MIN, 1.0 - C_MIN);
            (c.ln(), (-c).ln_1p())
        })
        .collect();
    let mut female = Vec::with_capacity(x.n_names());
    let mut male = Vec::with_capacity(x.n_names());
    for m in 0..x.n_names() {
        let reports = x.name_reports(m);
        // log P(x | y = 1) and log P(x | y = 0)
        let lf = exact_sum(reports.iter().map(|&(n, x)| {
            let (agree, disagree) = logs[n as usize];
            if x { agree } else { disagree }
        }));
        let lm = exact_sum(reports.iter().map(|&(n, x)| {
            let (agree, disagree) = logs[n as usize];
            if x { disagree } else { agree }
        }));
        let d = lf - lm;
        let small = (GRID / (1.0 + d.abs().exp())).round() / GRID;
        let large = 1.0 - small;
        if d >= 0.0 {
            female.push(large);
            male.push(small);
        } else {
            female.push(small);
            male.push(large);
        }
    }
    Posterior { female, male }
}

fn agreement(x: &ReportMatrix, post: &Posterior) -> Vec<f64> {
    (0..x.n_sources())
        .map(|n| {
            let reports = x.source_reports(n);
            let total = exact_sum(reports.iter().map(|&(m, x)| {
                if x {
                    post.female[m as usize]
                } else {
                    post.male[m as usize]
                }
            }));
            total / reports.len() as f64
        })
        .collect()
}

/// Expectation step: posterior probability that each name's consensus is
/// female, given competences `c` (one per source).
pub fn cct_expectation(x: &ReportMatrix, c: &[f64]) -> Result<Vec<f64>> {
    check_len("competence vector", c.len(), x.n_sources())?;
    Ok(posterior(x, c).female)
}

/// Maximization step: each source's mean agreement with the consensus `z`
/// over the names it reports.
pub fn cct_maximization(x: &ReportMatrix, z: &[f64]) -> Result<Vec<f64>> {
    check_len("consensus vector", z.len(), x.n_names())?;
    if z.iter().any(|v| !(0.0..=1.0).contains(v)) {
        return Err(Error::InvalidParam("consensus values must lie in [0, 1]".into()));
    }
    let post = Posterior {
        female: z.to_vec(),
        male: z.iter().map(|v| 1.0 - v).collect(),
    };
    Ok(agreement(x, &post))
}

/// Result of [`cct_fit`]. `z[m]` is the posterior probability that name `m`
/// is gendered female; `c[n]` is source `n`'s competence.
#[derive(Debug, Clone, PartialEq)]
pub struct ConsensusFit {
    z: Vec<f64>,
    z_male: Vec<f64>,
    c: Vec<f64>,
    iterations: usize,
    converged: bool,
}

impl ConsensusFit {
    pub fn z(&self) -> &[f64] {
        &self.z
    }

    /// Posterior probability that each name is gendered male. Equal to
    /// `1 - z` up to rounding; a fit of the inverted reports returns this
    /// vector as its `z` exactly.
    pub fn z_male(&self) -> &[f64] {
        &self.z_male
    }

    pub fn competences(&self) -> &[f64] {
        &self.c
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn converged(&self) -> bool {
        self.converged
    }

    /// One further expectation + maximization round from this fit's
    /// competences, returning `(z, c)`.
    pub fn one_more_round(&self, x: &ReportMatrix) -> (Vec<f64>, Vec<f64>) {
        let post = posterior(x, &self.c);
        let c = agreement(x, &post);
        (post.female, c)
    }
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max)
}

/// Fits the consensus model by expectation maximization.
///
/// Updates are synchronous. The loop stops when neither `z` nor `c` moves by
/// `tolerance` or more in max-norm; hitting `max_iterations` first returns
/// the current state with `converged = false`.
pub fn cct_fit(x: &ReportMatrix, opts: &FitOptions) -> Result<ConsensusFit> {
    opts.validate()?;
    let mut c = vec![opts.initial_competence; x.n_sources()];
    let mut post = posterior(x, &c);
    let mut iterations = 0;
    let mut converged = false;
    while iterations < opts.max_iterations {
        iterations += 1;
        let c_next = agreement(x, &post);
        let post_next = posterior(x, &c_next);
        let dc = max_abs_diff(&c, &c_next);
        let dz = max_abs_diff(&post.female, &post_next.female)
            .max(max_abs_diff(&post.male, &post_next.male));
        c = c_next;
        post = post_next;
        if dz < opts.tolerance && dc < opts.tolerance {
            converged = true;
            break;
        }
    }
    Ok(ConsensusFit {
        z: post.female,
        z_male: post.male,
        c,
        iterations,
        converged,
    })
}
