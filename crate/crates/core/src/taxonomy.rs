//! Entropy-based name taxonomy.
//!
//! A name is *informative* when the entropy of its female/male distribution
//! is at most `entropy_threshold` bits (0.47 by default, which corresponds
//! to one gender having probability of about 0.9 or more). Informative names
//! split on coverage; uninformative names are tested again after
//! conditioning on country, then on decade.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::corpus::{ContextKey, Country, Decade, NameKey, NameRecord, NameTable, Weights};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TaxonLabel {
    NoData,
    GenderedHighCoverage,
    GenderedLowCoverage,
    ConditionallyGenderedCountry,
    ConditionallyGenderedDecade,
    WeaklyGendered,
}

impl TaxonLabel {
    pub const ALL: [TaxonLabel; 6] = [
        TaxonLabel::NoData,
        TaxonLabel::GenderedHighCoverage,
        TaxonLabel::GenderedLowCoverage,
        TaxonLabel::ConditionallyGenderedCountry,
        TaxonLabel::ConditionallyGenderedDecade,
        TaxonLabel::WeaklyGendered,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TaxonLabel::NoData => "no_data",
            TaxonLabel::GenderedHighCoverage => "gendered_high_coverage",
            TaxonLabel::GenderedLowCoverage => "gendered_low_coverage",
            TaxonLabel::ConditionallyGenderedCountry => "conditionally_gendered_country",
            TaxonLabel::ConditionallyGenderedDecade => "conditionally_gendered_decade",
            TaxonLabel::WeaklyGendered => "weakly_gendered",
        }
    }

    pub fn parse(s: &str) -> Option<TaxonLabel> {
        TaxonLabel::ALL.into_iter().find(|t| t.as_str() == s)
    }
}

impl fmt::Display for TaxonLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Prior over contexts used when weighting strata.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum Prior {
    /// Equal mass on every context observed anywhere in the corpus.
    #[default]
    Uniform,
    /// Explicit probabilities. Marginals are taken by summing entries that
    /// share a country (or decade); contexts not listed get zero mass.
    Supplied(BTreeMap<ContextKey, f64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct TaxonomyParams {
    /// Bits; a name is informative at or below this.
    pub entropy_threshold: f64,
    /// Minimum total observation weight for high coverage.
    pub coverage_threshold: f64,
    pub prior: Prior,
}

impl Default for TaxonomyParams {
    fn default() -> Self {
        TaxonomyParams {
            entropy_threshold: 0.47,
            coverage_threshold: 10.0,
            prior: Prior::Uniform,
        }
    }
}

impl TaxonomyParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.entropy_threshold > 0.0 && self.entropy_threshold <= 1.0) {
            return Err(Error::InvalidParam(format!(
                "entropy threshold {} must lie in (0, 1]",
                self.entropy_threshold
            )));
        }
        if !(self.coverage_threshold > 0.0) {
            return Err(Error::InvalidParam("coverage threshold must be positive".into()));
        }
        if let Prior::Supplied(p) = &self.prior {
            if p.values().any(|v| !(*v >= 0.0)) {
                return Err(Error::InvalidParam("prior probabilities must be nonnegative".into()));
            }
            let total: f64 = p.values().sum();
            if (total - 1.0).abs() > 1e-9 {
                return Err(Error::InvalidParam(format!("prior sums to {total}, not 1")));
            }
        }
        Ok(())
    }
}

/// Binary entropy in bits, with `0 log 0 = 0`.
pub fn entropy(p_f: f64) -> f64 {
    if p_f <= 0.0 || p_f >= 1.0 {
        return 0.0;
    }
    let q = 1.0 - p_f;
    -(p_f * p_f.log2() + q * q.log2())
}

/// Which context a conditional entropy conditions on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conditioning {
    Country,
    Decade,
    CountryAndDecade,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Stratum {
    Country(Country),
    Decade(Decade),
    Joint(Country, Decade),
}

impl Conditioning {
    fn stratum(self, ctx: &ContextKey) -> Option<Stratum> {
        match self {
            Conditioning::Country => ctx.country.map(Stratum::Country),
            Conditioning::Decade => ctx.decade.map(Stratum::Decade),
            Conditioning::CountryAndDecade => Some(Stratum::Joint(ctx.country?, ctx.decade?)),
        }
    }
}

fn stratum_total(table: &NameTable, s: Stratum) -> f64 {
    match s {
        Stratum::Country(c) => table.country_total(c),
        Stratum::Decade(d) => table.decade_total(d),
        Stratum::Joint(c, d) => table.joint_total(c, d),
    }
}

fn stratum_prior(prior: &Prior, s: Stratum) -> f64 {
    match prior {
        Prior::Uniform => 1.0,
        Prior::Supplied(p) => p
            .iter()
            .filter(|(ctx, _)| match s {
                Stratum::Country(c) => ctx.country == Some(c),
                Stratum::Decade(d) => ctx.decade == Some(d),
                Stratum::Joint(c, d) => ctx.country == Some(c) && ctx.decade == Some(d),
            })
            .map(|(_, v)| *v)
            .sum(),
    }
}

/// Result of [`conditional_entropy`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionalEntropy {
    /// Posterior-weighted mean of per-stratum entropies, in bits.
    pub bits: f64,
    /// Entropy of the posterior-weighted mixture of stratum proportions.
    /// Never below `bits` (concavity of entropy).
    pub mixture_bits: f64,
    /// Number of strata with posterior mass.
    pub strata: usize,
    /// True when no known context carried weight, so `bits` is the
    /// unconditional entropy.
    pub vacuous: bool,
}

/// Entropy of a name's gender distribution after conditioning on context.
///
/// Strata are weighted by `P(c | name) ∝ P(name | c) P(c)`, where
/// `P(name | c)` is the name's share of all weight observed in `c`.
/// Unknown-context observations are left out.
pub fn conditional_entropy(
    name: &NameKey,
    by: Conditioning,
    table: &NameTable,
    params: &TaxonomyParams,
) -> Result<ConditionalEntropy> {
    let rec = table
        .get(name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    Ok(conditional_entropy_of(rec, by, table, &params.prior))
}

fn conditional_entropy_of(
    rec: &NameRecord,
    by: Conditioning,
    table: &NameTable,
    prior: &Prior,
) -> ConditionalEntropy {
    let mut strata: BTreeMap<Stratum, Weights> = BTreeMap::new();
    for (ctx, w) in rec.contexts() {
        if let Some(s) = by.stratum(&ctx) {
            strata.entry(s).or_default().add(w);
        }
    }
    let mut weighted: Vec<(f64, f64)> = Vec::with_capacity(strata.len());
    for (s, w) in &strata {
        let Some(p) = w.p_female() else { continue };
        let mass = w.total() / stratum_total(table, *s) * stratum_prior(prior, *s);
        if mass > 0.0 {
            weighted.push((mass, p));
        }
    }
    let norm: f64 = weighted.iter().map(|(m, _)| m).sum();
    if weighted.is_empty() || !(norm > 0.0) {
        let h = entropy(rec.p_female());
        return ConditionalEntropy {
            bits: h,
            mixture_bits: h,
            strata: 0,
            vacuous: true,
        };
    }
    let bits = weighted.iter().map(|(m, p)| m / norm * entropy(*p)).sum();
    let mixture = weighted.iter().map(|(m, p)| m / norm * p).sum::<f64>();
    ConditionalEntropy {
        bits,
        mixture_bits: entropy(mixture.clamp(0.0, 1.0)),
        strata: weighted.len(),
        vacuous: false,
    }
}

/// Everything the taxonomy computes for one name.
#[derive(Debug, Clone, PartialEq)]
pub struct TaxonomyRow {
    pub label: TaxonLabel,
    /// Unconditional entropy; absent for names with no data.
    pub entropy: Option<f64>,
    pub entropy_country: Option<f64>,
    pub entropy_decade: Option<f64>,
    pub total_weight: Option<f64>,
}

/// Classifies a name into one of the six taxonomy leaves, with the
/// entropies that decided it. Conditional entropies are only computed for
/// uninformative names.
pub fn describe(name: &NameKey, table: &NameTable, params: &TaxonomyParams) -> TaxonomyRow {
    let Some(rec) = table.get(name) else {
        return TaxonomyRow {
            label: TaxonLabel::NoData,
            entropy: None,
            entropy_country: None,
            entropy_decade: None,
            total_weight: None,
        };
    };
    let total = rec.total_weight();
    let h = entropy(rec.p_female());
    let t = params.entropy_threshold;
    if h <= t {
        let label = if total >= params.coverage_threshold {
            TaxonLabel::GenderedHighCoverage
        } else {
            TaxonLabel::GenderedLowCoverage
        };
        return TaxonomyRow {
            label,
            entropy: Some(h),
            entropy_country: None,
            entropy_decade: None,
            total_weight: Some(total),
        };
    }
    let hc = conditional_entropy_of(rec, Conditioning::Country, table, &params.prior).bits;
    let hd = conditional_entropy_of(rec, Conditioning::Decade, table, &params.prior).bits;
    let label = if hc <= t {
        TaxonLabel::ConditionallyGenderedCountry
    } else if hd <= t {
        TaxonLabel::ConditionallyGenderedDecade
    } else {
        TaxonLabel::WeaklyGendered
    };
    TaxonomyRow {
        label,
        entropy: Some(h),
        entropy_country: Some(hc),
        entropy_decade: Some(hd),
        total_weight: Some(total),
    }
}

/// The taxonomy leaf for `name`.
pub fn assign_taxon(name: &NameKey, table: &NameTable, params: &TaxonomyParams) -> TaxonLabel {
    describe(name, table, params).label
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{normalize_name, DecadeRange, SourceTable};
    use approx::assert_abs_diff_eq;

    type Row<'a> = (&'a str, Option<&'a str>, Option<i32>, f64, f64);

    fn table(rows: &[Row]) -> NameTable {
        let mut s = SourceTable::new("s").unwrap();
        for (name, c, d, f, m) in rows {
            let ctx = ContextKey::new(
                c.map(|c| c.parse().unwrap()),
                d.map(|d| Decade::new(d, DecadeRange::default()).unwrap()),
            );
            s.add(normalize_name(name).unwrap(), ctx, Weights::new(*f, *m)).unwrap();
        }
        NameTable::build(vec![s.pass_through()]).unwrap()
    }

    fn key(s: &str) -> NameKey {
        normalize_name(s).unwrap()
    }

    /// Direct evaluation with natural logs, independent of `entropy`.
    fn h_oracle(p: f64) -> f64 {
        let term = |q: f64| if q == 0.0 { 0.0 } else { -q * q.ln() / std::f64::consts::LN_2 };
        term(p) + term(1.0 - p)
    }

    #[test]
    fn entropy_values() {
        assert_eq!(entropy(0.5), 1.0);
        assert_eq!(entropy(1.0), 0.0);
        assert_eq!(entropy(0.0), 0.0);
        assert_abs_diff_eq!(entropy(0.9), 0.4690, epsilon = 1e-4);
        assert_abs_diff_eq!(entropy(0.89), 0.4999, epsilon = 1e-4);
        assert_abs_diff_eq!(entropy(0.95), 0.2864, epsilon = 1e-4);
        for p in [0.01, 0.3, 0.58, 0.9, 0.89, 0.999] {
            assert_abs_diff_eq!(entropy(p), h_oracle(p), epsilon = 1e-14);
        }
    }

    #[test]
    fn threshold_equivalence() {
        // bisection for the p where H(p) = 0.47 on [0.5, 1]
        let (mut lo, mut hi) = (0.5f64, 1.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if h_oracle(mid) > 0.47 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!(hi > 0.8996 && hi < 0.8997, "boundary {hi}");
        assert!(entropy(0.9) <= 0.47);
        assert!(entropy(0.1) <= 0.47);
        assert!(entropy(0.89) > 0.47);
        assert!(entropy(hi - 1e-9) > 0.47 && entropy(hi + 1e-9) <= 0.47);
    }

    #[test]
    fn country_split_name() {
        // equal P(name | c): the name is all of both strata
        let t = table(&[("jean", Some("AA"), None, 90.0, 10.0), ("jean", Some("BB"), None, 10.0, 90.0)]);
        let p = TaxonomyParams::default();
        let ce = conditional_entropy(&key("jean"), Conditioning::Country, &t, &p).unwrap();
        assert_abs_diff_eq!(ce.bits, 0.4690, epsilon = 1e-4);
        assert_abs_diff_eq!(ce.bits, entropy(0.9), epsilon = 1e-15);
        assert_eq!(ce.strata, 2);
        let row = describe(&key("jean"), &t, &p);
        assert_eq!(row.entropy, Some(1.0));
        assert_eq!(row.label, TaxonLabel::ConditionallyGenderedCountry);
    }

    #[test]
    fn bayes_weights_over_contexts() {
        // P(x | A) = 1/1000, P(x | B) = 3/1000 -> P(A | x) = 0.25
        let t = table(&[
            ("x", Some("AA"), None, 1.0, 0.0),
            ("filler", Some("AA"), None, 999.0, 0.0),
            ("x", Some("BB"), None, 0.0, 3.0),
            ("filler", Some("BB"), None, 0.0, 997.0),
        ]);
        let p = TaxonomyParams::default();
        let ce = conditional_entropy(&key("x"), Conditioning::Country, &t, &p).unwrap();
        // both strata pure, mixture proportion = 0.25
        assert_eq!(ce.bits, 0.0);
        assert_abs_diff_eq!(ce.mixture_bits, entropy(0.25), epsilon = 1e-12);
    }

    #[test]
    fn single_context_and_vacuous() {
        let t = table(&[
            ("solo", Some("FR"), Some(1980), 6.0, 4.0),
            ("nowhere", None, None, 5.0, 5.0),
        ]);
        let p = TaxonomyParams::default();
        let ce = conditional_entropy(&key("solo"), Conditioning::Country, &t, &p).unwrap();
        assert_abs_diff_eq!(ce.bits, entropy(0.6), epsilon = 1e-15);
        let ce = conditional_entropy(&key("nowhere"), Conditioning::Decade, &t, &p).unwrap();
        assert!(ce.vacuous);
        assert_eq!(ce.bits, 1.0);
        assert!(conditional_entropy(&key("ghost"), Conditioning::Country, &t, &p).is_err());
    }

    #[test]
    fn labels() {
        let t = table(&[
            ("ella", None, None, 950.0, 50.0),
            ("rare", None, None, 5.0, 0.0),
            // male in the 1950s, female in the 2000s, same in every country
            ("leigh", Some("US"), Some(1950), 5.0, 95.0),
            ("leigh", Some("US"), Some(2000), 95.0, 5.0),
            ("leigh", Some("GB"), Some(1950), 5.0, 95.0),
            ("leigh", Some("GB"), Some(2000), 95.0, 5.0),
            // split by country and by decade: country wins
            ("andrea", Some("IT"), Some(1950), 0.0, 100.0),
            ("andrea", Some("US"), Some(2000), 100.0, 0.0),
            ("kim", Some("US"), Some(1950), 50.0, 50.0),
            ("kim", Some("GB"), Some(2000), 40.0, 60.0),
        ]);
        let p = TaxonomyParams::default();
        assert_eq!(assign_taxon(&key("ella"), &t, &p), TaxonLabel::GenderedHighCoverage);
        assert_eq!(assign_taxon(&key("rare"), &t, &p), TaxonLabel::GenderedLowCoverage);
        assert_eq!(assign_taxon(&key("leigh"), &t, &p), TaxonLabel::ConditionallyGenderedDecade);
        assert_eq!(assign_taxon(&key("andrea"), &t, &p), TaxonLabel::ConditionallyGenderedCountry);
        assert_eq!(assign_taxon(&key("kim"), &t, &p), TaxonLabel::WeaklyGendered);
        assert_eq!(assign_taxon(&key("zed"), &t, &p), TaxonLabel::NoData);
    }

    #[test]
    fn joint_only_names_are_weak() {
        // gendered only within (country, decade) cells: XOR pattern
        let t = table(&[
            ("sasha", Some("RU"), Some(1950), 100.0, 0.0),
            ("sasha", Some("RU"), Some(2000), 0.0, 100.0),
            ("sasha", Some("US"), Some(1950), 0.0, 100.0),
            ("sasha", Some("US"), Some(2000), 100.0, 0.0),
        ]);
        let p = TaxonomyParams::default();
        let joint = conditional_entropy(&key("sasha"), Conditioning::CountryAndDecade, &t, &p).unwrap();
        assert_eq!(joint.bits, 0.0);
        assert_eq!(assign_taxon(&key("sasha"), &t, &p), TaxonLabel::WeaklyGendered);
    }

    #[test]
    fn supplied_prior_shifts_weight() {
        let t = table(&[("jean", Some("FR"), None, 0.0, 100.0), ("jean", Some("US"), None, 50.0, 50.0)]);
        let mut prior = BTreeMap::new();
        prior.insert(ContextKey::new(Some("FR".parse().unwrap()), None), 1.0);
        let p = TaxonomyParams {
            prior: Prior::Supplied(prior),
            ..Default::default()
        };
        p.validate().unwrap();
        let ce = conditional_entropy(&key("jean"), Conditioning::Country, &t, &p).unwrap();
        assert_eq!(ce.bits, 0.0);
        assert_eq!(ce.strata, 1);
    }

    #[test]
    fn param_validation() {
        assert!(TaxonomyParams::default().validate().is_ok());
        let bad = TaxonomyParams { entropy_threshold: 0.0, ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = TaxonomyParams { coverage_threshold: -1.0, ..Default::default() };
        assert!(bad.validate().is_err());
        let mut prior = BTreeMap::new();
        prior.insert(ContextKey::UNKNOWN, 0.5);
        let bad = TaxonomyParams { prior: Prior::Supplied(prior), ..Default::default() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn label_names_round_trip() {
        for t in TaxonLabel::ALL {
            assert_eq!(TaxonLabel::parse(t.as_str()), Some(t));
        }
    }
}
