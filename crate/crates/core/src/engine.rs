//! Per-frame accessibility scoring.
//!
//! For every assessor report the engine estimates evidence for `Ac`, `NotAc`
//! and ignorance over the criteria of a frame, turns the estimates into a
//! mass function, discounts it by the assessor's reliability and fuses all
//! sources with the conjunctive rule. The pignistic probability of `Ac` is
//! the frame decision, which is then cut into five levels.

use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

use crate::belief::{combine_all, BeliefError, MassFunction};
use crate::report::AssessorReport;
use crate::wcag::{CriterionCatalog, Scope, WeightConfig};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Belief(#[from] BeliefError),

    #[error("no assessor reports for page")]
    EmptySourceSet,

    #[error("reports describe different pages: {expected:?} and {found:?}")]
    MixedUrls { expected: String, found: String },

    #[error("decision value {0} outside [0, 1]")]
    OutOfRange(f64),
}

/// Numerators and denominators of the three estimates for one source.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EstimationTerms {
    /// Weighted correct checkpoints in the frame.
    pub ac_num: f64,
    /// Every test the assessor ran, across all frames.
    pub ac_den: f64,
    /// Weighted, certainty-weakened errors in the frame.
    pub nac_num: f64,
    /// Error-capable tests in the frame.
    pub nac_den: f64,
    /// Weighted, certainty-weakened likely and potential problems in the frame.
    pub omega_num: f64,
    /// Likely- and potential-capable tests in the frame.
    pub omega_den: f64,
}

impl EstimationTerms {
    pub fn estimate(&self) -> EstimationTriple {
        EstimationTriple {
            e_ac: ratio(self.ac_num, self.ac_den),
            e_nac: ratio(self.nac_num, self.nac_den),
            e_omega: ratio(self.omega_num, self.omega_den),
        }
    }
}

fn ratio(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EstimationTriple {
    pub e_ac: f64,
    pub e_nac: f64,
    pub e_omega: f64,
}

pub fn estimate_terms(
    report: &AssessorReport,
    scope: Scope,
    catalog: &CriterionCatalog,
    weights: &WeightConfig,
) -> EstimationTerms {
    estimate_terms_with_total(report, scope, catalog, weights, report.total_tests())
}

/// Like [`estimate_terms`] with the assessor's total test count supplied by
/// the caller, for reports that only carry a subset of the criteria tested.
pub fn estimate_terms_with_total(
    report: &AssessorReport,
    scope: Scope,
    catalog: &CriterionCatalog,
    weights: &WeightConfig,
    total_tests: u64,
) -> EstimationTerms {
    let p = report.profile();
    let mut terms = EstimationTerms {
        ac_den: total_tests as f64,
        ..EstimationTerms::default()
    };
    for obs in report.observations() {
        let Some(spec) = catalog.get(&obs.criterion_id) else {
            continue;
        };
        if !spec.in_scope(scope) {
            continue;
        }
        let alpha = spec.alpha(weights);
        terms.ac_num += obs.n_ok as f64 * alpha;
        terms.nac_num += obs.n_err as f64 * alpha * p.beta_e;
        terms.nac_den += obs.t_err as f64;
        terms.omega_num +=
            obs.n_likely as f64 * alpha * p.beta_l + obs.n_potential as f64 * alpha * p.beta_p;
        terms.omega_den += (obs.t_likely + obs.t_potential) as f64;
    }
    terms
}

pub fn estimate(
    report: &AssessorReport,
    scope: Scope,
    catalog: &CriterionCatalog,
    weights: &WeightConfig,
) -> EstimationTriple {
    estimate_terms(report, scope, catalog, weights).estimate()
}

/// Normalizes an estimation triple into a mass function; no evidence is vacuous.
pub fn masses_from_estimates(e: &EstimationTriple) -> MassFunction {
    let sum = e.e_ac + e.e_nac + e.e_omega;
    if sum <= 0.0 || !sum.is_finite() {
        return MassFunction::vacuous();
    }
    MassFunction::new(e.e_ac / sum, e.e_nac / sum, e.e_omega / sum)
        .expect("normalized non-negative estimates form a mass function")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AccessLevel {
    VeryBad,
    Bad,
    Moderate,
    Good,
    VeryGood,
}

impl AccessLevel {
    pub fn glyph(self) -> char {
        match self {
            AccessLevel::VeryBad => '↓',
            AccessLevel::Bad => '↘',
            AccessLevel::Moderate => '→',
            AccessLevel::Good => '↗',
            AccessLevel::VeryGood => '↑',
        }
    }

    pub fn ascii_glyph(self) -> char {
        match self {
            AccessLevel::VeryBad => 'v',
            AccessLevel::Bad => '\\',
            AccessLevel::Moderate => '-',
            AccessLevel::Good => '/',
            AccessLevel::VeryGood => '^',
        }
    }

    /// Snake-case name used in machine-readable output.
    pub fn key(self) -> &'static str {
        match self {
            AccessLevel::VeryBad => "very_bad",
            AccessLevel::Bad => "bad",
            AccessLevel::Moderate => "moderate",
            AccessLevel::Good => "good",
            AccessLevel::VeryGood => "very_good",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            AccessLevel::VeryBad => "very bad",
            AccessLevel::Bad => "bad",
            AccessLevel::Moderate => "moderate",
            AccessLevel::Good => "good",
            AccessLevel::VeryGood => "very good",
        }
    }
}

impl fmt::Display for AccessLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Maps a decision onto five bands; each band includes its lower threshold.
pub fn discretize(decision: f64, weights: &WeightConfig) -> Result<AccessLevel, EngineError> {
    if !(0.0..=1.0).contains(&decision) {
        return Err(EngineError::OutOfRange(decision));
    }
    let [s1, s2, s3, s4] = weights.thresholds;
    Ok(if decision < s1 {
        AccessLevel::VeryBad
    } else if decision < s2 {
        AccessLevel::Bad
    } else if decision < s3 {
        AccessLevel::Moderate
    } else if decision < s4 {
        AccessLevel::Good
    } else {
        AccessLevel::VeryGood
    })
}

/// Every intermediate value computed for one source of a frame.
#[derive(Debug, Clone, PartialEq)]
pub struct SourceTrace {
    pub name: String,
    pub delta: f64,
    pub terms: EstimationTerms,
    pub estimate: EstimationTriple,
    pub mass: MassFunction,
    pub discounted: MassFunction,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrameTrace {
    pub scope: Scope,
    pub sources: Vec<SourceTrace>,
    pub fused: MassFunction,
}

impl FrameTrace {
    pub fn decision(&self) -> Result<f64, BeliefError> {
        self.fused.pignistic()
    }
}

/// Runs the pipeline up to fusion, keeping each source's intermediates.
pub fn trace_frame(
    reports: &[AssessorReport],
    scope: Scope,
    catalog: &CriterionCatalog,
    weights: &WeightConfig,
) -> Result<FrameTrace, EngineError> {
    check_same_page(reports)?;
    let mut sources = Vec::with_capacity(reports.len());
    for report in reports {
        let terms = estimate_terms(report, scope, catalog, weights);
        let estimate = terms.estimate();
        let mass = masses_from_estimates(&estimate);
        let delta = report.profile().delta;
        let discounted = mass.discount(delta)?;
        sources.push(SourceTrace {
            name: report.profile().name.clone(),
            delta: delta.value(),
            terms,
            estimate,
            mass,
            discounted,
        });
    }
    let fused = combine_all(sources.iter().map(|s| &s.discounted))?;
    Ok(FrameTrace {
        scope,
        sources,
        fused,
    })
}

fn check_same_page(reports: &[AssessorReport]) -> Result<(), EngineError> {
    let first = reports.first().ok_or(EngineError::EmptySourceSet)?;
    if let Some(other) = reports.iter().find(|r| r.url() != first.url()) {
        return Err(EngineError::MixedUrls {
            expected: first.url().to_string(),
            found: other.url().to_string(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrameDecision {
    pub scope: Scope,
    pub fused: MassFunction,
    pub decision: f64,
    pub level: AccessLevel,
    /// Discounted mass of each source, keyed by assessor name.
    pub per_source: IndexMap<String, MassFunction>,
}

pub fn score_frame(
    reports: &[AssessorReport],
    scope: Scope,
    catalog: &CriterionCatalog,
    weights: &WeightConfig,
) -> Result<FrameDecision, EngineError> {
    let trace = trace_frame(reports, scope, catalog, weights)?;
    let decision = trace.decision()?;
    let level = discretize(decision, weights)?;
    let mut per_source = IndexMap::new();
    for source in &trace.sources {
        per_source.insert(unique_key(&per_source, &source.name), source.discounted);
    }
    Ok(FrameDecision {
        scope,
        fused: trace.fused,
        decision,
        level,
        per_source,
    })
}

fn unique_key(map: &IndexMap<String, MassFunction>, name: &str) -> String {
    if !map.contains_key(name) {
        return name.to_string();
    }
    (2..)
        .map(|i| format!("{name}#{i}"))
        .find(|k| !map.contains_key(k))
        .expect("unbounded suffix search")
}

/// Decisions for the four deficiency frames and the global scope.
#[derive(Debug, Clone, PartialEq)]
pub struct PageScore {
    pub url: String,
    pub frames: Vec<FrameDecision>,
}

impl PageScore {
    pub fn get(&self, scope: Scope) -> Option<&FrameDecision> {
        self.frames.iter().find(|f| f.scope == scope)
    }
}

pub fn score_page(
    reports: &[AssessorReport],
    catalog: &CriterionCatalog,
    weights: &WeightConfig,
) -> Result<PageScore, EngineError> {
    check_same_page(reports)?;
    let frames = Scope::ALL
        .into_iter()
        .map(|scope| score_frame(reports, scope, catalog, weights))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PageScore {
        url: reports[0].url().to_string(),
        frames,
    })
}
