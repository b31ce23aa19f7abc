//! Assessor reports: per-criterion defect counts for one page.
//!
//! Reports use a neutral JSON layout:
//!
//! ```json
//! {
//!   "assessor": {"name": "...", "beta_e": 1.0, "beta_l": 0.5, "beta_p": 1.0, "delta": 1.0},
//!   "url": "https://example.org/",
//!   "observations": [
//!     {"criterion": "1.1.1", "n_err": 2, "n_ok": 8, "n_likely": 1, "n_potential": 0,
//!      "t_err": 4, "t_likely": 2, "t_potential": 0}
//!   ],
//!   "total_tests": 11
//! }
//! ```
//!
//! `total_tests` is optional. When present it must equal the sum of all
//! four finding counts over every observation.

use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::belief::Reliability;
use crate::wcag::{CriterionCatalog, WeightConfig};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("schema error: {0}")]
    Schema(String),

    #[error("criterion {criterion}: {category} count {count} exceeds its {tests} tests")]
    CountInconsistency {
        criterion: String,
        category: Category,
        count: u64,
        tests: u64,
    },

    #[error("criterion {0:?} is not in the catalog")]
    UnknownCriterion(String),

    #[error("stored total_tests {stored} does not match the observed sum {computed}")]
    TotalMismatch { stored: u64, computed: u64 },
}

impl From<serde_json::Error> for ReportError {
    fn from(e: serde_json::Error) -> Self {
        ReportError::Schema(e.to_string())
    }
}

/// Finding category with its own test total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    Error,
    Likely,
    Potential,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Error => "error",
            Category::Likely => "likely-problem",
            Category::Potential => "potential-problem",
        })
    }
}

/// What to do with observations for criteria the catalog does not know.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnknownCriterionPolicy {
    Reject,
    #[default]
    SkipWithWarning,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssessorProfile {
    pub name: String,
    pub beta_e: f64,
    pub beta_l: f64,
    pub beta_p: f64,
    pub delta: Reliability,
}

impl AssessorProfile {
    pub fn new(
        name: impl Into<String>,
        beta_e: f64,
        beta_l: f64,
        beta_p: f64,
        delta: f64,
    ) -> Result<Self, ReportError> {
        let profile = Self {
            name: name.into(),
            beta_e,
            beta_l,
            beta_p,
            delta: Reliability::new(delta).map_err(|e| ReportError::Schema(e.to_string()))?,
        };
        profile.validate()?;
        Ok(profile)
    }

    /// Profile using the certainty and reliability defaults from `weights`.
    pub fn with_defaults(
        name: impl Into<String>,
        weights: &WeightConfig,
    ) -> Result<Self, ReportError> {
        let b = weights.beta;
        Self::new(name, b.error, b.likely, b.potential, weights.delta)
    }

    fn validate(&self) -> Result<(), ReportError> {
        for (label, v) in [
            ("beta_e", self.beta_e),
            ("beta_l", self.beta_l),
            ("beta_p", self.beta_p),
        ] {
            if !(0.0..=1.0).contains(&v) {
                return Err(ReportError::Schema(format!(
                    "assessor {:?}: {label} = {v} outside [0, 1]",
                    self.name
                )));
            }
        }
        Ok(())
    }
}

/// One assessor's counts for one success criterion.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriterionObservation {
    #[serde(rename = "criterion")]
    pub criterion_id: String,
    pub n_err: u64,
    pub n_ok: u64,
    pub n_likely: u64,
    pub n_potential: u64,
    pub t_err: u64,
    pub t_likely: u64,
    pub t_potential: u64,
}

impl CriterionObservation {
    pub fn new(criterion_id: impl Into<String>) -> Self {
        Self {
            criterion_id: criterion_id.into(),
            ..Self::default()
        }
    }

    /// Contribution of this criterion to the assessor's total test count.
    pub fn findings(&self) -> u64 {
        self.n_err + self.n_likely + self.n_potential + self.n_ok
    }

    pub fn validate(&self) -> Result<(), ReportError> {
        for (category, count, tests) in [
            (Category::Error, self.n_err, self.t_err),
            (Category::Likely, self.n_likely, self.t_likely),
            (Category::Potential, self.n_potential, self.t_potential),
        ] {
            if count > tests {
                return Err(ReportError::CountInconsistency {
                    criterion: self.criterion_id.clone(),
                    category,
                    count,
                    tests,
                });
            }
        }
        Ok(())
    }
}

/// A validated evaluation of one page by one assessor.
#[derive(Debug, Clone, PartialEq)]
pub struct AssessorReport {
    profile: AssessorProfile,
    url: String,
    observations: IndexMap<String, CriterionObservation>,
    total_tests: u64,
}

impl AssessorReport {
    pub fn new(
        profile: AssessorProfile,
        url: impl Into<String>,
        observations: impl IntoIterator<Item = CriterionObservation>,
    ) -> Result<Self, ReportError> {
        profile.validate()?;
        let mut map = IndexMap::new();
        for obs in observations {
            obs.validate()?;
            if map.contains_key(&obs.criterion_id) {
                return Err(ReportError::Schema(format!(
                    "duplicate observation for criterion {:?}",
                    obs.criterion_id
                )));
            }
            map.insert(obs.criterion_id.clone(), obs);
        }
        let total_tests = map.values().map(CriterionObservation::findings).sum();
        Ok(Self {
            profile,
            url: url.into(),
            observations: map,
            total_tests,
        })
    }

    pub fn profile(&self) -> &AssessorProfile {
        &self.profile
    }

    pub fn url(&self) -> &str {
        &self.url
    }

    pub fn observation(&self, criterion_id: &str) -> Option<&CriterionObservation> {
        self.observations.get(criterion_id)
    }

    pub fn observations(&self) -> impl Iterator<Item = &CriterionObservation> {
        self.observations.values()
    }

    /// Total tests run by the assessor, the sum of every finding count.
    pub fn total_tests(&self) -> u64 {
        self.total_tests
    }

    /// Returns a copy with `obs` added or replacing the existing entry.
    pub fn with_observation(&self, obs: CriterionObservation) -> Result<Self, ReportError> {
        let mut observations = self.observations.clone();
        observations.insert(obs.criterion_id.clone(), obs);
        Self::new(
            self.profile.clone(),
            self.url.clone(),
            observations.into_values(),
        )
    }

    pub fn to_document(&self) -> ReportDocument {
        ReportDocument {
            assessor: self.profile.clone(),
            url: self.url.clone(),
            observations: self.observations.values().cloned().collect(),
            total_tests: Some(self.total_tests),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_document())
            .expect("report serialization cannot fail");
        text.push('\n');
        text
    }
}

pub fn total_tests(report: &AssessorReport) -> u64 {
    report.total_tests()
}

/// Wire form of a report, before validation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub assessor: AssessorProfile,
    pub url: String,
    pub observations: Vec<CriterionObservation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total_tests: Option<u64>,
}

/// A parsed report plus the ids dropped under [`UnknownCriterionPolicy::SkipWithWarning`].
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedReport {
    pub report: AssessorReport,
    pub skipped: Vec<String>,
}

pub fn parse_report(
    document: &str,
    catalog: &CriterionCatalog,
) -> Result<ParsedReport, ReportError> {
    parse_report_with(document, catalog, UnknownCriterionPolicy::default())
}

pub fn parse_report_with(
    document: &str,
    catalog: &CriterionCatalog,
    policy: UnknownCriterionPolicy,
) -> Result<ParsedReport, ReportError> {
    let doc: ReportDocument = serde_json::from_str(document)?;

    // Validates counts and duplicate ids over the document as written.
    let full = AssessorReport::new(doc.assessor, doc.url, doc.observations)?;
    if let Some(stored) = doc.total_tests {
        if stored != full.total_tests {
            return Err(ReportError::TotalMismatch {
                stored,
                computed: full.total_tests,
            });
        }
    }

    let (known, unknown): (Vec<_>, Vec<_>) = full
        .observations
        .into_values()
        .partition(|o| catalog.contains(&o.criterion_id));
    if let (UnknownCriterionPolicy::Reject, Some(first)) = (policy, unknown.first()) {
        return Err(ReportError::UnknownCriterion(first.criterion_id.clone()));
    }
    let report = AssessorReport::new(full.profile, full.url, known)?;
    Ok(ParsedReport {
        report,
        skipped: unknown.into_iter().map(|o| o.criterion_id).collect(),
    })
}
