//! WCAG 2.0 success criteria, deficiency frames and the weighting scheme.
//!
//! The default catalog tags each of the 61 WCAG 2.0 success criteria with the
//! deficiency frames it primarily serves. It is loaded from
//! `data/wcag20_catalog.json` and can be replaced with any file following the
//! same layout.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

const DEFAULT_CATALOG_JSON: &str = include_str!("../data/wcag20_catalog.json");

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("malformed configuration: {0}")]
    Json(#[from] serde_json::Error),

    #[error("duplicate criterion id {0:?}")]
    DuplicateCriterion(String),

    #[error("criterion {0:?} has no deficiency frame")]
    NoFrames(String),

    #[error("invalid conformance weights: {0}")]
    InvalidWeights(String),

    #[error("invalid thresholds: {0}")]
    InvalidThresholds(String),

    #[error("unknown deficiency frame {0:?}")]
    UnknownFrame(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConformanceLevel {
    A,
    AA,
    AAA,
}

impl fmt::Display for ConformanceLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConformanceLevel::A => "A",
            ConformanceLevel::AA => "AA",
            ConformanceLevel::AAA => "AAA",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeficiencyFrame {
    Visual,
    Hearing,
    Motor,
    Cognitive,
}

impl DeficiencyFrame {
    pub const ALL: [DeficiencyFrame; 4] = [
        DeficiencyFrame::Visual,
        DeficiencyFrame::Hearing,
        DeficiencyFrame::Motor,
        DeficiencyFrame::Cognitive,
    ];

    pub fn key(self) -> &'static str {
        match self {
            DeficiencyFrame::Visual => "visual",
            DeficiencyFrame::Hearing => "hearing",
            DeficiencyFrame::Motor => "motor",
            DeficiencyFrame::Cognitive => "cognitive",
        }
    }
}

/// What a decision is computed over: one deficiency frame, or every criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scope {
    Frame(DeficiencyFrame),
    Global,
}

impl Scope {
    /// The four frames followed by `Global`, in presentation order.
    pub const ALL: [Scope; 5] = [
        Scope::Frame(DeficiencyFrame::Visual),
        Scope::Frame(DeficiencyFrame::Hearing),
        Scope::Frame(DeficiencyFrame::Motor),
        Scope::Frame(DeficiencyFrame::Cognitive),
        Scope::Global,
    ];

    /// Lowercase key used in JSON output and on the command line.
    pub fn key(self) -> &'static str {
        match self {
            Scope::Frame(f) => f.key(),
            Scope::Global => "global",
        }
    }

    /// Capitalized column title.
    pub fn title(self) -> &'static str {
        match self {
            Scope::Frame(DeficiencyFrame::Visual) => "Visual",
            Scope::Frame(DeficiencyFrame::Hearing) => "Hearing",
            Scope::Frame(DeficiencyFrame::Motor) => "Motor",
            Scope::Frame(DeficiencyFrame::Cognitive) => "Cognitive",
            Scope::Global => "Global",
        }
    }
}

impl From<DeficiencyFrame> for Scope {
    fn from(f: DeficiencyFrame) -> Self {
        Scope::Frame(f)
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.title())
    }
}

impl FromStr for Scope {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        Scope::ALL
            .into_iter()
            .find(|scope| scope.key() == lower)
            .ok_or_else(|| ConfigError::UnknownFrame(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub id: String,
    pub level: ConformanceLevel,
    pub frames: BTreeSet<DeficiencyFrame>,
}

impl CriterionSpec {
    pub fn new(
        id: impl Into<String>,
        level: ConformanceLevel,
        frames: impl IntoIterator<Item = DeficiencyFrame>,
    ) -> Self {
        Self {
            id: id.into(),
            level,
            frames: frames.into_iter().collect(),
        }
    }

    /// The criterion weight under `weights`.
    pub fn alpha(&self, weights: &WeightConfig) -> f64 {
        alpha_for(self.level, weights)
    }

    pub fn in_scope(&self, scope: Scope) -> bool {
        match scope {
            Scope::Frame(f) => self.frames.contains(&f),
            Scope::Global => true,
        }
    }
}

/// Success criteria keyed by id, in file order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CriterionCatalog {
    criteria: IndexMap<String, CriterionSpec>,
}

impl CriterionCatalog {
    pub fn new(specs: impl IntoIterator<Item = CriterionSpec>) -> Result<Self, ConfigError> {
        let mut criteria = IndexMap::new();
        for spec in specs {
            if spec.frames.is_empty() {
                return Err(ConfigError::NoFrames(spec.id));
            }
            if criteria.contains_key(&spec.id) {
                return Err(ConfigError::DuplicateCriterion(spec.id));
            }
            criteria.insert(spec.id.clone(), spec);
        }
        Ok(Self { criteria })
    }

    /// The bundled WCAG 2.0 catalog.
    pub fn wcag20() -> Self {
        Self::from_json(DEFAULT_CATALOG_JSON)
            .expect("bundled catalog is valid")
            .0
    }

    /// Parses a catalog file: either a bare array of criteria, or an object
    /// `{criteria, weights?, thresholds?}` carrying weight overrides.
    pub fn from_json(text: &str) -> Result<(Self, WeightOverrides), ConfigError> {
        let file: CatalogFile = serde_json::from_str(text)?;
        let (specs, overrides) = match file {
            CatalogFile::Bare(specs) => (specs, WeightOverrides::default()),
            CatalogFile::WithWeights {
                criteria,
                weights,
                thresholds,
            } => (
                criteria,
                WeightOverrides {
                    weights,
                    thresholds,
                },
            ),
        };
        Ok((Self::new(specs)?, overrides))
    }

    pub fn get(&self, id: &str) -> Option<&CriterionSpec> {
        self.criteria.get(id)
    }

    pub fn contains(&self, id: &str) -> bool {
        self.criteria.contains_key(id)
    }

    pub fn len(&self) -> usize {
        self.criteria.len()
    }

    pub fn is_empty(&self) -> bool {
        self.criteria.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &CriterionSpec> {
        self.criteria.values()
    }

    pub fn criteria_in_frame(&self, scope: Scope) -> Vec<&CriterionSpec> {
        self.iter().filter(|c| c.in_scope(scope)).collect()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CatalogFile {
    Bare(Vec<CriterionSpec>),
    WithWeights {
        criteria: Vec<CriterionSpec>,
        #[serde(default)]
        weights: Option<AlphaOverrides>,
        #[serde(default)]
        thresholds: Option<[f64; 4]>,
    },
}

pub fn criteria_in_frame(catalog: &CriterionCatalog, scope: Scope) -> Vec<&CriterionSpec> {
    catalog.criteria_in_frame(scope)
}

/// Certainty weakening applied to errors, likely problems and potential problems.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CertaintyWeights {
    pub error: f64,
    pub likely: f64,
    pub potential: f64,
}

impl Default for CertaintyWeights {
    fn default() -> Self {
        Self {
            error: 1.0,
            likely: 0.5,
            potential: 1.0,
        }
    }
}

/// Conformance weights, decision thresholds and the assessor coefficient defaults.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightConfig {
    pub alpha_a: f64,
    pub alpha_aa: f64,
    pub alpha_aaa: f64,
    /// `s1 < s2 < s3 < s4`, the lower bounds of Bad, Moderate, Good and VeryGood.
    pub thresholds: [f64; 4],
    /// Coefficients given to an assessor profile built without explicit values.
    pub beta: CertaintyWeights,
    pub delta: f64,
}

impl Default for WeightConfig {
    fn default() -> Self {
        Self {
            alpha_a: 1.0,
            alpha_aa: 0.8,
            alpha_aaa: 0.6,
            thresholds: [0.6, 0.7, 0.8, 0.9],
            beta: CertaintyWeights::default(),
            delta: 1.0,
        }
    }
}

impl WeightConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let (a, aa, aaa) = (self.alpha_a, self.alpha_aa, self.alpha_aaa);
        if !(0.0 < aaa && aaa <= aa && aa <= a && a <= 1.0) {
            return Err(ConfigError::InvalidWeights(format!(
                "need 0 < AAA <= AA <= A <= 1, got A={a} AA={aa} AAA={aaa}"
            )));
        }
        let [s1, s2, s3, s4] = self.thresholds;
        if !(0.0 < s1 && s1 < s2 && s2 < s3 && s3 < s4 && s4 < 1.0) {
            return Err(ConfigError::InvalidThresholds(format!(
                "need 0 < s1 < s2 < s3 < s4 < 1, got {:?}",
                self.thresholds
            )));
        }
        let b = self.beta;
        let unit = 0.0..=1.0;
        if ![b.error, b.likely, b.potential, self.delta]
            .iter()
            .all(|v| unit.contains(v))
        {
            return Err(ConfigError::InvalidWeights(
                "certainty and reliability defaults must lie in [0, 1]".into(),
            ));
        }
        Ok(())
    }

    /// Returns a copy with `overrides` applied, validated.
    pub fn with_overrides(&self, overrides: &WeightOverrides) -> Result<Self, ConfigError> {
        let mut w = *self;
        if let Some(alpha) = &overrides.weights {
            w.alpha_a = alpha.a.unwrap_or(w.alpha_a);
            w.alpha_aa = alpha.aa.unwrap_or(w.alpha_aa);
            w.alpha_aaa = alpha.aaa.unwrap_or(w.alpha_aaa);
        }
        if let Some(t) = overrides.thresholds {
            w.thresholds = t;
        }
        w.validate()?;
        Ok(w)
    }
}

pub fn default_weights() -> WeightConfig {
    WeightConfig::default()
}

pub fn alpha_for(level: ConformanceLevel, weights: &WeightConfig) -> f64 {
    match level {
        ConformanceLevel::A => weights.alpha_a,
        ConformanceLevel::AA => weights.alpha_aa,
        ConformanceLevel::AAA => weights.alpha_aaa,
    }
}

/// Partial weight configuration, as read from a catalog or weights file.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightOverrides {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<AlphaOverrides>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub thresholds: Option<[f64; 4]>,
}

impl WeightOverrides {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaOverrides {
    #[serde(default, rename = "A", alias = "a")]
    pub a: Option<f64>,
    #[serde(default, rename = "AA", alias = "aa")]
    pub aa: Option<f64>,
    #[serde(default, rename = "AAA", alias = "aaa")]
    pub aaa: Option<f64>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use DeficiencyFrame::*;

    #[test]
    fn defaults() {
        let w = default_weights();
        assert_eq!((w.alpha_a, w.alpha_aa, w.alpha_aaa), (1.0, 0.8, 0.6));
        assert_eq!(w.thresholds, [0.6, 0.7, 0.8, 0.9]);
        assert!(w.validate().is_ok());
    }

    #[test]
    fn alpha_lookup() {
        let w = default_weights();
        assert_eq!(alpha_for(ConformanceLevel::A, &w), 1.0);
        assert_eq!(alpha_for(ConformanceLevel::AAA, &w), 0.6);
        let custom = WeightConfig { alpha_aa: 0.9, ..w };
        assert_eq!(alpha_for(ConformanceLevel::AA, &custom), 0.9);
    }

    #[test]
    fn frame_selection() {
        let catalog = CriterionCatalog::new([
            CriterionSpec::new("c1", ConformanceLevel::A, [Visual, Cognitive]),
            CriterionSpec::new("c2", ConformanceLevel::AA, [Hearing]),
        ])
        .unwrap();
        let ids = |scope| -> Vec<String> {
            catalog
                .criteria_in_frame(scope)
                .into_iter()
                .map(|c| c.id.clone())
                .collect()
        };
        assert_eq!(ids(Scope::Frame(Visual)), ["c1"]);
        assert_eq!(ids(Scope::Global), ["c1", "c2"]);
        assert!(CriterionCatalog::default()
            .criteria_in_frame(Scope::Frame(Motor))
            .is_empty());
    }

    #[test]
    fn catalog_rejects_bad_entries() {
        let dup = CriterionCatalog::new([
            CriterionSpec::new("x", ConformanceLevel::A, [Visual]),
            CriterionSpec::new("x", ConformanceLevel::A, [Motor]),
        ]);
        assert!(matches!(dup, Err(ConfigError::DuplicateCriterion(_))));
        let bare = CriterionCatalog::new([CriterionSpec::new("y", ConformanceLevel::A, [])]);
        assert!(matches!(bare, Err(ConfigError::NoFrames(_))));
        assert!(
            CriterionCatalog::from_json(r#"[{"id":"z","level":"B","frames":["visual"]}]"#).is_err()
        );
    }

    #[test]
    fn bundled_catalog_shape() {
        let catalog = CriterionCatalog::wcag20();
        assert_eq!(catalog.len(), 61);
        assert!(catalog.iter().all(|c| !c.frames.is_empty()));

        let visual = catalog.criteria_in_frame(Scope::Frame(Visual)).len();
        assert!(visual as f64 / catalog.len() as f64 >= 0.7);

        let mut union = BTreeSet::new();
        for f in DeficiencyFrame::ALL {
            union.extend(
                catalog
                    .criteria_in_frame(f.into())
                    .into_iter()
                    .map(|c| c.id.clone()),
            );
        }
        let global: BTreeSet<_> = catalog
            .criteria_in_frame(Scope::Global)
            .into_iter()
            .map(|c| c.id.clone())
            .collect();
        assert_eq!(union, global);
    }

    #[test]
    fn catalog_file_with_overrides() {
        let text = r#"{
            "criteria": [{"id": "1.1.1", "level": "A", "frames": ["visual"]}],
            "weights": {"AA": 0.7},
            "thresholds": [0.5, 0.6, 0.7, 0.8]
        }"#;
        let (catalog, overrides) = CriterionCatalog::from_json(text).unwrap();
        assert_eq!(catalog.len(), 1);
        let w = default_weights().with_overrides(&overrides).unwrap();
        assert_eq!(w.alpha_aa, 0.7);
        assert_eq!(w.alpha_a, 1.0);
        assert_eq!(w.thresholds, [0.5, 0.6, 0.7, 0.8]);
    }

    #[test]
    fn overrides_are_validated() {
        let bad = WeightOverrides::from_json(r#"{"thresholds": [0.7, 0.6, 0.8, 0.9]}"#).unwrap();
        assert!(matches!(
            default_weights().with_overrides(&bad),
            Err(ConfigError::InvalidThresholds(_))
        ));
        let inverted = WeightOverrides::from_json(r#"{"weights": {"AAA": 0.95}}"#).unwrap();
        assert!(matches!(
            default_weights().with_overrides(&inverted),
            Err(ConfigError::InvalidWeights(_))
        ));
        assert!(WeightOverrides::from_json(r#"{"bogus": 1}"#).is_err());
    }

    #[test]
    fn scope_parsing() {
        assert_eq!("Visual".parse::<Scope>().unwrap(), Scope::Frame(Visual));
        assert_eq!("global".parse::<Scope>().unwrap(), Scope::Global);
        assert!(matches!(
            "smell".parse::<Scope>(),
            Err(ConfigError::UnknownFrame(_))
        ));
    }

    #[test]
    fn alpha_monotone_for_valid_configs() {
        for (a, aa, aaa) in [(1.0, 0.8, 0.6), (0.5, 0.5, 0.5), (0.9, 0.4, 0.1)] {
            let w = WeightConfig {
                alpha_a: a,
                alpha_aa: aa,
                alpha_aaa: aaa,
                ..default_weights()
            };
            w.validate().unwrap();
            assert!(alpha_for(ConformanceLevel::A, &w) >= alpha_for(ConformanceLevel::AA, &w));
            assert!(alpha_for(ConformanceLevel::AA, &w) >= alpha_for(ConformanceLevel::AAA, &w));
        }
    }
}
