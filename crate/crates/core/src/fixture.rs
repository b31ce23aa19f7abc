//! Deterministic synthetic assessor reports.
//!
//! Each kind imitates the statistical signature of a family of automatic
//! checkers:
//!
//! * `balanced`: a bit of everything.
//! * `error-heavy`: plenty of certain errors and potential problems, almost
//!   no likely problems.
//! * `potential-heavy`: the same potential-problem count on every criterion.
//!
//! The generator records its own running sum of finding counts as
//! `total_tests`, so parsing a fixture cross-checks the generator against the
//! parser.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{AssessorProfile, CriterionObservation, ReportDocument};
use crate::wcag::{default_weights, CriterionCatalog};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixtureKind {
    Balanced,
    ErrorHeavy,
    PotentialHeavy,
}

impl FixtureKind {
    pub const ALL: [FixtureKind; 3] = [
        FixtureKind::Balanced,
        FixtureKind::ErrorHeavy,
        FixtureKind::PotentialHeavy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FixtureKind::Balanced => "balanced",
            FixtureKind::ErrorHeavy => "error-heavy",
            FixtureKind::PotentialHeavy => "potential-heavy",
        }
    }

    fn salt(self) -> u64 {
        match self {
            FixtureKind::Balanced => 0x9e37_79b9_7f4a_7c15,
            FixtureKind::ErrorHeavy => 0xbf58_476d_1ce4_e5b9,
            FixtureKind::PotentialHeavy => 0x94d0_49bb_1331_11eb,
        }
    }
}

impl fmt::Display for FixtureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for FixtureKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FixtureKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                format!("unknown fixture kind {s:?} (expected balanced, error-heavy or potential-heavy)")
            })
    }
}

/// Page identifier shared by every kind generated from the same seed.
pub fn fixture_url(seed: u64) -> String {
    format!("https://fixture.example/page-{seed:04}")
}

/// Builds the report document for `(seed, kind)` over the bundled catalog.
pub fn fixture_document(seed: u64, kind: FixtureKind) -> ReportDocument {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ kind.salt());
    let catalog = CriterionCatalog::wcag20();
    let assessor = AssessorProfile::with_defaults(kind.name(), &default_weights())
        .expect("default coefficients are valid");

    let constant_potential = rng.gen_range(3..=8u64);
    let mut observations = Vec::new();
    let mut running_total = 0u64;
    for spec in catalog.iter() {
        if !rng.gen_bool(0.8) {
            continue;
        }
        let mut o = CriterionObservation::new(spec.id.clone());
        match kind {
            FixtureKind::Balanced => {
                o.t_err = rng.gen_range(0..=8);
                o.n_err = rng.gen_range(0..=o.t_err / 2);
                o.n_ok = rng.gen_range(0..=30);
                o.t_likely = rng.gen_range(0..=4);
                o.n_likely = rng.gen_range(0..=o.t_likely);
                o.t_potential = rng.gen_range(0..=4);
                o.n_potential = rng.gen_range(0..=o.t_potential);
            }
            FixtureKind::ErrorHeavy => {
                o.t_err = rng.gen_range(0..=12);
                o.n_err = rng.gen_range(0..=o.t_err);
                o.n_ok = rng.gen_range(0..=25);
                o.t_likely = rng.gen_range(0..=1);
                o.n_likely = u64::from(o.t_likely > 0 && rng.gen_bool(0.05));
                o.t_potential = rng.gen_range(0..=10);
                o.n_potential = rng.gen_range(0..=o.t_potential);
            }
            FixtureKind::PotentialHeavy => {
                o.t_err = rng.gen_range(0..=8);
                o.n_err = rng.gen_range(0..=o.t_err / 2);
                o.n_ok = rng.gen_range(0..=35);
                o.t_likely = rng.gen_range(0..=6);
                o.n_likely = rng.gen_range(0..=o.t_likely);
                o.t_potential = constant_potential;
                o.n_potential = constant_potential;
            }
        }
        running_total += o.n_err + o.n_ok + o.n_likely + o.n_potential;
        observations.push(o);
    }

    ReportDocument {
        assessor,
        url: fixture_url(seed),
        observations,
        total_tests: Some(running_total),
    }
}

/// Serialized fixture report, byte-identical for identical arguments.
pub fn generate_fixture(seed: u64, kind: FixtureKind) -> String {
    let mut text =
        serde_json::to_string_pretty(&fixture_document(seed, kind)).expect("fixture serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::parse_report;

    #[test]
    fn deterministic() {
        assert_eq!(
            generate_fixture(42, FixtureKind::Balanced),
            generate_fixture(42, FixtureKind::Balanced)
        );
        assert_ne!(
            generate_fixture(42, FixtureKind::Balanced),
            generate_fixture(43, FixtureKind::Balanced)
        );
    }

    #[test]
    fn potential_heavy_has_constant_potential_tests() {
        let doc = fixture_document(7, FixtureKind::PotentialHeavy);
        let first = doc.observations[0].t_potential;
        assert!(first > 0);
        assert!(doc.observations.iter().all(|o| o.t_potential == first));
    }

    #[test]
    fn error_heavy_has_almost_no_likely_problems() {
        let doc = fixture_document(7, FixtureKind::ErrorHeavy);
        let likely: u64 = doc.observations.iter().map(|o| o.n_likely).sum();
        let errors: u64 = doc.observations.iter().map(|o| o.n_err).sum();
        assert!(likely * 20 < errors, "likely={likely} errors={errors}");
    }

    #[test]
    fn every_fixture_parses() {
        let catalog = CriterionCatalog::wcag20();
        for seed in 0..25 {
            for kind in FixtureKind::ALL {
                let parsed = parse_report(&generate_fixture(seed, kind), &catalog)
                    .unwrap_or_else(|e| panic!("{seed} {kind}: {e}"));
                assert!(parsed.skipped.is_empty());
                assert_eq!(parsed.report.url(), fixture_url(seed));
            }
        }
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in FixtureKind::ALL {
            assert_eq!(kind.name().parse::<FixtureKind>().unwrap(), kind);
        }
        assert!("taw".parse::<FixtureKind>().is_err());
    }
}
