//! Accessibility indicators from automatic assessor reports.
//!
//! Each assessor's findings on a page (certain errors, likely problems,
//! potential problems and passed checkpoints) become a mass function on the
//! frame `{accessible, not accessible}` for every deficiency category. The
//! sources are discounted by reliability, fused with the conjunctive rule and
//! turned into a decision through the pignistic transform.
//!
//! ```
//! use a11y_indicator::{fixture, report, engine, wcag};
//!
//! let catalog = wcag::CriterionCatalog::wcag20();
//! let weights = wcag::default_weights();
//! let reports: Vec<_> = [fixture::FixtureKind::ErrorHeavy, fixture::FixtureKind::PotentialHeavy]
//!     .into_iter()
//!     .map(|kind| {
//!         let text = fixture::generate_fixture(3, kind);
//!         report::parse_report(&text, &catalog).unwrap().report
//!     })
//!     .collect();
//! let page = engine::score_page(&reports, &catalog, &weights).unwrap();
//! assert_eq!(page.frames.len(), 5);
//! ```

pub mod belief;
pub mod cli;
pub mod engine;
pub mod fixture;
pub mod report;
pub mod wcag;

pub use belief::{BeliefError, MassFunction, Reliability};
pub use engine::{AccessLevel, EngineError, FrameDecision, PageScore};
pub use report::{AssessorProfile, AssessorReport, CriterionObservation, ReportError};
pub use wcag::{CriterionCatalog, DeficiencyFrame, Scope, WeightConfig};
