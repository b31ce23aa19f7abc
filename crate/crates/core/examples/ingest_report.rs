// Parse an assessor report and inspect its counts.

use a11y_indicator::report::{parse_report_with, UnknownCriterionPolicy};
use a11y_indicator::wcag::CriterionCatalog;

const REPORT: &str = r#"{
  "assessor": {"name": "checker", "beta_e": 1.0, "beta_l": 0.5, "beta_p": 1.0, "delta": 0.9},
  "url": "https://news.example/",
  "observations": [
    {"criterion": "1.1.1", "n_err": 2, "n_ok": 8, "n_likely": 1, "n_potential": 0,
     "t_err": 4, "t_likely": 2, "t_potential": 0},
    {"criterion": "2.4.4", "n_err": 0, "n_ok": 4, "n_likely": 0, "n_potential": 2,
     "t_err": 0, "t_likely": 0, "t_potential": 3},
    {"criterion": "4.1.3", "n_err": 1, "n_ok": 0, "n_likely": 0, "n_potential": 0,
     "t_err": 1, "t_likely": 0, "t_potential": 0}
  ]
}"#;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let catalog = CriterionCatalog::wcag20();
    let parsed = parse_report_with(REPORT, &catalog, UnknownCriterionPolicy::SkipWithWarning)?;
    for id in &parsed.skipped {
        println!("skipped {id}: not a WCAG 2.0 criterion");
    }
    let report = parsed.report;
    println!("{} on {}", report.profile().name, report.url());
    println!("total tests: {}", report.total_tests());
    for obs in report.observations() {
        println!(
            "  {:<6} errors {}/{} ok {} likely {}/{} potential {}/{}",
            obs.criterion_id,
            obs.n_err,
            obs.t_err,
            obs.n_ok,
            obs.n_likely,
            obs.t_likely,
            obs.n_potential,
            obs.t_potential
        );
    }

    let strict = parse_report_with(REPORT, &catalog, UnknownCriterionPolicy::Reject);
    println!(
        "strict parse: {}",
        strict.err().map(|e| e.to_string()).unwrap_or_default()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
