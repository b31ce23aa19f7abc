// Browse the bundled WCAG 2.0 catalog and apply weight overrides.

use a11y_indicator::wcag::{
    alpha_for, default_weights, ConformanceLevel, CriterionCatalog, DeficiencyFrame, Scope,
    WeightOverrides,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let catalog = CriterionCatalog::wcag20();
    println!("{} success criteria", catalog.len());
    for frame in DeficiencyFrame::ALL {
        let scope = Scope::from(frame);
        println!(
            "  {:<9} {:>2}",
            scope.title(),
            catalog.criteria_in_frame(scope).len()
        );
    }

    let strict = default_weights().with_overrides(&WeightOverrides::from_json(
        r#"{"weights": {"AA": 0.9}, "thresholds": [0.65, 0.75, 0.85, 0.95]}"#,
    )?)?;
    for level in [
        ConformanceLevel::A,
        ConformanceLevel::AA,
        ConformanceLevel::AAA,
    ] {
        println!("alpha({level}) = {}", alpha_for(level, &strict));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
