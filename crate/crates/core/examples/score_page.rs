// Score one page from two synthetic assessor reports.

use a11y_indicator::engine::score_page;
use a11y_indicator::fixture::{generate_fixture, FixtureKind};
use a11y_indicator::report::parse_report;
use a11y_indicator::wcag::{default_weights, CriterionCatalog};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let catalog = CriterionCatalog::wcag20();
    let weights = default_weights();
    let reports = [FixtureKind::ErrorHeavy, FixtureKind::PotentialHeavy]
        .into_iter()
        .map(|kind| parse_report(&generate_fixture(12, kind), &catalog).map(|p| p.report))
        .collect::<Result<Vec<_>, _>>()?;

    let page = score_page(&reports, &catalog, &weights)?;
    println!("{}", page.url);
    for frame in &page.frames {
        println!(
            "  {:<9} {:.3} {} ({})",
            frame.scope.title(),
            frame.decision,
            frame.level.glyph(),
            frame.level
        );
        for (source, m) in &frame.per_source {
            println!(
                "      {source:<15} m(Ac)={:.3} m(NotAc)={:.3} m(Omega)={:.3}",
                m.ac(),
                m.nac(),
                m.omega()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
