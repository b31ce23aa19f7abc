// Generate synthetic reports of each kind and summarize them.
//
// Pass a directory to also write the files: `cargo run --example generate_fixtures -- out/`

use a11y_indicator::fixture::{fixture_document, generate_fixture, FixtureKind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let out_dir = std::env::args().nth(1).map(std::path::PathBuf::from);
    for kind in FixtureKind::ALL {
        let doc = fixture_document(5, kind);
        let sum = |f: fn(&a11y_indicator::CriterionObservation) -> u64| -> u64 {
            doc.observations.iter().map(f).sum()
        };
        println!(
            "{kind:<16} criteria {:>2}  errors {:>3}  likely {:>3}  potential {:>3}  total {}",
            doc.observations.len(),
            sum(|o| o.n_err),
            sum(|o| o.n_likely),
            sum(|o| o.n_potential),
            doc.total_tests.unwrap_or_default()
        );
        if let Some(dir) = &out_dir {
            std::fs::create_dir_all(dir)?;
            std::fs::write(
                dir.join(format!("{kind}-0005.json")),
                generate_fixture(5, kind),
            )?;
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
