// Walk through every intermediate value of one frame.

use a11y_indicator::engine::{discretize, trace_frame};
use a11y_indicator::report::{AssessorProfile, AssessorReport, CriterionObservation};
use a11y_indicator::wcag::{default_weights, CriterionCatalog, DeficiencyFrame};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let weights = default_weights();
    let mut obs = CriterionObservation::new("1.1.1");
    (obs.n_ok, obs.n_err, obs.t_err, obs.n_likely, obs.t_likely) = (12, 2, 4, 1, 2);
    let report = AssessorReport::new(
        AssessorProfile::with_defaults("checker", &weights)?,
        "https://worked.example/",
        [obs],
    )?;

    let trace = trace_frame(
        &[report],
        DeficiencyFrame::Visual.into(),
        &CriterionCatalog::wcag20(),
        &weights,
    )?;
    for s in &trace.sources {
        let t = &s.terms;
        println!("{}:", s.name);
        println!(
            "  E(Ac)    = {} / {} = {:.3}",
            t.ac_num, t.ac_den, s.estimate.e_ac
        );
        println!(
            "  E(NotAc) = {} / {} = {:.3}",
            t.nac_num, t.nac_den, s.estimate.e_nac
        );
        println!(
            "  E(Omega) = {} / {} = {:.3}",
            t.omega_num, t.omega_den, s.estimate.e_omega
        );
        println!("  mass {:?}", s.mass.to_array());
    }
    let d = trace.decision()?;
    println!("D = {d:.4} -> {}", discretize(d, &weights)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
