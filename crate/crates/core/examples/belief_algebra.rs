// Mass functions on {accessible, not accessible}: discounting, conjunctive
// fusion and the pignistic decision.

use a11y_indicator::belief::{combine_all, make_mass, Reliability};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let checker_a = make_mass(0.6, 0.2, 0.2)?;
    let checker_b = make_mass(0.5, 0.3, 0.2)?;

    let fused = checker_a.combine(&checker_b);
    println!("fused:      {:?}", fused.to_array());
    println!("conflict:   {:.2}", fused.empty());
    println!("BetP(Ac):   {:.3}", fused.pignistic()?);

    let doubtful = checker_b.discount(Reliability::new(0.9)?)?;
    println!("discounted: {:?}", doubtful.to_array());

    let all = combine_all([&checker_a, &doubtful, &checker_a])?;
    println!("three-way BetP(Ac): {:.3}", all.pignistic()?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
