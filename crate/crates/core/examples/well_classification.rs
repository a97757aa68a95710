//! Whether the instanton exists at all depends on the analytic structure
//! of the transverse potential: after the rotation y → −iη some profiles
//! close into a well and some never return to the energy shell. Classify
//! the built-in families and a couple of custom even polynomials.
//!
//! Run with: cargo run --example well_classification

use magtunnel::{DimensionlessProblem, EffectivePotential, PhysicalParams, PotentialFamily};

fn main() -> Result<(), magtunnel::Error> {
    let problem = DimensionlessProblem::new(1.76, PhysicalParams::default().well_ratio())?;

    println!("classification at p = {}, r = {}:", problem.p, problem.r);
    println!();
    for family in PotentialFamily::builtin() {
        classify(family, problem);
    }

    // custom profiles u(y)/u0 = (y/a)^{2k}: the continuation flips sign
    // with k, so y⁴ and y⁸ close a well while y⁶ never does
    println!();
    println!("custom even monomials:");
    for k in [2u32, 3, 4] {
        classify(PotentialFamily::even_polynomial(vec![(k, 1.0)])?, problem);
    }
    Ok(())
}

fn classify(family: PotentialFamily, problem: DimensionlessProblem) {
    let eff = EffectivePotential::new(family.clone(), problem);
    let well = eff.well();
    let verdict = if well.exists { "well" } else { "no well" };
    print!("  {:>16}: {:<8} ({})", family.name(), verdict, well);
    if well.exists {
        if let Ok(z0) = eff.turning_point() {
            print!(", turning point z0 = {z0:.6}");
        }
    }
    println!();
}
