//! Tunneling probability against magnetic field for the default barrier:
//! the left flank of the resonance peak, rising from the zero-field WKB
//! value to order one near the resonance.
//!
//! Run with: cargo run --release --example probability_curve

use magtunnel::{find_resonance, probability_curve, PhysicalParams, PotentialFamily, Validity};

fn main() -> Result<(), magtunnel::Error> {
    let params = PhysicalParams::default();
    let family = PotentialFamily::Quartic;
    let r = params.well_ratio();

    let resonance = find_resonance(&family, r, &params, 1e-10)?;
    println!(
        "R = {} Å, A_WKB = {:.3}, resonance at {:.4} T",
        params.barrier_length,
        params.wkb_action(),
        resonance.field_tesla
    );
    println!();

    let fields: Vec<f64> = (0..=26).map(|i| 0.45 * i as f64).collect();
    let points = probability_curve(&family, &params, r, &fields, 1e-10)?;

    println!(
        "{:>8} {:>10} {:>12} {:>12}  validity",
        "H [T]", "p", "A", "w"
    );
    for point in &points {
        match point.action {
            Some(action) => println!(
                "{:>8.2} {:>10.5} {:>12.4} {:>12.4e}  {}",
                point.field_tesla,
                point.p,
                action,
                point.probability.unwrap(),
                point.validity
            ),
            None => println!(
                "{:>8.2} {:>10.5} {:>12} {:>12}  {}",
                point.field_tesla, point.p, "-", "-", point.validity
            ),
        }
    }

    let gain: f64 = points
        .iter()
        .filter(|pt| pt.validity == Validity::Valid)
        .filter_map(|pt| pt.probability)
        .fold(0.0, f64::max)
        / points[0].probability.unwrap();
    println!();
    println!("within the one-instanton window the field lifts w by a factor {gain:.1e};");
    println!("the rows above the resonance are intentionally blank: a single");
    println!("trajectory no longer dominates there.");
    Ok(())
}
