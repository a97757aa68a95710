//! Discrete admissible fields: the trajectory method terminates at a
//! physical exit point only when the barrier holds an integer number of
//! translation periods, R = N·Δx(H). This prints the table of those fields
//! for the default 2739 Å barrier.
//!
//! Run with: cargo run --release --example field_scan

use magtunnel::{discrete_fields, find_resonance, PhysicalParams, PotentialFamily};

fn main() -> Result<(), magtunnel::Error> {
    let params = PhysicalParams::default();
    let family = PotentialFamily::Quartic;
    let r = params.well_ratio();

    let resonance = find_resonance(&family, r, &params, 1e-10)?;
    println!(
        "barrier R = {} Å, resonance at H = {:.4} T",
        params.barrier_length, resonance.field_tesla
    );
    println!();
    println!(
        "{:>3} {:>14} {:>12} {:>10} {:>12}  validity",
        "N", "p_N", "h_N [T]", "A_N", "w_N"
    );

    for row in discrete_fields(&family, &params, r, 1..=6, 1e-10)? {
        match row.p {
            Some(p) => println!(
                "{:>3} {:>14.6e} {:>12.6} {:>10.4} {:>12.4e}  {}",
                row.cycles,
                p,
                row.field_tesla.unwrap(),
                row.action.unwrap(),
                row.probability.unwrap(),
                row.validity
            ),
            None => println!(
                "{:>3} {:>14} {:>12} {:>10} {:>12}  {}",
                row.cycles, "-", "-", "-", "-", row.validity
            ),
        }
    }
    println!();
    println!("rows flagged no-solution ask for a translation period shorter than");
    println!("the translation integral ever allows; the barrier cannot hold that");
    println!("many cycles at any field.");
    Ok(())
}
