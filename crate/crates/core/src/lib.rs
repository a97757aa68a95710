//! Semiclassical tunneling through long static barriers in a magnetic field.
//!
//! The tunneling probability w ~ exp(−A) through a barrier that is flat
//! along the tunneling direction and confining in the transverse one is
//! controlled by a periodic classical trajectory in imaginary time. The
//! magnetic field feeds transverse kinetic energy back into the exponent,
//! and at a critical field the exponent vanishes: tunneling through an
//! arbitrarily long barrier stops being exponentially suppressed.
//!
//! The crate computes that exponent end to end:
//!
//! * [`units`]: laboratory inputs (eV, Å, tesla) and the dimensionless
//!   magnetic parameter p and well ratio r everything else runs on;
//! * [`potential`]: transverse potential families, their analytic
//!   continuation and the effective-potential radicand;
//! * [`quadrature`]: the singular-endpoint cycle integrals (action gain,
//!   translation, period);
//! * [`trajectory`]: the periodic instanton orbit as an initial-value
//!   problem, cross-validating the quadrature route;
//! * [`resonance`]: the critical field, discrete admissible fields, the
//!   probability curve and the per-period amplitude profile;
//! * [`cli`]: the command-line front end emitting CSV/JSON plot data.
//!
//! ```
//! use magtunnel::{find_resonance, PhysicalParams, PotentialFamily};
//!
//! // quantum-wire defaults: |E| = 1e-3 eV, a = 140 Å, quartic profile
//! let params = PhysicalParams::default();
//! let report = find_resonance(&PotentialFamily::Quartic, 1.0, &params, 1e-8).unwrap();
//! assert!((report.field_tesla - 10.21).abs() < 0.05);
//! assert!(report.residual < 1e-6);
//! ```

pub mod cli;
pub mod constants;
pub mod error;
mod gauss;
pub mod potential;
pub mod quadrature;
pub mod resonance;
mod rk;
mod solve;
pub mod trajectory;
pub mod units;

pub use error::{Error, Result};
pub use potential::{EffectivePotential, PotentialFamily, WellDetail, WellDiagnostic};
pub use quadrature::{cycle_integrals, cycle_observables, CycleIntegrals, CycleObservables};
pub use resonance::{
    action_ratio, amplitude_profile, discrete_fields, find_resonance, probability_curve,
    CurvePoint, ResonanceReport, ScanRow, Validity,
};
pub use trajectory::{extend_orbit, integrate_cycle, orbit_action, InstantonOrbit, OrbitSample};
pub use units::{DimensionlessProblem, PhysicalParams};
