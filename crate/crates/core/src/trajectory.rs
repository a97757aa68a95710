//! The periodic instanton orbit as an initial-value problem.
//!
//! In scaled imaginary time s = τ·sqrt(2|E|/m)/a the transverse coordinate
//! obeys d²z/ds² = ρ'(z)/2 with ρ the radicand of the effective potential,
//! and the tunneling coordinate advances as d(x/a)/ds = −(1 + √p·z). The
//! energy shell forces (dz/ds)² = ρ(z) along the exact flow, which is the
//! drift monitor of the integration.
//!
//! One cycle starts at (z, z') = (0, 0), a genuine initial condition
//! because ρ'(0) = 2√p > 0 makes it a turning point rather than an
//! equilibrium. It runs to the first return of z' to zero at the far
//! turning point and is closed by reflection, which enforces the
//! even-solution branch structurally instead of approximately.

use crate::error::{Error, Result};
use crate::potential::EffectivePotential;
use crate::rk::{Dopri5, State, Step, StepOutcome};
use crate::units::PhysicalParams;

/// Default local error tolerance for orbit integration.
pub const DEFAULT_TOL: f64 = 1e-10;

const SAMPLES_PER_HALF: usize = 100;
const S_MAX: f64 = 1e4;
const H_MAX: f64 = 0.05;
const H_INIT: f64 = 1e-6;
const MAX_STEPS: usize = 2_000_000;

/// One sampled point of the orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitSample {
    /// Scaled imaginary time.
    pub s: f64,
    /// Scaled transverse coordinate z = η/a.
    pub z: f64,
    /// dz/ds.
    pub dzds: f64,
    /// Tunneling coordinate in units of a; decreases from N·Δx/a to 0.
    pub x_over_a: f64,
}

/// A sampled periodic orbit of N cycles with its per-cycle observables.
#[derive(Debug, Clone, PartialEq)]
pub struct InstantonOrbit {
    pub samples: Vec<OrbitSample>,
    /// Scaled period Δs of one cycle.
    pub period: f64,
    /// Translation Δ(x/a) per cycle (positive).
    pub translation: f64,
    /// Dimensionless action gain per cycle, ∫(dz/ds)² ds over one cycle.
    pub action_gain: f64,
    pub n_cycles: u32,
    /// Max |(dz/ds)² − ρ(z)| over integration nodes and output samples.
    pub energy_drift: f64,
}

/// Integrate a single cycle of the periodic orbit.
///
/// The integration runs the half cycle from (0, 0) to the first return of
/// dz/ds to zero, located by root-polishing the dense interpolant, and the
/// full cycle follows by reflection. State also accumulates x/a and the
/// action-gain integrand, so the returned cycle carries (Δs, Δ(x/a), gain)
/// from the trajectory route alone.
pub fn integrate_cycle(eff: &EffectivePotential, tol: f64) -> Result<InstantonOrbit> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "tolerance must be positive and finite, got {tol}"
        )));
    }
    if eff.problem.p == 0.0 {
        // the geometry is fine at p = 0 but the translation never closes
        return Err(Error::DivergentIntegral);
    }
    let well = eff.well();
    if !well.exists {
        return Err(Error::NoWell(format!(
            "{} family at p = {}, r = {}: {}",
            eff.family.name(),
            eff.problem.p,
            eff.problem.r,
            well
        )));
    }

    let sqrt_p = eff.problem.p.sqrt();
    let rhs = move |y: &State| -> State {
        [
            y[1],
            0.5 * eff.radicand_deriv(y[0]),
            -(1.0 + sqrt_p * y[0]),
            y[1] * y[1],
        ]
    };
    // step control runs two orders tighter than the declared tolerance so
    // the accumulated drift stays within the 10·tol failure threshold; the
    // step cap scales as tol^(1/4) because the dense-output error is O(h⁴)
    // and the drift is also measured on interpolated samples
    let internal_tol = (tol / 100.0).max(1e-14);
    let h_cap = H_MAX.min(0.5 * tol.powf(0.25));
    let solver = Dopri5::new(&rhs, internal_tol);

    let mut steps: Vec<Step> = Vec::new();
    let mut s = 0.0;
    let mut y: State = [0.0, 0.0, 0.0, 0.0];
    let mut h = H_INIT;
    let mut armed = false;
    let mut drift = 0.0f64;
    let mut event: Option<(f64, State)> = None;

    for _ in 0..MAX_STEPS {
        let (outcome, h_next) = solver.step(s, &y, h.min(h_cap), 60);
        let step = match outcome {
            StepOutcome::Accepted(step) => step,
            StepOutcome::MaxStepsExceeded => {
                return Err(Error::NoPeriodicOrbit { s_max: S_MAX });
            }
        };
        s = step.s + step.h;
        y = step.y1;
        drift = drift.max(shell_violation(eff, &y));
        if armed && y[1] <= 0.0 {
            // dz/ds crossed zero inside this step: polish on the interpolant
            let theta = bisect_velocity_zero(&step);
            let state = step.interpolate(theta);
            steps.push(step);
            event = Some((step.s + theta * step.h, state));
            break;
        }
        if y[1] > 0.0 {
            armed = true;
        }
        steps.push(step);
        h = h_next;
        if s > S_MAX {
            return Err(Error::NoPeriodicOrbit { s_max: S_MAX });
        }
    }
    let Some((s_half, y_half)) = event else {
        return Err(Error::NoPeriodicOrbit { s_max: S_MAX });
    };

    let period = 2.0 * s_half;
    let translation = -2.0 * y_half[2];
    let action_gain = 2.0 * y_half[3];

    // sample the half cycle on a uniform grid, then mirror:
    //   z(Δs−σ) = z(σ), z'(Δs−σ) = −z'(σ), x(Δs−σ) = Δx − x(σ)
    let mut half = Vec::with_capacity(SAMPLES_PER_HALF + 1);
    let mut cursor = 0usize;
    for j in 0..=SAMPLES_PER_HALF {
        let s_j = s_half * j as f64 / SAMPLES_PER_HALF as f64;
        let state = if j == SAMPLES_PER_HALF {
            y_half
        } else {
            while cursor + 1 < steps.len() && steps[cursor].s + steps[cursor].h < s_j {
                cursor += 1;
            }
            let step = &steps[cursor];
            step.interpolate(((s_j - step.s) / step.h).clamp(0.0, 1.0))
        };
        drift = drift.max(shell_violation(eff, &state));
        half.push((s_j, state));
    }

    let limit = 10.0 * tol;
    if drift > limit {
        return Err(Error::IntegratorFailure { drift, limit });
    }

    let mut samples = Vec::with_capacity(2 * SAMPLES_PER_HALF + 1);
    for &(s_j, state) in &half {
        samples.push(OrbitSample {
            s: s_j,
            z: state[0],
            dzds: state[1],
            x_over_a: state[2] + translation,
        });
    }
    for j in (0..SAMPLES_PER_HALF).rev() {
        let (s_j, state) = half[j];
        samples.push(OrbitSample {
            s: period - s_j,
            z: state[0],
            dzds: -state[1],
            x_over_a: -state[2],
        });
    }

    Ok(InstantonOrbit {
        samples,
        period,
        translation,
        action_gain,
        n_cycles: 1,
        energy_drift: drift,
    })
}

fn shell_violation(eff: &EffectivePotential, y: &State) -> f64 {
    (y[1] * y[1] - eff.radicand(y[0])).abs()
}

fn bisect_velocity_zero(step: &Step) -> f64 {
    let u = |theta: f64| step.interpolate(theta)[1];
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if u(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Concatenate N translated copies of a single cycle so that x runs from
/// N·Δx/a at s = 0 down to exactly 0 at s = N·Δs.
pub fn extend_orbit(cycle: &InstantonOrbit, n_cycles: u32) -> Result<InstantonOrbit> {
    if n_cycles == 0 {
        return Err(Error::InvalidInput("cycle count must be at least 1".into()));
    }
    if cycle.n_cycles != 1 {
        return Err(Error::InvalidInput(format!(
            "extend_orbit expects a single-cycle orbit, got {} cycles",
            cycle.n_cycles
        )));
    }
    let per_cycle = cycle.samples.len() - 1;
    let mut samples = Vec::with_capacity(per_cycle * n_cycles as usize + 1);
    for k in 0..n_cycles {
        let shift = (n_cycles - 1 - k) as f64 * cycle.translation;
        let s_offset = k as f64 * cycle.period;
        let start = if k == 0 { 0 } else { 1 };
        for sample in &cycle.samples[start..] {
            samples.push(OrbitSample {
                s: sample.s + s_offset,
                x_over_a: sample.x_over_a + shift,
                ..*sample
            });
        }
    }
    Ok(InstantonOrbit {
        samples,
        n_cycles,
        ..cycle.clone()
    })
}

/// Euclidean action of an N-cycle orbit in units of ħ: the zero-field
/// exponent over R = N·Δx minus the transverse kinetic counter-term, both
/// evaluated from the trajectory's own accumulated integrals.
pub fn orbit_action(orbit: &InstantonOrbit, params: &PhysicalParams) -> f64 {
    params.wkb_rate()
        * params.well_scale
        * orbit.n_cycles as f64
        * (orbit.translation - orbit.action_gain)
}
