//! Singular-endpoint quadrature for the per-cycle integrals.
//!
//! Three integrals over one transverse oscillation control the physics:
//! the action gain 2∫√ρ dz, the translation 2∫(1+z√p)/√ρ dz and the period
//! 2∫dz/√ρ, all taken from 0 to the turning point z₀. The integrands behave
//! like z^{−1/2} at the origin and (z₀−z)^{−1/2} at the turning point, so
//! every integral is evaluated after the substitution z = z₀ sin²θ, which
//! removes both endpoint singularities and leaves an analytic integrand on
//! [0, π/2]. Fixed-order Gauss–Legendre rules are then doubled in order
//! until two successive estimates agree within the requested tolerance.

use crate::error::{Error, Result};
use crate::gauss::{integrate, ORDER_LADDER};
use crate::potential::{EffectivePotential, PotentialFamily};
use crate::units::{DimensionlessProblem, PhysicalParams};

/// Default absolute tolerance per integral.
pub const DEFAULT_TOL: f64 = 1e-10;

const HALF_PI: f64 = std::f64::consts::FRAC_PI_2;

/// A converged integral value with its error bound (the difference between
/// the last two refinement orders).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

fn refine<G: Fn(f64) -> f64>(g: G, tol: f64) -> Result<Estimate> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "tolerance must be positive and finite, got {tol}"
        )));
    }
    let mut prev = integrate(&g, 0.0, HALF_PI, ORDER_LADDER[0]);
    let mut best = Estimate {
        value: prev,
        error: f64::INFINITY,
    };
    for &order in &ORDER_LADDER[1..] {
        let value = integrate(&g, 0.0, HALF_PI, order);
        let error = (value - prev).abs();
        best = Estimate { value, error };
        if error <= tol && value.is_finite() {
            return Ok(best);
        }
        prev = value;
    }
    Err(Error::AccuracyNotReached {
        value: best.value,
        error: best.error,
        requested: tol,
    })
}

/// ∫₀^{z₀} weight(z)·√ρ(z) dz for a radicand with simple zeros at both ends.
pub fn integral_times_sqrt<R, W>(radicand: R, weight: W, z0: f64, tol: f64) -> Result<Estimate>
where
    R: Fn(f64) -> f64,
    W: Fn(f64) -> f64,
{
    refine(
        |theta| {
            let (sin, cos) = theta.sin_cos();
            let z = z0 * sin * sin;
            let rho = radicand(z).max(0.0);
            2.0 * z0 * sin * cos * weight(z) * rho.sqrt()
        },
        tol,
    )
}

/// ∫₀^{z₀} weight(z)/√ρ(z) dz. The substituted integrand uses the reduced
/// radicand ρ/(sin²θ cos²θ), which stays bounded when both zeros of ρ are
/// simple.
pub fn integral_over_sqrt<R, W>(radicand: R, weight: W, z0: f64, tol: f64) -> Result<Estimate>
where
    R: Fn(f64) -> f64,
    W: Fn(f64) -> f64,
{
    refine(
        |theta| {
            let (sin, cos) = theta.sin_cos();
            let z = z0 * sin * sin;
            let reduced = (radicand(z) / (sin * sin * cos * cos)).max(f64::MIN_POSITIVE);
            2.0 * z0 * weight(z) / reduced.sqrt()
        },
        tol,
    )
}

/// The three per-cycle integrals at one (p, r), sharing one turning point.
///
/// `action_gain` is 2∫√ρ dz, `translation` is 2∫(1+z√p)/√ρ dz, `period` is
/// 2∫dz/√ρ; `error_bound` is the largest per-integral error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleIntegrals {
    pub action_gain: f64,
    pub translation: f64,
    pub period: f64,
    pub turning_point: f64,
    pub error_bound: f64,
}

/// Action-gain integral 2∫₀^{z₀}√ρ dz. Finite for every p ≥ 0 with a well.
pub fn action_gain_integral(eff: &EffectivePotential, tol: f64) -> Result<Estimate> {
    let z0 = eff.turning_point()?;
    let est = integral_times_sqrt(|z| eff.radicand(z), |_| 1.0, z0, tol)?;
    Ok(Estimate {
        value: 2.0 * est.value,
        error: 2.0 * est.error,
    })
}

/// Translation integral 2∫₀^{z₀}(1+z√p)/√ρ dz. Diverges logarithmically as
/// p → 0; p = 0 is rejected rather than returned as a large number.
pub fn translation_integral(eff: &EffectivePotential, tol: f64) -> Result<Estimate> {
    if eff.problem.p == 0.0 {
        return Err(Error::DivergentIntegral);
    }
    let z0 = eff.turning_point()?;
    let sqrt_p = eff.problem.p.sqrt();
    let est = integral_over_sqrt(|z| eff.radicand(z), |z| 1.0 + z * sqrt_p, z0, tol)?;
    Ok(Estimate {
        value: 2.0 * est.value,
        error: 2.0 * est.error,
    })
}

/// Period integral 2∫₀^{z₀}dz/√ρ, the scaled imaginary-time period of one
/// transverse oscillation. Diverges as p → 0, as the translation does.
pub fn period_integral(eff: &EffectivePotential, tol: f64) -> Result<Estimate> {
    if eff.problem.p == 0.0 {
        return Err(Error::DivergentIntegral);
    }
    let z0 = eff.turning_point()?;
    let est = integral_over_sqrt(|z| eff.radicand(z), |_| 1.0, z0, tol)?;
    Ok(Estimate {
        value: 2.0 * est.value,
        error: 2.0 * est.error,
    })
}

/// All three cycle integrals with a shared turning point.
pub fn cycle_integrals(eff: &EffectivePotential, tol: f64) -> Result<CycleIntegrals> {
    if eff.problem.p == 0.0 {
        return Err(Error::DivergentIntegral);
    }
    let z0 = eff.turning_point()?;
    let sqrt_p = eff.problem.p.sqrt();
    let gain = integral_times_sqrt(|z| eff.radicand(z), |_| 1.0, z0, tol)?;
    let translation = integral_over_sqrt(|z| eff.radicand(z), |z| 1.0 + z * sqrt_p, z0, tol)?;
    let period = integral_over_sqrt(|z| eff.radicand(z), |_| 1.0, z0, tol)?;
    Ok(CycleIntegrals {
        action_gain: 2.0 * gain.value,
        translation: 2.0 * translation.value,
        period: 2.0 * period.value,
        turning_point: z0,
        error_bound: 2.0 * gain.error.max(translation.error).max(period.error),
    })
}

/// Per-cycle observables in laboratory units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleObservables {
    /// Translation Δx along the tunneling direction per cycle, in Å.
    pub translation: f64,
    /// Dimensionless action gain ΔA per cycle.
    pub action_gain: f64,
    /// Imaginary-time period per cycle in scaled units s = τ·v/a.
    pub period_scaled: f64,
    /// Imaginary-time period per cycle in seconds.
    pub period_seconds: f64,
}

/// Attach the unit-bearing factors: Δx = a·f₂, ΔA = κ·a·f₁ with κ the WKB
/// rate per Å, Δτ = (period)·a·sqrt(m/(2|E|)).
pub fn cycle_observables(integrals: &CycleIntegrals, params: &PhysicalParams) -> CycleObservables {
    CycleObservables {
        translation: params.well_scale * integrals.translation,
        action_gain: params.wkb_rate() * params.well_scale * integrals.action_gain,
        period_scaled: integrals.period,
        period_seconds: integrals.period * params.time_unit_seconds(),
    }
}

/// d(translation integral)/dp by central differences with one Richardson
/// extrapolation step; `error` combines the extrapolation difference with
/// the propagated quadrature tolerance.
pub fn translation_slope(
    family: &PotentialFamily,
    p: f64,
    r: f64,
    step: f64,
    tol: f64,
) -> Result<Estimate> {
    if !(step > 0.0 && p - step > 0.0) {
        return Err(Error::InvalidInput(format!(
            "slope step must satisfy 0 < step < p, got step = {step}, p = {p}"
        )));
    }
    let f2 = |q: f64| -> Result<f64> {
        let eff = EffectivePotential::new(family.clone(), DimensionlessProblem::new(q, r)?);
        Ok(translation_integral(&eff, tol)?.value)
    };
    let central = |h: f64| -> Result<f64> { Ok((f2(p + h)? - f2(p - h)?) / (2.0 * h)) };
    let coarse = central(step)?;
    let fine = central(0.5 * step)?;
    Ok(Estimate {
        value: (4.0 * fine - coarse) / 3.0,
        error: (fine - coarse).abs() + tol / step,
    })
}
