//! Euclidean-resonance location, the discrete admissible fields, the
//! probability curve and the per-period amplitude profile.
//!
//! The tunneling exponent over a barrier of length R is
//! A = (1 − f₁/f₂)·A_WKB, with f₁ and f₂ the per-cycle action-gain and
//! translation integrals. f₁ grows with the magnetic parameter faster than
//! f₂, and at the parameter where they cross the exponent vanishes: the
//! Euclidean resonance. Below the resonance a single instanton dominates
//! and w = exp(−A); above it the one-instanton method says nothing, and
//! every interface here marks that region instead of extrapolating into it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::potential::{EffectivePotential, PotentialFamily};
use crate::quadrature::{action_gain_integral, cycle_integrals, translation_integral};
use crate::solve::bisect;
use crate::units::{DimensionlessProblem, PhysicalParams};

/// One-instanton validity threshold: a point counts as `valid` only when
/// A ≥ 3, i.e. exp(−A) ≤ 0.05. Rows closer to the resonance are flagged
/// `near-resonance` because all powers of exp(−A) would contribute there.
pub const ONE_INSTANTON_ACTION_MIN: f64 = 3.0;

/// Resonance scan window in the magnetic parameter.
const RESONANCE_SCAN: (f64, f64) = (1e-3, 50.0);
const RESONANCE_SCAN_POINTS: usize = 140;

/// Scan window for the discrete-field root solves; wide enough to catch the
/// slowly diverging small-p branch of the translation integral.
const FIELD_SCAN: (f64, f64) = (1e-12, 400.0);
const FIELD_SCAN_PER_DECADE: usize = 50;

/// Location and local shape of the Euclidean resonance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResonanceReport {
    /// Magnetic parameter at which the tunneling exponent vanishes.
    pub p_resonance: f64,
    /// Resonance magnetic field in tesla.
    #[serde(rename = "H_resonance_tesla")]
    pub field_tesla: f64,
    /// Common value of the action-gain and translation integrals at the
    /// resonance.
    #[serde(rename = "f_at_resonance")]
    pub integral_at_resonance: f64,
    /// Slope of the exponent against the magnetic parameter: near the
    /// resonance A ≈ slope·(distance in p)·A_WKB.
    pub action_slope_p: f64,
    /// Slope against the relative field distance: A ≈ slope·(1 − H/H_res)·A_WKB.
    #[serde(rename = "action_slope_H")]
    pub action_slope_field: f64,
    /// |f₁ − f₂| left at the reported root.
    pub residual: f64,
}

/// Validity marker carried by scan rows and curve points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Validity {
    /// One-instanton result, exp(−A) small.
    Valid,
    /// exp(−A) not small; a multi-instanton treatment would be required.
    NearResonance,
    /// The quantization condition has no solution in the scanned range.
    NoSolution,
    /// Field above the resonance: outside the reach of the method.
    BeyondMethod,
}

impl std::fmt::Display for Validity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Validity::Valid => "valid",
            Validity::NearResonance => "near-resonance",
            Validity::NoSolution => "no-solution",
            Validity::BeyondMethod => "beyond-method",
        })
    }
}

/// One row of the discrete-field table: the barrier fits exactly `cycles`
/// translation periods at the field `field_tesla`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanRow {
    pub cycles: u32,
    pub p: Option<f64>,
    pub field_tesla: Option<f64>,
    pub action: Option<f64>,
    pub probability: Option<f64>,
    pub validity: Validity,
}

/// One point of the probability curve w(H).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvePoint {
    pub field_tesla: f64,
    pub p: f64,
    pub action: Option<f64>,
    pub probability: Option<f64>,
    pub validity: Validity,
}

/// Fraction 1 − f₁/f₂ of the zero-field exponent that survives at (p, r).
/// Multiplying by A_WKB gives the full exponent.
pub fn action_ratio(
    family: &PotentialFamily,
    problem: DimensionlessProblem,
    tol: f64,
) -> Result<f64> {
    let eff = EffectivePotential::new(family.clone(), problem);
    let gain = action_gain_integral(&eff, tol)?;
    let translation = translation_integral(&eff, tol)?;
    Ok(1.0 - gain.value / translation.value)
}

fn integral_difference(family: &PotentialFamily, p: f64, r: f64, tol: f64) -> Result<f64> {
    let eff = EffectivePotential::new(family.clone(), DimensionlessProblem::new(p, r)?);
    let gain = action_gain_integral(&eff, tol)?;
    let translation = translation_integral(&eff, tol)?;
    Ok(gain.value - translation.value)
}

/// Locate the Euclidean resonance for a family at well ratio `r`.
///
/// The root of f₁(p) − f₂(p) is bracketed on a geometric scan of
/// p ∈ [1e-3, 50] and bisected to 1e-10 relative. Slopes come from central
/// differences of the action ratio with one Richardson step, taken
/// independently in p and in H so the chain-rule identity between them
/// remains a genuine cross-check.
pub fn find_resonance(
    family: &PotentialFamily,
    r: f64,
    params: &PhysicalParams,
    tol: f64,
) -> Result<ResonanceReport> {
    let (lo, hi) = RESONANCE_SCAN;
    let pre_tol = tol.max(1e-6);
    let ratio = (hi / lo).powf(1.0 / (RESONANCE_SCAN_POINTS as f64 - 1.0));
    let mut bracket = None;
    let mut prev: Option<(f64, f64)> = None;
    let mut p = lo;
    for _ in 0..RESONANCE_SCAN_POINTS {
        if let Ok(diff) = integral_difference(family, p, r, pre_tol) {
            if let Some((p_prev, diff_prev)) = prev {
                if diff_prev * diff <= 0.0 {
                    bracket = Some((p_prev, p));
                    break;
                }
            }
            prev = Some((p, diff));
        }
        p *= ratio;
    }
    let Some((b_lo, b_hi)) = bracket else {
        return Err(Error::NoResonance { lo, hi });
    };

    // a quadrature failure inside the bisection (unreachable tolerance)
    // must surface as an error, not distort the root
    let first_error: std::cell::RefCell<Option<Error>> = std::cell::RefCell::new(None);
    let diff_full = |q: f64| match integral_difference(family, q, r, tol) {
        Ok(diff) => diff,
        Err(err) => {
            first_error.borrow_mut().get_or_insert(err);
            f64::NAN
        }
    };
    let p_res = bisect(diff_full, b_lo, b_hi, 1e-10);
    if let Some(err) = first_error.into_inner() {
        return Err(err);
    }
    let residual = integral_difference(family, p_res, r, tol)?.abs();
    let eff = EffectivePotential::new(family.clone(), DimensionlessProblem::new(p_res, r)?);
    let integral_at_resonance = translation_integral(&eff, tol)?.value;
    let field_tesla = params.field_from_p(p_res)?;

    // central difference + Richardson of the ratio, in p
    let ratio_at = |q: f64| action_ratio(family, DimensionlessProblem::new(q, r).unwrap(), tol);
    let h = 1e-3 * p_res;
    let central_p =
        |h: f64| -> Result<f64> { Ok((ratio_at(p_res + h)? - ratio_at(p_res - h)?) / (2.0 * h)) };
    let slope_p = -(4.0 * central_p(0.5 * h)? - central_p(h)?) / 3.0;

    // and independently in H
    let ratio_at_field = |field: f64| -> Result<f64> { ratio_at(params.p_from_field(field)?) };
    let dh = 1e-3 * field_tesla;
    let central_h = |d: f64| -> Result<f64> {
        Ok((ratio_at_field(field_tesla + d)? - ratio_at_field(field_tesla - d)?) / (2.0 * d))
    };
    let slope_field = -field_tesla * (4.0 * central_h(0.5 * dh)? - central_h(dh)?) / 3.0;

    Ok(ResonanceReport {
        p_resonance: p_res,
        field_tesla,
        integral_at_resonance,
        action_slope_p: slope_p,
        action_slope_field: slope_field,
        residual,
    })
}

/// Exponent and probability at a known magnetic parameter; the single code
/// path shared by the discrete-field table and the probability curve.
pub(crate) fn point_at_p(
    family: &PotentialFamily,
    p: f64,
    r: f64,
    params: &PhysicalParams,
    length_angstrom: f64,
    tol: f64,
) -> Result<(f64, f64)> {
    let action = if p == 0.0 {
        // zero-field limit: the ratio tends to 1 and the exponent is pure WKB
        params.wkb_action_for(length_angstrom)
    } else {
        action_ratio(family, DimensionlessProblem::new(p, r)?, tol)?
            * params.wkb_action_for(length_angstrom)
    };
    Ok((action, (-action).exp()))
}

fn validity_for(action: f64) -> Validity {
    if action >= ONE_INSTANTON_ACTION_MIN {
        Validity::Valid
    } else {
        Validity::NearResonance
    }
}

/// Fields at which the barrier length holds an integer number of
/// translation periods: for each N solve f₂(p) = R/(N·a).
///
/// The translation integral diverges as p → 0 and grows again at large p,
/// so the target may be hit on both sides of its minimum. The reported root
/// is the one with the smallest non-negative exponent (the dominant valid
/// instanton), which is the largest root at or below the resonance; when
/// every root lies above the resonance the closest one is reported and the
/// row is flagged.
pub fn discrete_fields(
    family: &PotentialFamily,
    params: &PhysicalParams,
    r: f64,
    n_range: std::ops::RangeInclusive<u32>,
    tol: f64,
) -> Result<Vec<ScanRow>> {
    if *n_range.start() < 1 {
        return Err(Error::InvalidInput("cycle counts start at N = 1".into()));
    }
    let resonance = find_resonance(family, r, params, tol)?;
    let pre_tol = tol.max(1e-6);

    // one shared coarse table of the translation integral
    let (lo, hi) = FIELD_SCAN;
    let decades = (hi / lo).log10();
    let points = (decades * FIELD_SCAN_PER_DECADE as f64).ceil() as usize + 1;
    let step = (hi / lo).powf(1.0 / (points as f64 - 1.0));
    let mut table: Vec<(f64, f64)> = Vec::with_capacity(points);
    let mut p = lo;
    for _ in 0..points {
        let eff = EffectivePotential::new(family.clone(), DimensionlessProblem::new(p, r)?);
        if let Ok(est) = translation_integral(&eff, pre_tol) {
            table.push((p, est.value));
        }
        p *= step;
    }

    let first_error: std::cell::RefCell<Option<Error>> = std::cell::RefCell::new(None);
    let translation_at = |q: f64| -> f64 {
        let eff = EffectivePotential::new(family.clone(), DimensionlessProblem::new(q, r).unwrap());
        match translation_integral(&eff, tol) {
            Ok(est) => est.value,
            Err(err) => {
                first_error.borrow_mut().get_or_insert(err);
                f64::NAN
            }
        }
    };

    let mut rows = Vec::new();
    for n in n_range {
        let target = params.barrier_length / (n as f64 * params.well_scale);
        let mut roots: Vec<f64> = Vec::new();
        for pair in table.windows(2) {
            let (p_lo, f_lo) = pair[0];
            let (p_hi, f_hi) = pair[1];
            if (f_lo - target) * (f_hi - target) < 0.0 {
                let f = |q: f64| translation_at(q) - target;
                // re-check the bracket at full tolerance before bisecting
                if f(p_lo) * f(p_hi) < 0.0 {
                    roots.push(bisect(f, p_lo, p_hi, 1e-10));
                }
                if let Some(err) = first_error.borrow_mut().take() {
                    return Err(err);
                }
            }
        }
        let chosen = roots
            .iter()
            .copied()
            .filter(|&q| q <= resonance.p_resonance)
            .fold(None, |acc: Option<f64>, q| {
                Some(acc.map_or(q, |a| a.max(q)))
            })
            .or_else(|| {
                roots.iter().copied().fold(None, |acc: Option<f64>, q| {
                    Some(acc.map_or(q, |a| a.min(q)))
                })
            });
        match chosen {
            None => rows.push(ScanRow {
                cycles: n,
                p: None,
                field_tesla: None,
                action: None,
                probability: None,
                validity: Validity::NoSolution,
            }),
            Some(p_n) => {
                let (action, probability) =
                    point_at_p(family, p_n, r, params, params.barrier_length, tol)?;
                rows.push(ScanRow {
                    cycles: n,
                    p: Some(p_n),
                    field_tesla: Some(params.field_from_p(p_n)?),
                    action: Some(action),
                    probability: Some(probability),
                    validity: validity_for(action),
                });
            }
        }
    }
    Ok(rows)
}

/// The left flank of the probability peak: w(H) = exp(−A(H)) for each field
/// in `fields`. Points above the resonance field are marked `beyond-method`
/// and carry no fabricated numbers.
pub fn probability_curve(
    family: &PotentialFamily,
    params: &PhysicalParams,
    r: f64,
    fields: &[f64],
    tol: f64,
) -> Result<Vec<CurvePoint>> {
    let resonance = find_resonance(family, r, params, tol)?;
    let mut points = Vec::with_capacity(fields.len());
    for &field in fields {
        let p = params.p_from_field(field)?;
        if field > resonance.field_tesla {
            points.push(CurvePoint {
                field_tesla: field,
                p,
                action: None,
                probability: None,
                validity: Validity::BeyondMethod,
            });
            continue;
        }
        let (action, probability) = point_at_p(family, p, r, params, params.barrier_length, tol)?;
        points.push(CurvePoint {
            field_tesla: field,
            p,
            action: Some(action),
            probability: Some(probability),
            validity: validity_for(action),
        });
    }
    Ok(points)
}

/// Squared amplitude of the under-barrier state at the periodic points
/// n·Δx for n = 0..=cycles, normalized to the n = 0 entry.
///
/// Each period multiplies the amplitude by exp(−(κΔx − ΔA)) = exp(−A_cycle);
/// at the resonance field A_cycle vanishes and the profile is flat: no
/// exponential decay along the barrier.
pub fn amplitude_profile(
    family: &PotentialFamily,
    params: &PhysicalParams,
    r: f64,
    field_tesla: f64,
    cycles: u32,
    tol: f64,
) -> Result<Vec<f64>> {
    if cycles < 1 {
        return Err(Error::InvalidInput("cycle count must be at least 1".into()));
    }
    let p = params.p_from_field(field_tesla)?;
    let eff = EffectivePotential::new(family.clone(), DimensionlessProblem::new(p, r)?);
    let ci = cycle_integrals(&eff, tol)?;
    let per_cycle = params.wkb_rate() * params.well_scale * (ci.translation - ci.action_gain);
    Ok((0..=cycles)
        .map(|n| (-per_cycle * n as f64).exp())
        .collect())
}
