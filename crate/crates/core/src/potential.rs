//! Transverse potential families, their analytic continuation to the
//! imaginary transverse coordinate, and the effective-potential radicand.
//!
//! A family defines an even profile u(y); continuing y → −iη and scaling
//! z = η/a gives the dimensionless profile w(z) = u(−iaz)/u₀. The motion in
//! imaginary time is governed by the radicand
//!
//! ```text
//! ρ(z) = −r·w(z) + 2√p·z + p·z²
//! ```
//!
//! which is the energy gap (E − v(η))/|E| above the effective potential.
//! The instanton exists only when ρ returns to zero at some z₀ > 0: the
//! effective potential must form a well.

use crate::error::{Error, Result};
use crate::solve::{bisect, polish_newton};
use crate::units::DimensionlessProblem;

/// Upper end of the well-detection scan window in z = η/a.
pub const WELL_SCAN_MAX: f64 = 50.0;

const WELL_SCAN_MIN: f64 = 1e-6;
const WELL_SCAN_POINTS: usize = 4000;

/// An even transverse potential u(y) together with its closed-form
/// continuation to the imaginary transverse coordinate.
#[derive(Debug, Clone, PartialEq)]
pub enum PotentialFamily {
    /// u(y) = u₀ (y²/a² + y⁴/a⁴); continues to w(z) = z⁴ − z².
    Quartic,
    /// u(y) = u₀ y²/a²; continues to w(z) = −z² (never forms a well).
    Quadratic,
    /// u(y) = u₀ (1 − cos y/a); continues to w(z) = 1 − cosh z.
    Cosine,
    /// u(y) = u₀ (1 − cos y/a)²; continues to w(z) = (1 − cosh z)².
    CosineSquared,
    /// u(y) = u₀ Σ c_k (y/a)^{2k}; each y^{2k} continues to (−1)^k η^{2k},
    /// so w(z) = Σ c_k (−1)^k z^{2k}. Exponents k must be ≥ 1.
    EvenPolynomial(Vec<(u32, f64)>),
}

impl PotentialFamily {
    /// Even polynomial with validated exponents (k ≥ 1 keeps w(0) = 0).
    pub fn even_polynomial(coefficients: Vec<(u32, f64)>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::InvalidInput(
                "even polynomial needs at least one (k, c_k) pair".into(),
            ));
        }
        for &(k, c) in &coefficients {
            if k == 0 {
                return Err(Error::InvalidInput(
                    "even polynomial exponents must satisfy k >= 1".into(),
                ));
            }
            if !c.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "coefficient for k = {k} must be finite, got {c}"
                )));
            }
        }
        Ok(PotentialFamily::EvenPolynomial(coefficients))
    }

    /// Continued dimensionless profile w(z) = u(−iaz)/u₀.
    pub fn continuation(&self, z: f64) -> f64 {
        match self {
            PotentialFamily::Quartic => z * z * (z * z - 1.0),
            PotentialFamily::Quadratic => -z * z,
            PotentialFamily::Cosine => 1.0 - z.cosh(),
            PotentialFamily::CosineSquared => {
                let d = 1.0 - z.cosh();
                d * d
            }
            PotentialFamily::EvenPolynomial(coeffs) => coeffs
                .iter()
                .map(|&(k, c)| c * sign_for(k) * z.powi(2 * k as i32))
                .sum(),
        }
    }

    /// Derivative dw/dz of the continued profile.
    pub fn continuation_deriv(&self, z: f64) -> f64 {
        match self {
            PotentialFamily::Quartic => 4.0 * z * z * z - 2.0 * z,
            PotentialFamily::Quadratic => -2.0 * z,
            PotentialFamily::Cosine => -z.sinh(),
            PotentialFamily::CosineSquared => -2.0 * (1.0 - z.cosh()) * z.sinh(),
            PotentialFamily::EvenPolynomial(coeffs) => coeffs
                .iter()
                .map(|&(k, c)| {
                    let n = 2 * k as i32;
                    c * sign_for(k) * n as f64 * z.powi(n - 1)
                })
                .sum(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PotentialFamily::Quartic => "quartic",
            PotentialFamily::Quadratic => "quadratic",
            PotentialFamily::Cosine => "cosine",
            PotentialFamily::CosineSquared => "cosine2",
            PotentialFamily::EvenPolynomial(_) => "even-polynomial",
        }
    }

    /// The four built-in families, in classification order.
    pub fn builtin() -> [PotentialFamily; 4] {
        [
            PotentialFamily::Quartic,
            PotentialFamily::Quadratic,
            PotentialFamily::Cosine,
            PotentialFamily::CosineSquared,
        ]
    }
}

fn sign_for(k: u32) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Outcome of the well-existence scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WellDetail {
    /// ρ changes sign from positive to non-positive inside this bracket.
    SignChange { lower: f64, upper: f64 },
    /// ρ stayed positive over the whole scan window: no turning point, the
    /// effective potential does not close into a well.
    EverywherePositive { scan_limit: f64 },
    /// ρ never became positive near the origin; the trajectory cannot start.
    NeverPositive { scan_limit: f64 },
}

/// Boolean classification plus the evidence behind it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellDiagnostic {
    pub exists: bool,
    pub detail: WellDetail,
}

impl std::fmt::Display for WellDiagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.detail {
            WellDetail::SignChange { lower, upper } => {
                write!(f, "radicand sign change in ({lower:.6}, {upper:.6})")
            }
            WellDetail::EverywherePositive { scan_limit } => {
                write!(f, "radicand positive on (0, {scan_limit}]")
            }
            WellDetail::NeverPositive { scan_limit } => {
                write!(f, "radicand never positive on (0, {scan_limit}]")
            }
        }
    }
}

/// A potential family paired with a dimensionless problem; evaluates the
/// radicand ρ(z) and locates the turning point z₀ = Δη/a.
#[derive(Debug, Clone, PartialEq)]
pub struct EffectivePotential {
    pub problem: DimensionlessProblem,
    pub family: PotentialFamily,
}

impl EffectivePotential {
    pub fn new(family: PotentialFamily, problem: DimensionlessProblem) -> Self {
        EffectivePotential { problem, family }
    }

    /// ρ(z) = −r·w(z) + 2√p·z + p·z². By construction ρ(0) = 0: the
    /// trajectory starts exactly on the energy shell.
    pub fn radicand(&self, z: f64) -> f64 {
        let DimensionlessProblem { p, r } = self.problem;
        -r * self.family.continuation(z) + 2.0 * p.sqrt() * z + p * z * z
    }

    /// dρ/dz; equals 2√p at z = 0.
    pub fn radicand_deriv(&self, z: f64) -> f64 {
        let DimensionlessProblem { p, r } = self.problem;
        -r * self.family.continuation_deriv(z) + 2.0 * p.sqrt() + 2.0 * p * z
    }

    /// Scan (0, WELL_SCAN_MAX] on a geometric grid for the first return of
    /// ρ to zero.
    pub fn well(&self) -> WellDiagnostic {
        let ratio = (WELL_SCAN_MAX / WELL_SCAN_MIN).powf(1.0 / (WELL_SCAN_POINTS as f64 - 1.0));
        let mut z = WELL_SCAN_MIN;
        let mut prev: Option<(f64, f64)> = None;
        let mut seen_positive = false;
        for _ in 0..WELL_SCAN_POINTS {
            let rho = self.radicand(z);
            if rho > 0.0 {
                seen_positive = true;
            } else if let Some((z_prev, rho_prev)) = prev {
                if rho_prev > 0.0 {
                    return WellDiagnostic {
                        exists: true,
                        detail: WellDetail::SignChange {
                            lower: z_prev,
                            upper: z,
                        },
                    };
                }
            }
            prev = Some((z, rho));
            z *= ratio;
        }
        let detail = if seen_positive {
            WellDetail::EverywherePositive {
                scan_limit: WELL_SCAN_MAX,
            }
        } else {
            WellDetail::NeverPositive {
                scan_limit: WELL_SCAN_MAX,
            }
        };
        WellDiagnostic {
            exists: false,
            detail,
        }
    }

    pub fn well_exists(&self) -> bool {
        self.well().exists
    }

    /// Smallest z₀ > 0 with ρ(z₀) = 0 and ρ > 0 on (0, z₀), resolved to
    /// 1e-12 relative: bracketing bisection then Newton polishing on the
    /// analytic derivative.
    pub fn turning_point(&self) -> Result<f64> {
        let well = self.well();
        let WellDetail::SignChange { lower, upper } = well.detail else {
            return Err(Error::NoWell(format!(
                "{} family at p = {}, r = {}: {}",
                self.family.name(),
                self.problem.p,
                self.problem.r,
                well
            )));
        };
        let coarse = bisect(|z| self.radicand(z), lower, upper, 1e-6);
        Ok(polish_newton(
            |z| self.radicand(z),
            |z| self.radicand_deriv(z),
            coarse,
            lower,
            upper,
            1e-13,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn quartic(p: f64, r: f64) -> EffectivePotential {
        EffectivePotential::new(
            PotentialFamily::Quartic,
            DimensionlessProblem::new(p, r).unwrap(),
        )
    }

    #[test]
    fn radicand_is_zero_at_origin() {
        for family in PotentialFamily::builtin() {
            let eff =
                EffectivePotential::new(family, DimensionlessProblem::new(1.76, 1.0).unwrap());
            assert_eq!(eff.radicand(0.0), 0.0);
        }
    }

    #[test]
    fn quartic_radicand_closed_form() {
        // p = 0, r = 1: ρ = z²(1 − z²), so ρ(1) = 0
        assert_eq!(quartic(0.0, 1.0).radicand(1.0), 0.0);
        // p = 1.76, r = 1, z = 1: 0 + 2√1.76 + 1.76
        let expected = 2.0 * 1.76f64.sqrt() + 1.76;
        assert_relative_eq!(
            quartic(1.76, 1.0).radicand(1.0),
            expected,
            max_relative = 1e-15
        );
        assert!((quartic(1.76, 1.0).radicand(1.0) - 4.413).abs() < 1e-3);
    }

    #[test]
    fn radicand_slope_at_origin_is_twice_sqrt_p() {
        for p in [0.1, 0.5, 1.76, 3.0] {
            let eff = quartic(p, 1.0);
            assert_relative_eq!(
                eff.radicand_deriv(0.0),
                2.0 * p.sqrt(),
                max_relative = 1e-15
            );
        }
    }

    #[test]
    fn turning_point_at_zero_field_is_one() {
        let z0 = quartic(0.0, 1.0).turning_point().unwrap();
        assert_relative_eq!(z0, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn turning_point_matches_cubic_oracle() {
        // Factoring z out of the quartic radicand leaves the cubic
        // -z³ + (1+p) z + 2√p; bisect it independently.
        let p = 1.76;
        let cubic = |z: f64| -z * z * z + (1.0 + p) * z + 2.0 * p.sqrt();
        let (mut lo, mut hi) = (1.0, 4.0);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if cubic(lo) * cubic(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let oracle = 0.5 * (lo + hi);
        let z0 = quartic(p, 1.0).turning_point().unwrap();
        assert_relative_eq!(z0, oracle, max_relative = 1e-11);
        assert_relative_eq!(z0, 2.018_531_701_756_893, max_relative = 1e-10);
    }

    #[test]
    fn turning_point_is_a_simple_zero() {
        for p in [0.2, 1.0, 1.76, 2.5] {
            let eff = quartic(p, 1.0);
            let z0 = eff.turning_point().unwrap();
            assert!(eff.radicand(z0).abs() < 1e-10);
            assert!(eff.radicand_deriv(z0) < 0.0);
            // positive strictly inside
            for frac in [0.1, 0.5, 0.9] {
                assert!(eff.radicand(frac * z0) > 0.0);
            }
        }
    }

    #[test]
    fn quadratic_family_has_no_well() {
        let eff = EffectivePotential::new(
            PotentialFamily::Quadratic,
            DimensionlessProblem::new(1.76, 1.0).unwrap(),
        );
        let well = eff.well();
        assert!(!well.exists);
        assert!(matches!(well.detail, WellDetail::EverywherePositive { .. }));
        assert!(matches!(eff.turning_point(), Err(Error::NoWell(_))));
    }

    #[test]
    fn classification_matches_analytic_structure() {
        let problem = DimensionlessProblem::new(1.76, 1.0).unwrap();
        let expected = [
            (PotentialFamily::Quartic, true),
            (PotentialFamily::Quadratic, false),
            (PotentialFamily::Cosine, false),
            (PotentialFamily::CosineSquared, true),
        ];
        for (family, wants_well) in expected {
            let eff = EffectivePotential::new(family.clone(), problem);
            assert_eq!(eff.well_exists(), wants_well, "family {}", family.name());
        }
    }

    #[test]
    fn cosine_squared_turning_point() {
        let eff = EffectivePotential::new(
            PotentialFamily::CosineSquared,
            DimensionlessProblem::new(1.76, 1.0).unwrap(),
        );
        // oracle: bisection on -(1-cosh z)² + 2√1.76 z + 1.76 z² over [2, 3]
        let f = |z: f64| {
            let d = 1.0 - z.cosh();
            -d * d + 2.0 * 1.76f64.sqrt() * z + 1.76 * z * z
        };
        let (mut lo, mut hi) = (2.0, 3.0);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if f(lo) * f(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let z0 = eff.turning_point().unwrap();
        assert_relative_eq!(z0, 0.5 * (lo + hi), max_relative = 1e-10);
        assert_relative_eq!(z0, 2.268_095_195_549_276, max_relative = 1e-9);
    }

    #[test]
    fn polynomial_continuation_alternates_sign() {
        // u = u₀ (y/a)^{2k} continues to (−1)^k z^{2k}
        for k in [1u32, 2, 3] {
            let family = PotentialFamily::even_polynomial(vec![(k, 1.0)]).unwrap();
            let z = 1.3f64;
            let expected = if k % 2 == 0 { 1.0 } else { -1.0 } * z.powi(2 * k as i32);
            assert_relative_eq!(family.continuation(z), expected, max_relative = 1e-15);
            // derivative consistent with a central difference
            let h = 1e-6;
            let fd = (family.continuation(z + h) - family.continuation(z - h)) / (2.0 * h);
            assert_relative_eq!(family.continuation_deriv(z), fd, max_relative = 1e-8);
        }
    }

    #[test]
    fn polynomial_quartic_equivalence() {
        // c₁ = 1, c₂ = 1 reproduces the quartic family exactly
        let poly = PotentialFamily::even_polynomial(vec![(1, 1.0), (2, 1.0)]).unwrap();
        for z in [0.0, 0.3, 1.0, 1.9] {
            assert_relative_eq!(
                poly.continuation(z),
                PotentialFamily::Quartic.continuation(z),
                max_relative = 1e-15,
                epsilon = 1e-15
            );
        }
    }

    #[test]
    fn polynomial_rejects_constant_term() {
        assert!(PotentialFamily::even_polynomial(vec![(0, 1.0)]).is_err());
        assert!(PotentialFamily::even_polynomial(vec![]).is_err());
    }

    #[test]
    fn families_are_even_in_the_original_coordinate() {
        // evenness of u shows up as w depending only on z²; check w(z) via
        // the defining continuations at ±z being equal
        for family in PotentialFamily::builtin() {
            for z in [0.4, 1.1] {
                assert_relative_eq!(
                    family.continuation(z),
                    family.continuation(-z),
                    max_relative = 1e-12,
                    epsilon = 1e-12
                );
            }
        }
    }

    #[test]
    fn turning_point_monotone_in_p() {
        let mut prev = 0.0;
        for i in 0..30 {
            let p = 0.1 + (3.0 - 0.1) * i as f64 / 29.0;
            let z0 = quartic(p, 1.0).turning_point().unwrap();
            assert!(z0 > prev, "z0 must increase with p");
            prev = z0;
        }
    }

    proptest! {
        #[test]
        fn quartic_well_structure(p in 1e-3f64..10.0, r in 0.2f64..5.0) {
            let eff = quartic(p, r);
            let z0 = eff.turning_point().unwrap();
            prop_assert!(z0 > 0.0);
            prop_assert!(eff.radicand(z0).abs() < 1e-9 * (1.0 + z0 * z0));
            prop_assert!(eff.radicand_deriv(z0) < 0.0);
            prop_assert!(eff.radicand(0.5 * z0) > 0.0);
        }
    }
}
