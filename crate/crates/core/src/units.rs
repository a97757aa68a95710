//! Laboratory-unit parameters and conversions to the dimensionless core.
//!
//! Inputs are electron-volts and ångströms, magnetic fields are tesla.
//! Everything downstream of this module works with the dimensionless pair
//! `(p, r)`: the magnetic parameter `p = m ω_c² a² / (2|E|)` and the
//! well-strength ratio `r = u₀/|E|`.

use crate::constants::{ANGSTROM, ELECTRON_MASS, ELEMENTARY_CHARGE, EV, HBAR};
use crate::error::{Error, Result};

/// Laboratory parameters of the barrier problem.
///
/// * `energy_depth`: the bound-state depth |E| in eV (the level sits at −|E|),
/// * `well_scale`: the transverse length a in Å,
/// * `well_strength`: the transverse potential strength u₀ in eV,
/// * `barrier_length`: the barrier length R in Å,
/// * `particle_mass`: the particle mass in electron masses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    pub energy_depth: f64,
    pub well_scale: f64,
    pub well_strength: f64,
    pub barrier_length: f64,
    pub particle_mass: f64,
}

impl Default for PhysicalParams {
    /// The quantum-wire setup: |E| = 10⁻³ eV, a = 140 Å, u₀ = |E|,
    /// R = 2739 Å, electron mass.
    fn default() -> Self {
        PhysicalParams {
            energy_depth: 1e-3,
            well_scale: 140.0,
            well_strength: 1e-3,
            barrier_length: 2739.0,
            particle_mass: 1.0,
        }
    }
}

impl PhysicalParams {
    pub fn new(
        energy_depth: f64,
        well_scale: f64,
        well_strength: f64,
        barrier_length: f64,
        particle_mass: f64,
    ) -> Result<Self> {
        let params = PhysicalParams {
            energy_depth,
            well_scale,
            well_strength,
            barrier_length,
            particle_mass,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("energy_depth", self.energy_depth),
            ("well_scale", self.well_scale),
            ("well_strength", self.well_strength),
            ("barrier_length", self.barrier_length),
            ("particle_mass", self.particle_mass),
        ];
        for (name, value) in fields {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "{name} must be strictly positive and finite, got {value}"
                )));
            }
        }
        Ok(())
    }

    /// Particle mass in kilograms.
    pub fn mass_kg(&self) -> f64 {
        self.particle_mass * ELECTRON_MASS
    }

    /// Bound-state depth |E| in joules.
    pub fn energy_joule(&self) -> f64 {
        self.energy_depth * EV
    }

    /// Velocity scale v = sqrt(2|E|/m) in m/s.
    pub fn velocity(&self) -> f64 {
        (2.0 * self.energy_joule() / self.mass_kg()).sqrt()
    }

    /// WKB decay rate per ångström, κ = 2 sqrt(2 m |E|) / ħ.
    pub fn wkb_rate(&self) -> f64 {
        2.0 * (2.0 * self.mass_kg() * self.energy_joule()).sqrt() / HBAR * ANGSTROM
    }

    /// Ratio r = u₀ / |E| of the transverse strength to the level depth.
    pub fn well_ratio(&self) -> f64 {
        self.well_strength / self.energy_depth
    }

    /// Imaginary-time unit a·sqrt(m/(2|E|)) in seconds; one scaled time unit
    /// of the trajectory module corresponds to this many seconds.
    pub fn time_unit_seconds(&self) -> f64 {
        self.well_scale * ANGSTROM * (self.mass_kg() / (2.0 * self.energy_joule())).sqrt()
    }

    /// Zero-field tunneling exponent over the configured barrier length,
    /// A_WKB = κ R.
    pub fn wkb_action(&self) -> f64 {
        self.wkb_action_for(self.barrier_length)
    }

    /// Zero-field tunneling exponent over an arbitrary length in Å.
    pub fn wkb_action_for(&self, length_angstrom: f64) -> f64 {
        self.wkb_rate() * length_angstrom
    }

    /// Magnetic field in tesla for a given dimensionless magnetic parameter,
    /// H = sqrt(2 m |E| p) / (e a).
    pub fn field_from_p(&self, p: f64) -> Result<f64> {
        if p.is_nan() || p < 0.0 {
            return Err(Error::InvalidInput(format!(
                "magnetic parameter must be non-negative, got {p}"
            )));
        }
        let a_m = self.well_scale * ANGSTROM;
        Ok((2.0 * self.mass_kg() * self.energy_joule() * p).sqrt() / (ELEMENTARY_CHARGE * a_m))
    }

    /// Dimensionless magnetic parameter for a field in tesla; the exact
    /// algebraic inverse of [`field_from_p`](Self::field_from_p).
    pub fn p_from_field(&self, field_tesla: f64) -> Result<f64> {
        if field_tesla.is_nan() || field_tesla < 0.0 {
            return Err(Error::InvalidInput(format!(
                "magnetic field must be non-negative, got {field_tesla}"
            )));
        }
        let a_m = self.well_scale * ANGSTROM;
        let ea_h = ELEMENTARY_CHARGE * a_m * field_tesla;
        Ok(ea_h * ea_h / (2.0 * self.mass_kg() * self.energy_joule()))
    }

    /// Largest barrier length (Å) for which level broadening δE leaves the
    /// under-barrier coherence intact: A_WKB(R) < |E|/δE, i.e.
    /// R_max = (|E|/δE) / κ.
    pub fn dissipation_max_length(&self, level_width_ratio: f64) -> Result<f64> {
        if !(level_width_ratio > 0.0 && level_width_ratio < 1.0) {
            return Err(Error::InvalidInput(format!(
                "level width ratio must lie in (0, 1), got {level_width_ratio}"
            )));
        }
        Ok(1.0 / (level_width_ratio * self.wkb_rate()))
    }
}

/// The dimensionless problem: magnetic parameter `p` and well ratio `r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessProblem {
    pub p: f64,
    pub r: f64,
}

impl DimensionlessProblem {
    pub fn new(p: f64, r: f64) -> Result<Self> {
        if !(p >= 0.0 && p.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "magnetic parameter must be non-negative and finite, got {p}"
            )));
        }
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "well ratio must be strictly positive and finite, got {r}"
            )));
        }
        Ok(DimensionlessProblem { p, r })
    }

    /// Problem at a given field, taking `r` from the parameters.
    pub fn at_field(field_tesla: f64, params: &PhysicalParams) -> Result<Self> {
        DimensionlessProblem::new(params.p_from_field(field_tesla)?, params.well_ratio())
    }
}
