//! Flat key-value run configuration: one `key = value` per line, `#`
//! starts a comment. Flags override file values; file values override the
//! defaults, which reproduce the quantum-wire setup.

use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::potential::PotentialFamily;
use crate::units::PhysicalParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::InvalidInput(format!(
                "unknown format '{other}' (expected csv or json)"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

/// Everything a run needs: physical parameters, family selection,
/// tolerances and output routing.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub energy_depth: f64,
    pub well_scale: f64,
    pub well_strength: f64,
    pub barrier_length: f64,
    pub particle_mass: f64,
    pub family: String,
    pub poly_coeffs: Vec<(u32, f64)>,
    pub tol_quad: f64,
    pub tol_ode: f64,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let params = PhysicalParams::default();
        RunConfig {
            energy_depth: params.energy_depth,
            well_scale: params.well_scale,
            well_strength: params.well_strength,
            barrier_length: params.barrier_length,
            particle_mass: params.particle_mass,
            family: "quartic".to_string(),
            poly_coeffs: Vec::new(),
            tol_quad: crate::quadrature::DEFAULT_TOL,
            tol_ode: crate::trajectory::DEFAULT_TOL,
            format: OutputFormat::Csv,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn params(&self) -> Result<PhysicalParams> {
        PhysicalParams::new(
            self.energy_depth,
            self.well_scale,
            self.well_strength,
            self.barrier_length,
            self.particle_mass,
        )
    }

    pub fn family(&self) -> Result<PotentialFamily> {
        match self.family.as_str() {
            "quartic" => Ok(PotentialFamily::Quartic),
            "quadratic" => Ok(PotentialFamily::Quadratic),
            "cosine" => Ok(PotentialFamily::Cosine),
            "cosine2" => Ok(PotentialFamily::CosineSquared),
            "poly" => PotentialFamily::even_polynomial(self.poly_coeffs.clone()),
            other => Err(Error::InvalidInput(format!(
                "unknown family '{other}' (expected quartic, quadratic, cosine, cosine2 or poly)"
            ))),
        }
    }

    /// Well ratio r = u₀/|E| implied by the configured strengths.
    pub fn well_ratio(&self) -> f64 {
        self.well_strength / self.energy_depth
    }

    pub fn apply_line(&mut self, key: &str, value: &str) -> Result<()> {
        let float = |v: &str| -> Result<f64> {
            v.parse::<f64>()
                .map_err(|_| Error::InvalidInput(format!("cannot parse '{v}' as a number")))
        };
        match key {
            "energy_depth_ev" => self.energy_depth = float(value)?,
            "well_scale_angstrom" => self.well_scale = float(value)?,
            "well_strength_ev" => self.well_strength = float(value)?,
            "barrier_length_angstrom" => self.barrier_length = float(value)?,
            "particle_mass" => self.particle_mass = float(value)?,
            "family" => self.family = value.to_string(),
            "poly_coeffs" => self.poly_coeffs = parse_poly_coeffs(value)?,
            "tol_quad" => self.tol_quad = float(value)?,
            "tol_ode" => self.tol_ode = float(value)?,
            "format" => self.format = OutputFormat::parse(value)?,
            "out" => self.out = Some(PathBuf::from(value)),
            other => {
                return Err(Error::InvalidInput(format!("unknown config key '{other}'")));
            }
        }
        Ok(())
    }

    pub fn parse_str(text: &str) -> Result<Self> {
        let mut config = RunConfig::default();
        for (number, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::InvalidInput(format!(
                    "line {}: expected 'key = value', got '{raw}'",
                    number + 1
                )));
            };
            config.apply_line(key.trim(), value.trim())?;
        }
        Ok(config)
    }

    /// Serialize in the same key-value format `parse_str` reads; the round
    /// trip is lossless because floats print in shortest form.
    pub fn to_file_string(&self) -> String {
        let mut text = String::new();
        text.push_str(&format!("energy_depth_ev = {}\n", self.energy_depth));
        text.push_str(&format!("well_scale_angstrom = {}\n", self.well_scale));
        text.push_str(&format!("well_strength_ev = {}\n", self.well_strength));
        text.push_str(&format!(
            "barrier_length_angstrom = {}\n",
            self.barrier_length
        ));
        text.push_str(&format!("particle_mass = {}\n", self.particle_mass));
        text.push_str(&format!("family = {}\n", self.family));
        if !self.poly_coeffs.is_empty() {
            let pairs: Vec<String> = self
                .poly_coeffs
                .iter()
                .map(|(k, c)| format!("{k}:{c}"))
                .collect();
            text.push_str(&format!("poly_coeffs = {}\n", pairs.join(",")));
        }
        text.push_str(&format!("tol_quad = {}\n", self.tol_quad));
        text.push_str(&format!("tol_ode = {}\n", self.tol_ode));
        text.push_str(&format!("format = {}\n", self.format.name()));
        if let Some(out) = &self.out {
            text.push_str(&format!("out = {}\n", out.display()));
        }
        text
    }
}

/// Parse "k:c" pairs separated by commas, e.g. "1:1,2:0.5".
pub fn parse_poly_coeffs(value: &str) -> Result<Vec<(u32, f64)>> {
    value
        .split(',')
        .map(|pair| {
            let (k, c) = pair.trim().split_once(':').ok_or_else(|| {
                Error::InvalidInput(format!("expected 'k:c' coefficient pair, got '{pair}'"))
            })?;
            let k = k.trim().parse::<u32>().map_err(|_| {
                Error::InvalidInput(format!("cannot parse exponent '{k}' as an integer"))
            })?;
            let c = c.trim().parse::<f64>().map_err(|_| {
                Error::InvalidInput(format!("cannot parse coefficient '{c}' as a number"))
            })?;
            Ok((k, c))
        })
        .collect()
}
