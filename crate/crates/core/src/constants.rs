//! Physical constants in SI units.
//!
//! Values are the CODATA 2018 recommended values. The digits used here fix
//! the unit-bearing conversion factors of the library bit-for-bit, in
//! particular the tesla prefactor `sqrt(2 m_e eV) / (e Å)` ≈ 3.3721e4.

/// Electron mass (kilograms).
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;

/// Elementary charge (coulombs).
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;

/// Reduced Planck constant ħ (joule-seconds).
pub const HBAR: f64 = 1.054_571_817e-34;

/// One electron-volt in joules (exact since the 2019 SI redefinition).
pub const EV: f64 = 1.602_176_634e-19;

/// One ångström in meters.
pub const ANGSTROM: f64 = 1.0e-10;
