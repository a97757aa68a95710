//! Error types shared by all modules.

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An input violated a precondition (negative field, zero mass, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The effective potential of the transverse imaginary-time motion does
    /// not form a well, so no periodic orbit exists.
    #[error("no well in the effective potential: {0}")]
    NoWell(String),

    /// The requested integral diverges at zero field. The per-cycle
    /// translation and period are infinite at p = 0: without a field the
    /// trajectory never returns.
    #[error("integral diverges at p = 0 (zero magnetic field)")]
    DivergentIntegral,

    /// Quadrature refinement hit the maximum order before two successive
    /// orders agreed to the requested tolerance. Carries the best estimate
    /// and its error bound.
    #[error("quadrature accuracy not reached: best {value:.17e}, bound {error:.2e}, requested {requested:.2e}")]
    AccuracyNotReached {
        value: f64,
        error: f64,
        requested: f64,
    },

    /// The orbit integrator found no return of the transverse velocity to
    /// zero within the time budget.
    #[error("no periodic orbit found within s_max = {s_max}")]
    NoPeriodicOrbit { s_max: f64 },

    /// The orbit integrator finished but the energy-shell drift exceeded
    /// ten times the requested tolerance.
    #[error("integrator failure: energy drift {drift:.2e} exceeds limit {limit:.2e}")]
    IntegratorFailure { drift: f64, limit: f64 },

    /// No sign change of the action-gain minus translation integrals was
    /// found in the scanned parameter range.
    #[error("no Euclidean resonance found for p in [{lo}, {hi}]")]
    NoResonance { lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
