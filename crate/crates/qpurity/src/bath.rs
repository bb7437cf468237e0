//! Ohmic heat bath with exponential cutoff.
//!
//! Spectral density `I(w) = 2 pi alpha w exp(-w / w_c)` and symmetrized noise
//! power `S(w) = I(w) coth(w / 2T)`, with the dc limit `S(0) = 4 pi alpha T`.
//! Units `hbar = k_B = 1`.

use crate::{Error, Result};

/// Dimensionless coupling beyond which the weak-coupling treatment becomes
/// questionable.
pub const WEAK_COUPLING_LIMIT: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OhmicBath {
    /// Dimensionless Kondo parameter `alpha`.
    pub alpha: f64,
    /// Cutoff frequency `w_c`.
    pub omega_c: f64,
    /// Temperature `T` (k_B = 1); zero is allowed.
    pub temperature: f64,
}

impl OhmicBath {
    pub fn new(alpha: f64, omega_c: f64, temperature: f64) -> Result<Self> {
        if !(alpha >= 0.0) || !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "bath coupling alpha must be >= 0, got {alpha}"
            )));
        }
        if !(omega_c > 0.0) || !omega_c.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "bath cutoff omega_c must be > 0, got {omega_c}"
            )));
        }
        if !(temperature >= 0.0) || !temperature.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "bath temperature must be >= 0, got {temperature}"
            )));
        }
        Ok(OhmicBath { alpha, omega_c, temperature })
    }

    /// `true` when `alpha` exceeds [`WEAK_COUPLING_LIMIT`]; callers should
    /// warn but may proceed.
    pub fn beyond_weak_coupling(&self) -> bool {
        self.alpha > WEAK_COUPLING_LIMIT
    }

    /// `I(w) = 2 pi alpha w exp(-w/w_c)`, defined for `w >= 0`.
    pub fn spectral_density(&self, omega: f64) -> Result<f64> {
        if omega < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "spectral density is defined for w >= 0, got {omega}"
            )));
        }
        Ok(2.0 * std::f64::consts::PI * self.alpha * omega * (-omega / self.omega_c).exp())
    }

    /// Symmetrized noise power `S(w) = I(w) coth(w/2T)`.
    ///
    /// Continuous at `w -> 0`, where it tends to `4 pi alpha T`; at `T = 0` it
    /// reduces to `I(w)`.
    pub fn noise_power(&self, omega: f64) -> Result<f64> {
        let i = self.spectral_density(omega)?;
        if self.temperature == 0.0 {
            return Ok(i);
        }
        let scale = self.temperature.max(1.0);
        if omega < 1e-9 * scale {
            // dc limit: I(w) coth(w/2T) -> 2 w pi alpha * 2T/w = 4 pi alpha T
            return Ok(4.0 * std::f64::consts::PI * self.alpha * self.temperature
                * (-omega / self.omega_c).exp());
        }
        let x = omega / (2.0 * self.temperature);
        Ok(i / x.tanh())
    }

    /// Rough validity measure of neglecting the bath-induced level shift:
    /// `alpha * ln(w_c / delta)` should be small against 1.
    pub fn lamb_shift_scale(&self, delta: f64) -> f64 {
        if delta <= 0.0 {
            return f64::INFINITY;
        }
        self.alpha * (self.omega_c / delta).ln().abs()
    }
}
