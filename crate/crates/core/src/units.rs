//! Trap definition and the unit convention.
//!
//! Everything downstream of [`TrapSpec`] works in dimensionless units: time is
//! measured in `1/omega0`, frequencies in `omega0` and energies in
//! `hbar * omega0`. With that choice the only physics inputs left are the
//! expansion factor `gamma` and the mode index `n`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Reduced Planck constant in J s (CODATA 2018, exact).
pub const HBAR_SI: f64 = 1.054_571_817e-34;

/// Harmonic trap endpoints for an expansion from `omega0` down to `omega_f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapSpec {
    omega0: f64,
    omega_f: f64,
    n: u32,
    hbar: f64,
}

impl TrapSpec {
    /// Angular frequencies in rad/s.
    pub fn new(omega0: f64, omega_f: f64, n: u32, hbar: f64) -> Result<Self> {
        if !(omega0.is_finite() && omega0 > 0.0) {
            return Err(Error::InvalidTrap(format!("omega0 must be positive, got {omega0}")));
        }
        if !(omega_f.is_finite() && omega_f > 0.0) {
            return Err(Error::InvalidTrap(format!("omega_f must be positive, got {omega_f}")));
        }
        if omega0 < omega_f {
            return Err(Error::InvalidTrap(format!(
                "expansion requires omega0 >= omega_f ({omega0} < {omega_f})"
            )));
        }
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::InvalidTrap(format!("hbar must be positive, got {hbar}")));
        }
        Ok(Self { omega0, omega_f, n, hbar })
    }

    /// Trap given by ordinary frequencies in Hz, with the SI value of hbar.
    pub fn from_hz(f0: f64, ff: f64, n: u32) -> Result<Self> {
        Self::new(2.0 * PI * f0, 2.0 * PI * ff, n, HBAR_SI)
    }

    /// Dimensionless trap: `omega0 = hbar = 1`, `omega_f = 1/gamma^2`.
    pub fn dimensionless(gamma: f64, n: u32) -> Result<Self> {
        if !(gamma.is_finite() && gamma >= 1.0) {
            return Err(Error::InvalidTrap(format!("gamma must be >= 1, got {gamma}")));
        }
        Self::new(1.0, 1.0 / (gamma * gamma), n, 1.0)
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    pub fn omega_f(&self) -> f64 {
        self.omega_f
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Same trap, different mode.
    pub fn with_mode(self, n: u32) -> Self {
        Self { n, ..self }
    }

    /// `gamma = sqrt(omega0 / omega_f)`, the final-to-initial width ratio.
    pub fn gamma(&self) -> f64 {
        (self.omega0 / self.omega_f).sqrt()
    }

    /// Final frequency in units of `omega0`.
    pub fn omega_f_rel(&self) -> f64 {
        self.omega_f / self.omega0
    }

    /// `2n + 1`, the mode prefactor appearing in every energy.
    pub fn mode_factor(&self) -> f64 {
        2.0 * f64::from(self.n) + 1.0
    }

    pub fn to_dimensionless(&self, t: f64) -> f64 {
        self.omega0 * t
    }

    pub fn from_dimensionless(&self, tau: f64) -> f64 {
        tau / self.omega0
    }

    /// Frequency (rad/s) to units of `omega0`.
    pub fn frequency_to_dimensionless(&self, omega: f64) -> f64 {
        omega / self.omega0
    }

    pub fn frequency_from_dimensionless(&self, w: f64) -> f64 {
        w * self.omega0
    }

    /// Energy (J) to units of `hbar * omega0`.
    pub fn energy_to_dimensionless(&self, e: f64) -> f64 {
        e / (self.hbar * self.omega0)
    }

    pub fn energy_from_dimensionless(&self, e: f64) -> f64 {
        e * self.hbar * self.omega0
    }

    /// The dimensionless image of this trap, keeping `n`.
    pub fn reduced(&self) -> Self {
        Self { omega0: 1.0, omega_f: self.omega_f_rel(), n: self.n, hbar: 1.0 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fig_trap_time_conversion() {
        let spec = TrapSpec::from_hz(2500.0, 25.0, 0).unwrap();
        let tau = spec.to_dimensionless(1e-3);
        assert!((tau - 5.0 * PI).abs() < 1e-12);
        assert_eq!(spec.to_dimensionless(0.0), 0.0);
        assert!((spec.gamma() - 10.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_compression_and_bad_values() {
        assert!(TrapSpec::new(1.0, 2.0, 0, 1.0).is_err());
        assert!(TrapSpec::new(0.0, 0.0, 0, 1.0).is_err());
        assert!(TrapSpec::new(1.0, f64::NAN, 0, 1.0).is_err());
        assert!(TrapSpec::dimensionless(0.5, 0).is_err());
    }

    #[test]
    fn dimensionless_gamma_is_exact() {
        let spec = TrapSpec::dimensionless(10.0, 2).unwrap();
        assert_eq!(spec.gamma(), 10.0);
        assert_eq!(spec.omega_f_rel(), 0.01);
        assert_eq!(spec.mode_factor(), 5.0);
    }

    proptest! {
        #[test]
        fn conversions_round_trip(f0 in 1.0f64..1e6, ratio in 1.0f64..1e4, x in -1e3f64..1e3) {
            let spec = TrapSpec::from_hz(f0, f0 / ratio, 0).unwrap();
            let t = spec.from_dimensionless(spec.to_dimensionless(x));
            prop_assert!((t - x).abs() <= 1e-14 * x.abs().max(1e-300));
            let e = spec.energy_to_dimensionless(spec.energy_from_dimensionless(x));
            prop_assert!((e - x).abs() <= 1e-14 * x.abs().max(1e-300));
            let w = spec.frequency_to_dimensionless(spec.frequency_from_dimensionless(x));
            prop_assert!((w - x).abs() <= 1e-14 * x.abs().max(1e-300));
        }
    }
}
