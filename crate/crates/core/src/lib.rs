//! Shortcut-to-adiabaticity expansion protocols for a harmonic trap.
//!
//! Protocols are designed by choosing the scaling function `b(t)` and
//! inverting the Ermakov equation for the trap frequency. The crate evaluates
//! their instantaneous and time-averaged energies, the bounds those averages
//! obey, and the power delivered to the trap. Internally everything is
//! dimensionless: time in `1/omega0`, frequency in `omega0`, energy in
//! `hbar omega0`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod curve;
pub mod energies;
pub mod ermakov;
pub mod error;
pub mod grid;
pub mod numerics;
pub mod optimize;
pub mod protocols;
pub mod units;

pub use curve::{FrequencyProfile, Impulse, Kinematics, Omega2Law, ScalingCurve, ScalingLaw};
pub use energies::{BoundReport, EnergyTrace};
pub use error::{Error, Result};
pub use grid::{TimeGrid, DEFAULT_NODES};
pub use protocols::{Family, Protocol, ProtocolParams};
pub use units::TrapSpec;
