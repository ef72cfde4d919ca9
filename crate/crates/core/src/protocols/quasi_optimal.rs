//! The scaling function minimizing the time-averaged energy for fixed `t_f`
//! when only `b(0) = 1`, `b(t_f) = gamma` are imposed.
//!
//! `b^2 = (B^2 - t_f^2) s^2 + 2 B s + 1` with `B = sqrt(t_f^2 + gamma^2) - 1`.
//! The derivative conditions are not met; the Dirac-impulse protocol supplies
//! them with two kicks of `omega^2` at the ends.

use crate::curve::{Kinematics, ScalingLaw};

use super::shapes::sqrt_kinematics;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuasiOptimalLaw {
    pub gamma: f64,
    pub t_f: f64,
}

impl QuasiOptimalLaw {
    pub fn new(gamma: f64, t_f: f64) -> Self {
        Self { gamma, t_f }
    }

    /// `B = sqrt(t_f^2 + gamma^2) - 1` (positive root).
    pub fn big_b(&self) -> f64 {
        (self.t_f * self.t_f + self.gamma * self.gamma).sqrt() - 1.0
    }

    /// Coefficient of `s^2` in `b^2`, i.e. `B^2 - t_f^2`.
    pub fn curvature(&self) -> f64 {
        let b = self.big_b();
        // (B+1)^2 = t_f^2 + gamma^2, so B^2 - t_f^2 = gamma^2 - 1 - 2B without cancellation
        self.gamma * self.gamma - 1.0 - 2.0 * b
    }

    /// `b'(0+) = B / t_f`.
    pub fn start_velocity(&self) -> f64 {
        self.big_b() / self.t_f
    }

    /// `b'(t_f-) = (B^2 + B - t_f^2) / (gamma t_f)`.
    pub fn end_velocity(&self) -> f64 {
        (self.curvature() + self.big_b()) / (self.gamma * self.t_f)
    }

    /// Radicand `b^2` at `s`.
    pub fn radicand(&self, s: f64) -> f64 {
        (self.curvature() * s + 2.0 * self.big_b()) * s + 1.0
    }
}

impl ScalingLaw for QuasiOptimalLaw {
    fn duration(&self) -> f64 {
        self.t_f
    }

    fn eval(&self, _piece: usize, t: f64) -> Kinematics {
        let tf = self.t_f;
        let s = t / tf;
        let a = self.curvature();
        let bb = self.big_b();
        sqrt_kinematics([self.radicand(s), 2.0 * (a * s + bb) / tf, 2.0 * a / (tf * tf), 0.0])
    }

    fn tag(&self) -> &'static str {
        "quasi-optimal"
    }
}
