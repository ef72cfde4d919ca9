//! Two-step bang-bang schedules: `omega^2 = -omega1^2` for `t1`, then
//! `omega^2 = omega2^2` for `t2`.
//!
//! Both segments are closed-form Ermakov solutions. The first starts at rest
//! from `b = 1`, the second ends at rest at `b = gamma`; the switching times
//! follow from matching `b` and `b'` at `t1`.

use std::f64::consts::FRAC_PI_2;

use crate::curve::{Kinematics, ScalingLaw};
use crate::error::{invalid, Error, Result};
use crate::numerics::roots::bisect;

/// Below this `omega1` the free-expansion limit is evaluated by series.
pub const SMALL_OMEGA1: f64 = 1e-6;

const SNAP: f64 = 64.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BangBangLaw {
    pub gamma: f64,
    pub omega1: f64,
    pub omega2: f64,
    pub t1: f64,
    pub t2: f64,
}

/// Switching durations `(t1, t2)` for the given frequencies.
pub fn switching_times(gamma: f64, omega1: f64, omega2: f64) -> Result<(f64, f64)> {
    if !(gamma > 1.0) {
        return Err(invalid("gamma", format!("bang-bang needs gamma > 1, got {gamma}")));
    }
    if !(omega1 >= 0.0 && omega1.is_finite()) {
        return Err(invalid("omega1", format!("must be >= 0, got {omega1}")));
    }
    if !(omega2 > 0.0 && omega2.is_finite()) {
        return Err(invalid("omega2", format!("must be > 0, got {omega2}")));
    }
    let g2 = gamma * gamma;
    let (w1s, w2s) = (omega1 * omega1, omega2 * omega2);

    // t1 >= 0 needs gamma^2 omega2^2 >= 1, i.e. omega2 >= sqrt(omega0 omega_f)
    let mut excess = g2 * w2s - 1.0;
    if excess.abs() < SNAP {
        // omega2 = sqrt(omega0 omega_f) up to round-off: the first segment vanishes
        excess = 0.0;
    } else if excess < 0.0 {
        return Err(Error::Domain(format!(
            "omega2 = {omega2} is below sqrt(omega0 omega_f) = {}: t1 would be imaginary",
            1.0 / gamma
        )));
    }
    let x = (g2 - 1.0) * excess / (g2 * (w2s + w1s) * (1.0 + w1s));
    let t1 = if omega1 < SMALL_OMEGA1 {
        // asinh(w sqrt(x)) / w = sqrt(x) (1 - w^2 x / 6 + ...)
        x.sqrt() * (1.0 - w1s * x / 6.0)
    } else {
        (omega1 * x.sqrt()).asinh() / omega1
    };

    let denom = (w2s + w1s) * (g2 * g2 * w2s - 1.0);
    if !(denom > 0.0) {
        return Err(Error::Domain(format!(
            "arcsin argument undefined: (omega2^2 + omega1^2)(gamma^4 omega2^2 - 1) = {denom}"
        )));
    }
    let mut y = w2s * (g2 - 1.0) * (g2 * w1s + 1.0) / denom;
    if y > 1.0 {
        if y < 1.0 + SNAP {
            y = 1.0;
        } else {
            return Err(Error::Domain(format!("arcsin argument {y} exceeds 1")));
        }
    }
    let t2 = y.sqrt().asin() / omega2;
    Ok((t1, t2))
}

impl BangBangLaw {
    pub fn new(gamma: f64, omega1: f64, omega2: f64) -> Result<Self> {
        let (t1, t2) = switching_times(gamma, omega1, omega2)?;
        Ok(Self { gamma, omega1, omega2, t1, t2 })
    }

    /// Free first segment (`omega1 = 0`), `omega2 = beta omega0`.
    pub fn free_expansion(gamma: f64, beta: f64) -> Result<Self> {
        if !(beta > 0.0) {
            return Err(invalid("beta", format!("must be positive, got {beta}")));
        }
        if !(beta * beta * gamma.powi(4) > 1.0) {
            return Err(invalid("beta", "need beta^2 gamma^4 > 1"));
        }
        Self::new(gamma, 0.0, beta)
    }

    /// The schedule with `omega2 = sqrt(omega0 omega_f)`: `t1 = 0` and the
    /// longest possible duration `pi / (2 sqrt(omega0 omega_f))`.
    pub fn longest(gamma: f64, omega1: f64) -> Result<Self> {
        Self::new(gamma, omega1, 1.0 / gamma)
    }

    /// `omega1 = omega2` chosen so that the total duration is `t_f`.
    pub fn symmetric_for_duration(gamma: f64, t_f: f64) -> Result<Self> {
        let t_max = max_duration(gamma);
        if !(t_f > 0.0) {
            return Err(invalid("t_f", format!("must be positive, got {t_f}")));
        }
        if t_f > t_max * (1.0 + 1e-12) {
            return Err(Error::Domain(format!("t_f = {t_f} exceeds the bang-bang maximum {t_max}")));
        }
        let floor = 1.0 / gamma;
        if t_f >= t_max {
            return Self::new(gamma, floor, floor);
        }
        let duration =
            |w: f64| -> f64 { switching_times(gamma, w, w).map(|(a, b)| a + b).unwrap_or(f64::NAN) };
        let lo = floor.ln();
        let mut hi = lo + 1.0;
        while duration(hi.exp()) > t_f {
            hi += 1.0;
            if hi > lo + 200.0 {
                return Err(Error::Domain(format!("no bang-bang schedule reaches t_f = {t_f}")));
            }
        }
        let x = bisect(|x| duration(x.exp()) - t_f, lo, hi, 1e-15)?;
        let w = x.exp();
        Self::new(gamma, w, w)
    }

    /// Free-expansion schedule (`omega1 = 0`) whose duration is `t_f`.
    /// Durations lie in `(sqrt(gamma^2 - 1), gamma pi / 2]`.
    pub fn free_expansion_for_duration(gamma: f64, t_f: f64) -> Result<Self> {
        let (t_min, t_max) = free_expansion_range(gamma);
        if !(t_f > t_min && t_f <= t_max * (1.0 + 1e-12)) {
            return Err(Error::Domain(format!(
                "t_f = {t_f} outside the free-expansion bang-bang range ({t_min}, {t_max}]"
            )));
        }
        if t_f >= t_max {
            return Self::free_expansion(gamma, 1.0 / gamma);
        }
        let duration =
            |beta: f64| -> f64 { switching_times(gamma, 0.0, beta).map(|(a, b)| a + b).unwrap_or(f64::NAN) };
        let lo = (1.0 / gamma).ln();
        let mut hi = lo + 1.0;
        while duration(hi.exp()) > t_f {
            hi += 1.0;
            if hi > lo + 200.0 {
                return Err(Error::Domain(format!("no free-expansion schedule reaches t_f = {t_f}")));
            }
        }
        let x = bisect(|x| duration(x.exp()) - t_f, lo, hi, 1e-15)?;
        Self::free_expansion(gamma, x.exp())
    }

    pub fn t_f(&self) -> f64 {
        self.t1 + self.t2
    }

    fn first(&self, t: f64) -> Kinematics {
        let w = self.omega1;
        let c = 1.0 + w * w;
        // S = sinh^2(w t) / w^2 and its derivatives
        let s = if w < SMALL_OMEGA1 {
            [
                t * t + w * w * t.powi(4) / 3.0,
                2.0 * t + 4.0 * w * w * t.powi(3) / 3.0,
                2.0 * (2.0 * w * t).cosh(),
                4.0 * w * (2.0 * w * t).sinh(),
            ]
        } else {
            let sh = (w * t).sinh();
            [
                sh * sh / (w * w),
                (2.0 * w * t).sinh() / w,
                2.0 * (2.0 * w * t).cosh(),
                4.0 * w * (2.0 * w * t).sinh(),
            ]
        };
        super::shapes::sqrt_kinematics([1.0 + c * s[0], c * s[1], c * s[2], c * s[3]])
    }

    fn second(&self, t: f64) -> Kinematics {
        let g2 = self.gamma * self.gamma;
        let w = self.omega2;
        let q = (1.0 - g2 * g2 * w * w) / (g2 * w * w);
        let u = self.t_f() - t;
        let sn = (w * u).sin();
        let (s2, c2) = (2.0 * w * u).sin_cos();
        super::shapes::sqrt_kinematics([
            g2 + q * sn * sn,
            -q * w * s2,
            2.0 * q * w * w * c2,
            4.0 * q * w.powi(3) * s2,
        ])
    }

    /// `omega^2` on each piece, in order.
    pub fn piece_omega2(&self) -> Vec<f64> {
        let mut v = Vec::new();
        if self.t1 > 0.0 {
            v.push(-self.omega1 * self.omega1);
        }
        if self.t2 > 0.0 {
            v.push(self.omega2 * self.omega2);
        }
        v
    }
}

impl ScalingLaw for BangBangLaw {
    fn duration(&self) -> f64 {
        self.t_f()
    }

    fn pieces(&self) -> Vec<(f64, f64)> {
        let mut p = Vec::new();
        if self.t1 > 0.0 {
            p.push((0.0, self.t1));
        }
        if self.t2 > 0.0 {
            p.push((self.t1, self.t_f()));
        }
        p
    }

    fn eval(&self, piece: usize, t: f64) -> Kinematics {
        if piece == 0 && self.t1 > 0.0 {
            self.first(t)
        } else {
            self.second(t)
        }
    }

    fn tag(&self) -> &'static str {
        "bang-bang"
    }
}

/// `pi / (2 sqrt(omega0 omega_f))` in units of `1/omega0`, i.e. `gamma pi / 2`.
pub fn max_duration(gamma: f64) -> f64 {
    gamma * FRAC_PI_2
}

/// Open-closed duration range `(sqrt(gamma^2 - 1), gamma pi / 2]` reachable
/// with a free first segment.
pub fn free_expansion_range(gamma: f64) -> (f64, f64) {
    ((gamma * gamma - 1.0).sqrt(), max_duration(gamma))
}
