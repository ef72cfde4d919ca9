//! Linear (bottom-tracking) scaling function, alone and with cubic caps.

use crate::curve::{Kinematics, ScalingLaw};
use crate::error::{invalid, Result};

use super::shapes::{time_kinematics, HermiteCubic};

/// `b = 1 + (gamma - 1) t / t_f`. Paired with `omega = 1/b^2` it keeps the
/// classical analogue at its potential minimum; `b'` is nonzero at both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearLaw {
    pub gamma: f64,
    pub t_f: f64,
}

impl ScalingLaw for LinearLaw {
    fn duration(&self) -> f64 {
        self.t_f
    }

    fn eval(&self, _piece: usize, t: f64) -> Kinematics {
        let slope = (self.gamma - 1.0) / self.t_f;
        Kinematics { b: 1.0 + slope * t, bd: slope, bdd: 0.0, bddd: 0.0 }
    }

    fn tag(&self) -> &'static str {
        "linear"
    }
}

/// Launch cap on `[0, tau_l]`, linear middle, stopping cap on
/// `[t_f - tau_s, t_f]`. Each cap is the cubic matching `b` and `b'` at both of
/// its ends, so `b` is C1 while `b''` (and `omega`) jumps at the joints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HybridLaw {
    pub gamma: f64,
    pub t_f: f64,
    pub tau_l: f64,
    pub tau_s: f64,
    launch: HermiteCubic,
    stop: HermiteCubic,
}

impl HybridLaw {
    pub fn new(gamma: f64, t_f: f64, tau_l: f64, tau_s: f64) -> Result<Self> {
        if !(t_f > 0.0 && t_f.is_finite()) {
            return Err(invalid("t_f", format!("must be positive, got {t_f}")));
        }
        if !(tau_l > 0.0) {
            return Err(invalid("tau_l", format!("cap duration must be positive, got {tau_l}")));
        }
        if !(tau_s > 0.0) {
            return Err(invalid("tau_s", format!("cap duration must be positive, got {tau_s}")));
        }
        if !(tau_l + tau_s < t_f) {
            return Err(invalid(
                "tau_l + tau_s",
                format!("caps must leave a linear middle: {tau_l} + {tau_s} >= {t_f}"),
            ));
        }
        let slope = gamma - 1.0;
        let sl = tau_l / t_f;
        let ss = 1.0 - tau_s / t_f;
        let line = |s: f64| 1.0 + slope * s;
        let launch = HermiteCubic { s0: 0.0, s1: sl, p0: 1.0, m0: 0.0, p1: line(sl), m1: slope };
        let stop = HermiteCubic { s0: ss, s1: 1.0, p0: line(ss), m0: slope, p1: gamma, m1: 0.0 };
        Ok(Self { gamma, t_f, tau_l, tau_s, launch, stop })
    }
}

impl ScalingLaw for HybridLaw {
    fn duration(&self) -> f64 {
        self.t_f
    }

    fn pieces(&self) -> Vec<(f64, f64)> {
        let a = self.tau_l;
        let b = self.t_f - self.tau_s;
        vec![(0.0, a), (a, b), (b, self.t_f)]
    }

    fn eval(&self, piece: usize, t: f64) -> Kinematics {
        let s = t / self.t_f;
        let jet = match piece {
            0 => self.launch.jet(s),
            1 => [1.0 + (self.gamma - 1.0) * s, self.gamma - 1.0, 0.0, 0.0],
            _ => self.stop.jet(s),
        };
        time_kinematics(jet, self.t_f)
    }

    fn tag(&self) -> &'static str {
        "hybrid"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn joints_are_c1() {
        let law = HybridLaw::new(10.0, 5.0, 0.5, 0.8).unwrap();
        for (left, right, t) in [(0, 1, 0.5), (1, 2, 4.2)] {
            let a = law.eval(left, t);
            let b = law.eval(right, t);
            assert!((a.b - b.b).abs() < 1e-12);
            assert!((a.bd - b.bd).abs() < 1e-12);
        }
    }

    #[test]
    fn cap_boundaries() {
        let law = HybridLaw::new(10.0, 5.0, 0.5, 0.8).unwrap();
        let a = law.eval(0, 0.0);
        let b = law.eval(2, 5.0);
        assert!((a.b - 1.0).abs() < 1e-15 && a.bd.abs() < 1e-15);
        assert!((b.b - 10.0).abs() < 1e-12 && b.bd.abs() < 1e-12);
    }

    #[test]
    fn degenerate_caps_rejected() {
        assert!(HybridLaw::new(10.0, 1.0, 0.0, 0.1).is_err());
        assert!(HybridLaw::new(10.0, 1.0, 0.1, 0.0).is_err());
        assert!(HybridLaw::new(10.0, 1.0, 0.6, 0.4).is_err());
    }

    #[test]
    fn small_caps_approach_linear() {
        let tf = 3.0;
        let law = HybridLaw::new(10.0, tf, 1e-3 * tf, 1e-3 * tf).unwrap();
        let line = LinearLaw { gamma: 10.0, t_f: tf };
        let worst = (1..100)
            .map(|i| tf * i as f64 / 100.0)
            .map(|t| (law.at(t).b - line.at(t).b).abs())
            .fold(0.0, f64::max);
        assert!(worst < 1e-12);
        // inside the caps the deviation is bounded by the cap size
        let cap_dev = (law.at(0.5e-3 * tf).b - line.at(0.5e-3 * tf).b).abs();
        assert!(cap_dev < 9.0 * 1e-3);
    }

    #[test]
    fn width_stays_positive() {
        let law = HybridLaw::new(10.0, 0.2, 0.09, 0.1).unwrap();
        for k in 0..3 {
            let (a, b) = law.pieces()[k];
            for i in 0..=100 {
                let t = a + (b - a) * i as f64 / 100.0;
                assert!(law.eval(k, t).b > 0.0);
            }
        }
    }
}
