//! Polynomial scaling functions satisfying all boundary conditions, including
//! `b''(0) = b''(t_f) = 0` so the frequency is continuous at both ends.

use crate::curve::{Kinematics, ScalingLaw};

use super::shapes::{time_kinematics, Poly};

#[derive(Debug, Clone)]
pub struct PolyLaw {
    pub poly: Poly,
    pub t_f: f64,
    tag: &'static str,
}

impl PolyLaw {
    /// `b(s) = 1 + (gamma - 1)(10 s^3 - 15 s^4 + 6 s^5)`.
    pub fn quintic(gamma: f64, t_f: f64) -> Self {
        let g = gamma - 1.0;
        Self { poly: Poly::new(vec![1.0, 0.0, 0.0, 10.0 * g, -15.0 * g, 6.0 * g]), t_f, tag: "quintic" }
    }

    /// Seventh-order family with free `s^3` and `s^4` coefficients; the top
    /// three coefficients are fixed by the conditions at `s = 1`.
    pub fn septic(gamma: f64, t_f: f64, c3: f64, c4: f64) -> Self {
        let c5 = -(21.0 + 6.0 * c3 + 3.0 * c4 - 21.0 * gamma);
        let c6 = 35.0 + 8.0 * c3 + 3.0 * c4 - 35.0 * gamma;
        let c7 = -(15.0 + 3.0 * c3 + c4 - 15.0 * gamma);
        Self { poly: Poly::new(vec![1.0, 0.0, 0.0, c3, c4, c5, c6, c7]), t_f, tag: "septic" }
    }
}

/// The septic coefficients `(c3, c4)` that reproduce the quintic.
pub fn septic_equivalent_of_quintic(gamma: f64) -> (f64, f64) {
    (10.0 * (gamma - 1.0), -15.0 * (gamma - 1.0))
}

impl ScalingLaw for PolyLaw {
    fn duration(&self) -> f64 {
        self.t_f
    }

    fn eval(&self, _piece: usize, t: f64) -> Kinematics {
        time_kinematics(self.poly.jet(t / self.t_f), self.t_f)
    }

    fn tag(&self) -> &'static str {
        self.tag
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_ends(law: &PolyLaw, gamma: f64) {
        let a = law.at(0.0);
        let b = law.at(law.t_f);
        assert!((a.b - 1.0).abs() < 1e-12);
        assert!((b.b - gamma).abs() < 1e-12 * gamma.max(1.0) * 100.0);
        for v in [a.bd, a.bdd, b.bd, b.bdd] {
            assert!(v.abs() < 1e-9, "{v}");
        }
    }

    #[test]
    fn quintic_boundaries_and_midpoint() {
        let law = PolyLaw::quintic(10.0, 3.0);
        check_ends(&law, 10.0);
        assert!((law.at(1.5).b - 5.5).abs() < 1e-12);
    }

    #[test]
    fn quintic_without_expansion_is_flat() {
        let law = PolyLaw::quintic(1.0, 2.0);
        for i in 0..=20 {
            assert_eq!(law.at(0.1 * i as f64).b, 1.0);
        }
    }

    #[test]
    fn septic_boundaries_for_any_coefficients() {
        for (c3, c4) in [(0.0, 0.0), (78.5088, -459.7638), (-3.0, 11.0)] {
            check_ends(&PolyLaw::septic(10.0, 1.7, c3, c4), 10.0);
        }
    }

    #[test]
    fn septic_contains_quintic() {
        let (c3, c4) = septic_equivalent_of_quintic(10.0);
        let s = PolyLaw::septic(10.0, 2.0, c3, c4);
        let q = PolyLaw::quintic(10.0, 2.0);
        for i in 0..=10 {
            let t = 0.2 * i as f64;
            assert!((s.at(t).b - q.at(t).b).abs() < 1e-12);
        }
    }
}
