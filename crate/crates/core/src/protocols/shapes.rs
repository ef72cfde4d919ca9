//! Building blocks shared by the closed-form laws.

use crate::curve::Kinematics;

/// Polynomial in `s = t / t_f`, stored lowest order first.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    pub coeffs: Vec<f64>,
}

impl Poly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn derivative(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().enumerate().skip(1).map(|(k, c)| k as f64 * c).collect() }
    }

    pub fn eval(&self, s: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * s + c)
    }

    /// Value and first three `s`-derivatives.
    pub fn jet(&self, s: f64) -> [f64; 4] {
        // Horner for the Taylor coefficients p_j = P^(j)(s) / j!
        let mut p = [0.0; 4];
        for &c in self.coeffs.iter().rev() {
            p[3] = p[3] * s + p[2];
            p[2] = p[2] * s + p[1];
            p[1] = p[1] * s + p[0];
            p[0] = p[0] * s + c;
        }
        [p[0], p[1], 2.0 * p[2], 6.0 * p[3]]
    }
}

/// Convert an `s`-jet into time derivatives for duration `t_f`.
pub fn time_kinematics(jet: [f64; 4], t_f: f64) -> Kinematics {
    Kinematics { b: jet[0], bd: jet[1] / t_f, bdd: jet[2] / (t_f * t_f), bddd: jet[3] / (t_f * t_f * t_f) }
}

/// Kinematics of `b = sqrt(F)` from `F` and its first three time derivatives.
pub fn sqrt_kinematics(f: [f64; 4]) -> Kinematics {
    let b = f[0].sqrt();
    let bd = f[1] / (2.0 * b);
    let bdd = (f[2] - 2.0 * bd * bd) / (2.0 * b);
    let bddd = (f[3] - 6.0 * bd * bdd) / (2.0 * b);
    Kinematics { b, bd, bdd, bddd }
}

/// Cubic Hermite interpolant on `[s0, s1]` through `(s0, p0, m0)` and
/// `(s1, p1, m1)` (values and `s`-slopes).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteCubic {
    pub s0: f64,
    pub s1: f64,
    pub p0: f64,
    pub m0: f64,
    pub p1: f64,
    pub m1: f64,
}

impl HermiteCubic {
    /// Value and first three `s`-derivatives.
    pub fn jet(&self, s: f64) -> [f64; 4] {
        let w = self.s1 - self.s0;
        let x = (s - self.s0) / w;
        let (x2, x3) = (x * x, x * x * x);
        let (a, b, c, d) = (self.p0, w * self.m0, self.p1, w * self.m1);
        let val = (2.0 * x3 - 3.0 * x2 + 1.0) * a
            + (x3 - 2.0 * x2 + x) * b
            + (-2.0 * x3 + 3.0 * x2) * c
            + (x3 - x2) * d;
        let d1 = (6.0 * x2 - 6.0 * x) * a
            + (3.0 * x2 - 4.0 * x + 1.0) * b
            + (-6.0 * x2 + 6.0 * x) * c
            + (3.0 * x2 - 2.0 * x) * d;
        let d2 = (12.0 * x - 6.0) * a + (6.0 * x - 4.0) * b + (-12.0 * x + 6.0) * c + (6.0 * x - 2.0) * d;
        let d3 = 12.0 * a + 6.0 * b - 12.0 * c + 6.0 * d;
        [val, d1 / w, d2 / (w * w), d3 / (w * w * w)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_jet() {
        let p = Poly::new(vec![1.0, 2.0, 0.0, 3.0]);
        assert_eq!(p.jet(2.0), [1.0 + 4.0 + 24.0, 2.0 + 36.0, 36.0, 18.0]);
    }

    #[test]
    fn jet_matches_repeated_derivatives() {
        let p = Poly::new(vec![1.0, -2.0, 0.5, 3.0, -1.5, 0.25, 7.0]);
        let (d1, s) = (p.derivative(), 0.37);
        let (d2, d3) = (d1.derivative(), d1.derivative().derivative());
        let want = [p.eval(s), d1.eval(s), d2.eval(s), d3.eval(s)];
        for (a, b) in p.jet(s).iter().zip(want) {
            assert!((a - b).abs() < 1e-13 * b.abs().max(1.0));
        }
    }

    #[test]
    fn hermite_hits_endpoint_data() {
        let h = HermiteCubic { s0: 0.2, s1: 0.7, p0: 1.0, m0: -2.0, p1: 3.0, m1: 0.5 };
        let a = h.jet(0.2);
        let b = h.jet(0.7);
        assert!((a[0] - 1.0).abs() < 1e-14 && (a[1] + 2.0).abs() < 1e-13);
        assert!((b[0] - 3.0).abs() < 1e-14 && (b[1] - 0.5).abs() < 1e-13);
    }

    #[test]
    fn sqrt_kinematics_of_square() {
        // F = (1 + t)^2 at t = 0.5
        let t: f64 = 0.5;
        let k = sqrt_kinematics([(1.0 + t).powi(2), 2.0 * (1.0 + t), 2.0, 0.0]);
        assert!((k.b - 1.5).abs() < 1e-15);
        assert!((k.bd - 1.0).abs() < 1e-15);
        assert!(k.bdd.abs() < 1e-15 && k.bddd.abs() < 1e-15);
    }
}
