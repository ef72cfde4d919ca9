//! Scaling functions `b(t)` and trap-frequency schedules `omega^2(t)`.
//!
//! All quantities are dimensionless (see [`crate::units`]).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grid::TimeGrid;

/// `b` and its first three time derivatives at one instant.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Kinematics {
    pub b: f64,
    pub bd: f64,
    pub bdd: f64,
    pub bddd: f64,
}

impl Kinematics {
    pub const REST: Self = Self { b: 1.0, bd: 0.0, bdd: 0.0, bddd: 0.0 };

    /// `omega^2 = 1/b^4 - b''/b`, the frequency that makes `b` an Ermakov solution.
    pub fn inverse_omega2(&self) -> f64 {
        1.0 / self.b.powi(4) - self.bdd / self.b
    }

    /// Time derivative of [`Self::inverse_omega2`].
    pub fn inverse_omega2_rate(&self) -> f64 {
        let b = self.b;
        -4.0 * self.bd / b.powi(5) - self.bddd / b + self.bdd * self.bd / (b * b)
    }
}

/// A closed-form scaling function, possibly piecewise.
///
/// Pieces tile `[0, duration]` and are never degenerate. `eval(piece, t)` must
/// be valid on the closed piece interval so that one-sided limits at joints are
/// available.
pub trait ScalingLaw: Send + Sync + fmt::Debug {
    fn duration(&self) -> f64;

    /// `(start, end)` of each piece, in order.
    fn pieces(&self) -> Vec<(f64, f64)> {
        vec![(0.0, self.duration())]
    }

    fn eval(&self, piece: usize, t: f64) -> Kinematics;

    fn tag(&self) -> &'static str;

    /// Piece containing `t` (the later piece at a joint).
    fn piece_at(&self, t: f64) -> usize {
        let pieces = self.pieces();
        pieces.iter().rposition(|&(a, _)| t >= a).unwrap_or(0)
    }

    fn at(&self, t: f64) -> Kinematics {
        self.eval(self.piece_at(t), t)
    }
}

pub(crate) fn breaks_of(law: &dyn ScalingLaw) -> Vec<f64> {
    let pieces = law.pieces();
    let mut breaks = vec![0.0];
    breaks.extend(pieces.iter().map(|&(_, b)| b));
    breaks
}

/// Samples of `b`, `b'`, `b''` (and `b'''` when known) on a grid.
#[derive(Debug, Clone)]
pub struct ScalingCurve {
    pub grid: TimeGrid,
    pub b: Vec<f64>,
    pub bdot: Vec<f64>,
    pub bddot: Vec<f64>,
    pub bdddot: Option<Vec<f64>>,
    /// `b'(0+)`; equals `bdot[0]`.
    pub b0_plus_dot: f64,
    /// `b'(t_f-)`; equals the last `bdot`.
    pub bf_minus_dot: f64,
    pub tag: String,
    /// True when `bdot`/`bddot` came from finite differences of `b`.
    pub finite_difference: bool,
    law: Option<Arc<dyn ScalingLaw>>,
}

impl ScalingCurve {
    /// Sample a closed-form law with analytic derivatives.
    pub fn from_law(law: Arc<dyn ScalingLaw>, nodes: usize) -> Result<Self> {
        let grid = TimeGrid::piecewise(&breaks_of(law.as_ref()), nodes)?;
        let n = grid.len();
        let (mut b, mut bdot, mut bddot, mut bdddot) =
            (Vec::with_capacity(n), Vec::with_capacity(n), Vec::with_capacity(n), Vec::with_capacity(n));
        for (k, i) in grid.iter_indexed() {
            let kin = law.eval(k, grid.nodes()[i]);
            b.push(kin.b);
            bdot.push(kin.bd);
            bddot.push(kin.bdd);
            bdddot.push(kin.bddd);
        }
        let tag = law.tag().to_string();
        Self::assemble(grid, b, bdot, bddot, Some(bdddot), tag, Some(law))
    }

    /// Curve from sampled `b` only; derivatives by central differences.
    pub fn from_samples(grid: TimeGrid, b: Vec<f64>, tag: impl Into<String>) -> Result<Self> {
        let bdot = grid.differentiate(&b)?;
        let bddot = grid.differentiate(&bdot)?;
        let mut curve = Self::assemble(grid, b, bdot, bddot, None, tag.into(), None)?;
        curve.finite_difference = true;
        Ok(curve)
    }

    /// Curve from sampled states whose derivatives are already known
    /// (e.g. an ODE trajectory).
    pub fn from_states(
        grid: TimeGrid,
        b: Vec<f64>,
        bdot: Vec<f64>,
        bddot: Vec<f64>,
        bdddot: Option<Vec<f64>>,
        tag: impl Into<String>,
    ) -> Result<Self> {
        Self::assemble(grid, b, bdot, bddot, bdddot, tag.into(), None)
    }

    fn assemble(
        grid: TimeGrid,
        b: Vec<f64>,
        bdot: Vec<f64>,
        bddot: Vec<f64>,
        bdddot: Option<Vec<f64>>,
        tag: String,
        law: Option<Arc<dyn ScalingLaw>>,
    ) -> Result<Self> {
        grid.check_len(b.len())?;
        grid.check_len(bdot.len())?;
        grid.check_len(bddot.len())?;
        if let Some(d) = &bdddot {
            grid.check_len(d.len())?;
        }
        if let Some((i, &v)) = b.iter().enumerate().find(|(_, &v)| !(v > 0.0)) {
            return Err(Error::NonPositiveWidth { t: grid.nodes()[i], b: v });
        }
        let b0_plus_dot = bdot[0];
        let bf_minus_dot = *bdot.last().unwrap();
        Ok(Self {
            grid,
            b,
            bdot,
            bddot,
            bdddot,
            b0_plus_dot,
            bf_minus_dot,
            tag,
            finite_difference: false,
            law,
        })
    }

    pub fn law(&self) -> Option<&Arc<dyn ScalingLaw>> {
        self.law.as_ref()
    }

    pub fn t_f(&self) -> f64 {
        self.grid.t_f()
    }

    pub fn b_initial(&self) -> f64 {
        self.b[0]
    }

    pub fn b_final(&self) -> f64 {
        *self.b.last().unwrap()
    }

    pub fn max_bdot(&self) -> f64 {
        self.bdot.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_abs_bddot(&self) -> f64 {
        self.bddot.iter().map(|v| v.abs()).fold(0.0, f64::max)
    }
}

/// How `omega^2` is obtained on one grid segment.
#[derive(Debug, Clone)]
pub enum Omega2Law {
    Constant(f64),
    /// `omega^2 = 1/b^4 - b''/b` from a closed-form law.
    InverseEngineered(Arc<dyn ScalingLaw>),
    /// `omega = 1/b^2`, the frequency that keeps the classical analogue at the
    /// bottom of its potential.
    BottomTracking(Arc<dyn ScalingLaw>),
    /// Linear interpolation of samples (nodes increasing), with the rate of
    /// change when it is known at the same nodes.
    Sampled {
        nodes: Vec<f64>,
        values: Vec<f64>,
        rates: Option<Vec<f64>>,
    },
}

impl Omega2Law {
    pub fn omega2(&self, piece: usize, t: f64) -> f64 {
        match self {
            Self::Constant(w2) => *w2,
            Self::InverseEngineered(law) => law.eval(piece, t).inverse_omega2(),
            Self::BottomTracking(law) => law.eval(piece, t).b.powi(-4),
            Self::Sampled { nodes, values, .. } => interpolate(nodes, values, t),
        }
    }

    /// Analytic `d(omega^2)/dt` where the law allows it.
    pub fn omega2_rate(&self, piece: usize, t: f64) -> Option<f64> {
        match self {
            Self::Constant(_) => Some(0.0),
            Self::InverseEngineered(law) => Some(law.eval(piece, t).inverse_omega2_rate()),
            Self::BottomTracking(law) => {
                let k = law.eval(piece, t);
                Some(-4.0 * k.bd / k.b.powi(5))
            }
            Self::Sampled { nodes, rates, .. } => rates.as_ref().map(|r| interpolate(nodes, r, t)),
        }
    }
}

fn interpolate(nodes: &[f64], values: &[f64], t: f64) -> f64 {
    let n = nodes.len();
    if t <= nodes[0] {
        return values[0];
    }
    if t >= nodes[n - 1] {
        return values[n - 1];
    }
    let j = nodes.partition_point(|&x| x <= t).clamp(1, n - 1);
    let (t0, t1) = (nodes[j - 1], nodes[j]);
    let w = (t - t0) / (t1 - t0);
    values[j - 1] * (1.0 - w) + values[j] * w
}

/// A Dirac term `strength * delta(t - time)` in `omega^2(t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Impulse {
    pub time: f64,
    pub strength: f64,
}

/// Piecewise `omega^2(t)` on a grid, plus Dirac impulses and the trap
/// frequencies before and after the protocol.
#[derive(Debug, Clone)]
pub struct FrequencyProfile {
    pub grid: TimeGrid,
    /// One law per grid segment.
    pub laws: Vec<Omega2Law>,
    /// `omega^2` at every node (one-sided limits at segment ends).
    pub omega2: Vec<f64>,
    pub impulses: Vec<Impulse>,
    /// `omega^2` for `t <= 0-` (the initial trap, 1 in reduced units).
    pub omega2_initial: f64,
    /// `omega^2` for `t >= t_f+`.
    pub omega2_final: f64,
}

impl FrequencyProfile {
    pub fn new(
        grid: TimeGrid,
        laws: Vec<Omega2Law>,
        impulses: Vec<Impulse>,
        omega2_initial: f64,
        omega2_final: f64,
    ) -> Result<Self> {
        if laws.len() != grid.segments().len() {
            return Err(Error::LengthMismatch { expected: grid.segments().len(), got: laws.len() });
        }
        let omega2 = grid.iter_indexed().map(|(k, i)| laws[k].omega2(k, grid.nodes()[i])).collect();
        let tol = 1e-12 * grid.t_f().max(1.0);
        let mut joints = vec![0.0, grid.t_f()];
        joints.extend(grid.breakpoints());
        for imp in &impulses {
            if !joints.iter().any(|&j| (j - imp.time).abs() <= tol) {
                return Err(Error::InvalidParameter {
                    name: "impulse",
                    reason: format!("impulse at t = {} is not on a segment boundary", imp.time),
                });
            }
        }
        Ok(Self { grid, laws, omega2, impulses, omega2_initial, omega2_final })
    }

    /// Law evaluation at an arbitrary time inside segment `seg`.
    pub fn omega2_at(&self, seg: usize, t: f64) -> f64 {
        self.laws[seg].omega2(seg, t)
    }

    pub fn has_imaginary(&self) -> bool {
        self.min_omega2() < 0.0
    }

    pub fn min_omega2(&self) -> f64 {
        self.omega2.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// `d(omega^2)/dt` per node: analytic where the law allows, otherwise
    /// central differences within the segment.
    pub fn omega2_rate(&self) -> Result<Vec<f64>> {
        let mut out = vec![0.0; self.grid.len()];
        let mut numeric = None;
        for (k, seg) in self.grid.segments().iter().enumerate() {
            for i in seg.range.clone() {
                out[i] = match self.laws[k].omega2_rate(k, self.grid.nodes()[i]) {
                    Some(v) => v,
                    None => {
                        if numeric.is_none() {
                            numeric = Some(self.grid.differentiate(&self.omega2)?);
                        }
                        numeric.as_ref().unwrap()[i]
                    }
                };
            }
        }
        Ok(out)
    }

    /// Sum of impulse strengths located at `t`.
    pub fn impulse_at(&self, t: f64) -> f64 {
        let tol = 1e-12 * self.grid.t_f().max(1.0);
        self.impulses.iter().filter(|i| (i.time - t).abs() <= tol).map(|i| i.strength).sum()
    }
}

/// `b'(0-)`: the velocity before any impulse at `t = 0`.
pub fn bdot_before_start(curve: &ScalingCurve, profile: &FrequencyProfile) -> f64 {
    // crossing an impulse D at b: b'(+) = b'(-) - D b
    curve.b0_plus_dot + profile.impulse_at(0.0) * curve.b_initial()
}

/// `b'(t_f+)`: the velocity after any impulse at `t = t_f`.
pub fn bdot_after_end(curve: &ScalingCurve, profile: &FrequencyProfile) -> f64 {
    curve.bf_minus_dot - profile.impulse_at(curve.t_f()) * curve.b_final()
}

/// Whether `b(0) = 1`, `b'(0-) = 0`, `b(t_f) = gamma`, `b'(t_f+) = 0` hold to `tol`.
pub fn meets_boundary_conditions(
    curve: &ScalingCurve,
    profile: &FrequencyProfile,
    gamma: f64,
    tol: f64,
) -> bool {
    (curve.b_initial() - 1.0).abs() <= tol
        && (curve.b_final() - gamma).abs() <= tol * gamma
        && bdot_before_start(curve, profile).abs() <= tol
        && bdot_after_end(curve, profile).abs() <= tol
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Debug)]
    struct Parabola;

    impl ScalingLaw for Parabola {
        fn duration(&self) -> f64 {
            2.0
        }
        fn eval(&self, _piece: usize, t: f64) -> Kinematics {
            Kinematics { b: 1.0 + t * t, bd: 2.0 * t, bdd: 2.0, bddd: 0.0 }
        }
        fn tag(&self) -> &'static str {
            "parabola"
        }
    }

    #[test]
    fn curve_from_law_records_one_sided_derivatives() {
        let c = ScalingCurve::from_law(Arc::new(Parabola), 101).unwrap();
        assert_eq!(c.b0_plus_dot, 0.0);
        assert_eq!(c.bf_minus_dot, 4.0);
        assert_eq!(c.b_final(), 5.0);
        assert_eq!(c.tag, "parabola");
    }

    #[test]
    fn non_positive_width_is_rejected() {
        let grid = TimeGrid::uniform(1.0, 5).unwrap();
        let err = ScalingCurve::from_samples(grid, vec![1.0, 0.5, 0.0, 0.5, 1.0], "x").unwrap_err();
        assert!(matches!(err, Error::NonPositiveWidth { t, .. } if t == 0.5));
    }

    #[test]
    fn sampled_derivatives_match_law() {
        let law = Arc::new(Parabola);
        let exact = ScalingCurve::from_law(law, 401).unwrap();
        let sampled = ScalingCurve::from_samples(exact.grid.clone(), exact.b.clone(), "sampled").unwrap();
        for (a, b) in exact.bddot.iter().zip(&sampled.bddot) {
            assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn inverse_omega2_rate_matches_finite_difference() {
        let at = |t: f64| Kinematics {
            b: 1.0 + t * t + t.powi(3),
            bd: 2.0 * t + 3.0 * t * t,
            bdd: 2.0 + 6.0 * t,
            bddd: 6.0,
        };
        let t = 0.7;
        let h = 1e-5;
        let fd = (at(t + h).inverse_omega2() - at(t - h).inverse_omega2()) / (2.0 * h);
        assert!((fd - at(t).inverse_omega2_rate()).abs() < 1e-8);
    }

    #[test]
    fn impulses_must_sit_on_joints() {
        let grid = TimeGrid::uniform(1.0, 11).unwrap();
        let bad = FrequencyProfile::new(
            grid.clone(),
            vec![Omega2Law::Constant(1.0)],
            vec![Impulse { time: 0.5, strength: 1.0 }],
            1.0,
            1.0,
        );
        assert!(bad.is_err());
        let ok = FrequencyProfile::new(
            grid,
            vec![Omega2Law::Constant(-0.5)],
            vec![Impulse { time: 1.0, strength: 1.0 }],
            1.0,
            1.0,
        )
        .unwrap();
        assert!(ok.has_imaginary());
        assert_eq!(ok.impulse_at(1.0), 1.0);
    }

    #[test]
    fn sampled_law_interpolates_linearly() {
        let law = Omega2Law::Sampled { nodes: vec![0.0, 1.0, 2.0], values: vec![0.0, 2.0, 0.0], rates: None };
        assert_eq!(law.omega2(0, 0.5), 1.0);
        assert_eq!(law.omega2(0, 1.5), 1.0);
        assert_eq!(law.omega2(0, 3.0), 0.0);
        assert!(law.omega2_rate(0, 0.5).is_none());
    }
}
