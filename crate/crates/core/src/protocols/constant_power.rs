//! Shooting the constant-power condition forward from rest.
//!
//! Demanding `P = C` for all `t` with `omega^2 = 1/b^4 - b''/b` gives the
//! third-order equation
//! `b b''' - b'' b' + 4 b' / b^3 = 2 (1 - omega_f) / t_f`
//! (dimensionless, `omega_f` relative to `omega0`). Starting from
//! `b = 1, b' = b'' = 0` fixes the solution, so the conditions at `t_f` are
//! generally missed; the mismatch is reported rather than corrected.

use crate::error::{invalid, Error, Result};
use crate::grid::TimeGrid;
use crate::numerics::ode::solve_refined;

/// Widths below this are treated as a collapse.
pub const COLLAPSE_WIDTH: f64 = 1e-9;

/// RK4 refinement target on `(b, b', b'')`.
pub const SHOOT_TOL: f64 = 1e-10;

const MAX_SHOOT_NODES: usize = 1 << 21;

/// Terminal mismatch of a constant-power trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootReport {
    /// `b(t_f) - gamma`
    pub b_error: f64,
    /// `b'(t_f)`
    pub bdot_final: f64,
    /// `b''(t_f)`
    pub bddot_final: f64,
    /// Max change between the last two RK4 refinements.
    pub refinement_change: f64,
    pub converged: bool,
}

impl ShootReport {
    pub fn max_mismatch(&self) -> f64 {
        self.b_error.abs().max(self.bdot_final.abs()).max(self.bddot_final.abs())
    }
}

/// Sampled constant-power trajectory.
#[derive(Debug, Clone)]
pub struct ShotTrajectory {
    pub grid: TimeGrid,
    pub b: Vec<f64>,
    pub bdot: Vec<f64>,
    pub bddot: Vec<f64>,
    pub bdddot: Vec<f64>,
    pub report: ShootReport,
}

/// Right-hand side constant `2 (1 - omega_f) / t_f` of the third-order equation.
pub fn source(gamma: f64, t_f: f64) -> f64 {
    2.0 * (1.0 - gamma.powi(-2)) / t_f
}

pub fn third_derivative(source: f64, b: f64, bd: f64, bdd: f64) -> f64 {
    (source + bdd * bd - 4.0 * bd / b.powi(3)) / b
}

/// Integrate on a uniform grid of `nodes` points, refining internally until
/// the trajectory is converged to [`SHOOT_TOL`].
pub fn shoot(gamma: f64, t_f: f64, nodes: usize) -> Result<ShotTrajectory> {
    if !(t_f > 0.0 && t_f.is_finite()) {
        return Err(invalid("t_f", format!("must be positive, got {t_f}")));
    }
    let grid = TimeGrid::uniform(t_f, nodes)?;
    let n = grid.len();
    let c = source(gamma, t_f);
    let rhs = |_t: f64, y: &[f64; 3]| {
        if y[0] <= COLLAPSE_WIDTH {
            return [f64::NAN; 3];
        }
        [y[1], y[2], third_derivative(c, y[0], y[1], y[2])]
    };
    let refined = solve_refined(rhs, [1.0, 0.0, 0.0], 0.0, t_f, n, SHOOT_TOL, MAX_SHOOT_NODES).map_err(
        |e| match e {
            Error::NonFinite { t } => Error::Collapse { t, b: COLLAPSE_WIDTH },
            other => other,
        },
    )?;
    let stride = (refined.nodes.len() - 1) / (n - 1);
    let states: Vec<[f64; 3]> = refined.states.iter().step_by(stride).copied().collect();
    if let Some((i, s)) = states.iter().enumerate().find(|(_, s)| s[0] <= COLLAPSE_WIDTH) {
        return Err(Error::Collapse { t: grid.nodes()[i], b: s[0] });
    }
    let b: Vec<f64> = states.iter().map(|s| s[0]).collect();
    let bdot: Vec<f64> = states.iter().map(|s| s[1]).collect();
    let bddot: Vec<f64> = states.iter().map(|s| s[2]).collect();
    let bdddot = states.iter().map(|s| third_derivative(c, s[0], s[1], s[2])).collect();
    let last = states[n - 1];
    let report = ShootReport {
        b_error: last[0] - gamma,
        bdot_final: last[1],
        bddot_final: last[2],
        refinement_change: refined.change,
        converged: refined.converged,
    };
    Ok(ShotTrajectory { grid, b, bdot, bddot, bdddot, report })
}
