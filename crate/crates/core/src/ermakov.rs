//! The Ermakov equation `b'' + omega^2 b = 1/b^3` (dimensionless) in both
//! directions, and the classical-particle picture of it.

use std::sync::Arc;

use crate::curve::{FrequencyProfile, Omega2Law, ScalingCurve};
use crate::error::{invalid, Error, Result};
use crate::numerics::ode::rk4_step;

/// Widths at or below this abort a forward solve.
pub const COLLAPSE_WIDTH: f64 = 1e-9;

/// `omega^2` values down to `-OMEGA2_FLOOR` are clamped to zero before taking
/// the square root.
pub const OMEGA2_FLOOR: f64 = 1e-12;

pub(crate) fn same_grid(curve: &ScalingCurve, profile: &FrequencyProfile) -> Result<()> {
    let (a, b) = (curve.grid.nodes(), profile.grid.nodes());
    if a.len() != b.len() || a.iter().zip(b).any(|(x, y)| x != y) {
        return Err(Error::GridMismatch);
    }
    Ok(())
}

/// Max of `|b'' + omega^2 b - 1/b^3|` over the grid. Segment end nodes are
/// skipped when the curve's derivatives are finite differences.
pub fn ermakov_residual(curve: &ScalingCurve, profile: &FrequencyProfile) -> Result<f64> {
    same_grid(curve, profile)?;
    let mut worst: f64 = 0.0;
    for seg in curve.grid.segments() {
        let mut range = seg.range.clone();
        if curve.finite_difference {
            range = range.start + 1..range.end - 1;
        }
        for i in range {
            let b = curve.b[i];
            let r = curve.bddot[i] + profile.omega2[i] * b - b.powi(-3);
            worst = worst.max(r.abs());
        }
    }
    Ok(worst)
}

/// `omega^2 = 1/b^4 - b''/b` on every segment, analytic when the curve came
/// from a closed-form law. No impulses; end frequencies are `1/b^4` at the ends.
pub fn inverse_engineer(curve: &ScalingCurve) -> Result<FrequencyProfile> {
    if let Some((i, &b)) = curve.b.iter().enumerate().find(|(_, &b)| !(b > 0.0)) {
        return Err(Error::NonPositiveWidth { t: curve.grid.nodes()[i], b });
    }
    let laws = match curve.law() {
        Some(law) => {
            vec![Omega2Law::InverseEngineered(Arc::clone(law)); curve.grid.segments().len()]
        }
        None => {
            let values: Vec<f64> =
                curve.b.iter().zip(&curve.bddot).map(|(b, bdd)| 1.0 / b.powi(4) - bdd / b).collect();
            let rates = curve.bdddot.as_ref().map(|bddd| {
                (0..curve.b.len())
                    .map(|i| {
                        let (b, bd, bdd) = (curve.b[i], curve.bdot[i], curve.bddot[i]);
                        -4.0 * bd / b.powi(5) - bddd[i] / b + bdd * bd / (b * b)
                    })
                    .collect()
            });
            curve
                .grid
                .segments()
                .iter()
                .map(|seg| Omega2Law::Sampled {
                    nodes: curve.grid.nodes()[seg.range.clone()].to_vec(),
                    values: values[seg.range.clone()].to_vec(),
                    rates: rates.as_ref().map(|r: &Vec<f64>| r[seg.range.clone()].to_vec()),
                })
                .collect()
        }
    };
    let w0 = curve.b_initial().powi(-4);
    let wf = curve.b_final().powi(-4);
    FrequencyProfile::new(curve.grid.clone(), laws, Vec::new(), w0, wf)
}

/// Integrate `b'' = 1/b^3 - omega^2 b` on the profile grid starting from
/// `(b0, bdot0)` at `t = 0-`.
///
/// An impulse of strength `D` at time `t_i` makes `b'` jump by `-D b(t_i)`.
/// Impulses at `t = 0` and interior joints are applied while stepping; one at
/// `t_f` is left in the profile, so the returned curve ends at `t_f-`.
pub fn forward_solve(profile: &FrequencyProfile, b0: f64, bdot0: f64) -> Result<ScalingCurve> {
    if !(b0 > 0.0 && b0.is_finite() && bdot0.is_finite()) {
        return Err(invalid("initial state", format!("need finite b0 > 0, got ({b0}, {bdot0})")));
    }
    let grid = &profile.grid;
    let nodes = grid.nodes();
    let n = grid.len();
    let (mut b, mut bdot, mut bddot) = (vec![0.0; n], vec![0.0; n], vec![0.0; n]);
    let mut y = [b0, bdot0];
    for (k, seg) in grid.segments().iter().enumerate() {
        y[1] -= profile.impulse_at(seg.start) * y[0];
        let mut rhs = |t: f64, s: &[f64; 2]| {
            if s[0] <= COLLAPSE_WIDTH {
                return [f64::NAN; 2];
            }
            [s[1], s[0].powi(-3) - profile.omega2_at(k, t) * s[0]]
        };
        let range = seg.range.clone();
        for i in range.clone() {
            if i > range.start {
                y = rk4_step(&mut rhs, nodes[i - 1], &y, nodes[i] - nodes[i - 1]);
            }
            // the rhs turns NaN once a stage crosses the collapse width
            if y[0].is_nan() || y[0] <= COLLAPSE_WIDTH {
                return Err(Error::Collapse { t: nodes[i], b: y[0] });
            }
            if !(y[0].is_finite() && y[1].is_finite()) {
                return Err(Error::NonFinite { t: nodes[i] });
            }
            b[i] = y[0];
            bdot[i] = y[1];
            bddot[i] = y[0].powi(-3) - profile.omega2[i] * y[0];
        }
    }
    ScalingCurve::from_states(grid.clone(), b, bdot, bddot, None, "forward")
}

/// One instant of the fictitious particle with position `b` in the potential
/// `U = (omega^2 b^2 + 1/b^2) / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalAnalogyState {
    pub b: f64,
    pub bdot: f64,
    pub u: f64,
    /// `(b'^2 + omega^2 b^2 + 1/b^2) / 2`
    pub h_cl: f64,
    /// Energy above the potential minimum `U_min = omega`.
    pub e_ex: f64,
}

pub fn classical_state(b: f64, bdot: f64, omega2: f64) -> Result<ClassicalAnalogyState> {
    let u = 0.5 * (omega2 * b * b + 1.0 / (b * b));
    let h_cl = 0.5 * bdot * bdot + u;
    let omega = real_frequency(omega2, f64::NAN)?;
    let e_ex = 0.5 * bdot * bdot + 0.5 * (omega2 * b * b + 1.0 / (b * b) - 2.0 * omega);
    Ok(ClassicalAnalogyState { b, bdot, u, h_cl, e_ex })
}

/// Position `b = omega^(-1/2)` of the potential minimum and its value `U_min = omega`.
pub fn potential_minimum(omega: f64) -> (f64, f64) {
    (omega.powf(-0.5), omega)
}

/// `sqrt(omega^2)`, clamping tiny negatives; `t` labels the error.
pub fn real_frequency(omega2: f64, t: f64) -> Result<f64> {
    if omega2 < -OMEGA2_FLOOR {
        return Err(Error::NonRealFrequency { t, omega2 });
    }
    Ok(omega2.max(0.0).sqrt())
}

/// Excitation energy per node (`E_ex`, dimensionless) and its ground-state
/// rescaling `E_na = E_ex / 2` in units of `hbar omega0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExcitationTrace {
    pub e_ex: Vec<f64>,
    pub e_na: Vec<f64>,
}

pub fn excitation_energy(curve: &ScalingCurve, profile: &FrequencyProfile) -> Result<ExcitationTrace> {
    same_grid(curve, profile)?;
    let nodes = curve.grid.nodes();
    let mut e_ex = Vec::with_capacity(curve.b.len());
    for i in 0..curve.b.len() {
        let w2 = profile.omega2[i];
        let omega = real_frequency(w2, nodes[i])?;
        let (b, bd) = (curve.b[i], curve.bdot[i]);
        e_ex.push(0.5 * bd * bd + 0.5 * (w2 * b * b + 1.0 / (b * b) - 2.0 * omega));
    }
    let e_na = e_ex.iter().map(|e| 0.5 * e).collect();
    Ok(ExcitationTrace { e_ex, e_na })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::TimeGrid;
    use crate::protocols;
    use crate::units::TrapSpec;

    fn static_trap(n: usize) -> FrequencyProfile {
        let grid = TimeGrid::uniform(5.0, n).unwrap();
        FrequencyProfile::new(grid, vec![Omega2Law::Constant(1.0)], Vec::new(), 1.0, 1.0).unwrap()
    }

    #[test]
    fn static_equilibrium() {
        let profile = static_trap(101);
        let curve = forward_solve(&profile, 1.0, 0.0).unwrap();
        assert!(curve.b.iter().all(|&b| (b - 1.0).abs() < 1e-10));
        assert_eq!(ermakov_residual(&curve, &profile).unwrap(), 0.0);
        let ex = excitation_energy(&curve, &profile).unwrap();
        assert!(ex.e_ex.iter().all(|e| e.abs() < 1e-12));
    }

    #[test]
    fn quintic_residual_and_endpoints() {
        let spec = TrapSpec::dimensionless(10.0, 0).unwrap();
        let p = protocols::quintic(spec, 25.0, 2001).unwrap();
        assert!(ermakov_residual(&p.curve, &p.profile).unwrap() < 1e-10);
        assert!((p.profile.omega2[0] - 1.0).abs() < 1e-14);
        assert!((p.profile.omega2.last().unwrap() - 1e-4).abs() < 1e-14);
    }

    #[test]
    fn quintic_short_time_goes_imaginary() {
        let spec = TrapSpec::dimensionless(10.0, 0).unwrap();
        let p = protocols::quintic(spec, 1.0, 2001).unwrap();
        assert!(p.profile.has_imaginary());
        assert!(excitation_energy(&p.curve, &p.profile).is_err());
    }

    #[test]
    fn impulse_jump_rule() {
        let grid = TimeGrid::piecewise(&[0.0, 1.0, 2.0], 401).unwrap();
        let profile = FrequencyProfile::new(
            grid,
            vec![Omega2Law::Constant(1.0), Omega2Law::Constant(1.0)],
            vec![crate::curve::Impulse { time: 1.0, strength: 0.3 }],
            1.0,
            1.0,
        )
        .unwrap();
        let curve = forward_solve(&profile, 1.0, 0.0).unwrap();
        let seg = &curve.grid.segments()[0];
        let (i, j) = (seg.range.end - 1, seg.range.end);
        assert_eq!(curve.b[i], curve.b[j]);
        assert!((curve.bdot[j] - curve.bdot[i] + 0.3 * curve.b[i]).abs() < 1e-15);
    }

    #[test]
    fn collapse_is_reported() {
        let grid = TimeGrid::uniform(50.0, 2001).unwrap();
        let profile =
            FrequencyProfile::new(grid, vec![Omega2Law::Constant(1.0)], Vec::new(), 1.0, 1.0).unwrap();
        let err = forward_solve(&profile, 1.0, -1e6).unwrap_err();
        assert!(matches!(err, Error::Collapse { .. } | Error::NonFinite { .. }), "{err:?}");
    }

    #[test]
    fn classical_minimum() {
        let (b, u) = potential_minimum(0.25);
        assert!((b - 2.0).abs() < 1e-15 && u == 0.25);
        let s = classical_state(b, 0.0, 0.0625).unwrap();
        assert!(s.e_ex.abs() < 1e-15);
        assert!((s.h_cl - 0.25).abs() < 1e-15);
        assert!(classical_state(1.0, 0.0, -1.0).is_err());
    }
}
