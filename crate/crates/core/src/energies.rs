//! Energies of a mode driven by a scaling protocol, in units of `hbar omega0`
//! with time in units of `1/omega0`.
//!
//! With `k = (2n+1)/4` the instantaneous energies are
//! `E = k (b'^2 + omega^2 b^2 + 1/b^2)`, `K = k (b'^2 + 1/b^2)` and
//! `V = k omega^2 b^2`. Dirac impulses in `omega^2` are never sampled; their
//! contribution to the time-averaged potential energy is added analytically.

use crate::curve::ScalingLaw;
use crate::curve::{bdot_after_end, bdot_before_start, FrequencyProfile, ScalingCurve};
use crate::ermakov::{real_frequency, same_grid};
use crate::error::{invalid, Error, Result};
use crate::grid::TimeGrid;
use crate::numerics::quadrature::simpson_converged;
use crate::protocols::bang_bang::{max_duration, BangBangLaw};
use crate::protocols::{Protocol, QuasiOptimalLaw};
use crate::units::TrapSpec;

/// Relative tolerance of the adaptive quadratures used for bounds.
pub const BOUND_QUADRATURE_TOL: f64 = 1e-12;

const BOUND_MAX_NODES: usize = 1 << 22;

fn k_factor(spec: &TrapSpec) -> f64 {
    spec.mode_factor() / 4.0
}

/// Per-node total, kinetic and potential energy.
#[derive(Debug, Clone, PartialEq)]
pub struct Instantaneous {
    pub e: Vec<f64>,
    pub k: Vec<f64>,
    pub v: Vec<f64>,
}

pub fn instantaneous(
    curve: &ScalingCurve,
    profile: &FrequencyProfile,
    spec: &TrapSpec,
) -> Result<Instantaneous> {
    same_grid(curve, profile)?;
    let kf = k_factor(spec);
    let n = curve.b.len();
    let (mut e, mut k, mut v) = (Vec::with_capacity(n), Vec::with_capacity(n), Vec::with_capacity(n));
    for i in 0..n {
        let (b, bd, w2) = (curve.b[i], curve.bdot[i], profile.omega2[i]);
        let kin = kf * (bd * bd + 1.0 / (b * b));
        let pot = kf * w2 * b * b;
        k.push(kin);
        v.push(pot);
        e.push(kin + pot);
    }
    Ok(Instantaneous { e, k, v })
}

/// `E(0-)` with the initial trap and `E(t_f+)` with the final trap.
pub fn boundary_energies(curve: &ScalingCurve, profile: &FrequencyProfile, spec: &TrapSpec) -> (f64, f64) {
    let kf = k_factor(spec);
    let energy = |b: f64, bd: f64, w2: f64| kf * (bd * bd + w2 * b * b + 1.0 / (b * b));
    (
        energy(curve.b_initial(), bdot_before_start(curve, profile), profile.omega2_initial),
        energy(curve.b_final(), bdot_after_end(curve, profile), profile.omega2_final),
    )
}

/// `(Delta_delta, Delta_boundary)`:
/// `Delta_delta = k/t_f [b'(t_f-) b(t_f) - b'(0+) b(0)]` and its negative.
pub fn impulse_contribution(curve: &ScalingCurve, spec: &TrapSpec) -> (f64, f64) {
    let kf = k_factor(spec);
    let d = kf / curve.t_f() * (curve.bf_minus_dot * curve.b_final() - curve.b0_plus_dot * curve.b_initial());
    (d, -d)
}

/// Time-averaged potential energy carried by the impulses of `profile`,
/// `sum_i k D_i b(t_i)^2 / t_f`.
pub fn impulse_energy(curve: &ScalingCurve, profile: &FrequencyProfile, spec: &TrapSpec) -> f64 {
    let kf = k_factor(spec);
    let nodes = curve.grid.nodes();
    profile
        .impulses
        .iter()
        .map(|imp| {
            let i = nodes.partition_point(|&t| t < imp.time).min(nodes.len() - 1);
            let b = curve.b[i];
            kf * imp.strength * b * b
        })
        .sum::<f64>()
        / curve.t_f()
}

/// `(1/t_f) integral of (2n+1)/2 (1/b^2 + s_k b'^2)`; `s_k = 1` is the
/// partially integrated form of the time-averaged energy.
pub(crate) fn eq14_average(curve: &ScalingCurve, spec: &TrapSpec, kinetic_sign: f64) -> Result<f64> {
    let half = spec.mode_factor() / 2.0;
    let integrand: Vec<f64> = curve
        .b
        .iter()
        .zip(&curve.bdot)
        .map(|(b, bd)| half * (1.0 / (b * b) + kinetic_sign * bd * bd))
        .collect();
    curve.grid.average(&integrand)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Averages {
    /// `avg_K + avg_V`, impulses included in `avg_V`.
    pub avg_e: f64,
    pub avg_k: f64,
    pub avg_v: f64,
    /// Partially integrated form `(1/t_f) int (2n+1)/2 (1/b^2 + b'^2)`.
    pub avg_e2: f64,
    pub delta_delta: f64,
    pub delta_boundary: f64,
    /// Impulse term actually added to `avg_v`.
    pub impulse_energy: f64,
}

impl Averages {
    /// `|avg_K - avg_V| / avg_E`.
    pub fn virial_deviation(&self) -> f64 {
        (self.avg_k - self.avg_v).abs() / self.avg_e.abs()
    }

    /// `avg_K / avg_V`.
    pub fn virial_ratio(&self) -> f64 {
        self.avg_k / self.avg_v
    }
}

pub fn averages(
    inst: &Instantaneous,
    curve: &ScalingCurve,
    profile: &FrequencyProfile,
    spec: &TrapSpec,
) -> Result<Averages> {
    let grid = &curve.grid;
    let avg_k = grid.average(&inst.k)?;
    let impulse = impulse_energy(curve, profile, spec);
    let avg_v = grid.average(&inst.v)? + impulse;
    let (delta_delta, delta_boundary) = impulse_contribution(curve, spec);
    Ok(Averages {
        avg_e: avg_k + avg_v,
        avg_k,
        avg_v,
        avg_e2: eq14_average(curve, spec, 1.0)?,
        delta_delta,
        delta_boundary,
        impulse_energy: impulse,
    })
}

/// Ground-state non-adiabatic energy `E_na = (b'^2 + omega^2 b^2 + 1/b^2)/4 - omega/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct NonAdiabatic {
    pub ena: Vec<f64>,
    /// Time average of `ena`.
    pub avg_ena: f64,
    /// `(1/(2 t_f)) int (b'^2 + 1/b^2 - omega)`, equal to `avg_ena` when the
    /// boundary conditions hold.
    pub avg_ena2: f64,
    /// `E_na(0-)` in the initial trap.
    pub ena_initial: f64,
    /// `E_na(t_f+)` in the final trap.
    pub ena_final: f64,
}

/// Requires `omega^2 >= 0` everywhere and no impulses. Always evaluated for
/// the ground state; the mode index of `spec` must be 0.
pub fn nonadiabatic_energy(
    curve: &ScalingCurve,
    profile: &FrequencyProfile,
    spec: &TrapSpec,
) -> Result<NonAdiabatic> {
    same_grid(curve, profile)?;
    if spec.n() != 0 {
        return Err(invalid("n", "non-adiabatic energy is defined here for the ground state only"));
    }
    if let Some(imp) = profile.impulses.iter().find(|i| i.strength != 0.0) {
        if imp.strength < 0.0 {
            return Err(Error::NonRealFrequency { t: imp.time, omega2: f64::NEG_INFINITY });
        }
        return Err(Error::Domain(format!(
            "non-adiabatic energy is undefined across the impulse at t = {}",
            imp.time
        )));
    }
    let nodes = curve.grid.nodes();
    let n = curve.b.len();
    let mut ena = Vec::with_capacity(n);
    let mut second = Vec::with_capacity(n);
    for i in 0..n {
        let (b, bd, w2) = (curve.b[i], curve.bdot[i], profile.omega2[i]);
        let w = real_frequency(w2, nodes[i])?;
        ena.push(0.25 * (bd * bd + w2 * b * b + 1.0 / (b * b)) - 0.5 * w);
        second.push(0.5 * (bd * bd + 1.0 / (b * b) - w));
    }
    let boundary = |b: f64, bd: f64, w2: f64| -> Result<f64> {
        let w = real_frequency(w2, f64::NAN)?;
        Ok(0.25 * (bd * bd + w2 * b * b + 1.0 / (b * b)) - 0.5 * w)
    };
    Ok(NonAdiabatic {
        avg_ena: curve.grid.average(&ena)?,
        avg_ena2: curve.grid.average(&second)?,
        ena,
        ena_initial: boundary(curve.b_initial(), bdot_before_start(curve, profile), profile.omega2_initial)?,
        ena_final: boundary(curve.b_final(), bdot_after_end(curve, profile), profile.omega2_final)?,
    })
}

/// `(gamma - 1)^2 / (4 t_f^2)`, the bound on the time-averaged non-adiabatic energy.
pub fn na_lower_bound(gamma: f64, t_f: f64) -> f64 {
    (gamma - 1.0).powi(2) / (4.0 * t_f * t_f)
}

/// Energy delivered by a jump of `omega^2` at `time`: `k Delta(omega^2) b^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerJump {
    pub time: f64,
    pub energy: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PowerTrace {
    /// `P = k d(omega^2)/dt b^2` per node (smooth part).
    pub p: Vec<f64>,
    /// `P / C` with `C = (n + 1/2)(omega_f - 1)/t_f`; absent when `omega_f = 1`.
    pub p_rel: Option<Vec<f64>>,
    /// Finite energy steps where `omega^2` is discontinuous (ends and joints).
    pub jumps: Vec<PowerJump>,
    /// Integral of the smooth part plus all jumps.
    pub integral: f64,
    /// `E(t_f+) - E(0-)`.
    pub energy_change: f64,
    pub c_n: f64,
}

impl PowerTrace {
    /// Max of `|P_rel|` over the nodes.
    pub fn peak_rel(&self) -> Option<f64> {
        self.p_rel.as_ref().map(|p| p.iter().map(|v| v.abs()).fold(0.0, f64::max))
    }

    /// Whether `omega^2` jumps anywhere (then the power has delta peaks).
    pub fn has_jumps(&self, tol: f64) -> bool {
        self.jumps.iter().any(|j| j.energy.abs() > tol)
    }
}

pub fn power(curve: &ScalingCurve, profile: &FrequencyProfile, spec: &TrapSpec) -> Result<PowerTrace> {
    same_grid(curve, profile)?;
    if !profile.impulses.is_empty() {
        return Err(Error::PowerUndefined);
    }
    let kf = k_factor(spec);
    let rate = profile.omega2_rate()?;
    let p: Vec<f64> = rate.iter().zip(&curve.b).map(|(r, b)| kf * r * b * b).collect();
    let t_f = curve.t_f();
    let omega_f = spec.omega_f_rel();
    let c_n = 0.5 * spec.mode_factor() * (omega_f - 1.0) / t_f;
    let p_rel = (c_n != 0.0).then(|| p.iter().map(|v| v / c_n).collect());

    let segs = curve.grid.segments();
    let mut jumps = Vec::new();
    let first = segs[0].range.start;
    jumps.push(PowerJump {
        time: 0.0,
        energy: kf * (profile.omega2[first] - profile.omega2_initial) * curve.b[first].powi(2),
    });
    for w in segs.windows(2) {
        let (i, j) = (w[0].range.end - 1, w[1].range.start);
        jumps.push(PowerJump {
            time: w[1].start,
            energy: kf * (profile.omega2[j] - profile.omega2[i]) * curve.b[i].powi(2),
        });
    }
    let last = curve.b.len() - 1;
    jumps.push(PowerJump {
        time: t_f,
        energy: kf * (profile.omega2_final - profile.omega2[last]) * curve.b[last].powi(2),
    });
    let integral = curve.grid.integrate(&p)? + jumps.iter().map(|j| j.energy).sum::<f64>();
    let (e0, ef) = boundary_energies(curve, profile, spec);
    Ok(PowerTrace { p, p_rel, jumps, integral, energy_change: ef - e0, c_n })
}

/// Everything computed for one protocol. Optional parts are absent when the
/// quantity is undefined for it (imaginary frequency, impulses, excited mode).
#[derive(Debug, Clone)]
pub struct EnergyTrace {
    pub grid: TimeGrid,
    pub e: Vec<f64>,
    pub k: Vec<f64>,
    pub v: Vec<f64>,
    pub averages: Averages,
    pub e_initial: f64,
    pub e_final: f64,
    pub nonadiabatic: Option<NonAdiabatic>,
    pub power: Option<PowerTrace>,
}

impl EnergyTrace {
    pub fn compute(curve: &ScalingCurve, profile: &FrequencyProfile, spec: &TrapSpec) -> Result<Self> {
        let inst = instantaneous(curve, profile, spec)?;
        let averages = averages(&inst, curve, profile, spec)?;
        let (e_initial, e_final) = boundary_energies(curve, profile, spec);
        let nonadiabatic = match nonadiabatic_energy(curve, profile, spec) {
            Ok(na) => Some(na),
            Err(Error::NonRealFrequency { .. } | Error::Domain(_) | Error::InvalidParameter { .. }) => None,
            Err(e) => return Err(e),
        };
        let power = match power(curve, profile, spec) {
            Ok(p) => Some(p),
            Err(Error::PowerUndefined) => None,
            Err(e) => return Err(e),
        };
        Ok(Self {
            grid: curve.grid.clone(),
            e: inst.e,
            k: inst.k,
            v: inst.v,
            averages,
            e_initial,
            e_final,
            nonadiabatic,
            power,
        })
    }

    pub fn of(protocol: &Protocol) -> Result<Self> {
        Self::compute(&protocol.curve, &protocol.profile, &protocol.spec)
    }
}

/// The bound on the time-averaged energy for duration `t_f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowerBound {
    /// Quadrature of the partially integrated energy over the quasi-optimal curve.
    pub quadrature: f64,
    /// The arctanh closed form, when both arctanh arguments lie in (-1, 1).
    pub closed_form: Option<f64>,
    /// Whether the closed form exists and agrees with the quadrature to 1e-6.
    pub closed_form_consistent: bool,
}

pub fn lower_bound_avg_energy(spec: &TrapSpec, t_f: f64) -> Result<LowerBound> {
    if !(t_f > 0.0 && t_f.is_finite()) {
        return Err(invalid("t_f", format!("must be positive, got {t_f}")));
    }
    let law = QuasiOptimalLaw::new(spec.gamma(), t_f);
    let half = spec.mode_factor() / 2.0;
    let integral = simpson_converged(
        |t| {
            let k = law.eval(0, t);
            1.0 / (k.b * k.b) + k.bd * k.bd
        },
        0.0,
        t_f,
        2049,
        BOUND_QUADRATURE_TOL,
        BOUND_MAX_NODES,
    )?;
    let quadrature = half * integral / t_f;
    let closed_form = closed_form_bound(spec, t_f);
    let closed_form_consistent =
        closed_form.is_some_and(|c| (c - quadrature).abs() <= 1e-6 * quadrature.abs());
    Ok(LowerBound { quadrature, closed_form, closed_form_consistent })
}

/// `(2n+1)/(2 t_f^2) {(B^2 - t_f^2) - 2 t_f [atanh(x_f) - atanh(x_0)]}` with
/// `x_f = (B^2 + B - t_f^2)/t_f`, `x_0 = B/t_f`; `None` outside `|x| < 1`.
pub fn closed_form_bound(spec: &TrapSpec, t_f: f64) -> Option<f64> {
    let law = QuasiOptimalLaw::new(spec.gamma(), t_f);
    let b = law.big_b();
    let a = law.curvature();
    let xf = (a + b) / t_f;
    let x0 = b / t_f;
    if !(xf.abs() < 1.0 && x0.abs() < 1.0) {
        return None;
    }
    Some(spec.mode_factor() / (2.0 * t_f * t_f) * (a - 2.0 * t_f * (xf.atanh() - x0.atanh())))
}

/// Constant energies of the two bang-bang segments and their time average.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BangBangEnergies {
    pub first: f64,
    pub second: f64,
    pub avg_e: f64,
    pub t_f: f64,
}

pub fn bang_bang_energies(spec: &TrapSpec, law: &BangBangLaw) -> BangBangEnergies {
    let h = 0.5 * spec.mode_factor() / 2.0;
    let wf = spec.omega_f_rel();
    let first = h * (1.0 - law.omega1 * law.omega1);
    let second = h * (wf * wf + law.omega2 * law.omega2) / wf;
    let t_f = law.t_f();
    BangBangEnergies { first, second, avg_e: (law.t1 * first + law.t2 * second) / t_f, t_f }
}

/// Closed-form bounds and asymptotes for one trap and duration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub e_nl: LowerBound,
    pub ena_l: f64,
    /// Longest bang-bang duration `pi / (2 sqrt(omega_f))`.
    pub tf_max: f64,
    /// Its energy `(2n+1)(1 + omega_f)/4`.
    pub e_min: f64,
    /// `(2n+1) / (2 omega_f t_f^2)`, the short-time form of `e_nl`.
    pub e_nl_asymptote: f64,
    /// `1 / (4 omega_f t_f^2)`, the large-`gamma` form of `ena_l`.
    pub ena_l_asymptote: f64,
    /// `(2n+1) pi ln(2 gamma) / (16 omega_f t_f^2)` for fast symmetric bang-bang.
    pub bang_bang_symmetric_asymptote: f64,
    /// Free-expansion bang-bang with strong final kick: `t_f ~ 1/sqrt(omega_f)`.
    pub bang_bang_free_tf: f64,
    /// ... and its energy `n + 1/2`.
    pub bang_bang_free_energy: f64,
}

pub fn bounds(spec: &TrapSpec, t_f: f64) -> Result<BoundReport> {
    let gamma = spec.gamma();
    let wf = spec.omega_f_rel();
    let m = spec.mode_factor();
    Ok(BoundReport {
        e_nl: lower_bound_avg_energy(spec, t_f)?,
        ena_l: na_lower_bound(gamma, t_f),
        tf_max: max_duration(gamma),
        e_min: m * (1.0 + wf) / 4.0,
        e_nl_asymptote: m / (2.0 * wf * t_f * t_f),
        ena_l_asymptote: 1.0 / (4.0 * wf * t_f * t_f),
        bang_bang_symmetric_asymptote: m * std::f64::consts::PI * (2.0 * gamma).ln()
            / (16.0 * wf * t_f * t_f),
        bang_bang_free_tf: 1.0 / wf.sqrt(),
        bang_bang_free_energy: m / 2.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Omega2Law;
    use crate::protocols;

    fn spec(n: u32) -> TrapSpec {
        TrapSpec::dimensionless(10.0, n).unwrap()
    }

    fn static_trap(n: u32) -> (ScalingCurve, FrequencyProfile, TrapSpec) {
        let grid = TimeGrid::uniform(3.0, 101).unwrap();
        let curve = ScalingCurve::from_states(
            grid.clone(),
            vec![1.0; 101],
            vec![0.0; 101],
            vec![0.0; 101],
            None,
            "static",
        )
        .unwrap();
        let profile =
            FrequencyProfile::new(grid, vec![Omega2Law::Constant(1.0)], Vec::new(), 1.0, 1.0).unwrap();
        (curve, profile, TrapSpec::dimensionless(1.0, n).unwrap())
    }

    #[test]
    fn static_trap_equipartition() {
        let (c, p, s) = static_trap(0);
        let inst = instantaneous(&c, &p, &s).unwrap();
        assert!(inst.e.iter().all(|&e| e == 0.5));
        assert!(inst.k.iter().all(|&k| k == 0.25));
        let avg = averages(&inst, &c, &p, &s).unwrap();
        assert_eq!(avg.avg_e, 0.5);
        let na = nonadiabatic_energy(&c, &p, &s).unwrap();
        assert!(na.ena.iter().all(|&e| e == 0.0));
        let (c, p, s) = static_trap(3);
        let inst = instantaneous(&c, &p, &s).unwrap();
        assert!((averages(&inst, &c, &p, &s).unwrap().avg_e - 3.5).abs() < 1e-15);
    }

    #[test]
    fn quintic_virial_and_endpoints() {
        for tf in [0.1, 1.0, 10.0] {
            let p = protocols::quintic(spec(0), tf, 2001).unwrap();
            let tr = EnergyTrace::of(&p).unwrap();
            assert!(tr.averages.virial_deviation() < 1e-6, "tf={tf}");
            assert!((tr.e[0] - 0.5).abs() < 1e-12);
            assert!((tr.e.last().unwrap() - 0.005).abs() < 1e-12);
            assert_eq!(tr.averages.delta_delta, 0.0);
        }
    }

    #[test]
    fn quintic_short_time_has_negative_potential_but_positive_mean() {
        let p = protocols::quintic(spec(0), 1.0, 2001).unwrap();
        let tr = EnergyTrace::of(&p).unwrap();
        assert!(tr.v.iter().any(|&v| v < 0.0));
        assert!(tr.averages.avg_v > 0.0);
        assert!(tr.nonadiabatic.is_none());
    }

    #[test]
    fn linear_bottom_routes_differ_by_boundary_term() {
        let p = protocols::linear_bottom(spec(0), 2.0, 2001).unwrap();
        let tr = EnergyTrace::of(&p).unwrap();
        let a = tr.averages;
        assert!((a.avg_e - a.avg_e2).abs() > 1e-3);
        assert!((a.avg_e - a.avg_e2 - a.delta_boundary).abs() < 1e-9);
    }

    #[test]
    fn dirac_equality_chain() {
        let p = protocols::dirac_impulse(spec(0), 1.0, 2001).unwrap();
        let tr = EnergyTrace::of(&p).unwrap();
        let a = tr.averages;
        let bound = lower_bound_avg_energy(&p.spec, 1.0).unwrap().quadrature;
        assert!((a.avg_e - a.avg_e2).abs() < 1e-8 * a.avg_e);
        assert!((a.avg_e2 - bound).abs() < 1e-8 * bound);
        assert!((a.impulse_energy - a.delta_delta).abs() < 1e-12);
        let b = 101f64.sqrt() - 1.0;
        assert!((a.delta_delta - (b * b - 1.0) / 4.0).abs() < 1e-9);
        assert!(tr.power.is_none());
        assert!(tr.nonadiabatic.is_none());
    }

    /// `(2n+1)/2 [a/t_f^2 + 2 int_0^1 ds / F]` via `b'^2 = a/t_f^2 + 1/F`.
    fn bound_oracle(gamma: f64, tf: f64, n: u32) -> f64 {
        let big_b = (tf * tf + gamma * gamma).sqrt() - 1.0;
        let a = gamma * gamma - 1.0 - 2.0 * big_b;
        let m = 200_000;
        let h = 1.0 / m as f64;
        let f = |s: f64| 1.0 / (a * s * s + 2.0 * big_b * s + 1.0);
        let mut sum = f(0.0) + f(1.0);
        for i in 1..m {
            sum += if i % 2 == 1 { 4.0 } else { 2.0 } * f(i as f64 * h);
        }
        (2.0 * n as f64 + 1.0) / 2.0 * (a / (tf * tf) + 2.0 * sum * h / 3.0)
    }

    #[test]
    fn bound_matches_independent_integral() {
        for (gamma, tf) in [(10.0, 0.01), (10.0, 1.0), (10.0, 50.0), (100.0, 1e-3)] {
            let s = TrapSpec::dimensionless(gamma, 1).unwrap();
            let q = lower_bound_avg_energy(&s, tf).unwrap().quadrature;
            let o = bound_oracle(gamma, tf, 1);
            assert!((q - o).abs() < 1e-9 * o, "gamma={gamma} tf={tf}: {q} vs {o}");
        }
    }

    #[test]
    fn closed_form_flagged_when_arguments_leave_domain() {
        let lb = lower_bound_avg_energy(&spec(0), 1.0).unwrap();
        assert!(lb.closed_form.is_none());
        assert!(!lb.closed_form_consistent);
    }

    #[test]
    fn closed_form_agrees_where_defined() {
        // large t_f puts both arctanh arguments inside (-1, 1)
        let s = TrapSpec::dimensionless(1.5, 0).unwrap();
        let lb = lower_bound_avg_energy(&s, 20.0).unwrap();
        let c = lb.closed_form.expect("arguments should be in range");
        assert!((c - lb.quadrature).abs() < 1e-8 * lb.quadrature, "{c} vs {}", lb.quadrature);
        assert!(lb.closed_form_consistent);
    }

    #[test]
    fn no_expansion_bound_sits_below_ground_energy() {
        // with gamma = 1 the curve still bulges (B = sqrt(t_f^2 + 1) - 1), so the
        // bound lies strictly below the static value and approaches it as t_f -> 0
        let s = TrapSpec::dimensionless(1.0, 2).unwrap();
        for (tf, expected) in
            [(0.1, 0.49958457778318055), (1.0, 0.4671600246464478), (7.0, 0.25383219419479447)]
        {
            let q = lower_bound_avg_energy(&s, tf).unwrap().quadrature;
            assert!((q - 5.0 * expected).abs() < 1e-9, "tf={tf}: {q}");
            assert!(q < 2.5);
        }
    }

    #[test]
    fn na_bound_values() {
        assert_eq!(na_lower_bound(10.0, 1.0), 20.25);
        assert_eq!(na_lower_bound(1.0, 3.0), 0.0);
        let ratio = na_lower_bound(100.0, 1.0) / (1e4 / 4.0);
        assert!((ratio - 0.9801).abs() < 1e-12);
    }

    #[test]
    fn linear_bottom_na_energy_is_constant() {
        let p = protocols::linear_bottom(spec(0), 1.0, 401).unwrap();
        let na = nonadiabatic_energy(&p.curve, &p.profile, &p.spec).unwrap();
        assert!(na.ena.iter().all(|e| (e - 20.25).abs() < 1e-10));
        let ex = crate::ermakov::excitation_energy(&p.curve, &p.profile).unwrap();
        for (a, b) in na.ena.iter().zip(&ex.e_na) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn quintic_power_integral() {
        for n in [0, 2] {
            let p = protocols::quintic(spec(n), 25.0, 2001).unwrap();
            let pw = power(&p.curve, &p.profile, &p.spec).unwrap();
            let expected = -0.495 * (2 * n + 1) as f64;
            assert!((pw.integral - expected).abs() < 1e-6 * expected.abs());
            assert!((pw.energy_change - expected).abs() < 1e-12);
            assert!(!pw.has_jumps(1e-14));
            assert!(pw.peak_rel().unwrap() >= 1.0);
        }
    }

    #[test]
    fn power_rel_independent_of_mode() {
        let p0 = protocols::quintic(spec(0), 3.0, 501).unwrap();
        let p5 = protocols::quintic(spec(5), 3.0, 501).unwrap();
        let a = power(&p0.curve, &p0.profile, &p0.spec).unwrap().p_rel.unwrap();
        let b = power(&p5.curve, &p5.profile, &p5.spec).unwrap().p_rel.unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0));
        }
    }

    #[test]
    fn bang_bang_jumps_carry_the_energy_change() {
        let p = protocols::bang_bang_pair(spec(0), 1.0, 1.0, 801).unwrap();
        let pw = power(&p.curve, &p.profile, &p.spec).unwrap();
        assert!(pw.p.iter().all(|&v| v == 0.0));
        assert!((pw.integral - (-0.495)).abs() < 1e-10);
    }

    #[test]
    fn longest_bang_bang_energy() {
        let law = BangBangLaw::longest(10.0, 1.0).unwrap();
        let e = bang_bang_energies(&spec(0), &law);
        assert!((e.avg_e - 0.2525).abs() < 1e-12);
        let law = BangBangLaw::new(10.0, 1.0, 1.0).unwrap();
        assert_eq!(bang_bang_energies(&spec(0), &law).first, 0.0);
    }

    #[test]
    fn bang_bang_closed_form_matches_trace() {
        let p = protocols::bang_bang_pair(spec(1), 0.7, 2.0, 2001).unwrap();
        let tr = EnergyTrace::of(&p).unwrap();
        let law = BangBangLaw::new(10.0, 0.7, 2.0).unwrap();
        let e = bang_bang_energies(&p.spec, &law);
        assert!((tr.averages.avg_e - e.avg_e).abs() < 1e-9 * e.avg_e);
    }
}
