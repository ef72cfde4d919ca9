//! Searches over protocol parameters: hybrid cap durations minimizing the
//! time-averaged non-adiabatic energy under `omega >= 0`, and septic
//! coefficients minimizing the peak relative power.

use rayon::prelude::*;

use crate::energies::{nonadiabatic_energy, power};
use crate::error::{invalid, Error, Result};
use crate::grid::DEFAULT_NODES;
use crate::numerics::minimize::{nelder_mead, Minimum};
use crate::protocols::{self, polynomial::septic_equivalent_of_quintic};
use crate::units::TrapSpec;

/// Cap-duration fractions of `t_f` used as multistart seeds (3 x 3 grid).
pub const CAP_SEEDS: [f64; 3] = [0.01, 0.05, 0.2];

/// Nodes used to locate the peak of `|P_rel|`.
pub const POWER_PEAK_NODES: usize = 4001;

const SEARCH_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizationResult {
    /// `(tau_l, tau_s)` or `(c3, c4)`.
    pub params: [f64; 2],
    pub objective: f64,
    pub feasible: bool,
    pub iterations: usize,
    pub converged: bool,
    /// Objective at the best seed, before refinement.
    pub start_objective: f64,
    /// True when no seed was feasible and a feasible point had to be found first.
    pub restored: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct CapSearch {
    /// Nodes of each trial protocol.
    pub nodes: usize,
    /// Run a constraint-violation search from the seeds when none is feasible.
    pub restore_feasibility: bool,
}

impl Default for CapSearch {
    fn default() -> Self {
        Self { nodes: DEFAULT_NODES, restore_feasibility: true }
    }
}

/// `avg(E_na)` of the hybrid protocol, or `+inf` when the caps are out of
/// range or the frequency turns imaginary.
pub fn cap_objective(spec: &TrapSpec, t_f: f64, tau_l: f64, tau_s: f64, nodes: usize) -> f64 {
    if !(tau_l > 0.0 && tau_s > 0.0 && tau_l + tau_s < t_f) {
        return f64::INFINITY;
    }
    let ground = spec.reduced().with_mode(0);
    let Ok(p) = protocols::hybrid_caps(ground, t_f, tau_l, tau_s, nodes) else {
        return f64::INFINITY;
    };
    match nonadiabatic_energy(&p.curve, &p.profile, &p.spec) {
        Ok(na) => na.avg_ena,
        Err(_) => f64::INFINITY,
    }
}

/// How far the hybrid protocol is from `omega^2 >= 0`; zero when feasible.
pub fn cap_violation(spec: &TrapSpec, t_f: f64, tau_l: f64, tau_s: f64, nodes: usize) -> f64 {
    if !(tau_l > 0.0 && tau_s > 0.0 && tau_l + tau_s < t_f) {
        return f64::INFINITY;
    }
    match protocols::hybrid_caps(spec.reduced(), t_f, tau_l, tau_s, nodes) {
        Ok(p) => (-p.profile.min_omega2()).max(0.0),
        Err(_) => f64::INFINITY,
    }
}

fn better(a: &Minimum<[f64; 2]>, b: &Minimum<[f64; 2]>) -> bool {
    a.f.total_cmp(&b.f).then(a.x[0].total_cmp(&b.x[0])).then(a.x[1].total_cmp(&b.x[1])).is_lt()
}

fn best_of(results: Vec<Minimum<[f64; 2]>>) -> Option<Minimum<[f64; 2]>> {
    results.into_iter().reduce(|a, b| if better(&b, &a) { b } else { a })
}

/// Nelder–Mead over `(ln tau_l, ln tau_s)` from the 3 x 3 seed grid; the best
/// feasible basin is refined once more.
pub fn optimize_caps(spec: &TrapSpec, t_f: f64) -> Result<OptimizationResult> {
    optimize_caps_with(spec, t_f, CapSearch::default())
}

pub fn optimize_caps_with(spec: &TrapSpec, t_f: f64, search: CapSearch) -> Result<OptimizationResult> {
    if !(t_f > 0.0 && t_f.is_finite()) {
        return Err(invalid("t_f", format!("must be positive, got {t_f}")));
    }
    let nodes = search.nodes;
    let objective = |x: [f64; 2]| cap_objective(spec, t_f, x[0].exp(), x[1].exp(), nodes);
    let seeds: Vec<[f64; 2]> = CAP_SEEDS
        .iter()
        .flat_map(|&a| CAP_SEEDS.iter().map(move |&b| [(a * t_f).ln(), (b * t_f).ln()]))
        .collect();

    let seed_values: Vec<f64> = seeds.par_iter().map(|&x| objective(x)).collect();
    let mut starts: Vec<[f64; 2]> =
        seeds.iter().zip(&seed_values).filter(|(_, v)| v.is_finite()).map(|(x, _)| *x).collect();
    let mut restored = false;
    if starts.is_empty() && search.restore_feasibility {
        let violation = |x: [f64; 2]| cap_violation(spec, t_f, x[0].exp(), x[1].exp(), nodes);
        starts = seeds
            .par_iter()
            .map(|&x| nelder_mead(violation, x, [0.5, 0.5], SEARCH_TOL))
            .filter(|m| m.f == 0.0 && objective(m.x).is_finite())
            .map(|m| m.x)
            .collect();
        restored = true;
    }
    if starts.is_empty() {
        return Err(Error::Infeasible(format!(
            "no cap pair keeps omega^2 >= 0 for t_f = {t_f} (gamma = {})",
            spec.gamma()
        )));
    }
    let start_objective = starts.iter().map(|&x| objective(x)).fold(f64::INFINITY, f64::min);

    let runs: Vec<Minimum<[f64; 2]>> =
        starts.par_iter().map(|&x| nelder_mead(objective, x, [0.5, 0.5], SEARCH_TOL)).collect();
    let total: usize = runs.iter().map(|m| m.iterations).sum();
    let best = best_of(runs).expect("at least one start");
    // restart once from the winner to escape a collapsed simplex
    let polish = nelder_mead(objective, best.x, [0.1, 0.1], SEARCH_TOL);
    let best = if better(&polish, &best) { polish } else { best };
    Ok(OptimizationResult {
        params: [best.x[0].exp(), best.x[1].exp()],
        objective: best.f,
        feasible: best.f.is_finite(),
        iterations: total + polish.iterations,
        converged: best.converged,
        start_objective,
        restored,
    })
}

/// Peak of `|P_rel|` for the septic protocol on [`POWER_PEAK_NODES`] nodes.
pub fn septic_peak(spec: &TrapSpec, t_f: f64, c3: f64, c4: f64) -> Result<f64> {
    let p = protocols::septic(spec.reduced(), t_f, c3, c4, POWER_PEAK_NODES)?;
    let pw = power(&p.curve, &p.profile, &p.spec)?;
    pw.peak_rel().ok_or_else(|| Error::Domain("relative power is undefined without expansion".into()))
}

/// Peak of `|P_rel|` for the quintic protocol on [`POWER_PEAK_NODES`] nodes.
pub fn quintic_peak(spec: &TrapSpec, t_f: f64) -> Result<f64> {
    let (c3, c4) = septic_equivalent_of_quintic(spec.gamma());
    septic_peak(spec, t_f, c3, c4)
}

/// Nelder–Mead on `max |P_rel|` over `(c3, c4)`, started from `(0, 0)` and from
/// the quintic; the better result is returned.
pub fn optimize_septic_power(spec: &TrapSpec, t_f: f64) -> Result<OptimizationResult> {
    if !(t_f > 0.0 && t_f.is_finite()) {
        return Err(invalid("t_f", format!("must be positive, got {t_f}")));
    }
    if spec.gamma() == 1.0 {
        return Err(Error::Domain("relative power is undefined without expansion".into()));
    }
    let objective = |x: [f64; 2]| septic_peak(spec, t_f, x[0], x[1]).unwrap_or(f64::INFINITY);
    let (q3, q4) = septic_equivalent_of_quintic(spec.gamma());
    let starts = [[0.0, 0.0], [q3, q4]];
    let start_objective = starts.iter().map(|&x| objective(x)).fold(f64::INFINITY, f64::min);
    let runs: Vec<Minimum<[f64; 2]>> = starts
        .par_iter()
        .map(|&x| {
            let step = [0.1 * x[0].abs().max(10.0), 0.1 * x[1].abs().max(10.0)];
            nelder_mead(objective, x, step, SEARCH_TOL)
        })
        .collect();
    let total: usize = runs.iter().map(|m| m.iterations).sum();
    let best = best_of(runs).expect("two starts");
    Ok(OptimizationResult {
        params: best.x,
        objective: best.f,
        feasible: best.f.is_finite(),
        iterations: total,
        converged: best.converged,
        start_objective,
        restored: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> TrapSpec {
        TrapSpec::dimensionless(10.0, 0).unwrap()
    }

    #[test]
    fn cap_objective_rejects_bad_caps() {
        assert!(cap_objective(&spec(), 10.0, 6.0, 6.0, 401).is_infinite());
        assert!(cap_objective(&spec(), 10.0, -1.0, 1.0, 401).is_infinite());
        // short protocols turn imaginary
        assert!(cap_objective(&spec(), 10.0, 1.0, 1.0, 401).is_infinite());
    }

    #[test]
    fn short_protocol_is_infeasible() {
        let err = optimize_caps_with(&spec(), 20.0, CapSearch { nodes: 401, ..Default::default() });
        assert!(matches!(err, Err(Error::Infeasible(_))));
    }

    #[test]
    fn caps_beat_seeds_and_respect_bound() {
        let tf = 1000.0;
        let r = optimize_caps_with(&spec(), tf, CapSearch { nodes: 1001, ..Default::default() }).unwrap();
        assert!(r.feasible);
        assert!(r.objective <= r.start_objective);
        let bound = crate::energies::na_lower_bound(10.0, tf);
        assert!(r.objective > bound);
        assert!(r.objective < 1.2 * bound, "{} vs {bound}", r.objective);
        let p = protocols::hybrid_caps(spec(), tf, r.params[0], r.params[1], 1001).unwrap();
        assert!(p.profile.min_omega2() >= -1e-12);
    }

    #[test]
    fn septic_search_beats_quintic() {
        let tf = 40.0 * std::f64::consts::PI;
        let q = quintic_peak(&spec(), tf).unwrap();
        let r = optimize_septic_power(&spec(), tf).unwrap();
        assert!(r.objective <= q);
        assert!(r.objective >= 1.0);
    }

    #[test]
    fn deterministic() {
        let tf = 40.0 * std::f64::consts::PI;
        let a = optimize_septic_power(&spec(), tf).unwrap();
        let b = optimize_septic_power(&spec(), tf).unwrap();
        assert_eq!(a, b);
    }
}
