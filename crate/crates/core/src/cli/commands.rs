//! Implementations of the `protocol`, `energy`, `sweep` and `power` commands.

use std::f64::consts::PI;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use rayon::prelude::*;

use super::format::{g12, Table};
use super::{io_error, resolve_tau, FamilyArg, PowerArgs, Preset, ProtocolArgs, Quantity, SweepArgs, Trap};
use crate::energies::{self, bounds, nonadiabatic_energy, EnergyTrace};
use crate::error::{Error, Result};
use crate::optimize::{self, CapSearch, OptimizationResult};
use crate::protocols::{self, Family, Protocol};
use crate::units::TrapSpec;

/// Protocol time of the relative-power preset (s).
pub const FIG4_TF: f64 = 8e-3;
/// Sweep range of the total-energy preset (s).
pub const FIG1_RANGE: (f64, f64) = (1e-5, 1e-2);
/// Sweep range of the non-adiabatic preset (s).
pub const FIG3_RANGE: (f64, f64) = (1e-4, 1.0);

const CHECK_TOL: f64 = 1e-6;

/// A protocol built from command-line flags.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub trap: Trap,
    pub protocol: Protocol,
    /// Cap search result when the hybrid caps were optimised.
    pub caps: Option<OptimizationResult>,
}

fn family_name(f: FamilyArg) -> String {
    f.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn preset_tf(preset: Option<Preset>) -> Option<f64> {
    (preset == Some(Preset::Fig4)).then_some(FIG4_TF)
}

fn need(tau: Option<f64>, what: &str) -> Result<f64> {
    tau.ok_or_else(|| Error::Config(format!("{what} needs --tf or --tf-dimensionless")))
}

pub fn build_protocol(args: &ProtocolArgs) -> Result<Resolved> {
    let trap = Trap::resolve(&args.trap)?;
    let tau = resolve_tau(&trap, &args.time, preset_tf(args.trap.preset))?;
    let spec = trap.spec.reduced();
    let nodes = args.grid;
    let sh = &args.shape;
    let family = sh.family.unwrap_or(FamilyArg::Quintic);
    let name = family_name(family);
    let mut caps = None;
    let protocol = match family {
        FamilyArg::Quintic => protocols::quintic(spec, need(tau, &name)?, nodes)?,
        FamilyArg::Septic => {
            protocols::septic(spec, need(tau, &name)?, sh.c3.unwrap_or(0.0), sh.c4.unwrap_or(0.0), nodes)?
        }
        FamilyArg::QuasiOptimal => protocols::quasi_optimal(spec, need(tau, &name)?, nodes)?,
        FamilyArg::Dirac => protocols::dirac_impulse(spec, need(tau, &name)?, nodes)?,
        FamilyArg::Linear => protocols::linear_bottom(spec, need(tau, &name)?, nodes)?,
        FamilyArg::ConstantPower => protocols::constant_power_shoot(spec, need(tau, &name)?, nodes)?,
        FamilyArg::Hybrid => {
            let t_f = need(tau, &name)?;
            match (sh.tau_l, sh.tau_s) {
                (Some(l), Some(s)) => {
                    protocols::hybrid_caps(spec, t_f, trap.to_tau(l), trap.to_tau(s), nodes)?
                }
                (None, None) => {
                    let r =
                        optimize::optimize_caps_with(&spec, t_f, CapSearch { nodes, ..Default::default() })?;
                    caps = Some(r);
                    protocols::hybrid_caps(spec, t_f, r.params[0], r.params[1], nodes)?
                }
                _ => {
                    return Err(Error::Config("give both --tau-l and --tau-s, or neither to optimise".into()))
                }
            }
        }
        FamilyArg::BangBang => match (sh.omega1, sh.omega2) {
            (Some(w1), Some(w2)) => protocols::bang_bang_pair(spec, w1, w2, nodes)?,
            (None, None) => protocols::bang_bang_symmetric(
                spec,
                need(tau, "bang-bang without --omega1/--omega2")?,
                nodes,
            )?,
            _ => return Err(Error::Config("give both --omega1 and --omega2, or neither".into())),
        },
        FamilyArg::BangBangNa => match sh.beta {
            Some(beta) => protocols::bang_bang_na(spec, beta, nodes)?,
            None => {
                protocols::bang_bang_na_for_duration(spec, need(tau, "bang-bang-na without --beta")?, nodes)?
            }
        },
    };
    Ok(Resolved { trap, protocol, caps })
}

fn trap_comments(table: &mut Table, trap: &Trap) {
    let s = &trap.spec;
    if trap.si {
        table.comment(format!(
            "trap: omega0 = 2pi*{} rad/s, omega_f = 2pi*{} rad/s, gamma = {}, n = {}",
            g12(s.omega0() / (2.0 * PI)),
            g12(s.omega_f() / (2.0 * PI)),
            g12(s.gamma()),
            s.n()
        ));
    } else {
        table.comment(format!("trap: dimensionless, gamma = {}, n = {}", g12(s.gamma()), s.n()));
    }
}

fn protocol_comments(table: &mut Table, r: &Resolved) {
    let p = &r.protocol;
    let trap = &r.trap;
    table.comment(format!("family: {}", p.family));
    trap_comments(table, trap);
    table.comment(format!(
        "t_f = {} {} (omega0 t_f = {})",
        g12(trap.from_tau(p.t_f())),
        trap.time_unit(),
        g12(p.t_f())
    ));
    match p.family {
        Family::Septic { c3, c4 } => table.comment(format!("c3 = {}, c4 = {}", g12(c3), g12(c4))),
        Family::HybridCaps { tau_l, tau_s } => table.comment(format!(
            "tau_l = {}, tau_s = {} {}{}",
            g12(trap.from_tau(tau_l)),
            g12(trap.from_tau(tau_s)),
            trap.time_unit(),
            if r.caps.is_some() { " (optimised)" } else { "" }
        )),
        Family::BangBang { omega1, omega2 } => {
            table.comment(format!("omega1 = {} omega0, omega2 = {} omega0", g12(omega1), g12(omega2)))
        }
        Family::BangBangNa { beta } => table.comment(format!("beta = {} (omega2 = beta omega0)", g12(beta))),
        _ => {}
    }
    if let Some((t1, t2)) = p.switching {
        table.comment(format!(
            "switching: t1 = {}, t2 = {} {}",
            g12(trap.from_tau(t1)),
            g12(trap.from_tau(t2)),
            trap.time_unit()
        ));
    }
    if let Some(s) = &p.shoot {
        table.comment(format!(
            "terminal mismatch: b - gamma = {}, bdot = {}, bddot = {}, converged = {}",
            g12(s.b_error),
            g12(s.bdot_final),
            g12(s.bddot_final),
            s.converged
        ));
    }
}

fn emit<W: Write>(table: &Table, path: Option<&Path>, out: &mut W) -> Result<()> {
    match path {
        Some(p) => fs::write(p, table.render()).map_err(io_error),
        None => out.write_all(table.render().as_bytes()).map_err(io_error),
    }
}

/// Samples of `b`, its derivatives and `omega^2`, in SI units for an SI trap.
pub fn protocol_table(r: &Resolved) -> Table {
    let p = &r.protocol;
    let trap = &r.trap;
    let w0 = if trap.si { trap.spec.omega0() } else { 1.0 };
    let mut table = Table::new(&["t", "b", "bdot", "bddot", "omega2", "imaginary"]);
    protocol_comments(&mut table, r);
    if trap.si {
        table.comment("units: t [s], bdot [1/s], bddot [1/s^2], omega2 [rad^2/s^2], impulse strength [1/s]");
    } else {
        table.comment("units: t [1/omega0], bdot [omega0], bddot [omega0^2], omega2 [omega0^2], impulse strength [omega0]");
    }
    table.comment("repeated t marks a segment joint (left and right limits)");
    for imp in &p.profile.impulses {
        table.comment(format!(
            "impulse t={} strength={}",
            g12(trap.from_tau(imp.time)),
            g12(imp.strength * w0)
        ));
    }
    let c = &p.curve;
    for (i, &t) in c.grid.nodes().iter().enumerate() {
        let w2 = p.profile.omega2[i];
        table.push(vec![
            g12(trap.from_tau(t)),
            g12(c.b[i]),
            g12(c.bdot[i] * w0),
            g12(c.bddot[i] * w0 * w0),
            g12(w2 * w0 * w0),
            if w2 < 0.0 { "1".into() } else { "0".into() },
        ]);
    }
    table
}

pub fn protocol<W: Write>(args: &ProtocolArgs, out: &mut W) -> Result<()> {
    let r = build_protocol(args)?;
    emit(&protocol_table(&r), args.out.as_deref(), out)
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Summary lines of the energy report (averages, checks and bounds).
pub fn energy_summary(r: &Resolved, trace: &EnergyTrace) -> Result<Vec<String>> {
    let p = &r.protocol;
    let a = &trace.averages;
    let report = bounds(&p.spec, p.t_f())?;
    let e_nl = report.e_nl.quadrature;
    let mut lines = vec![
        "energies in units of hbar omega0".to_string(),
        format!("avg_E = {}  (kinetic + potential route)", g12(a.avg_e)),
        format!("avg_E2 = {}  (partially integrated route)", g12(a.avg_e2)),
        format!("avg_K = {}, avg_V = {}", g12(a.avg_k), g12(a.avg_v)),
        format!("impulse energy = {}", g12(a.impulse_energy)),
        format!("delta_delta = {}, delta_boundary = {}", g12(a.delta_delta), g12(a.delta_boundary)),
        format!("E(0) = {}, E(t_f) = {}", g12(trace.e_initial), g12(trace.e_final)),
    ];
    let dev = a.virial_deviation();
    if p.meets_boundary_conditions() {
        lines.push(format!(
            "virial: K/V = {}, |K-V|/E = {} (tol {}) {}",
            g12(a.virial_ratio()),
            g12(dev),
            g12(CHECK_TOL),
            pass(dev < CHECK_TOL)
        ));
        lines.push(format!(
            "bound: avg_E >= E_nL = {} {}",
            g12(e_nl),
            pass(a.avg_e >= e_nl * (1.0 - CHECK_TOL))
        ));
    } else {
        lines.push(format!(
            "virial: K/V = {}, |K-V|/E = {} SKIPPED (boundary conditions unmet)",
            g12(a.virial_ratio()),
            g12(dev)
        ));
        lines.push(format!(
            "boundary term: avg_E - avg_E2 = {}, delta_boundary = {}",
            g12(a.avg_e - a.avg_e2),
            g12(a.delta_boundary)
        ));
        lines.push(format!("bound: E_nL = {} SKIPPED (boundary conditions unmet)", g12(e_nl)));
    }
    if p.family == Family::DiracImpulse {
        let worst = rel(a.avg_e, a.avg_e2).max(rel(a.avg_e, e_nl)).max(rel(a.avg_e2, e_nl));
        lines.push(format!(
            "equality chain: avg_E = avg_E2 = E_nL, max rel dev = {} (tol {}) {}",
            g12(worst),
            g12(CHECK_TOL),
            pass(worst < CHECK_TOL)
        ));
    }
    match &report.e_nl.closed_form {
        Some(c) => lines.push(format!(
            "E_nL closed form = {} (consistent with quadrature: {})",
            g12(*c),
            report.e_nl.closed_form_consistent
        )),
        None => lines.push("E_nL closed form undefined (arctanh argument outside (-1, 1))".into()),
    }
    lines.push(format!("E_nL small-t_f asymptote = {}", g12(report.e_nl_asymptote)));
    match &trace.nonadiabatic {
        Some(na) => {
            lines.push(format!("avg_Ena = {}, avg_Ena2 = {}", g12(na.avg_ena), g12(na.avg_ena2)));
            let min = na.ena.iter().copied().fold(f64::INFINITY, f64::min);
            lines.push(format!("min Ena = {} {}", g12(min), pass(min >= -1e-9)));
            lines.push(format!(
                "NA bound: avg_Ena >= Ena_L = {} {}",
                g12(report.ena_l),
                pass(na.avg_ena >= report.ena_l * (1.0 - CHECK_TOL))
            ));
        }
        None => lines.push(format!(
            "avg_Ena unavailable (needs n = 0, real frequencies and no impulses); Ena_L = {}",
            g12(report.ena_l)
        )),
    }
    if let Some(pw) = &trace.power {
        lines.push(format!(
            "power: integral = {}, E(t_f) - E(0) = {}, rel dev = {}",
            g12(pw.integral),
            g12(pw.energy_change),
            g12(rel(pw.integral, pw.energy_change))
        ));
        if let Some(peak) = pw.peak_rel() {
            lines.push(format!("max |P_rel| = {}", g12(peak)));
        }
    } else {
        lines.push("power undefined (Dirac impulses)".into());
    }
    lines.push(format!(
        "bang-bang extremes: t_f_max = {} {}, E_min = {}",
        g12(r.trap.from_tau(report.tf_max)),
        r.trap.time_unit(),
        g12(report.e_min)
    ));
    Ok(lines)
}

pub fn energy<W: Write>(args: &ProtocolArgs, out: &mut W) -> Result<()> {
    let r = build_protocol(args)?;
    let trace = EnergyTrace::of(&r.protocol)?;
    let summary = energy_summary(&r, &trace)?;
    let trap = &r.trap;
    let mut table = Table::new(&["t", "E", "K", "V", "Ena", "P"]);
    protocol_comments(&mut table, &r);
    table.comment(format!("units: t [{}], energies [hbar omega0], P [hbar omega0^2]", trap.time_unit()));
    for line in &summary {
        table.comment(line.clone());
    }
    let opt = |v: Option<f64>| v.map(g12).unwrap_or_default();
    for (i, &t) in trace.grid.nodes().iter().enumerate() {
        table.push(vec![
            g12(trap.from_tau(t)),
            g12(trace.e[i]),
            g12(trace.k[i]),
            g12(trace.v[i]),
            opt(trace.nonadiabatic.as_ref().map(|na| na.ena[i])),
            opt(trace.power.as_ref().map(|p| p.p[i])),
        ]);
    }
    emit(&table, args.out.as_deref(), out)?;
    if args.out.is_some() {
        for line in &summary {
            writeln!(out, "{line}").map_err(io_error)?;
        }
    }
    Ok(())
}

/// Log-spaced points from `lo` to `hi`, `per_decade` per factor of ten.
pub fn log_space(lo: f64, hi: f64, per_decade: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi >= lo && hi.is_finite()) {
        return Err(Error::Config(format!("sweep range must satisfy 0 < min <= max, got [{lo}, {hi}]")));
    }
    if per_decade == 0 {
        return Err(Error::Config("--points-per-decade must be positive".into()));
    }
    let decades = (hi / lo).log10();
    let steps = ((decades * per_decade as f64).round() as usize).max(1);
    let (a, b) = (lo.ln(), hi.ln());
    Ok((0..=steps).map(|i| (a + (b - a) * i as f64 / steps as f64).exp()).collect())
}

/// One sweep value: `avg_E` or `avg_Ena` of the family at `t_f`.
pub fn sweep_value(
    family: FamilyArg,
    quantity: Quantity,
    spec: TrapSpec,
    t_f: f64,
    nodes: usize,
) -> Result<f64> {
    let p = match family {
        FamilyArg::Quintic => protocols::quintic(spec, t_f, nodes)?,
        FamilyArg::Septic => protocols::septic(spec, t_f, 0.0, 0.0, nodes)?,
        FamilyArg::QuasiOptimal => protocols::quasi_optimal(spec, t_f, nodes)?,
        FamilyArg::Dirac => protocols::dirac_impulse(spec, t_f, nodes)?,
        FamilyArg::Linear => protocols::linear_bottom(spec, t_f, nodes)?,
        FamilyArg::ConstantPower => protocols::constant_power_shoot(spec, t_f, nodes)?,
        FamilyArg::Hybrid => {
            let r = optimize::optimize_caps_with(&spec, t_f, CapSearch { nodes, ..Default::default() })?;
            protocols::hybrid_caps(spec, t_f, r.params[0], r.params[1], nodes)?
        }
        FamilyArg::BangBang => protocols::bang_bang_symmetric(spec, t_f, nodes)?,
        FamilyArg::BangBangNa => protocols::bang_bang_na_for_duration(spec, t_f, nodes)?,
    };
    match quantity {
        Quantity::Energy => Ok(EnergyTrace::of(&p)?.averages.avg_e),
        Quantity::Nonadiabatic => Ok(nonadiabatic_energy(&p.curve, &p.profile, &p.spec)?.avg_ena),
    }
}

/// Rows of one family's sweep: value or the reason it is missing.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub t_f: f64,
    pub value: std::result::Result<f64, String>,
    pub bound: f64,
}

pub fn sweep_family(
    family: FamilyArg,
    quantity: Quantity,
    spec: TrapSpec,
    taus: &[f64],
    bound: &[f64],
    nodes: usize,
) -> Vec<SweepRow> {
    taus.par_iter()
        .zip(bound.par_iter())
        .map(|(&t_f, &b)| SweepRow {
            t_f,
            value: sweep_value(family, quantity, spec, t_f, nodes).map_err(|e| e.to_string()),
            bound: b,
        })
        .collect()
}

pub fn sweep<W: Write>(args: &SweepArgs, out: &mut W) -> Result<()> {
    let trap = Trap::resolve(&args.trap)?;
    let quantity = args.quantity.unwrap_or(match args.trap.preset {
        Some(Preset::Fig3) => Quantity::Nonadiabatic,
        _ => Quantity::Energy,
    });
    if quantity == Quantity::Nonadiabatic && trap.spec.n() != 0 {
        return Err(Error::Config("the non-adiabatic sweep is defined for n = 0 only".into()));
    }
    let range = match (args.tf_min, args.tf_max, trap.si) {
        (Some(lo), Some(hi), _) => (lo, hi),
        (lo, hi, true) => {
            let d = match quantity {
                Quantity::Energy => FIG1_RANGE,
                Quantity::Nonadiabatic => FIG3_RANGE,
            };
            (lo.unwrap_or(d.0), hi.unwrap_or(d.1))
        }
        _ => return Err(Error::Config("a dimensionless sweep needs --tf-min and --tf-max".into())),
    };
    let times = log_space(range.0, range.1, args.points_per_decade)?;
    let spec = trap.spec.reduced();
    let taus: Vec<f64> = times.iter().map(|&t| trap.to_tau(t)).collect();
    let families = match args.family {
        Some(f) => vec![f],
        None => match quantity {
            Quantity::Energy => vec![FamilyArg::Quintic, FamilyArg::BangBang],
            Quantity::Nonadiabatic => vec![FamilyArg::Hybrid, FamilyArg::Quintic, FamilyArg::BangBangNa],
        },
    };
    let bound: Vec<f64> = match quantity {
        Quantity::Energy => taus
            .par_iter()
            .map(|&t| energies::lower_bound_avg_energy(&spec, t).map(|b| b.quadrature))
            .collect::<Result<_>>()?,
        Quantity::Nonadiabatic => taus.iter().map(|&t| energies::na_lower_bound(spec.gamma(), t)).collect(),
    };
    let qname = quantity.to_possible_value().expect("named").get_name().to_string();
    fs::create_dir_all(&args.out).map_err(io_error)?;
    for family in families {
        let rows = sweep_family(family, quantity, spec, &taus, &bound, args.grid);
        let mut table = Table::new(&["tf", "tf_dimensionless", "value", "bound", "reason"]);
        table.comment(format!("sweep: {qname}, family {}", family_name(family)));
        trap_comments(&mut table, &trap);
        table.comment(format!(
            "units: tf [{}], value and bound [hbar omega0]; {} points per decade",
            trap.time_unit(),
            args.points_per_decade
        ));
        let mut feasible = 0;
        let mut below = 0;
        for (row, &t) in rows.iter().zip(&times) {
            let (value, reason) = match &row.value {
                Ok(v) => {
                    feasible += 1;
                    if *v < row.bound * (1.0 - CHECK_TOL) {
                        below += 1;
                    }
                    (g12(*v), String::new())
                }
                Err(e) => (String::new(), e.replace(',', ";")),
            };
            table.push(vec![g12(t), g12(row.t_f), value, g12(row.bound), reason]);
        }
        let path: PathBuf = args.out.join(format!("{qname}_{}.csv", family_name(family)));
        fs::write(&path, table.render()).map_err(io_error)?;
        writeln!(
            out,
            "{}: {feasible}/{} points, {below} below bound {}",
            path.display(),
            rows.len(),
            pass(below == 0)
        )
        .map_err(io_error)?;
    }
    Ok(())
}

/// Relative-power curves of the quintic and a septic on a common `s` grid.
#[derive(Debug, Clone)]
pub struct PowerComparison {
    pub s: Vec<f64>,
    pub quintic: Vec<f64>,
    pub septic: Vec<f64>,
    pub c3: f64,
    pub c4: f64,
    pub optimised: Option<OptimizationResult>,
    pub quintic_integral: f64,
    pub septic_integral: f64,
}

fn p_rel_of(p: &Protocol) -> Result<(Vec<f64>, f64)> {
    let pw = energies::power(&p.curve, &p.profile, &p.spec)?;
    let rel =
        pw.p_rel.ok_or_else(|| Error::Domain("relative power is undefined without expansion".into()))?;
    let t_f = p.t_f();
    let jumps: f64 = pw.jumps.iter().map(|j| j.energy).sum();
    let integral = p.curve.grid.integrate(&rel)? / t_f + jumps / (pw.c_n * t_f);
    Ok((rel, integral))
}

pub fn power_comparison(
    spec: TrapSpec,
    t_f: f64,
    coeffs: Option<(f64, f64)>,
    nodes: usize,
) -> Result<PowerComparison> {
    let (c3, c4, optimised) = match coeffs {
        Some((c3, c4)) => (c3, c4, None),
        None => {
            let r = optimize::optimize_septic_power(&spec, t_f)?;
            (r.params[0], r.params[1], Some(r))
        }
    };
    let q = protocols::quintic(spec, t_f, nodes)?;
    let s7 = protocols::septic(spec, t_f, c3, c4, nodes)?;
    let (quintic, quintic_integral) = p_rel_of(&q)?;
    let (septic, septic_integral) = p_rel_of(&s7)?;
    let s = q.curve.grid.nodes().iter().map(|t| t / t_f).collect();
    Ok(PowerComparison { s, quintic, septic, c3, c4, optimised, quintic_integral, septic_integral })
}

fn peak(v: &[f64]) -> f64 {
    v.iter().map(|x| x.abs()).fold(0.0, f64::max)
}

pub fn power<W: Write>(args: &PowerArgs, out: &mut W) -> Result<()> {
    let trap = Trap::resolve(&args.trap)?;
    let tau = need(resolve_tau(&trap, &args.time, preset_tf(args.trap.preset).or(Some(FIG4_TF)))?, "power")?;
    let coeffs = args.c3.zip(args.c4);
    let cmp = power_comparison(trap.spec.reduced(), tau, coeffs, args.grid)?;
    let (pq, ps) = (peak(&cmp.quintic), peak(&cmp.septic));
    let mut table = Table::new(&["s", "p_rel_quintic", "p_rel_septic"]);
    trap_comments(&mut table, &trap);
    table.comment(format!(
        "t_f = {} {} (omega0 t_f = {})",
        g12(trap.from_tau(tau)),
        trap.time_unit(),
        g12(tau)
    ));
    let summary = vec![
        format!(
            "septic: c3 = {}, c4 = {}{}",
            g12(cmp.c3),
            g12(cmp.c4),
            if cmp.optimised.is_some() { " (optimised)" } else { "" }
        ),
        format!("peak |P_rel|: quintic = {}, septic = {}", g12(pq), g12(ps)),
        format!("septic peak <= quintic peak {}", pass(ps <= pq)),
        format!("peak >= 1 {}", pass(pq >= 1.0 && ps >= 1.0)),
        format!(
            "integral of P_rel ds: quintic = {}, septic = {}",
            g12(cmp.quintic_integral),
            g12(cmp.septic_integral)
        ),
    ];
    for line in &summary {
        table.comment(line.clone());
    }
    for i in 0..cmp.s.len() {
        table.push_numbers(&[cmp.s[i], cmp.quintic[i], cmp.septic[i]]);
    }
    emit(&table, args.out.as_deref(), out)?;
    if args.out.is_some() {
        for line in &summary {
            writeln!(out, "{line}").map_err(io_error)?;
        }
    }
    Ok(())
}
