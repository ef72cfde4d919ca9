//! Built-in invariant checks run by `sta verify`.

use std::fmt::Write as _;

use super::format::g12;
use crate::curve::meets_boundary_conditions;
use crate::energies::{self, eq14_average, nonadiabatic_energy, power, EnergyTrace};
use crate::ermakov::{forward_solve, inverse_engineer};
use crate::error::{Error, Result};
use crate::numerics::{ode, quadrature};
use crate::protocols::{self, BangBangLaw, Protocol};
use crate::units::TrapSpec;

/// Reference coefficients of the power-optimised septic.
pub const REFERENCE_SEPTIC: (f64, f64) = (78.5088, -459.7638);

/// Deliberate formula breakage used to test that the checks can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// `1/b^2 - b'^2` instead of `1/b^2 + b'^2` in the partially integrated energy.
    Eq14SignFlip,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub nodes: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { nodes: crate::grid::DEFAULT_NODES, fault: None }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    /// Measured deviation; the check passes when it is at most `tolerance`.
    pub measured: f64,
    pub tolerance: f64,
    pub note: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.measured <= self.tolerance
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }

    pub fn find(&self, prefix: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name.starts_with(prefix))
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let _ = write!(
                s,
                "{} {}: measured {} (tol {})",
                if c.passed() { "PASS" } else { "FAIL" },
                c.name,
                g12(c.measured),
                g12(c.tolerance)
            );
            if let Some(n) = &c.note {
                let _ = write!(s, " [{n}]");
            }
            s.push('\n');
        }
        let _ = writeln!(s, "{} checks, {} failed", self.checks.len(), self.failures());
        s
    }

    fn add(&mut self, name: impl Into<String>, tolerance: f64, measured: Result<f64>) {
        let name = name.into();
        let check = match measured {
            Ok(m) => {
                Check { name, measured: if m.is_nan() { f64::INFINITY } else { m }, tolerance, note: None }
            }
            Err(e) => Check { name, measured: f64::INFINITY, tolerance, note: Some(e.to_string()) },
        };
        self.checks.push(check);
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// Shortfall of `value` below `bound`, relative to the bound (0 when above).
fn shortfall(value: f64, bound: f64) -> f64 {
    ((bound - value) / bound.abs()).max(0.0)
}

struct Ctx {
    nodes: usize,
    fault: Option<Fault>,
}

impl Ctx {
    fn kinetic_sign(&self) -> f64 {
        match self.fault {
            Some(Fault::Eq14SignFlip) => -1.0,
            None => 1.0,
        }
    }

    /// `max(|K - V|, |E2/2 - V|) / E`: both halves of the virial relation.
    fn virial(&self, p: &Protocol) -> Result<f64> {
        let trace = EnergyTrace::of(p)?;
        let a = trace.averages;
        let e2 = eq14_average(&p.curve, &p.spec, self.kinetic_sign())?;
        Ok((a.avg_k - a.avg_v).abs().max((0.5 * e2 - a.avg_v).abs()) / a.avg_e.abs())
    }

    /// Pairwise spread of the Dirac-impulse equality chain.
    fn equality_chain(&self, spec: TrapSpec, t_f: f64) -> Result<f64> {
        let p = protocols::dirac_impulse(spec, t_f, self.nodes)?;
        let a = EnergyTrace::of(&p)?.averages;
        let e2 = eq14_average(&p.curve, &p.spec, self.kinetic_sign())?;
        let bound = energies::lower_bound_avg_energy(&spec, t_f)?.quadrature;
        Ok(rel(a.avg_e, e2).max(rel(a.avg_e, bound)).max(rel(e2, bound)))
    }
}

/// RK4 on `y' = -y` over `[0, 1]`: error ratio between `n` and `2n - 1` nodes.
pub fn rk4_order_ratio(n: usize) -> Result<f64> {
    let err = |n: usize| -> Result<f64> {
        let nodes: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
        let ys = ode::solve(|_, y: &[f64; 1]| [-y[0]], [1.0], &nodes)?;
        Ok((ys[n - 1][0] - (-1.0f64).exp()).abs())
    };
    Ok(err(n)? / err(2 * n - 1)?)
}

pub fn run(opts: &VerifyOptions) -> VerifyReport {
    let ctx = Ctx { nodes: opts.nodes, fault: opts.fault };
    let n = opts.nodes;
    let mut r = VerifyReport::default();
    let g10 = TrapSpec::dimensionless(10.0, 0).expect("valid trap");
    let g100 = TrapSpec::dimensionless(100.0, 0).expect("valid trap");

    // numerical kernels
    r.add(
        "simpson t^3 on [0,1]",
        1e-14,
        quadrature::simpson_fn(|t| t * t * t, 0.0, 1.0, n).map(|v| (v - 0.25).abs()),
    );
    r.add(
        "simpson sin on [0,pi]",
        1e-10,
        quadrature::simpson_fn(f64::sin, 0.0, std::f64::consts::PI, n).map(|v| (v - 2.0).abs()),
    );
    // fixed coarse grids: the error must sit well above round-off to show the order
    r.add("rk4 order-4 error ratio |ratio - 16|", 2.0, rk4_order_ratio(21).map(|q| (q - 16.0).abs()));
    r.add("unit round trip", 1e-14, {
        let si = TrapSpec::from_hz(2500.0, 25.0, 0).expect("valid trap");
        let t = 1.234e-3;
        Ok(rel(si.from_dimensionless(si.to_dimensionless(t)), t))
    });

    // virial theorem
    for &t_f in &[0.1, 1.0, 10.0, 25.0] {
        let builds: Vec<(&str, Result<Protocol>)> = vec![
            ("quintic", protocols::quintic(g10, t_f, n)),
            ("septic(0,0)", protocols::septic(g10, t_f, 0.0, 0.0, n)),
            ("septic(reference)", protocols::septic(g10, t_f, REFERENCE_SEPTIC.0, REFERENCE_SEPTIC.1, n)),
            ("hybrid(0.1 t_f)", protocols::hybrid_caps(g10, t_f, 0.1 * t_f, 0.1 * t_f, n)),
            ("dirac", protocols::dirac_impulse(g10, t_f, n)),
        ];
        for (name, p) in builds {
            r.add(format!("virial {name} t_f={t_f}"), 1e-6, p.and_then(|p| ctx.virial(&p)));
        }
    }
    r.add(
        "virial bang-bang(1,1)",
        1e-6,
        protocols::bang_bang_pair(g10, 1.0, 1.0, n).and_then(|p| ctx.virial(&p)),
    );

    // Dirac-impulse accounting
    for &t_f in &[0.3, 1.0, 3.0] {
        r.add(format!("equality chain t_f={t_f}"), 1e-6, ctx.equality_chain(g10, t_f));
    }
    r.add("delta_delta = -delta_boundary", 1e-15, {
        protocols::dirac_impulse(g10, 1.0, n).map(|p| {
            let (d, b) = energies::impulse_contribution(&p.curve, &p.spec);
            (d + b).abs()
        })
    });
    r.add("delta_delta / avg_E -> 1/2 (gamma=100, t_f=1e-3)", 0.01, {
        protocols::dirac_impulse(g100, 1e-3, n).and_then(|p| {
            let a = EnergyTrace::of(&p)?.averages;
            Ok((a.delta_delta / a.avg_e - 0.5).abs())
        })
    });
    r.add("E_nL small-t_f asymptote (gamma=100, t_f=1e-3)", 0.02, {
        energies::bounds(&g100, 1e-3).map(|b| (b.e_nl.quadrature / b.e_nl_asymptote - 1.0).abs())
    });

    // boundary conditions, round trip, bounds
    r.add("quintic boundary conditions", 1e-12, {
        protocols::quintic(g10, 25.0, n).map(|p| {
            if meets_boundary_conditions(&p.curve, &p.profile, 10.0, 1e-12) {
                0.0
            } else {
                f64::INFINITY
            }
        })
    });
    r.add("ermakov round trip (quintic t_f=25)", 1e-6, {
        protocols::quintic(g10, 25.0, n).and_then(|p| {
            let profile = inverse_engineer(&p.curve)?;
            let back = forward_solve(&profile, 1.0, 0.0)?;
            Ok(back.b.iter().zip(&p.curve.b).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
        })
    });
    for &t_f in &[0.1, 1.0, 10.0] {
        r.add(format!("avg_E >= E_nL quintic t_f={t_f}"), 1e-6, {
            protocols::quintic(g10, t_f, n).and_then(|p| {
                let e = EnergyTrace::of(&p)?.averages.avg_e;
                Ok(shortfall(e, energies::lower_bound_avg_energy(&g10, t_f)?.quadrature))
            })
        });
    }
    r.add("power integral = E(t_f) - E(0) (quintic t_f=25)", 1e-6, {
        protocols::quintic(g10, 25.0, n).and_then(|p| {
            let pw = power(&p.curve, &p.profile, &p.spec)?;
            Ok(rel(pw.integral, -0.495))
        })
    });
    r.add("Ena >= 0 and Ena(t_f) = 0 (hybrid t_f=1000)", 1e-9, {
        protocols::hybrid_caps(g10, 1000.0, 250.0, 250.0, n).and_then(|p| {
            let na = nonadiabatic_energy(&p.curve, &p.profile, &p.spec)?;
            let min = na.ena.iter().copied().fold(f64::INFINITY, f64::min);
            Ok((-min).max(0.0).max(na.ena_initial.abs()).max(na.ena_final.abs()))
        })
    });
    r.add("avg_Ena >= Ena_L (hybrid t_f=1000)", 1e-6, {
        protocols::hybrid_caps(g10, 1000.0, 250.0, 250.0, n).and_then(|p| {
            let na = nonadiabatic_energy(&p.curve, &p.profile, &p.spec)?;
            Ok(shortfall(na.avg_ena, energies::na_lower_bound(10.0, 1000.0)))
        })
    });
    r.add("mean-value bounds (quintic t_f=1)", 0.0, {
        protocols::quintic(g10, 1.0, n).map(|p| {
            let ok = p.curve.max_bdot() >= 9.0 && p.curve.max_abs_bddot() >= 18.0;
            if ok {
                0.0
            } else {
                1.0
            }
        })
    });

    // bang-bang
    r.add("bang-bang t_f_max = 5 pi", 1e-9, {
        BangBangLaw::new(10.0, 1.0, 0.1).map(|l| (l.t_f() - 5.0 * std::f64::consts::PI).abs().max(l.t1))
    });
    r.add("bang-bang E_min = 0.2525", 1e-12, {
        BangBangLaw::new(10.0, 1.0, 0.1)
            .map(|l| (energies::bang_bang_energies(&g10, &l).avg_e - 0.2525).abs())
    });
    r.add("free-expansion matching (gamma=10, beta=1)", 1e-8, {
        protocols::bang_bang_na(g10, 1.0, n).and_then(|p| {
            let (t1, _) = p.switching.ok_or_else(|| Error::Domain("no switching times".into()))?;
            Ok((t1 - 9.9).abs().max((p.curve.b_final() - 10.0).abs()).max(p.curve.bf_minus_dot.abs()))
        })
    });

    r
}
