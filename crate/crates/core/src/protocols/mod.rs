//! Protocol constructors: a scaling function together with its frequency
//! schedule.

pub mod bang_bang;
pub mod constant_power;
pub mod hybrid;
pub mod polynomial;
pub mod quasi_optimal;
pub mod shapes;

use std::fmt;
use std::sync::Arc;

use crate::curve::{FrequencyProfile, Impulse, Omega2Law, ScalingCurve, ScalingLaw};
use crate::ermakov::inverse_engineer;
use crate::error::{invalid, Error, Result};
use crate::grid::TimeGrid;
use crate::units::TrapSpec;

pub use bang_bang::BangBangLaw;
pub use constant_power::ShootReport;
pub use hybrid::{HybridLaw, LinearLaw};
pub use polynomial::PolyLaw;
pub use quasi_optimal::QuasiOptimalLaw;

/// Protocol family and its free parameters. Frequencies are in units of
/// `omega0`, durations in units of `1/omega0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Quintic,
    Septic {
        c3: f64,
        c4: f64,
    },
    QuasiOptimal,
    DiracImpulse,
    HybridCaps {
        tau_l: f64,
        tau_s: f64,
    },
    LinearBottom,
    /// Duration follows from the two frequencies; the requested `t_f` is ignored.
    BangBang {
        omega1: f64,
        omega2: f64,
    },
    /// `omega1 = omega2` solved for the requested `t_f`.
    BangBangSymmetric,
    /// `omega1 = 0`, `omega2 = beta`; duration follows from `beta`.
    BangBangNa {
        beta: f64,
    },
    ConstantPowerShoot,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Quintic => "quintic",
            Self::Septic { .. } => "septic",
            Self::QuasiOptimal => "quasi-optimal",
            Self::DiracImpulse => "dirac",
            Self::HybridCaps { .. } => "hybrid",
            Self::LinearBottom => "linear",
            Self::BangBang { .. } => "bang-bang",
            Self::BangBangSymmetric => "bang-bang-symmetric",
            Self::BangBangNa { .. } => "bang-bang-na",
            Self::ConstantPowerShoot => "constant-power",
        }
    }

    /// Whether the family imposes `b(0)=1, b'(0-)=0, b(t_f)=gamma, b'(t_f+)=0`.
    pub fn meets_boundary_conditions(&self) -> bool {
        !matches!(self, Self::QuasiOptimal | Self::LinearBottom | Self::ConstantPowerShoot)
    }

    /// Whether `b''` also vanishes at both ends (continuous frequency there).
    pub fn smooth_ends(&self) -> bool {
        matches!(self, Self::Quintic | Self::Septic { .. })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProtocolParams {
    pub family: Family,
    /// Dimensionless duration `omega0 t_f`.
    pub t_f: f64,
    pub spec: TrapSpec,
}

/// A scaling curve with the frequency schedule that produces it.
#[derive(Debug, Clone)]
pub struct Protocol {
    pub family: Family,
    /// Trap in reduced units (`omega0 = 1`, `hbar = 1`).
    pub spec: TrapSpec,
    pub curve: ScalingCurve,
    pub profile: FrequencyProfile,
    /// Bang-bang switching durations `(t1, t2)`.
    pub switching: Option<(f64, f64)>,
    /// Terminal mismatch of the constant-power trajectory.
    pub shoot: Option<ShootReport>,
}

impl Protocol {
    pub fn build(params: &ProtocolParams, nodes: usize) -> Result<Self> {
        let spec = params.spec.reduced();
        let gamma = spec.gamma();
        let t_f = params.t_f;
        if !matches!(params.family, Family::BangBang { .. } | Family::BangBangNa { .. })
            && !(t_f > 0.0 && t_f.is_finite())
        {
            return Err(invalid("t_f", format!("must be positive and finite, got {t_f}")));
        }
        match params.family {
            Family::Quintic => quintic(spec, t_f, nodes),
            Family::Septic { c3, c4 } => septic(spec, t_f, c3, c4, nodes),
            Family::QuasiOptimal => quasi_optimal(spec, t_f, nodes),
            Family::DiracImpulse => dirac_impulse(spec, t_f, nodes),
            Family::HybridCaps { tau_l, tau_s } => hybrid_caps(spec, t_f, tau_l, tau_s, nodes),
            Family::LinearBottom => linear_bottom(spec, t_f, nodes),
            Family::BangBang { omega1, omega2 } => {
                bang_bang(spec, BangBangLaw::new(gamma, omega1, omega2)?, params.family, nodes)
            }
            Family::BangBangSymmetric => {
                bang_bang(spec, BangBangLaw::symmetric_for_duration(gamma, t_f)?, params.family, nodes)
            }
            Family::BangBangNa { beta } => bang_bang_na(spec, beta, nodes),
            Family::ConstantPowerShoot => constant_power_shoot(spec, t_f, nodes),
        }
    }

    pub fn t_f(&self) -> f64 {
        self.curve.t_f()
    }

    pub fn gamma(&self) -> f64 {
        self.spec.gamma()
    }

    pub fn has_impulses(&self) -> bool {
        !self.profile.impulses.is_empty()
    }

    /// Whether the boundary conditions hold for this family by construction.
    pub fn meets_boundary_conditions(&self) -> bool {
        self.family.meets_boundary_conditions()
    }
}

fn end_frequencies(spec: &TrapSpec) -> (f64, f64) {
    (1.0, spec.omega_f_rel().powi(2))
}

fn from_law(spec: TrapSpec, family: Family, law: Arc<dyn ScalingLaw>, nodes: usize) -> Result<Protocol> {
    let curve = ScalingCurve::from_law(law, nodes)?;
    let mut profile = inverse_engineer(&curve)?;
    let (w0, wf) = end_frequencies(&spec);
    profile.omega2_initial = w0;
    profile.omega2_final = wf;
    Ok(Protocol { family, spec, curve, profile, switching: None, shoot: None })
}

pub fn quintic(spec: TrapSpec, t_f: f64, nodes: usize) -> Result<Protocol> {
    let law = Arc::new(PolyLaw::quintic(spec.gamma(), t_f));
    from_law(spec, Family::Quintic, law, nodes)
}

pub fn septic(spec: TrapSpec, t_f: f64, c3: f64, c4: f64, nodes: usize) -> Result<Protocol> {
    let law = Arc::new(PolyLaw::septic(spec.gamma(), t_f, c3, c4));
    from_law(spec, Family::Septic { c3, c4 }, law, nodes)
}

/// The quasi-optimal curve with its smooth frequency only. Its end velocities
/// are nonzero; see [`dirac_impulse`] for the version with kicks.
pub fn quasi_optimal(spec: TrapSpec, t_f: f64, nodes: usize) -> Result<Protocol> {
    let law = QuasiOptimalLaw::new(spec.gamma(), t_f);
    guard_radicand(&law)?;
    from_law(spec, Family::QuasiOptimal, Arc::new(law), nodes)
}

fn guard_radicand(law: &QuasiOptimalLaw) -> Result<()> {
    // the radicand is quadratic in s; check its minimum on [0, 1]
    let a = law.curvature();
    let mut worst = law.radicand(0.0).min(law.radicand(1.0));
    if a > 0.0 {
        let s = -law.big_b() / a;
        if (0.0..=1.0).contains(&s) {
            worst = worst.min(law.radicand(s));
        }
    }
    if !(worst > 0.0) {
        return Err(Error::Domain(format!("quasi-optimal radicand reaches {worst}")));
    }
    Ok(())
}

/// Quasi-optimal curve plus impulses `D0 = -b'(0+)/b(0)` at `t = 0` and
/// `Df = b'(t_f-)/b(t_f)` at `t = t_f` that supply the missing velocity conditions.
pub fn dirac_impulse(spec: TrapSpec, t_f: f64, nodes: usize) -> Result<Protocol> {
    let mut p = quasi_optimal(spec, t_f, nodes)?;
    let (d0, df) = impulse_strengths(&p.curve);
    p.profile.impulses = vec![Impulse { time: 0.0, strength: d0 }, Impulse { time: t_f, strength: df }];
    p.family = Family::DiracImpulse;
    Ok(p)
}

/// `(D0, Df)` for a curve with nonzero end velocities.
pub fn impulse_strengths(curve: &ScalingCurve) -> (f64, f64) {
    (-curve.b0_plus_dot / curve.b_initial(), curve.bf_minus_dot / curve.b_final())
}

pub fn hybrid_caps(spec: TrapSpec, t_f: f64, tau_l: f64, tau_s: f64, nodes: usize) -> Result<Protocol> {
    let law = Arc::new(HybridLaw::new(spec.gamma(), t_f, tau_l, tau_s)?);
    from_law(spec, Family::HybridCaps { tau_l, tau_s }, law, nodes)
}

/// Linear `b` with the bottom-tracking frequency `omega = 1/b^2`.
pub fn linear_bottom(spec: TrapSpec, t_f: f64, nodes: usize) -> Result<Protocol> {
    let law: Arc<dyn ScalingLaw> = Arc::new(LinearLaw { gamma: spec.gamma(), t_f });
    let curve = ScalingCurve::from_law(law.clone(), nodes)?;
    let (w0, wf) = end_frequencies(&spec);
    let laws = vec![Omega2Law::BottomTracking(law)];
    let profile = FrequencyProfile::new(curve.grid.clone(), laws, Vec::new(), w0, wf)?;
    Ok(Protocol { family: Family::LinearBottom, spec, curve, profile, switching: None, shoot: None })
}

fn bang_bang(spec: TrapSpec, law: BangBangLaw, family: Family, nodes: usize) -> Result<Protocol> {
    let arc: Arc<dyn ScalingLaw> = Arc::new(law);
    let curve = ScalingCurve::from_law(arc, nodes)?;
    let laws = law.piece_omega2().into_iter().map(Omega2Law::Constant).collect();
    let (w0, wf) = end_frequencies(&spec);
    let profile = FrequencyProfile::new(curve.grid.clone(), laws, Vec::new(), w0, wf)?;
    Ok(Protocol { family, spec, curve, profile, switching: Some((law.t1, law.t2)), shoot: None })
}

/// General bang-bang from `(omega1, omega2)`.
pub fn bang_bang_pair(spec: TrapSpec, omega1: f64, omega2: f64, nodes: usize) -> Result<Protocol> {
    let law = BangBangLaw::new(spec.gamma(), omega1, omega2)?;
    bang_bang(spec, law, Family::BangBang { omega1, omega2 }, nodes)
}

/// Bang-bang with `omega1 = omega2` and total duration `t_f`.
pub fn bang_bang_symmetric(spec: TrapSpec, t_f: f64, nodes: usize) -> Result<Protocol> {
    let law = BangBangLaw::symmetric_for_duration(spec.gamma(), t_f)?;
    bang_bang(spec, law, Family::BangBangSymmetric, nodes)
}

/// Free expansion followed by `omega = beta`; all frequencies are real.
pub fn bang_bang_na(spec: TrapSpec, beta: f64, nodes: usize) -> Result<Protocol> {
    let law = BangBangLaw::free_expansion(spec.gamma(), beta)?;
    bang_bang(spec, law, Family::BangBangNa { beta }, nodes)
}

/// Free-expansion bang-bang whose duration is `t_f`.
pub fn bang_bang_na_for_duration(spec: TrapSpec, t_f: f64, nodes: usize) -> Result<Protocol> {
    let law = BangBangLaw::free_expansion_for_duration(spec.gamma(), t_f)?;
    bang_bang(spec, law, Family::BangBangNa { beta: law.omega2 }, nodes)
}

pub fn constant_power_shoot(spec: TrapSpec, t_f: f64, nodes: usize) -> Result<Protocol> {
    let gamma = spec.gamma();
    let shot = constant_power::shoot(gamma, t_f, nodes)?;
    let c = constant_power::source(gamma, t_f);
    let omega2: Vec<f64> = shot.b.iter().zip(&shot.bddot).map(|(b, bdd)| 1.0 / b.powi(4) - bdd / b).collect();
    // along the trajectory d(omega^2)/dt = -c / b^2 by construction
    let rates = shot.b.iter().map(|b| -c / (b * b)).collect();
    let grid: TimeGrid = shot.grid.clone();
    let curve = ScalingCurve::from_states(
        shot.grid,
        shot.b,
        shot.bdot,
        shot.bddot,
        Some(shot.bdddot),
        "constant-power",
    )?;
    let laws = vec![Omega2Law::Sampled { nodes: grid.nodes().to_vec(), values: omega2, rates: Some(rates) }];
    let (w0, wf) = end_frequencies(&spec);
    let profile = FrequencyProfile::new(grid, laws, Vec::new(), w0, wf)?;
    Ok(Protocol {
        family: Family::ConstantPowerShoot,
        spec,
        curve,
        profile,
        switching: None,
        shoot: Some(shot.report),
    })
}
