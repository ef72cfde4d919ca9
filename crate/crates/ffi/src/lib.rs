//! C interface to `sta-core`.
//!
//! Every entry point returns a [`StaStatus`]. On failure the message is kept
//! per thread and can be read with [`sta_last_error`]. Protocols are opaque
//! handles owned by the caller and released with [`sta_protocol_free`].
//! All quantities are dimensionless (time in `1/omega0`, energy in
//! `hbar omega0`).

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sta_core::energies::{self, EnergyTrace};
use sta_core::optimize;
use sta_core::{Error, Family, Protocol, ProtocolParams, TrapSpec};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidTrap = 3,
    NonPositiveWidth = 4,
    NonRealFrequency = 5,
    PowerUndefined = 6,
    NonFinite = 7,
    Collapse = 8,
    Domain = 9,
    Infeasible = 10,
    BufferTooSmall = 11,
    Panic = 12,
    Internal = 13,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StaFamily {
    Quintic = 0,
    /// `param_a = c3`, `param_b = c4`.
    Septic = 1,
    QuasiOptimal = 2,
    DiracImpulse = 3,
    /// `param_a = tau_l`, `param_b = tau_s`.
    HybridCaps = 4,
    LinearBottom = 5,
    /// `param_a = omega1`, `param_b = omega2`; `t_f` is ignored.
    BangBang = 6,
    BangBangSymmetric = 7,
    /// `param_a = beta`; `t_f` is ignored.
    BangBangNa = 8,
    ConstantPower = 9,
}

/// Sampled series of a protocol.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StaSeries {
    Time = 0,
    B = 1,
    Bdot = 2,
    Bddot = 3,
    Omega2 = 4,
    Energy = 5,
    Kinetic = 6,
    Potential = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct StaProtocolSpec {
    pub gamma: f64,
    pub n: u32,
    pub family: StaFamily,
    pub t_f: f64,
    pub param_a: f64,
    pub param_b: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct StaImpulse {
    pub time: f64,
    pub strength: f64,
}

/// Time averages of one protocol. Entries that do not apply are NaN.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct StaEnergySummary {
    pub avg_e: f64,
    pub avg_k: f64,
    pub avg_v: f64,
    pub avg_e2: f64,
    pub delta_delta: f64,
    pub delta_boundary: f64,
    pub impulse_energy: f64,
    pub e_initial: f64,
    pub e_final: f64,
    pub avg_ena: f64,
    pub power_integral: f64,
    pub peak_rel_power: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct StaBounds {
    pub e_nl: f64,
    /// NaN outside the domain of the closed form.
    pub e_nl_closed_form: f64,
    pub ena_l: f64,
    pub tf_max: f64,
    pub e_min: f64,
    pub e_nl_asymptote: f64,
    pub ena_l_asymptote: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct StaCapResult {
    pub tau_l: f64,
    pub tau_s: f64,
    pub avg_ena: f64,
    pub feasible: bool,
    pub converged: bool,
}

/// Opaque protocol handle.
pub struct StaProtocol {
    protocol: Protocol,
    trace: Option<EnergyTrace>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> StaStatus {
    match err {
        Error::InvalidTrap(_) => StaStatus::InvalidTrap,
        Error::InvalidParameter { .. } | Error::Config(_) => StaStatus::InvalidArgument,
        Error::LengthMismatch { .. } | Error::GridMismatch => StaStatus::Internal,
        Error::NonPositiveWidth { .. } => StaStatus::NonPositiveWidth,
        Error::NonRealFrequency { .. } => StaStatus::NonRealFrequency,
        Error::PowerUndefined => StaStatus::PowerUndefined,
        Error::NonFinite { .. } => StaStatus::NonFinite,
        Error::Collapse { .. } => StaStatus::Collapse,
        Error::Domain(_) => StaStatus::Domain,
        Error::Infeasible(_) => StaStatus::Infeasible,
    }
}

struct Fail(StaStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> StaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => StaStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside sta-core");
            StaStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(StaStatus::NullPointer, format!("`{what}` is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

fn family(spec: &StaProtocolSpec) -> Family {
    let (a, b) = (spec.param_a, spec.param_b);
    match spec.family {
        StaFamily::Quintic => Family::Quintic,
        StaFamily::Septic => Family::Septic { c3: a, c4: b },
        StaFamily::QuasiOptimal => Family::QuasiOptimal,
        StaFamily::DiracImpulse => Family::DiracImpulse,
        StaFamily::HybridCaps => Family::HybridCaps { tau_l: a, tau_s: b },
        StaFamily::LinearBottom => Family::LinearBottom,
        StaFamily::BangBang => Family::BangBang { omega1: a, omega2: b },
        StaFamily::BangBangSymmetric => Family::BangBangSymmetric,
        StaFamily::BangBangNa => Family::BangBangNa { beta: a },
        StaFamily::ConstantPower => Family::ConstantPowerShoot,
    }
}

impl StaProtocol {
    fn trace(&mut self) -> Result<&EnergyTrace, Fail> {
        if self.trace.is_none() {
            self.trace = Some(EnergyTrace::of(&self.protocol)?);
        }
        Ok(self.trace.as_ref().expect("trace was just set"))
    }
}

/// Message of the last failed call on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sta_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn sta_status_name(status: StaStatus) -> *const c_char {
    let name: &'static CStr = match status {
        StaStatus::Ok => c"ok",
        StaStatus::NullPointer => c"null pointer",
        StaStatus::InvalidArgument => c"invalid argument",
        StaStatus::InvalidTrap => c"invalid trap",
        StaStatus::NonPositiveWidth => c"non-positive width",
        StaStatus::NonRealFrequency => c"non-real frequency",
        StaStatus::PowerUndefined => c"power undefined",
        StaStatus::NonFinite => c"non-finite value",
        StaStatus::Collapse => c"collapse",
        StaStatus::Domain => c"domain error",
        StaStatus::Infeasible => c"infeasible",
        StaStatus::BufferTooSmall => c"buffer too small",
        StaStatus::Panic => c"panic",
        StaStatus::Internal => c"internal error",
    };
    name.as_ptr()
}

/// Builds a protocol sampled on `nodes` points.
///
/// # Safety
/// `spec` must point to a valid `StaProtocolSpec` and `out` to writable
/// storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn sta_protocol_new(
    spec: *const StaProtocolSpec,
    nodes: usize,
    out_handle: *mut *mut StaProtocol,
) -> StaStatus {
    guard(|| {
        let spec = deref(spec, "spec")?;
        let slot = out(out_handle, "out_handle")?;
        *slot = ptr::null_mut();
        let params = ProtocolParams {
            family: family(spec),
            t_f: spec.t_f,
            spec: TrapSpec::dimensionless(spec.gamma, spec.n)?,
        };
        let protocol = Protocol::build(&params, nodes)?;
        *slot = Box::into_raw(Box::new(StaProtocol { protocol, trace: None }));
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `handle` must come from [`sta_protocol_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sta_protocol_free(handle: *mut StaProtocol) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of samples and the duration of the protocol.
///
/// # Safety
/// `handle` must be a live handle; the output pointers may be NULL.
#[no_mangle]
pub unsafe extern "C" fn sta_protocol_info(
    handle: *const StaProtocol,
    len: *mut usize,
    t_f: *mut f64,
) -> StaStatus {
    guard(|| {
        let h = deref(handle, "handle")?;
        if let Some(len) = len.as_mut() {
            *len = h.protocol.curve.grid.len();
        }
        if let Some(t_f) = t_f.as_mut() {
            *t_f = h.protocol.t_f();
        }
        Ok(())
    })
}

/// Copies one series into `buf`, which must hold the full sample count.
///
/// # Safety
/// `handle` must be live and `buf` must point to `cap` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn sta_protocol_series(
    handle: *mut StaProtocol,
    series: StaSeries,
    buf: *mut f64,
    cap: usize,
) -> StaStatus {
    guard(|| {
        let h = out(handle, "handle")?;
        if buf.is_null() {
            return Err(null("buf"));
        }
        let p = &h.protocol;
        let len = p.curve.grid.len();
        if cap < len {
            return Err(Fail(StaStatus::BufferTooSmall, format!("need {len} values, got {cap}")));
        }
        let src: &[f64] = match series {
            StaSeries::Time => p.curve.grid.nodes(),
            StaSeries::B => &p.curve.b,
            StaSeries::Bdot => &p.curve.bdot,
            StaSeries::Bddot => &p.curve.bddot,
            StaSeries::Omega2 => &p.profile.omega2,
            StaSeries::Energy => &h.trace()?.e,
            StaSeries::Kinetic => &h.trace()?.k,
            StaSeries::Potential => &h.trace()?.v,
        };
        ptr::copy_nonoverlapping(src.as_ptr(), buf, len);
        Ok(())
    })
}

/// Copies the Dirac impulses. `count` always receives the number of
/// impulses; with a NULL `buf` nothing else is written.
///
/// # Safety
/// `handle` must be live, `count` writable and `buf` NULL or valid for `cap`
/// elements.
#[no_mangle]
pub unsafe extern "C" fn sta_protocol_impulses(
    handle: *const StaProtocol,
    buf: *mut StaImpulse,
    cap: usize,
    count: *mut usize,
) -> StaStatus {
    guard(|| {
        let h = deref(handle, "handle")?;
        let count = out(count, "count")?;
        let imps = &h.protocol.profile.impulses;
        *count = imps.len();
        if buf.is_null() {
            return Ok(());
        }
        if cap < imps.len() {
            return Err(Fail(StaStatus::BufferTooSmall, format!("need {} impulses, got {cap}", imps.len())));
        }
        for (i, d) in imps.iter().enumerate() {
            *buf.add(i) = StaImpulse { time: d.time, strength: d.strength };
        }
        Ok(())
    })
}

/// Time averages, boundary energies and, where defined, the non-adiabatic
/// average and power integral.
///
/// # Safety
/// `handle` must be live and `summary` writable.
#[no_mangle]
pub unsafe extern "C" fn sta_energy_summary(
    handle: *mut StaProtocol,
    summary: *mut StaEnergySummary,
) -> StaStatus {
    guard(|| {
        let h = out(handle, "handle")?;
        let summary = out(summary, "summary")?;
        let t = h.trace()?;
        let a = &t.averages;
        let (power_integral, peak) =
            t.power.as_ref().map_or((f64::NAN, f64::NAN), |p| (p.integral, p.peak_rel().unwrap_or(f64::NAN)));
        *summary = StaEnergySummary {
            avg_e: a.avg_e,
            avg_k: a.avg_k,
            avg_v: a.avg_v,
            avg_e2: a.avg_e2,
            delta_delta: a.delta_delta,
            delta_boundary: a.delta_boundary,
            impulse_energy: a.impulse_energy,
            e_initial: t.e_initial,
            e_final: t.e_final,
            avg_ena: t.nonadiabatic.as_ref().map_or(f64::NAN, |na| na.avg_ena),
            power_integral,
            peak_rel_power: peak,
        };
        Ok(())
    })
}

/// Lower bounds and reference values for a trap and duration.
///
/// # Safety
/// `bounds` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sta_bounds(gamma: f64, n: u32, t_f: f64, bounds: *mut StaBounds) -> StaStatus {
    guard(|| {
        let bounds = out(bounds, "bounds")?;
        let r = energies::bounds(&TrapSpec::dimensionless(gamma, n)?, t_f)?;
        *bounds = StaBounds {
            e_nl: r.e_nl.quadrature,
            e_nl_closed_form: r.e_nl.closed_form.unwrap_or(f64::NAN),
            ena_l: r.ena_l,
            tf_max: r.tf_max,
            e_min: r.e_min,
            e_nl_asymptote: r.e_nl_asymptote,
            ena_l_asymptote: r.ena_l_asymptote,
        };
        Ok(())
    })
}

/// Optimizes the hybrid cap durations for a given `t_f`.
///
/// # Safety
/// `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sta_optimize_caps(
    gamma: f64,
    n: u32,
    t_f: f64,
    result: *mut StaCapResult,
) -> StaStatus {
    guard(|| {
        let result = out(result, "result")?;
        let r = optimize::optimize_caps(&TrapSpec::dimensionless(gamma, n)?, t_f)?;
        *result = StaCapResult {
            tau_l: r.params[0],
            tau_s: r.params[1],
            avg_ena: r.objective,
            feasible: r.feasible,
            converged: r.converged,
        };
        Ok(())
    })
}
