use std::ffi::CStr;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use sta_ffi::*;

fn spec(family: StaFamily, t_f: f64, a: f64, b: f64) -> StaProtocolSpec {
    StaProtocolSpec { gamma: 10.0, n: 0, family, t_f, param_a: a, param_b: b }
}

fn build(s: &StaProtocolSpec, nodes: usize) -> *mut StaProtocol {
    let mut h = ptr::null_mut();
    let st = unsafe { sta_protocol_new(s, nodes, &mut h) };
    assert_eq!(st, StaStatus::Ok, "{}", last_error());
    h
}

fn last_error() -> String {
    let p = sta_last_error();
    if p.is_null() {
        return String::new();
    }
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn quintic_series_round_trip() {
    let h = build(&spec(StaFamily::Quintic, 25.0, 0.0, 0.0), 101);
    let (mut len, mut t_f) = (0usize, 0.0);
    unsafe {
        assert_eq!(sta_protocol_info(h, &mut len, &mut t_f), StaStatus::Ok);
        assert_eq!((len, t_f), (101, 25.0));
        let mut b = vec![0.0; len];
        assert_eq!(sta_protocol_series(h, StaSeries::B, b.as_mut_ptr(), len), StaStatus::Ok);
        assert_eq!(b[0], 1.0);
        assert!((b[100] - 10.0).abs() < 1e-12);
        assert!((b[50] - 5.5).abs() < 1e-12);

        let (mut e, mut k, mut v) = (vec![0.0; len], vec![0.0; len], vec![0.0; len]);
        sta_protocol_series(h, StaSeries::Energy, e.as_mut_ptr(), len);
        sta_protocol_series(h, StaSeries::Kinetic, k.as_mut_ptr(), len);
        sta_protocol_series(h, StaSeries::Potential, v.as_mut_ptr(), len);
        assert!((0..len).all(|i| (e[i] - k[i] - v[i]).abs() < 1e-12));

        let mut short = vec![0.0; 10];
        assert_eq!(
            sta_protocol_series(h, StaSeries::Time, short.as_mut_ptr(), 10),
            StaStatus::BufferTooSmall
        );
        assert!(last_error().contains("101"));

        let mut s = std::mem::zeroed::<StaEnergySummary>();
        assert_eq!(sta_energy_summary(h, &mut s), StaStatus::Ok);
        assert!((s.avg_k - s.avg_v).abs() < 1e-6 * s.avg_e);
        assert_eq!(s.e_initial, 0.5);
        assert!((s.power_integral + 0.495).abs() < 1e-6);
        assert!(s.peak_rel_power >= 1.0);
        sta_protocol_free(h);
    }
}

#[test]
fn dirac_impulses_and_energy_routes() {
    let h = build(&spec(StaFamily::DiracImpulse, 1.0, 0.0, 0.0), 401);
    unsafe {
        let mut count = 0usize;
        assert_eq!(sta_protocol_impulses(h, ptr::null_mut(), 0, &mut count), StaStatus::Ok);
        assert_eq!(count, 2);
        let mut one = [StaImpulse::default(); 1];
        assert_eq!(sta_protocol_impulses(h, one.as_mut_ptr(), 1, &mut count), StaStatus::BufferTooSmall);
        let mut buf = [StaImpulse::default(); 2];
        assert_eq!(sta_protocol_impulses(h, buf.as_mut_ptr(), 2, &mut count), StaStatus::Ok);
        assert!((buf[0].strength + 101f64.sqrt() - 1.0).abs() < 1e-12);
        assert_eq!(buf[1].time, 1.0);

        let mut s = std::mem::zeroed::<StaEnergySummary>();
        assert_eq!(sta_energy_summary(h, &mut s), StaStatus::Ok);
        assert!((s.avg_e - s.avg_e2).abs() < 1e-6 * s.avg_e);
        assert!((s.delta_delta + s.delta_boundary).abs() < 1e-12);
        assert!(s.power_integral.is_nan());
        sta_protocol_free(h);
    }
}

#[test]
fn errors_map_to_codes() {
    let mut h = ptr::null_mut();
    unsafe {
        let mut s = spec(StaFamily::Quintic, 25.0, 0.0, 0.0);
        s.gamma = 0.5;
        assert_eq!(sta_protocol_new(&s, 101, &mut h), StaStatus::InvalidTrap);
        assert!(h.is_null());
        assert!(last_error().starts_with("invalid trap"), "{}", last_error());

        let s = spec(StaFamily::Quintic, -1.0, 0.0, 0.0);
        assert_eq!(sta_protocol_new(&s, 101, &mut h), StaStatus::InvalidArgument);

        // beyond the longest bang-bang duration
        let s = spec(StaFamily::BangBangSymmetric, 100.0, 0.0, 0.0);
        assert_eq!(sta_protocol_new(&s, 101, &mut h), StaStatus::Domain);
        assert!(last_error().contains("maximum"));

        assert_eq!(sta_protocol_new(ptr::null(), 101, &mut h), StaStatus::NullPointer);
        let s = spec(StaFamily::Quintic, 25.0, 0.0, 0.0);
        assert_eq!(sta_protocol_new(&s, 101, ptr::null_mut()), StaStatus::NullPointer);
        assert_eq!(sta_protocol_info(ptr::null(), ptr::null_mut(), ptr::null_mut()), StaStatus::NullPointer);
        sta_protocol_free(ptr::null_mut());

        // imaginary frequency: the non-adiabatic average is reported as NaN
        let h = build(&spec(StaFamily::Quintic, 1.0, 0.0, 0.0), 401);
        let mut sum = std::mem::zeroed::<StaEnergySummary>();
        assert_eq!(sta_energy_summary(h, &mut sum), StaStatus::Ok);
        assert!(sum.avg_ena.is_nan());
        sta_protocol_free(h);
    }
    let name = unsafe { CStr::from_ptr(sta_status_name(StaStatus::BufferTooSmall)) };
    assert_eq!(name.to_str().unwrap(), "buffer too small");
}

#[test]
fn bounds_and_caps() {
    unsafe {
        let mut b = std::mem::zeroed::<StaBounds>();
        assert_eq!(sta_bounds(10.0, 0, 1.0, &mut b), StaStatus::Ok);
        assert!((b.ena_l - 20.25).abs() < 1e-12);
        assert!((b.tf_max - 5.0 * std::f64::consts::PI).abs() < 1e-12);
        assert!((b.e_min - 0.2525).abs() < 1e-12);
        assert_eq!(sta_bounds(10.0, 0, 1.0, ptr::null_mut()), StaStatus::NullPointer);

        let mut r = std::mem::zeroed::<StaCapResult>();
        assert_eq!(sta_optimize_caps(10.0, 0, 100.0, &mut r), StaStatus::Ok);
        assert!(r.feasible);
        assert!(r.tau_l > 0.0 && r.tau_s > 0.0);
        assert!(r.avg_ena >= b.ena_l * 1e-4);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/sta.h")).unwrap();
    for sym in [
        "sta_protocol_new",
        "sta_protocol_free",
        "sta_protocol_series",
        "sta_protocol_impulses",
        "sta_energy_summary",
        "sta_bounds",
        "sta_optimize_caps",
        "sta_last_error",
        "typedef struct StaProtocol StaProtocol;",
        "STA_STATUS_BUFFER_TOO_SMALL = 11",
    ] {
        assert!(header.contains(sym), "{sym}");
    }
}

fn static_lib() -> Option<PathBuf> {
    // tests run from target/<profile>/deps
    let dir = std::env::current_exe().ok()?.parent()?.parent()?.to_path_buf();
    let lib = dir.join("libsta_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_against_the_static_library() {
    let Some(lib) = static_lib() else {
        eprintln!("static library not found, skipping");
        return;
    };
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler, skipping");
        return;
    };
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new(cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let first: Vec<&str> = lines.next().unwrap().split(' ').collect();
    assert_eq!(first[..5], ["401", "1.000000", "10.000000", "2", "-9.049876"]);
    assert!(first[5].trim_start_matches('-').parse::<f64>().unwrap() < 1e-5);
    assert!(lines.next().unwrap().starts_with("invalid trap: "));
}

fn which_cc() -> Result<&'static str, ()> {
    for cc in ["cc", "gcc", "clang"] {
        if Command::new(cc).arg("--version").output().is_ok() {
            return Ok(cc);
        }
    }
    Err(())
}
