use std::fs;
use std::process::{Command, Output};

fn sta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sta")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn quintic_rows_start_at_one_and_end_at_gamma() {
    let o = sta(&["protocol", "--gamma", "10", "--tf-dimensionless", "25", "--grid", "101"]);
    assert!(o.status.success());
    let rows = data_rows(&stdout(&o));
    assert_eq!(rows.len(), 101);
    assert_eq!(rows[0][1], "1");
    assert_eq!(rows[100][1], "10");
}

#[test]
fn dirac_protocol_lists_impulses() {
    let o = sta(&["protocol", "--gamma", "10", "--tf-dimensionless", "1", "--family", "dirac"]);
    let text = stdout(&o);
    let impulses: Vec<&str> = text.lines().filter(|l| l.starts_with("# impulse t=")).collect();
    assert_eq!(impulses.len(), 2);
    assert!(impulses[0].contains("strength=-9.04987562112"));
}

#[test]
fn no_expansion_keeps_b_at_one() {
    let o = sta(&["protocol", "--gamma", "1", "--tf-dimensionless", "3", "--grid", "51"]);
    assert!(data_rows(&stdout(&o)).iter().all(|r| r[1] == "1"));
}

#[test]
fn si_output_is_in_seconds() {
    let o = sta(&["protocol", "--preset", "fig1", "--tf", "1e-3", "--grid", "11"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = data_rows(&stdout(&o));
    assert_eq!(rows.last().unwrap()[0], "0.001");
    // omega2 at the end is omega_f^2 in rad^2/s^2
    let wf2: f64 = rows.last().unwrap()[4].parse().unwrap();
    let expected = (2.0 * std::f64::consts::PI * 25.0f64).powi(2);
    assert!((wf2 - expected).abs() < 1e-9 * expected);
}

#[test]
fn seconds_without_si_trap_is_rejected() {
    let o = sta(&["protocol", "--gamma", "10", "--tf", "1e-3"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("--tf-dimensionless"));
}

#[test]
fn conflicting_traps_are_rejected() {
    let o = sta(&["protocol", "--gamma", "10", "--omega0-hz", "2500", "--omegaf-hz", "25", "--tf", "1e-3"]);
    assert!(!o.status.success());
}

#[test]
fn energy_summary_reports_checks() {
    let o = sta(&["energy", "--gamma", "10", "--tf-dimensionless", "25"]);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("# virial:") && l.ends_with("PASS")));
    let o = sta(&["energy", "--gamma", "10", "--tf-dimensionless", "1", "--family", "dirac"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("# equality chain") && l.ends_with("PASS")));
    let o = sta(&["energy", "--gamma", "10", "--tf-dimensionless", "5", "--family", "linear"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("# virial:") && l.contains("SKIPPED")));
}

#[test]
fn output_is_byte_stable() {
    let args = [
        "energy",
        "--gamma",
        "10",
        "--tf-dimensionless",
        "7",
        "--family",
        "septic",
        "--c3",
        "5",
        "--c4",
        "-3",
    ];
    assert_eq!(sta(&args).stdout, sta(&args).stdout);
}

#[test]
fn config_file_and_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    fs::write(&cfg, "# run\ngamma = 5\ntf_dimensionless = 20\ngrid = 21\nfamily = septic\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let o = sta(&["--config", cfg, "protocol"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = data_rows(&stdout(&o));
    assert_eq!(rows.len(), 21);
    assert_eq!(rows[20][1], "5");
    let o = sta(&["protocol", "--config", cfg, "--gamma", "8"]);
    assert_eq!(data_rows(&stdout(&o))[20][1], "8");
}

#[test]
fn verify_passes_and_detects_fault() {
    let o = sta(&["verify"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = sta(&["verify", "--inject-fault", "eq14-sign"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().any(|l| l.starts_with("FAIL virial quintic")));
}

#[test]
fn coarse_verify_keeps_convergence_check() {
    let o = sta(&["verify", "--grid", "51"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("PASS rk4 order-4")));
}

#[test]
fn power_preset_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("power.csv");
    let o = sta(&[
        "power",
        "--preset",
        "fig4",
        "--c3",
        "78.5088",
        "--c4",
        "-459.7638",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("septic peak <= quintic peak PASS"));
    assert!(text.contains("integral of P_rel ds: quintic = 1, septic = 1"));
    let rows = data_rows(&fs::read_to_string(path).unwrap());
    assert_eq!(rows[0][0], "0");
    assert_eq!(rows.last().unwrap()[0], "1");
}

#[test]
fn sweep_writes_one_file_per_family() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = sta(&[
        "sweep",
        "--preset",
        "fig1",
        "--tf-min",
        "1e-4",
        "--tf-max",
        "2e-3",
        "--points-per-decade",
        "5",
        "--grid",
        "401",
        "--out",
        out,
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let bb = fs::read_to_string(dir.path().join("energy_bang-bang.csv")).unwrap();
    let rows = data_rows(&bb);
    assert_eq!(rows.len(), 8);
    // beyond 1 ms the bang-bang protocol does not exist
    assert!(rows.last().unwrap()[2].is_empty());
    assert!(rows.last().unwrap()[4].contains("maximum"));
    let q = fs::read_to_string(dir.path().join("energy_quintic.csv")).unwrap();
    let values: Vec<f64> = data_rows(&q).iter().map(|r| r[2].parse().unwrap()).collect();
    assert!(values.windows(2).all(|w| w[1] < w[0]));
    for r in data_rows(&q) {
        assert!(r[2].parse::<f64>().unwrap() > r[3].parse::<f64>().unwrap());
    }
}
