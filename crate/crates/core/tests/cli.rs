//! End-to-end runs of the `cpgate` binary.

use std::f64::consts::{FRAC_PI_2, PI};
use std::path::Path;
use std::process::{Command, Output};

use cpgate::pulse::{pulse_propagator, IntegratorConfig, PulseSpec};
use cpgate::sequences::{broadband_phases, make_phase_gate_sequence};
use cpgate::su2::{infidelity, TargetGate};

fn cpgate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cpgate"))
        .args(args)
        .env("SOURCE_DATE_EPOCH", "1700000000")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn strip_timestamp(s: &str) -> String {
    s.lines()
        .filter(|l| !l.starts_with("# manifest.timestamp"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn sequence_prints_phases() {
    let o = cpgate(&[
        "sequence",
        "--family",
        "universal",
        "--variant",
        "U3",
        "--phase-pi",
        "0.5",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("phases_pi: 0, 0.5, 0, 1.25, 1.75, 1.25\n"));
}

#[test]
fn fidelity_agrees_with_library() {
    let o = cpgate(&[
        "fidelity",
        "--family",
        "broadband",
        "--variant",
        "n5",
        "--phase-pi",
        "0.5",
        "--area-pi",
        "1.2",
    ]);
    assert!(o.status.success());
    let cli: f64 = stdout(&o).trim().parse().unwrap();

    let seq = make_phase_gate_sequence(&broadband_phases(5).unwrap(), FRAC_PI_2);
    let u = pulse_propagator(&PulseSpec::rectangular(1.2 * PI, 1.0), &IntegratorConfig::default()).unwrap();
    let lib = infidelity(&seq.propagator(&u), &TargetGate::new(FRAC_PI_2)).value();
    assert!((cli - lib).abs() <= 1e-11 * lib);
}

#[test]
fn scan_output_is_independent_of_threads() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for threads in ["1", "4"] {
        let path = dir.path().join(format!("t{threads}.csv"));
        let o = cpgate(&[
            "scan",
            "--family",
            "broadband",
            "--variant",
            "n3",
            "--phase-pi",
            "0.5",
            "--pulse",
            "sech",
            "--chirp-t",
            "1",
            "--axis",
            "rabi",
            "--range",
            "0.5,6",
            "--samples",
            "12",
            "--threads",
            threads,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).contains("bandwidth(F<1e-4)"));
        files.push(std::fs::read_to_string(&path).unwrap());
    }
    assert_eq!(strip_timestamp(&files[0]), strip_timestamp(&files[1]));
    assert!(files[0].contains("# manifest.command: scan"));
}

#[test]
fn two_axis_scan_with_negative_range() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("map.csv");
    let o = cpgate(&[
        "scan",
        "--family",
        "universal",
        "--variant",
        "U5a",
        "--phase-pi",
        "0.25",
        "--axis",
        "duration",
        "--range",
        "0,2",
        "--axis",
        "detuning",
        "--range",
        "-2,2",
        "--samples",
        "9",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r = cpgate::scan::ScanResult::from_csv(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.values.len(), 81);
    assert!(stdout(&o).contains("fraction(F<1e-2)"));
}

#[test]
fn preset_writes_one_file_per_run() {
    let dir = tempfile::tempdir().unwrap();
    let o = cpgate(&[
        "preset",
        "fig1",
        "--samples",
        "11",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let names: Vec<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    assert_eq!(names.len(), 8);
    assert!(Path::new(dir.path()).join("fig1_broadband_n9_phase0.25pi.csv").exists());
}

#[test]
fn list_presets() {
    let o = cpgate(&["preset", "--list-presets"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for name in ["fig1", "fig2", "fig3", "fig4"] {
        assert!(text.lines().any(|l| l.starts_with(name)));
    }
}

#[test]
fn exit_codes() {
    let usage = cpgate(&["sequence", "--family", "broadband", "--variant", "n4"]);
    assert_eq!(usage.status.code(), Some(2));
    assert!(!usage.stderr.is_empty());

    let bad_flag = cpgate(&["scan", "--bogus"]);
    assert_eq!(bad_flag.status.code(), Some(2));

    let numerical = cpgate(&[
        "fidelity",
        "--family",
        "broadband",
        "--variant",
        "n3",
        "--pulse",
        "sech",
        "--chirp-t",
        "1",
        "--max-steps",
        "3",
    ]);
    assert_eq!(numerical.status.code(), Some(3));

    let blocker = tempfile::NamedTempFile::new().unwrap();
    let out = blocker.path().join("sub").join("x.csv");
    let io = cpgate(&[
        "scan",
        "--family",
        "broadband",
        "--variant",
        "n1",
        "--axis",
        "area",
        "--range",
        "0.5,1.5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(io.status.code(), Some(1));
}
