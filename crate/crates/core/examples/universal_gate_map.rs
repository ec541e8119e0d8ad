// Two-dimensional infidelity maps over pulse duration and detuning, written
// as CSV, comparing a plain pulse pair with universal gates.

use std::f64::consts::{FRAC_PI_4, PI};

use cpgate::pulse::PulseSpec;
use cpgate::scan::{scan_2d, ScanOptions, SweepAxis, SweepParameter};
use cpgate::sequences::{broadband_phases, make_phase_gate_sequence, universal_phases, UniversalVariant};

pub fn run_example() -> cpgate::Result<()> {
    let duration = SweepAxis::new(SweepParameter::DurationFraction, 0.0, 2.0, 61)?;
    let detuning = SweepAxis::new(SweepParameter::DetuningTimesT, -2.0, 2.0, 61)?;
    let template = PulseSpec::rectangular(PI, 1.0);
    let out_dir = std::env::temp_dir().join("cpgate-universal-map");
    std::fs::create_dir_all(&out_dir)?;

    for cp in [
        broadband_phases(1)?,
        universal_phases(UniversalVariant::U3),
        universal_phases(UniversalVariant::U5a),
        universal_phases(UniversalVariant::U5b),
    ] {
        let gate = make_phase_gate_sequence(&cp, FRAC_PI_4);
        let r = scan_2d(&duration, &detuning, &gate, &template, &ScanOptions::default())?;
        let path = out_dir.join(format!("{}_{}.csv", cp.family, cp.variant));
        r.write_csv(&path)?;
        println!(
            "{:<18} fraction(F<1e-2) = {:.4}  fraction(F<1e-3) = {:.4}  -> {}",
            cp.label(),
            r.fraction_below(1e-2),
            r.fraction_below(1e-3),
            path.display()
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("universal map example");
}
