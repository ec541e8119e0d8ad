// Infidelity against pulse area for broadband gates of growing length.
// Longer sequences keep `F < 1e-4` over wider area windows.

use std::f64::consts::{FRAC_PI_2, PI};

use cpgate::pulse::PulseSpec;
use cpgate::scan::{high_fidelity_bandwidth, scan_1d, ScanOptions, SweepAxis, SweepParameter};
use cpgate::sequences::{broadband_phases, make_phase_gate_sequence};

pub fn run_example() -> cpgate::Result<()> {
    let axis = SweepAxis::new(SweepParameter::PulseAreaFraction, 0.5, 1.5, 401)?;
    let template = PulseSpec::rectangular(PI, 1.0);
    println!("n   width(F<1e-4)  width(F<1e-2)");
    for n in [1, 3, 5, 9, 13] {
        let gate = make_phase_gate_sequence(&broadband_phases(n)?, FRAC_PI_2);
        let r = scan_1d(&axis, &gate, &template, &ScanOptions::default())?;
        println!(
            "{n:<3} {:<14.4} {:.4}",
            high_fidelity_bandwidth(&r, 1e-4)?,
            high_fidelity_bandwidth(&r, 1e-2)?
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("broadband example");
}
