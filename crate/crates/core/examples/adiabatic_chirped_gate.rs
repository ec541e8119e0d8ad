// Composite adiabatic gates with `Ω₀ sech(t/T)` pulses and `B tanh(t/T)`
// chirps, swept over the peak Rabi frequency.
//
// At `B·T = 1` a single chirped pulse leaves up to `1/cosh²(π/2) ≈ 0.16`
// population behind at any `Ω₀`, so even the five-pulse sequence only
// reaches `F < 1e-4` in narrow bands. A faster chirp opens a wide plateau.

use std::f64::consts::FRAC_PI_2;

use cpgate::pulse::{DetuningModel, PulseSpec};
use cpgate::scan::{high_fidelity_bandwidth, scan_1d, ScanOptions, SweepAxis, SweepParameter};
use cpgate::sequences::{broadband_phases, make_phase_gate_sequence};

pub fn run_example() -> cpgate::Result<()> {
    let axis = SweepAxis::new(SweepParameter::PeakRabiTimesT, 0.0, 12.0, 121)?;
    println!("B*T  n  min F      width(F<1e-4)  width(F<1e-2)");
    for chirp in [1.0, 2.0] {
        let template = PulseSpec::sech(1.0, 1.0).with_detuning(DetuningModel::TanhChirp(chirp));
        for n in [1, 3, 5] {
            let gate = make_phase_gate_sequence(&broadband_phases(n)?, FRAC_PI_2);
            let r = scan_1d(&axis, &gate, &template, &ScanOptions::default())?;
            println!(
                "{chirp:<4} {n:<2} {:<10.2e} {:<14.2} {:.2}",
                r.min(),
                high_fidelity_bandwidth(&r, 1e-4)?,
                high_fidelity_bandwidth(&r, 1e-2)?
            );
        }
    }
    Ok(())
}

fn main() {
    run_example().expect("adiabatic example");
}
