// Gates built from detuning-compensated sequences, driven by resonant-area
// sech pulses and swept over a constant detuning.

use std::f64::consts::{FRAC_PI_4, PI};

use cpgate::pulse::{pulse_propagator, DetuningModel, IntegratorConfig, PulseSpec};
use cpgate::scan::{high_fidelity_bandwidth, scan_1d, ScanOptions, SweepAxis, SweepParameter};
use cpgate::sequences::{broadband_phases, detuning_phases, make_phase_gate_sequence, DetuningVariant};
use cpgate::su2::{phase_invariant_infidelity, TargetGate};

pub fn run_example() -> cpgate::Result<()> {
    let axis = SweepAxis::new(SweepParameter::DetuningTimesT, -3.0, 3.0, 121)?;
    let cfg = IntegratorConfig::default();
    let sources = [
        broadband_phases(1)?,
        detuning_phases(DetuningVariant::N3),
        detuning_phases(DetuningVariant::N5),
        detuning_phases(DetuningVariant::N9),
    ];
    println!("sequence        area/pi  F(0)       width(F<1e-2)  phase-invariant width");
    for cp in &sources {
        let template = PulseSpec::sech(cp.nominal_per_pulse_area / PI, 1.0);
        let gate = make_phase_gate_sequence(cp, FRAC_PI_4);
        let r = scan_1d(&axis, &gate, &template, &ScanOptions::default())?;
        let invariant: Vec<f64> = axis
            .values()
            .into_iter()
            .map(|d| {
                let pulse = pulse_propagator(&template.with_detuning(DetuningModel::Constant(d)), &cfg)?;
                Ok(phase_invariant_infidelity(&gate.propagator(&pulse), &TargetGate::new(FRAC_PI_4)).value())
            })
            .collect::<cpgate::Result<_>>()?;
        let run = longest_run_width(&invariant, 1e-2, 6.0 / 120.0);
        println!(
            "{:<15} {:<8.3} {:<10.2e} {:<14.2} {run:.2}",
            cp.label(),
            cp.nominal_per_pulse_area / PI,
            r.values[r.values.len() / 2],
            high_fidelity_bandwidth(&r, 1e-2)?
        );
    }
    Ok(())
}

fn longest_run_width(values: &[f64], threshold: f64, step: f64) -> f64 {
    let (mut best, mut run) = (0usize, 0usize);
    for &v in values {
        run = if v < threshold { run + 1 } else { 0 };
        best = best.max(run);
    }
    best as f64 * step
}

fn main() {
    run_example().expect("detuning example");
}
