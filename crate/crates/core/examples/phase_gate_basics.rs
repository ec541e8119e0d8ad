// Build a phase gate from two composite inversion sequences and check it
// against the target `diag(e^{iΦ/2}, e^{−iΦ/2})`.

use std::f64::consts::{FRAC_PI_2, PI};

use cpgate::pulse::resonant_rect_propagator;
use cpgate::sequences::{broadband_phases, make_phase_gate_sequence, render_phases};
use cpgate::su2::{infidelity, TargetGate};

pub fn run_example() -> cpgate::Result<()> {
    let cp = broadband_phases(3)?;
    let gate = make_phase_gate_sequence(&cp, FRAC_PI_2);
    println!("{} gate, Phi = pi/2", cp.label());
    println!("  phases/pi: {}", render_phases(&gate.phases));

    for area_pi in [1.0, 0.95, 0.9, 0.8] {
        let pulse = resonant_rect_propagator(area_pi * PI);
        let u = gate.propagator(&pulse);
        let f = infidelity(&u, &TargetGate::new(FRAC_PI_2));
        println!("  A = {area_pi:.2} pi: F = {:.3e}   U = {u}", f.value());
    }
    Ok(())
}

fn main() {
    run_example().expect("phase gate example");
}
