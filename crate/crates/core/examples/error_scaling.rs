// Fitted error orders under small systematic pulse errors.

use std::f64::consts::FRAC_PI_2;

use cpgate::scan::{error_order, EpsRange, OrderTarget, Perturbation};
use cpgate::sequences::{broadband_phases, make_phase_gate_sequence, universal_phases, UniversalVariant};

pub fn run_example() -> cpgate::Result<()> {
    let range = EpsRange::default();
    println!("inversion |a| vs area error");
    for n in [1, 3, 5, 7] {
        let cp = broadband_phases(n)?;
        // Long sequences push |a| under the noise floor at small eps.
        let m = match error_order(OrderTarget::Inversion(&cp), Perturbation::Area, range) {
            Err(e) if e.is_numerical() => {
                println!("  {:<14} {e}; retrying on [1e-2, 1e-1]", cp.label());
                error_order(
                    OrderTarget::Inversion(&cp),
                    Perturbation::Area,
                    EpsRange::new(1e-2, 1e-1),
                )?
            }
            other => other?,
        };
        println!("  {:<14} slope {m:.3}  (|a|^2: {:.3})", cp.label(), 2.0 * m);
    }

    println!("gate F vs area error, Phi = pi/2");
    for n in [3, 5] {
        let gate = make_phase_gate_sequence(&broadband_phases(n)?, FRAC_PI_2);
        let m = error_order(OrderTarget::Gate(&gate), Perturbation::Area, range)?;
        println!("  {:<14} slope {m:.3}", gate.source.label());
    }

    println!("gate F along random (amplitude, detuning) directions");
    for v in [UniversalVariant::U3, UniversalVariant::U5a, UniversalVariant::U5b] {
        let gate = make_phase_gate_sequence(&universal_phases(v), FRAC_PI_2);
        let slopes = (1..=5)
            .map(|seed| error_order(OrderTarget::Gate(&gate), Perturbation::RandomDirection { seed }, range))
            .collect::<cpgate::Result<Vec<f64>>>()?;
        let shown: Vec<String> = slopes.iter().map(|s| format!("{s:.2}")).collect();
        println!("  {:<14} {}", gate.source.label(), shown.join(" "));
    }
    Ok(())
}

fn main() {
    run_example().expect("error scaling example");
}
