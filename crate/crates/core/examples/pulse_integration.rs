// Single-pulse propagators: closed forms, numerical integration and the
// integrator's failure mode.

use std::f64::consts::PI;

use cpgate::pulse::{detuned_rect_propagator, integrate_pulse, DetuningModel, IntegratorConfig, PulseSpec};

pub fn run_example() -> cpgate::Result<()> {
    let cfg = IntegratorConfig::default();

    let spec = PulseSpec::rectangular(PI, 1.0).with_detuning(DetuningModel::Constant(0.8));
    let closed = detuned_rect_propagator(PI, 0.8, 1.0);
    let numeric = integrate_pulse(&spec, &cfg)?;
    println!("detuned rectangle  closed  {closed}");
    println!("                   numeric {numeric}");

    for (rabi, chirp) in [(1.0, 0.0), (1.0, 1.0), (4.0, 1.0), (4.0, 3.0)] {
        let spec = PulseSpec::sech(rabi, 1.0).with_detuning(DetuningModel::TanhChirp(chirp));
        let u = integrate_pulse(&spec, &cfg)?;
        println!(
            "sech Omega0*T={rabi} B*T={chirp}: P = {:.10}",
            u.transition_probability()
        );
    }

    let starved = IntegratorConfig { max_steps: 5, ..cfg };
    match integrate_pulse(&PulseSpec::sech(4.0, 1.0), &starved) {
        Err(e) => println!("with a 5-step budget: {e}"),
        Ok(_) => println!("unexpectedly converged"),
    }
    Ok(())
}

fn main() {
    run_example().expect("pulse integration example");
}
