//! Composite-pulse phase gates for a driven two-level system.
//!
//! A phase gate `diag(e^{iΦ/2}, e^{−iΦ/2})` is produced by two identical
//! composite π pulses, the second shifted in phase by `π + Φ/2`. The gate
//! inherits the robustness of the composite pulse it is built from, so
//! broadband, detuning-compensated, adiabatic and universal composite pulses
//! give phase gates robust against the same errors.
//!
//! - [`su2`]: Cayley-Klein propagators, composition, target gate, infidelity.
//! - [`pulse`]: single-pulse propagators (rectangular, sech, tanh chirp).
//! - [`sequences`]: phase libraries and the phase-gate construction.
//! - [`scan`]: parameter sweeps, CSV output, error-order fits, presets.
//! - [`cli`]: the `cpgate` command-line front end.
//!
//! ```
//! use std::f64::consts::PI;
//! use cpgate::pulse::resonant_rect_propagator;
//! use cpgate::sequences::{broadband_phases, make_phase_gate_sequence};
//! use cpgate::su2::{infidelity, TargetGate};
//!
//! let gate = make_phase_gate_sequence(&broadband_phases(5).unwrap(), PI / 2.0);
//! let u = gate.propagator(&resonant_rect_propagator(1.05 * PI));
//! let f = infidelity(&u, &TargetGate::new(PI / 2.0));
//! assert!(f.value() < 1e-4);
//! ```

pub mod cli;
pub mod error;
pub mod format;
mod integrator;
pub mod pulse;
pub mod scan;
pub mod sequences;
pub mod su2;

pub use error::{Error, Result};
pub use pulse::{IntegratorConfig, PulseSpec};
pub use sequences::{CompositePhases, PhaseGateSequence};
pub use su2::{Infidelity, Propagator, TargetGate};
