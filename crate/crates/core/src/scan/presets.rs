//! Named scan configurations `fig1` to `fig4`.
//!
//! Ranges and resolutions are conventions chosen to contain the features of
//! interest; the CLI can override them.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use super::{SweepAxis, SweepParameter};
use crate::error::{Error, Result};
use crate::format::fmt_sig;
use crate::pulse::{DetuningModel, PulseSpec};
use crate::sequences::{
    broadband_phases, detuning_phases, make_phase_gate_sequence, universal_phases, CompositePhases, DetuningVariant,
    PhaseGateSequence, UniversalVariant,
};

/// One output file of a preset.
#[derive(Debug, Clone)]
pub struct PresetRun {
    pub file_stem: String,
    pub sequence: PhaseGateSequence,
    pub template: PulseSpec,
    pub axes: Vec<SweepAxis>,
}

#[derive(Debug, Clone)]
pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    pub runs: Vec<PresetRun>,
}

const NAMES: [(&str, &str); 4] = [
    (
        "fig1",
        "broadband gates n=1,3,5,9; rectangular resonant pulses; A/pi in [0.5, 1.5], 2001 points; Phi = pi/2, pi/4",
    ),
    (
        "fig2",
        "adiabatic gates n=1,3,5; sech pulses with tanh chirp B = 1/T; Omega0*T in [0, 12], 1201 points; Phi = pi/2, pi/4",
    ),
    (
        "fig3",
        "detuning-compensated gates n=1 (single pulses), n5, n9; sech pulses at nominal areas; Delta*T in [-3, 3], 1201 points; Phi = pi/2, pi/4",
    ),
    (
        "fig4",
        "single-pulse pair vs universal U5a and U5b gates; rectangular pulses; T/T0 in [0, 2] x Delta*T in [-2, 2], 301x301; Phi = pi/4",
    ),
];

/// All preset names with one-line descriptions.
pub fn presets() -> Vec<(&'static str, &'static str)> {
    NAMES.to_vec()
}

fn stem(prefix: &str, cp: &CompositePhases, gate_phase: f64) -> String {
    format!(
        "{prefix}_{}_{}_phase{}pi",
        cp.family,
        cp.variant,
        fmt_sig(gate_phase / PI, 12)
    )
}

fn axis(parameter: SweepParameter, start: f64, stop: f64, samples: usize) -> SweepAxis {
    SweepAxis::new(parameter, start, stop, samples).expect("preset axes are valid")
}

pub fn preset(name: &str) -> Result<Preset> {
    let (name, description) = NAMES
        .iter()
        .copied()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownVariant {
            kind: "preset",
            name: name.to_string(),
        })?;
    let phases = [FRAC_PI_2, FRAC_PI_4];
    let mut runs = Vec::new();
    match name {
        "fig1" => {
            let template = PulseSpec::rectangular(PI, 1.0);
            let ax = axis(SweepParameter::PulseAreaFraction, 0.5, 1.5, 2001);
            for &gp in &phases {
                for n in [1, 3, 5, 9] {
                    let cp = broadband_phases(n)?;
                    runs.push(PresetRun {
                        file_stem: stem(name, &cp, gp),
                        sequence: make_phase_gate_sequence(&cp, gp),
                        template,
                        axes: vec![ax],
                    });
                }
            }
        }
        "fig2" => {
            let template = PulseSpec::sech(1.0, 1.0).with_detuning(DetuningModel::TanhChirp(1.0));
            let ax = axis(SweepParameter::PeakRabiTimesT, 0.0, 12.0, 1201);
            for &gp in &phases {
                for n in [1, 3, 5] {
                    let cp = broadband_phases(n)?;
                    runs.push(PresetRun {
                        file_stem: stem(name, &cp, gp),
                        sequence: make_phase_gate_sequence(&cp, gp),
                        template,
                        axes: vec![ax],
                    });
                }
            }
        }
        "fig3" => {
            let ax = axis(SweepParameter::DetuningTimesT, -3.0, 3.0, 1201);
            let sources = [
                broadband_phases(1)?,
                detuning_phases(DetuningVariant::N5),
                detuning_phases(DetuningVariant::N9),
            ];
            for &gp in &phases {
                for cp in &sources {
                    let template = PulseSpec::sech(cp.nominal_per_pulse_area / PI, 1.0);
                    runs.push(PresetRun {
                        file_stem: stem(name, cp, gp),
                        sequence: make_phase_gate_sequence(cp, gp),
                        template,
                        axes: vec![ax],
                    });
                }
            }
        }
        "fig4" => {
            let template = PulseSpec::rectangular(PI, 1.0);
            let axes = vec![
                axis(SweepParameter::DurationFraction, 0.0, 2.0, 301),
                axis(SweepParameter::DetuningTimesT, -2.0, 2.0, 301),
            ];
            for cp in [
                broadband_phases(1)?,
                universal_phases(UniversalVariant::U5a),
                universal_phases(UniversalVariant::U5b),
            ] {
                runs.push(PresetRun {
                    file_stem: stem(name, &cp, FRAC_PI_4),
                    sequence: make_phase_gate_sequence(&cp, FRAC_PI_4),
                    template,
                    axes: axes.clone(),
                });
            }
        }
        _ => unreachable!(),
    }
    Ok(Preset {
        name,
        description,
        runs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_preset_builds() {
        for (name, _) in presets() {
            let p = preset(name).unwrap();
            assert!(!p.runs.is_empty());
            let mut stems: Vec<&str> = p.runs.iter().map(|r| r.file_stem.as_str()).collect();
            stems.sort();
            stems.dedup();
            assert_eq!(stems.len(), p.runs.len(), "{name} has duplicate file names");
        }
        assert!(preset("fig5").is_err());
    }

    #[test]
    fn fig1_has_eight_curves() {
        let p = preset("fig1").unwrap();
        assert_eq!(p.runs.len(), 8);
        assert_eq!(p.runs[1].file_stem, "fig1_broadband_n3_phase0.5pi");
    }

    #[test]
    fn fig3_uses_nominal_areas() {
        let p = preset("fig3").unwrap();
        for run in &p.runs {
            let want = run.sequence.source.nominal_per_pulse_area;
            assert!((run.template.area() - want).abs() < 1e-15);
        }
    }
}
