//! Composite-pulse phase libraries and the two-CP phase-gate construction.
//!
//! A phase gate of angle `Φ` is built from an `n`-pulse inversion sequence
//! `φ_1..φ_n` by appending a second copy whose phases are `φ_k + π + Φ/2`.
//! When each copy inverts the qubit exactly the product is
//! `diag(e^{iΦ/2}, e^{−iΦ/2})`, and the gate inherits the error order of the
//! inversion sequence.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::format::{fmt_sig, phase_in_pi};
use crate::su2::{sequence_propagator, Propagator};

/// Largest broadband sequence length accepted.
pub const MAX_BROADBAND_N: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Broadband,
    DetuningCompensated,
    Universal,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Broadband => "broadband",
            Family::DetuningCompensated => "detuning",
            Family::Universal => "universal",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "broadband" | "bb" | "adiabatic" => Ok(Family::Broadband),
            "detuning" | "detuning_compensated" | "detuning-compensated" => Ok(Family::DetuningCompensated),
            "universal" | "u" => Ok(Family::Universal),
            _ => Err(Error::UnknownVariant {
                kind: "family",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DetuningVariant {
    N3,
    N5,
    N9,
}

impl DetuningVariant {
    pub const ALL: [DetuningVariant; 3] = [DetuningVariant::N3, DetuningVariant::N5, DetuningVariant::N9];

    pub fn name(self) -> &'static str {
        match self {
            DetuningVariant::N3 => "n3",
            DetuningVariant::N5 => "n5",
            DetuningVariant::N9 => "n9",
        }
    }
}

impl FromStr for DetuningVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "n3" | "3" => Ok(DetuningVariant::N3),
            "n5" | "5" => Ok(DetuningVariant::N5),
            "n9" | "9" => Ok(DetuningVariant::N9),
            _ => Err(Error::UnknownVariant {
                kind: "detuning-compensated variant",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UniversalVariant {
    U3,
    U5a,
    U5b,
    U7a,
    U7b,
    U13a,
    U13b,
}

impl UniversalVariant {
    pub const ALL: [UniversalVariant; 7] = [
        UniversalVariant::U3,
        UniversalVariant::U5a,
        UniversalVariant::U5b,
        UniversalVariant::U7a,
        UniversalVariant::U7b,
        UniversalVariant::U13a,
        UniversalVariant::U13b,
    ];

    pub fn name(self) -> &'static str {
        match self {
            UniversalVariant::U3 => "U3",
            UniversalVariant::U5a => "U5a",
            UniversalVariant::U5b => "U5b",
            UniversalVariant::U7a => "U7a",
            UniversalVariant::U7b => "U7b",
            UniversalVariant::U13a => "U13a",
            UniversalVariant::U13b => "U13b",
        }
    }

    /// Numerators over the denominator, in units of π.
    fn table(self) -> (&'static [i32], f64) {
        match self {
            UniversalVariant::U3 => (&[0, 1, 0], 2.0),
            UniversalVariant::U5a => (&[0, 5, 2, 5, 0], 6.0),
            UniversalVariant::U5b => (&[0, 11, 2, 11, 0], 6.0),
            UniversalVariant::U7a => (&[0, 11, 10, 17, 10, 11, 0], 12.0),
            UniversalVariant::U7b => (&[0, 23, 10, 5, 10, 23, 0], 12.0),
            UniversalVariant::U13a => (&[0, 9, 42, 11, 8, 37, 2, 37, 8, 11, 42, 9, 0], 24.0),
            UniversalVariant::U13b => (&[0, 33, 42, 35, 8, 13, 2, 13, 8, 35, 42, 33, 0], 24.0),
        }
    }
}

impl FromStr for UniversalVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        UniversalVariant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownVariant {
                kind: "universal variant",
                name: s.to_string(),
            })
    }
}

/// An `n`-pulse composite inversion sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositePhases {
    pub family: Family,
    pub variant: String,
    /// Radians, in `[0, 2π)`, first-in-time first.
    pub phases: Vec<f64>,
    /// Area of each constituent pulse at the design point, radians.
    pub nominal_per_pulse_area: f64,
}

impl CompositePhases {
    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    /// `family/variant`, e.g. `broadband/n3`.
    pub fn label(&self) -> String {
        format!("{}/{}", self.family, self.variant)
    }

    /// Looks up a sequence by family and variant name, e.g.
    /// `("broadband", "n5")`, `("detuning", "n9")`, `("universal", "U5a")`.
    pub fn lookup(family: &str, variant: &str) -> Result<Self> {
        match family.parse::<Family>()? {
            Family::Broadband => {
                let digits = variant.trim_start_matches(['n', 'N']);
                let n = digits.parse::<usize>().map_err(|_| Error::UnknownVariant {
                    kind: "broadband variant",
                    name: variant.to_string(),
                })?;
                broadband_phases(n)
            }
            Family::DetuningCompensated => Ok(detuning_phases(variant.parse()?)),
            Family::Universal => Ok(universal_phases(variant.parse()?)),
        }
    }

    /// The propagator of the inversion sequence itself.
    pub fn propagator(&self, pulse: &Propagator) -> Result<Propagator> {
        sequence_propagator(&self.phases, pulse)
    }
}

/// Reduces an angle into `[0, 2π)`.
pub fn reduce_phase(phase: f64) -> f64 {
    let r = phase.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs.
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// `φ_k = k(k−1)π/n` for `k = 1..n`, reduced mod 2π.
pub fn broadband_phases(n: usize) -> Result<CompositePhases> {
    if n == 0 || n.is_multiple_of(2) || n > MAX_BROADBAND_N {
        return Err(Error::invalid(
            "n",
            format!("broadband sequences need odd 1 <= n <= {MAX_BROADBAND_N}, got {n}"),
        ));
    }
    // k(k−1) is even, so reduce the integer numerator mod 2n first.
    let phases = (1..=n)
        .map(|k| {
            let num = (k * (k - 1)) % (2 * n);
            reduce_phase(num as f64 * PI / n as f64)
        })
        .collect();
    Ok(CompositePhases {
        family: Family::Broadband,
        variant: format!("n{n}"),
        phases,
        nominal_per_pulse_area: PI,
    })
}

pub fn detuning_phases(variant: DetuningVariant) -> CompositePhases {
    let (in_pi, area): (Vec<f64>, f64) = match variant {
        DetuningVariant::N3 => (vec![0.0, 1.0 / 3.0, 0.0], PI),
        DetuningVariant::N5 => (vec![0.0, 0.747, 0.424, 0.747, 0.0], 3.0 * PI / 5.0),
        DetuningVariant::N9 => (
            vec![0.0, 1.308, 1.153, 1.251, 0.562, 1.251, 1.153, 1.308, 0.0],
            4.0 * PI / 9.0,
        ),
    };
    CompositePhases {
        family: Family::DetuningCompensated,
        variant: variant.name().to_string(),
        phases: in_pi.into_iter().map(|p| reduce_phase(p * PI)).collect(),
        nominal_per_pulse_area: area,
    }
}

pub fn universal_phases(variant: UniversalVariant) -> CompositePhases {
    let (nums, den) = variant.table();
    CompositePhases {
        family: Family::Universal,
        variant: variant.name().to_string(),
        phases: nums.iter().map(|&k| reduce_phase(k as f64 * PI / den)).collect(),
        nominal_per_pulse_area: PI,
    }
}

/// Every sequence shipped by the libraries.
pub fn all_sequences() -> Vec<CompositePhases> {
    let mut out: Vec<CompositePhases> = [1, 3, 5, 7, 9]
        .into_iter()
        .map(|n| broadband_phases(n).expect("odd n"))
        .collect();
    out.extend(DetuningVariant::ALL.into_iter().map(detuning_phases));
    out.extend(UniversalVariant::ALL.into_iter().map(universal_phases));
    out
}

/// A `2n`-pulse phase gate: the inversion sequence followed by its copy
/// shifted by `π + Φ/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseGateSequence {
    pub gate_phase: f64,
    pub phases: Vec<f64>,
    pub source: CompositePhases,
}

impl PhaseGateSequence {
    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn propagator(&self, pulse: &Propagator) -> Propagator {
        gate_propagator(self, pulse)
    }
}

pub fn make_phase_gate_sequence(cp: &CompositePhases, gate_phase: f64) -> PhaseGateSequence {
    let shift = PI + gate_phase / 2.0;
    let phases = cp
        .phases
        .iter()
        .map(|&p| reduce_phase(p))
        .chain(cp.phases.iter().map(|&p| reduce_phase(p + shift)))
        .collect();
    PhaseGateSequence {
        gate_phase,
        phases,
        source: cp.clone(),
    }
}

/// `U_CP2 · U_CP1` for identical constituent pulses.
pub fn gate_propagator(seq: &PhaseGateSequence, pulse: &Propagator) -> Propagator {
    sequence_propagator(&seq.phases, pulse).expect("gate sequences are never empty")
}

/// Plain-text audit table: one line per sequence with its name, length,
/// phases in units of π and nominal per-pulse area in units of π, all with
/// 12 significant digits.
pub fn phase_table(sequences: &[CompositePhases]) -> String {
    let mut out = String::from("# name\tn\tphases_pi\tnominal_area_pi\n");
    for cp in sequences {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            cp.label(),
            cp.len(),
            render_phases(&cp.phases),
            fmt_sig(cp.nominal_per_pulse_area / PI, 12)
        ));
    }
    out
}

/// Phases in units of π, comma separated.
pub fn render_phases(phases: &[f64]) -> String {
    phases
        .iter()
        .map(|&p| fmt_sig(phase_in_pi(p), 12))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Parses a table produced by [`phase_table`].
pub fn parse_phase_table(text: &str) -> Result<Vec<CompositePhases>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |what: &str| Error::Parse(format!("line {}: {what}", lineno + 1));
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 4 {
            return Err(bad("expected 4 tab-separated columns"));
        }
        let (family, variant) = cols[0]
            .split_once('/')
            .ok_or_else(|| bad("name is not family/variant"))?;
        let n: usize = cols[1].parse().map_err(|_| bad("bad n"))?;
        let phases = cols[2]
            .split(',')
            .map(|s| s.trim().parse::<f64>().map(|p| reduce_phase(p * PI)))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad("bad phase"))?;
        if phases.len() != n {
            return Err(bad("phase count does not match n"));
        }
        let area: f64 = cols[3].parse().map_err(|_| bad("bad nominal area"))?;
        out.push(CompositePhases {
            family: family.parse()?,
            variant: variant.to_string(),
            phases,
            nominal_per_pulse_area: area * PI,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pulse::resonant_rect_propagator;
    use crate::su2::{infidelity, TargetGate};
    use std::f64::consts::FRAC_PI_2;

    fn assert_phases(got: &[f64], expected_in_pi: &[f64]) {
        assert_eq!(got.len(), expected_in_pi.len());
        for (g, e) in got.iter().zip(expected_in_pi) {
            let d = (g - reduce_phase(e * PI)).abs();
            assert!(
                d < 1e-12 || (TAU - d) < 1e-12,
                "got {got:?}, expected {expected_in_pi:?} π"
            );
        }
    }

    #[test]
    fn broadband_examples() {
        assert_phases(&broadband_phases(3).unwrap().phases, &[0.0, 2.0 / 3.0, 0.0]);
        assert_phases(&broadband_phases(5).unwrap().phases, &[0.0, 0.4, 1.2, 0.4, 0.0]);
        assert_phases(
            &broadband_phases(7).unwrap().phases,
            &[0.0, 2.0 / 7.0, 6.0 / 7.0, 12.0 / 7.0, 6.0 / 7.0, 2.0 / 7.0, 0.0],
        );
        assert_phases(
            &broadband_phases(9).unwrap().phases,
            &[
                0.0,
                2.0 / 9.0,
                2.0 / 3.0,
                4.0 / 3.0,
                2.0 / 9.0,
                4.0 / 3.0,
                2.0 / 3.0,
                2.0 / 9.0,
                0.0,
            ],
        );
        assert_eq!(broadband_phases(1).unwrap().phases, vec![0.0]);
        assert_eq!(broadband_phases(3).unwrap().nominal_per_pulse_area, PI);
    }

    #[test]
    fn broadband_rejects_even_zero_and_oversized() {
        for n in [0, 2, 4, 10, MAX_BROADBAND_N + 2] {
            assert!(broadband_phases(n).is_err(), "n = {n}");
        }
        assert!(broadband_phases(MAX_BROADBAND_N).is_ok());
    }

    #[test]
    fn detuning_examples() {
        let n3 = detuning_phases(DetuningVariant::N3);
        assert_phases(&n3.phases, &[0.0, 1.0 / 3.0, 0.0]);
        assert_eq!(n3.nominal_per_pulse_area, PI);
        let n5 = detuning_phases(DetuningVariant::N5);
        assert_phases(&n5.phases, &[0.0, 0.747, 0.424, 0.747, 0.0]);
        assert!((n5.nominal_per_pulse_area - 3.0 * PI / 5.0).abs() < 1e-15);
        let n9 = detuning_phases(DetuningVariant::N9);
        assert_phases(&n9.phases, &[0.0, 1.308, 1.153, 1.251, 0.562, 1.251, 1.153, 1.308, 0.0]);
        assert!((n9.nominal_per_pulse_area - 4.0 * PI / 9.0).abs() < 1e-15);
        assert!("n7".parse::<DetuningVariant>().is_err());
    }

    #[test]
    fn universal_examples() {
        assert_phases(&universal_phases(UniversalVariant::U3).phases, &[0.0, 0.5, 0.0]);
        assert_phases(
            &universal_phases(UniversalVariant::U5a).phases,
            &[0.0, 5.0 / 6.0, 1.0 / 3.0, 5.0 / 6.0, 0.0],
        );
        assert_phases(
            &universal_phases(UniversalVariant::U5b).phases,
            &[0.0, 11.0 / 6.0, 1.0 / 3.0, 11.0 / 6.0, 0.0],
        );
        assert_phases(
            &universal_phases(UniversalVariant::U7b).phases,
            &[0.0, 23.0 / 12.0, 5.0 / 6.0, 5.0 / 12.0, 5.0 / 6.0, 23.0 / 12.0, 0.0],
        );
        let u13a: Vec<f64> = [0.0, 9.0, 42.0, 11.0, 8.0, 37.0, 2.0, 37.0, 8.0, 11.0, 42.0, 9.0, 0.0]
            .iter()
            .map(|k| k / 24.0)
            .collect();
        assert_phases(&universal_phases(UniversalVariant::U13a).phases, &u13a);
        assert!("U9".parse::<UniversalVariant>().is_err());
        assert_eq!("u5A".parse::<UniversalVariant>().unwrap(), UniversalVariant::U5a);
    }

    #[test]
    fn shipped_sequences_are_odd_palindromes_starting_at_zero() {
        for cp in all_sequences() {
            assert_eq!(cp.len() % 2, 1, "{}", cp.label());
            assert_eq!(cp.phases[0], 0.0, "{}", cp.label());
            let rev: Vec<f64> = cp.phases.iter().rev().copied().collect();
            assert_eq!(cp.phases, rev, "{}", cp.label());
            assert!(cp.phases.iter().all(|p| (0.0..TAU).contains(p)));
        }
    }

    #[test]
    fn gate_sequence_examples() {
        let gate_phase = 0.7;
        let h = gate_phase / 2.0;
        let bb3 = make_phase_gate_sequence(&broadband_phases(3).unwrap(), gate_phase);
        let expect = |v: [f64; 6]| v.map(reduce_phase);
        let close = |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12);
        assert!(close(
            &bb3.phases,
            &expect([0.0, 2.0 * PI / 3.0, 0.0, PI + h, 5.0 * PI / 3.0 + h, PI + h])
        ));

        let d3 = make_phase_gate_sequence(&detuning_phases(DetuningVariant::N3), gate_phase);
        assert!(close(
            &d3.phases,
            &expect([0.0, PI / 3.0, 0.0, PI + h, 4.0 * PI / 3.0 + h, PI + h])
        ));

        let u3 = make_phase_gate_sequence(&universal_phases(UniversalVariant::U3), gate_phase);
        assert!(close(
            &u3.phases,
            &expect([0.0, PI / 2.0, 0.0, PI + h, 1.5 * PI + h, PI + h])
        ));
    }

    #[test]
    fn ten_pulse_universal_gates_match_display() {
        let gate_phase = 1.1;
        let h = gate_phase / 2.0;
        let a = make_phase_gate_sequence(&universal_phases(UniversalVariant::U5a), gate_phase);
        let expected_a = [
            0.0,
            5.0 * PI / 6.0,
            PI / 3.0,
            5.0 * PI / 6.0,
            0.0,
            PI + h,
            11.0 * PI / 6.0 + h,
            4.0 * PI / 3.0 + h,
            11.0 * PI / 6.0 + h,
            PI + h,
        ];
        for (g, e) in a.phases.iter().zip(expected_a) {
            assert!((g - reduce_phase(e)).abs() < 1e-12);
        }
        let b = make_phase_gate_sequence(&universal_phases(UniversalVariant::U5b), gate_phase);
        let expected_b = [
            0.0,
            11.0 * PI / 6.0,
            PI / 3.0,
            11.0 * PI / 6.0,
            0.0,
            PI + h,
            5.0 * PI / 6.0 + h,
            4.0 * PI / 3.0 + h,
            5.0 * PI / 6.0 + h,
            PI + h,
        ];
        for (g, e) in b.phases.iter().zip(expected_b) {
            assert!((g - reduce_phase(e)).abs() < 1e-12);
        }
        let pulse = resonant_rect_propagator(PI);
        for seq in [&a, &b] {
            let f = infidelity(&seq.propagator(&pulse), &TargetGate::new(gate_phase));
            assert!(f.value() < 1e-12);
        }
    }

    #[test]
    fn single_pulse_pair_is_exact() {
        let seq = make_phase_gate_sequence(&broadband_phases(1).unwrap(), FRAC_PI_2);
        let u = gate_propagator(&seq, &resonant_rect_propagator(PI));
        assert!(infidelity(&u, &TargetGate::new(FRAC_PI_2)).value() < 1e-12);
    }

    #[test]
    fn gate_phase_is_4pi_periodic() {
        let pulse = resonant_rect_propagator(1.13 * PI);
        for cp in all_sequences() {
            for &gp in &[0.0, 0.3, -1.2, 2.5] {
                let u1 = make_phase_gate_sequence(&cp, gp).propagator(&pulse);
                let u2 = make_phase_gate_sequence(&cp, gp + 2.0 * TAU).propagator(&pulse);
                assert!((u1.a() - u2.a()).norm() < 1e-12 && (u1.b() - u2.b()).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(CompositePhases::lookup("broadband", "n5").unwrap().len(), 5);
        assert_eq!(CompositePhases::lookup("broadband", "9").unwrap().len(), 9);
        assert_eq!(CompositePhases::lookup("detuning", "n9").unwrap().len(), 9);
        assert_eq!(CompositePhases::lookup("universal", "U13b").unwrap().len(), 13);
        assert!(CompositePhases::lookup("broadband", "n4").is_err());
        assert!(CompositePhases::lookup("narrowband", "n3").is_err());
        assert!(CompositePhases::lookup("universal", "U4").is_err());
    }

    #[test]
    fn phase_table_round_trips() {
        let all = all_sequences();
        let text = phase_table(&all);
        assert!(text.contains("broadband/n3\t3\t0, 0.666666666667, 0\t1\n"));
        assert!(text.contains("detuning/n5\t5\t0, 0.747, 0.424, 0.747, 0\t0.6\n"));
        let parsed = parse_phase_table(&text).unwrap();
        assert_eq!(parsed.len(), all.len());
        for (p, a) in parsed.iter().zip(&all) {
            assert_eq!(p.label(), a.label());
            for (x, y) in p.phases.iter().zip(&a.phases) {
                let d = reduce_phase(x - y);
                assert!(d.min(TAU - d) < 1e-10, "{} {x} {y}", a.label());
            }
        }
    }
}
