//! Parameter sweeps of gate infidelity.
//!
//! Every grid point is an independent, pure evaluation: instantiate the
//! constituent pulse, compute its propagator, compose the gate and compare
//! with the target. Points are evaluated in parallel and stored by index, so
//! the output does not depend on the number of workers.
//!
//! Sweep values are dimensionless and measured against the template pulse's
//! duration `T₀`: `ΔT` means `Δ·T₀`, `Ω₀T` means `Ω₀·T₀`, and the area
//! fraction sets `Ω₀` so that a pulse of duration `T₀` has area `x·π`. This
//! keeps the axes independent of each other, e.g. sweeping duration and
//! detuning together.

mod csv;
mod fit;
mod presets;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

pub use self::fit::{
    error_curve, error_order, fit_loglog_slope, high_fidelity_bandwidth, EpsRange, OrderTarget, Perturbation,
    NOISE_FLOOR,
};
pub use self::presets::{preset, presets, Preset, PresetRun};
use crate::error::{Error, Result};
use crate::pulse::{pulse_propagator, DetuningModel, IntegratorConfig, PulseShape, PulseSpec};
use crate::sequences::PhaseGateSequence;
use crate::su2::{infidelity, TargetGate};

/// Upper bound on samples per axis.
pub const MAX_SAMPLES: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepParameter {
    /// `A/π` at the template duration.
    PulseAreaFraction,
    /// `Δ·T₀`; needs a constant-detuning template.
    DetuningTimesT,
    /// `Ω₀·T₀`.
    PeakRabiTimesT,
    /// `T/T₀`.
    DurationFraction,
}

impl SweepParameter {
    pub const ALL: [SweepParameter; 4] = [
        SweepParameter::PulseAreaFraction,
        SweepParameter::DetuningTimesT,
        SweepParameter::PeakRabiTimesT,
        SweepParameter::DurationFraction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepParameter::PulseAreaFraction => "pulse_area_fraction",
            SweepParameter::DetuningTimesT => "detuning_times_t",
            SweepParameter::PeakRabiTimesT => "peak_rabi_times_t",
            SweepParameter::DurationFraction => "duration_fraction",
        }
    }

    /// Area fraction and Ω₀T both set the peak Rabi frequency.
    fn target_field(self) -> u8 {
        match self {
            SweepParameter::PulseAreaFraction | SweepParameter::PeakRabiTimesT => 0,
            SweepParameter::DetuningTimesT => 1,
            SweepParameter::DurationFraction => 2,
        }
    }
}

impl fmt::Display for SweepParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "area" | "pulse_area_fraction" => Ok(SweepParameter::PulseAreaFraction),
            "detuning" | "detuning_times_t" => Ok(SweepParameter::DetuningTimesT),
            "rabi" | "peak_rabi_times_t" => Ok(SweepParameter::PeakRabiTimesT),
            "duration" | "duration_fraction" => Ok(SweepParameter::DurationFraction),
            _ => Err(Error::UnknownVariant {
                kind: "sweep parameter",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

impl Spacing {
    pub fn name(self) -> &'static str {
        match self {
            Spacing::Linear => "linear",
            Spacing::Log => "log",
        }
    }
}

impl FromStr for Spacing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" | "lin" => Ok(Spacing::Linear),
            "log" => Ok(Spacing::Log),
            _ => Err(Error::UnknownVariant {
                kind: "spacing",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepAxis {
    pub parameter: SweepParameter,
    pub start: f64,
    pub stop: f64,
    pub samples: usize,
    pub spacing: Spacing,
}

impl SweepAxis {
    pub fn new(parameter: SweepParameter, start: f64, stop: f64, samples: usize) -> Result<Self> {
        Self::with_spacing(parameter, start, stop, samples, Spacing::Linear)
    }

    pub fn with_spacing(
        parameter: SweepParameter,
        start: f64,
        stop: f64,
        samples: usize,
        spacing: Spacing,
    ) -> Result<Self> {
        let axis = Self {
            parameter,
            start,
            stop,
            samples,
            spacing,
        };
        axis.validate()?;
        Ok(axis)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.start.is_finite() && self.stop.is_finite()) || self.start >= self.stop {
            return Err(Error::invalid(
                "axis range",
                format!("need finite start < stop, got [{}, {}]", self.start, self.stop),
            ));
        }
        if self.samples < 2 || self.samples > MAX_SAMPLES {
            return Err(Error::invalid(
                "samples",
                format!("{} (must be in 2..={MAX_SAMPLES})", self.samples),
            ));
        }
        if self.spacing == Spacing::Log && self.start <= 0.0 {
            return Err(Error::invalid("axis range", "log spacing needs start > 0"));
        }
        Ok(())
    }

    /// The `i`-th sample. Linear grids hit both end points exactly.
    pub fn value(&self, i: usize) -> f64 {
        let last = (self.samples - 1) as f64;
        let i = i as f64;
        match self.spacing {
            Spacing::Linear => {
                if i == last {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * i / last
                }
            }
            Spacing::Log => {
                let (lo, hi) = (self.start.ln(), self.stop.ln());
                if i == last {
                    self.stop
                } else {
                    (lo + (hi - lo) * i / last).exp()
                }
            }
        }
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.samples).map(|i| self.value(i)).collect()
    }
}

/// Worker and integrator settings for a scan.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ScanOptions {
    pub integrator: IntegratorConfig,
    /// `None` uses rayon's global pool.
    pub threads: Option<usize>,
}

/// Descriptive header carried with every scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanMetadata {
    pub family: String,
    pub variant: String,
    pub gate_phase: f64,
    pub pulse: String,
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Additional `key: value` header lines (run manifest, notes).
    pub extra: Vec<(String, String)>,
}

impl ScanMetadata {
    fn new(seq: &PhaseGateSequence, template: &PulseSpec, options: &ScanOptions) -> Self {
        Self {
            family: seq.source.family.to_string(),
            variant: seq.source.variant.clone(),
            gate_phase: seq.gate_phase,
            pulse: describe_pulse(template),
            rel_tol: options.integrator.rel_tol,
            abs_tol: options.integrator.abs_tol,
            extra: Vec::new(),
        }
    }
}

pub fn describe_pulse(p: &PulseSpec) -> String {
    let mut s = format!(
        "{}(peak_rabi={}, duration={}, detuning={}",
        p.shape, p.peak_rabi, p.duration, p.detuning
    );
    if p.shape == PulseShape::Sech {
        s.push_str(&format!(", window={}", p.window_half_width));
    }
    s.push(')');
    s
}

/// Infidelity grid over one or two axes, row-major in axis order.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    pub axes: Vec<SweepAxis>,
    pub values: Vec<f64>,
    pub metadata: ScanMetadata,
}

impl ScanResult {
    pub fn is_1d(&self) -> bool {
        self.axes.len() == 1
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        match self.axes.len() {
            1 => self.values[i],
            _ => self.values[i * self.axes[1].samples + j],
        }
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Index and value of the smallest infidelity.
    pub fn argmin(&self) -> (usize, f64) {
        self.values.iter().copied().enumerate().fold(
            (0, f64::INFINITY),
            |best, (i, v)| if v < best.1 { (i, v) } else { best },
        )
    }

    /// Fraction of grid points with infidelity below `threshold`.
    pub fn fraction_below(&self, threshold: f64) -> f64 {
        let n = self.values.iter().filter(|&&v| v < threshold).count();
        n as f64 / self.values.len() as f64
    }

    /// Swaps the two axes of a 2D result.
    pub fn transposed(&self) -> ScanResult {
        assert_eq!(self.axes.len(), 2, "transpose needs a 2D scan");
        let (nx, ny) = (self.axes[0].samples, self.axes[1].samples);
        let mut values = vec![0.0; self.values.len()];
        for i in 0..nx {
            for j in 0..ny {
                values[j * nx + i] = self.values[i * ny + j];
            }
        }
        ScanResult {
            axes: vec![self.axes[1], self.axes[0]],
            values,
            metadata: self.metadata.clone(),
        }
    }
}

/// Builds the pulse for one grid point.
pub fn instantiate(template: &PulseSpec, assignments: &[(SweepParameter, f64)]) -> Result<PulseSpec> {
    let reference = template.duration;
    let mut spec = *template;
    for &(parameter, x) in assignments {
        match parameter {
            SweepParameter::PulseAreaFraction => {
                spec.peak_rabi = PulseSpec::peak_rabi_for_area(template.shape, x * std::f64::consts::PI, reference);
            }
            SweepParameter::PeakRabiTimesT => spec.peak_rabi = x / reference,
            SweepParameter::DetuningTimesT => match template.detuning {
                DetuningModel::Constant(_) => spec.detuning = DetuningModel::Constant(x / reference),
                DetuningModel::TanhChirp(_) => {
                    return Err(Error::InapplicableAxis {
                        parameter: parameter.name(),
                        reason: "template uses a tanh chirp, not a constant detuning".into(),
                    })
                }
            },
            SweepParameter::DurationFraction => spec.duration = x * reference,
        }
    }
    Ok(spec)
}

fn check_axes(axes: &[SweepAxis], template: &PulseSpec) -> Result<()> {
    template.validate()?;
    if template.duration <= 0.0 {
        return Err(Error::invalid("duration", "template duration must be > 0"));
    }
    for (k, axis) in axes.iter().enumerate() {
        axis.validate()?;
        if axis.parameter == SweepParameter::DetuningTimesT && matches!(template.detuning, DetuningModel::TanhChirp(_))
        {
            return Err(Error::InapplicableAxis {
                parameter: axis.parameter.name(),
                reason: "template uses a tanh chirp, not a constant detuning".into(),
            });
        }
        if axis.parameter == SweepParameter::DurationFraction && axis.start < 0.0 {
            return Err(Error::InapplicableAxis {
                parameter: axis.parameter.name(),
                reason: "durations must be non-negative".into(),
            });
        }
        for other in &axes[..k] {
            if other.parameter.target_field() == axis.parameter.target_field() {
                return Err(Error::InapplicableAxis {
                    parameter: axis.parameter.name(),
                    reason: format!("conflicts with axis `{}`", other.parameter.name()),
                });
            }
        }
    }
    Ok(())
}

/// Gate infidelity for a single pulse instance.
pub fn gate_infidelity(seq: &PhaseGateSequence, pulse: &PulseSpec, config: &IntegratorConfig) -> Result<f64> {
    let u = pulse_propagator(pulse, config)?;
    let gate = seq.propagator(&u);
    Ok(infidelity(&gate, &TargetGate::new(seq.gate_phase)).value())
}

fn run_grid(
    axes: &[SweepAxis],
    seq: &PhaseGateSequence,
    template: &PulseSpec,
    options: &ScanOptions,
) -> Result<ScanResult> {
    check_axes(axes, template)?;
    options.integrator.validate()?;
    let strides: Vec<usize> = match axes.len() {
        1 => vec![1],
        _ => vec![axes[1].samples, 1],
    };
    let total: usize = axes.iter().map(|a| a.samples).product();

    let eval = |idx: usize| -> Result<f64> {
        let assignments: Vec<(SweepParameter, f64)> = axes
            .iter()
            .zip(&strides)
            .map(|(axis, &stride)| (axis.parameter, axis.value((idx / stride) % axis.samples)))
            .collect();
        instantiate(template, &assignments)
            .and_then(|spec| gate_infidelity(seq, &spec, &options.integrator))
            .map_err(|e| Error::SampleFailure {
                coords: assignments.iter().map(|&(_, x)| x).collect(),
                source: Box::new(e),
            })
    };
    let compute = || (0..total).into_par_iter().map(eval).collect::<Result<Vec<f64>>>();

    let values = match options.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::invalid("threads", e.to_string()))?
            .install(compute)?,
        None => compute()?,
    };

    Ok(ScanResult {
        axes: axes.to_vec(),
        values,
        metadata: ScanMetadata::new(seq, template, options),
    })
}

pub fn scan_1d(
    axis: &SweepAxis,
    seq: &PhaseGateSequence,
    template: &PulseSpec,
    options: &ScanOptions,
) -> Result<ScanResult> {
    run_grid(std::slice::from_ref(axis), seq, template, options)
}

pub fn scan_2d(
    axis_x: &SweepAxis,
    axis_y: &SweepAxis,
    seq: &PhaseGateSequence,
    template: &PulseSpec,
    options: &ScanOptions,
) -> Result<ScanResult> {
    run_grid(&[*axis_x, *axis_y], seq, template, options)
}
