//! Single-pulse propagators.
//!
//! The Hamiltonian is taken in the interaction picture with zero diagonal,
//!
//! ```text
//!     H(t) = ½ Ω(t) e^{−iD(t)} |1⟩⟨2| + h.c.,   D(t) = ∫_{t_s}^{t} Δ(t′) dt′,
//! ```
//!
//! where `t_s` is the start of the pulse window. Every pulse propagator is
//! therefore in SU(2), and a drive phase enters exactly as `b → b e^{iφ}`.
//!
//! Rectangular pulses with constant detuning have a closed form; all other
//! models go through the adaptive integrator.

use std::f64::consts::{LN_2, PI};
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::integrator;
pub use crate::integrator::IntegratorConfig;
use crate::su2::Propagator;

/// Sech pulses are integrated over `t ∈ [−w·T, w·T]` with this `w` by default.
pub const DEFAULT_SECH_WINDOW: f64 = 25.0;

/// Smallest accepted sech half-window, in units of `T`.
pub const MIN_SECH_WINDOW: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PulseShape {
    /// Constant Rabi frequency on `[0, duration]`.
    Rectangular,
    /// `Ω₀ sech(t/T)` on `[−wT, wT]`.
    Sech,
}

impl fmt::Display for PulseShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PulseShape::Rectangular => "rect",
            PulseShape::Sech => "sech",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DetuningModel {
    /// Fixed detuning `Δ` in rad/time.
    Constant(f64),
    /// `Δ(t) = B tanh(t/T)` with chirp rate `B` in rad/time.
    TanhChirp(f64),
}

impl fmt::Display for DetuningModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetuningModel::Constant(d) => write!(f, "constant({d})"),
            DetuningModel::TanhChirp(b) => write!(f, "tanh_chirp({b})"),
        }
    }
}

/// One constituent pulse of a composite sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseSpec {
    pub shape: PulseShape,
    /// Peak Rabi frequency `Ω₀`, rad/time.
    pub peak_rabi: f64,
    /// Pulse length (rectangular) or the width `T` of `sech(t/T)`.
    pub duration: f64,
    pub detuning: DetuningModel,
    /// Sech truncation half-width in units of `duration`.
    pub window_half_width: f64,
}

impl PulseSpec {
    pub fn rectangular(peak_rabi: f64, duration: f64) -> Self {
        Self {
            shape: PulseShape::Rectangular,
            peak_rabi,
            duration,
            detuning: DetuningModel::Constant(0.0),
            window_half_width: DEFAULT_SECH_WINDOW,
        }
    }

    /// Resonant rectangular pulse of unit duration and the given area.
    pub fn rectangular_with_area(area: f64) -> Self {
        Self::rectangular(area, 1.0)
    }

    pub fn sech(peak_rabi: f64, width: f64) -> Self {
        Self {
            shape: PulseShape::Sech,
            peak_rabi,
            duration: width,
            detuning: DetuningModel::Constant(0.0),
            window_half_width: DEFAULT_SECH_WINDOW,
        }
    }

    pub fn with_detuning(mut self, detuning: DetuningModel) -> Self {
        self.detuning = detuning;
        self
    }

    pub fn with_window(mut self, half_width: f64) -> Self {
        self.window_half_width = half_width;
        self
    }

    /// Pulse area: `Ω₀·T` for rectangular pulses, `π·Ω₀·T` for sech pulses
    /// (the untruncated value).
    pub fn area(&self) -> f64 {
        match self.shape {
            PulseShape::Rectangular => self.peak_rabi * self.duration,
            PulseShape::Sech => PI * self.peak_rabi * self.duration,
        }
    }

    /// Peak Rabi frequency that gives `area` at this pulse's duration.
    pub fn peak_rabi_for_area(shape: PulseShape, area: f64, duration: f64) -> f64 {
        match shape {
            PulseShape::Rectangular => area / duration,
            PulseShape::Sech => area / (PI * duration),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.peak_rabi.is_finite() || self.peak_rabi < 0.0 {
            return Err(Error::invalid(
                "peak_rabi",
                format!("{} (must be finite, >= 0)", self.peak_rabi),
            ));
        }
        // Zero duration is accepted as the empty pulse so that duration scans
        // may start at 0.
        if !self.duration.is_finite() || self.duration < 0.0 {
            return Err(Error::invalid(
                "duration",
                format!("{} (must be finite, >= 0)", self.duration),
            ));
        }
        let detuning = match self.detuning {
            DetuningModel::Constant(d) | DetuningModel::TanhChirp(d) => d,
        };
        if !detuning.is_finite() {
            return Err(Error::invalid("detuning", "non-finite"));
        }
        if self.shape == PulseShape::Sech
            && !(self.window_half_width.is_finite() && self.window_half_width >= MIN_SECH_WINDOW)
        {
            return Err(Error::invalid(
                "window_half_width",
                format!("{} (must be >= {MIN_SECH_WINDOW})", self.window_half_width),
            ));
        }
        Ok(())
    }

    fn window(&self) -> (f64, f64) {
        match self.shape {
            PulseShape::Rectangular => (0.0, self.duration),
            PulseShape::Sech => {
                let half = self.window_half_width * self.duration;
                (-half, half)
            }
        }
    }

    fn rabi_at(&self, t: f64) -> f64 {
        match self.shape {
            PulseShape::Rectangular => self.peak_rabi,
            PulseShape::Sech => self.peak_rabi / (t / self.duration).cosh(),
        }
    }

    /// Accumulated detuning phase `D(t)` measured from `start`.
    fn detuning_phase(&self, start: f64, t: f64) -> f64 {
        match self.detuning {
            DetuningModel::Constant(d) => d * (t - start),
            DetuningModel::TanhChirp(rate) => {
                let w = self.duration;
                rate * w * (ln_cosh(t / w) - ln_cosh(start / w))
            }
        }
    }
}

fn ln_cosh(x: f64) -> f64 {
    let ax = x.abs();
    ax + (-2.0 * ax).exp().ln_1p() - LN_2
}

/// `(cos(A/2), −i sin(A/2))`.
pub fn resonant_rect_propagator(area: f64) -> Propagator {
    let (s, c) = (area / 2.0).sin_cos();
    Propagator::from_parts(Complex64::new(c, 0.0), Complex64::new(0.0, -s))
}

/// Closed form for a rectangular pulse with constant detuning:
/// `U = diag(e^{−iΔT/2}, e^{iΔT/2}) · exp(−i T [[−Δ/2, Ω/2], [Ω/2, Δ/2]])`.
pub fn detuned_rect_propagator(peak_rabi: f64, detuning: f64, duration: f64) -> Propagator {
    if detuning == 0.0 {
        return resonant_rect_propagator(peak_rabi * duration);
    }
    let g = 0.5 * peak_rabi.hypot(detuning);
    let (s, c) = (g * duration).sin_cos();
    let sinc = s / g;
    let frame = Complex64::cis(-0.5 * detuning * duration);
    let a = frame * Complex64::new(c, 0.5 * detuning * sinc);
    let b = frame * Complex64::new(0.0, -0.5 * peak_rabi * sinc);
    Propagator::from_parts(a, b)
}

/// Integrates the Schrödinger equation across the pulse window.
///
/// Always numerical, whatever the pulse model; see [`pulse_propagator`] for
/// the dispatching entry point.
pub fn integrate_pulse(spec: &PulseSpec, config: &IntegratorConfig) -> Result<Propagator> {
    spec.validate()?;
    config.validate()?;
    if spec.duration == 0.0 || spec.peak_rabi == 0.0 {
        return Ok(Propagator::IDENTITY);
    }
    let (start, end) = spec.window();

    let rhs = |t: f64, y: &integrator::State| {
        let half_rabi = 0.5 * spec.rabi_at(t);
        let coupling = Complex64::cis(-spec.detuning_phase(start, t)) * half_rabi;
        let minus_i = Complex64::new(0.0, -1.0);
        [minus_i * coupling * y[1], minus_i * coupling.conj() * y[0]]
    };

    // Initial guess: a small fraction of the shortest time scale in play.
    let rate = spec.peak_rabi.max(match spec.detuning {
        DetuningModel::Constant(d) | DetuningModel::TanhChirp(d) => d.abs(),
    });
    let h0 = (0.01 / rate).min(0.01 * spec.duration);

    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let column = integrator::integrate(rhs, start, end, [one, zero], h0, config)?;
    // First column of [[a, b], [−b*, a*]] is (a, −b*).
    Propagator::normalized(column[0], -column[1].conj())
}

/// Propagator of one pulse: closed form for rectangular pulses with constant
/// detuning, adaptive integration otherwise.
pub fn pulse_propagator(spec: &PulseSpec, config: &IntegratorConfig) -> Result<Propagator> {
    match (spec.shape, spec.detuning) {
        (PulseShape::Rectangular, DetuningModel::Constant(d)) => {
            spec.validate()?;
            Ok(detuned_rect_propagator(spec.peak_rabi, d, spec.duration))
        }
        _ => integrate_pulse(spec, config),
    }
}

/// `|b|²`.
pub fn transition_probability(u: &Propagator) -> f64 {
    u.transition_probability()
}
