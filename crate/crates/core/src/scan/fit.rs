//! Error-scaling fits and high-fidelity bandwidths.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ScanResult;
use crate::error::{Error, Result};
use crate::pulse::detuned_rect_propagator;
use crate::sequences::{CompositePhases, PhaseGateSequence};
use crate::su2::{infidelity, TargetGate};

/// Values below this are rounding noise and are left out of slope fits.
pub const NOISE_FLOOR: f64 = 1e-13;

/// Log-spaced perturbation magnitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsRange {
    pub lo: f64,
    pub hi: f64,
    pub samples: usize,
}

impl Default for EpsRange {
    fn default() -> Self {
        Self {
            lo: 1e-3,
            hi: 1e-2,
            samples: 20,
        }
    }
}

impl EpsRange {
    pub fn new(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.lo > 0.0 && self.lo < self.hi && self.hi.is_finite()) {
            return Err(Error::invalid(
                "eps_range",
                format!("need 0 < lo < hi, got [{}, {}]", self.lo, self.hi),
            ));
        }
        if self.samples < 2 {
            return Err(Error::invalid("eps_range", "need at least 2 samples"));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        let (a, b) = (self.lo.ln(), self.hi.ln());
        let last = (self.samples - 1) as f64;
        (0..self.samples)
            .map(|i| (a + (b - a) * i as f64 / last).exp())
            .collect()
    }
}

/// Direction of the systematic error applied to a rectangular constituent
/// pulse of unit duration at its nominal area.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Perturbation {
    /// `A = A₀(1 + ε)`.
    Area,
    /// `ΔT = ε`.
    Detuning,
    /// `(δΩ/Ω, ΔT) = ε·(cos θ, sin θ)` with `θ` drawn from a seeded RNG.
    RandomDirection { seed: u64 },
}

impl Perturbation {
    /// Unit vector in (relative amplitude error, detuning·T) space.
    pub fn direction(&self) -> (f64, f64) {
        match *self {
            Perturbation::Area => (1.0, 0.0),
            Perturbation::Detuning => (0.0, 1.0),
            Perturbation::RandomDirection { seed } => {
                let theta = ChaCha8Rng::seed_from_u64(seed).random_range(0.0..TAU);
                (theta.cos(), theta.sin())
            }
        }
    }
}

/// What the error order is measured on.
#[derive(Debug, Clone, Copy)]
pub enum OrderTarget<'a> {
    /// Gate infidelity `F`.
    Gate(&'a PhaseGateSequence),
    /// `|a|` of the inversion sequence.
    Inversion(&'a CompositePhases),
}

impl OrderTarget<'_> {
    fn source(&self) -> &CompositePhases {
        match self {
            OrderTarget::Gate(g) => &g.source,
            OrderTarget::Inversion(cp) => cp,
        }
    }
}

/// `(ε, F)` or `(ε, |a|)` samples over the perturbation range.
pub fn error_curve(target: OrderTarget<'_>, perturbation: Perturbation, range: EpsRange) -> Result<Vec<(f64, f64)>> {
    range.validate()?;
    let (du, dd) = perturbation.direction();
    let area = target.source().nominal_per_pulse_area;
    range
        .values()
        .into_iter()
        .map(|eps| {
            let pulse = detuned_rect_propagator(area * (1.0 + eps * du), eps * dd, 1.0);
            let value = match target {
                OrderTarget::Gate(seq) => infidelity(&seq.propagator(&pulse), &TargetGate::new(seq.gate_phase)).value(),
                OrderTarget::Inversion(cp) => cp.propagator(&pulse)?.a().norm(),
            };
            Ok((eps, value))
        })
        .collect()
}

/// Fitted exponent `m` in `F ∝ ε^m` (or `|a| ∝ ε^m`).
pub fn error_order(target: OrderTarget<'_>, perturbation: Perturbation, range: EpsRange) -> Result<f64> {
    let curve = error_curve(target, perturbation, range)?;
    let (xs, ys): (Vec<f64>, Vec<f64>) = curve.into_iter().unzip();
    fit_loglog_slope(&xs, &ys)
}

/// Ordinary least-squares slope of `ln y` against `ln x`, skipping samples
/// with `y` below [`NOISE_FLOOR`].
pub fn fit_loglog_slope(xs: &[f64], ys: &[f64]) -> Result<f64> {
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys)
        .filter(|&(&x, &y)| x > 0.0 && y >= NOISE_FLOOR && y.is_finite())
        .map(|(&x, &y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 3 {
        return Err(Error::UnresolvableSlope(format!(
            "only {} of {} samples above the {NOISE_FLOOR:e} noise floor; use larger eps",
            pts.len(),
            xs.len()
        )));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::UnresolvableSlope("all abscissae coincide".into()));
    }
    Ok(sxy / sxx)
}

/// Width, in axis units, of the longest contiguous run of samples with
/// infidelity below `threshold`. Each sample owns the cell between the
/// midpoints to its neighbours; end samples own a full neighbour spacing, so
/// a single isolated sample on a uniform grid has width one spacing.
pub fn high_fidelity_bandwidth(result: &ScanResult, threshold: f64) -> Result<f64> {
    if !result.is_1d() {
        return Err(Error::invalid("scan", "bandwidth needs a 1D scan"));
    }
    let x = result.axes[0].values();
    let n = x.len();
    let cell = |i: usize| -> f64 {
        if i == 0 {
            x[1] - x[0]
        } else if i == n - 1 {
            x[n - 1] - x[n - 2]
        } else {
            0.5 * (x[i + 1] - x[i - 1])
        }
    };
    let mut best: f64 = 0.0;
    let mut run = 0.0;
    for (i, &v) in result.values.iter().enumerate() {
        if v < threshold {
            run += cell(i);
            best = best.max(run);
        } else {
            run = 0.0;
        }
    }
    Ok(best)
}
