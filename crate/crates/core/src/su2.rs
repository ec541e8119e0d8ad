//! Exact SU(2) algebra in Cayley-Klein form.
//!
//! A propagator is stored as the pair `(a, b)` standing for the matrix
//!
//! ```text
//!     [  a    b  ]
//!     [ -b*   a* ]
//! ```
//!
//! Every propagator of a traceless Hamiltonian has this form, so a constant
//! phase shift of the drive, `Ω → Ω e^{iφ}`, is the exact map `b → b e^{iφ}`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance on `|a|² + |b|² = 1` accepted by [`Propagator::new`].
pub const UNITARITY_TOL: f64 = 1e-12;

/// A 2×2 special-unitary propagator in Cayley-Klein form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Propagator {
    a: Complex64,
    b: Complex64,
}

impl Propagator {
    pub const IDENTITY: Propagator = Propagator {
        a: Complex64::new(1.0, 0.0),
        b: Complex64::new(0.0, 0.0),
    };

    /// Builds a propagator, rejecting pairs off the unit sphere by more than
    /// [`UNITARITY_TOL`].
    pub fn new(a: Complex64, b: Complex64) -> Result<Self> {
        let norm = a.norm_sqr() + b.norm_sqr();
        if !norm.is_finite() || (norm - 1.0).abs() > UNITARITY_TOL {
            return Err(Error::invalid(
                "propagator",
                format!("|a|^2 + |b|^2 = {norm}, expected 1"),
            ));
        }
        Ok(Self { a, b })
    }

    /// Projects `(a, b)` back onto the unit sphere. Used by numerical
    /// integrators whose output drifts by the integration tolerance.
    pub fn normalized(a: Complex64, b: Complex64) -> Result<Self> {
        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::invalid("propagator", "zero or non-finite norm"));
        }
        Ok(Self {
            a: a / norm,
            b: b / norm,
        })
    }

    /// Caller guarantees unit norm.
    pub(crate) const fn from_parts(a: Complex64, b: Complex64) -> Self {
        Self { a, b }
    }

    #[inline]
    pub fn a(&self) -> Complex64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> Complex64 {
        self.b
    }

    /// `|a|² + |b|² − 1`.
    pub fn unitarity_error(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr() - 1.0).abs()
    }

    /// Transition probability `|b|²`.
    pub fn transition_probability(&self) -> f64 {
        self.b.norm_sqr().min(1.0)
    }

    /// The full matrix, row-major.
    pub fn matrix(&self) -> [[Complex64; 2]; 2] {
        [[self.a, self.b], [-self.b.conj(), self.a.conj()]]
    }

    /// The propagator of the same pulse with its drive phase shifted by `phase`.
    #[inline]
    pub fn with_phase(&self, phase: f64) -> Propagator {
        Propagator {
            a: self.a,
            b: self.b * Complex64::cis(phase),
        }
    }

    /// Matrix product `self · first`: `first` acts first in time.
    #[inline]
    pub fn after(&self, first: &Propagator) -> Propagator {
        compose(self, first)
    }

    pub fn adjoint(&self) -> Propagator {
        Propagator {
            a: self.a.conj(),
            b: -self.b,
        }
    }
}

impl Default for Propagator {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl fmt::Display for Propagator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a = {:+.12e}{:+.12e}i, b = {:+.12e}{:+.12e}i)",
            self.a.re, self.a.im, self.b.re, self.b.im
        )
    }
}

/// Free-function form of [`Propagator::with_phase`].
#[inline]
pub fn with_phase(u: &Propagator, phase: f64) -> Propagator {
    u.with_phase(phase)
}

/// `second · first` in Cayley-Klein form.
#[inline]
pub fn compose(second: &Propagator, first: &Propagator) -> Propagator {
    Propagator {
        a: second.a * first.a - second.b * first.b.conj(),
        b: second.a * first.b + second.b * first.a.conj(),
    }
}

/// Propagator of identical pulses applied with the listed phases; the first
/// listed phase acts first in time.
pub fn sequence_propagator(phases: &[f64], pulse: &Propagator) -> Result<Propagator> {
    if phases.is_empty() {
        return Err(Error::MalformedSequence("empty phase list".into()));
    }
    Ok(phases.iter().fold(Propagator::IDENTITY, |acc, &phase| {
        compose(&pulse.with_phase(phase), &acc)
    }))
}

/// The ideal phase gate `diag(e^{iΦ/2}, e^{−iΦ/2})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TargetGate {
    pub gate_phase: f64,
}

impl TargetGate {
    pub fn new(gate_phase: f64) -> Self {
        Self { gate_phase }
    }

    pub fn matrix(&self) -> Propagator {
        target_gate_matrix(self)
    }
}

pub fn target_gate_matrix(gate: &TargetGate) -> Propagator {
    Propagator::from_parts(Complex64::cis(gate.gate_phase / 2.0), Complex64::new(0.0, 0.0))
}

/// Frobenius distance between two unitaries. Always in `[0, 4]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Infidelity(f64);

impl Infidelity {
    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<Infidelity> for f64 {
    fn from(f: Infidelity) -> f64 {
        f.0
    }
}

impl fmt::Display for Infidelity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `sqrt(Σ_jk |U_jk − Φ_jk|²)` over all four entries. No global phase is
/// removed, so two propagators differing by `−1` are at distance `2√2`.
pub fn infidelity(actual: &Propagator, target: &TargetGate) -> Infidelity {
    let t = target.matrix();
    // The Cayley-Klein structure makes the two rows contribute equally.
    let d = 2.0 * ((actual.a - t.a).norm_sqr() + (actual.b - t.b).norm_sqr());
    Infidelity(d.sqrt())
}

/// Frobenius distance minimized over a global phase `e^{iθ}` on `actual`:
/// `sqrt(4 − 2|Tr(Φ† U)|)`. Not used by the robustness scans.
pub fn phase_invariant_infidelity(actual: &Propagator, target: &TargetGate) -> Infidelity {
    let t = target.matrix();
    // For two SU(2) matrices the trace overlap is real.
    let overlap = 2.0 * (t.a.conj() * actual.a + t.b.conj() * actual.b).re;
    Infidelity((4.0 - 2.0 * overlap.abs()).max(0.0).sqrt())
}
