//! Adaptive Dormand–Prince 5(4) stepper for a two-component complex state.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type State = [Complex64; 2];

/// Tolerances and step budget for the adaptive integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_steps: usize,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_steps: 1_000_000,
        }
    }
}

impl IntegratorConfig {
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::invalid("rel_tol", "must be positive and finite"));
        }
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::invalid("abs_tol", "must be positive and finite"));
        }
        if self.max_steps == 0 {
            return Err(Error::invalid("max_steps", "must be at least 1"));
        }
        Ok(())
    }
}

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

// 5th-order weights minus embedded 4th-order weights.
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const SAFETY: f64 = 0.9;
const MIN_FACTOR: f64 = 0.2;
const MAX_FACTOR: f64 = 5.0;

#[inline]
fn axpy(y: &State, h: f64, terms: &[(f64, &State)]) -> State {
    let mut out = *y;
    for &(w, k) in terms {
        if w != 0.0 {
            out[0] += k[0] * (h * w);
            out[1] += k[1] * (h * w);
        }
    }
    out
}

/// Integrates `y' = f(t, y)` from `t0` to `t1 > t0`, returning `y(t1)`.
///
/// `h_init` is only a first guess; the controller adjusts it from the
/// embedded error estimate. Local error is measured as the RMS over the four
/// real components of `err / (abs_tol + rel_tol * |y|)`.
pub fn integrate<F>(f: F, t0: f64, t1: f64, y0: State, h_init: f64, config: &IntegratorConfig) -> Result<State>
where
    F: Fn(f64, &State) -> State,
{
    config.validate()?;
    if !(t0.is_finite() && t1.is_finite()) || t1 < t0 {
        return Err(Error::invalid("window", format!("[{t0}, {t1}]")));
    }
    if t1 == t0 {
        return Ok(y0);
    }

    let span = t1 - t0;
    let mut h = h_init.clamp(span * 1e-12, span);
    let mut t = t0;
    let mut y = y0;
    let mut k1 = f(t, &y);
    let mut last_err = 0.0;

    for _ in 0..config.max_steps {
        let last = t + h >= t1;
        if last {
            h = t1 - t;
        }

        let k2 = f(t + C2 * h, &axpy(&y, h, &[(A21, &k1)]));
        let k3 = f(t + C3 * h, &axpy(&y, h, &[(A31, &k1), (A32, &k2)]));
        let k4 = f(t + C4 * h, &axpy(&y, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]));
        let k5 = f(
            t + C5 * h,
            &axpy(&y, h, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
        );
        let k6 = f(
            t + h,
            &axpy(&y, h, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]),
        );
        let y_new = axpy(&y, h, &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)]);
        let k7 = f(t + h, &y_new);

        let mut sum = 0.0;
        for i in 0..2 {
            let err = (k1[i] * E1 + k3[i] * E3 + k4[i] * E4 + k5[i] * E5 + k6[i] * E6 + k7[i] * E7) * h;
            let scale_re = config.abs_tol + config.rel_tol * y[i].re.abs().max(y_new[i].re.abs());
            let scale_im = config.abs_tol + config.rel_tol * y[i].im.abs().max(y_new[i].im.abs());
            sum += (err.re / scale_re).powi(2) + (err.im / scale_im).powi(2);
        }
        let err = (sum / 4.0).sqrt();
        if !err.is_finite() {
            return Err(Error::invalid("integrand", "non-finite derivative"));
        }
        last_err = err;

        if err <= 1.0 {
            t = if last { t1 } else { t + h };
            y = y_new;
            k1 = k7;
            if last {
                return Ok(y);
            }
            let factor = if err == 0.0 {
                MAX_FACTOR
            } else {
                (SAFETY * err.powf(-0.2)).clamp(MIN_FACTOR, MAX_FACTOR)
            };
            h *= factor;
        } else {
            h *= (SAFETY * err.powf(-0.2)).clamp(MIN_FACTOR, 1.0);
            if h < span * 1e-14 {
                break;
            }
        }
    }

    Err(Error::StepLimit {
        max_steps: config.max_steps,
        t_reached: t,
        achieved_tol: last_err * config.rel_tol,
    })
}
