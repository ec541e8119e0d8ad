//! Independent reference implementations shared by the integration tests.
//! Nothing here calls into the library's numerics.

#![allow(dead_code)]

use num_complex::Complex64;

pub type M2 = [[Complex64; 2]; 2];

pub const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn identity() -> M2 {
    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]
}

pub fn matmul(x: &M2, y: &M2) -> M2 {
    let mut out = [[c(0.0, 0.0); 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

pub fn scale(x: &M2, s: Complex64) -> M2 {
    [[x[0][0] * s, x[0][1] * s], [x[1][0] * s, x[1][1] * s]]
}

pub fn add(x: &M2, y: &M2) -> M2 {
    [
        [x[0][0] + y[0][0], x[0][1] + y[0][1]],
        [x[1][0] + y[1][0], x[1][1] + y[1][1]],
    ]
}

pub fn max_abs_diff(x: &M2, y: &M2) -> f64 {
    let mut m: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            m = m.max((x[i][j] - y[i][j]).norm());
        }
    }
    m
}

/// Resonant pulse of area `area` and phase `phase`, written out from the
/// rotation `exp(−i A/2 (cos φ σx − sin φ σy))`.
pub fn phased_pulse(area: f64, phase: f64) -> M2 {
    let (s, co) = (area / 2.0).sin_cos();
    let off = -I * s;
    [
        [c(co, 0.0), off * Complex64::cis(phase)],
        [off * Complex64::cis(-phase), c(co, 0.0)],
    ]
}

/// Product of phased copies of a general pulse matrix `u`, first phase
/// applied first: `U_φ = diag(e^{iφ/2}, e^{-iφ/2}) · u · diag(e^{-iφ/2}, e^{iφ/2})`.
pub fn phased_product(u: &M2, phases: &[f64]) -> M2 {
    let mut acc = identity();
    for &p in phases {
        let d = Complex64::cis(p / 2.0);
        let left = [[d, c(0.0, 0.0)], [c(0.0, 0.0), d.conj()]];
        let right = [[d.conj(), c(0.0, 0.0)], [c(0.0, 0.0), d]];
        let up = matmul(&left, &matmul(u, &right));
        acc = matmul(&up, &acc);
    }
    acc
}

/// `exp(M)` by scaling and squaring with a 30-term Taylor series.
pub fn expm(m: &M2) -> M2 {
    let norm: f64 = m.iter().flatten().map(|z| z.norm()).sum();
    let mut k = 0;
    while norm / 2f64.powi(k) > 0.25 {
        k += 1;
    }
    let a = scale(m, c(1.0 / 2f64.powi(k), 0.0));
    let mut term = identity();
    let mut sum = identity();
    for n in 1..30 {
        term = scale(&matmul(&term, &a), c(1.0 / n as f64, 0.0));
        sum = add(&sum, &term);
    }
    for _ in 0..k {
        sum = matmul(&sum, &sum);
    }
    sum
}

/// Rectangular pulse with constant detuning, in the interaction picture used
/// by the library: lab-frame rotation `exp(−iTH)` with
/// `H = [[−Δ/2, Ω/2], [Ω/2, Δ/2]]`, followed by the frame change
/// `diag(e^{−iΔT/2}, e^{iΔT/2})`.
pub fn rect_oracle(rabi: f64, detuning: f64, duration: f64) -> M2 {
    let h = [
        [c(-detuning / 2.0, 0.0), c(rabi / 2.0, 0.0)],
        [c(rabi / 2.0, 0.0), c(detuning / 2.0, 0.0)],
    ];
    let u = expm(&scale(&h, -I * duration));
    let f = Complex64::cis(-detuning * duration / 2.0);
    let frame = [[f, c(0.0, 0.0)], [c(0.0, 0.0), f.conj()]];
    matmul(&frame, &u)
}

/// Fixed-step classical RK4 for `dc1/dt = −i(Ω/2)e^{−iD}c2`,
/// `dc2/dt = −i(Ω/2)e^{iD}c1` starting from `(1, 0)`. Returns `(c1, c2)`.
pub fn rk4_column(
    rabi: impl Fn(f64) -> f64,
    phase: impl Fn(f64) -> f64,
    t0: f64,
    t1: f64,
    steps: usize,
) -> (Complex64, Complex64) {
    let f = |t: f64, y: [Complex64; 2]| -> [Complex64; 2] {
        let g = Complex64::cis(-phase(t)) * (0.5 * rabi(t));
        [-I * g * y[1], -I * g.conj() * y[0]]
    };
    let h = (t1 - t0) / steps as f64;
    let mut y = [c(1.0, 0.0), c(0.0, 0.0)];
    for k in 0..steps {
        let t = t0 + k as f64 * h;
        let k1 = f(t, y);
        let k2 = f(t + h / 2.0, [y[0] + k1[0] * (h / 2.0), y[1] + k1[1] * (h / 2.0)]);
        let k3 = f(t + h / 2.0, [y[0] + k2[0] * (h / 2.0), y[1] + k2[1] * (h / 2.0)]);
        let k4 = f(t + h, [y[0] + k3[0] * h, y[1] + k3[1] * h]);
        for i in 0..2 {
            y[i] += (k1[i] + k2[i] * 2.0 + k3[i] * 2.0 + k4[i]) * (h / 6.0);
        }
    }
    (y[0], y[1])
}

/// Frobenius distance to `diag(e^{iΦ/2}, e^{−iΦ/2})`, written out directly.
pub fn gate_distance(u: &M2, gate_phase: f64) -> f64 {
    let t = Complex64::cis(gate_phase / 2.0);
    let target = [[t, c(0.0, 0.0)], [c(0.0, 0.0), t.conj()]];
    let mut s = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            s += (u[i][j] - target[i][j]).norm_sqr();
        }
    }
    s.sqrt()
}
