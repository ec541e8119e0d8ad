//! CSV rendering of scan results.
//!
//! ```text
//! # cpgate scan
//! # family: broadband
//! # variant: n3
//! # gate_phase_pi: 0.5
//! # pulse: rect(peak_rabi=3.14..., duration=1, detuning=constant(0))
//! # rel_tol: 1e-10
//! # abs_tol: 1e-12
//! # axis.0: pulse_area_fraction linear 0.5 1.5 2001
//! # columns: pulse_area_fraction,F
//! 5.00000000000e-01,1.41421356237e+00
//! ...
//! ```
//!
//! Extra metadata appears as further `# key: value` lines before `columns`.
//! Numbers in rows use fixed scientific notation with 12 significant digits.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;

use super::{ScanMetadata, ScanResult, Spacing, SweepAxis};
use crate::error::{Error, Result};
use crate::format::sci12;

const MAGIC: &str = "# cpgate scan";

impl ScanResult {
    pub fn to_csv(&self) -> String {
        let m = &self.metadata;
        let mut out = String::new();
        out.push_str(MAGIC);
        out.push('\n');
        let _ = writeln!(out, "# family: {}", m.family);
        let _ = writeln!(out, "# variant: {}", m.variant);
        let _ = writeln!(out, "# gate_phase_pi: {}", m.gate_phase / PI);
        let _ = writeln!(out, "# pulse: {}", m.pulse);
        let _ = writeln!(out, "# rel_tol: {:e}", m.rel_tol);
        let _ = writeln!(out, "# abs_tol: {:e}", m.abs_tol);
        for (k, axis) in self.axes.iter().enumerate() {
            let _ = writeln!(
                out,
                "# axis.{k}: {} {} {} {} {}",
                axis.parameter,
                axis.spacing.name(),
                axis.start,
                axis.stop,
                axis.samples
            );
        }
        for (key, value) in &m.extra {
            let _ = writeln!(out, "# {key}: {value}");
        }
        let names: Vec<&str> = self.axes.iter().map(|a| a.parameter.name()).collect();
        let _ = writeln!(out, "# columns: {},F", names.join(","));

        match self.axes.len() {
            1 => {
                for (i, v) in self.values.iter().enumerate() {
                    let _ = writeln!(out, "{},{}", sci12(self.axes[0].value(i)), sci12(*v));
                }
            }
            _ => {
                let (nx, ny) = (self.axes[0].samples, self.axes[1].samples);
                for i in 0..nx {
                    let x = sci12(self.axes[0].value(i));
                    for j in 0..ny {
                        let _ = writeln!(
                            out,
                            "{x},{},{}",
                            sci12(self.axes[1].value(j)),
                            sci12(self.values[i * ny + j])
                        );
                    }
                }
            }
        }
        out
    }

    pub fn write_csv(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_csv())?;
        Ok(())
    }

    /// Parses [`ScanResult::to_csv`] output. Infidelities come back rounded
    /// to 12 significant digits.
    pub fn from_csv(text: &str) -> Result<ScanResult> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, l)) if l.trim_end() == MAGIC => {}
            _ => return Err(Error::Parse("missing scan header".into())),
        }

        let mut family = None;
        let mut variant = None;
        let mut gate_phase = None;
        let mut pulse = None;
        let mut rel_tol = None;
        let mut abs_tol = None;
        let mut axes = Vec::new();
        let mut extra = Vec::new();
        let mut values = Vec::new();

        for (lineno, line) in lines {
            let bad = |what: String| Error::Parse(format!("line {}: {what}", lineno + 1));
            if let Some(rest) = line.strip_prefix("# ") {
                let (key, value) = rest
                    .split_once(": ")
                    .ok_or_else(|| bad(format!("expected `key: value`, got `{rest}`")))?;
                let num = |v: &str| v.parse::<f64>().map_err(|_| bad(format!("bad number `{v}`")));
                match key {
                    "family" => family = Some(value.to_string()),
                    "variant" => variant = Some(value.to_string()),
                    "gate_phase_pi" => gate_phase = Some(num(value)? * PI),
                    "pulse" => pulse = Some(value.to_string()),
                    "rel_tol" => rel_tol = Some(num(value)?),
                    "abs_tol" => abs_tol = Some(num(value)?),
                    "columns" => {}
                    k if k.starts_with("axis.") => {
                        let f: Vec<&str> = value.split_whitespace().collect();
                        if f.len() != 5 {
                            return Err(bad(format!("bad axis `{value}`")));
                        }
                        let samples = f[4].parse::<usize>().map_err(|_| bad("bad sample count".into()))?;
                        let spacing: Spacing = f[1].parse()?;
                        axes.push(SweepAxis::with_spacing(
                            f[0].parse()?,
                            num(f[2])?,
                            num(f[3])?,
                            samples,
                            spacing,
                        )?);
                    }
                    _ => extra.push((key.to_string(), value.to_string())),
                }
            } else if line.starts_with('#') || line.trim().is_empty() {
                continue;
            } else {
                let last = line.rsplit(',').next().unwrap_or("");
                values.push(
                    last.trim()
                        .parse::<f64>()
                        .map_err(|_| bad(format!("bad row `{line}`")))?,
                );
            }
        }

        let missing = |k: &str| Error::Parse(format!("missing `{k}` header"));
        if axes.is_empty() || axes.len() > 2 {
            return Err(Error::Parse(format!("expected 1 or 2 axes, found {}", axes.len())));
        }
        let expected: usize = axes.iter().map(|a| a.samples).product();
        if values.len() != expected {
            return Err(Error::Parse(format!(
                "expected {expected} rows, found {}",
                values.len()
            )));
        }
        Ok(ScanResult {
            axes,
            values,
            metadata: ScanMetadata {
                family: family.ok_or_else(|| missing("family"))?,
                variant: variant.ok_or_else(|| missing("variant"))?,
                gate_phase: gate_phase.ok_or_else(|| missing("gate_phase_pi"))?,
                pulse: pulse.ok_or_else(|| missing("pulse"))?,
                rel_tol: rel_tol.ok_or_else(|| missing("rel_tol"))?,
                abs_tol: abs_tol.ok_or_else(|| missing("abs_tol"))?,
                extra,
            },
        })
    }
}
