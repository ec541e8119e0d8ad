//! Command-line front end.
//!
//! Angles are given in units of π: `--phase-pi 0.5` is Φ = π/2 and
//! `--area-pi 1` is a π pulse. Times are in units of the pulse duration `T`,
//! so `--detuning-t`, `--rabi-t` and `--chirp-t` take `Δ·T`, `Ω₀·T` and `B·T`.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 numerical failure.

use std::f64::consts::PI;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::format::{fmt_sig, sci12};
use crate::pulse::{pulse_propagator, DetuningModel, IntegratorConfig, PulseShape, PulseSpec};
use crate::scan::{
    high_fidelity_bandwidth, preset, presets, scan_1d, scan_2d, ScanOptions, ScanResult, Spacing, SweepAxis,
    SweepParameter,
};
use crate::sequences::{make_phase_gate_sequence, render_phases, CompositePhases, PhaseGateSequence};
use crate::su2::{infidelity, TargetGate};

#[derive(Debug, Parser)]
#[command(
    name = "cpgate",
    version,
    about = "Composite-pulse phase gates: sequences, fidelities, robustness scans"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the 2n phases of a composite phase gate, in units of π.
    Sequence(GateArgs),
    /// Infidelity of a composite phase gate for one pulse setting.
    Fidelity {
        #[command(flatten)]
        gate: GateArgs,
        #[command(flatten)]
        pulse: PulseArgs,
    },
    /// Sweep one or two pulse parameters and write the infidelity as CSV.
    Scan {
        #[command(flatten)]
        gate: GateArgs,
        #[command(flatten)]
        pulse: PulseArgs,
        /// Swept parameter: area, detuning, rabi or duration. Repeat for 2D.
        #[arg(long = "axis", required = true, num_args = 1)]
        axes: Vec<String>,
        /// `start,stop` for each axis, in the same order.
        #[arg(long = "range", required = true, num_args = 1, allow_hyphen_values = true)]
        ranges: Vec<String>,
        /// Samples per axis; a single value applies to every axis.
        #[arg(long = "samples", num_args = 1, default_values_t = [201usize])]
        samples: Vec<usize>,
        #[arg(long, default_value = "linear")]
        spacing: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Run a named figure preset, writing one CSV per curve or map.
    Preset {
        /// Preset name (see --list-presets).
        name: Option<String>,
        #[arg(long)]
        list_presets: bool,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Override the sample count of every axis.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        rel_tol: Option<f64>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct GateArgs {
    /// broadband, detuning or universal.
    #[arg(long)]
    pub family: String,
    /// n3, n5, ... (broadband, detuning) or U3, U5a, ... (universal).
    #[arg(long)]
    pub variant: String,
    /// Gate phase Φ in units of π.
    #[arg(long = "phase-pi", default_value_t = 0.0, allow_hyphen_values = true)]
    pub phase_pi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PulseKind {
    Rect,
    Sech,
}

#[derive(Debug, Clone, Args)]
pub struct PulseArgs {
    #[arg(long, value_enum, default_value_t = PulseKind::Rect)]
    pub pulse: PulseKind,
    /// Per-pulse area in units of π; defaults to the sequence's nominal area.
    #[arg(long = "area-pi", conflicts_with = "rabi_t")]
    pub area_pi: Option<f64>,
    /// Peak Rabi frequency times T.
    #[arg(long = "rabi-t")]
    pub rabi_t: Option<f64>,
    /// Constant detuning times T.
    #[arg(long = "detuning-t", allow_hyphen_values = true, conflicts_with = "chirp_t")]
    pub detuning_t: Option<f64>,
    /// Chirp rate B times T for Δ(t) = B tanh(t/T).
    #[arg(long = "chirp-t", allow_hyphen_values = true)]
    pub chirp_t: Option<f64>,
    /// Integrator relative tolerance.
    #[arg(long = "rel-tol")]
    pub rel_tol: Option<f64>,
    /// Integrator step budget per pulse.
    #[arg(long = "max-steps")]
    pub max_steps: Option<usize>,
}

/// Failure of a CLI invocation, carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Numerical(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) => CliError::Io(e.to_string()),
            _ if e.is_numerical() => CliError::Numerical(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

/// Command name, resolved parameters, library version and timestamp,
/// embedded as `# manifest.*` header lines in every CSV the CLI writes.
#[derive(Debug, Clone, PartialEq)]
pub struct RunManifest {
    pub command: String,
    pub params: Vec<(String, String)>,
    pub version: &'static str,
    pub timestamp: u64,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            params: Vec::new(),
            version: env!("CARGO_PKG_VERSION"),
            timestamp: timestamp(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn header_lines(&self) -> Vec<(String, String)> {
        let mut out = vec![
            ("manifest.command".to_string(), self.command.clone()),
            ("manifest.version".to_string(), self.version.to_string()),
            ("manifest.timestamp".to_string(), self.timestamp.to_string()),
        ];
        out.extend(
            self.params
                .iter()
                .map(|(k, v)| (format!("manifest.param.{k}"), v.clone())),
        );
        out
    }
}

/// Seconds since the epoch, or `SOURCE_DATE_EPOCH` when set.
fn timestamp() -> u64 {
    if let Some(t) = std::env::var("SOURCE_DATE_EPOCH").ok().and_then(|s| s.parse().ok()) {
        return t;
    }
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn resolve_gate(args: &GateArgs) -> Result<PhaseGateSequence, CliError> {
    let cp = CompositePhases::lookup(&args.family, &args.variant)?;
    Ok(make_phase_gate_sequence(&cp, args.phase_pi * PI))
}

fn resolve_pulse(args: &PulseArgs, cp: &CompositePhases) -> Result<(PulseSpec, IntegratorConfig), CliError> {
    let shape = match args.pulse {
        PulseKind::Rect => PulseShape::Rectangular,
        PulseKind::Sech => PulseShape::Sech,
    };
    let peak_rabi = match (args.rabi_t, args.area_pi) {
        (Some(r), _) => r,
        (None, Some(a)) => PulseSpec::peak_rabi_for_area(shape, a * PI, 1.0),
        (None, None) => PulseSpec::peak_rabi_for_area(shape, cp.nominal_per_pulse_area, 1.0),
    };
    let detuning = match (args.chirp_t, args.detuning_t) {
        (Some(b), _) => DetuningModel::TanhChirp(b),
        (None, d) => DetuningModel::Constant(d.unwrap_or(0.0)),
    };
    let spec = PulseSpec {
        shape,
        peak_rabi,
        duration: 1.0,
        detuning,
        window_half_width: crate::pulse::DEFAULT_SECH_WINDOW,
    };
    spec.validate()?;
    let mut config = IntegratorConfig::default();
    if let Some(t) = args.rel_tol {
        config.rel_tol = t;
    }
    if let Some(n) = args.max_steps {
        config.max_steps = n;
    }
    config.validate()?;
    Ok((spec, config))
}

fn pulse_manifest(m: RunManifest, spec: &PulseSpec, config: &IntegratorConfig) -> RunManifest {
    m.param("pulse", crate::scan::describe_pulse(spec))
        .param("rel_tol", format!("{:e}", config.rel_tol))
        .param("abs_tol", format!("{:e}", config.abs_tol))
}

fn parse_range(s: &str) -> Result<(f64, f64), CliError> {
    let bad = || CliError::Usage(format!("bad --range `{s}`, expected start,stop"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn summarize(result: &ScanResult, out: &mut dyn Write) -> Result<(), CliError> {
    writeln!(out, "min F: {}", sci12(result.min()))?;
    if result.is_1d() {
        for thr in [1e-4, 1e-2] {
            let w = high_fidelity_bandwidth(result, thr)?;
            writeln!(out, "bandwidth(F<{thr:e}): {}", fmt_sig(w, 12))?;
        }
    } else {
        for thr in [1e-4, 1e-2] {
            writeln!(out, "fraction(F<{thr:e}): {}", fmt_sig(result.fraction_below(thr), 12))?;
        }
    }
    Ok(())
}

fn write_result(result: &ScanResult, path: &Path) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(path, result.to_csv()).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Runs the CLI with `args` (including the program name), writing normal
/// output to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    write!(out, "{e}")?;
                    Ok(())
                }
                _ => Err(CliError::Usage(e.render().to_string())),
            };
        }
    };

    match cli.command {
        Command::Sequence(gate) => {
            let seq = resolve_gate(&gate)?;
            writeln!(out, "family: {}", seq.source.family)?;
            writeln!(out, "variant: {}", seq.source.variant)?;
            writeln!(out, "gate_phase_pi: {}", fmt_sig(gate.phase_pi, 12))?;
            writeln!(
                out,
                "nominal_area_pi: {}",
                fmt_sig(seq.source.nominal_per_pulse_area / PI, 12)
            )?;
            writeln!(out, "phases_pi: {}", render_phases(&seq.phases))?;
        }
        Command::Fidelity { gate, pulse } => {
            let seq = resolve_gate(&gate)?;
            let (spec, config) = resolve_pulse(&pulse, &seq.source)?;
            let u = pulse_propagator(&spec, &config)?;
            let f = infidelity(&seq.propagator(&u), &TargetGate::new(seq.gate_phase));
            writeln!(out, "{}", sci12(f.value()))?;
        }
        Command::Scan {
            gate,
            pulse,
            axes,
            ranges,
            samples,
            spacing,
            out: path,
            threads,
        } => {
            if axes.is_empty() || axes.len() > 2 {
                return Err(CliError::Usage("give one or two --axis flags".into()));
            }
            if ranges.len() != axes.len() {
                return Err(CliError::Usage("give one --range per --axis".into()));
            }
            if samples.len() != 1 && samples.len() != axes.len() {
                return Err(CliError::Usage("give one --samples, or one per --axis".into()));
            }
            let spacing: Spacing = spacing.parse()?;
            let mut sweep = Vec::new();
            for (k, (name, range)) in axes.iter().zip(&ranges).enumerate() {
                let (lo, hi) = parse_range(range)?;
                let n = samples[k.min(samples.len() - 1)];
                sweep.push(SweepAxis::with_spacing(
                    name.parse::<SweepParameter>()?,
                    lo,
                    hi,
                    n,
                    spacing,
                )?);
            }
            let seq = resolve_gate(&gate)?;
            let (spec, config) = resolve_pulse(&pulse, &seq.source)?;
            let options = ScanOptions {
                integrator: config,
                threads,
            };
            let mut result = match sweep.as_slice() {
                [x] => scan_1d(x, &seq, &spec, &options)?,
                [x, y] => scan_2d(x, y, &seq, &spec, &options)?,
                _ => unreachable!(),
            };
            let manifest = pulse_manifest(
                RunManifest::new("scan")
                    .param("family", &gate.family)
                    .param("variant", &gate.variant)
                    .param("phase_pi", gate.phase_pi),
                &spec,
                &config,
            );
            result.metadata.extra.extend(manifest.header_lines());
            write_result(&result, &path)?;
            writeln!(out, "wrote {} ({} points)", path.display(), result.values.len())?;
            summarize(&result, out)?;
        }
        Command::Preset {
            name,
            list_presets,
            out: dir,
            samples,
            threads,
            rel_tol,
        } => {
            if list_presets {
                for (name, description) in presets() {
                    writeln!(out, "{name}\t{description}")?;
                }
                return Ok(());
            }
            let name = name.ok_or_else(|| CliError::Usage("preset name required (or --list-presets)".into()))?;
            let preset = preset(&name)?;
            let mut integrator = IntegratorConfig::default();
            if let Some(t) = rel_tol {
                integrator.rel_tol = t;
            }
            let options = ScanOptions { integrator, threads };
            for run in &preset.runs {
                let mut axes = run.axes.clone();
                if let Some(n) = samples {
                    for a in &mut axes {
                        a.samples = n;
                        a.validate()?;
                    }
                }
                let mut result = match axes.as_slice() {
                    [x] => scan_1d(x, &run.sequence, &run.template, &options)?,
                    [x, y] => scan_2d(x, y, &run.sequence, &run.template, &options)?,
                    _ => unreachable!(),
                };
                let manifest = pulse_manifest(
                    RunManifest::new("preset")
                        .param("preset", preset.name)
                        .param("family", run.sequence.source.family)
                        .param("variant", &run.sequence.source.variant)
                        .param("phase_pi", fmt_sig(run.sequence.gate_phase / PI, 12)),
                    &run.template,
                    &options.integrator,
                );
                result.metadata.extra.extend(manifest.header_lines());
                let path = dir.join(format!("{}.csv", run.file_stem));
                write_result(&result, &path)?;
                writeln!(out, "wrote {} ({} points)", path.display(), result.values.len())?;
                summarize(&result, out)?;
            }
        }
    }
    Ok(())
}
