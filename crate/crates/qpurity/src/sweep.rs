//! Configuration-driven experiments: parameter grids, CSV output, presets.
//!
//! Configs are TOML with a fixed schema; unknown keys are rejected.  Every
//! CSV starts with `#`-prefixed metadata lines (including a hash of the full
//! canonical config) followed by a header row and one row per grid point,
//! all numbers with 12 significant digits.  Grid points are independent and
//! evaluated in parallel when the `parallel` feature is enabled; rows are
//! always written in grid order, so output is byte-identical across runs and
//! thread counts.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::analytics::{
    eta_cdt, eta_dd, gamma_0, gamma_heisenberg, gamma_heisenberg_driven, gamma_ising,
    interaction_time,
};
use crate::bath::OhmicBath;
use crate::metrics::GateReport;
use crate::pipeline::{gate_report, ideal_gate, ising_gate, Numerics};
use crate::redfield::RwaMode;
use crate::system::{DriveSpec, InteractionKind, PauliAxis, SystemSpec, Waveform};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    DdFrequencySweep,
    IsingVsHeisenbergTemperature,
    AmplitudeSweep,
    DrivenFrequencySweep,
    FidelitySweep,
    SinglePoint,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSection {
    pub kind: ExperimentKind,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemSection {
    pub n_qubits: usize,
    pub delta: Vec<f64>,
    pub epsilon: Vec<f64>,
    pub j_coupling: f64,
    pub interaction: InteractionName,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InteractionName {
    Heisenberg,
    IsingXx,
    None,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DriveSection {
    pub waveform: WaveformName,
    #[serde(default)]
    pub amplitude: f64,
    #[serde(default)]
    pub omega: f64,
    #[serde(default = "default_target_qubit")]
    pub target_qubit: usize,
    #[serde(default = "default_axis")]
    pub axis: AxisName,
}

fn default_target_qubit() -> usize {
    1
}

fn default_axis() -> AxisName {
    AxisName::Z
}

impl Default for DriveSection {
    fn default() -> Self {
        DriveSection {
            waveform: WaveformName::None,
            amplitude: 0.0,
            omega: 0.0,
            target_qubit: 1,
            axis: AxisName::Z,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WaveformName {
    None,
    Harmonic,
    Rectangular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxisName {
    X,
    Z,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BathSection {
    pub alpha: f64,
    pub omega_c: f64,
    pub temperature: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub axis: SweepAxis,
    pub min: f64,
    pub max: f64,
    pub points: usize,
    #[serde(default = "default_scale")]
    pub scale: SweepScale,
    /// Fixed `A/Omega` ratio for frequency sweeps of an amplitude-locked
    /// drive.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_over_omega: Option<f64>,
}

fn default_scale() -> SweepScale {
    SweepScale::Linear
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepAxis {
    Omega,
    Temperature,
    AOverOmega,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepScale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumericsSection {
    #[serde(default = "d_steps")]
    pub steps_per_period: usize,
    #[serde(default = "d_k_max")]
    pub k_max: usize,
    #[serde(default = "d_n_samples")]
    pub n_samples: usize,
    #[serde(default = "d_rwa")]
    pub rwa: RwaName,
    #[serde(default = "d_secular_tol")]
    pub secular_tol: f64,
    #[serde(default = "d_seed")]
    pub seed: u64,
}

fn d_steps() -> usize {
    256
}
fn d_k_max() -> usize {
    32
}
fn d_n_samples() -> usize {
    128
}
fn d_rwa() -> RwaName {
    RwaName::FullSecular
}
fn d_secular_tol() -> f64 {
    1e-6
}
fn d_seed() -> u64 {
    12345
}

impl Default for NumericsSection {
    fn default() -> Self {
        NumericsSection {
            steps_per_period: d_steps(),
            k_max: d_k_max(),
            n_samples: d_n_samples(),
            rwa: d_rwa(),
            secular_tol: d_secular_tol(),
            seed: d_seed(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RwaName {
    FullSecular,
    TimeAveraged,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    pub path: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: ExperimentSection,
    pub system: SystemSection,
    #[serde(default)]
    pub drive: DriveSection,
    pub bath: BathSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSection>,
    #[serde(default)]
    pub numerics: NumericsSection,
    pub output: OutputSection,
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig =
            toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config serialization cannot fail")
    }

    /// SHA-256 of the canonical serialized config.
    pub fn hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.to_toml().as_bytes());
        hasher
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    pub fn system_spec(&self) -> SystemSpec {
        SystemSpec {
            n_qubits: self.system.n_qubits,
            delta: self.system.delta.clone(),
            epsilon: self.system.epsilon.clone(),
            j_coupling: self.system.j_coupling,
            interaction_kind: match self.system.interaction {
                InteractionName::Heisenberg => InteractionKind::Heisenberg,
                InteractionName::IsingXx => InteractionKind::IsingXX,
                InteractionName::None => InteractionKind::None,
            },
        }
    }

    pub fn drive_spec(&self) -> DriveSpec {
        DriveSpec {
            waveform: match self.drive.waveform {
                WaveformName::None => Waveform::None,
                WaveformName::Harmonic => Waveform::Harmonic,
                WaveformName::Rectangular => Waveform::Rectangular,
            },
            amplitude: self.drive.amplitude,
            omega: self.drive.omega,
            target_qubit: self.drive.target_qubit,
            axis: match self.drive.axis {
                AxisName::X => PauliAxis::X,
                AxisName::Z => PauliAxis::Z,
            },
        }
    }

    pub fn bath_spec(&self) -> Result<OhmicBath> {
        OhmicBath::new(self.bath.alpha, self.bath.omega_c, self.bath.temperature)
            .map_err(|e| Error::Config(e.to_string()))
    }

    pub fn numerics(&self) -> Numerics {
        Numerics {
            steps_per_period: self.numerics.steps_per_period,
            k_max: self.numerics.k_max,
            n_samples: self.numerics.n_samples,
            rwa: match self.numerics.rwa {
                RwaName::FullSecular => RwaMode::FullSecular,
                RwaName::TimeAveraged => RwaMode::TimeAveraged,
            },
            secular_tol: self.numerics.secular_tol,
            seed: self.numerics.seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let cfg_err = |m: String| Error::Config(m);
        self.system_spec().validate().map_err(|e| cfg_err(e.to_string()))?;
        self.drive_spec()
            .validate(self.system.n_qubits)
            .map_err(|e| cfg_err(e.to_string()))?;
        self.bath_spec()?;
        let n = &self.numerics;
        if n.steps_per_period == 0 || n.n_samples < 2 || n.k_max == 0 {
            return Err(cfg_err("numerics values must be positive".into()));
        }
        if n.n_samples < 2 * n.k_max + 2 {
            return Err(cfg_err(format!(
                "n_samples = {} cannot resolve k_max = {} (need n_samples >= 2*k_max + 2)",
                n.n_samples, n.k_max
            )));
        }

        let kind = self.experiment.kind;
        let needs_axis = match kind {
            ExperimentKind::SinglePoint => None,
            ExperimentKind::DdFrequencySweep | ExperimentKind::DrivenFrequencySweep => {
                Some(SweepAxis::Omega)
            }
            ExperimentKind::IsingVsHeisenbergTemperature | ExperimentKind::FidelitySweep => {
                Some(SweepAxis::Temperature)
            }
            ExperimentKind::AmplitudeSweep => Some(SweepAxis::AOverOmega),
        };
        match (needs_axis, &self.sweep) {
            (None, Some(_)) => {
                return Err(cfg_err("single_point experiments take no [sweep] section".into()))
            }
            (None, None) => {}
            (Some(_), None) => {
                return Err(cfg_err(format!("experiment {kind:?} requires a [sweep] section")))
            }
            (Some(axis), Some(s)) => {
                if s.axis != axis {
                    return Err(cfg_err(format!(
                        "experiment {kind:?} sweeps {axis:?}, config says {:?}",
                        s.axis
                    )));
                }
                if s.points < 2 {
                    return Err(cfg_err("sweep needs at least 2 points".into()));
                }
                if !(s.min < s.max) {
                    return Err(cfg_err(format!("sweep needs min < max, got [{}, {}]", s.min, s.max)));
                }
                if s.scale == SweepScale::Log && s.min <= 0.0 {
                    return Err(cfg_err("log sweep needs min > 0".into()));
                }
                if matches!(
                    kind,
                    ExperimentKind::DdFrequencySweep | ExperimentKind::DrivenFrequencySweep
                ) && s.a_over_omega.is_none()
                {
                    return Err(cfg_err(format!(
                        "experiment {kind:?} requires sweep.a_over_omega"
                    )));
                }
            }
        }

        match kind {
            ExperimentKind::DdFrequencySweep => {
                if self.system.n_qubits != 1 {
                    return Err(cfg_err("dd_frequency_sweep is a single-qubit experiment".into()));
                }
            }
            ExperimentKind::SinglePoint => {}
            _ => {
                if self.system.n_qubits != 2 {
                    return Err(cfg_err(format!("{kind:?} is a two-qubit experiment")));
                }
                if self.system.j_coupling <= 0.0 {
                    return Err(cfg_err("two-qubit experiments need j_coupling > 0".into()));
                }
            }
        }
        Ok(())
    }

    /// Grid of swept values (empty for single-point runs).
    pub fn grid(&self) -> Vec<f64> {
        match &self.sweep {
            None => vec![f64::NAN],
            Some(s) => (0..s.points)
                .map(|i| {
                    let f = i as f64 / (s.points - 1) as f64;
                    match s.scale {
                        SweepScale::Linear => s.min + f * (s.max - s.min),
                        SweepScale::Log => s.min * (s.max / s.min).powf(f),
                    }
                })
                .collect(),
        }
    }

    pub fn columns(&self) -> Vec<&'static str> {
        match self.experiment.kind {
            ExperimentKind::DdFrequencySweep => vec!["omega", "eta_dd"],
            ExperimentKind::IsingVsHeisenbergTemperature => vec![
                "temperature",
                "heisenberg_loss",
                "ising_loss",
                "heisenberg_loss_numeric",
                "ising_loss_numeric",
            ],
            ExperimentKind::AmplitudeSweep => vec![
                "a_over_omega",
                "purity_loss",
                "purity_loss_analytic",
                "fidelity_defect",
            ],
            ExperimentKind::DrivenFrequencySweep => vec![
                "omega",
                "purity_loss",
                "purity_loss_analytic",
                "fidelity_defect",
            ],
            ExperimentKind::FidelitySweep => vec![
                "temperature",
                "purity_loss",
                "purity_loss_analytic",
                "ising_loss_analytic",
                "fidelity_defect",
            ],
            ExperimentKind::SinglePoint => vec![
                "purity_loss",
                "fidelity_defect",
                "decay_rate_numeric",
                "decay_rate_analytic",
                "duration",
            ],
        }
    }
}

/// Two-qubit gate evaluation shared by the sweep kinds.
fn driven_pair_point(
    system: &SystemSpec,
    drive: &DriveSpec,
    bath: &OhmicBath,
    num: &Numerics,
) -> Result<(GateReport, f64)> {
    let t_j = interaction_time(system.j_coupling)?;
    let ideal = ising_gate(std::f64::consts::FRAC_PI_4)?;
    let report = gate_report(system, drive, bath, t_j, Some(&ideal), num)?;
    Ok((report, t_j))
}

/// Evaluate one grid point into a CSV row.
pub fn evaluate_point(config: &ExperimentConfig, value: f64) -> Result<Vec<f64>> {
    let system = config.system_spec();
    let drive = config.drive_spec();
    let bath = config.bath_spec()?;
    let num = config.numerics();
    match config.experiment.kind {
        ExperimentKind::DdFrequencySweep => {
            let ratio = config.sweep.as_ref().unwrap().a_over_omega.unwrap();
            let omega = value;
            let d = DriveSpec { amplitude: ratio * omega, omega, ..drive };
            let eta = eta_dd(system.delta[0], &bath, &d)?;
            Ok(vec![omega, eta])
        }
        ExperimentKind::IsingVsHeisenbergTemperature => {
            let bath = OhmicBath::new(bath.alpha, bath.omega_c, value)?;
            let j = system.j_coupling;
            let t_j = interaction_time(j)?;
            let gh = gamma_heisenberg(j, &bath)? * t_j;
            let gi = gamma_ising(&bath)? * t_j;
            let none = DriveSpec::none();
            let rh = gate_report(&system, &none, &bath, t_j, None, &num)?;
            let ising_system = SystemSpec {
                interaction_kind: InteractionKind::IsingXX,
                ..system.clone()
            };
            let ri = gate_report(&ising_system, &none, &bath, t_j, None, &num)?;
            Ok(vec![value, gh, gi, rh.purity_loss, ri.purity_loss])
        }
        ExperimentKind::AmplitudeSweep => {
            let d = DriveSpec { amplitude: value * drive.omega, ..drive };
            let (report, t_j) = driven_pair_point(&system, &d, &bath, &num)?;
            let analytic = gamma_heisenberg_driven(system.j_coupling, &bath, &d)? * t_j;
            Ok(vec![value, report.purity_loss, analytic, report.fidelity_defect])
        }
        ExperimentKind::DrivenFrequencySweep => {
            let ratio = config.sweep.as_ref().unwrap().a_over_omega.unwrap();
            let omega = value;
            let d = DriveSpec { amplitude: ratio * omega, omega, ..drive };
            let (report, t_j) = driven_pair_point(&system, &d, &bath, &num)?;
            let analytic = gamma_heisenberg_driven(system.j_coupling, &bath, &d)? * t_j;
            Ok(vec![omega, report.purity_loss, analytic, report.fidelity_defect])
        }
        ExperimentKind::FidelitySweep => {
            let bath = OhmicBath::new(bath.alpha, bath.omega_c, value)?;
            let (report, t_j) = driven_pair_point(&system, &drive, &bath, &num)?;
            let analytic = gamma_heisenberg_driven(system.j_coupling, &bath, &drive)? * t_j;
            let ising = gamma_ising(&bath)? * t_j;
            Ok(vec![value, report.purity_loss, analytic, ising, report.fidelity_defect])
        }
        ExperimentKind::SinglePoint => {
            let (report, analytic, duration) = single_point(config)?;
            Ok(vec![
                report.purity_loss,
                report.fidelity_defect,
                report.decay_rate,
                analytic,
                duration,
            ])
        }
    }
}

/// Gate report, analytic rate, and duration for a single-point config.
pub fn single_point(config: &ExperimentConfig) -> Result<(GateReport, f64, f64)> {
    let system = config.system_spec();
    let drive = config.drive_spec();
    let bath = config.bath_spec()?;
    let num = config.numerics();
    if system.n_qubits == 2 {
        let t_j = interaction_time(system.j_coupling)?;
        let ideal = ideal_gate(&system, &drive)?;
        let report = gate_report(&system, &drive, &bath, t_j, ideal.as_ref(), &num)?;
        let analytic = match (system.interaction_kind, drive.waveform) {
            (InteractionKind::Heisenberg, Waveform::None) => {
                gamma_heisenberg(system.j_coupling, &bath)? * t_j
            }
            (InteractionKind::Heisenberg, _) => {
                gamma_heisenberg_driven(system.j_coupling, &bath, &drive)? * t_j
            }
            (InteractionKind::IsingXX, _) => gamma_ising(&bath)? * t_j,
            (InteractionKind::None, _) => f64::NAN,
        };
        Ok((report, analytic, t_j))
    } else {
        let delta1 = system.delta[0];
        let duration = if drive.waveform == Waveform::None {
            std::f64::consts::PI / delta1
        } else {
            drive.period()
        };
        let report = gate_report(&system, &drive, &bath, duration, None, &num)?;
        let eta = match (drive.waveform, drive.axis) {
            (Waveform::None, _) => 1.0,
            (_, PauliAxis::Z) => eta_dd(delta1, &bath, &drive)?,
            _ => eta_cdt(delta1, &bath, &drive)?,
        };
        let analytic = eta * gamma_0(delta1, &bath)? * duration;
        Ok((report, analytic, duration))
    }
}

/// Evaluate all grid points, in parallel when built with the `parallel`
/// feature.
pub fn run_grid(config: &ExperimentConfig, grid: &[f64]) -> Result<Vec<Vec<f64>>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        grid.par_iter().map(|&v| evaluate_point(config, v)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_grid_sequential(config, grid)
    }
}

/// Single-threaded reference path (also the benchmark baseline).
pub fn run_grid_sequential(config: &ExperimentConfig, grid: &[f64]) -> Result<Vec<Vec<f64>>> {
    grid.iter().map(|&v| evaluate_point(config, v)).collect()
}

fn format_value(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{v:.11e}")
    }
}

/// Run a full experiment and write its CSV; returns the output path.
pub fn run_experiment(
    config: &ExperimentConfig,
    output_override: Option<&Path>,
) -> Result<PathBuf> {
    config.validate()?;
    let grid = config.grid();
    let rows = run_grid(config, &grid)?;

    let path = output_override
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from(&config.output.path));
    let mut out = String::new();
    out.push_str(&format!("# qpurity experiment={:?}\n", config.experiment.kind));
    out.push_str(&format!("# config_hash={}\n", config.hash()));
    out.push_str(&config.columns().join(","));
    out.push('\n');
    for row in &rows {
        let cells: Vec<String> = row.iter().map(|&v| format_value(v)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    let mut f = std::fs::File::create(&path)?;
    f.write_all(out.as_bytes())?;
    Ok(path)
}

/// Comparison of the analytic rate against the numerical pipeline for a
/// single-point config.
#[derive(Debug, Clone, Copy)]
pub struct ValidationReport {
    pub analytic_loss: f64,
    pub numeric_loss: f64,
    pub numeric_rate: f64,
    pub duration: f64,
}

pub fn validate_point(config: &ExperimentConfig) -> Result<ValidationReport> {
    config.validate()?;
    if config.experiment.kind != ExperimentKind::SinglePoint {
        return Err(Error::Config(
            "validate requires an experiment of kind single_point".into(),
        ));
    }
    let (report, analytic, duration) = single_point(config)?;
    Ok(ValidationReport {
        analytic_loss: analytic,
        numeric_loss: report.purity_loss,
        numeric_rate: report.decay_rate,
        duration,
    })
}

const FIRST_WORKING_POINT: f64 = 2.404825557695773;

/// Named parameter sets for the standard experiments.
pub fn preset(name: &str) -> Result<ExperimentConfig> {
    let alpha_2pi = 0.01 / (2.0 * std::f64::consts::PI);
    let single_qubit = SystemSection {
        n_qubits: 1,
        delta: vec![1.0],
        epsilon: vec![0.0],
        j_coupling: 0.0,
        interaction: InteractionName::None,
    };
    let heisenberg_pair = SystemSection {
        n_qubits: 2,
        delta: vec![0.0, 0.0],
        epsilon: vec![0.0, 0.0],
        j_coupling: 1.0,
        interaction: InteractionName::Heisenberg,
    };
    let cfg = match name {
        "fig2" => ExperimentConfig {
            experiment: ExperimentSection { kind: ExperimentKind::DdFrequencySweep },
            system: single_qubit,
            drive: DriveSection {
                waveform: WaveformName::Harmonic,
                amplitude: 24.0,
                omega: 10.0,
                target_qubit: 1,
                axis: AxisName::Z,
            },
            bath: BathSection { alpha: 0.01, omega_c: 500.0, temperature: 10.0 },
            sweep: Some(SweepSection {
                axis: SweepAxis::Omega,
                min: 10.0,
                max: 5000.0,
                points: 61,
                scale: SweepScale::Log,
                a_over_omega: Some(2.4),
            }),
            numerics: NumericsSection::default(),
            output: OutputSection { path: "fig2.csv".into() },
        },
        "fig3" => ExperimentConfig {
            experiment: ExperimentSection {
                kind: ExperimentKind::IsingVsHeisenbergTemperature,
            },
            system: heisenberg_pair,
            drive: DriveSection::default(),
            bath: BathSection { alpha: alpha_2pi, omega_c: 500.0, temperature: 0.01 },
            sweep: Some(SweepSection {
                axis: SweepAxis::Temperature,
                min: 1e-3,
                max: 10.0,
                points: 41,
                scale: SweepScale::Log,
                a_over_omega: None,
            }),
            numerics: NumericsSection::default(),
            output: OutputSection { path: "fig3.csv".into() },
        },
        "fig4" => ExperimentConfig {
            experiment: ExperimentSection { kind: ExperimentKind::AmplitudeSweep },
            system: heisenberg_pair,
            drive: DriveSection {
                waveform: WaveformName::Harmonic,
                amplitude: 0.0,
                omega: 32.0,
                target_qubit: 1,
                axis: AxisName::X,
            },
            bath: BathSection { alpha: alpha_2pi, omega_c: 500.0, temperature: 0.01 },
            sweep: Some(SweepSection {
                axis: SweepAxis::AOverOmega,
                min: 0.0,
                max: 7.0,
                points: 100,
                scale: SweepScale::Linear,
                a_over_omega: None,
            }),
            numerics: NumericsSection::default(),
            output: OutputSection { path: "fig4.csv".into() },
        },
        "fig5" => ExperimentConfig {
            experiment: ExperimentSection { kind: ExperimentKind::DrivenFrequencySweep },
            system: heisenberg_pair,
            drive: DriveSection {
                waveform: WaveformName::Harmonic,
                amplitude: FIRST_WORKING_POINT * 32.0,
                omega: 32.0,
                target_qubit: 1,
                axis: AxisName::X,
            },
            bath: BathSection { alpha: alpha_2pi, omega_c: 500.0, temperature: 0.01 },
            sweep: Some(SweepSection {
                axis: SweepAxis::Omega,
                min: 8.0,
                max: 64.0,
                points: 8,
                scale: SweepScale::Linear,
                a_over_omega: Some(FIRST_WORKING_POINT),
            }),
            numerics: NumericsSection::default(),
            output: OutputSection { path: "fig5.csv".into() },
        },
        "fig6" => ExperimentConfig {
            experiment: ExperimentSection { kind: ExperimentKind::FidelitySweep },
            system: heisenberg_pair,
            drive: DriveSection {
                waveform: WaveformName::Harmonic,
                amplitude: FIRST_WORKING_POINT * 32.0,
                omega: 32.0,
                target_qubit: 1,
                axis: AxisName::X,
            },
            bath: BathSection { alpha: alpha_2pi, omega_c: 500.0, temperature: 0.01 },
            sweep: Some(SweepSection {
                axis: SweepAxis::Temperature,
                min: 1e-3,
                max: 1.0,
                points: 31,
                scale: SweepScale::Log,
                a_over_omega: None,
            }),
            numerics: NumericsSection::default(),
            output: OutputSection { path: "fig6.csv".into() },
        },
        "quantum_dot" => ExperimentConfig {
            experiment: ExperimentSection { kind: ExperimentKind::SinglePoint },
            system: heisenberg_pair,
            drive: DriveSection {
                waveform: WaveformName::Harmonic,
                // Omega = 2 pi x 100 J, A = 10 meV at J = 0.1 meV
                amplitude: 100.0,
                omega: 200.0 * std::f64::consts::PI,
                target_qubit: 1,
                axis: AxisName::X,
            },
            // k_B x 10 mK at J = 0.1 meV
            bath: BathSection { alpha: alpha_2pi, omega_c: 500.0, temperature: 0.0086 },
            sweep: None,
            numerics: NumericsSection::default(),
            output: OutputSection { path: "quantum_dot.csv".into() },
        },
        other => {
            return Err(Error::Config(format!(
                "unknown preset '{other}' (expected fig2, fig3, fig4, fig5, fig6, quantum_dot)"
            )))
        }
    };
    cfg.validate()?;
    Ok(cfg)
}
