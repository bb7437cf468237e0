//! Qubit registers, their static Hamiltonians, and AC drives.
//!
//! Basis convention: product basis `|q_1 q_2 ... q_N>` with qubit 1 the most
//! significant bit, `|0> = spin up` (+1 eigenstate of `sigma^z`).

use num_complex::Complex64 as C64;

use crate::linalg::{c, identity, CMat};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliAxis {
    X,
    Y,
    Z,
}

/// Shape of the periodic drive `f(t)` in `H_d(t) = f(t) sigma_target^axis`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Waveform {
    /// No drive; the system is static.
    None,
    /// `f(t) = (A/2) cos(Omega t)`.
    Harmonic,
    /// Square wave: `f(t) = +A/2` on the first half-period, `-A/2` on the
    /// second.
    Rectangular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InteractionKind {
    /// Isotropic exchange `J sigma_1 . sigma_2`.
    Heisenberg,
    /// `J sigma_1^x sigma_2^x`.
    IsingXX,
    None,
}

/// Static part of the register Hamiltonian,
/// `H_0 = (1/2) sum_j (Delta_j sigma_j^z + eps_j sigma_j^x) + H_int`.
#[derive(Debug, Clone)]
pub struct SystemSpec {
    pub n_qubits: usize,
    /// Tunnel splittings `Delta_j`, one per qubit.
    pub delta: Vec<f64>,
    /// Biases `eps_j`, one per qubit.
    pub epsilon: Vec<f64>,
    pub j_coupling: f64,
    pub interaction_kind: InteractionKind,
}

impl SystemSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_qubits == 0 || self.n_qubits > 2 {
            return Err(Error::InvalidParameter(format!(
                "n_qubits must be 1 or 2, got {}",
                self.n_qubits
            )));
        }
        if self.delta.len() != self.n_qubits || self.epsilon.len() != self.n_qubits {
            return Err(Error::InvalidParameter(format!(
                "delta/epsilon must have one entry per qubit ({} expected, got {}/{})",
                self.n_qubits,
                self.delta.len(),
                self.epsilon.len()
            )));
        }
        if self.n_qubits == 1 && self.j_coupling != 0.0 {
            return Err(Error::InvalidParameter(
                "j_coupling must be zero for a single qubit".into(),
            ));
        }
        if self.n_qubits == 1 && self.interaction_kind != InteractionKind::None {
            return Err(Error::InvalidParameter(
                "interaction requires two qubits".into(),
            ));
        }
        for v in self.delta.iter().chain(self.epsilon.iter()) {
            if !v.is_finite() {
                return Err(Error::NonFinite("delta/epsilon".into()));
            }
        }
        if !self.j_coupling.is_finite() {
            return Err(Error::NonFinite("j_coupling".into()));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }
}

#[derive(Debug, Clone)]
pub struct DriveSpec {
    pub waveform: Waveform,
    pub amplitude: f64,
    pub omega: f64,
    /// 1-based qubit index the drive acts on.
    pub target_qubit: usize,
    pub axis: PauliAxis,
}

impl DriveSpec {
    pub fn none() -> Self {
        DriveSpec {
            waveform: Waveform::None,
            amplitude: 0.0,
            omega: 0.0,
            target_qubit: 1,
            axis: PauliAxis::Z,
        }
    }

    pub fn validate(&self, n_qubits: usize) -> Result<()> {
        if self.waveform == Waveform::None {
            return Ok(());
        }
        if !(self.omega > 0.0) || !self.omega.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "drive frequency must be positive, got {}",
                self.omega
            )));
        }
        if !self.amplitude.is_finite() {
            return Err(Error::NonFinite("drive amplitude".into()));
        }
        if self.target_qubit == 0 || self.target_qubit > n_qubits {
            return Err(Error::IndexOutOfRange(format!(
                "drive target qubit {} out of 1..={}",
                self.target_qubit, n_qubits
            )));
        }
        Ok(())
    }

    pub fn period(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.omega
    }

    /// `f(t)` at time `t`.
    pub fn envelope(&self, t: f64) -> f64 {
        match self.waveform {
            Waveform::None => 0.0,
            Waveform::Harmonic => 0.5 * self.amplitude * (self.omega * t).cos(),
            Waveform::Rectangular => {
                let phase = (t * self.omega / (2.0 * std::f64::consts::PI)).rem_euclid(1.0);
                if phase < 0.5 {
                    0.5 * self.amplitude
                } else {
                    -0.5 * self.amplitude
                }
            }
        }
    }
}

/// `sigma^axis` acting on `qubit` (1-based) of an `n_qubits` register.
pub fn pauli(axis: PauliAxis, qubit: usize, n_qubits: usize) -> Result<CMat> {
    if qubit == 0 || qubit > n_qubits {
        return Err(Error::IndexOutOfRange(format!(
            "qubit {qubit} out of 1..={n_qubits}"
        )));
    }
    let single = match axis {
        PauliAxis::X => CMat::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)]),
        PauliAxis::Y => CMat::from_row_slice(
            2,
            2,
            &[c(0.0), C64::new(0.0, -1.0), C64::new(0.0, 1.0), c(0.0)],
        ),
        PauliAxis::Z => CMat::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(-1.0)]),
    };
    let mut op = identity(1);
    for q in 1..=n_qubits {
        op = if q == qubit {
            op.kronecker(&single)
        } else {
            op.kronecker(&identity(2))
        };
    }
    Ok(op)
}

/// Static Hamiltonian of the register.
pub fn build_hamiltonian(spec: &SystemSpec) -> Result<CMat> {
    spec.validate()?;
    let n = spec.n_qubits;
    let mut h = CMat::zeros(spec.dim(), spec.dim());
    for j in 1..=n {
        h += pauli(PauliAxis::Z, j, n)?.scale(0.5 * spec.delta[j - 1]);
        h += pauli(PauliAxis::X, j, n)?.scale(0.5 * spec.epsilon[j - 1]);
    }
    match spec.interaction_kind {
        InteractionKind::Heisenberg => {
            for axis in [PauliAxis::X, PauliAxis::Y, PauliAxis::Z] {
                h += (pauli(axis, 1, n)? * pauli(axis, 2, n)?).scale(spec.j_coupling);
            }
        }
        InteractionKind::IsingXX => {
            h += (pauli(PauliAxis::X, 1, n)? * pauli(PauliAxis::X, 2, n)?).scale(spec.j_coupling);
        }
        InteractionKind::None => {}
    }
    Ok(h)
}

/// Drive operator `sigma_target^axis` (without the scalar envelope).
pub fn drive_operator(drive: &DriveSpec, n_qubits: usize) -> Result<CMat> {
    drive.validate(n_qubits)?;
    pauli(drive.axis, drive.target_qubit, n_qubits)
}

/// Closure evaluating `H(t) = H_0 + f(t) sigma_target^axis`.
pub fn total_hamiltonian(
    spec: &SystemSpec,
    drive: &DriveSpec,
) -> Result<impl Fn(f64) -> CMat> {
    let h0 = build_hamiltonian(spec)?;
    let drive = drive.clone();
    let op = if drive.waveform == Waveform::None {
        CMat::zeros(spec.dim(), spec.dim())
    } else {
        drive_operator(&drive, spec.n_qubits)?
    };
    Ok(move |t: f64| &h0 + op.scale(drive.envelope(t)))
}
