//! Simulation and analytics for the decoherence of AC-driven one- and
//! two-qubit gates coupled to ohmic heat baths.
//!
//! The library has two legs that cross-check each other:
//!
//! * a numerical Floquet–Bloch-Redfield pipeline ([`floquet`], [`redfield`],
//!   [`metrics`]) that builds the dissipative propagator of the driven system
//!   and evaluates gate purity and fidelity averaged over all pure inputs, and
//! * closed-form decay rates and decoherence-modification factors
//!   ([`analytics`]) valid in the rotating-wave regime.
//!
//! The [`sweep`] module drives both legs over parameter grids and writes
//! reproducible CSV output; the `qpurity` binary exposes it on the command
//! line.
//!
//! Units: `hbar = k_B = 1`. All energies are measured in a reference energy
//! `E0` (the tunnel splitting for single-qubit studies, the exchange coupling
//! `J` for two-qubit studies); times in `1/E0`.

pub mod analytics;
pub mod bath;
pub mod eig;
pub mod error;
pub mod expm;
pub mod floquet;
pub mod linalg;
pub mod metrics;
pub mod pipeline;
pub mod propagate;
pub mod redfield;
pub mod sweep;
pub mod system;

pub use error::{Error, Result};
pub use linalg::CMat;
