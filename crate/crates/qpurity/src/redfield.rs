//! Weak-coupling (Born-Markov) dissipative generator in the eigen- or
//! Floquet basis.
//!
//! Each qubit couples to its own ohmic bath through `sigma_j^x`.  In the
//! frame of the system eigenstates (quasienergy states for a driven system)
//! the generator acts on the row-major vectorization of `rho` as
//!
//! `rho_dot = -i diag(w_ab) rho - Lambda rho`,
//!
//! with `w_ab = E_a - E_b` and
//!
//! `Lambda rho = sum_j sum_m [X^j_{-m}, [Q^j_m, rho]] - i [X^j_{-m}, {P^j_m, rho}]`,
//!
//! where `X^j_m` are the Fourier harmonics of the coupling operator between
//! Floquet modes and the kernels are diagonal in the transition frequencies
//! `nu_{ab m} = E_a - E_b + m Omega`:
//!
//! * `(Q X_m)_{ab} = S(|nu_{ab m}|) X_{m,ab} / 8`
//! * `(P X_m)_{ab} = -(i/8) sgn(nu_{ab m}) I(|nu_{ab m}|) X_{m,ab}`, `sgn(0) = 0`.
//!
//! The harmonic sum pairs `-m` with `m`, which is what survives averaging the
//! generator over one drive period.  `RwaMode::FullSecular` additionally
//! drops matrix elements connecting transitions of different frequency.

use num_complex::Complex64 as C64;

use crate::bath::OhmicBath;
use crate::eig::hermitian_eig;
use crate::expm::expm;
use crate::floquet::{fourier_coupling, FloquetBasis};
use crate::linalg::{
    acomm_super, all_finite, c, comm_super, is_hermitian, trace, unvec_rm, vec_rm, CMat,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RwaMode {
    /// Keep only elements with matching transition frequencies
    /// (`|w_ab - w_a'b'| <= secular_tol`).
    FullSecular,
    /// Keep the full period-averaged generator.
    TimeAveraged,
}

/// Dissipative generator in a fixed system basis.
#[derive(Debug, Clone)]
pub struct DissipativeGenerator {
    /// `n^2 x n^2` damping tensor acting on row-major `vec(rho)`.
    pub lambda: CMat,
    pub dim: usize,
    /// Eigen- or quasienergies ordering the basis.
    pub energies: Vec<f64>,
    /// Lab-frame period-averaged coupling kernels `Qbar_j`, one per bath.
    pub q_ops: Vec<CMat>,
    /// Columns are the basis states in the lab frame (Floquet modes at
    /// `t = 0` for a driven system).
    pub frame: CMat,
}

impl DissipativeGenerator {
    /// Full superoperator `M = -i diag(w_ab) - Lambda`.
    pub fn superoperator(&self) -> CMat {
        let n = self.dim;
        let mut m = -&self.lambda;
        for a in 0..n {
            for b in 0..n {
                let idx = a * n + b;
                m[(idx, idx)] -= C64::new(0.0, self.energies[a] - self.energies[b]);
            }
        }
        m
    }
}

/// One coupling operator resolved into harmonics: `(m, X_m)` pairs.
struct HarmonicSet {
    harmonics: Vec<(i64, CMat)>,
}

fn kernel_q(bath: &OhmicBath, nu: f64) -> Result<f64> {
    Ok(bath.noise_power(nu.abs())? / 8.0)
}

fn kernel_p(bath: &OhmicBath, nu: f64) -> Result<C64> {
    let sgn = if nu == 0.0 { 0.0 } else { nu.signum() };
    Ok(C64::new(0.0, -sgn * bath.spectral_density(nu.abs())? / 8.0))
}

fn assemble(
    energies: &[f64],
    omega: f64,
    sets: &[HarmonicSet],
    bath: &OhmicBath,
    mode: RwaMode,
    secular_tol: f64,
) -> Result<(CMat, Vec<Vec<(i64, CMat)>>)> {
    let n = energies.len();
    let mut lambda = CMat::zeros(n * n, n * n);
    let mut q_harmonics = Vec::with_capacity(sets.len());

    for set in sets {
        let mut qs = Vec::with_capacity(set.harmonics.len());
        for &(m, ref x_m) in &set.harmonics {
            let mut qx = CMat::zeros(n, n);
            let mut px = CMat::zeros(n, n);
            for a in 0..n {
                for b in 0..n {
                    let nu = energies[a] - energies[b] + m as f64 * omega;
                    qx[(a, b)] = x_m[(a, b)] * c(kernel_q(bath, nu)?);
                    px[(a, b)] = x_m[(a, b)] * kernel_p(bath, nu)?;
                }
            }
            let x_neg = set
                .harmonics
                .iter()
                .find(|&&(mm, _)| mm == -m)
                .map(|(_, x)| x.clone())
                .ok_or_else(|| {
                    Error::InvalidParameter(format!("missing harmonic {} for pairing", -m))
                })?;
            lambda += comm_super(&x_neg)
                * (comm_super(&qx) - acomm_super(&px) * C64::new(0.0, 1.0));
            qs.push((m, qx));
        }
        q_harmonics.push(qs);
    }

    if mode == RwaMode::FullSecular {
        for a in 0..n {
            for b in 0..n {
                for ap in 0..n {
                    for bp in 0..n {
                        let w1 = energies[a] - energies[b];
                        let w2 = energies[ap] - energies[bp];
                        if (w1 - w2).abs() > secular_tol {
                            lambda[(a * n + b, ap * n + bp)] = c(0.0);
                        }
                    }
                }
            }
        }
    }

    if !all_finite(&lambda) {
        return Err(Error::NonFinite("dissipative generator".into()));
    }
    Ok((lambda, q_harmonics))
}

/// Generator for a static Hamiltonian.
///
/// `couplings` are the lab-frame bath coupling operators (one per bath,
/// normally `sigma_j^x`).
pub fn build_generator_static(
    h: &CMat,
    bath: &OhmicBath,
    couplings: &[CMat],
    mode: RwaMode,
    secular_tol: f64,
) -> Result<DissipativeGenerator> {
    if !is_hermitian(h, 1e-10) {
        return Err(Error::InvalidParameter(
            "build_generator_static: Hamiltonian is not Hermitian".into(),
        ));
    }
    let (energies, v) = hermitian_eig(h)?;
    let sets: Vec<HarmonicSet> = couplings
        .iter()
        .map(|cop| HarmonicSet {
            harmonics: vec![(0, v.adjoint() * cop * &v)],
        })
        .collect();
    let (lambda, q_harm) = assemble(&energies, 0.0, &sets, bath, mode, secular_tol)?;
    // only the m = 0 harmonic exists; its lab-frame version is the average
    let q_ops: Vec<CMat> = q_harm
        .iter()
        .map(|qs| &v * &qs[0].1 * v.adjoint())
        .collect();
    Ok(DissipativeGenerator {
        lambda,
        dim: energies.len(),
        energies,
        q_ops,
        frame: v,
    })
}

/// Generator for a periodically driven system, built on a Floquet basis.
pub fn build_generator_floquet(
    basis: &FloquetBasis,
    bath: &OhmicBath,
    couplings: &[CMat],
    k_max: usize,
    mode: RwaMode,
    secular_tol: f64,
) -> Result<DissipativeGenerator> {
    let n = basis.dim();
    let mut sets = Vec::with_capacity(couplings.len());
    for cop in couplings {
        let fc = fourier_coupling(basis, cop, k_max)?;
        let harmonics: Vec<(i64, CMat)> =
            fc.harmonics().map(|m| (m, fc.coeff(m).clone())).collect();
        sets.push(HarmonicSet { harmonics });
    }
    let (lambda, q_harm) = assemble(
        &basis.quasienergies,
        basis.omega,
        &sets,
        bath,
        mode,
        secular_tol,
    )?;

    // lab-frame period average of V(t) Q^F(t) V(t)^dagger
    let k_samples = basis.n_samples;
    let q_ops: Vec<CMat> = q_harm
        .iter()
        .map(|qs| {
            let mut acc = CMat::zeros(n, n);
            for (s, v_t) in basis.modes.iter().enumerate() {
                let t_s = s as f64 * basis.period / k_samples as f64;
                let mut q_t = CMat::zeros(n, n);
                for &(m, ref qx) in qs {
                    q_t += qx * C64::from_polar(1.0, m as f64 * basis.omega * t_s);
                }
                acc += v_t * q_t * v_t.adjoint();
            }
            acc.scale(1.0 / k_samples as f64)
        })
        .collect();

    Ok(DissipativeGenerator {
        lambda,
        dim: n,
        energies: basis.quasienergies.clone(),
        q_ops,
        frame: basis.initial_modes().clone(),
    })
}

/// Density matrix with validated invariants (Hermitian, unit trace, positive
/// semidefinite up to numerical noise).
#[derive(Debug, Clone)]
pub struct DensityMatrix(CMat);

impl DensityMatrix {
    pub fn new(rho: CMat) -> Result<Self> {
        if !is_hermitian(&rho, 1e-10) {
            return Err(Error::InvalidParameter("density matrix not Hermitian".into()));
        }
        if (trace(&rho) - c(1.0)).norm() > 1e-10 {
            return Err(Error::InvalidParameter(format!(
                "density matrix trace {} != 1",
                trace(&rho)
            )));
        }
        let (w, _) = hermitian_eig(&rho)?;
        if w.iter().any(|&x| x < -1e-7) {
            return Err(Error::InvalidParameter(format!(
                "density matrix has negative eigenvalue {}",
                w[0]
            )));
        }
        Ok(DensityMatrix(rho))
    }

    pub fn pure(psi: &crate::linalg::CVec) -> Result<Self> {
        let norm = psi.norm();
        if norm == 0.0 {
            return Err(Error::InvalidParameter("zero state vector".into()));
        }
        let psi = psi.scale(1.0 / norm);
        Self::new(&psi * psi.adjoint())
    }

    pub fn matrix(&self) -> &CMat {
        &self.0
    }

    pub fn into_inner(self) -> CMat {
        self.0
    }
}

/// Finite-time map `W(t) = exp(M t)` of the generator, acting on row-major
/// `vec(rho)` in the generator's basis.
#[derive(Debug, Clone)]
pub struct DissipativePropagator {
    pub w: CMat,
    pub duration: f64,
}

impl DissipativePropagator {
    pub fn apply(&self, rho: &CMat) -> CMat {
        let n = rho.nrows();
        unvec_rm(&(&self.w * vec_rm(rho)), n)
    }
}

pub fn dissipative_propagator(
    generator: &DissipativeGenerator,
    duration: f64,
) -> Result<DissipativePropagator> {
    if !(duration >= 0.0) || !duration.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "propagation time must be >= 0, got {duration}"
        )));
    }
    let w = expm(&generator.superoperator().scale(duration));
    if !all_finite(&w) {
        return Err(Error::NonFinite("dissipative propagator".into()));
    }
    Ok(DissipativePropagator { w, duration })
}

/// Evolve a state (given in the generator's basis) for time `t`.
pub fn evolve(generator: &DissipativeGenerator, rho: &DensityMatrix, t: f64) -> Result<CMat> {
    Ok(dissipative_propagator(generator, t)?.apply(rho.matrix()))
}
