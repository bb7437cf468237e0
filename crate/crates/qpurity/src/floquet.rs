//! Floquet analysis of periodically driven registers.
//!
//! From the one-period propagator `U(T, 0)` we extract quasienergies
//! `eps_alpha` (folded to the first Brillouin zone `[-Omega/2, Omega/2)`) and
//! the periodic Floquet modes
//! `|phi_alpha(t)> = exp(i eps_alpha t) U(t, 0) |phi_alpha(0)>`,
//! sampled on a uniform grid over one period.  Matrix elements of a coupling
//! operator between modes are then resolved into discrete Fourier harmonics,
//! `<phi_alpha(t)| X |phi_beta(t)> = sum_k X_{alpha beta, k} e^{i k Omega t}`.

use num_complex::Complex64 as C64;

use crate::eig::unitary_eig;
use crate::linalg::CMat;
use crate::propagate::propagator;
use crate::{Error, Result};

/// Quasienergies and sampled Floquet modes of one drive period.
#[derive(Debug, Clone)]
pub struct FloquetBasis {
    /// Quasienergies in `[-Omega/2, Omega/2)`, in the order of the mode
    /// columns.
    pub quasienergies: Vec<f64>,
    /// `modes[s]` holds the modes at `t_s = s T / n_samples` as its columns.
    pub modes: Vec<CMat>,
    pub period: f64,
    pub omega: f64,
    pub n_samples: usize,
    /// Set when two folded quasienergies (mod `Omega`) nearly coincide; the
    /// mode basis is then not unique within the degenerate subspace.
    pub degenerate: bool,
}

impl FloquetBasis {
    pub fn dim(&self) -> usize {
        self.quasienergies.len()
    }

    /// Modes at `t = 0`.
    pub fn initial_modes(&self) -> &CMat {
        &self.modes[0]
    }
}

/// One-period propagator `U(T, 0)`.
pub fn monodromy<H: Fn(f64) -> CMat>(h: H, period: f64, steps: usize) -> Result<CMat> {
    propagator(h, 0.0, period, steps)
}

/// Decompose a `T`-periodic Hamiltonian into its Floquet basis.
///
/// `steps_per_period` controls the propagator discretization; the modes are
/// sampled at `n_samples` equidistant times in `[0, T)`.
pub fn floquet_decompose<H: Fn(f64) -> CMat>(
    h: H,
    period: f64,
    n_samples: usize,
    steps_per_period: usize,
) -> Result<FloquetBasis> {
    if !(period > 0.0) || !period.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "floquet_decompose: period must be positive, got {period}"
        )));
    }
    if n_samples < 2 {
        return Err(Error::InvalidParameter(
            "floquet_decompose: need at least 2 samples per period".into(),
        ));
    }
    let omega = 2.0 * std::f64::consts::PI / period;
    let steps_per_sample = steps_per_period.div_ceil(n_samples).max(1);

    // accumulate U(t_s, 0) on the sample grid, then close the period
    let n = h(0.0).nrows();
    let dt = period / n_samples as f64;
    let mut u_samples = Vec::with_capacity(n_samples);
    let mut u = CMat::identity(n, n);
    for s in 0..n_samples {
        u_samples.push(u.clone());
        let t0 = s as f64 * dt;
        u = propagator(&h, t0, t0 + dt, steps_per_sample)? * u;
    }
    let u_period = u;

    let (mu, mut phi0) = unitary_eig(&u_period)?;

    // fix each mode's global phase: largest component real and positive
    for k in 0..n {
        let mut best = 0;
        for r in 1..n {
            if phi0[(r, k)].norm() > phi0[(best, k)].norm() {
                best = r;
            }
        }
        let z = phi0[(best, k)];
        if z.norm() > 0.0 {
            let phase = z / z.norm();
            for r in 0..n {
                phi0[(r, k)] /= phase;
            }
        }
    }

    // eps = -arg(mu)/T with arg in (-pi, pi] lands in [-Omega/2, Omega/2)
    let mut quasi: Vec<f64> = mu.iter().map(|m| -m.arg() / period).collect();
    for e in quasi.iter_mut() {
        if *e >= omega / 2.0 {
            *e -= omega;
        }
    }

    // order by quasienergy for reproducibility
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| quasi[i].partial_cmp(&quasi[j]).unwrap());
    let quasi: Vec<f64> = order.iter().map(|&i| quasi[i]).collect();
    let phi0 = CMat::from_fn(n, n, |r, k| phi0[(r, order[k])]);

    let mut degenerate = false;
    for a in 0..n {
        for b in (a + 1)..n {
            let mut gap = (quasi[a] - quasi[b]).abs() % omega;
            gap = gap.min(omega - gap);
            if gap < 1e-8 * omega {
                degenerate = true;
            }
        }
    }

    let modes: Vec<CMat> = u_samples
        .iter()
        .enumerate()
        .map(|(s, u_s)| {
            let t_s = s as f64 * dt;
            let phases = nalgebra::DVector::from_iterator(
                n,
                quasi.iter().map(|&e| C64::from_polar(1.0, e * t_s)),
            );
            u_s * &phi0 * CMat::from_diagonal(&phases)
        })
        .collect();

    Ok(FloquetBasis {
        quasienergies: quasi,
        modes,
        period,
        omega,
        n_samples,
        degenerate,
    })
}

/// Fourier harmonics `X_{alpha beta, k}` of a coupling operator in the
/// Floquet basis, `k` ranging over `[-k_max, k_max]`.
#[derive(Debug, Clone)]
pub struct FourierCoupling {
    coeffs: Vec<CMat>,
    pub k_max: i64,
}

impl FourierCoupling {
    /// Harmonic `k` (panics outside `[-k_max, k_max]`).
    pub fn coeff(&self, k: i64) -> &CMat {
        assert!(k.abs() <= self.k_max, "harmonic {k} outside +-{}", self.k_max);
        &self.coeffs[(k + self.k_max) as usize]
    }

    pub fn harmonics(&self) -> impl Iterator<Item = i64> + '_ {
        -self.k_max..=self.k_max
    }
}

/// DFT of `<phi_alpha(t)| op |phi_beta(t)>` over the sample grid.
///
/// Fails with [`Error::Aliasing`] when the grid cannot resolve `k_max`
/// harmonics (`n_samples >= 2 k_max + 2` is required).
pub fn fourier_coupling(basis: &FloquetBasis, op: &CMat, k_max: usize) -> Result<FourierCoupling> {
    let k = basis.n_samples;
    if k < 2 * k_max + 2 {
        return Err(Error::Aliasing { n_samples: k, k_max });
    }
    if op.nrows() != basis.dim() {
        return Err(Error::DimensionMismatch(format!(
            "coupling operator is {}x{}, basis dimension {}",
            op.nrows(),
            op.ncols(),
            basis.dim()
        )));
    }
    let elements: Vec<CMat> = basis.modes.iter().map(|v| v.adjoint() * op * v).collect();
    let n = basis.dim();
    let mut coeffs = Vec::with_capacity(2 * k_max + 1);
    for m in -(k_max as i64)..=(k_max as i64) {
        let mut x = CMat::zeros(n, n);
        for (s, el) in elements.iter().enumerate() {
            let phase = C64::from_polar(
                1.0 / k as f64,
                -2.0 * std::f64::consts::PI * m as f64 * s as f64 / k as f64,
            );
            x += el * phase;
        }
        coeffs.push(x);
    }
    Ok(FourierCoupling { coeffs, k_max: k_max as i64 })
}
