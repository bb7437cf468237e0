//! Purity and fidelity figures of merit, averaged over all pure inputs.
//!
//! For a linear gate map `W` acting on row-major `vec(rho)` of an
//! `N`-dimensional system, the Haar averages over input states reduce to
//! closed sums over the tensor elements `W_{ab,a'b'}`:
//!
//! * average output purity
//!   `P = (1/(N(N+1))) sum (W_{ab,a'b'} W_{ba,b'a'} + W_{ab,a'a'} W_{ba,b'b'})`
//! * average fidelity to an ideal unitary `U`
//!   `F = (1/(N(N+1))) [sum_{aa'} W_{aa,a'a'} + sum W_{ab,a'b'} U_{bb'} U*_{aa'}]`
//!
//! both following from the first and second moments of Haar projectors,
//! `<P> = 1/N` and `<P A P B> -> (tr A tr B + tr(AB)) / (N(N+1))`.

use num_complex::Complex64 as C64;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::linalg::{trace, CMat, CVec};
use crate::{Error, Result};

/// `tr(rho^2)`.
pub fn purity(rho: &CMat) -> f64 {
    trace(&(rho * rho)).re
}

/// Weak-coupling purity decay rate of the maximally mixed-averaged ensemble,
/// `Gamma = (4/(N+1)) sum_j tr(c_j Qbar_j)`,
/// from the lab-frame coupling operators and averaged kernels.
pub fn purity_decay_rate(couplings: &[CMat], q_ops: &[CMat]) -> Result<f64> {
    if couplings.len() != q_ops.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} coupling operators vs {} kernels",
            couplings.len(),
            q_ops.len()
        )));
    }
    let n = couplings
        .first()
        .ok_or_else(|| Error::InvalidParameter("no coupling operators".into()))?
        .nrows();
    let mut rate = 0.0;
    for (cop, q) in couplings.iter().zip(q_ops) {
        rate += trace(&(cop * q)).re;
    }
    Ok(4.0 / (n as f64 + 1.0) * rate)
}

/// Haar-average output purity of the gate map `w` (an `n^2 x n^2` tensor on
/// row-major `vec(rho)`).
pub fn gate_purity(w: &CMat) -> Result<f64> {
    let n2 = w.nrows();
    let n = (n2 as f64).sqrt().round() as usize;
    if n * n != n2 || !w.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "gate map must be n^2 x n^2, got {}x{}",
            w.nrows(),
            w.ncols()
        )));
    }
    let idx = |a: usize, b: usize| a * n + b;
    let mut sum = C64::new(0.0, 0.0);
    for a in 0..n {
        for b in 0..n {
            for ap in 0..n {
                for bp in 0..n {
                    sum += w[(idx(a, b), idx(ap, bp))] * w[(idx(b, a), idx(bp, ap))];
                    sum += w[(idx(a, b), idx(ap, ap))] * w[(idx(b, a), idx(bp, bp))];
                }
            }
        }
    }
    Ok(sum.re / (n as f64 * (n as f64 + 1.0)))
}

/// Haar-average fidelity of the gate map `w` against the ideal unitary
/// `u_ideal` (given in the same basis the map acts in).
pub fn gate_fidelity(w: &CMat, u_ideal: &CMat) -> Result<f64> {
    let n = u_ideal.nrows();
    if w.nrows() != n * n || !w.is_square() || !u_ideal.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "gate map {}x{} incompatible with ideal unitary {}x{}",
            w.nrows(),
            w.ncols(),
            n,
            n
        )));
    }
    let idx = |a: usize, b: usize| a * n + b;
    let mut sum = C64::new(0.0, 0.0);
    for a in 0..n {
        for ap in 0..n {
            sum += w[(idx(a, a), idx(ap, ap))];
        }
    }
    for a in 0..n {
        for b in 0..n {
            for ap in 0..n {
                for bp in 0..n {
                    sum += w[(idx(a, b), idx(ap, bp))] * u_ideal[(b, bp)] * u_ideal[(a, ap)].conj();
                }
            }
        }
    }
    Ok(sum.re / (n as f64 * (n as f64 + 1.0)))
}

/// Haar moments: `<psi| A |psi>` averaged is `tr(A)/N`.
pub fn ensemble_avg_1(a: &CMat) -> f64 {
    trace(a).re / a.nrows() as f64
}

/// Haar moments: `<A>_psi <B>_psi` averaged is `(tr A tr B + tr(AB)) / (N(N+1))`.
pub fn ensemble_avg_2(a: &CMat, b: &CMat) -> f64 {
    let n = a.nrows() as f64;
    (trace(a) * trace(b) + trace(&(a * b))).re / (n * (n + 1.0))
}

/// Deterministic Haar-random pure state.
pub fn haar_sample(n: usize, seed: u64) -> CVec {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut psi = CVec::from_fn(n, |_, _| {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        C64::new(re, im)
    });
    let norm = psi.norm();
    psi /= C64::new(norm, 0.0);
    psi
}

/// Figures of merit of one gate realization.
#[derive(Debug, Clone, Copy)]
pub struct GateReport {
    /// `1 - P_avg` after the gate.
    pub purity_loss: f64,
    /// `1 - F_avg` against the ideal gate.
    pub fidelity_defect: f64,
    /// Weak-coupling purity decay rate `Gamma`.
    pub decay_rate: f64,
    /// Gate duration.
    pub duration: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, spost, spre, unvec_rm, vec_rm};
    use crate::system::{pauli, PauliAxis};

    fn conjugation_map(u: &CMat) -> CMat {
        spre(u) * spost(&u.adjoint())
    }

    #[test]
    fn unitary_maps_have_unit_purity_and_self_fidelity() {
        let sx = pauli(PauliAxis::X, 1, 1).unwrap();
        let u = crate::expm::expm(&(sx.scale(0.7) * C64::new(0.0, -1.0)));
        let w = conjugation_map(&u);
        assert!((gate_purity(&w).unwrap() - 1.0).abs() < 1e-12);
        assert!((gate_fidelity(&w, &u).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn identity_vs_bit_flip_fidelity_is_one_third() {
        let id = CMat::identity(2, 2);
        let sx = pauli(PauliAxis::X, 1, 1).unwrap();
        let w = conjugation_map(&id);
        assert!((gate_fidelity(&w, &sx).unwrap() - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn depolarizing_map_purity() {
        // rho -> I/2 for every input: output purity 1/2
        let n = 2;
        let mut w = CMat::zeros(4, 4);
        // vec(I/2) = (0.5, 0, 0, 0.5); map takes tr(rho) (= vec elements 0,3)
        for col in [0, 3] {
            w[(0, col)] = c(0.5);
            w[(3, col)] = c(0.5);
        }
        let _ = n;
        assert!((gate_purity(&w).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn gate_purity_matches_monte_carlo() {
        // a non-trivial trace-preserving map: partial depolarizing composed
        // with a unitary
        let sx = pauli(PauliAxis::X, 1, 1).unwrap();
        let u = crate::expm::expm(&(sx.scale(0.4) * C64::new(0.0, -1.0)));
        let p = 0.3;
        let mut depol = CMat::zeros(4, 4);
        for i in 0..4 {
            depol[(i, i)] = c(1.0 - p);
        }
        for col in [0, 3] {
            depol[(0, col)] += c(0.5 * p);
            depol[(3, col)] += c(0.5 * p);
        }
        let w = conjugation_map(&u) * depol;
        let exact = gate_purity(&w).unwrap();
        let samples = 20000;
        let mut mc = 0.0;
        for s in 0..samples {
            let psi = haar_sample(2, s as u64);
            let rho = &psi * psi.adjoint();
            let out = unvec_rm(&(&w * vec_rm(&rho)), 2);
            mc += purity(&out);
        }
        mc /= samples as f64;
        assert!(
            (mc - exact).abs() < 5e-3,
            "Monte Carlo {mc} vs closed form {exact}"
        );
    }

    #[test]
    fn gate_fidelity_matches_monte_carlo() {
        let sx = pauli(PauliAxis::X, 1, 1).unwrap();
        let sz = pauli(PauliAxis::Z, 1, 1).unwrap();
        let u_ideal = crate::expm::expm(&(sx.scale(0.8) * C64::new(0.0, -1.0)));
        let u_actual =
            crate::expm::expm(&((sx.scale(0.8) + sz.scale(0.15)) * C64::new(0.0, -1.0)));
        let w = conjugation_map(&u_actual);
        let exact = gate_fidelity(&w, &u_ideal).unwrap();
        let samples = 20000;
        let mut mc = 0.0;
        for s in 0..samples {
            let psi = haar_sample(2, 1_000_000 + s as u64);
            let target = &u_ideal * &psi;
            let rho = &psi * psi.adjoint();
            let out = unvec_rm(&(&w * vec_rm(&rho)), 2);
            mc += (target.adjoint() * out * target)[(0, 0)].re;
        }
        mc /= samples as f64;
        assert!(
            (mc - exact).abs() < 5e-3,
            "Monte Carlo {mc} vs closed form {exact}"
        );
    }

    #[test]
    fn haar_moment_identities() {
        let sz = pauli(PauliAxis::Z, 1, 1).unwrap();
        let sx = pauli(PauliAxis::X, 1, 1).unwrap();
        // first moment of sz vanishes; second moment of <sz>^2 is 1/3
        assert!(ensemble_avg_1(&sz).abs() < 1e-15);
        assert!((ensemble_avg_2(&sz, &sz) - 1.0 / 3.0).abs() < 1e-15);
        assert!(ensemble_avg_2(&sz, &sx).abs() < 1e-15);
        // Monte Carlo check of <sz>^2
        let samples = 20000;
        let mut mc = 0.0;
        for s in 0..samples {
            let psi = haar_sample(2, 42 + s as u64);
            mc += (psi.adjoint() * &sz * &psi)[(0, 0)].re.powi(2);
        }
        mc /= samples as f64;
        assert!((mc - 1.0 / 3.0).abs() < 1e-2);
    }

    #[test]
    fn haar_sampling_is_deterministic_and_normalized() {
        let a = haar_sample(4, 7);
        let b = haar_sample(4, 7);
        let cvec = haar_sample(4, 8);
        assert_eq!(a, b);
        assert!((a.norm() - 1.0).abs() < 1e-12);
        assert!((a - cvec).norm() > 1e-3);
    }

    #[test]
    fn decay_rate_transverse_kernel() {
        // single qubit, Qbar = (S/8) sigma^x: Gamma = (4/3) * (S/8) * 2 = S/3
        let sx = pauli(PauliAxis::X, 1, 1).unwrap();
        let s = 0.8;
        let q = sx.scale(s / 8.0);
        let gamma = purity_decay_rate(&[sx.clone()], &[q]).unwrap();
        assert!((gamma - s / 3.0).abs() < 1e-14);
    }
}
