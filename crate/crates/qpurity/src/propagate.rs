//! Time-ordered propagators.
//!
//! The propagator over `[t0, t1]` is accumulated as a product of midpoint
//! single-step exponentials `exp(-i H(t_mid) dt)`; each step is exactly
//! unitary, so the product is too, and the scheme is second-order accurate in
//! the step size.

use crate::expm::exp_mih;
use crate::linalg::CMat;
use crate::{Error, Result};

/// `U(t1, t0)` for a time-dependent Hamiltonian `h(t)`.
pub fn propagator<H: Fn(f64) -> CMat>(h: H, t0: f64, t1: f64, steps: usize) -> Result<CMat> {
    if steps == 0 {
        return Err(Error::InvalidParameter("propagator: steps must be > 0".into()));
    }
    if !(t1 > t0) {
        return Err(Error::InvalidParameter(format!(
            "propagator: need t1 > t0, got [{t0}, {t1}]"
        )));
    }
    let dt = (t1 - t0) / steps as f64;
    let n = h(t0).nrows();
    let mut u = CMat::identity(n, n);
    for k in 0..steps {
        let t_mid = t0 + (k as f64 + 0.5) * dt;
        u = exp_mih(&h(t_mid), dt)? * u;
    }
    Ok(u)
}

/// `exp(-i H t)` for a static Hamiltonian.
pub fn propagator_static(h: &CMat, t: f64) -> Result<CMat> {
    exp_mih(h, t)
}
