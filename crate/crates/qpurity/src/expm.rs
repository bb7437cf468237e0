//! Matrix exponentials.
//!
//! [`expm`] is the scaling-and-squaring Pade-13 algorithm (Higham 2005) for
//! general matrices; it is what evolves superoperators.  [`exp_mih`] handles
//! the special (and much more common) case `exp(-i t H)` with Hermitian `H`
//! through an eigendecomposition, which keeps single time steps exactly
//! unitary.

use num_complex::Complex64 as C64;

use crate::eig::hermitian_eig;
use crate::linalg::{identity, CMat};
use crate::Result;

const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

fn one_norm(m: &CMat) -> f64 {
    (0..m.ncols())
        .map(|j| m.column(j).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `exp(M)` for an arbitrary square complex matrix.
pub fn expm(m: &CMat) -> CMat {
    let n = m.nrows();
    assert!(m.is_square(), "expm: non-square matrix");
    let norm = one_norm(m);
    // theta_13 from Higham's table
    let theta = 5.371920351148152;
    let s = if norm > theta {
        (norm / theta).log2().ceil() as u32
    } else {
        0
    };
    let a = m.scale(1.0 / f64::powi(2.0, s as i32));

    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;
    let id = identity(n);

    let b = &PADE13;
    let u_inner = &a6 * (a6.scale(b[13]) + a4.scale(b[11]) + a2.scale(b[9]))
        + a6.scale(b[7])
        + a4.scale(b[5])
        + a2.scale(b[3])
        + id.scale(b[1]);
    let u = &a * u_inner;
    let v = &a6 * (a6.scale(b[12]) + a4.scale(b[10]) + a2.scale(b[8]))
        + a6.scale(b[6])
        + a4.scale(b[4])
        + a2.scale(b[2])
        + id.scale(b[0]);

    let num = &v + &u;
    let den = &v - &u;
    let mut r = den
        .lu()
        .solve(&num)
        .expect("expm: Pade denominator is singular");
    for _ in 0..s {
        r = &r * &r;
    }
    r
}

/// `exp(-i t H)` for Hermitian `H`, exactly unitary.
pub fn exp_mih(h: &CMat, t: f64) -> Result<CMat> {
    let (w, v) = hermitian_eig(h)?;
    let phases = nalgebra::DVector::from_iterator(
        w.len(),
        w.iter().map(|&lam| C64::from_polar(1.0, -t * lam)),
    );
    Ok(&v * CMat::from_diagonal(&phases) * v.adjoint())
}
