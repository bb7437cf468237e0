//! Eigendecompositions for the small Hermitian and unitary matrices that
//! occur here (dimension <= 4 for operators, <= 16 for superoperators).

use nalgebra::SymmetricEigen;
use num_complex::Complex64 as C64;

use crate::linalg::{c, max_abs, CMat};
use crate::{Error, Result};

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
///
/// Returns `(eigenvalues, V)` with the eigenvectors as the columns of `V`,
/// so that `M = V diag(w) V^dagger`.
pub fn hermitian_eig(m: &CMat) -> Result<(Vec<f64>, CMat)> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("hermitian_eig: non-square".into()));
    }
    let n = m.nrows();
    let se = SymmetricEigen::new(m.clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].partial_cmp(&se.eigenvalues[j]).unwrap());
    let vals: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let vecs = CMat::from_fn(n, n, |r, k| se.eigenvectors[(r, order[k])]);
    Ok((vals, vecs))
}

/// Eigendecomposition of a unitary matrix.
///
/// Splits `U` into the commuting Hermitian pair `(U + U^dagger)/2` and
/// `(U - U^dagger)/(2i)`, diagonalizes the first and resolves its degenerate
/// clusters with the second.  Returns unit-modulus eigenvalues and an
/// orthonormal eigenvector matrix.
pub fn unitary_eig(u: &CMat) -> Result<(Vec<C64>, CMat)> {
    let n = u.nrows();
    let h_re = (u + u.adjoint()).scale(0.5);
    let h_im = ((u - u.adjoint()) * c(0.5) * C64::new(0.0, -1.0)).clone();
    let (w_re, mut v) = hermitian_eig(&h_re)?;

    // resolve clusters of the real part with the imaginary part
    let tol = 1e-8 * (1.0 + w_re.iter().fold(0.0f64, |a, &x| a.max(x.abs())));
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (w_re[end] - w_re[start]).abs() < tol {
            end += 1;
        }
        if end - start > 1 {
            let block = v.columns(start, end - start).clone_owned();
            let sub = block.adjoint() * &h_im * &block;
            let (_, q) = hermitian_eig(&sub)?;
            let rotated = block * q;
            v.columns_mut(start, end - start).copy_from(&rotated);
        }
        start = end;
    }

    // Rayleigh quotients give the eigenvalues; renormalize to unit modulus.
    let mut vals = Vec::with_capacity(n);
    for k in 0..n {
        let col = v.column(k).clone_owned();
        let lam = (col.adjoint() * u * &col)[(0, 0)];
        let r = lam.norm();
        if r == 0.0 {
            return Err(Error::NonFinite("unitary_eig: zero eigenvalue".into()));
        }
        vals.push(lam / r);
    }

    let recon = &v * CMat::from_diagonal(&nalgebra::DVector::from_vec(vals.clone())) * v.adjoint();
    if max_abs(&(recon - u)) > 1e-7 {
        return Err(Error::NonFinite("unitary_eig: reconstruction failed (input not unitary?)".into()));
    }
    Ok((vals, v))
}
