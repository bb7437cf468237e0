//! Dense complex matrix helpers shared by the whole crate.
//!
//! All operators, density matrices and propagators are carried by
//! [`CMat`], a dynamically sized dense matrix of `Complex64`.  Superoperators
//! act on the row-major vectorization `vec(rho)` and are `n^2 x n^2`
//! matrices of the same type.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

pub const I: C64 = C64::new(0.0, 1.0);

pub fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

/// Largest entrywise modulus.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn is_hermitian(m: &CMat, tol: f64) -> bool {
    m.is_square() && max_abs(&(m - m.adjoint())) <= tol
}

pub fn is_unitary(m: &CMat, tol: f64) -> bool {
    m.is_square() && max_abs(&(m.adjoint() * m - identity(m.nrows()))) <= tol
}

pub fn all_finite(m: &CMat) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

pub fn commutator(a: &CMat, b: &CMat) -> CMat {
    a * b - b * a
}

pub fn anticommutator(a: &CMat, b: &CMat) -> CMat {
    a * b + b * a
}

pub fn trace(m: &CMat) -> C64 {
    m.diagonal().sum()
}

/// Row-major vectorization: `vec(rho)[a*n + b] = rho[(a, b)]`.
pub fn vec_rm(m: &CMat) -> CVec {
    let n = m.nrows();
    CVec::from_fn(n * n, |i, _| m[(i / n, i % n)])
}

pub fn unvec_rm(v: &CVec, n: usize) -> CMat {
    CMat::from_fn(n, n, |a, b| v[a * n + b])
}

/// Superoperator of left multiplication: `vec(A rho) = spre(A) vec(rho)`.
pub fn spre(a: &CMat) -> CMat {
    a.kronecker(&identity(a.nrows()))
}

/// Superoperator of right multiplication: `vec(rho A) = spost(A) vec(rho)`.
pub fn spost(a: &CMat) -> CMat {
    identity(a.nrows()).kronecker(&a.transpose())
}

/// `vec([A, rho]) = comm_super(A) vec(rho)`.
pub fn comm_super(a: &CMat) -> CMat {
    spre(a) - spost(a)
}

/// `vec({A, rho}) = acomm_super(A) vec(rho)`.
pub fn acomm_super(a: &CMat) -> CMat {
    spre(a) + spost(a)
}
