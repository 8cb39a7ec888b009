//! Wootters concurrence of two qubits.
//!
//! [`wootters_concurrence`] works for any two-qubit density matrix through
//! the spectrum of `rho * rho_tilde`. [`x_state_weights`] is the closed form
//! for states whose collective-basis matrix has X shape, split into the two
//! entanglement weights `c1` (two-photon coherence between `|e>` and `|g>`)
//! and `c2` (population imbalance between `|s>` and `|a>`).

use nalgebra::{Cholesky, Matrix4, Schur, SymmetricEigen, SVD};
use num_complex::Complex64;
use serde::Serialize;

use crate::dynamics::{DensityMatrix4, XState};
use crate::error::{Error, Result};

/// Eigenvalue residue (imaginary part or negative real part) treated as
/// round-off and clamped to zero.
pub const CLAMP_TOLERANCE: f64 = 1e-9;

/// Residue beyond this signals an input that is not a valid state.
pub const DEGENERACY_TOLERANCE: f64 = 1e-6;

/// `sigma_y (x) sigma_y` in the product basis `ee, eg, ge, gg`: an
/// anti-diagonal with signs `(-1, +1, +1, -1)`.
fn sigma_yy() -> Matrix4<Complex64> {
    let mut m = Matrix4::zeros();
    m[(0, 3)] = Complex64::new(-1.0, 0.0);
    m[(1, 2)] = Complex64::new(1.0, 0.0);
    m[(2, 1)] = Complex64::new(1.0, 0.0);
    m[(3, 0)] = Complex64::new(-1.0, 0.0);
    m
}

/// `(sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)` with `rho*` the
/// elementwise conjugate in the product basis.
pub fn spin_flip(rho: &DensityMatrix4) -> Matrix4<Complex64> {
    let yy = sigma_yy();
    yy * rho.matrix().conjugate() * yy
}

/// Eigenvalues of `rho * rho_tilde`, real, clamped at zero and sorted in
/// descending order.
pub fn spin_flip_spectrum(rho: &DensityMatrix4) -> Result<[f64; 4]> {
    let r = rho.matrix() * spin_flip(rho);
    let schur = Schur::try_new(r, f64::EPSILON, 0).ok_or(Error::NumericalDegeneracy {
        re: f64::NAN,
        im: f64::NAN,
    })?;
    let (_, t) = schur.unpack();
    let mut lambdas = [0.0; 4];
    for (slot, z) in lambdas.iter_mut().zip(t.diagonal().iter()) {
        if z.im.abs() > DEGENERACY_TOLERANCE || z.re < -DEGENERACY_TOLERANCE || !z.re.is_finite() {
            return Err(Error::NumericalDegeneracy { re: z.re, im: z.im });
        }
        *slot = z.re.max(0.0);
    }
    lambdas.sort_by(|a, b| b.total_cmp(a));
    Ok(lambdas)
}

/// `max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4))` over the descending
/// spectrum `l` of `rho * rho_tilde`.
///
/// The spectrum is checked for validity, but the square roots are taken as
/// the singular values of `tau = X^T (sigma_y (x) sigma_y) X` with
/// `rho = X X^dagger`. Those carry absolute round-off `~eps`; square roots of
/// computed eigenvalues near zero would carry `~sqrt(eps)`.
pub fn wootters_concurrence(rho: &DensityMatrix4) -> Result<f64> {
    spin_flip_spectrum(rho)?;
    let [s1, s2, s3, s4] = spin_flip_singular_values(rho)?;
    Ok((s1 - s2 - s3 - s4).max(0.0))
}

/// Square roots of the eigenvalues of `rho * rho_tilde`, descending.
pub fn spin_flip_singular_values(rho: &DensityMatrix4) -> Result<[f64; 4]> {
    let factor = square_factor(rho)?;
    let tau = factor.transpose() * sigma_yy() * factor;
    let mut sv = [0.0; 4];
    sv.copy_from_slice(SVD::new(tau, false, false).singular_values.as_slice());
    sv.sort_by(|a, b| b.total_cmp(a));
    Ok(sv)
}

/// Some `X` with `rho = X X^dagger`. Cholesky keeps relative accuracy on
/// strongly graded states (populations spanning many decades); rank-deficient
/// states fall back to the eigendecomposition.
fn square_factor(rho: &DensityMatrix4) -> Result<Matrix4<Complex64>> {
    let m = rho.matrix();
    let hermitian = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    if let Some(chol) = Cholesky::new(hermitian) {
        return Ok(chol.unpack());
    }
    let eig = SymmetricEigen::new(hermitian);
    let mut factor = eig.eigenvectors;
    for (j, &d) in eig.eigenvalues.iter().enumerate() {
        if d < -DEGENERACY_TOLERANCE {
            return Err(Error::NumericalDegeneracy { re: d, im: 0.0 });
        }
        factor.column_mut(j).scale_mut(d.max(0.0).sqrt());
    }
    Ok(factor)
}

/// Which weight carries the entanglement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dominant {
    None,
    /// `c1`: coherent superposition of `|e>` and `|g>`.
    OnePhotonClass,
    /// `c2`: unequal populations of `|s>` and `|a>`.
    TwoPhotonClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConcurrenceBreakdown {
    pub c: f64,
    pub c1: f64,
    pub c2: f64,
    pub dominant: Dominant,
}

pub fn x_state_weights(x: &XState) -> ConcurrenceBreakdown {
    let c1 = 2.0 * x.rho_eg.norm() - (x.rho_ss + x.rho_aa);
    let c2 = (x.rho_ss - x.rho_aa).abs() - 2.0 * (x.rho_gg * x.rho_ee).max(0.0).sqrt();
    let (c, dominant) = if c1 <= 0.0 && c2 <= 0.0 {
        (0.0, Dominant::None)
    } else if c1 >= c2 {
        (c1, Dominant::OnePhotonClass)
    } else {
        (c2, Dominant::TwoPhotonClass)
    };
    ConcurrenceBreakdown {
        c,
        c1,
        c2,
        dominant,
    }
}

pub fn x_state_concurrence(x: &XState) -> f64 {
    x_state_weights(x).c
}
