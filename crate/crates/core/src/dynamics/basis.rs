use std::f64::consts::FRAC_1_SQRT_2;

use nalgebra::{Matrix4, SymmetricEigen};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// One-photon coherences above this magnitude mean the state left X form.
pub const LEAKAGE_LIMIT: f64 = 1e-6;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Two-qubit density matrix in the product basis
/// `|e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix4(Matrix4<Complex64>);

impl DensityMatrix4 {
    /// Checks hermiticity and unit trace to `1e-10`. Positivity is not
    /// checked here; see [`DensityMatrix4::min_eigenvalue`].
    pub fn new(matrix: Matrix4<Complex64>) -> Result<Self> {
        let rho = Self(matrix);
        let defect = rho.hermiticity_defect();
        if defect > 1e-10 {
            return Err(Error::Config(format!(
                "density matrix is not Hermitian (defect {defect:e})"
            )));
        }
        let trace_error = (rho.trace() - 1.0).abs();
        if trace_error > 1e-10 {
            return Err(Error::Config(format!(
                "density matrix trace differs from 1 by {trace_error:e}"
            )));
        }
        Ok(rho)
    }

    pub(crate) fn from_matrix_unchecked(matrix: Matrix4<Complex64>) -> Self {
        Self(matrix)
    }

    /// `|psi><psi|` for a normalized product-basis amplitude vector.
    pub fn pure(amplitudes: [Complex64; 4]) -> Result<Self> {
        let v = nalgebra::Vector4::from(amplitudes);
        Self::new(v * v.adjoint())
    }

    /// Both atoms in the ground state.
    pub fn ground() -> Self {
        let mut m = Matrix4::zeros();
        m[(3, 3)] = Complex64::new(1.0, 0.0);
        Self(m)
    }

    /// Both atoms excited.
    pub fn excited() -> Self {
        let mut m = Matrix4::zeros();
        m[(0, 0)] = Complex64::new(1.0, 0.0);
        Self(m)
    }

    pub fn matrix(&self) -> &Matrix4<Complex64> {
        &self.0
    }

    pub fn into_inner(self) -> Matrix4<Complex64> {
        self.0
    }

    /// Real part of the trace.
    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    /// Largest entry of `|rho - rho^dagger|`.
    pub fn hermiticity_defect(&self) -> f64 {
        (self.0 - self.0.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Smallest eigenvalue of the Hermitian part.
    pub fn min_eigenvalue(&self) -> f64 {
        let hermitian = (self.0 + self.0.adjoint()) * Complex64::new(0.5, 0.0);
        SymmetricEigen::new(hermitian)
            .eigenvalues
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}

/// Density matrix in the collective basis `|e>, |g>, |s>, |a>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollectiveMatrix(pub Matrix4<Complex64>);

/// Columns are the collective states expressed in the product basis:
/// `|s> = (|g1 e2> + |e1 g2>)/sqrt2`, `|a> = (|g1 e2> - |e1 g2>)/sqrt2`.
fn collective_transform() -> Matrix4<Complex64> {
    let h = FRAC_1_SQRT_2;
    Matrix4::new(
        1.0, 0.0, 0.0, 0.0, //
        0.0, 0.0, h, -h, //
        0.0, 0.0, h, h, //
        0.0, 1.0, 0.0, 0.0,
    )
    .map(|x| Complex64::new(x, 0.0))
}

pub fn product_to_collective(rho: &DensityMatrix4) -> CollectiveMatrix {
    let u = collective_transform();
    CollectiveMatrix(u.adjoint() * rho.0 * u)
}

pub fn collective_to_product(rho: &CollectiveMatrix) -> DensityMatrix4 {
    let u = collective_transform();
    DensityMatrix4(u * rho.0 * u.adjoint())
}

/// Indices into [`CollectiveMatrix`].
pub(crate) const E: usize = 0;
pub(crate) const G: usize = 1;
pub(crate) const S: usize = 2;
pub(crate) const A: usize = 3;

/// The nonzero entries of a collective-basis density matrix whose
/// one-photon coherences vanish: a 2x2 block in `{e, g}` plus the diagonal
/// `s` and `a` populations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct XState {
    pub rho_ee: f64,
    pub rho_gg: f64,
    pub rho_ss: f64,
    pub rho_aa: f64,
    pub rho_eg: Complex64,
}

impl XState {
    pub fn populations_sum(&self) -> f64 {
        self.rho_ee + self.rho_gg + self.rho_ss + self.rho_aa
    }

    /// Nonnegative populations, unit sum and a positive `{e, g}` block, each
    /// within numerical tolerance.
    pub fn is_valid(&self) -> bool {
        let pops = [self.rho_ee, self.rho_gg, self.rho_ss, self.rho_aa];
        pops.iter().all(|&x| x >= -1e-12)
            && (self.populations_sum() - 1.0).abs() <= 1e-10
            && self.rho_eg.norm_sqr() <= self.rho_ee * self.rho_gg + 1e-10
    }

    pub fn to_collective(&self) -> CollectiveMatrix {
        let mut m = Matrix4::from_element(ZERO);
        m[(E, E)] = self.rho_ee.into();
        m[(G, G)] = self.rho_gg.into();
        m[(S, S)] = self.rho_ss.into();
        m[(A, A)] = self.rho_aa.into();
        m[(E, G)] = self.rho_eg;
        m[(G, E)] = self.rho_eg.conj();
        CollectiveMatrix(m)
    }

    pub fn to_product(&self) -> DensityMatrix4 {
        collective_to_product(&self.to_collective())
    }
}

/// Reads the X entries off a collective-basis matrix, failing when any
/// one-photon coherence (`es, ea, sg, ag, as`) exceeds [`LEAKAGE_LIMIT`].
pub fn extract_xstate(rho: &CollectiveMatrix) -> Result<XState> {
    let leakage = one_photon_leakage(rho);
    if leakage >= LEAKAGE_LIMIT {
        return Err(Error::Structural {
            leakage,
            limit: LEAKAGE_LIMIT,
        });
    }
    let m = &rho.0;
    Ok(XState {
        rho_ee: m[(E, E)].re,
        rho_gg: m[(G, G)].re,
        rho_ss: m[(S, S)].re,
        rho_aa: m[(A, A)].re,
        rho_eg: m[(E, G)],
    })
}

/// Largest magnitude among the one-photon coherences (both triangles).
pub fn one_photon_leakage(rho: &CollectiveMatrix) -> f64 {
    const PAIRS: [(usize, usize); 5] = [(E, S), (E, A), (S, G), (A, G), (A, S)];
    PAIRS
        .iter()
        .flat_map(|&(i, j)| [rho.0[(i, j)].norm(), rho.0[(j, i)].norm()])
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn single_excitation_splits_into_s_and_a() {
        // |e1 g2> = (|s> - |a>)/sqrt2
        let rho = DensityMatrix4::pure([c(0.0), c(1.0), c(0.0), c(0.0)]).unwrap();
        let col = product_to_collective(&rho).0;
        assert!((col[(S, S)].re - 0.5).abs() < 1e-15);
        assert!((col[(A, A)].re - 0.5).abs() < 1e-15);
        assert!((col[(S, A)].re + 0.5).abs() < 1e-15);
        assert!(col[(E, E)].norm() < 1e-15 && col[(G, G)].norm() < 1e-15);
    }

    #[test]
    fn doubly_excited_is_collective_e() {
        let col = product_to_collective(&DensityMatrix4::excited()).0;
        for i in 0..4 {
            for j in 0..4 {
                let expected = if (i, j) == (E, E) { 1.0 } else { 0.0 };
                assert!((col[(i, j)] - c(expected)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn round_trip_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let m = Matrix4::from_fn(|_, _| {
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            });
            let back = collective_to_product(&product_to_collective(&DensityMatrix4(m)));
            let err = (back.0 - m).iter().map(|z| z.norm()).fold(0.0, f64::max);
            assert!(err < 1e-12);
        }
    }

    #[test]
    fn extract_from_initial_state() {
        let x = XState {
            rho_ee: 0.9,
            rho_gg: 0.1,
            rho_ss: 0.0,
            rho_aa: 0.0,
            rho_eg: c(0.3),
        };
        let got = extract_xstate(&product_to_collective(&x.to_product())).unwrap();
        assert!((got.rho_ee - 0.9).abs() < 1e-15);
        assert!((got.rho_gg - 0.1).abs() < 1e-15);
        assert!(got.rho_ss.abs() < 1e-15 && got.rho_aa.abs() < 1e-15);
        assert!((got.rho_eg - c(0.3)).norm() < 1e-15);
    }

    #[test]
    fn leakage_is_rejected() {
        let mut col = XState {
            rho_ee: 0.2,
            rho_gg: 0.4,
            rho_ss: 0.3,
            rho_aa: 0.1,
            rho_eg: c(0.1),
        }
        .to_collective();
        col.0[(S, G)] = c(0.01);
        col.0[(G, S)] = c(0.01);
        assert!(matches!(
            extract_xstate(&col),
            Err(Error::Structural { .. })
        ));
    }

    #[test]
    fn validation_and_spectrum() {
        assert!(DensityMatrix4::new(Matrix4::identity() * c(0.5)).is_err());
        let mixed = DensityMatrix4::new(Matrix4::identity() * c(0.25)).unwrap();
        assert!((mixed.min_eigenvalue() - 0.25).abs() < 1e-14);
        assert_eq!(DensityMatrix4::ground().trace(), 1.0);
    }
}
