use nalgebra::Matrix4;
use num_complex::Complex64;

use super::basis::{extract_xstate, product_to_collective, DensityMatrix4};
use super::trajectory::{Sample, Trajectory};
use crate::collective_params::CollectiveCoupling;
use crate::concurrence::x_state_weights;
use crate::error::{Error, Result};

/// Trace drift beyond which an integration is declared failed.
pub const TRACE_DRIFT_LIMIT: f64 = 1e-6;

type M4 = Matrix4<Complex64>;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Lowering operators `S1-`, `S2-` in the product basis
/// `|e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>`.
pub fn lowering_operators() -> [M4; 2] {
    let mut s1 = M4::zeros();
    let mut s2 = M4::zeros();
    let one = Complex64::new(1.0, 0.0);
    // atom 1: e1 -> g1 maps index i to i + 2
    s1[(2, 0)] = one;
    s1[(3, 1)] = one;
    // atom 2: e2 -> g2 maps index i to i + 1
    s2[(1, 0)] = one;
    s2[(3, 2)] = one;
    [s1, s2]
}

/// Right-hand side of the two-atom master equation in the rotating frame:
///
/// ```text
/// d rho/dt = -i Omega12 [S1+ S2- + S2+ S1-, rho]
///            - 1/2 sum_ij gamma_ij ( rho Si+ Sj- + Si+ Sj- rho - 2 Sj- rho Si+ )
/// ```
#[derive(Debug, Clone)]
pub struct Liouvillian {
    hamiltonian: M4,
    anticommutator: M4,
    jumps: Vec<(f64, M4, M4)>,
}

impl Liouvillian {
    pub fn new(coupling: &CollectiveCoupling) -> Self {
        let lowering = lowering_operators();
        let rates = [
            [coupling.gamma, coupling.gamma12],
            [coupling.gamma12, coupling.gamma],
        ];
        let exchange = lowering[0].adjoint() * lowering[1] + lowering[1].adjoint() * lowering[0];
        let hamiltonian = exchange * Complex64::new(coupling.omega12, 0.0);

        let mut anticommutator = M4::zeros();
        let mut jumps = Vec::with_capacity(4);
        for (i, row) in rates.iter().enumerate() {
            for (j, &rate) in row.iter().enumerate() {
                if rate == 0.0 {
                    continue;
                }
                let raise_i = lowering[i].adjoint();
                anticommutator += raise_i * lowering[j] * Complex64::new(rate, 0.0);
                jumps.push((rate, lowering[j], raise_i));
            }
        }
        Self {
            hamiltonian,
            anticommutator,
            jumps,
        }
    }

    pub fn apply(&self, rho: &M4) -> M4 {
        let half = Complex64::new(0.5, 0.0);
        let mut d = (self.hamiltonian * rho - rho * self.hamiltonian) * (-I)
            - (self.anticommutator * rho + rho * self.anticommutator) * half;
        for (rate, lower, raise) in &self.jumps {
            d += lower * rho * raise * Complex64::new(*rate, 0.0);
        }
        d
    }
}

/// `d rho / dt` for a single state. Builds the generator on every call; use
/// [`Liouvillian`] directly in loops.
pub fn liouvillian_apply(rho: &DensityMatrix4, coupling: &CollectiveCoupling) -> M4 {
    Liouvillian::new(coupling).apply(rho.matrix())
}

/// Default integration step: `1e-3 / gamma`, tightened to `0.1 / |Omega12|`
/// when the dipole-dipole shift is the fastest scale.
pub fn default_step(coupling: &CollectiveCoupling) -> f64 {
    let base = 1e-3 / coupling.gamma;
    if coupling.omega12 != 0.0 {
        base.min(0.1 / coupling.omega12.abs())
    } else {
        base
    }
}

fn max_step(coupling: &CollectiveCoupling) -> f64 {
    0.1 / coupling.gamma.max(coupling.omega12.abs())
}

/// Classical fourth-order Runge-Kutta stepping of the master equation.
#[derive(Debug, Clone)]
pub struct Propagator {
    generator: Liouvillian,
    max_dt: f64,
}

impl Propagator {
    /// `max_dt` bounds every internal step; it must resolve the fastest rate.
    pub fn new(coupling: &CollectiveCoupling, max_dt: f64) -> Result<Self> {
        let limit = max_step(coupling);
        if !max_dt.is_finite() || max_dt <= 0.0 {
            return Err(Error::Config(format!(
                "step must be positive, got {max_dt}"
            )));
        }
        if max_dt > limit * (1.0 + 1e-12) {
            return Err(Error::Config(format!(
                "step {max_dt} exceeds 0.1/max(gamma, |omega12|) = {limit}"
            )));
        }
        Ok(Self {
            generator: Liouvillian::new(coupling),
            max_dt,
        })
    }

    pub fn step(&self, rho: &M4, h: f64) -> M4 {
        let hc = Complex64::new(h, 0.0);
        let half = Complex64::new(0.5 * h, 0.0);
        let k1 = self.generator.apply(rho);
        let k2 = self.generator.apply(&(rho + k1 * half));
        let k3 = self.generator.apply(&(rho + k2 * half));
        let k4 = self.generator.apply(&(rho + k3 * hc));
        rho + (k1 + (k2 + k3) * Complex64::new(2.0, 0.0) + k4) * Complex64::new(h / 6.0, 0.0)
    }

    /// Advances `rho0` through the increasing `times` (the first entry is the
    /// time of `rho0`), calling `visit` at every sample. Each interval is cut
    /// into equal substeps no longer than the propagator's step.
    pub fn evolve<F>(&self, rho0: &DensityMatrix4, times: &[f64], mut visit: F) -> Result<()>
    where
        F: FnMut(f64, &DensityMatrix4) -> Result<()>,
    {
        let Some(&t0) = times.first() else {
            return Ok(());
        };
        let mut rho = *rho0.matrix();
        visit(t0, rho0)?;
        for w in times.windows(2) {
            let span = w[1] - w[0];
            if span <= 0.0 {
                return Err(Error::Config(
                    "sample times must be strictly increasing".into(),
                ));
            }
            let substeps = (span / self.max_dt * (1.0 - 1e-12)).ceil().max(1.0) as usize;
            let h = span / substeps as f64;
            for _ in 0..substeps {
                rho = self.step(&rho, h);
            }
            let trace_error = (rho.trace().re - 1.0).abs();
            if trace_error.is_nan() || trace_error > TRACE_DRIFT_LIMIT {
                return Err(Error::IntegrationFailure {
                    t: w[1],
                    trace_error,
                });
            }
            visit(w[1], &DensityMatrix4::from_matrix_unchecked(rho))?;
        }
        Ok(())
    }
}

/// Uniform grid `0, dt, 2 dt, ...` ending exactly at `t_end`.
pub(crate) fn uniform_grid(t_end: f64, dt: f64) -> Result<Vec<f64>> {
    if !t_end.is_finite() || t_end <= 0.0 {
        return Err(Error::Config(format!(
            "t_end must be positive, got {t_end}"
        )));
    }
    if !dt.is_finite() || dt <= 0.0 {
        return Err(Error::Config(format!("dt must be positive, got {dt}")));
    }
    let n = (t_end / dt - 1e-9).ceil().max(1.0) as usize;
    let mut times: Vec<f64> = (0..n).map(|k| k as f64 * dt).collect();
    times.push(t_end);
    Ok(times)
}

/// Integrates from `rho0` over `[0, t_end]`, storing every step of size `dt`.
pub fn integrate(
    rho0: &DensityMatrix4,
    coupling: &CollectiveCoupling,
    t_end: f64,
    dt: f64,
) -> Result<Trajectory> {
    let propagator = Propagator::new(coupling, dt)?;
    let times = uniform_grid(t_end, dt)?;
    collect(&propagator, rho0, &times)
}

/// Integrates with internal step `dt` but stores samples only every
/// `sample_dt`.
pub fn integrate_sampled(
    rho0: &DensityMatrix4,
    coupling: &CollectiveCoupling,
    t_end: f64,
    sample_dt: f64,
    dt: f64,
) -> Result<Trajectory> {
    let propagator = Propagator::new(coupling, dt)?;
    let times = uniform_grid(t_end, sample_dt)?;
    collect(&propagator, rho0, &times)
}

fn collect(propagator: &Propagator, rho0: &DensityMatrix4, times: &[f64]) -> Result<Trajectory> {
    let mut samples = Vec::with_capacity(times.len());
    propagator.evolve(rho0, times, |_, rho| {
        let x = extract_xstate(&product_to_collective(rho))?;
        samples.push(Sample {
            x,
            weights: x_state_weights(&x),
        });
        Ok(())
    })?;
    Ok(Trajectory::new(times.to_vec(), samples))
}
