//! Time evolution of the two-atom density matrix.
//!
//! Two independent routes are provided: the closed-form evolution of the
//! X-shaped collective-basis elements ([`analytic_elements`]) and a direct
//! fixed-step integration of the full master equation in the product basis
//! ([`integrate`]). The master equation is written in the frame rotating at
//! the atomic transition frequency, so the free `omega0` term never appears.

mod analytic;
mod basis;
mod master;
mod trajectory;

pub use analytic::{analytic_elements, initial_state_matrix, ClosedForm, InitialState};
pub use basis::{
    collective_to_product, extract_xstate, one_photon_leakage, product_to_collective,
    CollectiveMatrix, DensityMatrix4, XState, LEAKAGE_LIMIT,
};
pub use master::{
    default_step, integrate, integrate_sampled, liouvillian_apply, lowering_operators, Liouvillian,
    Propagator, TRACE_DRIFT_LIMIT,
};
pub use trajectory::{Sample, Trajectory};
