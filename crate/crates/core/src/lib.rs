//! Entanglement dynamics of two two-level atoms that radiate into a shared
//! vacuum.
//!
//! The atoms are coupled through the distance-dependent collective damping
//! `gamma12` and dipole-dipole shift `Omega12`
//! ([`collective_params`]). Starting from `sqrt(p)|e> + sqrt(1-p)|g>`, the
//! density matrix keeps an X shape in the collective basis
//! `{|e>, |g>, |s>, |a>}` and is evolved either in closed form or by
//! integrating the full master equation ([`dynamics`]). Its Wootters
//! concurrence ([`concurrence`]) can vanish at a finite time and later
//! revive; [`events`] locates these transitions.
//!
//! Time is measured in units of the inverse single-atom decay rate
//! throughout.
//!
//! ```
//! use collective_qubits::{coupling_from_separation, events, ClosedForm};
//!
//! let coupling = coupling_from_separation(0.05, 1.0)?;
//! let model = ClosedForm::new(0.9, coupling.gamma, coupling.gamma12)?;
//! let found = events::closed_form_events(&model, 20.0, 1e-3)?;
//! assert!((found.death_time.unwrap() - 0.60).abs() < 0.02);
//! # Ok::<(), collective_qubits::Error>(())
//! ```

pub mod cli;
pub mod collective_params;
pub mod concurrence;
pub mod dynamics;
pub mod error;
pub mod events;

pub use collective_params::{coupling_from_separation, CollectiveCoupling, Separation};
pub use concurrence::{
    wootters_concurrence, x_state_concurrence, x_state_weights, ConcurrenceBreakdown,
};
pub use dynamics::{
    analytic_elements, integrate, ClosedForm, DensityMatrix4, InitialState, Trajectory, XState,
};
pub use error::{Error, Result};
pub use events::{find_zero_crossings, EntanglementEvents};
