//! Concurrence of a few two-qubit states, computed from the general
//! spin-flip definition and, for X states, from the closed-form weights.
//!
//! ```bash
//! cargo run -p collective-qubits --example concurrence
//! ```

use std::f64::consts::FRAC_1_SQRT_2;

use collective_qubits::concurrence::spin_flip_spectrum;
use collective_qubits::{wootters_concurrence, x_state_weights, DensityMatrix4, XState};
use nalgebra::Matrix4;
use num_complex::Complex64;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn main() -> collective_qubits::Result<()> {
    let bell = DensityMatrix4::pure([c(FRAC_1_SQRT_2), c(0.0), c(0.0), c(FRAC_1_SQRT_2)])?;
    println!(
        "Bell state              C = {:.6}",
        wootters_concurrence(&bell)?
    );

    for w in [0.2, 1.0 / 3.0, 0.5, 0.8] {
        let werner =
            DensityMatrix4::new(bell.matrix() * c(w) + Matrix4::identity() * c((1.0 - w) / 4.0))?;
        println!(
            "Werner w = {w:.3}        C = {:.6}   spectrum of rho*rho~ = {:.4?}",
            wootters_concurrence(&werner)?,
            spin_flip_spectrum(&werner)?
        );
    }

    let x = XState {
        rho_ee: 0.05,
        rho_gg: 0.35,
        rho_ss: 0.1,
        rho_aa: 0.5,
        rho_eg: Complex64::from_polar(0.1, 0.7),
    };
    let weights = x_state_weights(&x);
    println!(
        "X state                 C = {:.6} (c1 = {:.4}, c2 = {:.4}, {:?}); general path {:.6}",
        weights.c,
        weights.c1,
        weights.c2,
        weights.dominant,
        wootters_concurrence(&x.to_product())?
    );
    Ok(())
}
