//! Integrates the full two-atom master equation with RK4 and compares it
//! with the closed-form X-state evolution, with and without the
//! dipole-dipole shift.
//!
//! ```bash
//! cargo run -p collective-qubits --release --example closed_form_vs_master_equation
//! ```

use collective_qubits::dynamics::initial_state_matrix;
use collective_qubits::{
    analytic_elements, coupling_from_separation, integrate, CollectiveCoupling,
};

fn main() -> collective_qubits::Result<()> {
    let p = 0.9;
    let full = coupling_from_separation(0.05, 1.0)?;
    let cases = [
        ("independent", CollectiveCoupling::independent(1.0)?),
        (
            "gamma12 only",
            CollectiveCoupling::with_rates(1.0, full.gamma12, 0.0)?,
        ),
        ("gamma12 + Omega12", full),
    ];
    let rho0 = initial_state_matrix(p)?.to_product();
    for (name, coupling) in cases {
        let trajectory = integrate(&rho0, &coupling, 10.0, 1e-3)?;
        let mut worst: f64 = 0.0;
        for (t, sample) in trajectory.iter() {
            let exact = analytic_elements(p, coupling.gamma, coupling.gamma12, t)?;
            worst = worst
                .max((sample.x.rho_ss - exact.rho_ss).abs())
                .max((sample.x.rho_aa - exact.rho_aa).abs())
                .max((sample.x.rho_ee - exact.rho_ee).abs())
                .max((sample.x.rho_eg - exact.rho_eg).norm());
        }
        println!(
            "{name:<18} {} samples, max deviation {worst:.2e}",
            trajectory.len()
        );
    }
    Ok(())
}
