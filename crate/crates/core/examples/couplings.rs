//! Collective damping and dipole-dipole shift as the atoms approach.
//!
//! ```bash
//! cargo run -p collective-qubits --example couplings
//! ```

use collective_qubits::coupling_from_separation;

fn main() -> collective_qubits::Result<()> {
    println!("{:>10} {:>12} {:>14}", "r/lambda", "gamma12", "Omega12");
    for r in [1.0, 0.5, 1.0 / 3.0, 1.0 / 6.0, 0.1, 0.05, 0.02, 0.01] {
        let c = coupling_from_separation(r, 1.0)?;
        println!("{r:>10.4} {:>12.6} {:>14.4}", c.gamma12, c.omega12);
    }
    Ok(())
}
