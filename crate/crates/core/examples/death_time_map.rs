//! Fraction of initial states that lose their entanglement in finite time,
//! for several separations.
//!
//! ```bash
//! cargo run -p collective-qubits --release --example death_time_map
//! ```

use collective_qubits::events::{death_time_scan, DEFAULT_T_MAX};

fn main() -> collective_qubits::Result<()> {
    let grid: Vec<f64> = (1..100).map(|k| k as f64 / 100.0).collect();
    for (label, r) in [
        ("lambda", 1.0),
        ("lambda/3", 1.0 / 3.0),
        ("lambda/6", 1.0 / 6.0),
        ("lambda/20", 0.05),
    ] {
        let scan = death_time_scan(r, 1.0, &grid, DEFAULT_T_MAX)?;
        let dying: Vec<_> = scan
            .iter()
            .filter_map(|(p, t)| t.map(|t| (*p, t)))
            .collect();
        let first = dying.first().map(|(p, _)| *p).unwrap_or(f64::NAN);
        println!(
            "{label:<10} {:>3}/{} states die; smallest such p = {first:.2}; death at p = 0.9: {:.4}",
            dying.len(),
            grid.len(),
            scan[89].1.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
