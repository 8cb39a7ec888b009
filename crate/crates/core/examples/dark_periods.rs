//! Death, dark periods and revivals for closely spaced atoms, next to the
//! closed-form estimates of the same times.
//!
//! ```bash
//! cargo run -p collective-qubits --example dark_periods -- 0.9 0.05
//! ```

use collective_qubits::events::{
    approx_death_revival, closed_form_events, death_time_independent, second_revival_estimate,
};
use collective_qubits::{coupling_from_separation, ClosedForm};

fn main() -> collective_qubits::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<f64>().expect("numeric argument"));
    let p = args.next().unwrap_or(0.9);
    let r = args.next().unwrap_or(0.05);

    let coupling = coupling_from_separation(r, 1.0)?;
    let model = ClosedForm::new(p, 1.0, coupling.gamma12)?;
    let events = closed_form_events(&model, 20.0, 1e-3)?;

    println!("p = {p}, r = {r} lambda, gamma12 = {:.6}", coupling.gamma12);
    for crossing in &events.crossings {
        println!("  {:>8.5}  {:?}", crossing.t, crossing.direction);
    }
    for (start, end) in &events.dark_intervals {
        println!("  dark on [{start:.4}, {end:.4}]");
    }
    println!(
        "independent-atom death time: {:?}",
        death_time_independent(p, 1.0)
    );
    println!(
        "gamma12 ~ gamma roots:        {:?}",
        approx_death_revival(p, 1.0)
    );
    println!(
        "second revival estimate:      {:?}",
        second_revival_estimate(p, &coupling).ok()
    );
    Ok(())
}
