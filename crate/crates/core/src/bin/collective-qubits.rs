use clap::Parser;
use collective_qubits::cli::{run, RunConfig};

fn main() {
    let config = RunConfig::parse();
    if let Err(err) = run(&config) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
