//! Writes fig1.csv, fig2.csv and fig3.csv into a directory.
//!
//! ```bash
//! cargo run -p collective-qubits --release --example figures -- out/
//! ```

use std::path::PathBuf;

use collective_qubits::cli::cmd_figures;

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&dir).expect("create output directory");
    match cmd_figures(&dir, 1.0) {
        Ok(paths) => {
            for p in paths {
                println!("wrote {}", p.display());
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
