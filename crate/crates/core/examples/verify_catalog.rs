//! Runs every identity of the group-law proof and prints a summary.
//!
//! `cargo run --release --example verify_catalog -- DIR` also writes the
//! certificates under DIR.

use edwards_proof::identities::{run_all, RunOptions};

fn main() {
    let opts = RunOptions {
        timings: true,
        ..RunOptions::default()
    };
    let report = run_all(&opts).unwrap();
    print!("{}", report.summary());
    if let Some(dir) = std::env::args().nth(1) {
        let n = report.write_certificates(dir.as_ref()).unwrap();
        println!("wrote {n} certificates to {dir}");
    }
    std::process::exit(if report.passed() { 0 } else { 1 });
}
