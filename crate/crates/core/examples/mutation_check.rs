//! Flipping one sign in the base addition law makes the catalog fail.

use edwards_proof::identities::{run_all, Mutation, RunOptions};

fn main() {
    for m in Mutation::all() {
        let report = run_all(&RunOptions {
            mutation: Some(m),
            ..RunOptions::default()
        })
        .unwrap();
        let failing: Vec<_> = report
            .entries
            .iter()
            .filter(|e| !e.status.is_pass())
            .map(|e| e.name)
            .collect();
        println!("coordinate {} term {}: {} -> {failing:?}", m.coordinate, m.term, report.status.as_str());
    }
}
