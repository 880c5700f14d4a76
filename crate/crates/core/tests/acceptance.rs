//! One line per acceptance criterion; fails if any criterion fails.

use rsfan::harness::{run, DEFAULT_SEED};

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for id in 1..=11 {
        let c = run(id, DEFAULT_SEED).unwrap_or_else(|e| panic!("criterion {id} errored: {e}"));
        println!("{}", c.line());
        if !c.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
