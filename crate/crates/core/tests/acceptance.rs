//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test --test acceptance -- --nocapture` to see the details.

use lcsplit::verify::{run_check, Suite};

const SEED: u64 = 0x5eed;

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for id in 1..=10 {
        let r = run_check(id, Suite::Desk, SEED);
        println!("{r}");
        if !r.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
