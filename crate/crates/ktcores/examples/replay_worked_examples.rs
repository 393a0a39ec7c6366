//! Replays the built-in worked-example suite and prints one block per row.
//!
//! ```text
//! cargo run --release --example replay_worked_examples
//! ```

use ktcores::reproduce;

fn main() {
    let outcomes = reproduce::run_all(None, 1);
    let mut failures = 0;
    for outcome in &outcomes {
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("[{status}] {} ({} ms): {}", outcome.id, outcome.millis, outcome.summary);
        for line in &outcome.details {
            println!("    {line}");
        }
        if !outcome.passed {
            failures += 1;
        }
    }
    println!("{} of {} rows passed", outcomes.len() - failures, outcomes.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
