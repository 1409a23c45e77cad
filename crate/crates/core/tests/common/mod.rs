#![allow(dead_code)]

pub mod corpus;
pub mod oracle;
pub mod suites;

use std::time::Instant;

/// Prints one status line for an acceptance criterion and fails the test
/// unless it passed.
pub fn criterion(n: u32, name: &str, start: Instant, limit_secs: f64, ok: bool, detail: &str) {
    let secs = start.elapsed().as_secs_f64();
    let in_time = secs <= limit_secs;
    let status = if ok && in_time { "PASS" } else { "FAIL" };
    println!("criterion {n:>2} {status} {name}: {detail} [{secs:.2}s, limit {limit_secs}s]");
    assert!(ok, "criterion {n} failed: {detail}");
    assert!(in_time, "criterion {n} exceeded {limit_secs}s ({secs:.2}s)");
}
