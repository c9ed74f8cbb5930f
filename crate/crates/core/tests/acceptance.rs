//! Acceptance criteria 1–8, one PASS/FAIL line each.

use std::time::Instant;

use germsig::verify::{run_suite, suites};

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for info in suites() {
        let start = Instant::now();
        let checks = run_suite(&info.name).expect("suite listed in the manifest");
        let elapsed = start.elapsed();
        let ok = !checks.is_empty() && checks.iter().all(|c| c.passed);
        println!(
            "{} criterion {} [{}] {} ({:.1?})",
            if ok { "PASS" } else { "FAIL" },
            info.criterion,
            info.name,
            info.title,
            elapsed
        );
        for c in &checks {
            println!("    {} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.details);
        }
        if !ok {
            failed.push(info.criterion);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

#[test]
fn manifest_lists_each_criterion_once() {
    let mut criteria: Vec<u32> = suites().iter().map(|s| s.criterion).collect();
    criteria.sort_unstable();
    assert_eq!(criteria, (1..=8).collect::<Vec<_>>());
}
