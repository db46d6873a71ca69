//! The acceptance gate: runs every verification criterion at its full
//! desk-scale range and prints one pass/fail line per criterion.

use mapbij::verify::{run, Status};

#[test]
fn acceptance_suite() {
    let reports = run(7);
    println!("{}", mapbij::verify::render_table(&reports));
    assert_eq!(reports.len(), 11);
    let mut failed = vec![];
    for r in &reports {
        match r.status {
            Status::Pass => {}
            Status::Fail => failed.push(format!("criterion {} ({}): {}", r.id, r.name, r.observed)),
            Status::Skipped => failed.push(format!(
                "criterion {} ({}) skipped at full size: {}",
                r.id, r.name, r.observed
            )),
        }
    }
    assert!(failed.is_empty(), "{}", failed.join("\n"));
}
