// Run every verification sweep and print the summaries, plus the JSON of
// the smallest report.
//
//     cargo run --release --example verification_suite

use ratio_bounds::verify::{GridSpec, Suite, Verifier};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let grid = GridSpec::with_points(32)?;
    let reports = Verifier::default().run(Suite::All, &grid, 1e-12);
    for r in &reports {
        println!("{}", r.summary_line());
    }
    if let Some(r) = reports.iter().min_by_key(|r| r.cases_run) {
        println!("{}", serde_json::to_string_pretty(r)?);
    }
    assert!(reports.iter().all(|r| r.passed));
    Ok(())
}

fn main() {
    run().unwrap();
}
