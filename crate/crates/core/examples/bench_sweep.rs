//! Runs the randomized sweep and prints the four summary tables.
//!
//! ```text
//! cargo run --release --example bench_sweep -- [ITERATIONS] [SEED]
//! ```

use std::env;
use std::time::Instant;

use meetpoint::bench::{run_sweep, trend_checks, SweepConfig};

fn main() {
    let mut args = env::args().skip(1);
    let iterations = args.next().map_or(200, |s| s.parse().expect("iterations"));
    let seed = args.next().map_or(1, |s| s.parse().expect("seed"));
    let cfg = SweepConfig {
        iterations,
        seed,
        ..SweepConfig::default()
    };

    let t = Instant::now();
    let result = run_sweep(&cfg).expect("valid sweep config");
    print!("{}", result.to_text_table());
    println!("{} cells in {:.1?}", result.cells.len(), t.elapsed());

    let report = trend_checks(&result.stats());
    for check in report.failures() {
        println!("trend not met: {}", check.description);
    }
    println!(
        "{} of {} trend checks hold",
        report.checks.len() - report.failures().count(),
        report.checks.len()
    );
}
