//! Acceptance battery: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::Instant;

use prelie_core::verify::{Verdict, Verifier, VerifyConfig};

fn main() -> ExitCode {
    let start = Instant::now();
    let v = Verifier::new(VerifyConfig::default());
    let mut failed = 0;
    for k in 1..=14u8 {
        match v.run_criterion(k) {
            Ok(r) if r.verdict == Verdict::Pass => {
                println!("PASS criterion {k:2} {} ({} ms)", r.name, r.elapsed_ms);
            }
            Ok(r) => {
                failed += 1;
                println!("FAIL criterion {k:2} {} witness: {}", r.name, r.witness);
            }
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {k:2} error: {e}");
            }
        }
    }
    println!("{} of 14 criteria passed in {:.1} s", 14 - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
