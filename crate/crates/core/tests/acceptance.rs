//! Runs the ten acceptance criteria and prints one line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use qchan::reproduce::{
    criterion_constant_norm, criterion_determinant, criterion_identities, criterion_kraus, criterion_qubit,
    criterion_qubit_norm, criterion_ranges, criterion_representations, criterion_sharpness, criterion_witnesses,
    CriterionResult,
};
use qchan::Result;

const SEED: u64 = 20240611;

type Criterion = fn() -> Result<CriterionResult>;

fn main() -> ExitCode {
    let start = Instant::now();
    let runs: [(&str, Criterion); 10] = [
        ("1", criterion_ranges),
        ("2", || criterion_constant_norm(SEED)),
        ("3", criterion_sharpness),
        ("4", || criterion_representations(SEED)),
        ("5", || criterion_kraus(SEED)),
        ("6", || criterion_identities(SEED)),
        ("7", criterion_determinant),
        ("8", || criterion_qubit(SEED)),
        ("9", criterion_witnesses),
        ("10", || criterion_qubit_norm(SEED)),
    ];
    let mut failures = 0;
    for (id, run) in runs {
        let t = Instant::now();
        match run() {
            Ok(c) => {
                failures += usize::from(!c.passed);
                println!("{}  [{:.2}s]", c.line(), t.elapsed().as_secs_f64());
            }
            Err(e) => {
                failures += 1;
                println!("[FAIL] {id:>2} error: {e}");
            }
        }
    }
    println!(
        "acceptance: {} of 10 passed in {:.1}s",
        10 - failures,
        start.elapsed().as_secs_f64()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
