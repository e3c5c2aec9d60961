//! Runs the full check suite over a small parameter grid and prints the
//! summary, plus one check of a deliberately wrong Drazin candidate.

use windmill::verify::{verify_candidate, verify_grid};
use windmill::{build_windmill, WindmillParams};

fn main() -> windmill::Result<()> {
    let report = verify_grid(&[1, 2, 3], &[3, 4, 5], 3)?;
    print!("{}", report.summary());

    let a = build_windmill(WindmillParams::new(2, 4)?).adjacency_matrix();
    let wrong = verify_candidate(&a, &a.transpose(), None)?;
    println!("transpose as candidate: {:?}", wrong.checks);
    std::process::exit(if report.all_pass && !wrong.all_pass {
        0
    } else {
        1
    });
}
