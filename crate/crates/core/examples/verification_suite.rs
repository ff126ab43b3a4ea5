//! Runs the identity suite on a small grid, then again with a deliberately
//! broken lowering coefficient to show that the harness catches it.

use feuler::identities::{run_suite, Fault, Status, SuiteConfig, VerificationReport};

fn main() {
    let config = SuiteConfig::new(6, 3, 3);
    let report = run_suite(&config).expect("suite runs");
    println!("clean:  {:?}", report.totals);

    let text = report.to_json_lines();
    assert_eq!(VerificationReport::from_json_lines(&text).unwrap(), report);
    println!("first report line: {}", text.lines().next().unwrap());

    let broken = SuiteConfig {
        fault: Some(Fault::DropOneMinusLambda),
        ..config
    };
    let report = run_suite(&broken).expect("suite runs");
    println!("broken: {:?}", report.totals);
    if let Some(cell) = report.cells.iter().find(|c| c.status == Status::Mismatch) {
        println!(
            "e.g. {} {:?}\n  lhs {}\n  rhs {}",
            cell.identity, cell.params, cell.lhs, cell.rhs
        );
    }
}
