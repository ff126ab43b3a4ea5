//! The L-analogue Stirling numbers of the second kind, which reduce to the
//! classical ones at L = 1.

use feuler::feuler::{lowering_coeff, stirling_lambda};
use feuler::scalar::rat;

fn main() {
    for n in 0..=5 {
        for k in 0..=n {
            let s = stirling_lambda(n, k);
            println!(
                "S_L({n},{k}) = {s}    classical: {}",
                s.eval(&rat(1, 1)).unwrap()
            );
        }
    }
    println!("\nlowering coefficients A(s,l):");
    for s in 0..=3 {
        let row: Vec<String> = (0..=3).map(|l| lowering_coeff(s, l).to_string()).collect();
        println!("  s = {s}: {}", row.join(" | "));
    }
}
