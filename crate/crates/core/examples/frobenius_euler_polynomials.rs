//! Polynomials H_n^(r)(x|L) for positive and negative orders, the two
//! ladder operators, and the specializations L = -1 and L = 0.

use feuler::feuler::{fe_poly, j_lambda_step};
use feuler::scalar::rat;

fn main() {
    for r in [-2, -1, 0, 1, 2] {
        println!("H_3^({r}) = {}", fe_poly(3, r));
    }

    let p = fe_poly(4, 2);
    println!("\nD H_4^(2)   = {}", p.derivative(1));
    println!("4 H_3^(2)   = {}", fe_poly(3, 2).scale(&4.into()));
    println!("J H_4^(2)   = {}", j_lambda_step(&p));
    println!("H_4^(1)     = {}", fe_poly(4, 1));

    println!("\nEuler polynomials E_n(x) = H_n(x|-1):");
    for n in 0..=4 {
        println!(
            "  E_{n} = {}",
            fe_poly(n, 1).eval_lambda(&rat(-1, 1)).unwrap()
        );
    }
    println!(
        "H_3^(2)(x|0) = {}  (that is (x-2)^3)",
        fe_poly(3, 2).eval_lambda(&rat(0, 1)).unwrap()
    );
}
