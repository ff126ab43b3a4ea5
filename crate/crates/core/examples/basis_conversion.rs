//! Expanding a polynomial in the Frobenius-Euler basis of order r and
//! recombining it.

use feuler::feuler::{from_fe_basis, to_fe_basis};
use feuler::parse::parse_poly_expr;

fn main() {
    let p = parse_poly_expr("x^3 - 2*x + L/(1+L)").expect("valid expression");
    println!("p(x) = {p}");
    for r in 0..=3 {
        let e = to_fe_basis(&p, r);
        println!("order {r}:");
        for (k, c) in e.coefficients.iter().enumerate() {
            println!("  C_{k} = {c}");
        }
        assert_eq!(from_fe_basis(&e), p);
    }
    println!("every expansion recombines to p exactly");
}
