//! Truncated power series acting on polynomials as functionals and as
//! operators, and the Appell sequence they generate.

use feuler::umbral::{appell_expand, appell_recombine, appell_sequence};
use feuler::{LambdaRat, TruncSeries, XPoly};

fn main() {
    let order = 6;
    let g = TruncSeries::frobenius_euler_generator(order);
    println!("g(t) = {g}");
    println!("1/g(t) = {}", g.recip().unwrap());

    let seq = appell_sequence(&g, 4).unwrap();
    for (n, s) in seq.iter().enumerate() {
        println!("s_{n}(x) = {s}");
    }

    let cube = XPoly::monomial(3);
    let shift = TruncSeries::exp(&LambdaRat::lambda(), order);
    println!("<e^(Lt) | x^3> = {}", shift.functional(&cube).unwrap());
    println!("e^(Lt) x^3     = {}", shift.operator(&cube).unwrap());
    println!(
        "t^2 x^3        = {}",
        TruncSeries::t_power(2, order).operator(&cube).unwrap()
    );

    let coeffs = appell_expand(&g, &cube).unwrap();
    println!(
        "x^3 in the Appell basis: {}",
        coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    assert_eq!(appell_recombine(&coeffs, &seq), cube);
}
