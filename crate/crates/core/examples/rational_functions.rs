//! Exact arithmetic in Q(L): canonical forms, substitution, and poles.

use feuler::scalar::rat;
use feuler::{LambdaPoly, LambdaRat};

fn main() {
    let one_minus_l = LambdaRat::one_minus_lambda();
    let a = one_minus_l.inv().unwrap();
    let b = LambdaRat::from_poly(LambdaPoly::from_ints(&[0, 1])) * a.clone();

    println!("1/(1-L)           = {a}");
    println!("L/(1-L)           = {b}");
    println!("1/(1-L) + L/(1-L) = {}", &a + &b);
    println!(
        "(1+L)/(1-L)^2     = {}",
        (LambdaRat::from_int(1) + LambdaRat::lambda()) * a.pow(2).unwrap()
    );
    println!("latex             = {}", a.pow(3).unwrap().to_latex());

    println!("at L = -1         : {}", a.eval(&rat(-1, 1)).unwrap());
    match a.eval(&rat(1, 1)) {
        Ok(v) => println!("at L = 1          : {v}"),
        Err(e) => println!("at L = 1          : {e}"),
    }
}
