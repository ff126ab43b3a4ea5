//! The expression grammar used on the command line.

use feuler::parse::parse_poly_expr;

fn main() {
    for text in [
        "x^2 + 1",
        "3*x - 1/(1-L)",
        "(x + L)^3 / 2",
        "-x^2",
        "x/x",
        "x/(L-L)",
        "2*(x",
    ] {
        match parse_poly_expr(text) {
            Ok(p) => {
                let again = parse_poly_expr(&p.to_string()).unwrap();
                println!("{text:>16}  ->  {p}    (round trip: {})", again == p);
            }
            Err(e) => println!("{text:>16}  ->  error: {e}"),
        }
    }
}
