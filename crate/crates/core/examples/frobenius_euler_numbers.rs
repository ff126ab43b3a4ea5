//! Frobenius-Euler numbers of orders 1 through 3, symbolic and at L = -1.

use feuler::feuler::fe_numbers_order;
use feuler::scalar::rat;

fn main() {
    for r in 1..=3 {
        println!("order {r}");
        for (n, h) in fe_numbers_order(5, r).iter().enumerate() {
            println!(
                "  H_{n} = {h}    (L = -1: {})",
                h.eval(&rat(-1, 1)).unwrap()
            );
        }
    }
}
