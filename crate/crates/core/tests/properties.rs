//! Algebraic laws checked on random inputs.

mod common;

use common::{fact, q, Q};
use feuler::feuler::{fe_poly, from_fe_basis, to_fe_basis};
use feuler::parse::{parse_poly_expr, parse_scalar_expr};
use feuler::umbral::appell_expand;
use feuler::{LambdaPoly, LambdaRat, TruncSeries, XPoly};
use proptest::prelude::*;

fn small_poly(max_deg: usize) -> impl Strategy<Value = LambdaPoly> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 1..=max_deg + 1)
        .prop_map(|cs| LambdaPoly::new(cs.into_iter().map(|(n, d)| q(n, d)).collect()))
}

fn scalar() -> impl Strategy<Value = LambdaRat> {
    (small_poly(2), small_poly(2))
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| LambdaRat::new(n, d).unwrap())
}

fn nonzero_scalar() -> impl Strategy<Value = LambdaRat> {
    scalar().prop_filter("nonzero", |a| !a.is_zero())
}

fn xpoly(max_deg: usize) -> impl Strategy<Value = XPoly> {
    prop::collection::vec(scalar(), 0..=max_deg + 1).prop_map(XPoly::new)
}

fn point() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| q(n, d))
}

fn series(order: usize) -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec(scalar(), order + 1).prop_map(TruncSeries::from_divided)
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &LambdaRat::zero(), a.clone());
        prop_assert_eq!(&a * &LambdaRat::one(), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(a in scalar(), b in nonzero_scalar()) {
        let round = &(&a * &b) / &b;
        prop_assert_eq!(round.to_string(), a.to_string());
        prop_assert_eq!(parse_scalar_expr(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in scalar(), b in scalar(), at in point()) {
        let (Ok(va), Ok(vb)) = (a.eval(&at), b.eval(&at)) else { return Ok(()) };
        prop_assert_eq!((&a + &b).eval(&at).unwrap(), &va + &vb);
        prop_assert_eq!((&a * &b).eval(&at).unwrap(), &va * &vb);
    }

    #[test]
    fn shifts_compose(p in xpoly(5), a in scalar(), b in scalar()) {
        prop_assert_eq!(p.shift(&a).shift(&b), p.shift(&(&a + &b)));
    }

    #[test]
    fn derivative_commutes_with_shift(p in xpoly(6), a in scalar(), k in 0usize..4) {
        prop_assert_eq!(p.shift(&a).derivative(k), p.derivative(k).shift(&a));
    }

    #[test]
    fn taylor_expansion(p in xpoly(5), a in scalar()) {
        let mut sum = XPoly::zero();
        let mut power = LambdaRat::one();
        for k in 0..=6 {
            sum = &sum + &p.derivative(k).scale(&power.scale(&fact(k).recip()));
            power = &power * &a;
        }
        prop_assert_eq!(sum, p.shift(&a));
    }

    #[test]
    fn operator_is_adjoint_to_multiplication(f in series(5), g in series(5), p in xpoly(5)) {
        let lhs = f.mul(&g).functional(&p).unwrap();
        let rhs = f.functional(&g.operator(&p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dilation_moves_between_series_and_polynomial(f in series(5), p in xpoly(5), alpha in scalar()) {
        prop_assert_eq!(f.scale(&alpha).functional(&p).unwrap(), f.functional(&p.dilate(&alpha)).unwrap());
    }

    #[test]
    fn dual_expansions(f in series(6), p in xpoly(6)) {
        for k in 0..=6 {
            prop_assert_eq!(&f.functional(&XPoly::monomial(k)).unwrap(), f.divided_coeff(k));
        }
        let rebuilt = (0..=6).fold(XPoly::zero(), |acc, k| {
            let c = TruncSeries::t_power(k, 6).functional(&p).unwrap().scale(&fact(k).recip());
            &acc + &XPoly::term(c, k)
        });
        prop_assert_eq!(rebuilt, p);
    }

    #[test]
    fn generating_function(y in scalar(), r in 0i64..=3) {
        let order = 6;
        let g = TruncSeries::frobenius_euler_generator(order).pow(r).unwrap();
        let generating = TruncSeries::exp(&y, order).mul(&g.recip().unwrap());
        for n in 0..=order {
            prop_assert_eq!(generating.divided_coeff(n), &fe_poly(n, r).eval(&y));
        }
    }

    #[test]
    fn basis_round_trip(p in xpoly(6), r in 0usize..=4) {
        let e = to_fe_basis(&p, r);
        prop_assert_eq!(from_fe_basis(&e), p.clone());
        if !p.is_zero() {
            let g = TruncSeries::frobenius_euler_generator(6).pow(r as i64).unwrap();
            prop_assert_eq!(e.coefficients, appell_expand(&g, &p).unwrap());
        }
    }

    #[test]
    fn print_then_parse(p in xpoly(6)) {
        prop_assert_eq!(parse_poly_expr(&p.to_string()).unwrap(), p);
    }
}
