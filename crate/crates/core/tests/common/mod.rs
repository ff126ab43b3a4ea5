//! Reference computations used by the integration tests. Everything here
//! works over plain rationals and deliberately avoids the crate's own
//! algorithms.

#![allow(dead_code)]

use feuler::{LambdaRat, XPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

pub fn fact(n: usize) -> Q {
    (1..=n).fold(Q::one(), |acc, k| acc * q(k as i64, 1))
}

pub fn binom(n: usize, k: usize) -> Q {
    if k > n {
        return Q::zero();
    }
    fact(n) / (fact(k) * fact(n - k))
}

/// Ordinary coefficients of `e^t` up to `t^n`.
pub fn exp_series(n: usize) -> Vec<Q> {
    (0..=n).map(|k| fact(k).recip()).collect()
}

pub fn series_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|m| (0..=m).map(|k| &a[k] * &b[m - k]).sum())
        .collect()
}

/// Long division `1 / a` for ordinary coefficients with `a[0] != 0`.
pub fn series_recip(a: &[Q]) -> Vec<Q> {
    let mut out: Vec<Q> = Vec::with_capacity(a.len());
    for m in 0..a.len() {
        let mut acc = if m == 0 { Q::one() } else { Q::zero() };
        for k in 1..=m {
            acc -= &a[k] * &out[m - k];
        }
        out.push(acc / &a[0]);
    }
    out
}

/// Euler polynomials `E_0..=E_{n_max}` from `2 e^{xt} / (e^t + 1)`, as
/// ascending coefficient vectors in `x`.
pub fn euler_polynomials(n_max: usize) -> Vec<Vec<Q>> {
    let mut denom = exp_series(n_max);
    denom[0] += Q::one();
    let g: Vec<Q> = series_recip(&denom)
        .into_iter()
        .map(|c| c * q(2, 1))
        .collect();
    // E_n(x) = n! Σ_j g_{n-j} x^j / j!
    (0..=n_max)
        .map(|n| (0..=n).map(|j| fact(n) * &g[n - j] / fact(j)).collect())
        .collect()
}

/// `H_0..=H_{n_max}` of order `r` at a numeric `λ`, read off
/// `((1-λ)/(e^t-λ))^r = Σ H_n t^n/n!`.
pub fn fe_numbers_at(lambda: &Q, r: usize, n_max: usize) -> Vec<Q> {
    let mut denom = exp_series(n_max);
    denom[0] -= lambda;
    let base: Vec<Q> = series_recip(&denom)
        .into_iter()
        .map(|c| c * (Q::one() - lambda))
        .collect();
    let mut acc = vec![Q::zero(); n_max + 1];
    acc[0] = Q::one();
    for _ in 0..r {
        acc = series_mul(&acc, &base);
    }
    acc.into_iter()
        .enumerate()
        .map(|(n, c)| c * fact(n))
        .collect()
}

/// Classical Stirling numbers of the second kind by
/// `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
pub fn classical_stirling(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); n_max + 1]; n_max + 1];
    s[0][0] = BigInt::one();
    for n in 1..=n_max {
        for k in 1..=n {
            s[n][k] = BigInt::from(k) * &s[n - 1][k] + &s[n - 1][k - 1];
        }
    }
    s
}

/// Sum of multinomials over every composition of `l` into `m` positive
/// parts, by explicit enumeration.
pub fn surjections_by_enumeration(l: usize, m: usize) -> BigInt {
    fn go(remaining: usize, parts_left: usize, denom: Q, total: usize, acc: &mut Q) {
        if parts_left == 0 {
            if remaining == 0 {
                *acc += fact(total) / denom;
            }
            return;
        }
        for part in 1..=remaining {
            go(
                remaining - part,
                parts_left - 1,
                &denom * fact(part),
                total,
                acc,
            );
        }
    }
    let mut acc = Q::zero();
    go(l, m, Q::one(), l, &mut acc);
    assert!(acc.is_integer());
    acc.to_integer()
}

/// Coefficients in `λ` of `Σ_j C(k,j) (-λ)^{k-j} j^n`, with `0^0 = 1`.
pub fn delta_at_zero_in_lambda(n: usize, k: usize) -> Vec<Q> {
    let mut coeffs = vec![Q::zero(); k + 1];
    for j in 0..=k {
        let jn = if n == 0 {
            Q::one()
        } else {
            q((j as i64).pow(n as u32), 1)
        };
        let sign = if (k - j).is_multiple_of(2) {
            Q::one()
        } else {
            -Q::one()
        };
        coeffs[k - j] += binom(k, j) * sign * jn;
    }
    coeffs
}

/// Ascending coefficients of a λ-free polynomial after substituting `λ`.
pub fn specialize(p: &XPoly, lambda: &Q) -> Vec<Q> {
    let p = p.eval_lambda(lambda).expect("no pole");
    (0..p.coeffs().len())
        .map(|k| p.coeff(k).as_rational().expect("constant in L"))
        .collect()
}

/// Ascending `λ`-coefficients of a polynomial-valued element of `Q(λ)`.
pub fn lambda_coeffs(v: &LambdaRat) -> Vec<Q> {
    assert!(v.is_polynomial(), "{v} is not a polynomial in L");
    v.numer().coeffs().to_vec()
}

/// Trims trailing zeros so coefficient vectors compare canonically.
pub fn trim(mut v: Vec<Q>) -> Vec<Q> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}
