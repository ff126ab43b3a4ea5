//! Frobenius-Euler numbers and polynomials of integer order over `Q(λ)`.
//!
//! `H_n^{(r)}(x|λ)` is the Appell sequence of `((e^t - λ)/(1 - λ))^r`. For
//! `r ≥ 0` the polynomials come from the order-`r` numbers by binomial
//! expansion; for `r < 0` they are `J_λ^{|r|} x^n`, a finite sum of shifts,
//! so no series truncation is ever involved.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{binomial, factorial};
use crate::scalar::{LambdaPoly, LambdaRat, Rational};
use crate::xpoly::XPoly;

fn binom_rat(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n as u64, k as u64))
}

fn inv_one_minus_lambda() -> LambdaRat {
    LambdaRat::one_minus_lambda()
        .inv()
        .expect("1 - L is nonzero")
}

/// `H_0(λ), ..., H_{n_max}(λ)` from `(H(λ) + 1)^n - λ H_n(λ) = (1 - λ) δ_{0,n}`.
pub fn fe_numbers(n_max: usize) -> Vec<LambdaRat> {
    // H_n = (1/(λ - 1)) Σ_{k<n} C(n,k) H_k
    let factor = -inv_one_minus_lambda();
    let mut h = Vec::with_capacity(n_max + 1);
    h.push(LambdaRat::one());
    for n in 1..=n_max {
        let mut acc = LambdaRat::zero();
        for (k, hk) in h.iter().enumerate() {
            acc = &acc + &hk.scale(&binom_rat(n, k));
        }
        h.push(&acc * &factor);
    }
    h
}

/// Binomial convolution of two divided-coefficient sequences.
fn convolve(a: &[LambdaRat], b: &[LambdaRat]) -> Vec<LambdaRat> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|m| {
            let mut acc = LambdaRat::zero();
            for k in 0..=m {
                if a[k].is_zero() || b[m - k].is_zero() {
                    continue;
                }
                acc = &acc + &(&a[k] * &b[m - k]).scale(&binom_rat(m, k));
            }
            acc
        })
        .collect()
}

/// `H_n^{(r)}(λ)` for `n = 0..=n_max`, the `r`-fold multinomial
/// convolution of the order-1 numbers. `r = 0` gives `δ_{n,0}`.
pub fn fe_numbers_order(n_max: usize, r: usize) -> Vec<LambdaRat> {
    let mut out = vec![LambdaRat::zero(); n_max + 1];
    out[0] = LambdaRat::one();
    if r == 0 {
        return out;
    }
    let base = fe_numbers(n_max);
    for _ in 0..r {
        out = convolve(&out, &base);
    }
    out
}

/// `Σ_l C(n,l) numbers[n-l] x^l`.
pub fn appell_from_numbers(n: usize, numbers: &[LambdaRat]) -> XPoly {
    let coeffs = (0..=n)
        .map(|l| numbers[n - l].scale(&binom_rat(n, l)))
        .collect();
    XPoly::new(coeffs)
}

/// `H_n^{(r)}(x|λ)` for any integer order `r`.
pub fn fe_poly(n: usize, r: i64) -> XPoly {
    if r >= 0 {
        appell_from_numbers(n, &fe_numbers_order(n, r as usize))
    } else {
        j_lambda(&XPoly::monomial(n), r.unsigned_abs() as usize)
    }
}

/// `(p(x+1) - λ p(x)) / (1 - λ)`, applied once.
pub fn j_lambda_step(p: &XPoly) -> XPoly {
    delta_lambda(p).scale(&inv_one_minus_lambda())
}

/// `Δ̃_λ p(x) = p(x+1) - λ p(x)`.
pub fn delta_lambda(p: &XPoly) -> XPoly {
    &p.shift(&LambdaRat::one()) - &p.scale(&LambdaRat::lambda())
}

/// `J_λ^s p` by the closed form
/// `(1-λ)^{-s} Σ_j C(s,j) (-λ)^{s-j} p(x+j)`.
pub fn j_lambda(p: &XPoly, s: usize) -> XPoly {
    if s == 0 {
        return p.clone();
    }
    let shifted: Vec<XPoly> = (0..=s)
        .map(|j| p.shift(&LambdaRat::from_int(j as i64)))
        .collect();
    let weights = delta_weights(s);
    let sum = XPoly::linear_combination(weights.iter().zip(&shifted));
    sum.scale(
        &LambdaRat::one_minus_lambda()
            .pow(-(s as i64))
            .expect("1 - L is nonzero"),
    )
}

/// `J_λ^s p` by `s` successive single steps.
pub fn j_lambda_iterated(p: &XPoly, s: usize) -> XPoly {
    (0..s).fold(p.clone(), |acc, _| j_lambda_step(&acc))
}

/// `C(k,j) (-λ)^{k-j}` for `j = 0..=k`.
fn delta_weights(k: usize) -> Vec<LambdaRat> {
    (0..=k)
        .map(|j| {
            let sign = if (k - j).is_multiple_of(2) { 1 } else { -1 };
            let c = Rational::from_integer(binomial(k as u64, j as u64) * sign);
            LambdaRat::from_poly(LambdaPoly::monomial(c, k - j))
        })
        .collect()
}

/// `Δ̃_λ^k 0^n = Σ_j C(k,j) (-λ)^{k-j} j^n`, with `0^0 = 1`.
pub fn delta_lambda_at_zero(n: usize, k: usize) -> LambdaRat {
    let mut coeffs = vec![Rational::zero(); k + 1];
    for j in 0..=k {
        let jn: BigInt = if n == 0 {
            BigInt::one()
        } else {
            BigInt::from(j).pow(n as u32)
        };
        if jn.is_zero() {
            continue;
        }
        let sign = if (k - j).is_multiple_of(2) { 1 } else { -1 };
        coeffs[k - j] = Rational::from_integer(binomial(k as u64, j as u64) * jn * sign);
    }
    LambdaRat::from_poly(LambdaPoly::new(coeffs))
}

/// λ-analogue of the Stirling numbers of the second kind,
/// `S_λ(n,k) = (1/k!) Σ_j C(k,j) (-λ)^{k-j} j^n`.
pub fn stirling_lambda(n: usize, k: usize) -> LambdaRat {
    delta_lambda_at_zero(n, k).scale(&Rational::from_integer(factorial(k as u64)).recip())
}

/// Σ over compositions `k_1 + ... + k_m = l` with every `k_j ≥ 1` of the
/// multinomial `(l; k_1, ..., k_m)`, i.e. the number of surjections from an
/// `l`-set onto an `m`-set.
pub fn surjection_sum(l: usize, m: usize) -> BigInt {
    surjection_table(l, m)[l][m].clone()
}

/// `table[a][b]` = surjection sum for `a ≤ l`, `b ≤ m`, built by splitting
/// off the first part of each composition.
fn surjection_table(l: usize, m: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); m + 1]; l + 1];
    t[0][0] = BigInt::one();
    for b in 1..=m {
        for a in b..=l {
            let mut acc = BigInt::zero();
            for first in 1..=(a - b + 1) {
                acc += binomial(a as u64, first as u64) * &t[a - first][b - 1];
            }
            t[a][b] = acc;
        }
    }
    t
}

/// Coefficient `A(s,l) = Σ_{m ≤ min(s,l)} C(s,m) (1-λ)^{-m} Surj(l,m)` of
/// `C(n,l) H_{n-l}^{(r)}` in the expansion of `H_n^{(r-s)}`. It is the
/// divided coefficient of `t^l` in `((e^t - λ)/(1 - λ))^s`.
pub fn lowering_coeff(s: usize, l: usize) -> LambdaRat {
    lowering_coeff_with(s, l, |m| m)
}

/// [`lowering_coeff`] with the power of `(1-λ)^{-1}` attached to the `m`-th
/// term given by `exponent(m)`; the identity harness uses this to inject
/// faults.
pub fn lowering_coeff_with(s: usize, l: usize, exponent: impl Fn(usize) -> usize) -> LambdaRat {
    lowering_partial_sum(s, l, s.min(l), exponent)
}

/// `Σ_{m=0}^{m_top} C(s,m) (1-λ)^{-exponent(m)} Surj(l,m)`. Terms with
/// `m > min(s,l)` vanish, so any `m_top ≥ min(s,l)` gives the full
/// coefficient.
pub fn lowering_partial_sum(
    s: usize,
    l: usize,
    m_top: usize,
    exponent: impl Fn(usize) -> usize,
) -> LambdaRat {
    let surj = surjection_table(l, m_top);
    let max_exp = (0..=m_top).map(&exponent).max().unwrap_or(0);
    // Common denominator (1-λ)^max_exp.
    let one_minus = LambdaPoly::from_ints(&[1, -1]);
    let mut num = LambdaPoly::zero();
    for (m, count) in surj[l].iter().enumerate() {
        let c = binomial(s as u64, m as u64) * count;
        if c.is_zero() {
            continue;
        }
        let term = one_minus
            .pow((max_exp - exponent(m)) as u32)
            .scale(&Rational::from_integer(c));
        num = &num + &term;
    }
    LambdaRat::new(num, one_minus.pow(max_exp as u32)).expect("nonzero denominator")
}

/// Coefficients of a polynomial in the basis `{H_k^{(r)}(x|λ)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub order: usize,
    pub coefficients: Vec<LambdaRat>,
}

/// `C_k = (1/(k! (1-λ)^r)) Σ_j C(r,j) (-λ)^{r-j} D^k p(j)`.
pub fn to_fe_basis(p: &XPoly, r: usize) -> BasisExpansion {
    let Some(deg) = p.degree().finite() else {
        return BasisExpansion {
            order: r,
            coefficients: Vec::new(),
        };
    };
    let weights = delta_weights(r);
    let outer = LambdaRat::one_minus_lambda()
        .pow(-(r as i64))
        .expect("1 - L is nonzero");
    let points: Vec<LambdaRat> = (0..=r).map(|j| LambdaRat::from_int(j as i64)).collect();
    let coefficients = (0..=deg)
        .map(|k| {
            let dk = p.derivative(k);
            let sum = weights
                .iter()
                .zip(&points)
                .fold(LambdaRat::zero(), |acc, (w, j)| &acc + &(w * &dk.eval(j)));
            (&sum * &outer).scale(&Rational::from_integer(factorial(k as u64)).recip())
        })
        .collect();
    BasisExpansion {
        order: r,
        coefficients,
    }
}

/// `Σ_k C_k H_k^{(r)}(x|λ)`.
pub fn from_fe_basis(e: &BasisExpansion) -> XPoly {
    if e.coefficients.is_empty() {
        return XPoly::zero();
    }
    let n = e.coefficients.len() - 1;
    let numbers = fe_numbers_order(n, e.order);
    let basis: Vec<XPoly> = (0..=n).map(|k| appell_from_numbers(k, &numbers)).collect();
    XPoly::linear_combination(e.coefficients.iter().zip(&basis))
}

/// Memoized `H_n^{(r)}(λ)` tables and `H_n^{(r)}(x|λ)` polynomials.
///
/// Entries are computed outside the lock and inserted whole, so concurrent
/// readers only ever see complete values. Two threads racing on the same
/// key may both compute it; the results are identical.
#[derive(Default)]
pub struct FeulerCache {
    numbers: RwLock<HashMap<usize, Arc<Vec<LambdaRat>>>>,
    polys: RwLock<HashMap<(usize, i64), Arc<XPoly>>>,
}

impl FeulerCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `H_0^{(r)}(λ) ..= H_{n_max}^{(r)}(λ)`, possibly longer.
    pub fn numbers(&self, n_max: usize, r: usize) -> Arc<Vec<LambdaRat>> {
        if let Some(v) = self.numbers.read().unwrap().get(&r) {
            if v.len() > n_max {
                return v.clone();
            }
        }
        let computed = Arc::new(fe_numbers_order(n_max, r));
        let mut map = self.numbers.write().unwrap();
        let entry = map.entry(r).or_insert_with(|| computed.clone());
        if entry.len() < computed.len() {
            *entry = computed;
        }
        entry.clone()
    }

    /// `H_n^{(r)}(λ)`.
    pub fn number(&self, n: usize, r: usize) -> LambdaRat {
        self.numbers(n, r)[n].clone()
    }

    pub fn poly(&self, n: usize, r: i64) -> Arc<XPoly> {
        if let Some(p) = self.polys.read().unwrap().get(&(n, r)) {
            return p.clone();
        }
        let p = if r >= 0 {
            appell_from_numbers(n, &self.numbers(n, r as usize))
        } else {
            fe_poly(n, r)
        };
        let p = Arc::new(p);
        self.polys
            .write()
            .unwrap()
            .entry((n, r))
            .or_insert(p)
            .clone()
    }

    pub fn len(&self) -> usize {
        self.polys.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
