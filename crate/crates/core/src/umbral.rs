//! The umbral algebra: truncated formal power series in `t` over `Q(λ)`.
//!
//! A series is stored through its divided coefficients `a_k`, meaning
//! `f(t) = Σ a_k t^k / k!`. In that normalization the pairing with the power
//! basis is simply `<f(t) | x^n> = a_n`, and the product of two series is a
//! binomial convolution of their divided coefficients.
//!
//! Each series plays three roles:
//!
//! - a formal power series ([`TruncSeries::mul`], [`TruncSeries::recip`], ...),
//! - a linear functional on polynomials ([`TruncSeries::functional`]),
//! - a linear operator on polynomials ([`TruncSeries::operator`]), where
//!   `t^k x^n = n!/(n-k)! x^(n-k)`.
//!
//! Only Appell sequences (`s_n ~ (g(t), t)`) are supported; they are
//! `s_n(x) = g(t)^{-1} x^n`.

use std::fmt;

use crate::combinat::{binomial, factorial};
use crate::error::Error;
use crate::scalar::{LambdaRat, Rational};
use crate::xpoly::XPoly;

/// Order `O(f)` of a series: index of the first nonzero coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOrder {
    Finite(usize),
    /// Every stored coefficient vanishes.
    BeyondTruncation,
}

/// `Σ_{k=0}^{N} a_k t^k / k!`, exact up to and including `t^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    divided: Vec<LambdaRat>,
}

fn binom_rat(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n as u64, k as u64))
}

impl TruncSeries {
    /// From divided coefficients `a_0..=a_N`. An empty vector is the zero
    /// series of truncation order 0.
    pub fn from_divided(mut divided: Vec<LambdaRat>) -> Self {
        if divided.is_empty() {
            divided.push(LambdaRat::zero());
        }
        TruncSeries { divided }
    }

    /// From ordinary coefficients `c_k` of `Σ c_k t^k`.
    pub fn from_ordinary(ordinary: Vec<LambdaRat>) -> Self {
        let divided = ordinary
            .into_iter()
            .enumerate()
            .map(|(k, c)| c.scale(&Rational::from_integer(factorial(k as u64))))
            .collect();
        Self::from_divided(divided)
    }

    pub fn zero(order: usize) -> Self {
        Self::from_divided(vec![LambdaRat::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(LambdaRat::one(), order)
    }

    pub fn constant(c: LambdaRat, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.divided[0] = c;
        s
    }

    /// `e^{yt}`, whose divided coefficients are `y^k`.
    pub fn exp(y: &LambdaRat, order: usize) -> Self {
        let mut divided = Vec::with_capacity(order + 1);
        let mut power = LambdaRat::one();
        for _ in 0..=order {
            divided.push(power.clone());
            power = &power * y;
        }
        Self::from_divided(divided)
    }

    /// `t^k`.
    pub fn t_power(k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.divided[k] = LambdaRat::from_bigint(factorial(k as u64));
        }
        s
    }

    /// `(e^t - λ)/(1 - λ)`: `a_0 = 1`, `a_k = 1/(1 - λ)` for `k ≥ 1`.
    pub fn frobenius_euler_generator(order: usize) -> Self {
        let tail = LambdaRat::one_minus_lambda()
            .inv()
            .expect("1 - L is nonzero");
        let mut divided = vec![tail; order + 1];
        divided[0] = LambdaRat::one();
        Self::from_divided(divided)
    }

    pub fn truncation_order(&self) -> usize {
        self.divided.len() - 1
    }

    pub fn divided(&self) -> &[LambdaRat] {
        &self.divided
    }

    pub fn divided_coeff(&self, k: usize) -> &LambdaRat {
        &self.divided[k]
    }

    /// Ordinary coefficient of `t^k`, i.e. `a_k / k!`.
    pub fn ordinary_coeff(&self, k: usize) -> LambdaRat {
        self.divided[k].scale(&Rational::from_integer(factorial(k as u64)).recip())
    }

    pub fn order(&self) -> SeriesOrder {
        self.divided
            .iter()
            .position(|a| !a.is_zero())
            .map_or(SeriesOrder::BeyondTruncation, SeriesOrder::Finite)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut divided = self.divided.clone();
        divided.resize(order.min(self.truncation_order()) + 1, LambdaRat::zero());
        Self::from_divided(divided)
    }

    pub fn add(&self, other: &TruncSeries) -> Self {
        let n = self.truncation_order().min(other.truncation_order());
        Self::from_divided(
            (0..=n)
                .map(|k| &self.divided[k] + &other.divided[k])
                .collect(),
        )
    }

    /// `c · f(t)`.
    pub fn mul_scalar(&self, c: &LambdaRat) -> Self {
        Self::from_divided(self.divided.iter().map(|a| a * c).collect())
    }

    /// Product; the truncation order is the smaller of the two.
    pub fn mul(&self, other: &TruncSeries) -> Self {
        let n = self.truncation_order().min(other.truncation_order());
        let divided = (0..=n)
            .map(|m| {
                let mut acc = LambdaRat::zero();
                for k in 0..=m {
                    let (a, b) = (&self.divided[k], &other.divided[m - k]);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b).scale(&binom_rat(m, k));
                }
                acc
            })
            .collect();
        Self::from_divided(divided)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> Result<Self, Error> {
        let a0_inv = self.divided[0].inv().map_err(|_| Error::NotInvertible)?;
        let n = self.truncation_order();
        let mut out: Vec<LambdaRat> = Vec::with_capacity(n + 1);
        out.push(a0_inv.clone());
        for m in 1..=n {
            let mut acc = LambdaRat::zero();
            for k in 1..=m {
                let a = &self.divided[k];
                if a.is_zero() || out[m - k].is_zero() {
                    continue;
                }
                acc = &acc + &(a * &out[m - k]).scale(&binom_rat(m, k));
            }
            out.push(-(&acc * &a0_inv));
        }
        Ok(Self::from_divided(out))
    }

    /// `f^s`; negative exponents go through [`TruncSeries::recip`].
    pub fn pow(&self, s: i64) -> Result<Self, Error> {
        let mut base = if s < 0 { self.recip()? } else { self.clone() };
        let mut result = Self::one(self.truncation_order());
        let mut e = s.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    /// `f(αt)`.
    pub fn scale(&self, alpha: &LambdaRat) -> Self {
        let mut power = LambdaRat::one();
        let mut divided = Vec::with_capacity(self.divided.len());
        for a in &self.divided {
            divided.push(a * &power);
            power = &power * alpha;
        }
        Self::from_divided(divided)
    }

    fn check_reach(&self, p: &XPoly) -> Result<(), Error> {
        if let Some(d) = p.degree().finite() {
            if d > self.truncation_order() {
                return Err(Error::TruncationTooShort {
                    order: self.truncation_order(),
                    degree: d,
                });
            }
        }
        Ok(())
    }

    /// `<f(t) | p(x)> = Σ c_n a_n` for `p = Σ c_n x^n`.
    pub fn functional(&self, p: &XPoly) -> Result<LambdaRat, Error> {
        self.check_reach(p)?;
        Ok(p.coeffs()
            .iter()
            .zip(&self.divided)
            .filter(|(c, a)| !c.is_zero() && !a.is_zero())
            .fold(LambdaRat::zero(), |acc, (c, a)| &acc + &(c * a)))
    }

    /// `f(t) p(x)`: `x^n ↦ Σ_k C(n,k) a_k x^(n-k)`.
    pub fn operator(&self, p: &XPoly) -> Result<XPoly, Error> {
        self.check_reach(p)?;
        let mut out = vec![LambdaRat::zero(); p.coeffs().len()];
        for (n, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for k in 0..=n {
                let a = &self.divided[k];
                if a.is_zero() {
                    continue;
                }
                out[n - k] = &out[n - k] + &(c * a).scale(&binom_rat(n, k));
            }
        }
        Ok(XPoly::new(out))
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.divided.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coeff = if a.is_atomic() {
                a.to_string()
            } else {
                format!("({a})")
            };
            match k {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}*t")?,
                _ => write!(f, "{coeff}/{k}!*t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " (order {})", self.truncation_order())
    }
}

fn require_invertible(g: &TruncSeries) -> Result<(), Error> {
    match g.order() {
        SeriesOrder::Finite(0) => Ok(()),
        _ => Err(Error::NotInvertible),
    }
}

/// The Appell sequence `s_0..=s_{n_max}` for `(g(t), t)`.
pub fn appell_sequence(g: &TruncSeries, n_max: usize) -> Result<Vec<XPoly>, Error> {
    require_invertible(g)?;
    if g.truncation_order() < n_max {
        return Err(Error::TruncationTooShort {
            order: g.truncation_order(),
            degree: n_max,
        });
    }
    let inv = g.recip()?;
    (0..=n_max)
        .map(|n| inv.operator(&XPoly::monomial(n)))
        .collect()
}

/// Coefficients `C_k = <g(t) t^k | p(x)> / k!` of `p` in the Appell
/// sequence of `(g(t), t)`.
pub fn appell_expand(g: &TruncSeries, p: &XPoly) -> Result<Vec<LambdaRat>, Error> {
    require_invertible(g)?;
    let Some(deg) = p.degree().finite() else {
        return Ok(Vec::new());
    };
    let order = g.truncation_order();
    if deg > order {
        return Err(Error::TruncationTooShort { order, degree: deg });
    }
    (0..=deg)
        .map(|k| {
            let pairing = g.mul(&TruncSeries::t_power(k, order)).functional(p)?;
            Ok(pairing.scale(&Rational::from_integer(factorial(k as u64)).recip()))
        })
        .collect()
}

/// `Σ_k coeffs[k] s_k(x)`.
pub fn appell_recombine(coeffs: &[LambdaRat], sequence: &[XPoly]) -> XPoly {
    XPoly::linear_combination(coeffs.iter().zip(sequence))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LambdaPoly;

    fn y() -> LambdaRat {
        LambdaRat::from_poly(LambdaPoly::from_ints(&[2, 1])) // 2 + λ
    }

    fn inv_oml() -> LambdaRat {
        LambdaRat::one_minus_lambda().inv().unwrap()
    }

    #[test]
    fn order_of_series() {
        let f = TruncSeries::from_divided(vec![0.into(), 0.into(), 3.into(), 1.into()]);
        assert_eq!(f.order(), SeriesOrder::Finite(2));
        assert_eq!(TruncSeries::exp(&y(), 5).order(), SeriesOrder::Finite(0));
        assert_eq!(
            TruncSeries::frobenius_euler_generator(5).order(),
            SeriesOrder::Finite(0)
        );
        assert_eq!(TruncSeries::zero(4).order(), SeriesOrder::BeyondTruncation);
    }

    #[test]
    fn exponential_law() {
        let z = LambdaRat::from_int(-3);
        let prod = TruncSeries::exp(&y(), 7).mul(&TruncSeries::exp(&z, 7));
        assert_eq!(prod, TruncSeries::exp(&(&y() + &z), 7));
        let f = TruncSeries::frobenius_euler_generator(6);
        assert_eq!(f.mul(&TruncSeries::one(6)), f);
        assert_eq!(f.mul(&TruncSeries::one(3)).truncation_order(), 3);
    }

    #[test]
    fn reciprocals() {
        assert_eq!(
            TruncSeries::exp(&y(), 6).recip().unwrap(),
            TruncSeries::exp(&-y(), 6)
        );
        assert_eq!(TruncSeries::one(4).recip().unwrap(), TruncSeries::one(4));
        let g = TruncSeries::frobenius_euler_generator(8);
        assert_eq!(g.mul(&g.recip().unwrap()), TruncSeries::one(8));
        assert_eq!(
            TruncSeries::t_power(1, 3).recip(),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn powers() {
        let g = TruncSeries::frobenius_euler_generator(5);
        assert_eq!(g.pow(0).unwrap(), TruncSeries::one(5));
        assert_eq!(g.pow(3).unwrap(), g.mul(&g).mul(&g));
        assert_eq!(g.pow(-2).unwrap(), g.recip().unwrap().pow(2).unwrap());
        assert_eq!(
            TruncSeries::exp(&y(), 5).pow(3).unwrap(),
            TruncSeries::exp(&y().scale(&crate::scalar::rat_int(3)), 5)
        );
        assert!(TruncSeries::t_power(2, 4).pow(-1).is_err());
    }

    #[test]
    fn argument_scaling() {
        let alpha = LambdaRat::lambda();
        assert_eq!(
            TruncSeries::exp(&y(), 5).scale(&alpha),
            TruncSeries::exp(&(&y() * &alpha), 5)
        );
        let g = TruncSeries::frobenius_euler_generator(4);
        assert_eq!(g.scale(&LambdaRat::one()), g);
        let t = TruncSeries::t_power(1, 3).scale(&alpha);
        assert_eq!(t.divided_coeff(1), &alpha);
    }

    #[test]
    fn functional_pairings() {
        for n in 0..6 {
            for k in 0..6 {
                let v = TruncSeries::t_power(k, 6)
                    .functional(&XPoly::monomial(n))
                    .unwrap();
                let expected = if n == k {
                    LambdaRat::from_bigint(factorial(n as u64))
                } else {
                    LambdaRat::zero()
                };
                assert_eq!(v, expected);
            }
        }
        let p = XPoly::new(vec![3.into(), LambdaRat::lambda(), 0.into(), (-2).into()]);
        assert_eq!(
            TruncSeries::exp(&y(), 3).functional(&p).unwrap(),
            p.eval(&y())
        );
        assert_eq!(
            TruncSeries::exp(&y(), 2).functional(&p),
            Err(Error::TruncationTooShort {
                order: 2,
                degree: 3
            })
        );
    }

    #[test]
    fn operator_actions() {
        for n in 1..7 {
            let d = TruncSeries::t_power(1, 7)
                .operator(&XPoly::monomial(n))
                .unwrap();
            assert_eq!(d, XPoly::term(LambdaRat::from_int(n as i64), n - 1));
        }
        let p = XPoly::new(vec![3.into(), LambdaRat::lambda(), 0.into(), (-2).into()]);
        assert_eq!(
            TruncSeries::exp(&y(), 3).operator(&p).unwrap(),
            p.shift(&y())
        );
        assert_eq!(TruncSeries::one(5).operator(&p).unwrap(), p);
    }

    #[test]
    fn appell_sequences() {
        let plain = appell_sequence(&TruncSeries::one(5), 5).unwrap();
        for (n, s) in plain.iter().enumerate() {
            assert_eq!(s, &XPoly::monomial(n));
        }
        let fe = appell_sequence(&TruncSeries::frobenius_euler_generator(4), 4).unwrap();
        assert_eq!(fe[1], XPoly::new(vec![-inv_oml(), LambdaRat::one()]));
        assert!(fe
            .iter()
            .enumerate()
            .all(|(n, s)| s.is_monic() && s.degree().finite() == Some(n)));
        assert!(appell_sequence(&TruncSeries::t_power(1, 4), 3).is_err());
        assert!(appell_sequence(&TruncSeries::one(2), 3).is_err());
    }

    #[test]
    fn appell_expansions() {
        let c = appell_expand(&TruncSeries::one(4), &XPoly::monomial(3)).unwrap();
        assert_eq!(c, vec![0.into(), 0.into(), 0.into(), 1.into()]);
        let c = appell_expand(&TruncSeries::frobenius_euler_generator(3), &XPoly::x()).unwrap();
        assert_eq!(c, vec![inv_oml(), LambdaRat::one()]);
        let g = TruncSeries::frobenius_euler_generator(5).pow(2).unwrap();
        let seq = appell_sequence(&g, 5).unwrap();
        let c = appell_expand(&g, &seq[4]).unwrap();
        for (k, ck) in c.iter().enumerate() {
            assert_eq!(ck, &LambdaRat::from_int((k == 4) as i64));
        }
        assert!(appell_expand(&TruncSeries::one(2), &XPoly::monomial(3)).is_err());
    }

    #[test]
    fn display() {
        let s = TruncSeries::frobenius_euler_generator(2).to_string();
        assert_eq!(
            s,
            "1 + (-1 / (-1 + 1*L))*t + (-1 / (-1 + 1*L))/2!*t^2 (order 2)"
        );
        assert_eq!(TruncSeries::zero(1).to_string(), "0 (order 1)");
    }
}
