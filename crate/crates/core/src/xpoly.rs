//! Polynomials in `x` over `Q(λ)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::combinat::binomial;
use crate::error::Error;
use crate::scalar::{forward_binop, Degree, LambdaRat, Rational};

/// Dense polynomial in `x`, coefficients in ascending powers of `x`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct XPoly {
    coeffs: Vec<LambdaRat>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<LambdaRat>) -> Self {
        while coeffs.last().is_some_and(LambdaRat::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(LambdaRat::one())
    }

    pub fn constant(c: LambdaRat) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(1)
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        Self::term(LambdaRat::one(), n)
    }

    /// `c * x^n`.
    pub fn term(c: LambdaRat, n: usize) -> Self {
        let mut coeffs = vec![LambdaRat::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[LambdaRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> LambdaRat {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(LambdaRat::is_one)
    }

    pub fn scale(&self, c: &LambdaRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        XPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// k-th derivative in `x`.
    pub fn derivative(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        if k >= self.coeffs.len() {
            return Self::zero();
        }
        let coeffs = (k..self.coeffs.len())
            .map(|n| {
                // n!/(n-k)!
                let falling: BigInt = ((n - k + 1)..=n).map(BigInt::from).product();
                self.coeffs[n].scale(&Rational::from_integer(falling))
            })
            .collect();
        Self::new(coeffs)
    }

    /// `p(x + a)` by binomial expansion.
    pub fn shift(&self, a: &LambdaRat) -> Self {
        if a.is_zero() || self.coeffs.len() <= 1 {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut powers = Vec::with_capacity(n);
        powers.push(LambdaRat::one());
        for i in 1..n {
            powers.push(&powers[i - 1] * a);
        }
        let mut out = vec![LambdaRat::zero(); n];
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate().take(m + 1) {
                let b = Rational::from_integer(binomial(m as u64, j as u64));
                *slot = &*slot + &(c * &powers[m - j]).scale(&b);
            }
        }
        Self::new(out)
    }

    /// `p(x0)`.
    pub fn eval(&self, x0: &LambdaRat) -> LambdaRat {
        self.coeffs
            .iter()
            .rev()
            .fold(LambdaRat::zero(), |acc, c| &(&acc * x0) + c)
    }

    /// `p(αx)`.
    pub fn dilate(&self, alpha: &LambdaRat) -> Self {
        let mut power = LambdaRat::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &power);
            power = &power * alpha;
        }
        Self::new(coeffs)
    }

    /// Specializes every coefficient at `λ = at`.
    pub fn eval_lambda(&self, at: &Rational) -> Result<XPoly, Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.eval(at).map(LambdaRat::from_rational))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(coeffs))
    }

    /// True when no coefficient above `x^0` is nonzero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{{{k}}}"),
            };
            if c.is_one() && k > 0 {
                out.push_str(&mono);
            } else if c.is_atomic() {
                out.push_str(&c.to_latex());
                out.push_str(&mono);
            } else {
                out.push_str(&format!("\\left({}\\right){mono}", c.to_latex()));
            }
        }
        out
    }
}

impl<'a> Add<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn add(self, rhs: &'a XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        XPoly::new(coeffs)
    }
}

impl<'a> Sub<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &'a XPoly) -> XPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &'a XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![LambdaRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        XPoly::new(coeffs)
    }
}

forward_binop!(XPoly, Add, add);
forward_binop!(XPoly, Sub, sub);
forward_binop!(XPoly, Mul, mul);

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        -&self
    }
}

impl From<LambdaRat> for XPoly {
    fn from(c: LambdaRat) -> Self {
        XPoly::constant(c)
    }
}

/// Descending powers, every term written as `c*x^k` including `x^0`;
/// coefficients are parenthesized unless they are a single nonnegative term.
impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_atomic() {
                write!(f, "{c}*x^{k}")?;
            } else {
                write!(f, "({c})*x^{k}")?;
            }
        }
        Ok(())
    }
}

impl XPoly {
    /// `Σ w·p` over the given pairs.
    pub fn linear_combination<'a, I>(terms: I) -> XPoly
    where
        I: IntoIterator<Item = (&'a LambdaRat, &'a XPoly)>,
    {
        let mut acc: Vec<LambdaRat> = Vec::new();
        for (w, p) in terms {
            if w.is_zero() {
                continue;
            }
            if acc.len() < p.coeffs.len() {
                acc.resize(p.coeffs.len(), LambdaRat::zero());
            }
            for (slot, c) in acc.iter_mut().zip(&p.coeffs) {
                if !c.is_zero() {
                    *slot = &*slot + &(w * c);
                }
            }
        }
        XPoly::new(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, LambdaPoly};

    fn c(n: i64) -> LambdaRat {
        LambdaRat::from_int(n)
    }

    fn xp(cs: &[i64]) -> XPoly {
        XPoly::new(cs.iter().map(|&n| c(n)).collect())
    }

    fn inv_one_minus_lambda() -> LambdaRat {
        LambdaRat::one_minus_lambda().inv().unwrap()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&xp(&[1, 1]) * &xp(&[-1, 1]), xp(&[-1, 0, 1]));
        let p = xp(&[3, 0, 2]);
        assert_eq!(&p + &XPoly::zero(), p);
        let scaled = XPoly::monomial(2).scale(&inv_one_minus_lambda());
        assert_eq!(scaled.coeff(2), inv_one_minus_lambda());
        assert_eq!(scaled.degree(), Degree::Finite(2));
    }

    #[test]
    fn derivatives() {
        assert_eq!(XPoly::monomial(3).derivative(1), xp(&[0, 0, 3]));
        let p = xp(&[5, 4, 3]);
        assert_eq!(p.derivative(0), p);
        assert!(p.derivative(3).is_zero());
        assert_eq!(XPoly::zero().derivative(2).degree(), Degree::MinusInfinity);
    }

    #[test]
    fn shifts() {
        assert_eq!(XPoly::monomial(2).shift(&c(1)), xp(&[1, 2, 1]));
        let p = xp(&[7, -2, 0, 1]);
        assert_eq!(p.shift(&LambdaRat::zero()), p);
        let a = -(&LambdaRat::lambda() * &inv_one_minus_lambda());
        let shifted = XPoly::x().shift(&a);
        assert_eq!(shifted, XPoly::new(vec![a.clone(), LambdaRat::one()]));
    }

    #[test]
    fn evaluation_and_dilation() {
        assert_eq!(xp(&[1, 0, 1]).eval(&c(2)), c(5));
        assert!(XPoly::zero().eval(&LambdaRat::lambda()).is_zero());
        assert_eq!(XPoly::monomial(2).dilate(&c(2)), xp(&[0, 0, 4]));
        let p = xp(&[1, 1]);
        assert_eq!(p.dilate(&c(1)), p);
        assert_eq!(
            p.dilate(&LambdaRat::lambda()),
            XPoly::new(vec![c(1), LambdaRat::lambda()])
        );
    }

    #[test]
    fn display_form() {
        let p = XPoly::new(vec![-inv_one_minus_lambda(), c(0), c(1)]);
        assert_eq!(p.to_string(), "1*x^2 + (1 / (-1 + 1*L))*x^0");
        let q = XPoly::new(vec![
            LambdaRat::from_poly(LambdaPoly::from_ints(&[0, 2])),
            c(-3),
        ]);
        assert_eq!(q.to_string(), "(-3)*x^1 + 2*L*x^0");
        assert_eq!(XPoly::zero().to_string(), "0");
    }

    #[test]
    fn lambda_specialization() {
        let p = XPoly::new(vec![inv_one_minus_lambda(), LambdaRat::lambda()]);
        let at = p.eval_lambda(&rat_int(3)).unwrap();
        assert_eq!(
            at,
            XPoly::new(vec![
                LambdaRat::from_rational(crate::scalar::rat(-1, 2)),
                c(3)
            ])
        );
        assert!(p.eval_lambda(&rat_int(1)).is_err());
    }
}
