//! Exact arithmetic in `Q` and in the rational function field `Q(λ)`.
//!
//! Every value in this crate bottoms out in [`LambdaRat`]: a reduced quotient
//! of two polynomials in `λ` with rational coefficients. The denominator is
//! kept with integer coefficients, content 1 and a positive leading
//! coefficient, so two equal field elements always have identical
//! representations and identical text.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number.
pub type Rational = BigRational;

/// Degree of a polynomial. The zero polynomial has degree `MinusInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `a/b` or `a`, no spaces.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `a` or `a/b` with integer `a` and nonzero integer `b`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Polynomial in `λ` with rational coefficients, ascending powers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LambdaPoly {
    coeffs: Vec<Rational>,
}

impl LambdaPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `λ`.
    pub fn lambda() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &LambdaPoly) -> (LambdaPoly, LambdaPoly) {
        let dd = divisor.coeffs.len();
        assert!(dd > 0, "polynomial division by zero");
        if self.coeffs.len() < dd {
            return (Self::zero(), self.clone());
        }
        let lead_inv = divisor.coeffs[dd - 1].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd - 1);
        (Self::new(quot), Self::new(rem))
    }

    /// Divides out the rational content and fixes the sign so the leading
    /// coefficient is positive. Returns `(content, primitive part)` with
    /// `self = content * primitive`. The primitive part has integer
    /// coefficients with gcd 1.
    pub fn content_primitive(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        let prim = ints.into_iter().map(|c| c / &g).collect();
        (Rational::new(g, den_lcm), prim)
    }

    fn from_bigints(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &LambdaPoly, b: &LambdaPoly) -> LambdaPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_unit() || b.is_unit() {
            return Self::one();
        }
        let (_, pa) = a.content_primitive();
        let (_, pb) = b.content_primitive();
        let g = primitive_prs_gcd(pa, pb);
        Self::from_bigints(g).monic()
    }

    pub fn monic(&self) -> LambdaPoly {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    fn write_with(&self, out: &mut String, var: &str, latex: bool) {
        if self.is_zero() {
            out.push('0');
            return;
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            first = false;
            if latex {
                write_latex_term(out, &abs, k, var);
            } else {
                out.push_str(&fmt_rational(&abs));
                match k {
                    0 => {}
                    1 => {
                        out.push('*');
                        out.push_str(var);
                    }
                    _ => {
                        out.push('*');
                        out.push_str(var);
                        out.push('^');
                        out.push_str(&k.to_string());
                    }
                }
            }
        }
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        self.write_with(&mut s, "\\lambda", true);
        s
    }
}

fn write_latex_term(out: &mut String, abs: &Rational, k: usize, var: &str) {
    let coeff = if abs.denom().is_one() {
        abs.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
    };
    match k {
        0 => out.push_str(&coeff),
        _ => {
            if !abs.is_one() {
                out.push_str(&coeff);
            }
            out.push_str(var);
            if k > 1 {
                out.push_str(&format!("^{{{k}}}"));
            }
        }
    }
}

/// Integer content of a coefficient vector (nonnegative).
fn int_content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn make_primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let g = int_content(&p);
    if !g.is_zero() && !g.is_one() {
        for c in p.iter_mut() {
            *c = &*c / &g;
        }
    }
    if p.last().is_some_and(Signed::is_negative) {
        for c in p.iter_mut() {
            *c = -&*c;
        }
    }
    p
}

/// Pseudo-remainder of `a` by `b` over `Z`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() >= b.len() {
        let lr = r.last().cloned().unwrap();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// Primitive polynomial remainder sequence gcd of two primitive integer
/// polynomials.
fn primitive_prs_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    loop {
        if b.is_empty() {
            return make_primitive(a);
        }
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = make_primitive(pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
}

macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<$ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

impl<'a> Add<&'a LambdaPoly> for &'a LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &'a LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        LambdaPoly::new(coeffs)
    }
}

impl<'a> Sub<&'a LambdaPoly> for &'a LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &'a LambdaPoly) -> LambdaPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LambdaPoly> for &'a LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &'a LambdaPoly) -> LambdaPoly {
        if self.is_zero() || rhs.is_zero() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LambdaPoly::new(coeffs)
    }
}

forward_binop!(LambdaPoly, Add, add);
forward_binop!(LambdaPoly, Sub, sub);
forward_binop!(LambdaPoly, Mul, mul);

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        -&self
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_with(&mut s, "L", false);
        f.write_str(&s)
    }
}

/// An element of `Q(λ)` in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LambdaRat {
    num: LambdaPoly,
    den: LambdaPoly,
}

impl Default for LambdaRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl LambdaRat {
    /// Builds `num / den` and brings it to canonical form.
    pub fn new(num: LambdaPoly, den: LambdaPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = LambdaPoly::gcd(&num, &den);
        if g.is_one() {
            Ok(Self::normalize_units(num, den))
        } else {
            let (num, _) = num.div_rem(&g);
            let (den, _) = den.div_rem(&g);
            Ok(Self::normalize_units(num, den))
        }
    }

    /// Fixes the scalar ambiguity of an already coprime pair.
    fn normalize_units(num: LambdaPoly, den: LambdaPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (content, prim) = den.content_primitive();
        if content.is_one() {
            return LambdaRat { num, den };
        }
        let num = num.scale(&content.recip());
        let den = LambdaPoly::from_bigints(prim);
        LambdaRat { num, den }
    }

    pub fn zero() -> Self {
        LambdaRat {
            num: LambdaPoly::zero(),
            den: LambdaPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        LambdaRat {
            num: LambdaPoly::constant(r),
            den: LambdaPoly::one(),
        }
    }

    pub fn from_poly(p: LambdaPoly) -> Self {
        LambdaRat {
            num: p,
            den: LambdaPoly::one(),
        }
    }

    pub fn lambda() -> Self {
        Self::from_poly(LambdaPoly::lambda())
    }

    /// `1 - λ`.
    pub fn one_minus_lambda() -> Self {
        Self::from_poly(LambdaPoly::from_ints(&[1, -1]))
    }

    pub fn numer(&self) -> &LambdaPoly {
        &self.num
    }

    pub fn denom(&self) -> &LambdaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value if this is a constant in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if !self.den.is_one() {
            return None;
        }
        match self.num.degree() {
            Degree::MinusInfinity => Some(Rational::zero()),
            Degree::Finite(0) => Some(self.num.coeffs[0].clone()),
            Degree::Finite(_) => None,
        }
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (content, prim) = self.num.content_primitive();
        Ok(LambdaRat {
            num: self.den.scale(&content.recip()),
            den: LambdaPoly::from_bigints(prim),
        })
    }

    pub fn checked_div(&self, rhs: &LambdaRat) -> Result<Self, Error> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        // Powers of a reduced fraction stay reduced.
        Ok(LambdaRat {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LambdaRat {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Value at `λ = at`.
    pub fn eval(&self, at: &Rational) -> Result<Rational, Error> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::PoleAtPoint(fmt_rational(at)));
        }
        Ok(self.num.eval(at) / d)
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a LambdaRat>>(terms: I) -> LambdaRat {
        terms.into_iter().fold(LambdaRat::zero(), |acc, t| &acc + t)
    }

    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            self.num.to_latex()
        } else {
            format!(
                "\\frac{{{}}}{{{}}}",
                self.num.to_latex(),
                self.den.to_latex()
            )
        }
    }

    /// True when the text form is a single nonnegative term with no
    /// denominator, so it can be juxtaposed without parentheses.
    pub fn is_atomic(&self) -> bool {
        self.den.is_one()
            && self.num.term_count() <= 1
            && self.num.leading().is_none_or(|c| !c.is_negative())
    }
}

impl<'a> Add<&'a LambdaRat> for &'a LambdaRat {
    type Output = LambdaRat;
    fn add(self, rhs: &'a LambdaRat) -> LambdaRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return LambdaRat::from_poly(num);
            }
            return LambdaRat::new(num, self.den.clone()).expect("nonzero denominator");
        }
        let g = LambdaPoly::gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            return LambdaRat::normalize_units(num, den);
        }
        let (sd, _) = self.den.div_rem(&g);
        let (rd, _) = rhs.den.div_rem(&g);
        let t = &(&self.num * &rd) + &(&rhs.num * &sd);
        let g2 = LambdaPoly::gcd(&t, &g);
        let (num, den_tail) = if g2.is_one() {
            (t, rhs.den.clone())
        } else {
            (t.div_rem(&g2).0, rhs.den.div_rem(&g2).0)
        };
        LambdaRat::normalize_units(num, &sd * &den_tail)
    }
}

impl<'a> Sub<&'a LambdaRat> for &'a LambdaRat {
    type Output = LambdaRat;
    fn sub(self, rhs: &'a LambdaRat) -> LambdaRat {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LambdaRat> for &'a LambdaRat {
    type Output = LambdaRat;
    fn mul(self, rhs: &'a LambdaRat) -> LambdaRat {
        if self.is_zero() || rhs.is_zero() {
            return LambdaRat::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return LambdaRat::from_poly(&self.num * &rhs.num);
        }
        let g1 = LambdaPoly::gcd(&self.num, &rhs.den);
        let g2 = LambdaPoly::gcd(&rhs.num, &self.den);
        let split = |p: &LambdaPoly, g: &LambdaPoly| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_rem(g).0
            }
        };
        let num = &split(&self.num, &g1) * &split(&rhs.num, &g2);
        let den = &split(&self.den, &g2) * &split(&rhs.den, &g1);
        LambdaRat::normalize_units(num, den)
    }
}

impl<'a> Div<&'a LambdaRat> for &'a LambdaRat {
    type Output = LambdaRat;
    /// Panics on division by zero; use [`LambdaRat::checked_div`] to get an error.
    fn div(self, rhs: &'a LambdaRat) -> LambdaRat {
        self.checked_div(rhs).expect("division by zero in Q(L)")
    }
}

forward_binop!(LambdaRat, Add, add);
forward_binop!(LambdaRat, Sub, sub);
forward_binop!(LambdaRat, Mul, mul);
forward_binop!(LambdaRat, Div, div);

impl Neg for &LambdaRat {
    type Output = LambdaRat;
    fn neg(self) -> LambdaRat {
        LambdaRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for LambdaRat {
    type Output = LambdaRat;
    fn neg(self) -> LambdaRat {
        -&self
    }
}

impl From<i64> for LambdaRat {
    fn from(n: i64) -> Self {
        LambdaRat::from_int(n)
    }
}

impl From<Rational> for LambdaRat {
    fn from(r: Rational) -> Self {
        LambdaRat::from_rational(r)
    }
}

impl From<LambdaPoly> for LambdaRat {
    fn from(p: LambdaPoly) -> Self {
        LambdaRat::from_poly(p)
    }
}

impl fmt::Display for LambdaRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() > 1 {
            write!(f, "({}) / ({})", self.num, self.den)
        } else {
            write!(f, "{} / ({})", self.num, self.den)
        }
    }
}
