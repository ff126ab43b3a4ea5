//! Recursive-descent parser for polynomial expressions in `x` over `Q(λ)`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | base ('^' uint)?
//! base   := uint | 'x' | 'L' | '(' expr ')'
//! ```
//!
//! `λ` may be written `L` or `λ`. A rational literal `a/b` is an ordinary
//! division. Division is only allowed by expressions free of `x`. Unary
//! minus binds looser than `^`, so `-x^2` is `-(x^2)`.
//!
//! Everything [`XPoly`]'s `Display` prints parses back to the same value.

use num_bigint::BigInt;

use crate::error::Error;
use crate::scalar::LambdaRat;
use crate::xpoly::XPoly;

const MAX_EXPONENT: u32 = 1024;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    Lambda,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, Error> {
    let mut toks = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        let tok = match ch {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    chars.next();
                }
                toks.push((Tok::Int(digits.parse().expect("ascii digits")), pos));
                continue;
            }
            'x' => Tok::X,
            'L' | 'λ' => Tok::Lambda,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(Error::Syntax {
                    pos,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        chars.next();
        toks.push((tok, pos));
    }
    toks.push((Tok::End, text.len()));
    Ok(toks)
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if t.0 != Tok::End {
            self.at += 1;
        }
        t
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, Error> {
        Err(Error::Syntax {
            pos: self.pos(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<XPoly, Error> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<XPoly, Error> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Tok::Slash => {
                    let (_, pos) = self.bump();
                    let divisor = self.factor()?;
                    if !divisor.is_constant() {
                        return Err(Error::DivisionByX { pos });
                    }
                    let inv = divisor.coeff(0).inv()?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<XPoly, Error> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let e = match self.bump() {
            (Tok::Int(e), pos) => u32::try_from(e)
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| Error::Syntax {
                    pos,
                    message: format!("exponent above {MAX_EXPONENT}"),
                })?,
            (_, pos) => {
                return Err(Error::Syntax {
                    pos,
                    message: "expected an unsigned exponent".into(),
                })
            }
        };
        Ok((0..e).fold(XPoly::one(), |acc, _| &acc * &base))
    }

    fn base(&mut self) -> Result<XPoly, Error> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(XPoly::constant(LambdaRat::from_bigint(n)))
            }
            Tok::X => {
                self.bump();
                Ok(XPoly::x())
            }
            Tok::Lambda => {
                self.bump();
                Ok(XPoly::constant(LambdaRat::lambda()))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.syntax("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => self.syntax("unexpected end of input"),
            other => self.syntax(format!("unexpected token {other:?}")),
        }
    }
}

/// Parses an expression into an exact polynomial.
pub fn parse_poly_expr(text: &str) -> Result<XPoly, Error> {
    let mut lx = Lexer {
        toks: lex(text)?,
        at: 0,
    };
    let value = lx.expr()?;
    if *lx.peek() != Tok::End {
        return lx.syntax("trailing input");
    }
    Ok(value)
}

/// Parses an expression that must not contain `x`.
pub fn parse_scalar_expr(text: &str) -> Result<LambdaRat, Error> {
    let p = parse_poly_expr(text)?;
    if !p.is_constant() {
        return Err(Error::InvalidArgument(format!("{text:?} depends on x")));
    }
    Ok(p.coeff(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LambdaPoly;

    fn c(n: i64) -> LambdaRat {
        LambdaRat::from_int(n)
    }

    #[test]
    fn simple_polynomials() {
        assert_eq!(
            parse_poly_expr("x^2 + 1").unwrap(),
            XPoly::new(vec![c(1), c(0), c(1)])
        );
        let inv = LambdaRat::one_minus_lambda().inv().unwrap();
        assert_eq!(
            parse_poly_expr("3*x - 1/(1-L)").unwrap(),
            XPoly::new(vec![-inv, c(3)])
        );
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_poly_expr("-x^2").unwrap(), -XPoly::monomial(2));
        assert_eq!(
            parse_poly_expr("2/3^2").unwrap(),
            XPoly::constant(LambdaRat::from_rational(crate::scalar::rat(2, 9)))
        );
        assert_eq!(
            parse_poly_expr("(x+1)^2").unwrap(),
            XPoly::new(vec![c(1), c(2), c(1)])
        );
        assert_eq!(
            parse_poly_expr("2*-x").unwrap(),
            XPoly::new(vec![c(0), c(-2)])
        );
        assert_eq!(
            parse_poly_expr("1 - 2 - 3").unwrap(),
            XPoly::constant(c(-4))
        );
        assert_eq!(
            parse_poly_expr("λ").unwrap(),
            XPoly::constant(LambdaRat::lambda())
        );
    }

    #[test]
    fn division_rules() {
        assert!(matches!(
            parse_poly_expr("x/x"),
            Err(Error::DivisionByX { pos: 1 })
        ));
        assert!(matches!(
            parse_poly_expr("x/(L-L)"),
            Err(Error::DivisionByZero)
        ));
        let expected = XPoly::x().scale(
            &LambdaRat::from_poly(LambdaPoly::from_ints(&[1, 1]))
                .inv()
                .unwrap(),
        );
        assert_eq!(parse_poly_expr("x/(1+L)").unwrap(), expected);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(
            parse_poly_expr("x +"),
            Err(Error::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_poly_expr("(x"),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_poly_expr("x # 2"),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_poly_expr("x^L"),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_poly_expr("x x"),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(parse_poly_expr("").is_err());
    }

    #[test]
    fn printed_forms_parse_back() {
        let p = crate::feuler::fe_poly(4, -2);
        assert_eq!(parse_poly_expr(&p.to_string()).unwrap(), p);
        let q = crate::feuler::fe_poly(5, 3);
        assert_eq!(parse_poly_expr(&q.to_string()).unwrap(), q);
        assert_eq!(parse_poly_expr("0").unwrap(), XPoly::zero());
    }

    #[test]
    fn scalar_expressions() {
        assert_eq!(
            parse_scalar_expr("(1 + 1*L) / (1 - 2*L + 1*L^2)")
                .unwrap()
                .to_string(),
            "(1 + 1*L) / (1 - 2*L + 1*L^2)"
        );
        assert!(parse_scalar_expr("x").is_err());
    }
}
