//! Parses generating-function expressions such as
//! `(1-q z)/(1-(x+q)z+(x-1)q z^2)` and expands them to a [`Series`].
//!
//! Variables are the single letters `x`, `q`, `p` and `z`; juxtaposition is
//! multiplication, `^` takes a nonnegative integer exponent and `sqrt(..)`
//! takes the root with constant term 1. A quotient whose denominator has an
//! integer constant term `c` other than `1` or `-1` is evaluated as
//! `(num / (den / c)) / c`, both divisions being exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::StatPoly;
use crate::series::{Series, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Var(char),
    Sqrt,
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(src[start..i].parse().unwrap())));
            }
            'x' | 'q' | 'p' | 'z' => {
                out.push((i, Tok::Var(c)));
                i += 1;
            }
            's' if src[i..].starts_with("sqrt") => {
                out.push((i, Tok::Sqrt));
                i += 4;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push((i, Tok::Op(c)));
                i += 1;
            }
            _ => {
                return Err(ExprError::Parse {
                    pos: i,
                    msg: format!("unexpected character {c:?}"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    order: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn fail<T>(&self, msg: &str) -> Result<T, ExprError> {
        Err(ExprError::Parse {
            pos: self.here(),
            msg: msg.to_string(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Series, ExprError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_) | Tok::Var(_) | Tok::Sqrt | Tok::Op('('))
        )
    }

    fn term(&mut self) -> Result<Series, ExprError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let den = self.unary()?;
                acc = quotient(&acc, &den)?;
            } else if self.starts_factor() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Series, ExprError> {
        if self.eat('-') {
            Ok(-&self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Series, ExprError> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = match self.peek() {
            Some(Tok::Num(n)) => usize::try_from(n).ok(),
            _ => None,
        };
        let Some(e) = e else {
            return self.fail("exponent must be a nonnegative integer");
        };
        self.pos += 1;
        let mut acc = Series::one(self.order);
        for _ in 0..e {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<Series, ExprError> {
        let order = self.order;
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Series::constant(StatPoly::constant(n), order))
            }
            Some(Tok::Var(v)) => {
                self.pos += 1;
                Ok(match v {
                    'x' => Series::constant(StatPoly::x(), order),
                    'q' => Series::constant(StatPoly::q(), order),
                    'p' => Series::constant(StatPoly::p(), order),
                    _ => Series::z(order),
                })
            }
            Some(Tok::Sqrt) => {
                self.pos += 1;
                if !self.eat('(') {
                    return self.fail("expected '(' after sqrt");
                }
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.fail("expected ')'");
                }
                Ok(inner.sqrt()?)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.fail("expected ')'");
                }
                Ok(inner)
            }
            _ => self.fail("expected a number, variable or '('"),
        }
    }
}

fn quotient(num: &Series, den: &Series) -> Result<Series, SeriesError> {
    let c = match den.coeffs()[0].as_constant() {
        Some(c) if !c.is_zero() => c,
        _ => return Err(SeriesError::NonUnitConstant(den.coeffs()[0].to_string())),
    };
    if c.abs().is_one() {
        return num.div(den);
    }
    let unit = den.div_integer(&c)?;
    num.div(&unit)?.div_integer(&c)
}

/// Parses `src` and expands it to order `order`.
pub fn expand_expr(src: &str, order: usize) -> Result<Series, ExprError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        order,
        end: src.len(),
    };
    let s = p.expr()?;
    if p.pos != toks.len() {
        return p.fail("trailing input");
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Series {
        expand_expr(s, 6).unwrap()
    }

    #[test]
    fn polynomial_forms() {
        assert_eq!(
            e("1+xz+(x^2+q)z^2").to_string(),
            "1 + x*z + (q + x^2)*z^2 + O(z^7)"
        );
        assert_eq!(e("-x^2"), -&e("x x"));
        assert_eq!(e("2(1-z)"), e("2-2*z"));
    }

    #[test]
    fn quotients() {
        assert_eq!(e("1/(1-z)"), Series::from_integers(vec![1; 7], 6));
        // non-unit constant denominators are halved exactly
        assert_eq!(e("2/(2-2z)"), e("1/(1-z)"));
        assert!(expand_expr("1/(2-z)", 6).is_err());
        assert_eq!(e("sqrt((1-z)^2)"), e("1-z"));
    }

    #[test]
    fn parse_errors() {
        for bad in ["1+", "(1-z", "x^y", "1 $ 2", "sqr(1)"] {
            assert!(matches!(expand_expr(bad, 3), Err(ExprError::Parse { .. })), "{bad}");
        }
    }
}
