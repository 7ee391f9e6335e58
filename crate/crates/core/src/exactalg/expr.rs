//! Expression grammar for encoding factored polynomial values as fixtures.
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := base ("^" uint)?
//! base   := uint | uint "/" uint | ident | "(" expr ")" | "-" factor
//! ```
//! Idents match `[a-zA-Z_][a-zA-Z0-9_]*`. Exponents are literal non-negative
//! integers; evaluation expands everything into a canonical sparse polynomial.

use std::sync::Arc;

use num_bigint::BigInt;
use super::multipoly::{MultiPoly, VarTable};
use super::rational::Rational;
use super::unipoly::UniPoly;
use super::{ExactAlgError, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyExpr {
    Int(BigInt),
    Ratio(BigInt, BigInt),
    Var(String),
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExactAlgError> {
        Err(ExactAlgError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt, ExactAlgError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            if self.peek() == Some(b'-') {
                return Err(ExactAlgError::NegativeExponent { pos: self.pos });
            }
            return self.err("expected unsigned integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn expr(&mut self) -> Result<PolyExpr, ExactAlgError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = PolyExpr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = PolyExpr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr, ExactAlgError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = PolyExpr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<PolyExpr, ExactAlgError> {
        let base = self.base()?;
        if self.eat(b'^') {
            let e = self.uint()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| ExactAlgError::Syntax {
                    pos: self.pos,
                    msg: "exponent too large".into(),
                })?;
            return Ok(PolyExpr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<PolyExpr, ExactAlgError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(PolyExpr::Neg(Box::new(self.factor()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                // lone "/" only forms a rational literal between two uints
                if self.peek() == Some(b'/') {
                    let save = self.pos;
                    self.pos += 1;
                    if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                        let d = self.uint()?;
                        return Ok(PolyExpr::Ratio(n, d));
                    }
                    self.pos = save;
                }
                Ok(PolyExpr::Int(n))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => Ok(PolyExpr::Var(self.ident())),
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse the grammar into an AST; trailing garbage is a syntax error.
pub fn parse_expr(text: &str) -> Result<PolyExpr, ExactAlgError> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(ExactAlgError::Syntax {
            pos: p.pos,
            msg: "trailing input".into(),
        });
    }
    Ok(e)
}

impl PolyExpr {
    fn eval<R: Ring>(&self, var: &mut impl FnMut(&str) -> Result<R, ExactAlgError>) -> Result<R, ExactAlgError> {
        Ok(match self {
            PolyExpr::Int(n) => R::ring_from_rational(&Rational::from_integer(n.clone())),
            PolyExpr::Ratio(n, d) => {
                if d == &BigInt::from(0) {
                    return Err(ExactAlgError::Syntax {
                        pos: 0,
                        msg: "zero denominator".into(),
                    });
                }
                R::ring_from_rational(&Rational::new(n.clone(), d.clone()))
            }
            PolyExpr::Var(name) => var(name)?,
            PolyExpr::Neg(e) => e.eval(var)?.ring_neg(),
            PolyExpr::Add(a, b) => a.eval(var)?.ring_add(&b.eval(var)?),
            PolyExpr::Sub(a, b) => a.eval(var)?.ring_sub(&b.eval(var)?),
            PolyExpr::Mul(a, b) => a.eval(var)?.ring_mul(&b.eval(var)?),
            PolyExpr::Pow(b, e) => b.eval(var)?.ring_pow(*e),
        })
    }

    pub fn to_uni(&self, var_name: &str) -> Result<UniPoly, ExactAlgError> {
        self.eval(&mut |name: &str| {
            if name == var_name {
                Ok(UniPoly::var(var_name))
            } else {
                Err(ExactAlgError::UnknownVariable { name: name.into() })
            }
        })
    }

    pub fn to_multi(&self, table: &Arc<VarTable>) -> Result<MultiPoly, ExactAlgError> {
        self.eval(&mut |name: &str| {
            table
                .index_of(name)
                .map(|i| MultiPoly::var(table, i))
                .ok_or_else(|| ExactAlgError::UnknownVariable { name: name.into() })
        })
    }
}

/// Parse and expand a univariate polynomial in `var_name`.
pub fn parse_uni(text: &str, var_name: &str) -> Result<UniPoly, ExactAlgError> {
    parse_expr(text)?.to_uni(var_name)
}

/// Parse and expand a multivariate polynomial over `table`.
pub fn parse_multi(text: &str, table: &Arc<VarTable>) -> Result<MultiPoly, ExactAlgError> {
    parse_expr(text)?.to_multi(table)
}

/// Shorthand used all over the test suites: a polynomial in `q`.
pub fn qpoly(text: &str) -> UniPoly {
    parse_uni(text, "q").expect("fixture polynomial must parse")
}
