//! Sparse univariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::rational::{is_negative, Rational};
use super::Ring;

/// Sparse polynomial in one variable (default `q`).
///
/// Invariants: no stored zero coefficients; terms are kept keyed by exponent
/// so the canonical order (exponents ascending) falls out of iteration.
/// Constants are variable-agnostic: they compare equal across variable names
/// and adopt the other operand's variable in arithmetic.
#[derive(Clone, Debug)]
pub struct UniPoly {
    var: String,
    terms: BTreeMap<u32, Rational>,
}

pub const DEFAULT_VAR: &str = "q";


impl UniPoly {
    pub fn zero_in(var: &str) -> Self {
        UniPoly {
            var: var.to_string(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial_in(DEFAULT_VAR, c, 0)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// The variable itself, `var^1`.
    pub fn var(name: &str) -> Self {
        Self::monomial_in(name, Rational::one(), 1)
    }

    /// `q^exp` with coefficient one.
    pub fn q_pow(exp: u32) -> Self {
        Self::monomial_in(DEFAULT_VAR, Rational::one(), exp)
    }

    pub fn monomial_in(var: &str, coeff: Rational, exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        UniPoly {
            var: var.to_string(),
            terms,
        }
    }

    pub fn from_terms(var: &str, terms: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        let mut p = Self::zero_in(var);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn var_name(&self) -> &str {
        &self.var
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.get(&0).cloned()
        } else {
            None
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// `Some((coeff, exp))` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(&Rational, u32)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&e, c)| (c, e))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, exp: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn unified_var<'a>(&'a self, other: &'a UniPoly) -> &'a str {
        if self.var == other.var || other.is_constant() {
            &self.var
        } else if self.is_constant() {
            &other.var
        } else {
            panic!(
                "mismatched polynomial variables `{}` vs `{}`",
                self.var, other.var
            );
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero_in(&self.var);
        }
        UniPoly {
            var: self.var.clone(),
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiply by the monomial `coeff * var^exp`.
    pub fn mul_monomial(&self, coeff: &Rational, exp: u32) -> Self {
        if coeff.is_zero() {
            return Self::zero_in(&self.var);
        }
        UniPoly {
            var: self.var.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (e + exp, v * coeff))
                .collect(),
        }
    }

    pub fn eval(&self, point: &Rational) -> Rational {
        // Horner over the sparse terms, highest exponent first.
        let mut acc = Rational::zero();
        let mut last_exp: Option<u32> = None;
        for (&e, c) in self.terms.iter().rev() {
            if let Some(le) = last_exp {
                acc *= pow_rat(point, le - e);
            }
            acc += c;
            last_exp = Some(e);
        }
        if let Some(le) = last_exp {
            acc *= pow_rat(point, le);
        }
        acc
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero_in(inner.var_name());
        for (&e, c) in self.terms.iter() {
            acc = &acc + &inner.ring_pow(e).scale(c);
        }
        acc
    }
}

fn pow_rat(base: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

impl PartialEq for UniPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.var == other.var || self.is_constant())
    }
}

impl Eq for UniPoly {}

impl Default for UniPoly {
    fn default() -> Self {
        Self::zero_in(DEFAULT_VAR)
    }
}

impl std::ops::Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let var = self.unified_var(rhs).to_string();
        let mut out = UniPoly {
            var,
            terms: self.terms.clone(),
        };
        for (&e, c) in rhs.terms.iter() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl std::ops::Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let var = self.unified_var(rhs).to_string();
        let mut out = UniPoly {
            var,
            terms: self.terms.clone(),
        };
        for (&e, c) in rhs.terms.iter() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl std::ops::Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let var = self.unified_var(rhs).to_string();
        let mut out = UniPoly::zero_in(&var);
        for (&e1, c1) in self.terms.iter() {
            for (&e2, c2) in rhs.terms.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl std::ops::Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            var: self.var.clone(),
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Ring for UniPoly {
    fn ring_zero() -> Self {
        Self::default()
    }
    fn ring_one() -> Self {
        Self::constant(Rational::one())
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn ring_from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }
}

/// Canonical text form: signed rational coefficients, `*` and `^`, exponents
/// ascending, e.g. `-1/8*q^2 + 1/4*q^6 - 1/8*q^10`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = is_negative(c);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "{}", self.var)?;
                } else {
                    write!(f, "{}^{}", self.var, e)?;
                }
            }
        }
        Ok(())
    }
}
