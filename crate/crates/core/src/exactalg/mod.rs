//! Exact rational arithmetic and sparse polynomial rings.
//!
//! Coefficients are arbitrary-precision rationals throughout ([`Rational`]).
//! [`UniPoly`] is a sparse univariate polynomial (exponent → coefficient),
//! [`MultiPoly`] its multivariate counterpart over a shared [`VarTable`].
//! [`parse_uni`]/[`parse_multi`] evaluate the small expression grammar used
//! to encode factored reference values, and [`modular`] provides the
//! machine-word prime layer used to accelerate large univariate determinants.

mod expr;
pub mod modular;
mod multipoly;
mod rational;
mod unipoly;

pub use expr::{parse_expr, parse_multi, parse_uni, qpoly, PolyExpr};
pub use multipoly::{MultiPoly, VarTable};
pub use rational::{binomial, factorial, is_negative, neg_inv_k_pow, rat, ratio, wreath_norm,
    Integer, Rational};
pub use unipoly::{UniPoly, DEFAULT_VAR};

use thiserror::Error;

/// Errors from polynomial parsing and evaluation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactAlgError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}`")]
    UnknownVariable { name: String },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
    #[error("missing assignment for variable `{name}`")]
    MissingAssignment { name: String },
    #[error("mismatched indeterminate tables: `{left}` vs `{right}`")]
    TableMismatch { left: String, right: String },
}

/// Commutative ring interface shared by matrix and determinant code.
///
/// Implemented by [`Rational`], [`UniPoly`] and [`MultiPoly`]. Operations on
/// polynomials panic on incompatible variable tables; matrix constructors
/// validate compatibility up front so generic code never mixes tables.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_from_rational(r: &Rational) -> Self;

    fn ring_pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::ring_one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.ring_mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.ring_mul(&base);
            }
        }
        acc
    }
}
