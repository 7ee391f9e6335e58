//! Exact rational scalars.
//!
//! `num_rational::BigRational` already maintains the invariants we need
//! (always reduced, positive denominator, zero is 0/1), so we use it directly
//! and add the small constructors the rest of the crate leans on.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Integer = BigInt;
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Reduced fraction `n/d`; panics on zero denominator.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u64) -> Integer {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl super::Ring for Rational {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
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
        Zero::is_zero(self)
    }
    fn ring_from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

/// `(k!/k^k)^n` — the scalar normalization attached to every k-wreath
/// determinant of an n-row matrix.
pub fn wreath_norm(k: u64, n: u64) -> Rational {
    let base = Rational::new(factorial(k), BigInt::from(k).pow(k as u32));
    let mut acc = Rational::one();
    for _ in 0..n {
        acc *= &base;
    }
    acc
}

/// `(-1/k)^e` as an exact rational.
pub fn neg_inv_k_pow(k: u64, e: u32) -> Rational {
    let sign = if e % 2 == 0 { 1 } else { -1 };
    Rational::new(BigInt::from(sign), BigInt::from(k).pow(e))
}

pub fn is_negative(r: &Rational) -> bool {
    r.numer().is_negative()
}
