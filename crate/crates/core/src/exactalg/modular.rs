//! Machine-word modular arithmetic and Chinese remaindering.
//!
//! Internal accelerator for large univariate determinants: coefficients are
//! evaluated modulo 62-bit primes and recombined exactly. Final results are
//! always exact; callers cross-check against the division-free path on small
//! instances.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b; // a,b < p < 2^63, no overflow
    if s >= p {
        s - p
    } else {
        s
    }
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The first `count` primes below 2^62, descending.
pub fn primes_below_2_62(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = (1u64 << 62) - 1;
    while out.len() < count {
        if is_prime_u64(n) {
            out.push(n);
        }
        n -= 2;
    }
    out
}

/// Reduce a signed big integer into `[0, p)`.
pub fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    use num_integer::Integer as _;
    let m = v.mod_floor(&BigInt::from(p));
    let digits = m.to_u64_digits().1;
    digits.first().copied().unwrap_or(0)
}

/// Combine residues `x ≡ r_i (mod p_i)` into the unique integer in the
/// symmetric range `(-P/2, P/2]`, `P = Π p_i`.
pub fn crt_signed(residues: &[(u64, u64)]) -> BigInt {
    let mut value = BigInt::zero();
    let mut modulus = BigInt::one();
    for &(r, p) in residues {
        // value + t*modulus ≡ r (mod p)
        let pv = BigInt::from(p);
        let cur = bigint_mod(&value, p);
        let mstep = bigint_mod(&modulus, p);
        let t = mul_mod(sub_mod(r % p, cur, p), inv_mod(mstep, p), p);
        value += &modulus * BigInt::from(t);
        modulus *= pv;
    }
    let half = &modulus >> 1;
    if value > half {
        value -= &modulus;
    }
    value
}
