//! The block-average ω^(kⁿ) and its determinant-coefficient cross-checks.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use super::character::{mn_character, partitions_of};
use super::{CycleType, Partition, Permutation, SymCharError};
use crate::exactalg::{MultiPoly, Rational, Ring, VarTable};

/// Enumeration cap for (k!)^n.
pub const OMEGA_CAP: u128 = 10_000_000;

/// ω^(kⁿ)(x) = (k!)^{-n} Σ_{g ∈ S_k^n} χ^(kⁿ)(x∘g), where S_k^n permutes
/// within the consecutive blocks {0..k-1}, {k..2k-1}, … of kn points.
///
/// Two exact shortcuts skip the enumeration: for n = 1 the character is the
/// trivial one so ω ≡ 1, and for k = 1 the block subgroup is trivial and
/// χ^(1ⁿ) = sgn, so ω = sgn(x).
pub fn omega(k: usize, n: usize, x: &Permutation) -> Result<Rational, SymCharError> {
    let m = k * n;
    if x.degree() != m {
        return Err(SymCharError::DegreeMismatch {
            got: x.degree(),
            want: m,
        });
    }
    if n == 1 {
        return Ok(Rational::one());
    }
    if k == 1 {
        return Ok(Rational::from_integer(x.sgn().into()));
    }
    omega_enumerated(k, n, x)
}

/// The defining enumeration, without shortcuts; exposed so tests can compare
/// the shortcut cases against it.
pub fn omega_enumerated(k: usize, n: usize, x: &Permutation) -> Result<Rational, SymCharError> {
    let m = k * n;
    if x.degree() != m {
        return Err(SymCharError::DegreeMismatch {
            got: x.degree(),
            want: m,
        });
    }
    let kfact: u128 = (1..=k as u128).product();
    let total = kfact.checked_pow(n as u32).filter(|&t| t <= OMEGA_CAP);
    let Some(total) = total else {
        return Err(SymCharError::EnumerationCap(
            kfact.saturating_pow(n as u32),
            OMEGA_CAP,
        ));
    };
    let total = total as u64;

    // character row of λ = (k^n) over all cycle types of m, precomputed so
    // the hot loop only hashes a small sorted Vec
    let lambda = Partition::rectangle(k as u32, n);
    let mut row: HashMap<Vec<u32>, i64> = HashMap::new();
    for mu in partitions_of(m) {
        let v = mn_character(&lambda, &CycleType(mu.clone()))?;
        row.insert(mu.parts().to_vec(), v);
    }

    // all k! block permutations
    let blocks: Vec<Vec<u16>> = Permutation::all(k)
        .into_iter()
        .map(|p| p.images().iter().map(|&v| v as u16).collect())
        .collect();
    let kf = blocks.len() as u64;
    let ximg: Vec<u16> = x.images().iter().map(|&v| v as u16).collect();

    let chunks = (rayon::current_num_threads() * 8).max(1) as u64;
    let chunk_len = total.div_ceil(chunks);
    let sum: i128 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * chunk_len;
            let hi = ((c + 1) * chunk_len).min(total);
            let mut digits = vec![0u64; n];
            let mut rest = lo;
            for d in digits.iter_mut() {
                *d = rest % kf;
                rest /= kf;
            }
            let mut acc: i128 = 0;
            let mut xg = vec![0u16; m];
            let mut seen = vec![false; m];
            let mut parts: Vec<u32> = Vec::with_capacity(m);
            for _ in lo..hi {
                // xg(i) = x(g(i)), g = block permutations given by digits
                for b in 0..n {
                    let perm = &blocks[digits[b] as usize];
                    let base = b * k;
                    for i in 0..k {
                        xg[base + i] = ximg[base + perm[i] as usize];
                    }
                }
                // cycle type of xg
                seen.iter_mut().for_each(|s| *s = false);
                parts.clear();
                for start in 0..m {
                    if !seen[start] {
                        let mut len = 0u32;
                        let mut cur = start;
                        while !seen[cur] {
                            seen[cur] = true;
                            cur = xg[cur] as usize;
                            len += 1;
                        }
                        parts.push(len);
                    }
                }
                parts.sort_unstable_by(|a, b| b.cmp(a));
                acc += row[&parts] as i128;
                // odometer
                for d in digits.iter_mut() {
                    *d += 1;
                    if *d < kf {
                        break;
                    }
                    *d = 0;
                }
            }
            acc
        })
        .sum();

    let denom = BigInt::from(kfact).pow(n as u32);
    Ok(Rational::new(BigInt::from(sum), denom))
}

/// Full-cycle cross-check: the coefficient of (x_11 x_22 … x_nn)^{k-1} ·
/// x_12 x_23 … x_n1 in (det X)^k over a generic n×n matrix, divided by the
/// index kⁿ. Must equal ω^(kⁿ) at the full cycle.
pub fn omega_via_det_coefficient(k: usize, n: usize) -> Result<Rational, SymCharError> {
    if n > 3 || k > 3 {
        return Err(SymCharError::EnumerationCap((n * k) as u128, 9));
    }
    let det = generic_det(n);
    let powered = Ring::ring_pow(&det, k as u32);
    // exponent tuple of the target monomial
    let mut exps = vec![0u16; n * n];
    for i in 0..n {
        exps[i * n + i] = (k - 1) as u16;
        exps[i * n + (i + 1) % n] += 1;
    }
    let coeff = powered.coeff(&exps);
    Ok(coeff / Rational::from_integer(BigInt::from(k as u64).pow(n as u32)))
}

/// Determinant of the generic n×n matrix (x_ij) as a multivariate polynomial,
/// expanded by direct permutation sum.
pub fn generic_det(n: usize) -> MultiPoly {
    let table = VarTable::matrix(n);
    let mut det = MultiPoly::zero_over(&table);
    for p in Permutation::all(n) {
        let mut exps = vec![0u16; n * n];
        for j in 0..n {
            exps[p.apply(j) * n + j] = 1;
        }
        let sign = Rational::from_integer(p.sgn().into());
        det.add_term(exps, sign);
    }
    det
}

/// Alon-Tarsi number: coefficient of Π x_ij in (det X)^n; equals the
/// difference of the numbers of even and odd Latin squares of size n.
pub fn alon_tarsi(n: usize) -> Result<BigInt, SymCharError> {
    if n == 0 || n > 4 {
        return Err(SymCharError::EnumerationCap(n as u128, 4));
    }
    let det = generic_det(n);
    let powered = Ring::ring_pow(&det, n as u32);
    let exps = vec![1u16; n * n];
    let coeff = powered.coeff(&exps);
    debug_assert!(coeff.is_integer());
    Ok(coeff.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratio};

    fn full_cycle(m: usize) -> Permutation {
        Permutation::from_images((0..m).map(|i| (i + 1) % m).collect()).unwrap()
    }

    #[test]
    fn omega_full_cycle_closed_form() {
        // ω^(kⁿ)(full cycle) = (-1/k)^(n-1) for kn ≤ 10
        for (k, n) in [
            (1, 2),
            (1, 3),
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 2),
            (3, 3),
            (4, 2),
            (5, 2),
            (10, 1),
        ] {
            let expect = crate::exactalg::neg_inv_k_pow(k as u64, (n - 1) as u32);
            assert_eq!(
                omega(k, n, &full_cycle(k * n)).unwrap(),
                expect,
                "k={k} n={n}"
            );
        }
    }

    #[test]
    fn omega_reference_instances() {
        // στ⁻¹ = (1 4) in 1-based notation: images [3,1,2,0]
        let st = Permutation::from_images(vec![3, 1, 2, 0]).unwrap();
        assert_eq!(omega(2, 2, &st).unwrap(), ratio(-1, 2));
        // τ⁻¹ = (1 4)(2 3)
        let t = Permutation::from_images(vec![3, 2, 1, 0]).unwrap();
        assert_eq!(omega(2, 2, &t).unwrap(), rat(1));
        // identity: (2+0+0+2)/4
        assert_eq!(omega(2, 2, &Permutation::identity(4)).unwrap(), rat(1));
    }

    #[test]
    fn omega_young_subgroup_element_is_one() {
        // (1 2)(3 4) 1-based lies inside S_2^2, so ω = ω(e) = 1
        let g = Permutation::from_images(vec![1, 0, 3, 2]).unwrap();
        assert_eq!(omega(2, 2, &g).unwrap(), rat(1));
    }

    #[test]
    fn shortcuts_agree_with_enumeration() {
        // k = 1: ω = sgn
        for imgs in [vec![1, 2, 0], vec![1, 0, 2], vec![0, 1, 2]] {
            let p = Permutation::from_images(imgs).unwrap();
            assert_eq!(
                omega(1, 3, &p).unwrap(),
                omega_enumerated(1, 3, &p).unwrap()
            );
        }
        // n = 1: ω = 1
        for imgs in [vec![2, 0, 1, 3], vec![3, 2, 1, 0]] {
            let p = Permutation::from_images(imgs).unwrap();
            assert_eq!(
                omega(4, 1, &p).unwrap(),
                omega_enumerated(4, 1, &p).unwrap()
            );
        }
    }

    #[test]
    fn omega_bi_invariance_under_blocks() {
        // ω(h ∘ x ∘ h') = ω(x) for block elements h, h'
        let x = Permutation::from_images(vec![4, 1, 3, 0, 2, 5]).unwrap(); // k=2,n=3
        let h = Permutation::from_cycles(6, &[vec![0, 1], vec![4, 5]]).unwrap();
        let hp = Permutation::from_cycles(6, &[vec![2, 3]]).unwrap();
        let conj = h.compose(&x).compose(&hp);
        assert_eq!(omega(2, 3, &x).unwrap(), omega(2, 3, &conj).unwrap());
    }

    #[test]
    fn det_coefficient_route_matches_enumeration() {
        for (k, n) in [(1usize, 2usize), (1, 3), (2, 2), (3, 2), (2, 3)] {
            let via_det = omega_via_det_coefficient(k, n).unwrap();
            let via_sum = omega(k, n, &full_cycle(k * n)).unwrap();
            assert_eq!(via_det, via_sum, "k={k} n={n}");
        }
        assert_eq!(omega_via_det_coefficient(2, 2).unwrap(), ratio(-1, 2));
        assert_eq!(omega_via_det_coefficient(3, 2).unwrap(), ratio(-1, 3));
        assert_eq!(omega_via_det_coefficient(1, 3).unwrap(), rat(1));
    }

    #[test]
    fn alon_tarsi_small_values() {
        assert_eq!(alon_tarsi(1).unwrap(), BigInt::from(1));
        assert_eq!(alon_tarsi(2).unwrap(), BigInt::from(-2));
        assert_eq!(alon_tarsi(3).unwrap(), BigInt::from(0));
        // AT(2)/2!² must equal ω^(2²)(στ⁻¹)
        let st = Permutation::from_images(vec![3, 1, 2, 0]).unwrap();
        assert_eq!(
            Rational::new(alon_tarsi(2).unwrap(), BigInt::from(4)),
            omega(2, 2, &st).unwrap()
        );
    }

    #[test]
    fn degree_mismatch_and_caps() {
        let p = Permutation::identity(4);
        assert!(matches!(
            omega(2, 3, &p),
            Err(SymCharError::DegreeMismatch { .. })
        ));
        assert!(alon_tarsi(5).is_err());
        assert!(omega_via_det_coefficient(4, 2).is_err());
    }
}
