//! Murnaghan-Nakayama evaluation of irreducible S_m characters.
//!
//! The recursion removes border strips using the beta-set (first-column hook)
//! encoding: removing a strip of length t is subtracting t from one beta
//! number, with sign (−1)^{#occupied numbers jumped over}. Values are
//! memoized on (λ, μ); the table is shared behind an RwLock (reads dominate
//! once ω enumeration warms it).

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use std::sync::OnceLock;

use super::{CycleType, Partition, SymCharError};
use crate::exactalg::factorial;

type Key = (Vec<u32>, Vec<u32>);

fn memo() -> &'static RwLock<HashMap<Key, i64>> {
    static MEMO: OnceLock<RwLock<HashMap<Key, i64>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn beta_set(parts: &[u32]) -> Vec<u64> {
    let l = parts.len() as u64;
    let mut beta: Vec<u64> = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p as u64 + (l - 1 - i as u64))
        .collect();
    beta.sort_unstable();
    beta
}

fn partition_from_beta(beta: &[u64]) -> Vec<u32> {
    // beta sorted ascending; parts descending after subtracting the stair
    let mut parts: Vec<u32> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - i as u64) as u32)
        .collect();
    parts.retain(|&p| p > 0);
    parts.reverse();
    parts
}

fn mn_rec(lambda: &[u32], mu: &[u32]) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo().read().unwrap().get(&key) {
        return v;
    }
    let t = mu[0] as u64;
    let rest = &mu[1..];
    let beta = beta_set(lambda);
    let mut total = 0i64;
    for (pos, &b) in beta.iter().enumerate() {
        if b < t || beta.binary_search(&(b - t)).is_ok() {
            continue;
        }
        let jumped = beta[..pos].iter().filter(|&&c| c > b - t).count();
        let mut nb = beta.clone();
        nb.remove(pos);
        let ins = nb.binary_search(&(b - t)).unwrap_err();
        nb.insert(ins, b - t);
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&partition_from_beta(&nb), rest);
    }
    memo().write().unwrap().insert(key, total);
    total
}

/// Exact value χ^λ(μ) of the irreducible character of S_m at a class.
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> Result<i64, SymCharError> {
    if lambda.weight() != mu.weight() {
        return Err(SymCharError::WeightMismatch(lambda.weight(), mu.weight()));
    }
    Ok(mn_rec(lambda.parts(), mu.partition().parts()))
}

/// Dimension of the S_m irreducible λ by the hook length formula; an
/// independent route used to cross-check χ^λ(1^m).
pub fn hook_length_dimension(lambda: &Partition) -> BigInt {
    let parts = lambda.parts();
    let m = lambda.weight() as u64;
    let mut hooks = BigInt::from(1);
    let col_len = |j: u32| parts.iter().filter(|&&p| p > j).count() as u64;
    for (i, &p) in parts.iter().enumerate() {
        for j in 0..p {
            let arm = (p - 1 - j) as u64;
            let leg = col_len(j) - 1 - i as u64;
            hooks *= BigInt::from(arm + leg + 1);
        }
    }
    factorial(m) / hooks
}

/// All partitions of m, in no particular order.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p as u32);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symchar::Permutation;
    use num_traits::ToPrimitive;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn ct(parts: &[u32]) -> CycleType {
        CycleType(pt(parts))
    }

    #[test]
    fn sign_and_trivial_characters() {
        for m in 1..=6usize {
            for mu in partitions_of(m) {
                let mu = CycleType(mu);
                // trivial character
                assert_eq!(mn_character(&pt(&[m as u32]), &mu).unwrap(), 1);
                // sign character: (-1)^(m - #parts)
                let sgn = if (m - mu.partition().len()) % 2 == 0 {
                    1
                } else {
                    -1
                };
                assert_eq!(
                    mn_character(&Partition::rectangle(1, m), &mu).unwrap(),
                    sgn
                );
            }
        }
    }

    #[test]
    fn chi_22_at_22_is_2() {
        assert_eq!(mn_character(&pt(&[2, 2]), &ct(&[2, 2])).unwrap(), 2);
    }

    /// Independent oracle: build the character table of S_4 from Young
    /// permutation modules and Gram-Schmidt, then compare every value.
    #[test]
    fn s4_table_from_permutation_modules() {
        let m = 4usize;
        let perms = Permutation::all(m);
        // ordered set partitions of {0..3} with block sizes λ, counted fixed
        fn comp_count(lambda: &[u32], g: &Permutation) -> i64 {
            fn rec(remaining: &mut Vec<usize>, lambda: &[u32], g: &Permutation) -> i64 {
                if lambda.is_empty() {
                    return 1;
                }
                let size = lambda[0] as usize;
                let avail = remaining.clone();
                let mut total = 0;
                // choose a block of `size` elements from remaining, g-invariant
                fn choose(
                    avail: &[usize],
                    size: usize,
                    start: usize,
                    cur: &mut Vec<usize>,
                    out: &mut Vec<Vec<usize>>,
                ) {
                    if cur.len() == size {
                        out.push(cur.clone());
                        return;
                    }
                    for i in start..avail.len() {
                        cur.push(avail[i]);
                        choose(avail, size, i + 1, cur, out);
                        cur.pop();
                    }
                }
                let mut blocks = Vec::new();
                choose(&avail, size, 0, &mut Vec::new(), &mut blocks);
                for block in blocks {
                    let set: std::collections::BTreeSet<usize> = block.iter().copied().collect();
                    let image: std::collections::BTreeSet<usize> =
                        block.iter().map(|&x| g.apply(x)).collect();
                    if set == image {
                        let mut rest: Vec<usize> =
                            avail.iter().copied().filter(|x| !set.contains(x)).collect();
                        total += rec(&mut rest, &lambda[1..], g);
                    }
                }
                total
            }
            let mut all: Vec<usize> = (0..g.degree()).collect();
            rec(&mut all, lambda, g)
        }

        let mut lambdas = partitions_of(m);
        // lex-descending so dominance order is respected for extraction
        lambdas.sort_by(|a, b| b.parts().cmp(a.parts()));
        let classes: Vec<CycleType> = partitions_of(m).into_iter().map(CycleType).collect();
        // permutation-module characters per class
        let phi: Vec<Vec<i64>> = lambdas
            .iter()
            .map(|l| {
                classes
                    .iter()
                    .map(|c| {
                        let g = perms
                            .iter()
                            .find(|p| p.cycle_type() == *c)
                            .unwrap();
                        comp_count(l.parts(), g)
                    })
                    .collect()
            })
            .collect();
        let class_sizes: Vec<i64> = classes
            .iter()
            .map(|c| c.class_size().to_i64().unwrap())
            .collect();
        let inner = |a: &[i64], b: &[i64]| -> i64 {
            let s: i64 = a
                .iter()
                .zip(b)
                .zip(&class_sizes)
                .map(|((&x, &y), &z)| x * y * z)
                .sum();
            assert_eq!(s % 24, 0);
            s / 24
        };
        let mut irreducibles: Vec<Vec<i64>> = Vec::new();
        for row in phi {
            let mut psi = row.clone();
            for chi in &irreducibles {
                let c = inner(&psi, chi);
                for (p, &x) in psi.iter_mut().zip(chi) {
                    *p -= c * x;
                }
            }
            assert_eq!(inner(&psi, &psi), 1, "extracted character not irreducible");
            irreducibles.push(psi);
        }
        for (l, chi) in lambdas.iter().zip(&irreducibles) {
            for (c, &v) in classes.iter().zip(chi) {
                assert_eq!(mn_character(l, c).unwrap(), v, "λ={:?} μ={:?}", l, c);
            }
        }
    }

    #[test]
    fn dimension_matches_hook_formula_to_weight_8() {
        for m in 1..=8usize {
            let ones = ct(&vec![1u32; m]);
            for l in partitions_of(m) {
                let dim = mn_character(&l, &ones).unwrap();
                assert_eq!(
                    BigInt::from(dim),
                    hook_length_dimension(&l),
                    "λ={:?}",
                    l
                );
            }
        }
    }

    #[test]
    fn orthogonality_to_weight_6() {
        for m in 1..=6usize {
            let lambdas = partitions_of(m);
            let classes: Vec<CycleType> =
                partitions_of(m).into_iter().map(CycleType).collect();
            let fact = factorial(m as u64);
            for a in &lambdas {
                for b in &lambdas {
                    let mut sum = BigInt::from(0);
                    for c in &classes {
                        let x = mn_character(a, c).unwrap();
                        let y = mn_character(b, c).unwrap();
                        sum += c.class_size() * BigInt::from(x * y);
                    }
                    let expect = if a == b { fact.clone() } else { BigInt::from(0) };
                    assert_eq!(sum, expect, "λ={:?} λ'={:?}", a, b);
                }
            }
        }
    }

    #[test]
    fn weight_mismatch_is_error() {
        assert!(mn_character(&pt(&[2, 1]), &ct(&[2, 2])).is_err());
    }
}
