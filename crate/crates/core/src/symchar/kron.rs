//! Permutations defined by Kronecker-product matrix identities.

use super::{Permutation, SymCharError};

/// The permutation c with P(c) = P(a_1) ⊗ P(a_2) ⊗ … (factors given leftmost
/// Kronecker factor first). Under P(τ) = (δ_{i,τ(j)}) the composite acts on
/// mixed-radix indices: c(j) = a(j_hi)·|b| + b(j_lo), folded over factors.
pub fn kron_permutation(factors: &[Permutation]) -> Permutation {
    let mut cur: Vec<usize> = vec![0];
    for p in factors {
        let sb = p.degree();
        let mut next = vec![0usize; cur.len() * sb];
        for (j1, &c1) in cur.iter().enumerate() {
            for j2 in 0..sb {
                next[j1 * sb + j2] = c1 * sb + p.apply(j2);
            }
        }
        cur = next;
    }
    Permutation::from_images(cur).expect("kronecker of permutations is a permutation")
}

/// The τ of P((1 2 … m_l)) ⊗ … ⊗ P((1 2 … m_1)) = P(τ); `cycle_lens` lists
/// the factor sizes leftmost Kronecker factor first, i.e. (m_l, …, m_1).
/// The defining identity is re-checked by explicit matrix construction.
pub fn tau_from_kronecker(cycle_lens: &[usize]) -> Permutation {
    let cycles: Vec<Permutation> = cycle_lens
        .iter()
        .map(|&m| Permutation::from_images((0..m).map(|i| (i + 1) % m).collect()).unwrap())
        .collect();
    let tau = kron_permutation(&cycles);
    let lhs = cycles
        .iter()
        .map(perm_matrix_01)
        .reduce(|a, b| kron01(&a, &b))
        .unwrap_or_else(|| vec![vec![1u8]]);
    assert_eq!(lhs, perm_matrix_01(&tau), "Kronecker cycle identity");
    tau
}

/// The lexicographically smallest σ with
/// (I_{n_l}⊗1_{1,k_l}) ⊗ … ⊗ (I_{n_1}⊗1_{1,k_1}) = (I_n⊗1_{1,k}) P(σ),
/// factors listed leftmost Kronecker factor first as (n_s, k_s) pairs.
/// The identity is asserted by explicit matrix construction.
pub fn sigma_from_column_collapse(factors: &[(usize, usize)]) -> Result<Permutation, SymCharError> {
    // every column of the left-hand side is a standard basis vector; fold the
    // row index of the 1 across factors
    let mut rows: Vec<usize> = vec![0];
    for &(n, k) in factors {
        let m = n * k;
        let mut next = Vec::with_capacity(rows.len() * m);
        for &r in &rows {
            for c in 0..m {
                next.push(r * n + c / k);
            }
        }
        rows = next;
    }
    let n_total: usize = factors.iter().map(|&(n, _)| n).product();
    let k_total: usize = factors.iter().map(|&(_, k)| k).product();
    let m = n_total * k_total;
    assert_eq!(rows.len(), m);
    // column j of (I_n⊗1_{1,k})P(σ) is basis vector e_{⌊σ(j)/k⌋}; choose the
    // smallest unused column in the required block, which is lex-least overall
    let mut next_free: Vec<usize> = (0..n_total).map(|r| r * k_total).collect();
    let mut sigma = vec![0usize; m];
    for (j, &r) in rows.iter().enumerate() {
        let slot = next_free[r];
        if slot >= (r + 1) * k_total {
            return Err(SymCharError::Other(
                "column collapse identity has no solution".into(),
            ));
        }
        sigma[j] = slot;
        next_free[r] += 1;
    }
    let sigma = Permutation::from_images(sigma)?;
    // assert the matrix identity exactly
    let lhs = factors
        .iter()
        .map(|&(n, k)| collapse01(n, k))
        .reduce(|a, b| kron01(&a, &b))
        .unwrap_or_else(|| vec![vec![1u8]]);
    let rhs = mat_mul01(&collapse01(n_total, k_total), &perm_matrix_01(&sigma));
    if lhs != rhs {
        return Err(SymCharError::Other(
            "column collapse identity failed verification".into(),
        ));
    }
    Ok(sigma)
}

fn perm_matrix_01(p: &Permutation) -> Vec<Vec<u8>> {
    let n = p.degree();
    let mut m = vec![vec![0u8; n]; n];
    for j in 0..n {
        m[p.apply(j)][j] = 1;
    }
    m
}

fn collapse01(n: usize, k: usize) -> Vec<Vec<u8>> {
    let mut m = vec![vec![0u8; n * k]; n];
    for (r, row) in m.iter_mut().enumerate() {
        for c in 0..k {
            row[r * k + c] = 1;
        }
    }
    m
}

fn kron01(a: &[Vec<u8>], b: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let (ra, ca) = (a.len(), a[0].len());
    let (rb, cb) = (b.len(), b[0].len());
    let mut out = vec![vec![0u8; ca * cb]; ra * rb];
    for i in 0..ra * rb {
        for j in 0..ca * cb {
            out[i][j] = a[i / rb][j / cb] * b[i % rb][j % cb];
        }
    }
    out
}

fn mat_mul01(a: &[Vec<u8>], b: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let (ra, ca) = (a.len(), a[0].len());
    let cb = b[0].len();
    let mut out = vec![vec![0u8; cb]; ra];
    for i in 0..ra {
        for l in 0..ca {
            if a[i][l] != 0 {
                for j in 0..cb {
                    out[i][j] += a[i][l] * b[l][j];
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_single_cycle_is_shift() {
        for m in 1..=6 {
            let tau = tau_from_kronecker(&[m]);
            for i in 0..m {
                assert_eq!(tau.apply(i), (i + 1) % m);
            }
        }
    }

    #[test]
    fn tau_two_by_two_reference_value() {
        // m_2 = m_1 = 2 gives τ = (1 4)(2 3) in 1-based notation
        let tau = tau_from_kronecker(&[2, 2]);
        assert_eq!(tau.images(), vec![3, 2, 1, 0]);
    }

    #[test]
    fn tau_all_ones_is_identity() {
        assert!(tau_from_kronecker(&[1, 1, 1]).is_identity());
    }

    #[test]
    fn sigma_single_factor_is_identity() {
        assert!(sigma_from_column_collapse(&[(3, 2)]).unwrap().is_identity());
        assert!(sigma_from_column_collapse(&[(1, 5)]).unwrap().is_identity());
    }

    #[test]
    fn sigma_all_k_one_is_identity() {
        assert!(sigma_from_column_collapse(&[(2, 1), (3, 1)])
            .unwrap()
            .is_identity());
    }

    #[test]
    fn sigma_z2z2_subgroup_case() {
        // G = Z2×Z2 with H = Z2×Z1, i.e. n_1=2,k_1=1 and n_2=1,k_2=2;
        // Kronecker order is (n_2,k_2),(n_1,k_1) and σ = (2 3) 1-based.
        let sigma = sigma_from_column_collapse(&[(1, 2), (2, 1)]).unwrap();
        assert_eq!(sigma.images(), vec![0, 2, 1, 3]);
    }

    #[test]
    fn kron_permutation_matches_matrix_product() {
        let a = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let b = Permutation::from_images(vec![1, 0]).unwrap();
        let c = kron_permutation(&[a.clone(), b.clone()]);
        let lhs = kron01(&perm_matrix_01(&a), &perm_matrix_01(&b));
        assert_eq!(lhs, perm_matrix_01(&c));
    }

    #[test]
    fn perm_matrix_convention_lock() {
        // P(σ)P(τ) = P(στ) with (στ)(x) = σ(τ(x))
        let s = Permutation::from_images(vec![2, 0, 1, 3]).unwrap();
        let t = Permutation::from_images(vec![1, 3, 2, 0]).unwrap();
        let lhs = mat_mul01(&perm_matrix_01(&s), &perm_matrix_01(&t));
        assert_eq!(lhs, perm_matrix_01(&s.compose(&t)));
    }
}
