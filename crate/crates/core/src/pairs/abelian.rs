//! Closed forms for finite abelian pairs under the standard ordering and
//! principal specialization, plus the structural matrix identities behind
//! them (exponent formula, Kronecker-of-T factorization, T-factorization).

use num_traits::One;

use crate::exactalg::{Rational, Ring, UniPoly};
use crate::symchar::{omega, sigma_from_column_collapse, tau_from_kronecker, Permutation};
use crate::wreath::PolyMatrix;

use super::{norm_poly, t_matrix, PairsError};

fn check_divisor_shape(ms: &[usize], ns: &[usize]) -> Result<Vec<usize>, PairsError> {
    if ms.len() != ns.len() || ms.is_empty() {
        return Err(PairsError::Other(
            "factor lists must be non-empty and equal length".into(),
        ));
    }
    ms.iter()
        .zip(ns)
        .map(|(&m, &n)| {
            if n == 0 || m % n != 0 {
                Err(PairsError::Divisibility {
                    what: "abelian pair",
                    left: n,
                    right: m,
                })
            } else {
                Ok(m / n)
            }
        })
        .collect()
}

/// Radix weights M_s = Π_{i<s} m_s.
fn radix_weights(ms: &[usize]) -> Vec<usize> {
    let mut w = vec![1usize; ms.len()];
    for s in 1..ms.len() {
        w[s] = w[s - 1] * ms[s - 1];
    }
    w
}

/// X(G, H, ord_st, spec_pr) via the exponent formula
/// ε_l(i,j) = Σ_s M_s·((k_s⌊i/N_s⌋ − ⌊j/M_s⌋) mod m_s).
pub fn x_matrix_epsilon(ms: &[usize], ns: &[usize]) -> Result<PolyMatrix<UniPoly>, PairsError> {
    let ks = check_divisor_shape(ms, ns)?;
    let mw = radix_weights(ms);
    let nw = radix_weights(ns);
    let m: usize = ms.iter().product();
    let n: usize = ns.iter().product();
    Ok(PolyMatrix::from_fn(n, m, |i, j| {
        let mut e = 0usize;
        for s in 0..ms.len() {
            let a = (ks[s] * (i / nw[s])) % ms[s];
            let b = (j / mw[s]) % ms[s];
            e += mw[s] * ((a + ms[s] - b) % ms[s]);
        }
        UniPoly::q_pow(e as u32)
    }))
}

/// X(G, H, ord_st, spec_pr) as the Kronecker product
/// T(m_l, n_l; q^{M_l}) ⊗ … ⊗ T(m_1, n_1; q^{M_1}).
pub fn x_matrix_kron_t(ms: &[usize], ns: &[usize]) -> Result<PolyMatrix<UniPoly>, PairsError> {
    check_divisor_shape(ms, ns)?;
    let mw = radix_weights(ms);
    let mut acc: Option<PolyMatrix<UniPoly>> = None;
    for s in (0..ms.len()).rev() {
        let t = t_matrix(ms[s], ns[s], &UniPoly::q_pow(mw[s] as u32))?;
        acc = Some(match acc {
            None => t,
            Some(a) => a.kronecker(&t),
        });
    }
    Ok(acc.unwrap())
}

/// The T-factorization identity
/// T(m,n;x) = P(σ)·(T(n;xᵏ)⊗1_{1,k})·(I_n⊗diag(x^{k−1},…,x,1))·P(τ)⁻¹
/// with σ and τ the full cycles on n and m points, asserted exactly.
pub fn t_factorization_identity(m: usize, n: usize, x: &UniPoly) -> Result<bool, PairsError> {
    if n == 0 || m % n != 0 {
        return Err(PairsError::Divisibility {
            what: "T factorization",
            left: n,
            right: m,
        });
    }
    let k = m / n;
    let lhs = t_matrix(m, n, x)?;
    let sigma = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap();
    let tau = Permutation::from_images((0..m).map(|i| (i + 1) % m).collect()).unwrap();
    let t_small = t_matrix(n, n, &Ring::ring_pow(x, k as u32))?;
    let mut diag_entries = Vec::with_capacity(k);
    for e in (0..k as u32).rev() {
        diag_entries.push(Ring::ring_pow(x, e));
    }
    let diag_block = PolyMatrix::<UniPoly>::identity(n).kronecker(&PolyMatrix::diag(diag_entries));
    let rhs = PolyMatrix::<UniPoly>::perm_matrix(&sigma)
        .mat_mul(&t_small.kronecker(&PolyMatrix::all_ones(1, k)))?
        .mat_mul(&diag_block)?
        .mat_mul(&PolyMatrix::perm_matrix(&tau.inverse()))?;
    Ok(lhs == rhs)
}

/// Θ(Z_m, Z_n, ord_st, spec_pr) closed form
/// (−1/k)^{n−1}·(k!/kᵏ)ⁿ·q^{m(k−1)/2}·(q^m−1)^{k(n−1)}.
pub fn theta_cyclic_closed(m: usize, n: usize) -> Result<UniPoly, PairsError> {
    let ks = check_divisor_shape(&[m], &[n])?;
    let k = ks[0];
    let sign = crate::exactalg::neg_inv_k_pow(k as u64, (n - 1) as u32);
    debug_assert_eq!(m * (k - 1) % 2, 0);
    let qm1 = &UniPoly::q_pow(m as u32) - &UniPoly::ring_one();
    let poly = Ring::ring_pow(&qm1, (k * (n - 1)) as u32);
    Ok(poly
        .mul_monomial(&Rational::one(), (m * (k - 1) / 2) as u32)
        .scale(&sign)
        .ring_mul(&norm_poly(k, n)))
}

/// General finite-abelian closed form: for G = Z_{m_1}×…×Z_{m_l} and
/// H = Π⟨k_s⟩,
/// Θ = ω^(kⁿ)(στ⁻¹)·(k!/kᵏ)ⁿ·Π_s q^{mM_s(k_s−1)/2}·Π_s (q^{M_s m_s}−1)^{m(1−1/n_s)},
/// with σ from the column-collapse identity and τ from the Kronecker product
/// of full cycles (factors taken s = l down to 1).
pub fn theta_abelian_theorem(ms: &[usize], ns: &[usize]) -> Result<UniPoly, PairsError> {
    let ks = check_divisor_shape(ms, ns)?;
    let l = ms.len();
    let m: usize = ms.iter().product();
    let n: usize = ns.iter().product();
    let k: usize = ks.iter().product();
    let mw = radix_weights(ms);

    let sigma_factors: Vec<(usize, usize)> =
        (0..l).rev().map(|s| (ns[s], ks[s])).collect();
    let sigma = sigma_from_column_collapse(&sigma_factors)?;
    let tau_lens: Vec<usize> = (0..l).rev().map(|s| ms[s]).collect();
    let tau = tau_from_kronecker(&tau_lens);
    let st = sigma.compose(&tau.inverse());
    let om = omega(k, n, &st)?;

    let mut value = norm_poly(k, n).scale(&om);
    for s in 0..l {
        // the exponent mM_s(k_s−1)/2 is integral: if k_s−1 is odd then m is even
        let twice = m * mw[s] * (ks[s] - 1);
        debug_assert_eq!(twice % 2, 0);
        value = value.mul_monomial(&Rational::one(), (twice / 2) as u32);
        let base = &UniPoly::q_pow((mw[s] * ms[s]) as u32) - &UniPoly::ring_one();
        debug_assert_eq!(m % ns[s], 0);
        value = value.ring_mul(&Ring::ring_pow(&base, (m - m / ns[s]) as u32));
    }
    Ok(value)
}
