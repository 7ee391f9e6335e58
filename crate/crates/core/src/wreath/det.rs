//! Exact determinants over polynomial rings.
//!
//! Two routes, cross-checked against each other on every matrix up to 8×8:
//! - [`det_berkowitz`]: division-free, works over any [`Ring`], mandatory for
//!   multivariate entries;
//! - [`det_modular_univariate`]: evaluation at integer points, determinants
//!   modulo machine-word primes, Chinese remaindering and exact Newton
//!   interpolation. This is the production path for large univariate
//!   matrices (group determinants of S_n / A_n).

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::exactalg::modular::{bigint_mod, crt_signed, inv_mod, mul_mod, primes_below_2_62, sub_mod};
use crate::exactalg::{Rational, Ring, UniPoly};

use super::{PolyMatrix, WreathError};

/// Division-free determinant (Berkowitz): O(n⁴) ring multiplications, no
/// division, valid over any commutative ring.
pub fn det_berkowitz<R: Ring>(a: &PolyMatrix<R>) -> Result<R, WreathError> {
    if !a.is_square() {
        return Err(WreathError::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(R::ring_one());
    }
    // c = coefficients of det(λI - A_r), leading coefficient first
    let mut c: Vec<R> = vec![R::ring_one()];
    for r in 1..=n {
        let diag = a.get(r - 1, r - 1);
        // q_i = row · A_{r-1}^i · col for i = 0 .. r-2
        let mut qs: Vec<R> = Vec::with_capacity(r.saturating_sub(1));
        if r > 1 {
            let mut v: Vec<R> = (0..r - 1).map(|i| a.get(i, r - 1).clone()).collect();
            for step in 0..r - 1 {
                let mut dot = R::ring_zero();
                for (j, vj) in v.iter().enumerate() {
                    dot = dot.ring_add(&a.get(r - 1, j).ring_mul(vj));
                }
                qs.push(dot);
                if step + 1 < r - 1 {
                    let mut next = vec![R::ring_zero(); r - 1];
                    for (i, ni) in next.iter_mut().enumerate() {
                        for (j, vj) in v.iter().enumerate() {
                            if !a.get(i, j).ring_is_zero() {
                                *ni = ni.ring_add(&a.get(i, j).ring_mul(vj));
                            }
                        }
                    }
                    v = next;
                }
            }
        }
        // Toeplitz application: c_new[i] = c[i] - diag*c[i-1] - Σ q_{i-j-2} c[j]
        let mut cnew: Vec<R> = Vec::with_capacity(r + 1);
        for i in 0..=r {
            let mut acc = if i < c.len() { c[i].clone() } else { R::ring_zero() };
            if i >= 1 && i - 1 < c.len() {
                acc = acc.ring_sub(&diag.ring_mul(&c[i - 1]));
            }
            for (idx, q) in qs.iter().enumerate() {
                // term -q_{i-j-2} c[j] with j = i - idx - 2
                if i >= idx + 2 {
                    let j = i - idx - 2;
                    if j < c.len() {
                        acc = acc.ring_sub(&q.ring_mul(&c[j]));
                    }
                }
            }
            cnew.push(acc);
        }
        c = cnew;
    }
    let constant = c.pop().expect("char poly has n+1 coefficients");
    Ok(if n % 2 == 0 {
        constant
    } else {
        constant.ring_neg()
    })
}

/// Exact Newton interpolation through `points` (distinct abscissae).
pub fn interpolate_newton(points: &[(Rational, Rational)], var: &str) -> UniPoly {
    let n = points.len();
    let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &points[i].0 - &points[i - level].0;
            dd[i] = num / den;
        }
    }
    let mut result = UniPoly::zero_in(var);
    let mut basis = UniPoly::monomial_in(var, Rational::one(), 0);
    for (i, coeff) in dd.iter().enumerate() {
        result = &result + &basis.scale(coeff);
        if i + 1 < n {
            let linear = &UniPoly::var(var) - &UniPoly::monomial_in(var, points[i].0.clone(), 0);
            basis = &basis * &linear;
        }
    }
    result
}

/// Determinant of an integer matrix by modular Gaussian elimination plus CRT.
fn det_integer(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    if n == 0 {
        return BigInt::one();
    }
    // Hadamard-style bound on |det| to size the prime set
    let mut bits = 2.0f64;
    for row in mat {
        let maxabs = row.iter().map(|v| v.abs()).max().unwrap_or_else(BigInt::zero);
        bits += 0.5 * (n as f64).log2() + (maxabs.bits() as f64 + 1.0);
    }
    let nprimes = ((bits + 2.0) / 61.0).ceil() as usize + 1;
    let primes = primes_below_2_62(nprimes);
    let residues: Vec<(u64, u64)> = primes
        .iter()
        .map(|&p| {
            let mut m: Vec<u64> = Vec::with_capacity(n * n);
            for row in mat {
                for v in row {
                    m.push(bigint_mod(v, p));
                }
            }
            (det_mod_p_gauss(&mut m, n, p), p)
        })
        .collect();
    crt_signed(&residues)
}

/// In-place Gaussian elimination determinant mod p.
fn det_mod_p_gauss(m: &mut [u64], n: usize, p: u64) -> u64 {
    let mut det = 1u64;
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r * n + col] % p != 0);
        let Some(pr) = pivot else {
            return 0;
        };
        if pr != col {
            for j in 0..n {
                m.swap(pr * n + j, col * n + j);
            }
            det = p - det;
            if det == p {
                det = 0;
            }
        }
        let piv = m[col * n + col] % p;
        det = mul_mod(det, piv, p);
        let piv_inv = inv_mod(piv, p);
        for r in col + 1..n {
            let factor = mul_mod(m[r * n + col] % p, piv_inv, p);
            if factor == 0 {
                continue;
            }
            for j in col..n {
                let sub = mul_mod(factor, m[col * n + j] % p, p);
                m[r * n + j] = sub_mod(m[r * n + j] % p, sub, p);
            }
        }
    }
    det
}

/// Determinant of a univariate polynomial matrix by evaluation at the
/// integer points 0..=D (D the row-degree bound), exact integer determinants
/// via modular CRT, then Newton interpolation. Exact by construction.
pub fn det_modular_univariate(a: &PolyMatrix<UniPoly>) -> Result<UniPoly, WreathError> {
    if !a.is_square() {
        return Err(WreathError::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(UniPoly::ring_one());
    }
    let var = a.common_var()?;
    let degree_bound: u32 = (0..n)
        .map(|i| {
            a.row(i)
                .iter()
                .filter_map(|e| e.degree())
                .max()
                .unwrap_or(0)
        })
        .sum();
    let points: Vec<i64> = (0..=degree_bound as i64).collect();
    let values: Vec<(Rational, Rational)> = points
        .par_iter()
        .map(|&t| {
            let tq = Rational::from_integer(t.into());
            // evaluate and clear denominators row by row
            let mut scale = BigInt::one();
            let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
            for i in 0..n {
                let vals: Vec<Rational> = a.row(i).iter().map(|e| e.eval(&tq)).collect();
                let lcm = vals
                    .iter()
                    .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                rows.push(
                    vals.iter()
                        .map(|v| v.numer() * (&lcm / v.denom()))
                        .collect(),
                );
                scale *= &lcm;
            }
            let det = det_integer(&rows);
            (tq, Rational::new(det, scale))
        })
        .collect();
    Ok(interpolate_newton(&values, &var))
}

/// Determinant dispatch for univariate matrices: division-free Berkowitz up
/// to 8×8, modular evaluation-interpolation above.
pub fn det(a: &PolyMatrix<UniPoly>) -> Result<UniPoly, WreathError> {
    if a.rows() <= 8 {
        det_berkowitz(a)
    } else {
        det_modular_univariate(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_uni, rat, ratio, MultiPoly, VarTable};

    fn qp(s: &str) -> UniPoly {
        parse_uni(s, "q").unwrap()
    }

    #[test]
    fn det_identity_and_diag() {
        let i4: PolyMatrix<UniPoly> = PolyMatrix::identity(4);
        assert_eq!(det(&i4).unwrap(), UniPoly::ring_one());
        let d = PolyMatrix::diag(vec![qp("q^2"), qp("q"), qp("1")]);
        assert_eq!(det(&d).unwrap(), qp("q^3"));
    }

    #[test]
    fn det_2x2_symmetric() {
        let m = PolyMatrix::new(2, 2, vec![qp("1"), qp("q"), qp("q"), qp("1")]).unwrap();
        assert_eq!(det(&m).unwrap(), qp("1 - q^2"));
    }

    #[test]
    fn det_of_permutation_is_sign() {
        use crate::symchar::Permutation;
        for p in Permutation::all(4) {
            let m: PolyMatrix<Rational> = PolyMatrix::perm_matrix(&p);
            assert_eq!(det_berkowitz(&m).unwrap(), rat(p.sgn()));
        }
    }

    /// Cofactor expansion as an independent oracle for Berkowitz.
    fn det_cofactor(a: &PolyMatrix<Rational>) -> Rational {
        let n = a.rows();
        if n == 0 {
            return rat(1);
        }
        if n == 1 {
            return a.get(0, 0).clone();
        }
        let mut acc = rat(0);
        for j in 0..n {
            let minor = PolyMatrix::from_fn(n - 1, n - 1, |r, c| {
                a.get(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = a.get(0, j) * &det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn berkowitz_vs_cofactor_randomized() {
        let mut state = 0x12345678u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            ((state % 11) as i64) - 5
        };
        for n in 1..=5usize {
            for _ in 0..20 {
                let m = PolyMatrix::from_fn(n, n, |_, _| ratio(next(), 1 + next().unsigned_abs() as i64));
                assert_eq!(det_berkowitz(&m).unwrap(), det_cofactor(&m));
            }
        }
    }

    #[test]
    fn modular_path_matches_berkowitz_up_to_8() {
        let mut state = 0xdeadbeefu64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in 1..=8usize {
            let m = PolyMatrix::from_fn(n, n, |_, _| {
                let e = (next() % 4) as u32;
                let c = ((next() % 7) as i64) - 3;
                UniPoly::monomial_in("q", ratio(c, 1 + (next() % 3) as i64), e)
            });
            assert_eq!(
                det_modular_univariate(&m).unwrap(),
                det_berkowitz(&m).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn berkowitz_multivariate_2x2() {
        let t = VarTable::matrix(2);
        let x = |i: usize, j: usize| MultiPoly::var(&t, 2 * i + j);
        let m = PolyMatrix::new(2, 2, vec![x(0, 0), x(0, 1), x(1, 0), x(1, 1)]).unwrap();
        let d = det_berkowitz(&m).unwrap();
        assert_eq!(d, crate::symchar::generic_det(2));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = qp("1/2 - 3*q + q^4");
        let pts: Vec<(Rational, Rational)> = (0..=4)
            .map(|t| {
                let tq = rat(t);
                (tq.clone(), p.eval(&tq))
            })
            .collect();
        assert_eq!(interpolate_newton(&pts, "q"), p);
    }
}
