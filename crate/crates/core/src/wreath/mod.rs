//! Matrices over exact rings: Kronecker products, determinants,
//! α-determinants and wreath determinants.

mod adet;
mod det;
mod wrdet;

pub use adet::{adet, adet_mod_p, ADET_CAP};
pub use det::{det, det_berkowitz, det_modular_univariate, interpolate_newton};
pub use wrdet::{
    wrdet, wrdet_eval_oracle, wrdet_monomial, wrdet_oracle, wrdet_structured, MONOMIAL_CAP,
    ORACLE_CAP,
};

use thiserror::Error;

use crate::exactalg::{Rational, Ring, UniPoly};
use crate::symchar::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WreathError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("size {got} exceeds cap {cap} for {what}")]
    CapExceeded {
        what: &'static str,
        got: usize,
        cap: usize,
    },
    #[error("matrix entries use incompatible variables")]
    IncompatibleEntries,
    #[error("{0}")]
    Other(String),
}

/// Dense rectangular matrix over a ring, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> PolyMatrix<R> {
    pub fn new(rows: usize, cols: usize, data: Vec<R>) -> Result<Self, WreathError> {
        if data.len() != rows * cols {
            return Err(WreathError::ShapeMismatch(format!(
                "{} entries for {rows}x{cols}",
                data.len()
            )));
        }
        Ok(PolyMatrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| R::ring_zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::ring_one() } else { R::ring_zero() })
    }

    /// All-ones matrix 1_{r,c}.
    pub fn all_ones(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| R::ring_one())
    }

    pub fn diag(entries: Vec<R>) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    /// Permutation matrix P(p) = (δ_{i,p(j)}): column j carries a one in row
    /// p(j), so P(σ)P(τ) = P(σ∘τ).
    pub fn perm_matrix(p: &Permutation) -> Self {
        let n = p.degree();
        Self::from_fn(n, n, |i, j| {
            if i == p.apply(j) {
                R::ring_one()
            } else {
                R::ring_zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> PolyMatrix<S> {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self, WreathError> {
        if self.cols != other.rows {
            return Err(WreathError::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.ring_is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if b.ring_is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).ring_add(&a.ring_mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product with entries
    /// (A⊗B)(i,j) = a(⌊i/p⌋, ⌊j/s⌋) · b(i mod p, j mod s) for B of shape p×s.
    pub fn kronecker(&self, other: &Self) -> Self {
        let (p, s) = (other.rows, other.cols);
        Self::from_fn(self.rows * p, self.cols * s, |i, j| {
            self.get(i / p, j / s).ring_mul(other.get(i % p, j % s))
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.ring_mul(c)).collect(),
        }
    }
}

impl PolyMatrix<UniPoly> {
    /// All entries monomials with coefficient one (the wreath fast-path
    /// precondition): returns their exponent table, row-major.
    pub fn monomial_exponents(&self) -> Option<Vec<u32>> {
        use num_traits::One;
        let mut exps = Vec::with_capacity(self.data.len());
        for e in &self.data {
            let (c, exp) = e.as_monomial()?;
            if !c.is_one() {
                return None;
            }
            exps.push(exp);
        }
        Some(exps)
    }

    /// Variable shared by the non-constant entries, if consistent.
    pub fn common_var(&self) -> Result<String, WreathError> {
        let mut var: Option<&str> = None;
        for e in &self.data {
            if !e.is_constant() {
                match var {
                    None => var = Some(e.var_name()),
                    Some(v) if v == e.var_name() => {}
                    Some(_) => return Err(WreathError::IncompatibleEntries),
                }
            }
        }
        Ok(var.unwrap_or(crate::exactalg::DEFAULT_VAR).to_string())
    }

    /// Evaluate every entry at a rational point.
    pub fn eval(&self, point: &Rational) -> PolyMatrix<Rational> {
        self.map(|e| e.eval(point))
    }

    /// JSON form: nested arrays of canonical polynomial strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| {
                    serde_json::Value::Array(
                        self.row(i)
                            .iter()
                            .map(|e| serde_json::Value::String(e.to_string()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratio};

    fn rmat(rows: usize, cols: usize, vals: &[i64]) -> PolyMatrix<Rational> {
        PolyMatrix::new(rows, cols, vals.iter().map(|&v| rat(v)).collect()).unwrap()
    }

    #[test]
    fn kronecker_examples() {
        // A ⊗ (1) = A
        let a = rmat(2, 2, &[1, 2, 3, 4]);
        let one = PolyMatrix::identity(1);
        assert_eq!(a.kronecker(&one), a);
        // I_2 ⊗ 1_{1,2} = [[1,1,0,0],[0,0,1,1]]
        let collapse = PolyMatrix::<Rational>::identity(2).kronecker(&PolyMatrix::all_ones(1, 2));
        assert_eq!(collapse, rmat(2, 4, &[1, 1, 0, 0, 0, 0, 1, 1]));
    }

    #[test]
    fn kronecker_mixed_product() {
        // (A⊗B)(C⊗D) = AC ⊗ BD on rational matrices
        let a = rmat(2, 2, &[1, 2, 0, -1]);
        let b = rmat(2, 2, &[3, 1, 1, 2]);
        let c = rmat(2, 2, &[2, 0, 5, 1]);
        let d = rmat(2, 2, &[1, -1, 0, 4]);
        let lhs = a.kronecker(&b).mat_mul(&c.kronecker(&d)).unwrap();
        let rhs = a.mat_mul(&c).unwrap().kronecker(&b.mat_mul(&d).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn perm_matrix_composes() {
        let s = Permutation::from_images(vec![2, 0, 1]).unwrap();
        let t = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let ps: PolyMatrix<Rational> = PolyMatrix::perm_matrix(&s);
        let pt = PolyMatrix::perm_matrix(&t);
        assert_eq!(
            ps.mat_mul(&pt).unwrap(),
            PolyMatrix::perm_matrix(&s.compose(&t))
        );
    }

    #[test]
    fn matrix_json_is_nested_canonical_strings() {
        let m = PolyMatrix::new(
            1,
            2,
            vec![
                crate::exactalg::parse_uni("-1/8*q^2 + 1/4*q^6", "q").unwrap(),
                UniPoly::ring_one(),
            ],
        )
        .unwrap();
        assert_eq!(
            m.to_json(),
            serde_json::json!([["-1/8*q^2 + 1/4*q^6", "1"]])
        );
    }

    #[test]
    fn monomial_exponent_detection() {
        let q2 = UniPoly::q_pow(2);
        let m = PolyMatrix::new(1, 2, vec![q2, UniPoly::ring_one()]).unwrap();
        assert_eq!(m.monomial_exponents(), Some(vec![2, 0]));
        let bad = PolyMatrix::new(1, 1, vec![UniPoly::q_pow(1).scale(&ratio(1, 2))]).unwrap();
        assert_eq!(bad.monomial_exponents(), None);
    }
}
