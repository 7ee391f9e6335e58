//! Sparse multivariate polynomials over a shared variable table.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::{is_negative, Rational};
use super::Ring;

/// Ordered list of indeterminate names, shared by all polynomials of a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
}

impl VarTable {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Arc<Self> {
        Arc::new(VarTable {
            names: names.into_iter().map(Into::into).collect(),
        })
    }

    /// Table `x{i}{j}` for an n×n generic matrix, row-major.
    pub fn matrix(n: usize) -> Arc<Self> {
        Self::new((0..n).flat_map(|i| (0..n).map(move |j| format!("x{i}{j}"))))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Sparse multivariate polynomial; exponent tuples have fixed arity equal to
/// the table size, and zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    table: Arc<VarTable>,
    terms: BTreeMap<Vec<u16>, Rational>,
}

impl MultiPoly {
    pub fn zero_over(table: &Arc<VarTable>) -> Self {
        MultiPoly {
            table: table.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_over(table: &Arc<VarTable>, c: Rational) -> Self {
        let mut p = Self::zero_over(table);
        p.add_term(vec![0; table.len()], c);
        p
    }

    pub fn var(table: &Arc<VarTable>, index: usize) -> Self {
        assert!(index < table.len(), "variable index out of range");
        let mut exps = vec![0u16; table.len()];
        exps[index] = 1;
        let mut p = Self::zero_over(table);
        p.add_term(exps, Rational::one());
        p
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    /// Coefficient of the monomial with the given exponent tuple.
    pub fn coeff(&self, exps: &[u16]) -> Rational {
        assert_eq!(exps.len(), self.table.len(), "exponent arity mismatch");
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u16>, coeff: Rational) {
        assert_eq!(exps.len(), self.table.len(), "exponent arity mismatch");
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, super::ExactAlgError> {
        if point.len() != self.table.len() {
            return Err(super::ExactAlgError::MissingAssignment {
                name: self
                    .table
                    .names()
                    .get(point.len())
                    .cloned()
                    .unwrap_or_else(|| "<arity>".into()),
            });
        }
        let mut acc = Rational::zero();
        for (exps, c) in self.terms.iter() {
            let mut t = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    fn unified_table<'a>(&'a self, other: &'a MultiPoly) -> &'a Arc<VarTable> {
        if Arc::ptr_eq(&self.table, &other.table) || self.table == other.table {
            &self.table
        } else if other.is_constant() {
            &self.table
        } else if self.is_constant() {
            &other.table
        } else {
            panic!(
                "mismatched indeterminate tables: {:?} vs {:?}",
                self.table.names(),
                other.table.names()
            );
        }
    }

    fn promoted(&self, table: &Arc<VarTable>) -> MultiPoly {
        if Arc::ptr_eq(&self.table, table) || self.table == *table {
            return self.clone();
        }
        // constant promotion into a wider table
        let mut p = MultiPoly::zero_over(table);
        for (_, c) in self.terms.iter() {
            p.add_term(vec![0; table.len()], c.clone());
        }
        p
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero_over(&self.table);
        }
        MultiPoly {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.table, &other.table) || self.table == other.table {
            self.terms == other.terms
        } else {
            // constants compare across tables
            match (self.as_constant(), other.as_constant()) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            }
        }
    }
}

impl Eq for MultiPoly {}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let table = self.unified_table(rhs).clone();
        let mut out = self.promoted(&table);
        for (e, c) in rhs.promoted(&table).terms {
            out.add_term(e, c);
        }
        out
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let table = self.unified_table(rhs).clone();
        let a = self.promoted(&table);
        let b = rhs.promoted(&table);
        let mut out = MultiPoly::zero_over(&table);
        for (e1, c1) in a.terms.iter() {
            for (e2, c2) in b.terms.iter() {
                let exps: Vec<u16> = e1.iter().zip(e2).map(|(&x, &y)| x + y).collect();
                out.add_term(exps, c1 * c2);
            }
        }
        out
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Ring for MultiPoly {
    fn ring_zero() -> Self {
        Self::zero_over(&VarTable::new(Vec::<String>::new()))
    }
    fn ring_one() -> Self {
        Self::constant_over(&VarTable::new(Vec::<String>::new()), Rational::one())
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
        Self::constant_over(&VarTable::new(Vec::<String>::new()), r.clone())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.terms.iter().enumerate() {
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
            let monomial: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        self.table.names()[v].clone()
                    } else {
                        format!("{}^{}", self.table.names()[v], e)
                    }
                })
                .collect();
            if monomial.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    #[test]
    fn det_2x2_squared_coefficient() {
        // (x00*x11 - x01*x10)^2: coefficient of x00*x01*x10*x11 is -2
        let t = VarTable::matrix(2);
        let x = |i: usize, j: usize| MultiPoly::var(&t, 2 * i + j);
        let det = &(&x(0, 0) * &x(1, 1)) - &(&x(0, 1) * &x(1, 0));
        let sq = det.ring_pow(2);
        assert_eq!(sq.coeff(&[1, 1, 1, 1]), rat(-2));
        assert_eq!(sq.coeff(&[2, 0, 0, 2]), rat(1));
    }

    #[test]
    fn constants_promote() {
        let t = VarTable::new(["a", "b"]);
        let c = MultiPoly::ring_from_rational(&rat(3));
        let a = MultiPoly::var(&t, 0);
        let s = &c + &a;
        assert_eq!(s.table().len(), 2);
        assert_eq!(s.coeff(&[0, 0]), rat(3));
        assert_eq!(s.coeff(&[1, 0]), rat(1));
    }

    #[test]
    #[should_panic(expected = "mismatched indeterminate tables")]
    fn table_mismatch_panics() {
        let t1 = VarTable::new(["a"]);
        let t2 = VarTable::new(["b"]);
        let _ = &MultiPoly::var(&t1, 0) + &MultiPoly::var(&t2, 0);
    }

    #[test]
    fn eval_homomorphism() {
        let t = VarTable::new(["a", "b"]);
        let a = MultiPoly::var(&t, 0);
        let b = MultiPoly::var(&t, 1);
        let p = &(&a + &b) * &a;
        let point = [rat(2), rat(-5)];
        let pa = a.eval(&point).unwrap() + b.eval(&point).unwrap();
        assert_eq!(p.eval(&point).unwrap(), pa * rat(2));
    }
}
