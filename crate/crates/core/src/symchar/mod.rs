//! Symmetric-group combinatorics: permutations, partitions, irreducible
//! characters via the Murnaghan-Nakayama rule, and the block-average ω^(kⁿ).
//!
//! Conventions, fixed once and validated by tests:
//! - composition is (σ∘τ)(x) = σ(τ(x));
//! - the permutation matrix is P(τ) = (δ_{i,τ(j)}), so P(σ)P(τ) = P(στ);
//! - ν(σ) = degree − number of cycles, sgn(σ) = (−1)^ν.

mod character;
mod kron;
mod omega;

pub use character::{hook_length_dimension, mn_character, partitions_of};
pub use kron::{kron_permutation, sigma_from_column_collapse, tau_from_kronecker};
pub use omega::{alon_tarsi, generic_det, omega, omega_enumerated, omega_via_det_coefficient, OMEGA_CAP};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymCharError {
    #[error("images are not a bijection")]
    NotBijection,
    #[error("partition weight {0} != cycle type weight {1}")]
    WeightMismatch(usize, usize),
    #[error("permutation degree {got} does not match k*n = {want}")]
    DegreeMismatch { got: usize, want: usize },
    #[error("enumeration size {0} exceeds cap {1}")]
    EnumerationCap(u128, u128),
    #[error("{0}")]
    Other(String),
}

/// A permutation of {0..m-1} in image form. Serializes as a plain JSON
/// array of 0-based images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.images.iter().map(|&x| x as usize))
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_images(images).map_err(D::Error::custom)
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, SymCharError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(SymCharError::NotBijection);
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Build from 0-based cycles; unlisted points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, SymCharError> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cyc in cycles {
            for (i, &a) in cyc.iter().enumerate() {
                let b = cyc[(i + 1) % cyc.len()];
                if a >= degree || b >= degree {
                    return Err(SymCharError::Other(format!(
                        "cycle entry out of range for degree {degree}"
                    )));
                }
                images[a] = b;
            }
        }
        Self::from_images(images)
    }

    /// All permutations of {0..n-1} in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = Permutation::identity(n);
        loop {
            out.push(cur.clone());
            if !cur.advance_lex() {
                break;
            }
        }
        out
    }

    fn advance_lex(&mut self) -> bool {
        let v = &mut self.images;
        let n = v.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// (self ∘ other)(x) = self(other(x)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if !seen[start] {
                count += 1;
                let mut x = start;
                while !seen[x] {
                    seen[x] = true;
                    x = self.images[x] as usize;
                }
            }
        }
        count
    }

    /// ν(σ) = Σ_{j≥2} (j−1)·c_j(σ) = degree − #cycles.
    pub fn nu(&self) -> usize {
        self.degree() - self.cycle_count()
    }

    pub fn sgn(&self) -> i64 {
        if self.nu() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if !seen[start] {
                let mut len = 0u32;
                let mut x = start;
                while !seen[x] {
                    seen[x] = true;
                    x = self.images[x] as usize;
                    len += 1;
                }
                parts.push(len);
            }
        }
        CycleType(Partition::new(parts))
    }

    /// One-line notation using 1-based digits (degree ≤ 9), else a
    /// comma-separated form.
    pub fn one_line_string(&self) -> String {
        if self.degree() <= 9 {
            self.images
                .iter()
                .map(|&x| char::from_digit(x as u32 + 1, 10).unwrap())
                .collect()
        } else {
            self.images()
                .iter()
                .map(|x| (x + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

/// Integer partition with weakly decreasing positive parts. Serializes as a
/// descending JSON array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.parts.iter())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Partition::new(Vec::<u32>::deserialize(deserializer)?))
    }
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The rectangle (k, k, …, k) with n rows.
    pub fn rectangle(k: u32, n: usize) -> Self {
        Partition {
            parts: vec![k; if k == 0 { 0 } else { n }],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Cycle type of a permutation, stored as a partition of the degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.weight()
    }

    /// Size of the conjugacy class in S_m with this cycle type.
    pub fn class_size(&self) -> num_bigint::BigInt {
        use crate::exactalg::factorial;
        let m = self.weight() as u64;
        let mut z = num_bigint::BigInt::from(1);
        let mut run = 1u64;
        let parts = self.0.parts();
        for (i, &p) in parts.iter().enumerate() {
            z *= num_bigint::BigInt::from(p);
            if i + 1 < parts.len() && parts[i + 1] == p {
                run += 1;
            } else {
                z *= factorial(run);
                run = 1;
            }
        }
        factorial(m) / z
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_and_sign_examples() {
        assert_eq!(Permutation::identity(4).nu(), 0);
        assert_eq!(Permutation::identity(4).sgn(), 1);
        let c3 = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(c3.nu(), 2);
        let dd = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(dd.nu(), 2);
        assert_eq!(dd.cycle_type().partition().parts(), &[2, 2]);
        assert_eq!(dd.sgn(), 1);
    }

    #[test]
    fn composition_convention() {
        // (σ∘τ)(x) = σ(τ(x))
        let s = Permutation::from_images(vec![1, 0, 2]).unwrap();
        let t = Permutation::from_images(vec![0, 2, 1]).unwrap();
        let st = s.compose(&t);
        assert_eq!(st.apply(1), s.apply(t.apply(1)));
        assert_eq!(st.images(), vec![1, 2, 0]);
    }

    #[test]
    fn inverse_roundtrip() {
        let p = Permutation::from_images(vec![3, 1, 2, 0]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn lex_enumeration() {
        let all = Permutation::all(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0].one_line_string(), "123");
        assert_eq!(all[2].one_line_string(), "213");
        assert_eq!(all[5].one_line_string(), "321");
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        use crate::exactalg::factorial;
        for m in 1..=6usize {
            let total: num_bigint::BigInt = partitions_of(m)
                .into_iter()
                .map(|p| CycleType(p).class_size())
                .sum();
            assert_eq!(total, factorial(m as u64));
        }
    }

    #[test]
    fn serde_plain_arrays() {
        let p = Permutation::from_images(vec![2, 0, 1]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,0,1]");
        let back: Permutation = serde_json::from_str("[2,0,1]").unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Permutation>("[0,0,1]").is_err());
        let l = Partition::new(vec![2, 3, 1]);
        assert_eq!(serde_json::to_string(&l).unwrap(), "[3,2,1]");
    }

    #[test]
    fn partition_normalizes() {
        let p = Partition::new(vec![2, 0, 3, 2]);
        assert_eq!(p.parts(), &[3, 2, 2]);
        assert_eq!(p.weight(), 7);
    }
}
