//! Finite groups as multiplication tables, with subgroups, transversals and
//! the orderings used by pair determinants.
//!
//! Elements are 0-based indices into the table; the identity is always index
//! 0 for the built-in constructors. Groups are immutable after construction
//! and validated (Latin square, inverses, associativity — exhaustively up to
//! order 256, sampled above that).

mod ordering;
mod spec_lang;

pub use ordering::GroupOrdering;
pub use spec_lang::{parse_group_spec, parse_subgroup_spec};

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use thiserror::Error;

use crate::symchar::Permutation;

/// Hard cap on table-group sizes; S_7 is the largest stock group.
pub const GROUP_SIZE_CAP: usize = 5040;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group size {0} exceeds cap {GROUP_SIZE_CAP}")]
    SizeCap(usize),
    #[error("multiplication table is not a Latin square (row {0})")]
    NotLatin(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("element index {0} out of range")]
    BadElement(usize),
    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("group has no {0} structure")]
    WrongStructure(&'static str),
    #[error("invalid group spec `{0}`")]
    BadSpec(String),
    #[error("ordering is not a bijection")]
    BadOrdering,
    #[error("transversal invalid: {0}")]
    BadTransversal(String),
    #[error("{0}")]
    Other(String),
}

/// Structural tag carried by the constructors that later operations dispatch
/// on (standard orderings, the abelian theorem, dihedral generator words).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Generic,
    /// Direct product of cyclic factors with these orders, first factor
    /// varying fastest in the element indexing.
    CyclicProduct(Vec<u32>),
    /// Dihedral of degree m: indices `j` = σ^j, `m+j` = τσ^j.
    Dihedral(u32),
    /// Symmetric group on n points, elements in lexicographic one-line order.
    Symmetric(u32),
    /// Alternating group on n points, lexicographic among even permutations.
    Alternating(u32),
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    size: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    identity: u16,
    labels: Vec<String>,
    structure: Structure,
    /// Permutation realization, when the group was built from permutations.
    perms: Option<Vec<Permutation>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.mul == other.mul
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validate and wrap a raw multiplication table.
    pub fn from_table(
        mul: Vec<u16>,
        labels: Vec<String>,
        structure: Structure,
        perms: Option<Vec<Permutation>>,
    ) -> Result<Arc<Self>, GroupError> {
        let size = labels.len();
        if size == 0 || size > GROUP_SIZE_CAP {
            return Err(GroupError::SizeCap(size));
        }
        assert_eq!(mul.len(), size * size, "table shape");
        // Latin square
        for r in 0..size {
            let mut seen = vec![false; size];
            for c in 0..size {
                let v = mul[r * size + c] as usize;
                if v >= size || seen[v] {
                    return Err(GroupError::NotLatin(r));
                }
                seen[v] = true;
            }
        }
        for c in 0..size {
            let mut seen = vec![false; size];
            for r in 0..size {
                let v = mul[r * size + c] as usize;
                if seen[v] {
                    return Err(GroupError::NotLatin(r));
                }
                seen[v] = true;
            }
        }
        // identity
        let mut identity = None;
        'outer: for e in 0..size {
            for x in 0..size {
                if mul[e * size + x] as usize != x || mul[x * size + e] as usize != x {
                    continue 'outer;
                }
            }
            identity = Some(e as u16);
            break;
        }
        let identity = identity.ok_or(GroupError::NoIdentity)?;
        // inverses
        let mut inv = vec![0u16; size];
        for a in 0..size {
            let mut found = None;
            for b in 0..size {
                if mul[a * size + b] == identity && mul[b * size + a] == identity {
                    found = Some(b as u16);
                    break;
                }
            }
            inv[a] = found.ok_or(GroupError::NoInverse(a))?;
        }
        // associativity: exhaustive for small groups, sampled above
        if size <= 256 {
            for a in 0..size {
                for b in 0..size {
                    let ab = mul[a * size + b] as usize;
                    for c in 0..size {
                        let bc = mul[b * size + c] as usize;
                        if mul[ab * size + c] != mul[a * size + bc] {
                            return Err(GroupError::NotAssociative(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64 ^ (size as u64);
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % size as u64) as usize
            };
            for _ in 0..1_000_000 {
                let (a, b, c) = (next(), next(), next());
                let ab = mul[a * size + b] as usize;
                let bc = mul[b * size + c] as usize;
                if mul[ab * size + c] != mul[a * size + bc] {
                    return Err(GroupError::NotAssociative(a, b, c));
                }
            }
        }
        Ok(Arc::new(FiniteGroup {
            size,
            mul,
            inv,
            identity,
            labels,
            structure,
            perms,
        }))
    }

    pub fn cyclic(m: usize) -> Result<Arc<Self>, GroupError> {
        if m == 0 {
            return Err(GroupError::Other("cyclic group order must be >= 1".into()));
        }
        let mut mul = vec![0u16; m * m];
        for a in 0..m {
            for b in 0..m {
                mul[a * m + b] = ((a + b) % m) as u16;
            }
        }
        let labels = (0..m).map(|i| i.to_string()).collect();
        Self::from_table(mul, labels, Structure::CyclicProduct(vec![m as u32]), None)
    }

    /// Direct product; the FIRST factor varies fastest in element indices, so
    /// index(x_1, …, x_l) = Σ x_s·M_s with M_s = Π_{i<s} |G_i|.
    pub fn direct_product(factors: &[Arc<FiniteGroup>]) -> Result<Arc<Self>, GroupError> {
        if factors.is_empty() {
            return Err(GroupError::Other("empty direct product".into()));
        }
        if factors.len() == 1 {
            return Ok(factors[0].clone());
        }
        let sizes: Vec<usize> = factors.iter().map(|g| g.size).collect();
        let m: usize = sizes.iter().product();
        if m > GROUP_SIZE_CAP {
            return Err(GroupError::SizeCap(m));
        }
        let split = |i: usize| -> Vec<usize> {
            let mut out = Vec::with_capacity(sizes.len());
            let mut rest = i;
            for &s in &sizes {
                out.push(rest % s);
                rest /= s;
            }
            out
        };
        let join = |parts: &[usize]| -> usize {
            let mut idx = 0;
            let mut radix = 1;
            for (p, &s) in parts.iter().zip(&sizes) {
                idx += p * radix;
                radix *= s;
            }
            idx
        };
        let mut mul = vec![0u16; m * m];
        for a in 0..m {
            let pa = split(a);
            for b in 0..m {
                let pb = split(b);
                let parts: Vec<usize> = pa
                    .iter()
                    .zip(&pb)
                    .zip(factors)
                    .map(|((&x, &y), g)| g.mul(x, y))
                    .collect();
                mul[a * m + b] = join(&parts) as u16;
            }
        }
        let labels = (0..m)
            .map(|i| {
                let parts = split(i);
                let inner: Vec<&str> = parts
                    .iter()
                    .zip(factors)
                    .map(|(&x, g)| g.label(x))
                    .collect();
                format!("({})", inner.join(","))
            })
            .collect();
        let structure = if factors
            .iter()
            .all(|g| matches!(g.structure, Structure::CyclicProduct(_)))
        {
            let mut orders = Vec::new();
            for g in factors {
                if let Structure::CyclicProduct(o) = &g.structure {
                    orders.extend_from_slice(o);
                }
            }
            Structure::CyclicProduct(orders)
        } else {
            Structure::Generic
        };
        Self::from_table(mul, labels, structure, None)
    }

    /// Dihedral group of degree m (order 2m): σ^m = τ² = e, στ = τσ⁻¹.
    pub fn dihedral(m: usize) -> Result<Arc<Self>, GroupError> {
        if m == 0 {
            return Err(GroupError::Other("dihedral degree must be >= 1".into()));
        }
        let n = 2 * m;
        if n > GROUP_SIZE_CAP {
            return Err(GroupError::SizeCap(n));
        }
        // element (b, a) = τ^b σ^a at index b*m + a
        let mut mul = vec![0u16; n * n];
        for b1 in 0..2usize {
            for a1 in 0..m {
                for b2 in 0..2usize {
                    for a2 in 0..m {
                        // (τ^b1 σ^a1)(τ^b2 σ^a2) = τ^(b1⊕b2) σ^(a2 + (-1)^b2 a1)
                        let b = b1 ^ b2;
                        let a = if b2 == 0 {
                            (a1 + a2) % m
                        } else {
                            (a2 + m - a1 % m) % m
                        };
                        mul[(b1 * m + a1) * n + (b2 * m + a2)] = (b * m + a) as u16;
                    }
                }
            }
        }
        let labels = (0..n)
            .map(|i| {
                let (b, a) = (i / m, i % m);
                match (b, a) {
                    (0, 0) => "e".to_string(),
                    (0, 1) => "s".to_string(),
                    (0, a) => format!("s{a}"),
                    (_, 0) => "t".to_string(),
                    (_, 1) => "ts".to_string(),
                    (_, a) => format!("ts{a}"),
                }
            })
            .collect();
        Self::from_table(mul, labels, Structure::Dihedral(m as u32), None)
    }

    fn perm_group(
        perms: Vec<Permutation>,
        structure: Structure,
    ) -> Result<Arc<Self>, GroupError> {
        let size = perms.len();
        if size > GROUP_SIZE_CAP {
            return Err(GroupError::SizeCap(size));
        }
        let index: HashMap<&Permutation, usize> =
            perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut mul = vec![0u16; size * size];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                let prod = pa.compose(pb);
                let idx = *index
                    .get(&prod)
                    .ok_or_else(|| GroupError::NotSubgroup("set not closed".into()))?;
                mul[a * size + b] = idx as u16;
            }
        }
        let labels = perms.iter().map(|p| p.one_line_string()).collect();
        Self::from_table(mul, labels, structure, Some(perms))
    }

    /// Symmetric group on n points; elements indexed in lexicographic
    /// one-line order, so the identity is element 0.
    pub fn symmetric(n: usize) -> Result<Arc<Self>, GroupError> {
        let perms = Permutation::all(n);
        Self::perm_group(perms, Structure::Symmetric(n as u32))
    }

    /// Alternating group on n points, lexicographic among even permutations.
    pub fn alternating(n: usize) -> Result<Arc<Self>, GroupError> {
        let perms: Vec<Permutation> = Permutation::all(n)
            .into_iter()
            .filter(|p| p.sgn() == 1)
            .collect();
        Self::perm_group(perms, Structure::Alternating(n as u32))
    }

    /// Closure of a set of permutations on `degree` points.
    pub fn from_generators(
        degree: usize,
        gens: &[Permutation],
    ) -> Result<Arc<Self>, GroupError> {
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::Other(format!(
                    "generator degree {} != {}",
                    g.degree(),
                    degree
                )));
            }
        }
        let mut seen: BTreeSet<Permutation> = BTreeSet::new();
        let id = Permutation::identity(degree);
        seen.insert(id.clone());
        let mut queue: VecDeque<Permutation> = VecDeque::new();
        queue.push_back(id);
        while let Some(p) = queue.pop_front() {
            for g in gens {
                let next = p.compose(g);
                if seen.len() > GROUP_SIZE_CAP && !seen.contains(&next) {
                    return Err(GroupError::SizeCap(seen.len() + 1));
                }
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let perms: Vec<Permutation> = seen.into_iter().collect(); // BTreeSet yields lex order
        Self::perm_group(perms, Structure::Generic)
    }

    pub fn klein() -> Result<Arc<Self>, GroupError> {
        let c2 = Self::cyclic(2)?;
        Self::direct_product(&[c2.clone(), c2])
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn perm_realization(&self) -> Option<&[Permutation]> {
        self.perms.as_deref()
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        let mut acc = self.identity();
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Least t >= 1 with a^t = e.
    pub fn element_order(&self, a: usize) -> usize {
        let mut t = 1;
        let mut x = a;
        while x != self.identity() {
            x = self.mul(x, a);
            t += 1;
        }
        t
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.size {
            for b in (a + 1)..self.size {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest subgroup containing `gens` (and always the identity).
    pub fn subgroup_closure(
        self: &Arc<Self>,
        gens: &[usize],
    ) -> Result<Subgroup, GroupError> {
        for &g in gens {
            if g >= self.size {
                return Err(GroupError::BadElement(g));
            }
        }
        let mut in_set = vec![false; self.size];
        in_set[self.identity()] = true;
        let mut queue: VecDeque<usize> = VecDeque::new();
        queue.push_back(self.identity());
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                for y in [self.mul(x, g), self.mul(x, self.inv(g))] {
                    if !in_set[y] {
                        in_set[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        let elems: Vec<usize> = (0..self.size).filter(|&i| in_set[i]).collect();
        Subgroup::from_elements(self, elems)
    }

    /// Whole group as a subgroup of itself.
    pub fn full_subgroup(self: &Arc<Self>) -> Subgroup {
        Subgroup {
            parent: self.clone(),
            elems: (0..self.size).collect(),
        }
    }

    pub fn trivial_subgroup(self: &Arc<Self>) -> Subgroup {
        Subgroup {
            parent: self.clone(),
            elems: vec![self.identity()],
        }
    }
}

/// Subgroup as a sorted element-index list, validated closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elems: Vec<usize>,
}

impl Subgroup {
    pub fn from_elements(
        parent: &Arc<FiniteGroup>,
        mut elems: Vec<usize>,
    ) -> Result<Self, GroupError> {
        elems.sort_unstable();
        elems.dedup();
        for &a in &elems {
            if a >= parent.size() {
                return Err(GroupError::BadElement(a));
            }
        }
        if !elems.contains(&parent.identity()) {
            return Err(GroupError::NotSubgroup("missing identity".into()));
        }
        let in_set: Vec<bool> = {
            let mut v = vec![false; parent.size()];
            for &a in &elems {
                v[a] = true;
            }
            v
        };
        for &a in &elems {
            if !in_set[parent.inv(a)] {
                return Err(GroupError::NotSubgroup(format!("inverse of {a} missing")));
            }
            for &b in &elems {
                if !in_set[parent.mul(a, b)] {
                    return Err(GroupError::NotSubgroup(format!("{a}*{b} escapes")));
                }
            }
        }
        if parent.size() % elems.len() != 0 {
            return Err(GroupError::NotSubgroup("Lagrange violation".into()));
        }
        Ok(Subgroup {
            parent: parent.clone(),
            elems,
        })
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn index_in_parent(&self) -> usize {
        self.parent.size() / self.elems.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elems.binary_search(&a).is_ok()
    }

    pub fn is_full(&self) -> bool {
        self.order() == self.parent.size()
    }
}

/// Complete system of left-coset representatives z_0..z_{k-1}, z_0 = e.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    parent: Arc<FiniteGroup>,
    reps: Vec<usize>,
}

impl Transversal {
    /// Default policy: scan element indices ascending, taking each element
    /// whose left coset zH is not yet covered. The identity (index of e)
    /// always leads.
    pub fn minimal(subgroup: &Subgroup) -> Self {
        let g = subgroup.parent().clone();
        let mut covered = vec![false; g.size()];
        let mut reps = Vec::with_capacity(subgroup.index_in_parent());
        // identity first so z_0 = e even if e is not index 0
        let mut order: Vec<usize> = (0..g.size()).collect();
        let e = g.identity();
        order.retain(|&x| x != e);
        order.insert(0, e);
        for z in order {
            if !covered[z] {
                reps.push(z);
                for &h in subgroup.elements() {
                    covered[g.mul(z, h)] = true;
                }
            }
        }
        Transversal { parent: g, reps }
    }

    pub fn from_reps(subgroup: &Subgroup, reps: Vec<usize>) -> Result<Self, GroupError> {
        let g = subgroup.parent().clone();
        if reps.first() != Some(&g.identity()) {
            return Err(GroupError::BadTransversal("z_0 must be the identity".into()));
        }
        let mut covered = vec![false; g.size()];
        for &z in &reps {
            for &h in subgroup.elements() {
                let x = g.mul(z, h);
                if covered[x] {
                    return Err(GroupError::BadTransversal(format!(
                        "cosets overlap at element {x}"
                    )));
                }
                covered[x] = true;
            }
        }
        if covered.iter().any(|&c| !c) {
            return Err(GroupError::BadTransversal("cosets do not cover G".into()));
        }
        Ok(Transversal { parent: g, reps })
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }
}
