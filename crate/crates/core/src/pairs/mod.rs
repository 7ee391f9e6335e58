//! Pair determinants Θ(G, H, φ, f): specializations, the pair matrix
//! X(G, H, φ, f) = (f(h_i g_j⁻¹)), and the direct and closed-form Θ engines.

mod abelian;
mod pairgraph;
mod separable;

pub use abelian::{
    t_factorization_identity, theta_abelian_theorem, theta_cyclic_closed, x_matrix_epsilon,
    x_matrix_kron_t,
};
pub use pairgraph::PairGraph;
pub use separable::{
    assemble_product_instance, subgroup_matrix, theta_product, theta_separable, ProductFactor,
    SeparableCert,
};

use std::sync::Arc;

use thiserror::Error;

use crate::exactalg::wreath_norm;
use crate::exactalg::{Ring, UniPoly};
use crate::groups::{FiniteGroup, GroupError, GroupOrdering, Structure, Subgroup};
use crate::symchar::{Permutation, SymCharError};
use crate::wreath::{det, wrdet, PolyMatrix, WreathError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairsError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Wreath(#[from] WreathError),
    #[error(transparent)]
    SymChar(#[from] SymCharError),
    #[error("generating set is not symmetric (element {0} lacks its inverse)")]
    NotSymmetric(usize),
    #[error("graph does not reach element {0}")]
    Disconnected(usize),
    #[error("{what}: {left} does not divide {right}")]
    Divisibility {
        what: &'static str,
        left: usize,
        right: usize,
    },
    #[error("specialization does not cover the group")]
    IncompleteSpecialization,
    #[error("not separable: {0}")]
    NotSeparable(String),
    #[error("{0}")]
    Other(String),
}

/// How the values of a specialization were produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecKind {
    Principal,
    Order,
    Cayley,
    PairGraph,
    Custom,
}

/// Assignment of a polynomial to every group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialization {
    group: Arc<FiniteGroup>,
    values: Vec<UniPoly>,
    kind: SpecKind,
}

impl Specialization {
    pub fn custom(group: &Arc<FiniteGroup>, values: Vec<UniPoly>) -> Result<Self, PairsError> {
        if values.len() != group.size() {
            return Err(PairsError::IncompleteSpecialization);
        }
        Ok(Specialization {
            group: group.clone(),
            values,
            kind: SpecKind::Custom,
        })
    }

    /// Principal specialization: f(φ(i)) = q^i.
    pub fn principal(ordering: &GroupOrdering) -> Self {
        let group = ordering.parent().clone();
        let mut values = vec![UniPoly::default(); group.size()];
        for i in 0..group.size() {
            values[ordering.at(i)] = UniPoly::q_pow(i as u32);
        }
        Specialization {
            group,
            values,
            kind: SpecKind::Principal,
        }
    }

    /// Order specialization: f(g) = q^{o(g)-1}.
    pub fn order(group: &Arc<FiniteGroup>) -> Self {
        let values = (0..group.size())
            .map(|g| UniPoly::q_pow(group.element_order(g) as u32 - 1))
            .collect();
        Specialization {
            group: group.clone(),
            values,
            kind: SpecKind::Order,
        }
    }

    /// Cayley specialization: f(g) = q^{d(g,e)} in the Cayley graph (G, S),
    /// S given as element indices. With `symmetrize`, S ∪ S⁻¹ is used;
    /// otherwise a non-symmetric S is an error, as is a non-generating S.
    pub fn cayley(
        group: &Arc<FiniteGroup>,
        s: &[usize],
        symmetrize: bool,
    ) -> Result<Self, PairsError> {
        let mut set: Vec<usize> = s.to_vec();
        set.sort_unstable();
        set.dedup();
        for &x in &set {
            if x >= group.size() {
                return Err(PairsError::Group(GroupError::BadElement(x)));
            }
        }
        if symmetrize {
            let mut extra: Vec<usize> = set.iter().map(|&x| group.inv(x)).collect();
            set.append(&mut extra);
            set.sort_unstable();
            set.dedup();
        } else if let Some(&x) = set.iter().find(|&&x| !set.contains(&group.inv(x))) {
            return Err(PairsError::NotSymmetric(x));
        }
        let dist = bfs_distances(group.size(), group.identity(), |g| {
            set.iter().map(move |&s| group.mul(g, s)).collect::<Vec<_>>()
        });
        let values = (0..group.size())
            .map(|g| {
                dist[g]
                    .map(|d| UniPoly::q_pow(d))
                    .ok_or(PairsError::Disconnected(g))
            })
            .collect::<Result<_, _>>()?;
        Ok(Specialization {
            group: group.clone(),
            values,
            kind: SpecKind::Cayley,
        })
    }

    /// Cayley specialization with generators that may lie outside G: the
    /// distance is measured in the Cayley graph of ⟨S⟩ on the ambient
    /// permutation domain and read off at the elements of G. This covers the
    /// alternating groups under the transposition metric, where every g ∈ Aₙ
    /// sits at distance ν(g) although transpositions are not in Aₙ.
    pub fn cayley_ambient(
        group: &Arc<FiniteGroup>,
        gens: &[Permutation],
    ) -> Result<Self, PairsError> {
        let elems = group
            .perm_realization()
            .ok_or_else(|| PairsError::Other("group has no permutation realization".into()))?;
        for s in gens {
            if s.degree() != elems[0].degree() {
                return Err(PairsError::Other("generator degree mismatch".into()));
            }
            if !gens.contains(&s.inverse()) {
                return Err(PairsError::NotSymmetric(0));
            }
        }
        use std::collections::{HashMap, VecDeque};
        let mut dist: HashMap<Permutation, u32> = HashMap::new();
        let id = Permutation::identity(elems[0].degree());
        dist.insert(id.clone(), 0);
        let mut queue = VecDeque::from([id]);
        let cap = crate::groups::GROUP_SIZE_CAP * 8;
        while let Some(p) = queue.pop_front() {
            let d = dist[&p];
            for s in gens {
                let next = p.compose(s);
                if !dist.contains_key(&next) {
                    if dist.len() >= cap {
                        return Err(PairsError::Other("ambient closure exceeds cap".into()));
                    }
                    dist.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        let values = elems
            .iter()
            .enumerate()
            .map(|(i, p)| {
                dist.get(p)
                    .map(|&d| UniPoly::q_pow(d))
                    .ok_or(PairsError::Disconnected(i))
            })
            .collect::<Result<_, _>>()?;
        Ok(Specialization {
            group: group.clone(),
            values,
            kind: SpecKind::Cayley,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn kind(&self) -> &SpecKind {
        &self.kind
    }

    pub fn value(&self, g: usize) -> &UniPoly {
        &self.values[g]
    }

    pub fn values(&self) -> &[UniPoly] {
        &self.values
    }

    /// Entrywise power f(g)^e, the building block of product specializations.
    pub fn pow_entrywise(&self, e: u32) -> Self {
        Specialization {
            group: self.group.clone(),
            values: self.values.iter().map(|v| Ring::ring_pow(v, e)).collect(),
            kind: SpecKind::Custom,
        }
    }
}

/// Breadth-first distances from `start`; `None` marks unreachable vertices.
pub(crate) fn bfs_distances(
    size: usize,
    start: usize,
    neighbours: impl Fn(usize) -> Vec<usize>,
) -> Vec<Option<u32>> {
    let mut dist = vec![None; size];
    dist[start] = Some(0);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for w in neighbours(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// The (G, H, φ, f) bundle Θ is computed from.
#[derive(Debug, Clone)]
pub struct PairInstance {
    subgroup: Subgroup,
    ordering: GroupOrdering,
    spec: Specialization,
}

impl PairInstance {
    pub fn new(
        subgroup: Subgroup,
        ordering: GroupOrdering,
        spec: Specialization,
    ) -> Result<Self, PairsError> {
        let g = subgroup.parent();
        if ordering.parent() != g || spec.group() != g {
            return Err(PairsError::Other(
                "subgroup, ordering and specialization must share one group".into(),
            ));
        }
        Ok(PairInstance {
            subgroup,
            ordering,
            spec,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.subgroup.parent()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn ordering(&self) -> &GroupOrdering {
        &self.ordering
    }

    pub fn spec(&self) -> &Specialization {
        &self.spec
    }

    pub fn m(&self) -> usize {
        self.group().size()
    }

    pub fn n(&self) -> usize {
        self.subgroup.order()
    }

    pub fn k(&self) -> usize {
        self.subgroup.index_in_parent()
    }

    /// Rows of X: the elements of H in the order induced by φ. Permuting
    /// the rows by ρ scales Θ by sgn(ρ)^k (left GL_n covariance), so this
    /// order is part of the value's definition.
    pub fn h_rows(&self) -> Vec<usize> {
        self.ordering.restrict_to(&self.subgroup)
    }

    /// X(G, H, φ, f) with entry (i, j) = f(h_i · g_j⁻¹).
    pub fn build_x(&self) -> PolyMatrix<UniPoly> {
        let g = self.group().clone();
        let rows = self.h_rows();
        PolyMatrix::from_fn(rows.len(), g.size(), |i, j| {
            let gj = self.ordering.at(j);
            self.spec.value(g.mul(rows[i], g.inv(gj))).clone()
        })
    }
}

/// T(m, n; x) = (x^{(ki−j) mod m}) for n | m, k = m/n; T(m; x) is the square
/// case n = m.
pub fn t_matrix(m: usize, n: usize, x: &UniPoly) -> Result<PolyMatrix<UniPoly>, PairsError> {
    if n == 0 || m % n != 0 {
        return Err(PairsError::Divisibility {
            what: "T(m,n;x)",
            left: n,
            right: m,
        });
    }
    let k = m / n;
    let mut powers: Vec<UniPoly> = Vec::with_capacity(m);
    let mut acc = UniPoly::ring_one();
    for _ in 0..m {
        powers.push(acc.clone());
        acc = &acc * x;
    }
    Ok(PolyMatrix::from_fn(n, m, |i, j| {
        powers[(k * i + m - (j % m)) % m].clone()
    }))
}

/// Θ by definition: wrdet_k X(G, H, φ, f).
pub fn theta_direct(inst: &PairInstance) -> Result<UniPoly, PairsError> {
    Ok(wrdet(inst.k(), &inst.build_x())?)
}

/// Θ(G, f) = Θ(G, G, φ, f) = det(f(g_i g_j⁻¹)), the ordinary group
/// determinant (ordering-independent).
pub fn theta_group_determinant(
    group: &Arc<FiniteGroup>,
    spec: &Specialization,
) -> Result<UniPoly, PairsError> {
    let inst = PairInstance::new(
        group.full_subgroup(),
        GroupOrdering::by_index(group),
        spec.clone(),
    )?;
    Ok(det(&inst.build_x())?)
}

/// Θ(G, {e}, φ, f) = (k!/kᵏ)·Π_g f(g), with k = |G|.
pub fn theta_trivial_subgroup(spec: &Specialization) -> UniPoly {
    let m = spec.group().size();
    let prod = spec
        .values()
        .iter()
        .fold(UniPoly::ring_one(), |acc, v| &acc * v);
    prod.scale(&wreath_norm(m as u64, 1))
}

/// Method used by [`theta_auto`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaMethod {
    Direct,
    AbelianTheorem,
    Separable,
}

impl std::fmt::Display for ThetaMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ThetaMethod::Direct => write!(f, "direct"),
            ThetaMethod::AbelianTheorem => write!(f, "theorem"),
            ThetaMethod::Separable => write!(f, "separable"),
        }
    }
}

/// Divisor-shaped data (m_s, n_s) when H = Π⟨k_s⟩ inside a cyclic product
/// with the standard ordering; the abelian closed form applies exactly there.
pub fn divisor_shape(inst: &PairInstance) -> Option<(Vec<usize>, Vec<usize>)> {
    let Structure::CyclicProduct(orders) = inst.group().structure() else {
        return None;
    };
    let orders: Vec<usize> = orders.iter().map(|&x| x as usize).collect();
    if inst.ordering().seq() != (0..inst.m()).collect::<Vec<_>>() {
        return None;
    }
    if *inst.spec().kind() != SpecKind::Principal {
        return None;
    }
    // project H onto each factor and check it is exactly the product of
    // cyclic subgroups generated by k_s
    let l = orders.len();
    let mut radix = vec![1usize; l];
    for s in 1..l {
        radix[s] = radix[s - 1] * orders[s - 1];
    }
    let digits = |g: usize| -> Vec<usize> {
        (0..l).map(|s| (g / radix[s]) % orders[s]).collect()
    };
    let mut ns = vec![1usize; l];
    for &h in inst.subgroup().elements() {
        for (s, d) in digits(h).into_iter().enumerate() {
            if d > 0 {
                let ord = orders[s] / gcd(orders[s], d);
                ns[s] = lcm(ns[s], ord);
            }
        }
    }
    if ns.iter().product::<usize>() != inst.n() {
        return None;
    }
    // verify elementwise: H must be all tuples with digit_s a multiple of k_s
    for &h in inst.subgroup().elements() {
        for (s, d) in digits(h).into_iter().enumerate() {
            let ks = orders[s] / ns[s];
            if d % ks != 0 {
                return None;
            }
        }
    }
    Some((orders, ns))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Auto selection: the abelian theorem when (cyclic product, standard
/// ordering, principal specialization, divisor-shaped H); else the separable
/// factorization when it validates; else direct enumeration.
pub fn theta_auto(inst: &PairInstance) -> Result<(UniPoly, ThetaMethod), PairsError> {
    if let Some((ms, ns)) = divisor_shape(inst) {
        return Ok((
            theta_abelian_theorem(&ms, &ns)?,
            ThetaMethod::AbelianTheorem,
        ));
    }
    if !inst.subgroup().is_full() {
        if let Ok((theta, _cert)) = theta_separable(inst, None) {
            return Ok((theta, ThetaMethod::Separable));
        }
    }
    Ok((theta_direct(inst)?, ThetaMethod::Direct))
}

/// Scalar (k!/kᵏ)ⁿ as a polynomial constant.
pub(crate) fn norm_poly(k: usize, n: usize) -> UniPoly {
    UniPoly::constant(wreath_norm(k as u64, n as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_uni, ratio};

    fn qp(s: &str) -> UniPoly {
        parse_uni(s, "q").unwrap()
    }

    fn z4_pair() -> PairInstance {
        let g = FiniteGroup::cyclic(4).unwrap();
        let h = Subgroup::from_elements(&g, vec![0, 2]).unwrap();
        let ord = GroupOrdering::standard_abelian(&g).unwrap();
        let f = Specialization::principal(&ord);
        PairInstance::new(h, ord, f).unwrap()
    }

    #[test]
    fn spec_principal_examples() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let ord = GroupOrdering::standard_abelian(&g).unwrap();
        let f = Specialization::principal(&ord);
        assert_eq!(*f.value(3), qp("q^3"));
        assert_eq!(*f.value(0), qp("1"));
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let od = GroupOrdering::dihedral_standard(&d3).unwrap();
        let fd = Specialization::principal(&od);
        assert_eq!(*fd.value(3), qp("q^3")); // f(τ) = q³
    }

    #[test]
    fn spec_order_examples() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let f = Specialization::order(&z6);
        let want = ["1", "q^5", "q^2", "q", "q^2", "q^5"];
        for (g, w) in want.iter().enumerate() {
            assert_eq!(*f.value(g), qp(w));
        }
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let f2 = Specialization::order(&z2);
        assert_eq!(*f2.value(0), qp("1"));
        assert_eq!(*f2.value(1), qp("q"));
    }

    #[test]
    fn spec_cayley_s3_transpositions() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let transpositions: Vec<usize> = (0..6)
            .filter(|&i| s3.perm_realization().unwrap()[i].nu() == 1)
            .collect();
        let f = Specialization::cayley(&s3, &transpositions, false).unwrap();
        // d(g, e) = ν(g) = 3 − #cycles
        for (i, p) in s3.perm_realization().unwrap().iter().enumerate() {
            assert_eq!(*f.value(i), UniPoly::q_pow(p.nu() as u32));
        }
        // g = 231 is a 3-cycle -> q²
        let g231 = (0..6).find(|&i| s3.label(i) == "231").unwrap();
        assert_eq!(*f.value(g231), qp("q^2"));
    }

    #[test]
    fn spec_cayley_errors() {
        let z5 = FiniteGroup::cyclic(5).unwrap();
        // {1} is not symmetric in Z5
        assert!(matches!(
            Specialization::cayley(&z5, &[1], false),
            Err(PairsError::NotSymmetric(_))
        ));
        // symmetrize flag repairs it
        assert!(Specialization::cayley(&z5, &[1], true).is_ok());
        // non-generating set
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert!(matches!(
            Specialization::cayley(&z4, &[2], false),
            Err(PairsError::Disconnected(_))
        ));
    }

    #[test]
    fn build_x_z4_matches_worked_matrix() {
        let inst = z4_pair();
        let x = inst.build_x();
        // first row: f(e), f(a³), f(a²), f(a)
        let want = ["1", "q^3", "q^2", "q"];
        for (j, w) in want.iter().enumerate() {
            assert_eq!(x.get(0, j), &qp(w));
        }
        let want2 = ["q^2", "q", "1", "q^3"];
        for (j, w) in want2.iter().enumerate() {
            assert_eq!(x.get(1, j), &qp(w));
        }
    }

    #[test]
    fn t_matrix_examples() {
        let q = UniPoly::var("q");
        let t2 = t_matrix(2, 2, &q).unwrap();
        assert_eq!(t2.get(0, 0), &qp("1"));
        assert_eq!(t2.get(0, 1), &qp("q"));
        assert_eq!(t2.get(1, 0), &qp("q"));
        assert_eq!(t2.get(1, 1), &qp("1"));
        // det T(3;x) = (1-x³)²
        let t3 = t_matrix(3, 3, &q).unwrap();
        assert_eq!(det(&t3).unwrap(), qp("(1-q^3)^2"));
        assert!(t_matrix(4, 3, &q).is_err());
    }

    #[test]
    fn det_t_lemma_up_to_8() {
        let q = UniPoly::var("q");
        for m in 1..=8usize {
            let t = t_matrix(m, m, &q).unwrap();
            let want = Ring::ring_pow(&(&UniPoly::ring_one() - &UniPoly::q_pow(m as u32)), m as u32 - 1);
            assert_eq!(det(&t).unwrap(), want, "m={m}");
        }
    }

    #[test]
    fn theta_direct_z4() {
        let inst = z4_pair();
        assert_eq!(theta_direct(&inst).unwrap(), qp("-1/8*q^2*(1-q^4)^2"));
    }

    #[test]
    fn theta_trivial_subgroup_formula() {
        // Θ(G,{e}) = (k!/k^k)·Π f(g) for random f over C6
        let g = FiniteGroup::cyclic(6).unwrap();
        let mut state = 0xfeedu64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 5) as i64 + 1
        };
        let values: Vec<UniPoly> = (0..6)
            .map(|_| qp(&format!("{} + {}*q^{}", next(), next(), next() % 4)))
            .collect();
        let f = Specialization::custom(&g, values).unwrap();
        let inst = PairInstance::new(
            g.trivial_subgroup(),
            GroupOrdering::by_index(&g),
            f.clone(),
        )
        .unwrap();
        assert_eq!(theta_direct(&inst).unwrap(), theta_trivial_subgroup(&f));
        // and with principal specialization over C2: (2!/2²)·q = 1/2 q
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let ord = GroupOrdering::standard_abelian(&c2).unwrap();
        let fp = Specialization::principal(&ord);
        assert_eq!(theta_trivial_subgroup(&fp), qp("1/2*q"));
    }

    #[test]
    fn group_determinant_ignores_ordering() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let f = Specialization::order(&d3);
        let base = theta_group_determinant(&d3, &f).unwrap();
        // theta_direct over shuffled orderings must agree (k = 1)
        let mut seq: Vec<usize> = (0..6).collect();
        let mut state = 0x1234u64;
        for _ in 0..5 {
            for i in (1..6).rev() {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                seq.swap(i, (state % (i as u64 + 1)) as usize);
            }
            let ord = GroupOrdering::new(&d3, seq.clone()).unwrap();
            let inst =
                PairInstance::new(d3.full_subgroup(), ord, f.clone()).unwrap();
            assert_eq!(theta_direct(&inst).unwrap(), base);
        }
    }

    #[test]
    fn identity_only_specialization_gives_unit_group_det() {
        let g = FiniteGroup::dihedral(4).unwrap();
        let mut values = vec![UniPoly::default(); 8];
        values[g.identity()] = UniPoly::ring_one();
        let f = Specialization::custom(&g, values).unwrap();
        assert_eq!(theta_group_determinant(&g, &f).unwrap(), UniPoly::ring_one());
    }

    #[test]
    fn divisor_shape_detection() {
        let inst = z4_pair();
        assert_eq!(divisor_shape(&inst), Some((vec![4], vec![2])));
        // diagonal subgroup of Z2×Z2 is not divisor-shaped
        let k4 = FiniteGroup::klein().unwrap();
        let diag = Subgroup::from_elements(&k4, vec![0, 3]).unwrap();
        let ord = GroupOrdering::standard_abelian(&k4).unwrap();
        let f = Specialization::principal(&ord);
        let inst2 = PairInstance::new(diag, ord, f).unwrap();
        assert_eq!(divisor_shape(&inst2), None);
    }

    #[test]
    fn theta_auto_selects_methods() {
        let (v, m) = theta_auto(&z4_pair()).unwrap();
        assert_eq!(m, ThetaMethod::AbelianTheorem);
        assert_eq!(v, qp("-1/8*q^2*(1-q^4)^2"));
        // Klein diagonal subgroup: no theorem, no separable factorization
        let k4 = FiniteGroup::klein().unwrap();
        let diag = Subgroup::from_elements(&k4, vec![0, 3]).unwrap();
        let ord = GroupOrdering::standard_abelian(&k4).unwrap();
        let f = Specialization::principal(&ord);
        let inst = PairInstance::new(diag, ord, f).unwrap();
        let (v2, m2) = theta_auto(&inst).unwrap();
        assert_eq!(v2, qp("1/8*q^2*(1-q^2)^2*(2+3*q^2+2*q^4)"));
        assert_eq!(m2, ThetaMethod::Direct);
        // dihedral reflection subgroup: separable factorization found
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let h = Subgroup::from_elements(&d3, vec![0, 3]).unwrap();
        let ord3 = GroupOrdering::dihedral_standard(&d3).unwrap();
        let f3 = Specialization::principal(&ord3);
        let inst3 = PairInstance::new(h, ord3, f3).unwrap();
        let (v3, m3) = theta_auto(&inst3).unwrap();
        assert_eq!(m3, ThetaMethod::Separable);
        assert_eq!(v3, theta_direct(&inst3).unwrap());
    }
}
