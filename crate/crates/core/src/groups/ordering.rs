//! Orderings of a finite group: bijections position → element.

use std::sync::Arc;

use super::{FiniteGroup, GroupError, Structure, Subgroup, Transversal};

/// A bijection `{0..m-1} → G`, stored as `seq[i] = element at position i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupOrdering {
    parent: Arc<FiniteGroup>,
    seq: Vec<usize>,
}

impl GroupOrdering {
    pub fn new(parent: &Arc<FiniteGroup>, seq: Vec<usize>) -> Result<Self, GroupError> {
        let m = parent.size();
        if seq.len() != m {
            return Err(GroupError::BadOrdering);
        }
        let mut seen = vec![false; m];
        for &x in &seq {
            if x >= m || seen[x] {
                return Err(GroupError::BadOrdering);
            }
            seen[x] = true;
        }
        Ok(GroupOrdering {
            parent: parent.clone(),
            seq,
        })
    }

    /// Element indices in index order; coincides with every stock "standard"
    /// ordering because the constructors index elements that way.
    pub fn by_index(parent: &Arc<FiniteGroup>) -> Self {
        GroupOrdering {
            parent: parent.clone(),
            seq: (0..parent.size()).collect(),
        }
    }

    /// Mixed-radix ordering of a product of cyclic groups:
    /// position i ↦ (⌊i/M_1⌋ mod m_1, …, ⌊i/M_l⌋ mod m_l), M_j = Π_{s<j} m_s.
    pub fn standard_abelian(parent: &Arc<FiniteGroup>) -> Result<Self, GroupError> {
        let Structure::CyclicProduct(orders) = parent.structure() else {
            return Err(GroupError::WrongStructure("cyclic-product"));
        };
        let m = parent.size();
        let mut seq = Vec::with_capacity(m);
        for i in 0..m {
            let mut idx = 0usize;
            let mut radix = 1usize;
            let mut rest = i;
            for &ms in orders {
                let digit = rest % ms as usize;
                rest /= ms as usize;
                idx += digit * radix;
                radix *= ms as usize;
            }
            seq.push(idx);
        }
        Self::new(parent, seq)
    }

    /// Dihedral standard ordering e, σ, …, σ^{m-1}, τ, τσ, …, τσ^{m-1}.
    pub fn dihedral_standard(parent: &Arc<FiniteGroup>) -> Result<Self, GroupError> {
        let Structure::Dihedral(_) = parent.structure() else {
            return Err(GroupError::WrongStructure("dihedral"));
        };
        Ok(Self::by_index(parent))
    }

    /// Lexicographic ordering of a symmetric or alternating group by one-line
    /// notation.
    pub fn lex_symmetric(parent: &Arc<FiniteGroup>) -> Result<Self, GroupError> {
        match parent.structure() {
            Structure::Symmetric(_) | Structure::Alternating(_) => Ok(Self::by_index(parent)),
            _ => {
                // permutation-backed groups are already stored in lex order
                if parent.perm_realization().is_some() {
                    Ok(Self::by_index(parent))
                } else {
                    Err(GroupError::WrongStructure("permutation"))
                }
            }
        }
    }

    /// Homogeneous ordering: seq[k·i + j] = z_j · hseq[i]; the subgroup
    /// occupies the positions divisible by k.
    pub fn homogeneous(
        subgroup: &Subgroup,
        transversal: &Transversal,
        hseq: &[usize],
    ) -> Result<Self, GroupError> {
        let g = subgroup.parent().clone();
        let n = subgroup.order();
        let k = subgroup.index_in_parent();
        if transversal.reps().len() != k {
            return Err(GroupError::BadTransversal("wrong rep count".into()));
        }
        if transversal.reps().first() != Some(&g.identity()) {
            return Err(GroupError::BadTransversal("z_0 must be identity".into()));
        }
        if hseq.len() != n {
            return Err(GroupError::BadOrdering);
        }
        if hseq.first() != Some(&g.identity()) {
            return Err(GroupError::BadOrdering);
        }
        let mut hsorted: Vec<usize> = hseq.to_vec();
        hsorted.sort_unstable();
        if hsorted != subgroup.elements() {
            return Err(GroupError::BadOrdering);
        }
        let mut seq = Vec::with_capacity(n * k);
        for i in 0..n {
            for j in 0..k {
                seq.push(g.mul(transversal.reps()[j], hseq[i]));
            }
        }
        Self::new(&g, seq)
    }

    /// Product ordering per factor orderings, first factor fastest:
    /// φ(i) = (φ_1(⌊i/M_1⌋ mod m_1), …, φ_l(⌊i/M_l⌋ mod m_l)).
    pub fn product(
        parent: &Arc<FiniteGroup>,
        factor_orderings: &[GroupOrdering],
    ) -> Result<Self, GroupError> {
        let sizes: Vec<usize> = factor_orderings.iter().map(|o| o.len()).collect();
        let m: usize = sizes.iter().product();
        if m != parent.size() {
            return Err(GroupError::BadOrdering);
        }
        let mut seq = Vec::with_capacity(m);
        for i in 0..m {
            let mut idx = 0usize;
            let mut radix = 1usize;
            let mut rest = i;
            for (o, &ms) in factor_orderings.iter().zip(&sizes) {
                let digit = rest % ms;
                rest /= ms;
                idx += o.at(digit) * radix;
                radix *= ms;
            }
            seq.push(idx);
        }
        Self::new(parent, seq)
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Element at position i.
    pub fn at(&self, i: usize) -> usize {
        self.seq[i]
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    /// Position of an element.
    pub fn position_of(&self, element: usize) -> usize {
        self.seq.iter().position(|&x| x == element).unwrap()
    }

    /// Positions of every element, as a lookup table.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0usize; self.seq.len()];
        for (i, &x) in self.seq.iter().enumerate() {
            pos[x] = i;
        }
        pos
    }

    /// Subgroup elements in the order induced by this ordering.
    pub fn restrict_to(&self, subgroup: &Subgroup) -> Vec<usize> {
        let pos = self.positions();
        let mut elems: Vec<usize> = subgroup.elements().to_vec();
        elems.sort_by_key(|&h| pos[h]);
        elems
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;

    #[test]
    fn standard_abelian_z3z2z2() {
        let g = FiniteGroup::direct_product(&[
            FiniteGroup::cyclic(3).unwrap(),
            FiniteGroup::cyclic(2).unwrap(),
            FiniteGroup::cyclic(2).unwrap(),
        ])
        .unwrap();
        let ord = GroupOrdering::standard_abelian(&g).unwrap();
        // g_4 = (1,1,0), g_9 = (0,1,1), g_0 = identity
        assert_eq!(g.label(ord.at(4)), "(1,1,0)");
        assert_eq!(g.label(ord.at(9)), "(0,1,1)");
        assert_eq!(ord.at(0), g.identity());
    }

    #[test]
    fn dihedral_standard_positions() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let ord = GroupOrdering::dihedral_standard(&d3).unwrap();
        assert_eq!(d3.label(ord.at(0)), "e");
        assert_eq!(d3.label(ord.at(3)), "t");
        assert_eq!(d3.label(ord.at(5)), "ts2");
    }

    #[test]
    fn lex_symmetric_s3() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let ord = GroupOrdering::lex_symmetric(&s3).unwrap();
        assert_eq!(s3.label(ord.at(0)), "123");
        assert_eq!(s3.label(ord.at(2)), "213");
        assert_eq!(s3.label(ord.at(5)), "321");
    }

    #[test]
    fn homogeneous_d3() {
        // H = <σ>, Z = {e, τ}: ord_hom = e, τ, σ, τσ, σ², τσ²
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let h = d3.subgroup_closure(&[1]).unwrap();
        let z = Transversal::minimal(&h);
        let ord = GroupOrdering::homogeneous(&h, &z, &[0, 1, 2]).unwrap();
        assert_eq!(d3.label(ord.at(3)), "ts");
        assert_eq!(d3.label(ord.at(4)), "s2");
        // H occupies positions ≡ 0 mod k
        for i in 0..h.order() {
            assert!(h.contains(ord.at(2 * i)));
        }
        // H = G, Z = {e}: ordering equals hseq
        let full = d3.full_subgroup();
        let zt = Transversal::minimal(&full);
        let hseq: Vec<usize> = vec![0, 2, 1, 4, 3, 5];
        let o2 = GroupOrdering::homogeneous(&full, &zt, &hseq).unwrap();
        assert_eq!(o2.seq(), &hseq[..]);
    }

    #[test]
    fn restrict_orders_by_position() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let h = crate::groups::Subgroup::from_elements(&z4, vec![0, 2]).unwrap();
        let ord = GroupOrdering::standard_abelian(&z4).unwrap();
        assert_eq!(ord.restrict_to(&h), vec![0, 2]);
        let rev = GroupOrdering::new(&z4, vec![2, 3, 0, 1]).unwrap();
        assert_eq!(rev.restrict_to(&h), vec![2, 0]);
    }

    #[test]
    fn ordering_must_be_bijection() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert!(GroupOrdering::new(&z4, vec![0, 1, 2, 2]).is_err());
        assert!(GroupOrdering::new(&z4, vec![0, 1]).is_err());
    }
}
