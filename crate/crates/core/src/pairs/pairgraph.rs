//! Group-subgroup pair graphs: vertices are the elements of G, with an edge
//! {h, h·s} for every h ∈ H and s ∈ S. The distance table d(h, g) feeds the
//! H×G matrix (q^{d(h,g)}) directly — the entries are graph distances, not a
//! single function of hg⁻¹.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde_json::json;

use crate::exactalg::UniPoly;
use crate::groups::{FiniteGroup, Subgroup};
use crate::wreath::{wrdet, PolyMatrix};

use super::{bfs_distances, PairsError};

#[derive(Debug, Clone)]
pub struct PairGraph {
    group: Arc<FiniteGroup>,
    h_elems: Vec<usize>,
    s_set: Vec<usize>,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    /// dist[i][g] = distance from h_i to g
    dist: Vec<Vec<u32>>,
}

impl PairGraph {
    /// Build the graph and the full H×G distance table; disconnected pairs
    /// (some g unreachable from some h) are an error.
    pub fn new(
        subgroup: &Subgroup,
        s: &[usize],
    ) -> Result<Self, PairsError> {
        let group = subgroup.parent().clone();
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &h in subgroup.elements() {
            for &s_el in s {
                if s_el >= group.size() {
                    return Err(PairsError::Group(
                        crate::groups::GroupError::BadElement(s_el),
                    ));
                }
                let other = group.mul(h, s_el);
                if other != h {
                    edges.insert((h.min(other), h.max(other)));
                }
            }
        }
        let mut adjacency = vec![Vec::new(); group.size()];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut dist = Vec::with_capacity(subgroup.order());
        for &h in subgroup.elements() {
            let d = bfs_distances(group.size(), h, |v| adjacency[v].clone());
            let row: Vec<u32> = d
                .iter()
                .enumerate()
                .map(|(g, od)| od.ok_or(PairsError::Disconnected(g)))
                .collect::<Result<_, _>>()?;
            dist.push(row);
        }
        Ok(PairGraph {
            group,
            h_elems: subgroup.elements().to_vec(),
            s_set: s.to_vec(),
            edges,
            adjacency,
            dist,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn h_elements(&self) -> &[usize] {
        &self.h_elems
    }

    pub fn connection_set(&self) -> &[usize] {
        &self.s_set
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Distance d(h, g) where h is given as a group element in H.
    pub fn distance(&self, h: usize, g: usize) -> u32 {
        let i = self
            .h_elems
            .iter()
            .position(|&x| x == h)
            .expect("h must be in H");
        self.dist[i][g]
    }

    /// The H×G matrix (q^{d(h,g)}), rows in H element order, columns in
    /// group element order.
    pub fn matrix(&self) -> PolyMatrix<UniPoly> {
        PolyMatrix::from_fn(self.h_elems.len(), self.group.size(), |i, g| {
            UniPoly::q_pow(self.dist[i][g])
        })
    }

    /// wrdet_k of the distance matrix, k = [G : H].
    pub fn theta(&self) -> Result<UniPoly, PairsError> {
        let k = self.group.size() / self.h_elems.len();
        Ok(wrdet(k, &self.matrix())?)
    }

    /// DOT rendering (undirected).
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph pairgraph {\n");
        for v in 0..self.group.size() {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", v, self.group.label(v)));
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("  n{a} -- n{b};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// JSON form: {vertices, edges, distances}.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "vertices": (0..self.group.size())
                .map(|v| self.group.label(v).to_string())
                .collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>(),
            "distances": self.dist,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Subgroup;

    fn z12_instance() -> PairGraph {
        let g = FiniteGroup::cyclic(12).unwrap();
        let h = Subgroup::from_elements(&g, vec![0, 3, 6, 9]).unwrap();
        PairGraph::new(&h, &[2, 4, 5, 7, 8]).unwrap()
    }

    #[test]
    fn z12_distances() {
        let pg = z12_instance();
        assert_eq!(pg.distance(0, 2), 1);
        assert_eq!(pg.distance(0, 3), 2);
        assert_eq!(pg.distance(0, 0), 0);
        // symmetric where both defined
        assert_eq!(pg.distance(3, 0), pg.distance(0, 3));
        assert_eq!(pg.distance(6, 9), pg.distance(9, 6));
    }

    #[test]
    fn z12_translation_invariance() {
        // d(h, g) depends only on h - g in this instance
        let pg = z12_instance();
        let g = pg.group().clone();
        for &h in &[0usize, 3, 6, 9] {
            for x in 0..12 {
                let diff = (x + 12 - h) % 12;
                assert_eq!(pg.distance(h, x), pg.distance(0, diff), "h={h} x={x}");
                let _ = g.size();
            }
        }
    }

    #[test]
    fn disconnected_is_error() {
        let g = FiniteGroup::cyclic(6).unwrap();
        let h = Subgroup::from_elements(&g, vec![0, 3]).unwrap();
        // S = {3} keeps everything inside {0,3}: vertices 1,2,4,5 unreachable
        assert!(matches!(
            PairGraph::new(&h, &[3]),
            Err(PairsError::Disconnected(_))
        ));
    }

    #[test]
    fn dot_and_json_render() {
        let pg = z12_instance();
        let dot = pg.to_dot();
        assert!(dot.starts_with("graph pairgraph {"));
        assert!(dot.contains("n0 -- n2;"));
        let js = pg.to_json();
        assert_eq!(js["vertices"].as_array().unwrap().len(), 12);
        assert!(js["edges"].as_array().unwrap().len() >= 12);
    }
}
