//! Property-based invariants: ring axioms, parse/format round-trips, the
//! evaluation homomorphism, permutation-matrix conventions and ordering
//! bijections over randomized inputs.

use proptest::prelude::*;

use pairdet::exactalg::{parse_uni, rat, ratio, Rational, Ring, UniPoly};
use pairdet::groups::{FiniteGroup, GroupOrdering};
use pairdet::symchar::Permutation;
use pairdet::wreath::PolyMatrix;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| ratio(n, d))
}

fn arb_poly() -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec((0u32..12, arb_rational()), 0..6)
        .prop_map(|terms| UniPoly::from_terms("q", terms))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        // associativity and commutativity of both operations
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        // distributivity
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        // additive inverse, exactness
        prop_assert!((&a - &a).ring_is_zero());
    }

    #[test]
    fn parse_roundtrip(p in arb_poly()) {
        let text = p.to_string();
        prop_assert_eq!(parse_uni(&text, "q").unwrap(), p);
    }

    #[test]
    fn eval_is_homomorphism(a in arb_poly(), b in arb_poly(), x in arb_rational()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn perm_matrix_convention(s in proptest::sample::select(perms_5()), t in proptest::sample::select(perms_5())) {
        // P(σ)P(τ) = P(στ)
        let ps: PolyMatrix<Rational> = PolyMatrix::perm_matrix(&s);
        let pt = PolyMatrix::perm_matrix(&t);
        prop_assert_eq!(ps.mat_mul(&pt).unwrap(), PolyMatrix::perm_matrix(&s.compose(&t)));
        // det P(σ) = sgn σ
        prop_assert_eq!(pairdet::wreath::det_berkowitz(&ps).unwrap(), rat(s.sgn()));
    }

    #[test]
    fn standard_abelian_is_bijection(orders in proptest::collection::vec(2usize..7, 1..4)) {
        let m: usize = orders.iter().product();
        prop_assume!(m <= 64);
        let factors: Vec<_> = orders.iter().map(|&x| FiniteGroup::cyclic(x).unwrap()).collect();
        let g = FiniteGroup::direct_product(&factors).unwrap();
        let ord = GroupOrdering::standard_abelian(&g).unwrap();
        let mut seen = vec![false; m];
        for i in 0..m {
            prop_assert!(!seen[ord.at(i)]);
            seen[ord.at(i)] = true;
        }
        prop_assert_eq!(ord.at(0), g.identity());
    }
}

fn perms_5() -> Vec<Permutation> {
    Permutation::all(5)
}

#[test]
fn homogeneous_positions_carry_subgroup() {
    // seq[k·i] runs exactly over H, for several pairs
    use pairdet::groups::Transversal;
    for (m, gens) in [(6usize, vec![1usize]), (6, vec![6]), (4, vec![2])] {
        let d = FiniteGroup::dihedral(m).unwrap();
        let h = d.subgroup_closure(&gens).unwrap();
        let z = Transversal::minimal(&h);
        let ord = GroupOrdering::homogeneous(&h, &z, &h.elements().to_vec()).unwrap();
        let k = h.index_in_parent();
        let mut carried: Vec<usize> = (0..h.order()).map(|i| ord.at(k * i)).collect();
        carried.sort_unstable();
        assert_eq!(carried, h.elements());
    }
}
