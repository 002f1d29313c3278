//! Randomized invariants over small digraphs.

use apoly::algebra::rational::int;
use apoly::algebra::{BiPoly, TriPoly};
use apoly::cocycle::{omega_counts, omega_counts_by_signature, reorientation_classes, Universe};
use apoly::coflow::{a_poly, brute_coflow_histogram, coflow_histogram, Config};
use apoly::matroid::{Digraph, OrientedMatroid};
use apoly::partial::{doubled_pom, t1, t2};
use apoly::tutte::{potts, tutte};
use proptest::prelude::*;

fn digraph() -> impl Strategy<Value = OrientedMatroid> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=6)
            .prop_map(move |arcs| OrientedMatroid::from_digraph(&Digraph::new(n, arcs).unwrap()).unwrap())
    })
}

fn cfg() -> Config {
    Config::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn circuits_are_orthogonal_to_cocircuits(om in digraph()) {
        for c in om.circuits() {
            for d in om.cocircuits() {
                let inner: i64 = (0..om.len()).map(|e| c.sign(e) * d.sign(e)).sum();
                prop_assert_eq!(inner, 0);
            }
        }
    }

    #[test]
    fn duality_swaps_acyclic_and_totally_cyclic(om in digraph()) {
        let dual = om.dual();
        prop_assert!(dual.dual().same_circuits(&om));
        prop_assert_eq!(om.classify().acyclic, dual.classify().totally_cyclic);
        prop_assert_eq!(om.rank() + dual.rank(), om.len());
    }

    #[test]
    fn histograms_are_symmetric_and_complete(om in digraph(), q in (0u64..4).prop_map(|k| 2 * k + 1)) {
        let h = coflow_histogram(&om, q, &cfg()).unwrap();
        prop_assert_eq!(h.total(), q.pow(om.rank() as u32));
        for (&(g, l), &c) in &h.counts {
            prop_assert_eq!(h.get(l, g), c);
        }
        prop_assert_eq!(h, brute_coflow_histogram(&om, q, &cfg()).unwrap());
    }

    #[test]
    fn a_is_multiplicative_and_specializes_to_potts(a in digraph(), b in digraph()) {
        let (pa, pb) = (a_poly(&a, &cfg()).unwrap(), a_poly(&b, &cfg()).unwrap());
        prop_assert_eq!(a_poly(&a.direct_sum(&b), &cfg()).unwrap(), &pa * &pb);
        // z = y collapses A onto the Potts polynomial.
        let diag = pa.compose(&[BiPoly::var(0), BiPoly::var(1), BiPoly::var(1)]);
        prop_assert_eq!(diag, potts(&a, &cfg()).unwrap());
    }

    #[test]
    fn tutte_deletion_contraction(om in digraph()) {
        let t = tutte(&om, &cfg()).unwrap();
        for e in 0..om.len() {
            let bit = 1 << e;
            let rhs = if om.is_loop(e) {
                &BiPoly::var(1) * &tutte(&om.delete(bit), &cfg()).unwrap()
            } else if om.is_coloop(e) {
                &BiPoly::var(0) * &tutte(&om.contract(bit), &cfg()).unwrap()
            } else {
                tutte(&om.delete(bit), &cfg()).unwrap() + tutte(&om.contract(bit), &cfg()).unwrap()
            };
            prop_assert_eq!(&t, &rhs);
        }
    }

    #[test]
    fn cocycle_classes_are_consistent(om in digraph()) {
        let c = reorientation_classes(&om, Universe::Cocycles, &cfg()).unwrap();
        prop_assert!(c.acyclicity_constant);
        prop_assert_eq!(omega_counts(&om, &cfg()).unwrap(), omega_counts_by_signature(&om).unwrap());
        let all = reorientation_classes(&om, Universe::All, &cfg()).unwrap();
        let t = tutte(&om, &cfg()).unwrap();
        prop_assert_eq!(int(all.count() as i64), t.eval(&[int(1), int(2)]));
        prop_assert_eq!(int(all.acyclic_count() as i64), t.eval(&[int(1), int(0)]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn doubling_recovers_tutte(om in digraph().prop_filter("small", |m| m.len() <= 4)) {
        let p = doubled_pom(&om);
        let t = tutte(&om, &cfg()).unwrap();
        prop_assert_eq!(t1(&p, &cfg()).unwrap(), t.clone());
        prop_assert_eq!(t2(&p, &cfg()).unwrap(), t);
    }
}

#[test]
fn empty_matroid_has_trivial_polynomial() {
    let om = OrientedMatroid::from_digraph(&Digraph::new(1, vec![]).unwrap()).unwrap();
    assert_eq!(a_poly(&om, &cfg()).unwrap(), TriPoly::one());
}
