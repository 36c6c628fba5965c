//! Randomized algebra laws over Z. These complement the per-suite checks by
//! hammering the normalizing constructors with unconstrained small inputs.

use proptest::prelude::*;
use ringdyn::clopen::{solve_congruence, ClopenSet};
use ringdyn::frac::Frac;
use ringdyn::pmap::AffinePartialMap;
use ringdyn::RingElement;

fn z(v: i64) -> RingElement {
    RingElement::int(v)
}

fn frac() -> impl Strategy<Value = Frac> {
    (-40i64..40, 1i64..20).prop_map(|(n, d)| Frac::new(&z(n), &z(d)))
}

fn pmap() -> impl Strategy<Value = AffinePartialMap> {
    (1i64..6, -6i64..7, 1i64..6, 0i64..6, 1i64..7).prop_map(|(a, c, d, n, m)| {
        let dom = ClopenSet::from_coset(&z(n), &z(m)).expect("nonzero modulus");
        AffinePartialMap::new(&z(a), &z(c), &z(d), &dom)
    })
}

fn clopen() -> impl Strategy<Value = ClopenSet> {
    (1i64..9, proptest::collection::btree_set(0i64..9, 0..4)).prop_map(|(m, reps)| {
        ClopenSet::from_classes(&z(m), reps.into_iter().map(z)).expect("nonzero modulus")
    })
}

proptest! {
    #[test]
    fn frac_addition_commutes(x in frac(), y in frac()) {
        prop_assert_eq!(x.add(&y), y.add(&x));
    }

    #[test]
    fn frac_multiplication_distributes(x in frac(), y in frac(), w in frac()) {
        prop_assert_eq!(x.mul(&y.add(&w)), x.mul(&y).add(&x.mul(&w)));
    }

    #[test]
    fn frac_inverse_cancels(x in frac()) {
        if !x.is_zero() {
            let inv = x.inv().expect("nonzero");
            prop_assert!(x.mul(&inv).is_one());
        }
    }

    #[test]
    fn compose_is_associative(p in pmap(), q in pmap(), r in pmap()) {
        prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
    }

    #[test]
    fn adjoint_reverses_composition(p in pmap(), q in pmap()) {
        prop_assert_eq!(p.compose(&q).adjoint(), q.adjoint().compose(&p.adjoint()));
    }

    #[test]
    fn adjoint_is_an_involution(p in pmap()) {
        prop_assert_eq!(p.adjoint().adjoint(), p);
    }

    #[test]
    fn triple_product_restricts_to_itself(p in pmap()) {
        prop_assert_eq!(p.compose(&p.adjoint()).compose(&p), p);
    }

    #[test]
    fn de_morgan_holds(a in clopen(), b in clopen()) {
        let lhs = a.union(&b).complement();
        let rhs = a.complement().intersect(&b.complement());
        prop_assert!(lhs.equals(&rhs));
    }

    #[test]
    fn minus_is_intersection_with_complement(a in clopen(), b in clopen()) {
        prop_assert!(a.minus(&b).equals(&a.intersect(&b.complement())));
    }

    #[test]
    fn complement_is_an_involution(a in clopen()) {
        prop_assert!(a.complement().complement().equals(&a));
    }

    #[test]
    fn image_then_preimage_round_trips(a in clopen(), (s, c, d) in (1i64..6, -6i64..7, 1i64..6)) {
        let image = a.affine_image(&z(s), &z(c), &z(d));
        let back = image.affine_preimage(&z(s), &z(c), &z(d));
        // Where x ↦ (s·x + c)/d is defined at all, a point of the set must
        // land in the image, so it belongs to the preimage of the image.
        let defined = match solve_congruence(&z(s), &z(c).neg(), &z(d)) {
            None => ClopenSet::empty(a.ring()),
            Some((x0, step)) => ClopenSet::from_coset(&x0, &step).expect("nonzero step"),
        };
        prop_assert!(a.intersect(&defined).subset_of(&back));
        prop_assert!(image.equals(&back.affine_image(&z(s), &z(c), &z(d))));
    }
}
