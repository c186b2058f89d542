use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use ydlab::exactmat::{compose, flip, kron, ExactScalar, LinMap};
use ydlab::groupsys::{
    conjugate_grading, pair_inverse, pair_product, pair_unit, project_pi, transitive_product, FiniteGroup, FusionMap,
    GradedPair,
};

fn scalar() -> impl Strategy<Value = ExactScalar> {
    prop_oneof![
        (-40i64..40, 1i64..12).prop_map(|(p, q)| ExactScalar::ratio(p, q)),
        // Near the i64 edge, to exercise promotion.
        (any::<i64>(), 1i64..4).prop_map(|(p, q)| ExactScalar::ratio(p, q)),
    ]
}

fn matrix(cod: usize, dom: usize) -> impl Strategy<Value = LinMap> {
    proptest::collection::vec((-3i64..4, 1i64..3), cod * dom).prop_map(move |v| {
        LinMap::new(cod, dom, v.into_iter().map(|(p, q)| ExactScalar::ratio(p, q)).collect()).unwrap()
    })
}

fn dims() -> impl Strategy<Value = usize> {
    1usize..=4
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn scalars_stay_canonical(a in scalar(), b in scalar()) {
        for s in [a.add_ref(&b), a.mul_ref(&b), a.sub_ref(&b)] {
            let (n, d) = (s.numer(), s.denom());
            prop_assert!(d.is_positive());
            prop_assert!(n.gcd(&d).is_one() || n.is_zero() && d.is_one());
        }
    }

    #[test]
    fn scalars_agree_with_bigrational(a in scalar(), b in scalar()) {
        let (x, y) = (a.to_big(), b.to_big());
        prop_assert_eq!(a.add_ref(&b).to_big(), &x + &y);
        prop_assert_eq!(a.mul_ref(&b).to_big(), &x * &y);
        if !b.is_zero() {
            prop_assert_eq!(a.div_ref(&b).to_big(), &x / &y);
        }
        prop_assert_eq!(ExactScalar::from_big(x.clone()), a.clone());
        prop_assert_eq!(a.is_zero(), x.is_zero());
        prop_assert_eq!(a.to_string().parse::<ExactScalar>().unwrap(), a);
    }

    #[test]
    fn compose_is_associative(
        (f, g, h) in (dims(), dims(), dims(), dims())
            .prop_flat_map(|(a, b, c, d)| (matrix(a, b), matrix(b, c), matrix(c, d)))
    ) {
        let left = compose(&compose(&f, &g).unwrap(), &h).unwrap();
        let right = compose(&f, &compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identities_are_neutral(f in (dims(), dims()).prop_flat_map(|(a, b)| matrix(a, b))) {
        let (c, d) = f.shape();
        prop_assert_eq!(compose(&LinMap::identity(c), &f).unwrap(), f.clone());
        prop_assert_eq!(compose(&f, &LinMap::identity(d)).unwrap(), f);
    }

    #[test]
    fn kron_interchange(
        (a, b, c, d) in (1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3)
            .prop_flat_map(|(m, n, p, r, s, t)| (matrix(m, n), matrix(r, s), matrix(n, p), matrix(s, t)))
    ) {
        let lhs = compose(&kron(&a, &b), &kron(&c, &d)).unwrap();
        let rhs = kron(&compose(&a, &c).unwrap(), &compose(&b, &d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn flip_is_natural(
        (f, g) in (1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3)
            .prop_flat_map(|(m, m2, n, n2)| (matrix(m2, m), matrix(n2, n)))
    ) {
        let ((m2, m), (n2, n)) = (f.shape(), g.shape());
        let lhs = compose(&flip(m2, n2), &kron(&f, &g)).unwrap();
        let rhs = compose(&kron(&g, &f), &flip(m, n)).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(compose(&flip(n, m), &flip(m, n)).unwrap(), LinMap::identity(m * n));
    }

    #[test]
    fn inverse_really_inverts(f in matrix(3, 3)) {
        if let Ok(inv) = f.inverse() {
            prop_assert_eq!(compose(&f, &inv).unwrap(), LinMap::identity(3));
            prop_assert_eq!(compose(&inv, &f).unwrap(), LinMap::identity(3));
        }
    }

    #[test]
    fn literals_round_trip(f in (dims(), dims()).prop_flat_map(|(a, b)| matrix(a, b))) {
        prop_assert_eq!(LinMap::from_literal(&f.to_literal()).unwrap(), f);
    }
}

fn groups() -> Vec<Arc<FiniteGroup>> {
    vec![Arc::new(FiniteGroup::cyclic(6)), Arc::new(FiniteGroup::symmetric3()), Arc::new(FiniteGroup::dihedral4())]
}

/// A group, a fusion j (identity or inner by some element) and three pairs in `G × G`.
fn pair_setup() -> impl Strategy<Value = (FusionMap, [GradedPair; 3])> {
    (0usize..3, any::<prop::sample::Index>(), any::<bool>(), any::<[(prop::sample::Index, prop::sample::Index); 3]>())
        .prop_map(|(gi, c, inner, ps)| {
            let g = groups()[gi].clone();
            let n = g.order();
            let j = if inner { FusionMap::inner(g.clone(), c.index(n)).unwrap() } else { FusionMap::identity(g) };
            let p = ps.map(|(a, b)| GradedPair::new(a.index(n), b.index(n)));
            (j, p)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn pair_products_form_a_group((j, [x, y, z]) in pair_setup()) {
        let e = pair_unit(&j);
        prop_assert_eq!(pair_product(e, x, &j).unwrap(), x);
        prop_assert_eq!(pair_product(x, e, &j).unwrap(), x);
        let xi = pair_inverse(x, &j).unwrap();
        prop_assert_eq!(pair_product(x, xi, &j).unwrap(), e);
        prop_assert_eq!(pair_product(xi, x, &j).unwrap(), e);
        let l = pair_product(pair_product(x, y, &j).unwrap(), z, &j).unwrap();
        let r = pair_product(x, pair_product(y, z, &j).unwrap(), &j).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn conjugation_matches_products((j, [a, p, _]) in pair_setup()) {
        let ai = pair_inverse(a, &j).unwrap();
        let oracle = pair_product(pair_product(a, p, &j).unwrap(), ai, &j).unwrap();
        prop_assert_eq!(conjugate_grading(a, p, &j).unwrap(), oracle);
    }

    #[test]
    fn transitive_product_is_associative((j1, [x, y, z]) in pair_setup(), c2 in any::<prop::sample::Index>(), c3 in any::<prop::sample::Index>()) {
        // Three fusions on one group: j (a→b), j′ (b→c), j″ (c→d).
        let g = j1.source().clone();
        let n = g.order();
        let j2 = FusionMap::inner(g.clone(), c2.index(n)).unwrap();
        let j3 = FusionMap::inner(g, c3.index(n)).unwrap();
        let j02 = j1.then(&j2).unwrap();
        let j13 = j2.then(&j3).unwrap();
        // x ∈ G_d×G_c, y ∈ G_c×G_b, z ∈ G_b×G_a.
        let left = transitive_product(transitive_product(x, y, &j2, &j3).unwrap(), z, &j1, &j13).unwrap();
        let right = transitive_product(x, transitive_product(y, z, &j1, &j2).unwrap(), &j02, &j3).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn transitive_product_reduces_to_closed_forms((j, [x, y, _]) in pair_setup()) {
        let g = j.source().clone();
        let id = FusionMap::identity(g.clone());
        let t = transitive_product(x, y, &id, &id).unwrap();
        let (a, b, c, d) = (x.left, x.right, y.left, y.right);
        prop_assert_eq!(t, GradedPair::new(g.mul(a, c), g.prod(&[d, g.inv(c), b, c])));
        prop_assert_eq!(t, pair_product(x, y, &id).unwrap());
    }

    #[test]
    fn projection_is_a_homomorphism((j, [x, y, _]) in pair_setup(), c in any::<prop::sample::Index>()) {
        let g = j.source().clone();
        let j2 = FusionMap::inner(g.clone(), c.index(g.order())).unwrap();
        let j02 = j.then(&j2).unwrap();
        let pxy = project_pi(pair_product(x, y, &j02).unwrap(), &j, &j2).unwrap();
        let (px, py) = (project_pi(x, &j, &j2).unwrap(), project_pi(y, &j, &j2).unwrap());
        prop_assert_eq!(pxy.0, pair_product(px.0, py.0, &j2).unwrap());
        prop_assert_eq!(pxy.1, pair_product(px.1, py.1, &j).unwrap());
        // Counit law: ω₍₁₎ * e = ω = e * ω₍₂₎.
        prop_assert_eq!(transitive_product(px.0, pair_unit(&j), &j, &j2).unwrap(), x);
        prop_assert_eq!(transitive_product(pair_unit(&j2), px.1, &j, &j2).unwrap(), x);
    }

    #[test]
    fn fusion_maps_respect_products((j, [x, _, _]) in pair_setup()) {
        let g = j.source().clone();
        let (a, b) = (x.left, x.right);
        prop_assert_eq!(j.apply(g.mul(a, b)), j.target().mul(j.apply(a), j.apply(b)));
        prop_assert_eq!(j.apply_inv(j.apply(a)), a);
        prop_assert_eq!(j.then(&j.inverse()).unwrap().images().to_vec(), (0..g.order()).collect::<Vec<_>>());
    }
}
