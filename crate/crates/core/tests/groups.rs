use colorlie::{GroupElement, GroupHom, GroupSpec};
use proptest::prelude::*;

fn group() -> impl Strategy<Value = GroupSpec> {
    (0usize..3, prop::collection::vec(2u64..7, 0..3)).prop_map(|(r, t)| GroupSpec::new(r, t).unwrap())
}

fn with_elements(k: usize) -> impl Strategy<Value = (GroupSpec, Vec<GroupElement>)> {
    group().prop_flat_map(move |g| {
        let n = g.num_generators();
        let elems = prop::collection::vec(prop::collection::vec(-20i64..20, n), k);
        (Just(g.clone()), elems).prop_map(|(g, cs)| {
            let es = cs.into_iter().map(|c| g.element(c).unwrap()).collect();
            (g, es)
        })
    })
}

fn free_hom(src: usize, dst: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-4i64..5, dst), src)
}

proptest! {
    #[test]
    fn abelian_group_laws((g, e) in with_elements(3)) {
        let (a, b, c) = (&e[0], &e[1], &e[2]);
        prop_assert_eq!(g.add(a, b).unwrap(), g.add(b, a).unwrap());
        let ab_c = g.add(&g.add(a, b).unwrap(), c).unwrap();
        let a_bc = g.add(a, &g.add(b, c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert_eq!(g.add(a, &g.zero()).unwrap(), a.clone());
        prop_assert!(g.add(a, &g.neg(a).unwrap()).unwrap().is_zero());
        prop_assert_eq!(g.sub(a, b).unwrap(), g.add(a, &g.neg(b).unwrap()).unwrap());
        let thrice = g.add(&g.add(a, a).unwrap(), a).unwrap();
        prop_assert_eq!(g.scale(a, 3).unwrap(), thrice);
        prop_assert!(g.contains(a));
    }

    #[test]
    fn torsion_coordinates_are_reduced((g, e) in with_elements(1)) {
        for (t, &m) in g.torsion().iter().enumerate() {
            let c = e[0].coords()[g.free_rank() + t];
            prop_assert!((0..m as i64).contains(&c));
        }
    }

    #[test]
    fn homs_are_additive(rows in free_hom(2, 3), a in prop::collection::vec(-9i64..10, 2), b in prop::collection::vec(-9i64..10, 2)) {
        let src = GroupSpec::free(2);
        let dst = GroupSpec::new(1, vec![2, 3]).unwrap();
        let h = GroupHom::from_rows(src.clone(), dst.clone(), rows).unwrap();
        let (a, b) = (src.element(a).unwrap(), src.element(b).unwrap());
        let lhs = h.apply(&src.add(&a, &b).unwrap()).unwrap();
        let rhs = dst.add(&h.apply(&a).unwrap(), &h.apply(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_and_identity(r1 in free_hom(2, 2), r2 in free_hom(2, 2), x in prop::collection::vec(-9i64..10, 2)) {
        let z2 = GroupSpec::free(2);
        let target = GroupSpec::new(0, vec![4, 6]).unwrap();
        let alpha = GroupHom::from_rows(z2.clone(), z2.clone(), r1).unwrap();
        let beta = GroupHom::from_rows(z2.clone(), target, r2).unwrap();
        let x = z2.element(x).unwrap();
        let composed = alpha.then(&beta).unwrap();
        prop_assert_eq!(composed.apply(&x).unwrap(), beta.apply(&alpha.apply(&x).unwrap()).unwrap());
        let id = GroupHom::identity(&z2);
        prop_assert_eq!(id.then(&alpha).unwrap(), alpha.clone());
        prop_assert_eq!(id.apply(&x).unwrap(), x);
    }
}

#[test]
fn torsion_incompatible_hom_is_rejected() {
    let z2 = GroupSpec::new(0, vec![2]).unwrap();
    let z3 = GroupSpec::new(0, vec![3]).unwrap();
    assert!(GroupHom::from_rows(z2, z3, vec![vec![1]]).is_err());
}

#[test]
fn group_text_round_trip() {
    for g in [GroupSpec::trivial(), GroupSpec::free(3), GroupSpec::new(1, vec![2, 4]).unwrap()] {
        assert_eq!(g.to_string().parse::<GroupSpec>().unwrap(), g);
    }
    assert_eq!(GroupSpec::new(0, vec![2, 3]).unwrap().elements().unwrap().len(), 6);
}
