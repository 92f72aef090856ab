use colorlie::color::GradedModule;
use colorlie::corpus;
use colorlie::pairings::Cocycle;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn color_twist_round_trip(which in any::<prop::sample::Index>(), pick in any::<prop::sample::Index>()) {
        let all = corpus::valid_color_algebras();
        let (name, l) = which.get(&all);
        let cocycles = corpus::bicharacters(l.group(), l.field());
        let s = Cocycle::new(pick.get(&cocycles).clone());
        let t = l.twist(&s).unwrap();
        prop_assert!(t.validate().unwrap().is_ok(), "{}", name);
        prop_assert_eq!(&t.twist(&s.inverse()).unwrap(), l);
        prop_assert_eq!(t.descending_central_series().dims, l.descending_central_series().dims);
        prop_assert_eq!(t.epsilon(), &l.epsilon().mul(&s.delta()).unwrap());
    }

    #[test]
    fn graded_twist_round_trip(which in any::<prop::sample::Index>(), pick in any::<prop::sample::Index>(), shift in any::<prop::sample::Index>()) {
        let all = corpus::graded_algebras();
        let (name, a) = which.get(&all);
        let s = Cocycle::new(pick.get(&corpus::bicharacters(a.group(), a.field())).clone());
        let t = a.twist(&s).unwrap();
        prop_assert!(t.validate().unwrap().is_ok(), "{}", name);
        prop_assert_eq!(&t.twist(&s.inverse()).unwrap(), a);

        let m = GradedModule::right_regular(a).unwrap();
        let mt = m.twist(&s).unwrap();
        prop_assert!(mt.validate().unwrap().is_ok());
        prop_assert_eq!(mt.twist(&s.inverse()).unwrap(), m.clone());
        let g = shift.get(&a.group().elements().unwrap()).clone();
        let lhs = m.suspend(&g).unwrap().twist(&s).unwrap();
        let rhs = mt.suspend(&g).unwrap();
        prop_assert!(lhs.is_diagonal_isomorphism(&rhs, &m.suspension_twist_intertwiner(&s, &g).unwrap()));
    }
}

#[test]
fn superization_of_the_corpus() {
    for (name, l) in corpus::valid_color_algebras() {
        let sup = l.superize().unwrap();
        assert!(sup.algebra.epsilon().is_super(), "{name}");
        assert!(sup.algebra.validate().unwrap().is_ok(), "{name}");
        assert_eq!(sup.algebra.twist(&sup.sigma.inverse()).unwrap(), l, "{name}");
    }
}

#[test]
fn natural_module_twists() {
    let m = corpus::matrix_natural_module();
    for b in corpus::bicharacters(m.algebra().group(), m.algebra().field()) {
        let s = Cocycle::new(b);
        let t = m.twist(&s).unwrap();
        assert!(t.validate().unwrap().is_ok());
        assert_eq!(t.twist(&s.inverse()).unwrap(), m);
    }
}
