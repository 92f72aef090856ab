use std::sync::Arc;

use colorlie::corpus::{bicharacters, commutation_factors};
use colorlie::pairings::{scheunert_sigma, Cocycle};
use colorlie::{CycloField, GroupSpec};
use proptest::prelude::*;

fn torsion_groups() -> Vec<(GroupSpec, Arc<CycloField>)> {
    [vec![2], vec![3], vec![4], vec![2, 2], vec![2, 3], vec![2, 4], vec![2, 2, 2], vec![3, 3]]
        .into_iter()
        .map(|t| {
            let g = GroupSpec::new(0, t).unwrap();
            let f = CycloField::new(g.torsion_exponent()).unwrap();
            (g, f)
        })
        .collect()
}

#[test]
fn superizing_cocycle_on_all_small_torsion_groups() {
    for (g, f) in torsion_groups() {
        let elements = g.elements().unwrap();
        assert!(elements.len() <= 36);
        let family = commutation_factors(&g, &f);
        assert!(!family.is_empty());
        for eps in family {
            let sigma = scheunert_sigma(&eps).unwrap();
            let eps0 = eps.epsilon0();
            for a in &elements {
                for b in &elements {
                    let delta = &sigma.eval(a, b).unwrap() * &sigma.eval(b, a).unwrap().inv().unwrap();
                    assert_eq!(&eps.eval(a, b).unwrap() * &delta, eps0.eval(a, b).unwrap(), "{g} at ({a}, {b})");
                }
            }
        }
    }
}

#[test]
fn commutation_factor_axioms_on_elements() {
    for (g, f) in torsion_groups() {
        let elements = g.elements().unwrap();
        for eps in commutation_factors(&g, &f) {
            for a in &elements {
                let aa = eps.eval(a, a).unwrap();
                assert!(aa.is_one() || aa.is_minus_one());
                for b in &elements {
                    assert!((&eps.eval(a, b).unwrap() * &eps.eval(b, a).unwrap()).is_one());
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bicharacters_are_bimultiplicative(which in 0usize..8, pick in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let (g, f) = torsion_groups().swap_remove(which);
        let all = bicharacters(&g, &f);
        let b = pick.get(&all);
        let elements = g.elements().unwrap();
        let n = elements.len();
        let idx = |k: u64| &elements[(seed.rotate_left(k as u32 * 8) % n as u64) as usize];
        let (x, y, z) = (idx(0), idx(1), idx(2));
        let xy = g.add(x, y).unwrap();
        prop_assert_eq!(b.eval(&xy, z).unwrap(), &b.eval(x, z).unwrap() * &b.eval(y, z).unwrap());
        let yz = g.add(y, z).unwrap();
        prop_assert_eq!(b.eval(x, &yz).unwrap(), &b.eval(x, y).unwrap() * &b.eval(x, z).unwrap());
        let s = Cocycle::new(b.clone());
        prop_assert!(s.check_identity(8, seed).unwrap().passed());
        prop_assert!(s.delta().mul(&s.inverse().delta()).unwrap().as_bicharacter().is_trivial());
    }
}
