use colorlie::gradings::{induce_grading, is_coarsening, standard_filiform, standard_l5, standard_l6, validate_grading, Grading};
use colorlie::{GroupHom, GroupSpec};
use proptest::prelude::*;

fn gradings() -> Vec<Grading> {
    let mut v = vec![standard_l5(), standard_l6()];
    v.extend((3..=10).map(|n| standard_filiform(n).unwrap()));
    v
}

fn rows(src: usize, dst: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..4, dst), src)
}

#[test]
fn standard_gradings_validate() {
    for g in gradings() {
        assert!(validate_grading(&g).unwrap().is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn induce_respects_composition(which in 0usize..10, mid in 1usize..4, a in rows(3, 3), b in rows(3, 2)) {
        let g = gradings().swap_remove(which);
        let r = g.group().num_generators();
        let a: Vec<Vec<i64>> = a.into_iter().take(r).map(|row| row.into_iter().take(mid).collect()).collect();
        let b: Vec<Vec<i64>> = b.into_iter().take(mid).collect();
        let target = GroupSpec::new(1, vec![2]).unwrap();
        let alpha = GroupHom::from_rows(g.group().clone(), GroupSpec::free(mid), a).unwrap();
        let beta = GroupHom::from_rows(GroupSpec::free(mid), target, b).unwrap();
        let step = induce_grading(&induce_grading(&g, &alpha).unwrap(), &beta).unwrap();
        let direct = induce_grading(&g, &alpha.then(&beta).unwrap()).unwrap();
        prop_assert_eq!(&step, &direct);
        prop_assert_eq!(induce_grading(&g, &GroupHom::identity(g.group())).unwrap(), g.clone());

        // reflexive and transitive along the chain g -> alpha -> beta
        let mid_grading = induce_grading(&g, &alpha).unwrap();
        prop_assert!(is_coarsening(&g, &g).unwrap());
        prop_assert!(is_coarsening(&mid_grading, &g).unwrap());
        prop_assert!(is_coarsening(&step, &mid_grading).unwrap());
        prop_assert!(is_coarsening(&step, &g).unwrap());
        prop_assert!(validate_grading(&step).unwrap().is_ok());
    }
}

#[test]
fn fine_grading_is_not_coarser_than_total_degree() {
    let g = standard_l5();
    let total = induce_grading(&g, &GroupHom::from_rows(g.group().clone(), GroupSpec::free(1), vec![vec![1], vec![1]]).unwrap()).unwrap();
    assert!(is_coarsening(&total, &g).unwrap());
    assert!(!is_coarsening(&g, &total).unwrap());
}
