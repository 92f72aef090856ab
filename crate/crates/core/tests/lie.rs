use colorlie::corpus;
use colorlie::lie::{
    catalog, decompose_codim1, diamond_check, has_codim1_abelian_ideal, lie_index, strip_central_abelian_factor,
    LieAlgebra, DEFAULT_SEED,
};
use colorlie::linalg::is_zero_vector;
use proptest::prelude::*;

fn corpus_algebras() -> Vec<(String, LieAlgebra)> {
    corpus::nilpotent_lie_algebras()
}

#[test]
fn index_bounds() {
    for (name, g) in corpus_algebras() {
        let r = lie_index(&g, DEFAULT_SEED).unwrap();
        assert_eq!(r.generic_rank % 2, 0, "{name}: odd rank");
        assert!(r.index >= g.center().dim(), "{name}: index below center dimension");
        assert_eq!(r.index + r.generic_rank, g.dim(), "{name}");
    }
}

#[test]
fn strip_reconstructs_the_algebra() {
    for (name, g) in corpus_algebras() {
        let s = strip_central_abelian_factor(&g).unwrap();
        assert_eq!(s.factor.len() + s.complement.len(), g.dim(), "{name}");
        for a in &s.factor {
            for i in 0..g.dim() {
                let e = colorlie::linalg::unit_vector(g.field(), g.dim(), i);
                assert!(is_zero_vector(&g.bracket(a, &e)), "{name}: factor is not central");
            }
        }
        assert_eq!(g.subalgebra(&s.complement).unwrap(), s.reduced, "{name}");
        let again = strip_central_abelian_factor(&s.reduced).unwrap();
        assert!(again.factor.is_empty() || s.reduced.is_abelian(), "{name}: reduced part still splits");
    }
}

#[test]
fn codim1_witnesses_are_abelian_ideals() {
    for (name, g) in corpus_algebras() {
        let Some(w) = has_codim1_abelian_ideal(&g) else { continue };
        assert_eq!(w.dim() + 1, g.dim(), "{name}");
        for u in w.basis() {
            for v in w.basis() {
                assert!(is_zero_vector(&g.bracket(u, v)), "{name}: not abelian");
            }
            for i in 0..g.dim() {
                let e = colorlie::linalg::unit_vector(g.field(), g.dim(), i);
                assert!(w.contains(&g.bracket(&e, u)), "{name}: not an ideal");
            }
        }
        let d = decompose_codim1(&g, &w).unwrap();
        assert_eq!(d.block_sizes.iter().sum::<usize>() + 1, g.dim(), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn diamond_is_stable_under_abelian_factors(which in any::<prop::sample::Index>(), k in 1usize..4) {
        let all = corpus_algebras();
        let (name, g) = which.get(&all);
        let bigger = g.direct_sum(&catalog::abelian(k)).unwrap();
        let a = diamond_check(g, DEFAULT_SEED).unwrap();
        let b = diamond_check(&bigger, DEFAULT_SEED).unwrap();
        prop_assert_eq!(a.holds, b.holds, "{}", name);
        prop_assert_eq!(a.classification.name(), b.classification.name());
        prop_assert_eq!(a.stripped_dim, b.stripped_dim);
        prop_assert_eq!(b.evidence.factor_dim, a.evidence.factor_dim + k);
    }

    #[test]
    fn index_does_not_depend_on_the_seed(which in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let all = corpus_algebras();
        let (_, g) = which.get(&all);
        prop_assert_eq!(lie_index(g, seed).unwrap().index, lie_index(g, DEFAULT_SEED).unwrap().index);
    }
}

#[test]
fn non_nilpotent_input_is_rejected() {
    assert!(diamond_check(&catalog::affine_line(), DEFAULT_SEED).is_err());
}
