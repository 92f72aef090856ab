use std::collections::BTreeMap;

use colorlie::color::ColorAlgebra;
use colorlie::corpus;
use colorlie::pbw::{group_degree, monomials_up_to, normalize_words, pbw_multiply, pbw_multiply_with, PbwElement, Strategy as Rewrite};
use proptest::prelude::*;

fn algebras() -> Vec<(&'static str, ColorAlgebra)> {
    vec![
        ("color_heisenberg", corpus::color_heisenberg()),
        ("super_odd_pair", corpus::super_odd_pair()),
        ("super_odd_square", corpus::super_odd_square()),
        ("twisted_l5_3", corpus::twisted_l5(3)),
        ("diagonal_z2z2_triple", corpus::diagonal_z2z2_triple()),
    ]
}

fn element(l: &ColorAlgebra, picks: &[(usize, i64)]) -> PbwElement {
    let monos = monomials_up_to(l, 2);
    let f = l.field();
    picks.iter().fold(PbwElement::zero(f, l.dim()), |acc, &(m, c)| {
        acc.add(&PbwElement::monomial(f, monos[m % monos.len()].clone(), f.from_int(c)))
    })
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..64, -3i64..4), 1..3)
}

fn mul(l: &ColorAlgebra, u: &PbwElement, v: &PbwElement) -> PbwElement {
    pbw_multiply(l, u, v, None).unwrap().element
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn associativity(which in 0usize..5, a in picks(), b in picks(), c in picks()) {
        let (_, l) = &algebras()[which];
        let (u, v, w) = (element(l, &a), element(l, &b), element(l, &c));
        prop_assert_eq!(mul(l, &mul(l, &u, &v), &w), mul(l, &u, &mul(l, &v, &w)));
    }

    #[test]
    fn rewriting_is_confluent(which in 0usize..5, word in prop::collection::vec(0usize..8, 0..5)) {
        let (_, l) = &algebras()[which];
        let word: Vec<usize> = word.into_iter().map(|i| i % l.dim()).collect();
        let words = BTreeMap::from([(word, l.field().one())]);
        prop_assert_eq!(
            normalize_words(l, words.clone(), Rewrite::Leftmost),
            normalize_words(l, words, Rewrite::Rightmost)
        );
    }

    #[test]
    fn products_are_homogeneous(which in 0usize..5, a in 0usize..64, b in 0usize..64) {
        let (_, l) = &algebras()[which];
        let monos = monomials_up_to(l, 2);
        let (ma, mb) = (&monos[a % monos.len()], &monos[b % monos.len()]);
        let f = l.field();
        let u = PbwElement::monomial(f, ma.clone(), f.one());
        let v = PbwElement::monomial(f, mb.clone(), f.one());
        let g = l.group();
        let expected = g.add(&group_degree(l, ma).unwrap(), &group_degree(l, mb).unwrap()).unwrap();
        let with_strategy = pbw_multiply_with(l, &u, &v, None, Rewrite::Rightmost).unwrap().element;
        for m in with_strategy.terms().keys() {
            prop_assert_eq!(group_degree(l, m).unwrap(), expected.clone());
        }
    }
}

#[test]
fn defining_relation() {
    for (name, l) in algebras() {
        let f = l.field();
        let n = l.dim();
        let gen = |i| PbwElement::generator(f, n, i);
        for i in 0..n {
            for j in 0..n {
                // e_j e_i - eps(j, i) e_i e_j = [e_j, e_i]
                let lhs = mul(&l, &gen(j), &gen(i)).sub(&mul(&l, &gen(i), &gen(j)).scale(l.eps(j, i)));
                let mut rhs = PbwElement::zero(f, n);
                for (k, c) in l.table().basis_product(j, i).iter().enumerate() {
                    rhs = rhs.add(&gen(k).scale(c));
                }
                assert_eq!(lhs, rhs, "{name}: relation at (e{}, e{})", j + 1, i + 1);
            }
        }
    }
}

#[test]
fn odd_square_is_half_bracket() {
    let l = corpus::super_odd_square();
    let f = l.field();
    let x = PbwElement::generator(f, 2, 0);
    let z = PbwElement::generator(f, 2, 1);
    assert_eq!(mul(&l, &x, &x), z.scale(&f.from_ratio(1, 2).unwrap()));
}

#[test]
fn truncation_is_flagged() {
    let l = corpus::color_heisenberg();
    let f = l.field();
    let u = PbwElement::generator(f, 3, 1);
    let v = PbwElement::generator(f, 3, 0);
    let p = pbw_multiply(&l, &u, &v, Some(1)).unwrap();
    assert!(p.truncated);
    assert_eq!(p.element.max_degree(), Some(1));
}
