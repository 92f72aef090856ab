//! Small hand-built examples used by tests, the CLI catalog and benchmarks:
//! valid color algebras, deliberately broken ones, graded associative
//! algebras with modules, and a nilpotent Lie algebra corpus.

use std::sync::Arc;

use crate::abgroup::{GroupElement, GroupSpec};
use crate::color::{ColorAlgebra, GradedAlgebra, GradedModule};
use crate::cyclo::{CycloField, CycloScalar};
use crate::lie::{catalog, LieAlgebra};
use crate::linalg;
use crate::pairings::{Bicharacter, Cocycle, CommutationFactor};
use crate::table::ProductTable;

fn q() -> Arc<CycloField> {
    CycloField::new(1).expect("Q is a valid field")
}

fn z2z2() -> GroupSpec {
    GroupSpec::new(0, vec![2, 2]).expect("valid group")
}

fn elem(g: &GroupSpec, c: &[i64]) -> GroupElement {
    g.element(c.to_vec()).expect("coordinates match the group")
}

fn factor(g: &GroupSpec, f: &Arc<CycloField>, pairs: &[(usize, usize, i64)]) -> CommutationFactor {
    let pairs: Vec<_> = pairs.iter().map(|&(i, j, c)| (i, j, f.from_int(c))).collect();
    let b = Bicharacter::from_pairs(g.clone(), Arc::clone(f), &pairs).expect("valid bicharacter");
    CommutationFactor::new(b).expect("valid commutation factor")
}

/// Color algebra with integer structure constants `[e_i, e_j] += c e_k` (0-based).
fn color(
    eps: CommutationFactor,
    degrees: &[&[i64]],
    brackets: &[(usize, usize, usize, i64)],
) -> ColorAlgebra {
    let g = eps.group().clone();
    let f = Arc::clone(eps.as_bicharacter().field());
    let mut t = ProductTable::new(Arc::clone(&f), degrees.len());
    for &(i, j, k, c) in brackets {
        t.add_term(i, j, k, f.from_int(c)).expect("indices in range");
    }
    let degrees = degrees.iter().map(|d| elem(&g, d)).collect();
    ColorAlgebra::new(eps, degrees, t).expect("consistent data")
}

/// `eps = (-1)^(a1 b2 - a2 b1)` on `Z/2 x Z/2`.
pub fn heisenberg_factor() -> CommutationFactor {
    factor(&z2z2(), &q(), &[(0, 1, -1), (1, 0, -1)])
}

/// Degrees `(1,0), (0,1), (1,1)` with `[x1,x2] = [x2,x1] = x3`.
pub fn color_heisenberg() -> ColorAlgebra {
    color(heisenberg_factor(), &[&[1, 0], &[0, 1], &[1, 1]], &[(0, 1, 2, 1), (1, 0, 2, 1)])
}

/// The color Heisenberg with `[x2,x1] = -x3`: skew symmetry fails at `(2,1)`.
pub fn color_heisenberg_wrong_sign() -> ColorAlgebra {
    color(heisenberg_factor(), &[&[1, 0], &[0, 1], &[1, 1]], &[(0, 1, 2, 1), (1, 0, 2, -1)])
}

/// The color Heisenberg with `x3` placed in degree `(0,0)`.
pub fn color_heisenberg_bad_degree() -> ColorAlgebra {
    color(heisenberg_factor(), &[&[1, 0], &[0, 1], &[0, 0]], &[(0, 1, 2, 1), (1, 0, 2, 1)])
}

pub fn super_factor() -> CommutationFactor {
    CommutationFactor::super_z2(q()).expect("valid super factor")
}

/// `x` odd, `z` even, `[x,x] = z`.
pub fn super_odd_square() -> ColorAlgebra {
    color(super_factor(), &[&[1], &[0]], &[(0, 0, 1, 1)])
}

/// `x, y` odd, `z` even, `[x,y] = [y,x] = z`, `[x,x] = z`.
pub fn super_odd_pair() -> ColorAlgebra {
    color(super_factor(), &[&[1], &[1], &[0]], &[(0, 1, 2, 1), (1, 0, 2, 1), (0, 0, 2, 1)])
}

/// `[x,x] = z` and `[z,x] = x`: the Jacobi identity fails on `(x,x,x)`.
pub fn super_jacobi_mutant() -> ColorAlgebra {
    color(super_factor(), &[&[1], &[0]], &[(0, 0, 1, 1), (1, 0, 0, 1), (0, 1, 0, -1)])
}

/// Even `e1, e2` with `[e1,e2] = e2` acting on the odd line `e3` by `[e1,e3] = e3`.
pub fn super_with_affine_even() -> ColorAlgebra {
    color(
        super_factor(),
        &[&[0], &[0], &[1]],
        &[(0, 1, 1, 1), (1, 0, 1, -1), (0, 2, 2, 1), (2, 0, 2, -1)],
    )
}

/// A single odd element with zero bracket.
pub fn odd_abelian_line() -> ColorAlgebra {
    color(super_factor(), &[&[1]], &[])
}

/// `eps = (-1)^(a1 b1 + a2 b2)` on `Z/2 x Z/2`.
pub fn diagonal_factor() -> CommutationFactor {
    factor(&z2z2(), &q(), &[(0, 0, -1), (1, 1, -1)])
}

/// Degrees `(1,0), (0,1), (1,1)` under the diagonal factor, `[x1,x2] = x3`.
pub fn diagonal_z2z2_triple() -> ColorAlgebra {
    color(diagonal_factor(), &[&[1, 0], &[0, 1], &[1, 1]], &[(0, 1, 2, 1), (1, 0, 2, -1)])
}

/// Even part `n4` (basis `E12, E13, E14, E23, E24, E34`, degree `(1,1)` when
/// `j - i` is odd) plus odd `u = (1,0)`, `v = (0,1)` with `[u,v] = E14`.
pub fn color_n4_extension() -> ColorAlgebra {
    let n4 = catalog::upper_triangular_nil(4).expect("valid size");
    let mut brackets = Vec::new();
    for (&(i, j), s) in n4.table().entries() {
        for (&k, c) in s {
            let c = c.as_rational().expect("rational constants").to_integer();
            brackets.push((i, j, k, i64::try_from(c).expect("small constants")));
        }
    }
    brackets.push((6, 7, 2, 1));
    brackets.push((7, 6, 2, -1));
    let odd = [1, 1];
    let even = [0, 0];
    color(
        diagonal_factor(),
        &[&odd, &even, &odd, &odd, &even, &odd, &[1, 0], &[0, 1]],
        &brackets,
    )
}

/// `L5` graded by `Z^2` (`e1 = (1,0)`, `e2 = (0,1)`) and twisted by the
/// bicharacter with `s(g1, g2) = zeta_order`, giving a genuinely colored algebra.
pub fn twisted_l5(order: u64) -> ColorAlgebra {
    let f = CycloField::new(order).expect("valid order");
    let g = GroupSpec::free(2);
    let base = rebase(&catalog::l5(), &f);
    let degrees = [[1, 0], [0, 1], [1, 1], [2, 1], [1, 2]]
        .iter()
        .map(|d| elem(&g, d))
        .collect();
    let plain = ColorAlgebra::new(CommutationFactor::trivial(g.clone(), Arc::clone(&f)), degrees, base)
        .expect("standard grading of L5");
    let sigma = Bicharacter::from_pairs(g, Arc::clone(&f), &[(0, 1, f.root_of_unity(1))]).expect("free group");
    plain.twist(&Cocycle::new(sigma)).expect("same group")
}

/// Copies a rational structure-constant table into another cyclotomic field.
pub fn rebase(l: &LieAlgebra, f: &Arc<CycloField>) -> ProductTable {
    let mut t = ProductTable::new(Arc::clone(f), l.dim());
    for (&(i, j), s) in l.table().entries() {
        for (&k, c) in s {
            let r = c.as_rational().expect("rational constants").clone();
            t.add_term(i, j, k, f.from_rational(r)).expect("same dimension");
        }
    }
    t
}

/// An ordinary Lie algebra as a color algebra over the trivial group.
pub fn as_color(l: &LieAlgebra) -> ColorAlgebra {
    l.as_color()
}

/// `L5` with the skew partner of `[e2,e3]` missing.
pub fn l5_missing_skew() -> ColorAlgebra {
    let mut t = catalog::l5().table().clone();
    let f = Arc::clone(t.field());
    t.set_dense(2, 1, &linalg::zero_vector(&f, 5)).expect("in range");
    let triv = GroupSpec::trivial();
    ColorAlgebra::new(CommutationFactor::trivial(triv.clone(), f), vec![triv.zero(); 5], t).expect("consistent")
}

/// `[e1,e2] = e2, [e1,e3] = e3, [e2,e3] = e1`: antisymmetric but not Jacobi.
pub fn jacobi_breaker() -> ColorAlgebra {
    let triv = GroupSpec::trivial();
    color(
        CommutationFactor::trivial(triv, q()),
        &[&[], &[], &[]],
        &[(0, 1, 1, 1), (1, 0, 1, -1), (0, 2, 2, 1), (2, 0, 2, -1), (1, 2, 0, 1), (2, 1, 0, -1)],
    )
}

/// Every valid color algebra in the corpus, by name.
pub fn valid_color_algebras() -> Vec<(&'static str, ColorAlgebra)> {
    vec![
        ("color_heisenberg", color_heisenberg()),
        ("super_odd_square", super_odd_square()),
        ("super_odd_pair", super_odd_pair()),
        ("super_with_affine_even", super_with_affine_even()),
        ("odd_abelian_line", odd_abelian_line()),
        ("diagonal_z2z2_triple", diagonal_z2z2_triple()),
        ("color_n4_extension", color_n4_extension()),
        ("twisted_l5_3", twisted_l5(3)),
        ("twisted_l5_12", twisted_l5(12)),
        ("l5", as_color(&catalog::l5())),
        ("l6", as_color(&catalog::l6())),
        ("affine_line", as_color(&catalog::affine_line())),
    ]
}

/// Broken color algebras with the 1-based witness of their first violation.
pub fn color_mutants() -> Vec<(&'static str, ColorAlgebra, Vec<usize>)> {
    vec![
        ("heisenberg_wrong_sign", color_heisenberg_wrong_sign(), vec![2, 1]),
        ("heisenberg_bad_degree", color_heisenberg_bad_degree(), vec![1, 2, 3]),
        ("l5_missing_skew", l5_missing_skew(), vec![3, 2]),
        ("jacobi_breaker", jacobi_breaker(), vec![1, 2, 3]),
        ("super_jacobi_mutant", super_jacobi_mutant(), vec![1, 1, 1]),
    ]
}

/// Nilpotent Lie algebras of dimensions 1 to 8.
pub fn nilpotent_lie_algebras() -> Vec<(String, LieAlgebra)> {
    let mut out: Vec<(String, LieAlgebra)> = vec![
        ("abelian(1)".into(), catalog::abelian(1)),
        ("abelian(2)".into(), catalog::abelian(2)),
        ("heisenberg(3)".into(), catalog::heisenberg(3).expect("valid")),
        ("heisenberg(5)".into(), catalog::heisenberg(5).expect("valid")),
        ("l5".into(), catalog::l5()),
        ("l6".into(), catalog::l6()),
        ("n4".into(), catalog::upper_triangular_nil(4).expect("valid")),
        ("g2block".into(), catalog::two_block(&[2, 2]).expect("valid")),
        ("two_block(3,2)".into(), catalog::two_block(&[3, 2]).expect("valid")),
        ("l5xk".into(), catalog::l5().direct_sum(&catalog::abelian(1)).expect("same field")),
        ("l6xk2".into(), catalog::l6().direct_sum(&catalog::abelian(2)).expect("same field")),
        (
            "nilpotent(5,5)".into(),
            catalog::from_brackets(5, &[(0, 1, 2, 1), (0, 2, 4, 1), (1, 3, 4, 1)]).expect("valid"),
        ),
        (
            "nilpotent(5,6)".into(),
            catalog::from_brackets(5, &[(0, 1, 2, 1), (0, 2, 3, 1), (0, 3, 4, 1), (1, 2, 4, 1)]).expect("valid"),
        ),
    ];
    for n in 3..=8 {
        out.push((format!("filiform({n})"), catalog::filiform(n).expect("valid")));
    }
    out
}

pub fn z2_group_algebra() -> GradedAlgebra {
    GradedAlgebra::group_algebra(&GroupSpec::new(0, vec![2]).expect("valid"), &q()).expect("finite group")
}

/// `M_2` graded by `Z/2` with `E12, E21` odd, and unit `E11 + E22`.
pub fn matrix_algebra_z2() -> GradedAlgebra {
    let f = q();
    let g = GroupSpec::new(0, vec![2]).expect("valid");
    // basis E11, E12, E21, E22
    let idx = |a: usize, b: usize| 2 * a + b;
    let mut t = ProductTable::new(Arc::clone(&f), 4);
    for a in 0..2 {
        for b in 0..2 {
            for d in 0..2 {
                t.add_term(idx(a, b), idx(b, d), idx(a, d), f.one()).expect("in range");
            }
        }
    }
    let degrees = [0, 1, 1, 0].iter().map(|&d| elem(&g, &[d])).collect();
    let unit: Vec<CycloScalar> = [1, 0, 0, 1].iter().map(|&c| f.from_int(c)).collect();
    GradedAlgebra::new(g, degrees, t, Some(unit)).expect("consistent")
}

/// Row vectors `k^2` (degrees 0, 1) as a right module over [`matrix_algebra_z2`].
pub fn matrix_natural_module() -> GradedModule {
    let a = matrix_algebra_z2();
    let f = Arc::clone(a.field());
    let g = a.group().clone();
    let action = (0..4)
        .map(|e| {
            let (r, c) = (e / 2, e % 2);
            (0..2)
                .map(|i| (0..2).map(|k| if i == r && k == c { f.one() } else { f.zero() }).collect())
                .collect()
        })
        .collect();
    GradedModule::new(a, vec![elem(&g, &[0]), elem(&g, &[1])], action).expect("consistent")
}

/// Graded associative algebras with unit, by name.
pub fn graded_algebras() -> Vec<(&'static str, GradedAlgebra)> {
    let f = q();
    let z3 = CycloField::new(3).expect("valid");
    vec![
        ("k[Z2]", z2_group_algebra()),
        (
            "k[Z2xZ2]",
            GradedAlgebra::group_algebra(&z2z2(), &f).expect("finite group"),
        ),
        (
            "k[Z3]",
            GradedAlgebra::group_algebra(&GroupSpec::new(0, vec![3]).expect("valid"), &z3).expect("finite group"),
        ),
        ("M2", matrix_algebra_z2()),
    ]
}

/// Roots of unity `±zeta^k` of `field` whose order divides `m`; all of them when `m` is 0.
pub fn roots_of_unity(field: &Arc<CycloField>, m: u64) -> Vec<CycloScalar> {
    let n = field.order() as i64;
    let mut out: Vec<CycloScalar> = Vec::new();
    for k in 0..n {
        for sign in [1, -1] {
            let z = &field.from_int(sign) * &field.root_of_unity(k);
            let divides = m == 0 || z.pow(m as i64).map(|p| p.is_one()).unwrap_or(false);
            if divides && !out.contains(&z) {
                out.push(z);
            }
        }
    }
    out
}

/// Order constraint on the value of a pairing at `(g_i, g_j)`: the gcd of
/// the generator orders, 0 when both are free.
fn pair_order(g: &GroupSpec, i: usize, j: usize) -> u64 {
    use num_integer::Integer;
    match (g.generator_order(i), g.generator_order(j)) {
        (Some(a), Some(b)) => a.gcd(&b),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => 0,
    }
}

/// Every way of picking one value per slot, turned into a table by `fill`.
fn tables(
    choices: &[Vec<CycloScalar>],
    fill: &dyn Fn(&[CycloScalar]) -> Option<Vec<Vec<CycloScalar>>>,
) -> Vec<Vec<Vec<CycloScalar>>> {
    let mut picks: Vec<Vec<CycloScalar>> = vec![Vec::new()];
    for c in choices {
        picks = picks
            .into_iter()
            .flat_map(|p| c.iter().map(move |v| {
                let mut q = p.clone();
                q.push(v.clone());
                q
            }))
            .collect();
    }
    picks.iter().filter_map(|p| fill(p)).collect()
}

/// Every bicharacter whose generator values are roots of unity of `field`.
pub fn bicharacters(group: &GroupSpec, field: &Arc<CycloField>) -> Vec<Bicharacter> {
    let r = group.num_generators();
    let choices: Vec<Vec<CycloScalar>> = (0..r)
        .flat_map(|i| (0..r).map(move |j| (i, j)))
        .map(|(i, j)| roots_of_unity(field, pair_order(group, i, j)))
        .collect();
    let fill = |p: &[CycloScalar]| Some(p.chunks(r.max(1)).map(<[_]>::to_vec).collect::<Vec<_>>());
    tables(&choices, &fill)
        .into_iter()
        .map(|values| if r == 0 { Vec::new() } else { values })
        .filter_map(|values| Bicharacter::new(group.clone(), Arc::clone(field), values).ok())
        .collect()
}

/// Every commutation factor whose generator values are roots of unity of `field`.
pub fn commutation_factors(group: &GroupSpec, field: &Arc<CycloField>) -> Vec<CommutationFactor> {
    let r = group.num_generators();
    let mut slots = Vec::new();
    let mut choices = Vec::new();
    for i in 0..r {
        for j in i..r {
            let mut c = roots_of_unity(field, pair_order(group, i, j));
            if i == j {
                c.retain(|v| v.is_one() || v.is_minus_one());
            }
            slots.push((i, j));
            choices.push(c);
        }
    }
    let fill = |p: &[CycloScalar]| {
        let mut values = vec![vec![field.one(); r]; r];
        for (&(i, j), v) in slots.iter().zip(p) {
            values[i][j] = v.clone();
            values[j][i] = v.inv().ok()?;
        }
        Some(values)
    };
    tables(&choices, &fill)
        .into_iter()
        .filter_map(|values| Bicharacter::new(group.clone(), Arc::clone(field), values).ok())
        .filter_map(|b| CommutationFactor::new(b).ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_corpus_validates() {
        for (name, l) in valid_color_algebras() {
            assert!(l.validate().unwrap().is_ok(), "{name}: {:?}", l.validate().unwrap());
        }
        for (name, a) in graded_algebras() {
            assert!(a.validate().unwrap().is_ok(), "{name}");
        }
        assert!(matrix_natural_module().validate().unwrap().is_ok());
    }

    #[test]
    fn mutants_fail_with_expected_witness() {
        for (name, l, witness) in color_mutants() {
            let r = l.validate().unwrap();
            assert!(!r.is_ok(), "{name}");
            assert_eq!(r.violations[0].witness(), witness, "{name}: {:?}", r.violations);
        }
    }

    #[test]
    fn lie_corpus_is_nilpotent() {
        let corpus = nilpotent_lie_algebras();
        assert!(corpus.len() >= 12);
        for (name, g) in corpus {
            assert!(g.is_nilpotent(), "{name}");
        }
    }

    #[test]
    fn twisted_l5_is_colored() {
        let l = twisted_l5(3);
        assert!(!l.epsilon().as_bicharacter().is_trivial());
        assert!(!l.epsilon().is_super());
    }

    #[test]
    fn enumerations() {
        let f = q();
        assert_eq!(roots_of_unity(&f, 0).len(), 2);
        assert_eq!(bicharacters(&z2z2(), &f).len(), 16);
        // diagonal values are free, the off-diagonal value fixes its partner
        assert_eq!(commutation_factors(&z2z2(), &f).len(), 8);
        let f6 = CycloField::new(6).unwrap();
        let z2z3 = GroupSpec::new(0, vec![2, 3]).unwrap();
        assert_eq!(commutation_factors(&z2z3, &f6).len(), 2);
        assert_eq!(bicharacters(&z2z3, &f6).len(), 6);
        assert_eq!(bicharacters(&GroupSpec::trivial(), &f).len(), 1);
    }
}
