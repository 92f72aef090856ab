//! Codimension-one abelian ideals, central abelian factors and the
//! classification of nilpotent Lie algebras with property (⋄).

use std::fmt;

use super::index::{lie_index, IndexReport};
use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Subspace, Vector};

/// Decides whether `g` has an abelian ideal of codimension one and returns
/// one (as an echelon subspace) if so.
pub fn has_codim1_abelian_ideal(g: &LieAlgebra) -> Option<Subspace> {
    let n = g.dim();
    if n == 0 {
        return None;
    }
    let field = g.field();
    // every codimension-one ideal contains D
    let d = g.derived();
    if g.bracket_span(&d, &d).dim() > 0 {
        return None;
    }
    let c = g.centralizer(&d);
    if c.dim() + 2 <= n {
        return None;
    }
    if c.dim() + 1 == n {
        return (g.bracket_span(&c, &c).dim() == 0).then_some(c);
    }
    // D is central: look for phi on g/D with omega_lambda ^ phi = 0 for every lambda
    let quot = d.complement_indices();
    let m = quot.len();
    // forms[a][b] = echelon coordinates of [e_qa, e_qb] in D
    let forms: Vec<Vec<Vector>> = quot
        .iter()
        .map(|&a| {
            quot.iter()
                .map(|&b| d.coordinates(&g.table().basis_product(a, b)).expect("brackets lie in D"))
                .collect()
        })
        .collect();
    let mut eqs: Vec<Vector> = Vec::new();
    for lambda in 0..d.dim() {
        for a in 0..m {
            for b in a + 1..m {
                for c in b + 1..m {
                    // (omega ^ phi)(a,b,c) = w_ab phi_c - w_ac phi_b + w_bc phi_a
                    let mut row = linalg::zero_vector(field, m);
                    row[c] = forms[a][b][lambda].clone();
                    row[b] = -&forms[a][c][lambda];
                    row[a] = forms[b][c][lambda].clone();
                    if !linalg::is_zero_vector(&row) {
                        eqs.push(row);
                    }
                }
            }
        }
    }
    let phi = linalg::kernel(field, &eqs, m).into_iter().next()?;
    // preimage of ker phi
    let mut gens: Vec<Vector> = d.basis().to_vec();
    for k in linalg::kernel(field, &[phi], m) {
        let lifted = quot
            .iter()
            .zip(&k)
            .fold(linalg::zero_vector(field, n), |mut acc, (&a, x)| {
                acc[a] = x.clone();
                acc
            });
        gens.push(lifted);
    }
    Some(Subspace::span(n, &gens))
}

fn check_codim1_witness(g: &LieAlgebra, w: &Subspace) -> Result<()> {
    let n = g.dim();
    if n == 0 || w.ambient_dim() != n || w.dim() + 1 != n {
        return Err(Error::Precondition(format!("witness of dimension {} in an algebra of dimension {n}", w.dim())));
    }
    if !w.contains_subspace(&g.bracket_span(&g.full(), w)) {
        return Err(Error::Precondition("witness is not an ideal".into()));
    }
    if g.bracket_span(w, w).dim() > 0 {
        return Err(Error::Precondition("witness is not abelian".into()));
    }
    Ok(())
}

/// `g = A x B` with `A` central abelian and `B` without a central abelian direct factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrippedAlgebra {
    /// Basis of `A`, in echelon form.
    pub factor: Vec<Vector>,
    /// Basis of `B`, in echelon form; the reduced algebra uses this basis.
    pub complement: Vec<Vector>,
    pub reduced: LieAlgebra,
}

pub fn strip_central_abelian_factor(g: &LieAlgebra) -> Result<StrippedAlgebra> {
    let n = g.dim();
    let field = g.field();
    let z = g.center();
    let d = g.derived();
    let zd = z.intersection(field, &d);

    let mut acc = zd.clone();
    let mut factor = Vec::new();
    for v in z.basis() {
        if !acc.contains(v) {
            acc = acc.sum(&Subspace::span(n, std::slice::from_ref(v)));
            factor.push(v.clone());
        }
    }
    let a = Subspace::span(n, &factor);

    let mut b = d.clone();
    for i in 0..n {
        let e = linalg::unit_vector(field, n, i);
        if !a.sum(&b).contains(&e) {
            b = b.sum(&Subspace::span(n, &[e]));
        }
    }
    if a.dim() + b.dim() != n || a.intersection(field, &b).dim() != 0 {
        return Err(Error::Internal("central factor and complement do not split the algebra".into()));
    }
    if !b.contains_subspace(&g.bracket_span(&b, &b)) {
        return Err(Error::Internal("complement is not a subalgebra".into()));
    }
    if g.bracket_span(&a, &g.full()).dim() != 0 {
        return Err(Error::Internal("factor is not central".into()));
    }
    let reduced = g.subalgebra(b.basis())?;
    let rz = reduced.center();
    let rd = reduced.derived();
    if !rd.contains_subspace(&rz) {
        return Err(Error::Internal("complement still has a central abelian factor".into()));
    }
    Ok(StrippedAlgebra {
        factor: a.basis().to_vec(),
        complement: b.basis().to_vec(),
        reduced,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiamondClass {
    AbelianAfterStrip,
    /// Basis of the ideal, in coordinates of the stripped algebra.
    CodimOneAbelianIdeal(Vec<Vector>),
    TypeL5,
    TypeL6,
    NotDiamond,
}

impl DiamondClass {
    pub fn name(&self) -> &'static str {
        match self {
            Self::AbelianAfterStrip => "AbelianAfterStrip",
            Self::CodimOneAbelianIdeal(_) => "CodimOneAbelianIdeal",
            Self::TypeL5 => "TypeL5",
            Self::TypeL6 => "TypeL6",
            Self::NotDiamond => "NotDiamond",
        }
    }
}

impl fmt::Display for DiamondClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamondEvidence {
    pub factor_dim: usize,
    pub series_dims: Vec<usize>,
    pub index: IndexReport,
    pub codim1_witness: Option<Vec<Vector>>,
    /// Outcome of the structural route (codimension-one ideal or L5/L6 profile).
    pub structural: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamondVerdict {
    pub holds: bool,
    pub classification: DiamondClass,
    pub stripped_dim: usize,
    pub evidence: DiamondEvidence,
}

const L5_SERIES: [usize; 4] = [5, 3, 2, 0];
const L6_SERIES: [usize; 3] = [6, 3, 0];

pub fn diamond_check(g: &LieAlgebra, seed: u64) -> Result<DiamondVerdict> {
    let series = g.central_series();
    if !series.is_nilpotent() {
        return Err(Error::Precondition(format!(
            "algebra is not nilpotent (central series {:?})",
            series.dims
        )));
    }
    let stripped = strip_central_abelian_factor(g)?;
    let h = &stripped.reduced;
    let series_dims = h.central_series().dims;
    let index = lie_index(h, seed)?;
    let mut evidence = DiamondEvidence {
        factor_dim: stripped.factor.len(),
        series_dims,
        index,
        codim1_witness: None,
        structural: true,
    };
    if h.is_abelian() {
        return Ok(DiamondVerdict {
            holds: true,
            classification: DiamondClass::AbelianAfterStrip,
            stripped_dim: h.dim(),
            evidence,
        });
    }
    evidence.codim1_witness = has_codim1_abelian_ideal(h).map(|w| w.basis().to_vec());
    let l5 = h.dim() == 5 && evidence.series_dims == L5_SERIES;
    let l6 = h.dim() == 6 && evidence.series_dims == L6_SERIES;
    evidence.structural = evidence.codim1_witness.is_some() || l5 || l6;
    if evidence.structural != evidence.index.almost_maximal {
        return Err(Error::Internal(format!(
            "structural route says {} but the index route says {}: {evidence:?}",
            evidence.structural, evidence.index.almost_maximal
        )));
    }
    let classification = match &evidence.codim1_witness {
        Some(w) => DiamondClass::CodimOneAbelianIdeal(w.clone()),
        None if l5 => DiamondClass::TypeL5,
        None if l6 => DiamondClass::TypeL6,
        None => DiamondClass::NotDiamond,
    };
    Ok(DiamondVerdict {
        holds: classification != DiamondClass::NotDiamond,
        classification,
        stripped_dim: h.dim(),
        evidence,
    })
}

/// `g = kx + W` with `W` abelian and `f = ad x` restricted to `W` nilpotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codim1Decomposition {
    pub x: Vector,
    /// Matrix of `f` in the echelon basis of `W`, rows are images.
    pub f: Matrix,
    /// Jordan chains `v, f(v), ..., f^(s-1)(v)` in coordinates of `g`, longest first.
    pub chains: Vec<Vec<Vector>>,
    pub block_sizes: Vec<usize>,
    /// `g` in the basis `x` followed by the chains.
    pub normal_form: LieAlgebra,
}

pub fn decompose_codim1(g: &LieAlgebra, witness: &Subspace) -> Result<Codim1Decomposition> {
    check_codim1_witness(g, witness)?;
    let n = g.dim();
    let field = g.field();
    let x = (0..n)
        .map(|i| linalg::unit_vector(field, n, i))
        .find(|e| !witness.contains(e))
        .expect("a hyperplane misses some basis vector");
    let wb = witness.basis();
    let m = wb.len();
    let f: Matrix = wb
        .iter()
        .map(|w| witness.coordinates(&g.bracket(&x, w)).expect("W is an ideal"))
        .collect();
    let apply = |v: &[crate::CycloScalar]| linalg::vec_mat(field, v, &f);

    // kernels of f^j, j = 0..
    let mut kernels = vec![Subspace::zero(m)];
    let mut power = linalg::identity(field, m);
    while kernels.last().unwrap().dim() < m {
        power = linalg::mat_mul(field, &power, &f);
        let k = Subspace::span(m, &linalg::kernel(field, &linalg::transpose(&power), m));
        if k.dim() == kernels.last().unwrap().dim() {
            return Err(Error::Internal("ad x is not nilpotent on the ideal".into()));
        }
        kernels.push(k);
    }

    let mut tops: Vec<(Vector, usize)> = Vec::new();
    for j in (1..kernels.len()).rev() {
        let mut base = kernels[j - 1].clone();
        for (top, len) in &tops {
            let mut v = top.clone();
            for _ in 0..len - j {
                v = apply(&v);
            }
            base = base.sum(&Subspace::span(m, &[v]));
        }
        for u in kernels[j].basis() {
            if !base.contains(u) {
                base = base.sum(&Subspace::span(m, std::slice::from_ref(u)));
                tops.push((u.clone(), j));
            }
        }
    }

    let lift = |v: &[crate::CycloScalar]| linalg::combine(field, n, wb, v);
    let mut chains = Vec::new();
    for (top, len) in &tops {
        let mut chain = Vec::with_capacity(*len);
        let mut v = top.clone();
        for _ in 0..*len {
            chain.push(lift(&v));
            v = apply(&v);
        }
        chains.push(chain);
    }
    let block_sizes: Vec<usize> = tops.iter().map(|(_, l)| *l).collect();

    let mut basis = vec![x.clone()];
    basis.extend(chains.iter().flatten().cloned());
    let normal_form = g.subalgebra(&basis)?;
    // [x, c_t] = c_(t+1) along each chain, everything else zero
    let mut expected = crate::table::ProductTable::new(std::sync::Arc::clone(field), n);
    let mut pos = 1;
    for &s in &block_sizes {
        for t in 0..s - 1 {
            expected.add_term(0, pos + t, pos + t + 1, field.one())?;
            expected.add_term(pos + t, 0, pos + t + 1, field.from_int(-1))?;
        }
        pos += s;
    }
    if normal_form.table() != &expected {
        return Err(Error::Internal("chain basis does not reproduce the algebra".into()));
    }
    Ok(Codim1Decomposition { x, f, chains, block_sizes, normal_form })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{catalog, DEFAULT_SEED};

    fn units(g: &LieAlgebra, idx: &[usize]) -> Subspace {
        let vs: Vec<Vector> = idx.iter().map(|&i| linalg::unit_vector(g.field(), g.dim(), i)).collect();
        Subspace::span(g.dim(), &vs)
    }

    #[test]
    fn codim1_examples() {
        for n in 2..=8 {
            let g = catalog::filiform(n).unwrap();
            let w = has_codim1_abelian_ideal(&g).unwrap();
            assert_eq!(w, units(&g, &(1..n).collect::<Vec<_>>()), "filiform({n})");
        }
        assert!(has_codim1_abelian_ideal(&catalog::l6()).is_none());
        assert!(has_codim1_abelian_ideal(&catalog::l5()).is_none());
        assert!(has_codim1_abelian_ideal(&catalog::upper_triangular_nil(4).unwrap()).is_none());
        let ab = catalog::abelian(3);
        assert_eq!(has_codim1_abelian_ideal(&ab).unwrap().dim(), 2);
        let g2 = catalog::two_block(&[2, 2]).unwrap();
        assert_eq!(has_codim1_abelian_ideal(&g2).unwrap(), units(&g2, &[1, 2, 3, 4]));
    }

    #[test]
    fn strip_examples() {
        let g = catalog::l5().direct_sum(&catalog::abelian(1)).unwrap();
        let s = strip_central_abelian_factor(&g).unwrap();
        assert_eq!(s.factor.len(), 1);
        assert_eq!(s.reduced, catalog::l5());

        let s = strip_central_abelian_factor(&catalog::abelian(3)).unwrap();
        assert_eq!((s.factor.len(), s.reduced.dim()), (3, 0));

        let n4 = catalog::upper_triangular_nil(4).unwrap();
        let s = strip_central_abelian_factor(&n4).unwrap();
        assert_eq!(s.factor.len(), 0);
        assert_eq!(s.reduced, n4);
    }

    #[test]
    fn diamond_examples() {
        let v = diamond_check(&catalog::l5(), DEFAULT_SEED).unwrap();
        assert!(v.holds);
        assert_eq!(v.classification, DiamondClass::TypeL5);
        let v = diamond_check(&catalog::l6(), DEFAULT_SEED).unwrap();
        assert_eq!(v.classification, DiamondClass::TypeL6);
        for n in 3..=8 {
            let v = diamond_check(&catalog::filiform(n).unwrap(), DEFAULT_SEED).unwrap();
            assert!(matches!(v.classification, DiamondClass::CodimOneAbelianIdeal(_)), "filiform({n})");
        }
        let v = diamond_check(&catalog::upper_triangular_nil(4).unwrap(), DEFAULT_SEED).unwrap();
        assert!(!v.holds);
        assert_eq!(v.classification, DiamondClass::NotDiamond);
        let v = diamond_check(&catalog::two_block(&[2, 2]).unwrap(), DEFAULT_SEED).unwrap();
        assert!(v.holds);
        assert_eq!(v.evidence.index.index, 3);
        let v = diamond_check(&catalog::abelian(2), DEFAULT_SEED).unwrap();
        assert_eq!(v.classification, DiamondClass::AbelianAfterStrip);
        assert!(matches!(
            diamond_check(&catalog::affine_line(), DEFAULT_SEED),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn decomposition_examples() {
        let g = catalog::filiform(6).unwrap();
        let w = has_codim1_abelian_ideal(&g).unwrap();
        assert_eq!(decompose_codim1(&g, &w).unwrap().block_sizes, vec![5]);

        let ab = catalog::abelian(4);
        let w = has_codim1_abelian_ideal(&ab).unwrap();
        assert_eq!(decompose_codim1(&ab, &w).unwrap().block_sizes, vec![1, 1, 1]);

        let g2 = catalog::two_block(&[2, 2]).unwrap();
        let w = has_codim1_abelian_ideal(&g2).unwrap();
        assert_eq!(decompose_codim1(&g2, &w).unwrap().block_sizes, vec![2, 2]);

        let l5 = catalog::l5();
        assert!(matches!(
            decompose_codim1(&l5, &units(&l5, &[1, 2, 3, 4])),
            Err(Error::Precondition(_))
        ));
    }
}
