//! Group gradings given by an adapted basis and a degree for each basis
//! vector: validation, standard gradings, induced gradings, coarsenings and
//! graded isomorphisms.

use std::collections::BTreeMap;
use std::fmt;

use crate::abgroup::{GroupElement, GroupHom, GroupSpec};
use crate::error::{Error, Result};
use crate::lie::{catalog, LieAlgebra};
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::table::ProductTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    table: ProductTable,
    group: GroupSpec,
    degrees: Vec<GroupElement>,
    /// Row `i` is adapted basis vector `i` in stored coordinates.
    base_change: Option<Matrix>,
    /// Inverse of `base_change`, cached.
    inverse: Option<Matrix>,
}

impl Grading {
    pub fn new(
        table: ProductTable,
        group: GroupSpec,
        degrees: Vec<GroupElement>,
        base_change: Option<Matrix>,
    ) -> Result<Self> {
        let n = table.dim();
        if degrees.len() != n {
            return Err(Error::InvalidStructure(format!("grading of a {n}-dimensional algebra has {} degrees", degrees.len())));
        }
        if let Some((i, d)) = degrees.iter().enumerate().find(|(_, d)| !group.contains(d)) {
            return Err(Error::GroupMismatch(format!("degree {d} of e{} is not in {group}", i + 1)));
        }
        let inverse = match &base_change {
            Some(p) => {
                if p.len() != n || p.iter().any(|r| r.len() != n) {
                    return Err(Error::InvalidStructure(format!("base change must be {n}x{n}")));
                }
                Some(linalg::inverse(table.field(), p).map_err(|_| {
                    Error::InvalidStructure("base change is singular".into())
                })?)
            }
            None => None,
        };
        Ok(Self { table, group, degrees, base_change, inverse })
    }

    pub fn on_lie(l: &LieAlgebra, group: GroupSpec, degrees: Vec<GroupElement>) -> Result<Self> {
        Self::new(l.table().clone(), group, degrees, None)
    }

    pub fn table(&self) -> &ProductTable {
        &self.table
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn base_change(&self) -> Option<&Matrix> {
        self.base_change.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    /// Adapted basis vectors in stored coordinates.
    pub fn adapted_basis(&self) -> Matrix {
        match &self.base_change {
            Some(p) => p.clone(),
            None => linalg::identity(self.table.field(), self.dim()),
        }
    }

    fn to_adapted(&self, v: &[crate::CycloScalar]) -> Vector {
        match &self.inverse {
            Some(inv) => linalg::vec_mat(self.table.field(), v, inv),
            None => v.to_vec(),
        }
    }

    /// Basis indices grouped by degree.
    pub fn classes(&self) -> BTreeMap<GroupElement, Vec<usize>> {
        let mut out: BTreeMap<GroupElement, Vec<usize>> = BTreeMap::new();
        for (i, d) in self.degrees.iter().enumerate() {
            out.entry(d.clone()).or_default().push(i);
        }
        out
    }

    /// The homogeneous component of degree `g`.
    pub fn component(&self, g: &GroupElement) -> Subspace {
        let basis = self.adapted_basis();
        let vs: Vec<Vector> = self
            .degrees
            .iter()
            .zip(basis)
            .filter(|(d, _)| *d == g)
            .map(|(_, v)| v)
            .collect();
        Subspace::span(self.dim(), &vs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub expected: GroupElement,
    pub found: GroupElement,
}

impl fmt::Display for GradingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[b{}, b{}] has a component on b{} of degree {} instead of {}",
            self.i + 1,
            self.j + 1,
            self.k + 1,
            self.found,
            self.expected
        )
    }
}

impl GradingViolation {
    pub fn witness(&self) -> Vec<usize> {
        vec![self.i + 1, self.j + 1, self.k + 1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradingReport {
    pub violations: Vec<GradingViolation>,
}

impl GradingReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_grading(g: &Grading) -> Result<GradingReport> {
    let basis = g.adapted_basis();
    let n = g.dim();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let p = g.to_adapted(&g.table.product(&basis[i], &basis[j]));
            let expected = g.group.add(&g.degrees[i], &g.degrees[j])?;
            for (k, c) in p.iter().enumerate() {
                if !c.is_zero() && g.degrees[k] != expected {
                    violations.push(GradingViolation { i, j, k, expected: expected.clone(), found: g.degrees[k].clone() });
                }
            }
        }
    }
    Ok(GradingReport { violations })
}

fn z_elems(g: &GroupSpec, rows: &[Vec<i64>]) -> Result<Vec<GroupElement>> {
    rows.iter().map(|r| g.element(r.clone())).collect()
}

/// `e1 = (1,0), e2 = (0,1), e3 = (1,1), e4 = (2,1), e5 = (1,2)`.
pub fn standard_l5() -> Grading {
    let g = GroupSpec::free(2);
    let d = z_elems(&g, &[vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1], vec![1, 2]]).expect("rank 2");
    Grading::on_lie(&catalog::l5(), g, d).expect("consistent")
}

/// The assignment with `e1` and `e2` both in degree `(0,1)`; not a grading.
pub fn literal_l5_assignment() -> Grading {
    let g = GroupSpec::free(2);
    let d = z_elems(&g, &[vec![0, 1], vec![0, 1], vec![1, 1], vec![2, 1], vec![1, 2]]).expect("rank 2");
    Grading::on_lie(&catalog::l5(), g, d).expect("consistent")
}

pub fn standard_l6() -> Grading {
    let g = GroupSpec::free(3);
    let d = z_elems(
        &g,
        &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 0]],
    )
    .expect("rank 3");
    Grading::on_lie(&catalog::l6(), g, d).expect("consistent")
}

/// `e1 = (1,0)` and `e_s = (s-2, 1)` for `s >= 2`.
pub fn standard_filiform(n: usize) -> Result<Grading> {
    let l = catalog::filiform(n)?;
    let g = GroupSpec::free(2);
    let mut rows = vec![vec![1, 0]];
    rows.extend((2..=n as i64).map(|s| vec![s - 2, 1]));
    Grading::on_lie(&l, g.clone(), z_elems(&g, &rows)?)
}

/// `L5`, `L6` or `filiform(n)`.
pub fn standard_grading(name: &str) -> Result<Grading> {
    let lower = name.trim().to_ascii_lowercase();
    match lower.as_str() {
        "l5" => Ok(standard_l5()),
        "l6" => Ok(standard_l6()),
        _ => {
            let n = lower
                .strip_prefix("filiform(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|a| a.trim().parse().ok())
                .ok_or_else(|| Error::Parse(format!("no standard grading named {name:?}")))?;
            standard_filiform(n)
        }
    }
}

pub fn induce_grading(g: &Grading, alpha: &GroupHom) -> Result<Grading> {
    if alpha.source() != &g.group {
        return Err(Error::GroupMismatch(format!(
            "homomorphism from {} applied to a grading by {}",
            alpha.source(),
            g.group
        )));
    }
    let degrees = g.degrees.iter().map(|d| alpha.apply(d)).collect::<Result<Vec<_>>>()?;
    Ok(Grading { group: alpha.target().clone(), degrees, ..g.clone() })
}

/// Whether `coarse` is a coarsening of `fine`: every class of `fine` lies in a class of `coarse`.
pub fn is_coarsening(coarse: &Grading, fine: &Grading) -> Result<bool> {
    if coarse.table != fine.table || coarse.adapted_basis() != fine.adapted_basis() {
        return Err(Error::InvalidStructure("gradings are not adapted to the same basis of the same algebra".into()));
    }
    Ok(fine.classes().values().all(|class| {
        class.iter().all(|&i| coarse.degrees[i] == coarse.degrees[class[0]])
    }))
}

/// Whether `phi` (row `i` = image of stored basis vector `i`) is an
/// automorphism mapping each component of `gamma` onto the component of
/// `gamma2` of the same degree.
pub fn verify_grading_isomorphism(phi: &Matrix, gamma: &Grading, gamma2: &Grading) -> Result<bool> {
    let n = gamma.dim();
    let field = gamma.table.field();
    if gamma.table != gamma2.table || gamma.group != gamma2.group {
        return Err(Error::InvalidStructure("gradings live on different algebras or groups".into()));
    }
    if phi.len() != n || phi.iter().any(|r| r.len() != n) {
        return Err(Error::Precondition(format!("map must be {n}x{n}")));
    }
    linalg::inverse(field, phi).map_err(|_| Error::Precondition("map is singular".into()))?;
    let apply = |v: &[crate::CycloScalar]| linalg::vec_mat(field, v, phi);
    for i in 0..n {
        for j in 0..n {
            let lhs = apply(&gamma.table.basis_product(i, j));
            let rhs = gamma.table.product(&phi[i], &phi[j]);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    let mut degrees: Vec<&GroupElement> = gamma.degrees.iter().chain(&gamma2.degrees).collect();
    degrees.sort();
    degrees.dedup();
    for g in degrees {
        let src = gamma.component(g);
        let dst = gamma2.component(g);
        if src.dim() != dst.dim() || !src.basis().iter().all(|v| dst.contains(&apply(v))) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degs(g: &Grading) -> Vec<Vec<i64>> {
        g.degrees().iter().map(|d| d.coords().to_vec()).collect()
    }

    #[test]
    fn standard_gradings_validate() {
        assert!(validate_grading(&standard_l5()).unwrap().is_ok());
        assert!(validate_grading(&standard_l6()).unwrap().is_ok());
        for n in 2..=10 {
            assert!(validate_grading(&standard_filiform(n).unwrap()).unwrap().is_ok(), "filiform({n})");
        }
        assert_eq!(degs(&standard_filiform(4).unwrap()), vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]]);
    }

    #[test]
    fn literal_l5_fails() {
        let r = validate_grading(&literal_l5_assignment()).unwrap();
        assert_eq!(r.violations[0].witness(), vec![1, 2, 3]);
        assert_eq!(r.violations[0].expected.coords(), &[0, 2]);
    }

    #[test]
    fn induced_examples() {
        let l5 = standard_l5();
        let z = GroupSpec::free(1);
        let sum = GroupHom::from_rows(GroupSpec::free(2), z.clone(), vec![vec![1], vec![1]]).unwrap();
        let ind = induce_grading(&l5, &sum).unwrap();
        assert_eq!(degs(&ind), vec![vec![1], vec![1], vec![2], vec![3], vec![3]]);
        assert!(validate_grading(&ind).unwrap().is_ok());
        assert!(is_coarsening(&ind, &l5).unwrap());
        assert!(!is_coarsening(&l5, &ind).unwrap());
        let id = GroupHom::identity(l5.group());
        assert_eq!(induce_grading(&l5, &id).unwrap(), l5);

        let fil = standard_filiform(5).unwrap();
        let second = GroupHom::from_rows(GroupSpec::free(2), z, vec![vec![0], vec![1]]).unwrap();
        assert_eq!(
            degs(&induce_grading(&fil, &second).unwrap()),
            vec![vec![0], vec![1], vec![1], vec![1], vec![1]]
        );
    }

    #[test]
    fn isomorphism_examples() {
        let g = standard_filiform(3).unwrap();
        let f = g.table().field().clone();
        let m = |rows: &[[i64; 3]]| -> Matrix { rows.iter().map(|r| r.iter().map(|&c| f.from_int(c)).collect()).collect() };
        assert!(verify_grading_isomorphism(&m(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]), &g, &g).unwrap());
        assert!(!verify_grading_isomorphism(&m(&[[1, 0, 0], [0, 1, 1], [0, 0, 1]]), &g, &g).unwrap());
        assert!(verify_grading_isomorphism(&m(&[[2, 0, 0], [0, 1, 0], [0, 0, 2]]), &g, &g).unwrap());
        assert!(verify_grading_isomorphism(&m(&[[1, 0, 0], [0, 0, 0], [0, 0, 1]]), &g, &g).is_err());
    }

    #[test]
    fn base_change_grading() {
        // adapted basis 2e1, e2, 2e3 with the standard degrees
        let l = catalog::filiform(3).unwrap();
        let f = l.field().clone();
        let p: Matrix = [[2, 0, 0], [0, 1, 0], [0, 0, 2]]
            .iter()
            .map(|r| r.iter().map(|&c| f.from_int(c)).collect())
            .collect();
        let std = standard_filiform(3).unwrap();
        let g = Grading::new(l.table().clone(), std.group().clone(), std.degrees().to_vec(), Some(p)).unwrap();
        assert!(validate_grading(&g).unwrap().is_ok());
        let singular = vec![vec![f.zero(); 3]; 3];
        assert!(Grading::new(l.table().clone(), std.group().clone(), std.degrees().to_vec(), Some(singular)).is_err());
    }
}
