//! Graded associative algebras, graded right modules and Lie color algebras
//! given by structure constants, with their cocycle twists.
//!
//! All axiom checks are exhaustive over basis pairs and triples; reports list
//! every violation with 1-based basis indices.

use std::fmt;
use std::sync::Arc;

use crate::abgroup::{GroupElement, GroupSpec};
use crate::cyclo::{CycloField, CycloScalar};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::pairings::{scheunert_sigma, Cocycle, CommutationFactor};
use crate::table::ProductTable;

fn check_degrees(group: &GroupSpec, degrees: &[GroupElement], dim: usize, what: &str) -> Result<()> {
    if degrees.len() != dim {
        return Err(Error::InvalidStructure(format!(
            "{what} has dimension {dim} but {} degrees",
            degrees.len()
        )));
    }
    if let Some((i, d)) = degrees.iter().enumerate().find(|(_, d)| !group.contains(d)) {
        return Err(Error::GroupMismatch(format!("degree {d} of basis element {} is not in {group}", i + 1)));
    }
    Ok(())
}

fn check_same_group(a: &GroupSpec, b: &GroupSpec) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::GroupMismatch(format!("cocycle on {b} applied to data graded by {a}")))
    }
}

/// Table of `s(d_i, d_j)` over all pairs of basis degrees.
fn pairing_table(
    sigma: &Cocycle,
    left: &[GroupElement],
    right: &[GroupElement],
) -> Result<Vec<Vec<CycloScalar>>> {
    left.iter()
        .map(|a| right.iter().map(|b| sigma.eval(a, b)).collect())
        .collect()
}

// ---------------------------------------------------------------------------
// Graded associative algebras

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraViolation {
    Grading { i: usize, j: usize, k: usize },
    Associativity { i: usize, j: usize, k: usize },
    Unit { i: usize },
}

impl fmt::Display for AlgebraViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Grading { i, j, k } => {
                write!(f, "grading: e{}*e{} has a component on e{} of the wrong degree", i + 1, j + 1, k + 1)
            }
            Self::Associativity { i, j, k } => {
                write!(f, "associativity fails on (e{}, e{}, e{})", i + 1, j + 1, k + 1)
            }
            Self::Unit { i } => write!(f, "the designated unit does not act trivially on e{}", i + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraReport {
    pub violations: Vec<AlgebraViolation>,
}

impl AlgebraReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlgebra {
    group: GroupSpec,
    degrees: Vec<GroupElement>,
    table: ProductTable,
    unit: Option<Vector>,
}

impl GradedAlgebra {
    pub fn new(
        group: GroupSpec,
        degrees: Vec<GroupElement>,
        table: ProductTable,
        unit: Option<Vector>,
    ) -> Result<Self> {
        check_degrees(&group, &degrees, table.dim(), "algebra")?;
        if unit.as_ref().is_some_and(|u| u.len() != table.dim()) {
            return Err(Error::InvalidStructure("unit vector has the wrong length".into()));
        }
        Ok(Self { group, degrees, table, unit })
    }

    /// The group algebra `k[G]` of a finite group, basis ordered like [`GroupSpec::elements`].
    pub fn group_algebra(group: &GroupSpec, field: &Arc<CycloField>) -> Result<Self> {
        let elems = group
            .elements()
            .ok_or_else(|| Error::Precondition("group algebra of an infinite group".into()))?;
        let index = |g: &GroupElement| elems.iter().position(|x| x == g).expect("closed under addition");
        let mut table = ProductTable::new(Arc::clone(field), elems.len());
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                table.add_term(i, j, index(&group.add(a, b)?), field.one())?;
            }
        }
        let unit = linalg::unit_vector(field, elems.len(), index(&group.zero()));
        Self::new(group.clone(), elems, table, Some(unit))
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn field(&self) -> &Arc<CycloField> {
        self.table.field()
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn table(&self) -> &ProductTable {
        &self.table
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn product(&self, u: &[CycloScalar], v: &[CycloScalar]) -> Vector {
        self.table.product(u, v)
    }

    pub fn validate(&self) -> Result<AlgebraReport> {
        let n = self.dim();
        let mut violations = Vec::new();
        for (&(i, j), s) in self.table.entries() {
            let d = self.group.add(&self.degrees[i], &self.degrees[j])?;
            for &k in s.keys() {
                if self.degrees[k] != d {
                    violations.push(AlgebraViolation::Grading { i, j, k });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.table.basis_product(i, j);
                for k in 0..n {
                    let left = self.table.product_with_basis(&ij, k);
                    let jk = self.table.basis_product(j, k);
                    let right = self.product(&linalg::unit_vector(self.field(), n, i), &jk);
                    if left != right {
                        violations.push(AlgebraViolation::Associativity { i, j, k });
                    }
                }
            }
        }
        if let Some(u) = &self.unit {
            for i in 0..n {
                let e = linalg::unit_vector(self.field(), n, i);
                if self.product(u, &e) != e || self.product(&e, u) != e {
                    violations.push(AlgebraViolation::Unit { i });
                }
            }
        }
        Ok(AlgebraReport { violations })
    }

    /// `a *_s b = s(|a|,|b|) ab`.
    pub fn twist(&self, sigma: &Cocycle) -> Result<GradedAlgebra> {
        check_same_group(&self.group, sigma.group())?;
        let s = pairing_table(sigma, &self.degrees, &self.degrees)?;
        let table = self.table.scaled(|i, j| Ok(s[i][j].clone()))?;
        Ok(GradedAlgebra { table, ..self.clone() })
    }
}

// ---------------------------------------------------------------------------
// Graded right modules

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleViolation {
    Grading { a: usize, i: usize, k: usize },
    Action { a: usize, b: usize },
    Unit,
}

impl fmt::Display for ModuleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Grading { a, i, k } => {
                write!(f, "grading: m{}.e{} has a component on m{} of the wrong degree", i + 1, a + 1, k + 1)
            }
            Self::Action { a, b } => write!(f, "(m.e{0}).e{1} != m.(e{0} e{1})", a + 1, b + 1),
            Self::Unit => write!(f, "the unit does not act as the identity"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModuleReport {
    pub violations: Vec<ModuleViolation>,
}

impl ModuleReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A finite-dimensional graded right module. `action[a]` is the matrix `R_a`
/// with `m_i . e_a = sum_k R_a[i][k] m_k`, so the module axiom reads
/// `R_a R_b = R_(e_a e_b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedModule {
    algebra: GradedAlgebra,
    degrees: Vec<GroupElement>,
    action: Vec<Matrix>,
}

impl GradedModule {
    pub fn new(algebra: GradedAlgebra, degrees: Vec<GroupElement>, action: Vec<Matrix>) -> Result<Self> {
        let p = degrees.len();
        check_degrees(algebra.group(), &degrees, p, "module")?;
        if action.len() != algebra.dim() || action.iter().any(|m| m.len() != p || m.iter().any(|r| r.len() != p)) {
            return Err(Error::InvalidStructure(format!(
                "module needs {} action matrices of size {p}x{p}",
                algebra.dim()
            )));
        }
        Ok(Self { algebra, degrees, action })
    }

    /// `A` as a right module over itself.
    pub fn right_regular(algebra: &GradedAlgebra) -> Result<Self> {
        let n = algebra.dim();
        let action = (0..n)
            .map(|a| (0..n).map(|i| algebra.table().basis_product(i, a)).collect())
            .collect();
        Self::new(algebra.clone(), algebra.degrees().to_vec(), action)
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn validate(&self) -> Result<ModuleReport> {
        let g = self.algebra.group();
        let field = self.algebra.field();
        let mut violations = Vec::new();
        for (a, r) in self.action.iter().enumerate() {
            for (i, row) in r.iter().enumerate() {
                let d = g.add(&self.degrees[i], &self.algebra.degrees()[a])?;
                for (k, x) in row.iter().enumerate() {
                    if !x.is_zero() && self.degrees[k] != d {
                        violations.push(ModuleViolation::Grading { a, i, k });
                    }
                }
            }
        }
        let n = self.algebra.dim();
        let p = self.dim();
        for a in 0..n {
            for b in 0..n {
                let lhs = linalg::mat_mul(field, &self.action[a], &self.action[b]);
                let ab = self.algebra.table().basis_product(a, b);
                let rhs = self.acting_matrix(&ab);
                if lhs != rhs {
                    violations.push(ModuleViolation::Action { a, b });
                }
            }
        }
        if let Some(u) = self.algebra.unit() {
            if self.acting_matrix(u) != linalg::identity(field, p) {
                violations.push(ModuleViolation::Unit);
            }
        }
        Ok(ModuleReport { violations })
    }

    /// Matrix of the action of an arbitrary algebra element.
    pub fn acting_matrix(&self, x: &[CycloScalar]) -> Matrix {
        let field = self.algebra.field();
        let p = self.dim();
        let mut out = vec![linalg::zero_vector(field, p); p];
        for (c, r) in x.iter().zip(&self.action) {
            if c.is_zero() {
                continue;
            }
            for (orow, rrow) in out.iter_mut().zip(r) {
                for (o, y) in orow.iter_mut().zip(rrow) {
                    if !y.is_zero() {
                        *o = &*o + &(c * y);
                    }
                }
            }
        }
        out
    }

    /// The twisted module over `A^s`: `m *_s a = s(|m|, |a|) m a`.
    pub fn twist(&self, sigma: &Cocycle) -> Result<GradedModule> {
        check_same_group(self.algebra.group(), sigma.group())?;
        let s = pairing_table(sigma, &self.degrees, self.algebra.degrees())?;
        let action = self
            .action
            .iter()
            .enumerate()
            .map(|(a, r)| {
                r.iter()
                    .enumerate()
                    .map(|(i, row)| row.iter().map(|x| x * &s[i][a]).collect())
                    .collect()
            })
            .collect();
        Ok(GradedModule {
            algebra: self.algebra.twist(sigma)?,
            degrees: self.degrees.clone(),
            action,
        })
    }

    /// The suspension `M(g)` with `M(g)_h = M_(g+h)`: every degree shifts by `-g`.
    pub fn suspend(&self, g: &GroupElement) -> Result<GradedModule> {
        let group = self.algebra.group();
        let degrees = self
            .degrees
            .iter()
            .map(|d| group.sub(d, g))
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedModule { degrees, ..self.clone() })
    }

    /// Whether the diagonal map `m_i -> c_i m_i` is a degree-preserving module
    /// isomorphism from `self` onto `other` (same algebra required).
    pub fn is_diagonal_isomorphism(&self, other: &GradedModule, diag: &[CycloScalar]) -> bool {
        if self.algebra != other.algebra || self.degrees != other.degrees || diag.len() != self.dim() {
            return false;
        }
        if diag.iter().any(CycloScalar::is_zero) {
            return false;
        }
        self.action.iter().zip(&other.action).all(|(r1, r2)| {
            r1.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(k, x)| &(x * &diag[k]) == &(&diag[i] * &r2[i][k]))
            })
        })
    }

    /// Diagonal isomorphism `twist(suspend(M, g)) -> suspend(twist(M), g)`,
    /// `m_i -> s(g, |m_i|) m_i`, for a bicharacter cocycle `s`.
    pub fn suspension_twist_intertwiner(&self, sigma: &Cocycle, g: &GroupElement) -> Result<Vector> {
        self.degrees.iter().map(|d| sigma.eval(g, d)).collect()
    }
}

// ---------------------------------------------------------------------------
// Lie color algebras

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColorViolation {
    Grading { i: usize, j: usize, k: usize },
    Skew { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
}

impl fmt::Display for ColorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Grading { i, j, k } => write!(
                f,
                "grading: [e{}, e{}] has a component on e{} of the wrong degree",
                i + 1,
                j + 1,
                k + 1
            ),
            Self::Skew { i, j } => write!(f, "color skew symmetry fails on (e{}, e{})", i + 1, j + 1),
            Self::Jacobi { i, j, k } => {
                write!(f, "color Jacobi identity fails on (e{}, e{}, e{})", i + 1, j + 1, k + 1)
            }
        }
    }
}

impl ColorViolation {
    /// 1-based witness indices.
    pub fn witness(&self) -> Vec<usize> {
        match *self {
            Self::Grading { i, j, k } | Self::Jacobi { i, j, k } => vec![i + 1, j + 1, k + 1],
            Self::Skew { i, j } => vec![i + 1, j + 1],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColorReport {
    pub violations: Vec<ColorViolation>,
}

impl ColorReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorAlgebra {
    epsilon: CommutationFactor,
    degrees: Vec<GroupElement>,
    table: ProductTable,
    eps_cache: Vec<Vec<CycloScalar>>,
}

/// Dimensions of `C^0(L) ⊇ C^1(L) ⊇ ...` with `C^(n+1) = [C^n, L]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesProfile {
    pub dims: Vec<usize>,
    pub terms: Vec<Subspace>,
}

impl SeriesProfile {
    pub fn is_nilpotent(&self) -> bool {
        self.dims.last() == Some(&0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityParts {
    pub even: Vec<usize>,
    pub odd: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Superization {
    pub sigma: Cocycle,
    pub algebra: ColorAlgebra,
}

impl ColorAlgebra {
    /// Checks only structural consistency; the axioms are checked by [`Self::validate`].
    pub fn new(epsilon: CommutationFactor, degrees: Vec<GroupElement>, table: ProductTable) -> Result<Self> {
        check_degrees(epsilon.group(), &degrees, table.dim(), "color algebra")?;
        if epsilon.as_bicharacter().field() != table.field() {
            return Err(Error::FieldMismatch {
                left: epsilon.as_bicharacter().field().order(),
                right: table.field().order(),
            });
        }
        let eps_cache = degrees
            .iter()
            .map(|a| degrees.iter().map(|b| epsilon.eval(a, b)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Ok(Self { epsilon, degrees, table, eps_cache })
    }

    pub fn group(&self) -> &GroupSpec {
        self.epsilon.group()
    }

    pub fn epsilon(&self) -> &CommutationFactor {
        &self.epsilon
    }

    pub fn field(&self) -> &Arc<CycloField> {
        self.table.field()
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn table(&self) -> &ProductTable {
        &self.table
    }

    /// `eps(|e_i|, |e_j|)`.
    pub fn eps(&self, i: usize, j: usize) -> &CycloScalar {
        &self.eps_cache[i][j]
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.eps_cache[i][i].is_minus_one()
    }

    pub fn bracket(&self, u: &[CycloScalar], v: &[CycloScalar]) -> Vector {
        self.table.product(u, v)
    }

    pub fn validate(&self) -> Result<ColorReport> {
        let n = self.dim();
        let group = self.group();
        let mut violations = Vec::new();
        for (&(i, j), s) in self.table.entries() {
            let d = group.add(&self.degrees[i], &self.degrees[j])?;
            for &k in s.keys() {
                if self.degrees[k] != d {
                    violations.push(ColorViolation::Grading { i, j, k });
                }
            }
        }
        // symmetric in (i, j), so pairs with i >= j suffice
        for i in 0..n {
            for j in 0..=i {
                let lhs = self.table.basis_product(i, j);
                let ji = self.table.basis_product(j, i);
                let e = self.eps(i, j);
                let rhs: Vector = ji.iter().map(|x| -&(e * x)).collect();
                if lhs != rhs {
                    violations.push(ColorViolation::Skew { i, j });
                }
            }
        }
        let field = self.field();
        let basis: Vec<Vector> = (0..n).map(|i| linalg::unit_vector(field, n, i)).collect();
        for i in 0..n {
            for j in 0..n {
                let ij = self.table.basis_product(i, j);
                for k in 0..n {
                    let left = self.table.product_with_basis(&ij, k);
                    let jk = self.table.basis_product(j, k);
                    let ik = self.table.basis_product(i, k);
                    let a = self.bracket(&basis[i], &jk);
                    let b = self.bracket(&basis[j], &ik);
                    let e = self.eps(i, j);
                    let right: Vector = a.iter().zip(&b).map(|(x, y)| x - &(e * y)).collect();
                    if left != right {
                        violations.push(ColorViolation::Jacobi { i, j, k });
                    }
                }
            }
        }
        Ok(ColorReport { violations })
    }

    /// `[x,y]^s = s(|x|,|y|)[x,y]`, with commutation factor `eps * delta(s)`.
    pub fn twist(&self, sigma: &Cocycle) -> Result<ColorAlgebra> {
        check_same_group(self.group(), sigma.group())?;
        let s = pairing_table(sigma, &self.degrees, &self.degrees)?;
        let table = self.table.scaled(|i, j| Ok(s[i][j].clone()))?;
        let epsilon = self.epsilon.mul(&sigma.delta())?;
        ColorAlgebra::new(epsilon, self.degrees.clone(), table)
    }

    pub fn descending_central_series(&self) -> SeriesProfile {
        let n = self.dim();
        let field = self.field();
        let mut current = Subspace::full(field, n);
        let mut dims = vec![n];
        let mut terms = vec![current.clone()];
        while current.dim() > 0 {
            let mut gens = Vec::new();
            for v in current.basis() {
                for j in 0..n {
                    let w = self.table.product_with_basis(v, j);
                    if !linalg::is_zero_vector(&w) {
                        gens.push(w);
                    }
                }
            }
            let next = Subspace::span(n, &gens);
            let stable = next.dim() == current.dim();
            dims.push(next.dim());
            terms.push(next.clone());
            if stable {
                break;
            }
            current = next;
        }
        SeriesProfile { dims, terms }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.descending_central_series().is_nilpotent()
    }

    /// Splits the basis by parity and checks that the even part is a subalgebra.
    pub fn parity_parts(&self) -> Result<ParityParts> {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for (i, d) in self.degrees.iter().enumerate() {
            if self.epsilon.is_even(d)? {
                even.push(i);
            } else {
                odd.push(i);
            }
        }
        for &i in &even {
            for &j in &even {
                if let Some(s) = self.table.get(i, j) {
                    if let Some(&k) = s.keys().find(|k| odd.contains(k)) {
                        return Err(Error::InvariantViolation(format!(
                            "[e{}, e{}] has a component on the odd element e{}",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(ParityParts { even, odd })
    }

    /// Twists by the superizing cocycle, producing a Lie superalgebra with the
    /// same underlying space whose even part is `L+`.
    pub fn superize(&self) -> Result<Superization> {
        let sigma = scheunert_sigma(&self.epsilon)?;
        let algebra = self.twist(&sigma)?;
        if algebra.epsilon != self.epsilon.epsilon0() {
            return Err(Error::Internal("superized factor differs from eps0".into()));
        }
        let before = self.descending_central_series();
        if before.is_nilpotent() {
            let after = algebra.descending_central_series();
            if after.dims != before.dims {
                return Err(Error::Internal(format!(
                    "twisting changed the central series: {:?} -> {:?}",
                    before.dims, after.dims
                )));
            }
        }
        Ok(Superization { sigma, algebra })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::pairings::Bicharacter;

    fn z2() -> GroupSpec {
        GroupSpec::new(0, vec![2]).unwrap()
    }

    #[test]
    fn color_heisenberg_valid_and_mutant_fails() {
        let h = corpus::color_heisenberg();
        assert!(h.validate().unwrap().is_ok());
        let bad = corpus::color_heisenberg_wrong_sign();
        let rep = bad.validate().unwrap();
        assert!(rep.violations.contains(&ColorViolation::Skew { i: 1, j: 0 }));
        assert_eq!(rep.violations[0].witness(), vec![2, 1]);
    }

    #[test]
    fn twist_heisenberg_to_ordinary() {
        let h = corpus::color_heisenberg();
        let sup = h.superize().unwrap();
        let f = h.field();
        assert_eq!(sup.algebra.table().basis_product(0, 1), vec![f.zero(), f.zero(), f.one()]);
        assert_eq!(sup.algebra.table().basis_product(1, 0), vec![f.zero(), f.zero(), f.from_int(-1)]);
        for i in 0..3 {
            for j in 0..3 {
                assert!(sup.algebra.eps(i, j).is_one());
            }
        }
        let back = sup.algebra.twist(&sup.sigma.inverse()).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn trivial_twist_is_identity() {
        let h = corpus::color_heisenberg();
        let one = Cocycle::trivial(h.group().clone(), Arc::clone(h.field()));
        assert_eq!(h.twist(&one).unwrap(), h);
    }

    #[test]
    fn central_series_examples() {
        let l5 = corpus::as_color(&crate::lie::catalog::l5());
        assert_eq!(l5.descending_central_series().dims, vec![5, 3, 2, 0]);
        let l6 = corpus::as_color(&crate::lie::catalog::l6());
        assert_eq!(l6.descending_central_series().dims, vec![6, 3, 0]);
        let ab = corpus::as_color(&crate::lie::catalog::abelian(4));
        assert_eq!(ab.descending_central_series().dims, vec![4, 0]);
        let nonnil = corpus::as_color(&crate::lie::catalog::affine_line());
        let s = nonnil.descending_central_series();
        assert_eq!(s.dims, vec![2, 1, 1]);
        assert!(!s.is_nilpotent());
    }

    #[test]
    fn parity_examples() {
        let l5 = corpus::as_color(&crate::lie::catalog::l5());
        assert_eq!(l5.parity_parts().unwrap().odd, Vec::<usize>::new());
        let s = corpus::super_odd_square();
        let p = s.parity_parts().unwrap();
        assert_eq!((p.even, p.odd), (vec![1], vec![0]));
        let d = corpus::diagonal_z2z2_triple();
        let p = d.parity_parts().unwrap();
        assert_eq!((p.even, p.odd), (vec![2], vec![0, 1]));
    }

    #[test]
    fn superize_super_is_identity() {
        let s = corpus::super_odd_square();
        let sup = s.superize().unwrap();
        assert!(sup.sigma.is_trivial());
        assert_eq!(sup.algebra, s);
    }

    #[test]
    fn group_algebra_twist() {
        let f = CycloField::new(2).unwrap();
        let g = z2();
        let a = GradedAlgebra::group_algebra(&g, &f).unwrap();
        assert!(a.validate().unwrap().is_ok());
        let sigma = Cocycle::new(Bicharacter::new(g.clone(), Arc::clone(&f), vec![vec![f.from_int(-1)]]).unwrap());
        let t = a.twist(&sigma).unwrap();
        assert_eq!(t.table().basis_product(1, 1), vec![f.from_int(-1), f.zero()]);
        assert!(t.validate().unwrap().is_ok());
        assert_eq!(t.twist(&sigma.inverse()).unwrap(), a);

        let m = GradedModule::right_regular(&a).unwrap();
        assert!(m.validate().unwrap().is_ok());
        let mt = m.twist(&sigma).unwrap();
        assert!(mt.validate().unwrap().is_ok());
        // u1 acting on the odd basis vector picks up s(1,1) = -1
        assert_eq!(mt.action()[1][1][0], f.from_int(-1));
        assert_eq!(mt.action()[1][0][1], f.one());
        assert_eq!(mt.twist(&sigma.inverse()).unwrap(), m);
    }

    #[test]
    fn suspension_shifts_degrees() {
        let f = CycloField::new(2).unwrap();
        let g = GroupSpec::free(1);
        let mut t = ProductTable::new(Arc::clone(&f), 1);
        t.add_term(0, 0, 0, f.one()).unwrap();
        let a = GradedAlgebra::new(g.clone(), vec![g.zero()], t, None).unwrap();
        let one = linalg::identity(&f, 2);
        let m = GradedModule::new(a, vec![g.zero(), g.generator(0)], vec![one]).unwrap();
        let s = m.suspend(&g.generator(0)).unwrap();
        let shifted: Vec<i64> = s.degrees().iter().map(|d| d.coords()[0]).collect();
        assert_eq!(shifted, vec![-1, 0]);
        assert_eq!(m.suspend(&g.zero()).unwrap(), m);
        assert_eq!(s.suspend(&g.neg(&g.generator(0)).unwrap()).unwrap(), m);
    }
}
