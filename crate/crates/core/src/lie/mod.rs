//! Ordinary Lie algebras given by structure constants: centers, derived
//! algebras, the index, codimension-one abelian ideals, central abelian
//! factors and the verdict on property (⋄).

pub mod catalog;
mod index;
mod structure;

use std::sync::Arc;

pub use index::{lie_index, IndexReport, DEFAULT_SEED};
pub use structure::{
    decompose_codim1, diamond_check, has_codim1_abelian_ideal, strip_central_abelian_factor, Codim1Decomposition,
    DiamondClass, DiamondEvidence, DiamondVerdict, StrippedAlgebra,
};

use crate::abgroup::GroupSpec;
use crate::color::{ColorAlgebra, ColorReport, SeriesProfile};
use crate::cyclo::{CycloField, CycloScalar};
use crate::error::{Error, Result};
use crate::linalg::{self, Subspace, Vector};
use crate::pairings::CommutationFactor;
use crate::table::ProductTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    table: ProductTable,
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity on all basis tuples.
    pub fn new(table: ProductTable) -> Result<Self> {
        let report = Self::check(&table)?;
        match report.violations.first() {
            None => Ok(Self { table }),
            Some(v) => Err(Error::InvalidStructure(v.to_string())),
        }
    }

    /// Full violation report for a candidate table.
    pub fn check(table: &ProductTable) -> Result<ColorReport> {
        trivially_colored(table.clone())?.validate()
    }

    pub fn field(&self) -> &Arc<CycloField> {
        self.table.field()
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn table(&self) -> &ProductTable {
        &self.table
    }

    pub fn bracket(&self, u: &[CycloScalar], v: &[CycloScalar]) -> Vector {
        self.table.product(u, v)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_zero()
    }

    /// The same algebra as a color algebra over the trivial group.
    pub fn as_color(&self) -> ColorAlgebra {
        trivially_colored(self.table.clone()).expect("trivial grading is always consistent")
    }

    pub fn central_series(&self) -> SeriesProfile {
        self.as_color().descending_central_series()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.central_series().is_nilpotent()
    }

    /// The even part of a color algebra whose commutation factor is trivial on
    /// pairs of even basis degrees, as an ordinary Lie algebra.
    pub fn from_color_even(l: &ColorAlgebra) -> Result<LieAlgebra> {
        let parts = l.parity_parts()?;
        for &i in &parts.even {
            for &j in &parts.even {
                if !l.eps(i, j).is_one() {
                    return Err(Error::Precondition(format!(
                        "eps(|e{}|, |e{}|) = {} on the even part",
                        i + 1,
                        j + 1,
                        l.eps(i, j)
                    )));
                }
            }
        }
        let pos = |k: usize| parts.even.iter().position(|&e| e == k);
        let mut table = ProductTable::new(Arc::clone(l.field()), parts.even.len());
        for (a, &i) in parts.even.iter().enumerate() {
            for (b, &j) in parts.even.iter().enumerate() {
                if let Some(s) = l.table().get(i, j) {
                    for (&k, c) in s {
                        let c_idx = pos(k).expect("even part is closed");
                        table.add_term(a, b, c_idx, c.clone())?;
                    }
                }
            }
        }
        LieAlgebra::new(table)
    }

    /// Span of all `[u, v]` with `u` in `a` and `v` in `b`.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut gens = Vec::new();
        for u in a.basis() {
            for v in b.basis() {
                let w = self.bracket(u, v);
                if !linalg::is_zero_vector(&w) {
                    gens.push(w);
                }
            }
        }
        Subspace::span(self.dim(), &gens)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.field(), self.dim())
    }

    /// `[g, g]`.
    pub fn derived(&self) -> Subspace {
        let full = self.full();
        self.bracket_span(&full, &full)
    }

    /// `{x : [x, s] = 0 for all s in S}`.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        let mut eqs = Vec::new();
        for v in s.basis() {
            let images: Vec<Vector> = (0..n)
                .map(|i| self.bracket(&linalg::unit_vector(self.field(), n, i), v))
                .collect();
            for k in 0..n {
                let row: Vector = images.iter().map(|w| w[k].clone()).collect();
                if !linalg::is_zero_vector(&row) {
                    eqs.push(row);
                }
            }
        }
        Subspace::span(n, &linalg::kernel(self.field(), &eqs, n))
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&self.full())
    }

    /// Structure constants on a closed subspace, in the given basis.
    pub fn subalgebra(&self, basis: &[Vector]) -> Result<LieAlgebra> {
        Ok(LieAlgebra { table: self.table.in_basis(basis)? })
    }

    /// `self x other` with the basis of `self` first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch { left: self.field().order(), right: other.field().order() });
        }
        let n = self.dim();
        let mut table = ProductTable::new(Arc::clone(self.field()), n + other.dim());
        for (shift, part) in [(0, &self.table), (n, &other.table)] {
            for (&(i, j), s) in part.entries() {
                for (&k, c) in s {
                    table.add_term(shift + i, shift + j, shift + k, c.clone())?;
                }
            }
        }
        Ok(LieAlgebra { table })
    }
}

fn trivially_colored(table: ProductTable) -> Result<ColorAlgebra> {
    let group = GroupSpec::trivial();
    let eps = CommutationFactor::trivial(group.clone(), Arc::clone(table.field()));
    let degrees = vec![group.zero(); table.dim()];
    ColorAlgebra::new(eps, degrees, table)
}
