//! Sparse bilinear product tables `e_i * e_j = sum_k c_ij^k e_k`, shared by
//! graded associative algebras, Lie color algebras and ordinary Lie algebras.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cyclo::{CycloField, CycloScalar};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Vector};

pub type SparseVec = BTreeMap<usize, CycloScalar>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductTable {
    field: Arc<CycloField>,
    dim: usize,
    entries: BTreeMap<(usize, usize), SparseVec>,
}

impl ProductTable {
    pub fn new(field: Arc<CycloField>, dim: usize) -> Self {
        Self { field, dim, entries: BTreeMap::new() }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.dim {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i + 1, dim: self.dim })
        }
    }

    /// Adds `c * e_k` to the product `e_i * e_j` (0-based indices).
    pub fn add_term(&mut self, i: usize, j: usize, k: usize, c: CycloScalar) -> Result<()> {
        self.check_index(i)?;
        self.check_index(j)?;
        self.check_index(k)?;
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.entries.entry((i, j)).or_default();
        let sum = match entry.get(&k) {
            Some(old) => old + &c,
            None => c,
        };
        if sum.is_zero() {
            entry.remove(&k);
        } else {
            entry.insert(k, sum);
        }
        if entry.is_empty() {
            self.entries.remove(&(i, j));
        }
        Ok(())
    }

    /// Replaces the product `e_i * e_j` with a dense vector.
    pub fn set_dense(&mut self, i: usize, j: usize, v: &[CycloScalar]) -> Result<()> {
        self.check_index(i)?;
        self.check_index(j)?;
        let sparse: SparseVec = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect();
        if sparse.is_empty() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), sparse);
        }
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&SparseVec> {
        self.entries.get(&(i, j))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &SparseVec)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let mut v = linalg::zero_vector(&self.field, self.dim);
        if let Some(s) = self.get(i, j) {
            for (&k, c) in s {
                v[k] = c.clone();
            }
        }
        v
    }

    /// Bilinear extension to dense vectors.
    pub fn product(&self, u: &[CycloScalar], v: &[CycloScalar]) -> Vector {
        let mut out = linalg::zero_vector(&self.field, self.dim);
        for (&(i, j), s) in &self.entries {
            if u[i].is_zero() || v[j].is_zero() {
                continue;
            }
            let uv = &u[i] * &v[j];
            for (&k, c) in s {
                out[k] = &out[k] + &(&uv * c);
            }
        }
        out
    }

    /// Product of a dense vector with a basis element on the right.
    pub fn product_with_basis(&self, u: &[CycloScalar], j: usize) -> Vector {
        let mut out = linalg::zero_vector(&self.field, self.dim);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            if let Some(s) = self.get(i, j) {
                for (&k, c) in s {
                    out[k] = &out[k] + &(ui * c);
                }
            }
        }
        out
    }

    /// Scales every product `e_i * e_j` by `f(i, j)`.
    pub fn scaled<F>(&self, mut f: F) -> Result<ProductTable>
    where
        F: FnMut(usize, usize) -> Result<CycloScalar>,
    {
        let mut entries = BTreeMap::new();
        for (&(i, j), s) in &self.entries {
            let c = f(i, j)?;
            if c.is_zero() {
                continue;
            }
            let scaled: SparseVec = s.iter().map(|(&k, x)| (k, &c * x)).collect();
            entries.insert((i, j), scaled);
        }
        Ok(ProductTable { field: Arc::clone(&self.field), dim: self.dim, entries })
    }

    /// Structure constants with respect to a new basis given as rows of
    /// `basis` (coordinates in the current basis). The basis must span a
    /// subspace closed under the product.
    pub fn in_basis(&self, basis: &[Vector]) -> Result<ProductTable> {
        let sub = linalg::Subspace::span(self.dim, basis);
        if sub.dim() != basis.len() {
            return Err(Error::Singular("basis vectors are linearly dependent".into()));
        }
        // coordinates relative to `basis` = echelon coordinates times the change matrix
        let echelon_to_basis = {
            let coords: Matrix = basis
                .iter()
                .map(|b| sub.coordinates(b).expect("basis vector lies in its span"))
                .collect();
            linalg::inverse(&self.field, &coords)?
        };
        let m = basis.len();
        let mut out = ProductTable::new(Arc::clone(&self.field), m);
        for i in 0..m {
            for j in 0..m {
                let p = self.product(&basis[i], &basis[j]);
                if linalg::is_zero_vector(&p) {
                    continue;
                }
                let ech = sub.coordinates(&p).ok_or_else(|| {
                    Error::Precondition(format!("product of new basis vectors {} and {} leaves the span", i + 1, j + 1))
                })?;
                let coords = linalg::vec_mat(&self.field, &ech, &echelon_to_basis);
                out.set_dense(i, j, &coords)?;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_terms_cancel() {
        let f = CycloField::new(2).unwrap();
        let mut t = ProductTable::new(Arc::clone(&f), 3);
        t.add_term(0, 1, 2, f.one()).unwrap();
        t.add_term(0, 1, 2, f.from_int(-1)).unwrap();
        assert!(t.is_zero());
        assert!(t.add_term(0, 3, 1, f.one()).is_err());
    }

    #[test]
    fn change_of_basis() {
        let f = CycloField::new(2).unwrap();
        let mut t = ProductTable::new(Arc::clone(&f), 3);
        t.add_term(0, 1, 2, f.one()).unwrap();
        t.add_term(1, 0, 2, f.from_int(-1)).unwrap();
        // new basis: 2 e1, e2, e3 -> [b1, b2] = 2 b3
        let basis = vec![
            vec![f.from_int(2), f.zero(), f.zero()],
            vec![f.zero(), f.one(), f.zero()],
            vec![f.zero(), f.zero(), f.one()],
        ];
        let nt = t.in_basis(&basis).unwrap();
        assert_eq!(nt.basis_product(0, 1), vec![f.zero(), f.zero(), f.from_int(2)]);
    }
}
