//! Exact linear algebra.
//!
//! Rank over an integral domain uses fraction-free (Bareiss) elimination with
//! full pivoting; it is generic over [`Domain`] so the same kernel serves both
//! scalar matrices and matrices of multivariate polynomials. Subspace work
//! (echelon bases, kernels, coordinates) runs over the cyclotomic field with
//! first-pivot Gauss-Jordan elimination, so basis choices are deterministic.

use std::sync::Arc;

use crate::cyclo::{CycloField, CycloScalar};
use crate::error::{Error, Result};

/// Exact integral-domain operations needed by Bareiss elimination.
pub trait Domain: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// `self / other`, where the division is known to be exact.
    fn exact_div(&self, other: &Self) -> Result<Self>;
    /// Heuristic size used to pick cheap pivots; smaller is preferred.
    fn weight(&self) -> usize {
        1
    }
}

impl Domain for CycloScalar {
    fn is_zero(&self) -> bool {
        CycloScalar::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn exact_div(&self, other: &Self) -> Result<Self> {
        self.div(other)
    }

    fn weight(&self) -> usize {
        self.coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count()
    }
}

/// Rank by fraction-free elimination. Entries after step `k` are `(k+1)`-minors,
/// so every division by the previous pivot is exact.
pub fn bareiss_rank<T: Domain>(mut a: Vec<Vec<T>>) -> Result<usize> {
    let rows = a.len();
    if rows == 0 {
        return Ok(0);
    }
    let cols = a[0].len();
    let mut prev: Option<T> = None;
    let mut rank = 0;
    for k in 0..rows.min(cols) {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().skip(k) {
                if !x.is_zero() {
                    let w = x.weight();
                    if best.is_none_or(|(_, _, bw)| w < bw) {
                        best = Some((i, j, w));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        let pivot = a[k][k].clone();
        for i in k + 1..rows {
            for j in k + 1..cols {
                let num = a[i][j].mul(&pivot).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = match &prev {
                    Some(p) => num.exact_div(p)?,
                    None => num,
                };
            }
        }
        prev = Some(pivot);
        rank += 1;
    }
    Ok(rank)
}

pub type Vector = Vec<CycloScalar>;
pub type Matrix = Vec<Vec<CycloScalar>>;

/// Reduced row echelon form with pivots chosen as the first nonzero column.
/// Returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[Vector], cols: usize) -> (Matrix, Vec<usize>) {
    let mut m: Matrix = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in m[r].iter_mut() {
                *x = &*x * &inv;
            }
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    if !m[r][j].is_zero() {
                        let t = &f * &m[r][j];
                        m[i][j] = &m[i][j] - &t;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

/// Rank over the field via Gauss-Jordan elimination.
pub fn rank(rows: &[Vector], cols: usize) -> usize {
    rref(rows, cols).1.len()
}

/// A subspace of `k^n` kept in reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    dim_ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Self { dim_ambient: n, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &Arc<CycloField>, n: usize) -> Self {
        Self::span(n, &identity(field, n))
    }

    pub fn span(n: usize, vectors: &[Vector]) -> Self {
        let (basis, pivots) = rref(vectors, n);
        Self { dim_ambient: n, basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim_ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace; the result vanishes on pivot columns.
    pub fn reduce(&self, v: &[CycloScalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let f = out[p].clone();
                for (o, x) in out.iter_mut().zip(row) {
                    if !x.is_zero() {
                        *o = &*o - &(&f * x);
                    }
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[CycloScalar]) -> bool {
        self.reduce(v).iter().all(CycloScalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` with respect to the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[CycloScalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.dim_ambient, &vs)
    }

    pub fn intersection(&self, field: &Arc<CycloField>, other: &Subspace) -> Subspace {
        // Solve a.self_basis = b.other_basis: kernel of the stacked transpose.
        let n = self.dim_ambient;
        let (p, q) = (self.dim(), other.dim());
        if p == 0 || q == 0 {
            return Subspace::zero(n);
        }
        let mut eqs: Matrix = Vec::with_capacity(n);
        for c in 0..n {
            let mut row = Vec::with_capacity(p + q);
            row.extend(self.basis.iter().map(|v| v[c].clone()));
            row.extend(other.basis.iter().map(|v| -&v[c]));
            eqs.push(row);
        }
        let ker = kernel(field, &eqs, p + q);
        let vecs: Vec<Vector> = ker
            .iter()
            .map(|k| combine(field, n, &self.basis, &k[..p]))
            .collect();
        Subspace::span(n, &vecs)
    }

    /// Non-pivot columns: the standard basis vectors at these indices span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.dim_ambient).filter(|c| !self.pivots.contains(c)).collect()
    }
}

pub fn identity(field: &Arc<CycloField>, n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect()
}

pub fn zero_vector(field: &Arc<CycloField>, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: &Arc<CycloField>, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

/// `sum_i coeffs[i] * vectors[i]`.
pub fn combine(field: &Arc<CycloField>, n: usize, vectors: &[Vector], coeffs: &[CycloScalar]) -> Vector {
    let mut out = zero_vector(field, n);
    for (v, c) in vectors.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o = &*o + &(c * x);
            }
        }
    }
    out
}

pub fn is_zero_vector(v: &[CycloScalar]) -> bool {
    v.iter().all(CycloScalar::is_zero)
}

/// Basis of `{x : A x = 0}` for `A` with `cols` columns. One basis vector per
/// free column, in increasing column order, with a 1 in that column.
pub fn kernel(field: &Arc<CycloField>, a: &[Vector], cols: usize) -> Vec<Vector> {
    let (r, pivots) = rref(a, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zero_vector(field, cols);
            v[f] = field.one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

pub fn mat_mul(field: &Arc<CycloField>, a: &[Vector], b: &[Vector]) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = field.zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Row vector times matrix.
pub fn vec_mat(field: &Arc<CycloField>, v: &[CycloScalar], m: &[Vector]) -> Vector {
    let cols = m.first().map_or(0, Vec::len);
    combine(field, cols, m, v)
}

pub fn inverse(field: &Arc<CycloField>, m: &[Vector]) -> Result<Matrix> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Precondition("inverse of a non-square matrix".into()));
    }
    let aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(unit_vector(field, n, i));
            r
        })
        .collect();
    let (red, pivots) = rref(&aug, 2 * n);
    if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
        return Err(Error::Singular(format!("{n}x{n} matrix has rank < {n}")));
    }
    Ok(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn transpose(m: &[Vector]) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Arc<CycloField> {
        CycloField::new(2).unwrap()
    }

    fn mat(f: &Arc<CycloField>, rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect()
    }

    #[test]
    fn bareiss_matches_gauss() {
        let f = q();
        let cases: Vec<Matrix> = vec![
            mat(&f, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]),
            mat(&f, &[&[0, 0], &[0, 0]]),
            mat(&f, &[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]),
            mat(&f, &[&[2, 4, 1, 0], &[1, 2, 0, 1], &[3, 6, 1, 1]]),
        ];
        let expect = [2, 0, 2, 2];
        for (m, e) in cases.into_iter().zip(expect) {
            let cols = m[0].len();
            assert_eq!(rank(&m, cols), e);
            assert_eq!(bareiss_rank(m).unwrap(), e);
        }
    }

    #[test]
    fn kernel_and_inverse() {
        let f = q();
        let a = mat(&f, &[&[1, 1, 0], &[0, 0, 1]]);
        let k = kernel(&f, &a, 3);
        assert_eq!(k, mat(&f, &[&[-1, 1, 0]]));
        let m = mat(&f, &[&[2, 1], &[1, 1]]);
        let inv = inverse(&f, &m).unwrap();
        assert_eq!(mat_mul(&f, &m, &inv), identity(&f, 2));
        assert!(inverse(&f, &mat(&f, &[&[1, 2], &[2, 4]])).is_err());
    }

    #[test]
    fn subspace_ops() {
        let f = q();
        let u = Subspace::span(3, &mat(&f, &[&[1, 0, 0], &[0, 1, 0]]));
        let w = Subspace::span(3, &mat(&f, &[&[0, 1, 0], &[0, 0, 1]]));
        let i = u.intersection(&f, &w);
        assert_eq!(i.basis(), &mat(&f, &[&[0, 1, 0]])[..]);
        assert_eq!(u.sum(&w).dim(), 3);
        assert_eq!(u.coordinates(&mat(&f, &[&[3, -2, 0]])[0]).unwrap(), mat(&f, &[&[3, -2]])[0]);
        assert!(u.coordinates(&mat(&f, &[&[0, 0, 1]])[0]).is_none());
        assert_eq!(u.complement_indices(), vec![2]);
    }
}
