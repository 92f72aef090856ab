//! Sparse multivariate polynomials over `Q(zeta_N)`, just enough for
//! fraction-free elimination on symbolic matrices.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cyclo::{CycloField, CycloScalar};
use crate::error::{Error, Result};
use crate::linalg::Domain;

/// Terms are keyed by exponent vectors; the lexicographic order on keys is the
/// monomial order used for division, so the leading term is the last entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    field: Arc<CycloField>,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, CycloScalar>,
}

impl MPoly {
    pub fn zero(field: &Arc<CycloField>, nvars: usize) -> Self {
        Self { field: Arc::clone(field), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(c: CycloScalar, nvars: usize) -> Self {
        let mut p = Self::zero(c.field(), nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// `sum_k coeffs[k] * x_k`.
    pub fn linear(field: &Arc<CycloField>, coeffs: &[CycloScalar]) -> Self {
        let nvars = coeffs.len();
        let mut p = Self::zero(field, nvars);
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; nvars];
                e[k] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn add_term(&mut self, e: Vec<u32>, c: CycloScalar) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Evaluates at a point given as one scalar per variable.
    pub fn eval(&self, point: &[CycloScalar]) -> CycloScalar {
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = &t * &x.pow(k as i64).expect("nonnegative power");
                }
            }
            acc = &acc + &t;
        }
        acc
    }
}

impl Domain for MPoly {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.field, self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    fn exact_div(&self, other: &Self) -> Result<Self> {
        let Some((lead_e, lead_c)) = other.terms.last_key_value() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = lead_c.inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.field, self.nvars);
        while let Some((e, c)) = rem.terms.last_key_value() {
            if e.iter().zip(lead_e).any(|(a, b)| a < b) {
                return Err(Error::Internal("inexact polynomial division".into()));
            }
            let te: Vec<u32> = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let tc = c * &lead_inv;
            let mut t = Self::zero(&self.field, self.nvars);
            t.terms.insert(te.clone(), tc.clone());
            rem = rem.sub(&t.mul(other));
            quot.add_term(te, tc);
        }
        Ok(quot)
    }

    fn weight(&self) -> usize {
        self.terms.len()
    }
}
