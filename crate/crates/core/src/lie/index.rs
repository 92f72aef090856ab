//! The index of a Lie algebra: `dim g` minus the rank of the generic
//! skew matrix `(sum_k c_ij^k x_k)` over the field of rational functions.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::bareiss_rank;
use crate::mpoly::MPoly;

/// Seed for the evaluation cross-check when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_c01a;

const TRIALS: usize = 3;
const MAGNITUDE: i64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub dim: usize,
    pub generic_rank: usize,
    pub index: usize,
    pub almost_maximal: bool,
    /// Ranks of the matrix evaluated at random rational points.
    pub trial_ranks: Vec<usize>,
}

pub fn lie_index(g: &LieAlgebra, seed: u64) -> Result<IndexReport> {
    let n = g.dim();
    let field = g.field();
    let symbolic: Vec<Vec<MPoly>> = (0..n)
        .map(|i| (0..n).map(|j| MPoly::linear(field, &g.table().basis_product(i, j))).collect())
        .collect();
    let generic_rank = bareiss_rank(symbolic.clone())?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trial_ranks = Vec::with_capacity(TRIALS);
    for _ in 0..TRIALS {
        let point: Vec<_> = (0..n)
            .map(|_| {
                let num = rng.gen_range(-MAGNITUDE..=MAGNITUDE);
                let den = rng.gen_range(1..=MAGNITUDE);
                field.from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
            })
            .collect();
        let m: Vec<Vec<_>> = symbolic
            .iter()
            .map(|row| row.iter().map(|p| p.eval(&point)).collect())
            .collect();
        trial_ranks.push(bareiss_rank(m)?);
    }
    if let Some(r) = trial_ranks.iter().find(|&&r| r != generic_rank) {
        return Err(Error::Internal(format!(
            "generic rank {generic_rank} disagrees with evaluated rank {r} (trials {trial_ranks:?})"
        )));
    }
    if generic_rank % 2 != 0 {
        return Err(Error::Internal(format!("skew matrix with odd rank {generic_rank}")));
    }
    let index = n - generic_rank;
    Ok(IndexReport {
        dim: n,
        generic_rank,
        index,
        almost_maximal: n >= 2 && index == n - 2,
        trial_ranks,
    })
}
