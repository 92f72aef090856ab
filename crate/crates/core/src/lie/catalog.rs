//! Named Lie algebras over `Q`, all with 0-based basis indices internally and
//! the usual `e1, e2, ...` naming in documentation.

use std::sync::Arc;

use super::LieAlgebra;
use crate::cyclo::CycloField;
use crate::error::{Error, Result};
use crate::table::ProductTable;

fn rationals() -> Arc<CycloField> {
    CycloField::new(1).expect("Q is a valid field")
}

/// Builds an algebra from brackets `[e_i, e_j] = c e_k` (0-based), adding skew partners.
pub fn from_brackets(dim: usize, brackets: &[(usize, usize, usize, i64)]) -> Result<LieAlgebra> {
    let f = rationals();
    let mut t = ProductTable::new(Arc::clone(&f), dim);
    for &(i, j, k, c) in brackets {
        t.add_term(i, j, k, f.from_int(c))?;
        t.add_term(j, i, k, f.from_int(-c))?;
    }
    LieAlgebra::new(t)
}

pub fn abelian(n: usize) -> LieAlgebra {
    from_brackets(n, &[]).expect("abelian algebra is valid")
}

/// `[e1, e_i] = e_(i+1)` for `2 <= i < n`.
pub fn filiform(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::Precondition(format!("filiform algebra needs n >= 2, got {n}")));
    }
    let brackets: Vec<_> = (1..n - 1).map(|i| (0, i, i + 1, 1)).collect();
    from_brackets(n, &brackets)
}

/// `[e1,e2] = e3, [e1,e3] = e4, [e2,e3] = e5`.
pub fn l5() -> LieAlgebra {
    from_brackets(5, &[(0, 1, 2, 1), (0, 2, 3, 1), (1, 2, 4, 1)]).expect("L5 is valid")
}

/// `[e1,e3] = e4, [e2,e3] = e5, [e1,e2] = e6`.
pub fn l6() -> LieAlgebra {
    from_brackets(6, &[(0, 2, 3, 1), (1, 2, 4, 1), (0, 1, 5, 1)]).expect("L6 is valid")
}

/// Basis `x1..xk, y1..yk, z` with `[x_i, y_i] = z`.
pub fn heisenberg(dim: usize) -> Result<LieAlgebra> {
    if dim < 3 || dim % 2 == 0 {
        return Err(Error::Precondition(format!("Heisenberg algebra needs odd dimension >= 3, got {dim}")));
    }
    let k = dim / 2;
    let brackets: Vec<_> = (0..k).map(|i| (i, k + i, dim - 1, 1)).collect();
    from_brackets(dim, &brackets)
}

/// Strictly upper triangular `k x k` matrices, basis `E_ij` (`i < j`) in
/// lexicographic order.
pub fn upper_triangular_nil(k: usize) -> Result<LieAlgebra> {
    if k < 2 {
        return Err(Error::Precondition(format!("matrix size must be >= 2, got {k}")));
    }
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let idx = |p: (usize, usize)| pairs.iter().position(|&q| q == p).expect("i < j");
    let mut brackets = Vec::new();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(p, q)) in pairs.iter().enumerate() {
            // [E_ij, E_jq] = E_iq; the reverse order is added as the skew partner
            if j == p {
                brackets.push((a, b, idx((i, q)), 1));
            }
        }
    }
    from_brackets(pairs.len(), &brackets)
}

/// `x` followed by chains `v_1..v_s` for each size `s`, with `[x, v_t] = v_(t+1)`.
pub fn two_block(sizes: &[usize]) -> Result<LieAlgebra> {
    if sizes.contains(&0) {
        return Err(Error::Precondition("block sizes must be positive".into()));
    }
    let mut brackets = Vec::new();
    let mut pos = 1;
    for &s in sizes {
        for t in 0..s - 1 {
            brackets.push((0, pos + t, pos + t + 1, 1));
        }
        pos += s;
    }
    from_brackets(pos, &brackets)
}

/// The non-nilpotent `[e1, e2] = e2`.
pub fn affine_line() -> LieAlgebra {
    from_brackets(2, &[(0, 1, 1, 1)]).expect("affine line is valid")
}

/// Looks up a catalog entry such as `L5`, `filiform(6)`, `heisenberg(5)`,
/// `upper_triangular_nil(4)`, `abelian(3)`, `two_block(2,2)` or `affine_line`.
pub fn by_name(spec: &str) -> Result<LieAlgebra> {
    let spec = spec.trim();
    let (name, args) = match spec.split_once('(') {
        Some((n, rest)) => {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("missing ')' in catalog name {spec:?}")))?;
            let args = inner
                .split(',')
                .map(|a| {
                    a.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad catalog argument {a:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            (n.trim(), args)
        }
        None => (spec, Vec::new()),
    };
    let one = |args: &[usize]| match args {
        [n] => Ok(*n),
        _ => Err(Error::Parse(format!("{name} takes exactly one argument"))),
    };
    match name.to_ascii_lowercase().as_str() {
        "l5" if args.is_empty() => Ok(l5()),
        "l6" if args.is_empty() => Ok(l6()),
        "affine_line" if args.is_empty() => Ok(affine_line()),
        "g2block" if args.is_empty() => two_block(&[2, 2]),
        "n4" if args.is_empty() => upper_triangular_nil(4),
        "filiform" => filiform(one(&args)?),
        "heisenberg" => heisenberg(one(&args)?),
        "upper_triangular_nil" => upper_triangular_nil(one(&args)?),
        "abelian" => Ok(abelian(one(&args)?)),
        "two_block" if !args.is_empty() => two_block(&args),
        _ => Err(Error::Parse(format!("unknown catalog entry {spec:?}"))),
    }
}
