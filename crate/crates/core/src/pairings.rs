//! Bicharacters on a finitely generated abelian group and the pairings built
//! from them: commutation factors, 2-cocycles, the parity split, the super
//! factor `eps0`, the alternating part `delta` of a cocycle, and the cocycle
//! that turns a commutation factor into `eps0`.
//!
//! A bicharacter is stored by its values `B[i][j]` on generator pairs and
//! evaluated as `prod B[i][j]^(a_i b_j)`.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::abgroup::{GroupElement, GroupSpec};
use crate::cyclo::{CycloField, CycloScalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bicharacter {
    group: GroupSpec,
    field: Arc<CycloField>,
    values: Vec<Vec<CycloScalar>>,
}

impl Bicharacter {
    pub fn new(group: GroupSpec, field: Arc<CycloField>, values: Vec<Vec<CycloScalar>>) -> Result<Self> {
        let r = group.num_generators();
        if values.len() != r || values.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidPairing(format!("value table must be {r}x{r}")));
        }
        for i in 0..r {
            for j in 0..r {
                let v = &values[i][j];
                if v.is_zero() {
                    return Err(Error::InvalidPairing(format!("value on (g{}, g{}) is zero", i + 1, j + 1)));
                }
                for k in [i, j] {
                    if let Some(m) = group.generator_order(k) {
                        if !v.pow(m as i64)?.is_one() {
                            return Err(Error::InvalidPairing(format!(
                                "value {v} on (g{}, g{}) is not an {m}-th root of unity, but g{} has order {m}",
                                i + 1,
                                j + 1,
                                k + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(Self { group, field, values })
    }

    pub fn trivial(group: GroupSpec, field: Arc<CycloField>) -> Self {
        let r = group.num_generators();
        let values = vec![vec![field.one(); r]; r];
        Self { group, field, values }
    }

    /// Builds the table from explicit `(i, j, value)` entries (0-based); other pairs are 1.
    pub fn from_pairs(
        group: GroupSpec,
        field: Arc<CycloField>,
        pairs: &[(usize, usize, CycloScalar)],
    ) -> Result<Self> {
        let r = group.num_generators();
        let mut values = vec![vec![field.one(); r]; r];
        for (i, j, v) in pairs {
            if *i >= r || *j >= r {
                return Err(Error::InvalidPairing(format!(
                    "pair (g{}, g{}) outside a group with {r} generators",
                    i + 1,
                    j + 1
                )));
            }
            values[*i][*j] = v.clone();
        }
        Self::new(group, field, values)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn value(&self, i: usize, j: usize) -> &CycloScalar {
        &self.values[i][j]
    }

    pub fn values(&self) -> &[Vec<CycloScalar>] {
        &self.values
    }

    pub fn eval(&self, a: &GroupElement, b: &GroupElement) -> Result<CycloScalar> {
        for x in [a, b] {
            if !self.group.contains(x) {
                return Err(Error::GroupMismatch(format!("{x} is not an element of {}", self.group)));
            }
        }
        let mut acc = self.field.one();
        for (i, &ai) in a.coords().iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coords().iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let mut e = ai * bj;
                // torsion orders bound the multiplicative order of the value
                if let Some(m) = self.group.generator_order(i).or(self.group.generator_order(j)) {
                    e = e.rem_euclid(m as i64);
                }
                let v = &self.values[i][j];
                if v.is_one() || e == 0 {
                    continue;
                }
                acc = &acc * &v.pow(e)?;
            }
        }
        Ok(acc)
    }

    pub fn mul(&self, other: &Bicharacter) -> Result<Bicharacter> {
        if self.group != other.group {
            return Err(Error::GroupMismatch("product of pairings on different groups".into()));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| a * b).collect())
            .collect();
        Ok(Self { group: self.group.clone(), field: Arc::clone(&self.field), values })
    }

    /// Value-wise inverse.
    pub fn inverse(&self) -> Bicharacter {
        let values = self
            .values
            .iter()
            .map(|r| r.iter().map(|v| v.inv().expect("bicharacter values are units")).collect())
            .collect();
        Self { group: self.group.clone(), field: Arc::clone(&self.field), values }
    }

    pub fn transpose(&self) -> Bicharacter {
        let r = self.values.len();
        let values = (0..r).map(|i| (0..r).map(|j| self.values[j][i].clone()).collect()).collect();
        Self { group: self.group.clone(), field: Arc::clone(&self.field), values }
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().flatten().all(CycloScalar::is_one)
    }

    /// Entries different from 1, as `(i, j, value)` with 0-based indices.
    pub fn nontrivial_pairs(&self) -> Vec<(usize, usize, CycloScalar)> {
        let mut out = Vec::new();
        for (i, row) in self.values.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_one() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }
}

/// A bicharacter with `eps(a,b) eps(b,a) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationFactor(Bicharacter);

impl CommutationFactor {
    pub fn new(base: Bicharacter) -> Result<Self> {
        let r = base.values.len();
        for i in 0..r {
            let d = &base.values[i][i];
            if !(d.is_one() || d.is_minus_one()) {
                return Err(Error::InvalidPairing(format!(
                    "eps(g{0}, g{0}) = {d} must be +1 or -1",
                    i + 1
                )));
            }
            for j in i + 1..r {
                if !(&base.values[i][j] * &base.values[j][i]).is_one() {
                    return Err(Error::InvalidPairing(format!(
                        "eps(g{0}, g{1}) = {2} and eps(g{1}, g{0}) = {3} are not mutually inverse",
                        i + 1,
                        j + 1,
                        base.values[i][j],
                        base.values[j][i]
                    )));
                }
            }
        }
        Ok(Self(base))
    }

    pub fn trivial(group: GroupSpec, field: Arc<CycloField>) -> Self {
        Self(Bicharacter::trivial(group, field))
    }

    /// The standard super factor on `Z/2`, `eps(a,b) = (-1)^(ab)`.
    pub fn super_z2(field: Arc<CycloField>) -> Result<Self> {
        let g = GroupSpec::new(0, vec![2])?;
        let minus = field.from_int(-1);
        Self::new(Bicharacter::new(g, field, vec![vec![minus]])?)
    }

    pub fn as_bicharacter(&self) -> &Bicharacter {
        &self.0
    }

    pub fn group(&self) -> &GroupSpec {
        &self.0.group
    }

    pub fn eval(&self, a: &GroupElement, b: &GroupElement) -> Result<CycloScalar> {
        self.0.eval(a, b)
    }

    /// Whether `g` lies in `G+`, i.e. `eps(g,g) = 1`.
    pub fn is_even(&self, g: &GroupElement) -> Result<bool> {
        let v = self.eval(g, g)?;
        if v.is_one() {
            Ok(true)
        } else if v.is_minus_one() {
            Ok(false)
        } else {
            Err(Error::InvariantViolation(format!("eps({g}, {g}) = {v} is not +1 or -1")))
        }
    }

    /// `true` for generators lying in `G-`.
    pub fn odd_generators(&self) -> Vec<bool> {
        (0..self.0.values.len()).map(|i| self.0.values[i][i].is_minus_one()).collect()
    }

    pub fn mul(&self, other: &CommutationFactor) -> Result<CommutationFactor> {
        CommutationFactor::new(self.0.mul(&other.0)?)
    }

    /// The super factor with the same parity split: `-1` exactly on odd x odd.
    pub fn epsilon0(&self) -> CommutationFactor {
        let odd = self.odd_generators();
        let field = &self.0.field;
        let values = odd
            .iter()
            .map(|&oi| {
                odd.iter()
                    .map(|&oj| if oi && oj { field.from_int(-1) } else { field.one() })
                    .collect()
            })
            .collect();
        CommutationFactor(Bicharacter {
            group: self.0.group.clone(),
            field: Arc::clone(field),
            values,
        })
    }

    pub fn is_super(&self) -> bool {
        *self == self.epsilon0()
    }
}

/// A 2-cocycle backed by a bicharacter, normalized by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle(Bicharacter);

/// Outcome of checking `s(a,b) s(a+b,c) = s(b,c) s(a,b+c)` on a set of triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleReport {
    pub triples_checked: usize,
    pub witness: Option<(GroupElement, GroupElement, GroupElement)>,
}

impl CocycleReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

impl Cocycle {
    pub fn new(base: Bicharacter) -> Self {
        Self(base)
    }

    pub fn trivial(group: GroupSpec, field: Arc<CycloField>) -> Self {
        Self(Bicharacter::trivial(group, field))
    }

    pub fn as_bicharacter(&self) -> &Bicharacter {
        &self.0
    }

    pub fn group(&self) -> &GroupSpec {
        &self.0.group
    }

    pub fn eval(&self, a: &GroupElement, b: &GroupElement) -> Result<CycloScalar> {
        self.0.eval(a, b)
    }

    pub fn inverse(&self) -> Cocycle {
        Cocycle(self.0.inverse())
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_trivial()
    }

    /// `delta(a,b) = s(a,b) / s(b,a)`.
    pub fn delta(&self) -> CommutationFactor {
        let quotient = self
            .0
            .mul(&self.0.transpose().inverse())
            .expect("same group");
        CommutationFactor::new(quotient).expect("delta of a bicharacter is alternating")
    }

    /// Evaluates the cocycle identity on every triple drawn from `{0, g_1, ..., g_r}`
    /// plus `samples` pseudo-random triples.
    pub fn check_identity(&self, samples: usize, seed: u64) -> Result<CocycleReport> {
        let g = &self.0.group;
        let mut base = vec![g.zero()];
        base.extend((0..g.num_generators()).map(|i| g.generator(i)));
        let mut triples = Vec::new();
        for a in &base {
            for b in &base {
                for c in &base {
                    triples.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            triples.push((
                g.random_element(&mut rng, 3),
                g.random_element(&mut rng, 3),
                g.random_element(&mut rng, 3),
            ));
        }
        let mut checked = 0;
        for (a, b, c) in triples {
            let lhs = &self.eval(&a, &b)? * &self.eval(&g.add(&a, &b)?, &c)?;
            let rhs = &self.eval(&b, &c)? * &self.eval(&a, &g.add(&b, &c)?)?;
            checked += 1;
            if lhs != rhs {
                return Ok(CocycleReport { triples_checked: checked, witness: Some((a, b, c)) });
            }
        }
        Ok(CocycleReport { triples_checked: checked, witness: None })
    }
}

/// The cocycle `s` with `eps * delta(s) = eps0`.
///
/// With `rho = eps0 / eps` (alternating, `rho(a,a) = 1`), `s` takes the value
/// `rho(g_i, g_j)` on generator pairs with `i > j` and 1 elsewhere.
pub fn scheunert_sigma(eps: &CommutationFactor) -> Result<Cocycle> {
    let rho = eps.epsilon0().0.mul(&eps.0.inverse())?;
    let field = &rho.field;
    let r = rho.values.len();
    let values: Vec<Vec<CycloScalar>> = (0..r)
        .map(|i| (0..r).map(|j| if i > j { rho.values[i][j].clone() } else { field.one() }).collect())
        .collect();
    let base = Bicharacter::new(rho.group.clone(), Arc::clone(field), values)
        .map_err(|e| Error::Internal(format!("superizing cocycle is not well defined: {e}")))?;
    let sigma = Cocycle(base);
    if eps.mul(&sigma.delta())? != eps.epsilon0() {
        return Err(Error::Internal("eps * delta(sigma) differs from eps0".into()));
    }
    Ok(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2z2() -> GroupSpec {
        GroupSpec::new(0, vec![2, 2]).unwrap()
    }

    fn field() -> Arc<CycloField> {
        CycloField::new(4).unwrap()
    }

    fn pairing(g: &GroupSpec, f: &Arc<CycloField>, t: [[i64; 2]; 2]) -> Bicharacter {
        let values = t.iter().map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect();
        Bicharacter::new(g.clone(), Arc::clone(f), values).unwrap()
    }

    fn el(g: &GroupSpec, c: &[i64]) -> GroupElement {
        g.element(c.to_vec()).unwrap()
    }

    #[test]
    fn eval_examples() {
        let f = field();
        let sup = CommutationFactor::super_z2(Arc::clone(&f)).unwrap();
        let g = sup.group().clone();
        assert!(sup.eval(&el(&g, &[1]), &el(&g, &[1])).unwrap().is_minus_one());
        assert!(sup.eval(&g.zero(), &el(&g, &[1])).unwrap().is_one());

        let g = z2z2();
        let eps = CommutationFactor::new(pairing(&g, &f, [[1, -1], [-1, 1]])).unwrap();
        assert!(eps.eval(&el(&g, &[1, 0]), &el(&g, &[0, 1])).unwrap().is_minus_one());
    }

    #[test]
    fn well_definedness_enforced() {
        let f = CycloField::new(12).unwrap();
        let g = z2z2();
        let bad = vec![vec![f.one(), f.root_of_unity(1)], vec![f.one(), f.one()]];
        assert!(Bicharacter::new(g, f, bad).is_err());
    }

    #[test]
    fn commutation_factor_validation() {
        let f = field();
        let g = z2z2();
        assert!(CommutationFactor::new(pairing(&g, &f, [[1, -1], [1, 1]])).is_err());
        let zfree = GroupSpec::free(1);
        let two = Bicharacter::new(zfree, Arc::clone(&f), vec![vec![f.from_int(2)]]).unwrap();
        assert!(CommutationFactor::new(two).is_err());
    }

    #[test]
    fn parity_examples() {
        let f = field();
        let sup = CommutationFactor::super_z2(Arc::clone(&f)).unwrap();
        let g = sup.group().clone();
        assert!(!sup.is_even(&el(&g, &[1])).unwrap());
        assert!(sup.is_even(&g.zero()).unwrap());

        let g = z2z2();
        let diag = CommutationFactor::new(pairing(&g, &f, [[-1, 1], [1, -1]])).unwrap();
        assert!(diag.is_even(&el(&g, &[1, 1])).unwrap());
        assert!(!diag.is_even(&el(&g, &[1, 0])).unwrap());
    }

    #[test]
    fn epsilon0_examples() {
        let f = field();
        let sup = CommutationFactor::super_z2(Arc::clone(&f)).unwrap();
        assert_eq!(sup.epsilon0(), sup);
        let g = z2z2();
        let triv = CommutationFactor::trivial(g.clone(), Arc::clone(&f));
        assert_eq!(triv.epsilon0(), triv);
        let diag = CommutationFactor::new(pairing(&g, &f, [[-1, 1], [1, -1]])).unwrap();
        let e0 = diag.epsilon0();
        assert!(e0.as_bicharacter().values().iter().flatten().all(CycloScalar::is_minus_one));
        for a in g.elements().unwrap() {
            assert_eq!(e0.eval(&a, &a).unwrap(), diag.eval(&a, &a).unwrap());
        }
    }

    #[test]
    fn delta_examples() {
        let f = field();
        let g = z2z2();
        assert!(Cocycle::trivial(g.clone(), Arc::clone(&f)).delta().as_bicharacter().is_trivial());
        let sigma = Cocycle::new(pairing(&g, &f, [[1, 1], [-1, 1]]));
        let delta = sigma.delta();
        for a in g.elements().unwrap() {
            for b in g.elements().unwrap() {
                let (a1, a2, b1, b2) = (a.coords()[0], a.coords()[1], b.coords()[0], b.coords()[1]);
                let expect = if (a2 * b1 - a1 * b2).rem_euclid(2) == 1 { -1 } else { 1 };
                assert_eq!(delta.eval(&a, &b).unwrap(), f.from_int(expect));
            }
        }
        let sym = Cocycle::new(pairing(&g, &f, [[-1, -1], [-1, 1]]));
        assert!(sym.delta().as_bicharacter().is_trivial());
    }

    #[test]
    fn cocycle_identity_examples() {
        let f = field();
        let g = z2z2();
        let triv = Cocycle::trivial(g.clone(), Arc::clone(&f));
        assert!(triv.check_identity(20, 1).unwrap().passed());
        let sigma = Cocycle::new(pairing(&g, &f, [[1, 1], [-1, 1]]));
        let rep = sigma.check_identity(0, 1).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.triples_checked, 27);
    }

    #[test]
    fn scheunert_examples() {
        let f = field();
        let sup = CommutationFactor::super_z2(Arc::clone(&f)).unwrap();
        assert!(scheunert_sigma(&sup).unwrap().is_trivial());

        let g = z2z2();
        let expected = pairing(&g, &f, [[1, 1], [-1, 1]]);
        let alt = CommutationFactor::new(pairing(&g, &f, [[1, -1], [-1, 1]])).unwrap();
        assert_eq!(scheunert_sigma(&alt).unwrap().as_bicharacter(), &expected);
        let diag = CommutationFactor::new(pairing(&g, &f, [[-1, 1], [1, -1]])).unwrap();
        let sigma = scheunert_sigma(&diag).unwrap();
        assert_eq!(sigma.as_bicharacter(), &expected);
        let twisted = diag.mul(&sigma.delta()).unwrap();
        for a in g.elements().unwrap() {
            for b in g.elements().unwrap() {
                assert_eq!(twisted.eval(&a, &b).unwrap(), diag.epsilon0().eval(&a, &b).unwrap());
            }
        }
    }

    #[test]
    fn inversion_examples() {
        let f = CycloField::new(12).unwrap();
        let g = GroupSpec::free(2);
        let sigma = Cocycle::new(
            Bicharacter::from_pairs(g.clone(), Arc::clone(&f), &[(0, 1, f.root_of_unity(3))]).unwrap(),
        );
        assert_eq!(sigma.inverse().as_bicharacter().value(0, 1), &f.root_of_unity(9));
        assert_eq!(sigma.inverse().inverse(), sigma);
        let signs = Cocycle::new(pairing(&z2z2(), &CycloField::new(4).unwrap(), [[1, 1], [-1, 1]]));
        assert_eq!(signs.inverse(), signs);
    }
}
