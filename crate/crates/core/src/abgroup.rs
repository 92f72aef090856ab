//! Finitely generated abelian groups `Z^r x Z/m1 x ... x Z/ms` in invariant-factor form.
//!
//! Elements are integer vectors whose torsion coordinates are kept in `[0, m)`,
//! so equality of group elements is equality of vectors.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rand::Rng;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    free_rank: usize,
    torsion: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<i64>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupOp {
    Add,
    /// Negation of the first operand; the second is ignored.
    Negate,
    Subtract,
}

impl GroupSpec {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self> {
        if let Some(m) = torsion.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidGroup(format!(
                "invariant factor {m} must be at least 2"
            )));
        }
        Ok(Self { free_rank, torsion })
    }

    pub fn trivial() -> Self {
        Self { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        Self { free_rank: rank, torsion: Vec::new() }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Number of generators, `r + s`.
    pub fn num_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Order of generator `i`, or `None` when it is free.
    pub fn generator_order(&self, i: usize) -> Option<u64> {
        i.checked_sub(self.free_rank).and_then(|t| self.torsion.get(t).copied())
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Least common multiple of the invariant factors (1 for torsion-free groups).
    pub fn torsion_exponent(&self) -> u64 {
        self.torsion.iter().fold(1, |acc, &m| acc.lcm(&m))
    }

    fn reduce(&self, coords: &mut [i64]) {
        for (t, &m) in self.torsion.iter().enumerate() {
            let c = &mut coords[self.free_rank + t];
            *c = c.rem_euclid(m as i64);
        }
    }

    pub fn element(&self, coords: Vec<i64>) -> Result<GroupElement> {
        if coords.len() != self.num_generators() {
            return Err(Error::GroupMismatch(format!(
                "element has {} coordinates, {} expects {}",
                coords.len(),
                self,
                self.num_generators()
            )));
        }
        let mut coords = coords;
        self.reduce(&mut coords);
        Ok(GroupElement(coords))
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.num_generators()])
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        let mut coords = vec![0; self.num_generators()];
        coords[i] = 1;
        self.reduce(&mut coords);
        GroupElement(coords)
    }

    pub fn contains(&self, a: &GroupElement) -> bool {
        a.0.len() == self.num_generators()
            && self
                .torsion
                .iter()
                .enumerate()
                .all(|(t, &m)| (0..m as i64).contains(&a.0[self.free_rank + t]))
    }

    fn check(&self, a: &GroupElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!("{a} is not an element of {self}")))
        }
    }

    pub fn group_op(&self, a: &GroupElement, b: &GroupElement, op: GroupOp) -> Result<GroupElement> {
        self.check(a)?;
        if op != GroupOp::Negate {
            self.check(b)?;
        }
        let mut coords: Vec<i64> = match op {
            GroupOp::Add => a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect(),
            GroupOp::Subtract => a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect(),
            GroupOp::Negate => a.0.iter().map(|x| -x).collect(),
        };
        self.reduce(&mut coords);
        Ok(GroupElement(coords))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.group_op(a, b, GroupOp::Add)
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.group_op(a, b, GroupOp::Subtract)
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.group_op(a, a, GroupOp::Negate)
    }

    pub fn scale(&self, a: &GroupElement, k: i64) -> Result<GroupElement> {
        self.check(a)?;
        let mut coords: Vec<i64> = a.0.iter().map(|x| x * k).collect();
        self.reduce(&mut coords);
        Ok(GroupElement(coords))
    }

    /// Every element of a finite group, in lexicographic coordinate order.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        if !self.is_finite() {
            return None;
        }
        Some(self.box_elements(0))
    }

    /// Elements whose free coordinates lie in `[-radius, radius]`, all torsion values included.
    pub fn box_elements(&self, radius: i64) -> Vec<GroupElement> {
        let ranges: Vec<(i64, i64)> = (0..self.num_generators())
            .map(|i| match self.generator_order(i) {
                Some(m) => (0, m as i64 - 1),
                None => (-radius, radius),
            })
            .collect();
        let mut out = Vec::new();
        let mut current: Vec<i64> = ranges.iter().map(|r| r.0).collect();
        loop {
            out.push(GroupElement(current.clone()));
            let mut pos = ranges.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if current[pos] < ranges[pos].1 {
                    current[pos] += 1;
                    break;
                }
                current[pos] = ranges[pos].0;
            }
        }
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R, free_radius: i64) -> GroupElement {
        let coords = (0..self.num_generators())
            .map(|i| match self.generator_order(i) {
                Some(m) => rng.gen_range(0..m as i64),
                None => rng.gen_range(-free_radius..=free_radius),
            })
            .collect();
        GroupElement(coords)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let torsion: Vec<String> = self.torsion.iter().map(u64::to_string).collect();
        write!(f, "group free={} torsion={}", self.free_rank, torsion.join(","))
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Parses `group free=<r> torsion=<m1,m2,...>`; the leading keyword is optional.
    fn from_str(s: &str) -> Result<Self> {
        let mut free = None;
        let mut torsion = None;
        for (n, word) in s.split_whitespace().enumerate() {
            if n == 0 && word == "group" {
                continue;
            }
            if let Some(v) = word.strip_prefix("free=") {
                free = Some(
                    v.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad free rank `{v}`")))?,
                );
            } else if let Some(v) = word.strip_prefix("torsion=") {
                let ms = v
                    .split(',')
                    .filter(|p| !p.is_empty())
                    .map(|p| {
                        p.trim()
                            .parse::<u64>()
                            .map_err(|_| Error::Parse(format!("bad invariant factor `{p}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                torsion = Some(ms);
            } else {
                return Err(Error::Parse(format!("unexpected token `{word}` in group line")));
            }
        }
        GroupSpec::new(free.unwrap_or(0), torsion.unwrap_or_default())
    }
}

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Parses `(c1,...,ck)` into raw coordinates (not yet normalized in any group).
    pub fn parse_coords(s: &str) -> Result<Vec<i64>> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected `(c1,...,ck)`, found `{s}`")))?;
        inner
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<i64>().map_err(|_| Error::Parse(format!("bad coordinate `{p}`"))))
            .collect()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A homomorphism given by the images of the source generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: GroupSpec,
    target: GroupSpec,
    images: Vec<GroupElement>,
}

impl GroupHom {
    pub fn new(source: GroupSpec, target: GroupSpec, images: Vec<GroupElement>) -> Result<Self> {
        if images.len() != source.num_generators() {
            return Err(Error::InvalidHom(format!(
                "{} generator images given, source has {} generators",
                images.len(),
                source.num_generators()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if !target.contains(img) {
                return Err(Error::InvalidHom(format!("image {img} of g{} is not in the target", i + 1)));
            }
            if let Some(m) = source.generator_order(i) {
                if !target.scale(img, m as i64)?.is_zero() {
                    return Err(Error::InvalidHom(format!(
                        "g{} has order {m} but {m}*{img} is nonzero in the target",
                        i + 1
                    )));
                }
            }
        }
        Ok(Self { source, target, images })
    }

    /// Builds a hom from integer rows, row `i` being the raw image of source generator `i`.
    pub fn from_rows(source: GroupSpec, target: GroupSpec, rows: Vec<Vec<i64>>) -> Result<Self> {
        let images = rows
            .into_iter()
            .map(|r| target.element(r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    pub fn identity(spec: &GroupSpec) -> Self {
        let images = (0..spec.num_generators()).map(|i| spec.generator(i)).collect();
        Self { source: spec.clone(), target: spec.clone(), images }
    }

    pub fn source(&self) -> &GroupSpec {
        &self.source
    }

    pub fn target(&self) -> &GroupSpec {
        &self.target
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    pub fn apply(&self, g: &GroupElement) -> Result<GroupElement> {
        if !self.source.contains(g) {
            return Err(Error::GroupMismatch(format!("{g} is not in the source {}", self.source)));
        }
        let mut acc = self.target.zero();
        for (c, img) in g.coords().iter().zip(&self.images) {
            acc = self.target.add(&acc, &self.target.scale(img, *c)?)?;
        }
        Ok(acc)
    }

    /// The composite `next ∘ self`.
    pub fn then(&self, next: &GroupHom) -> Result<GroupHom> {
        if next.source != self.target {
            return Err(Error::GroupMismatch("composition of incompatible homomorphisms".into()));
        }
        let images = self
            .images
            .iter()
            .map(|img| next.apply(img))
            .collect::<Result<Vec<_>>>()?;
        GroupHom::new(self.source.clone(), next.target.clone(), images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(g: &GroupSpec, c: &[i64]) -> GroupElement {
        g.element(c.to_vec()).unwrap()
    }

    #[test]
    fn free_addition() {
        let g = GroupSpec::free(2);
        assert_eq!(g.add(&el(&g, &[1, 0]), &el(&g, &[0, 1])).unwrap(), el(&g, &[1, 1]));
    }

    #[test]
    fn torsion_reduction() {
        let g = GroupSpec::new(0, vec![2, 3]).unwrap();
        let a = el(&g, &[1, 2]);
        assert_eq!(g.add(&a, &a).unwrap().coords(), &[0, 1]);
        assert_eq!(g.element(vec![-1, 7]).unwrap().coords(), &[1, 1]);
    }

    #[test]
    fn negate_in_z() {
        let g = GroupSpec::free(1);
        assert_eq!(g.neg(&el(&g, &[3])).unwrap().coords(), &[-3]);
    }

    #[test]
    fn rejects_small_invariant_factor() {
        assert!(GroupSpec::new(0, vec![1]).is_err());
    }

    #[test]
    fn mismatched_operands() {
        let z2 = GroupSpec::free(2);
        let t = GroupSpec::new(0, vec![2, 3]).unwrap();
        let b = el(&t, &[1, 2]);
        assert!(z2.add(&el(&z2, &[0, 5]), &GroupElement(vec![1])).is_err());
        // (1,2) happens to be a valid Z^2 vector, but (0,5) is not in Z/2 x Z/3.
        assert!(t.add(&b, &GroupElement(vec![0, 5])).is_err());
    }

    #[test]
    fn hom_examples() {
        let z2 = GroupSpec::free(2);
        let z = GroupSpec::free(1);
        let sum = GroupHom::from_rows(z2.clone(), z.clone(), vec![vec![1], vec![1]]).unwrap();
        assert_eq!(sum.apply(&el(&z2, &[2, 1])).unwrap().coords(), &[3]);

        let t = GroupSpec::new(0, vec![2, 3]).unwrap();
        let id = GroupHom::identity(&t);
        assert_eq!(id.apply(&el(&t, &[1, 2])).unwrap(), el(&t, &[1, 2]));

        let z2t = GroupSpec::new(0, vec![2]).unwrap();
        let parity = GroupHom::from_rows(z, z2t, vec![vec![1]]).unwrap();
        assert!(parity.apply(&el(&GroupSpec::free(1), &[4])).unwrap().is_zero());
    }

    #[test]
    fn torsion_incompatible_hom_rejected() {
        let z2 = GroupSpec::new(0, vec![2]).unwrap();
        let z3 = GroupSpec::new(0, vec![3]).unwrap();
        assert!(GroupHom::from_rows(z2.clone(), z3, vec![vec![1]]).is_err());
        assert!(GroupHom::from_rows(z2, GroupSpec::free(1), vec![vec![1]]).is_err());
    }

    #[test]
    fn enumerate_and_parse() {
        let g: GroupSpec = "group free=0 torsion=2,3".parse().unwrap();
        assert_eq!(g.elements().unwrap().len(), 6);
        assert_eq!(g.to_string(), "group free=0 torsion=2,3");
        let trivial: GroupSpec = "group free=0 torsion=".parse().unwrap();
        assert_eq!(trivial, GroupSpec::trivial());
        assert_eq!(trivial.elements().unwrap(), vec![GroupElement(vec![])]);
        assert_eq!(GroupElement::parse_coords("(1, -2)").unwrap(), vec![1, -2]);
        assert_eq!(el(&g, &[1, 2]).to_string(), "(1,2)");
    }
}
