//! Enveloping algebras of Lie color algebras through PBW normal forms.
//!
//! Elements are combinations of ordered monomials `e1^a1 ... en^an` with
//! `a_i <= 1` for odd `e_i`. Products are normalized by rewriting words:
//! `e_j e_i -> eps(d_j, d_i) e_i e_j + [e_j, e_i]` for `j > i`, and
//! `e e -> 1/2 [e, e]` for odd `e`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Signed;
use rayon::prelude::*;

use crate::abgroup::GroupElement;
use crate::color::ColorAlgebra;
use crate::cyclo::{CycloField, CycloScalar};
use crate::error::{Error, Result};
use crate::pairings::Cocycle;

/// Exponent vector over the ordered basis. Ordered by total degree, then
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PbwMonomial(Vec<u32>);

impl PbwMonomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    /// The sorted word `e_i ... e_i e_j ...` (0-based letters).
    pub fn word(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat(i).take(a as usize))
            .collect()
    }

    fn from_sorted_word(n: usize, w: &[usize]) -> Self {
        let mut e = vec![0; n];
        for &i in w {
            e[i] += 1;
        }
        Self(e)
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| if a == 1 { format!("e{}", i + 1) } else { format!("e{}^{a}", i + 1) })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwElement {
    field: Arc<CycloField>,
    n: usize,
    terms: BTreeMap<PbwMonomial, CycloScalar>,
}

impl PbwElement {
    pub fn zero(field: &Arc<CycloField>, n: usize) -> Self {
        Self { field: Arc::clone(field), n, terms: BTreeMap::new() }
    }

    pub fn monomial(field: &Arc<CycloField>, m: PbwMonomial, c: CycloScalar) -> Self {
        let mut out = Self::zero(field, m.0.len());
        out.add_term(m, c);
        out
    }

    pub fn one(field: &Arc<CycloField>, n: usize) -> Self {
        Self::monomial(field, PbwMonomial::one(n), field.one())
    }

    pub fn generator(field: &Arc<CycloField>, n: usize, i: usize) -> Self {
        Self::monomial(field, PbwMonomial::generator(n, i), field.one())
    }

    pub fn terms(&self) -> &BTreeMap<PbwMonomial, CycloScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(PbwMonomial::degree).max()
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: CycloScalar) {
        merge(&mut self.terms, m, c);
    }

    pub fn add(&self, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PbwElement) -> PbwElement {
        self.add(&other.scale(&self.field.from_int(-1)))
    }

    pub fn scale(&self, c: &CycloScalar) -> PbwElement {
        let mut out = Self::zero(&self.field, self.n);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), c * x);
        }
        out
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = if c.as_rational().is_some_and(Signed::is_negative) {
                (true, -c)
            } else {
                (false, c.clone())
            };
            let sep = match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let coef = if abs.is_one() {
                String::new()
            } else if abs.is_rational() {
                format!("{abs}*")
            } else {
                format!("({abs})*")
            };
            if m.degree() == 0 {
                let body = if abs.is_rational() { abs.to_string() } else { format!("({abs})") };
                write!(f, "{sep}{body}")?;
            } else {
                write!(f, "{sep}{coef}{m}")?;
            }
        }
        Ok(())
    }
}

fn merge<K: Ord>(map: &mut BTreeMap<K, CycloScalar>, k: K, c: CycloScalar) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
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

/// Which reducible position of a word is rewritten first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

fn reducible_at(l: &ColorAlgebra, w: &[usize], p: usize) -> bool {
    w[p] > w[p + 1] || (w[p] == w[p + 1] && l.is_odd(w[p]))
}

/// Normal form of a linear combination of words.
pub fn normalize_words(
    l: &ColorAlgebra,
    words: BTreeMap<Vec<usize>, CycloScalar>,
    strategy: Strategy,
) -> PbwElement {
    let field = l.field();
    let half = field.from_ratio(1, 2).expect("nonzero denominator");
    let mut pending = words;
    let mut done = PbwElement::zero(field, l.dim());
    while let Some((w, c)) = pending.pop_last() {
        let len = w.len();
        let pos = match strategy {
            Strategy::Leftmost => (0..len.saturating_sub(1)).find(|&p| reducible_at(l, &w, p)),
            Strategy::Rightmost => (0..len.saturating_sub(1)).rev().find(|&p| reducible_at(l, &w, p)),
        };
        let Some(p) = pos else {
            done.add_term(PbwMonomial::from_sorted_word(l.dim(), &w), c);
            continue;
        };
        let (j, i) = (w[p], w[p + 1]);
        let bracket_scale = if i == j {
            &c * &half
        } else {
            let mut swapped = w.clone();
            swapped.swap(p, p + 1);
            merge(&mut pending, swapped, &c * l.eps(j, i));
            c.clone()
        };
        if let Some(s) = l.table().get(j, i) {
            for (&k, x) in s {
                let mut shorter = Vec::with_capacity(len - 1);
                shorter.extend_from_slice(&w[..p]);
                shorter.push(k);
                shorter.extend_from_slice(&w[p + 2..]);
                merge(&mut pending, shorter, &bracket_scale * x);
            }
        }
    }
    done
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwProduct {
    pub element: PbwElement,
    /// Whether terms above the cutoff were dropped.
    pub truncated: bool,
}

fn check_element(l: &ColorAlgebra, u: &PbwElement) -> Result<()> {
    if u.n != l.dim() || u.field != *l.field() {
        return Err(Error::InvalidStructure(format!(
            "PBW element over {} generators does not belong to an algebra of dimension {}",
            u.n,
            l.dim()
        )));
    }
    Ok(())
}

/// `u v` in `U(L)`. The normal form is computed exactly; a cutoff then
/// discards terms of total degree above it.
pub fn pbw_multiply(l: &ColorAlgebra, u: &PbwElement, v: &PbwElement, cutoff: Option<usize>) -> Result<PbwProduct> {
    pbw_multiply_with(l, u, v, cutoff, Strategy::Leftmost)
}

pub fn pbw_multiply_with(
    l: &ColorAlgebra,
    u: &PbwElement,
    v: &PbwElement,
    cutoff: Option<usize>,
    strategy: Strategy,
) -> Result<PbwProduct> {
    check_element(l, u)?;
    check_element(l, v)?;
    let mut words = BTreeMap::new();
    for (a, x) in &u.terms {
        for (b, y) in &v.terms {
            let mut w = a.word();
            w.extend(b.word());
            merge(&mut words, w, x * y);
        }
    }
    let mut element = normalize_words(l, words, strategy);
    let mut truncated = false;
    if let Some(d) = cutoff {
        let before = element.terms.len();
        element.terms.retain(|m, _| m.degree() <= d);
        truncated = element.terms.len() < before;
    }
    Ok(PbwProduct { element, truncated })
}

/// `sum_i a_i d_i` for the monomial `prod e_i^(a_i)`.
pub fn group_degree(l: &ColorAlgebra, m: &PbwMonomial) -> Result<GroupElement> {
    let g = l.group();
    let mut acc = g.zero();
    for (d, &a) in l.degrees().iter().zip(&m.0) {
        if a > 0 {
            acc = g.add(&acc, &g.scale(d, i64::from(a))?)?;
        }
    }
    Ok(acc)
}

/// `u *_s v = sum s(|m|, |m'|) m m'` over the terms of `u` and `v`.
pub fn twist_pbw(l: &ColorAlgebra, sigma: &Cocycle, u: &PbwElement, v: &PbwElement) -> Result<PbwElement> {
    check_element(l, u)?;
    check_element(l, v)?;
    let mut out = PbwElement::zero(l.field(), l.dim());
    for (a, x) in &u.terms {
        let da = group_degree(l, a)?;
        for (b, y) in &v.terms {
            let s = sigma.eval(&da, &group_degree(l, b)?)?;
            let ma = PbwElement::monomial(l.field(), a.clone(), x.clone());
            let mb = PbwElement::monomial(l.field(), b.clone(), y.clone());
            let p = pbw_multiply(l, &ma, &mb, None)?.element;
            out = out.add(&p.scale(&s));
        }
    }
    Ok(out)
}

/// All PBW monomials of total degree at most `d`, in monomial order.
pub fn monomials_up_to(l: &ColorAlgebra, d: usize) -> Vec<PbwMonomial> {
    let n = l.dim();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(l: &ColorAlgebra, i: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<PbwMonomial>) {
        if i == cur.len() {
            out.push(PbwMonomial(cur.clone()));
            return;
        }
        let max = if l.is_odd(i) { left.min(1) } else { left };
        for a in 0..=max {
            cur[i] = a as u32;
            rec(l, i + 1, left - a, cur, out);
        }
        cur[i] = 0;
    }
    rec(l, 0, d, &mut cur, &mut out);
    out.sort();
    out
}

/// Scalar `c_m` with `phi(m) = c_m m` for the identity-on-generators map
/// `U(L^s) -> U(L)^s`: the twisted product of the letters of `m`.
fn correspondence_scale(l: &ColorAlgebra, sigma: &Cocycle, m: &PbwMonomial) -> Result<CycloScalar> {
    let g = l.group();
    let mut prefix = g.zero();
    let mut c = l.field().one();
    for i in m.word() {
        let d = &l.degrees()[i];
        c = &c * &sigma.eval(&prefix, d)?;
        prefix = g.add(&prefix, d)?;
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoReport {
    pub degree_bound: usize,
    pub pairs_checked: usize,
    pub mismatch: Option<(PbwMonomial, PbwMonomial)>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Checks `phi(u v) = phi(u) *_s phi(v)` for all monomial pairs with
/// `deg u + deg v <= d`, where products on the left are taken in `U(L^s)`.
pub fn check_scheunert_iso(l: &ColorAlgebra, sigma: &Cocycle, d: usize, parallel: bool) -> Result<IsoReport> {
    let twisted = l.twist(sigma)?;
    let monos = monomials_up_to(l, d);
    let scales: BTreeMap<PbwMonomial, CycloScalar> = monos
        .iter()
        .map(|m| correspondence_scale(l, sigma, m).map(|c| (m.clone(), c)))
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..monos.len())
        .flat_map(|a| (0..monos.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| monos[a].degree() + monos[b].degree() <= d)
        .collect();
    let field = l.field();
    let n = l.dim();
    let check = |&(a, b): &(usize, usize)| -> Result<bool> {
        let (u, v) = (&monos[a], &monos[b]);
        let eu = PbwElement::monomial(field, u.clone(), field.one());
        let ev = PbwElement::monomial(field, v.clone(), field.one());
        let lhs_raw = pbw_multiply(&twisted, &eu, &ev, None)?.element;
        let mut lhs = PbwElement::zero(field, n);
        for (m, c) in lhs_raw.terms() {
            lhs.add_term(m.clone(), c * &scales[m]);
        }
        let rhs = twist_pbw(l, sigma, &eu, &ev)?.scale(&(&scales[u] * &scales[v]));
        Ok(lhs == rhs)
    };
    let results: Vec<Result<bool>> = if parallel {
        pairs.par_iter().map(check).collect()
    } else {
        pairs.iter().map(check).collect()
    };
    let mut checked = 0;
    for (p, r) in pairs.iter().zip(results) {
        checked += 1;
        if !r? {
            return Ok(IsoReport {
                degree_bound: d,
                pairs_checked: checked,
                mismatch: Some((monos[p.0].clone(), monos[p.1].clone())),
            });
        }
    }
    Ok(IsoReport { degree_bound: d, pairs_checked: checked, mismatch: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::lie::catalog;
    use crate::pairings::scheunert_sigma;

    fn gen(l: &ColorAlgebra, i: usize) -> PbwElement {
        PbwElement::generator(l.field(), l.dim(), i)
    }

    fn mul(l: &ColorAlgebra, u: &PbwElement, v: &PbwElement) -> PbwElement {
        pbw_multiply(l, u, v, None).unwrap().element
    }

    #[test]
    fn heisenberg_reorder() {
        let h = catalog::heisenberg(3).unwrap().as_color();
        let p = mul(&h, &gen(&h, 1), &gen(&h, 0));
        let f = h.field();
        let mut expected = PbwElement::monomial(f, PbwMonomial::new(vec![1, 1, 0]), f.one());
        expected.add_term(PbwMonomial::generator(3, 2), f.from_int(-1));
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "-e3 + e1*e2");
        let q = mul(&h, &gen(&h, 0), &gen(&h, 1));
        assert_eq!(q, PbwElement::monomial(f, PbwMonomial::new(vec![1, 1, 0]), f.one()));
    }

    #[test]
    fn odd_square() {
        let s = corpus::super_odd_square();
        let p = mul(&s, &gen(&s, 0), &gen(&s, 0));
        let f = s.field();
        assert_eq!(p, PbwElement::monomial(f, PbwMonomial::generator(2, 1), f.from_ratio(1, 2).unwrap()));
    }

    #[test]
    fn cutoff_flags_truncation() {
        let h = catalog::heisenberg(3).unwrap().as_color();
        let r = pbw_multiply(&h, &gen(&h, 1), &gen(&h, 0), Some(1)).unwrap();
        assert!(r.truncated);
        assert_eq!(r.element.max_degree(), Some(1));
        let r = pbw_multiply(&h, &gen(&h, 1), &gen(&h, 0), Some(2)).unwrap();
        assert!(!r.truncated);
    }

    #[test]
    fn monomial_enumeration_respects_odd() {
        let s = corpus::super_odd_pair();
        let ms = monomials_up_to(&s, 2);
        assert!(ms.iter().all(|m| m.exponents()[0] <= 1 && m.exponents()[1] <= 1));
        // 1, x, y, z, xy, xz, yz, z^2
        assert_eq!(ms.len(), 8);
    }

    #[test]
    fn twist_unit_unchanged() {
        let h = corpus::color_heisenberg();
        let sigma = scheunert_sigma(h.epsilon()).unwrap();
        let one = PbwElement::one(h.field(), 3);
        let x = gen(&h, 1);
        assert_eq!(twist_pbw(&h, &sigma, &one, &x).unwrap(), x);
    }

    #[test]
    fn twisted_heisenberg_product() {
        let h = corpus::color_heisenberg();
        let sigma = scheunert_sigma(h.epsilon()).unwrap();
        let t = twist_pbw(&h, &sigma, &gen(&h, 1), &gen(&h, 0)).unwrap();
        let plain = mul(&h, &gen(&h, 1), &gen(&h, 0));
        let s21 = sigma.eval(&h.degrees()[1], &h.degrees()[0]).unwrap();
        assert_eq!(t, plain.scale(&s21));
    }

    #[test]
    fn scheunert_iso_small() {
        let h = corpus::color_heisenberg();
        let sigma = scheunert_sigma(h.epsilon()).unwrap();
        let r = check_scheunert_iso(&h, &sigma, 4, false).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.pairs_checked > 0);
        let s = corpus::super_odd_square();
        let one = Cocycle::trivial(s.group().clone(), Arc::clone(s.field()));
        assert!(check_scheunert_iso(&s, &one, 2, false).unwrap().passed());
    }
}
