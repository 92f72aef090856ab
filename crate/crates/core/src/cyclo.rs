//! Exact arithmetic in the cyclotomic field `Q(zeta_N)`.
//!
//! Scalars are stored as coefficient vectors of length `phi(N)` in the power
//! basis `1, zeta, ..., zeta^(phi(N)-1)`, i.e. as canonical remainders modulo
//! the `N`-th cyclotomic polynomial. Every scalar carries a shared handle to
//! its field; combining scalars from different fields is a programming error
//! and panics.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

type QPoly = Vec<BigRational>;

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let n = a.len().max(b.len());
    let mut out: QPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero and trimmed.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let mut r: QPoly = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / lead;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &c * bj;
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// The `n`-th cyclotomic polynomial, lowest degree first.
///
/// Computed by dividing `x^n - 1` by `Phi_d` for every proper divisor `d` of `n`.
pub fn cyclotomic_poly(n: u64) -> Vec<BigRational> {
    assert!(n > 0, "cyclotomic polynomial order must be positive");
    let mut p = vec![BigRational::zero(); n as usize + 1];
    p[0] = -BigRational::one();
    p[n as usize] = BigRational::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let (q, r) = poly_divrem(&p, &cyclotomic_poly(d));
        debug_assert!(r.is_empty());
        p = q;
    }
    p
}

/// The field `Q(zeta_N)` with precomputed reduction data.
pub struct CycloField {
    order: u64,
    degree: usize,
    modulus: QPoly,
    /// Canonical forms of `zeta^k` for `0 <= k < max(N, 2*phi(N) - 1)`.
    powers: Vec<QPoly>,
}

impl fmt::Debug for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.order)
    }
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for CycloField {}

impl CycloField {
    pub fn new(order: u64) -> Result<Arc<Self>> {
        if order == 0 {
            return Err(Error::Precondition("cyclotomic order must be positive".into()));
        }
        let modulus = cyclotomic_poly(order);
        let degree = modulus.len() - 1;
        let count = (order as usize).max(2 * degree);
        let mut powers = Vec::with_capacity(count);
        let mut cur: QPoly = vec![BigRational::one()];
        for _ in 0..count {
            let mut padded = cur.clone();
            padded.resize(degree, BigRational::zero());
            powers.push(padded);
            // multiply by x and reduce
            let mut next = vec![BigRational::zero()];
            next.extend(cur.iter().cloned());
            trim(&mut next);
            cur = poly_divrem(&next, &modulus).1;
        }
        Ok(Arc::new(Self { order, degree, modulus, powers }))
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// `phi(N)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[BigRational] {
        &self.modulus
    }

    fn from_poly(self: &Arc<Self>, p: &[BigRational]) -> CycloScalar {
        let mut coeffs = vec![BigRational::zero(); self.degree];
        if p.len() <= self.degree {
            for (c, x) in coeffs.iter_mut().zip(p) {
                *c = x.clone();
            }
        } else {
            for (k, x) in p.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let reduced: QPoly;
                let pw = if k < self.powers.len() {
                    &self.powers[k]
                } else {
                    reduced = self.reduce_power(k as u64);
                    &reduced
                };
                for (c, y) in coeffs.iter_mut().zip(pw) {
                    if !y.is_zero() {
                        *c += x * y;
                    }
                }
            }
        }
        CycloScalar { field: Arc::clone(self), coeffs }
    }

    fn reduce_power(&self, k: u64) -> QPoly {
        self.powers[(k % self.order) as usize].clone()
    }

    pub fn zero(self: &Arc<Self>) -> CycloScalar {
        CycloScalar { field: Arc::clone(self), coeffs: vec![BigRational::zero(); self.degree] }
    }

    pub fn one(self: &Arc<Self>) -> CycloScalar {
        self.from_rational(BigRational::one())
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> CycloScalar {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(self: &Arc<Self>, num: i64, den: i64) -> Result<CycloScalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.from_rational(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn from_rational(self: &Arc<Self>, q: BigRational) -> CycloScalar {
        let mut s = self.zero();
        s.coeffs[0] = q;
        s
    }

    /// `zeta^k` with the exponent reduced modulo `N`; negative exponents allowed.
    pub fn root_of_unity(self: &Arc<Self>, k: i64) -> CycloScalar {
        let e = k.rem_euclid(self.order as i64) as usize;
        CycloScalar { field: Arc::clone(self), coeffs: self.powers[e].clone() }
    }

    /// Parses a scalar literal such as `-1`, `1/2`, `zeta^3` or `1/2*zeta^3 + 1`.
    pub fn parse(self: &Arc<Self>, text: &str) -> Result<CycloScalar> {
        literal::parse(self, text)
    }
}

/// An element of `Q(zeta_N)`.
#[derive(Clone)]
pub struct CycloScalar {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

impl CycloScalar {
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then(|| &self.coeffs[0])
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.coeffs[0].is_one()
    }

    pub fn is_minus_one(&self) -> bool {
        self.is_rational() && (-&self.coeffs[0]).is_one()
    }

    fn same_field(&self, other: &CycloScalar) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field.order == other.field.order,
            "mixing scalars of Q(zeta_{}) and Q(zeta_{})",
            self.field.order,
            other.field.order
        );
    }

    pub fn inv(&self) -> Result<CycloScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(self.field.from_rational(q.recip()));
        }
        let mut a = self.coeffs.clone();
        trim(&mut a);
        let (mut r0, mut r1) = (self.field.modulus.clone(), a);
        let (mut s0, mut s1): (QPoly, QPoly) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since the modulus is irreducible
        if r0.len() != 1 {
            return Err(Error::Internal("cyclotomic modulus is not coprime to a nonzero element".into()));
        }
        let c = r0[0].recip();
        let s: QPoly = s0.into_iter().map(|x| x * &c).collect();
        Ok(self.field.from_poly(&poly_divrem(&s, &self.field.modulus).1))
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<CycloScalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Returns `k` with `self = zeta^k`, if any.
    pub fn root_of_unity_exponent(&self) -> Result<Option<u64>> {
        if self.is_zero() {
            return Err(Error::Precondition("zero is not a unit".into()));
        }
        Ok((0..self.field.order)
            .find(|&k| self.field.powers[k as usize] == self.coeffs))
    }

    /// Like [`Self::root_of_unity_exponent`] but also recognises `-zeta^k`
    /// (only relevant for odd `N`). Returns `(negated, k)`.
    pub fn signed_root_of_unity(&self) -> Result<Option<(bool, u64)>> {
        if let Some(k) = self.root_of_unity_exponent()? {
            return Ok(Some((false, k)));
        }
        Ok((-self).root_of_unity_exponent()?.map(|k| (true, k)))
    }

    pub fn div(&self, other: &CycloScalar) -> Result<CycloScalar> {
        Ok(self * &other.inv()?)
    }
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycloScalar {}

impl Hash for CycloScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl<'a> Add<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;

    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        self.same_field(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        CycloScalar { field: Arc::clone(&self.field), coeffs }
    }
}

impl<'a> Sub<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;

    fn sub(self, rhs: &CycloScalar) -> CycloScalar {
        self.same_field(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        CycloScalar { field: Arc::clone(&self.field), coeffs }
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;

    fn neg(self) -> CycloScalar {
        CycloScalar { field: Arc::clone(&self.field), coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Neg for CycloScalar {
    type Output = CycloScalar;

    fn neg(self) -> CycloScalar {
        -&self
    }
}

impl<'a> Mul<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;

    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        self.same_field(rhs);
        let field = Arc::clone(&self.field);
        if let Some(q) = self.as_rational() {
            let coeffs = if q.is_one() {
                rhs.coeffs.clone()
            } else {
                rhs.coeffs.iter().map(|b| q * b).collect()
            };
            return CycloScalar { field, coeffs };
        }
        if let Some(q) = rhs.as_rational() {
            let coeffs = self.coeffs.iter().map(|a| a * q).collect();
            return CycloScalar { field, coeffs };
        }
        let prod = poly_mul(&self.coeffs, &rhs.coeffs);
        field.from_poly(&prod)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: CycloScalar) -> CycloScalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycloScalar {
    /// Emits the canonical literal accepted by [`CycloField::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => fmt_rational(&mag),
                (1, true) => "zeta".to_string(),
                (_, true) => format!("zeta^{k}"),
                (1, false) => format!("{}*zeta", fmt_rational(&mag)),
                (_, false) => format!("{}*zeta^{k}", fmt_rational(&mag)),
            };
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

mod literal {
    use super::*;

    struct Lexer<'a> {
        src: &'a [u8],
        pos: usize,
    }

    impl<'a> Lexer<'a> {
        fn skip_ws(&mut self) {
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
        }

        fn peek(&mut self) -> Option<u8> {
            self.skip_ws();
            self.src.get(self.pos).copied()
        }

        fn eat(&mut self, c: u8) -> bool {
            if self.peek() == Some(c) {
                self.pos += 1;
                true
            } else {
                false
            }
        }

        fn err(&self, what: &str) -> Error {
            Error::Parse(format!(
                "{what} at column {} in scalar `{}`",
                self.pos + 1,
                String::from_utf8_lossy(self.src)
            ))
        }

        fn uint(&mut self) -> Result<BigInt> {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected integer"));
            }
            let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            Ok(s.parse().unwrap())
        }

        fn int(&mut self) -> Result<i64> {
            let neg = self.eat(b'-');
            let v = self.uint()?;
            let v: i64 = v.try_into().map_err(|_| self.err("exponent too large"))?;
            Ok(if neg { -v } else { v })
        }

        fn zeta(&mut self) -> bool {
            self.skip_ws();
            if self.src[self.pos..].starts_with(b"zeta") {
                self.pos += 4;
                true
            } else {
                false
            }
        }
    }

    pub(super) fn parse(field: &Arc<CycloField>, text: &str) -> Result<CycloScalar> {
        let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
        let mut acc = field.zero();
        let mut first = true;
        loop {
            let negate = if first {
                false
            } else if lx.eat(b'+') {
                false
            } else if lx.eat(b'-') {
                true
            } else {
                break;
            };
            first = false;
            let term = term(&mut lx, field)?;
            acc = if negate { &acc - &term } else { &acc + &term };
        }
        if first {
            return Err(lx.err("empty scalar"));
        }
        if lx.peek().is_some() {
            return Err(lx.err("unexpected character"));
        }
        Ok(acc)
    }

    fn term(lx: &mut Lexer<'_>, field: &Arc<CycloField>) -> Result<CycloScalar> {
        let sign = lx.eat(b'-');
        let (coef, need_zeta) = if lx.zeta() {
            (BigRational::one(), true)
        } else {
            let num = lx.uint()?;
            let den = if lx.eat(b'/') { lx.uint()? } else { BigInt::one() };
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            let q = BigRational::new(num, den);
            if lx.eat(b'*') {
                if !lx.zeta() {
                    return Err(lx.err("expected `zeta` after `*`"));
                }
                (q, true)
            } else {
                (q, false)
            }
        };
        let coef = if sign { -coef } else { coef };
        if !need_zeta {
            return Ok(field.from_rational(coef));
        }
        let exp = if lx.eat(b'^') { lx.int()? } else { 1 };
        Ok(&field.from_rational(coef) * &field.root_of_unity(exp))
    }
}
