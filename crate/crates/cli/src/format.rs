//! Line-based algebra files.
//!
//! ```text
//! # the color Heisenberg algebra
//! group free=0 torsion=2,2
//! scalars cyclotomic=1
//! epsilon
//! pair g1 g2 = -1
//! pair g2 g1 = -1
//! algebra
//! dim 3
//! deg e1 = (1,0)
//! deg e2 = (0,1)
//! deg e3 = (1,1)
//! bracket e1 e2 = e3
//! bracket e2 e1 = e3
//! ```
//!
//! An optional `grading free=<r> torsion=<...>` section assigns `gdeg e<i> = (...)`
//! to an adapted basis, given by `gbasis e<i> = (c1, ..., cn)` rows when it is not
//! the stored basis. Cocycle files hold `pair` lines only.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use colorlie::color::ColorAlgebra;
use colorlie::gradings::Grading;
use colorlie::linalg::Matrix;
use colorlie::pairings::{Bicharacter, Cocycle, CommutationFactor};
use colorlie::table::ProductTable;
use colorlie::{CycloField, CycloScalar, GroupElement, GroupSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub algebra: ColorAlgebra,
    pub grading: Option<Grading>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Header,
    Epsilon,
    Algebra,
    Grading,
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn err(&self, at: &str, message: impl Into<String>) -> FormatError {
        // `at` is a subslice of the line when possible
        let column = match (at.as_ptr() as usize).checked_sub(self.text.as_ptr() as usize) {
            Some(off) if off <= self.text.len() => off + 1,
            _ => self.text.find(at).map_or(1, |c| c + 1),
        };
        FormatError { line: self.number, column, message: message.into() }
    }

    fn whole(&self, message: impl Into<String>) -> FormatError {
        FormatError { line: self.number, column: 1, message: message.into() }
    }
}

fn strip_comment(s: &str) -> &str {
    s.split('#').next().unwrap_or("")
}

/// `e<i>` or `g<i>` with a 1-based index.
fn index<'a>(line: &Line<'a>, token: &'a str, prefix: char, bound: usize) -> Result<usize, FormatError> {
    let digits = token
        .strip_prefix(prefix)
        .ok_or_else(|| line.err(token, format!("expected `{prefix}<index>`, found `{token}`")))?;
    let i: usize = digits
        .parse()
        .map_err(|_| line.err(token, format!("bad index in `{token}`")))?;
    if i == 0 || i > bound {
        return Err(line.err(token, format!("index {prefix}{i} out of range 1..={bound}")));
    }
    Ok(i - 1)
}

/// Splits `lhs = rhs`, returning the words of `lhs` and the trimmed `rhs`.
fn split_eq<'a>(line: &Line<'a>, body: &'a str) -> Result<(Vec<&'a str>, &'a str), FormatError> {
    let (lhs, rhs) = body
        .split_once('=')
        .ok_or_else(|| line.err(body, "expected `=`"))?;
    Ok((lhs.split_whitespace().collect(), rhs.trim()))
}

fn parse_coords<'a>(line: &Line<'a>, text: &'a str) -> Result<Vec<i64>, FormatError> {
    GroupElement::parse_coords(text).map_err(|e| line.err(text, e.to_string()))
}

fn scalar<'a>(line: &Line<'a>, field: &Arc<CycloField>, text: &'a str) -> Result<CycloScalar, FormatError> {
    let inner = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(text);
    field.parse(inner).map_err(|e| line.err(text, e.to_string()))
}

/// Splits a linear combination at top-level `+` and `-` signs, keeping the signs.
fn split_terms(s: &str) -> Vec<(usize, &str)> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > start => {
                let prev = s[..i].trim_end();
                // a sign right after `^`, `*` or `/` belongs to the current term
                if !(prev.ends_with('^') || prev.ends_with('*') || prev.ends_with('/') || prev.is_empty()) {
                    out.push((start, &s[start..i]));
                    start = i;
                }
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

/// `<term> (+|- <term>)*` with `term = [coef*]e<k>`, or `0`.
fn combination<'a>(
    line: &Line<'a>,
    field: &Arc<CycloField>,
    text: &'a str,
    dim: usize,
) -> Result<Vec<(usize, CycloScalar)>, FormatError> {
    if text == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (_, raw) in split_terms(text) {
        let term = raw.trim();
        if term.is_empty() {
            return Err(line.err(raw, "empty term"));
        }
        let (negative, rest) = match term.as_bytes()[0] {
            b'-' => (true, term[1..].trim_start()),
            b'+' => (false, term[1..].trim_start()),
            _ => (false, term),
        };
        let split = rest.rfind('e').filter(|&p| rest[p + 1..].chars().all(|c| c.is_ascii_digit()));
        let Some(p) = split.filter(|&p| p + 1 < rest.len()) else {
            return Err(line.err(rest, format!("term `{rest}` does not end in a basis element e<k>")));
        };
        let k = index(line, &rest[p..], 'e', dim)?;
        let coef_text = rest[..p].trim_end();
        let mut c = if coef_text.is_empty() {
            field.one()
        } else {
            let coef_text = coef_text
                .strip_suffix('*')
                .ok_or_else(|| line.err(coef_text, "expected `*` between coefficient and basis element"))?
                .trim();
            scalar(line, field, coef_text)?
        };
        if negative {
            c = -c;
        }
        out.push((k, c));
    }
    Ok(out)
}

struct Builder {
    group: Option<GroupSpec>,
    order: Option<u64>,
    field: Option<Arc<CycloField>>,
    pairs: Vec<(usize, usize, CycloScalar)>,
    dim: Option<usize>,
    degrees: Vec<Option<GroupElement>>,
    table: Option<ProductTable>,
    grading_group: Option<GroupSpec>,
    gdegrees: Vec<Option<GroupElement>>,
    gbasis: Vec<Option<Vec<CycloScalar>>>,
}

impl Builder {
    fn group(&self, line: &Line) -> Result<&GroupSpec, FormatError> {
        self.group.as_ref().ok_or_else(|| line.whole("`group` line must come first"))
    }

    fn field(&mut self, line: &Line) -> Result<Arc<CycloField>, FormatError> {
        if let Some(f) = &self.field {
            return Ok(Arc::clone(f));
        }
        let n = match self.order {
            Some(n) => n,
            None => default_order(self.group(line)?),
        };
        let f = CycloField::new(n).map_err(|e| line.whole(e.to_string()))?;
        self.field = Some(Arc::clone(&f));
        Ok(f)
    }

    fn dim(&self, line: &Line) -> Result<usize, FormatError> {
        self.dim.ok_or_else(|| line.whole("`dim` must precede basis references"))
    }
}

/// The torsion exponent, halved when it is `2 mod 4` since `Q(zeta_2m) = Q(zeta_m)` for odd `m`.
pub fn default_order(g: &GroupSpec) -> u64 {
    let e = g.torsion_exponent();
    if e % 4 == 2 { e / 2 } else { e }
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, FormatError> {
    let mut b = Builder {
        group: None,
        order: None,
        field: None,
        pairs: Vec::new(),
        dim: None,
        degrees: Vec::new(),
        table: None,
        grading_group: None,
        gdegrees: Vec::new(),
        gbasis: Vec::new(),
    };
    let mut section = Section::Header;
    let mut last_line = 0;
    for (n, raw) in text.lines().enumerate() {
        let line = Line { number: n + 1, text: raw };
        last_line = n + 1;
        let body = strip_comment(raw).trim();
        if body.is_empty() {
            continue;
        }
        let (keyword, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        match keyword {
            "group" => {
                if b.group.is_some() {
                    return Err(line.whole("duplicate `group` line"));
                }
                b.group = Some(GroupSpec::from_str(body).map_err(|e| line.err(rest, e.to_string()))?);
            }
            "scalars" => {
                if b.field.is_some() {
                    return Err(line.whole("`scalars` must precede every scalar"));
                }
                let v = rest
                    .strip_prefix("cyclotomic=")
                    .ok_or_else(|| line.err(rest, "expected `scalars cyclotomic=<N>`"))?;
                b.order = Some(v.parse().map_err(|_| line.err(v, format!("bad cyclotomic order `{v}`")))?);
            }
            "epsilon" => {
                b.group(&line)?;
                section = Section::Epsilon;
            }
            "algebra" => {
                b.group(&line)?;
                section = Section::Algebra;
            }
            "grading" => {
                if b.dim.is_none() {
                    return Err(line.whole("`grading` must follow the algebra section"));
                }
                let g = GroupSpec::from_str(rest).map_err(|e| line.err(rest, e.to_string()))?;
                b.grading_group = Some(g);
                section = Section::Grading;
            }
            "pair" if section == Section::Epsilon => {
                let field = b.field(&line)?;
                let r = b.group(&line)?.num_generators();
                let (lhs, rhs) = split_eq(&line, rest)?;
                let [gi, gj] = lhs[..] else {
                    return Err(line.err(rest, "expected `pair g<i> g<j> = <scalar>`"));
                };
                let (i, j) = (index(&line, gi, 'g', r)?, index(&line, gj, 'g', r)?);
                let v = scalar(&line, &field, rhs)?;
                b.pairs.push((i, j, v));
            }
            "dim" if section == Section::Algebra => {
                if b.dim.is_some() {
                    return Err(line.whole("duplicate `dim` line"));
                }
                let n: usize = rest.parse().map_err(|_| line.err(rest, format!("bad dimension `{rest}`")))?;
                let field = b.field(&line)?;
                b.dim = Some(n);
                b.degrees = vec![None; n];
                b.table = Some(ProductTable::new(field, n));
            }
            "deg" if section == Section::Algebra => {
                let n = b.dim(&line)?;
                let (lhs, rhs) = split_eq(&line, rest)?;
                let [e] = lhs[..] else {
                    return Err(line.err(rest, "expected `deg e<i> = (c1,...)`"));
                };
                let i = index(&line, e, 'e', n)?;
                let coords = parse_coords(&line, rhs)?;
                let g = b.group(&line)?.element(coords).map_err(|e| line.err(rhs, e.to_string()))?;
                if b.degrees[i].replace(g).is_some() {
                    return Err(line.err(e, format!("degree of {e} given twice")));
                }
            }
            "bracket" if section == Section::Algebra => {
                let n = b.dim(&line)?;
                let field = b.field(&line)?;
                let (lhs, rhs) = split_eq(&line, rest)?;
                let [ei, ej] = lhs[..] else {
                    return Err(line.err(rest, "expected `bracket e<i> e<j> = <combination>`"));
                };
                let (i, j) = (index(&line, ei, 'e', n)?, index(&line, ej, 'e', n)?);
                let terms = combination(&line, &field, rhs, n)?;
                let t = b.table.as_mut().expect("set with dim");
                if t.get(i, j).is_some() {
                    return Err(line.err(ei, format!("bracket [{ei}, {ej}] given twice")));
                }
                for (k, c) in terms {
                    t.add_term(i, j, k, c).map_err(|e| line.err(rhs, e.to_string()))?;
                }
            }
            "gdeg" if section == Section::Grading => {
                let n = b.dim(&line)?;
                if b.gdegrees.is_empty() {
                    b.gdegrees = vec![None; n];
                }
                let (lhs, rhs) = split_eq(&line, rest)?;
                let [e] = lhs[..] else {
                    return Err(line.err(rest, "expected `gdeg e<i> = (c1,...)`"));
                };
                let i = index(&line, e, 'e', n)?;
                let g = b.grading_group.as_ref().expect("set by the section header");
                let d = g
                    .element(parse_coords(&line, rhs)?)
                    .map_err(|e| line.err(rhs, e.to_string()))?;
                if b.gdegrees[i].replace(d).is_some() {
                    return Err(line.err(e, format!("grading degree of {e} given twice")));
                }
            }
            "gbasis" if section == Section::Grading => {
                let n = b.dim(&line)?;
                let field = b.field(&line)?;
                if b.gbasis.is_empty() {
                    b.gbasis = vec![None; n];
                }
                let (lhs, rhs) = split_eq(&line, rest)?;
                let [e] = lhs[..] else {
                    return Err(line.err(rest, "expected `gbasis e<i> = (c1, ..., cn)`"));
                };
                let i = index(&line, e, 'e', n)?;
                let inner = rhs
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| line.err(rhs, "expected a parenthesized row"))?;
                let row = inner
                    .split(',')
                    .map(|c| scalar(&line, &field, c.trim()))
                    .collect::<Result<Vec<_>, _>>()?;
                if row.len() != n {
                    return Err(line.err(rhs, format!("row has {} entries, expected {n}", row.len())));
                }
                if b.gbasis[i].replace(row).is_some() {
                    return Err(line.err(e, format!("adapted vector {e} given twice")));
                }
            }
            _ => return Err(line.err(keyword, format!("unexpected `{keyword}` here"))),
        }
    }
    finish(b, last_line + 1)
}

fn finish(mut b: Builder, end: usize) -> Result<AlgebraFile, FormatError> {
    let at_end = |m: String| FormatError { line: end, column: 1, message: m };
    let group = b.group.clone().ok_or_else(|| at_end("missing `group` line".into()))?;
    let n = b.dim.ok_or_else(|| at_end("missing `dim` line".into()))?;
    let end_line = Line { number: end, text: "" };
    let field = b.field(&end_line)?;
    let table = b.table.take().expect("set with dim");
    let degrees = b
        .degrees
        .iter()
        .enumerate()
        .map(|(i, d)| match d {
            Some(d) => Ok(d.clone()),
            None if group.num_generators() == 0 => Ok(group.zero()),
            None => Err(at_end(format!("missing `deg e{}`", i + 1))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let eps = Bicharacter::from_pairs(group, Arc::clone(&field), &b.pairs)
        .and_then(CommutationFactor::new)
        .map_err(|e| at_end(format!("epsilon: {e}")))?;
    let algebra = ColorAlgebra::new(eps, degrees, table.clone()).map_err(|e| at_end(e.to_string()))?;
    let grading = match b.grading_group.take() {
        None => None,
        Some(g) => {
            let degrees = (0..n)
                .map(|i| {
                    b.gdegrees
                        .get(i)
                        .cloned()
                        .flatten()
                        .ok_or_else(|| at_end(format!("missing `gdeg e{}`", i + 1)))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let base_change = if b.gbasis.is_empty() {
                None
            } else {
                let rows: Matrix = (0..n)
                    .map(|i| {
                        b.gbasis[i]
                            .clone()
                            .ok_or_else(|| at_end(format!("missing `gbasis e{}`", i + 1)))
                    })
                    .collect::<Result<_, _>>()?;
                Some(rows)
            };
            Some(Grading::new(table, g, degrees, base_change).map_err(|e| at_end(e.to_string()))?)
        }
    };
    Ok(AlgebraFile { algebra, grading })
}

/// `pair` lines (an optional `cocycle` header and comments are allowed).
pub fn parse_cocycle(text: &str, group: &GroupSpec, field: &Arc<CycloField>) -> Result<Cocycle, FormatError> {
    let r = group.num_generators();
    let mut pairs = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = Line { number: n + 1, text: raw };
        let body = strip_comment(raw).trim();
        if body.is_empty() || body == "cocycle" {
            continue;
        }
        let rest = body
            .strip_prefix("pair")
            .ok_or_else(|| line.err(body, "expected `pair g<i> g<j> = <scalar>`"))?;
        let (lhs, rhs) = split_eq(&line, rest)?;
        let [gi, gj] = lhs[..] else {
            return Err(line.err(rest, "expected `pair g<i> g<j> = <scalar>`"));
        };
        let (i, j) = (index(&line, gi, 'g', r)?, index(&line, gj, 'g', r)?);
        pairs.push((i, j, scalar(&line, field, rhs)?));
    }
    Bicharacter::from_pairs(group.clone(), Arc::clone(field), &pairs)
        .map(Cocycle::new)
        .map_err(|e| FormatError { line: 1, column: 1, message: e.to_string() })
}

fn scalar_text(c: &CycloScalar) -> String {
    if c.is_rational() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

/// `c1*e1 - c2*e2 + ...`, or `0`.
pub fn combination_text(entries: impl IntoIterator<Item = (usize, CycloScalar)>) -> String {
    let mut out = String::new();
    for (k, c) in entries {
        let negative = c.is_rational() && c.to_string().starts_with('-');
        let abs = if negative { -c } else { c };
        let sep = match (out.is_empty(), negative) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let coef = if abs.is_one() { String::new() } else { format!("{}*", scalar_text(&abs)) };
        out.push_str(&format!("{sep}{coef}e{}", k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn pair_lines(out: &mut String, b: &Bicharacter) {
    for (i, j, v) in b.nontrivial_pairs() {
        out.push_str(&format!("pair g{} g{} = {v}\n", i + 1, j + 1));
    }
}

pub fn emit_cocycle(sigma: &Cocycle) -> String {
    let mut out = String::from("cocycle\n");
    pair_lines(&mut out, sigma.as_bicharacter());
    out
}

fn group_body(g: &GroupSpec) -> String {
    let s = g.to_string();
    s.strip_prefix("group ").unwrap_or(&s).to_string()
}

pub fn emit_algebra_file(file: &AlgebraFile) -> String {
    let l = &file.algebra;
    let mut out = String::new();
    out.push_str(&format!("{}\n", l.group()));
    out.push_str(&format!("scalars cyclotomic={}\n", l.field().order()));
    if !l.epsilon().as_bicharacter().is_trivial() {
        out.push_str("epsilon\n");
        pair_lines(&mut out, l.epsilon().as_bicharacter());
    }
    out.push_str("algebra\n");
    out.push_str(&format!("dim {}\n", l.dim()));
    if l.group().num_generators() > 0 {
        for (i, d) in l.degrees().iter().enumerate() {
            out.push_str(&format!("deg e{} = {d}\n", i + 1));
        }
    }
    for (&(i, j), s) in l.table().entries() {
        let terms = combination_text(s.iter().map(|(&k, c)| (k, c.clone())));
        out.push_str(&format!("bracket e{} e{} = {terms}\n", i + 1, j + 1));
    }
    if let Some(g) = &file.grading {
        out.push_str(&format!("grading {}\n", group_body(g.group())));
        for (i, d) in g.degrees().iter().enumerate() {
            out.push_str(&format!("gdeg e{} = {d}\n", i + 1));
        }
        if let Some(p) = g.base_change() {
            for (i, row) in p.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(scalar_text).collect();
                out.push_str(&format!("gbasis e{} = ({})\n", i + 1, cells.join(", ")));
            }
        }
    }
    out
}

impl fmt::Display for AlgebraFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_algebra_file(self))
    }
}
