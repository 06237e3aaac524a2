//! Session files: one ring declaration followed by named ideals, double lines
//! and points.
//!
//! ```text
//! # comments run to the end of the line
//! ring Q[x,y,z,u] order grevlex
//! ideal Y = x^2, y^2
//! ideal I1 = z*x + u*y, x^2, x*y, y^2
//! dline L1 support x,y pair (z, u)
//! point P = (0:0:0:1)
//! ```
//!
//! Points written with `:` are projective, with `,` affine. Coefficients are
//! integers or fractions `p/q`. Syntax errors carry a 1-based line and column;
//! an expression cut off at the end of a line is reported at its first column.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::double_lines::DoubleLine;
use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::ideal::Ideal;
use crate::local::RationalPoint;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{make_ring, Ring};

#[derive(Clone, Debug)]
pub enum Item {
    Ideal(Ideal),
    DoubleLine(DoubleLine),
    Point(RationalPoint),
}

impl Item {
    pub fn kind(&self) -> &'static str {
        match self {
            Item::Ideal(_) => "ideal",
            Item::DoubleLine(_) => "dline",
            Item::Point(_) => "point",
        }
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Ideal(i) => write!(f, "{i}"),
            Item::DoubleLine(l) => write!(f, "{l}"),
            Item::Point(p) => write!(f, "{}", p.describe()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Session {
    pub ring: Ring,
    pub items: BTreeMap<String, Item>,
}

impl Session {
    pub fn get(&self, name: &str) -> Result<&Item> {
        self.items.get(name).ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal> {
        match self.get(name)? {
            Item::Ideal(i) => Ok(i),
            other => Err(Error::Usage(format!("`{name}` is a {}, expected an ideal", other.kind()))),
        }
    }

    /// Ideals, and double lines through their ideals.
    pub fn ideal_like(&self, name: &str) -> Result<Ideal> {
        match self.get(name)? {
            Item::Ideal(i) => Ok(i.clone()),
            Item::DoubleLine(l) => Ok(crate::double_lines::double_line_ideal(l)),
            other => Err(Error::Usage(format!("`{name}` is a {}, expected an ideal", other.kind()))),
        }
    }

    pub fn double_line(&self, name: &str) -> Result<&DoubleLine> {
        match self.get(name)? {
            Item::DoubleLine(l) => Ok(l),
            other => Err(Error::Usage(format!("`{name}` is a {}, expected a dline", other.kind()))),
        }
    }

    pub fn point(&self, name: &str) -> Result<&RationalPoint> {
        match self.get(name)? {
            Item::Point(p) => Ok(p),
            other => Err(Error::Usage(format!("`{name}` is a {}, expected a point", other.kind()))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(BigInt),
    Sym(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
        }
    }
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, col, message: message.into() }
}

fn lex(line: usize, text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Num(s.parse().unwrap()), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "=,()[]:+-*^/".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(syntax(line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

/// Cursor over one line's tokens.
struct Cursor<'a> {
    line: usize,
    toks: &'a [(Tok, usize)],
    pos: usize,
    /// Column reported for errors at the end of the line.
    anchor: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.anchor, |(_, c)| *c)
    }

    fn err(&self, expected: &str) -> Error {
        match self.toks.get(self.pos) {
            Some((t, c)) => syntax(self.line, *c, format!("expected {expected}, found {t}")),
            None => syntax(self.line, self.anchor, format!("expected {expected}, found end of line")),
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("`{c}`")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize)> {
        let col = self.col();
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok((s, col))
            }
            _ => Err(self.err(what)),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(&format!("`{kw}`"))),
        }
    }

    fn end(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            Err(self.err("end of line"))
        } else {
            Ok(())
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }
}

fn rational(field: &Field, cur: &mut Cursor<'_>) -> Result<Coeff> {
    let col = cur.col();
    let neg = cur.eat('-');
    let Some(Tok::Num(num)) = cur.peek().cloned() else {
        return Err(cur.err("a number"));
    };
    cur.pos += 1;
    let mut den = BigInt::from(1);
    if cur.eat('/') {
        match cur.bump() {
            Some(Tok::Num(d)) if !d.is_zero() => den = d,
            Some(Tok::Num(_)) => return Err(syntax(cur.line, col, "zero denominator")),
            _ => {
                cur.pos -= 1;
                return Err(cur.err("a denominator"));
            }
        }
    }
    let num = if neg { -num } else { num };
    field
        .from_ratio(&num, &den)
        .map_err(|_| syntax(cur.line, col, "denominator vanishes in the coefficient field"))
}

fn expr(ring: &Ring, cur: &mut Cursor<'_>) -> Result<Polynomial> {
    let mut acc = if cur.eat('-') { -&term(ring, cur)? } else {
        cur.eat('+');
        term(ring, cur)?
    };
    loop {
        if cur.eat('+') {
            acc = &acc + &term(ring, cur)?;
        } else if cur.eat('-') {
            acc = &acc - &term(ring, cur)?;
        } else {
            return Ok(acc);
        }
    }
}

fn term(ring: &Ring, cur: &mut Cursor<'_>) -> Result<Polynomial> {
    let mut acc = factor(ring, cur)?;
    while cur.eat('*') {
        acc = &acc * &factor(ring, cur)?;
    }
    Ok(acc)
}

fn factor(ring: &Ring, cur: &mut Cursor<'_>) -> Result<Polynomial> {
    let base = atom(ring, cur)?;
    if cur.eat('^') {
        match cur.bump() {
            Some(Tok::Num(e)) => {
                let e: u32 = e.try_into().map_err(|_| syntax(cur.line, cur.col(), "exponent too large"))?;
                return Ok(base.pow(e));
            }
            _ => {
                cur.pos -= 1;
                return Err(cur.err("an exponent"));
            }
        }
    }
    Ok(base)
}

fn atom(ring: &Ring, cur: &mut Cursor<'_>) -> Result<Polynomial> {
    let col = cur.col();
    match cur.peek().cloned() {
        Some(Tok::Num(_)) => Ok(Polynomial::constant(ring, rational(ring.field(), cur)?)),
        Some(Tok::Ident(name)) => {
            cur.pos += 1;
            Polynomial::var_named(ring, &name)
                .ok_or_else(|| syntax(cur.line, col, format!("unknown variable `{name}`")))
        }
        Some(Tok::Sym('(')) => {
            cur.pos += 1;
            let e = expr(ring, cur)?;
            cur.expect(')')?;
            Ok(e)
        }
        Some(Tok::Sym('-')) => {
            cur.pos += 1;
            Ok(-&factor(ring, cur)?)
        }
        _ => Err(cur.err("a variable, number or `(`")),
    }
}

/// A comma-separated polynomial list; each element anchors end-of-line errors.
fn poly_list(ring: &Ring, cur: &mut Cursor<'_>) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    loop {
        cur.anchor = cur.col();
        out.push(expr(ring, cur)?);
        if !cur.eat(',') {
            return Ok(out);
        }
    }
}

fn ring_decl(cur: &mut Cursor<'_>) -> Result<Ring> {
    let (field_name, col) = cur.ident("a field (`Q` or `F<p>`)")?;
    let field = if field_name == "Q" {
        Field::Rationals
    } else if let Some(p) = field_name.strip_prefix('F').and_then(|p| p.parse::<u64>().ok()) {
        Field::prime(p).map_err(|e| syntax(cur.line, col, e.to_string()))?
    } else {
        return Err(syntax(cur.line, col, format!("unknown field `{field_name}`")));
    };
    cur.expect('[')?;
    let mut names = Vec::new();
    loop {
        names.push(cur.ident("a variable name")?.0);
        if cur.eat(']') {
            break;
        }
        cur.expect(',')?;
    }
    let mut order = MonomialOrder::GrevLex;
    if !cur.at_end() {
        cur.keyword("order")?;
        let ocol = cur.col();
        let (name, _) = cur.ident("a monomial order")?;
        let text = if cur.eat('(') {
            let k = match cur.bump() {
                Some(Tok::Num(k)) => k,
                _ => {
                    cur.pos -= 1;
                    return Err(cur.err("a block size"));
                }
            };
            cur.expect(')')?;
            format!("{name}({k})")
        } else {
            name
        };
        order = text.parse().map_err(|e: Error| syntax(cur.line, ocol, e.to_string()))?;
    }
    cur.end()?;
    make_ring(&names, field, order).map_err(|e| syntax(cur.line, 1, e.to_string()))
}

fn point_decl(ring: &Ring, cur: &mut Cursor<'_>) -> Result<RationalPoint> {
    let col = cur.col();
    cur.expect('(')?;
    let mut coords = vec![rational(ring.field(), cur)?];
    let sep = match cur.peek() {
        Some(Tok::Sym(c @ (':' | ','))) => *c,
        _ => ':',
    };
    while cur.eat(sep) {
        coords.push(rational(ring.field(), cur)?);
    }
    cur.expect(')')?;
    if coords.len() != ring.nvars() {
        return Err(syntax(
            cur.line,
            col,
            format!("point has {} coordinates, ring has {} variables", coords.len(), ring.nvars()),
        ));
    }
    if sep == ':' {
        RationalPoint::projective(ring.field(), coords).map_err(|e| syntax(cur.line, col, e.to_string()))
    } else {
        Ok(RationalPoint::Affine(coords))
    }
}

fn dline_decl(ring: &Ring, cur: &mut Cursor<'_>) -> Result<DoubleLine> {
    let col = cur.col();
    cur.keyword("support")?;
    let (s0, c0) = cur.ident("a support variable")?;
    cur.expect(',')?;
    let (s1, c1) = cur.ident("a support variable")?;
    cur.keyword("pair")?;
    cur.expect('(')?;
    cur.anchor = cur.col();
    let a = expr(ring, cur)?;
    cur.expect(',')?;
    cur.anchor = cur.col();
    let b = expr(ring, cur)?;
    cur.expect(')')?;
    cur.end()?;
    let idx = |n: &str, c: usize| ring.var_index(n).ok_or_else(|| syntax(cur.line, c, format!("unknown variable `{n}`")));
    let support = (idx(&s0, c0)?, idx(&s1, c1)?);
    DoubleLine::new(ring, support, a, b).map_err(|e| syntax(cur.line, col, e.to_string()))
}

pub fn parse_session(text: &str) -> Result<Session> {
    let mut ring: Option<Ring> = None;
    let mut items = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks = lex(line, raw)?;
        if toks.is_empty() {
            continue;
        }
        let mut cur = Cursor { line, toks: &toks, pos: 0, anchor: raw.chars().count() + 1 };
        let (kw, kw_col) = cur.ident("`ring`, `ideal`, `dline` or `point`")?;
        if kw == "ring" {
            if ring.is_some() {
                return Err(syntax(line, kw_col, "a session declares exactly one ring"));
            }
            ring = Some(ring_decl(&mut cur)?);
            continue;
        }
        let Some(r) = ring.as_ref() else {
            return Err(syntax(line, kw_col, "expected the `ring` declaration first"));
        };
        if !matches!(kw.as_str(), "ideal" | "dline" | "point") {
            return Err(syntax(line, kw_col, format!("unknown statement `{kw}`")));
        }
        let (name, name_col) = cur.ident("a name")?;
        if items.contains_key(&name) || r.var_index(&name).is_some() {
            return Err(syntax(line, name_col, format!("name `{name}` is already in use")));
        }
        let item = match kw.as_str() {
            "ideal" => {
                cur.expect('=')?;
                let gens = poly_list(r, &mut cur)?;
                cur.end()?;
                Item::Ideal(Ideal::new(r, gens)?)
            }
            "dline" => Item::DoubleLine(dline_decl(r, &mut cur)?),
            _ => {
                cur.expect('=')?;
                let p = point_decl(r, &mut cur)?;
                cur.end()?;
                Item::Point(p)
            }
        };
        items.insert(name, item);
    }
    let ring = ring.ok_or_else(|| syntax(1, 1, "missing `ring` declaration"))?;
    Ok(Session { ring, items })
}

/// Parse a polynomial in `ring` (used for round trips and command arguments).
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let toks = lex(1, text)?;
    let mut cur = Cursor { line: 1, toks: &toks, pos: 0, anchor: 1 };
    let p = expr(ring, &mut cur)?;
    cur.end()?;
    Ok(p)
}
