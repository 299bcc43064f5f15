//! Ring, module and ideal expressions: parsing, canonical printing and
//! elaboration into concrete rings.
//!
//! ```text
//! ring   := "Zmod(" INT ")" | "Zint" | "prod(" ring ("," ring)+ ")"
//!         | "trivext(" ring "," module ")" | "dup(" ring "," ideal ")"
//!         | "quot(" ring "," ideal ")" | "loc(" ring "," ideal ")"
//! module := "mod(" INT ("," INT)* ")"
//! ideal  := "ideal(" elem ("," elem)* ")"
//! elem   := INT | "(" elem ("," elem)+ ")"
//! ```

use std::fmt;
use std::sync::Arc;

use crate::construct::{direct_product, dup, trivext};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::module::{make_module, FiniteModule};
use crate::ring::{localize_at_prime, quotient, FiniteRing, Ring};

/// An element literal: a residue, or a tuple of coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ElemLit {
    Int(u64),
    Tuple(Vec<ElemLit>),
}

impl fmt::Display for ElemLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemLit::Int(k) => write!(f, "{k}"),
            ElemLit::Tuple(items) => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleExpr(pub Vec<u64>);

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "mod({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealExpr(pub Vec<ElemLit>);

impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ElemLit::to_string).collect();
        write!(f, "ideal({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingExpr {
    Zmod(u64),
    Zint,
    Prod(Vec<RingExpr>),
    TrivExt(Box<RingExpr>, ModuleExpr),
    Dup(Box<RingExpr>, IdealExpr),
    Quot(Box<RingExpr>, IdealExpr),
    Loc(Box<RingExpr>, IdealExpr),
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zmod(n) => write!(f, "Zmod({n})"),
            RingExpr::Zint => f.write_str("Zint"),
            RingExpr::Prod(parts) => {
                let parts: Vec<String> = parts.iter().map(RingExpr::to_string).collect();
                write!(f, "prod({})", parts.join(", "))
            }
            RingExpr::TrivExt(r, m) => write!(f, "trivext({r}, {m})"),
            RingExpr::Dup(r, i) => write!(f, "dup({r}, {i})"),
            RingExpr::Quot(r, i) => write!(f, "quot({r}, {i})"),
            RingExpr::Loc(r, i) => write!(f, "loc({r}, {i})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    LParen,
    RParen,
    Comma,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(k) => write!(f, "`{k}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize, usize)>> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, k) = (line, col);
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            d if d.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    s.push(d);
                    chars.next();
                    col += 1;
                }
                let v = s
                    .parse()
                    .map_err(|_| syntax(l, k, format!("integer `{s}` is too large")))?;
                out.push((Tok::Int(v), l, k));
                continue;
            }
            a if a.is_ascii_alphabetic() => {
                let mut s = String::new();
                while let Some(&a) = chars.peek().filter(|a| a.is_ascii_alphanumeric() || **a == '_') {
                    s.push(a);
                    chars.next();
                    col += 1;
                }
                out.push((Tok::Ident(s), l, k));
                continue;
            }
            other => return Err(syntax(l, k, format!("unexpected character `{other}`"))),
        };
        chars.next();
        col += 1;
        out.push((tok, l, k));
    }
    out.push((Tok::End, line, col));
    Ok(out)
}

impl Parser {
    fn new(text: &str) -> Result<Parser> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn here(&self) -> (usize, usize) {
        let (_, l, c) = &self.toks[self.pos];
        (*l, *c)
    }

    fn error<T>(&self, expected: &str) -> Result<T> {
        let (l, c) = self.here();
        Err(syntax(l, c, format!("expected {expected}, found {}", self.peek())))
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            self.error(what)
        }
    }

    fn int(&mut self) -> Result<u64> {
        match self.peek() {
            Tok::Int(k) => {
                let k = *k;
                self.next();
                Ok(k)
            }
            _ => self.error("an integer"),
        }
    }

    fn finish(&mut self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.error("end of input")
        }
    }

    fn ring(&mut self) -> Result<RingExpr> {
        let name = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return self.error("a ring expression"),
        };
        let (l, c) = self.here();
        self.next();
        if name == "Zint" {
            return Ok(RingExpr::Zint);
        }
        let ctor = ["Zmod", "prod", "trivext", "dup", "quot", "loc"];
        if !ctor.contains(&name.as_str()) {
            return Err(syntax(l, c, format!("unknown ring constructor `{name}`")));
        }
        self.expect(Tok::LParen, "`(`")?;
        let expr = match name.as_str() {
            "Zmod" => RingExpr::Zmod(self.int()?),
            "prod" => {
                let mut parts = vec![self.ring()?];
                while *self.peek() == Tok::Comma {
                    self.next();
                    parts.push(self.ring()?);
                }
                if parts.len() < 2 {
                    return self.error("`,` (a product needs at least two factors)");
                }
                RingExpr::Prod(parts)
            }
            "trivext" => {
                let r = self.ring()?;
                self.expect(Tok::Comma, "`,`")?;
                RingExpr::TrivExt(Box::new(r), self.module()?)
            }
            _ => {
                let r = Box::new(self.ring()?);
                self.expect(Tok::Comma, "`,`")?;
                let i = self.ideal()?;
                match name.as_str() {
                    "dup" => RingExpr::Dup(r, i),
                    "quot" => RingExpr::Quot(r, i),
                    _ => RingExpr::Loc(r, i),
                }
            }
        };
        self.expect(Tok::RParen, "`)`")?;
        Ok(expr)
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        match self.peek() {
            Tok::Ident(s) if s == word => {
                self.next();
                Ok(())
            }
            _ => self.error(&format!("`{word}(`")),
        }
    }

    fn module(&mut self) -> Result<ModuleExpr> {
        self.keyword("mod")?;
        self.expect(Tok::LParen, "`(`")?;
        let mut orders = vec![self.int()?];
        while *self.peek() == Tok::Comma {
            self.next();
            orders.push(self.int()?);
        }
        self.expect(Tok::RParen, "`)`")?;
        Ok(ModuleExpr(orders))
    }

    fn ideal(&mut self) -> Result<IdealExpr> {
        self.keyword("ideal")?;
        self.expect(Tok::LParen, "`(`")?;
        let mut elems = vec![self.elem()?];
        while *self.peek() == Tok::Comma {
            self.next();
            elems.push(self.elem()?);
        }
        self.expect(Tok::RParen, "`)`")?;
        Ok(IdealExpr(elems))
    }

    fn elem(&mut self) -> Result<ElemLit> {
        match self.peek() {
            Tok::Int(_) => Ok(ElemLit::Int(self.int()?)),
            Tok::LParen => {
                self.next();
                let mut items = vec![self.elem()?];
                while *self.peek() == Tok::Comma {
                    self.next();
                    items.push(self.elem()?);
                }
                if items.len() < 2 {
                    return self.error("`,` (a tuple has at least two coordinates)");
                }
                self.expect(Tok::RParen, "`)`")?;
                Ok(ElemLit::Tuple(items))
            }
            _ => self.error("an element literal"),
        }
    }
}

pub fn parse_ring(text: &str) -> Result<RingExpr> {
    let mut p = Parser::new(text)?;
    let r = p.ring()?;
    p.finish()?;
    Ok(r)
}

pub fn parse_ideal(text: &str) -> Result<IdealExpr> {
    let mut p = Parser::new(text)?;
    let i = p.ideal()?;
    p.finish()?;
    Ok(i)
}

pub fn parse_module(text: &str) -> Result<ModuleExpr> {
    let mut p = Parser::new(text)?;
    let m = p.module()?;
    p.finish()?;
    Ok(m)
}

/// What a ring expression denotes.
#[derive(Clone, Debug)]
pub enum Elaborated {
    Finite(Ring),
    /// The integers, handled symbolically.
    Integers,
}

impl Elaborated {
    pub fn finite(self) -> Result<Ring> {
        match self {
            Elaborated::Finite(r) => Ok(r),
            Elaborated::Integers => Err(Error::Semantic("expected a finite ring, found Zint".into())),
        }
    }
}

pub fn elaborate(expr: &RingExpr, max_size: usize) -> Result<Elaborated> {
    match expr {
        RingExpr::Zint => Ok(Elaborated::Integers),
        _ => elaborate_finite(expr, max_size).map(Elaborated::Finite),
    }
}

fn guard(size: u64, limit: usize) -> Result<()> {
    if size > limit as u64 {
        Err(Error::TooLarge { size, limit })
    } else {
        Ok(())
    }
}

/// Builds a finite ring, refusing anything larger than `max_size` before
/// materializing it.
pub fn elaborate_finite(expr: &RingExpr, max_size: usize) -> Result<Ring> {
    match expr {
        RingExpr::Zint => Err(Error::Semantic(
            "Zint is only allowed as a whole expression, not inside a construction".into(),
        )),
        RingExpr::Zmod(n) => {
            guard(*n, max_size)?;
            FiniteRing::zmod(*n)
        }
        RingExpr::Prod(parts) => {
            let rings = parts
                .iter()
                .map(|p| elaborate_finite(p, max_size))
                .collect::<Result<Vec<_>>>()?;
            let size = rings
                .iter()
                .try_fold(1u64, |acc, r| acc.checked_mul(r.size() as u64))
                .unwrap_or(u64::MAX);
            guard(size, max_size)?;
            direct_product(&rings)
        }
        RingExpr::TrivExt(base, m) => {
            let base = elaborate_finite(base, max_size)?;
            let size = m
                .0
                .iter()
                .try_fold(base.size() as u64, |acc, &d| acc.checked_mul(d))
                .unwrap_or(u64::MAX);
            guard(size, max_size)?;
            let module = elaborate_module(&base, m)?;
            trivext(&base, &module)
        }
        RingExpr::Dup(base, i) => {
            let base = elaborate_finite(base, max_size)?;
            let ideal = elaborate_ideal(&base, i)?;
            guard(base.size() as u64 * ideal.len() as u64, max_size)?;
            dup(&ideal)
        }
        RingExpr::Quot(base, i) => {
            let base = elaborate_finite(base, max_size)?;
            let ideal = elaborate_ideal(&base, i)?;
            Ok(quotient(&ideal)?.ring)
        }
        RingExpr::Loc(base, i) => {
            let base = elaborate_finite(base, max_size)?;
            let ideal = elaborate_ideal(&base, i)?;
            Ok(localize_at_prime(&ideal)?.ring)
        }
    }
}

pub fn elaborate_module(ring: &Ring, m: &ModuleExpr) -> Result<Arc<FiniteModule>> {
    make_module(ring, &m.0)
}

/// The ideal generated by the listed elements, read in `ring`'s coordinates.
pub fn elaborate_ideal(ring: &Ring, i: &IdealExpr) -> Result<Ideal> {
    let gens = i
        .0
        .iter()
        .map(|lit| ring.parse_element(lit))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::generated(ring, &gens))
}

/// Converts an ideal back into an expression using its greedy generators.
pub fn ideal_expr(ideal: &Ideal) -> IdealExpr {
    let gens = ideal.generators();
    let gens = if gens.is_empty() { vec![0] } else { gens };
    IdealExpr(gens.into_iter().map(|g| ideal.ring().element_label(g)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_construction_instances() {
        let d = parse_ring("dup(Zmod(8), ideal(2))").unwrap();
        assert_eq!(
            d,
            RingExpr::Dup(Box::new(RingExpr::Zmod(8)), IdealExpr(vec![ElemLit::Int(2)]))
        );
        let t = parse_ring("trivext(Zmod(4),mod(2))").unwrap();
        assert_eq!(t.to_string(), "trivext(Zmod(4), mod(2))");
        let nested = parse_ring("dup(trivext(Zmod(2), mod(2)), ideal((0, 1)))").unwrap();
        assert_eq!(nested.to_string(), "dup(trivext(Zmod(2), mod(2)), ideal((0, 1)))");
    }

    #[test]
    fn zmod_one_is_semantic_error() {
        let e = parse_ring("Zmod(1)").unwrap();
        let err = elaborate(&e, 4096).unwrap_err();
        assert!(matches!(err, Error::ZeroRing(1)));
        assert!(!err.is_syntax());
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_ring("prod(Zmod(2),\n  Zmod(3)") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 10)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_ring("Zmod(2) x") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 9)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_ring("prod(Zmod(2))").unwrap_err().is_syntax());
        assert!(parse_ring("Foo(3)").unwrap_err().is_syntax());
        assert!(parse_ring("Zmod(2)$").unwrap_err().is_syntax());
    }

    #[test]
    fn size_guard_refuses_large_rings() {
        let e = parse_ring("prod(Zmod(64), Zmod(64), Zmod(2))").unwrap();
        assert!(matches!(elaborate(&e, 4096), Err(Error::TooLarge { size: 8192, .. })));
        assert!(elaborate(&parse_ring("Zmod(5000)").unwrap(), 4096).is_err());
    }

    #[test]
    fn zint_only_at_top_level() {
        assert!(matches!(elaborate(&RingExpr::Zint, 10).unwrap(), Elaborated::Integers));
        let e = parse_ring("prod(Zint, Zmod(2))").unwrap();
        assert!(matches!(elaborate(&e, 4096), Err(Error::Semantic(_))));
    }

    #[test]
    fn elaborated_provenance_reprints() {
        for text in [
            "Zmod(12)",
            "prod(Zmod(2), Zmod(3))",
            "trivext(Zmod(4), mod(2))",
            "dup(Zmod(8), ideal(2))",
            "quot(Zmod(12), ideal(4))",
            "loc(Zmod(12), ideal(2))",
        ] {
            let r = elaborate_finite(&parse_ring(text).unwrap(), 4096).unwrap();
            assert_eq!(r.provenance(), text);
        }
    }

    #[test]
    fn ideal_round_trip_through_labels() {
        let r = elaborate_finite(&parse_ring("trivext(Zmod(4), mod(2))").unwrap(), 4096).unwrap();
        let i = elaborate_ideal(&r, &parse_ideal("ideal((0, 1))").unwrap()).unwrap();
        assert_eq!(i.len(), 2);
        assert_eq!(elaborate_ideal(&r, &ideal_expr(&i)).unwrap(), i);
    }

    fn arb_elem() -> impl Strategy<Value = ElemLit> {
        let leaf = (0u64..50).prop_map(ElemLit::Int);
        leaf.prop_recursive(3, 12, 3, |inner| {
            prop::collection::vec(inner, 2..4).prop_map(ElemLit::Tuple)
        })
    }

    fn arb_ideal() -> impl Strategy<Value = IdealExpr> {
        prop::collection::vec(arb_elem(), 1..4).prop_map(IdealExpr)
    }

    fn arb_ring() -> impl Strategy<Value = RingExpr> {
        let leaf = prop_oneof![(0u64..100).prop_map(RingExpr::Zmod), Just(RingExpr::Zint)];
        leaf.prop_recursive(3, 16, 3, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 2..4).prop_map(RingExpr::Prod),
                (inner.clone(), prop::collection::vec(1u64..10, 1..4))
                    .prop_map(|(r, m)| RingExpr::TrivExt(Box::new(r), ModuleExpr(m))),
                (inner.clone(), arb_ideal()).prop_map(|(r, i)| RingExpr::Dup(Box::new(r), i)),
                (inner.clone(), arb_ideal()).prop_map(|(r, i)| RingExpr::Quot(Box::new(r), i)),
                (inner, arb_ideal()).prop_map(|(r, i)| RingExpr::Loc(Box::new(r), i)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(e in arb_ring()) {
            let printed = e.to_string();
            let back = parse_ring(&printed).unwrap();
            prop_assert_eq!(&back, &e);
            prop_assert_eq!(back.to_string(), printed);
        }
    }
}
