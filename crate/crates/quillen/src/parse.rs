//! The line-oriented presentation grammar shared with the CLI.
//!
//! ```text
//! base Fp(5) | base Q | base Z | base Zmod(9)
//! ring A = poly[x,y]
//! ring B = A / (x^2 - y^3) ; ring C = A loc (x)
//! module M over B = gens 2 rels [[x,0],[y,x]]
//! ```
//!
//! Whitespace-insensitive; `^` denotes exponents; coefficients in input are
//! integers. `*` is optional between factors. Statements are separated by
//! newlines or `;`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, PolyRing};
use crate::presentation::{FinitePresentation, ModulePresentation};
use crate::ring::{CoefficientRing, Scalar};

#[derive(Clone, Debug, Default)]
pub struct Declarations {
    pub base: Option<CoefficientRing>,
    pub rings: BTreeMap<String, FinitePresentation>,
    pub modules: BTreeMap<String, ModulePresentation>,
    /// ring names in declaration order
    pub ring_order: Vec<String>,
}

impl Declarations {
    pub fn base(&self) -> Result<CoefficientRing> {
        self.base
            .clone()
            .ok_or_else(|| Error::Parse("no base declaration".into()))
    }

    pub fn ring(&self, name: &str) -> Result<&FinitePresentation> {
        self.rings
            .get(name)
            .ok_or_else(|| Error::Parse(alloc::format!("unknown ring {name}")))
    }

    pub fn module(&self, name: &str) -> Result<&ModulePresentation> {
        self.modules
            .get(name)
            .ok_or_else(|| Error::Parse(alloc::format!("unknown module {name}")))
    }

    /// The base coefficient ring as a presentation.
    pub fn base_presentation(&self) -> Result<FinitePresentation> {
        Ok(FinitePresentation::of_coefficients(self.base()?))
    }
}

// ---------------------------------------------------------------------
// tokenizer

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut ident = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                ident.push(chars[i]);
                i += 1;
            }
            out.push(Tok::Ident(ident));
        } else if c.is_ascii_digit() {
            let mut num = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                num.push(chars[i]);
                i += 1;
            }
            out.push(Tok::Int(num));
        } else if "+-*^(),[]/=".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(alloc::format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// polynomial expressions

struct ExprParser<'a> {
    toks: &'a [Tok],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        match self.bump() {
            Some(Tok::Sym(s)) if s == c => Ok(()),
            other => Err(Error::Parse(alloc::format!(
                "expected {c:?}, found {other:?}"
            ))),
        }
    }

    fn parse_sum(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Some(Tok::Sym('-')) => {
                self.bump();
                self.parse_product()?.neg()
            }
            _ => self.parse_product()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Sym('+')) => {
                    self.bump();
                    acc = acc.add(&self.parse_product()?);
                }
                Some(Tok::Sym('-')) => {
                    self.bump();
                    acc = acc.sub(&self.parse_product()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_product(&mut self) -> Result<MultiPoly> {
        let mut acc = self.parse_power()?;
        loop {
            match self.peek() {
                Some(Tok::Sym('*')) => {
                    self.bump();
                    acc = acc.mul(&self.parse_power()?);
                }
                // juxtaposition: `2x`, `x y`, `3(x+y)`
                Some(Tok::Ident(_)) | Some(Tok::Int(_)) | Some(Tok::Sym('(')) => {
                    acc = acc.mul(&self.parse_power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_power(&mut self) -> Result<MultiPoly> {
        let base = self.parse_atom()?;
        if let Some(Tok::Sym('^')) = self.peek() {
            self.bump();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n
                        .parse()
                        .map_err(|_| Error::Parse(alloc::format!("bad exponent {n}")))?;
                    Ok(base.pow(e))
                }
                other => Err(Error::Parse(alloc::format!(
                    "expected exponent, found {other:?}"
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn parse_atom(&mut self) -> Result<MultiPoly> {
        match self.bump() {
            Some(Tok::Int(n)) => {
                let v: num_bigint::BigInt = n
                    .parse()
                    .map_err(|_| Error::Parse(alloc::format!("bad integer {n}")))?;
                Ok(MultiPoly::constant(
                    self.ring,
                    self.ring.coeff.from_bigint(v),
                ))
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(MultiPoly::var(self.ring, i)),
                None => Err(Error::Parse(alloc::format!("unknown variable {name}"))),
            },
            Some(Tok::Sym('(')) => {
                let inner = self.parse_sum()?;
                self.expect_sym(')')?;
                Ok(inner)
            }
            Some(Tok::Sym('-')) => Ok(self.parse_power()?.neg()),
            other => Err(Error::Parse(alloc::format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse one polynomial expression in the given ring.
pub fn parse_poly(ring: &Arc<PolyRing>, text: &str) -> Result<MultiPoly> {
    let toks = tokenize(text)?;
    let mut p = ExprParser {
        toks: &toks,
        pos: 0,
        ring,
    };
    let out = p.parse_sum()?;
    if p.pos != toks.len() {
        return Err(Error::Parse(alloc::format!(
            "trailing input after expression: {text}"
        )));
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// declarations

fn split_statements(text: &str) -> Vec<String> {
    text.lines()
        .flat_map(|l| l.split(';'))
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty() && !s.starts_with('#'))
        .collect()
}

pub fn parse_declarations(text: &str) -> Result<Declarations> {
    let mut decls = Declarations::default();
    for stmt in split_statements(text) {
        let toks = tokenize(&stmt)?;
        match toks.first() {
            Some(Tok::Ident(k)) if k == "base" => {
                decls.base = Some(parse_base(&toks[1..])?);
            }
            Some(Tok::Ident(k)) if k == "ring" => {
                let (name, pres) = parse_ring(&decls, &toks[1..], &stmt)?;
                decls.ring_order.push(name.clone());
                decls.rings.insert(name, pres);
            }
            Some(Tok::Ident(k)) if k == "module" => {
                let (name, m) = parse_module(&decls, &toks[1..], &stmt)?;
                decls.modules.insert(name, m);
            }
            _ => {
                return Err(Error::Parse(alloc::format!(
                    "unrecognized statement: {stmt}"
                )))
            }
        }
    }
    Ok(decls)
}

fn parse_base(toks: &[Tok]) -> Result<CoefficientRing> {
    match toks {
        [Tok::Ident(k)] if k == "Q" => Ok(CoefficientRing::Rationals),
        [Tok::Ident(k)] if k == "Z" => Ok(CoefficientRing::Integers),
        [Tok::Ident(k), Tok::Sym('('), Tok::Int(n), Tok::Sym(')')] if k == "Fp" => {
            let p: u64 = n
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad prime {n}")))?;
            CoefficientRing::prime_field(p)
                .map_err(|_| Error::Parse(alloc::format!("Fp({p}) needs a prime")))
        }
        [Tok::Ident(k), Tok::Sym('('), Tok::Int(n), Tok::Sym(')')] if k == "Zmod" => {
            let m: u64 = n
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad modulus {n}")))?;
            CoefficientRing::integers_mod(m)
                .map_err(|_| Error::Parse(alloc::format!("Zmod({m}) needs m ≥ 2")))
        }
        _ => Err(Error::Parse("bad base declaration".into())),
    }
}

fn parse_ring(
    decls: &Declarations,
    toks: &[Tok],
    stmt: &str,
) -> Result<(String, FinitePresentation)> {
    // NAME = poly[vars] | NAME = BASE / (rels) | NAME = BASE loc (elts)
    let name = match toks.first() {
        Some(Tok::Ident(n)) => n.clone(),
        _ => return Err(Error::Parse(alloc::format!("missing ring name: {stmt}"))),
    };
    if toks.get(1) != Some(&Tok::Sym('=')) {
        return Err(Error::Parse(alloc::format!("expected '=': {stmt}")));
    }
    match toks.get(2) {
        Some(Tok::Ident(k)) if k == "poly" => {
            // poly [ v, v, ... ]
            if toks.get(3) != Some(&Tok::Sym('[')) {
                return Err(Error::Parse(alloc::format!("expected '[': {stmt}")));
            }
            let mut vars: Vec<String> = Vec::new();
            let mut i = 4;
            loop {
                match toks.get(i) {
                    Some(Tok::Ident(v)) => {
                        vars.push(v.clone());
                        i += 1;
                        match toks.get(i) {
                            Some(Tok::Sym(',')) => i += 1,
                            Some(Tok::Sym(']')) => break,
                            other => {
                                return Err(Error::Parse(alloc::format!(
                                    "expected ',' or ']', found {other:?}"
                                )))
                            }
                        }
                    }
                    Some(Tok::Sym(']')) => break,
                    other => {
                        return Err(Error::Parse(alloc::format!(
                            "expected variable, found {other:?}"
                        )))
                    }
                }
            }
            let base = decls.base()?;
            let refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
            Ok((name, FinitePresentation::polynomial(base, &refs)))
        }
        Some(Tok::Ident(parent)) => {
            let base = decls.ring(parent)?.clone();
            let flat = base.flatten()?;
            match toks.get(3) {
                Some(Tok::Sym('/')) => {
                    let list = expr_list_text(stmt, '/')?;
                    let rels = list
                        .iter()
                        .map(|e| parse_poly(&flat.ring, e))
                        .collect::<Result<Vec<_>>>()?;
                    Ok((name, FinitePresentation::quotient(base, rels)?))
                }
                Some(Tok::Ident(k)) if k == "loc" => {
                    let list = expr_list_text(stmt, 'l')?;
                    let elts = list
                        .iter()
                        .map(|e| parse_poly(&flat.ring, e))
                        .collect::<Result<Vec<_>>>()?;
                    Ok((name, FinitePresentation::localize(base, elts)?))
                }
                other => Err(Error::Parse(alloc::format!(
                    "expected '/' or 'loc', found {other:?}"
                ))),
            }
        }
        other => Err(Error::Parse(alloc::format!(
            "expected 'poly' or a ring name, found {other:?}"
        ))),
    }
}

/// Extract the comma-separated expressions inside the outer parentheses of
/// a quotient or localization statement: the list is everything from the
/// first `(` after the `=` to the end of the statement.
fn expr_list_text(stmt: &str, mode: char) -> Result<Vec<String>> {
    let _ = mode;
    let eq = stmt
        .find('=')
        .ok_or_else(|| Error::Parse(alloc::format!("malformed ring statement: {stmt}")))?;
    let idx = stmt[eq..]
        .find('(')
        .map(|i| eq + i)
        .ok_or_else(|| Error::Parse(alloc::format!("expected parenthesized list: {stmt}")))?;
    let rest = stmt[idx..].trim();
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(alloc::format!("expected parenthesized list: {stmt}")))?;
    // split on top-level commas
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in inner.chars() {
        match c {
            '(' | '[' => {
                depth += 1;
                cur.push(c);
            }
            ')' | ']' => {
                depth -= 1;
                cur.push(c);
            }
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    Ok(out)
}

fn parse_module(
    decls: &Declarations,
    toks: &[Tok],
    stmt: &str,
) -> Result<(String, ModulePresentation)> {
    // NAME over RING = gens N rels [[...],[...]]
    let name = match toks.first() {
        Some(Tok::Ident(n)) => n.clone(),
        _ => return Err(Error::Parse(alloc::format!("missing module name: {stmt}"))),
    };
    let over = match (toks.get(1), toks.get(2)) {
        (Some(Tok::Ident(k)), Some(Tok::Ident(r))) if k == "over" => decls.ring(r)?.clone(),
        _ => return Err(Error::Parse(alloc::format!("expected 'over RING': {stmt}"))),
    };
    let flat = over.flatten()?;
    // find `gens N`
    let gens = toks
        .iter()
        .position(|t| matches!(t, Tok::Ident(k) if k == "gens"))
        .and_then(|i| match toks.get(i + 1) {
            Some(Tok::Int(n)) => n.parse::<usize>().ok(),
            _ => None,
        })
        .ok_or_else(|| Error::Parse(alloc::format!("expected 'gens N': {stmt}")))?;
    // relations: text after `rels`
    let rels_txt = stmt.find("rels").map(|i| stmt[i + 4..].trim().to_string());
    let mut relations: Vec<Vec<MultiPoly>> = Vec::new();
    if let Some(txt) = rels_txt {
        if !txt.is_empty() {
            let rows = parse_matrix_rows(&txt)?;
            for row in rows {
                let mut rel = Vec::new();
                for cell in row {
                    rel.push(parse_poly(&flat.ring, &cell)?);
                }
                relations.push(rel);
            }
        }
    }
    Ok((name, ModulePresentation::new(over, gens, relations)?))
}

/// Parse `[[a,b],[c,d]]` into rows of cell texts.
pub fn parse_matrix_rows(text: &str) -> Result<Vec<Vec<String>>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(alloc::format!("expected matrix literal: {text}")))?;
    let mut rows = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in inner.chars() {
        match c {
            '[' => {
                if depth == 0 {
                    cur.clear();
                } else {
                    cur.push(c);
                }
                depth += 1;
            }
            ']' => {
                depth -= 1;
                if depth == 0 {
                    let cells = split_top_level(&cur)?;
                    rows.push(cells);
                } else {
                    cur.push(c);
                }
            }
            ',' if depth == 0 => {}
            _ => {
                if depth >= 1 {
                    cur.push(c);
                }
            }
        }
    }
    Ok(rows)
}

fn split_top_level(s: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth -= 1;
                cur.push(c);
            }
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    Ok(out)
}

/// Convenience: scalar literal in the base ring.
pub fn parse_coefficient(ring: &CoefficientRing, text: &str) -> Result<Scalar> {
    crate::ring::parse_scalar(ring, text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_declaration_block() {
        let text = "base Fp(5)\nring A = poly[x,y]\nring B = A / (x^2 - y^3) ; ring C = A loc (x)\nmodule M over B = gens 2 rels [[x,0],[y,x]]";
        let d = parse_declarations(text).unwrap();
        assert_eq!(d.base().unwrap(), CoefficientRing::prime_field(5).unwrap());
        let b = d.ring("B").unwrap();
        let fb = b.flatten().unwrap();
        assert_eq!(fb.relations.len(), 1);
        let c = d.ring("C").unwrap();
        assert_eq!(c.flatten().unwrap().inverted.len(), 1);
        let m = d.module("M").unwrap();
        assert_eq!(m.generators, 2);
        assert_eq!(m.relations.len(), 2);
    }

    #[test]
    fn expression_forms() {
        let ring = PolyRing::new(
            CoefficientRing::Integers,
            alloc::vec![String::from("x"), String::from("y")],
        );
        let p1 = parse_poly(&ring, "x^2 - y^3").unwrap();
        let x = MultiPoly::var(&ring, 0);
        let y = MultiPoly::var(&ring, 1);
        assert_eq!(p1, x.pow(2).sub(&y.pow(3)));
        // juxtaposition and explicit '*' agree
        assert_eq!(
            parse_poly(&ring, "2x y").unwrap(),
            parse_poly(&ring, "2*x*y").unwrap()
        );
        assert_eq!(
            parse_poly(&ring, "-(x + 2)(x - 2)").unwrap(),
            x.pow(2)
                .sub(&MultiPoly::constant(&ring, Scalar::from_int(4)))
                .neg()
        );
        assert!(parse_poly(&ring, "x + z").is_err());
        assert!(parse_poly(&ring, "x +").is_err());
    }

    #[test]
    fn whitespace_insensitive() {
        let a = parse_declarations("base Q\nring A = poly[x]\nring B = A/(x^2-1)").unwrap();
        let b = parse_declarations("base Q\n ring  A  =  poly[ x ]\n ring B = A / ( x^2 - 1 )")
            .unwrap();
        assert_eq!(
            a.ring("B").unwrap().flatten().unwrap().relations,
            b.ring("B").unwrap().flatten().unwrap().relations
        );
    }

    #[test]
    fn keyword_like_names() {
        // ring and variable names containing "loc" must not confuse the
        // statement slicing
        let d = parse_declarations(
            "base Q\nring Alocal = poly[velocity]\nring B = Alocal / (velocity^2 - 1)\nring C = Alocal loc (velocity)",
        )
        .unwrap();
        assert_eq!(d.ring("B").unwrap().flatten().unwrap().relations.len(), 1);
        assert_eq!(d.ring("C").unwrap().flatten().unwrap().inverted.len(), 1);
    }

    #[test]
    fn base_z_constant_quotient() {
        let d = parse_declarations("base Z\nring A = poly[]\nring F = A / (5)").unwrap();
        let f = d.ring("F").unwrap().flatten().unwrap();
        assert_eq!(f.relations.len(), 1);
        assert!(f.relations[0].is_constant());
    }
}
