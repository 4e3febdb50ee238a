//! Exact multivariate polynomials over a [`CoefficientRing`].
//!
//! Polynomials are stored as maps from exponent vectors to nonzero
//! coefficients; the map key order is plain lexicographic on exponent
//! vectors, which fixes iteration order, while monomial *orders* for
//! Groebner work are a separate concern ([`MonomialOrder`]).

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use alloc::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::{CoefficientRing, Scalar};

/// Exponent vector; length equals the number of ring variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when divisible.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

/// Monomial orders for the Groebner engine. Graded reverse lexicographic is
/// the default; plain lexicographic is selectable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GrevLex => {
                let (da, db) = (a.degree(), b.degree());
                if da != db {
                    return da.cmp(&db);
                }
                // Reverse lex on reversed exponents: the *smaller* trailing
                // exponent wins.
                for (x, y) in a.0.iter().rev().zip(b.0.iter().rev()) {
                    match x.cmp(y) {
                        Ordering::Equal => {}
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// A polynomial ring descriptor: coefficient ring plus ordered variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub coeff: CoefficientRing,
    pub vars: Vec<String>,
}

impl PolyRing {
    pub fn new(coeff: CoefficientRing, vars: Vec<String>) -> Arc<Self> {
        Arc::new(PolyRing { coeff, vars })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// Multivariate polynomial; invariant: no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    pub ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        MultiPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        let mut p = Self::zero(ring);
        let c = ring.coeff.normalize(c);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.coeff.one())
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        let mut p = Self::zero(ring);
        p.terms
            .insert(Monomial::var(ring.nvars(), i), ring.coeff.one());
        p
    }

    pub fn monomial_term(ring: &Arc<PolyRing>, m: Monomial, c: Scalar) -> Self {
        let mut p = Self::zero(ring);
        let c = ring.coeff.normalize(c);
        assert_eq!(m.0.len(), ring.nvars(), "exponent vector length");
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_term(&self) -> Scalar {
        self.terms
            .get(&Monomial::one(self.ring.nvars()))
            .cloned()
            .unwrap_or_else(|| self.ring.coeff.zero())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.terms
            .keys()
            .map(|m| {
                m.0.iter()
                    .zip(weights)
                    .map(|(&e, &w)| e as u64 * w)
                    .sum::<u64>()
            })
            .max()
            .unwrap_or(0)
    }

    fn same_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.ring.as_ref() == other.ring.as_ref() {
            Ok(())
        } else {
            Err(Error::VariableMismatch(alloc::format!(
                "[{}] vs [{}]",
                self.ring.vars.join(","),
                other.ring.vars.join(",")
            )))
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.same_ring(other).expect("polynomial ring mismatch");
        let ring = &self.ring.coeff;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(|| ring.zero());
            *entry = ring.add(entry, c);
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> MultiPoly {
        let ring = &self.ring.coeff;
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), ring.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        let ring = &self.ring.coeff;
        let mut terms = BTreeMap::new();
        for (m, a) in &self.terms {
            let v = ring.mul(a, c);
            if !v.is_zero() {
                terms.insert(m.clone(), v);
            }
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> MultiPoly {
        let ring = &self.ring.coeff;
        let mut terms = BTreeMap::new();
        for (mm, a) in &self.terms {
            let v = ring.mul(a, c);
            if !v.is_zero() {
                terms.insert(mm.mul(m), v);
            }
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.same_ring(other).expect("polynomial ring mismatch");
        let ring = &self.ring.coeff;
        let mut terms: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let v = ring.mul(c1, c2);
                if v.is_zero() {
                    continue;
                }
                let entry = terms.entry(m).or_insert_with(|| ring.zero());
                *entry = ring.add(entry, &v);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Leading term with respect to `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// ∂/∂(var i).
    pub fn partial_derivative(&self, i: usize) -> MultiPoly {
        let ring = &self.ring.coeff;
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut em = m.clone();
            em.0[i] -= 1;
            let v = ring.mul(c, &ring.from_i64(e as i64));
            if !v.is_zero() {
                terms.insert(em, v);
            }
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Substitute each variable by the given polynomial of a common target
    /// ring; coefficients are re-normalized in the target coefficient ring.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::VariableMismatch(alloc::format!(
                "substitution needs {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        let mut acc = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target, conv_scalar(&target.coeff, c));
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Rename-preserving embedding into a ring whose variable set contains
    /// this ring's variables.
    pub fn embed(&self, target: &Arc<PolyRing>) -> Result<MultiPoly> {
        let map: Vec<usize> = self
            .ring
            .vars
            .iter()
            .map(|v| {
                target
                    .var_index(v)
                    .ok_or_else(|| Error::VariableMismatch(alloc::format!("missing variable {v}")))
            })
            .collect::<Result<_>>()?;
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &exp) in m.0.iter().enumerate() {
                e[map[i]] += exp;
            }
            let c = conv_scalar(&target.coeff, c);
            if !c.is_zero() {
                out = out.add(&MultiPoly::monomial_term(target, Monomial(e), c));
            }
        }
        Ok(out)
    }

    /// Evaluate at a scalar point of the coefficient ring.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let ring = &self.ring.coeff;
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    v = ring.mul(&v, &ring.pow(&point[i], e as u64));
                }
            }
            acc = ring.add(&acc, &v);
        }
        acc
    }

    /// Map coefficients into another coefficient ring (ℤ → ℤ/m, ℤ → ℚ, …).
    pub fn with_coefficients(&self, coeff: &CoefficientRing) -> MultiPoly {
        let target = PolyRing::new(coeff.clone(), self.ring.vars.clone());
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = conv_scalar(coeff, c);
            if !v.is_zero() {
                terms.insert(m.clone(), v);
            }
        }
        MultiPoly {
            ring: target,
            terms,
        }
    }
}

/// Move a scalar between coefficient rings, reducing as needed. Rational
/// scalars are only legal when the target is ℚ.
pub fn conv_scalar(target: &CoefficientRing, s: &Scalar) -> Scalar {
    match s {
        Scalar::Int(v) => target.from_bigint(v.clone()),
        Scalar::Rat(_) => {
            assert_eq!(
                *target,
                CoefficientRing::Rationals,
                "rational scalar in a non-rational ring"
            );
            target.normalize(s.clone())
        }
    }
}

// Rendering: terms sorted grevlex-descending, `^` exponents, explicit `*`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ts: Vec<(&Monomial, &Scalar)> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| MonomialOrder::GrevLex.cmp(b, a));
        for (k, (m, c)) in ts.iter().enumerate() {
            let cs = c.to_decimal_string();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) => (true, String::from(rest)),
                None => (false, cs),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if body != "1" || m.is_one() {
                factors.push(body);
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.vars[i].clone());
                } else if e > 1 {
                    factors.push(alloc::format!("{}^{}", self.ring.vars[i], e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_xy(coeff: CoefficientRing) -> Arc<PolyRing> {
        PolyRing::new(coeff, vec!["x".into(), "y".into()])
    }

    #[test]
    fn arithmetic_identities() {
        let r = ring_xy(CoefficientRing::prime_field(5).unwrap());
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let f = x.mul(&x).sub(&y.pow(3));
        let g = x.add(&y).pow(2);
        let h = MultiPoly::constant(&r, Scalar::from_int(3)).mul(&y);
        // commutativity / associativity on a sample
        assert_eq!(f.mul(&g), g.mul(&f));
        assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn orders() {
        // x^2 vs x*y^2: grevlex compares degree first.
        let a = Monomial(vec![2, 0]);
        let b = Monomial(vec![1, 2]);
        assert_eq!(MonomialOrder::GrevLex.cmp(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        // same degree: x*y vs y^2 -> grevlex prefers x*y
        let c = Monomial(vec![1, 1]);
        let d = Monomial(vec![0, 2]);
        assert_eq!(MonomialOrder::GrevLex.cmp(&c, &d), Ordering::Greater);
    }

    #[test]
    fn derivative_and_eval() {
        let r = ring_xy(CoefficientRing::Rationals);
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let f = x.pow(2).sub(&y.pow(3));
        assert_eq!(
            f.partial_derivative(0),
            MultiPoly::constant(&r, Scalar::from_int(2)).mul(&x)
        );
        let v = f.eval(&[Scalar::from_int(3), Scalar::from_int(1)]);
        assert_eq!(v, Scalar::from_int(8));
    }

    #[test]
    fn display_roundtrippable() {
        let r = ring_xy(CoefficientRing::Integers);
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let f = x.pow(2).sub(&y.pow(3));
        assert_eq!(alloc::format!("{f}"), "-y^3 + x^2");
    }
}
