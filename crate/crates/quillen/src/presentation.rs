//! Finitely presented algebras and modules.
//!
//! A [`FinitePresentation`] is a tower of depth ≤ 2 over a coefficient ring:
//! a polynomial layer, then an optional quotient and/or localization layer.
//! Deeper towers are handled by the transitivity operations, never stored.
//! Most engines consume the flattened view ([`FlatPresentation`]): one
//! polynomial ring over the coefficient ring carrying all variables,
//! relations and inverted elements of the tower.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::{self, VecPoly};
use crate::poly::{MonomialOrder, MultiPoly, PolyRing};
use crate::ring::CoefficientRing;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseRef {
    Coeff(CoefficientRing),
    Pres(Box<FinitePresentation>),
}

/// An algebra `base[vars] / (relations)`, with optional inverted elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePresentation {
    pub base: BaseRef,
    pub vars: Vec<String>,
    pub relations: Vec<MultiPoly>,
    pub localized_at: Vec<MultiPoly>,
}

/// Flattened view: every variable of the tower in one polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatPresentation {
    pub ring: Arc<PolyRing>,
    pub relations: Vec<MultiPoly>,
    pub inverted: Vec<MultiPoly>,
}

impl FinitePresentation {
    /// The coefficient ring itself as a presentation (no variables).
    pub fn of_coefficients(c: CoefficientRing) -> Self {
        FinitePresentation {
            base: BaseRef::Coeff(c),
            vars: Vec::new(),
            relations: Vec::new(),
            localized_at: Vec::new(),
        }
    }

    /// Polynomial algebra over a coefficient ring.
    pub fn polynomial(c: CoefficientRing, vars: &[&str]) -> Self {
        FinitePresentation {
            base: BaseRef::Coeff(c),
            vars: vars.iter().map(|v| String::from(*v)).collect(),
            relations: Vec::new(),
            localized_at: Vec::new(),
        }
    }

    /// Quotient of an existing presentation by further relations (the
    /// relations live in the flattened ring of `base`).
    pub fn quotient(base: FinitePresentation, relations: Vec<MultiPoly>) -> Result<Self> {
        let flat = base.flatten()?;
        for r in &relations {
            if r.ring.as_ref() != flat.ring.as_ref() {
                return Err(Error::VariableMismatch(
                    "relation outside the base polynomial ring".into(),
                ));
            }
        }
        Ok(FinitePresentation {
            base: BaseRef::Pres(Box::new(base)),
            vars: Vec::new(),
            relations,
            localized_at: Vec::new(),
        })
    }

    /// Localization of an existing presentation at finitely many elements.
    pub fn localize(base: FinitePresentation, elements: Vec<MultiPoly>) -> Result<Self> {
        let flat = base.flatten()?;
        for e in &elements {
            if e.ring.as_ref() != flat.ring.as_ref() {
                return Err(Error::VariableMismatch(
                    "inverted element outside the base polynomial ring".into(),
                ));
            }
        }
        Ok(FinitePresentation {
            base: BaseRef::Pres(Box::new(base)),
            vars: Vec::new(),
            relations: Vec::new(),
            localized_at: elements,
        })
    }

    /// Quotient of a polynomial ring in one step: `coeff[vars]/(relations)`.
    /// `relations` are built by the caller in the ring returned from
    /// [`FinitePresentation::polynomial`]'s flatten.
    pub fn algebra(c: CoefficientRing, vars: &[&str], relations: Vec<MultiPoly>) -> Result<Self> {
        let p = Self::polynomial(c, vars);
        if relations.is_empty() {
            Ok(p)
        } else {
            Self::quotient(p, relations)
        }
    }

    pub fn depth(&self) -> usize {
        match &self.base {
            BaseRef::Coeff(_) => 1,
            BaseRef::Pres(p) => 1 + p.depth(),
        }
    }

    pub fn coefficients(&self) -> CoefficientRing {
        match &self.base {
            BaseRef::Coeff(c) => c.clone(),
            BaseRef::Pres(p) => p.coefficients(),
        }
    }

    /// Merge the tower into a single polynomial ring. Fails on duplicate
    /// variable names or towers deeper than 2 algebra layers.
    pub fn flatten(&self) -> Result<FlatPresentation> {
        if self.depth() > 3 {
            return Err(Error::ShapeMismatch("presentation tower too deep".into()));
        }
        match &self.base {
            BaseRef::Coeff(c) => {
                let ring = PolyRing::new(c.clone(), self.vars.clone());
                let mut seen = self.vars.clone();
                seen.sort();
                seen.dedup();
                if seen.len() != self.vars.len() {
                    return Err(Error::VariableMismatch("duplicate variable".into()));
                }
                let relations = self
                    .relations
                    .iter()
                    .map(|r| r.embed(&ring))
                    .collect::<Result<_>>()?;
                let inverted = self
                    .localized_at
                    .iter()
                    .map(|r| r.embed(&ring))
                    .collect::<Result<_>>()?;
                Ok(FlatPresentation {
                    ring,
                    relations,
                    inverted,
                })
            }
            BaseRef::Pres(p) => {
                let inner = p.flatten()?;
                let mut vars = inner.ring.vars.clone();
                for v in &self.vars {
                    if vars.contains(v) {
                        return Err(Error::VariableMismatch(alloc::format!(
                            "duplicate variable {v}"
                        )));
                    }
                    vars.push(v.clone());
                }
                let ring = PolyRing::new(inner.ring.coeff.clone(), vars);
                let mut relations: Vec<MultiPoly> = inner
                    .relations
                    .iter()
                    .map(|r| r.embed(&ring))
                    .collect::<Result<_>>()?;
                for r in &self.relations {
                    relations.push(r.embed(&ring)?);
                }
                let mut inverted: Vec<MultiPoly> = inner
                    .inverted
                    .iter()
                    .map(|r| r.embed(&ring))
                    .collect::<Result<_>>()?;
                for e in &self.localized_at {
                    inverted.push(e.embed(&ring)?);
                }
                Ok(FlatPresentation {
                    ring,
                    relations,
                    inverted,
                })
            }
        }
    }
}

impl FlatPresentation {
    pub fn coefficient_ring(&self) -> &CoefficientRing {
        &self.ring.coeff
    }

    pub fn is_polynomial(&self) -> bool {
        self.relations.is_empty() && self.inverted.is_empty()
    }

    /// Realize localizations as extra variables: each inverted f gets a
    /// fresh variable t with relation f·t − 1.
    pub fn with_inverses_adjoined(&self) -> Result<FlatPresentation> {
        if self.inverted.is_empty() {
            return Ok(self.clone());
        }
        let mut vars = self.ring.vars.clone();
        for i in 0..self.inverted.len() {
            let name = alloc::format!("inv{i}_");
            if vars.contains(&name) {
                return Err(Error::VariableMismatch(name));
            }
            vars.push(name);
        }
        let ring = PolyRing::new(self.ring.coeff.clone(), vars);
        let mut relations: Vec<MultiPoly> = self
            .relations
            .iter()
            .map(|r| r.embed(&ring))
            .collect::<Result<_>>()?;
        for (i, f) in self.inverted.iter().enumerate() {
            let t = MultiPoly::var(&ring, self.ring.nvars() + i);
            relations.push(f.embed(&ring)?.mul(&t).sub(&MultiPoly::one(&ring)));
        }
        Ok(FlatPresentation {
            ring,
            relations,
            inverted: Vec::new(),
        })
    }

    /// Reduced Groebner basis of the relation ideal (field coefficients).
    pub fn relation_basis(&self, order: MonomialOrder) -> Result<Vec<MultiPoly>> {
        if self.relations.is_empty() {
            return Ok(Vec::new());
        }
        groebner::groebner_basis(&self.relations, order)
    }

    /// Normal form modulo the relation ideal. For field coefficients this
    /// is Groebner reduction; with no variables it is plain reduction of
    /// the constant modulo the constant relations.
    pub fn reduce(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if self.relations.is_empty() {
            return Ok(p.clone());
        }
        if self.ring.coeff.is_field() {
            let gb = self.relation_basis(MonomialOrder::GrevLex)?;
            groebner::normal_form(p, &gb, MonomialOrder::GrevLex)
        } else {
            // non-field: supported when every relation is either a bare
            // variable (kill it) or a constant (reduce modulo the gcd)
            let mut killed = alloc::vec![false; self.ring.nvars()];
            let mut modulus: Option<num_bigint::BigInt> = None;
            for r in &self.relations {
                if r.is_constant() {
                    let c = r.constant_term();
                    let c = c.as_int().expect("constant relation").clone();
                    modulus = Some(match modulus {
                        None => c,
                        Some(m) => num_integer::Integer::gcd(&m, &c),
                    });
                    continue;
                }
                let mut var = None;
                if r.num_terms() == 1 {
                    let (mono, c) = r.terms().next().expect("term");
                    if mono.degree() == 1 && (c.is_one() || self.ring.coeff.neg(c).is_one()) {
                        var = mono.0.iter().position(|&e| e == 1);
                    }
                }
                match var {
                    Some(v) => killed[v] = true,
                    None => return Err(Error::NonFieldCoefficients),
                }
            }
            let images: Vec<MultiPoly> = (0..self.ring.nvars())
                .map(|v| {
                    if killed[v] {
                        MultiPoly::zero(&self.ring)
                    } else {
                        MultiPoly::var(&self.ring, v)
                    }
                })
                .collect();
            let substituted = p.substitute(&self.ring, &images)?;
            match modulus {
                None => Ok(substituted),
                Some(m) if num_traits::Zero::is_zero(&m) => Ok(substituted),
                Some(m) => {
                    let mut out = MultiPoly::zero(&self.ring);
                    for (mono, c) in substituted.terms() {
                        let v = c.as_int().expect("integer coefficient").clone();
                        let red = num_integer::Integer::mod_floor(&v, &m);
                        out = out.add(&MultiPoly::monomial_term(
                            &self.ring,
                            mono.clone(),
                            self.ring.coeff.from_bigint(red),
                        ));
                    }
                    Ok(out)
                }
            }
        }
    }

    /// Is the element zero in the quotient ring?
    pub fn is_zero_in_quotient(&self, p: &MultiPoly) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }
}

/// A finitely presented module over a presentation: `B^generators / relations`,
/// each relation a vector of length `generators`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    pub over: FinitePresentation,
    pub generators: usize,
    pub relations: Vec<Vec<MultiPoly>>,
}

impl ModulePresentation {
    pub fn new(
        over: FinitePresentation,
        generators: usize,
        relations: Vec<Vec<MultiPoly>>,
    ) -> Result<Self> {
        for r in &relations {
            if r.len() != generators {
                return Err(Error::ShapeMismatch(alloc::format!(
                    "relation has {} entries, module has {} generators",
                    r.len(),
                    generators
                )));
            }
        }
        Ok(ModulePresentation {
            over,
            generators,
            relations,
        })
    }

    /// The free module of the given rank.
    pub fn free(over: FinitePresentation, rank: usize) -> Self {
        ModulePresentation {
            over,
            generators: rank,
            relations: Vec::new(),
        }
    }

    /// Relation vectors in the flattened ring, including the ring relations
    /// against every generator coordinate (so that kernels over the quotient
    /// ring can be computed over the ambient polynomial ring).
    pub fn ambient_relation_vectors(&self) -> Result<Vec<VecPoly>> {
        let flat = self.over.flatten()?;
        let mut out = Vec::new();
        for r in &self.relations {
            let comps: Vec<MultiPoly> = r
                .iter()
                .map(|p| p.embed(&flat.ring))
                .collect::<Result<_>>()?;
            out.push(VecPoly::from_comps(comps));
        }
        for f in &flat.relations {
            for j in 0..self.generators {
                let mut v = VecPoly::zero(&flat.ring, self.generators);
                v.comps[j] = f.clone();
                out.push(v);
            }
        }
        Ok(out)
    }
}

/// Build the n-fold tensor product of presentations over a common base:
/// vars and relations concatenated (names must be disjoint).
pub fn tensor_presentations(
    a: &FinitePresentation,
    b: &FinitePresentation,
    over_vars: usize,
) -> Result<FlatPresentation> {
    let fa = a.flatten()?;
    let fb = b.flatten()?;
    if fa.ring.coeff != fb.ring.coeff {
        return Err(Error::UnsupportedBase("mixed coefficient rings".into()));
    }
    if fa.ring.vars[..over_vars] != fb.ring.vars[..over_vars] {
        return Err(Error::UnsupportedBase(
            "tensor factors over different bases".into(),
        ));
    }
    let mut vars = fa.ring.vars.clone();
    for v in fb.ring.vars.iter().skip(over_vars) {
        if vars.contains(v) {
            return Err(Error::VariableMismatch(alloc::format!(
                "duplicate variable {v} in tensor product"
            )));
        }
        vars.push(v.clone());
    }
    let ring = PolyRing::new(fa.ring.coeff.clone(), vars);
    let mut relations: Vec<MultiPoly> = Vec::new();
    for r in fa.relations.iter().chain(fb.relations.iter()) {
        relations.push(r.embed(&ring)?);
    }
    let mut inverted: Vec<MultiPoly> = Vec::new();
    for e in fa.inverted.iter().chain(fb.inverted.iter()) {
        inverted.push(e.embed(&ring)?);
    }
    Ok(FlatPresentation {
        ring,
        relations,
        inverted,
    })
}
