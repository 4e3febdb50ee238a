//! Truncated free simplicial algebras and resolutions by cycle-killing.
//!
//! A [`Tower`] is a levelwise-polynomial simplicial algebra over a base
//! ring, described by *cells*: stage-0 cells are the presentation
//! variables; a stage-s cell (s ≥ 1) is a fresh generator adjoined at level
//! s whose 0th face is a prescribed normalized cycle at level s−1 and whose
//! other faces vanish. Level n then carries one generator per cell and
//! order-preserving surjection [n] ↠ [s], with faces
//!
//!   d_i(x_t) = x_{t∘δ_i}                  if t∘δ_i is surjective,
//!   d_i(x_t) = (degeneracy along t')(z)   if t∘δ_i = δ_0 ∘ t',
//!   d_i(x_t) = 0                          if t∘δ_i = δ_{j'} ∘ t', j' > 0,
//!
//! and degeneracies s_j(x_t) = x_{t∘σ_j}. Degeneracy copies of a cell keep
//! its weight (the total degree of its boundary), which makes the span of
//! monomials of bounded weight a simplicial submodule; homotopy of the
//! tower in positive degrees is computed on that filtered piece.
//!
//! `resolve` builds the resolution of a finite presentation: stage 1 kills
//! the relations, stage 2 kills π₁ (syzygies modulo Koszul syzygies, exact
//! via the Groebner engine), stage 3 kills π₂ found in the weight
//! filtration. The certificate records the killed cycles and how far
//! vanishing was verified; π₂ statements are filtration-verified and
//! flagged as such.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::groebner::{self, VecPoly};
use crate::matrix::{self, SMat};
use crate::poly::{Monomial, MonomialOrder, MultiPoly, PolyRing};
use crate::presentation::{FinitePresentation, FlatPresentation};
use crate::report::{GradedReport, HomologyReport};
use crate::resolution::PresentedPolyModule;
use crate::ring::CoefficientRing;
use crate::simplex::{surjections, SimplexMap};

const ORDER: MonomialOrder = MonomialOrder::GrevLex;

/// A family of generators adjoined at one stage.
#[derive(Clone, Debug)]
pub struct Cell {
    pub name: String,
    /// d_0 of the fresh generator: a polynomial at level stage−1
    /// (unused for stage 0).
    pub boundary: MultiPoly,
    pub weight: u64,
}

#[derive(Clone, Debug)]
pub struct Tower {
    pub base: CoefficientRing,
    pub trunc: usize,
    /// `stages[0]` are the presentation variables; `stages[s]` the cells
    /// first appearing at level s.
    pub stages: Vec<Vec<Cell>>,
}

/// Weak-equivalence bookkeeping produced by [`resolve`].
#[derive(Clone, Debug)]
pub struct ResolutionCertificate {
    /// Relations of the target presentation (rendered).
    pub target_relations: Vec<String>,
    /// (homotopy degree killed, rendered cycle representatives) per stage ≥ 1.
    pub stages: Vec<(usize, Vec<String>)>,
    pub verified_through: usize,
    pub regular_sequence: bool,
    pub notes: Vec<String>,
}

impl Tower {
    /// Generators of a level: (stage, cell index, surjection), in the
    /// canonical order (stage, cell, lexicographic surjection).
    pub fn level_gens(&self, n: usize) -> Vec<(usize, usize, SimplexMap)> {
        let mut out = Vec::new();
        for (s, cells) in self.stages.iter().enumerate() {
            if s > n {
                break;
            }
            for (c, _) in cells.iter().enumerate() {
                for t in surjections(n, s) {
                    out.push((s, c, t.clone()));
                }
            }
        }
        // order by (stage, cell, surjection) — surjections() is already lex
        out.sort_by(|a, b| (a.0, a.1, &a.2.values).cmp(&(b.0, b.1, &b.2.values)));
        out
    }

    fn gen_name(&self, s: usize, c: usize, t: &SimplexMap) -> String {
        if s == 0 {
            self.stages[0][c].name.clone()
        } else {
            let digits: String = t.values.iter().map(|v| v.to_string()).collect();
            alloc::format!("{}_{}", self.stages[s][c].name, digits)
        }
    }

    pub fn level_ring(&self, n: usize) -> Arc<PolyRing> {
        let vars: Vec<String> = self
            .level_gens(n)
            .iter()
            .map(|(s, c, t)| self.gen_name(*s, *c, t))
            .collect();
        PolyRing::new(self.base.clone(), vars)
    }

    /// Weight of each level-n generator (= weight of its cell).
    pub fn level_weights(&self, n: usize) -> Vec<u64> {
        self.level_gens(n)
            .iter()
            .map(|(s, c, _)| self.stages[*s][*c].weight)
            .collect()
    }

    fn gen_index(&self, n: usize, s: usize, c: usize, t: &SimplexMap) -> usize {
        self.level_gens(n)
            .iter()
            .position(|(s2, c2, t2)| *s2 == s && *c2 == c && t2 == t)
            .expect("generator exists at level")
    }

    /// The substitution implementing the structure map for an epi
    /// `t' : [n] ↠ [m]`: level m → level n, generator-to-generator.
    fn epi_substitution(&self, t_prime: &SimplexMap) -> Vec<MultiPoly> {
        let m = t_prime.target_dim;
        let n = t_prime.source_dim();
        let target = self.level_ring(n);
        self.level_gens(m)
            .iter()
            .map(|(s, c, t2)| {
                let composed = t2.compose(t_prime);
                MultiPoly::var(&target, self.gen_index(n, *s, *c, &composed))
            })
            .collect()
    }

    /// Images of the level-n generators under d_i, in the level n−1 ring.
    pub fn face_images(&self, n: usize, i: usize) -> Vec<MultiPoly> {
        assert!(n >= 1 && i <= n, "face index");
        let target = self.level_ring(n - 1);
        let delta = SimplexMap::coface(n - 1, i);
        self.level_gens(n)
            .iter()
            .map(|(s, c, t)| {
                if *s == 0 {
                    return MultiPoly::var(
                        &target,
                        self.gen_index(n - 1, 0, *c, &t.compose(&delta)),
                    );
                }
                let composed = t.compose(&delta);
                if composed.is_surjective() {
                    MultiPoly::var(&target, self.gen_index(n - 1, *s, *c, &composed))
                } else {
                    let (epi, mono) = composed.factorize();
                    // mono : [s-1] ↪ [s]; the skipped value decides
                    let mut present = vec![false; *s + 1];
                    for &v in &mono.values {
                        present[v] = true;
                    }
                    let skipped = present.iter().position(|p| !p).expect("proper mono");
                    if skipped == 0 {
                        let sub = self.epi_substitution(&epi);
                        self.stages[*s][*c]
                            .boundary
                            .substitute(&target, &sub)
                            .expect("boundary substitution")
                    } else {
                        MultiPoly::zero(&target)
                    }
                }
            })
            .collect()
    }

    /// Images of the level-n generators under s_i, in the level n+1 ring.
    pub fn degeneracy_images(&self, n: usize, i: usize) -> Vec<MultiPoly> {
        assert!(i <= n && n < self.trunc, "degeneracy index");
        let target = self.level_ring(n + 1);
        let sigma = SimplexMap::codegeneracy(n, i);
        self.level_gens(n)
            .iter()
            .map(|(s, c, t)| {
                MultiPoly::var(&target, self.gen_index(n + 1, *s, *c, &t.compose(&sigma)))
            })
            .collect()
    }

    /// Verify the simplicial identities as algebra-map identities on
    /// generators, through the truncation.
    pub fn verify_identities(&self) -> Result<()> {
        for n in 2..=self.trunc {
            let gens = self.level_ring(n);
            for j in 0..=n {
                for i in 0..j {
                    let lhs = compose_sub(
                        &self.face_images(n, j),
                        &self.face_images(n - 1, i),
                        &self.level_ring(n - 2),
                    )?;
                    let rhs = compose_sub(
                        &self.face_images(n, i),
                        &self.face_images(n - 1, j - 1),
                        &self.level_ring(n - 2),
                    )?;
                    if lhs != rhs {
                        return Err(Error::ShapeMismatch(alloc::format!(
                            "face identity fails at level {n} (i={i}, j={j}) on {}",
                            gens.vars.join(",")
                        )));
                    }
                }
            }
        }
        for n in 0..self.trunc {
            for j in 0..=n {
                for i in 0..=(n + 1) {
                    let lhs = compose_sub(
                        &self.degeneracy_images(n, j),
                        &self.face_images(n + 1, i),
                        &self.level_ring(n),
                    )?;
                    let expected = if i == j || i == j + 1 {
                        self.level_gens(n)
                            .iter()
                            .enumerate()
                            .map(|(g, _)| MultiPoly::var(&self.level_ring(n), g))
                            .collect::<Vec<_>>()
                    } else if i < j {
                        compose_sub(
                            &self.face_images(n, i),
                            &self.degeneracy_images(n - 1, j - 1),
                            &self.level_ring(n),
                        )?
                    } else {
                        compose_sub(
                            &self.face_images(n, i - 1),
                            &self.degeneracy_images(n - 1, j),
                            &self.level_ring(n),
                        )?
                    };
                    if lhs != expected {
                        return Err(Error::ShapeMismatch(alloc::format!(
                            "mixed identity fails at level {n} (i={i}, j={j})"
                        )));
                    }
                }
            }
        }
        for n in 0..self.trunc.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = compose_sub(
                        &self.degeneracy_images(n, j),
                        &self.degeneracy_images(n + 1, i),
                        &self.level_ring(n + 2),
                    )?;
                    let rhs = compose_sub(
                        &self.degeneracy_images(n, i),
                        &self.degeneracy_images(n + 1, j + 1),
                        &self.level_ring(n + 2),
                    )?;
                    if lhs != rhs {
                        return Err(Error::ShapeMismatch(alloc::format!(
                            "degeneracy identity fails at level {n} (i={i}, j={j})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// π₀ as a flat presentation: level-0 ring modulo the stage-1
    /// boundaries.
    pub fn pi0(&self) -> FlatPresentation {
        let ring = self.level_ring(0);
        let relations = self
            .stages
            .get(1)
            .map(|cells| cells.iter().map(|c| c.boundary.clone()).collect())
            .unwrap_or_default();
        FlatPresentation {
            ring,
            relations,
            inverted: Vec::new(),
        }
    }

    /// Moore complex of the weight-≤cap filtration: finite-dimensional
    /// levels spanned by monomials of bounded weight, with the alternating
    /// face sum as differential. Exact cycles of the tower, but only a
    /// filtered picture of its homology.
    pub fn filtered_moore(&self, cap: u64) -> Result<(ChainComplex, Vec<Vec<Monomial>>)> {
        if !self.base.is_field() {
            return Err(Error::NonFieldCoefficients);
        }
        let mut bases: Vec<Vec<Monomial>> = Vec::new();
        for n in 0..=self.trunc {
            let ring = self.level_ring(n);
            let weights = self.level_weights(n);
            bases.push(monomials_up_to(&ring, &weights, cap));
        }
        let ranks: Vec<usize> = bases.iter().map(|b| b.len()).collect();
        let mut boundaries = vec![SMat::zeros(&self.base, 0, ranks[0])];
        for n in 1..=self.trunc {
            let ring_lower = self.level_ring(n - 1);
            let mut total = SMat::zeros(&self.base, ranks[n - 1], ranks[n]);
            for i in 0..=n {
                let images = self.face_images(n, i);
                let mat = monomial_matrix(
                    &self.level_ring(n),
                    &bases[n],
                    &ring_lower,
                    &bases[n - 1],
                    &images,
                )?;
                let sgn = self.base.from_i64(if i % 2 == 0 { 1 } else { -1 });
                total = total.add(&self.base, &mat.scale(&self.base, &sgn));
            }
            boundaries.push(total);
        }
        Ok((
            ChainComplex::new(self.base.clone(), 0, ranks, boundaries)?,
            bases,
        ))
    }

    /// Default weight cap: one more than the largest cell weight.
    pub fn weight_cap(&self) -> u64 {
        1 + self
            .stages
            .iter()
            .flat_map(|cells| cells.iter().map(|c| c.weight))
            .max()
            .unwrap_or(1)
    }

    /// Representatives of π_i-generators found in the weight filtration,
    /// reduced against boundaries and the π₀-module span of earlier finds.
    /// Exact cycles; completeness holds up to the filtration cap only.
    pub fn filtered_pi_generators(&self, i: usize, cap: u64) -> Result<Vec<MultiPoly>> {
        if i == 0 || i >= self.trunc {
            return Err(Error::TruncationExceeded(i));
        }
        let (moore, bases) = self.filtered_moore(cap)?;
        let ring = &self.base;
        let level_ring = self.level_ring(i);
        let weights = self.level_weights(i);
        // cycles: kernel of the filtered Moore differential at degree i
        let cycles = matrix::nullspace(ring, &moore.boundaries[i]);
        // boundary image from degree i+1
        let image = moore.boundaries[i + 1].clone();
        // span accumulates boundaries + base-variable multiples of kept cycles
        let mut span: SMat = image;
        let mut kept: Vec<MultiPoly> = Vec::new();
        let nbase = self.stages[0].len();
        for c in 0..cycles.cols {
            let vec_c = cycles.select_cols(&[c]);
            if in_span(ring, &span, &vec_c) {
                continue;
            }
            // keep this cycle
            let poly = from_coords(&level_ring, &bases[i], &vec_c);
            kept.push(poly.clone());
            // close the span under multiplication by base-variable monomials
            let mut frontier = vec![poly];
            while let Some(p) = frontier.pop() {
                let coords = to_coords(&level_ring, &bases[i], &p);
                if let Some(coords) = coords {
                    if !in_span(ring, &span, &coords) {
                        span = span.hstack(&coords);
                    }
                } else {
                    continue; // escaped the filtration
                }
                if p.weighted_degree(&weights) < cap {
                    for v in 0..nbase {
                        // base variables are the first generators of the level
                        let idx = self.gen_index(
                            i,
                            0,
                            v,
                            &surjections(i, 0).pop().expect("unique surjection"),
                        );
                        frontier.push(p.mul(&MultiPoly::var(&level_ring, idx)));
                    }
                }
            }
        }
        Ok(kept)
    }
}

fn compose_sub(
    first: &[MultiPoly],
    then: &[MultiPoly],
    final_ring: &Arc<PolyRing>,
) -> Result<Vec<MultiPoly>> {
    // images of generators under `then ∘ first` (apply `first`, then map
    // its target generators through `then`)
    first
        .iter()
        .map(|p| p.substitute(final_ring, then))
        .collect()
}

/// All monomials of weighted degree ≤ cap, in deterministic order.
fn monomials_up_to(ring: &Arc<PolyRing>, weights: &[u64], cap: u64) -> Vec<Monomial> {
    let nv = ring.nvars();
    let mut out = vec![Monomial::one(nv)];
    let mut frontier = vec![(Monomial::one(nv), 0u64, 0usize)];
    while let Some((m, w, start)) = frontier.pop() {
        for v in start..nv {
            let nw = w + weights[v];
            if nw > cap {
                continue;
            }
            let mut next = m.clone();
            next.0[v] += 1;
            out.push(next.clone());
            frontier.push((next, nw, v));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Matrix of an algebra map restricted to monomial bases (by weight cap the
/// image stays inside the target basis).
fn monomial_matrix(
    src_ring: &Arc<PolyRing>,
    src_basis: &[Monomial],
    tgt_ring: &Arc<PolyRing>,
    tgt_basis: &[Monomial],
    images: &[MultiPoly],
) -> Result<SMat> {
    let ring = &src_ring.coeff;
    let mut out = SMat::zeros(ring, tgt_basis.len(), src_basis.len());
    for (j, m) in src_basis.iter().enumerate() {
        let p = MultiPoly::monomial_term(src_ring, m.clone(), ring.one())
            .substitute(tgt_ring, images)?;
        for (mono, c) in p.terms() {
            let i = tgt_basis
                .binary_search(mono)
                .map_err(|_| Error::ShapeMismatch("image escaped the filtration".into()))?;
            out.set(i, j, c.clone());
        }
    }
    Ok(out)
}

fn to_coords(ring: &Arc<PolyRing>, basis: &[Monomial], p: &MultiPoly) -> Option<SMat> {
    let mut out = SMat::zeros(&ring.coeff, basis.len(), 1);
    for (mono, c) in p.terms() {
        match basis.binary_search(mono) {
            Ok(i) => out.set(i, 0, c.clone()),
            Err(_) => return None,
        }
    }
    Some(out)
}

fn from_coords(ring: &Arc<PolyRing>, basis: &[Monomial], coords: &SMat) -> MultiPoly {
    let mut p = MultiPoly::zero(ring);
    for i in 0..coords.rows {
        let c = coords.at(i, 0);
        if !c.is_zero() {
            p = p.add(&MultiPoly::monomial_term(ring, basis[i].clone(), c.clone()));
        }
    }
    p
}

fn in_span(ring: &CoefficientRing, span: &SMat, v: &SMat) -> bool {
    if span.cols == 0 {
        return v.is_zero();
    }
    matrix::solve(ring, span, v).is_some()
}

/// Is the relation list a regular sequence? Exact over fields: the syzygy
/// module must coincide with the Koszul-syzygy submodule. Over ℤ only the
/// principal case is decided (a nonzero polynomial over a domain is a
/// non-zerodivisor).
pub fn is_regular_sequence(flat: &FlatPresentation) -> Result<bool> {
    let rels: Vec<MultiPoly> = flat.relations.clone();
    if rels.is_empty() {
        return Ok(true);
    }
    if rels.iter().any(|r| r.is_zero()) {
        return Ok(false);
    }
    match flat.ring.coeff {
        CoefficientRing::Rationals | CoefficientRing::PrimeField(_) => {
            let syz = groebner::syzygies(&rels, ORDER)?;
            if syz.is_empty() {
                return Ok(true);
            }
            let kos = groebner::koszul_syzygies(&rels);
            if kos.is_empty() {
                return Ok(syz.iter().all(|s| s.is_zero()));
            }
            let mb = groebner::module_groebner(&kos, ORDER)?;
            Ok(syz.iter().all(|s| mb.contains(s)))
        }
        CoefficientRing::Integers => {
            if rels.len() == 1 {
                Ok(true)
            } else {
                Err(Error::NonComputableBase(
                    "regularity over Z is only decided for principal ideals".into(),
                ))
            }
        }
        _ => Err(Error::NonComputableBase(
            "regularity needs a field or Z base".into(),
        )),
    }
}

/// Graded report of a derived tensor product, with the Koszul ring
/// structure exposed when both factors live in the Koszul subcomplex (the
/// relations of the resolved factor all die in the other one).
#[derive(Clone, Debug)]
pub struct DerivedTensorReport {
    pub reports: Vec<HomologyReport>,
    /// classical iff all positive homotopy vanishes in the stored range
    pub classical: bool,
    /// number of exterior generators when the Koszul ring structure applies
    pub exterior_generators: Option<usize>,
    pub notes: Vec<String>,
}

/// π_i(B ⊗^L_A B₂) = Tor_i^A(B, B₂), with ring structure on the Koszul
/// subcomplex when available.
pub fn derived_tensor(
    b: &FinitePresentation,
    b2: &FinitePresentation,
    base: &FinitePresentation,
    through: usize,
) -> Result<DerivedTensorReport> {
    let reports = crate::resolution::tor_through(b, b2, base, through)?;
    let classical = reports.iter().skip(1).all(|r| r.is_zero());
    let mut notes = Vec::new();
    // Koszul ring structure: B regular over the base and its fresh
    // relations vanish in B₂
    let exterior = (|| -> Result<Option<usize>> {
        let fb = b.flatten()?;
        let fbase = base.flatten()?;
        let fresh: Vec<MultiPoly> = fb
            .relations
            .iter()
            .skip(fbase.relations.len())
            .cloned()
            .collect();
        if fresh.is_empty() {
            return Ok(None);
        }
        let sub = FlatPresentation {
            ring: fb.ring.clone(),
            relations: fresh.clone(),
            inverted: Vec::new(),
        };
        let regular = match is_regular_sequence(&sub) {
            Ok(r) => r,
            Err(_) => return Ok(None),
        };
        if !regular {
            return Ok(None);
        }
        let fb2 = b2.flatten()?.with_inverses_adjoined()?;
        for f in &fresh {
            let moved = f.embed(&fb2.ring)?;
            if !fb2.is_zero_in_quotient(&moved)? {
                return Ok(None);
            }
        }
        Ok(Some(fresh.len()))
    })()?;
    if exterior.is_some() {
        notes
            .push("exterior algebra on the degree-one relation classes (Koszul subcomplex)".into());
    }
    Ok(DerivedTensorReport {
        reports,
        classical,
        exterior_generators: exterior,
        notes,
    })
}

/// Product of exterior-monomial basis classes of the Koszul subcomplex:
/// classes are index subsets of the degree-one generators; the wedge is
/// zero on overlaps and carries the shuffle sign otherwise.
pub fn koszul_wedge(a: &[usize], b: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut merged: Vec<usize> = a.to_vec();
    for x in b {
        if merged.contains(x) {
            return None;
        }
        merged.push(*x);
    }
    // count inversions of the concatenation
    let mut sign = 1i64;
    let concat: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
    for i in 0..concat.len() {
        for j in (i + 1)..concat.len() {
            if concat[i] > concat[j] {
                sign = -sign;
            }
        }
    }
    merged.sort();
    Some((sign, merged))
}

/// Product of homotopy classes carried by the Koszul subcomplex of a
/// tower. Requests outside it are refused rather than approximated.
pub fn koszul_product(tower: &Tower, a: &[usize], b: &[usize]) -> Result<(i64, Vec<usize>)> {
    let m = tower.stages.get(1).map(|c| c.len()).unwrap_or(0);
    if a.iter().chain(b.iter()).any(|&i| i >= m) {
        return Err(Error::UnsupportedProduct(
            "class is not carried by the degree-one relation generators".into(),
        ));
    }
    match koszul_wedge(a, b) {
        Some(p) => Ok(p),
        None => Ok((0, Vec::new())),
    }
}

/// Resolve a finite presentation by a truncated free simplicial algebra.
///
/// Stage 1 kills the relations; stage 2 kills generators of the first
/// homotopy (syzygies modulo Koszul syzygies); stage 3 kills second
/// homotopy found in the weight filtration. The certificate records what
/// was killed and how far vanishing is verified.
pub fn resolve(b: &FinitePresentation, trunc: usize) -> Result<(Tower, ResolutionCertificate)> {
    resolve_with_order(b, trunc, ORDER)
}

/// As [`resolve`], with the monomial order used for syzygy computations
/// made explicit; different orders act as different deterministic
/// tie-breakers for the killed cycle generators, and homotopy-invariant
/// outputs (cotangent homology) must agree across them.
pub fn resolve_with_order(
    b: &FinitePresentation,
    trunc: usize,
    order: MonomialOrder,
) -> Result<(Tower, ResolutionCertificate)> {
    resolve_inner(b, trunc, order)
}

fn resolve_inner(
    b: &FinitePresentation,
    trunc: usize,
    syz_order: MonomialOrder,
) -> Result<(Tower, ResolutionCertificate)> {
    if trunc > 3 {
        return Err(Error::TruncationTooDeep(trunc));
    }
    let flat = b.flatten()?;
    let flat = flat.with_inverses_adjoined()?;
    let coeff = flat.ring.coeff.clone();
    match coeff {
        CoefficientRing::Rationals | CoefficientRing::PrimeField(_) => {}
        CoefficientRing::Integers => {
            if flat.relations.len() > 1 {
                return Err(Error::NonComputableBase(
                    "over Z only principal (regular) relations are resolved".into(),
                ));
            }
        }
        _ => {
            return Err(Error::NonComputableBase(
                "resolution base must be a field or Z".into(),
            ))
        }
    }

    let mut notes = Vec::new();
    let mut stages: Vec<Vec<Cell>> = Vec::new();
    // stage 0: presentation variables
    let ring0 = PolyRing::new(coeff.clone(), flat.ring.vars.clone());
    stages.push(
        flat.ring
            .vars
            .iter()
            .map(|v| Cell {
                name: v.clone(),
                boundary: MultiPoly::zero(&ring0),
                weight: 1,
            })
            .collect(),
    );
    let mut tower = Tower {
        base: coeff.clone(),
        trunc,
        stages,
    };
    let mut cert_stages: Vec<(usize, Vec<String>)> = Vec::new();

    // stage 1: kill π₀-kernel generators (the relations)
    let level0 = tower.level_ring(0);
    let rels: Vec<MultiPoly> = flat
        .relations
        .iter()
        .map(|r| r.embed(&level0))
        .collect::<Result<_>>()?;
    if trunc >= 1 && !rels.is_empty() {
        let cells: Vec<Cell> = rels
            .iter()
            .enumerate()
            .map(|(c, f)| Cell {
                name: alloc::format!("u{c}"),
                weight: f.total_degree().max(1),
                boundary: f.clone(),
            })
            .collect();
        tower.stages.push(cells);
        cert_stages.push((0, rels.iter().map(|f| alloc::format!("{f}")).collect()));
    } else if trunc >= 1 {
        tower.stages.push(Vec::new());
        cert_stages.push((0, Vec::new()));
    }

    let regular = is_regular_sequence(&flat)?;

    // stage 2: kill π₁ = Syz/Koszul generators
    if trunc >= 2 {
        let mut killed: Vec<String> = Vec::new();
        let mut cells: Vec<Cell> = Vec::new();
        if !regular && !rels.is_empty() && coeff.is_field() {
            let syz = groebner::syzygies(&rels, syz_order)?;
            let kos = groebner::koszul_syzygies(&rels);
            let level1 = tower.level_ring(1);
            // membership accumulates: Koszul + already-killed syzygies
            let mut span = kos.clone();
            for s in syz {
                if s.is_zero() {
                    continue;
                }
                let member = if span.is_empty() {
                    false
                } else {
                    groebner::module_groebner(&span, syz_order)?.contains(&s)
                };
                if member {
                    continue;
                }
                span.push(s.clone());
                // cycle at level 1: Σ s_c · u_c
                let mut z = MultiPoly::zero(&level1);
                for (c, comp) in s.comps.iter().enumerate() {
                    let u_idx = tower.gen_index(1, 1, c, &SimplexMap::identity(1));
                    let coefficient = comp.embed(&level1)?;
                    z = z.add(&coefficient.mul(&MultiPoly::var(&level1, u_idx)));
                }
                let weights = tower.level_weights(1);
                let w = z.weighted_degree(&weights);
                killed.push(alloc::format!("{z}"));
                cells.push(Cell {
                    name: alloc::format!("v{}", cells.len()),
                    weight: w,
                    boundary: z,
                });
            }
        }
        cert_stages.push((1, killed));
        tower.stages.push(cells);
    }

    // stage 3: kill filtered π₂ generators
    if trunc >= 3 {
        let mut killed: Vec<String> = Vec::new();
        let mut cells: Vec<Cell> = Vec::new();
        if !regular && coeff.is_field() {
            let cap = tower.weight_cap();
            let gens = tower.filtered_pi_generators(2, cap)?;
            for z in gens {
                let weights = tower.level_weights(2);
                let w = z.weighted_degree(&weights);
                killed.push(alloc::format!("{z}"));
                cells.push(Cell {
                    name: alloc::format!("w{}", cells.len()),
                    weight: w,
                    boundary: z,
                });
            }
        }
        cert_stages.push((2, killed));
        tower.stages.push(cells);
    }
    while tower.stages.len() <= trunc {
        tower.stages.push(Vec::new());
        cert_stages.push((tower.stages.len() - 2, Vec::new()));
    }

    tower.verify_identities()?;

    // certify: π₀ matches the target
    let pi0 = tower.pi0();
    if coeff.is_field() {
        let target_gb = flat.relation_basis(ORDER)?;
        let built_gb = pi0.relation_basis(ORDER)?;
        if target_gb != built_gb {
            return Err(Error::ShapeMismatch(
                "π₀ of the resolution differs from the target".into(),
            ));
        }
    }
    // certify: π₁ = 0 after stage 2 (exact membership)
    let mut verified_through = 0usize;
    if regular {
        verified_through = trunc.saturating_sub(1);
        notes.push(
            "regular sequence: Koszul closed form, homotopy vanishes in positive degrees".into(),
        );
    } else if trunc >= 2 && coeff.is_field() {
        let syz = groebner::syzygies(&rels, syz_order)?;
        let mut span = groebner::koszul_syzygies(&rels);
        for cell in &tower.stages[2] {
            // boundary = Σ s_c u_c: recover the vector of u-coefficients
            let level1 = tower.level_ring(1);
            let mut vecp = VecPoly::zero(&level0, rels.len());
            for (c, _) in rels.iter().enumerate() {
                let u_idx = tower.gen_index(1, 1, c, &SimplexMap::identity(1));
                // ∂/∂u_c extracts the coefficient (boundaries are u-linear)
                let coefficient = cell.boundary.partial_derivative(u_idx);
                let back = project_to_level0(&coefficient, &level1, &level0, &tower)?;
                vecp.comps[c] = back;
            }
            span.push(vecp);
        }
        let ok = if span.is_empty() {
            syz.iter().all(|s| s.is_zero())
        } else {
            let mb = groebner::module_groebner(&span, syz_order)?;
            syz.iter().all(|s| mb.contains(s))
        };
        if !ok {
            return Err(Error::ShapeMismatch(
                "stage-2 cells do not span the first homotopy".into(),
            ));
        }
        verified_through = 1;
        // π₂ after stage 3, within the filtration
        if trunc >= 3 {
            let cap = tower.weight_cap();
            let leftover = tower.filtered_pi_generators(2, cap)?;
            if leftover.is_empty() {
                verified_through = 2;
                notes.push(alloc::format!(
                    "π₂ vanishing verified within the weight-≤{cap} filtration"
                ));
            } else {
                notes.push("π₂ generators remain after stage 3".into());
            }
        }
    }

    let cert = ResolutionCertificate {
        target_relations: flat
            .relations
            .iter()
            .map(|r| alloc::format!("{r}"))
            .collect(),
        stages: cert_stages,
        verified_through,
        regular_sequence: regular,
        notes,
    };
    Ok((tower, cert))
}

/// Pull a polynomial that only involves base-variable copies back to the
/// level-0 ring.
fn project_to_level0(
    p: &MultiPoly,
    level: &Arc<PolyRing>,
    level0: &Arc<PolyRing>,
    tower: &Tower,
) -> Result<MultiPoly> {
    let _ = level;
    // base variables have the same names at every level
    let images: Vec<MultiPoly> = p
        .ring
        .vars
        .iter()
        .map(|v| match level0.var_index(v) {
            Some(i) => Ok(MultiPoly::var(level0, i)),
            None => {
                if tower.stages[0].iter().any(|c| &c.name == v) {
                    unreachable!("base variable missing from level 0")
                } else {
                    Ok(MultiPoly::zero(level0))
                }
            }
        })
        .collect::<Result<_>>()?;
    p.substitute(level0, &images)
}

/// Present the subquotient span(cycles)/span(boundaries) of R^k as a module
/// over the quotient ring.
pub fn subquotient_presentation(
    over: &FlatPresentation,
    cycles: &[VecPoly],
    boundaries: &[VecPoly],
) -> Result<PresentedPolyModule> {
    let t = cycles.len();
    if t == 0 {
        return Ok(PresentedPolyModule {
            over: over.clone(),
            gens: 0,
            relations: Vec::new(),
        });
    }
    let rank = cycles[0].len();
    let ring = over.ring.clone();
    let mut gens: Vec<VecPoly> = cycles.to_vec();
    gens.extend(boundaries.iter().cloned());
    for f in &over.relations {
        for i in 0..rank {
            let mut v = VecPoly::zero(&ring, rank);
            v.comps[i] = f.clone();
            gens.push(v);
        }
    }
    let mb = groebner::module_groebner(&gens, ORDER)?;
    let mut relations = Vec::new();
    for s in mb.syzygies() {
        let mut proj = VecPoly::from_comps(s.comps[..t].to_vec());
        for c in proj.comps.iter_mut() {
            *c = over.reduce(c)?;
        }
        if !proj.is_zero() && !relations.contains(&proj) {
            relations.push(proj);
        }
    }
    Ok(PresentedPolyModule {
        over: over.clone(),
        gens: t,
        relations,
    })
}

/// Homotopy of a tower: π₀ as a presentation, π₁ exactly (syzygies modulo
/// Koszul and killed cells), π₂ through the weight filtration.
pub struct HomotopyReport {
    pub pi0: FlatPresentation,
    pub pi1: Option<PresentedPolyModule>,
    pub graded: GradedReport,
}

pub fn homotopy_ring(tower: &Tower, through: usize) -> Result<HomotopyReport> {
    if through + 1 > tower.trunc {
        return Err(Error::TruncationExceeded(through));
    }
    let pi0 = tower.pi0();
    let mut reports = vec![];
    // π₀ rendered as a rank-1 free module report when it is the whole ring
    reports.push(HomologyReport {
        degree: 0,
        free_rank: 1,
        torsion: Vec::new(),
        dimension: None,
        presentation: None,
    });
    let mut pi1 = None;
    let mut notes = Vec::new();
    if through >= 1 {
        if tower.base.is_field() {
            let rels: Vec<MultiPoly> = pi0.relations.clone();
            let syz = if rels.is_empty() {
                Vec::new()
            } else {
                groebner::syzygies(&rels, ORDER)?
            };
            let mut bounds = groebner::koszul_syzygies(&rels);
            if tower.stages.len() > 2 {
                let level0 = tower.level_ring(0);
                let level1 = tower.level_ring(1);
                for cell in &tower.stages[2] {
                    let mut vecp = VecPoly::zero(&level0, rels.len());
                    for c in 0..rels.len() {
                        let u_idx = tower.gen_index(1, 1, c, &SimplexMap::identity(1));
                        let coefficient = cell.boundary.partial_derivative(u_idx);
                        vecp.comps[c] = project_to_level0(&coefficient, &level1, &level0, tower)?;
                    }
                    bounds.push(vecp);
                }
            }
            let module = subquotient_presentation(&pi0, &syz, &bounds)?;
            let dim = if module.gens == 0 {
                Some(0)
            } else {
                module.dimension_over_field()?
            };
            let zero = module.is_zero()?;
            reports.push(HomologyReport {
                degree: 1,
                free_rank: if zero { 0 } else { module.gens },
                torsion: Vec::new(),
                dimension: if zero { Some(0) } else { dim },
                presentation: Some((module.gens, module.relations.len())),
            });
            pi1 = Some(module);
        } else {
            // Z base, principal regular relation: π₁ = 0
            reports.push(HomologyReport::zero(1, false));
        }
    }
    if through >= 2 {
        if tower.base.is_field() {
            let cap = tower.weight_cap();
            let gens = tower.filtered_pi_generators(2, cap)?;
            reports.push(HomologyReport {
                degree: 2,
                free_rank: gens.len(),
                torsion: Vec::new(),
                dimension: None,
                presentation: None,
            });
            notes.push(alloc::format!(
                "π₂ generators counted within the weight-≤{cap} filtration"
            ));
        } else {
            reports.push(HomologyReport::zero(2, false));
        }
    }
    Ok(HomotopyReport {
        pi0,
        pi1,
        graded: GradedReport {
            reports,
            reliable_through: through.min(tower.trunc - 1) as i64,
            notes,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> CoefficientRing {
        CoefficientRing::prime_field(5).unwrap()
    }

    #[test]
    fn resolve_trivial_algebra() {
        // B = A = k: nothing to kill
        let b = FinitePresentation::of_coefficients(f5());
        let (tower, cert) = resolve(&b, 3).unwrap();
        assert!(tower.stages[0].is_empty());
        assert!(tower.stages[1].is_empty());
        assert!(cert.regular_sequence);
    }

    #[test]
    fn resolve_cusp_is_regular() {
        // B = k[x,y]/(x² − y³): one stage-1 cell, no stage-2 cells
        let p = FinitePresentation::polynomial(f5(), &["x", "y"]);
        let ring = p.flatten().unwrap().ring;
        let x = MultiPoly::var(&ring, 0);
        let y = MultiPoly::var(&ring, 1);
        let b = FinitePresentation::quotient(p, vec![x.pow(2).sub(&y.pow(3))]).unwrap();
        let (tower, cert) = resolve(&b, 3).unwrap();
        assert_eq!(tower.stages[1].len(), 1);
        assert!(tower.stages[2].is_empty());
        assert!(tower.stages[3].is_empty());
        assert!(cert.regular_sequence);
        assert_eq!(cert.verified_through, 2);
        // homotopy: π₀ = B, π₁ = 0
        let h = homotopy_ring(&tower, 2).unwrap();
        assert_eq!(h.graded.reports[1].dimension, Some(0));
    }

    #[test]
    fn resolve_nonregular_pair() {
        // B = k[x,y]/(x², xy): stage-2 must kill the extra syzygy
        let p = FinitePresentation::polynomial(f5(), &["x", "y"]);
        let ring = p.flatten().unwrap().ring;
        let x = MultiPoly::var(&ring, 0);
        let y = MultiPoly::var(&ring, 1);
        let b = FinitePresentation::quotient(p, vec![x.pow(2), x.mul(&y)]).unwrap();
        let (tower, cert) = resolve(&b, 3).unwrap();
        assert!(!cert.regular_sequence);
        assert_eq!(tower.stages[1].len(), 2);
        assert_eq!(tower.stages[2].len(), 1, "one killed syzygy class");
        assert!(cert.verified_through >= 1);
        // the stage-1 tower alone has nonzero π₁
        let mut stage1 = tower.clone();
        stage1.stages[2].clear();
        stage1.stages[3].clear();
        let h = homotopy_ring(&stage1, 1).unwrap();
        assert!(h.graded.reports[1].dimension != Some(0));
        // after stage 2 it vanishes
        let h2 = homotopy_ring(&tower, 1).unwrap();
        assert_eq!(h2.graded.reports[1].dimension, Some(0));
    }

    #[test]
    fn resolve_fp_over_z() {
        let z = FinitePresentation::of_coefficients(CoefficientRing::Integers);
        let ring = z.flatten().unwrap().ring;
        let five = MultiPoly::constant(&ring, crate::ring::Scalar::from_int(5));
        let fp = FinitePresentation::quotient(z, vec![five]).unwrap();
        let (tower, cert) = resolve(&fp, 3).unwrap();
        assert_eq!(tower.stages[1].len(), 1);
        assert!(cert.regular_sequence);
    }

    #[test]
    fn stage1_for_x2_has_pi1_zero() {
        // principal non-zerodivisor: B = k[x]/(x²)
        let p = FinitePresentation::polynomial(f5(), &["x"]);
        let ring = p.flatten().unwrap().ring;
        let x = MultiPoly::var(&ring, 0);
        let b = FinitePresentation::quotient(p, vec![x.pow(2)]).unwrap();
        let (tower, cert) = resolve(&b, 2).unwrap();
        assert!(cert.regular_sequence);
        let h = homotopy_ring(&tower, 1).unwrap();
        assert_eq!(h.graded.reports[1].dimension, Some(0));
    }

    #[test]
    fn constant_tower_homotopy() {
        // no relations: π₀ = polynomial ring, higher homotopy zero
        let b = FinitePresentation::polynomial(f5(), &["x"]);
        let (tower, _) = resolve(&b, 3).unwrap();
        let h = homotopy_ring(&tower, 2).unwrap();
        assert_eq!(h.graded.reports[1].dimension, Some(0));
        assert_eq!(h.graded.reports[2].free_rank, 0);
    }

    #[test]
    fn level_generator_counts() {
        // cusp tower: level n has 2 base vars + C(n,1) copies of u
        let p = FinitePresentation::polynomial(f5(), &["x", "y"]);
        let ring = p.flatten().unwrap().ring;
        let x = MultiPoly::var(&ring, 0);
        let y = MultiPoly::var(&ring, 1);
        let b = FinitePresentation::quotient(p, vec![x.pow(2).sub(&y.pow(3))]).unwrap();
        let (tower, _) = resolve(&b, 3).unwrap();
        assert_eq!(tower.level_gens(0).len(), 2);
        assert_eq!(tower.level_gens(1).len(), 3);
        assert_eq!(tower.level_gens(2).len(), 4);
        assert_eq!(tower.level_gens(3).len(), 5);
    }
}
