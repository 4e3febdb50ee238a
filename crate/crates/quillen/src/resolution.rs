//! Free resolutions of presented modules, homology of polynomial complexes
//! over quotient rings, finite-dimensional module data, and Tor.
//!
//! Over a quotient ring B = R/I (field coefficients) every kernel is
//! computed over the ambient polynomial ring R with the ring relations
//! appended to each coordinate, so the Groebner engine never needs modules
//! over quotients. Over ℤ only the zero-variable (constant) case is
//! supported, through Smith normal form.

use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{ChainComplex, PolyComplex};
use crate::error::{Error, Result};
use crate::groebner::{self, VecPoly};
use crate::matrix::{Matrix, SMat};
use crate::poly::{Monomial, MonomialOrder, MultiPoly};
use crate::presentation::{FinitePresentation, FlatPresentation, ModulePresentation};
use crate::report::HomologyReport;
use crate::ring::CoefficientRing;
use crate::snf::{self};

const ORDER: MonomialOrder = MonomialOrder::GrevLex;

/// A finitely presented module over a flattened quotient ring: generators
/// and relation vectors (in the ambient ring, reduced modulo the ideal).
#[derive(Clone, Debug)]
pub struct PresentedPolyModule {
    pub over: FlatPresentation,
    pub gens: usize,
    pub relations: Vec<VecPoly>,
}

impl PresentedPolyModule {
    /// Relation vectors together with the ring relations in every
    /// coordinate (the ambient-ring picture of the module).
    fn ambient_relations(&self) -> Vec<VecPoly> {
        let mut out = self.relations.clone();
        for f in &self.over.relations {
            for j in 0..self.gens {
                let mut v = VecPoly::zero(&self.over.ring, self.gens);
                v.comps[j] = f.clone();
                out.push(v);
            }
        }
        out.retain(|v| !v.is_zero());
        out
    }

    pub fn is_zero(&self) -> Result<bool> {
        if self.gens == 0 {
            return Ok(true);
        }
        let rels = self.ambient_relations();
        if rels.is_empty() {
            return Ok(false);
        }
        let mb = groebner::module_groebner(&rels, ORDER)?;
        for j in 0..self.gens {
            let mut e = VecPoly::zero(&self.over.ring, self.gens);
            e.comps[j] = MultiPoly::one(&self.over.ring);
            if !mb.contains(&e) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dimension over the coefficient field when finite (standard monomial
    /// count of the relation submodule), else `None`.
    pub fn dimension_over_field(&self) -> Result<Option<usize>> {
        if !self.over.ring.coeff.is_field() {
            return Err(Error::NonFieldCoefficients);
        }
        if self.gens == 0 {
            return Ok(Some(0));
        }
        let rels = self.ambient_relations();
        if rels.is_empty() {
            return Ok(if self.over.ring.nvars() == 0 {
                Some(self.gens)
            } else {
                None
            });
        }
        let mb = groebner::module_groebner(&rels, ORDER)?;
        let leads: Vec<(usize, Monomial)> = mb
            .basis
            .iter()
            .map(|b| {
                let (c, m, _) = b.leading(ORDER).unwrap();
                (c, m)
            })
            .collect();
        // finite iff in each component every variable power is bounded by
        // some pure-power lead
        let nv = self.over.ring.nvars();
        let mut count = 0usize;
        for comp in 0..self.gens {
            // bound per variable from pure-power leads in this component
            let mut bound = vec![None; nv];
            for (c, m) in &leads {
                if *c != comp {
                    continue;
                }
                let support: Vec<usize> = (0..nv).filter(|&i| m.0[i] > 0).collect();
                if support.is_empty() {
                    // unit lead: component collapses
                    bound = (0..nv).map(|_| Some(0u32)).collect();
                    break;
                }
                if support.len() == 1 {
                    let i = support[0];
                    let b = m.0[i];
                    bound[i] = Some(bound[i].map_or(b, |x: u32| x.min(b)));
                }
            }
            if bound.iter().any(|b| b.is_none()) && nv > 0 {
                return Ok(None);
            }
            // enumerate standard monomials below all leads of the component
            let bounds: Vec<u32> = bound.into_iter().map(|b| b.unwrap_or(0)).collect();
            let mut stack = vec![Monomial::one(nv)];
            let mut idx = 0usize;
            while idx < stack.len() {
                let m = stack[idx].clone();
                idx += 1;
                let divisible = leads.iter().any(|(c, l)| *c == comp && l.divides(&m));
                if divisible {
                    continue;
                }
                count += 1;
                for i in 0..nv {
                    if m.0[i] + 1 < bounds[i].max(1) + 1 {
                        let mut next = m.clone();
                        next.0[i] += 1;
                        // canonical generation: only bump the last nonzero or later
                        if next.0[i..].iter().skip(1).all(|_| true)
                            && m.0[i + 1..].iter().all(|&e| e == 0)
                        {
                            stack.push(next);
                        }
                    }
                }
            }
        }
        Ok(Some(count))
    }
}

/// Generators of the kernel of a polynomial matrix over the quotient ring:
/// `{x ∈ B^cols : m·x = 0 in B^rows}`.
pub fn quotient_kernel_gens(
    over: &FlatPresentation,
    m: &Matrix<MultiPoly>,
) -> Result<Vec<VecPoly>> {
    let ring = &over.ring;
    if m.cols == 0 {
        return Ok(Vec::new());
    }
    if m.rows == 0 {
        let mut out = Vec::new();
        for j in 0..m.cols {
            let mut v = VecPoly::zero(ring, m.cols);
            v.comps[j] = MultiPoly::one(ring);
            out.push(v);
        }
        return Ok(out);
    }
    let mut gens: Vec<VecPoly> = Vec::new();
    for j in 0..m.cols {
        gens.push(VecPoly::from_comps(m.col(j)));
    }
    let ncols = m.cols;
    for f in &over.relations {
        for i in 0..m.rows {
            let mut v = VecPoly::zero(ring, m.rows);
            v.comps[i] = f.clone();
            gens.push(v);
        }
    }
    let mb = groebner::module_groebner(&gens, ORDER)?;
    let mut out = Vec::new();
    for s in mb.syzygies() {
        let mut proj = VecPoly::from_comps(s.comps[..ncols].to_vec());
        for c in proj.comps.iter_mut() {
            *c = over.reduce(c)?;
        }
        if !proj.is_zero() && !out.contains(&proj) {
            out.push(proj);
        }
    }
    Ok(out)
}

/// Homology of a polynomial complex at a degree, as a presented module over
/// the quotient ring (field coefficients).
pub fn poly_homology(cx: &PolyComplex, degree: i64) -> Result<PresentedPolyModule> {
    let over = cx.over.clone();
    let rank = cx.rank_at(degree);
    if rank == 0 {
        return Ok(PresentedPolyModule {
            over,
            gens: 0,
            relations: Vec::new(),
        });
    }
    let out_map = cx.boundary_from(degree);
    let in_map = cx.boundary_from(degree + 1);
    // cycle generators
    let cycles: Vec<VecPoly> = if out_map.rows == 0 {
        (0..rank)
            .map(|j| {
                let mut v = VecPoly::zero(&over.ring, rank);
                v.comps[j] = MultiPoly::one(&over.ring);
                v
            })
            .collect()
    } else {
        quotient_kernel_gens(&over, &out_map)?
    };
    if cycles.is_empty() {
        return Ok(PresentedPolyModule {
            over,
            gens: 0,
            relations: Vec::new(),
        });
    }
    // relations: combinations of cycles landing in boundaries + ideal
    let t = cycles.len();
    let mut gens: Vec<VecPoly> = cycles.clone();
    for j in 0..in_map.cols {
        gens.push(VecPoly::from_comps(in_map.col(j)));
    }
    for f in &over.relations {
        for i in 0..rank {
            let mut v = VecPoly::zero(&over.ring, rank);
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
        over,
        gens: t,
        relations,
    })
}

/// Is H_degree of the complex zero over the quotient ring? (Exact, via
/// membership of every cycle generator in the boundary submodule.)
pub fn poly_homology_is_zero(cx: &PolyComplex, degree: i64) -> Result<bool> {
    poly_homology(cx, degree)?.is_zero()
}

/// Unit-entry cancellation: repeatedly remove isomorphic free summands
/// (entries that are nonzero constants) from the boundary matrices. This
/// preserves all homology.
pub fn minimize(cx: &PolyComplex) -> Result<PolyComplex> {
    let mut ranks = cx.ranks.clone();
    let mut bnd = cx.boundaries.clone();
    let coeff = cx.over.ring.coeff.clone();
    loop {
        let mut hit = None;
        'scan: for k in 1..bnd.len() {
            for r in 0..bnd[k].rows {
                for c in 0..bnd[k].cols {
                    let e = bnd[k].at(r, c);
                    if !e.is_zero() && e.is_constant() && coeff.inv(&e.constant_term()).is_ok() {
                        hit = Some((k, r, c));
                        break 'scan;
                    }
                }
            }
        }
        let Some((k, r, c)) = hit else { break };
        let u = bnd[k].at(r, c).constant_term();
        let uinv = coeff.inv(&u).expect("unit entry");
        let a = bnd[k].clone();
        // Schur complement on d_k
        let mut new_k = Matrix::filled(a.rows - 1, a.cols - 1, MultiPoly::zero(&cx.over.ring));
        let rows_keep: Vec<usize> = (0..a.rows).filter(|&i| i != r).collect();
        let cols_keep: Vec<usize> = (0..a.cols).filter(|&j| j != c).collect();
        for (ni, &i) in rows_keep.iter().enumerate() {
            for (nj, &j) in cols_keep.iter().enumerate() {
                let corr = a.at(i, c).mul(a.at(r, j)).scale(&coeff.neg(&uinv));
                let v = a.at(i, j).add(&corr);
                new_k.set(ni, nj, cx.over.reduce(&v)?);
            }
        }
        bnd[k] = new_k;
        ranks[k] -= 1;
        ranks[k - 1] -= 1;
        // d_{k+1}: delete row c
        if k + 1 < bnd.len() {
            let b = bnd[k + 1].clone();
            bnd[k + 1] = b.select_rows(&(0..b.rows).filter(|&i| i != c).collect::<Vec<_>>());
        }
        // d_{k-1}: delete column r
        let d = bnd[k - 1].clone();
        bnd[k - 1] = d.select_cols(&(0..d.cols).filter(|&j| j != r).collect::<Vec<_>>());
    }
    PolyComplex::new(cx.over.clone(), cx.min_degree, ranks, bnd)
}

/// Free resolution of a presented module, of the requested length: a
/// complex `F_length → … → F_1 → F_0` of free modules with `H_0 = M` and
/// `H_i = 0` for `1 ≤ i ≤ length−1` (verified).
pub fn free_resolution(m: &ModulePresentation, length: usize) -> Result<PolyComplex> {
    let flat = m.over.flatten()?;
    if !flat.inverted.is_empty() {
        return Err(Error::UnsupportedBase(
            "module resolutions over localizations are not supported".into(),
        ));
    }
    match flat.ring.coeff {
        CoefficientRing::Rationals | CoefficientRing::PrimeField(_) => {}
        CoefficientRing::Integers if flat.ring.nvars() == 0 => {
            return free_resolution_z(m, &flat, length)
        }
        _ => return Err(Error::NonFieldCoefficients),
    }

    let ring = flat.ring.clone();
    let mut ranks = vec![m.generators];
    let mut boundaries = vec![Matrix::filled(0, m.generators, MultiPoly::zero(&ring))];
    // first syzygy: the module relations, reduced into B
    let mut current: Vec<VecPoly> = Vec::new();
    for r in &m.relations {
        let mut v = VecPoly::from_comps(r.iter().map(|p| p.embed(&ring)).collect::<Result<_>>()?);
        for c in v.comps.iter_mut() {
            *c = flat.reduce(c)?;
        }
        if !v.is_zero() && !current.contains(&v) {
            current.push(v);
        }
    }
    for step in 1..=length {
        let prev_rank = ranks[step - 1];
        let k = current.len();
        let mut mat = Matrix::filled(prev_rank, k, MultiPoly::zero(&ring));
        for (j, v) in current.iter().enumerate() {
            for i in 0..prev_rank {
                mat.set(i, j, v.comps[i].clone());
            }
        }
        ranks.push(k);
        boundaries.push(mat.clone());
        if step == length {
            break;
        }
        current = if k == 0 {
            Vec::new()
        } else {
            quotient_kernel_gens(&flat, &mat)?
        };
    }
    let cx = PolyComplex::new(flat.clone(), 0, ranks, boundaries)?;
    let cx = minimize(&cx)?;
    for i in 1..length.max(1) as i64 {
        if i < cx.ranks.len() as i64 - 1 && !poly_homology_is_zero(&cx, i)? {
            return Err(Error::ShapeMismatch(alloc::format!(
                "resolution not exact at degree {i}"
            )));
        }
    }
    Ok(cx)
}

/// Resolution over ℤ (no variables): a two-step resolution through Smith
/// normal form, padded with zeros.
fn free_resolution_z(
    m: &ModulePresentation,
    flat: &FlatPresentation,
    length: usize,
) -> Result<PolyComplex> {
    let ring = flat.ring.clone();
    // additive relation matrix (gens × rels), including ring relations
    let mut cols: Vec<Vec<MultiPoly>> = m.relations.clone();
    for f in &flat.relations {
        for j in 0..m.generators {
            let mut v = vec![MultiPoly::zero(&ring); m.generators];
            v[j] = f.clone();
            cols.push(v);
        }
    }
    let z = Matrix::from_fn(m.generators, cols.len(), |i, j| {
        cols[j][i]
            .constant_term()
            .as_int()
            .expect("integer constant")
            .clone()
    });
    let basis = snf::lattice_basis(&z);
    let mut ranks = vec![m.generators, basis.cols];
    let mut boundaries = vec![
        Matrix::filled(0, m.generators, MultiPoly::zero(&ring)),
        basis.map(|v| MultiPoly::constant(&ring, ring.coeff.from_bigint(v.clone()))),
    ];
    for k in 2..=length {
        ranks.push(0);
        boundaries.push(Matrix::filled(ranks[k - 1], 0, MultiPoly::zero(&ring)));
    }
    PolyComplex::new(flat.clone(), 0, ranks, boundaries)
}

/// Variable actions of a finite module: either every variable of every
/// ring acts by zero (residue at the origin), or actions are looked up by
/// variable name.
#[derive(Clone, Debug)]
pub enum VarActions {
    AllZero,
    ByName(alloc::collections::BTreeMap<alloc::string::String, SMat>),
}

/// Finite-dimensional realization of a presented module: a coefficient
/// basis with the action of each ring variable, plus integer relations for
/// presented ℤ / ℤ/m levels.
#[derive(Clone, Debug)]
pub struct FiniteModuleData {
    pub coeff: CoefficientRing,
    pub dim: usize,
    pub var_actions: VarActions,
    pub add_relations: Option<SMat>,
}

impl FiniteModuleData {
    /// The residue module at the origin: rank one, every variable acting by
    /// zero, over any ring with the same coefficients. Constant terms of
    /// the relations survive as additive relations (so the residue of
    /// ℤ/(c) is ℤ/c); over a field they must vanish for the origin to lie
    /// on the variety.
    pub fn residue_at_origin(flat: &FlatPresentation) -> FiniteModuleData {
        let coeff = flat.ring.coeff.clone();
        let consts: Vec<crate::ring::Scalar> = flat
            .relations
            .iter()
            .map(|r| r.constant_term())
            .filter(|c| !c.is_zero())
            .collect();
        let add_relations = if consts.is_empty() {
            None
        } else {
            assert!(
                !coeff.is_field(),
                "origin does not lie on the variety (a relation has a unit constant term)"
            );
            Some(Matrix::from_fn(1, consts.len(), |_, j| consts[j].clone()))
        };
        FiniteModuleData {
            dim: 1,
            var_actions: VarActions::AllZero,
            add_relations,
            coeff,
        }
    }

    /// Apply a polynomial matrix entrywise through the module action,
    /// producing the block scalar matrix on M^cols → M^rows.
    pub fn apply(&self, m: &Matrix<MultiPoly>) -> SMat {
        let d = self.dim;
        let mut out = SMat::zeros(&self.coeff, m.rows * d, m.cols * d);
        for i in 0..m.rows {
            for j in 0..m.cols {
                let block = self.action_of(m.at(i, j));
                for a in 0..d {
                    for b in 0..d {
                        out.set(i * d + a, j * d + b, block.at(a, b).clone());
                    }
                }
            }
        }
        out
    }

    /// Matrix of multiplication by a polynomial; variables are resolved by
    /// name against the polynomial's own ring.
    pub fn action_of(&self, p: &MultiPoly) -> SMat {
        let d = self.dim;
        let mut out = SMat::zeros(&self.coeff, d, d);
        for (mono, c) in p.terms() {
            let mut term = SMat::identity(&self.coeff, d)
                .scale(&self.coeff, &crate::poly::conv_scalar(&self.coeff, c));
            let mut dead = false;
            for (v, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &self.var_actions {
                    VarActions::AllZero => {
                        dead = true;
                        break;
                    }
                    VarActions::ByName(map) => {
                        let act = map
                            .get(&p.ring.vars[v])
                            .expect("module action for variable");
                        for _ in 0..e {
                            term = act.mul(&self.coeff, &term);
                        }
                    }
                }
            }
            if !dead {
                out = out.add(&self.coeff, &term);
            }
        }
        out
    }

    /// Relation matrix replicated across `rank` block coordinates.
    pub fn relations_block(&self, rank: usize) -> Option<SMat> {
        self.add_relations.as_ref().map(|r| {
            let d = self.dim;
            let mut out = SMat::zeros(&self.coeff, rank * d, rank * r.cols);
            for k in 0..rank {
                for a in 0..d {
                    for b in 0..r.cols {
                        out.set(k * d + a, k * r.cols + b, r.at(a, b).clone());
                    }
                }
            }
            out
        })
    }
}

/// Coefficient-basis realization of a module presentation, when the module
/// is finite over the coefficient ring.
pub fn finite_module_data(m: &ModulePresentation) -> Result<FiniteModuleData> {
    let flat = m.over.flatten()?;
    let coeff = flat.ring.coeff.clone();
    let nv = flat.ring.nvars();
    if nv == 0 {
        // additive presentation over the coefficient ring
        let rels = Matrix::from_fn(m.generators, m.relations.len(), |i, j| {
            m.relations[j][i].constant_term()
        });
        let mut ring_rels = Vec::new();
        for f in &flat.relations {
            for k in 0..m.generators {
                let mut col = vec![coeff.zero(); m.generators];
                col[k] = f.constant_term();
                ring_rels.push(col);
            }
        }
        let extra = Matrix::from_fn(m.generators, ring_rels.len(), |i, j| {
            ring_rels[j][i].clone()
        });
        let all = rels.hstack(&extra);
        return Ok(FiniteModuleData {
            coeff,
            dim: m.generators,
            var_actions: VarActions::ByName(alloc::collections::BTreeMap::new()),
            add_relations: if all.cols == 0 { None } else { Some(all) },
        });
    }
    if !coeff.is_field() {
        return Err(Error::UnsupportedBase(
            "finite module data needs a field or constants".into(),
        ));
    }
    // standard monomial basis of B^gens modulo the relation submodule
    let rels = m.ambient_relation_vectors()?;
    if rels.is_empty() {
        return Err(Error::InfiniteClassGroup);
    }
    let mb = groebner::module_groebner(&rels, ORDER)?;
    let leads: Vec<(usize, Monomial)> = mb
        .basis
        .iter()
        .map(|b| {
            let (c, mono, _) = b.leading(ORDER).unwrap();
            (c, mono)
        })
        .collect();
    // enumerate standard monomials per component by breadth-first search
    let mut basis: Vec<(usize, Monomial)> = Vec::new();
    for comp in 0..m.generators {
        let mut frontier = vec![Monomial::one(nv)];
        let mut seen: Vec<Monomial> = Vec::new();
        while let Some(mono) = frontier.pop() {
            if seen.contains(&mono) {
                continue;
            }
            if leads.iter().any(|(c, l)| *c == comp && l.divides(&mono)) {
                continue;
            }
            seen.push(mono.clone());
            if seen.len() > 4096 {
                return Err(Error::InfiniteClassGroup);
            }
            for v in 0..nv {
                let mut next = mono.clone();
                next.0[v] += 1;
                frontier.push(next);
            }
        }
        seen.sort();
        for s in seen {
            basis.push((comp, s));
        }
    }
    let dim = basis.len();
    let express = |vp: &VecPoly| -> Result<Vec<crate::ring::Scalar>> {
        let nf = mb.normal_form(vp);
        let mut coords = vec![coeff.zero(); dim];
        for (comp, poly) in nf.comps.iter().enumerate() {
            for (mono, c) in poly.terms() {
                let idx = basis
                    .iter()
                    .position(|(bc, bm)| *bc == comp && bm == mono)
                    .ok_or_else(|| {
                        Error::ShapeMismatch("normal form outside standard basis".into())
                    })?;
                coords[idx] = c.clone();
            }
        }
        Ok(coords)
    };
    let mut var_actions = alloc::collections::BTreeMap::new();
    for v in 0..nv {
        let xv = MultiPoly::var(&flat.ring, v);
        let mut act = SMat::zeros(&coeff, dim, dim);
        for (j, (comp, mono)) in basis.iter().enumerate() {
            let mut vp = VecPoly::zero(&flat.ring, m.generators);
            vp.comps[*comp] =
                MultiPoly::monomial_term(&flat.ring, mono.clone(), coeff.one()).mul(&xv);
            let coords = express(&vp)?;
            for (i, c) in coords.into_iter().enumerate() {
                act.set(i, j, c);
            }
        }
        var_actions.insert(flat.ring.vars[v].clone(), act);
    }
    Ok(FiniteModuleData {
        coeff,
        dim,
        var_actions: VarActions::ByName(var_actions),
        add_relations: None,
    })
}

/// Tensor the polynomial complex with finite module data, producing a
/// numeric chain complex (used for D_i( · ; M) with small M).
pub fn tensor_with_module(cx: &PolyComplex, data: &FiniteModuleData) -> Result<ChainComplex> {
    let ring = data.coeff.clone();
    let ranks: Vec<usize> = cx.ranks.iter().map(|r| r * data.dim).collect();
    let boundaries: Vec<SMat> = cx.boundaries.iter().map(|b| data.apply(b)).collect();
    let mut out = ChainComplex::new(ring, cx.min_degree, ranks, boundaries)?;
    out.level_relations = cx.ranks.iter().map(|&r| data.relations_block(r)).collect();
    Ok(out)
}

/// Hom of the polynomial complex into finite module data: the cochain
/// complex, stored homologically in negative degrees (H^i = H_{-i}).
pub fn hom_into_module(cx: &PolyComplex, data: &FiniteModuleData) -> Result<ChainComplex> {
    let ring = data.coeff.clone();
    let d = data.dim;
    let n = cx.ranks.len();
    // level at homological degree -(min_degree + k) is Hom(C_k, M)
    let mut ranks = vec![0usize; n];
    let mut boundaries = vec![SMat::zeros(&ring, 0, 0); n];
    for k in 0..n {
        ranks[k] = cx.ranks[n - 1 - k] * d;
    }
    for k in 0..n {
        // boundary from level k (= Hom(C_{n-1-k})) to level k-1 (= Hom(C_{n-k}))
        let target = if k == 0 { 0 } else { ranks[k - 1] };
        if k == 0 {
            boundaries[k] = SMat::zeros(&ring, 0, ranks[0]);
            continue;
        }
        // dual of the boundary C_{n-k} -> C_{n-k-1}
        let orig = &cx.boundaries[n - k];
        let mut mat = SMat::zeros(&ring, target, ranks[k]);
        // Hom(C_{n-1-k}, M) -> Hom(C_{n-k}, M): ψ ↦ ψ∘d
        for i in 0..orig.cols {
            for j in 0..orig.rows {
                let block = data.action_of(orig.at(j, i));
                for a in 0..d {
                    for b in 0..d {
                        mat.set(i * d + a, j * d + b, block.at(a, b).clone());
                    }
                }
            }
        }
        boundaries[k] = mat;
    }
    let min_degree = -(cx.min_degree + n as i64 - 1);
    let mut out = ChainComplex::new(ring, min_degree, ranks, boundaries)?;
    out.level_relations = (0..n)
        .map(|k| data.relations_block(cx.ranks[n - 1 - k]))
        .collect();
    Ok(out)
}

/// Tor_i of two presentations over a common base.
pub fn tor(
    b: &FinitePresentation,
    b2: &FinitePresentation,
    base: &FinitePresentation,
    degree: usize,
) -> Result<HomologyReport> {
    let reports = tor_through(b, b2, base, degree)?;
    Ok(reports.into_iter().nth(degree).expect("degree in range"))
}

/// Tor_0 .. Tor_n at once (sharing one resolution).
pub fn tor_through(
    b: &FinitePresentation,
    b2: &FinitePresentation,
    base: &FinitePresentation,
    through: usize,
) -> Result<Vec<HomologyReport>> {
    let fa = base.flatten()?;
    // try to present b as a base-module; else swap (Tor is symmetric)
    match module_over_base(b, &fa)? {
        Some(m) => tor_resolved(&m, b2, base, through),
        None => match module_over_base(b2, &fa)? {
            Some(m) => tor_resolved(&m, b, base, through),
            None => {
                // flat factor shortcut: polynomial extension of the base
                if is_flat_extension(b, &fa)? || is_flat_extension(b2, &fa)? {
                    let mut out = vec![HomologyReport {
                        degree: 0,
                        free_rank: 1,
                        torsion: Vec::new(),
                        dimension: None,
                        presentation: None,
                    }];
                    for i in 1..=through {
                        out.push(HomologyReport::zero(i as i64, fa.ring.coeff.is_field()));
                    }
                    Ok(out)
                } else {
                    Err(Error::UnsupportedBase(
                        "neither factor is module-finite or flat over the base".into(),
                    ))
                }
            }
        },
    }
}

/// Present `b` as a module over the flattened base when it introduces no
/// new variables (a quotient of the base).
fn module_over_base(
    b: &FinitePresentation,
    fa: &FlatPresentation,
) -> Result<Option<ModulePresentation>> {
    let fb = b.flatten()?;
    if fb.ring.coeff != fa.ring.coeff || !fb.inverted.is_empty() {
        return Ok(None);
    }
    if fb.ring.vars != fa.ring.vars {
        return Ok(None);
    }
    // relations of the base must appear among b's (loose check: reduce)
    let extra: Vec<Vec<MultiPoly>> = fb.relations.iter().map(|r| vec![r.clone()]).collect();
    let base_pres = FinitePresentation {
        base: crate::presentation::BaseRef::Coeff(fa.ring.coeff.clone()),
        vars: fa.ring.vars.iter().cloned().collect(),
        relations: fa.relations.clone(),
        localized_at: Vec::new(),
    };
    Ok(Some(ModulePresentation::new(base_pres, 1, extra)?))
}

fn is_flat_extension(b: &FinitePresentation, fa: &FlatPresentation) -> Result<bool> {
    // over a field base everything is flat
    if fa.ring.coeff.is_field() && fa.ring.nvars() == 0 && fa.relations.is_empty() {
        return Ok(true);
    }
    let fb = b.flatten()?;
    Ok(fb.ring.coeff == fa.ring.coeff
        && fb.ring.vars.len() >= fa.ring.vars.len()
        && fb.ring.vars[..fa.ring.vars.len()] == fa.ring.vars[..]
        && fb.relations.len() == fa.relations.len()
        && fb.inverted.is_empty())
}

fn tor_resolved(
    m: &ModulePresentation,
    other: &FinitePresentation,
    base: &FinitePresentation,
    through: usize,
) -> Result<Vec<HomologyReport>> {
    let _ = base;
    let res = free_resolution(m, through + 1)?;
    let fo = other.flatten()?;
    let fo = fo.with_inverses_adjoined()?;
    // push the resolution matrices into the other factor's ring
    let ranks = res.ranks.clone();
    let mut boundaries = Vec::with_capacity(res.boundaries.len());
    for bmat in &res.boundaries {
        let mut nb = Matrix::filled(bmat.rows, bmat.cols, MultiPoly::zero(&fo.ring));
        for i in 0..bmat.rows {
            for j in 0..bmat.cols {
                let moved = bmat.at(i, j).embed(&fo.ring)?;
                nb.set(i, j, fo.reduce(&moved)?);
            }
        }
        boundaries.push(nb);
    }
    let tensored = PolyComplex::new(fo.clone(), 0, ranks, boundaries)?;
    let field = fo.ring.coeff.is_field();
    let mut out = Vec::new();
    for i in 0..=through {
        out.push(report_for_degree(&tensored, i as i64, field)?);
    }
    Ok(out)
}

/// Report a homology group of a polynomial complex: numeric when the data
/// is constant, module-theoretic otherwise.
pub fn report_for_degree(cx: &PolyComplex, degree: i64, field: bool) -> Result<HomologyReport> {
    let constant = cx
        .boundaries
        .iter()
        .all(|b| b.entries().all(|p| p.is_constant()))
        && cx.over.relations.iter().all(|p| p.is_constant());
    if constant && !field {
        // numeric route over Z or Z/m
        let coeff = cx.over.ring.coeff.clone();
        let ranks = cx.ranks.clone();
        let boundaries: Vec<SMat> = cx
            .boundaries
            .iter()
            .map(|b| b.map(|p| p.constant_term()))
            .collect();
        let mut ncx = ChainComplex::new(coeff.clone(), cx.min_degree, ranks, boundaries)?;
        if !cx.over.relations.is_empty() && coeff == CoefficientRing::Integers {
            // ring relations act on every level coordinate
            let rel: Vec<crate::ring::Scalar> = cx
                .over
                .relations
                .iter()
                .map(|r| r.constant_term())
                .collect();
            ncx.level_relations = cx
                .ranks
                .iter()
                .map(|&r| {
                    if r == 0 || rel.is_empty() {
                        None
                    } else {
                        let mut m = SMat::zeros(&coeff, r, r * rel.len());
                        for k in 0..r {
                            for (t, c) in rel.iter().enumerate() {
                                m.set(k, k * rel.len() + t, c.clone());
                            }
                        }
                        Some(m)
                    }
                })
                .collect();
        }
        return Ok(ncx.homology(degree));
    }
    if !field {
        return Err(Error::UnsupportedBase(
            "non-constant complex over a non-field base".into(),
        ));
    }
    let h = poly_homology(cx, degree)?;
    if h.is_zero()? {
        return Ok(HomologyReport::zero(degree, true));
    }
    match h.dimension_over_field()? {
        Some(d) => Ok(HomologyReport::field(degree, d)),
        None => {
            // infinite-dimensional over the coefficient field: genuinely
            // free when relation-free, otherwise a presented module
            if h.relations.is_empty() {
                Ok(HomologyReport {
                    degree,
                    free_rank: h.gens,
                    torsion: Vec::new(),
                    dimension: None,
                    presentation: Some((h.gens, 0)),
                })
            } else {
                Ok(HomologyReport {
                    degree,
                    free_rank: 0,
                    torsion: Vec::new(),
                    dimension: None,
                    presentation: Some((h.gens, h.relations.len())),
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::FinitePresentation;
    use num_bigint::BigInt;

    fn field() -> CoefficientRing {
        CoefficientRing::prime_field(5).unwrap()
    }

    #[test]
    fn resolution_principal_ideal() {
        // M = k[x]/(x) over k[x]: 0 -> k[x] -> k[x] -> M
        let kx = FinitePresentation::polynomial(field(), &["x"]);
        let ring = kx.flatten().unwrap().ring;
        let x = MultiPoly::var(&ring, 0);
        let m = ModulePresentation::new(kx, 1, vec![vec![x]]).unwrap();
        let res = free_resolution(&m, 2).unwrap();
        assert_eq!(&res.ranks[..2], &[1, 1]);
        assert!(res.ranks.get(2).copied().unwrap_or(0) == 0);
    }

    #[test]
    fn resolution_free_module() {
        let kx = FinitePresentation::polynomial(field(), &["x"]);
        let m = ModulePresentation::free(kx, 3);
        let res = free_resolution(&m, 2).unwrap();
        assert_eq!(res.ranks[0], 3);
        assert!(res.ranks[1..].iter().all(|&r| r == 0));
    }

    #[test]
    fn resolution_koszul_point() {
        // M = k[x,y]/(x,y): Koszul ranks 1,2,1
        let kxy = FinitePresentation::polynomial(field(), &["x", "y"]);
        let ring = kxy.flatten().unwrap().ring;
        let x = MultiPoly::var(&ring, 0);
        let y = MultiPoly::var(&ring, 1);
        let m = ModulePresentation::new(kxy, 1, vec![vec![x], vec![y]]).unwrap();
        let res = free_resolution(&m, 3).unwrap();
        assert_eq!(&res.ranks[..3], &[1, 2, 1]);
        assert!(res.ranks.get(3).copied().unwrap_or(0) == 0);
    }

    #[test]
    fn tor_fp_fp_over_z() {
        let z = FinitePresentation::of_coefficients(CoefficientRing::Integers);
        let zr = z.flatten().unwrap().ring;
        let five = MultiPoly::constant(&zr, crate::ring::Scalar::from_int(5));
        let fp = FinitePresentation::quotient(z.clone(), vec![five]).unwrap();
        let reports = tor_through(&fp, &fp, &z, 3).unwrap();
        assert_eq!(reports[0].torsion, vec![BigInt::from(5)]);
        assert_eq!(reports[1].torsion, vec![BigInt::from(5)]);
        assert!(reports[2].is_zero());
        assert!(reports[3].is_zero());
    }

    #[test]
    fn tor_k_k_over_kx() {
        // Tor^{k[x]}(k, k): dims 1,1,0,...
        let kx = FinitePresentation::polynomial(field(), &["x"]);
        let ring = kx.flatten().unwrap().ring;
        let x = MultiPoly::var(&ring, 0);
        let k_pres = FinitePresentation::quotient(kx.clone(), vec![x]).unwrap();
        let reports = tor_through(&k_pres, &k_pres, &kx, 3).unwrap();
        assert_eq!(reports[0].dimension, Some(1));
        assert_eq!(reports[1].dimension, Some(1));
        assert!(reports[2].is_zero());
        assert!(reports[3].is_zero());
    }

    #[test]
    fn tor_flat_factor() {
        // Tor_i^A(A, B) = B at 0, zero above
        let a = FinitePresentation::polynomial(field(), &["x"]);
        let ring = a.flatten().unwrap().ring;
        let x = MultiPoly::var(&ring, 0);
        let b = FinitePresentation::quotient(a.clone(), vec![x.pow(2)]).unwrap();
        let reports = tor_through(&a, &b, &a, 2).unwrap();
        // A as a module over A: free, so Tor_0 = B (dim 2 over k), rest zero
        assert_eq!(reports[0].dimension, Some(2));
        assert!(reports[1].is_zero() && reports[2].is_zero());
    }

    #[test]
    fn tor_symmetry_koszul() {
        // Tor^{k[x,y]}(k[x,y]/(x), k[x,y]/(x,y)) both ways
        let kxy = FinitePresentation::polynomial(field(), &["x", "y"]);
        let ring = kxy.flatten().unwrap().ring;
        let x = MultiPoly::var(&ring, 0);
        let y = MultiPoly::var(&ring, 1);
        let b = FinitePresentation::quotient(kxy.clone(), vec![x.clone()]).unwrap();
        let c = FinitePresentation::quotient(kxy.clone(), vec![x.clone(), y.clone()]).unwrap();
        let r1 = tor_through(&b, &c, &kxy, 2).unwrap();
        let r2 = tor_through(&c, &b, &kxy, 2).unwrap();
        for (a, b) in r1.iter().zip(&r2) {
            assert_eq!(a.dimension, b.dimension);
        }
    }

    #[test]
    fn finite_module_data_point() {
        // k[x,y]/(x^2, xy, y^2) is 3-dimensional: 1, x, y
        let kxy = FinitePresentation::polynomial(field(), &["x", "y"]);
        let ring = kxy.flatten().unwrap().ring;
        let x = MultiPoly::var(&ring, 0);
        let y = MultiPoly::var(&ring, 1);
        let b = FinitePresentation::quotient(kxy, vec![x.pow(2), x.mul(&y), y.pow(2)]).unwrap();
        let m = ModulePresentation::free(b, 1);
        let data = finite_module_data(&m).unwrap();
        assert_eq!(data.dim, 3);
        // x acts nilpotently: x·x = 0
        let VarActions::ByName(map) = &data.var_actions else {
            panic!("named actions expected")
        };
        let ax = &map["x"];
        assert!(ax.mul(&data.coeff, ax).is_zero());
    }
}

/// Residue module at a rational point of the quotient ring: rank one, the
/// variables acting by the point's coordinates. The relations must vanish
/// at the point.
pub fn residue_at_point(
    flat: &FlatPresentation,
    values: &[crate::ring::Scalar],
) -> Result<FiniteModuleData> {
    if values.len() != flat.ring.nvars() {
        return Err(Error::ShapeMismatch("one value per variable".into()));
    }
    for r in &flat.relations {
        if !r.eval(values).is_zero() {
            return Err(Error::ShapeMismatch(
                "relations do not vanish at the point".into(),
            ));
        }
    }
    let coeff = flat.ring.coeff.clone();
    let mut map = alloc::collections::BTreeMap::new();
    for (name, v) in flat.ring.vars.iter().zip(values) {
        let mut m = SMat::zeros(&coeff, 1, 1);
        m.set(0, 0, v.clone());
        map.insert(name.clone(), m);
    }
    Ok(FiniteModuleData {
        coeff,
        dim: 1,
        var_actions: VarActions::ByName(map),
        add_relations: None,
    })
}
