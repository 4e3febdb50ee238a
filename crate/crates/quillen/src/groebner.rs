//! Buchberger engine for ideals and submodules of free modules R^k over a
//! polynomial ring with field coefficients (ℚ or 𝔽_p).
//!
//! Elements of R^k are [`VecPoly`]s; the ideal case is k = 1. Module terms
//! are ordered term-over-position (monomial order first, lower component
//! wins ties). Basis elements track cofactor representations in terms of
//! the input generators, which yields syzygies by the classical two-matrix
//! transformation: with G = F·C and F = G·D,
//!
//!   Syz(F) = C·Syz(G) + columns of (I − C·D),
//!
//! where Syz(G) is generated by the reductions of all S-pairs of the basis.
//!
//! Pair selection is the normal strategy: pairs sorted by total degree of
//! the lcm, then by index; ties are never broken randomly, so bases and
//! syzygies are reproducible.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, MultiPoly, PolyRing};
use crate::ring::Scalar;

/// Element of the free module R^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VecPoly {
    pub comps: Vec<MultiPoly>,
}

impl VecPoly {
    pub fn zero(ring: &Arc<PolyRing>, k: usize) -> Self {
        VecPoly {
            comps: vec![MultiPoly::zero(ring); k],
        }
    }

    pub fn from_comps(comps: Vec<MultiPoly>) -> Self {
        assert!(!comps.is_empty(), "empty vector polynomial");
        VecPoly { comps }
    }

    /// A single polynomial as an element of R^1.
    pub fn scalar(p: MultiPoly) -> Self {
        VecPoly { comps: vec![p] }
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.comps[0].ring
    }

    pub fn add(&self, other: &VecPoly) -> VecPoly {
        VecPoly {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &VecPoly) -> VecPoly {
        VecPoly {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> VecPoly {
        VecPoly {
            comps: self.comps.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> VecPoly {
        VecPoly {
            comps: self.comps.iter().map(|a| a.mul(p)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> VecPoly {
        VecPoly {
            comps: self.comps.iter().map(|a| a.mul_term(m, c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> VecPoly {
        VecPoly {
            comps: self.comps.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Leading module term `(component, monomial, coefficient)`.
    pub fn leading(&self, order: MonomialOrder) -> Option<(usize, Monomial, Scalar)> {
        let mut best: Option<(usize, Monomial, Scalar)> = None;
        for (k, p) in self.comps.iter().enumerate() {
            if let Some((m, c)) = p.leading_term(order) {
                let better = match &best {
                    None => true,
                    Some((bk, bm, _)) => match order.cmp(m, bm) {
                        core::cmp::Ordering::Greater => true,
                        core::cmp::Ordering::Equal => k < *bk,
                        core::cmp::Ordering::Less => false,
                    },
                };
                if better {
                    best = Some((k, m.clone(), c.clone()));
                }
            }
        }
        best
    }
}

fn check_field(ring: &Arc<PolyRing>) -> Result<()> {
    if ring.coeff.is_field() {
        Ok(())
    } else {
        Err(Error::NonFieldCoefficients)
    }
}

fn check_same_shape(gens: &[VecPoly]) -> Result<usize> {
    let k = gens.first().map(|g| g.len()).unwrap_or(1);
    for g in gens {
        if g.len() != k {
            return Err(Error::ShapeMismatch("mixed module ranks".into()));
        }
        if g.ring().as_ref() != gens[0].ring().as_ref() {
            return Err(Error::VariableMismatch("mixed polynomial rings".into()));
        }
    }
    Ok(k)
}

/// Full division: `target = Σ cofactor_i · basis_i + remainder`, remainder
/// having no term divisible by any basis leading term.
pub fn divide(
    target: &VecPoly,
    basis: &[VecPoly],
    order: MonomialOrder,
) -> (VecPoly, Vec<MultiPoly>) {
    let ring = target.ring().clone();
    let coeff = ring.coeff.clone();
    let leads: Vec<Option<(usize, Monomial, Scalar)>> =
        basis.iter().map(|b| b.leading(order)).collect();
    let mut rem = VecPoly::zero(&ring, target.len());
    let mut cof = vec![MultiPoly::zero(&ring); basis.len()];
    let mut cur = target.clone();
    while let Some((tc, tm, tcoef)) = cur.leading(order) {
        let mut hit = None;
        for (i, l) in leads.iter().enumerate() {
            if let Some((bc, bm, bcoef)) = l {
                if *bc == tc && bm.divides(&tm) {
                    hit = Some((i, bm.div_into(&tm).unwrap(), bcoef.clone()));
                    break;
                }
            }
        }
        match hit {
            Some((i, qm, bcoef)) => {
                let qc = coeff.div(&tcoef, &bcoef).expect("field division");
                cof[i] = cof[i].add(&MultiPoly::monomial_term(&ring, qm.clone(), qc.clone()));
                cur = cur.sub(&basis[i].mul_term(&qm, &qc));
            }
            None => {
                // move the leading term to the remainder
                let t = MultiPoly::monomial_term(&ring, tm.clone(), tcoef.clone());
                rem.comps[tc] = rem.comps[tc].add(&t);
                let mut drop = VecPoly::zero(&ring, cur.len());
                drop.comps[tc] = t;
                cur = cur.sub(&drop);
            }
        }
    }
    (rem, cof)
}

/// Groebner basis of a submodule of R^k, with the transformation matrices
/// to and from the input generators.
pub struct ModuleBasis {
    pub order: MonomialOrder,
    pub basis: Vec<VecPoly>,
    /// `basis[i] = Σ_j to_basis[i][j] · gens[j]`
    pub to_basis: Vec<Vec<MultiPoly>>,
    /// `gens[j] = Σ_i from_basis[j][i] · basis[i]`
    pub from_basis: Vec<Vec<MultiPoly>>,
    gens: Vec<VecPoly>,
}

/// Buchberger with normal-strategy pair selection, followed by
/// interreduction to the unique reduced basis (monic leads, reduced tails).
pub fn module_groebner(gens: &[VecPoly], order: MonomialOrder) -> Result<ModuleBasis> {
    let k = check_same_shape(gens)?;
    let ring = gens
        .first()
        .map(|g| g.ring().clone())
        .ok_or_else(|| Error::ShapeMismatch("no generators".into()))?;
    check_field(&ring)?;
    let coeff = ring.coeff.clone();

    let mut basis: Vec<VecPoly> = Vec::new();
    let mut reps: Vec<Vec<MultiPoly>> = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut rep = vec![MultiPoly::zero(&ring); gens.len()];
        rep[j] = MultiPoly::one(&ring);
        basis.push(g.clone());
        reps.push(rep);
    }

    // pending S-pairs, kept sorted by (lcm degree, i, j)
    let mut pairs: Vec<(u64, usize, usize)> = Vec::new();
    let add_pairs = |pairs: &mut Vec<(u64, usize, usize)>, basis: &[VecPoly], new: usize| {
        for i in 0..new {
            let (li, lj) = (
                basis[i].leading(order).unwrap(),
                basis[new].leading(order).unwrap(),
            );
            if li.0 != lj.0 {
                continue;
            }
            let lcm = li.1.lcm(&lj.1);
            pairs.push((lcm.degree(), i, new));
        }
        pairs.sort();
    };
    for n in 0..basis.len() {
        add_pairs(&mut pairs, &basis, n);
    }

    while !pairs.is_empty() {
        let (_, i, j) = pairs.remove(0);
        let (ci, mi, coefi) = basis[i].leading(order).unwrap();
        let (cj, mj, coefj) = basis[j].leading(order).unwrap();
        if ci != cj {
            continue;
        }
        let lcm = mi.lcm(&mj);
        // product criterion (ideal case only: coprime leads in the same component)
        if k == 1 && lcm == mi.mul(&mj) {
            continue;
        }
        let ui = mi.div_into(&lcm).unwrap();
        let uj = mj.div_into(&lcm).unwrap();
        let inv_i = coeff.inv(&coefi).expect("field");
        let inv_j = coeff.inv(&coefj).expect("field");
        let s = basis[i]
            .mul_term(&ui, &inv_i)
            .sub(&basis[j].mul_term(&uj, &inv_j));
        let (rem, cof) = divide(&s, &basis, order);
        if rem.is_zero() {
            continue;
        }
        // rep of the remainder in terms of the input generators
        let mut rep = vec![MultiPoly::zero(&ring); gens.len()];
        let ti = MultiPoly::monomial_term(&ring, ui, inv_i);
        let tj = MultiPoly::monomial_term(&ring, uj, inv_j);
        for (g, r) in rep.iter_mut().enumerate() {
            *r = reps[i][g].mul(&ti).sub(&reps[j][g].mul(&tj));
            for (b, c) in cof.iter().enumerate() {
                *r = r.sub(&c.mul(&reps[b][g]));
            }
        }
        basis.push(rem);
        reps.push(rep);
        add_pairs(&mut pairs, &basis, basis.len() - 1);
    }

    interreduce(&mut basis, &mut reps, order);

    // division matrix: gens in terms of the basis
    let mut from_basis = Vec::with_capacity(gens.len());
    for g in gens {
        let (rem, cof) = divide(g, &basis, order);
        assert!(rem.is_zero(), "generator must reduce to zero");
        from_basis.push(cof);
    }

    Ok(ModuleBasis {
        order,
        basis,
        to_basis: reps,
        from_basis,
        gens: gens.to_vec(),
    })
}

/// Interreduce to the reduced basis: drop elements whose lead is divisible
/// by another lead, reduce all tails, normalize leads to 1. The cofactor
/// representations are updated alongside. Final order: ascending leads.
fn interreduce(basis: &mut Vec<VecPoly>, reps: &mut Vec<Vec<MultiPoly>>, order: MonomialOrder) {
    let coeff = basis[0].ring().coeff.clone();
    // drop redundant leads (scan repeatedly; deterministic order)
    loop {
        let leads: Vec<(usize, Monomial, Scalar)> =
            basis.iter().map(|b| b.leading(order).unwrap()).collect();
        let mut victim = None;
        'outer: for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                if leads[j].0 == leads[i].0 && leads[j].1.divides(&leads[i].1) {
                    // prefer dropping the later element on mutual division
                    if leads[i].1 == leads[j].1 && i < j {
                        continue;
                    }
                    victim = Some(i);
                    break 'outer;
                }
            }
        }
        match victim {
            Some(i) => {
                basis.remove(i);
                reps.remove(i);
            }
            None => break,
        }
    }
    // reduce tails
    for i in 0..basis.len() {
        let others: Vec<VecPoly> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, b)| b.clone())
            .collect();
        let other_reps: Vec<Vec<MultiPoly>> = reps
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, r)| r.clone())
            .collect();
        let (rem, cof) = divide(&basis[i], &others, order);
        basis[i] = rem;
        for g in 0..reps[i].len() {
            let mut r = reps[i][g].clone();
            for (b, c) in cof.iter().enumerate() {
                r = r.sub(&c.mul(&other_reps[b][g]));
            }
            reps[i][g] = r;
        }
    }
    // monic normalization
    for i in 0..basis.len() {
        let (_, _, c) = basis[i].leading(order).unwrap();
        let inv = coeff.inv(&c).expect("field");
        basis[i] = basis[i].scale(&inv);
        for r in reps[i].iter_mut() {
            *r = r.scale(&inv);
        }
    }
    // deterministic final order: ascending leading terms
    let mut idx: Vec<usize> = (0..basis.len()).collect();
    idx.sort_by(|&a, &b| {
        let (ca, ma, _) = basis[a].leading(order).unwrap();
        let (cb, mb, _) = basis[b].leading(order).unwrap();
        order.cmp(&ma, &mb).then(cb.cmp(&ca))
    });
    let nb: Vec<VecPoly> = idx.iter().map(|&i| basis[i].clone()).collect();
    let nr: Vec<Vec<MultiPoly>> = idx.iter().map(|&i| reps[i].clone()).collect();
    *basis = nb;
    *reps = nr;
}

impl ModuleBasis {
    /// Unique remainder of `v` modulo the basis.
    pub fn normal_form(&self, v: &VecPoly) -> VecPoly {
        divide(v, &self.basis, self.order).0
    }

    pub fn contains(&self, v: &VecPoly) -> bool {
        self.normal_form(v).is_zero()
    }

    /// Generators of the syzygy module of the *input* generators, as
    /// elements of R^m (m = number of generators). Zero input generators
    /// contribute unit syzygies.
    pub fn syzygies(&self) -> Vec<VecPoly> {
        let ring = match self.gens.first() {
            Some(g) => g.ring().clone(),
            None => return Vec::new(),
        };
        let m = self.gens.len();
        let coeff = ring.coeff.clone();
        let mut out: Vec<VecPoly> = Vec::new();
        // unit syzygies for zero generators
        for (j, g) in self.gens.iter().enumerate() {
            if g.is_zero() {
                let mut s = VecPoly::zero(&ring, m);
                s.comps[j] = MultiPoly::one(&ring);
                out.push(s);
            }
        }
        // Schreyer syzygies of the basis, mapped through to_basis
        let n = self.basis.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let (ci, mi, coefi) = self.basis[i].leading(self.order).unwrap();
                let (cj, mj, coefj) = self.basis[j].leading(self.order).unwrap();
                if ci != cj {
                    continue;
                }
                let lcm = mi.lcm(&mj);
                let ui = mi.div_into(&lcm).unwrap();
                let uj = mj.div_into(&lcm).unwrap();
                let inv_i = coeff.inv(&coefi).expect("field");
                let inv_j = coeff.inv(&coefj).expect("field");
                let s = self.basis[i]
                    .mul_term(&ui, &inv_i)
                    .sub(&self.basis[j].mul_term(&uj, &inv_j));
                let (rem, cof) = divide(&s, &self.basis, self.order);
                assert!(rem.is_zero(), "S-pair of a Groebner basis reduces to zero");
                // syzygy of the basis: u_i e_i - u_j e_j - cof
                let ti = MultiPoly::monomial_term(&ring, ui, inv_i);
                let tj = MultiPoly::monomial_term(&ring, uj, inv_j);
                let mut syz_g = vec![MultiPoly::zero(&ring); n];
                syz_g[i] = syz_g[i].add(&ti);
                syz_g[j] = syz_g[j].sub(&tj);
                for (b, c) in cof.iter().enumerate() {
                    syz_g[b] = syz_g[b].sub(c);
                }
                // transform to input coordinates: C · syz_g
                let mut s_f = VecPoly::zero(&ring, m);
                for g in 0..m {
                    for (b, sg) in syz_g.iter().enumerate() {
                        s_f.comps[g] = s_f.comps[g].add(&sg.mul(&self.to_basis[b][g]));
                    }
                }
                if !s_f.is_zero() {
                    out.push(s_f);
                }
            }
        }
        // columns of I - C·D
        for j in 0..m {
            let mut col = VecPoly::zero(&ring, m);
            col.comps[j] = MultiPoly::one(&ring);
            for (b, d) in self.from_basis[j].iter().enumerate() {
                for g in 0..m {
                    col.comps[g] = col.comps[g].sub(&d.mul(&self.to_basis[b][g]));
                }
            }
            if !col.is_zero() {
                out.push(col);
            }
        }
        dedupe(out)
    }
}

fn dedupe(mut v: Vec<VecPoly>) -> Vec<VecPoly> {
    let mut out: Vec<VecPoly> = Vec::new();
    for x in v.drain(..) {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// Reduced Groebner basis of an ideal (module rank 1).
pub fn groebner_basis(gens: &[MultiPoly], order: MonomialOrder) -> Result<Vec<MultiPoly>> {
    let vgens: Vec<VecPoly> = gens.iter().map(|g| VecPoly::scalar(g.clone())).collect();
    let mb = module_groebner(&vgens, order)?;
    Ok(mb
        .basis
        .into_iter()
        .map(|v| v.comps.into_iter().next().unwrap())
        .collect())
}

/// Unique remainder modulo a Groebner basis (rank 1).
pub fn normal_form(p: &MultiPoly, basis: &[MultiPoly], order: MonomialOrder) -> Result<MultiPoly> {
    for b in basis {
        if b.ring.as_ref() != p.ring.as_ref() {
            return Err(Error::VariableMismatch("normal form ring mismatch".into()));
        }
    }
    let vb: Vec<VecPoly> = basis.iter().map(|b| VecPoly::scalar(b.clone())).collect();
    let (rem, _) = divide(&VecPoly::scalar(p.clone()), &vb, order);
    Ok(rem.comps.into_iter().next().unwrap())
}

/// Syzygy generators of a list of polynomials, as columns of a matrix
/// (rows = generators).
pub fn syzygies(gens: &[MultiPoly], order: MonomialOrder) -> Result<Vec<VecPoly>> {
    let vgens: Vec<VecPoly> = gens.iter().map(|g| VecPoly::scalar(g.clone())).collect();
    let mb = module_groebner(&vgens, order)?;
    Ok(mb.syzygies())
}

/// Koszul (trivial) syzygies f_i e_j − f_j e_i, i < j.
pub fn koszul_syzygies(gens: &[MultiPoly]) -> Vec<VecPoly> {
    let m = gens.len();
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    let ring = gens[0].ring.clone();
    for i in 0..m {
        for j in (i + 1)..m {
            let mut s = VecPoly::zero(&ring, m);
            s.comps[i] = gens[j].clone();
            s.comps[j] = gens[i].neg();
            if !s.is_zero() {
                out.push(s);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::CoefficientRing;

    fn ring(coeff: CoefficientRing, vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(
            coeff,
            vars.iter()
                .map(|v| alloc::string::String::from(*v))
                .collect(),
        )
    }

    fn f5_xy() -> Arc<PolyRing> {
        ring(CoefficientRing::prime_field(5).unwrap(), &["x", "y"])
    }

    #[test]
    fn single_generator_already_reduced() {
        let r = f5_xy();
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let f = x.pow(2).sub(&y.pow(3));
        let gb = groebner_basis(&[f.clone()], MonomialOrder::GrevLex).unwrap();
        // monic normalization of x^2 - y^3 under grevlex: lead is y^3
        assert_eq!(gb.len(), 1);
        let nf = normal_form(&f, &gb, MonomialOrder::GrevLex).unwrap();
        assert!(nf.is_zero());
    }

    #[test]
    fn unit_ideal() {
        let r = f5_xy();
        let x = MultiPoly::var(&r, 0);
        let one = MultiPoly::one(&r);
        let gb = groebner_basis(&[x.clone(), x.sub(&one)], MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb, vec![MultiPoly::one(&r)]);
    }

    #[test]
    fn monomial_pair_lex() {
        let r = f5_xy();
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let gens = [x.pow(2), x.mul(&y)];
        let gb = groebner_basis(&gens, MonomialOrder::Lex).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(gb.contains(&gens[0]) && gb.contains(&gens[1]));
    }

    #[test]
    fn normal_form_division() {
        let r = f5_xy();
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let f = x.pow(2).sub(&y.pow(3));
        let gb = groebner_basis(&[f], MonomialOrder::Lex).unwrap();
        // x^3 mod (x^2 - y^3) -> x y^3 under lex (lead x^2)
        let nf = normal_form(&x.pow(3), &gb, MonomialOrder::Lex).unwrap();
        assert_eq!(nf, x.mul(&y.pow(3)));
        // zero and irreducible inputs
        let z = MultiPoly::zero(&r);
        assert!(normal_form(&z, &gb, MonomialOrder::Lex).unwrap().is_zero());
        let gens = [x.pow(2), x.mul(&y)];
        let gb2 = groebner_basis(&gens, MonomialOrder::Lex).unwrap();
        assert_eq!(normal_form(&y, &gb2, MonomialOrder::Lex).unwrap(), y);
    }

    #[test]
    fn syzygy_regular_pair() {
        let r = f5_xy();
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let gens = [x.clone(), y.clone()];
        let syz = syzygies(&gens, MonomialOrder::GrevLex).unwrap();
        // a single Koszul syzygy generates; check gens·s = 0 and membership of (y, -x)
        for s in &syz {
            let mut acc = MultiPoly::zero(&r);
            for (g, c) in gens.iter().zip(&s.comps) {
                acc = acc.add(&g.mul(c));
            }
            assert!(acc.is_zero());
        }
        let mb = module_groebner(&syz, MonomialOrder::GrevLex).unwrap();
        let target = VecPoly::from_comps(vec![y.clone(), x.neg()]);
        assert!(mb.contains(&target));
    }

    #[test]
    fn syzygy_principal_is_empty() {
        let r = ring(CoefficientRing::Rationals, &["x"]);
        let x = MultiPoly::var(&r, 0);
        let syz = syzygies(&[x.pow(2)], MonomialOrder::GrevLex).unwrap();
        assert!(syz.iter().all(|s| s.is_zero()) || syz.is_empty());
    }

    #[test]
    fn syzygy_x2_xy() {
        let r = f5_xy();
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let gens = [x.pow(2), x.mul(&y)];
        let syz = syzygies(&gens, MonomialOrder::GrevLex).unwrap();
        for s in &syz {
            let mut acc = MultiPoly::zero(&r);
            for (g, c) in gens.iter().zip(&s.comps) {
                acc = acc.add(&g.mul(c));
            }
            assert!(acc.is_zero(), "not a syzygy: {:?}", s);
        }
        // (y, -x) generates the syzygy module
        let mb = module_groebner(&syz, MonomialOrder::GrevLex).unwrap();
        assert!(mb.contains(&VecPoly::from_comps(vec![y.clone(), x.neg()])));
        // and the Koszul syzygy (xy, -x^2) does NOT generate (y, -x)
        let kos = koszul_syzygies(&gens);
        let mbk = module_groebner(&kos, MonomialOrder::GrevLex).unwrap();
        assert!(!mbk.contains(&VecPoly::from_comps(vec![y.clone(), x.neg()])));
    }

    #[test]
    fn non_field_rejected() {
        let r = ring(CoefficientRing::Integers, &["x"]);
        let x = MultiPoly::var(&r, 0);
        assert_eq!(
            groebner_basis(&[x], MonomialOrder::GrevLex).unwrap_err(),
            Error::NonFieldCoefficients
        );
    }

    #[test]
    fn ideal_membership_products() {
        // normal_form(f·b) = 0 for basis elements b
        let r = f5_xy();
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let gens = [x.pow(2).sub(&y), x.mul(&y).add(&y.pow(2))];
        let gb = groebner_basis(&gens, MonomialOrder::GrevLex).unwrap();
        for b in &gb {
            let p = b.mul(&x.add(&y.pow(2)));
            assert!(normal_form(&p, &gb, MonomialOrder::GrevLex)
                .unwrap()
                .is_zero());
        }
    }
}
