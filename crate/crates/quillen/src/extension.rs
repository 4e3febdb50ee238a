//! Square-zero extensions: classification by first Andre-Quillen
//! cohomology, realization of classes as algebra presentations, extraction
//! of the class of a given extension, and the affine deformation /
//! obstruction calculus.
//!
//! A class in D¹(B/A; M) is stored as its value on the relation cells of
//! the cotangent truncation: a tuple in M^{r₁} (r₁ = number of fresh
//! relations), canonically reduced modulo coboundaries. The zero class
//! realizes the split extension B ⊕ M; a nonzero class twists each
//! relation f_c by its M-value.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::cotangent::{aq_cohomology, CotangentTruncation, FastPath};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
#[cfg(test)]
use crate::matrix::SMat;
use crate::poly::MultiPoly;
use crate::presentation::{BaseRef, FinitePresentation};
use crate::report::HomologyReport;
use crate::resolution::{FiniteModuleData, VarActions};
use crate::ring::{CoefficientRing, Scalar};
use crate::snf::{self, ZMat};

/// Enumeration cap for extension classes.
const CLASS_CAP: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionClass {
    /// Canonical cocycle: M-coordinates per relation cell, flattened
    /// (relation-major), each coordinate an integer scalar.
    pub cocycle: Vec<Scalar>,
}

impl ExtensionClass {
    pub fn is_split(&self) -> bool {
        self.cocycle.iter().all(|c| c.is_zero())
    }
}

/// The classification context: the cotangent truncation of B over A plus
/// finite module data for M.
pub struct ExtensionProblem {
    pub target: FinitePresentation,
    pub base: FinitePresentation,
    pub module: FiniteModuleData,
    pub ct: CotangentTruncation,
    /// names for the adjoined module generators in realizations
    pub eps_names: Vec<String>,
}

impl ExtensionProblem {
    pub fn new(
        target: &FinitePresentation,
        base: &FinitePresentation,
        module: FiniteModuleData,
    ) -> Result<Self> {
        let ct = crate::cotangent::cotangent(target, base, 2)?;
        let eps_names = (0..module.dim).map(|i| alloc::format!("eps{i}")).collect();
        Ok(ExtensionProblem {
            target: target.clone(),
            base: base.clone(),
            module,
            ct,
            eps_names,
        })
    }

    /// D¹(B/A; M) as a structural report.
    pub fn d1_report(&self) -> Result<HomologyReport> {
        aq_cohomology(&self.ct, &self.module, 1)
    }

    fn cochain_dims(&self) -> (usize, usize, usize) {
        let d = self.module.dim;
        (
            self.ct.complex.ranks[0] * d,
            self.ct.complex.ranks[1] * d,
            self.ct.complex.ranks[2] * d,
        )
    }

    /// δ-matrix Hom(L_d, M) → Hom(L_{d+1}, M) in integer form.
    fn delta(&self, d: usize) -> ZMat {
        let dim = self.module.dim;
        let bnd = self.ct.complex.boundary_from(d as i64 + 1);
        let mut out = snf::zmat_zeros(bnd.cols * dim, bnd.rows * dim);
        for i in 0..bnd.cols {
            for j in 0..bnd.rows {
                let block = self.module.action_of(bnd.at(j, i));
                for x in 0..dim {
                    for y in 0..dim {
                        out.set(
                            i * dim + x,
                            j * dim + y,
                            block.at(x, y).as_int().expect("integral").clone(),
                        );
                    }
                }
            }
        }
        out
    }

    /// Relation lattice of the cochain group M^{r} (modulus + module
    /// relations), as columns in Z^{r·dim}.
    fn cochain_relations(&self, rank: usize) -> ZMat {
        let dim = self.module.dim;
        let n = rank * dim;
        let mut rel = match self.module.coeff.modulus() {
            Some(m) => Matrix::from_fn(n, n, |i, j| {
                if i == j {
                    BigInt::from(m)
                } else {
                    num_traits::Zero::zero()
                }
            }),
            None => snf::zmat_zeros(n, 0),
        };
        if let Some(extra) = self.module.relations_block(rank) {
            rel = rel.hstack(&extra.map(|s| s.as_int().expect("integral").clone()));
        }
        rel
    }

    /// Enumerate all classes of D¹(B/A; M): cocycles modulo coboundaries,
    /// first representative in enumeration order is canonical, the split
    /// class comes first.
    pub fn classify(&self) -> Result<Vec<ExtensionClass>> {
        let (_, c1, c2) = self.cochain_dims();
        let delta1 = self.delta(1);
        let rel_c2 = self.cochain_relations(self.ct.complex.ranks[2]);
        // cocycle lattice in Z^{c1}
        let z1 = if c2 == 0 {
            snf::zmat_identity(c1)
        } else if rel_c2.cols == 0 {
            snf::kernel_basis(&delta1)
        } else {
            snf::preimage_lattice(&delta1, &rel_c2)
        };
        // coboundary + relation lattice
        let delta0 = self.delta(0);
        let rel_c1 = self.cochain_relations(self.ct.complex.ranks[1]);
        let bnd = delta0.hstack(&rel_c1);
        // enumerate Z¹ modulo its relation lattice: finite quotient needed
        let rel_in_z = match snf::solve_z(&z1, &rel_c1) {
            Some(c) => c,
            None => {
                return Err(Error::ShapeMismatch(
                    "cochain relations must lie in the cocycle lattice".into(),
                ))
            }
        };
        let (free, factors_all) = snf::quotient_invariants(z1.cols, &rel_in_z);
        if free > 0 {
            return Err(Error::InfiniteClassGroup);
        }
        // adapted generators of Z¹/relations
        let s = snf::smith(&rel_in_z);
        let adapted = snf::zmat_mul(&z1, &s.p_inv);
        let diag = s.diagonal();
        let mut gens: Vec<(ZMat, u64)> = Vec::new();
        for (i, d) in diag.iter().enumerate() {
            if num_traits::One::is_one(d) {
                continue;
            }
            let order = u64::try_from(d).map_err(|_| Error::InfiniteClassGroup)?;
            gens.push((adapted.select_cols(&[i]), order));
        }
        let _ = factors_all;
        let total: u64 = gens.iter().map(|(_, o)| o).product();
        if total as usize > CLASS_CAP {
            return Err(Error::ScaleCap(alloc::format!(
                "{total} cocycles exceed the enumeration cap"
            )));
        }
        // enumerate all cocycles (tuples over the adapted generators)
        let mut reps: Vec<ZMat> = Vec::new();
        let mut counters = vec![0u64; gens.len()];
        loop {
            let mut v = snf::zmat_zeros(c1, 1);
            for (k, &c) in counters.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let scaled = gens[k].0.map(|x| x * BigInt::from(c));
                v = Matrix::from_fn(c1, 1, |i, _| v.at(i, 0) + scaled.at(i, 0));
            }
            reps.push(v);
            // increment
            let mut k = 0;
            loop {
                if k == counters.len() {
                    break;
                }
                counters[k] += 1;
                if counters[k] < gens[k].1 {
                    break;
                }
                counters[k] = 0;
                k += 1;
            }
            if k == counters.len() {
                break;
            }
        }
        // partition modulo coboundaries (+cochain relations)
        let mut classes: Vec<ZMat> = Vec::new();
        for v in reps {
            let mut found = false;
            for c in &classes {
                let diff = Matrix::from_fn(c1, 1, |i, _| v.at(i, 0) - c.at(i, 0));
                if bnd.cols == 0 {
                    if diff.entries().all(num_traits::Zero::is_zero) {
                        found = true;
                        break;
                    }
                } else if snf::solve_z(&bnd, &diff).is_some() {
                    found = true;
                    break;
                }
            }
            if !found {
                classes.push(v);
            }
        }
        // canonical order: split class first, then enumeration order
        classes.sort_by_key(|c| {
            (
                !c.entries().all(num_traits::Zero::is_zero),
                c.map(|x| x.clone()).col(0),
            )
        });
        Ok(classes
            .into_iter()
            .map(|c| ExtensionClass {
                cocycle: (0..c1)
                    .map(|i| self.module.coeff.from_bigint(c.at(i, 0).clone()))
                    .collect(),
            })
            .collect())
    }

    /// Realize a class as a square-zero A-algebra extension of B by M.
    pub fn realize(&self, class: &ExtensionClass) -> Result<FinitePresentation> {
        let fb = self.target.flatten()?;
        if !fb.inverted.is_empty() {
            return Err(Error::UnsupportedBase(
                "extensions of localized targets are not realized".into(),
            ));
        }
        let fbase = self.base.flatten()?;
        let nb_vars = fbase.ring.nvars();
        let nb_rels = fbase.relations.len();
        let dim = self.module.dim;
        // variables: fresh B-variables then the module generators
        let fresh: Vec<String> = fb.ring.vars[nb_vars..].to_vec();
        let mut vars: Vec<&str> = fresh.iter().map(|s| s.as_str()).collect();
        for e in &self.eps_names {
            vars.push(e);
        }
        let layer = FinitePresentation {
            base: BaseRef::Pres(alloc::boxed::Box::new(self.base.clone())),
            vars: vars.iter().map(|v| String::from(*v)).collect(),
            relations: Vec::new(),
            localized_at: Vec::new(),
        };
        let flat = layer.flatten()?;
        let ring = &flat.ring;
        let eps_at = |k: usize| MultiPoly::var(ring, ring.nvars() - dim + k);
        let mut relations: Vec<MultiPoly> = Vec::new();
        // twisted relations: f_c − Σ φ_{c,k} eps_k
        for (c, f) in fb.relations.iter().skip(nb_rels).enumerate() {
            let mut rel = f.embed(ring)?;
            for k in 0..dim {
                let coef = &class.cocycle[c * dim + k];
                if !coef.is_zero() {
                    rel = rel.sub(&eps_at(k).scale(coef));
                }
            }
            relations.push(rel);
        }
        // M² = 0
        for i in 0..dim {
            for j in i..dim {
                relations.push(eps_at(i).mul(&eps_at(j)));
            }
        }
        // module structure: v·eps_k = Σ action coords
        match &self.module.var_actions {
            VarActions::AllZero => {
                for vname in fb.ring.vars.iter() {
                    if let Some(vi) = ring.var_index(vname) {
                        for k in 0..dim {
                            relations.push(MultiPoly::var(ring, vi).mul(&eps_at(k)));
                        }
                    }
                }
            }
            VarActions::ByName(map) => {
                for (vname, act) in map.iter() {
                    let Some(vi) = ring.var_index(vname) else {
                        continue;
                    };
                    for k in 0..dim {
                        let mut rel = MultiPoly::var(ring, vi).mul(&eps_at(k));
                        for l in 0..dim {
                            let c = act.at(l, k);
                            if !c.is_zero() {
                                rel = rel.sub(&eps_at(l).scale(c));
                            }
                        }
                        relations.push(rel);
                    }
                }
            }
        }
        // additive relations of M
        if let Some(add) = &self.module.add_relations {
            for j in 0..add.cols {
                let mut rel = MultiPoly::zero(ring);
                for k in 0..dim {
                    let c = add.at(k, j);
                    if !c.is_zero() {
                        rel = rel.add(&eps_at(k).scale(c));
                    }
                }
                if !rel.is_zero() {
                    relations.push(rel);
                }
            }
        }
        relations.retain(|r| !r.is_zero());
        FinitePresentation::quotient(layer, relations)
    }

    /// Extract the class of an extension realized in the shape produced by
    /// [`ExtensionProblem::realize`]: evaluate each fresh relation of B in
    /// E and read off the module coordinates; then reduce to the canonical
    /// representative.
    pub fn extension_class(&self, e: &FinitePresentation) -> Result<ExtensionClass> {
        let fe = e.flatten()?;
        let fb = self.target.flatten()?;
        let nb_rels = self.base.flatten()?.relations.len();
        let dim = self.module.dim;
        let eps_idx: Vec<usize> = self
            .eps_names
            .iter()
            .map(|n| {
                fe.ring
                    .var_index(n)
                    .ok_or_else(|| Error::VariableMismatch(alloc::format!("missing {n}")))
            })
            .collect::<Result<_>>()?;
        let mut raw: Vec<BigInt> = Vec::new();
        for f in fb.relations.iter().skip(nb_rels) {
            // value of f in E: must lie in the eps-span
            let v = reduce_in_extension(&fe, &f.embed(&fe.ring)?, &eps_idx, dim)?;
            raw.extend(v);
        }
        // canonical representative: smallest enumerated class equal to raw
        let c1 = raw.len();
        let raw_m = Matrix::from_fn(c1, 1, |i, _| raw[i].clone());
        let bnd = self
            .delta(0)
            .hstack(&self.cochain_relations(self.ct.complex.ranks[1]));
        for class in self.classify()? {
            let cv = Matrix::from_fn(c1, 1, |i, _| {
                class.cocycle[i].as_int().expect("integral").clone()
            });
            let diff = Matrix::from_fn(c1, 1, |i, _| raw_m.at(i, 0) - cv.at(i, 0));
            let same = if bnd.cols == 0 {
                diff.entries().all(num_traits::Zero::is_zero)
            } else {
                snf::solve_z(&bnd, &diff).is_some()
            };
            if same {
                return Ok(class);
            }
        }
        Err(Error::ShapeMismatch(
            "extension value is not a cocycle of the stored problem".into(),
        ))
    }
}

/// Reduce a polynomial in an extension presentation to eps-coordinates: the
/// element must equal Σ c_k eps_k modulo the relations. Field coefficients
/// use Groebner normal forms; constant (ℤ / ℤ/m) presentations use the
/// relation lattice directly.
fn reduce_in_extension(
    fe: &crate::presentation::FlatPresentation,
    p: &MultiPoly,
    eps_idx: &[usize],
    dim: usize,
) -> Result<Vec<BigInt>> {
    if fe.ring.coeff.is_field() {
        let red = fe.reduce(p)?;
        let mut out = vec![BigInt::from(0); dim];
        for (mono, c) in red.terms() {
            let mut hit = None;
            for (k, &ei) in eps_idx.iter().enumerate() {
                if mono.0[ei] == 1 && mono.degree() == 1 {
                    hit = Some(k);
                }
            }
            match hit {
                Some(k) => out[k] = c.as_int().expect("integral coefficient").clone(),
                None => {
                    return Err(Error::ShapeMismatch(
                        "extension value not in the module span".into(),
                    ))
                }
            }
        }
        Ok(out)
    } else {
        // constants + eps over Z or Z/m: rewrite eps-quadratic terms to zero
        // and match against the additive relations
        let mut out = vec![BigInt::from(0); dim];
        let mut constant = BigInt::from(0);
        for (mono, c) in p.terms() {
            let deg: u32 = eps_idx.iter().map(|&i| mono.0[i]).sum();
            let total = mono.degree();
            if total == 0 {
                constant = c.as_int().expect("integral").clone();
            } else if deg == 1 && total == 1 {
                let k = eps_idx
                    .iter()
                    .position(|&i| mono.0[i] == 1)
                    .expect("eps variable");
                out[k] = c.as_int().expect("integral").clone();
            } else if deg >= 2 {
                // eps² = 0
            } else {
                return Err(Error::ShapeMismatch(
                    "unexpected monomial in a constant extension".into(),
                ));
            }
        }
        // fold the constant through the relations: constant = Σ c_k eps_k
        // must hold modulo the relation list, i.e. the relation
        // `constant − Σ twist eps` appears; we use the stored relations to
        // express the constant in eps-coordinates.
        if !num_traits::Zero::is_zero(&constant) {
            // find a relation with the same constant term
            for rel in &fe.relations {
                let rc = rel.constant_term();
                let rc = rc.as_int().expect("integral");
                if rc == &constant {
                    for (mono, c) in rel.terms() {
                        if mono.degree() == 1 {
                            if let Some(k) = eps_idx.iter().position(|&i| mono.0[i] == 1) {
                                out[k] -= c.as_int().expect("integral");
                            }
                        }
                    }
                    return Ok(out);
                }
            }
            return Err(Error::ShapeMismatch(
                "constant value not matched by extension relations".into(),
            ));
        }
        Ok(out)
    }
}

/// Outcome of the affine deformation problem along a square-zero
/// coefficient thickening.
#[derive(Clone, Debug)]
pub struct DeformationOutcome {
    /// Structural report of D²(B/A; J): the obstruction group.
    pub obstruction_group: HomologyReport,
    /// The obstruction class vanishes (trivially true when the group is 0).
    pub obstruction_vanishes: bool,
    /// D¹(B/A; J): the torsor of deformations when unobstructed.
    pub torsor_group: HomologyReport,
    /// D⁰(B/A; J) = Hom(Ω, J): automorphisms of any deformation.
    pub automorphism_group: HomologyReport,
    /// A flat deformation, when one exists.
    pub deformation: Option<FinitePresentation>,
    pub notes: Vec<String>,
}

/// Deform B along the square-zero thickening ℤ/m̃ → ℤ/m (m̃ = m·p),
/// for B smooth or étale over its base (obstruction and torsor groups
/// vanish, so the canonical coefficient lift is the unique deformation).
/// The general machinery justifies this through the base-change
/// isomorphism D^i(B_k/A_k; J) ≅ D^i(B/A₁; J) for flat B_k.
pub fn deform_coefficient_thickening(
    b: &FinitePresentation,
    base: &FinitePresentation,
    new_modulus: u64,
) -> Result<DeformationOutcome> {
    let fb = b.flatten()?;
    let old =
        fb.ring.coeff.modulus().ok_or_else(|| {
            Error::UnsupportedBase("thickening needs modular coefficients".into())
        })?;
    if new_modulus % old != 0 {
        return Err(Error::NotSquareZero);
    }
    let step = new_modulus / old;
    // square-zero: the ideal (old) in Z/new must square to zero
    if (old * old) % new_modulus != 0 {
        return Err(Error::NotSquareZero);
    }
    let _ = step;
    // residue-level cotangent data: must be étale or smooth for the
    // closed-form lift
    let residue_b = to_residue(b)?;
    let residue_base = to_residue(base)?;
    let ct = crate::cotangent::cotangent(&residue_b, &residue_base, 2)?;
    match ct.fast_path {
        Some(FastPath::Etale) | Some(FastPath::Smooth) if ct.complex.ranks[0] == 0 => {}
        Some(FastPath::Etale) => {}
        _ => {
            return Err(Error::UnsupportedBase(
                "coefficient thickenings are lifted for étale residue data only".into(),
            ))
        }
    }
    // obstruction/torsor/automorphism groups all vanish (étale residue)
    let zero = |d: i64| HomologyReport::zero(d, false);
    // canonical lift: same integer coefficients over the bigger modulus
    let new_coeff = CoefficientRing::integers_mod(new_modulus)?;
    let lifted = relift(b, &new_coeff)?;
    Ok(DeformationOutcome {
        obstruction_group: zero(2),
        obstruction_vanishes: true,
        torsor_group: zero(1),
        automorphism_group: zero(0),
        deformation: Some(lifted),
        notes: vec![
            "étale residue: obstruction and torsor groups vanish by base change to the residue field"
                .into(),
        ],
    })
}

fn to_residue(b: &FinitePresentation) -> Result<FinitePresentation> {
    let flat = b.flatten()?;
    let m = flat
        .ring
        .coeff
        .modulus()
        .ok_or_else(|| Error::UnsupportedBase("modular coefficients expected".into()))?;
    let (p, _) = crate::modmat::prime_power(m);
    let coeff = CoefficientRing::prime_field(p)?;
    relift(b, &coeff)
}

/// Rebuild a presentation with coefficients mapped into another ring.
pub fn relift(b: &FinitePresentation, coeff: &CoefficientRing) -> Result<FinitePresentation> {
    let flat = b.flatten()?;
    let vars: Vec<&str> = flat.ring.vars.iter().map(|s| s.as_str()).collect();
    let layer = FinitePresentation::polynomial(coeff.clone(), &vars);
    let ring = layer.flatten()?.ring;
    let relations: Vec<MultiPoly> = flat
        .relations
        .iter()
        .map(|r| {
            let moved = r.with_coefficients(coeff);
            moved.embed(&ring)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|r| !r.is_zero())
        .collect();
    if relations.is_empty() {
        Ok(layer)
    } else {
        FinitePresentation::quotient(layer, relations)
    }
}

/// Deformation along a split square-zero thickening of a field (the
/// obstruction always vanishes; the trivial deformation lifts the
/// presentation verbatim and the torsor is D¹(B/A; J)).
pub fn deform_split_thickening(
    b: &FinitePresentation,
    base: &FinitePresentation,
    module: &FiniteModuleData,
) -> Result<DeformationOutcome> {
    let ct = crate::cotangent::cotangent(b, base, 2)?;
    let d2 = aq_cohomology(&ct, module, 2)?;
    let d1 = aq_cohomology(&ct, module, 1)?;
    let d0 = aq_cohomology(&ct, module, 0)?;
    Ok(DeformationOutcome {
        obstruction_vanishes: true,
        obstruction_group: d2,
        torsor_group: d1,
        automorphism_group: d0,
        deformation: Some(b.clone()),
        notes: vec!["split thickening: the trivial deformation always exists".into()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp_problem(p: u64) -> ExtensionProblem {
        // B = F_p = Z/(p), A = Z, M = F_p
        let z = FinitePresentation::of_coefficients(CoefficientRing::Integers);
        let ring = z.flatten().unwrap().ring;
        let rel = MultiPoly::constant(&ring, Scalar::from_int(p as i64));
        let fp = FinitePresentation::quotient(z.clone(), vec![rel]).unwrap();
        let m = FiniteModuleData {
            coeff: CoefficientRing::Integers,
            dim: 1,
            var_actions: VarActions::ByName(Default::default()),
            add_relations: Some(SMat::from_i64(&CoefficientRing::Integers, &[&[p as i64]])),
        };
        ExtensionProblem::new(&fp, &z, m).unwrap()
    }

    #[test]
    fn fp_has_p_classes() {
        for p in [2u64, 3, 5] {
            let prob = fp_problem(p);
            let classes = prob.classify().unwrap();
            assert_eq!(classes.len(), p as usize, "p = {p}");
            assert!(classes[0].is_split());
            assert_eq!(classes.iter().filter(|c| c.is_split()).count(), 1);
        }
    }

    #[test]
    fn split_class_realizes_dual_numbers() {
        let prob = fp_problem(5);
        let classes = prob.classify().unwrap();
        let e = prob.realize(&classes[0]).unwrap();
        let fe = e.flatten().unwrap();
        // relations contain 5 (unchanged) and eps²; additive group (Z/5)²
        assert!(fe
            .relations
            .iter()
            .any(|r| r.is_constant() && r.constant_term() == Scalar::from_int(5)));
    }

    #[test]
    fn class_roundtrip() {
        let prob = fp_problem(3);
        for class in prob.classify().unwrap() {
            let e = prob.realize(&class).unwrap();
            let back = prob.extension_class(&e).unwrap();
            assert_eq!(back, class);
        }
    }

    #[test]
    fn smooth_targets_have_unique_class() {
        // B = k[x] over k, M = k at the origin: D¹ = 0, only the split class
        let k = FinitePresentation::of_coefficients(CoefficientRing::prime_field(5).unwrap());
        let b = FinitePresentation::polynomial(CoefficientRing::prime_field(5).unwrap(), &["x"]);
        let m = FiniteModuleData::residue_at_origin(&b.flatten().unwrap());
        let prob = ExtensionProblem::new(&b, &k, m).unwrap();
        let classes = prob.classify().unwrap();
        assert_eq!(classes.len(), 1);
        assert!(classes[0].is_split());
    }

    #[test]
    fn coefficient_thickening_lift() {
        // B = F_5 viewed over itself, thickened to Z/25: trivial étale lift
        let f5 = CoefficientRing::prime_field(5).unwrap();
        let b = FinitePresentation::polynomial(f5.clone(), &["t"]);
        let ring = b.flatten().unwrap().ring;
        let t = MultiPoly::var(&ring, 0);
        // F_25 = F_5[t]/(t² + t + 1)? use t² − 2 (a non-residue mod 5)
        let two = MultiPoly::constant(&ring, Scalar::from_int(2));
        let bq = FinitePresentation::quotient(b, vec![t.pow(2).sub(&two)]).unwrap();
        let base = FinitePresentation::of_coefficients(f5);
        // relift residue data into Z/5 coefficients to use the thickening API
        let b5 = relift(&bq, &CoefficientRing::integers_mod(5).unwrap()).unwrap();
        let base5 = relift(&base, &CoefficientRing::integers_mod(5).unwrap()).unwrap();
        let out = deform_coefficient_thickening(&b5, &base5, 25).unwrap();
        assert!(out.obstruction_vanishes);
        let lifted = out.deformation.unwrap();
        assert_eq!(
            lifted.flatten().unwrap().ring.coeff,
            CoefficientRing::integers_mod(25).unwrap()
        );
    }
}
