//! Truncated simplicial modules, Moore and normalized complexes, homotopy
//! groups, and the Dold-Kan correspondence in both directions.
//!
//! A [`TruncatedSimplicialModule`] stores levels 0..=N of free modules with
//! face and degeneracy matrices; the constructor verifies all five
//! simplicial identities (with a machine-word fast path for small moduli).
//!
//! Dold-Kan realization Γ(C) has level n equal to ⊕ C_k over surjections
//! [n] ↠ [k] (blocks ordered by k, then lexicographically by surjection);
//! a structure map hits a block through the epi-mono factorization: an
//! identity component when the mono part is the identity, and (−1)^k ∂ when
//! the mono part is the top coface δ_k. With this sign the normalized
//! complex of Γ(C) returns C with equal matrices, not just isomorphic ones.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::matrix::{self, Matrix, SMat};
use crate::modmat::ModMat;
use crate::report::{GradedReport, HomologyReport};
use crate::ring::CoefficientRing;
use crate::simplex::{surjections, SimplexMap};
use crate::snf::{self};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSimplicialModule {
    pub ring: CoefficientRing,
    pub trunc: usize,
    pub ranks: Vec<usize>,
    /// `faces[n][i]` : level n → level n−1 (present for 1 ≤ n ≤ N, 0 ≤ i ≤ n).
    pub faces: Vec<Vec<SMat>>,
    /// `degens[n][i]` : level n → level n+1 (present for 0 ≤ n < N, 0 ≤ i ≤ n).
    pub degens: Vec<Vec<SMat>>,
}

enum MatKind {
    Fast(Vec<Vec<ModMat>>, Vec<Vec<ModMat>>),
    Exact,
}

impl TruncatedSimplicialModule {
    pub fn new(
        ring: CoefficientRing,
        ranks: Vec<usize>,
        faces: Vec<Vec<SMat>>,
        degens: Vec<Vec<SMat>>,
    ) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::ShapeMismatch("at least level 0 required".into()));
        }
        let m = TruncatedSimplicialModule {
            ring,
            trunc: ranks.len() - 1,
            ranks,
            faces,
            degens,
        };
        m.verify()?;
        Ok(m)
    }

    pub fn constant(ring: CoefficientRing, rank: usize, trunc: usize) -> Self {
        let ranks = vec![rank; trunc + 1];
        let mut faces = vec![Vec::new()];
        let mut degens = Vec::new();
        for n in 1..=trunc {
            faces.push(vec![SMat::identity(&ring, rank); n + 1]);
        }
        for n in 0..trunc {
            degens.push(vec![SMat::identity(&ring, rank); n + 1]);
        }
        if trunc > 0 {
            // degens has entries for n = 0..trunc-1 only
        } else {
            degens.clear();
        }
        TruncatedSimplicialModule {
            ring,
            trunc,
            ranks,
            faces,
            degens,
        }
    }

    pub fn zero(ring: CoefficientRing, trunc: usize) -> Self {
        Self::constant(ring, 0, trunc)
    }

    fn shape_check(&self) -> Result<()> {
        let n = self.trunc;
        if self.faces.len() != n + 1 || (n > 0 && self.degens.len() != n) {
            return Err(Error::ShapeMismatch(
                "faces need levels 0..=N, degeneracies 0..N".into(),
            ));
        }
        if !self.faces[0].is_empty() {
            return Err(Error::ShapeMismatch("level 0 has no faces".into()));
        }
        for lv in 1..=n {
            if self.faces[lv].len() != lv + 1 {
                return Err(Error::ShapeMismatch(alloc::format!(
                    "level {lv} needs {} face maps",
                    lv + 1
                )));
            }
            for f in &self.faces[lv] {
                if f.rows != self.ranks[lv - 1] || f.cols != self.ranks[lv] {
                    return Err(Error::ShapeMismatch(alloc::format!(
                        "face at level {lv} has shape {}x{}",
                        f.rows,
                        f.cols
                    )));
                }
            }
        }
        for lv in 0..n {
            if self.degens[lv].len() != lv + 1 {
                return Err(Error::ShapeMismatch(alloc::format!(
                    "level {lv} needs {} degeneracy maps",
                    lv + 1
                )));
            }
            for s in &self.degens[lv] {
                if s.rows != self.ranks[lv + 1] || s.cols != self.ranks[lv] {
                    return Err(Error::ShapeMismatch(alloc::format!(
                        "degeneracy at level {lv} has shape {}x{}",
                        s.rows,
                        s.cols
                    )));
                }
            }
        }
        Ok(())
    }

    fn mat_kind(&self) -> MatKind {
        if let Some(m) = self.ring.modulus() {
            if m < (1 << 31) {
                let f = self
                    .faces
                    .iter()
                    .map(|lvl| {
                        lvl.iter()
                            .map(|x| ModMat::from_smat(&self.ring, x).unwrap())
                            .collect()
                    })
                    .collect();
                let s = self
                    .degens
                    .iter()
                    .map(|lvl| {
                        lvl.iter()
                            .map(|x| ModMat::from_smat(&self.ring, x).unwrap())
                            .collect()
                    })
                    .collect();
                return MatKind::Fast(f, s);
            }
        }
        MatKind::Exact
    }

    /// Verify the five simplicial identities on the stored matrices.
    pub fn verify(&self) -> Result<()> {
        self.shape_check()?;
        let n = self.trunc;
        let fail = |what: &str, lv: usize, i: usize, j: usize| {
            Err(Error::ShapeMismatch(alloc::format!(
                "simplicial identity {what} fails at level {lv} (i={i}, j={j})"
            )))
        };
        match self.mat_kind() {
            MatKind::Fast(f, s) => {
                for lv in 2..=n {
                    for j in 0..=lv {
                        for i in 0..j {
                            // d_i d_j = d_{j-1} d_i
                            let lhs = f[lv - 1][i].mul(&f[lv][j]);
                            let rhs = f[lv - 1][j - 1].mul(&f[lv][i]);
                            if lhs != rhs {
                                return fail("d_i d_j = d_{j-1} d_i", lv, i, j);
                            }
                        }
                    }
                }
                for lv in 0..n {
                    for j in 0..=lv {
                        for i in 0..=(lv + 1) {
                            let lhs = f[lv + 1][i].mul(&s[lv][j]);
                            let ok = if i == j || i == j + 1 {
                                let id = ModMat::identity(lhs.m, self.ranks[lv]);
                                lhs == id
                            } else if i < j {
                                lv >= 1 && lhs == s[lv - 1][j - 1].mul(&f[lv][i])
                            } else {
                                lv >= 1 && lhs == s[lv - 1][j].mul(&f[lv][i - 1])
                            };
                            if !ok {
                                return fail("d_i s_j", lv, i, j);
                            }
                        }
                    }
                }
                for lv in 0..n.saturating_sub(1) {
                    for j in 0..=lv {
                        for i in 0..=j {
                            // s_i s_j = s_{j+1} s_i
                            let lhs = s[lv + 1][i].mul(&s[lv][j]);
                            let rhs = s[lv + 1][j + 1].mul(&s[lv][i]);
                            if lhs != rhs {
                                return fail("s_i s_j = s_{j+1} s_i", lv, i, j);
                            }
                        }
                    }
                }
            }
            MatKind::Exact => {
                let r = &self.ring;
                for lv in 2..=n {
                    for j in 0..=lv {
                        for i in 0..j {
                            let lhs = self.faces[lv - 1][i].mul(r, &self.faces[lv][j]);
                            let rhs = self.faces[lv - 1][j - 1].mul(r, &self.faces[lv][i]);
                            if lhs != rhs {
                                return fail("d_i d_j = d_{j-1} d_i", lv, i, j);
                            }
                        }
                    }
                }
                for lv in 0..n {
                    for j in 0..=lv {
                        for i in 0..=(lv + 1) {
                            let lhs = self.faces[lv + 1][i].mul(r, &self.degens[lv][j]);
                            let ok = if i == j || i == j + 1 {
                                lhs == SMat::identity(r, self.ranks[lv])
                            } else if i < j {
                                lv >= 1
                                    && lhs == self.degens[lv - 1][j - 1].mul(r, &self.faces[lv][i])
                            } else {
                                lv >= 1
                                    && lhs == self.degens[lv - 1][j].mul(r, &self.faces[lv][i - 1])
                            };
                            if !ok {
                                return fail("d_i s_j", lv, i, j);
                            }
                        }
                    }
                }
                for lv in 0..n.saturating_sub(1) {
                    for j in 0..=lv {
                        for i in 0..=j {
                            let lhs = self.degens[lv + 1][i].mul(r, &self.degens[lv][j]);
                            let rhs = self.degens[lv + 1][j + 1].mul(r, &self.degens[lv][i]);
                            if lhs != rhs {
                                return fail("s_i s_j = s_{j+1} s_i", lv, i, j);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Moore complex: level modules with differential Σ (−1)^i d_i.
    pub fn moore_complex(&self) -> ChainComplex {
        let mut boundaries = vec![SMat::zeros(&self.ring, 0, self.ranks[0])];
        for lv in 1..=self.trunc {
            let mut b = SMat::zeros(&self.ring, self.ranks[lv - 1], self.ranks[lv]);
            for (i, f) in self.faces[lv].iter().enumerate() {
                let sgn = self.ring.from_i64(if i % 2 == 0 { 1 } else { -1 });
                b = b.add(&self.ring, &f.scale(&self.ring, &sgn));
            }
            boundaries.push(b);
        }
        ChainComplex::new(self.ring.clone(), 0, self.ranks.clone(), boundaries)
            .expect("Moore differential squares to zero")
    }

    /// Normalized complex: NM_n = ∩_{i<n} ker d_i with the restriction of
    /// the Moore differential. Level bases are canonical; over ℤ/m the
    /// levels may acquire relation data (they are presented, not free, in
    /// general).
    pub fn normalized_complex(&self) -> Result<ChainComplex> {
        match &self.ring {
            CoefficientRing::Rationals | CoefficientRing::PrimeField(_) => self.normalized_field(),
            CoefficientRing::Integers => self.normalized_lattice(None),
            CoefficientRing::IntegersMod(m) => self.normalized_lattice(Some(*m)),
        }
    }

    fn stacked_faces(&self, lv: usize) -> SMat {
        // [d_0; d_1; …; d_{lv-1}] : X_lv → ⊕ X_{lv-1}
        let mut out = SMat::zeros(&self.ring, 0, self.ranks[lv]);
        for i in 0..lv {
            out = out.vstack(&self.faces[lv][i]);
        }
        out
    }

    fn normalized_field(&self) -> Result<ChainComplex> {
        let r = &self.ring;
        let moore = self.moore_complex();
        // inclusion bases
        let mut incl: Vec<SMat> = Vec::with_capacity(self.trunc + 1);
        incl.push(SMat::identity(r, self.ranks[0]));
        for lv in 1..=self.trunc {
            let stacked = self.stacked_faces(lv);
            incl.push(matrix::nullspace(r, &stacked));
        }
        let ranks: Vec<usize> = incl.iter().map(|b| b.cols).collect();
        let mut boundaries = vec![SMat::zeros(r, 0, ranks[0])];
        for lv in 1..=self.trunc {
            let img = moore.boundaries[lv].mul(r, &incl[lv]);
            let mu = matrix::solve(r, &incl[lv - 1], &img).ok_or_else(|| {
                Error::ShapeMismatch("normalized differential not expressible".into())
            })?;
            boundaries.push(mu);
        }
        ChainComplex::new(r.clone(), 0, ranks, boundaries)
    }

    /// ℤ and ℤ/m path: kernels as lattices; levels presented when needed.
    fn normalized_lattice(&self, modulus: Option<u64>) -> Result<ChainComplex> {
        let r = &self.ring;
        let moore = self.moore_complex();
        // per level: generator matrix (columns) + invariant factors (Z/m)
        let mut gens: Vec<snf::ZMat> = Vec::new();
        let mut rels: Vec<Option<SMat>> = Vec::new();
        for lv in 0..=self.trunc {
            let rank = self.ranks[lv];
            let stacked = snf::smat_to_zmat(&self.stacked_faces(lv));
            match modulus {
                None => {
                    let k = if lv == 0 {
                        snf::zmat_identity(rank)
                    } else {
                        snf::kernel_basis(&stacked)
                    };
                    gens.push(k);
                    rels.push(None);
                }
                Some(m) => {
                    let mb = BigInt::from(m);
                    let k = if lv == 0 {
                        snf::zmat_identity(rank)
                    } else {
                        snf::congruence_kernel(&stacked, &mb)
                    };
                    // group K / mZ^rank: diagonalize
                    if k.cols == 0 {
                        gens.push(k);
                        rels.push(None);
                        continue;
                    }
                    let mi = Matrix::from_fn(rank, rank, |i, j| {
                        if i == j {
                            mb.clone()
                        } else {
                            num_traits::Zero::zero()
                        }
                    });
                    let coords = snf::solve_z(&k, &mi).expect("mZ^r inside the kernel lattice");
                    let s = snf::smith(&coords);
                    let newgens = snf::zmat_mul(&k, &s.p_inv);
                    let mut keep = Vec::new();
                    let mut factors = Vec::new();
                    for i in 0..newgens.cols.min(s.d.rows.min(s.d.cols)) {
                        let d = s.d.at(i, i).clone();
                        if !num_traits::One::is_one(&d) {
                            keep.push(i);
                            factors.push(d);
                        }
                    }
                    let g = newgens.select_cols(&keep);
                    let all_free = factors.iter().all(|f| *f == mb);
                    gens.push(g);
                    rels.push(if all_free {
                        None
                    } else {
                        let t = keep.len();
                        let mut rel = SMat::zeros(r, t, t);
                        for (i, f) in factors.iter().enumerate() {
                            rel.set(i, i, r.from_bigint(f.clone()));
                        }
                        Some(rel)
                    });
                }
            }
        }
        let ranks: Vec<usize> = gens.iter().map(|g| g.cols).collect();
        let mut boundaries = vec![SMat::zeros(r, 0, ranks[0])];
        for lv in 1..=self.trunc {
            let img = snf::zmat_mul(&snf::smat_to_zmat(&moore.boundaries[lv]), &gens[lv]);
            let mu = match modulus {
                None => snf::solve_z(&gens[lv - 1], &img),
                Some(m) => {
                    // solve modulo m: [G | mI] y = img
                    let rank = self.ranks[lv - 1];
                    let mi = Matrix::from_fn(rank, rank, |i, j| {
                        if i == j {
                            BigInt::from(m)
                        } else {
                            num_traits::Zero::zero()
                        }
                    });
                    let aug = gens[lv - 1].hstack(&mi);
                    snf::solve_z(&aug, &img)
                        .map(|y| y.select_rows(&(0..gens[lv - 1].cols).collect::<Vec<_>>()))
                }
            }
            .ok_or_else(|| {
                Error::ShapeMismatch("normalized differential not expressible".into())
            })?;
            boundaries.push(snf::zmat_to_smat(r, &mu));
        }
        let mut cx = ChainComplex::new(r.clone(), 0, ranks, boundaries)?;
        cx.level_relations = rels;
        Ok(cx)
    }

    /// Homotopy groups via the normalized complex. Degrees 0..N−1 are
    /// reliable; degree N is computed from truncated data and flagged.
    pub fn homotopy_groups(&self) -> Result<GradedReport> {
        let nm = self.normalized_complex()?;
        let reports: Vec<HomologyReport> =
            (0..=self.trunc as i64).map(|d| nm.homology(d)).collect();
        Ok(GradedReport {
            reports,
            reliable_through: self.trunc as i64 - 1,
            notes: vec![alloc::format!(
                "degree {} computed from a truncation and unreliable",
                self.trunc
            )],
        })
    }
}

/// The block decomposition of a Dold-Kan level: for each k ≤ n (bounded by
/// the complex's top degree) all surjections [n] ↠ [k], each contributing a
/// copy of C_k.
fn dk_blocks(c: &ChainComplex, n: usize) -> Vec<(usize, SimplexMap)> {
    let mut out = Vec::new();
    let top = c.max_degree().max(0) as usize;
    for k in 0..=n.min(top) {
        if c.rank_at(k as i64) == 0 {
            continue;
        }
        for t in surjections(n, k) {
            out.push((k, t));
        }
    }
    out
}

/// Dold-Kan realization of a non-negatively graded complex, truncated at N.
pub fn dold_kan_realize(c: &ChainComplex, trunc: usize) -> Result<TruncatedSimplicialModule> {
    if c.min_degree < 0 {
        return Err(Error::NegativeDegrees(c.min_degree));
    }
    let ring = c.ring.clone();
    let blocks: Vec<Vec<(usize, SimplexMap)>> = (0..=trunc).map(|n| dk_blocks(c, n)).collect();
    let ranks: Vec<usize> = blocks
        .iter()
        .map(|bs| bs.iter().map(|(k, _)| c.rank_at(*k as i64)).sum())
        .collect();
    // offsets of each block within its level
    let offset = |n: usize, which: usize| -> usize {
        blocks[n][..which]
            .iter()
            .map(|(k, _)| c.rank_at(*k as i64))
            .sum()
    };
    // structure map for θ : [m] → [n]: level n → level m
    let structure = |n: usize, m: usize, theta: &SimplexMap| -> SMat {
        let mut out = SMat::zeros(&ring, ranks[m], ranks[n]);
        for (src_idx, (k, t)) in blocks[n].iter().enumerate() {
            let composite = t.compose(theta);
            let (epi, mono) = composite.factorize();
            let k2 = mono.source_dim();
            if mono.is_surjective() {
                // identity component into block (k, epi)
                let tgt_idx = blocks[m]
                    .iter()
                    .position(|(kk, tt)| *kk == *k && *tt == epi)
                    .expect("target block exists");
                let (so, to) = (offset(n, src_idx), offset(m, tgt_idx));
                for a in 0..c.rank_at(*k as i64) {
                    out.set(to + a, so + a, ring.one());
                }
            } else if k2 + 1 == *k && mono.values == (0..*k).collect::<Vec<_>>() {
                // mono = δ_k (top coface): component (−1)^k ∂
                if c.rank_at(k2 as i64) == 0 {
                    continue;
                }
                let tgt_idx = blocks[m]
                    .iter()
                    .position(|(kk, tt)| *kk == k2 && *tt == epi)
                    .expect("target block exists");
                let (so, to) = (offset(n, src_idx), offset(m, tgt_idx));
                let d = c.boundary_from(*k as i64);
                let sgn = ring.from_i64(if k % 2 == 0 { 1 } else { -1 });
                for a in 0..d.rows {
                    for b in 0..d.cols {
                        let v = ring.mul(d.at(a, b), &sgn);
                        out.set(to + a, so + b, v);
                    }
                }
            }
            // other monos contribute zero
        }
        out
    };
    let mut faces = vec![Vec::new()];
    for n in 1..=trunc {
        let mut lvl = Vec::new();
        for i in 0..=n {
            lvl.push(structure(n, n - 1, &SimplexMap::coface(n - 1, i)));
        }
        faces.push(lvl);
    }
    let mut degens = Vec::new();
    for n in 0..trunc {
        let mut lvl = Vec::new();
        for i in 0..=n {
            lvl.push(structure(n, n + 1, &SimplexMap::codegeneracy(n, i)));
        }
        degens.push(lvl);
    }
    TruncatedSimplicialModule::new(ring, ranks, faces, degens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> CoefficientRing {
        CoefficientRing::prime_field(5).unwrap()
    }

    #[test]
    fn constant_module_moore() {
        // boundaries alternate 0, id
        let m = TruncatedSimplicialModule::constant(CoefficientRing::Integers, 1, 4);
        m.verify().unwrap();
        let moore = m.moore_complex();
        for lv in 1..=4usize {
            let b = &moore.boundaries[lv];
            if lv % 2 == 1 {
                assert!(b.is_zero(), "odd level boundary is zero");
            } else {
                assert_eq!(*b, SMat::identity(&CoefficientRing::Integers, 1));
            }
        }
        let h = moore.homology(0);
        assert_eq!(h.free_rank, 1);
        for d in 1..=3 {
            assert!(moore.homology(d).is_zero());
        }
    }

    #[test]
    fn constant_module_normalized() {
        let m = TruncatedSimplicialModule::constant(f5(), 2, 3);
        let nm = m.normalized_complex().unwrap();
        assert_eq!(nm.ranks, vec![2, 0, 0, 0]);
        // and over Z/4
        let m =
            TruncatedSimplicialModule::constant(CoefficientRing::integers_mod(4).unwrap(), 1, 3);
        let nm = m.normalized_complex().unwrap();
        assert_eq!(nm.ranks, vec![1, 0, 0, 0]);
        let h0 = m.homotopy_groups().unwrap();
        assert_eq!(h0.reports[0].free_rank, 1);
    }

    #[test]
    fn zero_module() {
        let m = TruncatedSimplicialModule::zero(f5(), 3);
        let moore = m.moore_complex();
        for d in 0..=3 {
            assert!(moore.homology(d).is_zero());
        }
    }

    #[test]
    fn realize_concentrated_degree_0() {
        let ring = f5();
        let c = ChainComplex::concentrated(ring.clone(), 0, 2);
        let m = dold_kan_realize(&c, 3).unwrap();
        assert_eq!(m.ranks, vec![2, 2, 2, 2]);
        // constant simplicial module
        let cst = TruncatedSimplicialModule::constant(ring, 2, 3);
        assert_eq!(m, cst);
    }

    #[test]
    fn realize_concentrated_degree_1() {
        let ring = f5();
        let c = ChainComplex::concentrated(ring.clone(), 1, 1);
        let m = dold_kan_realize(&c, 4).unwrap();
        assert_eq!(m.ranks, vec![0, 1, 2, 3, 4]);
        let moore = m.moore_complex();
        assert_eq!(moore.homology(1).dimension, Some(1));
        assert!(moore.homology(0).is_zero());
        assert!(moore.homology(2).is_zero());
        assert!(moore.homology(3).is_zero());
    }

    #[test]
    fn roundtrip_small_complex() {
        let ring = f5();
        // C: 0 <- C_0 <- C_1 <- C_2 with a nontrivial boundary
        let c = ChainComplex::new(
            ring.clone(),
            0,
            vec![1, 2, 1],
            vec![
                SMat::zeros(&ring, 0, 1),
                SMat::from_i64(&ring, &[&[1, 2]]),
                SMat::from_i64(&ring, &[&[2], &[4]]),
            ],
        )
        .unwrap();
        let m = dold_kan_realize(&c, 4).unwrap();
        let back = m.normalized_complex().unwrap();
        assert_eq!(&back.ranks[..3], &c.ranks[..]);
        assert!(back.ranks[3] == 0 && back.ranks[4] == 0);
        for lv in 1..3 {
            assert_eq!(back.boundaries[lv], c.boundaries[lv], "level {lv}");
        }
    }

    #[test]
    fn normalized_rank_complements_degenerate_span() {
        // rank(NM_n) + rank(DM_n) = rank(X_n)
        let ring = f5();
        let c = ChainComplex::new(
            ring.clone(),
            0,
            vec![2, 2, 2],
            vec![
                SMat::zeros(&ring, 0, 2),
                SMat::from_i64(&ring, &[&[1, 0], &[0, 0]]),
                SMat::from_i64(&ring, &[&[0, 0], &[1, 3]]),
            ],
        )
        .unwrap();
        let m = dold_kan_realize(&c, 3).unwrap();
        let nm = m.normalized_complex().unwrap();
        for lv in 1..=3usize {
            // degenerate span: columns of all degeneracies into level lv
            let mut span = SMat::zeros(&ring, m.ranks[lv], 0);
            for s in &m.degens[lv - 1] {
                span = span.hstack(s);
            }
            let dm = matrix::rank(&ring, &span);
            assert_eq!(nm.ranks[lv] + dm, m.ranks[lv], "level {lv}");
        }
    }

    #[test]
    fn homotopy_of_realization_is_complex_homology() {
        // π_i(Γ(C)) must reproduce H_i(C) degreewise, over a field and over Z
        let ring = f5();
        let c = ChainComplex::new(
            ring.clone(),
            0,
            vec![2, 2, 1],
            vec![
                SMat::zeros(&ring, 0, 2),
                SMat::from_i64(&ring, &[&[1, 0], &[2, 0]]),
                SMat::from_i64(&ring, &[&[0], &[1]]),
            ],
        )
        .unwrap();
        let m = dold_kan_realize(&c, 4).unwrap();
        let pi = m.homotopy_groups().unwrap();
        for d in 0..=3i64 {
            assert_eq!(
                pi.reports[d as usize].dimension,
                c.homology(d).dimension,
                "degree {d}"
            );
        }
        // over Z: multiplication by 6 in degrees 1..0 has H_0 = Z/6
        let zr = CoefficientRing::Integers;
        let cz = ChainComplex::new(
            zr.clone(),
            0,
            vec![1, 1],
            vec![SMat::zeros(&zr, 0, 1), SMat::from_i64(&zr, &[&[6]])],
        )
        .unwrap();
        let mz = dold_kan_realize(&cz, 3).unwrap();
        let piz = mz.homotopy_groups().unwrap();
        assert_eq!(
            piz.reports[0].torsion,
            vec![num_bigint::BigInt::from(6)],
            "π₀ = Z/6"
        );
        assert!(piz.reports[1].is_zero());
        assert!(piz.reports[2].is_zero());
    }

    #[test]
    fn realization_over_zmod_presented_levels() {
        // Z/4 coefficients: the normalized complex of a realization may have
        // presented levels, and homotopy still matches the input homology
        let zm = CoefficientRing::integers_mod(4).unwrap();
        let c = ChainComplex::new(
            zm.clone(),
            0,
            vec![1, 1],
            vec![SMat::zeros(&zm, 0, 1), SMat::from_i64(&zm, &[&[2]])],
        )
        .unwrap();
        let m = dold_kan_realize(&c, 3).unwrap();
        let pi = m.homotopy_groups().unwrap();
        assert_eq!(
            pi.reports[0].torsion,
            vec![num_bigint::BigInt::from(2)],
            "π₀ = Z/2"
        );
        // H_1 = ker(2)/im(0) = 2Z/4 ≅ Z/2
        assert_eq!(pi.reports[1].torsion, vec![num_bigint::BigInt::from(2)]);
    }

    #[test]
    fn moore_vs_normalized_homology() {
        let ring = f5();
        let c = ChainComplex::new(
            ring.clone(),
            0,
            vec![2, 2, 1],
            vec![
                SMat::zeros(&ring, 0, 2),
                SMat::from_i64(&ring, &[&[1, 0], &[2, 0]]),
                SMat::from_i64(&ring, &[&[0], &[1]]),
            ],
        )
        .unwrap();
        let m = dold_kan_realize(&c, 4).unwrap();
        let moore = m.moore_complex();
        let nm = m.normalized_complex().unwrap();
        for d in 0..=3i64 {
            assert_eq!(
                moore.homology(d).dimension,
                nm.homology(d).dimension,
                "degree {d}"
            );
        }
    }
}
