//! Deterministic sampling for the property suites.
//!
//! A tiny xorshift generator keeps the whole pipeline reproducible across
//! platforms and runs: the same seed always yields byte-identical reports.
//! Random chain complexes are built as sums of elementary two-term pieces
//! conjugated by random invertible matrices, so `d ∘ d = 0` holds exactly;
//! random simplicial modules are Dold-Kan realizations conjugated levelwise.

use alloc::vec::Vec;

use crate::complex::ChainComplex;
use crate::error::Result;
use crate::matrix::SMat;
use crate::ring::CoefficientRing;
use crate::smod::{dold_kan_realize, TruncatedSimplicialModule};

#[derive(Clone, Debug)]
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        // avoid the all-zero state
        Rng(seed
            .wrapping_mul(2685821657736338717)
            .wrapping_add(0x9E3779B97F4A7C15)
            | 1)
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform in 0..n (n > 0).
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// Random invertible matrix with its exact inverse: a product of
/// elementary shears I + c·E_ij (works over any coefficient ring, since
/// each factor inverts to I − c·E_ij).
pub fn random_conjugator(rng: &mut Rng, ring: &CoefficientRing, n: usize) -> (SMat, SMat) {
    let m = ring.modulus().unwrap_or(11);
    let mut fwd = SMat::identity(ring, n);
    let mut inv = SMat::identity(ring, n);
    if n < 2 {
        return (fwd, inv);
    }
    for _ in 0..2 * n {
        let i = rng.below(n as u64) as usize;
        let mut j = rng.below(n as u64 - 1) as usize;
        if j >= i {
            j += 1;
        }
        let c = ring.from_i64(rng.below(m) as i64);
        let mut shear = SMat::identity(ring, n);
        shear.set(i, j, c.clone());
        let mut unshear = SMat::identity(ring, n);
        unshear.set(i, j, ring.neg(&c));
        fwd = fwd.mul(ring, &shear);
        inv = unshear.mul(ring, &inv);
    }
    (fwd, inv)
}

/// Random invertible matrix (forward part of [`random_conjugator`]).
pub fn random_invertible(rng: &mut Rng, ring: &CoefficientRing, n: usize) -> SMat {
    random_conjugator(rng, ring, n).0
}

/// Random bounded complex over a field, degrees 0..=max_degree, level ranks
/// ≤ max_rank, with exact `d ∘ d = 0`.
pub fn random_complex(
    rng: &mut Rng,
    ring: &CoefficientRing,
    max_degree: usize,
    max_rank: usize,
) -> ChainComplex {
    let n = max_degree;
    let ranks: Vec<usize> = (0..=n)
        .map(|_| rng.below(max_rank as u64 + 1) as usize)
        .collect();
    // matched ranks: m_k ≤ min(rank_k, rank_{k-1} − m_{k-1})
    let mut matched = alloc::vec![0usize; n + 1];
    for k in 1..=n {
        let cap = ranks[k].min(ranks[k - 1].saturating_sub(matched[k - 1]));
        matched[k] = if cap == 0 {
            0
        } else {
            rng.below(cap as u64 + 1) as usize
        };
    }
    let us: Vec<(SMat, SMat)> = ranks
        .iter()
        .map(|&r| random_conjugator(rng, ring, r))
        .collect();
    let mut boundaries = alloc::vec![SMat::zeros(ring, 0, ranks[0])];
    for k in 1..=n {
        let mut d = SMat::zeros(ring, ranks[k - 1], ranks[k]);
        for j in 0..matched[k] {
            d.set(matched[k - 1] + j, j, ring.one());
        }
        let d = us[k - 1].0.mul(ring, &d).mul(ring, &us[k].1);
        boundaries.push(d);
    }
    ChainComplex::new(ring.clone(), 0, ranks, boundaries).expect("constructed complex")
}

/// Random truncated simplicial module: realize a random complex, then
/// conjugate every level by a random basis change.
pub fn random_simplicial_module(
    rng: &mut Rng,
    ring: &CoefficientRing,
    trunc: usize,
    max_rank: usize,
) -> Result<TruncatedSimplicialModule> {
    let c = random_complex(rng, ring, trunc, max_rank);
    let m = dold_kan_realize(&c, trunc)?;
    let vs: Vec<(SMat, SMat)> = m
        .ranks
        .iter()
        .map(|&r| random_conjugator(rng, ring, r))
        .collect();
    let faces = m
        .faces
        .iter()
        .enumerate()
        .map(|(n, lvl)| {
            lvl.iter()
                .map(|f| vs[n - 1].0.mul(ring, f).mul(ring, &vs[n].1))
                .collect()
        })
        .collect();
    let degens = m
        .degens
        .iter()
        .enumerate()
        .map(|(n, lvl)| {
            lvl.iter()
                .map(|s| vs[n + 1].0.mul(ring, s).mul(ring, &vs[n].1))
                .collect()
        })
        .collect();
    TruncatedSimplicialModule::new(ring.clone(), m.ranks.clone(), faces, degens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinism() {
        let ring = CoefficientRing::prime_field(5).unwrap();
        let mut r1 = Rng::new(0);
        let mut r2 = Rng::new(0);
        let c1 = random_complex(&mut r1, &ring, 4, 3);
        let c2 = random_complex(&mut r2, &ring, 4, 3);
        assert_eq!(c1, c2);
        let mut r3 = Rng::new(1);
        let c3 = random_complex(&mut r3, &ring, 4, 3);
        assert!(c1 != c3 || c1.ranks == c3.ranks);
    }

    #[test]
    fn random_modules_satisfy_identities() {
        let ring = CoefficientRing::prime_field(5).unwrap();
        let mut rng = Rng::new(7);
        for _ in 0..5 {
            let m = random_simplicial_module(&mut rng, &ring, 4, 3).unwrap();
            m.verify().unwrap();
        }
    }

    #[test]
    fn roundtrip_on_random_complexes() {
        for p in [2u64, 5] {
            let ring = CoefficientRing::prime_field(p).unwrap();
            let mut rng = Rng::new(0);
            for _ in 0..10 {
                let c = random_complex(&mut rng, &ring, 4, 3);
                let m = dold_kan_realize(&c, 4).unwrap();
                let back = m.normalized_complex().unwrap();
                assert_eq!(back.ranks, c.ranks, "p = {p}");
                for lv in 1..c.ranks.len() {
                    assert_eq!(back.boundaries[lv], c.boundaries[lv], "p = {p}");
                }
            }
        }
    }

    #[test]
    fn realize_normalize_is_weakly_equivalent_to_identity() {
        // Γ(N(X)) has the same homotopy groups as X degreewise
        let ring = CoefficientRing::prime_field(5).unwrap();
        let mut rng = Rng::new(9);
        for _ in 0..5 {
            let x = random_simplicial_module(&mut rng, &ring, 4, 3).unwrap();
            let nx = x.normalized_complex().unwrap();
            let gx = dold_kan_realize(&nx, 4).unwrap();
            let pi_x = x.homotopy_groups().unwrap();
            let pi_gx = gx.homotopy_groups().unwrap();
            for d in 0..=3usize {
                assert_eq!(
                    pi_x.reports[d].dimension, pi_gx.reports[d].dimension,
                    "degree {d}"
                );
            }
        }
    }

    #[test]
    fn moore_normalized_agree_on_random_modules() {
        let ring = CoefficientRing::prime_field(2).unwrap();
        let mut rng = Rng::new(3);
        for _ in 0..5 {
            let m = random_simplicial_module(&mut rng, &ring, 4, 3).unwrap();
            let moore = m.moore_complex();
            let nm = m.normalized_complex().unwrap();
            for d in 0..=3i64 {
                assert_eq!(moore.homology(d).dimension, nm.homology(d).dimension);
            }
        }
    }
}
