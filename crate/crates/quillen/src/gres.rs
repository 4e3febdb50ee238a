//! Free resolutions over group rings Λ[G] (Λ = ℤ/ℓⁿ) and the cocycle
//! calculus on them: cohomology subquotients with canonical
//! representatives, Yoneda products by chain-map lifting, restriction to
//! subgroups, and pullback along group automorphisms.
//!
//! A resolution stores, per degree, the images of the free-module
//! generators; every solve happens on the Λ-expanded matrices through the
//! Howell machinery of [`crate::modmat`], so non-field Λ like ℤ/4 or ℤ/9
//! are exact. Generator choices are greedy and deterministic, so bases,
//! product tables and reports are reproducible.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::FiniteGroupData;
use crate::matrix::Matrix;
use crate::modmat::{self, ModMat, SpanBuilder};
use crate::snf::{self, ZMat};

/// A Λ[G]-module that is Λ-free of finite rank, with the action of each
/// group element.
#[derive(Clone, Debug)]
pub struct GroupModule {
    pub dim: usize,
    /// `action[g]`: dim × dim matrix over Λ.
    pub action: Vec<ModMat>,
}

impl GroupModule {
    pub fn trivial(group: &FiniteGroupData, modulus: u64) -> Self {
        GroupModule {
            dim: 1,
            action: vec![ModMat::identity(modulus, 1); group.order],
        }
    }

    /// Λ[G/K]: permutation module on the left cosets of K.
    pub fn coset_module(group: &FiniteGroupData, k: &[usize], modulus: u64) -> Result<Self> {
        let cosets = group.left_cosets(&group.subgroup(k)?);
        let t = cosets.len();
        let coset_of = |g: usize| -> usize {
            cosets
                .iter()
                .position(|(_, members)| members.binary_search(&g).is_ok())
                .expect("coset cover")
        };
        let mut action = Vec::with_capacity(group.order);
        for g in 0..group.order {
            let mut m = ModMat::zeros(modulus, t, t);
            for (j, (rep, _)) in cosets.iter().enumerate() {
                let target = coset_of(group.mul[g][*rep]);
                m.set(target, j, 1);
            }
            action.push(m);
        }
        Ok(GroupModule { dim: t, action })
    }
}

/// A free resolution … → Λ[G]^{r_1} → Λ[G]^{r_0} → M → 0.
#[derive(Clone, Debug)]
pub struct GroupResolution {
    pub group: FiniteGroupData,
    pub modulus: u64,
    pub target: GroupModule,
    pub ranks: Vec<usize>,
    /// `maps[i][j]` (i ≥ 1): image of generator j of F_i, a vector in
    /// Λ^{ranks[i-1]·|G|}, coordinates ordered (generator, group element).
    pub maps: Vec<Vec<Vec<u64>>>,
    /// images of the F_0 generators in the target module.
    pub aug: Vec<Vec<u64>>,
}

fn coord(rank_cols: usize, n: usize, j: usize, g: usize) -> usize {
    let _ = rank_cols;
    j * n + g
}

impl GroupResolution {
    fn n(&self) -> usize {
        self.group.order
    }

    /// Action of g on Λ^{rank·|G|} (block permutation by left translation).
    fn translate(&self, rank: usize, g: usize, v: &[u64]) -> Vec<u64> {
        let n = self.n();
        let mut out = vec![0u64; rank * n];
        for j in 0..rank {
            for h in 0..n {
                let c = v[coord(rank, n, j, h)];
                if c != 0 {
                    out[coord(rank, n, j, self.group.mul[g][h])] = c;
                }
            }
        }
        out
    }

    /// Expand a generator-image description into the full Λ-matrix.
    fn extend(&self, src_rank: usize, tgt_rank: usize, images: &[Vec<u64>]) -> ModMat {
        let n = self.n();
        let mut out = ModMat::zeros(self.modulus, tgt_rank * n, src_rank * n);
        for (j, img) in images.iter().enumerate() {
            for g in 0..n {
                let col = self.translate(tgt_rank, g, img);
                for (i, &c) in col.iter().enumerate() {
                    if c != 0 {
                        out.set(i, coord(src_rank, n, j, g), c);
                    }
                }
            }
        }
        out
    }

    /// The boundary F_i → F_{i-1} as a full Λ-matrix.
    pub fn expand_map(&self, i: usize) -> ModMat {
        assert!(i >= 1);
        self.extend(self.ranks[i], self.ranks[i - 1], &self.maps[i])
    }

    /// The augmentation F_0 → M as a full Λ-matrix (target has Λ-dimension
    /// `target.dim`).
    pub fn expand_aug(&self) -> ModMat {
        let n = self.n();
        let t = self.target.dim;
        let mut out = ModMat::zeros(self.modulus, t, self.ranks[0] * n);
        for (j, img) in self.aug.iter().enumerate() {
            for g in 0..n {
                // g · img under the target action
                let act = &self.target.action[g];
                for i in 0..t {
                    let mut acc = 0u64;
                    for (k, &c) in img.iter().enumerate() {
                        acc = (acc + act.at(i, k) * c) % self.modulus;
                    }
                    if acc != 0 {
                        out.set(i, coord(self.ranks[0], n, j, g), acc);
                    }
                }
            }
        }
        out
    }

    /// δ-matrix on N-valued cochains: Hom(F_i, N) → Hom(F_{i+1}, N),
    /// cochains stored as (generator, N-coordinate) tuples.
    pub fn cochain_delta(&self, n_mod: &GroupModule, i: usize) -> ModMat {
        let n = self.n();
        let t = n_mod.dim;
        if i + 1 >= self.ranks.len() {
            return ModMat::zeros(self.modulus, 0, self.ranks[i] * t);
        }
        let mut out = ModMat::zeros(self.modulus, self.ranks[i + 1] * t, self.ranks[i] * t);
        for (s, img) in self.maps[i + 1].iter().enumerate() {
            for j in 0..self.ranks[i] {
                // block = Σ_g img[(j,g)] · ρ(g)
                let mut block = ModMat::zeros(self.modulus, t, t);
                for g in 0..n {
                    let c = img[coord(self.ranks[i], n, j, g)];
                    if c == 0 {
                        continue;
                    }
                    for x in 0..t {
                        for y in 0..t {
                            let v = (block.at(x, y) + c * n_mod.action[g].at(x, y)) % self.modulus;
                            block.set(x, y, v);
                        }
                    }
                }
                for x in 0..t {
                    for y in 0..t {
                        if block.at(x, y) != 0 {
                            out.set(s * t + x, j * t + y, block.at(x, y));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Build a free resolution of `target` of the given length by greedy
/// kernel generation.
pub fn resolve_module(
    group: &FiniteGroupData,
    modulus: u64,
    target: GroupModule,
    length: usize,
) -> Result<GroupResolution> {
    let n = group.order;
    // Λ[G]-generators of the target: greedy over the standard basis
    let mut span = SpanBuilder::new(modulus, target.dim);
    let mut gens: Vec<Vec<u64>> = Vec::new();
    for b in 0..target.dim {
        let mut v = vec![0u64; target.dim];
        v[b] = 1;
        if span.contains(&v) {
            continue;
        }
        gens.push(v.clone());
        for g in 0..n {
            let act = &target.action[g];
            let mut w = vec![0u64; target.dim];
            for i in 0..target.dim {
                let mut acc = 0u64;
                for (k, &c) in v.iter().enumerate() {
                    acc = (acc + act.at(i, k) * c) % modulus;
                }
                w[i] = acc;
            }
            span.insert(&w);
        }
    }
    let mut res = GroupResolution {
        group: group.clone(),
        modulus,
        target,
        ranks: vec![gens.len()],
        maps: vec![Vec::new()],
        aug: gens,
    };
    for step in 1..=length {
        let big = if step == 1 {
            res.expand_aug()
        } else {
            res.expand_map(step - 1)
        };
        let ker = modmat::kernel(&big);
        // greedy Λ[G]-generators of the kernel; for prime moduli the kernel
        // columns are a basis, so the span saturates exactly at that rank
        let width = res.ranks[step - 1] * n;
        let (_, pk) = modmat::prime_power(modulus);
        let mut span = SpanBuilder::new(modulus, width);
        let mut gens: Vec<Vec<u64>> = Vec::new();
        for c in 0..ker.cols {
            if pk == 1 && span.rank_rows() == ker.cols {
                break;
            }
            let v: Vec<u64> = (0..width).map(|i| ker.at(i, c)).collect();
            if span.contains(&v) {
                continue;
            }
            gens.push(v.clone());
            for g in 0..n {
                span.insert(&res.translate(res.ranks[step - 1], g, &v));
            }
        }
        res.ranks.push(gens.len());
        res.maps.push(gens);
    }
    Ok(res)
}

/// One cohomology degree: invariant factors, adapted generator cocycles,
/// and the boundary span used for canonical reduction.
#[derive(Clone, Debug)]
pub struct DegreeData {
    pub invariants: Vec<u64>,
    /// cocycle representatives of the adapted generators (orders =
    /// invariants), as Λ-vectors on the cochain group.
    pub basis: Vec<Vec<u64>>,
    pub cochain_dim: usize,
    boundary_span: Vec<Vec<u64>>,
}

impl DegreeData {
    pub fn rank_contribution(&self) -> usize {
        self.invariants.len()
    }

    /// Canonical representative of a cocycle's class.
    pub fn canonical(&self, modulus: u64, v: &[u64]) -> Vec<u64> {
        let mut sb = SpanBuilder::new(modulus, v.len());
        for b in &self.boundary_span {
            sb.insert(b);
        }
        sb.reduce(v)
    }
}

/// Cohomology of the resolution with coefficients in `n_mod`, through the
/// penultimate stored degree.
pub fn cohomology(
    res: &GroupResolution,
    n_mod: &GroupModule,
    through: usize,
) -> Result<Vec<DegreeData>> {
    let modulus = res.modulus;
    let mut out = Vec::new();
    for d in 0..=through {
        if d + 1 >= res.ranks.len() {
            return Err(Error::TruncationExceeded(d));
        }
        let delta_out = res.cochain_delta(n_mod, d);
        let z = modmat::kernel(&delta_out);
        let cochain_dim = res.ranks[d] * n_mod.dim;
        // boundaries: image of δ_{d-1} (all columns)
        let boundary: Vec<Vec<u64>> = if d == 0 {
            Vec::new()
        } else {
            let prev = res.cochain_delta(n_mod, d - 1);
            (0..prev.cols)
                .map(|c| (0..prev.rows).map(|r| prev.at(r, c)).collect())
                .collect()
        };
        // invariants of span(Z)/span(B) over Λ, via integer lattices
        let lift = |cols: &ModMat| -> ZMat {
            Matrix::from_fn(cols.rows, cols.cols, |i, j| BigInt::from(cols.at(i, j)))
        };
        let zl = lift(&z);
        let ml = Matrix::from_fn(cochain_dim, cochain_dim, |i, j| {
            if i == j {
                BigInt::from(modulus)
            } else {
                num_traits::Zero::zero()
            }
        });
        let lz = snf::lattice_basis(&zl.hstack(&ml));
        let mut bl = Matrix::from_fn(cochain_dim, boundary.len(), |i, j| {
            BigInt::from(boundary[j][i])
        });
        bl = bl.hstack(&ml);
        let coords = snf::solve_z(&lz, &bl).expect("boundaries are cocycles");
        let s = snf::smith(&coords);
        let adapted = snf::zmat_mul(&lz, &s.p_inv);
        let diag = s.diagonal();
        let mut invariants = Vec::new();
        let mut basis = Vec::new();
        for (i, dd) in diag.iter().enumerate() {
            if num_traits::One::is_one(dd) {
                continue;
            }
            let order = u64::try_from(dd)
                .map_err(|_| Error::ShapeMismatch("infinite cohomology over Z/m".into()))?;
            invariants.push(order);
            let v: Vec<u64> = (0..cochain_dim)
                .map(|r| {
                    let x =
                        num_integer::Integer::mod_floor(adapted.at(r, i), &BigInt::from(modulus));
                    u64::try_from(&x).expect("reduced residue")
                })
                .collect();
            basis.push(v);
        }
        out.push(DegreeData {
            invariants,
            basis,
            cochain_dim,
            boundary_span: boundary,
        });
    }
    Ok(out)
}

/// Lift an N-valued cocycle on F_i to chain maps F_{i+k} → F_k for
/// k = 0..=steps; entry k is the generator-image list of φ_k.
pub fn lift_cocycle(
    res: &GroupResolution,
    n_mod: &GroupModule,
    phi: &[u64],
    i: usize,
    steps: usize,
) -> Result<Vec<Vec<Vec<u64>>>> {
    let n = res.group.order;
    let t = n_mod.dim;
    assert_eq!(phi.len(), res.ranks[i] * t, "cochain length");
    // φ_0 : F_i → F_0 with aug ∘ φ_0 = φ: solve for generator images
    // (treat N = target of the augmentation; the caller guarantees the
    // module matches the resolution target).
    let aug = res.expand_aug();
    let mut lifts: Vec<Vec<Vec<u64>>> = Vec::new();
    let mut phi0: Vec<Vec<u64>> = Vec::new();
    for s in 0..res.ranks[i] {
        let rhs = ModMat {
            m: res.modulus,
            rows: t,
            cols: 1,
            data: (0..t).map(|x| phi[s * t + x]).collect(),
        };
        let sol = modmat::solve(&aug, &rhs)
            .ok_or_else(|| Error::ShapeMismatch("cocycle does not lift to F_0".into()))?;
        phi0.push((0..sol.rows).map(|r| sol.at(r, 0)).collect());
    }
    lifts.push(phi0);
    for k in 1..=steps {
        if i + k >= res.ranks.len() || k >= res.ranks.len() {
            return Err(Error::TruncationExceeded(i + k));
        }
        let dk = res.expand_map(k);
        // rhs: φ_{k-1}(d(gen)) for each generator of F_{i+k}
        let prev = res.extend(res.ranks[i + k - 1], res.ranks[k - 1], &lifts[k - 1]);
        let mut images = Vec::new();
        for img in &res.maps[i + k] {
            let rhs_vec: Vec<u64> = {
                let mut acc = vec![0u64; res.ranks[k - 1] * n];
                for (c, &val) in img.iter().enumerate() {
                    if val == 0 {
                        continue;
                    }
                    for r in 0..acc.len() {
                        acc[r] = (acc[r] + val * prev.at(r, c)) % res.modulus;
                    }
                }
                acc
            };
            let rhs = ModMat {
                m: res.modulus,
                rows: rhs_vec.len(),
                cols: 1,
                data: rhs_vec,
            };
            let sol = modmat::solve(&dk, &rhs)
                .ok_or_else(|| Error::ShapeMismatch("chain lift failed".into()))?;
            images.push((0..sol.rows).map(|r| sol.at(r, 0)).collect());
        }
        lifts.push(images);
    }
    Ok(lifts)
}

/// Composition product ψ ∘ φ̃ of cocycles on the same resolution: φ is a
/// degree-i cocycle valued in the resolution target (liftable to chain
/// maps), ψ a degree-j cocycle valued in `value_mod`. The result is a
/// degree-(i+j) cocycle valued in `value_mod`. With both modules equal to
/// the target this is the Yoneda product of Ext^*(M, M); with ψ valued in
/// another module it is the right action of Ext^*(M, M) on Ext^*(M, N).
pub fn yoneda_compose(
    res: &GroupResolution,
    lift_mod: &GroupModule,
    value_mod: &GroupModule,
    psi: &[u64],
    j: usize,
    phi: &[u64],
    i: usize,
) -> Result<Vec<u64>> {
    assert_eq!(
        lift_mod.dim, res.target.dim,
        "lifted cocycle must be valued in the resolution target"
    );
    let t = value_mod.dim;
    let lifts = lift_cocycle(res, lift_mod, phi, i, j)?;
    let phij = &lifts[j]; // F_{i+j} → F_j generator images
    let n = res.group.order;
    let mut out = vec![0u64; res.ranks[i + j] * t];
    for (s, img) in phij.iter().enumerate() {
        // ψ(img): ψ on (gen, g) = ρ(g)·ψ(gen)
        for jj in 0..res.ranks[j] {
            for g in 0..n {
                let c = img[coord(res.ranks[j], n, jj, g)];
                if c == 0 {
                    continue;
                }
                for x in 0..t {
                    let mut acc = 0u64;
                    for y in 0..t {
                        acc = (acc + value_mod.action[g].at(x, y) * psi[jj * t + y]) % res.modulus;
                    }
                    out[s * t + x] = (out[s * t + x] + c * acc) % res.modulus;
                }
            }
        }
    }
    Ok(out)
}

/// Yoneda product of trivial-coefficient classes (cup product).
pub fn yoneda_product(
    res: &GroupResolution,
    n_mod: &GroupModule,
    psi: &[u64],
    j: usize,
    phi: &[u64],
    i: usize,
) -> Result<Vec<u64>> {
    yoneda_compose(res, n_mod, n_mod, psi, j, phi, i)
}

/// Restriction data from a group resolution to a subgroup: a ΛK-chain map
/// from the subgroup's own resolution into the ambient one.
pub struct RestrictionMaps {
    /// `mu[i][j]`: the image in F^G_i (full Λ-vector) of generator j of
    /// F^K_i.
    pub mu: Vec<Vec<Vec<u64>>>,
}

/// Build the comparison maps lifting the identity of Λ. `embed` sends
/// subgroup element indices to ambient indices.
pub fn restriction_maps(
    big: &GroupResolution,
    small: &GroupResolution,
    embed: &[usize],
    through: usize,
) -> Result<RestrictionMaps> {
    let n = big.group.order;
    // K-expanded boundary of the ambient resolution: treat F^G_i as a
    // ΛK-module with basis (generator, ambient group element); a ΛK-map is
    // determined by generator images, and translation uses only K-elements.
    let translate_k =
        |rank: usize, kk: usize, v: &[u64]| -> Vec<u64> { big.translate(rank, embed[kk], v) };
    let mut mu: Vec<Vec<Vec<u64>>> = Vec::new();
    // degree 0: both augment to Λ; send each K-generator to a G-solution
    let aug_g = big.expand_aug();
    let mut mu0 = Vec::new();
    for img in &small.aug {
        let rhs = ModMat {
            m: big.modulus,
            rows: big.target.dim,
            cols: 1,
            data: img.clone(),
        };
        let sol = modmat::solve(&aug_g, &rhs)
            .ok_or_else(|| Error::ShapeMismatch("augmentation comparison failed".into()))?;
        mu0.push((0..sol.rows).map(|r| sol.at(r, 0)).collect());
    }
    mu.push(mu0);
    for d in 1..=through {
        if d >= small.ranks.len() || d >= big.ranks.len() {
            return Err(Error::TruncationExceeded(d));
        }
        let dk = big.expand_map(d);
        let mut layer = Vec::new();
        for img in &small.maps[d] {
            // rhs = μ_{d-1}(d^K(gen)): expand μ_{d-1} K-equivariantly
            let kn = small.group.order;
            let mut acc = vec![0u64; big.ranks[d - 1] * n];
            for j in 0..small.ranks[d - 1] {
                for kk in 0..kn {
                    let c = img[j * kn + kk];
                    if c == 0 {
                        continue;
                    }
                    let moved = translate_k(big.ranks[d - 1], kk, &mu[d - 1][j]);
                    for (r, &v) in moved.iter().enumerate() {
                        acc[r] = (acc[r] + c * v) % big.modulus;
                    }
                }
            }
            let rhs = ModMat {
                m: big.modulus,
                rows: acc.len(),
                cols: 1,
                data: acc,
            };
            let sol = modmat::solve(&dk, &rhs)
                .ok_or_else(|| Error::ShapeMismatch("restriction lift failed".into()))?;
            layer.push((0..sol.rows).map(|r| sol.at(r, 0)).collect());
        }
        mu.push(layer);
    }
    Ok(RestrictionMaps { mu })
}

/// Restrict a Λ-valued degree-d cocycle along the comparison maps.
pub fn restrict_cocycle(
    big: &GroupResolution,
    small: &GroupResolution,
    maps: &RestrictionMaps,
    phi: &[u64],
    d: usize,
) -> Vec<u64> {
    // (φ∘μ): value on each K-generator = φ extended to F^G_d applied to μ(gen)
    let n = big.group.order;
    let mut out = vec![0u64; small.ranks[d]];
    for (s, img) in maps.mu[d].iter().enumerate() {
        let mut acc = 0u64;
        for j in 0..big.ranks[d] {
            for g in 0..n {
                let c = img[coord(big.ranks[d], n, j, g)];
                if c != 0 {
                    // trivial coefficients: φ(j, g) = φ(j)
                    acc = (acc + c * phi[j]) % big.modulus;
                }
            }
        }
        out[s] = acc;
    }
    out
}

/// Pullback along a group automorphism: the resolution with group
/// coordinates reindexed is again a resolution, and the lifting engine
/// provides the comparison.
pub fn twist_resolution(res: &GroupResolution, alpha: &[usize]) -> GroupResolution {
    let n = res.group.order;
    let reindex = |rank: usize, v: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; v.len()];
        for j in 0..rank {
            for g in 0..n {
                let c = v[coord(rank, n, j, g)];
                if c != 0 {
                    out[coord(rank, n, j, alpha[g])] = c;
                }
            }
        }
        out
    };
    let mut out = res.clone();
    for i in 1..out.maps.len() {
        let rank_prev = out.ranks[i - 1];
        out.maps[i] = out.maps[i].iter().map(|v| reindex(rank_prev, v)).collect();
    }
    out
}

/// Action of a group automorphism on a degree-d Λ-cocycle: compare the
/// original resolution with the twisted one and compose.
pub fn automorphism_action(
    res: &GroupResolution,
    alpha: &[usize],
    phi: &[u64],
    d: usize,
) -> Result<Vec<u64>> {
    let twisted = twist_resolution(res, alpha);
    let embed: Vec<usize> = (0..res.group.order).collect();
    let maps = restriction_maps(&twisted, res, &embed, d)?;
    Ok(restrict_cocycle(&twisted, res, &maps, phi, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_res(m: u64, modulus: u64, length: usize) -> GroupResolution {
        let g = FiniteGroupData::cyclic(m).unwrap();
        let t = GroupModule::trivial(&g, modulus);
        resolve_module(&g, modulus, t, length).unwrap()
    }

    #[test]
    fn cyclic_resolution_is_periodic() {
        let res = cyclic_res(3, 3, 4);
        assert_eq!(res.ranks, vec![1, 1, 1, 1, 1]);
        // exactness spot check: d∘d = 0
        for i in 2..res.ranks.len() {
            let a = res.expand_map(i - 1);
            let b = res.expand_map(i);
            assert!(a.mul(&b).is_zero());
        }
    }

    #[test]
    fn cohomology_of_z3_mod3() {
        // H^i(Z/3; F_3) has dimension 1 in every degree
        let res = cyclic_res(3, 3, 5);
        let n = GroupModule::trivial(&res.group, 3);
        let h = cohomology(&res, &n, 4).unwrap();
        for (d, data) in h.iter().enumerate() {
            assert_eq!(data.invariants, vec![3], "degree {d}");
        }
    }

    #[test]
    fn cohomology_coprime_vanishes() {
        // H^{>0}(Z/4; F_3) = 0
        let g = FiniteGroupData::cyclic(4).unwrap();
        let t = GroupModule::trivial(&g, 3);
        let res = resolve_module(&g, 3, t, 4).unwrap();
        let n = GroupModule::trivial(&g, 3);
        let h = cohomology(&res, &n, 3).unwrap();
        assert_eq!(h[0].invariants, vec![3]);
        for d in 1..=3 {
            assert!(h[d].invariants.is_empty(), "degree {d}");
        }
    }

    #[test]
    fn cohomology_z2_mod4() {
        // H^*(Z/2; Z/4): H^0 = Z/4, then invariant factor 2 in each degree
        let g = FiniteGroupData::cyclic(2).unwrap();
        let t = GroupModule::trivial(&g, 4);
        let res = resolve_module(&g, 4, t, 4).unwrap();
        let n = GroupModule::trivial(&g, 4);
        let h = cohomology(&res, &n, 3).unwrap();
        assert_eq!(h[0].invariants, vec![4]);
        for d in 1..=3 {
            assert_eq!(h[d].invariants, vec![2], "degree {d}");
        }
    }

    #[test]
    fn klein_four_growth() {
        // H^i((Z/2)²; F_2) has dimension i+1
        let g = FiniteGroupData::abelian(&[2, 2]).unwrap();
        let t = GroupModule::trivial(&g, 2);
        let res = resolve_module(&g, 2, t, 5).unwrap();
        let n = GroupModule::trivial(&g, 2);
        let h = cohomology(&res, &n, 4).unwrap();
        for (d, data) in h.iter().enumerate() {
            assert_eq!(data.invariants.len(), d + 1, "degree {d}");
        }
    }

    #[test]
    fn yoneda_products_polynomial_on_z2() {
        // H^*(Z/2; F_2) = F_2[t]: the degree-1 generator powers to the
        // degree-d generator for all d
        let res = cyclic_res(2, 2, 6);
        let n = GroupModule::trivial(&res.group, 2);
        let h = cohomology(&res, &n, 5).unwrap();
        let t1 = h[1].basis[0].clone();
        let mut acc = t1.clone();
        for d in 2..=4usize {
            acc = yoneda_product(&res, &n, &acc, d - 1, &t1, 1).unwrap();
            let canon = h[d].canonical(2, &acc);
            assert_eq!(canon, h[d].canonical(2, &h[d].basis[0]), "degree {d}");
        }
    }

    #[test]
    fn degree_one_classes_anticommute() {
        // on (Z/3)² over F₃, distinct H¹ generators satisfy αβ = −βα ≠ 0
        let g = FiniteGroupData::abelian(&[3, 3]).unwrap();
        let res = resolve_module(&g, 3, GroupModule::trivial(&g, 3), 4).unwrap();
        let n = GroupModule::trivial(&g, 3);
        let h = cohomology(&res, &n, 2).unwrap();
        assert_eq!(h[1].invariants.len(), 2);
        let a = h[1].basis[0].clone();
        let b = h[1].basis[1].clone();
        let ab = yoneda_product(&res, &n, &a, 1, &b, 1).unwrap();
        let ba = yoneda_product(&res, &n, &b, 1, &a, 1).unwrap();
        let sum: Vec<u64> = ab.iter().zip(&ba).map(|(x, y)| (x + y) % 3).collect();
        assert!(
            h[2].canonical(3, &sum).iter().all(|&v| v == 0),
            "αβ + βα = 0"
        );
        assert!(!h[2].canonical(3, &ab).iter().all(|&v| v == 0), "αβ ≠ 0");
    }

    #[test]
    fn kunneth_dimensions_on_products() {
        // H^i(Z/2 × Z/4; F_2) has dimension i+1 (convolution of all-ones)
        let g = FiniteGroupData::abelian(&[2, 4]).unwrap();
        let res = resolve_module(&g, 2, GroupModule::trivial(&g, 2), 5).unwrap();
        let n = GroupModule::trivial(&g, 2);
        let h = cohomology(&res, &n, 4).unwrap();
        for (d, data) in h.iter().enumerate() {
            assert_eq!(data.invariants.len(), d + 1, "degree {d}");
        }
    }

    #[test]
    fn restriction_to_subgroup() {
        // restriction H^1(Z/4; F_2) -> H^1(Z/2; F_2) is zero on the
        // generator dual to the quotient... compute and compare honestly:
        // res: Hom(Z/4, F_2) -> Hom(Z/2, F_2) is restriction of morphisms,
        // which on the generator is nonzero (Z/2 ⊂ Z/4: f(2) = 2·f(1) = 0).
        let g4 = FiniteGroupData::cyclic(4).unwrap();
        let res4 = resolve_module(&g4, 2, GroupModule::trivial(&g4, 2), 3).unwrap();
        let g2 = FiniteGroupData::cyclic(2).unwrap();
        let res2 = resolve_module(&g2, 2, GroupModule::trivial(&g2, 2), 3).unwrap();
        let n4 = GroupModule::trivial(&g4, 2);
        let n2 = GroupModule::trivial(&g2, 2);
        let h4 = cohomology(&res4, &n4, 2).unwrap();
        let h2 = cohomology(&res2, &n2, 2).unwrap();
        // Z/2 = {0, 2} inside Z/4
        let maps = restriction_maps(&res4, &res2, &[0, 2], 2).unwrap();
        let r1 = restrict_cocycle(&res4, &res2, &maps, &h4[1].basis[0], 1);
        assert!(h2[1].canonical(2, &r1).iter().all(|&x| x == 0));
        // degree 2 restricts nontrivially (Bockstein class)
        let r2 = restrict_cocycle(&res4, &res2, &maps, &h4[2].basis[0], 2);
        assert!(!h2[2].canonical(2, &r2).iter().all(|&x| x == 0));
    }

    #[test]
    fn inversion_acts_by_minus_one_on_h1() {
        let g = FiniteGroupData::cyclic(3).unwrap();
        let res = resolve_module(&g, 3, GroupModule::trivial(&g, 3), 5).unwrap();
        let n = GroupModule::trivial(&g, 3);
        let h = cohomology(&res, &n, 2).unwrap();
        let phi = &h[1].basis[0];
        let alpha = g.inversion_map();
        let acted = automorphism_action(&res, &alpha, phi, 1).unwrap();
        // acted = -phi: sum is a coboundary
        let sum: Vec<u64> = acted.iter().zip(phi).map(|(a, b)| (a + b) % 3).collect();
        assert!(h[1].canonical(3, &sum).iter().all(|&x| x == 0));
        // and on H^2 (extension classes) inversion also acts by −1
        let psi = &h[2].basis[0];
        let acted2 = automorphism_action(&res, &alpha, psi, 2).unwrap();
        let sum2: Vec<u64> = acted2.iter().zip(psi).map(|(a, b)| (a + b) % 3).collect();
        assert!(h[2].canonical(3, &sum2).iter().all(|&x| x == 0));
        // on H^3 it is a² = identity
        let h3 = cohomology(&res, &n, 3).unwrap();
        let chi = &h3[3].basis[0];
        let acted3 = automorphism_action(&res, &alpha, chi, 3).unwrap();
        let diff3: Vec<u64> = acted3
            .iter()
            .zip(chi)
            .map(|(a, b)| (a + 3 - b) % 3)
            .collect();
        assert!(h3[3].canonical(3, &diff3).iter().all(|&x| x == 0));
    }
}
