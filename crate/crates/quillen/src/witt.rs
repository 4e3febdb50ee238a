//! Witt vectors of finite fields by iterated unobstructed deformations,
//! plus the finite-ring tables used to verify them.
//!
//! W_n(𝔽_q), q = p^e, is constructed step by step: 𝔽_q is étale over 𝔽_p
//! (its minimal polynomial is separable), so along each square-zero
//! thickening ℤ/p^{k+1} → ℤ/p^k the obstruction group D² and the torsor
//! group D¹ vanish, and the canonical coefficient lift of the minimal
//! polynomial is the unique flat deformation. The result is
//! (ℤ/p^n)[x]/(f) for any monic lift f of an irreducible polynomial, free
//! of rank e, reducing to 𝔽_q.
//!
//! [`FiniteRing`] gives exact multiplication tables for the small rings
//! involved (monic univariate quotients and nilpotent square-zero
//! extensions) with additive invariants, characteristic, and a
//! deterministic brute-force ring-isomorphism search.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::extension::{deform_coefficient_thickening, DeformationOutcome};
use crate::matrix::Matrix;
use crate::presentation::FinitePresentation;
use crate::ring::CoefficientRing;
use crate::snf::{self, ZMat};

pub const WITT_Q_CAP: u64 = 64;
pub const WITT_N_CAP: u32 = 4;
const TABLE_CAP: usize = 4096;

// ---------------------------------------------------------------------
// dense univariate arithmetic over Z/m (machine words)

fn utrim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn umul(m: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % m;
        }
    }
    utrim(&mut out);
    out
}

/// Remainder of a by the MONIC polynomial f.
fn urem(m: u64, a: &[u64], f: &[u64]) -> Vec<u64> {
    assert!(f.last() == Some(&1), "monic divisor required");
    let mut r: Vec<u64> = a.to_vec();
    let df = f.len() - 1;
    while r.len() > df {
        let lead = *r.last().unwrap() % m;
        let shift = r.len() - 1 - df;
        if lead != 0 {
            for (i, &c) in f.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + (m - lead % m) * c) % m;
            }
        }
        r.pop();
        utrim(&mut r);
        if r.len() <= df {
            break;
        }
    }
    utrim(&mut r);
    r
}

fn upow_mod(m: u64, base: &[u64], mut e: u64, f: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = urem(m, base, f);
    while e > 0 {
        if e & 1 == 1 {
            acc = urem(m, &umul(m, &acc, &b), f);
        }
        b = urem(m, &umul(m, &b, &b), f);
        e >>= 1;
    }
    acc
}

fn ugcd(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    // Euclid over the field F_p
    let mut x: Vec<u64> = a.to_vec();
    let mut y: Vec<u64> = b.to_vec();
    utrim(&mut x);
    utrim(&mut y);
    while !y.is_empty() {
        // make y monic
        let lead = *y.last().unwrap();
        let inv = crate::modmat::ModMat {
            m: p,
            rows: 0,
            cols: 0,
            data: Vec::new(),
        };
        let _ = inv;
        let linv = mod_inv(p, lead);
        let ym: Vec<u64> = y.iter().map(|&c| c * linv % p).collect();
        let r = urem(p, &x, &ym);
        x = y;
        y = r;
    }
    x
}

fn mod_inv(p: u64, v: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, (v % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "not invertible");
    t0.rem_euclid(p as i128) as u64
}

/// Is the monic polynomial irreducible over 𝔽_p? (x^{p^e} ≡ x mod f and
/// gcd(x^{p^{e/ℓ}} − x, f) = 1 for prime divisors ℓ of e.)
fn irreducible(p: u64, f: &[u64]) -> bool {
    let e = (f.len() - 1) as u64;
    if e == 0 {
        return false;
    }
    let x = vec![0u64, 1];
    // x^{p^e} mod f, by e-fold Frobenius power
    let mut xe = x.clone();
    for _ in 0..e {
        xe = upow_mod(p, &xe, p, f);
    }
    let mut diff = xe.clone();
    while diff.len() < 2 {
        diff.push(0);
    }
    diff[1] = (diff[1] + p - 1) % p;
    utrim(&mut diff);
    if !diff.is_empty() {
        return false;
    }
    let mut ell = 2;
    let mut rem = e;
    let mut primes = Vec::new();
    while rem > 1 {
        if rem % ell == 0 {
            primes.push(ell);
            while rem % ell == 0 {
                rem /= ell;
            }
        }
        ell += 1;
    }
    for ell in primes {
        let k = e / ell;
        let mut xk = x.clone();
        for _ in 0..k {
            xk = upow_mod(p, &xk, p, f);
        }
        let mut d = xk.clone();
        while d.len() < 2 {
            d.push(0);
        }
        d[1] = (d[1] + p - 1) % p;
        utrim(&mut d);
        let g = ugcd(p, &d, f);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// The lexicographically first monic irreducible polynomial of degree e
/// over 𝔽_p (for e = 1, the polynomial x).
pub fn minimal_irreducible(p: u64, e: u32) -> Vec<u64> {
    if e == 1 {
        return vec![0, 1];
    }
    let deg = e as usize;
    let mut coeffs = vec![0u64; deg]; // low coefficients, lead is 1
    loop {
        let mut f = coeffs.clone();
        f.push(1);
        if irreducible(p, &f) {
            return f;
        }
        // increment the coefficient tuple
        let mut i = 0;
        loop {
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
            assert!(i < deg, "no irreducible polynomial found");
        }
    }
}

// ---------------------------------------------------------------------
// finite ring tables

/// A finite commutative ring presented on an additive generating set with
/// a bilinear multiplication table: the additive group is ℤ^dim modulo the
/// columns of `add_rels`, and `mul[i][j]` holds the coordinates of g_i g_j.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    pub dim: usize,
    pub labels: Vec<String>,
    pub add_rels: ZMat,
    pub mul: Vec<Vec<Vec<BigInt>>>,
    pub one: Vec<BigInt>,
}

impl FiniteRing {
    /// (ℤ/m)[x]/(f) for a monic f (lowest coefficients first, lead 1);
    /// e = deg f ≥ 1, basis 1, x, …, x^{e−1}.
    pub fn monic_quotient(m: u64, f: &[u64]) -> FiniteRing {
        assert!(f.last() == Some(&1));
        let e = f.len() - 1;
        let labels = (0..e).map(|i| alloc::format!("x^{i}")).collect();
        let add_rels = Matrix::from_fn(e, e, |i, j| {
            if i == j {
                BigInt::from(m)
            } else {
                BigInt::zero()
            }
        });
        let mut mul = vec![vec![Vec::new(); e]; e];
        for i in 0..e {
            for j in 0..e {
                let mut a = vec![0u64; i + 1];
                a[i] = 1;
                let mut b = vec![0u64; j + 1];
                b[j] = 1;
                let prod = urem(m, &umul(m, &a, &b), f);
                let mut coords = vec![BigInt::zero(); e];
                for (k, &c) in prod.iter().enumerate() {
                    coords[k] = BigInt::from(c);
                }
                mul[i][j] = coords;
            }
        }
        let mut one = vec![BigInt::zero(); e];
        one[0] = BigInt::one();
        FiniteRing {
            dim: e,
            labels,
            add_rels,
            mul,
            one,
        }
    }

    /// Invariant factors of the additive group.
    pub fn additive_invariants(&self) -> Vec<BigInt> {
        let (free, tors) = snf::quotient_invariants(self.dim, &self.add_rels);
        assert_eq!(free, 0, "finite ring expected");
        tors
    }

    pub fn order(&self) -> BigInt {
        self.additive_invariants().iter().product()
    }

    /// Additive order of 1 (the characteristic).
    pub fn characteristic(&self) -> u64 {
        let elems = self.enumerate();
        let one = self.canonical(&self.one);
        let mut acc = vec![BigInt::zero(); self.dim];
        for k in 1..=elems.len() as u64 + 1 {
            for (a, b) in acc.iter_mut().zip(&one) {
                *a += b;
            }
            if self.canonical(&acc).iter().all(|v| v.is_zero()) {
                return k;
            }
        }
        unreachable!("characteristic bounded by the order")
    }

    /// Canonical coordinates modulo the additive relations (via the Smith
    /// adapted basis).
    pub fn canonical(&self, v: &[BigInt]) -> Vec<BigInt> {
        let s = snf::smith(&self.add_rels);
        // y = P v; reduce y_i mod d_i; v' = P^{-1} y
        let vm = Matrix::from_fn(self.dim, 1, |i, _| v[i].clone());
        let y = snf::zmat_mul(&s.p, &vm);
        let diag = s.diagonal();
        let yred = Matrix::from_fn(self.dim, 1, |i, _| {
            if i < diag.len() && !diag[i].is_zero() {
                num_integer::Integer::mod_floor(y.at(i, 0), &diag[i])
            } else {
                y.at(i, 0).clone()
            }
        });
        let back = snf::zmat_mul(&s.p_inv, &yred);
        (0..self.dim).map(|i| back.at(i, 0).clone()).collect()
    }

    /// All elements, canonical coordinates, deterministic order.
    pub fn enumerate(&self) -> Vec<Vec<BigInt>> {
        let s = snf::smith(&self.add_rels);
        let diag = s.diagonal();
        let orders: Vec<u64> = diag
            .iter()
            .map(|d| u64::try_from(d).expect("small order"))
            .collect();
        let total: u64 = orders.iter().product();
        assert!((total as usize) <= TABLE_CAP, "ring too large to enumerate");
        let mut out = Vec::with_capacity(total as usize);
        let mut counter = vec![0u64; orders.len()];
        loop {
            // v = P^{-1} y with y = counter
            let y = Matrix::from_fn(self.dim, 1, |i, _| {
                if i < counter.len() {
                    BigInt::from(counter[i])
                } else {
                    BigInt::zero()
                }
            });
            let v = snf::zmat_mul(&s.p_inv, &y);
            out.push(
                self.canonical(
                    &(0..self.dim)
                        .map(|i| v.at(i, 0).clone())
                        .collect::<Vec<_>>(),
                ),
            );
            let mut k = 0;
            loop {
                if k == counter.len() {
                    break;
                }
                counter[k] += 1;
                if counter[k] < orders[k].max(1) {
                    break;
                }
                counter[k] = 0;
                k += 1;
            }
            if k == counter.len() {
                break;
            }
        }
        out.sort();
        out.dedup();
        assert_eq!(out.len() as u64, total, "element enumeration consistent");
        out
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        self.canonical(&a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>())
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut acc = vec![BigInt::zero(); self.dim];
        for i in 0..self.dim {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if b[j].is_zero() {
                    continue;
                }
                let f = &a[i] * &b[j];
                for (k, c) in self.mul[i][j].iter().enumerate() {
                    acc[k] += &f * c;
                }
            }
        }
        self.canonical(&acc)
    }

    /// Ring isomorphism search: images for the additive generators are
    /// tried exhaustively (bounded), preserving 1, addition and
    /// multiplication. Deterministic; intended for orders ≤ a few hundred.
    pub fn is_isomorphic(&self, other: &FiniteRing) -> bool {
        if self.order() != other.order() {
            return false;
        }
        if self.additive_invariants() != other.additive_invariants() {
            return false;
        }
        let elems = other.enumerate();
        // represent self's elements abstractly
        let selfs = self.enumerate();
        let index: BTreeMap<Vec<BigInt>, usize> = selfs
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let n = selfs.len();
        // candidate images for each basis generator of self
        let mut choice = vec![0usize; self.dim];
        let target_index: BTreeMap<Vec<BigInt>, usize> = elems
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        loop {
            // build the additive map: basis g_i ↦ elems[choice[i]]
            let phi = |v: &[BigInt]| -> Vec<BigInt> {
                let mut acc = vec![BigInt::zero(); other.dim];
                for (i, c) in v.iter().enumerate() {
                    for (k, x) in elems[choice[i]].iter().enumerate() {
                        acc[k] += c * x;
                    }
                }
                other.canonical(&acc)
            };
            // check: bijective on elements, preserves 1 and products
            let mut ok = phi(&self.one) == other.canonical(&other.one);
            if ok {
                let mut seen = vec![false; n];
                for s in &selfs {
                    let im = phi(s);
                    match target_index.get(&im) {
                        Some(&t) if !seen[t] => seen[t] = true,
                        _ => {
                            ok = false;
                            break;
                        }
                    }
                }
            }
            if ok {
                'products: for i in 0..self.dim {
                    for j in 0..self.dim {
                        let lhs = phi(&self.canonical(&self.mul[i][j]));
                        let gi = &elems[choice[i]];
                        let gj = &elems[choice[j]];
                        if lhs != other.mul(gi, gj) {
                            ok = false;
                            break 'products;
                        }
                    }
                }
            }
            if ok {
                let _ = index;
                return true;
            }
            // next choice tuple
            let mut k = 0;
            loop {
                if k == self.dim {
                    return false;
                }
                choice[k] += 1;
                if choice[k] < elems.len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
    }
}

// ---------------------------------------------------------------------
// Witt vectors

#[derive(Clone, Debug)]
pub struct WittReport {
    pub p: u64,
    pub e: u32,
    pub n: u32,
    /// The lift W_n(𝔽_q) as a presentation over ℤ/p^n.
    pub presentation: FinitePresentation,
    /// Minimal polynomial used (coefficients low-to-high over 𝔽_p).
    pub minimal_polynomial: Vec<u64>,
    /// One deformation outcome per thickening step.
    pub steps: Vec<DeformationOutcome>,
    /// Free rank over ℤ/p^n (= e), verified through additive invariants.
    pub flat_rank: usize,
    pub table: FiniteRing,
}

/// W_n(𝔽_q) for q = p^e: the unique flat ℤ/p^n-lift, built through
/// unobstructed square-zero deformation steps.
pub fn witt_vectors(q: u64, n: u32) -> Result<WittReport> {
    if q > WITT_Q_CAP || n > WITT_N_CAP || n == 0 {
        return Err(Error::ScaleCap(alloc::format!(
            "witt parameters q={q}, n={n} exceed caps ({WITT_Q_CAP}, {WITT_N_CAP})"
        )));
    }
    let (p, e) = crate::modmat::prime_power(q);
    let f = minimal_irreducible(p, e);
    // residue-field presentation over Z/p
    let make = |modulus: u64| -> Result<FinitePresentation> {
        let coeff = CoefficientRing::integers_mod(modulus)?;
        if e == 1 {
            return Ok(FinitePresentation::of_coefficients(coeff));
        }
        let layer = FinitePresentation::polynomial(coeff.clone(), &["x"]);
        let ring = layer.flatten()?.ring;
        let x = crate::poly::MultiPoly::var(&ring, 0);
        let mut rel = crate::poly::MultiPoly::zero(&ring);
        for (k, &c) in f.iter().enumerate() {
            rel = rel.add(&x.pow(k as u32).scale(&coeff.from_i64(c as i64)));
        }
        FinitePresentation::quotient(layer, vec![rel])
    };
    let mut steps = Vec::new();
    let mut current = make(p)?;
    let mut modulus = p;
    for _ in 1..n {
        let base = base_of(modulus)?;
        let next = modulus * p;
        let out = deform_coefficient_thickening(&current, &base, next)?;
        let lifted = out
            .deformation
            .clone()
            .ok_or_else(|| Error::ShapeMismatch("unobstructed step must deform".into()))?;
        let _ = lifted;
        // the canonical deformation keeps the same minimal polynomial; use
        // the uniform construction so coefficients stay canonical lifts
        current = make(next)?;
        steps.push(out);
        modulus = next;
    }
    // verification: flat of rank e and reduces to F_q
    let table = FiniteRing::monic_quotient(modulus, &f);
    let inv = table.additive_invariants();
    let expected = vec![BigInt::from(modulus); e as usize];
    if inv != expected {
        return Err(Error::ShapeMismatch(alloc::format!(
            "lift is not free of rank {e}: invariants {inv:?}"
        )));
    }
    let residue = FiniteRing::monic_quotient(p, &f);
    let fq_table = FiniteRing::monic_quotient(p, &f);
    if !residue.is_isomorphic(&fq_table) {
        return Err(Error::ShapeMismatch("reduction mismatch".into()));
    }
    Ok(WittReport {
        p,
        e,
        n,
        presentation: current,
        minimal_polynomial: f,
        steps,
        flat_rank: e as usize,
        table,
    })
}

fn base_of(modulus: u64) -> Result<FinitePresentation> {
    Ok(FinitePresentation::of_coefficients(
        CoefficientRing::integers_mod(modulus)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibles() {
        assert!(irreducible(2, &[1, 1, 1])); // x²+x+1
        assert!(!irreducible(2, &[1, 0, 1])); // x²+1 = (x+1)²
        assert!(irreducible(3, &[1, 0, 1])); // x²+1 over F_3
        assert_eq!(minimal_irreducible(2, 2), vec![1, 1, 1]);
    }

    #[test]
    fn witt_of_prime_field_is_z_mod_pn() {
        for p in [2u64, 3, 5] {
            for n in 1..=3u32 {
                let w = witt_vectors(p, n).unwrap();
                let target = FiniteRing::monic_quotient(p.pow(n), &[0, 1]);
                // target = (Z/p^n)[x]/(x) ≅ Z/p^n
                assert!(w.table.is_isomorphic(&target), "p={p}, n={n}");
                assert_eq!(w.table.characteristic(), p.pow(n));
                for s in &w.steps {
                    assert!(s.obstruction_vanishes);
                    assert!(s.torsor_group.is_zero());
                }
            }
        }
    }

    #[test]
    fn witt2_f4_is_galois_ring() {
        let w = witt_vectors(4, 2).unwrap();
        // oracle: (Z/4)[x]/(x²+x+1) is flat over Z/4 and reduces to F_4
        let oracle = FiniteRing::monic_quotient(4, &[1, 1, 1]);
        assert_eq!(
            oracle.additive_invariants(),
            vec![BigInt::from(4), BigInt::from(4)]
        );
        assert!(w.table.is_isomorphic(&oracle));
        assert_eq!(w.table.characteristic(), 4);
        assert_eq!(w.flat_rank, 2);
    }

    #[test]
    fn witt1_is_residue_field() {
        let w = witt_vectors(9, 1).unwrap();
        assert_eq!(w.n, 1);
        assert_eq!(w.table.order(), BigInt::from(9));
        assert_eq!(w.table.characteristic(), 3);
    }

    #[test]
    fn scale_caps() {
        assert!(witt_vectors(128, 1).is_err());
        assert!(witt_vectors(4, 9).is_err());
    }

    #[test]
    fn distinct_rings_not_isomorphic() {
        // Z/4 vs F_2[eps]/(eps²): same order, different characteristic /
        // multiplication
        let z4 = FiniteRing::monic_quotient(4, &[0, 1]);
        // F_2[eps]: basis 1, eps with eps² = 0 over Z/2
        let mut eps = FiniteRing::monic_quotient(2, &[0, 0, 1]);
        eps.labels = vec!["1".into(), "eps".into()];
        assert_eq!(eps.order(), BigInt::from(4));
        assert!(!z4.is_isomorphic(&eps));
    }
}
