//! Machine-word matrices over ℤ/m for prime-power m.
//!
//! The exact engines work with bignum scalars; these matrices are the fast
//! kernel used where the modulus is a small prime power and the sizes are
//! large: verifying simplicial identities, reducing normalized complexes
//! over 𝔽_p, and all linear algebra over group rings in the Hecke layer.
//!
//! Row reduction is Howell-style: pivots are chosen by minimal p-valuation,
//! and every pivot row spawns its annihilator multiple, so the reduced set
//! spans the full row space over ℤ/p^k (for k = 1 this is ordinary rref).
//! This makes span membership, kernels and linear solving exact over
//! non-field coefficients like ℤ/4 or ℤ/9.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::matrix::Matrix;
use crate::ring::{CoefficientRing, Scalar};

/// Split m = p^k; panics if m is not a prime power ≥ 2.
pub fn prime_power(m: u64) -> (u64, u32) {
    assert!(m >= 2, "modulus must be at least 2");
    let mut p = 2;
    while m % p != 0 {
        p += 1;
    }
    let mut k = 0;
    let mut v = m;
    while v % p == 0 {
        v /= p;
        k += 1;
    }
    assert_eq!(v, 1, "{m} is not a prime power");
    (p, k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMat {
    pub m: u64,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl ModMat {
    pub fn zeros(m: u64, rows: usize, cols: usize) -> Self {
        ModMat {
            m,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(m: u64, n: usize) -> Self {
        let mut out = Self::zeros(m, n, n);
        for i in 0..n {
            out.data[i * n + i] = 1 % m;
        }
        out
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.m;
    }

    pub fn from_smat(ring: &CoefficientRing, m: &Matrix<Scalar>) -> Option<Self> {
        let modulus = ring.modulus()?;
        if modulus >= (1 << 31) {
            return None;
        }
        let mut out = Self::zeros(modulus, m.rows, m.cols);
        for i in 0..m.rows {
            for j in 0..m.cols {
                out.data[i * m.cols + j] = m.at(i, j).to_i64()? as u64 % modulus;
            }
        }
        Some(out)
    }

    pub fn to_smat(&self, ring: &CoefficientRing) -> Matrix<Scalar> {
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            ring.from_i64(self.at(i, j) as i64)
        })
    }

    pub fn mul(&self, other: &ModMat) -> ModMat {
        assert_eq!(self.cols, other.rows, "matmul shape");
        assert_eq!(self.m, other.m);
        let m = self.m;
        let mut out = ModMat::zeros(m, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                let orow = k * other.cols;
                let trow = i * other.cols;
                for j in 0..other.cols {
                    let v = (out.data[trow + j] + a * other.data[orow + j]) % m;
                    out.data[trow + j] = v;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ModMat) -> ModMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = (*a + *b) % self.m;
        }
        out
    }

    pub fn sub(&self, other: &ModMat) -> ModMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = (*a + self.m - *b) % self.m;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> ModMat {
        let mut out = ModMat::zeros(self.m, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.at(i, j);
            }
        }
        out
    }

    pub fn hstack(&self, other: &ModMat) -> ModMat {
        assert_eq!(self.rows, other.rows);
        let mut out = ModMat::zeros(self.m, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i * out.cols + j] = self.at(i, j);
            }
            for j in 0..other.cols {
                out.data[i * out.cols + self.cols + j] = other.at(i, j);
            }
        }
        out
    }
}

fn val_p(p: u64, k: u32, v: u64) -> u32 {
    if v == 0 {
        return k;
    }
    let mut v = v;
    let mut n = 0;
    while v % p == 0 {
        v /= p;
        n += 1;
    }
    n
}

fn inv_unit(m: u64, v: u64) -> u64 {
    // extended gcd on machine words; v must be a unit mod m
    let (mut r0, mut r1) = (m as i128, (v % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "not a unit");
    (t0.rem_euclid(m as i128)) as u64
}

/// Incremental Howell-style span of row vectors over ℤ/p^k. Supports
/// membership tests and reduction to a canonical representative modulo the
/// span; insertion keeps the annihilator closure.
pub struct SpanBuilder {
    pub m: u64,
    p: u64,
    k: u32,
    width: usize,
    /// pivot column → (pivot valuation, row)
    rows: BTreeMap<usize, (u32, Vec<u64>)>,
}

impl SpanBuilder {
    pub fn new(m: u64, width: usize) -> Self {
        let (p, k) = prime_power(m);
        SpanBuilder {
            m,
            p,
            k,
            width,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank_rows(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the span; the remainder has, at every current
    /// pivot column, an entry of strictly smaller valuation than the pivot
    /// or zero.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let mut v: Vec<u64> = v.iter().map(|x| x % self.m).collect();
        for (&c, (pv, row)) in &self.rows {
            let e = v[c];
            if e == 0 {
                continue;
            }
            if val_p(self.p, self.k, e) >= *pv {
                let f = e / self.p.pow(*pv);
                for (a, b) in v.iter_mut().zip(row) {
                    *a = (*a + (self.m - f % self.m) * b) % self.m;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Insert a vector; returns true when the span grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut queue = vec![v.to_vec()];
        let mut grew = false;
        while let Some(w) = queue.pop() {
            let w = self.reduce(&w);
            let Some(c) = w.iter().position(|&x| x != 0) else {
                continue;
            };
            let vw = val_p(self.p, self.k, w[c]);
            // normalize pivot entry to p^vw
            let unit = w[c] / self.p.pow(vw);
            let ui = inv_unit(self.m, unit);
            let wn: Vec<u64> = w.iter().map(|&x| x * ui % self.m).collect();
            match self.rows.get(&c) {
                Some((pv, _)) if *pv <= vw => {
                    // reduce() already guarantees vw < pv here
                    unreachable!("pivot valuation {pv} <= {vw} after reduction")
                }
                Some(_) => {
                    // new row has a better pivot: displace the old one
                    let (_, old) = self.rows.remove(&c).unwrap();
                    queue.push(old);
                    self.push_row(c, vw, wn.clone());
                    if vw > 0 {
                        queue.push(annihilator_row(self.m, self.p, self.k, vw, &wn));
                    }
                    grew = true;
                }
                None => {
                    self.push_row(c, vw, wn.clone());
                    if vw > 0 {
                        queue.push(annihilator_row(self.m, self.p, self.k, vw, &wn));
                    }
                    grew = true;
                }
            }
        }
        grew
    }

    fn push_row(&mut self, c: usize, v: u32, row: Vec<u64>) {
        assert_eq!(row.len(), self.width);
        self.rows.insert(c, (v, row));
    }

    pub fn row_vectors(&self) -> Vec<Vec<u64>> {
        self.rows.values().map(|(_, r)| r.clone()).collect()
    }
}

fn annihilator_row(m: u64, p: u64, k: u32, v: u32, row: &[u64]) -> Vec<u64> {
    let f = p.pow(k - v) % m;
    row.iter().map(|&x| x * f % m).collect()
}

/// Howell reduction with coefficient tracking: returns pairs `(row, track)`
/// with `row = track · input` spanning the full row space of `input`, plus
/// the tracks of rows that reduced to zero (which generate the left kernel,
/// thanks to the annihilator closure).
fn howell_tracked(
    m: u64,
    input: &[Vec<u64>],
    width: usize,
) -> (Vec<(Vec<u64>, Vec<u64>)>, Vec<Vec<u64>>) {
    let (p, k) = prime_power(m);
    let n = input.len();
    let mut span: Vec<(usize, u32, Vec<u64>, Vec<u64>)> = Vec::new(); // (pivot, val, row, track)
    let mut zeros: Vec<Vec<u64>> = Vec::new();
    let mut queue: Vec<(Vec<u64>, Vec<u64>)> = input
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut t = vec![0u64; n];
            t[i] = 1 % m;
            (r.iter().map(|&x| x % m).collect(), t)
        })
        .collect();
    queue.reverse();
    while let Some((mut row, mut track)) = queue.pop() {
        // reduce against current span
        loop {
            let Some(c) = row.iter().position(|&x| x != 0) else {
                if track.iter().any(|&x| x != 0) {
                    zeros.push(track);
                }
                break;
            };
            let vw = val_p(p, k, row[c]);
            if let Some(idx) = span.iter().position(|(pc, pv, _, _)| *pc == c && *pv <= vw) {
                let f = row[c] / p.pow(span[idx].1);
                let fm = (m - f % m) % m;
                for (a, b) in row.iter_mut().zip(&span[idx].2) {
                    *a = (*a + fm * b) % m;
                }
                for (a, b) in track.iter_mut().zip(&span[idx].3) {
                    *a = (*a + fm * b) % m;
                }
                continue;
            }
            // establish new pivot
            let unit = row[c] / p.pow(vw);
            let ui = inv_unit(m, unit);
            let row_n: Vec<u64> = row.iter().map(|&x| x * ui % m).collect();
            let track_n: Vec<u64> = track.iter().map(|&x| x * ui % m).collect();
            if let Some(idx) = span.iter().position(|(pc, _, _, _)| *pc == c) {
                // old pivot has worse valuation: swap it out
                let (_, _, or, ot) = span.remove(idx);
                queue.push((or, ot));
            }
            if vw > 0 {
                let f = p.pow(k - vw) % m;
                queue.push((
                    row_n.iter().map(|&x| x * f % m).collect(),
                    track_n.iter().map(|&x| x * f % m).collect(),
                ));
            }
            span.push((c, vw, row_n, track_n));
            span.sort_by_key(|(pc, _, _, _)| *pc);
            break;
        }
    }
    let _ = width;
    (span.into_iter().map(|(_, _, r, t)| (r, t)).collect(), zeros)
}

/// Generators of `{x : a · x = 0}` over ℤ/m, as matrix columns. For prime
/// m this is a plain nullspace by Gaussian elimination; for prime powers
/// the tracked Howell reduction supplies the extra annihilator generators.
pub fn kernel(a: &ModMat) -> ModMat {
    let m = a.m;
    let (_, k) = prime_power(m);
    if k == 1 {
        return kernel_prime(a);
    }
    // rows of the tracked system: columns of a
    let rows: Vec<Vec<u64>> = (0..a.cols)
        .map(|j| (0..a.rows).map(|i| a.at(i, j)).collect())
        .collect();
    let (_, gens) = howell_tracked(m, &rows, a.rows);
    let mut out = ModMat::zeros(m, a.cols, gens.len());
    for (j, g) in gens.iter().enumerate() {
        for i in 0..a.cols {
            out.set(i, j, g[i]);
        }
    }
    out
}

/// Nullspace over 𝔽_p: row-reduce and read canonical kernel vectors off
/// the free columns.
fn kernel_prime(a: &ModMat) -> ModMat {
    let p = a.m;
    let mut m = a.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m.at(i, c) != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                let x = m.at(r, j);
                let y = m.at(pr, j);
                m.set(r, j, y);
                m.set(pr, j, x);
            }
        }
        let inv = inv_unit(p, m.at(r, c));
        for j in 0..cols {
            let v = m.at(r, j) * inv % p;
            m.set(r, j, v);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m.at(i, c);
            if f == 0 {
                continue;
            }
            let neg = (p - f) % p;
            for j in 0..cols {
                let v = (m.at(i, j) + neg * m.at(r, j)) % p;
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut out = ModMat::zeros(p, cols, free.len());
    for (j, &fc) in free.iter().enumerate() {
        out.set(fc, j, 1);
        for (rr, &pc) in pivots.iter().enumerate() {
            let v = (p - m.at(rr, fc)) % p;
            out.set(pc, j, v);
        }
    }
    out
}

/// Solve `a x = b` over ℤ/m for every column of `b`.
pub fn solve(a: &ModMat, b: &ModMat) -> Option<ModMat> {
    assert_eq!(a.rows, b.rows, "solve shape");
    let m = a.m;
    let (p, k) = prime_power(m);
    let rows: Vec<Vec<u64>> = (0..a.cols)
        .map(|j| (0..a.rows).map(|i| a.at(i, j)).collect())
        .collect();
    let (h, _) = howell_tracked(m, &rows, a.rows);
    let mut out = ModMat::zeros(m, a.cols, b.cols);
    for jb in 0..b.cols {
        let mut r: Vec<u64> = (0..b.rows).map(|i| b.at(i, jb)).collect();
        let mut coeff = vec![0u64; a.cols];
        for (row, track) in &h {
            let Some(c) = row.iter().position(|&x| x != 0) else {
                continue;
            };
            let e = r[c];
            if e == 0 {
                continue;
            }
            let pv = val_p(p, k, row[c]);
            if val_p(p, k, e) < pv {
                return None;
            }
            let f = e / p.pow(pv);
            let fm = (m - f % m) % m;
            for (x, y) in r.iter_mut().zip(row) {
                *x = (*x + fm * y) % m;
            }
            for (x, y) in coeff.iter_mut().zip(track) {
                *x = (*x + f % m * y) % m;
            }
        }
        if r.iter().any(|&x| x != 0) {
            return None;
        }
        for i in 0..a.cols {
            out.set(i, jb, coeff[i]);
        }
    }
    Some(out)
}

/// Rank over 𝔽_p (prime modulus only).
pub fn rank_fp(a: &ModMat) -> usize {
    let (_, k) = prime_power(a.m);
    assert_eq!(k, 1, "rank_fp needs a prime modulus");
    let mut sb = SpanBuilder::new(a.m, a.cols);
    for i in 0..a.rows {
        sb.insert(&a.data[i * a.cols..(i + 1) * a.cols]);
    }
    sb.rank_rows()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(9), (3, 2));
        assert_eq!(prime_power(2), (2, 1));
        assert_eq!(prime_power(25), (5, 2));
    }

    #[test]
    fn kernel_mod_prime() {
        let mut a = ModMat::zeros(5, 2, 3);
        // rows: (1,2,3), (2,4,6) -> rank 1
        for (j, v) in [1, 2, 3].iter().enumerate() {
            a.set(0, j, *v);
        }
        for (j, v) in [2, 4, 6].iter().enumerate() {
            a.set(1, j, *v);
        }
        let k = kernel(&a);
        assert_eq!(k.cols, 2);
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn kernel_mod_prime_power() {
        // multiplication by 2 on Z/4: kernel generated by 2
        let mut a = ModMat::zeros(4, 1, 1);
        a.set(0, 0, 2);
        let k = kernel(&a);
        assert!(a.mul(&k).is_zero());
        // kernel must contain 2 (not just 0)
        let mut sb = SpanBuilder::new(4, 1);
        for j in 0..k.cols {
            sb.insert(&[k.at(0, j)]);
        }
        assert!(sb.contains(&[2]));
        assert!(!sb.contains(&[1]));
    }

    #[test]
    fn solve_mod_prime_power() {
        // 3x = 6 mod 9 has solutions (x = 2 + 3t); 3x = 1 mod 9 does not
        let mut a = ModMat::zeros(9, 1, 1);
        a.set(0, 0, 3);
        let mut b = ModMat::zeros(9, 1, 1);
        b.set(0, 0, 6);
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul(&x), b);
        b.set(0, 0, 1);
        assert!(solve(&a, &b).is_none());
    }

    #[test]
    fn span_membership() {
        let mut sb = SpanBuilder::new(9, 2);
        sb.insert(&[3, 3]);
        assert!(sb.contains(&[6, 6]));
        assert!(!sb.contains(&[3, 0]));
        sb.insert(&[0, 1]);
        assert!(sb.contains(&[3, 0]));
        assert!(!sb.contains(&[1, 0]));
    }
}
