//! Smith normal form over ℤ and the lattice computations built on it:
//! integer kernels, lattice bases and membership, quotient invariants, and
//! homology of integer complexes over ℤ and ℤ/m.
//!
//! All invariant factor lists form divisibility chains d₁ | d₂ | …; unit
//! factors are dropped from reports.

#[cfg(test)]
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::Matrix;
use crate::ring::{CoefficientRing, Scalar};

pub type ZMat = Matrix<BigInt>;

pub fn zmat_zeros(rows: usize, cols: usize) -> ZMat {
    Matrix::filled(rows, cols, BigInt::zero())
}

pub fn zmat_identity(n: usize) -> ZMat {
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

pub fn zmat_from_i64(rows: &[&[i64]]) -> ZMat {
    Matrix::from_fn(
        rows.len(),
        rows.first().map(|r| r.len()).unwrap_or(0),
        |i, j| BigInt::from(rows[i][j]),
    )
}

pub fn zmat_mul(a: &ZMat, b: &ZMat) -> ZMat {
    assert_eq!(a.cols, b.rows, "matmul shape");
    let mut out = zmat_zeros(a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            if a.at(i, k).is_zero() {
                continue;
            }
            for j in 0..b.cols {
                if b.at(k, j).is_zero() {
                    continue;
                }
                let v = out.at(i, j) + a.at(i, k) * b.at(k, j);
                out.set(i, j, v);
            }
        }
    }
    out
}

pub fn zmat_is_zero(a: &ZMat) -> bool {
    a.entries().all(|v| v.is_zero())
}

/// Scalar matrix (integer entries) → integer matrix.
pub fn smat_to_zmat(m: &Matrix<Scalar>) -> ZMat {
    m.map(|s| s.as_int().expect("integer scalar entry").clone())
}

pub fn zmat_to_smat(ring: &CoefficientRing, m: &ZMat) -> Matrix<Scalar> {
    m.map(|v| ring.from_bigint(v.clone()))
}

/// Result of a Smith normal form computation: `p * m * q = d` with `p`, `q`
/// unimodular, `d` diagonal with a divisibility chain d₁ | d₂ | ….
pub struct Snf {
    pub d: ZMat,
    pub p: ZMat,
    pub p_inv: ZMat,
    pub q: ZMat,
    pub q_inv: ZMat,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows.min(self.d.cols);
        (0..n).map(|i| self.d.at(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|v| !v.is_zero()).count()
    }
}

/// Smith normal form with all four transforms.
pub fn smith(m: &ZMat) -> Snf {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut p = zmat_identity(rows);
    let mut p_inv = zmat_identity(rows);
    let mut q = zmat_identity(cols);
    let mut q_inv = zmat_identity(cols);

    // elementary ops, applied to d and mirrored on the transforms
    macro_rules! row_swap {
        ($i:expr, $j:expr) => {{
            let (i, j) = ($i, $j);
            for c in 0..d.cols {
                let a = d.at(i, c).clone();
                let b = d.at(j, c).clone();
                d.set(i, c, b);
                d.set(j, c, a);
            }
            for c in 0..p.cols {
                let a = p.at(i, c).clone();
                let b = p.at(j, c).clone();
                p.set(i, c, b);
                p.set(j, c, a);
            }
            for r in 0..p_inv.rows {
                let a = p_inv.at(r, i).clone();
                let b = p_inv.at(r, j).clone();
                p_inv.set(r, i, b);
                p_inv.set(r, j, a);
            }
        }};
    }
    macro_rules! col_swap {
        ($i:expr, $j:expr) => {{
            let (i, j) = ($i, $j);
            for r in 0..d.rows {
                let a = d.at(r, i).clone();
                let b = d.at(r, j).clone();
                d.set(r, i, b);
                d.set(r, j, a);
            }
            for r in 0..q.rows {
                let a = q.at(r, i).clone();
                let b = q.at(r, j).clone();
                q.set(r, i, b);
                q.set(r, j, a);
            }
            for c in 0..q_inv.cols {
                let a = q_inv.at(i, c).clone();
                let b = q_inv.at(j, c).clone();
                q_inv.set(i, c, b);
                q_inv.set(j, c, a);
            }
        }};
    }
    // row[i] += f * row[j]
    macro_rules! row_add {
        ($i:expr, $j:expr, $f:expr) => {{
            let (i, j, f) = ($i, $j, $f);
            for c in 0..d.cols {
                let v = d.at(i, c) + &f * d.at(j, c);
                d.set(i, c, v);
            }
            for c in 0..p.cols {
                let v = p.at(i, c) + &f * p.at(j, c);
                p.set(i, c, v);
            }
            // inverse op on p_inv: col[j] -= f * col[i]
            for r in 0..p_inv.rows {
                let v = p_inv.at(r, j) - &f * p_inv.at(r, i);
                p_inv.set(r, j, v);
            }
        }};
    }
    // col[i] += f * col[j]
    macro_rules! col_add {
        ($i:expr, $j:expr, $f:expr) => {{
            let (i, j, f) = ($i, $j, $f);
            for r in 0..d.rows {
                let v = d.at(r, i) + &f * d.at(r, j);
                d.set(r, i, v);
            }
            for r in 0..q.rows {
                let v = q.at(r, i) + &f * q.at(r, j);
                q.set(r, i, v);
            }
            for c in 0..q_inv.cols {
                let v = q_inv.at(j, c) - &f * q_inv.at(i, c);
                q_inv.set(j, c, v);
            }
        }};
    }
    macro_rules! row_negate {
        ($i:expr) => {{
            let i = $i;
            for c in 0..d.cols {
                let v = -d.at(i, c);
                d.set(i, c, v);
            }
            for c in 0..p.cols {
                let v = -p.at(i, c);
                p.set(i, c, v);
            }
            for r in 0..p_inv.rows {
                let v = -p_inv.at(r, i);
                p_inv.set(r, i, v);
            }
        }};
    }

    let n = rows.min(cols);
    for k in 0..n {
        'pivot: loop {
            // smallest nonzero |entry| in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if d.at(i, j).is_zero() {
                        continue;
                    }
                    match &best {
                        None => best = Some((i, j)),
                        Some((bi, bj)) => {
                            if d.at(i, j).abs() < d.at(*bi, *bj).abs() {
                                best = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'pivot };
            if pi != k {
                row_swap!(k, pi);
            }
            if pj != k {
                col_swap!(k, pj);
            }
            if d.at(k, k).is_negative() {
                row_negate!(k);
            }
            // clear column and row k by division; restart if a remainder
            // survives (pivot shrinks each round, so this terminates)
            let mut dirty = false;
            for i in (k + 1)..rows {
                if d.at(i, k).is_zero() {
                    continue;
                }
                let f = -(d.at(i, k).div_floor(d.at(k, k)));
                row_add!(i, k, f);
                if !d.at(i, k).is_zero() {
                    dirty = true;
                }
            }
            for j in (k + 1)..cols {
                if d.at(k, j).is_zero() {
                    continue;
                }
                let f = -(d.at(k, j).div_floor(d.at(k, k)));
                col_add!(j, k, f);
                if !d.at(k, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            // enforce divisibility: fold any non-multiple into row k
            for i in (k + 1)..rows {
                for j in (k + 1)..cols {
                    if !d.at(i, j).mod_floor(d.at(k, k)).is_zero() {
                        row_add!(k, i, BigInt::one());
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
    }
    Snf {
        d,
        p,
        p_inv,
        q,
        q_inv,
    }
}

/// Basis of the integer kernel `{x : m x = 0}` as matrix columns. The kernel
/// of an integer matrix is a pure sublattice, so this is a genuine basis.
pub fn kernel_basis(m: &ZMat) -> ZMat {
    let s = smith(m);
    let mut idx = Vec::new();
    for j in 0..m.cols {
        let dj = if j < m.rows.min(m.cols) {
            s.d.at(j, j).clone()
        } else {
            BigInt::zero()
        };
        if dj.is_zero() {
            idx.push(j);
        }
    }
    s.q.select_cols(&idx)
}

/// Solve `m x = b` over ℤ, all columns of `b` at once.
pub fn solve_z(m: &ZMat, b: &ZMat) -> Option<ZMat> {
    assert_eq!(m.rows, b.rows, "solve shape");
    let s = smith(m);
    let pb = zmat_mul(&s.p, b);
    let mut y = zmat_zeros(m.cols, b.cols);
    let n = m.rows.min(m.cols);
    for i in 0..m.rows {
        let di = if i < n {
            s.d.at(i, i).clone()
        } else {
            BigInt::zero()
        };
        for j in 0..b.cols {
            let rhs = pb.at(i, j);
            if di.is_zero() {
                if !rhs.is_zero() {
                    return None;
                }
            } else {
                let (quo, rem) = rhs.div_rem(&di);
                if !rem.is_zero() {
                    return None;
                }
                if i < m.cols {
                    y.set(i, j, quo);
                }
            }
        }
    }
    Some(zmat_mul(&s.q, &y))
}

/// Canonical basis of the lattice spanned by the columns of `m`.
pub fn lattice_basis(m: &ZMat) -> ZMat {
    let s = smith(m);
    let n = m.rows.min(m.cols);
    let mut cols = Vec::new();
    for j in 0..n {
        if !s.d.at(j, j).is_zero() {
            cols.push(j);
        }
    }
    // columns of p_inv * d
    let pd = zmat_mul(&s.p_inv, &s.d);
    pd.select_cols(&cols)
}

/// Do the columns of `a` and `b` span the same sublattice of ℤ^n?
pub fn lattice_eq(a: &ZMat, b: &ZMat) -> bool {
    let ba = lattice_basis(a);
    let bb = lattice_basis(b);
    solve_z(&ba, &bb).is_some() && solve_z(&bb, &ba).is_some()
}

/// Invariant factors of `ℤ^n / colspan(m)`: `(free_rank, torsion)` with unit
/// factors dropped.
pub fn quotient_invariants(n: usize, m: &ZMat) -> (usize, Vec<BigInt>) {
    assert_eq!(m.rows, n, "ambient rank mismatch");
    let s = smith(m);
    let diag = s.diagonal();
    let nonzero: Vec<&BigInt> = diag.iter().filter(|d| !d.is_zero()).collect();
    let free = n - nonzero.len();
    let torsion = nonzero
        .into_iter()
        .filter(|d| !d.is_one())
        .cloned()
        .collect();
    (free, torsion)
}

/// Basis of the full-rank lattice `{x : a x ≡ 0 mod modulus}` (which always
/// contains `modulus · ℤ^cols`).
pub fn congruence_kernel(a: &ZMat, modulus: &BigInt) -> ZMat {
    let mi = Matrix::from_fn(a.rows, a.rows, |i, j| {
        if i == j {
            modulus.clone()
        } else {
            BigInt::zero()
        }
    });
    let aug = a.hstack(&mi);
    let k = kernel_basis(&aug);
    let proj = k.select_rows(&(0..a.cols).collect::<Vec<_>>());
    lattice_basis(&proj)
}

/// Lattice `{x : g x ∈ colspan(rels)}` (preimage of a sublattice).
pub fn preimage_lattice(g: &ZMat, rels: &ZMat) -> ZMat {
    assert_eq!(g.rows, rels.rows, "preimage shape");
    let aug = g.hstack(rels);
    let k = kernel_basis(&aug);
    let proj = k.select_rows(&(0..g.cols).collect::<Vec<_>>());
    lattice_basis(&proj)
}

/// Homology `ker(d_out) / im(d_in)` of an integer complex at a given spot.
/// `d_out : C_n → C_{n-1}`, `d_in : C_{n+1} → C_n`. Returns
/// `(free_rank, invariant factors)`.
pub fn homology_z(d_out: &ZMat, d_in: &ZMat) -> (usize, Vec<BigInt>) {
    assert_eq!(d_out.cols, d_in.rows, "complex shape");
    let k = kernel_basis(d_out);
    if k.cols == 0 {
        return (0, Vec::new());
    }
    let coords = solve_z(&k, d_in).expect("boundary image must lie in the kernel");
    quotient_invariants(k.cols, &coords)
}

/// Homology at a presented spot: `ker(g)/im(f)` where the target of `g` is
/// `ℤ^c / colspan(rels_c)` and the middle module is `ℤ^b / colspan(rels_b)`.
/// All boundary columns and relations must be compatible (`g·f ∈ rels_c`,
/// `g·rels_b ⊆ rels_c`), which holds for genuine complexes.
pub fn homology_presented(
    g: &ZMat,
    rels_c: &ZMat,
    f: &ZMat,
    rels_b: &ZMat,
) -> (usize, Vec<BigInt>) {
    assert_eq!(g.cols, f.rows, "complex shape");
    if g.cols == 0 {
        return (0, Vec::new());
    }
    let k = if rels_c.cols == 0 {
        kernel_basis(g)
    } else {
        preimage_lattice(g, rels_c)
    };
    if k.cols == 0 {
        return (0, Vec::new());
    }
    let bd = f.hstack(rels_b);
    let coords = solve_z(&k, &bd).expect("boundaries lie in the kernel lattice");
    quotient_invariants(k.cols, &coords)
}

/// Homology of a ℤ/m complex given integer lifts of the boundary maps.
/// Returns the invariant factors of the (finite) homology group; callers
/// split off the factors equal to m as the free ℤ/m-rank.
pub fn homology_zmod(modulus: u64, d_out: &ZMat, d_in: &ZMat) -> Vec<BigInt> {
    assert_eq!(d_out.cols, d_in.rows, "complex shape");
    let m = BigInt::from(modulus);
    let r = d_out.cols;
    if r == 0 {
        return Vec::new();
    }
    let k = congruence_kernel(d_out, &m); // full rank r
    let mi = Matrix::from_fn(r, r, |i, j| if i == j { m.clone() } else { BigInt::zero() });
    let bd = d_in.hstack(&mi);
    let coords = solve_z(&k, &bd).expect("boundaries lie in the congruence kernel");
    let (free, tors) = quotient_invariants(k.cols, &coords);
    assert_eq!(free, 0, "Z/m homology is finite");
    tors
}
