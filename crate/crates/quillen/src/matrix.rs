//! Dense matrices and exact linear algebra over fields.
//!
//! `Matrix<T>` is a plain row-major container used with [`Scalar`],
//! [`num_bigint::BigInt`] and polynomial entries. Field algorithms (rref,
//! rank, nullspace, solve) take the [`CoefficientRing`] explicitly and
//! require it to be ℚ or 𝔽_p; integer and ℤ/m linear algebra lives in
//! [`crate::snf`].
//!
//! Convention: a matrix represents a map by multiplication on column
//! vectors, so a map V → W has `rows = dim W`, `cols = dim V`.

use alloc::vec;
use alloc::vec::Vec;

use crate::ring::{CoefficientRing, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, v: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![v; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack col mismatch");
        Matrix::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.at(i, j).clone()
            } else {
                other.at(i - self.rows, j).clone()
            }
        })
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self.at(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self.at(idx[i], j).clone())
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|t| f(t)).collect(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }
}

pub type SMat = Matrix<Scalar>;

impl SMat {
    pub fn zeros(ring: &CoefficientRing, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, ring.zero())
    }

    pub fn identity(ring: &CoefficientRing, n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn from_i64(ring: &CoefficientRing, rows: &[&[i64]]) -> Self {
        Matrix::from_fn(
            rows.len(),
            rows.first().map(|r| r.len()).unwrap_or(0),
            |i, j| ring.from_i64(rows[i][j]),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    pub fn mul(&self, ring: &CoefficientRing, other: &SMat) -> SMat {
        assert_eq!(self.cols, other.rows, "matmul shape");
        let mut out = SMat::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = ring.add(out.at(i, j), &ring.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, ring: &CoefficientRing, other: &SMat) -> SMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            ring.add(self.at(i, j), other.at(i, j))
        })
    }

    pub fn sub(&self, ring: &CoefficientRing, other: &SMat) -> SMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            ring.sub(self.at(i, j), other.at(i, j))
        })
    }

    pub fn scale(&self, ring: &CoefficientRing, c: &Scalar) -> SMat {
        self.map(|v| ring.mul(v, c))
    }

    pub fn neg(&self, ring: &CoefficientRing) -> SMat {
        self.map(|v| ring.neg(v))
    }
}

/// Reduced row echelon form in place; returns pivot columns.
///
/// Requires field coefficients. Deterministic: pivots are chosen as the
/// first nonzero entry scanning down each column left to right.
pub fn rref(ring: &CoefficientRing, m: &mut SMat) -> Vec<usize> {
    assert!(ring.is_field(), "rref needs field coefficients");
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r >= m.rows {
            break;
        }
        let mut piv = None;
        for i in r..m.rows {
            if !m.at(i, c).is_zero() {
                piv = Some(i);
                break;
            }
        }
        let Some(p) = piv else { continue };
        // swap rows p, r
        if p != r {
            for j in 0..m.cols {
                let a = m.at(r, j).clone();
                let b = m.at(p, j).clone();
                m.set(r, j, b);
                m.set(p, j, a);
            }
        }
        let inv = ring.inv(m.at(r, c)).expect("field inverse");
        for j in 0..m.cols {
            let v = ring.mul(m.at(r, j), &inv);
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i == r || m.at(i, c).is_zero() {
                continue;
            }
            let f = m.at(i, c).clone();
            for j in 0..m.cols {
                let v = ring.sub(m.at(i, j), &ring.mul(&f, m.at(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(ring: &CoefficientRing, m: &SMat) -> usize {
    let mut c = m.clone();
    rref(ring, &mut c).len()
}

/// Canonical nullspace basis (one column per free column of the rref).
pub fn nullspace(ring: &CoefficientRing, m: &SMat) -> SMat {
    let mut red = m.clone();
    let pivots = rref(ring, &mut red);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..m.cols).filter(|j| !is_pivot[*j]).collect();
    let mut out = SMat::zeros(ring, m.cols, free.len());
    for (k, &fc) in free.iter().enumerate() {
        out.set(fc, k, ring.one());
        for (rr, &pc) in pivots.iter().enumerate() {
            let v = ring.neg(red.at(rr, fc));
            out.set(pc, k, v);
        }
    }
    out
}

/// Solve `A x = b` column by column; `None` when any column is unsolvable.
pub fn solve(ring: &CoefficientRing, a: &SMat, b: &SMat) -> Option<SMat> {
    assert_eq!(a.rows, b.rows, "solve shape");
    let mut aug = a.hstack(b);
    let pivots = rref(ring, &mut aug);
    if pivots.iter().any(|&p| p >= a.cols) {
        return None; // inconsistent system
    }
    let mut x = SMat::zeros(ring, a.cols, b.cols);
    for (r, &p) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            x.set(p, j, aug.at(r, a.cols + j).clone());
        }
    }
    Some(x)
}

/// Column-space basis: the pivot columns of the original matrix.
pub fn image_basis(ring: &CoefficientRing, m: &SMat) -> SMat {
    let mut red = m.clone();
    let pivots = rref(ring, &mut red);
    m.select_cols(&pivots)
}
