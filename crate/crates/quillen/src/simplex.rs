//! The simplex category: order-preserving maps `[n] → [m]`, their
//! generators (cofaces δ_i and codegeneracies σ_i), epi-mono factorization,
//! and enumeration of surjections.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// An order-preserving map `[n] → [m]`, stored by its value list of length
/// n+1 with entries in 0..=m.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexMap {
    pub target_dim: usize,
    pub values: Vec<usize>,
}

impl SimplexMap {
    pub fn new(target_dim: usize, values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::ShapeMismatch("empty simplex map".into()));
        }
        for w in values.windows(2) {
            if w[0] > w[1] {
                return Err(Error::ShapeMismatch("values must not reverse order".into()));
            }
        }
        if let Some(&last) = values.iter().max() {
            if last > target_dim {
                return Err(Error::ShapeMismatch("value exceeds target".into()));
            }
        }
        Ok(SimplexMap { target_dim, values })
    }

    pub fn identity(n: usize) -> Self {
        SimplexMap {
            target_dim: n,
            values: (0..=n).collect(),
        }
    }

    /// δ_i : [n] → [n+1], skipping the value i.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(i <= n + 1);
        SimplexMap {
            target_dim: n + 1,
            values: (0..=n).map(|j| if j < i { j } else { j + 1 }).collect(),
        }
    }

    /// σ_i : [n+1] → [n], doubling up on i.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n);
        SimplexMap {
            target_dim: n,
            values: (0..=n + 1)
                .map(|j| if j <= i { j } else { j - 1 })
                .collect(),
        }
    }

    pub fn source_dim(&self) -> usize {
        self.values.len() - 1
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &SimplexMap) -> SimplexMap {
        assert_eq!(
            other.target_dim,
            self.source_dim(),
            "composition dimension mismatch"
        );
        SimplexMap {
            target_dim: self.target_dim,
            values: other.values.iter().map(|&v| self.values[v]).collect(),
        }
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target_dim + 1];
        for &v in &self.values {
            hit[v] = true;
        }
        hit.into_iter().all(|b| b)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    /// Unique epi-mono factorization `self = mono ∘ epi`.
    pub fn factorize(&self) -> (SimplexMap, SimplexMap) {
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let k = image.len() - 1;
        let epi_values: Vec<usize> = self
            .values
            .iter()
            .map(|v| image.iter().position(|w| w == v).unwrap())
            .collect();
        let epi = SimplexMap {
            target_dim: k,
            values: epi_values,
        };
        let mono = SimplexMap {
            target_dim: self.target_dim,
            values: image,
        };
        (epi, mono)
    }

    /// Express the map as codegeneracy indices followed by coface indices:
    /// `self = δ_{i_1}∘…∘δ_{i_r}∘σ_{j_1}∘…∘σ_{j_s}` with i_1 > … > i_r and
    /// j_1 < … < j_s (the canonical generator decomposition). The σ indices
    /// are the positions where the value repeats, the δ indices the values
    /// missing from the image.
    pub fn generator_decomposition(&self) -> (Vec<usize>, Vec<usize>) {
        let (epi, mono) = self.factorize();
        let doubled: Vec<usize> = (0..epi.values.len() - 1)
            .filter(|&j| epi.values[j] == epi.values[j + 1])
            .collect();
        let mut present = vec![false; self.target_dim + 1];
        for &v in &mono.values {
            present[v] = true;
        }
        let skipped: Vec<usize> = (0..=self.target_dim)
            .rev()
            .filter(|&v| !present[v])
            .collect();
        (doubled, skipped)
    }
}

/// All order-preserving surjections `[n] ↠ [k]`, in lexicographic order of
/// their value sequences. There are C(n, k) of them.
pub fn surjections(n: usize, k: usize) -> Vec<SimplexMap> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    // a surjection is determined by the set of k ascent positions among n steps
    fn rec(values: &mut Vec<usize>, n: usize, k: usize, out: &mut Vec<SimplexMap>) {
        if values.len() == n + 1 {
            if values[n] == k {
                out.push(SimplexMap {
                    target_dim: k,
                    values: values.clone(),
                });
            }
            return;
        }
        let last = *values.last().unwrap();
        // stay
        if last + (n - values.len() + 1) >= k {
            values.push(last);
            rec(values, n, k, out);
            values.pop();
        }
        // ascend
        if last < k {
            values.push(last + 1);
            rec(values, n, k, out);
            values.pop();
        }
    }
    let mut values = vec![0];
    rec(&mut values, n, k, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_identity_and_codegeneracy() {
        let id = SimplexMap::identity(2);
        let (e, m) = id.factorize();
        assert_eq!(e, SimplexMap::identity(2));
        assert_eq!(m, SimplexMap::identity(2));
        let s0 = SimplexMap::codegeneracy(0, 0); // [1] -> [0]
        let (e, m) = s0.factorize();
        assert_eq!(e, s0);
        assert_eq!(m, SimplexMap::identity(0));
    }

    #[test]
    fn factorize_mixed_map() {
        // [2] -> [2], values (0,0,2): epi = σ_0 : [2]→[1], mono = δ_1-skip:
        // image {0,2} so the mono is [1]→[2] hitting 0,2
        let f = SimplexMap::new(2, vec![0, 0, 2]).unwrap();
        let (e, m) = f.factorize();
        assert_eq!(e.values, vec![0, 0, 1]);
        assert_eq!(m.values, vec![0, 2]);
        assert_eq!(m.compose(&e), f);
        // re-factorizing the recomposition reproduces the same pair
        let (e2, m2) = m.compose(&e).factorize();
        assert_eq!((e2, m2), (e, m));
    }

    #[test]
    fn composition_identities() {
        // d_i d_j = d_{j-1} d_i for i < j, on cofaces (contravariant check
        // done in the simplicial module layer; here δ_j ∘ δ_i = δ_i ∘ δ_{j-1})
        for n in 0..3usize {
            for j in 0..=(n + 1) {
                for i in 0..j {
                    let lhs = SimplexMap::coface(n + 1, j).compose(&SimplexMap::coface(n, i));
                    let rhs = SimplexMap::coface(n + 1, i).compose(&SimplexMap::coface(n, j - 1));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn surjection_counts() {
        // #Surj([n] ↠ [k]) = C(n, k)
        let binom = |n: usize, k: usize| -> usize {
            let mut c = 1usize;
            for i in 0..k {
                c = c * (n - i) / (i + 1);
            }
            c
        };
        for n in 0..6usize {
            for k in 0..=n {
                assert_eq!(surjections(n, k).len(), binom(n, k), "n={n} k={k}");
            }
        }
        // lexicographic order
        let s = surjections(2, 1);
        assert_eq!(s[0].values, vec![0, 0, 1]);
        assert_eq!(s[1].values, vec![0, 1, 1]);
    }

    #[test]
    fn generator_decomposition_recomposes() {
        for f in [
            SimplexMap::new(3, vec![0, 0, 2, 2]).unwrap(),
            SimplexMap::new(2, vec![0, 0, 2]).unwrap(),
            SimplexMap::new(4, vec![1, 1, 1, 3, 4]).unwrap(),
            SimplexMap::identity(3),
        ] {
            let (sig, del) = f.generator_decomposition();
            let n = f.source_dim();
            // σ_{j_s} applies first: fold right to left
            let mut acc = SimplexMap::identity(n);
            for &j in sig.iter().rev() {
                let next = SimplexMap::codegeneracy(acc.target_dim - 1, j);
                acc = next.compose(&acc);
            }
            // then δ_{i_r} (smallest) up to δ_{i_1}
            for &i in del.iter().rev() {
                let next = SimplexMap::coface(acc.target_dim, i);
                acc = next.compose(&acc);
            }
            assert_eq!(acc, f);
        }
    }
}
