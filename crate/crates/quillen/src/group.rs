//! Finite groups by multiplication table: construction (cyclic products,
//! symmetric groups, PGL₂ over a prime field), validation, subgroups, and
//! coset bookkeeping.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub const GROUP_ORDER_CAP: usize = 400;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupData {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub id: usize,
}

impl FiniteGroupData {
    /// Validate and adopt a multiplication table.
    pub fn from_table(mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        if n == 0 || n > GROUP_ORDER_CAP {
            return Err(Error::ScaleCap(alloc::format!(
                "group order {n} outside 1..={GROUP_ORDER_CAP}"
            )));
        }
        for row in &mul {
            if row.len() != n || row.iter().any(|&v| v >= n) {
                return Err(Error::ShapeMismatch(
                    "malformed multiplication table".into(),
                ));
            }
        }
        // identity
        let mut id = None;
        for e in 0..n {
            if (0..n).all(|g| mul[e][g] == g && mul[g][e] == g) {
                id = Some(e);
                break;
            }
        }
        let id = id.ok_or_else(|| Error::ShapeMismatch("no identity element".into()))?;
        // inverses
        let mut inv = vec![usize::MAX; n];
        for g in 0..n {
            match (0..n).find(|&h| mul[g][h] == id && mul[h][g] == id) {
                Some(h) => inv[g] = h,
                None => return Err(Error::ShapeMismatch("missing inverse".into())),
            }
        }
        // associativity
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::ShapeMismatch("non-associative table".into()));
                    }
                }
            }
        }
        Ok(FiniteGroupData {
            order: n,
            mul,
            inv,
            id,
        })
    }

    /// Product of cyclic groups with the given moduli (abelian groups by
    /// invariant factors); elements are mixed-radix tuples.
    pub fn abelian(factors: &[u64]) -> Result<Self> {
        let order: u64 = factors.iter().product();
        if order as usize > GROUP_ORDER_CAP || order == 0 {
            return Err(Error::ScaleCap(alloc::format!(
                "abelian group of order {order}"
            )));
        }
        let n = order as usize;
        let k = factors.len();
        let decode = |mut idx: usize| -> Vec<u64> {
            let mut t = vec![0u64; k];
            for (i, &f) in factors.iter().enumerate() {
                t[i] = (idx % f as usize) as u64;
                idx /= f as usize;
            }
            t
        };
        let encode = |t: &[u64]| -> usize {
            let mut idx = 0usize;
            for i in (0..k).rev() {
                idx = idx * factors[i] as usize + t[i] as usize;
            }
            idx
        };
        let mut mul = vec![vec![0usize; n]; n];
        for a in 0..n {
            let ta = decode(a);
            for b in 0..n {
                let tb = decode(b);
                let tc: Vec<u64> = ta
                    .iter()
                    .zip(&tb)
                    .zip(factors)
                    .map(|((x, y), f)| (x + y) % f)
                    .collect();
                mul[a][b] = encode(&tc);
            }
        }
        Self::from_table(mul)
    }

    pub fn cyclic(m: u64) -> Result<Self> {
        Self::abelian(&[m])
    }

    /// Symmetric group S_n (n ≤ 5), elements = permutations in
    /// lexicographic order, composition `(στ)(x) = σ(τ(x))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 5 {
            return Err(Error::ScaleCap("symmetric groups up to S_5".into()));
        }
        let perms = permutations(n);
        let idx = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let m = perms.len();
        let mut mul = vec![vec![0usize; m]; m];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                let comp: Vec<usize> = (0..n).map(|x| pa[pb[x]]).collect();
                mul[a][b] = idx(&comp);
            }
        }
        Self::from_table(mul)
    }

    /// Automorphism g ↦ g⁻¹ is a homomorphism only for abelian groups; it
    /// is the rank-one Weyl action on a torus.
    pub fn inversion_map(&self) -> Vec<usize> {
        self.inv.clone()
    }

    /// Check a subset is a subgroup; return it sorted.
    pub fn subgroup(&self, elems: &[usize]) -> Result<Vec<usize>> {
        let mut k: Vec<usize> = elems.to_vec();
        k.sort();
        k.dedup();
        if !k.contains(&self.id) {
            return Err(Error::ShapeMismatch("subgroup misses the identity".into()));
        }
        for &a in &k {
            if a >= self.order || !k.contains(&self.inv[a]) {
                return Err(Error::ShapeMismatch(
                    "subgroup not closed under inverse".into(),
                ));
            }
            for &b in &k {
                if !k.contains(&self.mul[a][b]) {
                    return Err(Error::ShapeMismatch("subgroup not closed".into()));
                }
            }
        }
        Ok(k)
    }

    /// Left cosets gK: list of (sorted member list, canonical
    /// representative = smallest member), cosets ordered by representative.
    pub fn left_cosets(&self, k: &[usize]) -> Vec<(usize, Vec<usize>)> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for g in 0..self.order {
            if seen[g] {
                continue;
            }
            let mut coset: Vec<usize> = k.iter().map(|&h| self.mul[g][h]).collect();
            coset.sort();
            coset.dedup();
            for &c in &coset {
                seen[c] = true;
            }
            out.push((coset[0], coset));
        }
        out.sort();
        out
    }

    /// Double cosets KgK, ordered by canonical representative.
    pub fn double_cosets(&self, k: &[usize]) -> Vec<(usize, Vec<usize>)> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for g in 0..self.order {
            if seen[g] {
                continue;
            }
            let mut dc = Vec::new();
            for &a in k {
                for &b in k {
                    dc.push(self.mul[self.mul[a][g]][b]);
                }
            }
            dc.sort();
            dc.dedup();
            for &c in &dc {
                seen[c] = true;
            }
            out.push((dc[0], dc));
        }
        out.sort();
        out
    }

    /// The subgroup as its own group plus the embedding into the ambient
    /// element indices.
    pub fn subgroup_data(&self, elems: &[usize]) -> Result<(FiniteGroupData, Vec<usize>)> {
        let k = self.subgroup(elems)?;
        let pos = |g: usize| k.iter().position(|&x| x == g).unwrap();
        let m = k.len();
        let mut mul = vec![vec![0usize; m]; m];
        for (i, &a) in k.iter().enumerate() {
            for (j, &b) in k.iter().enumerate() {
                mul[i][j] = pos(self.mul[a][b]);
            }
        }
        Ok((Self::from_table(mul)?, k))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(cur, k + 1, out);
            cur.swap(k, i);
        }
    }
    rec(&mut cur, 0, &mut out);
    out.sort();
    out
}

/// PGL₂(𝔽_q) for prime q: elements are invertible 2×2 matrices modulo
/// scalars, normalized so that the first nonzero entry (row-major) is 1.
/// Returns the group plus the diagonal torus diag(a,1), a ∈ 𝔽_q^×, as
/// element indices in torus-generator order (powers of the smallest
/// primitive root).
pub fn pgl2(q: u64) -> Result<(FiniteGroupData, Vec<usize>)> {
    if !crate::ring::CoefficientRing::prime_field(q).is_ok() {
        return Err(Error::BadParameters(alloc::format!("{q} is not prime")));
    }
    let n = (q * q * q - q) as usize;
    if n > GROUP_ORDER_CAP {
        return Err(Error::ScaleCap(alloc::format!("|PGL2({q})| = {n}")));
    }
    let qq = q;
    let normalize = |m: [u64; 4]| -> [u64; 4] {
        let lead = m.iter().find(|&&x| x != 0).copied().unwrap();
        let inv = {
            // inverse mod q
            let mut t = 1u64;
            for c in 1..qq {
                if lead * c % qq == 1 {
                    t = c;
                    break;
                }
            }
            t
        };
        [
            m[0] * inv % qq,
            m[1] * inv % qq,
            m[2] * inv % qq,
            m[3] * inv % qq,
        ]
    };
    let mut elems: Vec<[u64; 4]> = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let det = (a * d + q * q - b * c % (q * q)) % q;
                    if det % q == 0 {
                        continue;
                    }
                    let m = normalize([a, b, c, d]);
                    if !elems.contains(&m) {
                        elems.push(m);
                    }
                }
            }
        }
    }
    elems.sort();
    assert_eq!(elems.len(), n, "PGL2 element count");
    let index = |m: [u64; 4]| elems.binary_search(&m).unwrap();
    let mut mul = vec![vec![0usize; n]; n];
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            let prod = [
                (x[0] * y[0] + x[1] * y[2]) % q,
                (x[0] * y[1] + x[1] * y[3]) % q,
                (x[2] * y[0] + x[3] * y[2]) % q,
                (x[2] * y[1] + x[3] * y[3]) % q,
            ];
            mul[i][j] = index(normalize(prod));
        }
    }
    let g = FiniteGroupData::from_table(mul)?;
    // primitive root mod q
    let mut root = 0;
    for cand in 2..q {
        let mut pow = 1u64;
        let mut ord = 0;
        for _ in 1..q {
            pow = pow * cand % q;
            ord += 1;
            if pow == 1 {
                break;
            }
        }
        if ord == q - 1 {
            root = cand;
            break;
        }
    }
    let mut torus = Vec::new();
    let mut a = 1u64;
    for _ in 0..(q - 1) {
        torus.push(index(normalize([a, 0, 0, 1])));
        a = a * root % q;
    }
    Ok((g, torus))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group() {
        let g = FiniteGroupData::cyclic(6).unwrap();
        assert_eq!(g.order, 6);
        assert_eq!(g.mul[2][5], 1);
        assert_eq!(g.inv[1], 5);
    }

    #[test]
    fn symmetric_s3() {
        let g = FiniteGroupData::symmetric(3).unwrap();
        assert_eq!(g.order, 6);
        // S_2 embeds as the permutations fixing 2
        let perms = permutations(3);
        let s2: Vec<usize> = perms
            .iter()
            .enumerate()
            .filter(|(_, p)| p[2] == 2)
            .map(|(i, _)| i)
            .collect();
        let k = g.subgroup(&s2).unwrap();
        assert_eq!(k.len(), 2);
        assert_eq!(g.left_cosets(&k).len(), 3);
        assert_eq!(g.double_cosets(&k).len(), 2);
    }

    #[test]
    fn pgl2_7() {
        let (g, torus) = pgl2(7).unwrap();
        assert_eq!(g.order, 336);
        assert_eq!(torus.len(), 6);
        let t = g.subgroup(&torus).unwrap();
        assert_eq!(t.len(), 6);
        // torus is cyclic of order 6: generator powers enumerate it
        let (tg, _) = g.subgroup_data(&torus).unwrap();
        assert_eq!(tg.order, 6);
    }

    #[test]
    fn bad_tables_rejected() {
        // 2-element "table" with wrong inverse structure
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroupData::from_table(bad).is_err());
    }
}
