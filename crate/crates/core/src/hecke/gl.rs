//! GL_n(F_p), its Borel subgroup and the Bruhat decomposition.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::scalars::modp::{is_prime, rank_mod};
use crate::semigroup::FiniteMonoid;

use super::permutation::Permutation;

pub const GL_CAP: usize = 10000;

/// Invertible n×n matrices over F_p, stored row-major, with a full
/// multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteFieldGroup {
    pub n: usize,
    pub p: u64,
    pub elements: Vec<Vec<u64>>,
    pub monoid: FiniteMonoid,
}

pub fn gl_order(n: usize, p: u64) -> u128 {
    let pn = (p as u128).pow(n as u32);
    (0..n as u32).map(|k| pn - (p as u128).pow(k)).product()
}

fn mat_mul(a: &[u64], b: &[u64], n: usize, p: u64) -> Vec<u64> {
    let mut c = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] = (c[i * n + j] + aik * b[k * n + j]) % p;
            }
        }
    }
    c
}

fn rows(m: &[u64], n: usize) -> Vec<Vec<u64>> {
    m.chunks(n).map(|r| r.to_vec()).collect()
}

pub fn build_gl(n: usize, p: u64) -> Result<FiniteFieldGroup> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let order = gl_order(n, p);
    if order > GL_CAP as u128 {
        return Err(Error::SizeCap(format!("|GL_{n}(F_{p})| = {order} exceeds {GL_CAP}")));
    }
    let total = (p as u128).pow((n * n) as u32) as u64;
    let mut elements = Vec::new();
    for code in 0..total {
        let mut m = vec![0u64; n * n];
        let mut c = code;
        for x in m.iter_mut().rev() {
            *x = c % p;
            c /= p;
        }
        if rank_mod(&rows(&m, n), p) == n {
            elements.push(m);
        }
    }
    if elements.len() as u128 != order {
        return Err(Error::InvalidArgument(format!("enumerated {} matrices, expected {order}", elements.len())));
    }
    let pos: HashMap<Vec<u64>, usize> = elements.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let table: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| pos[&mat_mul(a, b, n, p)]).collect())
        .collect();
    let labels = elements
        .iter()
        .map(|m| m.chunks(n).map(|r| r.iter().map(|x| x.to_string()).collect::<String>()).collect::<Vec<_>>().join("/"))
        .collect();
    let monoid = FiniteMonoid::new(table, labels)?;
    Ok(FiniteFieldGroup { n, p, elements, monoid })
}

impl FiniteFieldGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn borel(&self) -> Vec<usize> {
        let n = self.n;
        (0..self.order())
            .filter(|&i| (0..n).all(|r| (0..r).all(|c| self.elements[i][r * n + c] == 0)))
            .collect()
    }

    /// Ranks of the bottom-left submatrices (rows r.., columns ..=c); these are
    /// invariant under multiplication by upper triangular matrices on both sides.
    pub fn rank_profile(&self, idx: usize) -> Vec<usize> {
        let n = self.n;
        let m = &self.elements[idx];
        let mut out = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let sub: Vec<Vec<u64>> = (r..n).map(|i| (0..=c).map(|j| m[i * n + j]).collect()).collect();
                out.push(rank_mod(&sub, self.p));
            }
        }
        out
    }

    /// The permutation w whose matrix P_w (P_w e_j = e_{w(j)}) shares the
    /// rank profile of element `idx`.
    pub fn bruhat_cell(&self, idx: usize) -> Permutation {
        let prof = self.rank_profile(idx);
        Permutation::all(self.n)
            .into_iter()
            .find(|w| permutation_rank_profile(w) == prof)
            .expect("every invertible matrix lies in some Bruhat cell")
    }
}

pub fn permutation_rank_profile(w: &Permutation) -> Vec<usize> {
    let n = w.n();
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            out.push((0..=c).filter(|&j| w.apply(j) >= r).count());
        }
    }
    out
}

/// The partition of G into double cosets BgB, computed by orbit closure.
pub fn borel_double_cosets(g: &FiniteFieldGroup) -> Vec<Vec<usize>> {
    let b = g.borel();
    let t = &g.monoid.table;
    let mut block_of = vec![usize::MAX; g.order()];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for x in 0..g.order() {
        if block_of[x] != usize::MAX {
            continue;
        }
        let mut set: Vec<usize> = Vec::new();
        for &l in &b {
            let lx = t[l][x];
            for &r in &b {
                let y = t[lx][r];
                if block_of[y] == usize::MAX {
                    block_of[y] = blocks.len();
                    set.push(y);
                }
            }
        }
        set.sort_unstable();
        blocks.push(set);
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_cells() {
        assert_eq!(build_gl(2, 2).unwrap().order(), 6);
        assert_eq!(build_gl(2, 3).unwrap().order(), 48);
        let g = build_gl(3, 2).unwrap();
        assert_eq!(g.order(), 168);
        let blocks = borel_double_cosets(&g);
        assert_eq!(blocks.len(), 6);
        let mut sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![8, 16, 16, 32, 32, 64]);
        for bl in &blocks {
            let w = g.bruhat_cell(bl[0]);
            assert!(bl.iter().all(|&x| g.bruhat_cell(x) == w));
            assert_eq!(bl.len(), 8 * 2usize.pow(w.length() as u32));
        }
        for (p, small, big) in [(2, 2, 4), (3, 12, 36), (5, 80, 400)] {
            let mut s: Vec<usize> = borel_double_cosets(&build_gl(2, p).unwrap()).iter().map(Vec::len).collect();
            s.sort();
            assert_eq!(s, vec![small, big]);
        }
        assert!(build_gl(3, 3).is_err());
    }
}
