//! Semisimplicity via the trace form, and dimensions of simple blocks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalars::modp::{inv_mod, is_prime, rank_mod, rational_mod};
use crate::scalars::{format_rational, Field, Rational};

use super::dual::dual;
use super::two_algebra::TwoAlgebra;
use super::verdict::{Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Algebra,
    Coalgebra,
}

/// Gram matrix of `(x, y) ↦ tr(L_x L_y)`, computed as `tr(L_{x_i x_j})`.
pub fn trace_form(a: &TwoAlgebra) -> Vec<Vec<Rational>> {
    let n = a.dim;
    let traces: Vec<Rational> = (0..n).map(|l| (0..n).map(|m| a.mult.get(l, m, m)).sum()).collect();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| a.mult.slice_ij(i, j).iter().map(|(k, c)| c * &traces[*k]).sum())
                .collect()
        })
        .collect()
}

pub fn is_semisimple(a: &TwoAlgebra, side: Side) -> Result<Verdict> {
    a.check_dims()?;
    let target = match side {
        Side::Algebra => a.clone(),
        Side::Coalgebra => dual(a)?,
    };
    let check = match side {
        Side::Algebra => "is_semisimple(algebra)",
        Side::Coalgebra => "is_semisimple(coalgebra)",
    };
    let b = trace_form(&target);
    let kernel = linalg::nullspace(&b, a.dim);
    match kernel.first() {
        None => Ok(Verdict::holds(check, format!("trace form has full rank {}", a.dim))),
        Some(v) => {
            let idx: Vec<usize> = (0..a.dim).filter(|&i| !v[i].is_zero()).collect();
            let vals = idx.iter().map(|&i| format_rational(&v[i])).collect();
            Ok(Verdict::fails(
                check,
                Witness::new(idx, vals, format!("trace form is degenerate (rank {}); kernel vector given", a.dim - kernel.len())),
            ))
        }
    }
}

/// Basis of the center, as coefficient vectors.
pub fn center_basis(a: &TwoAlgebra) -> Vec<Vec<Rational>> {
    let n = a.dim;
    let mut rows = Vec::new();
    for i in 0..n {
        for k in 0..n {
            let row: Vec<Rational> = (0..n).map(|z| a.mult.get(z, i, k) - a.mult.get(i, z, k)).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return linalg::identity(n);
    }
    linalg::nullspace(&rows, n)
}

struct ModP {
    p: u64,
    n: usize,
    mult: Vec<(usize, usize, usize, u64)>,
    by_ij: Vec<Vec<(usize, u64)>>,
}

impl ModP {
    fn new(a: &TwoAlgebra, p: u64) -> Option<Self> {
        let n = a.dim;
        let mut mult = Vec::with_capacity(a.mult.nnz());
        let mut by_ij = vec![Vec::new(); n * n];
        for (i, j, k, c) in a.mult.entries() {
            let v = rational_mod(c, p)?;
            mult.push((*i, *j, *k, v));
            by_ij[i * n + j].push((*k, v));
        }
        Some(ModP { p, n, mult, by_ij })
    }

    fn product(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let p = self.p as u128;
        let mut out = vec![0u64; self.n];
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if *yj == 0 {
                    continue;
                }
                let s = *xi as u128 * *yj as u128 % p;
                for (k, c) in &self.by_ij[i * self.n + j] {
                    out[*k] = ((out[*k] as u128 + s * *c as u128) % p) as u64;
                }
            }
        }
        out
    }

    fn axpy(&self, a: u64, x: &[u64], y: &[u64]) -> Vec<u64> {
        let p = self.p as u128;
        x.iter().zip(y).map(|(xi, yi)| ((a as u128 * *xi as u128 + *yi as u128) % p) as u64).collect()
    }
}

/// Dimensions `d_i²` of the simple blocks of a semisimple algebra.
///
/// The center is split over a prime field F_p chosen so that the reduction
/// stays semisimple with a center of the same dimension that splits into
/// distinct eigenvalues; each block dimension is then the rank of `e·A`
/// for the corresponding central primitive idempotent `e`.
pub fn wedderburn_dims(a: &TwoAlgebra) -> Result<Vec<usize>> {
    let n = a.dim;
    let v = is_semisimple(a, Side::Algebra)?;
    if !v.is_holds() {
        return Err(Error::InvalidArgument("wedderburn_dims needs a semisimple algebra".into()));
    }
    let z = center_basis(a);
    let r = z.len();
    let gram = trace_form(a);
    let mut seed: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = move || {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        seed
    };
    'primes: for p in (3u64..20000).filter(|&p| is_prime(p)) {
        let Some(mp) = ModP::new(a, p) else { continue };
        let Some(zp) = z.iter().map(|v| v.iter().map(|x| rational_mod(x, p)).collect::<Option<Vec<u64>>>()).collect::<Option<Vec<_>>>() else { continue };
        let Some(unit) = a.unit.iter().map(|x| rational_mod(x, p)).collect::<Option<Vec<u64>>>() else { continue };
        let Some(gp) = gram.iter().map(|row| row.iter().map(|x| rational_mod(x, p)).collect::<Option<Vec<u64>>>()).collect::<Option<Vec<_>>>() else { continue };
        if rank_mod(&gp, p) != n || rank_mod(&zp, p) != r {
            continue;
        }
        // Row (j, k) holds the coefficients of (z·x_j − x_j·z)_k.
        let mut center_rows = vec![vec![0u64; n]; n * n];
        for (i, j, k, c) in &mp.mult {
            center_rows[j * n + k][*i] = (center_rows[j * n + k][*i] + c) % p;
            center_rows[i * n + k][*j] = (center_rows[i * n + k][*j] + p - c) % p;
        }
        if n - rank_mod(&center_rows, p) != r {
            continue;
        }
        for _ in 0..24 {
            let coeffs: Vec<u64> = (0..r).map(|_| next() % p).collect();
            let mut elt = vec![0u64; n];
            for (c, zv) in coeffs.iter().zip(&zp) {
                elt = mp.axpy(*c, zv, &elt);
            }
            // Matrix of multiplication by elt on the center, in z-coordinates.
            let images: Vec<Vec<u64>> = zp.iter().map(|zv| mp.product(&elt, zv)).collect();
            let Some(lz) = coords_mod(&zp, &images, p) else { continue 'primes };
            let mut roots = Vec::new();
            for t in 0..p {
                let shifted: Vec<Vec<u64>> = (0..r)
                    .map(|i| (0..r).map(|j| if i == j { (lz[i][j] + p - t) % p } else { lz[i][j] }).collect())
                    .collect();
                let nullity = r - rank_mod(&shifted, p);
                if nullity > 1 {
                    break;
                }
                if nullity == 1 {
                    roots.push(t);
                }
            }
            if roots.len() != r {
                continue;
            }
            let mut dims = Vec::with_capacity(r);
            for &t in &roots {
                let mut e = unit.clone();
                for &s in roots.iter().filter(|&&s| s != t) {
                    let denom = inv_mod((t + p - s) % p, p).unwrap();
                    let shifted = mp.axpy(p - s, &unit, &elt);
                    let prod = mp.product(&e, &shifted);
                    e = prod.iter().map(|x| (*x as u128 * denom as u128 % p as u128) as u64).collect();
                }
                let cols: Vec<Vec<u64>> = (0..n)
                    .map(|j| {
                        let mut xj = vec![0u64; n];
                        xj[j] = 1;
                        mp.product(&e, &xj)
                    })
                    .collect();
                dims.push(rank_mod(&cols, p));
            }
            let squares_ok = dims.iter().all(|d| is_square(*d));
            if squares_ok && dims.iter().sum::<usize>() == n {
                dims.sort_unstable_by(|x, y| y.cmp(x));
                return Ok(dims);
            }
            continue 'primes;
        }
    }
    Err(Error::Split("center did not split over any prime field tried".into()))
}

fn is_square(d: usize) -> bool {
    let s = (d as f64).sqrt().round() as usize;
    s * s == d
}

/// Coordinates of each image in the basis `basis` over F_p, as a matrix whose
/// column j holds the coordinates of `images[j]`.
fn coords_mod(basis: &[Vec<u64>], images: &[Vec<u64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let r = basis.len();
    let n = basis.first().map_or(0, |b| b.len());
    let mut out = vec![vec![0u64; r]; r];
    for (j, img) in images.iter().enumerate() {
        let mut aug: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row: Vec<u64> = basis.iter().map(|b| b[i]).collect();
                row.push(img[i]);
                row
            })
            .collect();
        let piv = crate::scalars::modp::rref_mod(&mut aug, p);
        if piv.contains(&r) {
            return None;
        }
        for (row, &c) in piv.iter().enumerate() {
            out[c][j] = aug[row][r];
        }
    }
    Some(out)
}

