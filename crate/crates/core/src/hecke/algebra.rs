use std::collections::HashMap;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{AntilinearMap, StructureTensor, TwoAlgebra};
use crate::error::{Error, Result};
use crate::scalars::rational::int;
use crate::scalars::{format_rational, parse_rational, Field, Rational};

use super::permutation::Permutation;

/// H_n(q) in the basis τ_g, g ∈ S_n, ordered by (length, one-line notation).
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    pub n: usize,
    pub q: Rational,
    pub basis: Vec<Permutation>,
    pub index: HashMap<Permutation, usize>,
    /// c^k_{ij}: τ_i τ_j = Σ_k c^k_{ij} τ_k.
    pub mult: StructureTensor,
}

impl HeckeAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Product of basis elements as a sparse list (k, c^k_{ij}).
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        self.mult.slice_ij(i, j)
    }
}

pub fn hecke_basis(n: usize) -> Vec<Permutation> {
    let mut b = Permutation::all(n);
    b.sort_by(|x, y| x.length().cmp(&y.length()).then_with(|| x.images().cmp(y.images())));
    b
}

/// Structure constants by the recursion τ_g = τ_i τ_{s_i g} on a left
/// descent, with τ_i τ_w = τ_{s_i w} when the length grows and
/// (q−1)τ_w + q τ_{s_i w} otherwise.
pub fn build_hecke(n: usize, q: &Rational) -> Result<HeckeAlgebra> {
    if !(1..=5).contains(&n) {
        return Err(Error::SizeCap(format!("Hecke algebra needs 1 ≤ n ≤ 5, got {n}")));
    }
    if *q <= int(0) {
        return Err(Error::InvalidArgument("q must be positive".into()));
    }
    let basis = hecke_basis(n);
    let index: HashMap<Permutation, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mult = match load_cached(n, q) {
        Some(t) => t,
        None => {
            let t = compute_constants(n, q, &basis, &index);
            store_cached(n, q, &t);
            t
        }
    };
    Ok(HeckeAlgebra { n, q: q.clone(), basis, index, mult })
}

fn compute_constants(
    n: usize,
    q: &Rational,
    basis: &[Permutation],
    index: &HashMap<Permutation, usize>,
) -> StructureTensor {
    let d = basis.len();
    let simples: Vec<Permutation> = (0..n.saturating_sub(1)).map(|i| Permutation::simple(n, i)).collect();
    let qm1 = q - int(1);
    // Left multiplication of a sparse vector by τ_i.
    let left_simple = |i: usize, v: &HashMap<usize, Rational>| -> HashMap<usize, Rational> {
        let mut out: HashMap<usize, Rational> = HashMap::new();
        for (w, c) in v {
            let sw = simples[i].compose(&basis[*w]);
            let swi = index[&sw];
            if sw.length() > basis[*w].length() {
                *out.entry(swi).or_insert_with(|| int(0)) += c;
            } else {
                *out.entry(*w).or_insert_with(|| int(0)) += c * &qm1;
                *out.entry(swi).or_insert_with(|| int(0)) += c * q;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    };
    let mut rows: Vec<Vec<HashMap<usize, Rational>>> = Vec::with_capacity(d);
    for g in basis {
        let row = if g.length() == 0 {
            (0..d).map(|h| HashMap::from([(h, int(1))])).collect()
        } else {
            let i = (0..n - 1).find(|&i| simples[i].compose(g).length() < g.length()).unwrap();
            let prev = index[&simples[i].compose(g)];
            rows[prev].par_iter().map(|v| left_simple(i, v)).collect()
        };
        rows.push(row);
    }
    let entries = rows
        .into_iter()
        .enumerate()
        .flat_map(|(g, row)| row.into_iter().enumerate().flat_map(move |(h, v)| v.into_iter().map(move |(k, c)| (g, h, k, c))));
    StructureTensor::from_entries(d, entries).expect("indices are in range")
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    n: usize,
    q: String,
    entries: Vec<(usize, usize, usize, String)>,
}

fn cache_path(n: usize, q: &Rational) -> Option<PathBuf> {
    let dir = std::env::var_os("POSALG_CACHE")?;
    let tag = format_rational(q).replace('/', "_").replace('-', "m");
    Some(PathBuf::from(dir).join(format!("hecke_n{n}_q{tag}.json")))
}

fn load_cached(n: usize, q: &Rational) -> Option<StructureTensor> {
    let text = std::fs::read_to_string(cache_path(n, q)?).ok()?;
    let f: CacheFile = serde_json::from_str(&text).ok()?;
    if f.n != n || parse_rational(&f.q).ok()? != *q {
        return None;
    }
    let d: usize = (1..=n).product();
    let entries: Option<Vec<_>> =
        f.entries.into_iter().map(|(i, j, k, c)| parse_rational(&c).ok().map(|c| (i, j, k, c))).collect();
    StructureTensor::from_entries(d, entries?).ok()
}

fn store_cached(n: usize, q: &Rational, t: &StructureTensor) {
    let Some(path) = cache_path(n, q) else { return };
    let f = CacheFile {
        n,
        q: format_rational(q),
        entries: t.entries().iter().map(|(i, j, k, c)| (*i, *j, *k, format_rational(c))).collect(),
    };
    if let Some(parent) = path.parent() {
        let _ = std::fs::create_dir_all(parent);
    }
    if let Ok(text) = serde_json::to_string(&f) {
        let _ = std::fs::write(path, text);
    }
}

/// The stochastic form: basis τ̄_g = q^{−l(g)} τ_g, Δτ̄_g = τ̄_g ⊗ τ̄_g,
/// ε(τ̄_g) = 1, ♯τ̄_g = τ̄_{g⁻¹}, ♭ = conjugation.
pub fn hecke_two_algebra(h: &HeckeAlgebra) -> TwoAlgebra {
    let d = h.dim();
    let qpow = |e: i64| -> Rational {
        let base = if e >= 0 { h.q.clone() } else { h.q.inv().unwrap() };
        (0..e.unsigned_abs()).fold(int(1), |acc, _| acc * &base)
    };
    let len: Vec<i64> = h.basis.iter().map(|p| p.length() as i64).collect();
    let mult = StructureTensor::from_entries(
        d,
        h.mult.entries().iter().map(|(i, j, k, c)| (*i, *j, *k, c * qpow(len[*k] - len[*i] - len[*j]))),
    )
    .unwrap();
    let comult = StructureTensor::from_entries(d, (0..d).map(|i| (i, i, i, int(1)))).unwrap();
    let mut unit = vec![int(0); d];
    unit[0] = int(1);
    let inv: Vec<usize> = h.basis.iter().map(|p| h.index[&p.inverse()]).collect();
    TwoAlgebra {
        dim: d,
        labels: Some(h.basis.iter().map(|p| format!("T{p}")).collect()),
        mult,
        unit,
        comult,
        counit: vec![int(1); d],
        invol: AntilinearMap::from_permutation(&inv),
        coinvol: AntilinearMap::conjugation(d),
        weakened: false,
    }
}

/// H_n(q) in the unnormalized τ basis with Δτ_g = τ_g ⊗ τ_g.
pub fn tau_basis_two_algebra(h: &HeckeAlgebra) -> TwoAlgebra {
    let mut a = hecke_two_algebra(h);
    a.mult = h.mult.clone();
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn quadratic_relation_and_braid() {
        let q = rat(7, 3);
        let h = build_hecke(2, &q).unwrap();
        assert_eq!(h.mult.get(1, 1, 1), &q - int(1));
        assert_eq!(h.mult.get(1, 1, 0), q);
        let h3 = build_hecke(3, &q).unwrap();
        let s1 = h3.index[&Permutation::simple(3, 0)];
        let s2 = h3.index[&Permutation::simple(3, 1)];
        let w0 = h3.index[&Permutation::new(vec![2, 1, 0]).unwrap()];
        let s1s2 = h3.product(s1, s2).to_vec();
        let s2s1 = h3.product(s2, s1).to_vec();
        assert_eq!(s1s2.len(), 1);
        assert_eq!(h3.product(s1s2[0].0, s1), &[(w0, int(1))]);
        assert_eq!(h3.product(s2s1[0].0, s2), &[(w0, int(1))]);
    }
}
