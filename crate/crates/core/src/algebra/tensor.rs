//! Sparse rank-3 structure tensors.
//!
//! An entry `(i, j, k, v)` of a multiplication tensor reads
//! `x_i · x_j = Σ_k v x_k`; of a comultiplication tensor,
//! `Δx_i = Σ_{j,k} v x_j ⊗ x_k`. The tensor keeps two lookup views so both
//! readings are cheap.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalars::{Field, Rational};

#[derive(Clone, Debug)]
pub struct SparseTensor<S> {
    dim: usize,
    entries: Vec<(usize, usize, usize, S)>,
    by_ij: Vec<Vec<(usize, S)>>,
    by_i: Vec<Vec<(usize, usize, S)>>,
}

pub type StructureTensor = SparseTensor<Rational>;

impl<S: Field> SparseTensor<S> {
    /// Rejects out-of-range indices and duplicate keys; drops explicit zeros.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, S)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, j, k, v) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "tensor index ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            if map.insert((i, j, k), v).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate tensor key ({i},{j},{k})")));
            }
        }
        Ok(Self::from_map(dim, map))
    }

    /// Builds from a key map, dropping zeros.
    pub fn from_map(dim: usize, map: BTreeMap<(usize, usize, usize), S>) -> Self {
        let entries: Vec<_> = map
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|((i, j, k), v)| (i, j, k, v))
            .collect();
        let mut by_ij = vec![Vec::new(); dim * dim];
        let mut by_i = vec![Vec::new(); dim];
        for (i, j, k, v) in &entries {
            by_ij[i * dim + j].push((*k, v.clone()));
            by_i[*i].push((*j, *k, v.clone()));
        }
        SparseTensor { dim, entries, by_ij, by_i }
    }

    /// Accumulates duplicate keys by addition.
    pub fn from_sum(dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, S)>) -> Self {
        let mut map: BTreeMap<(usize, usize, usize), S> = BTreeMap::new();
        for (i, j, k, v) in entries {
            let e = map.entry((i, j, k)).or_insert_with(S::zero);
            *e = e.add(&v);
        }
        Self::from_map(dim, map)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entries in (i, j, k) order.
    pub fn entries(&self) -> &[(usize, usize, usize, S)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Entries with the first two indices fixed, as (k, value).
    pub fn slice_ij(&self, i: usize, j: usize) -> &[(usize, S)] {
        &self.by_ij[i * self.dim + j]
    }

    /// Entries with the first index fixed, as (j, k, value).
    pub fn slice_i(&self, i: usize) -> &[(usize, usize, S)] {
        &self.by_i[i]
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> S {
        self.slice_ij(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(S::zero)
    }

    /// Reindexes each entry through `f`.
    pub fn permute_indices(&self, f: impl Fn(usize, usize, usize) -> (usize, usize, usize)) -> Self {
        let map = self
            .entries
            .iter()
            .map(|(i, j, k, v)| (f(*i, *j, *k), v.clone()))
            .collect();
        Self::from_map(self.dim, map)
    }
}

impl<S: Field> PartialEq for SparseTensor<S> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.entries == other.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::int;

    #[test]
    fn invariants() {
        assert!(StructureTensor::from_entries(2, vec![(0, 0, 2, int(1))]).is_err());
        assert!(StructureTensor::from_entries(2, vec![(0, 0, 0, int(1)), (0, 0, 0, int(2))]).is_err());
        let t = StructureTensor::from_entries(2, vec![(0, 0, 0, int(1)), (0, 1, 1, int(0))]).unwrap();
        assert_eq!(t.nnz(), 1);
        assert_eq!(t.get(0, 0, 0), int(1));
        assert_eq!(t.get(1, 1, 1), int(0));
        let s = StructureTensor::from_sum(2, vec![(1, 1, 0, int(1)), (1, 1, 0, int(2))]);
        assert_eq!(s.get(1, 1, 0), int(3));
    }
}
