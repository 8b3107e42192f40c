//! Enumeration of stable partitions of a finite inverse semigroup.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::TwoAlgebra;
use crate::error::{Error, Result};
use crate::semigroup::structure::{all_subgroups, automorphisms, unit_group};
use crate::semigroup::{semigroup_bialgebra, InverseSemigroup};

use super::partition::Partition;
use super::stable::{automorphism_orbit_partition, double_coset_partition, is_stable_partition, StablePartitionCert};

/// Exhaustive search runs when `|S| ≤ 12` or the number of partitions with
/// at most `max_blocks` blocks is below this.
pub const EXHAUSTIVE_LIMIT: f64 = 4.0e6;
/// Hard cap on the semigroup size.
pub const SIZE_CAP: usize = 64;
const AUT_CAP: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationMode {
    Exhaustive,
    Structured,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub mode: EnumerationMode,
    pub certs: Vec<StablePartitionCert>,
}

/// Number of set partitions of an `n`-set into at most `k` blocks.
pub fn partitions_up_to(n: usize, k: usize) -> f64 {
    let mut s = vec![vec![0f64; n + 1]; n + 1];
    s[0][0] = 1.0;
    for i in 1..=n {
        for j in 1..=i {
            s[i][j] = j as f64 * s[i - 1][j] + s[i - 1][j - 1];
        }
    }
    (1..=k.min(n)).map(|j| s[n][j]).sum()
}

/// Products, inverses and preimage lists in integer form.
struct Fast {
    n: usize,
    table: Vec<Vec<usize>>,
    inv: Vec<usize>,
    pre: Vec<Vec<(usize, usize)>>,
}

impl Fast {
    fn new(s: &InverseSemigroup) -> Self {
        let n = s.size();
        let mut pre = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                pre[s.mul(a, b)].push((a, b));
            }
        }
        Fast { n, table: s.base.table.clone(), inv: s.inv.clone(), pre }
    }

    /// Products of block sums constant on blocks and ♯ permuting blocks.
    fn is_closed(&self, labels: &[usize], k: usize) -> bool {
        let n = self.n;
        let mut inv_block = vec![usize::MAX; k];
        for x in 0..n {
            let (b, c) = (labels[x], labels[self.inv[x]]);
            if inv_block[b] == usize::MAX {
                inv_block[b] = c;
            } else if inv_block[b] != c {
                return false;
            }
        }
        let mut counts = vec![0u32; k * k * n];
        for a in 0..n {
            let row = &self.table[a];
            let base = labels[a] * k;
            for b in 0..n {
                counts[(base + labels[b]) * n + row[b]] += 1;
            }
        }
        let mut rep = vec![usize::MAX; k];
        for x in 0..n {
            if rep[labels[x]] == usize::MAX {
                rep[labels[x]] = x;
            }
        }
        (0..k * k).all(|ab| {
            let c = &counts[ab * n..(ab + 1) * n];
            (0..n).all(|x| c[x] == c[rep[labels[x]]])
        })
    }

    /// Sound pruning test after assigning element `x`: for every pair of
    /// current blocks, the count of `x` in their product must stay reachable
    /// from the count of its block representative and vice versa.
    fn may_extend(&self, labels: &[usize], used: usize, x: usize, rep: usize) -> bool {
        const NONE: usize = usize::MAX;
        let b = self.inv[x];
        if labels[b] != NONE {
            // the block map induced by ♯ must be well defined
            let (bx, bb) = (labels[x], labels[b]);
            for y in 0..self.n {
                if labels[y] == bx && labels[self.inv[y]] != NONE && labels[self.inv[y]] != bb {
                    return false;
                }
            }
        }
        if rep == x {
            return true;
        }
        for a in 0..used {
            for c in 0..used {
                let bounds = |g: usize| -> (u32, u32) {
                    let (mut lo, mut hi) = (0, 0);
                    for &(s, t) in &self.pre[g] {
                        let (ls, lt) = (labels[s], labels[t]);
                        let ok_s = ls == a || ls == NONE;
                        let ok_t = lt == c || lt == NONE;
                        if ls == a && lt == c {
                            lo += 1;
                        }
                        if ok_s && ok_t {
                            hi += 1;
                        }
                    }
                    (lo, hi)
                };
                let (lx, hx) = bounds(x);
                let (lr, hr) = bounds(rep);
                if lx > hr || lr > hx {
                    return false;
                }
            }
        }
        true
    }
}

/// Label vectors of all partitions passing the integer closure test, via
/// restricted growth strings with pruning.
fn exhaustive_labels(f: &Fast, max_blocks: usize) -> Vec<Vec<usize>> {
    let n = f.n;
    // Split the search on the label of the second element's subtree to
    // parallelize.
    let roots: Vec<Vec<usize>> = if n >= 2 && max_blocks >= 2 { vec![vec![0, 0], vec![0, 1]] } else { vec![vec![0; n.min(1)]] };
    roots
        .into_par_iter()
        .flat_map_iter(|prefix| {
            let mut out = Vec::new();
            let mut labels = vec![usize::MAX; n];
            let mut reps = vec![usize::MAX; max_blocks];
            let mut used = 0;
            let mut ok = true;
            for (x, &l) in prefix.iter().enumerate() {
                labels[x] = l;
                if reps[l] == usize::MAX {
                    reps[l] = x;
                    used += 1;
                }
                ok &= f.may_extend(&labels, used, x, reps[l]);
            }
            if ok {
                rec(f, prefix.len(), used, max_blocks, &mut labels, &mut reps, &mut out);
            }
            out
        })
        .collect()
}

fn rec(f: &Fast, x: usize, used: usize, k: usize, labels: &mut Vec<usize>, reps: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if x == f.n {
        if f.is_closed(labels, used) {
            out.push(labels.clone());
        }
        return;
    }
    for l in 0..(used + 1).min(k) {
        labels[x] = l;
        let new = l == used;
        if new {
            reps[l] = x;
        }
        let used2 = if new { used + 1 } else { used };
        if f.may_extend(labels, used2, x, reps[l]) {
            rec(f, x + 1, used2, k, labels, reps, out);
        }
        if new {
            reps[l] = usize::MAX;
        }
    }
    labels[x] = usize::MAX;
}

/// Candidate partitions from subgroup double cosets and automorphism orbits.
fn structured_candidates(s: &InverseSemigroup) -> Vec<Partition> {
    let m = &s.base;
    let units = unit_group(m);
    let mut out = BTreeSet::new();
    if m.is_group() {
        for h in all_subgroups(m) {
            if let Ok(p) = double_coset_partition(m, &h, &h) {
                out.insert(p);
            }
        }
        if let Some(auts) = automorphisms(m, AUT_CAP) {
            for a in auts.iter().skip(1) {
                if let Ok(p) = automorphism_orbit_partition(m, std::slice::from_ref(a)) {
                    out.insert(p);
                }
            }
            if let Ok(p) = automorphism_orbit_partition(m, &auts) {
                out.insert(p);
            }
        }
    } else if !units.is_empty() {
        // Orbits of x ↦ h x h' and of conjugation by units.
        let n = m.size;
        let orbit_partition = |act: &dyn Fn(usize, usize) -> usize| -> Partition {
            let mut label = vec![usize::MAX; n];
            let mut blocks: Vec<Vec<usize>> = Vec::new();
            for x in 0..n {
                if label[x] != usize::MAX {
                    continue;
                }
                let mut orbit = vec![x];
                label[x] = blocks.len();
                let mut i = 0;
                while i < orbit.len() {
                    for &u in &units {
                        let y = act(u, orbit[i]);
                        if label[y] == usize::MAX {
                            label[y] = blocks.len();
                            orbit.push(y);
                        }
                    }
                    i += 1;
                }
                blocks.push(orbit);
            }
            Partition::new(n, blocks).expect("orbits partition")
        };
        out.insert(orbit_partition(&|u, x| m.mul(m.mul(u, x), s.inv[u])));
        out.insert(orbit_partition(&|u, x| m.mul(u, x)));
        out.insert(orbit_partition(&|u, x| m.mul(x, u)));
    }
    out.insert(Partition::singletons(m.size));
    out.into_iter().collect()
}

/// Stable partitions of `S` with at most `max_blocks` blocks, plus the
/// singleton partition, each with its certificate, sorted by block count and
/// then canonical form.
pub fn enumerate_stable_partitions(s: &InverseSemigroup, max_blocks: usize) -> Result<Enumeration> {
    enumerate_with(s, &semigroup_bialgebra(s)?, max_blocks)
}

pub fn enumerate_with(s: &InverseSemigroup, a: &TwoAlgebra, max_blocks: usize) -> Result<Enumeration> {
    let n = s.size();
    if n > SIZE_CAP {
        return Err(Error::SizeCap(format!("semigroup of order {n} exceeds {SIZE_CAP}")));
    }
    let exhaustive = n <= 12 || partitions_up_to(n, max_blocks) <= EXHAUSTIVE_LIMIT;
    let mut candidates: BTreeSet<Partition> = if exhaustive {
        let f = Fast::new(s);
        exhaustive_labels(&f, max_blocks.max(1)).iter().map(|l| Partition::from_labels(l)).collect()
    } else {
        structured_candidates(s).into_iter().filter(|p| p.num_blocks() <= max_blocks).collect()
    };
    candidates.insert(Partition::singletons(n));
    let mut certs: Vec<StablePartitionCert> = candidates
        .into_par_iter()
        .map(|p| is_stable_partition(a, &p).map(|(_, c)| c))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    certs.sort_by(|x, y| {
        x.partition.num_blocks().cmp(&y.partition.num_blocks()).then_with(|| x.partition.cmp(&y.partition))
    });
    let mode = if exhaustive { EnumerationMode::Exhaustive } else { EnumerationMode::Structured };
    Ok(Enumeration { mode, certs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{build_group, GroupSpec};

    fn cyclic(m: usize) -> InverseSemigroup {
        InverseSemigroup::new(build_group(&GroupSpec::Cyclic { m }).unwrap()).unwrap()
    }

    fn blocks(e: &Enumeration) -> Vec<Vec<Vec<usize>>> {
        e.certs.iter().map(|c| c.partition.blocks().to_vec()).collect()
    }

    #[test]
    fn small_cyclic() {
        let e = enumerate_stable_partitions(&cyclic(3), 2).unwrap();
        assert_eq!(e.mode, EnumerationMode::Exhaustive);
        // The one-block partition is the double coset of G itself; its span
        // has identity S/3.
        assert_eq!(blocks(&e), vec![vec![vec![0, 1, 2]], vec![vec![0], vec![1, 2]], vec![vec![0], vec![1], vec![2]]]);
        let e = enumerate_stable_partitions(&cyclic(4), 2).unwrap();
        let b = blocks(&e);
        assert!(b.contains(&vec![vec![0], vec![1, 2, 3]]));
        assert!(!b.contains(&vec![vec![0, 1], vec![2, 3]]));
    }

    #[test]
    fn counting() {
        assert_eq!(partitions_up_to(4, 4), 15.0);
        assert_eq!(partitions_up_to(4, 2), 8.0);
    }
}
