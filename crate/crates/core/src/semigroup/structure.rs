//! Subgroups and automorphisms of small groups.

use std::collections::{BTreeSet, VecDeque};

use super::groups::element_orders;
use super::monoid::FiniteMonoid;

/// Closure of `gens` under multiplication (a subgroup for finite groups).
pub fn generated(g: &FiniteMonoid, gens: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = gens.iter().copied().collect();
    if let Some(e) = g.unit {
        set.insert(e);
    }
    let mut queue: VecDeque<usize> = set.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        for &y in gens {
            for z in [g.table[x][y], g.table[y][x]] {
                if set.insert(z) {
                    queue.push_back(z);
                }
            }
        }
    }
    set
}

pub fn is_subgroup(g: &FiniteMonoid, h: &[usize]) -> bool {
    let Some(e) = g.unit else { return false };
    let set: BTreeSet<usize> = h.iter().copied().collect();
    set.contains(&e)
        && set.iter().all(|&a| {
            set.iter().all(|&b| set.contains(&g.table[a][b])) && set.iter().any(|&b| g.table[a][b] == e)
        })
}

/// All subgroups, sorted by (size, elements).
pub fn all_subgroups(g: &FiniteMonoid) -> Vec<Vec<usize>> {
    let mut subs: BTreeSet<BTreeSet<usize>> = (0..g.size).map(|x| generated(g, &[x])).collect();
    loop {
        let current: Vec<BTreeSet<usize>> = subs.iter().cloned().collect();
        let mut added = false;
        for a in &current {
            for b in &current {
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                let gens: Vec<usize> = a.union(b).copied().collect();
                if subs.insert(generated(g, &gens)) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut out: Vec<Vec<usize>> = subs.into_iter().map(|s| s.into_iter().collect()).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// A small generating set chosen greedily by descending element order.
pub fn generating_set(g: &FiniteMonoid) -> Vec<usize> {
    let orders = element_orders(g);
    let mut cand: Vec<usize> = (0..g.size).collect();
    cand.sort_by(|a, b| orders[*b].cmp(&orders[*a]).then(a.cmp(b)));
    let mut gens = Vec::new();
    let mut span = generated(g, &[]);
    for x in cand {
        if span.len() == g.size {
            break;
        }
        if !span.contains(&x) {
            gens.push(x);
            span = generated(g, &gens);
        }
    }
    gens
}

/// Extends generator images to a map on the whole group, if consistent.
fn extend(g: &FiniteMonoid, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let e = g.unit?;
    let mut map = vec![usize::MAX; g.size];
    map[e] = e;
    let mut queue = VecDeque::from([e]);
    while let Some(x) = queue.pop_front() {
        for (gi, ii) in gens.iter().zip(imgs) {
            let y = g.table[x][*gi];
            let fy = g.table[map[x]][*ii];
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

pub fn is_automorphism(g: &FiniteMonoid, map: &[usize]) -> bool {
    let n = g.size;
    if map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in map {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    (0..n).all(|a| (0..n).all(|b| map[g.table[a][b]] == g.table[map[a]][map[b]]))
}

/// All automorphisms, identity first, or `None` past `cap`.
pub fn automorphisms(g: &FiniteMonoid, cap: usize) -> Option<Vec<Vec<usize>>> {
    let gens = generating_set(g);
    let orders = element_orders(g);
    let mut out = Vec::new();
    let mut imgs = Vec::with_capacity(gens.len());
    fn rec(
        g: &FiniteMonoid,
        gens: &[usize],
        orders: &[usize],
        imgs: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> bool {
        if imgs.len() == gens.len() {
            if let Some(map) = extend(g, gens, imgs) {
                if is_automorphism(g, &map) {
                    out.push(map);
                    if out.len() > cap {
                        return false;
                    }
                }
            }
            return true;
        }
        let target = orders[gens[imgs.len()]];
        for y in 0..g.size {
            if orders[y] == target && !imgs.contains(&y) {
                imgs.push(y);
                if !rec(g, gens, orders, imgs, out, cap) {
                    return false;
                }
                imgs.pop();
            }
        }
        true
    }
    if !rec(g, &gens, &orders, &mut imgs, &mut out, cap) {
        return None;
    }
    out.sort();
    let id: Vec<usize> = (0..g.size).collect();
    if let Some(p) = out.iter().position(|m| *m == id) {
        let m = out.remove(p);
        out.insert(0, m);
    }
    Some(out)
}

/// Elements with a two-sided inverse relative to the unit.
pub fn unit_group(m: &FiniteMonoid) -> Vec<usize> {
    let Some(e) = m.unit else { return vec![] };
    (0..m.size).filter(|&a| (0..m.size).any(|b| m.table[a][b] == e && m.table[b][a] == e)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::groups::{build_group, GroupSpec};

    #[test]
    fn subgroups_and_automorphisms() {
        let s3 = build_group(&GroupSpec::Symmetric { n: 3 }).unwrap();
        assert_eq!(all_subgroups(&s3).len(), 6);
        assert_eq!(automorphisms(&s3, 1000).unwrap().len(), 6);
        let z4 = build_group(&GroupSpec::Cyclic { m: 4 }).unwrap();
        assert_eq!(automorphisms(&z4, 1000).unwrap().len(), 2);
        let v4 = build_group(&GroupSpec::Abelian { factors: vec![2, 2] }).unwrap();
        assert_eq!(automorphisms(&v4, 1000).unwrap().len(), 6);
        assert_eq!(all_subgroups(&v4).len(), 5);
        let q8 = build_group(&GroupSpec::Dicyclic { n: 2 }).unwrap();
        assert_eq!(automorphisms(&q8, 1000).unwrap().len(), 24);
        assert!(is_subgroup(&z4, &[0, 2]));
        assert!(!is_subgroup(&z4, &[0, 1]));
    }
}
