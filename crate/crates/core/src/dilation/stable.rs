//! Stable partitions: block sums spanning a sub-2-algebra with its own identity.

use std::collections::BTreeSet;

use crate::algebra::{TwoAlgebra, Verdict, Witness};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalars::rational::int;
use crate::scalars::{format_rational, Field, Rational};
use crate::semigroup::structure::{is_automorphism, is_subgroup};
use crate::semigroup::FiniteMonoid;

use super::partition::Partition;

const CHECK: &str = "is_stable_partition";

/// Evidence that a partition is stable, all in block-sum coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct StablePartitionCert {
    pub partition: Partition,
    /// `structure[a][b][c]`: coefficient of `S_c` in `S_a · S_b`.
    pub structure: Vec<Vec<Vec<Rational>>>,
    /// `invol[b][c]`: coefficient of `S_c` in `♯S_b`.
    pub invol: Vec<Vec<Rational>>,
    /// `coinvol[b][c]`: coefficient of `S_c` in `♭S_b`.
    pub coinvol: Vec<Vec<Rational>>,
    /// Identity of the span, as coefficients on the block sums.
    pub identity: Vec<Rational>,
}

pub fn block_sum(p: &Partition, b: usize) -> Vec<Rational> {
    let mut v = vec![int(0); p.n()];
    for &x in &p.blocks()[b] {
        v[x] = int(1);
    }
    v
}

/// Coefficients of `v` on the block sums, or the first block where `v` is not
/// constant together with the two disagreeing elements.
pub fn block_coefficients(p: &Partition, v: &[Rational]) -> std::result::Result<Vec<Rational>, (usize, usize, usize)> {
    p.blocks()
        .iter()
        .enumerate()
        .map(|(c, blk)| {
            let first = &v[blk[0]];
            match blk.iter().find(|&&y| v[y] != *first) {
                Some(&y) => Err((c, blk[0], y)),
                None => Ok(first.clone()),
            }
        })
        .collect()
}

fn not_constant(what: String, v: &[Rational], (c, x, y): (usize, usize, usize), idx: Vec<usize>) -> Verdict {
    let mut indices = idx;
    indices.extend([c, x, y]);
    Verdict::fails(
        CHECK,
        Witness::new(
            indices,
            vec![format_rational(&v[x]), format_rational(&v[y])],
            format!(
                "{what} is not constant on block {c}: coefficient {} at {x}, {} at {y}",
                format_rational(&v[x]),
                format_rational(&v[y])
            ),
        ),
    )
}

/// Decides whether the block sums of `p` span a subspace closed under
/// multiplication, ♯ and ♭ that has an identity element of its own.
pub fn is_stable_partition(a: &TwoAlgebra, p: &Partition) -> Result<(Verdict, Option<StablePartitionCert>)> {
    if p.n() != a.dim {
        return Err(Error::DimensionMismatch(format!("partition of {} elements, algebra of dimension {}", p.n(), a.dim)));
    }
    let k = p.num_blocks();
    let sums: Vec<Vec<Rational>> = (0..k).map(|b| block_sum(p, b)).collect();
    let mut structure = vec![vec![Vec::new(); k]; k];
    for x in 0..k {
        for y in 0..k {
            let prod = a.product(&sums[x], &sums[y]);
            match block_coefficients(p, &prod) {
                Ok(c) => structure[x][y] = c,
                Err(e) => return Ok((not_constant(format!("S{x}·S{y}"), &prod, e, vec![x, y]), None)),
            }
        }
    }
    let mut maps = Vec::new();
    for (name, f) in [("♯", &a.invol), ("♭", &a.coinvol)] {
        let mut m = Vec::with_capacity(k);
        for (b, s) in sums.iter().enumerate() {
            let img = f.apply(s);
            match block_coefficients(p, &img) {
                Ok(c) => m.push(c),
                Err(e) => return Ok((not_constant(format!("{name}S{b}"), &img, e, vec![b]), None)),
            }
        }
        maps.push(m);
    }
    // u = Σ u_a S_a with u·S_b = S_b = S_b·u for every b.
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for b in 0..k {
        for c in 0..k {
            let delta = if b == c { int(1) } else { int(0) };
            rows.push((0..k).map(|x| structure[x][b][c].clone()).collect::<Vec<_>>());
            rhs.push(delta.clone());
            rows.push((0..k).map(|x| structure[b][x][c].clone()).collect());
            rhs.push(delta);
        }
    }
    let Some(identity) = linalg::solve(&rows, &rhs) else {
        return Ok((
            Verdict::fails(CHECK, Witness::new(vec![], vec![], "the span of the block sums has no identity element")),
            None,
        ));
    };
    let coinvol = maps.pop().unwrap();
    let invol = maps.pop().unwrap();
    let cert = StablePartitionCert { partition: p.clone(), structure, invol, coinvol, identity };
    let note = format!("{k} blocks; span closed under products, ♯ and ♭ with its own identity");
    Ok((Verdict::holds(CHECK, note), Some(cert)))
}

/// Double cosets `H x K` of subgroups of the unit group.
pub fn double_coset_partition(g: &FiniteMonoid, h: &[usize], k: &[usize]) -> Result<Partition> {
    for (name, s) in [("H", h), ("K", k)] {
        if !is_subgroup(g, s) {
            return Err(Error::NotSubgroup(format!("{name} = {s:?} is not a subgroup")));
        }
    }
    let mut label = vec![usize::MAX; g.size];
    let mut blocks = Vec::new();
    for x in 0..g.size {
        if label[x] != usize::MAX {
            continue;
        }
        let set: BTreeSet<usize> = h.iter().flat_map(|&a| k.iter().map(move |&b| g.mul(g.mul(a, x), b))).collect();
        for &y in &set {
            label[y] = blocks.len();
        }
        blocks.push(set.into_iter().collect::<Vec<_>>());
    }
    Partition::new(g.size, blocks)
}

/// Orbits of the group generated by the given automorphisms.
pub fn automorphism_orbit_partition(g: &FiniteMonoid, auts: &[Vec<usize>]) -> Result<Partition> {
    if let Some(bad) = auts.iter().position(|m| !is_automorphism(g, m)) {
        return Err(Error::NotAutomorphism(format!("map {bad} is not an automorphism")));
    }
    let n = g.size;
    let mut label = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    for x in 0..n {
        if label[x] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut orbit = vec![x];
        label[x] = id;
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            for m in auts {
                if label[m[y]] == usize::MAX {
                    label[m[y]] = id;
                    orbit.push(m[y]);
                }
            }
            i += 1;
        }
        blocks.push(orbit);
    }
    Partition::new(n, blocks)
}

/// The identity of the span as a vector in the ambient algebra.
pub fn span_identity(cert: &StablePartitionCert) -> Vec<Rational> {
    let p = &cert.partition;
    let mut v = vec![int(0); p.n()];
    for (b, blk) in p.blocks().iter().enumerate() {
        for &x in blk {
            v[x] = v[x].add(&cert.identity[b]);
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::rat;
    use crate::semigroup::{build_group, semigroup_bialgebra, GroupSpec, InverseSemigroup};

    fn group_alg(spec: GroupSpec) -> (FiniteMonoid, TwoAlgebra) {
        let g = build_group(&spec).unwrap();
        let a = semigroup_bialgebra(&InverseSemigroup::new(g.clone()).unwrap()).unwrap();
        (g, a)
    }

    #[test]
    fn cyclic_examples() {
        let (_, z4) = group_alg(GroupSpec::Cyclic { m: 4 });
        let p = Partition::new(4, vec![vec![0], vec![1, 2, 3]]).unwrap();
        let (v, cert) = is_stable_partition(&z4, &p).unwrap();
        assert!(v.is_holds());
        let cert = cert.unwrap();
        assert_eq!(cert.structure[1][1], vec![int(3), int(2)]);
        assert_eq!(cert.identity, vec![int(1), int(0)]);

        let p = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let (v, cert) = is_stable_partition(&z4, &p).unwrap();
        assert!(v.is_fails() && cert.is_none());
        assert_eq!(v.witness.unwrap().indices, vec![0, 0, 0, 0, 1]);

        // Cosets of {0,2}: identity (x0 + x2)/2 is not the ambient unit.
        let p = Partition::new(4, vec![vec![0, 2], vec![1, 3]]).unwrap();
        let (v, cert) = is_stable_partition(&z4, &p).unwrap();
        assert!(v.is_holds());
        assert_eq!(cert.unwrap().identity, vec![rat(1, 2), int(0)]);
    }

    #[test]
    fn s3_double_cosets() {
        let (g, a) = group_alg(GroupSpec::Symmetric { n: 3 });
        let h = crate::semigroup::structure::generated(&g, &[g.labels.iter().position(|l| l == "(1 2)").unwrap()]);
        let h: Vec<usize> = h.into_iter().collect();
        let p = double_coset_partition(&g, &h, &h).unwrap();
        assert_eq!(p.num_blocks(), 2);
        assert_eq!(p.blocks().iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 4]);
        assert!(is_stable_partition(&a, &p).unwrap().0.is_holds());
        assert!(double_coset_partition(&g, &[0, 1], &h).is_err() || is_subgroup(&g, &[0, 1]));
    }

    #[test]
    fn automorphism_orbits() {
        let (g, a) = group_alg(GroupSpec::Cyclic { m: 5 });
        let inv: Vec<usize> = (0..5).map(|x| (5 - x) % 5).collect();
        let p = automorphism_orbit_partition(&g, &[inv]).unwrap();
        assert_eq!(p.blocks(), &[vec![0], vec![1, 4], vec![2, 3]]);
        assert!(is_stable_partition(&a, &p).unwrap().0.is_holds());
        assert!(automorphism_orbit_partition(&g, &[vec![0, 1, 1, 3, 4]]).is_err());
    }
}
