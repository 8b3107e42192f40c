//! Finite groups addressed by small specifications.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hecke::permutation::Permutation;

use super::monoid::FiniteMonoid;

pub const DEFAULT_GROUP_CAP: usize = 5040;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic { m: usize },
    Abelian { factors: Vec<usize> },
    Symmetric { n: usize },
    Alternating { n: usize },
    /// Symmetries of the regular n-gon, order 2n.
    Dihedral { n: usize },
    /// Dicyclic group of order 4n; n = 2 is the quaternion group.
    Dicyclic { n: usize },
    DirectProduct { left: Box<GroupSpec>, right: Box<GroupSpec> },
    Table { monoid: FiniteMonoid },
}

impl GroupSpec {
    pub fn name(&self) -> String {
        match self {
            GroupSpec::Cyclic { m } => format!("Z{m}"),
            GroupSpec::Abelian { factors } => {
                factors.iter().map(|m| format!("Z{m}")).collect::<Vec<_>>().join("x")
            }
            GroupSpec::Symmetric { n } => format!("S{n}"),
            GroupSpec::Alternating { n } => format!("A{n}"),
            GroupSpec::Dihedral { n } => format!("D{n}"),
            GroupSpec::Dicyclic { n } => {
                if *n == 2 {
                    "Q8".into()
                } else {
                    format!("Dic{n}")
                }
            }
            GroupSpec::DirectProduct { left, right } => format!("{}x{}", left.name(), right.name()),
            GroupSpec::Table { monoid } => format!("table{}", monoid.size),
        }
    }

    /// Group order without building the table.
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Cyclic { m } => *m,
            GroupSpec::Abelian { factors } => factors.iter().product(),
            GroupSpec::Symmetric { n } => (1..=*n).product(),
            GroupSpec::Alternating { n } => ((1..=*n).product::<usize>() / 2).max(1),
            GroupSpec::Dihedral { n } => 2 * n,
            GroupSpec::Dicyclic { n } => 4 * n,
            GroupSpec::DirectProduct { left, right } => left.order() * right.order(),
            GroupSpec::Table { monoid } => monoid.size,
        }
    }
}

pub fn build_group(spec: &GroupSpec) -> Result<FiniteMonoid> {
    build_group_capped(spec, DEFAULT_GROUP_CAP)
}

pub fn build_group_capped(spec: &GroupSpec, cap: usize) -> Result<FiniteMonoid> {
    let bad = |s: &str| Err(Error::InvalidArgument(s.to_string()));
    let order = spec.order();
    if order > cap {
        return Err(Error::SizeCap(format!("group of order {order} exceeds cap {cap}")));
    }
    match spec {
        GroupSpec::Cyclic { m } => {
            if *m == 0 {
                return bad("cyclic group needs m ≥ 1");
            }
            Ok(cyclic(*m))
        }
        GroupSpec::Abelian { factors } => {
            if factors.is_empty() || factors.contains(&0) {
                return bad("abelian factors must be positive");
            }
            Ok(abelian(&invariant_factors(factors)))
        }
        GroupSpec::Symmetric { n } => {
            if *n == 0 || *n > 6 {
                return bad("symmetric group needs 1 ≤ n ≤ 6");
            }
            Ok(permutation_group(Permutation::all(*n)))
        }
        GroupSpec::Alternating { n } => {
            if *n == 0 || *n > 6 {
                return bad("alternating group needs 1 ≤ n ≤ 6");
            }
            Ok(permutation_group(Permutation::all(*n).into_iter().filter(Permutation::is_even).collect()))
        }
        GroupSpec::Dihedral { n } => {
            if *n == 0 {
                return bad("dihedral group needs n ≥ 1");
            }
            Ok(dihedral(*n))
        }
        GroupSpec::Dicyclic { n } => {
            if *n < 1 {
                return bad("dicyclic group needs n ≥ 1");
            }
            Ok(dicyclic(*n))
        }
        GroupSpec::DirectProduct { left, right } => {
            let a = build_group_capped(left, cap)?;
            let b = build_group_capped(right, cap)?;
            Ok(direct_product(&a, &b))
        }
        GroupSpec::Table { monoid } => {
            let m = FiniteMonoid::new(monoid.table.clone(), monoid.labels.clone())?;
            if !m.is_group() {
                return bad("table is not a group");
            }
            Ok(m)
        }
    }
}

/// Invariant factors m₁ | m₂ | … of a product of cyclic groups; trivial
/// factors are dropped (the trivial group keeps a single factor 1).
pub fn invariant_factors(factors: &[usize]) -> Vec<usize> {
    let mut powers: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &m in factors {
        let mut m = m;
        let mut p = 2;
        while m > 1 {
            if m % p == 0 {
                let mut q = 1;
                while m % p == 0 {
                    m /= p;
                    q *= p;
                }
                powers.entry(p).or_default().push(q);
            }
            p += 1;
        }
    }
    let len = powers.values().map(Vec::len).max().unwrap_or(0);
    if len == 0 {
        return vec![1];
    }
    let mut out = vec![1usize; len];
    for qs in powers.values_mut() {
        qs.sort_unstable();
        let off = len - qs.len();
        for (i, q) in qs.iter().enumerate() {
            out[off + i] *= q;
        }
    }
    out
}

fn cyclic(m: usize) -> FiniteMonoid {
    let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
    FiniteMonoid::new(table, (0..m).map(|a| a.to_string()).collect()).unwrap()
}

fn abelian(factors: &[usize]) -> FiniteMonoid {
    if factors.len() == 1 {
        return cyclic(factors[0]);
    }
    let n: usize = factors.iter().product();
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; factors.len()];
        for i in (0..factors.len()).rev() {
            d[i] = x % factors[i];
            x /= factors[i];
        }
        d
    };
    let index = |d: &[usize]| d.iter().zip(factors).fold(0, |acc, (x, m)| acc * m + x);
    let table = (0..n)
        .map(|a| {
            let da = digits(a);
            (0..n)
                .map(|b| {
                    let db = digits(b);
                    let s: Vec<usize> = da.iter().zip(&db).zip(factors).map(|((x, y), m)| (x + y) % m).collect();
                    index(&s)
                })
                .collect()
        })
        .collect();
    let labels = (0..n)
        .map(|a| format!("({})", digits(a).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    FiniteMonoid::new(table, labels).unwrap()
}

fn permutation_group(elems: Vec<Permutation>) -> FiniteMonoid {
    let pos: BTreeMap<Permutation, usize> = elems.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let table = elems.iter().map(|g| elems.iter().map(|h| pos[&g.compose(h)]).collect()).collect();
    FiniteMonoid::new(table, elems.iter().map(Permutation::cycle_string).collect()).unwrap()
}

fn dihedral(n: usize) -> FiniteMonoid {
    // index k + n·e stands for r^k s^e
    let size = 2 * n;
    let table = (0..size)
        .map(|x| {
            let (a, e) = (x % n, x / n);
            (0..size)
                .map(|y| {
                    let (b, f) = (y % n, y / n);
                    let k = if e == 0 { (a + b) % n } else { (a + n - b) % n };
                    k + n * ((e + f) % 2)
                })
                .collect()
        })
        .collect();
    let labels = (0..size)
        .map(|x| match (x % n, x / n) {
            (0, 0) => "e".to_string(),
            (k, 0) => format!("r{k}"),
            (0, _) => "s".to_string(),
            (k, _) => format!("r{k}s"),
        })
        .collect();
    FiniteMonoid::new(table, labels).unwrap()
}

fn dicyclic(n: usize) -> FiniteMonoid {
    // index i + 2n·e stands for a^i x^e with a^{2n} = 1, x² = a^n, x a x⁻¹ = a⁻¹
    let m = 2 * n;
    let size = 2 * m;
    let table = (0..size)
        .map(|u| {
            let (i, e) = (u % m, u / m);
            (0..size)
                .map(|v| {
                    let (j, f) = (v % m, v / m);
                    if e == 0 {
                        (i + j) % m + m * f
                    } else if f == 0 {
                        (i + m - j) % m + m
                    } else {
                        (i + m - j + n) % m
                    }
                })
                .collect()
        })
        .collect();
    let labels = (0..size)
        .map(|u| match (u % m, u / m) {
            (0, 0) => "e".to_string(),
            (i, 0) => format!("a{i}"),
            (0, _) => "x".to_string(),
            (i, _) => format!("a{i}x"),
        })
        .collect();
    FiniteMonoid::new(table, labels).unwrap()
}

pub fn direct_product(a: &FiniteMonoid, b: &FiniteMonoid) -> FiniteMonoid {
    let (na, nb) = (a.size, b.size);
    let table = (0..na * nb)
        .map(|x| (0..na * nb).map(|y| a.table[x / nb][y / nb] * nb + b.table[x % nb][y % nb]).collect())
        .collect();
    let labels = (0..na * nb).map(|x| format!("({},{})", a.labels[x / nb], b.labels[x % nb])).collect();
    FiniteMonoid::new(table, labels).unwrap()
}

/// Inverse map of a group table.
pub fn group_inverses(g: &FiniteMonoid) -> Vec<usize> {
    let e = g.unit.expect("group has a unit");
    (0..g.size).map(|a| (0..g.size).find(|&b| g.table[a][b] == e).expect("group element is invertible")).collect()
}

/// Order of each element.
pub fn element_orders(g: &FiniteMonoid) -> Vec<usize> {
    let e = g.unit.expect("group has a unit");
    (0..g.size)
        .map(|a| {
            let mut x = a;
            let mut k = 1;
            while x != e {
                x = g.table[x][a];
                k += 1;
            }
            k
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let z4 = build_group(&GroupSpec::Cyclic { m: 4 }).unwrap();
        assert_eq!(z4.unit, Some(0));
        assert_eq!(z4.size, 4);
        let s3 = build_group(&GroupSpec::Symmetric { n: 3 }).unwrap();
        assert_eq!(s3.size, 6);
        assert!(!s3.is_commutative());
        let v4 = build_group(&GroupSpec::Abelian { factors: vec![2, 2] }).unwrap();
        assert!(element_orders(&v4).iter().all(|&o| o <= 2));
        assert_eq!(invariant_factors(&[2, 3]), vec![6]);
        assert_eq!(invariant_factors(&[4, 2, 2]), vec![2, 2, 4]);
        let q8 = build_group(&GroupSpec::Dicyclic { n: 2 }).unwrap();
        assert!(q8.is_group() && !q8.is_commutative());
        assert_eq!(element_orders(&q8).iter().filter(|&&o| o == 2).count(), 1);
        let d4 = build_group(&GroupSpec::Dihedral { n: 4 }).unwrap();
        assert_eq!(element_orders(&d4).iter().filter(|&&o| o == 2).count(), 5);
        assert!(build_group(&GroupSpec::Symmetric { n: 8 }).is_err());
    }
}
