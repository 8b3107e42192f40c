use serde::{Deserialize, Serialize};

use crate::algebra::{Verdict, Witness};
use crate::error::{Error, Result};

/// A finite semigroup given by its multiplication table, with the unit and
/// zero detected on construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteMonoid {
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub unit: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub zero: Option<usize>,
    pub table: Vec<Vec<usize>>,
    pub labels: Vec<String>,
}

impl FiniteMonoid {
    /// Checks shape and associativity, then locates the unit and zero.
    pub fn new(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        if labels.len() != n {
            return Err(Error::DimensionMismatch(format!("{} labels for {n} elements", labels.len())));
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidArgument("multiplication table is not an n×n table over 0..n".into()));
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidArgument(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let unit = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a));
        let zero = (0..n).find(|&z| (0..n).all(|a| table[z][a] == z && table[a][z] == z));
        Ok(FiniteMonoid { size: n, unit, zero, table, labels })
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| self.table[a][a] == a).collect()
    }

    pub fn is_group(&self) -> bool {
        match self.unit {
            Some(e) => (0..self.size).all(|a| (0..self.size).any(|b| self.table[a][b] == e)),
            None => false,
        }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|a| (0..a).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Relabels by a bijection `perm` (old index → new index).
    pub fn relabel(&self, perm: &[usize]) -> FiniteMonoid {
        let n = self.size;
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let table = (0..n).map(|a| (0..n).map(|b| perm[self.table[inv[a]][inv[b]]]).collect()).collect();
        let labels = (0..n).map(|a| self.labels[inv[a]].clone()).collect();
        FiniteMonoid::new(table, labels).expect("relabeling preserves the axioms")
    }
}

/// A finite inverse semigroup: every element has exactly one generalized
/// inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseSemigroup {
    pub base: FiniteMonoid,
    pub inv: Vec<usize>,
}

impl InverseSemigroup {
    pub fn new(base: FiniteMonoid) -> Result<Self> {
        let (v, inv) = is_inverse(&base);
        match inv {
            Some(inv) => Ok(InverseSemigroup { base, inv }),
            None => Err(Error::NotInverse(v.notes)),
        }
    }

    pub fn size(&self) -> usize {
        self.base.size
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.base.table[a][b]
    }

    pub fn labels(&self) -> &[String] {
        &self.base.labels
    }
}

/// Decides whether `m` is an inverse semigroup; on Holds also returns the
/// inverse map.
pub fn is_inverse(m: &FiniteMonoid) -> (Verdict, Option<Vec<usize>>) {
    const CHECK: &str = "is_inverse";
    let n = m.size;
    let t = &m.table;
    let mut inv = Vec::with_capacity(n);
    for a in 0..n {
        let cands: Vec<usize> = (0..n).filter(|&b| t[t[a][b]][a] == a && t[t[b][a]][b] == b).collect();
        match cands.as_slice() {
            [b] => inv.push(*b),
            [] => {
                return (
                    Verdict::fails(
                        CHECK,
                        Witness::new(vec![a], vec![], format!("{} has no generalized inverse", m.labels[a])),
                    ),
                    None,
                )
            }
            [b, c, ..] => {
                return (
                    Verdict::fails(
                        CHECK,
                        Witness::new(
                            vec![a, *b, *c],
                            vec![],
                            format!(
                                "{} has two generalized inverses {} and {}",
                                m.labels[a], m.labels[*b], m.labels[*c]
                            ),
                        ),
                    ),
                    None,
                )
            }
        }
    }
    let idem = m.idempotents();
    for &e in &idem {
        for &f in &idem {
            if t[e][f] != t[f][e] {
                return (
                    Verdict::fails(
                        CHECK,
                        Witness::new(
                            vec![e, f],
                            vec![],
                            format!("idempotents {} and {} do not commute", m.labels[e], m.labels[f]),
                        ),
                    ),
                    None,
                );
            }
        }
    }
    (Verdict::holds(CHECK, "every element has a unique generalized inverse"), Some(inv))
}

/// Full transformation monoid on two points: id, swap, const₀, const₁,
/// composed as functions `(fg)(x) = f(g(x))`.
pub fn full_transformation_monoid_2() -> FiniteMonoid {
    let maps: [[usize; 2]; 4] = [[0, 1], [1, 0], [0, 0], [1, 1]];
    let idx = |m: [usize; 2]| maps.iter().position(|x| *x == m).unwrap();
    let table = (0..4)
        .map(|f| (0..4).map(|g| idx([maps[f][maps[g][0]], maps[f][maps[g][1]]])).collect())
        .collect();
    let labels = ["id", "swap", "const0", "const1"].iter().map(|s| s.to_string()).collect();
    FiniteMonoid::new(table, labels).unwrap()
}
