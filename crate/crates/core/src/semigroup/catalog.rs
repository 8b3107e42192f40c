//! The fixed catalog of groups and inverse semigroups.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::groups::{build_group, GroupSpec};
use super::monoid::InverseSemigroup;
use super::partial::{matrix_unit_semigroup, symmetric_inverse_semigroup};

/// An ambient group or inverse semigroup.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AmbientSpec {
    Group { group: GroupSpec },
    /// Partial bijections of an n-element set.
    SymmetricInverse { n: usize },
    /// Matrix units e_ij with zero adjoined.
    MatrixUnits { n: usize },
}

impl AmbientSpec {
    pub fn name(&self) -> String {
        match self {
            AmbientSpec::Group { group } => group.name(),
            AmbientSpec::SymmetricInverse { n } => format!("I{n}"),
            AmbientSpec::MatrixUnits { n } => format!("I1_{n}"),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            AmbientSpec::Group { group } => group.order(),
            AmbientSpec::SymmetricInverse { n } => (0..=*n)
                .map(|k| {
                    let b = (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1));
                    b * b * (1..=k).product::<usize>()
                })
                .sum(),
            AmbientSpec::MatrixUnits { n } => n * n + 1,
        }
    }

    pub fn build(&self) -> Result<InverseSemigroup> {
        match self {
            AmbientSpec::Group { group } => InverseSemigroup::new(build_group(group)?),
            AmbientSpec::SymmetricInverse { n } => symmetric_inverse_semigroup(*n),
            AmbientSpec::MatrixUnits { n } => matrix_unit_semigroup(*n),
        }
    }

    pub fn is_group(&self) -> bool {
        matches!(self, AmbientSpec::Group { .. })
    }
}

/// Invariant-factor lists d₁ | d₂ | … with product m and d₁ > 1.
fn invariant_factor_lists(m: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            out.push(cur.clone());
            return;
        }
        for d in 2..=rest {
            if rest.is_multiple_of(d) && d % min == 0 {
                // the remaining factors must be multiples of d
                let r = rest / d;
                if r == 1 || r.is_multiple_of(d) {
                    cur.push(d);
                    rec(r, d, cur, out);
                    cur.pop();
                }
            }
        }
    }
    if m == 1 {
        return vec![vec![1]];
    }
    let mut out = Vec::new();
    rec(m, 1, &mut Vec::new(), &mut out);
    out
}

fn spec_from_factors(f: Vec<usize>) -> GroupSpec {
    if f.len() == 1 {
        GroupSpec::Cyclic { m: f[0] }
    } else {
        GroupSpec::Abelian { factors: f }
    }
}

/// All abelian groups of order 2..=max_order, in invariant-factor form.
pub fn abelian_catalog(max_order: usize) -> Vec<GroupSpec> {
    (2..=max_order).flat_map(|m| invariant_factor_lists(m).into_iter().map(spec_from_factors)).collect()
}

fn nonabelian_catalog() -> Vec<GroupSpec> {
    let z2 = Box::new(GroupSpec::Cyclic { m: 2 });
    vec![
        GroupSpec::Symmetric { n: 3 },
        GroupSpec::Dihedral { n: 4 },
        GroupSpec::Dicyclic { n: 2 },
        GroupSpec::Dihedral { n: 5 },
        GroupSpec::Alternating { n: 4 },
        GroupSpec::Dihedral { n: 6 },
        GroupSpec::Dicyclic { n: 3 },
        GroupSpec::Dihedral { n: 7 },
        GroupSpec::Dihedral { n: 8 },
        GroupSpec::Dicyclic { n: 4 },
        GroupSpec::DirectProduct { left: z2.clone(), right: Box::new(GroupSpec::Dihedral { n: 4 }) },
        GroupSpec::DirectProduct { left: z2, right: Box::new(GroupSpec::Dicyclic { n: 2 }) },
        GroupSpec::Symmetric { n: 4 },
    ]
}

/// Groups of order ≤ max_order: every abelian group plus the nonabelian
/// groups S3, D4, Q8, D5, A4, D6, Dic3, D7, D8, Q16, Z2×D4, Z2×Q8, S4 that
/// fit. Sorted by (order, name).
pub fn group_catalog(max_order: usize) -> Vec<GroupSpec> {
    let mut out = abelian_catalog(max_order);
    out.extend(nonabelian_catalog().into_iter().filter(|g| g.order() <= max_order));
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.name().cmp(&b.name())));
    out
}

/// I_n and I¹_n for n ≤ 3.
pub fn semigroup_catalog() -> Vec<AmbientSpec> {
    let mut out: Vec<AmbientSpec> = (1..=3)
        .flat_map(|n| [AmbientSpec::SymmetricInverse { n }, AmbientSpec::MatrixUnits { n }])
        .collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.name().cmp(&b.name())));
    out
}

/// Groups of order ≤ max_order followed by the semigroup catalog.
pub fn ambient_catalog(max_order: usize, with_semigroups: bool) -> Vec<AmbientSpec> {
    let mut out: Vec<AmbientSpec> =
        group_catalog(max_order).into_iter().map(|group| AmbientSpec::Group { group }).collect();
    if with_semigroups {
        out.extend(semigroup_catalog());
    }
    out
}

/// The whole catalog used by the universal tests: groups of order ≤ 16,
/// S4, and the semigroups.
pub fn full_catalog() -> Vec<AmbientSpec> {
    let mut out = ambient_catalog(24, false);
    out.retain(|a| a.order() <= 16 || a.name() == "S4");
    out.extend(semigroup_catalog());
    out
}

/// Resolves a catalog-style name: `Z4`, `Z2xZ2`, `S3`, `A4`, `D5`, `Q8`,
/// `Dic3`, `I2` (partial bijections), `I1_2` (matrix units), or any name
/// printed by the full catalog such as `Z2xD4`.
pub fn ambient_by_name(name: &str) -> Result<AmbientSpec> {
    if let Some(a) = full_catalog().into_iter().find(|a| a.name() == name) {
        return Ok(a);
    }
    let num = |t: &str| t.parse::<usize>().ok().filter(|&n| n >= 1);
    let bad = || Error::InvalidArgument(format!("unknown group or semigroup name '{name}'"));
    if let Some(n) = name.strip_prefix("I1_").and_then(num) {
        return Ok(AmbientSpec::MatrixUnits { n });
    }
    let parts: Vec<&str> = name.split('x').collect();
    if parts.len() > 1 {
        let factors = parts.iter().map(|p| p.strip_prefix('Z').and_then(num)).collect::<Option<Vec<_>>>().ok_or_else(bad)?;
        return Ok(AmbientSpec::Group { group: GroupSpec::Abelian { factors } });
    }
    let group = if name == "Q8" {
        GroupSpec::Dicyclic { n: 2 }
    } else if let Some(n) = name.strip_prefix("Dic").and_then(num) {
        GroupSpec::Dicyclic { n }
    } else if let Some(n) = name.strip_prefix('I').and_then(num) {
        return Ok(AmbientSpec::SymmetricInverse { n });
    } else {
        let (head, tail) = name.split_at(1.min(name.len()));
        let n = num(tail).ok_or_else(bad)?;
        match head {
            "Z" => GroupSpec::Cyclic { m: n },
            "S" => GroupSpec::Symmetric { n },
            "A" => GroupSpec::Alternating { n },
            "D" => GroupSpec::Dihedral { n },
            _ => return Err(bad()),
        }
    };
    Ok(AmbientSpec::Group { group })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_counts() {
        // number of abelian groups of each order 2..=16
        let counts = [1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5];
        for (i, &c) in counts.iter().enumerate() {
            let m = i + 2;
            assert_eq!(invariant_factor_lists(m).len(), c, "order {m}");
        }
        for g in abelian_catalog(16) {
            let t = build_group(&g).unwrap();
            assert_eq!(t.size, g.order());
            assert!(t.is_commutative());
        }
    }

    #[test]
    fn catalog_builds() {
        for a in full_catalog() {
            let s = a.build().unwrap();
            assert_eq!(s.size(), a.order(), "{}", a.name());
        }
    }
}
