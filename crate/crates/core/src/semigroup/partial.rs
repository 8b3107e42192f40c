//! Symmetric inverse semigroups and matrix-unit semigroups.

use super::monoid::{FiniteMonoid, InverseSemigroup};
use crate::error::{Error, Result};

/// A partial injection of `0..n`: `map[x]` is the image of `x` if defined.
type PartialMap = Vec<Option<usize>>;

fn partial_maps(n: usize) -> Vec<PartialMap> {
    fn rec(x: usize, n: usize, used: &mut Vec<bool>, cur: &mut PartialMap, out: &mut Vec<PartialMap>) {
        if x == n {
            out.push(cur.clone());
            return;
        }
        cur.push(None);
        rec(x + 1, n, used, cur, out);
        cur.pop();
        for y in 0..n {
            if !used[y] {
                used[y] = true;
                cur.push(Some(y));
                rec(x + 1, n, used, cur, out);
                cur.pop();
                used[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(0, n, &mut vec![false; n], &mut Vec::new(), &mut out);
    let rank = |m: &PartialMap| m.iter().filter(|x| x.is_some()).count();
    out.sort_by(|a, b| rank(a).cmp(&rank(b)).then_with(|| a.cmp(b)));
    out
}

fn partial_label(m: &PartialMap) -> String {
    let parts: Vec<String> =
        m.iter().enumerate().filter_map(|(x, y)| y.map(|y| format!("{}>{}", x + 1, y + 1))).collect();
    if parts.is_empty() {
        "empty".into()
    } else {
        parts.join(",")
    }
}

/// All partial bijections of an n-element set under composition
/// `(ab)(x) = a(b(x))`, ordered by rank then lexicographically.
pub fn symmetric_inverse_semigroup(n: usize) -> Result<InverseSemigroup> {
    if n == 0 || n > 4 {
        return Err(Error::InvalidArgument("symmetric inverse semigroup needs 1 ≤ n ≤ 4".into()));
    }
    let maps = partial_maps(n);
    let index = |m: &PartialMap| maps.binary_search_by(|x| {
        let rank = |m: &PartialMap| m.iter().filter(|x| x.is_some()).count();
        rank(x).cmp(&rank(m)).then_with(|| x.cmp(m))
    });
    let table = maps
        .iter()
        .map(|a| {
            maps.iter()
                .map(|b| {
                    let c: PartialMap = b.iter().map(|y| y.and_then(|y| a[y])).collect();
                    index(&c).expect("composition is a partial bijection")
                })
                .collect()
        })
        .collect();
    let labels = maps.iter().map(partial_label).collect();
    InverseSemigroup::new(FiniteMonoid::new(table, labels)?)
}

/// The n² matrix units e_ij with a zero adjoined: e_ij e_kl = δ_jk e_il.
pub fn matrix_unit_semigroup(n: usize) -> Result<InverseSemigroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("matrix unit semigroup needs n ≥ 1".into()));
    }
    let size = n * n + 1;
    let zero = n * n;
    let table = (0..size)
        .map(|a| {
            (0..size)
                .map(|b| {
                    if a == zero || b == zero {
                        zero
                    } else {
                        let (i, j) = (a / n, a % n);
                        let (k, l) = (b / n, b % n);
                        if j == k {
                            i * n + l
                        } else {
                            zero
                        }
                    }
                })
                .collect()
        })
        .collect();
    let mut labels: Vec<String> = (0..n * n).map(|a| format!("e{}{}", a / n + 1, a % n + 1)).collect();
    labels.push("0".into());
    InverseSemigroup::new(FiniteMonoid::new(table, labels)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn sizes_match_counting_formula() {
        for n in 1..=4 {
            let expected: usize = (0..=n).map(|k| binom(n, k).pow(2) * (1..=k).product::<usize>()).sum();
            let s = symmetric_inverse_semigroup(n).unwrap();
            assert_eq!(s.size(), expected);
            assert!(s.base.unit.is_some() && s.base.zero.is_some());
        }
        assert_eq!(symmetric_inverse_semigroup(2).unwrap().size(), 7);
        assert_eq!(symmetric_inverse_semigroup(3).unwrap().size(), 34);
    }

    #[test]
    fn matrix_units() {
        let s = matrix_unit_semigroup(2).unwrap();
        assert_eq!(s.size(), 5);
        let idx = |l: &str| s.labels().iter().position(|x| x == l).unwrap();
        assert_eq!(s.mul(idx("e12"), idx("e21")), idx("e11"));
        assert_eq!(s.mul(idx("e12"), idx("e12")), idx("0"));
        assert_eq!(s.inv[idx("e12")], idx("e21"));
        assert_eq!(s.inv[idx("0")], idx("0"));
        assert!(s.base.unit.is_none());
        assert_eq!(matrix_unit_semigroup(1).unwrap().size(), 2);
    }
}
