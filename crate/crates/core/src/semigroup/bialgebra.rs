//! Semigroup bialgebras of inverse semigroups and the reverse construction.

use std::collections::BTreeMap;

use crate::algebra::split::rational_primitive_idempotents;
use crate::algebra::{dual, AntilinearMap, StructureTensor, TwoAlgebra, Verdict, Witness};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalars::rational::int;
use crate::scalars::{format_rational, Field, Rational};

use super::monoid::{is_inverse, FiniteMonoid, InverseSemigroup};

/// ℂ[S] with Δs = s⊗s, ε(s) = 1, ♯(s) = s*, ♭ = conjugation.
///
/// Without a semigroup unit the algebra unit is solved for linearly and the
/// result is flagged as weakened.
pub fn semigroup_bialgebra(s: &InverseSemigroup) -> Result<TwoAlgebra> {
    let n = s.size();
    let mult = StructureTensor::from_entries(n, (0..n).flat_map(|a| (0..n).map(move |b| (a, b, s.mul(a, b), int(1)))))?;
    let comult = StructureTensor::from_entries(n, (0..n).map(|a| (a, a, a, int(1))))?;
    let mut a = TwoAlgebra {
        dim: n,
        labels: Some(s.labels().to_vec()),
        mult,
        unit: vec![int(0); n],
        comult,
        counit: vec![int(1); n],
        invol: AntilinearMap::from_permutation(&s.inv),
        coinvol: AntilinearMap::conjugation(n),
        weakened: false,
    };
    match s.base.unit {
        Some(e) => a.unit[e] = int(1),
        None => {
            a.unit = solve_unit(&a)
                .ok_or_else(|| Error::InvalidArgument("semigroup algebra has no unit".into()))?;
            a.weakened = true;
        }
    }
    Ok(a)
}

/// The two-sided identity of the algebra, if any.
pub fn solve_unit(a: &TwoAlgebra) -> Option<Vec<Rational>> {
    let n = a.dim;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for j in 0..n {
        for k in 0..n {
            // (u·x_j)_k = Σ_i u_i c^k_{ij};  (x_j·u)_k = Σ_i u_i c^k_{ji}
            rows.push((0..n).map(|i| a.mult.get(i, j, k)).collect::<Vec<Rational>>());
            rhs.push(if j == k { int(1) } else { int(0) });
            rows.push((0..n).map(|i| a.mult.get(j, i, k)).collect());
            rhs.push(if j == k { int(1) } else { int(0) });
        }
    }
    linalg::solve(&rows, &rhs)
}

/// Functions on S: the dual of the semigroup bialgebra.
pub fn dual_semigroup_bialgebra(s: &InverseSemigroup) -> Result<TwoAlgebra> {
    dual(&semigroup_bialgebra(s)?)
}

/// Left and right convolutions of the identity with `a ↦ a⁻¹`, as matrices
/// whose column `j` is the image of basis element `j`.
pub fn antipode_convolutions(a: &TwoAlgebra, inv: &[usize]) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let n = a.dim;
    let s_tilde = |v: &[Rational]| -> Vec<Rational> {
        let mut out = vec![int(0); n];
        for (i, x) in v.iter().enumerate() {
            out[inv[i]] += x;
        }
        out
    };
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    for i in 0..n {
        let mut l = vec![int(0); n];
        let mut r = vec![int(0); n];
        for (j, k, d) in a.comult.slice_i(i) {
            let xj = a.basis_vector::<Rational>(*j);
            let xk = a.basis_vector::<Rational>(*k);
            let lp = a.product(&xj, &s_tilde(&xk));
            let rp = a.product(&s_tilde(&xj), &xk);
            for t in 0..n {
                l[t] += d * &lp[t];
                r[t] += d * &rp[t];
            }
        }
        left.push(l);
        right.push(r);
    }
    (linalg::transpose(&left), linalg::transpose(&right))
}

/// The convolutions id⋆S̃ and S̃⋆id send a to aa⁻¹ and a⁻¹a, are idempotent
/// operators, and land in the span of the idempotents.
pub fn almost_antipode_check(s: &InverseSemigroup) -> Result<Verdict> {
    const CHECK: &str = "almost_antipode_check";
    let a = semigroup_bialgebra(s)?;
    let n = a.dim;
    let (left, right) = antipode_convolutions(&a, &s.inv);
    let idem = s.base.idempotents();
    for (name, m, expect) in [
        ("id⋆S̃", &left, (0..n).map(|x| s.mul(x, s.inv[x])).collect::<Vec<_>>()),
        ("S̃⋆id", &right, (0..n).map(|x| s.mul(s.inv[x], x)).collect()),
    ] {
        for (x, &e) in expect.iter().enumerate() {
            let col: Vec<Rational> = m.iter().map(|row| row[x].clone()).collect();
            if col != a.basis_vector::<Rational>(e) {
                return Ok(Verdict::fails(
                    CHECK,
                    Witness::new(vec![x, e], vec![], format!("{name}({}) ≠ {}", s.labels()[x], s.labels()[e])),
                ));
            }
            if let Some(t) = (0..n).find(|t| !col[*t].is_zero() && !idem.contains(t)) {
                return Ok(Verdict::fails(
                    CHECK,
                    Witness::new(vec![x, t], vec![], format!("{name}({}) leaves the span of idempotents", s.labels()[x])),
                ));
            }
        }
        if linalg::mat_mul(m, m) != *m {
            return Ok(Verdict::fails(
                CHECK,
                Witness::new(vec![], vec![], format!("{name} is not an idempotent operator")),
            ));
        }
    }
    Ok(Verdict::holds(CHECK, "both convolutions project onto the span of idempotents"))
}

/// Rebuilds the inverse semigroup from a cocommutative bialgebra whose dual
/// splits over ℚ: the spectrum of the dual gives the elements, and the
/// comultiplication of its primitive idempotents gives the product.
pub fn recover_semigroup(a: &TwoAlgebra) -> Result<InverseSemigroup> {
    let n = a.dim;
    let d = dual(a)?;
    let f = rational_primitive_idempotents(&d)
        .ok_or_else(|| Error::Split("dual algebra does not split over ℚ".into()))?;
    if f.len() != n {
        return Err(Error::Split(format!("found {} primitive idempotents for dim {n}", f.len())));
    }
    // Coordinates in the f basis: columns of F⁻¹ where F has the f_r as columns.
    let fmat = linalg::transpose(&f);
    let coords = linalg::inverse(&fmat).ok_or_else(|| Error::Split("idempotents are dependent".into()))?;
    let mut table = vec![vec![usize::MAX; n]; n];
    for (r, fr) in f.iter().enumerate() {
        let cop = d.coproduct(fr);
        let cm: Vec<Vec<Rational>> = (0..n).map(|j| cop[j * n..(j + 1) * n].to_vec()).collect();
        let c = linalg::mat_mul(&linalg::mat_mul(&coords, &cm), &linalg::transpose(&coords));
        for s in 0..n {
            for t in 0..n {
                if c[s][t].is_zero() {
                    continue;
                }
                if !c[s][t].is_one() || table[s][t] != usize::MAX {
                    return Err(Error::InvalidArgument(format!(
                        "comultiplication of idempotent {r} is not a set-theoretic product (coefficient {})",
                        format_rational(&c[s][t])
                    )));
                }
                table[s][t] = r;
            }
        }
    }
    if table.iter().flatten().any(|&x| x == usize::MAX) {
        return Err(Error::InvalidArgument("recovered product is not everywhere defined".into()));
    }
    // The grouplike element dual to f_r; use its support for labels.
    let g = linalg::inverse(&f).map(|m| linalg::transpose(&m)).unwrap();
    let labels: Vec<String> = g
        .iter()
        .map(|v| {
            let supp: Vec<usize> = (0..n).filter(|&i| !v[i].is_zero()).collect();
            match supp.as_slice() {
                [i] => a.label(*i),
                _ => supp.iter().map(|&i| a.label(i)).collect::<Vec<_>>().join("+"),
            }
        })
        .collect();
    let base = FiniteMonoid::new(table, labels)?;
    let (v, inv) = is_inverse(&base);
    let inv = inv.ok_or_else(|| Error::NotInverse(v.notes.clone()))?;
    // ♭ on the dual is the transposed ♯ and must permute the f_r as s ↦ s*.
    for (r, fr) in f.iter().enumerate() {
        let img = d.coinvol.apply(fr);
        if img != f[inv[r]] {
            return Err(Error::NotInverse(format!("coinvolution does not match the inverse of element {r}")));
        }
    }
    Ok(InverseSemigroup { base, inv })
}

/// Equality as labeled tables: same label set, and the products and inverses
/// agree under the label correspondence.
pub fn isomorphic_as_labeled(s: &InverseSemigroup, t: &InverseSemigroup) -> bool {
    if s.size() != t.size() {
        return false;
    }
    let pos: BTreeMap<&String, usize> = t.labels().iter().enumerate().map(|(i, l)| (l, i)).collect();
    let Some(map) = s.labels().iter().map(|l| pos.get(l).copied()).collect::<Option<Vec<usize>>>() else {
        return false;
    };
    (0..s.size()).all(|a| {
        map[s.inv[a]] == t.inv[map[a]] && (0..s.size()).all(|b| map[s.mul(a, b)] == t.mul(map[a], map[b]))
    })
}
