//! Verifiers for the algebra, coalgebra, bialgebra, involution and
//! homogeneity laws on a distinguished basis.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::Result;
use crate::scalars::rational::int;
use crate::scalars::{format_rational, Field, Rational};

use super::two_algebra::{antilinear_tensor, flip, TwoAlgebra};
use super::verdict::{Verdict, Witness};

/// First index where two vectors differ.
pub(crate) fn first_diff(a: &[Rational], b: &[Rational]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

fn diff_witness(indices: Vec<usize>, pos: usize, lhs: &[Rational], rhs: &[Rational], what: String) -> Witness {
    let mut idx = indices;
    idx.push(pos);
    Witness::new(idx, vec![format_rational(&lhs[pos]), format_rational(&rhs[pos])], what)
}

/// Runs `f` over `0..n` in parallel and returns the witness with the
/// smallest index, so results do not depend on scheduling.
fn first_failure(n: usize, f: impl Fn(usize) -> Option<Witness> + Sync) -> Option<Witness> {
    (0..n).into_par_iter().filter_map(|i| f(i).map(|w| (i, w))).min_by_key(|(i, _)| *i).map(|(_, w)| w)
}

pub fn validate_2_algebra(a: &TwoAlgebra) -> Result<Verdict> {
    a.check_dims()?;
    let n = a.dim;
    const CHECK: &str = "validate_2_algebra";
    let one = &a.unit;

    // Unit law.
    if let Some(w) = first_failure(n, |i| {
        let x = a.basis_vector::<Rational>(i);
        let l = a.product(one, &x);
        if let Some(p) = first_diff(&l, &x) {
            return Some(diff_witness(vec![i], p, &l, &x, format!("unit law: 1 · x{i} ≠ x{i} at coordinate {p}")));
        }
        let r = a.product(&x, one);
        first_diff(&r, &x)
            .map(|p| diff_witness(vec![i], p, &r, &x, format!("unit law: x{i} · 1 ≠ x{i} at coordinate {p}")))
    }) {
        return Ok(Verdict::fails(CHECK, w));
    }

    // Counit law.
    if let Some(w) = first_failure(n, |i| {
        let d = a.coproduct(&a.basis_vector::<Rational>(i));
        let mut left = vec![int(0); n];
        let mut right = vec![int(0); n];
        for (idx, v) in d.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (j, k) = (idx / n, idx % n);
            left[k] += v * &a.counit[j];
            right[j] += v * &a.counit[k];
        }
        let x = a.basis_vector::<Rational>(i);
        if let Some(p) = first_diff(&left, &x) {
            return Some(diff_witness(vec![i], p, &left, &x, format!("counit law: (ε⊗id)Δx{i} ≠ x{i} at coordinate {p}")));
        }
        first_diff(&right, &x)
            .map(|p| diff_witness(vec![i], p, &right, &x, format!("counit law: (id⊗ε)Δx{i} ≠ x{i} at coordinate {p}")))
    }) {
        return Ok(Verdict::fails(CHECK, w));
    }

    // Associativity.
    if let Some(w) = first_failure(n, |i| {
        for j in 0..n {
            let ij = a.basis_product(i, j);
            for k in 0..n {
                let xk = a.basis_vector::<Rational>(k);
                let lhs = a.product(&ij, &xk);
                let jk = a.basis_product(j, k);
                let rhs = a.product(&a.basis_vector::<Rational>(i), &jk);
                if let Some(p) = first_diff(&lhs, &rhs) {
                    return Some(diff_witness(
                        vec![i, j, k],
                        p,
                        &lhs,
                        &rhs,
                        format!("associativity: (x{i}x{j})x{k} ≠ x{i}(x{j}x{k}) at coordinate {p}"),
                    ));
                }
            }
        }
        None
    }) {
        return Ok(Verdict::fails(CHECK, w));
    }

    // Coassociativity.
    if let Some(w) = first_failure(n, |i| {
        let mut lhs: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
        let mut rhs: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
        for (j, k, d) in a.comult.slice_i(i) {
            for (j1, j2, d2) in a.comult.slice_i(*j) {
                *lhs.entry((*j1, *j2, *k)).or_insert_with(|| int(0)) += d * d2;
            }
            for (k1, k2, d2) in a.comult.slice_i(*k) {
                *rhs.entry((*j, *k1, *k2)).or_insert_with(|| int(0)) += d * d2;
            }
        }
        lhs.retain(|_, v| !v.is_zero());
        rhs.retain(|_, v| !v.is_zero());
        if lhs == rhs {
            return None;
        }
        let key = lhs.keys().chain(rhs.keys()).find(|k| lhs.get(k) != rhs.get(k)).copied().unwrap();
        let get = |m: &BTreeMap<_, Rational>| m.get(&key).cloned().unwrap_or_else(|| int(0));
        Some(Witness::new(
            vec![i, key.0, key.1, key.2],
            vec![format_rational(&get(&lhs)), format_rational(&get(&rhs))],
            format!("coassociativity: (Δ⊗id)Δx{i} ≠ (id⊗Δ)Δx{i} at x{}⊗x{}⊗x{}", key.0, key.1, key.2),
        ))
    }) {
        return Ok(Verdict::fails(CHECK, w));
    }

    Ok(Verdict::holds(CHECK, "unit, counit, associativity and coassociativity hold"))
}

pub fn check_involutive(a: &TwoAlgebra) -> Result<Verdict> {
    a.check_dims()?;
    let n = a.dim;
    const CHECK: &str = "check_involutive";
    let basis = |i: usize| a.basis_vector::<Rational>(i);

    for (name, m) in [("♯", &a.invol), ("♭", &a.coinvol)] {
        for i in 0..n {
            let twice = m.apply(&m.apply(&basis(i)));
            if let Some(p) = first_diff(&twice, &basis(i)) {
                return Ok(Verdict::fails(
                    CHECK,
                    diff_witness(vec![i], p, &twice, &basis(i), format!("{name} is not of second order on x{i}")),
                ));
            }
        }
    }

    let sharp: Vec<Vec<Rational>> = (0..n).map(|i| a.invol.apply(&basis(i))).collect();
    let flat: Vec<Vec<Rational>> = (0..n).map(|i| a.coinvol.apply(&basis(i))).collect();

    if let Some(w) = first_failure(n, |i| {
        for j in 0..n {
            let lhs = a.product(&sharp[i], &sharp[j]);
            let rhs = a.invol.apply(&a.basis_product(j, i));
            if let Some(p) = first_diff(&lhs, &rhs) {
                return Some(diff_witness(
                    vec![i, j],
                    p,
                    &lhs,
                    &rhs,
                    format!("♯ is not an antiautomorphism: x{i}♯ x{j}♯ ≠ (x{j} x{i})♯ at coordinate {p}"),
                ));
            }
        }
        None
    }) {
        return Ok(Verdict::fails(CHECK, w));
    }

    if let Some(w) = first_failure(n, |i| {
        let lhs = antilinear_tensor(&a.coinvol, &a.coinvol, &a.coproduct(&basis(i)));
        let rhs = flip(&a.coproduct(&flat[i]), n);
        first_diff(&lhs, &rhs).map(|p| {
            diff_witness(vec![i], p, &lhs, &rhs, format!("♭ is not a coalgebra antiautomorphism: (♭⊗♭)Δx{i} ≠ JΔ(x{i}♭)"))
        })
    }) {
        return Ok(Verdict::fails(CHECK, w));
    }

    if let Some(w) = first_failure(n, |i| {
        let lhs = a.coproduct(&sharp[i]);
        let rhs = antilinear_tensor(&a.invol, &a.invol, &a.coproduct(&basis(i)));
        first_diff(&lhs, &rhs)
            .map(|p| diff_witness(vec![i], p, &lhs, &rhs, format!("Δ does not commute with ♯ on x{i}")))
    }) {
        return Ok(Verdict::fails(CHECK, w));
    }

    if let Some(w) = first_failure(n, |i| {
        for j in 0..n {
            let lhs = a.product(&flat[i], &flat[j]);
            let rhs = a.coinvol.apply(&a.basis_product(i, j));
            if let Some(p) = first_diff(&lhs, &rhs) {
                return Some(diff_witness(
                    vec![i, j],
                    p,
                    &lhs,
                    &rhs,
                    format!("multiplication does not commute with ♭ on (x{i}, x{j})"),
                ));
            }
        }
        None
    }) {
        return Ok(Verdict::fails(CHECK, w));
    }

    Ok(Verdict::holds(CHECK, "♯ and ♭ are second-order antiautomorphisms compatible with δ and Δ"))
}

pub fn is_bialgebra(a: &TwoAlgebra) -> Result<Verdict> {
    a.check_dims()?;
    let n = a.dim;
    const CHECK: &str = "is_bialgebra";
    let cop: Vec<Vec<Rational>> = (0..n).map(|i| a.coproduct(&a.basis_vector::<Rational>(i))).collect();

    if let Some(w) = first_failure(n, |i| {
        for j in 0..n {
            let lhs = a.coproduct(&a.basis_product(i, j));
            let rhs = a.tensor_product(&cop[i], &cop[j]);
            if let Some(p) = first_diff(&lhs, &rhs) {
                return Some(diff_witness(
                    vec![i, j],
                    p,
                    &lhs,
                    &rhs,
                    format!("Δ(x{i}x{j}) ≠ Δ(x{i})Δ(x{j}) at x{}⊗x{}", p / n, p % n),
                ));
            }
        }
        None
    }) {
        return Ok(Verdict::fails(CHECK, w));
    }

    if let Some(w) = counit_character_failure(a) {
        return Ok(Verdict::fails(CHECK, w));
    }
    Ok(Verdict::holds(CHECK, "Δ and ε are algebra homomorphisms"))
}

/// ε(x_i x_j) = ε(x_i)ε(x_j) and ε(1) = 1.
fn counit_character_failure(a: &TwoAlgebra) -> Option<Witness> {
    let n = a.dim;
    for i in 0..n {
        for j in 0..n {
            let lhs: Rational = a.counit_of(&a.basis_product(i, j));
            let rhs = &a.counit[i] * &a.counit[j];
            if lhs != rhs {
                return Some(Witness::new(
                    vec![i, j],
                    vec![format_rational(&lhs), format_rational(&rhs)],
                    format!("counit is not multiplicative: ε(x{i}x{j}) ≠ ε(x{i})ε(x{j})"),
                ));
            }
        }
    }
    let e1: Rational = a.counit_of(&a.unit);
    if !e1.is_one() {
        return Some(Witness::new(vec![], vec![format_rational(&e1)], "counit of the unit is not 1"));
    }
    None
}

pub fn check_homogeneity(a: &TwoAlgebra) -> Result<Verdict> {
    const CHECK: &str = "check_homogeneity";
    let v = validate_2_algebra(a)?;
    if v.is_fails() {
        return Ok(Verdict::fails(CHECK, v.witness.unwrap()));
    }
    let n = a.dim;
    if let Some(w) = counit_character_failure(a) {
        return Ok(Verdict::fails(CHECK, w));
    }
    for i in 0..n {
        let lhs: Rational = a.counit_of(&a.invol.apply(&a.basis_vector::<Rational>(i)));
        if lhs != a.counit[i] {
            return Ok(Verdict::fails(
                CHECK,
                Witness::new(
                    vec![i],
                    vec![format_rational(&lhs), format_rational(&a.counit[i])],
                    format!("ε∘♯ ≠ conj∘ε on x{i}"),
                ),
            ));
        }
    }
    if a.weakened {
        return Ok(Verdict::holds(CHECK, "counit is a ♯-compatible character; Δ(1) = 1⊗1 skipped (weakened)"));
    }
    let lhs = a.coproduct(&a.unit);
    let mut rhs = vec![int(0); n * n];
    for (j, uj) in a.unit.iter().enumerate() {
        for (k, uk) in a.unit.iter().enumerate() {
            rhs[j * n + k] = uj * uk;
        }
    }
    if let Some(p) = first_diff(&lhs, &rhs) {
        return Ok(Verdict::fails(
            CHECK,
            diff_witness(vec![], p, &lhs, &rhs, format!("Δ(1) ≠ 1⊗1 at x{}⊗x{}", p / n, p % n)),
        ));
    }
    Ok(Verdict::holds(CHECK, "counit is a ♯-compatible character and Δ(1) = 1⊗1"))
}
