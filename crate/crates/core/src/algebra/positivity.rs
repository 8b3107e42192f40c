//! Positivity of multiplication and comultiplication.
//!
//! Tier 1 applies when ♯ and ♭ permute the distinguished basis and every
//! structure constant is nonnegative. Tier 2 decides one side exactly when
//! the relevant commutative algebra splits over ℚ into idempotents fixed by
//! the relevant (co)involution: the cone is then the nonnegative orthant in
//! that basis. Anything else is Inconclusive.

use crate::error::Result;
use crate::linalg;
use crate::scalars::rational::is_nonnegative;
use crate::scalars::{format_rational, Rational};

use super::axioms::{check_homogeneity, check_involutive, validate_2_algebra};
use super::dual::dual;
use super::semisimple::{is_semisimple, Side};
use super::split::rational_primitive_idempotents;
use super::two_algebra::TwoAlgebra;
use super::verdict::{Status, Verdict, Witness};

const MULT: &str = "check_positivity(mult)";
const COMULT: &str = "check_positivity(comult)";

/// Tier 1: `Some` only when it applies, in which case both sides hold.
pub fn positivity_tier1(a: &TwoAlgebra) -> Option<(Verdict, Verdict)> {
    a.invol.as_permutation()?;
    a.coinvol.as_permutation()?;
    let nonneg = |t: &crate::algebra::StructureTensor| t.entries().iter().all(|(_, _, _, v)| is_nonnegative(v));
    if !nonneg(&a.mult) || !nonneg(&a.comult) {
        return None;
    }
    let note = "tier 1: ♯, ♭ permute the basis and all structure constants are nonnegative";
    Some((Verdict::holds(MULT, note), Verdict::holds(COMULT, note)))
}

/// Grouplike basis `g_r` (Δg = g⊗g) as columns, with the coordinate map
/// (rows = coordinate functionals), when the coalgebra splits over ℚ.
pub(crate) fn grouplike_basis(a: &TwoAlgebra) -> Option<(Vec<Vec<Rational>>, Vec<Vec<Rational>>)> {
    let n = a.dim;
    if let Some(d) = a.diagonal_comult() {
        let g: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut v = a.basis_vector::<Rational>(i);
                v[i] = d[i].clone();
                v
            })
            .collect();
        let coords: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut v = a.basis_vector::<Rational>(i);
                v[i] = crate::scalars::Field::inv(&d[i])?;
                Some(v)
            })
            .collect::<Option<_>>()?;
        return Some((g, coords));
    }
    let d = dual(a).ok()?;
    if !d.is_commutative() {
        return None;
    }
    let f = rational_primitive_idempotents(&d)?;
    if f.len() != n {
        return None;
    }
    let inv = linalg::inverse(&f)?;
    let g = linalg::transpose(&inv);
    Some((g, f))
}

/// Tier 2 on the multiplication side.
pub fn tier2_mult(a: &TwoAlgebra) -> Option<Verdict> {
    let (g, coords) = grouplike_basis(a)?;
    if g.iter().any(|v| a.coinvol.apply(v) != *v) {
        return None;
    }
    let n = a.dim;
    for r in 0..n {
        for s in 0..n {
            let prod = a.product(&g[r], &g[s]);
            let c = linalg::mat_vec(&coords, &prod);
            if let Some(t) = c.iter().position(|x| !is_nonnegative(x)) {
                return Some(Verdict::fails(
                    MULT,
                    Witness::new(
                        vec![r, s, t],
                        vec![format_rational(&c[t])],
                        format!(
                            "tier 2: in the grouplike basis, g{r}·g{s} has coefficient {} on g{t}",
                            format_rational(&c[t])
                        ),
                    ),
                ));
            }
        }
    }
    Some(Verdict::holds(MULT, "tier 2: grouplike-basis multiplication constants are nonnegative"))
}

/// Tier 2 on the comultiplication side.
pub fn tier2_comult(a: &TwoAlgebra) -> Option<Verdict> {
    let e = rational_primitive_idempotents(a)?;
    let n = a.dim;
    if e.len() != n || e.iter().any(|v| a.invol.apply(v) != *v) {
        return None;
    }
    let m = linalg::inverse(&linalg::transpose(&e))?;
    for (r, er) in e.iter().enumerate() {
        let d = a.coproduct(er);
        let dm: Vec<Vec<Rational>> = (0..n).map(|j| d[j * n..(j + 1) * n].to_vec()).collect();
        let c = linalg::mat_mul(&linalg::mat_mul(&m, &dm), &linalg::transpose(&m));
        for s in 0..n {
            for t in 0..n {
                if !is_nonnegative(&c[s][t]) {
                    return Some(Verdict::fails(
                        COMULT,
                        Witness::new(
                            vec![r, s, t],
                            vec![format_rational(&c[s][t])],
                            format!(
                                "tier 2: Δe{r} has coefficient {} on e{s}⊗e{t} in the idempotent basis",
                                format_rational(&c[s][t])
                            ),
                        ),
                    ));
                }
            }
        }
    }
    Some(Verdict::holds(COMULT, "tier 2: idempotent-basis comultiplication constants are nonnegative"))
}

/// Tier 2 results per side, `None` where it does not apply.
pub fn positivity_tier2(a: &TwoAlgebra) -> (Option<Verdict>, Option<Verdict>) {
    (tier2_mult(a), tier2_comult(a))
}

pub fn check_positivity(a: &TwoAlgebra) -> Result<(Verdict, Verdict)> {
    a.check_dims()?;
    let (m2, c2) = positivity_tier2(a);
    let t1 = positivity_tier1(a);
    let undecided = |check: &str| {
        Verdict::inconclusive(
            check,
            "no implemented tier decides cone preservation here (general recognition is NP-complete)",
        )
    };
    let mult = m2.or_else(|| t1.as_ref().map(|t| t.0.clone())).unwrap_or_else(|| undecided(MULT));
    let comult = c2.or_else(|| t1.as_ref().map(|t| t.1.clone())).unwrap_or_else(|| undecided(COMULT));
    Ok((mult, comult))
}

pub fn check_positive_2_algebra(a: &TwoAlgebra) -> Result<Verdict> {
    const CHECK: &str = "check_positive_2_algebra";
    let mut parts = vec![validate_2_algebra(a)?];
    if parts[0].is_fails() {
        return Ok(Verdict::all(CHECK, &parts));
    }
    parts.push(is_semisimple(a, Side::Algebra)?);
    parts.push(is_semisimple(a, Side::Coalgebra)?);
    parts.push(check_involutive(a)?);
    if parts.iter().any(Verdict::is_fails) {
        return Ok(Verdict::all(CHECK, &parts));
    }
    let (m, c) = check_positivity(a)?;
    parts.push(m);
    parts.push(c);
    if parts.iter().any(|v| v.status == Status::Fails) {
        return Ok(Verdict::all(CHECK, &parts));
    }
    parts.push(check_homogeneity(a)?);
    Ok(Verdict::all(CHECK, &parts))
}
