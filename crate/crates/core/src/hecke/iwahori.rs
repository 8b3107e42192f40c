//! The Hecke algebra H_n(p) as the Borel double-coset algebra of GL_n(F_p).

use serde::Serialize;

use crate::algebra::{Verdict, Witness};
use crate::dilation::search::permute_basis;
use crate::dilation::{induced_two_algebra, is_stable_partition, Partition};
use crate::error::{Error, Result};
use crate::scalars::rational::int;
use crate::scalars::format_rational;
use crate::semigroup::{semigroup_bialgebra, InverseSemigroup};

use super::algebra::{build_hecke, hecke_two_algebra};
use super::gl::{borel_double_cosets, build_gl};

const CHECK: &str = "iwahori_check";

#[derive(Clone, Debug, Serialize)]
pub struct IwahoriReport {
    pub n: usize,
    pub p: u64,
    pub group_order: usize,
    pub block_sizes: Vec<usize>,
    /// Multiplication identities `c^k_{ij}` compared (dim³).
    pub identities: usize,
    pub mismatches: usize,
    pub verdict: Verdict,
}

/// Builds GL_n(F_p), checks that the Borel double cosets form a stable
/// partition, orders the induced basis by Bruhat cell and compares it
/// entrywise with the stochastic form of H_n(p).
pub fn iwahori_check(n: usize, p: u64) -> Result<IwahoriReport> {
    let g = build_gl(n, p)?;
    let blocks = borel_double_cosets(&g);
    let part = Partition::new(g.order(), blocks)?;
    let a = semigroup_bialgebra(&InverseSemigroup::new(g.monoid.clone())?)?;
    let (v, cert) = is_stable_partition(&a, &part)?;
    let cert = cert.ok_or_else(|| Error::InvalidArgument(format!("Borel double cosets are not stable: {}", v.notes)))?;
    let (induced, _) = induced_two_algebra(&a, &cert)?;
    let h = build_hecke(n, &int(p as i64))?;
    let target = hecke_two_algebra(&h);
    let perm: Vec<usize> = part.blocks().iter().map(|b| h.index[&g.bruhat_cell(b[0])]).collect();
    let ordered = permute_basis(&induced, &perm);
    let d = target.dim;
    let mut mismatches = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (x, y) = (ordered.mult.get(i, j, k), target.mult.get(i, j, k));
                if x != y {
                    mismatches.push((i, j, k, x, y));
                }
            }
        }
    }
    let mut block_sizes: Vec<usize> = vec![0; d];
    for (b, blk) in part.blocks().iter().enumerate() {
        block_sizes[perm[b]] = blk.len();
    }
    let others_agree = ordered.unit == target.unit
        && ordered.comult == target.comult
        && ordered.counit == target.counit
        && ordered.invol == target.invol
        && ordered.coinvol == target.coinvol;
    let verdict = if let Some((i, j, k, x, y)) = mismatches.first() {
        Verdict::fails(
            CHECK,
            Witness::new(
                vec![*i, *j, *k],
                vec![format_rational(x), format_rational(y)],
                format!("coefficient of T{} in T{}·T{}: {} from double cosets, {} in H_{n}({p})", h.basis[*k], h.basis[*i], h.basis[*j], format_rational(x), format_rational(y)),
            ),
        )
    } else if !others_agree {
        Verdict::fails(CHECK, Witness::new(vec![], vec![], "unit, counit, comultiplication or involutions differ"))
    } else {
        Verdict::holds(CHECK, format!("{} multiplication identities and the remaining structure agree", d * d * d))
    };
    Ok(IwahoriReport {
        n,
        p,
        group_order: g.order(),
        block_sizes,
        identities: d * d * d,
        mismatches: mismatches.len(),
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        for (n, p) in [(2, 2), (2, 3), (2, 5)] {
            let r = iwahori_check(n, p).unwrap();
            assert!(r.verdict.is_holds(), "{n},{p}: {:?}", r.verdict);
            assert_eq!(r.identities, 8);
            let b = (p as usize - 1).pow(2) * p as usize;
            assert_eq!(r.block_sizes, vec![b, b * p as usize]);
        }
    }

    #[test]
    fn gl3_f2() {
        let r = iwahori_check(3, 2).unwrap();
        assert!(r.verdict.is_holds(), "{:?}", r.verdict);
        assert_eq!(r.identities, 216);
        assert_eq!(r.block_sizes, vec![8, 16, 16, 32, 32, 64]);
    }
}
