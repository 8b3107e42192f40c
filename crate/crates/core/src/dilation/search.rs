//! Strict dilation search over the catalog and the census of `A_λ`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::positivity::grouplike_basis;
use crate::algebra::{check_positive_2_algebra, AntilinearMap, StructureTensor, TwoAlgebra, Verdict};
use crate::error::Result;
use crate::linalg;
use crate::scalars::rational::{int, rat};
use crate::scalars::{format_rational, Rational};
use crate::semigroup::catalog::AmbientSpec;
use crate::semigroup::semigroup_bialgebra;

use super::enumerate::{enumerate_with, EnumerationMode};
use super::induced::{induced_two_algebra, is_strict_subobject};
use super::nonstrict::{coarse_grain_search, nonstrict_from_coarse_grain, verify_nonstrict_witness, CoarseGrainWitness};
use super::partition::Partition;
use super::quasi::QuasiCharacterMatrix;
use super::stable::block_sum;
use super::two_dim::{a_lambda, classify_2dim, theorem3_predicate, TwoDimClass};

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rational))
}

fn ser_rational<S: serde::Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(v))
}

/// A stable partition of a catalog member whose induced 2-algebra is
/// isomorphic to the target: block `b` (with block sum divided by
/// `normalization[b]`) maps to target grouplike basis element `iso[b]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DilationWitness {
    pub ambient: AmbientSpec,
    pub partition: Partition,
    #[serde(serialize_with = "ser_rationals")]
    pub normalization: Vec<Rational>,
    pub iso: Vec<usize>,
}

impl DilationWitness {
    pub fn describe(&self) -> String {
        format!("{} {}", self.ambient.name(), self.partition.display(None))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AmbientRun {
    pub ambient: String,
    pub mode: EnumerationMode,
}

#[derive(Clone, Debug, Serialize)]
pub struct StrictSearch {
    pub witnesses: Vec<DilationWitness>,
    pub runs: Vec<AmbientRun>,
    pub notes: Vec<String>,
}

/// Re-expresses `a` in a new basis whose vectors are `basis[c]`.
pub fn change_basis(a: &TwoAlgebra, basis: &[Vec<Rational>]) -> Option<TwoAlgebra> {
    let n = a.dim;
    let coords = linalg::inverse(&linalg::transpose(basis))?;
    let to_new = |v: &[Rational]| linalg::mat_vec(&coords, v);
    let mut mult = Vec::new();
    let mut comult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in to_new(&a.product(&basis[i], &basis[j])).into_iter().enumerate() {
                if !c.is_zero() {
                    mult.push((i, j, k, c));
                }
            }
        }
        let d = a.coproduct(&basis[i]);
        let dm: Vec<Vec<Rational>> = (0..n).map(|j| d[j * n..(j + 1) * n].to_vec()).collect();
        let c = linalg::mat_mul(&linalg::mat_mul(&coords, &dm), &linalg::transpose(&coords));
        for (j, row) in c.into_iter().enumerate() {
            for (k, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    comult.push((i, j, k, v));
                }
            }
        }
    }
    let transport = |f: &AntilinearMap| -> AntilinearMap {
        let cols: Vec<Vec<Rational>> = basis.iter().map(|b| to_new(&f.apply(b))).collect();
        AntilinearMap { matrix: linalg::transpose(&cols) }
    };
    Some(TwoAlgebra {
        dim: n,
        labels: None,
        mult: StructureTensor::from_entries(n, mult).ok()?,
        unit: to_new(&a.unit),
        comult: StructureTensor::from_entries(n, comult).ok()?,
        counit: basis.iter().map(|b| a.counit_of(b)).collect(),
        invol: transport(&a.invol),
        coinvol: transport(&a.coinvol),
        weakened: a.weakened,
    })
}

/// Relabels basis element `i` as `perm[i]`.
pub fn permute_basis(a: &TwoAlgebra, perm: &[usize]) -> TwoAlgebra {
    let n = a.dim;
    let t = |s: &StructureTensor| s.permute_indices(|i, j, k| (perm[i], perm[j], perm[k]));
    let vec = |v: &[Rational]| {
        let mut out = vec![int(0); n];
        for (i, x) in v.iter().enumerate() {
            out[perm[i]] = x.clone();
        }
        out
    };
    let mat = |m: &AntilinearMap| {
        let mut out = vec![vec![int(0); n]; n];
        for r in 0..n {
            for c in 0..n {
                out[perm[r]][perm[c]] = m.matrix[r][c].clone();
            }
        }
        AntilinearMap { matrix: out }
    };
    TwoAlgebra {
        dim: n,
        labels: a.labels.as_ref().map(|l| {
            let mut out = l.clone();
            for (i, x) in l.iter().enumerate() {
                out[perm[i]] = x.clone();
            }
            out
        }),
        mult: t(&a.mult),
        unit: vec(&a.unit),
        comult: t(&a.comult),
        counit: vec(&a.counit),
        invol: mat(&a.invol),
        coinvol: mat(&a.coinvol),
        weakened: a.weakened,
    }
}

/// A basis permutation carrying `a` entrywise onto `b`, by backtracking with
/// unit, counit and ♯/♭-diagonal pruning.
pub fn find_isomorphism(a: &TwoAlgebra, b: &TwoAlgebra) -> Option<Vec<usize>> {
    let n = a.dim;
    if b.dim != n || a.mult.nnz() != b.mult.nnz() || a.comult.nnz() != b.comult.nnz() {
        return None;
    }
    let sig = |x: &TwoAlgebra, i: usize| {
        (
            x.unit[i].clone(),
            x.counit[i].clone(),
            x.invol.matrix[i][i].clone(),
            x.coinvol.matrix[i][i].clone(),
            x.mult.get(i, i, i),
            x.comult.get(i, i, i),
        )
    };
    let sa: Vec<_> = (0..n).map(|i| sig(a, i)).collect();
    let sb: Vec<_> = (0..n).map(|i| sig(b, i)).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec<T: PartialEq>(
        i: usize,
        a: &TwoAlgebra,
        b: &TwoAlgebra,
        sa: &[T],
        sb: &[T],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = a.dim;
        if i == n {
            return permute_basis(a, perm) == *b;
        }
        for j in 0..n {
            if used[j] || sa[i] != sb[j] {
                continue;
            }
            perm[i] = j;
            // products among assigned elements landing on assigned elements
            let consistent = (0..=i).all(|x| {
                (0..=i).all(|y| {
                    (0..=i).all(|z| a.mult.get(x, y, z) == b.mult.get(perm[x], perm[y], perm[z]))
                })
            });
            if consistent {
                used[j] = true;
                if rec(i + 1, a, b, sa, sb, perm, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        perm[i] = usize::MAX;
        false
    }
    rec(0, a, b, &sa, &sb, &mut perm, &mut used).then_some(perm)
}

/// The target rewritten in a grouplike basis with `Δg = g⊗g`.
fn grouplike_form(t: &TwoAlgebra) -> Option<TwoAlgebra> {
    if t.diagonal_comult().is_some_and(|d| d.iter().all(|x| *x == int(1))) {
        return Some(t.clone());
    }
    let (g, _) = grouplike_basis(t)?;
    change_basis(t, &g)
}

/// Searches every catalog member for a stable partition whose induced
/// 2-algebra is isomorphic to `target`. Each witness is re-verified: the
/// block sums form a strict sub-object and the relabelled induced algebra
/// equals the target's grouplike form entrywise. An empty result means no
/// witness within these bounds.
pub fn strict_dilation_search(target: &TwoAlgebra, catalog: &[AmbientSpec]) -> Result<StrictSearch> {
    let mut notes = Vec::new();
    let pos = check_positive_2_algebra(target)?;
    if !pos.is_holds() {
        notes.push(format!("target is not a positive 2-algebra: {}", pos.notes));
        return Ok(StrictSearch { witnesses: vec![], runs: vec![], notes });
    }
    let Some(tg) = grouplike_form(target) else {
        notes.push("target comultiplication has no rational grouplike basis; induced algebras always do".into());
        return Ok(StrictSearch { witnesses: vec![], runs: vec![], notes });
    };
    let d = target.dim;
    let per: Vec<Result<(AmbientRun, Vec<DilationWitness>)>> = catalog
        .par_iter()
        .filter(|amb| amb.order() >= d)
        .map(|amb| {
            let s = amb.build()?;
            let a = semigroup_bialgebra(&s)?;
            let e = enumerate_with(&s, &a, d)?;
            let mut found = Vec::new();
            for cert in e.certs.iter().filter(|c| c.partition.num_blocks() == d) {
                if let Some(w) = witness_for(amb, &a, cert, &tg)? {
                    found.push(w);
                }
            }
            Ok((AmbientRun { ambient: amb.name(), mode: e.mode }, found))
        })
        .collect();
    let mut witnesses = Vec::new();
    let mut runs = Vec::new();
    for r in per {
        let (run, w) = r?;
        runs.push(run);
        witnesses.extend(w);
    }
    if runs.iter().any(|r| r.mode == EnumerationMode::Structured) {
        notes.push("structured mode (double cosets and automorphism orbits) was used for large members".into());
    }
    Ok(StrictSearch { witnesses, runs, notes })
}

fn witness_for(
    amb: &AmbientSpec,
    a: &TwoAlgebra,
    cert: &super::stable::StablePartitionCert,
    target: &TwoAlgebra,
) -> Result<Option<DilationWitness>> {
    let Ok((induced, normalization)) = induced_two_algebra(a, cert) else { return Ok(None) };
    let Some(iso) = find_isomorphism(&induced, target) else { return Ok(None) };
    let p = &cert.partition;
    let sums: Vec<Vec<Rational>> = (0..p.num_blocks()).map(|b| block_sum(p, b)).collect();
    if !is_strict_subobject(a, &sums)?.is_holds() || permute_basis(&induced, &iso) != *target {
        return Ok(None);
    }
    Ok(Some(DilationWitness { ambient: amb.clone(), partition: p.clone(), normalization, iso }))
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    #[serde(serialize_with = "ser_rational")]
    pub lambda: Rational,
    /// `(k, s)` when the predicate holds, absent when it does not or λ is
    /// outside its domain.
    pub predicted: Option<(u64, u64)>,
    pub witnesses: Vec<DilationWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NonstrictRow {
    #[serde(serialize_with = "ser_rational")]
    pub lambda: Rational,
    pub witness: Option<CoarseGrainWitness>,
    pub verdict: Option<Verdict>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Census {
    pub max_order: usize,
    /// Strict witnesses for `0 < λ ≤ 1`.
    pub strict: Vec<CensusRow>,
    /// Strict witnesses for λ outside the predicate's domain (λ = 0).
    pub outside_domain: Vec<CensusRow>,
    pub nonstrict: Vec<NonstrictRow>,
    pub runs: Vec<AmbientRun>,
    pub discrepancies: Vec<String>,
    pub notes: Vec<String>,
}

impl Census {
    pub fn strict_lambdas(&self) -> Vec<Rational> {
        self.strict.iter().map(|r| r.lambda.clone()).collect()
    }
}

/// Harvests λ from every 2-block stable partition of catalog members of
/// order ≤ `max_order`, cross-tabulates against the predicate, and searches
/// coarse grains for the harvested λ and for `p/q` with `q ≤ 5`.
pub fn lambda_census(max_order: usize, catalog: &[AmbientSpec]) -> Result<Census> {
    let members: Vec<&AmbientSpec> = catalog.iter().filter(|a| a.order() <= max_order && a.order() >= 2).collect();
    let per: Vec<Result<(AmbientRun, Vec<(Rational, DilationWitness)>, Vec<String>)>> = members
        .par_iter()
        .map(|amb| {
            let s = amb.build()?;
            let a = semigroup_bialgebra(&s)?;
            let e = enumerate_with(&s, &a, 2)?;
            let mut found = Vec::new();
            let mut odd = Vec::new();
            for cert in e.certs.iter().filter(|c| c.partition.num_blocks() == 2) {
                let (induced, _) = match induced_two_algebra(&a, cert) {
                    Ok(x) => x,
                    Err(err) => {
                        odd.push(format!("{} {}: {err}", amb.name(), cert.partition.display(None)));
                        continue;
                    }
                };
                match classify_2dim(&induced)? {
                    TwoDimClass::Lambda { lambda } => {
                        match witness_for(amb, &a, cert, &a_lambda(&lambda)?)? {
                            Some(w) => found.push((lambda, w)),
                            None => odd.push(format!(
                                "{} {}: classified as A_{} but re-verification failed",
                                amb.name(),
                                cert.partition.display(None),
                                format_rational(&lambda)
                            )),
                        }
                    }
                    other => odd.push(format!("{} {}: {other:?}", amb.name(), cert.partition.display(None))),
                }
            }
            Ok((AmbientRun { ambient: amb.name(), mode: e.mode }, found, odd))
        })
        .collect();
    let mut table: BTreeMap<Rational, Vec<DilationWitness>> = BTreeMap::new();
    let mut runs = Vec::new();
    let mut notes = Vec::new();
    for r in per {
        let (run, found, odd) = r?;
        runs.push(run);
        notes.extend(odd);
        for (l, w) in found {
            table.entry(l).or_default().push(w);
        }
    }
    let mut strict = Vec::new();
    let mut outside_domain = Vec::new();
    let mut discrepancies = Vec::new();
    for (lambda, witnesses) in table.into_iter().rev() {
        if lambda > int(0) && lambda <= int(1) {
            let predicted = theorem3_predicate(&lambda)?;
            if predicted.is_none() {
                discrepancies.push(format!(
                    "λ = {} has a strict witness ({}) but the predicate says NotPredicted",
                    format_rational(&lambda),
                    witnesses[0].describe()
                ));
            }
            strict.push(CensusRow { lambda, predicted, witnesses });
        } else {
            outside_domain.push(CensusRow { lambda, predicted: None, witnesses });
        }
    }
    let third = rat(1, 3);
    let z4 = strict
        .iter()
        .find(|r| r.lambda == third)
        .and_then(|r| r.witnesses.iter().find(|w| w.ambient.name() == "Z4"))
        .map(DilationWitness::describe);
    discrepancies.push(format!(
        "reference claim \"A_1/3 has a nonstrict but no strict dilation\" conflicts with theorem3_predicate(1/3) = (k, s) = (1, 3) and with the strict census: {}",
        z4.unwrap_or_else(|| "no Z4 witness within these bounds".into())
    ));
    if !outside_domain.is_empty() {
        notes.push("λ = 0 is realized by idempotent semigroup elements and lies outside the predicate's domain 0 < λ ≤ 1".into());
    }
    notes.push("strict dilations with k > 1 have irrational λ and no finite witness; not searched".into());

    let mut grid: Vec<Rational> = strict.iter().map(|r| r.lambda.clone()).collect();
    for q in 1..=5 {
        for p in 1..=q {
            grid.push(rat(p, q));
        }
    }
    grid.sort();
    grid.dedup();
    grid.reverse();
    let nonstrict = grid
        .into_par_iter()
        .map(|lambda| {
            let q = QuasiCharacterMatrix::from_rationals(&[vec![int(1), int(1)], vec![int(1), -lambda.clone()]])?;
            let witness = coarse_grain_search(&q, max_order)?;
            let verdict = match &witness {
                Some(w) => Some(verify_nonstrict_witness(&nonstrict_from_coarse_grain(w, &q)?)?),
                None => None,
            };
            Ok(NonstrictRow { lambda, witness, verdict })
        })
        .collect::<Result<Vec<_>>>()?;
    for row in &nonstrict {
        if let Some(v) = &row.verdict {
            if !v.is_holds() {
                discrepancies.push(format!("coarse grain for λ = {} failed verification: {}", format_rational(&row.lambda), v.notes));
            }
        }
    }
    for row in &strict {
        if !nonstrict.iter().any(|n| n.lambda == row.lambda && n.verdict.as_ref().is_some_and(Verdict::is_holds)) {
            discrepancies.push(format!("λ = {} has a strict witness but no verified coarse grain", format_rational(&row.lambda)));
        }
    }
    Ok(Census { max_order, strict, outside_domain, nonstrict, runs, discrepancies, notes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::catalog::ambient_catalog;

    #[test]
    fn strict_examples() {
        let cat = ambient_catalog(8, true);
        let half = strict_dilation_search(&a_lambda(&rat(1, 2)).unwrap(), &cat).unwrap();
        let names: Vec<String> = half.witnesses.iter().map(DilationWitness::describe).collect();
        assert!(names.contains(&"Z3 {0},{1,2}".to_string()), "{names:?}");
        assert!(names.iter().any(|n| n.starts_with("S3 ")), "{names:?}");
        let third = strict_dilation_search(&a_lambda(&rat(1, 3)).unwrap(), &cat).unwrap();
        assert!(third.witnesses.iter().any(|w| w.describe() == "Z4 {0},{1,2,3}"));
        let w = &third.witnesses[0];
        assert_eq!(w.normalization.len(), 2);
    }

    #[test]
    fn census_small() {
        let c = lambda_census(8, &ambient_catalog(8, true)).unwrap();
        let want: Vec<Rational> = (1..=7).map(|n| rat(1, n)).collect();
        assert_eq!(c.strict_lambdas(), want);
        assert!(c.strict.iter().all(|r| r.predicted.is_some()));
        assert_eq!(c.outside_domain.iter().map(|r| r.lambda.clone()).collect::<Vec<_>>(), vec![int(0)]);
        assert_eq!(c.discrepancies.len(), 1, "{:?}", c.discrepancies);
    }
}
