//! Nonstrict dilations: an embedding into a larger 2-algebra together with a
//! coaction extending the comultiplication of the image.

use num_traits::ToPrimitive;

use crate::scalars::poly::cyclotomic_polynomial_int;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{TwoAlgebra, Verdict, Witness};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalars::rational::int;
use crate::scalars::{Cyclotomic, Field, Rational};
use crate::semigroup::catalog::abelian_catalog;
use crate::semigroup::{build_group, dual_semigroup_bialgebra, GroupSpec, InverseSemigroup};

use super::quasi::{algebra_from_quasicharacters, AbelianGroup, QuasiCharacterMatrix};

const CHECK: &str = "verify_nonstrict_witness";

/// Everything needed to check a nonstrict dilation of `target` into `ambient`.
#[derive(Clone, Debug)]
pub struct NonstrictWitness {
    pub ambient: TwoAlgebra,
    pub target: TwoAlgebra,
    /// Column `j` is `T(b_j)`.
    pub embedding: Matrix<Rational>,
    /// `coaction[i]` is `ρ(x_i) ∈ A⊗A`, flattened.
    pub coaction: Vec<Vec<Cyclotomic>>,
}

fn fail(indices: Vec<usize>, values: Vec<String>, description: String) -> Verdict {
    Verdict::fails(CHECK, Witness::new(indices, values, description))
}

fn cyc(v: &[Rational]) -> Vec<Cyclotomic> {
    v.iter().map(Cyclotomic::from_rational).collect()
}

/// `ℤ[ζ_L]` with `i128` coefficients modulo `Φ_L`, for fast exact
/// comparison of scaled cyclotomic tensors. Arithmetic returns `None` on
/// overflow.
struct IntRing {
    order: u64,
    phi: Vec<i128>,
}

type IntCyc = Vec<i128>;

impl IntRing {
    fn new(order: u64) -> Option<Self> {
        let phi = cyclotomic_polynomial_int(order).iter().map(|c| c.to_i128()).collect::<Option<Vec<_>>>()?;
        Some(IntRing { order, phi })
    }

    fn deg(&self) -> usize {
        self.phi.len() - 1
    }

    /// `scale · x` as integer coefficients, if integral.
    fn embed(&self, x: &Cyclotomic, scale: &Rational) -> Option<IntCyc> {
        let c = x.coerce(self.order).ok()?;
        let mut out = vec![0i128; self.deg()];
        for (i, v) in c.coeffs().iter().enumerate() {
            let s = v * scale;
            if !s.is_integer() {
                return None;
            }
            out[i] = s.to_integer().to_i128()?;
        }
        Some(out)
    }

    fn mul_add(&self, acc: &mut IntCyc, x: &IntCyc, y: &IntCyc) -> Option<()> {
        let d = self.deg();
        let mut prod = vec![0i128; 2 * d.max(1)];
        for (i, a) in x.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                prod[i + j] = prod[i + j].checked_add(a.checked_mul(*b)?)?;
            }
        }
        for k in (d..prod.len()).rev() {
            let c = prod[k];
            if c != 0 {
                for t in 0..d {
                    prod[k - d + t] = prod[k - d + t].checked_sub(c.checked_mul(self.phi[t])?)?;
                }
                prod[k] = 0;
            }
        }
        for t in 0..d {
            acc[t] = acc[t].checked_add(prod[t])?;
        }
        Some(())
    }
}

/// First basis index and flattened position where `(Δ⊗id)ρ ≠ (id⊗ρ)ρ`,
/// computed over integers; `Err` when the integer path does not apply.
fn coassociativity_int(a: &TwoAlgebra, rho: &[Vec<Cyclotomic>]) -> std::result::Result<Option<(usize, usize)>, ()> {
    let n = a.dim;
    let order = rho.iter().flatten().map(Cyclotomic::order).fold(1u64, |l, o| num_integer::Integer::lcm(&l, &o));
    let ring = IntRing::new(order).ok_or(())?;
    let denom = |r: &Rational| r.denom().clone();
    let mut dr = num_bigint::BigInt::from(1);
    for x in rho.iter().flatten() {
        for c in x.coerce(order).map_err(|_| ())?.coeffs() {
            dr = num_integer::Integer::lcm(&dr, &denom(c));
        }
    }
    let mut de = num_bigint::BigInt::from(1);
    for (_, _, _, v) in a.comult.entries() {
        de = num_integer::Integer::lcm(&de, &denom(v));
    }
    let (dr, de) = (Rational::from_integer(dr), Rational::from_integer(de));
    let r: Vec<Vec<IntCyc>> = rho
        .iter()
        .map(|row| row.iter().map(|x| ring.embed(x, &dr)).collect::<Option<Vec<_>>>())
        .collect::<Option<_>>()
        .ok_or(())?;
    let dr_i = ring.embed(&Cyclotomic::rational(dr.clone()), &int(1)).ok_or(())?;
    let de_i = ring.embed(&Cyclotomic::rational(de.clone()), &int(1)).ok_or(())?;
    let comult: Vec<Vec<(usize, usize, IntCyc)>> = (0..n)
        .map(|j| {
            a.comult
                .slice_i(j)
                .iter()
                .map(|(p, q, d)| ring.embed(&Cyclotomic::rational(d.clone()), &de).map(|v| (*p, *q, v)))
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<_>>()
        .ok_or(())?;
    let zero = vec![0i128; ring.deg()];
    let res: Vec<std::result::Result<Option<(usize, usize)>, ()>> = (0..n)
        .into_par_iter()
        .map(|i| {
            // Both sides are scaled by D²E, D and E the denominators of ρ and Δ.
            let mut lhs = vec![zero.clone(); n * n * n];
            let mut rhs = lhs.clone();
            for (idx, v) in r[i].iter().enumerate() {
                if v.iter().all(|c| *c == 0) {
                    continue;
                }
                let (j, k) = (idx / n, idx % n);
                for (p, q, d) in &comult[j] {
                    let mut t = zero.clone();
                    ring.mul_add(&mut t, v, d).ok_or(())?;
                    ring.mul_add(&mut lhs[(p * n + q) * n + k], &t, &dr_i).ok_or(())?;
                }
                for (idx2, u) in r[k].iter().enumerate() {
                    if u.iter().any(|c| *c != 0) {
                        let mut t = zero.clone();
                        ring.mul_add(&mut t, v, u).ok_or(())?;
                        ring.mul_add(&mut rhs[j * n * n + idx2], &t, &de_i).ok_or(())?;
                    }
                }
            }
            Ok((0..n * n * n).find(|&x| lhs[x] != rhs[x]).map(|x| (i, x)))
        })
        .collect();
    for x in res {
        if let Some(hit) = x? {
            return Ok(Some(hit));
        }
    }
    Ok(None)
}

/// Exact check of coassociativity at basis element `i`.
fn exact_coassociativity(a: &TwoAlgebra, rho: &[Vec<Cyclotomic>], i: usize) -> Option<(usize, usize, Cyclotomic, Cyclotomic)> {
    let n = a.dim;
    let mut lhs = vec![Cyclotomic::zero(); n * n * n];
    let mut rhs = lhs.clone();
    for (idx, v) in rho[i].iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let (j, k) = (idx / n, idx % n);
        for (p, q, d) in a.comult.slice_i(j) {
            let at = (p * n + q) * n + k;
            lhs[at] = lhs[at].add(&v.mul(&Cyclotomic::from_rational(d)));
        }
        for (idx2, u) in rho[k].iter().enumerate() {
            if !u.is_zero() {
                let at = j * n * n + idx2;
                rhs[at] = rhs[at].add(&v.mul(u));
            }
        }
    }
    (0..n * n * n).find(|&x| lhs[x] != rhs[x]).map(|x| (i, x, lhs[x].clone(), rhs[x].clone()))
}

/// Checks that `T` is an injective unital ♯,♭-preserving algebra map, that
/// `ρ` is a coassociative counital left coaction of `A` on itself, and that
/// `(P⊗id)ρ(Tb) = (T⊗T)Δ(b)` where `P` is the orthogonal projection onto
/// `T(B)`. Whether `T(B)` is a subcomodule is reported in the notes.
pub fn verify_nonstrict_witness(w: &NonstrictWitness) -> Result<Verdict> {
    let (a, b, t, rho) = (&w.ambient, &w.target, &w.embedding, &w.coaction);
    let (n, m) = (a.dim, b.dim);
    if t.len() != n || t.iter().any(|r| r.len() != m) || rho.len() != n || rho.iter().any(|r| r.len() != n * n) {
        return Err(Error::DimensionMismatch("embedding or coaction has the wrong shape".into()));
    }
    let tcols: Vec<Vec<Rational>> = linalg::transpose(t);
    let apply_t = |v: &[Rational]| -> Vec<Rational> { linalg::mat_vec(t, v) };
    if linalg::rank(&tcols) != m {
        return Ok(fail(vec![], vec![], "T is not injective".into()));
    }
    if apply_t(&b.unit) != a.unit {
        return Ok(fail(vec![], vec![], "T does not preserve the unit".into()));
    }
    for i in 0..m {
        for j in 0..m {
            if apply_t(&b.basis_product(i, j)) != a.product(&tcols[i], &tcols[j]) {
                return Ok(fail(vec![i, j], vec![], format!("T(b{i}·b{j}) ≠ T(b{i})·T(b{j})")));
            }
        }
        for (name, fa, fb) in [("♯", &a.invol, &b.invol), ("♭", &a.coinvol, &b.coinvol)] {
            if apply_t(&fb.apply(&b.basis_vector::<Rational>(i))) != fa.apply(&tcols[i]) {
                return Ok(fail(vec![i], vec![], format!("T does not commute with {name} on b{i}")));
            }
        }
    }
    // Coassociativity and counit of ρ.
    let bad = match coassociativity_int(a, rho) {
        Ok(None) => None,
        Ok(Some((i, _))) => exact_coassociativity(a, rho, i),
        Err(()) => (0..n).find_map(|i| exact_coassociativity(a, rho, i)),
    };
    if let Some((i, x, l, r)) = bad {
        let (p, q, k) = (x / (n * n), (x / n) % n, x % n);
        return Ok(fail(
            vec![i, p, q, k],
            vec![l.to_string(), r.to_string()],
            format!("ρ is not coassociative at x{i}: coefficient of x{p}⊗x{q}⊗x{k} is {l} vs {r}"),
        ));
    }
    for i in 0..n {
        let mut out = vec![Cyclotomic::zero(); n];
        for (idx, v) in rho[i].iter().enumerate() {
            let e = &a.counit[idx / n];
            if !e.is_zero() {
                out[idx % n] = out[idx % n].add(&v.mul(&Cyclotomic::from_rational(e)));
            }
        }
        if out != a.basis_vector::<Cyclotomic>(i) {
            return Ok(fail(vec![i], vec![], format!("(ε⊗id)ρ(x{i}) ≠ x{i}")));
        }
    }
    // Subcomodule and extension.
    let gram = linalg::mat_mul(&tcols, t);
    let gram_inv = linalg::inverse(&gram).expect("T is injective");
    let proj = linalg::mat_mul(&linalg::mat_mul(t, &gram_inv), &tcols);
    let tcyc: Vec<Vec<Cyclotomic>> = tcols.iter().map(|c| cyc(c)).collect();
    let mut subcomodule = true;
    for j in 0..m {
        let tb = cyc(&tcols[j]);
        let mut r = vec![Cyclotomic::zero(); n * n];
        for (i, x) in tb.iter().enumerate() {
            if !x.is_zero() {
                for (idx, v) in rho[i].iter().enumerate() {
                    r[idx] = r[idx].add(&x.mul(v));
                }
            }
        }
        if subcomodule {
            subcomodule = (0..n).all(|row| {
                let right = &r[row * n..(row + 1) * n];
                right.iter().all(Field::is_zero) || linalg::coordinates(&tcyc, right).is_some()
            });
        }
        let mut projected = vec![Cyclotomic::zero(); n * n];
        for (idx, v) in r.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (p, q) = (idx / n, idx % n);
            for s in 0..n {
                if !proj[s][p].is_zero() {
                    let at = s * n + q;
                    projected[at] = projected[at].add(&v.mul(&Cyclotomic::from_rational(&proj[s][p])));
                }
            }
        }
        let mut want = vec![Cyclotomic::zero(); n * n];
        for (p, q, d) in b.comult.slice_i(j) {
            for s in 0..n {
                for u in 0..n {
                    let c = &t[s][*p] * &t[u][*q] * d;
                    if !c.is_zero() {
                        want[s * n + u] = want[s * n + u].add(&Cyclotomic::from_rational(&c));
                    }
                }
            }
        }
        if let Some(x) = (0..n * n).find(|&x| projected[x] != want[x]) {
            return Ok(fail(
                vec![j, x / n, x % n],
                vec![projected[x].to_string(), want[x].to_string()],
                format!("(P⊗id)ρ(T b{j}) ≠ (T⊗T)Δ(b{j}) at x{}⊗x{}", x / n, x % n),
            ));
        }
    }
    let note = if subcomodule { "; T(B) is a subcomodule" } else { "; T(B) is not a subcomodule" };
    Ok(Verdict::holds(CHECK, format!("embedding, coaction and extension conditions hold{note}")))
}

/// A block structure on an abelian group whose averaged characters
/// reproduce a quasi-character matrix: `Q[r][c]` is the average of character
/// `characters[r]` over `blocks[c]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoarseGrainWitness {
    pub factors: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
    pub characters: Vec<usize>,
}

impl CoarseGrainWitness {
    pub fn group_name(&self) -> String {
        self.factors.iter().map(|m| format!("Z{m}")).collect::<Vec<_>>().join("x")
    }
}

/// Inverse-closed partitions of the group into exactly `k` blocks, identity
/// in block 0, visited as block label vectors.
fn for_each_symmetric_partition(g: &AbelianGroup, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    let n = g.order();
    let mut reps = Vec::new();
    let mut seen = vec![false; n];
    for x in 0..n {
        if !seen[x] {
            seen[x] = true;
            seen[g.inverse(x)] = true;
            reps.push(x);
        }
    }
    let mut labels = vec![0usize; reps.len()];
    fn rec(i: usize, used: usize, k: usize, labels: &mut [usize], emit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if i == labels.len() {
            return if used == k { emit(labels) } else { true };
        }
        if labels.len() - i < k - used {
            return true;
        }
        let top = if i == 0 { 1 } else { (used + 1).min(k) };
        for l in 0..top {
            labels[i] = l;
            if !rec(i + 1, used.max(l + 1), k, labels, emit) {
                return false;
            }
        }
        true
    }
    let mut emit = |orbit_labels: &[usize]| -> bool {
        let mut full = vec![0; n];
        for (r, &x) in reps.iter().enumerate() {
            full[x] = orbit_labels[r];
            full[g.inverse(x)] = orbit_labels[r];
        }
        f(&full)
    };
    rec(0, 0, k, &mut labels, &mut emit);
}

fn match_group(g: &AbelianGroup, q: &[Vec<Rational>]) -> Result<Option<CoarseGrainWitness>> {
    let k = q.len();
    let n = g.order();
    let table = g.character_table()?;
    let l = g.exponent() as f64;
    let approx: Vec<Vec<(f64, f64)>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|x| {
                    let t = std::f64::consts::TAU * g.pairing(a, x) as f64 / l;
                    (t.cos(), t.sin())
                })
                .collect()
        })
        .collect();
    let q_values: Vec<f64> = q.iter().flatten().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect();
    let mut found = None;
    for_each_symmetric_partition(g, k, &mut |labels| {
        let mut blocks = vec![Vec::new(); k];
        for (x, &l) in labels.iter().enumerate() {
            blocks[l].push(x);
        }
        // Floating point screens out characters whose block averages cannot
        // be entries of Q; surviving averages are computed exactly.
        let avg: Vec<Option<Vec<Rational>>> = (0..n)
            .map(|psi| {
                let plausible = blocks.iter().all(|blk| {
                    let (re, im) = blk.iter().fold((0.0, 0.0), |(r, i), &x| (r + approx[psi][x].0, i + approx[psi][x].1));
                    let (re, im) = (re / blk.len() as f64, im / blk.len() as f64);
                    im.abs() < 1e-9 && q_values.iter().any(|v| (v - re).abs() < 1e-9)
                });
                if !plausible {
                    return None;
                }
                blocks
                    .iter()
                    .map(|blk| {
                        let s = blk.iter().fold(Cyclotomic::zero(), |s, &x| s.add(&table[psi][x]));
                        s.to_rational().map(|r| r / int(blk.len() as i64))
                    })
                    .collect()
            })
            .collect();
        for perm in permutations_fixing_zero(k) {
            // column c of Q is block perm[c]
            let mut chosen = vec![0usize];
            if assign(&avg, q, &perm, &mut chosen) {
                found = Some(CoarseGrainWitness {
                    factors: g.factors.clone(),
                    blocks: perm.iter().map(|&b| blocks[b].clone()).collect(),
                    characters: chosen,
                });
                return false;
            }
        }
        true
    });
    Ok(found)
}

fn assign(avg: &[Option<Vec<Rational>>], q: &[Vec<Rational>], perm: &[usize], chosen: &mut Vec<usize>) -> bool {
    let r = chosen.len();
    if r == q.len() {
        return true;
    }
    for (psi, row) in avg.iter().enumerate() {
        let Some(row) = row else { continue };
        if chosen.contains(&psi) || perm.iter().enumerate().any(|(c, &b)| row[b] != q[r][c]) {
            continue;
        }
        chosen.push(psi);
        if assign(avg, q, perm, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn permutations_fixing_zero(k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0]];
    for x in 1..k {
        out = out
            .into_iter()
            .flat_map(|p| (1..=p.len()).map(move |pos| {
                let mut q = p.clone();
                q.insert(pos, x);
                q
            }))
            .collect();
    }
    out
}

/// Searches abelian groups of order ≤ `max_order` for a coarse-graining of
/// the character table matching a rational quasi-character matrix.
pub fn coarse_grain_search(q: &QuasiCharacterMatrix, max_order: usize) -> Result<Option<CoarseGrainWitness>> {
    let rows = q.rational_entries().ok_or_else(|| Error::Split("quasi-character matrix has irrational entries".into()))?;
    let groups: Vec<AbelianGroup> = abelian_catalog(max_order)
        .into_iter()
        .filter(|s| s.order() >= q.dim())
        .map(|s| match s {
            GroupSpec::Cyclic { m } => AbelianGroup::new(&[m]),
            GroupSpec::Abelian { factors } => AbelianGroup::new(&factors),
            _ => unreachable!("abelian catalog"),
        })
        .collect();
    let results: Vec<Result<Option<CoarseGrainWitness>>> = groups.par_iter().map(|g| match_group(g, &rows)).collect();
    for r in results {
        if let Some(w) = r? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Turns a coarse-graining into an explicit nonstrict witness: the target
/// is the algebra with quasi-character matrix `Qᵀ` (equal to the algebra of
/// `Q` when `Q` is symmetric), the ambient is the function algebra of the
/// group, and the coaction grades by the selected characters.
pub fn nonstrict_from_coarse_grain(w: &CoarseGrainWitness, q: &QuasiCharacterMatrix) -> Result<NonstrictWitness> {
    let g = AbelianGroup::new(&w.factors);
    let spec = if g.factors.len() == 1 {
        GroupSpec::Cyclic { m: g.factors[0] }
    } else {
        GroupSpec::Abelian { factors: g.factors.clone() }
    };
    let ambient = dual_semigroup_bialgebra(&InverseSemigroup::new(build_group(&spec)?)?)?;
    let target = algebra_from_quasicharacters(&q.transpose())?;
    let rows = q.rational_entries().ok_or_else(|| Error::Split("irrational quasi-character matrix".into()))?;
    let (n, k) = (g.order(), rows.len());
    let mut block_of = vec![usize::MAX; n];
    for (c, blk) in w.blocks.iter().enumerate() {
        for &x in blk {
            block_of[x] = c;
        }
    }
    if block_of.contains(&usize::MAX) {
        return Err(Error::InvalidArgument("blocks do not cover the group".into()));
    }
    // T(g'_j)(x) = Q[j][block(x)].
    let embedding: Matrix<Rational> = (0..n).map(|x| (0..k).map(|j| rows[j][block_of[x]].clone()).collect()).collect();
    // a(m) = (Qᵀ)⁻¹ · (block averages of m).
    let qt_inv = linalg::inverse(&linalg::transpose(&rows)).ok_or_else(|| Error::InvalidArgument("singular matrix".into()))?;
    let table = g.character_table()?;
    let mut coaction = Vec::with_capacity(n);
    for x in 0..n {
        let mut avg = vec![int(0); k];
        avg[block_of[x]] = int(1) / int(w.blocks[block_of[x]].len() as i64);
        let coeff = linalg::mat_vec(&qt_inv, &avg);
        let mut pis: Vec<Vec<Rational>> = (0..k).map(|j| embedding.iter().map(|r| &r[j] * &coeff[j]).collect()).collect();
        let mut rest = vec![int(0); n];
        rest[x] = int(1);
        for pj in pis.iter().skip(1) {
            for (r, v) in rest.iter_mut().zip(pj) {
                *r = &*r - v;
            }
        }
        pis[0] = rest;
        let mut rho = vec![Cyclotomic::zero(); n * n];
        for (j, pj) in pis.iter().enumerate() {
            let psi = &table[w.characters[j]];
            for h in 0..n {
                for (y, v) in pj.iter().enumerate() {
                    if !v.is_zero() {
                        rho[h * n + y] = rho[h * n + y].add(&psi[h].scale(v));
                    }
                }
            }
        }
        coaction.push(rho);
    }
    Ok(NonstrictWitness { ambient, target, embedding, coaction })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::two_algebra::flip;
    use crate::dilation::two_dim::a_lambda;
    use crate::dilation::quasi::quasicharacter_matrix;
    use crate::scalars::rational::rat;
    use crate::semigroup::semigroup_bialgebra;

    fn z(m: usize) -> InverseSemigroup {
        InverseSemigroup::new(build_group(&GroupSpec::Cyclic { m }).unwrap()).unwrap()
    }

    fn comult_coaction(a: &TwoAlgebra) -> Vec<Vec<Cyclotomic>> {
        (0..a.dim).map(|i| cyc(&a.coproduct(&a.basis_vector::<Rational>(i)))).collect()
    }

    #[test]
    fn identity_witness() {
        let a = semigroup_bialgebra(&z(2)).unwrap();
        let w = NonstrictWitness {
            ambient: a.clone(),
            target: a_lambda(&int(1)).unwrap(),
            embedding: linalg::identity(2),
            coaction: comult_coaction(&a),
        };
        assert!(verify_nonstrict_witness(&w).unwrap().is_holds());
    }

    #[test]
    fn perturbed_coaction_fails() {
        let a = dual_semigroup_bialgebra(&z(4)).unwrap();
        let n = a.dim;
        let mut rho: Vec<Vec<Cyclotomic>> = comult_coaction(&a).iter().map(|r| flip(r, n)).collect();
        rho[1][1] = rho[1][1].neg();
        let target = algebra_from_quasicharacters(&QuasiCharacterMatrix::from_rationals(&[vec![int(1)]]).unwrap()).unwrap();
        let w = NonstrictWitness { ambient: a, target, embedding: vec![vec![int(1)]; n], coaction: rho };
        let v = verify_nonstrict_witness(&w).unwrap();
        assert!(v.is_fails());
        assert!(v.notes.contains("coassociative"), "{}", v.notes);
    }

    #[test]
    fn strict_embedding_with_own_coproduct() {
        // A_{1/3} inside ℂ[ℤ₄] by block averages, coaction Δ.
        let a = semigroup_bialgebra(&z(4)).unwrap();
        let t = vec![vec![int(1), int(0)], vec![int(0), rat(1, 3)], vec![int(0), rat(1, 3)], vec![int(0), rat(1, 3)]];
        let w = NonstrictWitness { coaction: comult_coaction(&a), ambient: a, target: a_lambda(&rat(1, 3)).unwrap(), embedding: t };
        assert!(verify_nonstrict_witness(&w).unwrap().is_holds());
    }

    #[test]
    fn coarse_grains() {
        for (l, order) in [(int(1), 2), (rat(1, 2), 3), (rat(1, 3), 4), (rat(1, 4), 5)] {
            let q = quasicharacter_matrix(&a_lambda(&l).unwrap()).unwrap();
            let w = coarse_grain_search(&q, order).unwrap().unwrap_or_else(|| panic!("no coarse grain for {l}"));
            assert_eq!(w.factors.iter().product::<usize>(), order);
            let nw = nonstrict_from_coarse_grain(&w, &q).unwrap();
            assert_eq!(nw.target, a_lambda(&l).unwrap());
            assert!(verify_nonstrict_witness(&nw).unwrap().is_holds());
        }
        // A nontrivial character summing to 1 on C_0 averages to −|C_0|/(|G|−|C_0|)
        // on the rest, so λ = 2/5 needs 7|C_0| = 2|G|: no group of order ≤ 16 fits.
        let q = quasicharacter_matrix(&a_lambda(&rat(2, 5)).unwrap()).unwrap();
        assert_eq!(coarse_grain_search(&q, 16).unwrap(), None);
    }
}
