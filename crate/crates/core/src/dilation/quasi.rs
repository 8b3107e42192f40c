//! Quasi-character matrices of bicommutative 2-algebras and character tables
//! of finite abelian groups.

use serde::Serialize;

use crate::algebra::positivity::grouplike_basis;
use crate::algebra::split::rational_primitive_idempotents;
use crate::algebra::{is_semisimple, AntilinearMap, Side, StructureTensor, TwoAlgebra};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalars::cyclotomic::root_of_unity;
use crate::scalars::rational::{int, is_nonnegative};
use crate::scalars::{Cyclotomic, Field, Rational};
use crate::semigroup::groups::invariant_factors;

/// Rows are characters (row 0 the counit), columns grouplikes (column 0 the
/// unit); entry `(r, c)` is `χ_r(g_c)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuasiCharacterMatrix {
    #[serde(serialize_with = "ser_entries")]
    pub entries: Vec<Vec<Cyclotomic>>,
}

fn ser_entries<S: serde::Serializer>(e: &[Vec<Cyclotomic>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(e.len()))?;
    for row in e {
        seq.serialize_element(&row.iter().map(|x| x.to_string()).collect::<Vec<_>>())?;
    }
    seq.end()
}

/// Solves `target = Σ w_t vecs[t]` and requires rational `w_t ≥ 0`.
fn convex_weights(vecs: &[Vec<Cyclotomic>], target: &[Cyclotomic]) -> Option<Vec<Rational>> {
    let w = linalg::coordinates(vecs, target)?;
    let w: Vec<Rational> = w.iter().map(Cyclotomic::to_rational).collect::<Option<_>>()?;
    w.iter().all(is_nonnegative).then_some(w)
}

impl QuasiCharacterMatrix {
    pub fn new(entries: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let q = QuasiCharacterMatrix { entries };
        q.validate()?;
        Ok(q)
    }

    pub fn from_rationals(rows: &[Vec<Rational>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|x| Cyclotomic::rational(x.clone())).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> Self {
        QuasiCharacterMatrix { entries: linalg::transpose(&self.entries) }
    }

    pub fn rational_entries(&self) -> Option<Vec<Vec<Rational>>> {
        self.entries.iter().map(|r| r.iter().map(Cyclotomic::to_rational).collect()).collect()
    }

    /// Square and invertible, first row and column all ones, and products of
    /// rows (resp. columns) are convex combinations of rows (resp. columns).
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        let bad = |m: String| Err(Error::InvalidArgument(m));
        if n == 0 || self.entries.iter().any(|r| r.len() != n) {
            return bad("quasi-character matrix must be square and nonempty".into());
        }
        let one = Cyclotomic::one();
        if self.entries[0].iter().any(|x| *x != one) || self.entries.iter().any(|r| r[0] != one) {
            return bad("first row and first column must be all ones".into());
        }
        if linalg::inverse(&self.entries).is_none() {
            return bad("quasi-character matrix is singular".into());
        }
        let cols = linalg::transpose(&self.entries);
        for (name, vecs) in [("rows", &self.entries), ("columns", &cols)] {
            for a in 0..n {
                for b in a..n {
                    let prod: Vec<Cyclotomic> = vecs[a].iter().zip(&vecs[b]).map(|(x, y)| x.mul(y)).collect();
                    if convex_weights(vecs, &prod).is_none() {
                        return bad(format!("product of {name} {a} and {b} is not a convex combination of {name}"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The quasi-character matrix of a bicommutative 2-algebra that is
/// semisimple on both sides and splits over ℚ.
pub fn quasicharacter_matrix(a: &TwoAlgebra) -> Result<QuasiCharacterMatrix> {
    if !a.is_commutative() || !a.is_cocommutative() {
        return Err(Error::InvalidArgument("the 2-algebra is not bicommutative".into()));
    }
    for side in [Side::Algebra, Side::Coalgebra] {
        if !is_semisimple(a, side)?.is_holds() {
            return Err(Error::InvalidArgument(format!("not semisimple on the {side:?} side")));
        }
    }
    let idem = rational_primitive_idempotents(a).ok_or_else(|| Error::Split("the algebra does not split over ℚ".into()))?;
    let (g, _) = grouplike_basis(a).ok_or_else(|| Error::Split("the coalgebra does not split over ℚ".into()))?;
    let n = a.dim;
    if idem.len() != n {
        return Err(Error::Split("the algebra does not split over ℚ".into()));
    }
    // χ_r(x) from x·e_r = χ_r(x) e_r.
    let chi = |r: usize, x: &[Rational]| -> Rational {
        let e = &idem[r];
        let p = a.product(x, e);
        let i = e.iter().position(|c| !c.is_zero()).expect("idempotent is nonzero");
        &p[i] / &e[i]
    };
    let mut cols: Vec<usize> = (0..n).collect();
    let unit_col = g.iter().position(|v| *v == a.unit).ok_or_else(|| Error::InvalidArgument("the unit is not grouplike".into()))?;
    cols.retain(|&c| c != unit_col);
    cols.insert(0, unit_col);
    let table: Vec<Vec<Rational>> = (0..n).map(|r| cols.iter().map(|&c| chi(r, &g[c])).collect()).collect();
    let eps_row = (0..n)
        .find(|&r| idem[r].iter().zip(&a.counit).fold(int(0), |s, (x, e)| s + x * e) == int(1) && table[r].iter().all(|x| *x == int(1)))
        .ok_or_else(|| Error::InvalidArgument("the counit is not a character".into()))?;
    let mut rows: Vec<usize> = (0..n).filter(|&r| r != eps_row).collect();
    rows.insert(0, eps_row);
    QuasiCharacterMatrix::from_rationals(&rows.iter().map(|&r| table[r].clone()).collect::<Vec<_>>())
}

/// The bicommutative 2-algebra with the given rational quasi-character
/// matrix, in its grouplike basis (basis element `c` is column `c`).
pub fn algebra_from_quasicharacters(q: &QuasiCharacterMatrix) -> Result<TwoAlgebra> {
    q.validate()?;
    let n = q.dim();
    if q.rational_entries().is_none() {
        return Err(Error::Split("quasi-character matrix has irrational entries".into()));
    }
    let cols = linalg::transpose(&q.entries);
    let mut mult = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let prod: Vec<Cyclotomic> = cols[a].iter().zip(&cols[b]).map(|(x, y)| x.mul(y)).collect();
            let w = convex_weights(&cols, &prod).expect("validated");
            mult.extend(w.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (a, b, c, x)));
        }
    }
    let mut unit = vec![int(0); n];
    unit[0] = int(1);
    TwoAlgebra::new(
        n,
        StructureTensor::from_entries(n, mult)?,
        unit,
        StructureTensor::from_entries(n, (0..n).map(|b| (b, b, b, int(1))))?,
        vec![int(1); n],
        AntilinearMap::conjugation(n),
        AntilinearMap::conjugation(n),
    )
}

/// A finite abelian group `ℤ_{m_1} × … × ℤ_{m_r}` in invariant-factor form,
/// with elements indexed in mixed radix as in the group catalog.
#[derive(Clone, Debug)]
pub struct AbelianGroup {
    pub factors: Vec<usize>,
}

impl AbelianGroup {
    pub fn new(factors: &[usize]) -> Self {
        AbelianGroup { factors: invariant_factors(factors) }
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> usize {
        *self.factors.last().unwrap_or(&1)
    }

    pub fn digits(&self, mut x: usize) -> Vec<usize> {
        let mut d = vec![0; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            d[i] = x % self.factors[i];
            x /= self.factors[i];
        }
        d
    }

    pub fn inverse(&self, x: usize) -> usize {
        let d = self.digits(x);
        d.iter().zip(&self.factors).fold(0, |acc, (v, m)| acc * m + (m - v) % m)
    }

    /// `ψ_a(g) = exp(2πi Σ a_i g_i / m_i)` as an exponent of `ζ_L`, `L` the
    /// group exponent.
    pub fn pairing(&self, a: usize, g: usize) -> usize {
        let l = self.exponent();
        let (da, dg) = (self.digits(a), self.digits(g));
        da.iter().zip(&dg).zip(&self.factors).map(|((x, y), m)| x * y * (l / m)).sum::<usize>() % l
    }

    /// `table[a][g] = ψ_a(g)`; row 0 is the trivial character.
    pub fn character_table(&self) -> Result<Vec<Vec<Cyclotomic>>> {
        let l = self.exponent() as u64;
        let n = self.order();
        let roots: Vec<Cyclotomic> = (0..l as i64).map(|k| root_of_unity(l.max(1), k)).collect::<Result<_>>()?;
        Ok((0..n).map(|a| (0..n).map(|g| roots[self.pairing(a, g)].clone()).collect()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dilation::two_dim::a_lambda;
    use crate::scalars::rational::rat;
    use crate::semigroup::{build_group, semigroup_bialgebra, GroupSpec, InverseSemigroup};

    #[test]
    fn group_and_lambda_matrices() {
        let z2 = semigroup_bialgebra(&InverseSemigroup::new(build_group(&GroupSpec::Cyclic { m: 2 }).unwrap()).unwrap()).unwrap();
        let q = quasicharacter_matrix(&z2).unwrap();
        assert_eq!(q.rational_entries().unwrap(), vec![vec![int(1), int(1)], vec![int(1), int(-1)]]);
        for l in [rat(1, 2), rat(1, 3), rat(2, 5)] {
            let a = a_lambda(&l).unwrap();
            let q = quasicharacter_matrix(&a).unwrap();
            assert_eq!(q.rational_entries().unwrap(), vec![vec![int(1), int(1)], vec![int(1), -l.clone()]]);
            assert_eq!(algebra_from_quasicharacters(&q).unwrap(), a);
        }
        assert!(QuasiCharacterMatrix::from_rationals(&[vec![int(1), int(1)], vec![int(1), int(-2)]]).is_err());
    }

    #[test]
    fn character_tables_are_orthogonal() {
        for f in [vec![4], vec![2, 2], vec![2, 4], vec![3, 3]] {
            let g = AbelianGroup::new(&f);
            let t = g.character_table().unwrap();
            let n = g.order();
            for a in 0..n {
                for b in 0..n {
                    let s = (0..n).fold(Cyclotomic::zero(), |s, x| s.add(&t[a][x].mul(&t[b][x].conj())));
                    let want = if a == b { int(n as i64) } else { int(0) };
                    assert_eq!(s.to_rational(), Some(want));
                }
            }
            assert_eq!(t[0][g.inverse(1)], t[0][1]);
        }
    }
}
