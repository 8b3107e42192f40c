use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalars::rational::int;
use crate::scalars::{Field, Rational};

use super::tensor::StructureTensor;

/// An antilinear map `v ↦ M · conj(v)` with a rational matrix `M`.
#[derive(Clone, Debug, PartialEq)]
pub struct AntilinearMap {
    pub matrix: Matrix<Rational>,
}

impl AntilinearMap {
    pub fn new(matrix: Matrix<Rational>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("antilinear map matrix is not square".into()));
        }
        Ok(AntilinearMap { matrix })
    }

    /// Coefficientwise conjugation.
    pub fn conjugation(n: usize) -> Self {
        AntilinearMap { matrix: linalg::identity(n) }
    }

    /// Sends basis vector `j` to basis vector `perm[j]`, conjugating coefficients.
    pub fn from_permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = vec![vec![int(0); n]; n];
        for (j, &i) in perm.iter().enumerate() {
            m[i][j] = int(1);
        }
        AntilinearMap { matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply<F: Field>(&self, v: &[F]) -> Vec<F> {
        let c: Vec<F> = v.iter().map(Field::conj).collect();
        self.matrix
            .iter()
            .map(|row| {
                row.iter().zip(&c).fold(F::zero(), |acc, (m, x)| {
                    if m.is_zero() || x.is_zero() {
                        acc
                    } else {
                        acc.add(&F::from_rational(m).mul(x))
                    }
                })
            })
            .collect()
    }

    /// Image of basis vector `j` (column `j`).
    pub fn column(&self, j: usize) -> Vec<Rational> {
        self.matrix.iter().map(|r| r[j].clone()).collect()
    }

    /// `Some(perm)` when the matrix is a permutation matrix.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let n = self.dim();
        let mut perm = Vec::with_capacity(n);
        for j in 0..n {
            let col = self.column(j);
            let nz: Vec<usize> = (0..n).filter(|&i| !col[i].is_zero()).collect();
            if nz.len() != 1 || !col[nz[0]].is_one() {
                return None;
            }
            perm.push(nz[0]);
        }
        Some(perm)
    }

    pub fn transpose(&self) -> Self {
        AntilinearMap { matrix: linalg::transpose(&self.matrix) }
    }
}

/// A vector space with a distinguished basis carrying multiplication, unit,
/// comultiplication, counit, involution and coinvolution.
#[derive(Clone, Debug)]
pub struct TwoAlgebra {
    pub dim: usize,
    pub labels: Option<Vec<String>>,
    pub mult: StructureTensor,
    pub unit: Vec<Rational>,
    pub comult: StructureTensor,
    pub counit: Vec<Rational>,
    pub invol: AntilinearMap,
    pub coinvol: AntilinearMap,
    /// Set for semigroup algebras of nonunital semigroups, where the counit
    /// need not be compatible with the unit.
    pub weakened: bool,
}

impl PartialEq for TwoAlgebra {
    /// Entrywise equality in the distinguished basis; labels are ignored.
    fn eq(&self, o: &Self) -> bool {
        self.dim == o.dim
            && self.mult == o.mult
            && self.unit == o.unit
            && self.comult == o.comult
            && self.counit == o.counit
            && self.invol == o.invol
            && self.coinvol == o.coinvol
            && self.weakened == o.weakened
    }
}

impl TwoAlgebra {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        dim: usize,
        mult: StructureTensor,
        unit: Vec<Rational>,
        comult: StructureTensor,
        counit: Vec<Rational>,
        invol: AntilinearMap,
        coinvol: AntilinearMap,
    ) -> Result<Self> {
        let a = TwoAlgebra { dim, labels: None, mult, unit, comult, counit, invol, coinvol, weakened: false };
        a.check_dims()?;
        Ok(a)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn check_dims(&self) -> Result<()> {
        let n = self.dim;
        let mut bad = Vec::new();
        if self.mult.dim() != n {
            bad.push(format!("mult has dim {}", self.mult.dim()));
        }
        if self.comult.dim() != n {
            bad.push(format!("comult has dim {}", self.comult.dim()));
        }
        if self.unit.len() != n {
            bad.push(format!("unit has length {}", self.unit.len()));
        }
        if self.counit.len() != n {
            bad.push(format!("counit has length {}", self.counit.len()));
        }
        if self.invol.dim() != n {
            bad.push(format!("invol has dim {}", self.invol.dim()));
        }
        if self.coinvol.dim() != n {
            bad.push(format!("coinvol has dim {}", self.coinvol.dim()));
        }
        if let Some(l) = &self.labels {
            if l.len() != n {
                bad.push(format!("{} labels", l.len()));
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!("dim {n} but {}", bad.join(", "))))
        }
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("x{i}"),
        }
    }

    pub fn basis_vector<F: Field>(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        v[i] = F::one();
        v
    }

    /// Product of two coefficient vectors.
    pub fn product<F: Field>(&self, a: &[F], b: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let ab = ai.mul(bj);
                for (k, c) in self.mult.slice_ij(i, j) {
                    out[*k] = out[*k].add(&ab.mul(&F::from_rational(c)));
                }
            }
        }
        out
    }

    /// Product of basis elements, as a rational vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = vec![int(0); self.dim];
        for (k, c) in self.mult.slice_ij(i, j) {
            out[*k] = c.clone();
        }
        out
    }

    /// Coproduct of a vector, flattened so that `x_j ⊗ x_k` sits at `j*dim + k`.
    pub fn coproduct<F: Field>(&self, a: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n * n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, k, d) in self.comult.slice_i(i) {
                let idx = j * n + k;
                out[idx] = out[idx].add(&ai.mul(&F::from_rational(d)));
            }
        }
        out
    }

    /// Product in A⊗A of flattened tensors.
    pub fn tensor_product<F: Field>(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n * n];
        let nz = |t: &[F]| -> Vec<(usize, usize, F)> {
            t.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(idx, v)| (idx / n, idx % n, v.clone()))
                .collect()
        };
        let (xs, ys) = (nz(x), nz(y));
        for (a, b, xv) in &xs {
            for (c, d, yv) in &ys {
                let s = xv.mul(yv);
                for (k1, c1) in self.mult.slice_ij(*a, *c) {
                    let s1 = s.mul(&F::from_rational(c1));
                    for (k2, c2) in self.mult.slice_ij(*b, *d) {
                        let idx = k1 * n + k2;
                        out[idx] = out[idx].add(&s1.mul(&F::from_rational(c2)));
                    }
                }
            }
        }
        out
    }

    pub fn counit_of<F: Field>(&self, a: &[F]) -> F {
        a.iter().zip(&self.counit).fold(F::zero(), |acc, (x, e)| {
            if e.is_zero() {
                acc
            } else {
                acc.add(&x.mul(&F::from_rational(e)))
            }
        })
    }

    /// Left multiplication matrix of `a` (column j is `a · x_j`).
    pub fn left_mult_matrix(&self, a: &[Rational]) -> Matrix<Rational> {
        let cols: Vec<Vec<Rational>> =
            (0..self.dim).map(|j| self.product(a, &self.basis_vector::<Rational>(j))).collect();
        linalg::transpose(&cols)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.mult.slice_ij(i, j) == self.mult.slice_ij(j, i)))
    }

    pub fn is_cocommutative(&self) -> bool {
        self.comult.entries().iter().all(|(i, j, k, v)| self.comult.get(*i, *k, *j) == *v)
    }

    /// Δ maps every basis element to a multiple of its square.
    pub fn diagonal_comult(&self) -> Option<Vec<Rational>> {
        (0..self.dim)
            .map(|i| match self.comult.slice_i(i) {
                [(j, k, d)] if *j == i && *k == i => Some(d.clone()),
                _ => None,
            })
            .collect()
    }
}

pub fn flip<F: Clone>(t: &[F], n: usize) -> Vec<F> {
    (0..n * n).map(|idx| t[(idx % n) * n + idx / n].clone()).collect()
}

/// Applies `f ⊗ g` to a flattened tensor where `f`, `g` are antilinear maps.
pub fn antilinear_tensor<F: Field>(f: &AntilinearMap, g: &AntilinearMap, t: &[F]) -> Vec<F> {
    let n = f.dim();
    let mut out = vec![F::zero(); n * n];
    for (idx, v) in t.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let (a, b) = (idx / n, idx % n);
        let cv = v.conj();
        for (r, fr) in f.matrix.iter().enumerate() {
            if fr[a].is_zero() {
                continue;
            }
            let s = cv.mul(&F::from_rational(&fr[a]));
            for (c, gr) in g.matrix.iter().enumerate() {
                if !gr[b].is_zero() {
                    out[r * n + c] = out[r * n + c].add(&s.mul(&F::from_rational(&gr[b])));
                }
            }
        }
    }
    out
}
