//! Primitive idempotents of commutative algebras that split over ℚ.

use crate::linalg;
use crate::scalars::rational::int;
use crate::scalars::{Field, Poly, Rational};

use super::two_algebra::TwoAlgebra;

/// `x_i x_j = δ_ij x_i` on the distinguished basis.
pub fn is_diagonal_idempotent_basis(a: &TwoAlgebra) -> bool {
    (0..a.dim).all(|i| {
        (0..a.dim).all(|j| {
            let s = a.mult.slice_ij(i, j);
            if i == j {
                matches!(s, [(k, c)] if *k == i && c.is_one())
            } else {
                s.is_empty()
            }
        })
    })
}

/// Primitive idempotents of a commutative semisimple algebra, provided all of
/// them have rational coordinates. `None` otherwise.
pub fn rational_primitive_idempotents(a: &TwoAlgebra) -> Option<Vec<Vec<Rational>>> {
    let n = a.dim;
    if is_diagonal_idempotent_basis(a) {
        return Some((0..n).map(|i| a.basis_vector(i)).collect());
    }
    if !a.is_commutative() {
        return None;
    }
    let mut done = Vec::new();
    let mut work = vec![a.unit.clone()];
    while let Some(e) = work.pop() {
        let ea: Vec<Vec<Rational>> = (0..n).map(|j| a.product(&e, &a.basis_vector(j))).collect();
        if linalg::rank(&ea) == 1 {
            done.push(e);
            continue;
        }
        let mut refined = None;
        for y in &ea {
            let minpoly = minimal_polynomial(a, &e, y)?;
            let deg = minpoly.degree().unwrap_or(0);
            if deg < 2 {
                continue;
            }
            let roots = minpoly.rational_roots()?;
            if roots.len() < deg {
                return None;
            }
            refined = Some(lagrange_idempotents(a, &e, y, &roots));
            break;
        }
        {
            let parts = refined?;
            work.extend(parts)
        }
    }
    done.sort();
    Some(done)
}

/// Monic minimal polynomial of `y` inside `eA` (with `e` as the identity).
fn minimal_polynomial(a: &TwoAlgebra, e: &[Rational], y: &[Rational]) -> Option<Poly> {
    let mut powers = vec![e.to_vec()];
    loop {
        let next = a.product(powers.last().unwrap(), y);
        if let Some(c) = linalg::coordinates(&powers, &next) {
            let mut coeffs: Vec<Rational> = c.iter().map(|x| -x.clone()).collect();
            coeffs.push(int(1));
            return Some(Poly::new(coeffs));
        }
        powers.push(next);
        if powers.len() > a.dim + 1 {
            return None;
        }
    }
}

fn lagrange_idempotents(a: &TwoAlgebra, e: &[Rational], y: &[Rational], roots: &[Rational]) -> Vec<Vec<Rational>> {
    roots
        .iter()
        .map(|t| {
            let mut acc = e.to_vec();
            for s in roots.iter().filter(|s| *s != t) {
                let factor: Vec<Rational> = y.iter().zip(e).map(|(yi, ei)| (yi - s * ei) / (t - s)).collect();
                acc = a.product(&acc, &factor);
            }
            acc
        })
        .collect()
}
