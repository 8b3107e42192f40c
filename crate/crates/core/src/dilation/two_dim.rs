//! The two-dimensional family `A_λ` and the dilation predicate for it.

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::positivity::grouplike_basis;
use crate::algebra::{check_positivity, is_semisimple, validate_2_algebra, AntilinearMap, Side, StructureTensor, TwoAlgebra};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalars::rational::int;
use crate::scalars::{format_rational, Rational};

/// `A_λ`: basis `{1, u}` with `u² = λ·1 + (1−λ)·u`, both grouplike, counit
/// 1 on both, ♯ and ♭ coefficientwise conjugation.
pub fn a_lambda(lambda: &Rational) -> Result<TwoAlgebra> {
    let one_minus = int(1) - lambda;
    let mult = StructureTensor::from_entries(
        2,
        [(0, 0, 0, int(1)), (0, 1, 1, int(1)), (1, 0, 1, int(1)), (1, 1, 0, lambda.clone()), (1, 1, 1, one_minus)],
    )?;
    let comult = StructureTensor::from_entries(2, [(0, 0, 0, int(1)), (1, 1, 1, int(1))])?;
    Ok(TwoAlgebra::new(
        2,
        mult,
        vec![int(1), int(0)],
        comult,
        vec![int(1), int(1)],
        AntilinearMap::conjugation(2),
        AntilinearMap::conjugation(2),
    )?
    .with_labels(vec!["1".into(), "u".into()]))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum TwoDimClass {
    /// Isomorphic to `A_λ` with `λ ∈ [0, 1]`.
    Lambda {
        #[serde(with = "crate::scalars::rational::serde_rational")]
        lambda: Rational,
    },
    NotSemisimple,
    NotPositive { reason: String },
    /// Not of the form `A_λ` for any λ.
    Other { reason: String },
}

/// Classifies a two-dimensional 2-algebra up to isomorphism.
pub fn classify_2dim(a: &TwoAlgebra) -> Result<TwoDimClass> {
    if a.dim != 2 {
        return Err(Error::DimensionMismatch(format!("expected dimension 2, got {}", a.dim)));
    }
    let other = |r: &str| Ok(TwoDimClass::Other { reason: r.into() });
    let v = validate_2_algebra(a)?;
    if !v.is_holds() {
        return other(&format!("not a 2-algebra: {}", v.notes));
    }
    if !is_semisimple(a, Side::Algebra)?.is_holds() {
        return Ok(TwoDimClass::NotSemisimple);
    }
    let Some((g, _)) = grouplike_basis(a) else {
        return other("the coalgebra has no rational grouplike basis");
    };
    let Some(one) = g.iter().position(|v| *v == a.unit) else {
        return other("the unit is not grouplike");
    };
    let u = &g[1 - one];
    let sq = a.product(u, u);
    let Some(c) = linalg::coordinates(&[a.unit.clone(), u.clone()], &sq) else {
        return other("u² leaves the span of 1 and u");
    };
    let lambda = c[0].clone();
    if c[1] != int(1) - &lambda {
        return other("u² = λ + μu with λ + μ ≠ 1");
    }
    if a.invol.apply(u) != *u || a.coinvol.apply(u) != *u {
        return other("♯ or ♭ moves the grouplike u");
    }
    if lambda.is_negative() || lambda > int(1) {
        return Ok(TwoDimClass::NotPositive { reason: format!("λ = {} lies outside [0, 1]", format_rational(&lambda)) });
    }
    let (m, c) = check_positivity(a)?;
    for v in [m, c] {
        if !v.is_holds() {
            return Ok(TwoDimClass::NotPositive { reason: v.notes });
        }
    }
    Ok(TwoDimClass::Lambda { lambda })
}

/// Whether `1/λ + λ − 2 = k(s−1)²/s` has a solution in positive integers
/// `k`, `s`; returns the solution with least `s`. Defined for `0 < λ ≤ 1`.
pub fn theorem3_predicate(lambda: &Rational) -> Result<Option<(u64, u64)>> {
    if !lambda.is_positive() || *lambda > int(1) {
        return Err(Error::InvalidArgument(format!(
            "λ = {} is outside the domain 0 < λ ≤ 1",
            format_rational(lambda)
        )));
    }
    let alpha = lambda.recip() + lambda - int(2);
    if alpha.is_zero() {
        return Ok(Some((1, 1)));
    }
    // k = α s/(s−1)² ≥ 1 forces (s−1)² ≤ α s, so s ≤ α + 2 + 1/α < num·den + 3.
    let bound = (alpha.numer() * alpha.denom() + 3u32).to_u64().unwrap_or(u64::MAX);
    for s in 2..=bound {
        let sr = int(s as i64);
        let k = &alpha * &sr / ((&sr - int(1)) * (&sr - int(1)));
        if k < int(1) {
            break;
        }
        if k.is_integer() {
            return Ok(Some((k.to_integer().to_u64().unwrap_or(u64::MAX), s)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::rat;

    #[test]
    fn predicate_values() {
        assert_eq!(theorem3_predicate(&int(1)).unwrap(), Some((1, 1)));
        for n in 2..12 {
            assert_eq!(theorem3_predicate(&rat(1, n)).unwrap(), Some((1, n as u64)), "1/{n}");
        }
        assert_eq!(theorem3_predicate(&rat(2, 5)).unwrap(), None);
        assert!(theorem3_predicate(&int(0)).is_err());
        assert!(theorem3_predicate(&rat(3, 2)).is_err());
    }

    #[test]
    fn classify_family() {
        for l in [rat(0, 1), rat(1, 3), rat(1, 2), rat(2, 5), int(1)] {
            let a = a_lambda(&l).unwrap();
            assert_eq!(classify_2dim(&a).unwrap(), TwoDimClass::Lambda { lambda: l });
        }
        assert!(matches!(classify_2dim(&a_lambda(&int(2)).unwrap()).unwrap(), TwoDimClass::NotPositive { .. }));
    }
}
