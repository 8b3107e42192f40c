//! Elements of ℚ(ζ_m), stored as residues modulo Φ_m.
//!
//! Because the residue is taken modulo the minimal polynomial of ζ_m, two
//! elements of the same order are equal exactly when their coefficient
//! vectors agree. Mixed-order arithmetic lifts both operands to the lcm.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{cyclotomic_polynomial, euler_phi, Poly};
use super::rational::{format_rational, parse_rational};
use super::Rational;
use crate::error::{Error, Result};

static MAX_ORDER: AtomicU64 = AtomicU64::new(64);

/// Largest cyclotomic order the arithmetic will build.
pub fn max_order() -> u64 {
    MAX_ORDER.load(Ordering::Relaxed)
}

pub fn set_max_order(m: u64) {
    MAX_ORDER.store(m.max(1), Ordering::Relaxed);
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    fn check_order(m: u64) -> Result<()> {
        if m == 0 {
            return Err(Error::InvalidArgument("cyclotomic order must be positive".into()));
        }
        if m > max_order() {
            return Err(Error::SizeCap(format!("cyclotomic order {m} exceeds cap {}", max_order())));
        }
        Ok(())
    }

    /// Builds the residue of `p` in ℚ(ζ_m).
    pub fn from_poly(order: u64, p: &Poly) -> Result<Self> {
        Self::check_order(order)?;
        Ok(Self::reduce(order, p))
    }

    fn reduce(order: u64, p: &Poly) -> Self {
        let phi = cyclotomic_polynomial(order);
        let r = p.rem(&phi);
        let n = euler_phi(order) as usize;
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(n, Rational::zero());
        Cyclotomic { order, coeffs }
    }

    pub fn from_coeffs(order: u64, coeffs: Vec<Rational>) -> Result<Self> {
        Self::check_order(order)?;
        if coeffs.len() != euler_phi(order) as usize {
            return Err(Error::InvalidArgument(format!(
                "order {order} needs {} coefficients, got {}",
                euler_phi(order),
                coeffs.len()
            )));
        }
        Ok(Cyclotomic { order, coeffs })
    }

    pub fn rational(r: Rational) -> Self {
        Cyclotomic { order: 1, coeffs: vec![r] }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    /// Re-expresses this element in ℚ(ζ_n) for a multiple n of its order.
    pub fn coerce(&self, n: u64) -> Result<Self> {
        if !n.is_multiple_of(self.order) {
            return Err(Error::InvalidArgument(format!(
                "cannot coerce order {} into order {n}",
                self.order
            )));
        }
        Self::check_order(n)?;
        if n == self.order {
            return Ok(self.clone());
        }
        let step = (n / self.order) as usize;
        let mut c = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, v) in self.coeffs.iter().enumerate() {
            c[i * step] = v.clone();
        }
        Ok(Self::reduce(n, &Poly::new(c)))
    }

    fn lift_pair(&self, o: &Self) -> Result<(Self, Self)> {
        let l = self.order.lcm(&o.order);
        Ok((self.coerce(l)?, o.coerce(l)?))
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        let (a, b) = self.lift_pair(o)?;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Ok(Cyclotomic { order: a.order, coeffs })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        let (a, b) = self.lift_pair(o)?;
        Ok(Self::reduce(a.order, &a.poly().mul(&b.poly())))
    }

    pub fn try_inv(&self) -> Result<Self> {
        if self.is_zero_elem() {
            return Err(Error::DivisionByZero);
        }
        let phi = cyclotomic_polynomial(self.order);
        let (g, s) = self.poly().gcd_inverse(&phi);
        debug_assert_eq!(g, Poly::constant(Rational::one()));
        Ok(Self::reduce(self.order, &s))
    }

    pub fn negate(&self) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Complex conjugation, ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        let m = self.order as usize;
        let mut c = vec![Rational::zero(); m];
        for (i, v) in self.coeffs.iter().enumerate() {
            c[(m - i % m) % m] += v;
        }
        Self::reduce(self.order, &Poly::new(c))
    }

    pub fn is_zero_elem(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value, if this element lies in ℚ.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }
}

/// ζ_m^(k mod m).
pub fn root_of_unity(m: u64, k: i64) -> Result<Cyclotomic> {
    Cyclotomic::check_order(m)?;
    let e = k.rem_euclid(m as i64) as usize;
    Ok(Cyclotomic::reduce(m, &Poly::monomial(e)))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let l = self.order.lcm(&other.order);
        let step_a = l / self.order;
        let step_b = l / other.order;
        // Lifting never exceeds the cap check when comparing; compute directly.
        let lift = |c: &Cyclotomic, step: u64| {
            let mut v = vec![Rational::zero(); (c.coeffs.len().max(1) - 1) * step as usize + 1];
            for (i, x) in c.coeffs.iter().enumerate() {
                v[i * step as usize] = x.clone();
            }
            Cyclotomic::reduce(l, &Poly::new(v))
        };
        lift(self, step_a).coeffs == lift(other, step_b).coeffs
    }
}

impl super::field::Field for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::rational(<Rational as Zero>::zero())
    }
    fn one() -> Self {
        Cyclotomic::rational(<Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.is_zero_elem()
    }
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("cyclotomic order cap exceeded")
    }
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("cyclotomic order cap exceeded")
    }
    fn neg(&self) -> Self {
        self.negate()
    }
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }
    fn from_rational(r: &Rational) -> Self {
        Cyclotomic::rational(r.clone())
    }
    fn conj(&self) -> Self {
        Cyclotomic::conj(self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{}", format_rational(&r));
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", format_rational(c))?,
                1 => write!(f, "({})*z{}", format_rational(c), self.order)?,
                _ => write!(f, "({})*z{}^{}", format_rational(c), self.order, i)?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CyclotomicRepr {
    order: u64,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRepr { order: self.order, coeffs: self.coeffs.iter().map(format_rational).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CyclotomicRepr::deserialize(d)?;
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Cyclotomic::from_coeffs(r.order, coeffs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::field::Field;
    use crate::scalars::rational::{int, rat};
    use proptest::prelude::*;

    fn z(m: u64, k: i64) -> Cyclotomic {
        root_of_unity(m, k).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(z(4, 1).mul(&z(4, 1)), Cyclotomic::rational(int(-1)));
        assert_eq!(z(3, 1).add(&z(3, 2)), Cyclotomic::rational(int(-1)));
        assert_eq!(z(8, 1).inv().unwrap(), z(8, 7));
        assert!(Cyclotomic::zero().try_inv().is_err());
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(z(2, 1).to_rational(), Some(int(-1)));
        assert_eq!(z(5, 0).to_rational(), Some(int(1)));
        assert_eq!(z(4, 6).to_rational(), Some(int(-1)));
        assert_eq!(z(4, -1), z(4, 3));
    }

    #[test]
    fn rationality() {
        let half = rat(1, 2);
        assert_eq!(z(4, 1).add(&z(4, 3)).scale(&half).to_rational(), Some(int(0)));
        let s = z(4, 1).add(&z(4, 2)).add(&z(4, 3)).scale(&rat(1, 3));
        assert_eq!(s.to_rational(), Some(rat(-1, 3)));
        assert_eq!(z(3, 1).to_rational(), None);
    }

    #[test]
    fn mixed_orders_and_conjugation() {
        // ζ_6 = −ζ_3²
        assert_eq!(z(6, 1), z(3, 2).neg());
        assert_eq!(z(12, 4), z(3, 1));
        assert_eq!(z(5, 2).conj(), z(5, 3));
        assert!(root_of_unity(128, 1).is_err());
    }

    fn build(m: u64, v: &[(i64, i64)]) -> Cyclotomic {
        let n = euler_phi(m) as usize;
        Cyclotomic::from_coeffs(m, v[..n].iter().map(|&(p, q)| rat(p, q)).collect()).unwrap()
    }

    proptest! {
        #[test]
        fn field_axioms(m in prop::sample::select(vec![1u64, 3, 4, 5, 8, 12]),
                        va in proptest::collection::vec((-5i64..6, 1i64..4), 4),
                        vb in proptest::collection::vec((-5i64..6, 1i64..4), 4),
                        vc in proptest::collection::vec((-5i64..6, 1i64..4), 4)) {
            let (a, b, c) = (build(m, &va), build(m, &vb), build(m, &vc));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv().unwrap()), Cyclotomic::one());
            }
            let a3 = a.coerce(m * 3).unwrap();
            prop_assert_eq!(&a3, &a);
            prop_assert_eq!(a3.mul(&b), a.mul(&b));
        }
    }
}
