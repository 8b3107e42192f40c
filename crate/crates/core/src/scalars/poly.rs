//! Dense univariate polynomials with rational coefficients, lowest degree first.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// x^n
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![Rational::zero(); n + 1];
        c[n] = Rational::one();
        Poly { coeffs: c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                match o.coeffs.get(i) {
                    Some(b) => a + b,
                    None => a,
                }
            })
            .collect();
        Poly::new(c)
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        Poly::new(c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.coeffs[dd].recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = &r[k] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k - dd + j] -= &c * dc;
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Returns (g, s) with g = gcd(self, m) monic and s·self ≡ g (mod m).
    pub fn gcd_inverse(&self, m: &Poly) -> (Poly, Poly) {
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut s0, mut s1) = (Poly::zero(), Poly::constant(Rational::one()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        match r0.lead().cloned() {
            Some(l) => {
                let li = l.recip();
                (r0.scale(&li), s0.scale(&li))
            }
            None => (Poly::zero(), Poly::zero()),
        }
    }

    /// Distinct rational roots, found through the rational root theorem.
    /// Returns `None` when the coefficients are too large to enumerate divisors.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        let Some(deg) = self.degree() else { return Some(vec![]) };
        if deg == 0 {
            return Some(vec![]);
        }
        let mut roots = Vec::new();
        // strip zero roots
        let shift = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if shift > 0 {
            roots.push(Rational::zero());
        }
        let trimmed = Poly::new(self.coeffs[shift..].to_vec());
        if trimmed.degree() == Some(0) {
            return Some(roots);
        }
        let ints = trimmed.integer_coeffs();
        let lead = ints.last().unwrap().abs();
        let constant = ints[0].abs();
        let dp = small_divisors(&constant)?;
        let dq = small_divisors(&lead)?;
        let mut cands: Vec<Rational> = Vec::new();
        for p in &dp {
            for q in &dq {
                let r = Rational::new(BigInt::from(*p), BigInt::from(*q));
                cands.push(r.clone());
                cands.push(-r);
            }
        }
        cands.sort();
        cands.dedup();
        for c in cands {
            if trimmed.eval(&c).is_zero() {
                roots.push(c);
            }
        }
        roots.sort();
        Some(roots)
    }

    /// Scales to a primitive integer polynomial with the same roots.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = num_integer::Integer::lcm(&l, c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &l).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = num_integer::Integer::gcd(&g, c);
        }
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }
}

fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n: u64 = n.try_into().ok()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

fn phi_cache() -> &'static Mutex<HashMap<u64, Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The m-th cyclotomic polynomial, by exact division of x^m − 1 by Φ_d over
/// the proper divisors d of m.
pub fn cyclotomic_polynomial(m: u64) -> Poly {
    assert!(m >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = phi_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut p = Poly::monomial(m as usize).sub(&Poly::from_ints(&[1]));
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let (q, r) = p.divrem(&cyclotomic_polynomial(d));
        debug_assert!(r.is_zero());
        p = q;
    }
    phi_cache().lock().unwrap().insert(m, p.clone());
    p
}

/// Integer coefficients of Φ_m, lowest degree first.
pub fn cyclotomic_polynomial_int(m: u64) -> Vec<BigInt> {
    cyclotomic_polynomial(m).coeffs().iter().map(|c| c.to_integer()).collect()
}

pub fn euler_phi(mut m: u64) -> u64 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}
