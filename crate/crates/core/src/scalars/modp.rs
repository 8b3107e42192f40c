//! Arithmetic in prime fields F_p for word-sized p.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// Reduces a rational modulo p; `None` when p divides the denominator.
pub fn rational_mod(r: &super::Rational, p: u64) -> Option<u64> {
    use num_bigint::BigInt;
    let pb = BigInt::from(p);
    let red = |x: &BigInt| -> u64 {
        let m = ((x % &pb) + &pb) % &pb;
        u64::try_from(m).unwrap()
    };
    let d = red(r.denom());
    let n = red(r.numer());
    inv_mod(d, p).map(|di| (n as u128 * di as u128 % p as u128) as u64)
}

/// Row-reduces in place over F_p and returns the pivot columns.
pub fn rref_mod(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p).unwrap();
        for x in m[r].iter_mut() {
            *x = (*x as u128 * inv as u128 % p as u128) as u64;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let sub = (f as u128 * m[r][j] as u128 % p as u128) as u64;
                    m[i][j] = (m[i][j] + p - sub) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_mod(m: &[Vec<u64>], p: u64) -> usize {
    let mut w = m.to_vec();
    rref_mod(&mut w, p).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert!(is_prime(10007));
        assert!(!is_prime(91));
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(rational_mod(&crate::scalars::rat(1, 2), 7), Some(4));
        assert_eq!(rank_mod(&[vec![1, 2], vec![2, 4]], 7), 1);
    }
}
