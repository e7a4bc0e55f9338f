//! Residue arithmetic mod a small prime and Lucas binomials.

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    ((u64::from(a) + u64::from(b)) % u64::from(p)) as u32
}

#[inline]
pub(crate) fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    ((u64::from(a) + u64::from(p) - u64::from(b % p)) % u64::from(p)) as u32
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((u64::from(a) * u64::from(b)) % u64::from(p)) as u32
}

pub(crate) fn pow_mod(base: u32, mut exp: u64, p: u32) -> u32 {
    let mut base = base % p;
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue mod a prime (Fermat).
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero");
    pow_mod(a, u64::from(p) - 2, p)
}

/// Deterministic trial-division primality test; inputs are desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `C(m, k) mod p` via Lucas' theorem (product of digit binomials in base `p`).
///
/// Out-of-range lower indices (`k < 0` or `k > m`) give 0, so sums over
/// shifted index ranges need no extra bounds checks.
pub fn lucas_binom(p: u32, m: u64, k: i64) -> u32 {
    if k < 0 || k as u64 > m {
        return 0;
    }
    let pp = u64::from(p);
    let (mut m, mut k) = (m, k as u64);
    let mut acc = 1 % p;
    while k > 0 || m > 0 {
        let (mi, ki) = ((m % pp) as u32, (k % pp) as u32);
        if ki > mi {
            return 0;
        }
        acc = mul_mod(acc, small_binom(mi, ki, p), p);
        m /= pp;
        k /= pp;
    }
    acc
}

/// `C(m, k) mod p` for `k <= m < p`.
fn small_binom(m: u32, k: u32, p: u32) -> u32 {
    let k = k.min(m - k);
    let (mut num, mut den) = (1u32, 1u32);
    for i in 0..k {
        num = mul_mod(num, m - i, p);
        den = mul_mod(den, i + 1, p);
    }
    mul_mod(num, inv_mod(den, p), p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial_binom(m: u64, k: u64) -> u128 {
        // exact via the multiplicative formula; fine for m <= 30
        (0..k).fold(1u128, |acc, i| acc * u128::from(m - i) / u128::from(i + 1))
    }

    #[test]
    fn lucas_matches_factorial_definition() {
        for &p in &[2u32, 5, 11, 17, 23, 29] {
            for m in 0..=30u64 {
                for k in -2..=32i64 {
                    let expect = if k < 0 || k as u64 > m {
                        0
                    } else {
                        (factorial_binom(m, k as u64) % u128::from(p)) as u32
                    };
                    assert_eq!(lucas_binom(p, m, k), expect, "p={p} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_binom(2, 7, 3), 1);
        assert_eq!(lucas_binom(5, 6, 2), 0);
        for &p in &[2, 3, 7] {
            for m in 0..10 {
                assert_eq!(lucas_binom(p, m, -1), 0);
            }
        }
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(16069));
        assert!(!is_prime(16067 * 3));
    }
}
