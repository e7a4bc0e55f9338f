//! Trial-division factorization of integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    /// `-1` or `1`.
    pub sign: i8,
    /// `(prime, multiplicity)`, ascending.
    pub factors: Vec<(u64, u32)>,
    /// Unfactored part; 1 when complete.
    #[serde(serialize_with = "as_string")]
    pub cofactor: BigInt,
    pub complete: bool,
}

fn as_string<S: serde::Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

impl Factorization {
    /// Multiplies the factors (and cofactor and sign) back together.
    pub fn product(&self) -> BigInt {
        let mut acc = BigInt::from(self.sign) * &self.cofactor;
        for &(p, k) in &self.factors {
            acc *= num_traits::pow(BigInt::from(p), k as usize);
        }
        acc
    }

    pub fn multiplicity(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(f, _)| f == p)
            .map_or(0, |&(_, k)| k)
    }

    /// `2^5 * 3^35 * 17^2 * ...`, with a leading `-` for negative input.
    pub fn display(&self) -> String {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(p, k)| {
                if k == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{k}")
                }
            })
            .collect();
        if !self.cofactor.is_one() {
            parts.push(format!("[{}]", self.cofactor));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        let body = parts.join(" * ");
        if self.sign < 0 {
            format!("-{body}")
        } else {
            body
        }
    }
}

/// Factorization with the default bound `10^6`.
pub fn factor_trial(n: &BigInt) -> Factorization {
    factor_trial_with_bound(n, DEFAULT_FACTOR_BOUND)
}

/// Trial division by every integer `d <= bound` with `d^2 <= rest`. A
/// remaining cofactor is accepted as prime when it is at most `bound^2`;
/// otherwise it is reported and `complete` is false.
pub fn factor_trial_with_bound(n: &BigInt, bound: u64) -> Factorization {
    assert!(!n.is_zero(), "cannot factor zero");
    assert!(bound <= u64::from(u32::MAX), "bound must fit in 32 bits");
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut rest = n.abs();
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d <= bound {
        let db = BigInt::from(d);
        if &db * &db > rest {
            break;
        }
        let mut k = 0;
        loop {
            let (q, r) = rest.div_rem(&db);
            if !r.is_zero() {
                break;
            }
            rest = q;
            k += 1;
        }
        if k > 0 {
            factors.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let limit = BigInt::from(bound) * BigInt::from(bound);
    let mut complete = true;
    if !rest.is_one() {
        if rest <= limit {
            let p = u64::try_from(&rest).expect("cofactor below bound^2");
            factors.push((p, 1));
            rest = BigInt::one();
        } else {
            complete = false;
        }
    }
    Factorization {
        sign,
        factors,
        cofactor: rest,
        complete,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let one = factor_trial(&BigInt::one());
        assert!(one.factors.is_empty() && one.complete);
        assert_eq!(factor_trial(&BigInt::from(16069)).factors, vec![(16069, 1)]);
        let f = factor_trial(&BigInt::from(-360));
        assert_eq!(f.sign, -1);
        assert_eq!(f.factors, vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(f.display(), "-2^3 * 3^2 * 5");
        assert_eq!(f.product(), BigInt::from(-360));
    }

    #[test]
    fn incomplete_when_cofactor_too_large() {
        // 1000003 * 1000033, both prime and above the bound 1000
        let n = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64) * BigInt::from(12);
        let f = factor_trial_with_bound(&n, 1000);
        assert!(!f.complete);
        assert_eq!(f.factors, vec![(2, 2), (3, 1)]);
        assert_eq!(f.product(), n);
        let full = factor_trial_with_bound(&n, 1_000_010);
        assert!(full.complete);
        assert_eq!(full.multiplicity(1_000_033), 1);
    }
}
