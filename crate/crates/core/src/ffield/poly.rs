//! Dense univariate polynomials over a prime field F_p.
//!
//! Coefficients are stored little-endian (`coeffs[k]` multiplies `x^k`) as
//! residues in `[0, p)`. The zero polynomial is the empty vector; otherwise
//! the last coefficient is nonzero.

use std::fmt;

use super::arith::{add_mod, inv_mod, mul_mod, sub_mod};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u32,
    coeffs: Vec<u32>,
}

impl FpPoly {
    /// Builds a polynomial from residues; entries are reduced mod `p` and
    /// trailing zeros are stripped.
    pub fn new(p: u32, coeffs: Vec<u32>) -> Self {
        let mut poly = FpPoly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        poly.normalize();
        poly
    }

    /// Builds a polynomial from signed integer coefficients.
    pub fn from_i64(p: u32, coeffs: &[i64]) -> Self {
        let coeffs = coeffs
            .iter()
            .map(|&c| c.rem_euclid(i64::from(p)) as u32)
            .collect();
        Self::new(p, coeffs)
    }

    pub fn zero(p: u32) -> Self {
        FpPoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u32) -> Self {
        Self::new(p, vec![1])
    }

    /// The indeterminate `x`.
    pub fn x(p: u32) -> Self {
        Self::new(p, vec![0, 1])
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// The characteristic `p`.
    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u32 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<u32> {
        self.coeffs.last().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| add_mod(self.coeff(k), other.coeff(k), self.p))
            .collect();
        Self::new(self.p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| sub_mod(self.coeff(k), other.coeff(k), self.p))
            .collect();
        Self::new(self.p, coeffs)
    }

    pub fn scale(&self, c: u32) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect();
        Self::new(self.p, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = u64::from(self.p);
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + u64::from(a) * u64::from(b)) % p;
            }
        }
        Self::new(self.p, acc.into_iter().map(|c| c as u32).collect())
    }

    /// Euclidean division. Returns `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead_inv = inv_mod(divisor.leading()?, self.p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(self.p), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = mul_mod(rem[k], lead_inv, self.p);
            if c == 0 {
                continue;
            }
            quot[k - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = sub_mod(rem[idx], mul_mod(c, d, self.p), self.p);
            }
        }
        Some((Self::new(self.p, quot), Self::new(self.p, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Option<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Scales to leading coefficient 1; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(inv_mod(c, self.p)),
        }
    }

    /// Monic greatest common divisor. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^exp mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut exp: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus).expect("nonzero modulus");
        let mut acc = Self::one(self.p).rem(modulus).expect("nonzero modulus");
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(modulus).expect("nonzero modulus");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base).rem(modulus).expect("nonzero modulus");
            }
        }
        acc
    }

    /// Horner evaluation at a residue.
    pub fn eval(&self, x: u32) -> u32 {
        let x = x % self.p;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, self.p), c, self.p))
    }

    /// All roots in F_p, ascending. Enumerates the prime field.
    pub fn roots(&self) -> Vec<u32> {
        if self.is_zero() {
            return (0..self.p).collect();
        }
        (0..self.p).filter(|&r| self.eval(r) == 0).collect()
    }

    /// Rabin's irreducibility test: a monic `f` of degree `n` is irreducible
    /// iff `x^(p^n) = x mod f` and `gcd(x^(p^(n/r)) - x, f) = 1` for every
    /// prime `r | n`.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(n) => n,
        };
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let x = Self::x(self.p);
        // x^(p^k) mod f for k = 0..=n
        let mut frob = Vec::with_capacity(n + 1);
        frob.push(x.rem(&f).expect("nonzero modulus"));
        for k in 1..=n {
            let next = frob[k - 1].pow_mod(u64::from(self.p), &f);
            frob.push(next);
        }
        if frob[n] != x.rem(&f).expect("nonzero modulus") {
            return false;
        }
        prime_divisors(n as u64).into_iter().all(|r| {
            let h = frob[n / r as usize].sub(&x);
            h.gcd(&f).is_one()
        })
    }

    /// Formats with a chosen variable name, descending, without spaces
    /// (`x^3+x+1`, `x+10`, `1`).
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('+');
            }
            match (k, c) {
                (0, c) => out.push_str(&c.to_string()),
                (1, 1) => out.push_str(var),
                (1, c) => out.push_str(&format!("{c}{var}")),
                (k, 1) => out.push_str(&format!("{var}^{k}")),
                (k, c) => out.push_str(&format!("{c}{var}^{k}")),
            }
        }
        out
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

/// Distinct prime divisors, ascending, by trial division.
pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
