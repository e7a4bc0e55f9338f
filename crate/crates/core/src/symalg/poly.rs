//! Dense univariate polynomials over ℤ and ℚ.
//!
//! Both types store coefficients little-endian with no trailing zeros; the
//! zero polynomial is the empty vector.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::SymalgError;
use crate::ffield::FpPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut poly = ZPoly { coeffs };
        poly.normalize();
        poly
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut acc = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                acc[i + j] += a * b;
            }
        }
        Self::new(acc)
    }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return Self::zero();
        }
        self.div_scalar_exact(&c)
            .expect("content divides every coefficient")
    }

    /// Divides every coefficient by `c`, or `None` if some division is inexact.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-division by zero");
        let Some(ds) = self.degree() else {
            return Self::zero();
        };
        if ds < dd {
            return self.clone();
        }
        let lead = d.leading().expect("nonzero").clone();
        let mut r = self.clone();
        let mut missing = ds - dd + 1;
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let shift = Self::monomial(r.leading().expect("nonzero").clone(), rd - dd);
            r = r.scale(&lead).sub(&shift.mul(d));
            missing -= 1;
        }
        r.scale(&num_traits::pow(lead, missing))
    }

    /// Division by a monic polynomial over ℤ.
    pub fn div_rem_monic(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero");
        assert!(
            d.leading().is_some_and(One::is_one),
            "divisor must be monic"
        );
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &c * dj;
            }
            quot[k - dd] = c;
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Coefficient reversal with respect to a formal degree:
    /// `x^degree * self(1/x)`. Requires `deg self <= degree`.
    pub fn reverse(&self, degree: usize) -> Self {
        assert!(self.degree().is_none_or(|d| d <= degree));
        Self::new((0..=degree).rev().map(|k| self.coeff(k)).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn reduce_mod(&self, p: u32) -> FpPoly {
        let pb = BigInt::from(p);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let r = c.mod_floor(&pb);
                u32::try_from(r).expect("residue fits u32")
            })
            .collect();
        FpPoly::new(p, coeffs)
    }

    pub fn to_rational(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Human-readable form, highest degree first: `2y^5+3y^4-23y^3-8y^2-9y+44`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{k}")),
            }
        }
        out
    }

    /// Machine text form: space-separated `coeff*var^k` terms, highest degree
    /// first, zero terms omitted. The zero polynomial is `0`.
    pub fn to_terms(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{c}*{var}^{k}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the output of [`ZPoly::to_terms`] (any single-letter variable).
    pub fn parse_terms(s: &str) -> Result<Self, SymalgError> {
        let bad = || SymalgError::Parse(s.to_string());
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        for term in s.split_whitespace() {
            let (c, rest) = term.split_once('*').ok_or_else(bad)?;
            let (_, k) = rest.split_once('^').ok_or_else(bad)?;
            let c: BigInt = c.parse().map_err(|_| bad())?;
            let k: usize = k.parse().map_err(|_| bad())?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += c;
        }
        Ok(Self::new(coeffs))
    }

    /// JSON-friendly form: decimal strings, low degree first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, SymalgError> {
        items
            .iter()
            .map(|s| {
                s.as_ref()
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| SymalgError::Parse(s.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut poly = QPoly { coeffs };
        while poly.coeffs.last().is_some_and(Zero::is_zero) {
            poly.coeffs.pop();
        }
        poly
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c * x^k` in place.
    pub fn add_term(&mut self, c: &BigRational, k: usize) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, BigRational::zero());
        }
        self.coeffs[k] += c;
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut acc = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                acc[i + j] += a * b;
            }
        }
        Self::new(acc)
    }

    /// Euclidean division over ℚ. `None` when the divisor is zero.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                let t = &c * dj;
                rem[k - dd + j] -= t;
            }
            quot[k - dd] = c;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Least common multiple of the coefficient denominators (1 for zero).
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// The integer polynomial with the same coefficients, if all are integral.
    pub fn to_integer(&self) -> Option<ZPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(ZPoly::new)
    }

    /// JSON-friendly form: `"n"` or `"n/d"` strings, low degree first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c})*v^{k}"))
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        let g2 = ZPoly::from_i64(&[44, -9, -8, -23, 3, 2]);
        assert_eq!(g2.display_with("y"), "2y^5+3y^4-23y^3-8y^2-9y+44");
        assert_eq!(g2.to_terms("y"), "2*y^5 3*y^4 -23*y^3 -8*y^2 -9*y^1 44*y^0");
        assert_eq!(ZPoly::from_i64(&[-1, 1]).to_string(), "x-1");
        assert_eq!(ZPoly::from_i64(&[0, -1, 0, 1]).to_string(), "x^3-x");
        assert_eq!(ZPoly::zero().to_string(), "0");
    }

    #[test]
    fn text_forms_parse_back() {
        let g = ZPoly::from_i64(&[44, -9, 0, -23, 3, 2]);
        assert_eq!(ZPoly::parse_terms(&g.to_terms("y")).unwrap(), g);
        assert_eq!(ZPoly::from_strings(&g.to_strings()).unwrap(), g);
        assert_eq!(ZPoly::parse_terms("0").unwrap(), ZPoly::zero());
        assert!(ZPoly::parse_terms("2y^3").is_err());
        assert!(ZPoly::from_strings(&["1/2"]).is_err());
    }

    #[test]
    fn pseudo_remainder_identity() {
        // lc(b)^(deg a - deg b + 1) a = q b + r with deg r < deg b
        let a = ZPoly::from_i64(&[1, 2, 3, 4, 5]);
        let b = ZPoly::from_i64(&[7, 0, 3]);
        let r = a.pseudo_rem(&b);
        assert!(r.degree().unwrap() < 2);
        let lhs = a.scale(&BigInt::from(27));
        let (q, rr) = lhs.sub(&r).to_rational().div_rem(&b.to_rational()).unwrap();
        assert!(rr.is_zero());
        assert!(q.to_integer().is_some());
    }

    #[test]
    fn monic_division_and_reverse() {
        let f = ZPoly::from_i64(&[0, 2, 5, -18, -28, -40, 27, 35, 44]);
        let (q, r) = f.div_rem_monic(&ZPoly::from_i64(&[0, 1, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, ZPoly::from_i64(&[2, 3, -23, -8, -9, 44]));
        assert_eq!(q.reverse(5), ZPoly::from_i64(&[44, -9, -8, -23, 3, 2]));
        assert_eq!(
            ZPoly::from_i64(&[1, 1]).reverse(3),
            ZPoly::from_i64(&[0, 0, 1, 1])
        );
    }

    #[test]
    fn content_and_primitive_part() {
        let f = ZPoly::from_i64(&[6, -9, 12]);
        assert_eq!(f.content(), BigInt::from(3));
        assert_eq!(f.primitive_part(), ZPoly::from_i64(&[2, -3, 4]));
        assert_eq!(f.neg().primitive_part(), ZPoly::from_i64(&[-2, 3, -4]));
    }

    #[test]
    fn reduction_mod_p() {
        let f = ZPoly::from_i64(&[-1, 30, -29]);
        assert_eq!(f.reduce_mod(29), FpPoly::from_i64(29, &[28, 1]));
        assert_eq!(f.eval(&BigInt::from(2)), BigInt::from(-1 + 60 - 116));
    }
}
