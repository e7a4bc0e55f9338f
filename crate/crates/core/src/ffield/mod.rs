//! Exact arithmetic in F_p, F_p[x] and the quadratic-over-F_q extension
//! F_{q^2} = F_p[x]/(m(x)), deg m = 2e, q = p^e.
//!
//! Elements are stored by their canonical encoding: the coefficient vector
//! `(c_0, ..., c_{n-1})` of the reduced representative is read as the base-p
//! integer `sum c_k p^k`. This is also the text format of an element, and
//! ascending encodings give the enumeration order of the field.
//!
//! The modulus is the first monic irreducible polynomial of degree `2e` in
//! ascending base-p order of its lower coefficients, so a given `(p, e)`
//! always produces the same context.

mod arith;
mod poly;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use arith::{is_prime, lucas_binom};
use poly::prime_divisors;
pub use poly::FpPoly;

/// Default upper bound on `q^2`.
pub const DEFAULT_MAX_ORDER: u64 = 1 << 24;

/// Fields up to this order get discrete-log tables.
pub const LOG_TABLE_MAX_ORDER: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NonPrimeP(u64),
    #[error("extension degree exponent must be at least 1")]
    InvalidExponent,
    #[error("field of order {order} exceeds the size bound {bound}")]
    SizeExceeded { order: u128, bound: u64 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("element encoding {value} is out of range for a field of order {order}")]
    ElementOutOfRange { value: u64, order: u64 },
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("malformed field descriptor {0:?}; expected \"p^e\"")]
    BadDescriptor(String),
}

/// An element of F_{q^2}, held as its canonical base-p encoding.
///
/// Equality of encodings is equality of reduced coefficient vectors.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// The base-p encoding.
    pub fn index(self) -> u64 {
        u64::from(self.0)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A `"p^e"` field descriptor naming F_q with q = p^e (the ambient field is F_{q^2}).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub e: u32,
}

impl FromStr for FieldDescriptor {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FieldError::BadDescriptor(s.to_string());
        let (p, e) = match s.trim().split_once('^') {
            Some((p, e)) => (p.trim(), e.trim()),
            None => (s.trim(), "1"),
        };
        let p: u32 = p.parse().map_err(|_| bad())?;
        let e: u32 = e.parse().map_err(|_| bad())?;
        Ok(FieldDescriptor { p, e })
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.e)
    }
}

#[derive(Debug, Clone)]
struct LogTables {
    /// `exp[k] = g^k` for `0 <= k < q^2 - 1`.
    exp: Vec<u32>,
    /// `log[g^k] = k`; `log[0]` is unused.
    log: Vec<u32>,
}

/// An explicit construction of F_{q^2}. Immutable once built; share freely
/// across threads.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    p: u32,
    e: u32,
    degree: usize,
    q: u64,
    order: u64,
    modulus: FpPoly,
    generator: FieldElem,
    tables: Option<LogTables>,
}

/// Builds the canonical F_{q^2}, q = p^e, with the default size bound.
pub fn make_field(p: u32, e: u32) -> Result<FieldCtx, FieldError> {
    FieldCtx::with_bound(p, e, DEFAULT_MAX_ORDER)
}

impl FieldCtx {
    pub fn new(p: u32, e: u32) -> Result<Self, FieldError> {
        Self::with_bound(p, e, DEFAULT_MAX_ORDER)
    }

    pub fn from_descriptor(desc: FieldDescriptor) -> Result<Self, FieldError> {
        Self::new(desc.p, desc.e)
    }

    /// Builds the canonical context, refusing fields with more than
    /// `max_order` elements.
    pub fn with_bound(p: u32, e: u32, max_order: u64) -> Result<Self, FieldError> {
        if !is_prime(u64::from(p)) {
            return Err(FieldError::NonPrimeP(u64::from(p)));
        }
        if e == 0 {
            return Err(FieldError::InvalidExponent);
        }
        let degree = 2 * e as usize;
        let order = u128::from(p).pow(2 * e);
        if order > u128::from(max_order) {
            return Err(FieldError::SizeExceeded {
                order,
                bound: max_order,
            });
        }
        let order = order as u64;
        let q = u64::from(p).pow(e);
        let modulus = canonical_modulus(p, degree);
        let mut ctx = FieldCtx {
            p,
            e,
            degree,
            q,
            order,
            modulus,
            generator: FieldElem::ONE,
            tables: None,
        };
        ctx.generator = ctx.find_generator();
        if order <= LOG_TABLE_MAX_ORDER {
            ctx.tables = Some(ctx.build_tables());
        }
        Ok(ctx)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// Extension degree `n = 2e` over F_p.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Number of elements, `q^2`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    /// The multiplicative generator (smallest encoding of order `q^2 - 1`).
    pub fn generator(&self) -> FieldElem {
        self.generator
    }

    pub fn has_log_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p,
            e: self.e,
        }
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    /// The element with the given base-p encoding.
    pub fn elem(&self, value: u64) -> Result<FieldElem, FieldError> {
        if value >= self.order {
            return Err(FieldError::ElementOutOfRange {
                value,
                order: self.order,
            });
        }
        Ok(FieldElem(value as u32))
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem(n.rem_euclid(i64::from(self.p)) as u32)
    }

    /// Little-endian coefficient vector of length `2e`.
    pub fn coeffs(&self, a: FieldElem) -> Vec<u32> {
        let mut v = a.0;
        (0..self.degree)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElem, FieldError> {
        if coeffs.len() != self.degree {
            return Err(FieldError::CoefficientCount {
                expected: self.degree,
                got: coeffs.len(),
            });
        }
        Ok(self.encode(coeffs))
    }

    fn encode(&self, coeffs: &[u32]) -> FieldElem {
        let v = coeffs.iter().rev().fold(0u64, |acc, &c| {
            acc * u64::from(self.p) + u64::from(c % self.p)
        });
        FieldElem(v as u32)
    }

    /// All elements in ascending encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.order as u32).map(FieldElem)
    }

    /// All nonzero elements in ascending encoding order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElem> {
        (1..self.order as u32).map(FieldElem)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.p == 2 {
            return FieldElem(a.0 ^ b.0);
        }
        let p = u64::from(self.p);
        let (mut x, mut y) = (u64::from(a.0), u64::from(b.0));
        let (mut out, mut place) = (0u64, 1u64);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        FieldElem(out as u32)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.p == 2 {
            return a;
        }
        let p = u64::from(self.p);
        let mut x = u64::from(a.0);
        let (mut out, mut place) = (0u64, 1u64);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        FieldElem(out as u32)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.is_zero() || b.is_zero() {
            return FieldElem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let n = self.order - 1;
                let k = (u64::from(t.log[a.0 as usize]) + u64::from(t.log[b.0 as usize])) % n;
                FieldElem(t.exp[k as usize])
            }
            None => self.mul_slow(a, b),
        }
    }

    /// `a^k`; negative `k` is taken mod `q^2 - 1` for nonzero `a`. `0^0 = 1`.
    pub fn pow(&self, a: FieldElem, k: i64) -> Result<FieldElem, FieldError> {
        if a.is_zero() {
            return match k {
                0 => Ok(FieldElem::ONE),
                k if k > 0 => Ok(FieldElem::ZERO),
                _ => Err(FieldError::ZeroInverse),
            };
        }
        let n = self.order - 1;
        let r = i128::from(k).rem_euclid(i128::from(n)) as u64;
        Ok(self.pow_nonzero(a, r))
    }

    /// `a^k` for an unsigned exponent (no error path).
    pub fn pow_u(&self, a: FieldElem, k: u64) -> FieldElem {
        if a.is_zero() {
            return if k == 0 {
                FieldElem::ONE
            } else {
                FieldElem::ZERO
            };
        }
        self.pow_nonzero(a, k % (self.order - 1))
    }

    fn pow_nonzero(&self, a: FieldElem, r: u64) -> FieldElem {
        match &self.tables {
            Some(t) => {
                let n = self.order - 1;
                let k = (u64::from(t.log[a.0 as usize]) * r) % n;
                FieldElem(t.exp[k as usize])
            }
            None => self.pow_slow(a, r),
        }
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem, FieldError> {
        self.pow(a, -1)
    }

    /// True iff `y^2 + y + 1 = 0`.
    pub fn is_primitive_cube_root(&self, y: FieldElem) -> bool {
        let y2 = self.mul(y, y);
        self.add(self.add(y2, y), FieldElem::ONE).is_zero()
    }

    /// The subfield F_q = { z : z^q = z }, ascending.
    pub fn subfield_q_members(&self) -> Vec<FieldElem> {
        self.elements()
            .filter(|&z| self.pow_u(z, self.q) == z)
            .collect()
    }

    /// Discrete logarithm to the stored generator, when tables exist.
    pub fn log(&self, a: FieldElem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        self.tables.as_ref().map(|t| u64::from(t.log[a.0 as usize]))
    }

    fn as_poly(&self, a: FieldElem) -> FpPoly {
        FpPoly::new(self.p, self.coeffs(a))
    }

    fn encode_poly(&self, f: &FpPoly) -> FieldElem {
        let mut coeffs = f.coeffs().to_vec();
        coeffs.resize(self.degree, 0);
        self.encode(&coeffs)
    }

    fn mul_slow(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let prod = self.as_poly(a).mul(&self.as_poly(b));
        self.encode_poly(&prod.rem(&self.modulus).expect("nonzero modulus"))
    }

    fn pow_slow(&self, a: FieldElem, mut r: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while r > 0 {
            if r & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            r >>= 1;
            if r > 0 {
                base = self.mul_slow(base, base);
            }
        }
        acc
    }

    fn find_generator(&self) -> FieldElem {
        let n = self.order - 1;
        let cofactors: Vec<u64> = prime_divisors(n).into_iter().map(|r| n / r).collect();
        (1..self.order as u32)
            .map(FieldElem)
            .find(|&g| {
                cofactors
                    .iter()
                    .all(|&c| self.pow_slow(g, c) != FieldElem::ONE)
            })
            .expect("the multiplicative group of a finite field is cyclic")
    }

    fn build_tables(&self) -> LogTables {
        let n = (self.order - 1) as usize;
        let mut exp = Vec::with_capacity(n);
        let mut log = vec![0u32; self.order as usize];
        let mut cur = FieldElem::ONE;
        for k in 0..n {
            exp.push(cur.0);
            log[cur.0 as usize] = k as u32;
            cur = self.mul_slow(cur, self.generator);
        }
        debug_assert_eq!(cur, FieldElem::ONE);
        LogTables { exp, log }
    }
}

/// First monic irreducible polynomial of the given degree, scanning the lower
/// coefficient vectors in ascending base-p order.
fn canonical_modulus(p: u32, degree: usize) -> FpPoly {
    let total = u64::from(p).pow(degree as u32);
    (0..total)
        .filter(|t| t % u64::from(p) != 0)
        .map(|t| {
            let mut coeffs = Vec::with_capacity(degree + 1);
            let mut v = t;
            for _ in 0..degree {
                coeffs.push((v % u64::from(p)) as u32);
                v /= u64::from(p);
            }
            coeffs.push(1);
            FpPoly::new(p, coeffs)
        })
        .find(FpPoly::is_irreducible)
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent irreducibility oracle: no monic factor of degree <= n/2.
    fn has_no_small_factor(f: &FpPoly) -> bool {
        let p = f.prime();
        let n = f.degree().unwrap();
        for d in 1..=n / 2 {
            for t in 0..u64::from(p).pow(d as u32) {
                let mut coeffs: Vec<u32> = (0..d)
                    .map(|k| ((t / u64::from(p).pow(k as u32)) % u64::from(p)) as u32)
                    .collect();
                coeffs.push(1);
                if f.rem(&FpPoly::new(p, coeffs)).unwrap().is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Enumerate monic polynomials of the degree in canonical order and take
    /// the first one passing the trial-division oracle.
    fn oracle_modulus(p: u32, degree: usize) -> FpPoly {
        (0..u64::from(p).pow(degree as u32))
            .map(|t| {
                let mut coeffs: Vec<u32> = (0..degree)
                    .map(|k| ((t / u64::from(p).pow(k as u32)) % u64::from(p)) as u32)
                    .collect();
                coeffs.push(1);
                FpPoly::new(p, coeffs)
            })
            .find(has_no_small_factor)
            .unwrap()
    }

    #[test]
    fn f4_modulus_and_reduction() {
        let ctx = make_field(2, 1).unwrap();
        assert_eq!(ctx.modulus(), &FpPoly::from_i64(2, &[1, 1, 1]));
        let x = ctx.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(ctx.mul(x, x), ctx.from_coeffs(&[1, 1]).unwrap());
    }

    #[test]
    fn canonical_moduli_match_enumeration_oracle() {
        for (p, e) in [(2, 1), (5, 1), (2, 3), (3, 1), (7, 1), (2, 2), (3, 2)] {
            let ctx = make_field(p, e).unwrap();
            assert_eq!(
                ctx.modulus(),
                &oracle_modulus(p, 2 * e as usize),
                "p={p} e={e}"
            );
            assert!(ctx.modulus().is_irreducible());
        }
        assert_eq!(
            make_field(5, 1).unwrap().modulus(),
            &FpPoly::from_i64(5, &[2, 0, 1])
        );
    }

    #[test]
    fn construction_is_reproducible() {
        let a = make_field(3, 2).unwrap();
        let b = make_field(3, 2).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.generator(), b.generator());
        let ax: Vec<_> = a
            .nonzero_elements()
            .map(|z| a.mul(z, a.generator()))
            .collect();
        let bx: Vec<_> = b
            .nonzero_elements()
            .map(|z| b.mul(z, b.generator()))
            .collect();
        assert_eq!(ax, bx);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(make_field(4, 1).unwrap_err(), FieldError::NonPrimeP(4));
        assert_eq!(make_field(1, 1).unwrap_err(), FieldError::NonPrimeP(1));
        assert_eq!(make_field(3, 0).unwrap_err(), FieldError::InvalidExponent);
        assert!(matches!(
            make_field(2, 13),
            Err(FieldError::SizeExceeded { .. })
        ));
        assert!(matches!(
            FieldCtx::with_bound(5, 2, 100),
            Err(FieldError::SizeExceeded {
                order: 625,
                bound: 100
            })
        ));
    }

    #[test]
    fn frobenius_identity_exhaustive_f25() {
        let ctx = make_field(5, 1).unwrap();
        for a in ctx.elements() {
            let mut acc = ctx.one();
            for _ in 0..25 {
                acc = ctx.mul(acc, a);
            }
            assert_eq!(acc, a);
        }
    }

    #[test]
    fn table_and_slow_paths_agree() {
        let ctx = make_field(3, 2).unwrap();
        assert!(ctx.has_log_tables());
        for a in ctx.elements() {
            for b in ctx.elements() {
                assert_eq!(ctx.mul(a, b), ctx.mul_slow(a, b));
            }
            assert_eq!(
                ctx.pow_u(a, 17),
                if a.is_zero() { a } else { ctx.pow_slow(a, 17) }
            );
        }
    }

    #[test]
    fn large_field_without_tables() {
        // 2^22 elements: above the table threshold
        let ctx = make_field(2, 11).unwrap();
        assert!(!ctx.has_log_tables());
        let g = ctx.generator();
        assert_eq!(ctx.pow(g, (ctx.order() - 1) as i64).unwrap(), ctx.one());
        assert_ne!(
            ctx.pow(g, ((ctx.order() - 1) / 3) as i64).unwrap(),
            ctx.one()
        );
        let gi = ctx.inv(g).unwrap();
        assert_eq!(ctx.mul(g, gi), ctx.one());
    }

    #[test]
    fn pow_examples() {
        let f64_ = make_field(2, 3).unwrap();
        for a in f64_.nonzero_elements() {
            assert_eq!(f64_.pow(a, 0).unwrap(), f64_.one());
            assert_eq!(f64_.pow(a, 63).unwrap(), f64_.one());
        }
        let f121 = make_field(11, 1).unwrap();
        for a in f121.nonzero_elements() {
            let prod = f121.mul(f121.pow(a, -3).unwrap(), f121.pow(a, 3).unwrap());
            assert_eq!(prod, f121.one());
        }
        assert_eq!(f121.pow(f121.zero(), -1), Err(FieldError::ZeroInverse));
        assert_eq!(f121.pow(f121.zero(), 0).unwrap(), f121.one());
        assert_eq!(f121.pow(f121.zero(), 5).unwrap(), f121.zero());
    }

    #[test]
    fn primitive_cube_roots() {
        let f4 = make_field(2, 1).unwrap();
        assert!(!f4.is_primitive_cube_root(f4.one()));
        assert!(!f4.is_primitive_cube_root(f4.zero()));
        assert!(f4.is_primitive_cube_root(f4.elem(2).unwrap()));
        assert!(f4.is_primitive_cube_root(f4.elem(3).unwrap()));

        let f289 = make_field(17, 1).unwrap();
        let brute = f289
            .nonzero_elements()
            .filter(|&y| y != f289.one() && f289.pow_u(y, 3) == f289.one())
            .count();
        let found = f289
            .elements()
            .filter(|&y| f289.is_primitive_cube_root(y))
            .count();
        assert_eq!(brute, 2);
        assert_eq!(found, 2);
    }

    #[test]
    fn subfield_sizes() {
        let f4 = make_field(2, 1).unwrap();
        assert_eq!(f4.subfield_q_members(), vec![f4.zero(), f4.one()]);
        assert_eq!(make_field(5, 1).unwrap().subfield_q_members().len(), 5);
        let f64_ = make_field(2, 3).unwrap();
        let members = f64_.subfield_q_members();
        assert_eq!(members.len(), 8);
        // closed under the field operations
        for &a in &members {
            for &b in &members {
                assert!(members.contains(&f64_.add(a, b)));
                assert!(members.contains(&f64_.mul(a, b)));
            }
        }
    }

    #[test]
    fn element_codec() {
        let ctx = make_field(5, 1).unwrap();
        let z = ctx.from_coeffs(&[3, 4]).unwrap();
        assert_eq!(z.index(), 3 + 4 * 5);
        assert_eq!(ctx.coeffs(z), vec![3, 4]);
        assert!(ctx.elem(25).is_err());
        assert!(ctx.from_coeffs(&[1]).is_err());
        assert_eq!(ctx.from_int(-1), ctx.elem(4).unwrap());
    }

    #[test]
    fn descriptors() {
        assert_eq!(
            "2^3".parse::<FieldDescriptor>().unwrap(),
            FieldDescriptor { p: 2, e: 3 }
        );
        assert_eq!(
            "29".parse::<FieldDescriptor>().unwrap(),
            FieldDescriptor { p: 29, e: 1 }
        );
        assert!("2^x".parse::<FieldDescriptor>().is_err());
        assert_eq!(FieldDescriptor { p: 5, e: 1 }.to_string(), "5^1");
    }
}
