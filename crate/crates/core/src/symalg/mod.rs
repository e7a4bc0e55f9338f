//! Exact symbolic layer: rational bracket polynomials, the elimination
//! polynomials `g_alpha`, integer resultants, trial factorization and
//! gcd chains mod p.
//!
//! For `alpha = 2 mod 3` the bracket polynomial is
//!
//! ```text
//! B_alpha(v) = sum_{i=0}^{alpha} (-1)^i C(alpha, i)
//!              sum_{l=0}^{2} C(i + (2 alpha - 1 + l)/3, alpha) v^(3i+l)
//! ```
//!
//! with generalized binomials in the inner sum. `g_alpha` is read off from
//! `3^d B_alpha(v) = v (v^2+v+1) rev_{3 alpha - 1}(g_alpha)(v)`.
//!
//! In F_{q^2}, with `c = (q+1)/3`, `y = a^c` and `q >= 2 alpha + 4`,
//!
//! ```text
//! S_q(alpha, a) = (-a)^((alpha+1) q / 3) Y^(-3 alpha - 2) (Y^2+Y+1) 3^(-d) g_alpha(Y)
//! ```
//!
//! where `Y = (-1)^c y^q`. The term of `S_q` with shift `l(q+1)` carries
//! `a^(-l c q)`, not `a^(-l c)`; the two agree only when `y^(q-1) = 1`.
//! [`BridgeForm::Stated`] evaluates the same right-hand side at `y` itself.

mod factor;
mod modp;
mod poly;
pub mod reference;
mod resultant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::ffield::{FieldCtx, FieldElem};

pub use factor::{factor_trial, factor_trial_with_bound, Factorization, DEFAULT_FACTOR_BOUND};
pub use modp::{eval_mod_p, gcd_mod_p};
pub use poly::{QPoly, ZPoly};
pub use resultant::resultant_z;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymalgError {
    #[error("alpha = {0} must satisfy alpha >= 2 and alpha = 2 mod 3")]
    BadAlpha(u64),
    #[error("3^d B_{alpha}(v) is not divisible by v(v^2+v+1)")]
    NotDivisible { alpha: u64 },
    #[error(
        "bracket polynomial for alpha = {alpha} has denominator {denominator}, not a power of 3"
    )]
    FractionalResidue { alpha: u64, denominator: String },
    #[error("every polynomial reduces to 0 mod {p}")]
    AllZero { p: u32 },
    #[error("the coefficient a must be nonzero")]
    ZeroInput,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cannot parse polynomial text {0:?}")]
    Parse(String),
}

/// `x (x-1) ... (x-n+1) / n!` over ℚ.
pub fn gen_binom(x: &BigRational, n: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = x.clone();
    for k in 1..=n {
        acc = acc * &term / BigRational::from_integer(BigInt::from(k));
        term -= BigRational::one();
    }
    acc
}

fn check_alpha(alpha: u64) -> Result<(), SymalgError> {
    if alpha < 2 || alpha % 3 != 2 {
        return Err(SymalgError::BadAlpha(alpha));
    }
    Ok(())
}

/// `B_alpha(v)`, exact over ℚ. Degree `3 alpha + 2`, constant term 0.
pub fn bracket_poly(alpha: u64) -> Result<QPoly, SymalgError> {
    check_alpha(alpha)?;
    let mut out = QPoly::zero();
    let mut choose = BigInt::one();
    for i in 0..=alpha {
        if i > 0 {
            choose = choose * BigInt::from(alpha - i + 1) / BigInt::from(i);
        }
        let outer = if i % 2 == 0 {
            BigRational::from_integer(choose.clone())
        } else {
            BigRational::from_integer(-choose.clone())
        };
        for l in 0..3u64 {
            let upper = BigRational::new(BigInt::from(3 * i + 2 * alpha - 1 + l), BigInt::from(3));
            let c = &outer * gen_binom(&upper, alpha);
            out.add_term(&c, (3 * i + l) as usize);
        }
    }
    Ok(out)
}

/// The elimination polynomial `g_alpha` together with the data it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GPolyRecord {
    pub alpha: u64,
    /// Smallest `d` with `3^d B_alpha` integral.
    pub d_alpha: u32,
    pub bracket: QPoly,
    /// `g_alpha` in the variable `y`, degree `3 alpha - 1`.
    pub g: ZPoly,
    /// Smallest `q` for which the field identity is asserted: `2 alpha + 4`.
    pub q_bound: u64,
}

impl GPolyRecord {
    /// `rev_{3 alpha - 1}(g_alpha)`, the same polynomial in `v = 1/y`.
    pub fn g_in_v(&self) -> ZPoly {
        self.g.reverse((3 * self.alpha - 1) as usize)
    }

    /// `3^d_alpha` as an integer.
    pub fn scale(&self) -> BigInt {
        num_traits::pow(BigInt::from(3), self.d_alpha as usize)
    }
}

/// Builds `g_alpha` from the bracket polynomial.
pub fn g_poly(alpha: u64) -> Result<GPolyRecord, SymalgError> {
    let bracket = bracket_poly(alpha)?;
    let den = bracket.denominator_lcm();
    let mut rest = den.clone();
    let mut d_alpha = 0u32;
    let three = BigInt::from(3);
    while rest.is_multiple_of(&three) {
        rest /= &three;
        d_alpha += 1;
    }
    if !rest.is_one() {
        return Err(SymalgError::FractionalResidue {
            alpha,
            denominator: den.to_string(),
        });
    }
    let cleared = bracket
        .scale(&BigRational::from_integer(den))
        .to_integer()
        .expect("denominators cleared");
    let (quot, rem) = cleared.div_rem_monic(&ZPoly::from_i64(&[0, 1, 1, 1]));
    let top = (3 * alpha - 1) as usize;
    if !rem.is_zero() || quot.degree() != Some(top) {
        return Err(SymalgError::NotDivisible { alpha });
    }
    Ok(GPolyRecord {
        alpha,
        d_alpha,
        bracket,
        g: quot.reverse(top),
        q_bound: 2 * alpha + 4,
    })
}

/// Evaluates an integer polynomial at a field element; coefficients map
/// into the prime subfield.
pub fn eval_in_field(ctx: &FieldCtx, f: &ZPoly, x: FieldElem) -> FieldElem {
    let p = BigInt::from(ctx.p());
    f.coeffs().iter().rev().fold(ctx.zero(), |acc, c| {
        let r: i64 = c.mod_floor(&p).try_into().expect("residue fits i64");
        ctx.add(ctx.mul(acc, x), ctx.from_int(r))
    })
}

/// Where the right-hand side of the field identity is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BridgeForm {
    /// At `y = a^((q+1)/3)`.
    Stated,
    /// At `Y = (-1)^((q+1)/3) y^q`; this is the form that equals `S_q`.
    Conjugated,
}

/// The evaluation point of [`bridge_value`] for a given form.
pub fn bridge_point(ctx: &FieldCtx, a: FieldElem, form: BridgeForm) -> FieldElem {
    let q = ctx.q();
    let c = (q + 1) / 3;
    let y = ctx.pow_u(a, c);
    match form {
        BridgeForm::Stated => y,
        BridgeForm::Conjugated if c.is_multiple_of(2) => ctx.pow_u(y, q),
        BridgeForm::Conjugated => ctx.neg(ctx.pow_u(y, q)),
    }
}

/// The right-hand side of the field identity for `S_q(alpha, a)`:
/// `(-a)^((alpha+1) q / 3) t^(-3 alpha - 2) (t^2+t+1) 3^(-d) g_alpha(t)`
/// with `t` chosen by `form`.
///
/// Requires `3 | q+1` (so `p != 3`) and `a != 0`.
pub fn bridge_value(
    ctx: &FieldCtx,
    record: &GPolyRecord,
    a: FieldElem,
    form: BridgeForm,
) -> Result<FieldElem, SymalgError> {
    if a.is_zero() {
        return Err(SymalgError::ZeroInput);
    }
    let q = ctx.q();
    if !(q + 1).is_multiple_of(3) {
        return Err(SymalgError::Precondition(format!(
            "3 does not divide q+1 = {}",
            q + 1
        )));
    }
    let t = bridge_point(ctx, a, form);
    let prefactor = ctx.pow_u(ctx.neg(a), (record.alpha + 1) * q / 3);
    let tpow = ctx
        .pow(t, -(3 * record.alpha as i64) - 2)
        .expect("t is nonzero");
    let cyclo = ctx.add(ctx.add(ctx.mul(t, t), t), ctx.one());
    let three_d = ctx.pow_u(ctx.from_int(3), u64::from(record.d_alpha));
    let inv = ctx.inv(three_d).expect("p != 3");
    let g = eval_in_field(ctx, &record.g, t);
    Ok([prefactor, tpow, cyclo, inv, g]
        .into_iter()
        .fold(ctx.one(), |acc, x| ctx.mul(acc, x)))
}

/// Sign of the leading coefficient, as `1` or `-1` (`0` for the zero polynomial).
pub fn leading_sign(f: &ZPoly) -> i32 {
    match f.leading() {
        None => 0,
        Some(c) if c.is_negative() => -1,
        Some(_) => 1,
    }
}
