//! Power sums of `f(x) = a*x + x^(3q-2)` over F_{q^2}, the coefficient sums
//! `S_q(alpha, a)`, and the permutation tests built on them.
//!
//! For `0 <= alpha <= q-1` and `s = alpha + (q-1-alpha) q`,
//!
//! ```text
//! sum_x f(x)^s = -a^((alpha+1)(1-q)) * S_q(alpha, a)
//! S_q(alpha, a) = sum C(alpha, i) C(q-1-alpha, j) a^(-i-jq)
//! ```
//!
//! where the sum runs over `0 <= i <= alpha`, `0 <= j <= q-1-alpha` with
//! `-alpha-1+3(i-j)` a multiple of `q+1`. Power sums with other exponents in
//! `[1, q^2-2]` vanish identically, so `f` permutes F_{q^2} iff 0 is its only
//! root and `S_q(alpha, a) = 0` for every `alpha`.
//!
//! `S_q` is stored without the leading minus sign of the power-sum identity.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::ffield::{lucas_binom, FieldCtx, FieldElem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HermiteError {
    #[error("the coefficient a must be nonzero")]
    ZeroCoefficient,
    #[error("alpha = {alpha} is outside [0, {max}]")]
    AlphaOutOfRange { alpha: u64, max: u64 },
    #[error("power-sum exponent {s} is outside [1, {max}]")]
    ExponentOutOfRange { s: u64, max: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// The map `x -> a*x + x^(3q-2)` on F_{q^2}.
///
/// Evaluation is literal: the monomial is computed by field exponentiation,
/// never by a symbolic reduction of the exponent.
#[derive(Debug, Clone, Copy)]
pub struct BinomialMap<'a> {
    ctx: &'a FieldCtx,
    a: FieldElem,
    exponent: u64,
}

impl<'a> BinomialMap<'a> {
    pub fn new(ctx: &'a FieldCtx, a: FieldElem) -> Result<Self, HermiteError> {
        if a.is_zero() {
            return Err(HermiteError::ZeroCoefficient);
        }
        Ok(BinomialMap {
            ctx,
            a,
            exponent: 3 * ctx.q() - 2,
        })
    }

    pub fn a(&self) -> FieldElem {
        self.a
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn evaluate(&self, x: FieldElem) -> FieldElem {
        let ctx = self.ctx;
        ctx.add(ctx.mul(self.a, x), ctx.pow_u(x, self.exponent))
    }

    /// `f(x)` for every `x`, in enumeration order.
    pub fn values(&self) -> Vec<FieldElem> {
        self.ctx.elements().map(|x| self.evaluate(x)).collect()
    }
}

/// Multiples of `q+1` inside the exponent-shift interval for one `alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalCensus {
    pub q: u64,
    pub alpha: u64,
    /// `2 alpha + 2 - 3q`, the common lower end.
    pub lo: i64,
    /// `alpha - 1`, the upper end as first displayed.
    pub hi_stated: i64,
    /// `2 alpha - 1`, the upper end of the full range of `-alpha-1+3(i-j)`.
    pub hi: i64,
    /// Every `l` with `l(q+1)` in `[lo, hi]`, ascending.
    pub multiples: Vec<i64>,
}

impl IntervalCensus {
    pub fn count(&self) -> usize {
        self.multiples.len()
    }
}

/// Lists the multiples of `q+1` in `[2 alpha + 2 - 3q, 2 alpha - 1]`.
pub fn interval_census(q: u64, alpha: u64) -> Result<IntervalCensus, HermiteError> {
    if alpha >= q {
        return Err(HermiteError::AlphaOutOfRange { alpha, max: q - 1 });
    }
    let (qi, ai) = (q as i64, alpha as i64);
    let lo = 2 * ai + 2 - 3 * qi;
    let hi = 2 * ai - 1;
    let step = qi + 1;
    let first = lo.div_euclid(step) + i64::from(lo.rem_euclid(step) != 0);
    let multiples = (first..).take_while(|l| l * step <= hi).collect();
    Ok(IntervalCensus {
        q,
        alpha,
        lo,
        hi_stated: ai - 1,
        hi,
        multiples,
    })
}

/// `sum_{x in F_{q^2}} f(x)^s`, by direct summation.
pub fn power_sum(ctx: &FieldCtx, a: FieldElem, s: u64) -> Result<FieldElem, HermiteError> {
    let max = ctx.order() - 1;
    if s == 0 || s > max {
        return Err(HermiteError::ExponentOutOfRange { s, max });
    }
    let f = BinomialMap::new(ctx, a)?;
    Ok(power_sum_of_values(ctx, &f.values(), s))
}

fn power_sum_of_values(ctx: &FieldCtx, values: &[FieldElem], s: u64) -> FieldElem {
    values
        .iter()
        .fold(ctx.zero(), |acc, &v| ctx.add(acc, ctx.pow_u(v, s)))
}

/// The reduced power-sum exponent `alpha + (q-1-alpha) q`.
pub fn reduced_index(q: u64, alpha: u64) -> u64 {
    alpha + (q - 1 - alpha) * q
}

/// `S_q(alpha, a)`.
///
/// Only the admissible differences `d = i - j = (alpha + 1 + l(q+1)) / 3`
/// contribute; non-integral `d` are skipped. Cost is `O(q)` per `alpha`.
pub fn s_q(ctx: &FieldCtx, a: FieldElem, alpha: u64) -> Result<FieldElem, HermiteError> {
    if a.is_zero() {
        return Err(HermiteError::ZeroCoefficient);
    }
    let q = ctx.q();
    let census = interval_census(q, alpha)?;
    let p = ctx.p();
    let beta = q - 1 - alpha;
    let (qi, ai, bi) = (q as i64, alpha as i64, beta as i64);
    let mut acc = ctx.zero();
    for &l in &census.multiples {
        let num = ai + 1 + l * (qi + 1);
        if num.rem_euclid(3) != 0 {
            continue;
        }
        let d = num / 3;
        for i in d.max(0)..=ai.min(d + bi) {
            let j = i - d;
            let c = u64::from(lucas_binom(p, alpha, i)) * u64::from(lucas_binom(p, beta, j))
                % u64::from(p);
            if c == 0 {
                continue;
            }
            let term = ctx.pow(a, -i - j * qi).expect("a is nonzero");
            acc = ctx.add(acc, ctx.mul(ctx.from_int(c as i64), term));
        }
    }
    Ok(acc)
}

/// True iff `x -> a*x + x^(3q-2)` is a bijection of F_{q^2}, by enumeration
/// with early exit on the first collision.
pub fn brute_pp_test(ctx: &FieldCtx, a: FieldElem) -> Result<bool, HermiteError> {
    let f = BinomialMap::new(ctx, a)?;
    let mut seen = vec![0u64; (ctx.order() as usize).div_ceil(64)];
    for x in ctx.elements() {
        let y = f.evaluate(x).index() as usize;
        let (word, bit) = (y / 64, 1u64 << (y % 64));
        if seen[word] & bit != 0 {
            return Ok(false);
        }
        seen[word] |= bit;
    }
    Ok(true)
}

/// True iff `f(x) = 0` only at `x = 0`, by enumeration.
pub fn only_root_is_zero(ctx: &FieldCtx, a: FieldElem) -> Result<bool, HermiteError> {
    let f = BinomialMap::new(ctx, a)?;
    Ok(ctx.nonzero_elements().all(|x| !f.evaluate(x).is_zero()))
}

/// Hermite's criterion in reduced form: 0 is the only root and
/// `S_q(alpha, a) = 0` for all `0 <= alpha <= q-1`.
///
/// When `3 | q+1` the root condition is `a^((q+1)/3) != 1`; otherwise it is
/// checked by enumeration.
pub fn hermite_pp_test(ctx: &FieldCtx, a: FieldElem) -> Result<bool, HermiteError> {
    if a.is_zero() {
        return Err(HermiteError::ZeroCoefficient);
    }
    let q = ctx.q();
    let root_ok = if (q + 1).is_multiple_of(3) {
        ctx.pow_u(a, (q + 1) / 3) != ctx.one()
    } else {
        only_root_is_zero(ctx, a)?
    };
    if !root_ok {
        return Ok(false);
    }
    for alpha in 0..q {
        if !s_q(ctx, a, alpha)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hermite's criterion over the full exponent range `1 <= s <= q^2 - 2`,
/// with the root condition checked by enumeration. `O(q^4)`; intended as a
/// slow oracle for small fields.
pub fn hermite_full_test(ctx: &FieldCtx, a: FieldElem) -> Result<bool, HermiteError> {
    let f = BinomialMap::new(ctx, a)?;
    let values = f.values();
    if values.iter().skip(1).any(|v| v.is_zero()) {
        return Ok(false);
    }
    Ok((1..ctx.order() - 1).all(|s| power_sum_of_values(ctx, &values, s).is_zero()))
}

/// Power sums at every reduced index `alpha + (q-1-alpha) q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerSumProfile {
    pub q: u64,
    pub a: FieldElem,
    /// `s -> sum_x f(x)^s`, ascending in `s`.
    pub entries: BTreeMap<u64, FieldElem>,
}

impl PowerSumProfile {
    pub fn compute(ctx: &FieldCtx, a: FieldElem) -> Result<Self, HermiteError> {
        let f = BinomialMap::new(ctx, a)?;
        let values = f.values();
        let q = ctx.q();
        let entries = (0..q)
            .map(|alpha| {
                let s = reduced_index(q, alpha);
                (s, power_sum_of_values(ctx, &values, s))
            })
            .collect();
        Ok(PowerSumProfile { q, a, entries })
    }

    pub fn nonzero_entries(&self) -> Vec<(u64, FieldElem)> {
        self.entries
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(&s, &v)| (s, v))
            .collect()
    }
}

/// The power-sum profile of `f` when `y = a^((q+1)/3)` is a primitive cube
/// root of unity, together with the predicted shape: every entry vanishes,
/// except for odd `q` the entry at `s = (q^2-1)/2`, which equals
/// `a^(-(q+1)(3q-2)/6) (1+y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubeRootProfile {
    pub profile: PowerSumProfile,
    pub y: FieldElem,
    /// `(s, value)` for the single predicted nonzero entry (odd `q` only).
    pub predicted_nonzero: Option<(u64, FieldElem)>,
    /// Whether the computed profile has exactly the predicted shape.
    pub holds: bool,
    /// Whether the profile certifies a permutation (all entries zero).
    pub all_vanish: bool,
}

pub fn cube_root_profile(ctx: &FieldCtx, a: FieldElem) -> Result<CubeRootProfile, HermiteError> {
    if a.is_zero() {
        return Err(HermiteError::ZeroCoefficient);
    }
    let q = ctx.q();
    if !(q + 1).is_multiple_of(3) {
        return Err(HermiteError::PreconditionViolated(format!(
            "3 does not divide q+1 = {}",
            q + 1
        )));
    }
    let y = ctx.pow_u(a, (q + 1) / 3);
    if !ctx.is_primitive_cube_root(y) {
        return Err(HermiteError::PreconditionViolated(
            "a^((q+1)/3) is not a primitive cube root of unity".into(),
        ));
    }
    let profile = PowerSumProfile::compute(ctx, a)?;
    let predicted_nonzero = (q % 2 == 1).then(|| {
        let s = (q * q - 1) / 2;
        let exp = -(((q + 1) * (3 * q - 2)) as i64) / 6;
        let value = ctx.mul(
            ctx.pow(a, exp).expect("a is nonzero"),
            ctx.add(ctx.one(), y),
        );
        (s, value)
    });
    let expected: Vec<(u64, FieldElem)> = predicted_nonzero.into_iter().collect();
    let nonzero = profile.nonzero_entries();
    let holds = nonzero == expected;
    let all_vanish = nonzero.is_empty();
    Ok(CubeRootProfile {
        profile,
        y,
        predicted_nonzero,
        holds,
        all_vanish,
    })
}
