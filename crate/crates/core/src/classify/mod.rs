//! The classification of permutation binomials `a*x + x^(3q-2)` over F_{q^2}:
//! the predicate, its sporadic rows, the elimination pipeline and the
//! exhaustive sweep that compares them against brute force.

mod pipeline;
mod sweep;

use serde::Serialize;
use thiserror::Error;

use crate::ffield::{is_prime, FieldCtx, FieldElem, FieldError};
use crate::hermite::HermiteError;
use crate::symalg::{eval_in_field, ZPoly};

pub use pipeline::{
    elimination_pipeline, elimination_pipeline_in, elimination_pipeline_strict, ChainVariable,
    EliminationReport, FixtureCheck, PrimeChain,
};
pub use sweep::{
    coset_classes, sweep, verdicts_for, CosetClass, Method, PPVerdict, QSummary, SweepConfig,
    SweepReport, DEFAULT_SWEEP_BOUND, LARGE_SWEEP_BOUND,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("q = {0} is not a census target")]
    UnsupportedQ(u64),
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("q_max = {q_max} exceeds the sweep bound {bound}")]
    SizeExceeded { q_max: u64, bound: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{} fixture check(s) failed: {}", .0.len(), .0.join("; "))]
    FixtureMismatch(Vec<String>),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Hermite(#[from] HermiteError),
}

/// `(p, e)` with `p^e = q`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut e) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1 && is_prime(p)).then_some((p as u32, e))
}

/// The field F_{q^2} for a prime power `q`.
pub fn field_for_q(q: u64) -> Result<FieldCtx, ClassifyError> {
    let (p, e) = prime_power(q).ok_or(ClassifyError::NotPrimePower(q))?;
    Ok(FieldCtx::new(p, e)?)
}

/// Which power of `a` a sporadic condition is tested on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConditionArgument {
    /// `a^k`.
    Power(u32),
    /// `a^(-k)`.
    InversePower(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// The argument is a root of the polynomial, evaluated in F_{q^2}.
    RootOf(#[serde(serialize_with = "poly_terms")] ZPoly),
    /// The argument equals one of these prime-field residues.
    OneOf(Vec<i64>),
}

fn poly_terms<S: serde::Serializer>(f: &ZPoly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&f.display_with("x"))
}

/// One sporadic row of the classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SporadicSpec {
    pub label: &'static str,
    pub q: u64,
    pub argument: ConditionArgument,
    pub condition: Condition,
}

impl SporadicSpec {
    /// The exponent `k` of the tested power.
    pub fn exponent(&self) -> u32 {
        match self.argument {
            ConditionArgument::Power(k) | ConditionArgument::InversePower(k) => k,
        }
    }

    /// The same row read with `a^k` in place of its stated argument.
    pub fn literal(&self) -> Self {
        SporadicSpec {
            argument: ConditionArgument::Power(self.exponent()),
            ..self.clone()
        }
    }

    /// Whether `a` satisfies the row's condition (false when `q` differs).
    pub fn holds(&self, ctx: &FieldCtx, a: FieldElem) -> bool {
        if ctx.q() != self.q || a.is_zero() {
            return false;
        }
        let t = match self.argument {
            ConditionArgument::Power(k) => ctx.pow_u(a, u64::from(k)),
            ConditionArgument::InversePower(k) => ctx.pow(a, -i64::from(k)).expect("a is nonzero"),
        };
        match &self.condition {
            Condition::RootOf(f) => eval_in_field(ctx, f, t).is_zero(),
            Condition::OneOf(values) => values.iter().any(|&v| ctx.from_int(v) == t),
        }
    }
}

fn product(factors: &[&[i64]]) -> ZPoly {
    factors
        .iter()
        .fold(ZPoly::one(), |acc, f| acc.mul(&ZPoly::from_i64(f)))
}

/// The six sporadic rows, condition polynomials as printed.
///
/// The `q = 8` row is tested on `a^(-3)`: exhaustive search over F_64 finds
/// the nine sporadic permutations exactly where `a^(-3)` is a root of
/// `x^3+x+1`, i.e. where `a^3` is a root of the reciprocal `x^3+x^2+1`.
pub fn sporadic_table() -> Vec<SporadicSpec> {
    vec![
        SporadicSpec {
            label: "ii",
            q: 5,
            argument: ConditionArgument::Power(2),
            condition: Condition::RootOf(product(&[&[1, 1], &[2, 1], &[-2, 1], &[1, -1, 1]])),
        },
        SporadicSpec {
            label: "iii",
            q: 8,
            argument: ConditionArgument::InversePower(3),
            condition: Condition::RootOf(ZPoly::from_i64(&[1, 1, 0, 1])),
        },
        SporadicSpec {
            label: "iv",
            q: 11,
            argument: ConditionArgument::Power(4),
            condition: Condition::RootOf(product(&[&[-5, 1], &[2, 1], &[1, -1, 1]])),
        },
        SporadicSpec {
            label: "v",
            q: 17,
            argument: ConditionArgument::Power(6),
            condition: Condition::OneOf(vec![4, 5]),
        },
        SporadicSpec {
            label: "vi",
            q: 23,
            argument: ConditionArgument::Power(8),
            condition: Condition::OneOf(vec![-1]),
        },
        SporadicSpec {
            label: "vii",
            q: 29,
            argument: ConditionArgument::Power(10),
            condition: Condition::OneOf(vec![-3]),
        },
    ]
}

/// Family (i): `q = 2^(2k+1)` and `a^((q+1)/3)` a primitive cube root of unity.
pub fn in_cube_root_family(ctx: &FieldCtx, a: FieldElem) -> bool {
    if ctx.p() != 2 || ctx.e().is_multiple_of(2) || a.is_zero() {
        return false;
    }
    let y = ctx.pow_u(a, (ctx.q() + 1) / 3);
    ctx.is_primitive_cube_root(y)
}

/// The classification predicate: true iff `a*x + x^(3q-2)` is predicted to
/// permute F_{q^2}.
pub fn theorem_predicate(ctx: &FieldCtx, a: FieldElem) -> bool {
    theorem_predicate_with(ctx, a, &sporadic_table())
}

/// The predicate against a caller-supplied sporadic table.
pub fn theorem_predicate_with(ctx: &FieldCtx, a: FieldElem, table: &[SporadicSpec]) -> bool {
    in_cube_root_family(ctx, a) || table.iter().any(|row| row.holds(ctx, a))
}

/// The values of `q` [`sporadic_census`] accepts.
pub const CENSUS_TARGETS: [u64; 8] = [2, 5, 8, 11, 17, 23, 29, 32];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SporadicCensus {
    pub q: u64,
    pub count: usize,
    pub elements: Vec<FieldElem>,
}

/// All nonzero `a` satisfying the predicate, ascending.
pub fn sporadic_census(q: u64) -> Result<SporadicCensus, ClassifyError> {
    if !CENSUS_TARGETS.contains(&q) {
        return Err(ClassifyError::UnsupportedQ(q));
    }
    let ctx = field_for_q(q)?;
    let elements: Vec<FieldElem> = ctx
        .nonzero_elements()
        .filter(|&a| theorem_predicate(&ctx, a))
        .collect();
    Ok(SporadicCensus {
        q,
        count: elements.len(),
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::brute_pp_test;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(32), Some((2, 5)));
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(29), Some((29, 1)));
    }

    #[test]
    fn census_counts() {
        let expect = [
            (2, 2),
            (5, 10),
            (8, 15),
            (11, 16),
            (17, 12),
            (23, 8),
            (29, 10),
        ];
        for (q, n) in expect {
            assert_eq!(sporadic_census(q).unwrap().count, n, "q = {q}");
        }
        assert_eq!(sporadic_census(4), Err(ClassifyError::UnsupportedQ(4)));
    }

    #[test]
    fn q8_rows_are_disjoint() {
        let ctx = field_for_q(8).unwrap();
        let table = sporadic_table();
        let fam: Vec<_> = ctx
            .nonzero_elements()
            .filter(|&a| in_cube_root_family(&ctx, a))
            .collect();
        let row: Vec<_> = ctx
            .nonzero_elements()
            .filter(|&a| table[1].holds(&ctx, a))
            .collect();
        assert_eq!((fam.len(), row.len()), (6, 9));
        assert!(fam.iter().all(|a| !row.contains(a)));
    }

    #[test]
    fn q8_literal_reading_disagrees_with_search() {
        let ctx = field_for_q(8).unwrap();
        let literal: Vec<_> = sporadic_table()
            .into_iter()
            .map(|r| if r.q == 8 { r.literal() } else { r })
            .collect();
        let mut mismatches = 0;
        for a in ctx.nonzero_elements() {
            let brute = brute_pp_test(&ctx, a).unwrap();
            assert_eq!(theorem_predicate(&ctx, a), brute);
            if theorem_predicate_with(&ctx, a, &literal) != brute {
                mismatches += 1;
            }
        }
        assert_eq!(mismatches, 18);
    }

    #[test]
    fn q29_example() {
        let ctx = field_for_q(29).unwrap();
        let minus3 = ctx.from_int(-3);
        let hit = ctx
            .nonzero_elements()
            .find(|&a| ctx.pow_u(a, 10) == minus3)
            .unwrap();
        assert!(theorem_predicate(&ctx, hit));
    }

    #[test]
    fn no_prediction_without_cube_condition() {
        let ctx = field_for_q(7).unwrap();
        assert!(ctx.nonzero_elements().all(|a| !theorem_predicate(&ctx, a)));
    }
}
