//! The elimination argument for `q >= 14`: a common root `y` of the
//! `g_alpha` forces `p | Res(g_2, g_5)`, the congruence `q = 2 mod 3` filters
//! the prime factors, and gcd chains mod each survivor bound `q`.
//!
//! The chain can run on `g_alpha(y)` or on the reversed polynomials in
//! `v = 1/y`; both have the same nonzero common roots up to inversion.

use num_bigint::BigInt;
use serde::Serialize;

use super::{field_for_q, prime_power, ClassifyError};
use crate::ffield::FpPoly;
use crate::hermite::brute_pp_test;
use crate::symalg::{
    eval_mod_p, factor_trial, g_poly, gcd_mod_p, reference, resultant_z, Factorization,
    GPolyRecord, ZPoly,
};

/// Below this `q` the argument defers to direct search.
const SEARCH_BELOW: u64 = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainVariable {
    /// `g_alpha(y)` with `y = a^((q+1)/3)`.
    Y,
    /// `rev(g_alpha)(v)` with `v = 1/y`.
    V,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    pub alpha: u64,
    /// Root of the chain gcd, as the signed representative in `(-p/2, p/2]`.
    pub at: i64,
    pub value: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeChain {
    pub p: u64,
    /// Monic `gcd(g_2, g_5, g_8) mod p` in the chosen variable.
    pub gcd: String,
    pub gcd_coeffs: Vec<u32>,
    /// The same gcd in the other variable, for reference.
    pub gcd_other: String,
    /// True when the gcd had the root 0, which `y = a^((q+1)/3) != 0` rules out.
    pub zero_root_excluded: bool,
    /// Nonzero roots in F_p of the gcd.
    pub roots: Vec<i64>,
    pub evaluations: Vec<Evaluation>,
    /// The first `g_alpha` with no nonzero root in common with the earlier
    /// ones; `None` if all five share one.
    pub first_nonvanishing_alpha: Option<u64>,
    /// `q` must lie below this bound; `None` when the chain is inconclusive.
    pub q_below: Option<u64>,
    /// Powers `p^e`, `e` odd, with `14 <= q < q_below`.
    pub candidates: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeFilterEntry {
    pub p: u64,
    pub residue_mod_3: u64,
    pub kept: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EliminationReport {
    pub variable: ChainVariable,
    #[serde(serialize_with = "big_string")]
    pub resultant: BigInt,
    pub factorization: Factorization,
    pub prime_filter: Vec<PrimeFilterEntry>,
    pub surviving_primes: Vec<u64>,
    pub chains: Vec<PrimeChain>,
    /// `(q, number of permutation binomials)` for `q < 14`, `3 | q+1`.
    pub small_q_search: Vec<(u64, usize)>,
    /// Every `q` the argument leaves open, ascending.
    pub candidates: Vec<u64>,
    pub fixture_checks: Vec<FixtureCheck>,
}

fn big_string<S: serde::Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

impl EliminationReport {
    pub fn passed(&self) -> bool {
        self.fixture_checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> Vec<&FixtureCheck> {
        self.fixture_checks.iter().filter(|c| !c.ok).collect()
    }

    pub fn chain(&self, p: u64) -> Option<&PrimeChain> {
        self.chains.iter().find(|c| c.p == p)
    }
}

fn signed_rep(r: u32, p: u32) -> i64 {
    if r > p / 2 {
        i64::from(r) - i64::from(p)
    } else {
        i64::from(r)
    }
}

fn polys_in(records: &[GPolyRecord], var: ChainVariable) -> Vec<ZPoly> {
    records
        .iter()
        .map(|r| match var {
            ChainVariable::Y => r.g.clone(),
            ChainVariable::V => r.g_in_v(),
        })
        .collect()
}

/// Removes every factor `x`.
fn strip_x(f: &FpPoly) -> FpPoly {
    let shift = f.coeffs().iter().take_while(|&&c| c == 0).count();
    FpPoly::new(f.prime(), f.coeffs()[shift..].to_vec())
}

fn run_chain(
    p: u64,
    records: &[GPolyRecord],
    polys: &[ZPoly],
    others: &[ZPoly],
) -> Result<PrimeChain, ClassifyError> {
    let pp = p as u32;
    let gcd_err = |e| ClassifyError::FixtureMismatch(vec![format!("gcd mod {p}: {e}")]);
    let gcd = gcd_mod_p(&polys[..3], pp).map_err(gcd_err)?;
    let gcd_other = gcd_mod_p(&others[..3], pp).map_err(gcd_err)?;
    let stripped = strip_x(&gcd);
    let roots: Vec<i64> = stripped
        .roots()
        .into_iter()
        .map(|r| signed_rep(r, pp))
        .collect();
    let mut evaluations = Vec::new();
    for &r in &roots {
        for (rec, f) in records.iter().zip(polys).skip(3) {
            let value = eval_mod_p(f, r, pp);
            evaluations.push(Evaluation {
                alpha: rec.alpha,
                at: r,
                value,
            });
            if value != 0 {
                break;
            }
        }
    }
    // Walk the chain: the first g_alpha sharing no nonzero root with the
    // previous ones caps q below its validity threshold.
    let mut common = stripped;
    let mut first_nonvanishing = None;
    let mut q_below = None;
    if common.degree() == Some(0) {
        first_nonvanishing = Some(records[2].alpha);
        q_below = Some(records[2].q_bound);
    } else {
        for (rec, f) in records.iter().zip(polys).skip(3) {
            common = common.gcd(&f.reduce_mod(pp));
            if common.degree() == Some(0) {
                first_nonvanishing = Some(rec.alpha);
                q_below = Some(rec.q_bound);
                break;
            }
        }
    }
    let mut candidates = Vec::new();
    if let Some(bound) = q_below {
        let mut q = p;
        while q < bound {
            if q >= SEARCH_BELOW {
                candidates.push(q);
            }
            q *= p * p;
        }
    }
    Ok(PrimeChain {
        p,
        gcd: gcd.display_with("x"),
        gcd_coeffs: gcd.coeffs().to_vec(),
        gcd_other: gcd_other.display_with("x"),
        zero_root_excluded: gcd.coeff(0) == 0,
        roots,
        evaluations,
        first_nonvanishing_alpha: first_nonvanishing,
        q_below,
        candidates,
    })
}

fn check(name: impl Into<String>, expected: String, actual: String) -> FixtureCheck {
    let ok = expected == actual;
    FixtureCheck {
        name: name.into(),
        expected,
        actual,
        ok,
    }
}

/// Runs the elimination with the chain in `v = 1/y`, the variable in which
/// the published gcds are stated.
pub fn elimination_pipeline() -> Result<EliminationReport, ClassifyError> {
    elimination_pipeline_in(ChainVariable::V)
}

/// Like [`elimination_pipeline`] but fails with `FixtureMismatch` if any
/// intermediate differs from the published value.
pub fn elimination_pipeline_strict() -> Result<EliminationReport, ClassifyError> {
    let report = elimination_pipeline()?;
    if report.passed() {
        Ok(report)
    } else {
        Err(ClassifyError::FixtureMismatch(
            report
                .failures()
                .into_iter()
                .map(|c| format!("{}: expected {}, got {}", c.name, c.expected, c.actual))
                .collect(),
        ))
    }
}

pub fn elimination_pipeline_in(
    variable: ChainVariable,
) -> Result<EliminationReport, ClassifyError> {
    let records: Vec<GPolyRecord> = [2u64, 5, 8, 11, 14]
        .into_iter()
        .map(|alpha| g_poly(alpha).expect("fixture alpha"))
        .collect();
    let mut checks = Vec::new();

    let resultant = resultant_z(&records[0].g, &records[1].g);
    let factorization = factor_trial(&resultant);
    checks.push(check(
        "resultant Res(g_2, g_5)",
        reference::resultant_g2_g5_magnitude().to_string(),
        resultant.to_string(),
    ));
    let printed: Vec<(u64, u32)> = reference::RESULTANT_G2_G5_FACTORS.to_vec();
    checks.push(check(
        "factorization of Res(g_2, g_5)",
        format!("{printed:?} complete"),
        format!(
            "{:?} {}",
            factorization.factors,
            if factorization.complete {
                "complete"
            } else {
                "incomplete"
            }
        ),
    ));

    // q = p^e = 2 mod 3 needs p = 2 mod 3 (which includes p = 2) and e odd.
    let prime_filter: Vec<PrimeFilterEntry> = factorization
        .factors
        .iter()
        .map(|&(p, _)| PrimeFilterEntry {
            p,
            residue_mod_3: p % 3,
            kept: p % 3 == 2,
        })
        .collect();
    let surviving_primes: Vec<u64> = prime_filter
        .iter()
        .filter(|f| f.kept)
        .map(|f| f.p)
        .collect();
    checks.push(check(
        "surviving primes",
        format!("{:?}", reference::SURVIVING_PRIMES),
        format!("{surviving_primes:?}"),
    ));

    let other = match variable {
        ChainVariable::Y => ChainVariable::V,
        ChainVariable::V => ChainVariable::Y,
    };
    let polys = polys_in(&records, variable);
    let others = polys_in(&records, other);
    let chains = surviving_primes
        .iter()
        .map(|&p| run_chain(p, &records, &polys, &others))
        .collect::<Result<Vec<_>, _>>()?;

    for (p, coeffs) in reference::GCD_CHAIN {
        let expected = FpPoly::from_i64(p, coeffs).display_with("x");
        let actual = chains
            .iter()
            .find(|c| c.p == u64::from(p))
            .map_or_else(|| "absent".to_string(), |c| c.gcd.clone());
        checks.push(check(
            format!("gcd(g_2, g_5, g_8) mod {p}"),
            expected,
            actual,
        ));
    }
    for (p, alpha, at, value) in reference::EVALUATIONS {
        let idx = records
            .iter()
            .position(|r| r.alpha == u64::from(alpha))
            .expect("fixture alpha");
        let actual = eval_mod_p(&polys[idx], at, p);
        checks.push(check(
            format!("g_{alpha}({at}) mod {p}"),
            value.to_string(),
            actual.to_string(),
        ));
    }

    let mut small_q_search = Vec::new();
    for q in 2..SEARCH_BELOW {
        if (q + 1) % 3 != 0 || prime_power(q).is_none() {
            continue;
        }
        let ctx = field_for_q(q)?;
        let mut count = 0;
        for a in ctx.nonzero_elements() {
            if brute_pp_test(&ctx, a)? {
                count += 1;
            }
        }
        small_q_search.push((q, count));
    }
    let mut candidates: Vec<u64> = small_q_search
        .iter()
        .filter(|(_, n)| *n > 0)
        .map(|&(q, _)| q)
        .collect();
    for chain in &chains {
        candidates.extend(&chain.candidates);
    }
    candidates.sort_unstable();
    candidates.dedup();

    Ok(EliminationReport {
        variable,
        resultant,
        factorization,
        prime_filter,
        surviving_primes,
        chains,
        small_q_search,
        candidates,
        fixture_checks: checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_conclusions() {
        let report = elimination_pipeline().unwrap();
        assert_eq!(report.surviving_primes, vec![2, 17, 23, 29]);
        assert!(report.prime_filter.iter().any(|f| f.p == 103 && !f.kept));
        assert!(report.prime_filter.iter().any(|f| f.p == 16069 && !f.kept));
        let c2 = report.chain(2).unwrap();
        assert!(c2.zero_root_excluded && c2.candidates.is_empty());
        assert_eq!(report.chain(17).unwrap().candidates, vec![17]);
        let c23 = report.chain(23).unwrap();
        assert_eq!((c23.gcd.as_str(), c23.roots.as_slice()), ("x+1", &[-1][..]));
        assert_eq!(c23.candidates, vec![23]);
        let c29 = report.chain(29).unwrap();
        assert_eq!(c29.gcd, "x+10");
        assert_eq!(c29.first_nonvanishing_alpha, Some(14));
        assert_eq!(c29.candidates, vec![29]);
        assert_eq!(
            report.small_q_search,
            vec![(2, 2), (5, 10), (8, 15), (11, 16)]
        );
        assert_eq!(report.candidates, vec![2, 5, 8, 11, 17, 23, 29]);
    }

    #[test]
    fn y_form_reaches_the_same_conclusion() {
        let v = elimination_pipeline_in(ChainVariable::V).unwrap();
        let y = elimination_pipeline_in(ChainVariable::Y).unwrap();
        assert_eq!(v.candidates, y.candidates);
        assert_eq!(y.chain(29).unwrap().gcd, "x+3");
        assert_eq!(y.chain(29).unwrap().gcd_other, "x+10");
        for (cv, cy) in v.chains.iter().zip(&y.chains) {
            assert_eq!(cv.q_below, cy.q_below);
        }
    }

    #[test]
    fn resultant_sign_and_factors() {
        let report = elimination_pipeline().unwrap();
        assert_eq!(report.factorization.sign, -1);
        assert!(report.factorization.complete);
        assert_eq!(
            report.factorization.factors,
            reference::RESULTANT_G2_G5_FACTORS.to_vec()
        );
        assert_eq!(
            -report.resultant.clone(),
            reference::resultant_g2_g5_magnitude()
        );
    }
}
