//! Exhaustive comparison of the permutation tests with the predicate.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{prime_power, theorem_predicate, ClassifyError};
use crate::ffield::{FieldCtx, FieldElem};
use crate::hermite::{brute_pp_test, hermite_pp_test};

/// Largest `q_max` accepted by default.
pub const DEFAULT_SWEEP_BOUND: u64 = 32;
/// Largest `q_max` accepted when large sweeps are enabled.
pub const LARGE_SWEEP_BOUND: u64 = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Hermite,
    Both,
}

impl Method {
    fn brute(self) -> bool {
        matches!(self, Method::Brute | Method::Both)
    }

    fn hermite(self) -> bool {
        matches!(self, Method::Hermite | Method::Both)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub q_min: u64,
    pub q_max: u64,
    pub method: Method,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    /// Largest accepted `q_max`.
    pub bound: u64,
}

impl SweepConfig {
    pub fn new(q_max: u64, method: Method) -> Self {
        SweepConfig {
            q_min: 2,
            q_max,
            method,
            jobs: None,
            bound: DEFAULT_SWEEP_BOUND,
        }
    }
}

/// One `(q, a)` comparison. Tests that were not requested are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PPVerdict {
    pub q: u64,
    pub p: u32,
    pub e: u32,
    pub a: FieldElem,
    pub brute: Option<bool>,
    pub hermite: Option<bool>,
    pub predicted: bool,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QSummary {
    pub q: u64,
    pub p: u32,
    pub e: u32,
    pub elements: u64,
    pub brute_pp: Option<usize>,
    pub hermite_pp: Option<usize>,
    pub predicted_pp: usize,
    pub disagreements: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub summary: Vec<QSummary>,
    /// Sorted by `(q, a)`.
    pub verdicts: Vec<PPVerdict>,
}

impl SweepReport {
    pub fn disagreements(&self) -> Vec<&PPVerdict> {
        self.verdicts.iter().filter(|v| !v.agree).collect()
    }

    /// `q -> number of permutation binomials`, taken from the first
    /// requested test.
    pub fn pp_counts(&self) -> BTreeMap<u64, usize> {
        self.summary
            .iter()
            .map(|s| (s.q, s.brute_pp.or(s.hermite_pp).unwrap_or(s.predicted_pp)))
            .collect()
    }
}

fn verdict(ctx: &FieldCtx, a: FieldElem, method: Method) -> Result<PPVerdict, ClassifyError> {
    let brute = method.brute().then(|| brute_pp_test(ctx, a)).transpose()?;
    let hermite = method
        .hermite()
        .then(|| hermite_pp_test(ctx, a))
        .transpose()?;
    let predicted = theorem_predicate(ctx, a);
    let agree = brute.is_none_or(|b| b == predicted) && hermite.is_none_or(|h| h == predicted);
    Ok(PPVerdict {
        q: ctx.q(),
        p: ctx.p(),
        e: ctx.e(),
        a,
        brute,
        hermite,
        predicted,
        agree,
    })
}

/// Verdicts for every nonzero `a` of one field, ascending in `a`.
pub fn verdicts_for(ctx: &FieldCtx, method: Method) -> Result<Vec<PPVerdict>, ClassifyError> {
    let elems: Vec<FieldElem> = ctx.nonzero_elements().collect();
    elems.par_iter().map(|&a| verdict(ctx, a, method)).collect()
}

fn summarize(ctx: &FieldCtx, verdicts: &[PPVerdict], method: Method) -> QSummary {
    let count = |f: fn(&PPVerdict) -> bool| verdicts.iter().filter(|v| f(v)).count();
    QSummary {
        q: ctx.q(),
        p: ctx.p(),
        e: ctx.e(),
        elements: verdicts.len() as u64,
        brute_pp: method.brute().then(|| count(|v| v.brute == Some(true))),
        hermite_pp: method.hermite().then(|| count(|v| v.hermite == Some(true))),
        predicted_pp: count(|v| v.predicted),
        disagreements: count(|v| !v.agree),
    }
}

/// Every prime power `q` in `[q_min, q_max]` and every nonzero `a` in F_{q^2}.
pub fn sweep(config: &SweepConfig) -> Result<SweepReport, ClassifyError> {
    if config.q_max > config.bound {
        return Err(ClassifyError::SizeExceeded {
            q_max: config.q_max,
            bound: config.bound,
        });
    }
    let run = || -> Result<SweepReport, ClassifyError> {
        let mut summary = Vec::new();
        let mut verdicts = Vec::new();
        for q in config.q_min.max(2)..=config.q_max {
            let Some((p, e)) = prime_power(q) else {
                continue;
            };
            let ctx = FieldCtx::new(p, e)?;
            let vs = verdicts_for(&ctx, config.method)?;
            summary.push(summarize(&ctx, &vs, config.method));
            verdicts.extend(vs);
        }
        Ok(SweepReport {
            config: config.clone(),
            summary,
            verdicts,
        })
    };
    match config.jobs {
        None => run(),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| ClassifyError::Precondition(format!("thread pool: {e}")))?
            .install(run),
    }
}

/// A fibre of `a -> a^((q+1)/3)` on F_{q^2}^*.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetClass {
    pub y: FieldElem,
    pub members: Vec<FieldElem>,
}

/// Partition of F_{q^2}^* by `y = a^((q+1)/3)`, classes ordered by `y`.
pub fn coset_classes(ctx: &FieldCtx) -> Result<Vec<CosetClass>, ClassifyError> {
    let q = ctx.q();
    if !(q + 1).is_multiple_of(3) {
        return Err(ClassifyError::Precondition(format!(
            "3 does not divide q+1 = {}",
            q + 1
        )));
    }
    let mut classes: BTreeMap<FieldElem, Vec<FieldElem>> = BTreeMap::new();
    for a in ctx.nonzero_elements() {
        classes
            .entry(ctx.pow_u(a, (q + 1) / 3))
            .or_default()
            .push(a);
    }
    Ok(classes
        .into_iter()
        .map(|(y, members)| CosetClass { y, members })
        .collect())
}
