//! Reductions of integer polynomials modulo a prime.

use super::{SymalgError, ZPoly};
use crate::ffield::FpPoly;

/// Monic gcd over F_p of the reductions; zero reductions are skipped.
pub fn gcd_mod_p(polys: &[ZPoly], p: u32) -> Result<FpPoly, SymalgError> {
    let reduced: Vec<FpPoly> = polys
        .iter()
        .map(|f| f.reduce_mod(p))
        .filter(|f| !f.is_zero())
        .collect();
    let Some(first) = reduced.first() else {
        return Err(SymalgError::AllZero { p });
    };
    Ok(reduced[1..].iter().fold(first.monic(), |acc, f| acc.gcd(f)))
}

/// `f(x) mod p`, with `x` taken mod `p`.
pub fn eval_mod_p(f: &ZPoly, x: i64, p: u32) -> u32 {
    f.reduce_mod(p).eval(x.rem_euclid(i64::from(p)) as u32)
}
