//! Verification toolkit for the permutation binomials `a*x + x^(3q-2)` over F_{q^2}.
//!
//! - [`ffield`]: canonical construction of F_{q^2} and its arithmetic
//! - [`hermite`]: power sums, the coefficient sums `S_q(alpha, a)` and the
//!   brute-force / Hermite permutation tests
//! - [`symalg`]: exact integers, rationals and polynomials, the elimination
//!   polynomials `g_alpha`, resultants and gcd chains mod p
//! - [`classify`]: the classification predicate, the elimination pipeline and
//!   exhaustive sweeps

pub mod classify;
pub mod ffield;
pub mod hermite;
pub mod symalg;
