//! The power-sum identity and the cube-root profile.

use ppbinom::classify::field_for_q;
use ppbinom::hermite::{cube_root_profile, power_sum, reduced_index, s_q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check_identity(q: u64, alpha: u64, a_index: u64) -> bool {
    let ctx = field_for_q(q).unwrap();
    let a = ctx.elem(a_index).unwrap();
    let s = reduced_index(q, alpha);
    let lhs = power_sum(&ctx, a, s).unwrap();
    let exponent = (alpha as i64 + 1) * (1 - q as i64);
    let rhs = ctx.neg(ctx.mul(ctx.pow(a, exponent).unwrap(), s_q(&ctx, a, alpha).unwrap()));
    lhs == rhs
}

#[test]
fn identity_exhaustive_q11() {
    let ctx = field_for_q(11).unwrap();
    for a in 1..ctx.order() {
        for alpha in 0..11 {
            assert!(check_identity(11, alpha, a), "alpha = {alpha}, a = {a}");
        }
    }
}

#[test]
fn identity_sampled_larger_q() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for q in [17u64, 19, 23, 25, 27, 29, 31, 32] {
        let order = q * q;
        for _ in 0..40 {
            let a = rng.gen_range(1..order);
            let alpha = rng.gen_range(0..q);
            assert!(
                check_identity(q, alpha, a),
                "q = {q}, alpha = {alpha}, a = {a}"
            );
        }
    }
}

#[test]
fn cube_root_profiles() {
    for q in [2u64, 5, 8, 11] {
        let ctx = field_for_q(q).unwrap();
        let mut seen = 0;
        for a in ctx.nonzero_elements() {
            let y = ctx.pow_u(a, (q + 1) / 3);
            if !ctx.is_primitive_cube_root(y) {
                assert!(cube_root_profile(&ctx, a).is_err());
                continue;
            }
            let profile = cube_root_profile(&ctx, a).unwrap();
            assert!(profile.holds, "q = {q}, a = {a}");
            assert_eq!(profile.all_vanish, q % 2 == 0);
            seen += 1;
        }
        assert!(seen > 0);
    }
}
